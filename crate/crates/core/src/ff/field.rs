use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::poly;
use super::prime::{add_mod, is_prime, mul_mod, neg_mod, sub_mod};
use crate::error::{Error, Result};

/// Largest extension degree accepted by [`find_irreducible`].
pub const MAX_DEGREE: usize = 8;

/// The finite field F_{p^r} presented as F_p[t] / (modulus).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldCtx {
    p: u64,
    r: usize,
    modulus: Vec<u64>,
}

/// An element of F_{p^r}: coordinates in the power basis 1, t, ..., t^{r-1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree `r` over F_p,
/// comparing coefficient tuples with the constant term most significant.
pub fn find_irreducible(p: u64, r: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 || r > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(r));
    }
    if r == 1 {
        return Ok(vec![0, 1]);
    }
    // any candidate with zero constant term is divisible by t
    let mut low = vec![0u64; r];
    low[0] = 1;
    loop {
        let mut cand = low.clone();
        cand.push(1);
        if poly::is_irreducible(&cand, p) {
            return Ok(cand);
        }
        // odometer: last coordinate is least significant
        let mut i = r - 1;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            if i == 0 {
                unreachable!("irreducible polynomials exist in every degree");
            }
            i -= 1;
        }
    }
}

impl FieldCtx {
    /// F_{p^r} with the default (lexicographically smallest) modulus.
    pub fn new(p: u64, r: usize) -> Result<Self> {
        let modulus = find_irreducible(p, r)?;
        Ok(Self { p, r, modulus })
    }

    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// F_{p^r} with a caller-supplied modulus (constant term first, monic).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let r = modulus.len() - 1;
        if r > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(r));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if modulus[r] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if r == 1 && modulus[0] != 0 {
            return Err(Error::InvalidModulus(
                "degree-1 modulus must be t (elements are plain residues)".into(),
            ));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidModulus(format!(
                "{modulus:?} is reducible over F_{p}"
            )));
        }
        Ok(Self { p, r, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// q = p^r, when it fits in a word.
    pub fn order(&self) -> Option<u64> {
        self.p.checked_pow(self.r as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.r],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, n: u64) -> FieldElem {
        let mut coeffs = vec![0; self.r];
        coeffs[0] = n % self.p;
        FieldElem { coeffs }
    }

    pub fn from_signed(&self, n: i64) -> FieldElem {
        self.from_int(super::prime::from_signed(n, self.p))
    }

    /// The generator t of the power basis (equal to 0 when r = 1).
    pub fn generator(&self) -> FieldElem {
        if self.r == 1 {
            // t is the modulus itself
            return self.zero();
        }
        let mut coeffs = vec![0; self.r];
        coeffs[1] = 1;
        FieldElem { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: Vec<u64>) -> Result<FieldElem> {
        if coeffs.len() != self.r {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, found {}",
                self.r,
                coeffs.len()
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement(format!(
                "coordinate {c} is not a residue mod {}",
                self.p
            )));
        }
        Ok(FieldElem { coeffs })
    }

    /// Element with index `n` in base-p digit order (constant coordinate least significant).
    pub fn from_index(&self, mut n: u64) -> FieldElem {
        let coeffs = (0..self.r)
            .map(|_| {
                let c = n % self.p;
                n /= self.p;
                c
            })
            .collect();
        FieldElem { coeffs }
    }

    /// Every element of the field, in index order. Only sensible for small q.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let q = self.order().expect("field too large to enumerate");
        (0..q).map(move |n| self.from_index(n))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem {
            coeffs: (0..self.r).map(|_| rng.gen_range(0..self.p)).collect(),
        }
    }

    pub fn contains(&self, a: &FieldElem) -> bool {
        a.coeffs.len() == self.r && a.coeffs.iter().all(|&c| c < self.p)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| add_mod(x, y, self.p))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| sub_mod(x, y, self.p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| neg_mod(x, self.p)).collect(),
        }
    }

    pub fn scale(&self, c: u64, a: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| mul_mod(c, x, self.p)).collect(),
        }
    }

    fn embed(&self, mut v: Vec<u64>) -> FieldElem {
        v.resize(self.r, 0);
        FieldElem { coeffs: v }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.r == 1 {
            return FieldElem {
                coeffs: vec![mul_mod(a.coeffs[0], b.coeffs[0], self.p)],
            };
        }
        self.embed(poly::mul_rem(&a.coeffs, &b.coeffs, &self.modulus, self.p))
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroDivision);
        }
        if self.r == 1 {
            let x = super::prime::inv_mod(a.coeffs[0], self.p).ok_or(Error::ZeroDivision)?;
            return Ok(FieldElem { coeffs: vec![x] });
        }
        poly::inv_rem(&a.coeffs, &self.modulus, self.p)
            .map(|v| self.embed(v))
            .ok_or(Error::ZeroDivision)
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius map a -> a^p.
    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        self.pow(a, self.p)
    }

    pub fn is_one(&self, a: &FieldElem) -> bool {
        a.coeffs[0] == 1 && a.coeffs[1..].iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Trial division by every monic polynomial of degree <= r/2.
    fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let r = f.len() - 1;
        for d in 1..=r / 2 {
            let count = p.pow(d as u32);
            for n in 0..count {
                let mut g: Vec<u64> = (0..d).map(|i| (n / p.pow(i as u32)) % p).collect();
                g.push(1);
                if poly::rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn default_moduli() {
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn default_modulus_is_lexicographically_first() {
        for (p, r) in [
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 2),
            (3, 3),
            (5, 2),
            (2, 6),
            (7, 2),
        ] {
            let m = find_irreducible(p, r).unwrap();
            assert!(irreducible_by_trial_division(&m, p), "{p} {r}");
            // every smaller candidate is reducible
            let mut low = vec![0u64; r];
            while low != m[..r] {
                let mut cand = low.clone();
                cand.push(1);
                assert!(!irreducible_by_trial_division(&cand, p));
                let mut i = r - 1;
                loop {
                    low[i] += 1;
                    if low[i] < p {
                        break;
                    }
                    low[i] = 0;
                    i -= 1;
                }
            }
        }
    }

    #[test]
    fn rabin_matches_trial_division() {
        for p in [2u64, 3] {
            for r in 2..=4usize {
                for n in 0..p.pow(r as u32) {
                    let mut f: Vec<u64> = (0..r).map(|i| (n / p.pow(i as u32)) % p).collect();
                    f.push(1);
                    assert_eq!(
                        poly::is_irreducible(&f, p),
                        irreducible_by_trial_division(&f, p),
                        "{f:?} over F_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_bad_contexts() {
        assert_eq!(find_irreducible(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(find_irreducible(2, 9), Err(Error::UnsupportedDegree(9)));
        assert_eq!(find_irreducible(2, 0), Err(Error::UnsupportedDegree(0)));
        assert!(FieldCtx::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FieldCtx::with_modulus(3, vec![1, 0, 2]).is_err());
        assert!(FieldCtx::with_modulus(2, vec![1, 1]).is_err());
        assert!(FieldCtx::with_modulus(2, vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn arithmetic_examples() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let t = f4.generator();
        let t1 = f4.add(&t, &f4.one());
        assert_eq!(f4.mul(&t, &t1), f4.one());

        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(f3.inv(&f3.from_int(2)).unwrap(), f3.from_int(2));
        assert_eq!(f3.inv(&f3.zero()), Err(Error::ZeroDivision));
        assert_eq!(f3.div(&f3.one(), &f3.zero()), Err(Error::ZeroDivision));

        for a in f4.elements() {
            assert_eq!(f4.mul(&f4.one(), &a), a);
        }
    }

    fn contexts() -> Vec<FieldCtx> {
        [
            (2, 1),
            (3, 1),
            (5, 1),
            (2, 2),
            (3, 2),
            (2, 3),
            (5, 3),
            (7, 2),
            (2, 8),
        ]
        .iter()
        .map(|&(p, r)| FieldCtx::new(p, r).unwrap())
        .collect()
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in contexts() {
            for _ in 0..1000 {
                let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
                assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
                assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
                assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                assert_eq!(f.add(&a, &b), f.add(&b, &a));
                assert_eq!(
                    f.mul(&a, &f.add(&b, &c)),
                    f.add(&f.mul(&a, &b), &f.mul(&a, &c))
                );
                assert_eq!(f.sub(&f.add(&a, &b), &b), a);
                if !a.is_zero() {
                    assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
                }
            }
        }
    }

    #[test]
    fn frobenius_has_order_r() {
        for p in [2u64, 3, 5] {
            for r in 1..=3usize {
                let f = FieldCtx::new(p, r).unwrap();
                for a in f.elements() {
                    let mut x = a.clone();
                    for _ in 0..r {
                        x = f.frobenius(&x);
                    }
                    assert_eq!(x, a);
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_one() {
        let f = FieldCtx::new(3, 2).unwrap();
        let q = 9;
        for a in f.elements().filter(|a| !a.is_zero()) {
            assert!(f.is_one(&f.pow(&a, q - 1)));
        }
    }
}
