//! Carry-free coefficient arithmetic and the coproduct on the invariant basis.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ff::prime::{inv_mod, mul_mod, small_binomial};
use crate::mono::{CohClass, CohCtx, Monomial, TensorClass};

/// Base-p digits of `m`, least significant first (empty for 0).
pub fn digits(p: u64, mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while m > 0 {
        out.push(m % p);
        m /= p;
    }
    out
}

/// s_p(m), the sum of the base-p digits of m.
pub fn digit_sum(p: u64, m: u64) -> u64 {
    digits(p, m).iter().sum()
}

/// C(m, k) mod p via Lucas' theorem; 0 when k > m.
pub fn lucas_binomial(p: u64, m: u64, k: u64) -> u64 {
    if k > m {
        return 0;
    }
    let (mut m, mut k) = (m, k);
    let mut acc = 1;
    while m > 0 || k > 0 {
        let (md, kd) = (m % p, k % p);
        if kd > md {
            return 0;
        }
        acc = mul_mod(acc, small_binomial(md, kd, p), p);
        m /= p;
        k /= p;
    }
    acc
}

/// A family of naturals to be added in base p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarryProfile {
    pub p: u64,
    pub parts: Vec<u64>,
}

impl CarryProfile {
    pub fn new(p: u64, parts: Vec<u64>) -> Self {
        Self { p, parts }
    }

    /// True iff adding the parts in base p never carries.
    pub fn no_carry(&self) -> bool {
        no_carry(self.p, &self.parts)
    }
}

pub fn no_carry(p: u64, parts: &[u64]) -> bool {
    let mut rest: Vec<u64> = parts.to_vec();
    while rest.iter().any(|&x| x > 0) {
        let s: u64 = rest.iter().map(|&x| x % p).sum();
        if s >= p {
            return false;
        }
        for x in rest.iter_mut() {
            *x /= p;
        }
    }
    true
}

/// d! / (c_1! ⋯ c_n!) mod p for d = Σc_i < p.
fn small_multinomial(p: u64, parts: &[u64]) -> u64 {
    let fact = |n: u64| (1..=n).fold(1, |acc, i| mul_mod(acc, i, p));
    let d: u64 = parts.iter().sum();
    debug_assert!(d < p);
    let denom = parts.iter().fold(1, |acc, &c| mul_mod(acc, fact(c), p));
    mul_mod(
        fact(d),
        inv_mod(denom, p).expect("factorials below p are units"),
        p,
    )
}

/// The multinomial coefficient (Σparts; parts) mod p, computed digit by digit.
pub fn multinomial_mod_p(p: u64, parts: &[u64]) -> u64 {
    let mut rest: Vec<u64> = parts.to_vec();
    let mut acc = 1;
    while rest.iter().any(|&x| x > 0) {
        let ds: Vec<u64> = rest.iter().map(|&x| x % p).collect();
        if ds.iter().sum::<u64>() >= p {
            return 0;
        }
        acc = mul_mod(acc, small_multinomial(p, &ds), p);
        for x in rest.iter_mut() {
            *x /= p;
        }
    }
    acc
}

/// Every way to write `d < p` as an ordered sum of `n` naturals.
fn small_compositions(d: u64, n: usize) -> Vec<Vec<u64>> {
    crate::mono::compositions(d, n)
}

/// All carry-free ordered decompositions of `b` into `n` parts, with their
/// multinomial coefficient mod p (always nonzero).
pub fn carry_free_splits(p: u64, b: u64, n: usize) -> Vec<(Vec<u64>, u64)> {
    let mut acc: Vec<(Vec<u64>, u64)> = vec![(vec![0; n], 1)];
    let mut place = 1u64;
    for d in digits(p, b) {
        if d > 0 {
            let options: Vec<(Vec<u64>, u64)> = small_compositions(d, n)
                .into_iter()
                .map(|c| {
                    let coeff = small_multinomial(p, &c);
                    (c, coeff)
                })
                .collect();
            let mut next = Vec::with_capacity(acc.len() * options.len());
            for (parts, c) in &acc {
                for (opt, oc) in &options {
                    let merged = parts
                        .iter()
                        .zip(opt)
                        .map(|(&x, &y)| x + y * place)
                        .collect();
                    next.push((merged, mul_mod(*c, *oc, p)));
                }
            }
            acc = next;
        }
        place = place.saturating_mul(p);
    }
    acc
}

/// Parity of the pairs i < j with factor(i) > factor(j): the sign of shuffling
/// the exterior generators, written in ascending index order, into their factors.
pub fn shuffle_sign_is_negative(assignment: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..assignment.len() {
        for j in i + 1..assignment.len() {
            if assignment[i] > assignment[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Direct evaluation of the n-fold splitting sum of `m`: every decomposition
/// A = ΣA_i, B = ΣB_i with each factor invariant (and, if `nonzero_factors`, of
/// positive degree), weighted by Koszul sign and multinomial coefficients.
pub fn splitting_sum(
    ctx: &CohCtx,
    m: &Monomial,
    n: usize,
    nonzero_factors: bool,
) -> Result<TensorClass> {
    ctx.require_invariant(m)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "tensor arity must be at least 1".into(),
        ));
    }
    let p = ctx.p();
    let r = ctx.r();
    let modulus = ctx.q() - 1;
    let per_coord: Vec<Vec<(Vec<u64>, u64)>> =
        m.b().iter().map(|&b| carry_free_splits(p, b, n)).collect();

    let mut out = TensorClass::zero(p, n);
    let mut a_parts = vec![vec![0u8; r]; n];
    let mut b_parts = vec![vec![0u64; r]; n];
    let mut assignment = Vec::new();
    let mut residues = vec![0u64; n];

    struct Walk<'a> {
        ctx: &'a CohCtx,
        m: &'a Monomial,
        n: usize,
        modulus: u64,
        per_coord: &'a [Vec<(Vec<u64>, u64)>],
        nonzero_factors: bool,
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        w: &Walk<'_>,
        k: usize,
        coeff: u64,
        a_parts: &mut Vec<Vec<u8>>,
        b_parts: &mut Vec<Vec<u64>>,
        assignment: &mut Vec<usize>,
        residues: &mut Vec<u64>,
        out: &mut TensorClass,
    ) -> Result<()> {
        let p = w.ctx.p();
        let r = w.ctx.r();
        if k == r {
            if w.modulus > 1 && residues.iter().any(|&x| x != 0) {
                return Ok(());
            }
            let factors: Vec<Monomial> = (0..w.n)
                .map(|i| Monomial::new(a_parts[i].clone(), b_parts[i].clone()).expect("valid"))
                .collect();
            if w.nonzero_factors && factors.iter().any(Monomial::is_one) {
                return Ok(());
            }
            let c = if shuffle_sign_is_negative(assignment) {
                p - coeff
            } else {
                coeff
            };
            return out.add_term(factors, c);
        }
        // weight of generator k modulo q - 1
        let pk = if w.modulus > 1 {
            crate::ff::prime::pow_mod(p % w.modulus, k as u64, w.modulus)
        } else {
            0
        };
        let a_choices: Vec<Option<usize>> = if w.m.a()[k] == 1 {
            (0..w.n).map(Some).collect()
        } else {
            vec![None]
        };
        for a_choice in a_choices {
            if let Some(i) = a_choice {
                a_parts[i][k] = 1;
                assignment.push(i);
                if w.modulus > 1 {
                    residues[i] = (residues[i] + pk) % w.modulus;
                }
            }
            for (parts, c) in &w.per_coord[k] {
                let saved = residues.clone();
                for i in 0..w.n {
                    b_parts[i][k] = parts[i];
                    if w.modulus > 1 {
                        residues[i] = (residues[i] + mul_mod(pk, parts[i] % w.modulus, w.modulus))
                            % w.modulus;
                    }
                }
                go(
                    w,
                    k + 1,
                    mul_mod(coeff, *c, p),
                    a_parts,
                    b_parts,
                    assignment,
                    residues,
                    out,
                )?;
                *residues = saved;
            }
            for bp in b_parts.iter_mut() {
                bp[k] = 0;
            }
            if let Some(i) = a_choice {
                a_parts[i][k] = 0;
                assignment.pop();
                if w.modulus > 1 {
                    residues[i] = (residues[i] + w.modulus - pk) % w.modulus;
                }
            }
        }
        Ok(())
    }

    let walk = Walk {
        ctx,
        m,
        n,
        modulus,
        per_coord: &per_coord,
        nonzero_factors,
    };
    go(
        &walk,
        0,
        1,
        &mut a_parts,
        &mut b_parts,
        &mut assignment,
        &mut residues,
        &mut out,
    )?;
    Ok(out)
}

/// Δ(m) as a 2-fold tensor class.
pub fn coproduct(ctx: &CohCtx, m: &Monomial) -> Result<TensorClass> {
    splitting_sum(ctx, m, 2, false)
}

/// Apply Δ to the factor at position `pos` of every term, raising the arity by one.
pub fn apply_coproduct_at(ctx: &CohCtx, t: &TensorClass, pos: usize) -> Result<TensorClass> {
    if pos >= t.arity() {
        return Err(Error::InvalidArgument(format!(
            "position {pos} out of range for a {}-fold tensor",
            t.arity()
        )));
    }
    let p = ctx.p();
    t.map_terms(t.arity() + 1, |factors, c, out| {
        let d = coproduct(ctx, &factors[pos])?;
        for (pair, dc) in d.terms() {
            let mut k = Vec::with_capacity(factors.len() + 1);
            k.extend_from_slice(&factors[..pos]);
            k.extend_from_slice(pair);
            k.extend_from_slice(&factors[pos + 1..]);
            out.add_term(k, mul_mod(c, dc, p))?;
        }
        Ok(())
    })
}

/// Δ^{n-1}(m), built by repeatedly applying Δ to the leading factor.
pub fn iterated_coproduct(ctx: &CohCtx, m: &Monomial, n: usize) -> Result<TensorClass> {
    ctx.require_invariant(m)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "tensor arity must be at least 1".into(),
        ));
    }
    let mut t = TensorClass::singleton(ctx.p(), vec![m.clone()]);
    for _ in 1..n {
        t = apply_coproduct_at(ctx, &t, 0)?;
    }
    Ok(t)
}

/// The coefficient of the unit monomial.
pub fn counit(c: &CohClass) -> u64 {
    c.terms()
        .find(|(m, _)| m.is_one())
        .map(|(_, v)| v)
        .unwrap_or(0)
}

/// The Gaussian binomial (a choose b)_q = Π_{i=1}^{b} (q^{a-i+1} - 1)/(q^i - 1), exactly.
pub fn gaussian_binomial(q: u64, a: u32, b: u32) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=b {
        num *= q.pow(a - i + 1) - 1u32;
        den *= q.pow(i) - 1u32;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(b: u64) -> Monomial {
        Monomial::y_power(vec![b])
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binomial(2, 3, 1), 1);
        assert_eq!(lucas_binomial(3, 4, 2), 0);
        assert_eq!(lucas_binomial(7, 40, 0), 1);
        assert_eq!(lucas_binomial(5, 3, 4), 0);
    }

    #[test]
    fn carry_examples() {
        assert!(no_carry(3, &[2, 6]));
        assert!(!no_carry(2, &[1, 1]));
        assert!(no_carry(5, &[17]));
        assert!(CarryProfile::new(3, vec![2, 6]).no_carry());
        assert_eq!(multinomial_mod_p(3, &[2, 6]), 1);
        assert_eq!(multinomial_mod_p(2, &[1, 2]), 1);
        assert_eq!(multinomial_mod_p(5, &[9]), 1);
    }

    #[test]
    fn carry_free_splits_match_filter() {
        for p in [2u64, 3, 5] {
            for b in 0..40 {
                for n in 1..=3 {
                    let fast = carry_free_splits(p, b, n);
                    let mut slow: Vec<(Vec<u64>, u64)> = crate::mono::compositions(b, n)
                        .into_iter()
                        .map(|c| {
                            let m = multinomial_mod_p(p, &c);
                            (c, m)
                        })
                        .filter(|(_, m)| *m != 0)
                        .collect();
                    let mut fast_sorted = fast.clone();
                    fast_sorted.sort();
                    slow.sort();
                    assert_eq!(fast_sorted, slow, "p={p} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let c2 = CohCtx::new(2, 1).unwrap();
        let d = coproduct(&c2, &y(3)).unwrap();
        assert_eq!(d.len(), 4);
        for k in 0..=3 {
            assert_eq!(d.coeff(&[y(3 - k), y(k)]), 1);
        }
        let d = coproduct(&c2, &y(2)).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&[y(1), y(1)]), 0);

        let c4 = CohCtx::new(2, 2).unwrap();
        let m = Monomial::y_power(vec![1, 1]);
        let d = coproduct(&c4, &m).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&[m.clone(), Monomial::one(2)]), 1);
        assert_eq!(d.coeff(&[Monomial::one(2), m.clone()]), 1);

        assert!(matches!(
            coproduct(&c4, &Monomial::y_power(vec![1, 0])),
            Err(Error::NotInvariant { .. })
        ));
    }

    #[test]
    fn iterated_coproduct_of_y3() {
        let c2 = CohCtx::new(2, 1).unwrap();
        let t = iterated_coproduct(&c2, &y(3), 3).unwrap();
        let expected: Vec<Vec<u64>> = crate::mono::compositions(3, 3)
            .into_iter()
            .filter(|c| no_carry(2, c))
            .collect();
        assert_eq!(t.len(), expected.len());
        for c in expected {
            let k: Vec<Monomial> = c.iter().map(|&b| y(b)).collect();
            assert_eq!(t.coeff(&k), 1);
        }
        assert_eq!(iterated_coproduct(&c2, &y(3), 1).unwrap().len(), 1);
        assert_eq!(
            iterated_coproduct(&c2, &y(5), 2).unwrap(),
            coproduct(&c2, &y(5)).unwrap()
        );
    }

    #[test]
    fn iteration_matches_direct_sum() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)] {
            let c = CohCtx::new(p, r).unwrap();
            for d in 0..=8 {
                for m in c.enumerate_invariant_basis(d) {
                    for n in 1..=4 {
                        assert_eq!(
                            iterated_coproduct(&c, &m, n).unwrap(),
                            splitting_sum(&c, &m, n, false).unwrap(),
                            "{m} q={} n={n}",
                            c.q()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn koszul_sign_on_exterior_pair() {
        let c = CohCtx::new(3, 2).unwrap();
        // weight 1 + 3 + 5 + 15 = 24, divisible by q - 1 = 8
        let m = Monomial::new(vec![1, 1], vec![5, 5]).unwrap();
        let d = coproduct(&c, &m).unwrap();
        let x0y1 = Monomial::new(vec![1, 0], vec![0, 5]).unwrap();
        let x1y0 = Monomial::new(vec![0, 1], vec![5, 0]).unwrap();
        assert_eq!(d.coeff(&[x0y1.clone(), x1y0.clone()]), 1);
        // moving x0 past x1 costs a sign
        assert_eq!(d.coeff(&[x1y0, x0y1]), 2);
        assert!(d.terms().all(|(k, _)| k.iter().all(|f| c.satisfies_p(f))));
    }

    #[test]
    fn counit_examples() {
        let mut c = CohClass::monomial(5, Monomial::one(1));
        assert_eq!(counit(&c), 1);
        assert_eq!(counit(&CohClass::monomial(5, y(3))), 0);
        c = c.scale(3);
        c.add_term(y(1), 1);
        assert_eq!(counit(&c), 3);
    }

    #[test]
    fn gaussian_binomial_small() {
        assert_eq!(gaussian_binomial(2, 2, 1), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(3, 4, 2), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(5, 3, 0), BigUint::one());
    }
}
