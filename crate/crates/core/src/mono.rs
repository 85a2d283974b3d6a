//! The monomial basis x^A y^B of H*(F_{p^r}) and the GL_2 F_q invariant subspace,
//! together with sparse F_p-linear combinations of monomials and of tensors of them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::prime::{add_mod, is_prime, mul_mod, neg_mod};

/// Prime and extension degree shared by every cohomology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohCtx {
    p: u64,
    r: usize,
    q: u64,
}

impl CohCtx {
    pub fn new(p: u64, r: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::UnsupportedDegree(r));
        }
        let q = p
            .checked_pow(r as u32)
            .ok_or(Error::FieldTooLarge { p, r })?;
        Ok(Self { p, r, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.a.len() != self.r || m.b.len() != self.r {
            return Err(Error::InvalidMonomial(format!(
                "expected {} exponents, found A:{} B:{}",
                self.r,
                m.a.len(),
                m.b.len()
            )));
        }
        if m.a.iter().any(|&a| a > 1) {
            return Err(Error::InvalidMonomial(
                "exterior exponents must be 0 or 1".into(),
            ));
        }
        if self.p == 2 && m.a.iter().any(|&a| a != 0) {
            return Err(Error::InvalidMonomial(
                "there are no exterior generators for p = 2".into(),
            ));
        }
        Ok(())
    }

    /// Σa_k + 2Σb_k for odd p; Σb_k for p = 2.
    pub fn degree(&self, m: &Monomial) -> u64 {
        if self.p == 2 {
            m.b.iter().sum()
        } else {
            m.a.iter().map(|&a| a as u64).sum::<u64>() + 2 * m.b.iter().sum::<u64>()
        }
    }

    /// Σ p^k (a_k + b_k), exactly.
    pub fn weight(&self, m: &Monomial) -> u128 {
        let mut pk: u128 = 1;
        let mut total: u128 = 0;
        for (&a, &b) in m.a.iter().zip(&m.b) {
            total += pk * (a as u128 + b as u128);
            pk *= self.p as u128;
        }
        total
    }

    /// Weight modulo q - 1 (the eigencharacter of the F_q^× action).
    pub fn weight_residue(&self, m: &Monomial) -> u64 {
        let modulus = self.q - 1;
        if modulus == 1 {
            return 0;
        }
        let mut pk = 1 % modulus;
        let mut total = 0;
        for (&a, &b) in m.a.iter().zip(&m.b) {
            let c = (a as u64 + b) % modulus;
            total = add_mod(total, mul_mod(pk, c, modulus), modulus);
            pk = mul_mod(pk, self.p % modulus, modulus);
        }
        total
    }

    /// The invariance criterion: (q - 1) divides the weight.
    pub fn satisfies_p(&self, m: &Monomial) -> bool {
        self.weight_residue(m) == 0
    }

    pub fn require_invariant(&self, m: &Monomial) -> Result<()> {
        self.check(m)?;
        if self.satisfies_p(m) {
            Ok(())
        } else {
            Err(Error::NotInvariant {
                monomial: m.to_string(),
                q: self.q,
                weight: self.weight(m),
                q_minus_one: self.q - 1,
            })
        }
    }

    /// Every monomial of the given degree, in canonical order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let r = self.r;
        let mut out = Vec::new();
        let exterior_choices: Vec<Vec<u8>> = if self.p == 2 {
            vec![vec![0; r]]
        } else {
            (0..1u32 << r)
                .map(|mask| (0..r).map(|k| ((mask >> k) & 1) as u8).collect())
                .collect()
        };
        for a in exterior_choices {
            let na: u64 = a.iter().map(|&x| x as u64).sum();
            let b_total = if self.p == 2 {
                d
            } else {
                if na > d || !(d - na).is_multiple_of(2) {
                    continue;
                }
                (d - na) / 2
            };
            for b in compositions(b_total, r) {
                out.push(Monomial { a: a.clone(), b });
            }
        }
        out.sort();
        out
    }

    /// Basis of H^d(GL_2 F_q): the degree-d monomials satisfying the invariance criterion.
    pub fn enumerate_invariant_basis(&self, d: u64) -> Vec<Monomial> {
        self.monomials_of_degree(d)
            .into_iter()
            .filter(|m| self.satisfies_p(m))
            .collect()
    }

    /// Parse the monomial grammar `x0 x1 y0^3 y1^2` (indices may be omitted when r = 1;
    /// `1` denotes the unit). The Unicode rendering `x₀ y₀³` is accepted too.
    /// Error positions count characters.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let mut m = Monomial::one(self.r);
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut seen_any = false;
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        // A run of digits in one script, starting at `i`.
        let number = |i: &mut usize, digit: fn(char) -> Option<u32>| -> Option<String> {
            let start = *i;
            let mut out = String::new();
            while let Some(d) = chars.get(*i).copied().and_then(digit) {
                out.push(char::from_digit(d, 10).unwrap());
                *i += 1;
            }
            (*i > start).then_some(out)
        };
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() || c == '*' {
                i += 1;
                continue;
            }
            let start = i;
            match c {
                '1' if !seen_any => {
                    i += 1;
                    if chars[i..].iter().all(|c| c.is_whitespace()) {
                        return Ok(m);
                    }
                    return Err(err(i, "unexpected input after unit"));
                }
                'x' | 'y' => {
                    i += 1;
                    let idx_start = i;
                    let idx = match number(&mut i, ascii_digit)
                        .or_else(|| number(&mut i, subscript_digit))
                    {
                        Some(d) => d
                            .parse::<usize>()
                            .map_err(|_| err(idx_start, "bad index"))?,
                        None if self.r == 1 => 0,
                        None => return Err(err(idx_start, "generator index required when r > 1")),
                    };
                    if idx >= self.r {
                        return Err(err(
                            idx_start,
                            &format!("index {idx} out of range for r = {}", self.r),
                        ));
                    }
                    let mut exp = 1u64;
                    let e_start;
                    let digits = if chars.get(i) == Some(&'^') {
                        i += 1;
                        e_start = i;
                        match number(&mut i, ascii_digit) {
                            Some(d) => Some(d),
                            None => return Err(err(e_start, "expected exponent after '^'")),
                        }
                    } else {
                        e_start = i;
                        number(&mut i, superscript_digit)
                    };
                    if let Some(d) = digits {
                        exp = d
                            .parse()
                            .map_err(|_| err(e_start, "exponent out of range"))?;
                    }
                    if c == 'x' {
                        if self.p == 2 {
                            return Err(err(start, "no exterior generators for p = 2"));
                        }
                        if exp == 0 {
                            continue;
                        }
                        if exp > 1 || m.a[idx] == 1 {
                            return Err(err(start, "exterior generators square to zero"));
                        }
                        m.a[idx] = 1;
                    } else {
                        m.b[idx] += exp;
                    }
                    seen_any = true;
                }
                _ => return Err(err(start, &format!("unexpected character '{c}'"))),
            }
        }
        if !seen_any {
            return Err(err(0, "empty monomial"));
        }
        Ok(m)
    }
}

fn ascii_digit(c: char) -> Option<u32> {
    c.to_digit(10)
}

fn subscript_digit(c: char) -> Option<u32> {
    ('₀'..='₉').contains(&c).then(|| c as u32 - '₀' as u32)
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴'..='⁹' => Some(c as u32 - '⁴' as u32 + 4),
        _ => None,
    }
}

/// All compositions of `total` into `parts` ordered parts.
pub(crate) fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// x^A y^B with A ∈ {0,1}^r and B ∈ N^r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    #[serde(rename = "A")]
    a: Vec<u8>,
    #[serde(rename = "B")]
    b: Vec<u64>,
}

impl Monomial {
    pub fn new(a: Vec<u8>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidMonomial(format!(
                "A has {} entries but B has {}",
                a.len(),
                b.len()
            )));
        }
        if a.iter().any(|&x| x > 1) {
            return Err(Error::InvalidMonomial(
                "exterior exponents must be 0 or 1".into(),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn one(r: usize) -> Self {
        Self {
            a: vec![0; r],
            b: vec![0; r],
        }
    }

    /// Pure polynomial monomial y^B.
    pub fn y_power(b: Vec<u64>) -> Self {
        Self {
            a: vec![0; b.len()],
            b,
        }
    }

    pub fn a(&self) -> &[u8] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn r(&self) -> usize {
        self.b.len()
    }

    pub fn is_one(&self) -> bool {
        self.a.iter().all(|&x| x == 0) && self.b.iter().all(|&x| x == 0)
    }

    pub fn has_exterior(&self) -> bool {
        self.a.iter().any(|&x| x != 0)
    }

    /// Product of monomials, `None` when exterior parts overlap (the product vanishes).
    /// The Koszul sign of reordering the exterior factors is not tracked here.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        if self.a.iter().zip(&other.a).any(|(&x, &y)| x + y > 1) {
            return None;
        }
        Some(Monomial {
            a: self.a.iter().zip(&other.a).map(|(&x, &y)| x + y).collect(),
            b: self.b.iter().zip(&other.b).map(|(&x, &y)| x + y).collect(),
        })
    }

    fn order_key(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum::<u64>() + 2 * self.b.iter().sum::<u64>()
    }

    /// Unicode rendering (`x y⁵`, `x₀ y₀² y₁`).
    pub fn pretty(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let r = self.r();
        let index = |k: usize| -> String {
            if r == 1 {
                String::new()
            } else if unicode {
                k.to_string().chars().map(subscript).collect()
            } else {
                k.to_string()
            }
        };
        let mut parts = Vec::new();
        for k in 0..r {
            if self.a[k] == 1 {
                parts.push(format!("x{}", index(k)));
            }
        }
        for k in 0..r {
            match self.b[k] {
                0 => {}
                1 => parts.push(format!("y{}", index(k))),
                e if unicode => parts.push(format!(
                    "y{}{}",
                    index(k),
                    e.to_string().chars().map(superscript).collect::<String>()
                )),
                e => parts.push(format!("y{}^{e}", index(k))),
            }
        }
        parts.join(" ")
    }
}

fn superscript(c: char) -> char {
    match c {
        '0' => '⁰',
        '1' => '¹',
        '2' => '²',
        '3' => '³',
        '4' => '⁴',
        '5' => '⁵',
        '6' => '⁶',
        '7' => '⁷',
        '8' => '⁸',
        '9' => '⁹',
        c => c,
    }
}

fn subscript(c: char) -> char {
    match c {
        '0'..='9' => char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap(),
        c => c,
    }
}

/// The ASCII grammar accepted by [`CohCtx::parse_monomial`].
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Degree first (with x counted 1 and y counted 2), then lexicographic on (A, B).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key()
            .cmp(&other.order_key())
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse F_p-linear combination of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    p: u64,
    terms: BTreeMap<Monomial, u64>,
}

impl CohClass {
    pub fn zero(p: u64) -> Self {
        Self {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(p: u64, m: Monomial) -> Self {
        let mut c = Self::zero(p);
        c.add_term(m, 1);
        c
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: u64) {
        let c = coeff % self.p;
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, self.p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CohClass) -> Result<CohClass> {
        if self.p != other.p {
            return Err(Error::ContextMismatch(format!(
                "classes over F_{} and F_{}",
                self.p, other.p
            )));
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> CohClass {
        self.scale(neg_mod(1, self.p))
    }

    pub fn scale(&self, c: u64) -> CohClass {
        let mut out = CohClass::zero(self.p);
        for (m, v) in self.terms() {
            out.add_term(m.clone(), mul_mod(v, c % self.p, self.p));
        }
        out
    }
}

/// Sparse F_p-linear combination of n-fold tensors of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorClass {
    p: u64,
    n: usize,
    terms: BTreeMap<Vec<Monomial>, u64>,
}

/// One term of a [`TensorClass`] as serialized to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTerm {
    pub coeff: u64,
    pub factors: Vec<Monomial>,
}

impl TensorClass {
    pub fn zero(p: u64, n: usize) -> Self {
        Self {
            p,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(p: u64, factors: Vec<Monomial>) -> Self {
        let mut t = Self::zero(p, factors.len());
        t.add_term(factors, 1).expect("arity matches");
        t
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, factors: Vec<Monomial>, coeff: u64) -> Result<()> {
        if factors.len() != self.n {
            return Err(Error::ContextMismatch(format!(
                "tuple of length {} in a {}-fold tensor",
                factors.len(),
                self.n
            )));
        }
        let c = coeff % self.p;
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(factors) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, self.p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, factors: &[Monomial]) -> u64 {
        self.terms.get(factors).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial], u64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_context(&self, other: &TensorClass) -> Result<()> {
        if self.p != other.p || self.n != other.n {
            return Err(Error::ContextMismatch(format!(
                "{}-fold tensor over F_{} vs {}-fold tensor over F_{}",
                self.n, self.p, other.n, other.p
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorClass) -> Result<TensorClass> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.to_vec(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> TensorClass {
        let mut out = TensorClass::zero(self.p, self.n);
        for (k, v) in self.terms() {
            out.add_term(k.to_vec(), mul_mod(v, c % self.p, self.p))
                .expect("arity preserved");
        }
        out
    }

    pub fn neg(&self) -> TensorClass {
        self.scale(neg_mod(1, self.p))
    }

    /// The tensor product, concatenating tuples: (u_1..u_a) ⊗ (v_1..v_b).
    pub fn tensor(&self, other: &TensorClass) -> Result<TensorClass> {
        if self.p != other.p {
            return Err(Error::ContextMismatch(format!(
                "tensors over F_{} and F_{}",
                self.p, other.p
            )));
        }
        let mut out = TensorClass::zero(self.p, self.n + other.n);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let mut k = u.to_vec();
                k.extend_from_slice(v);
                out.add_term(k, mul_mod(a, b, self.p))?;
            }
        }
        Ok(out)
    }

    /// Apply a linear map to every term, rebuilding the class (with arity `n`).
    pub fn map_terms(
        &self,
        n: usize,
        mut f: impl FnMut(&[Monomial], u64, &mut TensorClass) -> Result<()>,
    ) -> Result<TensorClass> {
        let mut out = TensorClass::zero(self.p, n);
        for (k, c) in self.terms() {
            f(k, c, &mut out)?;
        }
        Ok(out)
    }

    pub fn to_terms(&self) -> Vec<TensorTerm> {
        self.terms()
            .map(|(k, c)| TensorTerm {
                coeff: c,
                factors: k.to_vec(),
            })
            .collect()
    }

    /// Unicode rendering, e.g. `y⊗y² + y²⊗y`.
    pub fn pretty(&self) -> String {
        self.render(|m| m.pretty(), "⊗", "·")
    }

    fn render(&self, mono: impl Fn(&Monomial) -> String, sep: &str, times: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(k, c)| {
                let body = k.iter().map(&mono).collect::<Vec<_>>().join(sep);
                if c == 1 {
                    body
                } else {
                    format!("{c}{times}{body}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// ASCII rendering with `(x)` for tensor factors, e.g. `y (x) y^2`.
impl fmt::Display for TensorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|m| m.to_string(), " (x) ", "*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, r: usize) -> CohCtx {
        CohCtx::new(p, r).unwrap()
    }

    #[test]
    fn degree_examples() {
        let m = Monomial::new(vec![1], vec![2]).unwrap();
        assert_eq!(ctx(3, 1).degree(&m), 5);
        assert_eq!(ctx(2, 1).degree(&Monomial::y_power(vec![3])), 3);
        let m = Monomial::new(vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(ctx(5, 2).degree(&m), 6);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(ctx(2, 2).weight(&Monomial::y_power(vec![1, 1])), 3);
        assert_eq!(
            ctx(3, 1).weight(&Monomial::new(vec![1], vec![2]).unwrap()),
            3
        );
        assert_eq!(ctx(3, 2).weight(&Monomial::y_power(vec![0, 2])), 6);
    }

    #[test]
    fn invariance_examples() {
        let q4 = ctx(2, 2);
        assert!(q4.satisfies_p(&Monomial::y_power(vec![1, 1])));
        assert!(!q4.satisfies_p(&Monomial::y_power(vec![1, 0])));
        let q2 = ctx(2, 1);
        for d in 0..10 {
            assert!(q2.satisfies_p(&Monomial::y_power(vec![d])));
        }
    }

    #[test]
    fn basis_examples() {
        let c = ctx(3, 1);
        assert_eq!(
            c.enumerate_invariant_basis(3),
            vec![Monomial::new(vec![1], vec![1]).unwrap()]
        );
        assert_eq!(
            c.enumerate_invariant_basis(4),
            vec![Monomial::y_power(vec![2])]
        );
        let c2 = ctx(2, 1);
        for k in 0..12 {
            assert_eq!(
                c2.enumerate_invariant_basis(k),
                vec![Monomial::y_power(vec![k])]
            );
        }
        assert!(ctx(2, 2)
            .enumerate_invariant_basis(2)
            .contains(&Monomial::y_power(vec![1, 1])));
    }

    #[test]
    fn basis_lists_are_exhaustive_and_canonical() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
            let c = ctx(p, r);
            for d in 0..=20 {
                let basis = c.enumerate_invariant_basis(d);
                assert!(basis.windows(2).all(|w| w[0] < w[1]), "strictly sorted");
                for m in &basis {
                    assert_eq!(c.degree(m), d);
                    assert!(c.satisfies_p(m));
                    c.check(m).unwrap();
                }
                // brute force: every exponent vector with small entries
                let all = c.monomials_of_degree(d);
                let expected: Vec<_> = all.into_iter().filter(|m| c.satisfies_p(m)).collect();
                assert_eq!(basis, expected);
            }
        }
    }

    #[test]
    fn weight_residue_is_additive() {
        for (p, r) in [(3, 1), (2, 2), (3, 2), (2, 3)] {
            let c = ctx(p, r);
            let small: Vec<Monomial> = (0..=4).flat_map(|d| c.monomials_of_degree(d)).collect();
            let modulus = c.q() - 1;
            for u in &small {
                for v in &small {
                    if let Some(w) = u.mul(v) {
                        assert_eq!(
                            c.weight_residue(&w),
                            (c.weight_residue(u) + c.weight_residue(v)) % modulus.max(1)
                        );
                        assert_eq!(c.weight(&w), c.weight(u) + c.weight(v));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_render() {
        let c1 = ctx(3, 1);
        let m = c1.parse_monomial("x y^4").unwrap();
        assert_eq!(m, Monomial::new(vec![1], vec![4]).unwrap());
        assert_eq!(m.to_string(), "x y^4");
        assert_eq!(m.pretty(), "x y⁴");
        assert_eq!(
            c1.parse_monomial("y^7").unwrap(),
            Monomial::y_power(vec![7])
        );
        assert_eq!(
            c1.parse_monomial("y y^2").unwrap(),
            Monomial::y_power(vec![3])
        );
        assert_eq!(c1.parse_monomial("1").unwrap(), Monomial::one(1));

        let c2 = ctx(5, 2);
        let m = c2.parse_monomial("x0 x1 y0^3 y1^2").unwrap();
        assert_eq!(m, Monomial::new(vec![1, 1], vec![3, 2]).unwrap());
        assert_eq!(c2.parse_monomial(&m.to_string()).unwrap(), m);
        assert_eq!(m.pretty(), "x₀ x₁ y₀³ y₁²");

        assert!(matches!(
            c2.parse_monomial("y^2"),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(matches!(c1.parse_monomial("x x"), Err(Error::Parse { .. })));
        assert!(matches!(
            c1.parse_monomial("z"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            c1.parse_monomial("y^"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            ctx(2, 1).parse_monomial("x y"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(c1.parse_monomial(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn monomial_json_shape() {
        let m = Monomial::new(vec![1, 0], vec![2, 3]).unwrap();
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"A":[1,0],"B":[2,3]}"#
        );
    }

    #[test]
    fn class_ops() {
        let p = 5;
        let mut c = CohClass::zero(p);
        c.add_term(Monomial::y_power(vec![2]), 3);
        c.add_term(Monomial::one(1), 1);
        assert!(c.add(&c.neg()).unwrap().is_zero());
        assert_eq!(c.scale(1), c);
        assert!(c.add(&CohClass::zero(3)).is_err());

        let y = TensorClass::singleton(p, vec![Monomial::y_power(vec![1])]);
        let y2 = TensorClass::singleton(p, vec![Monomial::y_power(vec![2])]);
        let t = y.tensor(&y2).unwrap();
        assert_eq!(t.arity(), 2);
        assert_eq!(t.len(), 1);
        assert_eq!(
            t.coeff(&[Monomial::y_power(vec![1]), Monomial::y_power(vec![2])]),
            1
        );
        assert!(t.add(&t.neg()).unwrap().is_zero());
        assert!(t.add(&y).is_err());
        assert_eq!(t.pretty(), "y⊗y²");
    }
}
