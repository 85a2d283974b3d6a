//! Sparse polynomials over F_p, power sums of linear forms, and the Dickson
//! invariant identities for the classes χ_{y^k}(ρ_{F_p^n}).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::prime::{add_mod, is_prime, mul_mod, neg_mod, pow_mod, sub_mod};
use crate::ff::{rank, FieldCtx, Matrix};
use crate::mono::TensorClass;

/// Most variables a [`MultiPoly`] may have.
pub const MAX_VARS: usize = 8;
/// Largest total degree a [`MultiPoly`] may reach.
pub const MAX_POLY_DEGREE: u64 = u16::MAX as u64;

const FIELD_BITS: usize = 16;
const FIELD_MASK: u128 = (1 << FIELD_BITS) - 1;

fn shift(i: usize) -> usize {
    (MAX_VARS - 1 - i) * FIELD_BITS
}

/// Exponent vectors packed 16 bits per variable, variable 0 most significant, so
/// that integer order is lexicographic order and multiplication is addition.
fn pack(exps: &[u32]) -> u128 {
    exps.iter()
        .enumerate()
        .fold(0, |acc, (i, &e)| acc | ((e as u128) << shift(i)))
}

fn unpack(key: u128, nvars: usize) -> Vec<u32> {
    (0..nvars)
        .map(|i| ((key >> shift(i)) & FIELD_MASK) as u32)
        .collect()
}

fn key_degree(key: u128) -> u64 {
    (0..MAX_VARS)
        .map(|i| ((key >> shift(i)) & FIELD_MASK) as u64)
        .sum()
}

/// A polynomial in z_1, …, z_n with coefficients in F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    p: u64,
    nvars: usize,
    terms: BTreeMap<u128, u64>,
}

impl MultiPoly {
    /// The zero polynomial. Panics if `nvars > MAX_VARS`.
    pub fn zero(p: u64, nvars: usize) -> Self {
        assert!(
            nvars <= MAX_VARS,
            "at most {MAX_VARS} variables are supported"
        );
        Self {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, nvars: usize, c: u64) -> Self {
        let mut out = Self::zero(p, nvars);
        out.add_term_key(0, c);
        out
    }

    pub fn one(p: u64, nvars: usize) -> Self {
        Self::constant(p, nvars, 1)
    }

    /// z_{i+1} (variables are numbered from 1 when displayed).
    pub fn var(p: u64, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(p, &e, 1)
    }

    pub fn monomial(p: u64, exps: &[u32], c: u64) -> Self {
        let mut out = Self::zero(p, exps.len());
        out.add_term(exps, c);
        out
    }

    /// Σ c_i z_i.
    pub fn linear_form(p: u64, coeffs: &[u64]) -> Self {
        let n = coeffs.len();
        let mut out = Self::zero(p, n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            out.add_term(&e, c);
        }
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: &[u32], c: u64) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        assert!(
            exps.iter().map(|&e| e as u64).sum::<u64>() <= MAX_POLY_DEGREE,
            "degree too large"
        );
        self.add_term_key(pack(exps), c);
    }

    fn add_term_key(&mut self, key: u128, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn coeff(&self, exps: &[u32]) -> u64 {
        self.terms.get(&pack(exps)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lexicographic order: by total degree, then lexicographically
    /// on the exponent vector.
    pub fn terms(&self) -> Vec<(Vec<u32>, u64)> {
        let mut v: Vec<(u64, u128, u64)> = self
            .terms
            .iter()
            .map(|(&k, &c)| (key_degree(k), k, c))
            .collect();
        v.sort_unstable();
        v.into_iter()
            .map(|(_, k, c)| (unpack(k, self.nvars), c))
            .collect()
    }

    /// Highest total degree of a term, or `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|&k| key_degree(k)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|&k| key_degree(k));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The homogeneous part of degree `d`.
    pub fn component(&self, d: u64) -> MultiPoly {
        MultiPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(&k, _)| key_degree(k) == d)
                .map(|(&k, &c)| (k, c))
                .collect(),
        }
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.p != other.p || self.nvars != other.nvars {
            return Err(Error::ContextMismatch(format!(
                "polynomials over F_{} in {} variables and over F_{} in {} variables",
                self.p, self.nvars, other.p, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            out.add_term_key(k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(neg_mod(1, self.p))
    }

    pub fn scale(&self, c: u64) -> MultiPoly {
        let c = c % self.p;
        MultiPoly {
            p: self.p,
            nvars: self.nvars,
            terms: if c == 0 {
                BTreeMap::new()
            } else {
                self.terms
                    .iter()
                    .map(|(&k, &v)| (k, mul_mod(v, c, self.p)))
                    .collect()
            },
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.mul_truncated(other, MAX_POLY_DEGREE)
    }

    /// The product with every term of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &MultiPoly, max_degree: u64) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let max_degree = max_degree.min(MAX_POLY_DEGREE);
        let p = self.p;
        let lhs: Vec<(u128, u64, u64)> = self
            .terms
            .iter()
            .map(|(&k, &c)| (k, key_degree(k), c))
            .collect();
        let mut acc: HashMap<u128, u64> = HashMap::new();
        for (&kb, &cb) in &other.terms {
            let db = key_degree(kb);
            for &(ka, da, ca) in &lhs {
                if da + db > max_degree {
                    continue;
                }
                let e = acc.entry(ka + kb).or_insert(0);
                *e = add_mod(*e, mul_mod(ca, cb, p), p);
            }
        }
        Ok(MultiPoly {
            p,
            nvars: self.nvars,
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        })
    }

    pub fn pow(&self, mut e: u64) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(self.p, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Substitute `images[i]` for z_{i+1}; all images must live in one common ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let (p, target_vars) = match images.first() {
            Some(f) => (f.p, f.nvars),
            None => return Ok(MultiPoly::constant(self.p, 0, self.coeff(&[]))),
        };
        let mut power_cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(p, target_vars);
        for (exps, c) in self.terms() {
            let mut term = MultiPoly::constant(p, target_vars, c);
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = match power_cache.get(&(i, e)) {
                    Some(x) => x.clone(),
                    None => {
                        let x = images[i].pow(e as u64)?;
                        power_cache.insert((i, e), x.clone());
                        x
                    }
                };
                term = term.mul(&pw)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Value at a point of F_p^n.
    pub fn eval(&self, point: &[u64]) -> u64 {
        let p = self.p;
        self.terms().iter().fold(0, |acc, (exps, c)| {
            let v = exps
                .iter()
                .zip(point)
                .fold(*c, |v, (&e, &x)| mul_mod(v, pow_mod(x % p, e as u64, p), p));
            add_mod(acc, v, p)
        })
    }

    /// Unicode rendering, e.g. `z₁²z₂ + z₁z₂²`.
    pub fn pretty(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = self.terms();
        terms.reverse();
        terms
            .iter()
            .map(|(exps, c)| {
                let mut factors = Vec::new();
                for (i, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let idx = (i + 1).to_string();
                    factors.push(if unicode {
                        let sub: String = idx.chars().map(subscript).collect();
                        if e == 1 {
                            format!("z{sub}")
                        } else {
                            format!(
                                "z{sub}{}",
                                e.to_string().chars().map(superscript).collect::<String>()
                            )
                        }
                    } else if e == 1 {
                        format!("z{idx}")
                    } else {
                        format!("z{idx}^{e}")
                    });
                }
                let body = factors.join(if unicode { "" } else { " " });
                match (*c, body.is_empty()) {
                    (c, true) => c.to_string(),
                    (1, false) => body,
                    (c, false) if unicode => format!("{c}·{body}"),
                    (c, false) => format!("{c} {body}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn superscript(c: char) -> char {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    c.to_digit(10).map(|d| SUP[d as usize]).unwrap_or(c)
}

fn subscript(c: char) -> char {
    c.to_digit(10)
        .and_then(|d| char::from_u32('₀' as u32 + d))
        .unwrap_or(c)
}

/// ASCII rendering in descending graded-lex order, e.g. `z1^2 z2 + z1 z2^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// A formal series Σ_d c_d truncated above degree `dmax`, stored by homogeneous components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalClass {
    p: u64,
    nvars: usize,
    dmax: u64,
    components: BTreeMap<u64, MultiPoly>,
}

impl TotalClass {
    pub fn zero(p: u64, nvars: usize, dmax: u64) -> Self {
        Self {
            p,
            nvars,
            dmax,
            components: BTreeMap::new(),
        }
    }

    /// Split a polynomial into homogeneous components, dropping degrees above `dmax`.
    pub fn from_poly(f: &MultiPoly, dmax: u64) -> Self {
        let mut out = Self::zero(f.p, f.nvars, dmax);
        for (&k, &c) in &f.terms {
            let d = key_degree(k);
            if d <= dmax {
                out.components
                    .entry(d)
                    .or_insert_with(|| MultiPoly::zero(f.p, f.nvars))
                    .add_term_key(k, c);
            }
        }
        out
    }

    pub fn dmax(&self) -> u64 {
        self.dmax
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Set the degree-`d` component; `f` must be homogeneous of degree `d`.
    pub fn set_component(&mut self, d: u64, f: MultiPoly) -> Result<()> {
        if f.p != self.p || f.nvars != self.nvars {
            return Err(Error::ContextMismatch(
                "component from a different ring".into(),
            ));
        }
        if !f.is_zero() && (!f.is_homogeneous() || f.total_degree() != Some(d)) {
            return Err(Error::InvalidArgument(format!(
                "component is not homogeneous of degree {d}"
            )));
        }
        if d > self.dmax {
            return Ok(());
        }
        if f.is_zero() {
            self.components.remove(&d);
        } else {
            self.components.insert(d, f);
        }
        Ok(())
    }

    pub fn component(&self, d: u64) -> MultiPoly {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.p, self.nvars))
    }

    /// Degrees carrying a nonzero component.
    pub fn support(&self) -> Vec<u64> {
        self.components.keys().copied().collect()
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.p, self.nvars);
        for f in self.components.values() {
            for (&k, &c) in &f.terms {
                out.add_term_key(k, c);
            }
        }
        out
    }

    pub fn truncate(&self, dmax: u64) -> TotalClass {
        TotalClass {
            p: self.p,
            nvars: self.nvars,
            dmax: dmax.min(self.dmax),
            components: self
                .components
                .range(..=dmax)
                .map(|(&d, f)| (d, f.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> TotalClass {
        TotalClass {
            components: self.components.iter().map(|(&d, f)| (d, f.neg())).collect(),
            ..self.clone()
        }
    }

    /// The product truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &TotalClass) -> Result<TotalClass> {
        if self.p != other.p || self.nvars != other.nvars {
            return Err(Error::ContextMismatch(
                "total classes over different rings".into(),
            ));
        }
        let dmax = self.dmax.min(other.dmax);
        let mut out = TotalClass::zero(self.p, self.nvars, dmax);
        let mut sums: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        for (&da, fa) in &self.components {
            for (&db, fb) in other.components.range(..=dmax.saturating_sub(da)) {
                if da + db > dmax {
                    continue;
                }
                let prod = fa.mul(fb)?;
                let slot = sums
                    .entry(da + db)
                    .or_insert_with(|| MultiPoly::zero(self.p, self.nvars));
                *slot = slot.add(&prod)?;
            }
        }
        for (d, f) in sums {
            if !f.is_zero() {
                out.components.insert(d, f);
            }
        }
        Ok(out)
    }

    /// The multiplicative inverse up to degree `dmax`; the constant term must be 1.
    pub fn series_inverse(&self, dmax: u64) -> Result<TotalClass> {
        let c0 = self.component(0);
        if c0 != MultiPoly::one(self.p, self.nvars) {
            return Err(Error::InvalidArgument(
                "series inversion needs constant term 1".into(),
            ));
        }
        let dmax = dmax.min(self.dmax);
        let mut inv = TotalClass::zero(self.p, self.nvars, dmax);
        inv.components.insert(0, c0);
        let positive: Vec<(u64, &MultiPoly)> = self
            .components
            .iter()
            .filter(|(&d, _)| d > 0)
            .map(|(&d, f)| (d, f))
            .collect();
        for d in 1..=dmax {
            let mut acc = MultiPoly::zero(self.p, self.nvars);
            for &(j, dj) in &positive {
                if j > d {
                    break;
                }
                if let Some(prev) = inv.components.get(&(d - j)) {
                    acc = acc.add(&dj.mul(prev)?)?;
                }
            }
            if !acc.is_zero() {
                inv.components.insert(d, acc.neg());
            }
        }
        Ok(inv)
    }
}

fn check_field(p: u64, n: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidArgument(format!(
            "n must lie in 1..={MAX_VARS}, got {n}"
        )));
    }
    p.checked_pow(n as u32)
        .filter(|&q| q <= 1 << 20)
        .ok_or(Error::FieldTooLarge { p, r: n })?;
    Ok(())
}

/// Coefficient vectors of every linear form on F_p^n, zero form first.
pub fn linear_forms(p: u64, n: usize) -> Vec<Vec<u64>> {
    let count = p.pow(n as u32);
    (0..count)
        .map(|mut idx| {
            let mut c = vec![0; n];
            // first coordinate most significant
            for slot in c.iter_mut().rev() {
                *slot = idx % p;
                idx /= p;
            }
            c
        })
        .collect()
}

fn check_degree(k: u64) -> Result<()> {
    if k > MAX_POLY_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "degree {k} exceeds the supported maximum {MAX_POLY_DEGREE}"
        )));
    }
    Ok(())
}

/// Σ_{z ∈ (F_p^n)^*} z^k, each power formed by repeated squaring.
pub fn power_sum(p: u64, n: usize, k: u64) -> Result<MultiPoly> {
    check_field(p, n)?;
    check_degree(k)?;
    if k == 0 {
        return Err(Error::InvalidArgument(
            "power sums are taken for k ≥ 1".into(),
        ));
    }
    let mut out = MultiPoly::zero(p, n);
    for c in linear_forms(p, n).iter().skip(1) {
        out = out.add(&MultiPoly::linear_form(p, c).pow(k)?)?;
    }
    Ok(out)
}

/// p_0, p_1, …, p_kmax at once, by multiplying each form's running power once more
/// per degree. Entry 0 is p_0 = p^n ≡ 0.
pub fn power_sums_upto(p: u64, n: usize, kmax: u64) -> Result<Vec<MultiPoly>> {
    check_field(p, n)?;
    check_degree(kmax)?;
    let mut sums: Vec<MultiPoly> = (0..=kmax).map(|_| MultiPoly::zero(p, n)).collect();
    for c in linear_forms(p, n).iter().skip(1) {
        let l = MultiPoly::linear_form(p, c);
        let mut cur = l.clone();
        for slot in sums.iter_mut().skip(1) {
            *slot = slot.add(&cur)?;
            cur = cur.mul(&l)?;
        }
    }
    Ok(sums)
}

/// χ_{y^k}(ρ_{F_p^n}) = −Σ z^k.
pub fn chi_via_power_sum(p: u64, n: usize, k: u64) -> Result<MultiPoly> {
    Ok(power_sum(p, n, k)?.neg())
}

/// D = Π_{z ∈ (F_p^n)^*} (1 + z) with the zero form contributing 1, split by degree.
/// D is a polynomial, so the result carries the largest truncation bound.
pub fn dickson_total(p: u64, n: usize) -> Result<TotalClass> {
    check_field(p, n)?;
    let mut prod = MultiPoly::one(p, n);
    for c in linear_forms(p, n).iter().skip(1) {
        let factor = MultiPoly::linear_form(p, c).add(&MultiPoly::one(p, n))?;
        prod = prod.mul(&factor)?;
    }
    Ok(TotalClass::from_poly(&prod, MAX_POLY_DEGREE))
}

/// A = Σ_{k=1}^{dmax} (−1)^k χ_{y^k}(ρ_{F_p^n}).
pub fn total_a(p: u64, n: usize, dmax: u64) -> Result<TotalClass> {
    if dmax == 0 {
        return Err(Error::InvalidArgument("dmax must be at least 1".into()));
    }
    let sums = power_sums_upto(p, n, dmax)?;
    let mut out = TotalClass::zero(p, n, dmax);
    for (k, pk) in sums.iter().enumerate().skip(1) {
        // (−1)^k · (−p_k) = (−1)^{k−1} p_k
        let comp = if k % 2 == 1 { pk.clone() } else { pk.neg() };
        out.set_component(k as u64, comp)?;
    }
    Ok(out)
}

fn top_degree(p: u64, n: usize) -> u64 {
    p.pow(n as u32) - 1
}

/// D · A truncated at `dmax` equals −D_{p^n−1}.
pub fn newton_check(p: u64, n: usize, dmax: u64) -> Result<bool> {
    let d = dickson_total(p, n)?;
    newton_check_with(&d, &total_a(p, n, dmax)?, p, n, dmax)
}

fn newton_check_with(d: &TotalClass, a: &TotalClass, p: u64, n: usize, dmax: u64) -> Result<bool> {
    let top = top_degree(p, n);
    if dmax < top {
        return Err(Error::InvalidArgument(format!(
            "dmax must be at least p^n - 1 = {top}"
        )));
    }
    let lhs = d.truncate(dmax).mul(&a.truncate(dmax))?;
    let mut rhs = TotalClass::zero(p, n, dmax);
    rhs.set_component(top, d.component(top).neg())?;
    Ok(lhs == rhs)
}

/// −D_{p^n−1} · D^{−1} truncated at `dmax`.
pub fn a_from_inverse(p: u64, n: usize, dmax: u64) -> Result<TotalClass> {
    let d = dickson_total(p, n)?;
    a_from_inverse_with(&d, p, n, dmax)
}

fn a_from_inverse_with(d: &TotalClass, p: u64, n: usize, dmax: u64) -> Result<TotalClass> {
    let inv = d.series_inverse(dmax)?;
    let top = top_degree(p, n);
    let mut lead = TotalClass::zero(p, n, dmax);
    lead.set_component(top, d.component(top).neg())?;
    lead.mul(&inv)
}

/// One product identity χ_{y^k} = sign · D_{p^n−1} D_{p^n−p^i} with k = 2p^n − p^i − 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductIdentity {
    pub i: usize,
    pub k: u64,
    pub sign: i8,
}

fn product_identity_with(
    d: &TotalClass,
    chi: &MultiPoly,
    p: u64,
    n: usize,
    i: usize,
) -> Result<ProductIdentity> {
    let pn = p.pow(n as u32);
    let k = 2 * pn - p.pow(i as u32) - 1;
    let rhs = d
        .component(pn - 1)
        .mul(&d.component(pn - p.pow(i as u32)))?;
    let sign = if *chi == rhs {
        1
    } else if *chi == rhs.neg() {
        -1
    } else {
        return Err(Error::IdentityFailure(format!(
            "chi[y^{k}] is not ±D_{}·D_{} for p={p}, n={n}, i={i}",
            pn - 1,
            pn - p.pow(i as u32)
        )));
    };
    Ok(ProductIdentity { i, k, sign })
}

/// Determine the sign in χ_{y^{2p^n−p^i−1}} = ±D_{p^n−1} D_{p^n−p^i}.
pub fn product_identity_check(p: u64, n: usize, i: usize) -> Result<ProductIdentity> {
    if i > n {
        return Err(Error::InvalidArgument(format!("i must lie in 0..={n}")));
    }
    check_field(p, n)?;
    let pn = p.pow(n as u32);
    let k = 2 * pn - p.pow(i as u32) - 1;
    let d = dickson_total(p, n)?;
    product_identity_with(&d, &chi_via_power_sum(p, n, k)?, p, n, i)
}

/// Every k in 1..=kmax with χ_{y^k}(ρ_{F_p^n}) ≠ 0.
pub fn nonzero_chi_degrees(p: u64, n: usize, kmax: u64) -> Result<Vec<u64>> {
    let sums = power_sums_upto(p, n, kmax)?;
    Ok((1..=kmax)
        .filter(|&k| !sums[k as usize].is_zero())
        .collect())
}

/// Whether the products of total degree ≤ `max_degree` in D_{p^n−1} and
/// D_{p^n−1}·D_{p^n−p^i} (1 ≤ i ≤ n−1) are linearly independent, i.e. no polynomial
/// relation of that degree holds among these classes.
pub fn algebraic_independence_witness(p: u64, n: usize, max_degree: u32) -> Result<bool> {
    let d = dickson_total(p, n)?;
    algebraic_independence_with(&d, p, n, max_degree)
}

fn algebraic_independence_with(d: &TotalClass, p: u64, n: usize, max_degree: u32) -> Result<bool> {
    let pn = p.pow(n as u32);
    let top = d.component(pn - 1);
    let mut gens = vec![top.clone()];
    for i in 1..n {
        gens.push(top.mul(&d.component(pn - p.pow(i as u32)))?);
    }
    // all exponent vectors on the generators with total degree ≤ max_degree
    let mut products = Vec::new();
    let mut stack: Vec<(usize, u32, MultiPoly)> = vec![(0, 0, MultiPoly::one(p, n))];
    while let Some((start, deg, f)) = stack.pop() {
        products.push(f.clone());
        if deg == max_degree {
            continue;
        }
        for (j, g) in gens.iter().enumerate().skip(start) {
            stack.push((j, deg + 1, f.mul(g)?));
        }
    }
    let mut columns: Vec<u128> = products
        .iter()
        .flat_map(|f| f.terms.keys().copied())
        .collect();
    columns.sort_unstable();
    columns.dedup();
    let ctx = FieldCtx::prime(p)?;
    let rows: Vec<Vec<_>> = products
        .iter()
        .map(|f| {
            columns
                .iter()
                .map(|k| ctx.from_int(f.terms.get(k).copied().unwrap_or(0)))
                .collect()
        })
        .collect();
    let count = rows.len();
    let m = Matrix::from_rows(rows, columns.len())?;
    Ok(rank(&ctx, &m) == count)
}

/// The identification y^{b_1} ⊗ ⋯ ⊗ y^{b_n} ↦ z_1^{b_1} ⋯ z_n^{b_n}, for r = 1 classes
/// with no exterior factors.
pub fn tensor_to_poly(t: &TensorClass) -> Result<MultiPoly> {
    let n = t.arity();
    if n > MAX_VARS {
        return Err(Error::Unsupported(format!(
            "at most {MAX_VARS} tensor factors can be converted"
        )));
    }
    let mut out = MultiPoly::zero(t.p(), n);
    for (factors, c) in t.terms() {
        let mut exps = Vec::with_capacity(n);
        for f in factors {
            if f.r() != 1 {
                return Err(Error::Unsupported(
                    "polynomial images exist only for r = 1".into(),
                ));
            }
            if f.has_exterior() {
                return Err(Error::Unsupported(format!(
                    "factor {f} has an exterior part; only pure y-powers convert"
                )));
            }
            let b = f.b()[0];
            check_degree(b)?;
            exps.push(b as u32);
        }
        out.add_term(&exps, c);
    }
    Ok(out)
}

/// Outcome of the Dickson identity checks for one (p, n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DicksonReport {
    pub p: u64,
    pub n: usize,
    pub dmax: u64,
    /// Degrees k with σ_k ≠ 0.
    pub support: Vec<u64>,
    pub sparsity: bool,
    pub newton: bool,
    pub inverse: bool,
    pub products: Vec<ProductIdentity>,
    /// k ≤ 2(p^n − 1) with χ_{y^k} ≠ 0 that are not of the form 2p^n − p^i − 1.
    pub unexpected_nonzero: Vec<u64>,
    /// `None` when not evaluated (only done for n = 2).
    pub independence: Option<bool>,
}

impl DicksonReport {
    pub fn ok(&self) -> bool {
        self.sparsity
            && self.newton
            && self.inverse
            && self.unexpected_nonzero.is_empty()
            && self.products.len() == self.n + 1
            && self.independence != Some(false)
    }
}

/// Run every Dickson identity check for (p, n), sharing one power-sum table.
pub fn dickson_report(p: u64, n: usize, dmax: u64) -> Result<DicksonReport> {
    check_field(p, n)?;
    let pn = p.pow(n as u32);
    let top = pn - 1;
    if dmax < top {
        return Err(Error::InvalidArgument(format!(
            "dmax must be at least p^n - 1 = {top}"
        )));
    }
    let d = dickson_total(p, n)?;
    let support = d.support();
    let allowed: Vec<u64> = (0..=n).map(|i| pn - p.pow(i as u32)).collect();
    let sparsity = support.iter().all(|k| allowed.contains(k));

    let kmax = dmax.max(2 * top);
    let sums = power_sums_upto(p, n, kmax)?;
    let mut a = TotalClass::zero(p, n, dmax);
    for k in 1..=dmax {
        let pk = &sums[k as usize];
        a.set_component(k, if k % 2 == 1 { pk.clone() } else { pk.neg() })?;
    }
    let newton = newton_check_with(&d, &a, p, n, dmax)?;
    let inverse = a_from_inverse_with(&d, p, n, dmax)? == a;

    let mut products = Vec::new();
    let expected: Vec<u64> = (0..=n).map(|i| 2 * pn - p.pow(i as u32) - 1).collect();
    for i in 0..=n {
        let k = expected[i];
        products.push(product_identity_with(&d, &sums[k as usize].neg(), p, n, i)?);
    }
    let unexpected_nonzero = (1..=2 * top)
        .filter(|k| !sums[*k as usize].is_zero() && !expected.contains(k))
        .collect();
    let independence = if n == 2 {
        Some(algebraic_independence_with(&d, p, n, 3)?)
    } else {
        None
    };
    Ok(DicksonReport {
        p,
        n,
        dmax,
        support,
        sparsity,
        newton,
        inverse,
        products,
        unexpected_nonzero,
        independence,
    })
}

/// Difference of two polynomials evaluated pointwise; used to spot-check identities.
pub fn agree_on_points(f: &MultiPoly, g: &MultiPoly) -> bool {
    if f.p != g.p || f.nvars != g.nvars {
        return false;
    }
    let p = f.p;
    linear_forms(p, f.nvars)
        .iter()
        .all(|pt| sub_mod(f.eval(pt), g.eval(pt), p) == 0)
}
