//! Characteristic classes of the basic representations: the multinomial formula,
//! nonvanishing criteria, witness classes and degree tables.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coalg::{
    coproduct, digit_sum, multinomial_mod_p, no_carry, shuffle_sign_is_negative, splitting_sum,
};
use crate::error::{Error, Result};
use crate::ff::prime::{mul_mod, neg_mod, pow_mod};
use crate::mono::{CohCtx, Monomial, TensorClass};

/// A request for χ_α(ρ_{F_q^n}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiQuery {
    pub ctx: CohCtx,
    pub alpha: Monomial,
    pub n: usize,
}

impl ChiQuery {
    pub fn new(ctx: CohCtx, alpha: Monomial, n: usize) -> Result<Self> {
        ctx.require_invariant(&alpha)?;
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        Ok(Self { ctx, alpha, n })
    }
}

fn sign_factor(p: u64, n: usize) -> u64 {
    if n % 2 == 1 {
        1
    } else {
        neg_mod(1, p)
    }
}

/// χ_α(ρ_{F_q^n}) as an n-fold tensor class.
pub fn chi_basic(ctx: &CohCtx, alpha: &Monomial, n: usize) -> Result<TensorClass> {
    let q = ChiQuery::new(*ctx, alpha.clone(), n)?;
    if ctx.degree(&q.alpha) == 0 {
        return Ok(TensorClass::zero(ctx.p(), n));
    }
    Ok(splitting_sum(ctx, &q.alpha, n, true)?.scale(sign_factor(ctx.p(), n)))
}

/// The coefficient that a single splitting contributes to χ_α(ρ_{F_q^n}), or an
/// error naming why the tuple is not an admissible term.
pub fn term_coefficient(ctx: &CohCtx, alpha: &Monomial, factors: &[Monomial]) -> Result<u64> {
    ctx.require_invariant(alpha)?;
    let r = ctx.r();
    let p = ctx.p();
    for (i, f) in factors.iter().enumerate() {
        ctx.check(f)?;
        if !ctx.satisfies_p(f) {
            return Err(Error::InvalidArgument(format!(
                "factor {i} ({f}) is not invariant"
            )));
        }
        if f.is_one() {
            return Err(Error::InvalidArgument(format!("factor {i} has degree 0")));
        }
    }
    let mut assignment = Vec::new();
    let mut coeff = sign_factor(p, factors.len());
    for k in 0..r {
        let owners: Vec<usize> = (0..factors.len())
            .filter(|&i| factors[i].a()[k] == 1)
            .collect();
        if owners.len() != alpha.a()[k] as usize {
            return Err(Error::InvalidArgument(format!(
                "exterior exponents at index {k} do not sum to that of the class"
            )));
        }
        assignment.extend(owners);
        let parts: Vec<u64> = factors.iter().map(|f| f.b()[k]).collect();
        if parts.iter().sum::<u64>() != alpha.b()[k] {
            return Err(Error::InvalidArgument(format!(
                "polynomial exponents at index {k} do not sum to that of the class"
            )));
        }
        coeff = mul_mod(coeff, multinomial_mod_p(p, &parts), p);
    }
    if shuffle_sign_is_negative(&assignment) {
        coeff = neg_mod(coeff, p);
    }
    Ok(coeff)
}

/// Whether χ_α(ρ_{F_q^n}) ≠ 0, decided by searching for one admissible splitting.
///
/// The digits of α are distributed one base-p place at a time; since the n factors
/// are interchangeable, the search state is the sorted multiset of
/// (weight residue mod q - 1, has positive degree) over the factors.
pub fn is_chi_nonzero(ctx: &CohCtx, alpha: &Monomial, n: usize) -> Result<bool> {
    ChiQuery::new(*ctx, alpha.clone(), n)?;
    if ctx.degree(alpha) == 0 {
        return Ok(false);
    }
    let p = ctx.p();
    let modulus = ctx.q() - 1;
    // (weight residue of one unit, number of units) for every place with a nonzero digit
    let mut items: Vec<(u64, u64)> = Vec::new();
    for k in 0..ctx.r() {
        let wk = if modulus > 1 {
            pow_mod(p % modulus, k as u64, modulus)
        } else {
            0
        };
        if alpha.a()[k] == 1 {
            items.push((wk, 1));
        }
        let mut place_weight = wk;
        let mut b = alpha.b()[k];
        while b > 0 {
            let d = b % p;
            if d > 0 {
                items.push((place_weight, d));
            }
            b /= p;
            if modulus > 1 {
                place_weight = mul_mod(place_weight, p % modulus, modulus);
            }
        }
    }
    let remaining_units: Vec<u64> = (0..=items.len())
        .map(|i| items[i..].iter().map(|&(_, d)| d).sum())
        .collect();

    type State = Vec<(u64, bool)>;
    struct Search<'a> {
        items: &'a [(u64, u64)],
        remaining: &'a [u64],
        modulus: u64,
        failed: HashSet<(usize, State)>,
    }

    impl Search<'_> {
        fn run(&mut self, idx: usize, state: State) -> bool {
            let empty = state.iter().filter(|(_, nz)| !nz).count() as u64;
            if empty > self.remaining[idx] {
                return false;
            }
            if idx == self.items.len() {
                return state.iter().all(|&(res, nz)| nz && res == 0);
            }
            if self.failed.contains(&(idx, state.clone())) {
                return false;
            }
            let (w, d) = self.items[idx];
            let n = state.len();
            let mut seen = HashSet::new();
            for comp in crate::mono::compositions(d, n) {
                let mut next: State = state
                    .iter()
                    .zip(&comp)
                    .map(|(&(res, nz), &c)| {
                        if c == 0 {
                            (res, nz)
                        } else if self.modulus > 1 {
                            (
                                (res + mul_mod(w, c % self.modulus, self.modulus)) % self.modulus,
                                true,
                            )
                        } else {
                            (0, true)
                        }
                    })
                    .collect();
                next.sort_unstable();
                if !seen.insert(next.clone()) {
                    continue;
                }
                if self.run(idx + 1, next) {
                    return true;
                }
            }
            self.failed.insert((idx, state));
            false
        }
    }

    let mut search = Search {
        items: &items,
        remaining: &remaining_units,
        modulus,
        failed: HashSet::new(),
    };
    Ok(search.run(0, vec![(0, false); n]))
}

/// Smallest m with s_p(m) = s, or `None` if it does not fit in 128 bits.
pub fn min_m_for_digit_sum(p: u64, s: u64) -> Option<u128> {
    let c = s / (p - 1);
    let d = s % (p - 1);
    let pc = (p as u128).checked_pow(u32::try_from(c).ok()?)?;
    ((d as u128) + 1).checked_mul(pc).map(|x| x - 1)
}

/// Which family of r = 1 classes a digit-sum query concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum R1Kind {
    /// χ_{y^m}
    Y,
    /// χ_{x y^m}
    Xy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum R1Status {
    #[serde(rename = "nonzero-nonnilpotent")]
    NonzeroNonNilpotent,
    Nonzero,
    Zero,
    /// The monomial is not invariant, so there is no such class.
    Undefined,
}

impl fmt::Display for R1Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            R1Status::NonzeroNonNilpotent => "nonzero-nonnilpotent",
            R1Status::Nonzero => "nonzero",
            R1Status::Zero => "zero",
            R1Status::Undefined => "undefined",
        })
    }
}

/// The digit-sum classification of χ_{y^m}(ρ_{F_p^n}) and χ_{x y^m}(ρ_{F_p^n}).
pub fn r1_predicate(p: u64, kind: R1Kind, m: u64, n: usize) -> Result<R1Status> {
    if !crate::ff::prime::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let s = digit_sum(p, m);
    let n = n as u64;
    match (p, kind) {
        (2, R1Kind::Xy) => Err(Error::InvalidArgument(
            "there is no exterior generator for p = 2".into(),
        )),
        (2, R1Kind::Y) => Ok(if s >= n {
            R1Status::NonzeroNonNilpotent
        } else {
            R1Status::Zero
        }),
        (_, R1Kind::Y) => {
            if !s.is_multiple_of(p - 1) {
                Ok(R1Status::Undefined)
            } else if s / (p - 1) >= n {
                Ok(R1Status::NonzeroNonNilpotent)
            } else {
                Ok(R1Status::Zero)
            }
        }
        (_, R1Kind::Xy) => {
            if !(s + 1).is_multiple_of(p - 1) {
                Ok(R1Status::Undefined)
            } else if (s + 1) / (p - 1) >= n {
                Ok(R1Status::Nonzero)
            } else {
                Ok(R1Status::Zero)
            }
        }
    }
}

/// The two witness families for nonvanishing on basic representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// (y_0 ⋯ y_{r-1})^{p^n - 1}
    YPower,
    /// x_0 ⋯ x_{r-1} (y_0 ⋯ y_{r-1})^{p^n - p^{n-1} - 1}, p odd
    Mixed,
}

fn check_witness_args(p: u64, n: usize, kind: WitnessKind) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if p == 2 && kind == WitnessKind::Mixed {
        return Err(Error::InvalidArgument(
            "the mixed witness needs an exterior generator, so p must be odd".into(),
        ));
    }
    Ok(())
}

fn pow_or_err(p: u64, e: usize) -> Result<u64> {
    p.checked_pow(e as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{e} overflows")))
}

pub fn witness_alpha(ctx: &CohCtx, n: usize, kind: WitnessKind) -> Result<Monomial> {
    let p = ctx.p();
    check_witness_args(p, n, kind)?;
    let r = ctx.r();
    let pn = pow_or_err(p, n)?;
    match kind {
        WitnessKind::YPower => Ok(Monomial::y_power(vec![pn - 1; r])),
        WitnessKind::Mixed => Monomial::new(vec![1; r], vec![pn - pn / p - 1; r]),
    }
}

/// The explicit splitting α = Π_i x^{A_i} y^{B_i} exhibiting a nonzero term.
pub fn witness_splitting(ctx: &CohCtx, n: usize, kind: WitnessKind) -> Result<Vec<Monomial>> {
    let p = ctx.p();
    check_witness_args(p, n, kind)?;
    let r = ctx.r();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let f = match kind {
            WitnessKind::YPower => Monomial::y_power(vec![pow_or_err(p, i - 1)? * (p - 1); r]),
            WitnessKind::Mixed if i == 1 => Monomial::new(vec![1; r], vec![p - 2; r])?,
            WitnessKind::Mixed => {
                Monomial::y_power(vec![pow_or_err(p, i - 2)? * ((p - 2) * p + 1); r])
            }
        };
        out.push(f);
    }
    Ok(out)
}

/// Closed-form degree of the witness class.
pub fn witness_degree(p: u64, r: usize, n: usize, kind: WitnessKind) -> Result<u64> {
    check_witness_args(p, n, kind)?;
    let pn = pow_or_err(p, n)?;
    let r = r as u64;
    Ok(match (p, kind) {
        (2, _) => r * (pn - 1),
        (_, WitnessKind::YPower) => 2 * r * (pn - 1),
        (_, WitnessKind::Mixed) => r * (2 * pn - 2 * (pn / p) - 1),
    })
}

/// Status column of a degree table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableStatus {
    Nonzero,
    NonNilpotent,
}

impl fmt::Display for TableStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableStatus::Nonzero => "nonzero",
            TableStatus::NonNilpotent => "non-nilpotent",
        })
    }
}

/// One nonzero universal class χ_α^{(N)} on GL_N F_q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTableRow {
    #[serde(rename = "N")]
    pub dim: u64,
    pub alpha: Monomial,
    pub degree: u64,
    pub status: TableStatus,
}

/// The witness classes for every 2 ≤ N ≤ p^n, each checked against the
/// multinomial formula before it is listed.
pub fn universal_table(ctx: &CohCtx, n: usize) -> Result<Vec<DegreeTableRow>> {
    let p = ctx.p();
    let pn = pow_or_err(p, n)?;
    let mut kinds = vec![(WitnessKind::YPower, TableStatus::NonNilpotent)];
    if p != 2 {
        kinds.push((WitnessKind::Mixed, TableStatus::Nonzero));
    }
    let mut classes = Vec::new();
    for (kind, status) in kinds {
        let alpha = witness_alpha(ctx, n, kind)?;
        let factors = witness_splitting(ctx, n, kind)?;
        if term_coefficient(ctx, &alpha, &factors)? == 0 {
            return Err(Error::IdentityFailure(format!(
                "witness {alpha} has a zero coefficient"
            )));
        }
        let degree = ctx.degree(&alpha);
        if degree != witness_degree(p, ctx.r(), n, kind)? {
            return Err(Error::IdentityFailure(format!(
                "witness {alpha} has degree {degree}"
            )));
        }
        classes.push((alpha, degree, status));
    }
    Ok((2..=pn)
        .flat_map(|dim| {
            classes
                .iter()
                .map(move |(alpha, degree, status)| DegreeTableRow {
                    dim,
                    alpha: alpha.clone(),
                    degree: *degree,
                    status: *status,
                })
        })
        .collect())
}

/// For r = 1: every nonzero χ_{y^m}, χ_{x y^m} of degree at most `max_degree`
/// given by the digit-sum criteria, for every 2 ≤ N ≤ p^n.
pub fn r1_table(p: u64, n: usize, max_degree: u64) -> Result<Vec<DegreeTableRow>> {
    let ctx = CohCtx::new(p, 1)?;
    let pn = pow_or_err(p, n)?;
    let mut classes = Vec::new();
    for m in 1..=max_degree {
        let alpha = Monomial::y_power(vec![m]);
        if ctx.degree(&alpha) <= max_degree
            && r1_predicate(p, R1Kind::Y, m, n)? == R1Status::NonzeroNonNilpotent
        {
            classes.push((ctx.degree(&alpha), alpha, TableStatus::NonNilpotent));
        }
        if p != 2 {
            let alpha = Monomial::new(vec![1], vec![m - 1])?;
            if ctx.degree(&alpha) <= max_degree
                && r1_predicate(p, R1Kind::Xy, m - 1, n)? == R1Status::Nonzero
            {
                classes.push((ctx.degree(&alpha), alpha, TableStatus::Nonzero));
            }
        }
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok((2..=pn)
        .flat_map(|dim| {
            classes
                .iter()
                .map(move |(degree, alpha, status)| DegreeTableRow {
                    dim,
                    alpha: alpha.clone(),
                    degree: *degree,
                    status: *status,
                })
        })
        .collect())
}

/// A carry-free tuple of positive multiples of p - 1, with its homology degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleCertificate {
    pub parts: Vec<u64>,
    pub total: u64,
    pub degree: u64,
}

/// Non-decreasing n-tuples of positive multiples of p - 1 whose base-p sum has
/// no carry and is at most `max_total`, ordered by (total, tuple).
pub fn indecomposable_tuples(p: u64, n: usize, max_total: u64) -> Result<Vec<TupleCertificate>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let step = p - 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(
        p: u64,
        step: u64,
        n: usize,
        budget: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<TupleCertificate>,
    ) {
        if cur.len() == n {
            if no_carry(p, cur) {
                let total: u64 = cur.iter().sum();
                let degree = if p == 2 { total } else { 2 * total };
                out.push(TupleCertificate {
                    parts: cur.clone(),
                    total,
                    degree,
                });
            }
            return;
        }
        let lo = cur.last().copied().unwrap_or(step);
        let slots = (n - cur.len()) as u64;
        let mut b = lo;
        while b * slots <= budget {
            cur.push(b);
            go(p, step, n, budget - b, cur, out);
            cur.pop();
            b += step;
        }
    }
    go(p, step, n, max_total, &mut cur, &mut out);
    out.sort_by(|a, b| a.total.cmp(&b.total).then_with(|| a.parts.cmp(&b.parts)));
    Ok(out)
}

/// Whether χ_α(ρ_{F_q^{a+b}}) = −Σ χ_{α'}(ρ_{F_q^a}) ⊗ χ_{α''}(ρ_{F_q^b}) over Δ(α) = Σ α' ⊗ α''.
pub fn wedge_split_check(ctx: &CohCtx, alpha: &Monomial, a: usize, b: usize) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "both ranks must be at least 1".into(),
        ));
    }
    let p = ctx.p();
    let lhs = chi_basic(ctx, alpha, a + b)?;
    let mut rhs = TensorClass::zero(p, a + b);
    for (pair, c) in coproduct(ctx, alpha)?.terms() {
        let left = chi_basic(ctx, &pair[0], a)?;
        let right = chi_basic(ctx, &pair[1], b)?;
        rhs = rhs.add(&left.tensor(&right)?.scale(c))?;
    }
    Ok(lhs == rhs.neg())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(b: u64) -> Monomial {
        Monomial::y_power(vec![b])
    }

    #[test]
    fn chi_examples() {
        let c2 = CohCtx::new(2, 1).unwrap();
        let t = chi_basic(&c2, &y(3), 2).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.coeff(&[y(1), y(2)]), 1);
        assert_eq!(t.coeff(&[y(2), y(1)]), 1);
        assert_eq!(t.pretty(), "y⊗y² + y²⊗y");
        assert!(chi_basic(&c2, &y(2), 2).unwrap().is_zero());
        assert!(chi_basic(&c2, &y(0), 1).unwrap().is_zero());

        let c3 = CohCtx::new(3, 1).unwrap();
        let xy = Monomial::new(vec![1], vec![1]).unwrap();
        let t = chi_basic(&c3, &xy, 1).unwrap();
        assert_eq!(t, TensorClass::singleton(3, vec![xy]));
        assert!(matches!(
            chi_basic(&c3, &y(1), 2),
            Err(Error::NotInvariant { .. })
        ));
    }

    #[test]
    fn chi_agrees_with_filtered_iterated_coproduct() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let c = CohCtx::new(p, r).unwrap();
            for d in 1..=9 {
                for m in c.enumerate_invariant_basis(d) {
                    for n in 1..=3 {
                        let it = crate::coalg::iterated_coproduct(&c, &m, n).unwrap();
                        let mut filtered = TensorClass::zero(p, n);
                        for (k, v) in it.terms() {
                            if k.iter().all(|f| !f.is_one()) {
                                filtered.add_term(k.to_vec(), v).unwrap();
                            }
                        }
                        let expected = filtered.scale(sign_factor(p, n));
                        assert_eq!(chi_basic(&c, &m, n).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn nonzero_search_examples() {
        let c2 = CohCtx::new(2, 1).unwrap();
        assert!(is_chi_nonzero(&c2, &y(3), 2).unwrap());
        assert!(!is_chi_nonzero(&c2, &y(2), 2).unwrap());
        let c3 = CohCtx::new(3, 1).unwrap();
        assert!(is_chi_nonzero(&c3, &y(8), 2).unwrap());
    }

    #[test]
    fn nonzero_search_matches_full_expansion() {
        for (p, r) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let c = CohCtx::new(p, r).unwrap();
            for d in 1..=10 {
                for m in c.enumerate_invariant_basis(d) {
                    for n in 1..=3 {
                        assert_eq!(
                            is_chi_nonzero(&c, &m, n).unwrap(),
                            !chi_basic(&c, &m, n).unwrap().is_zero(),
                            "{m} q={} n={n}",
                            c.q()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(2, 7), 3);
        assert_eq!(digit_sum(3, 8), 4);
        assert_eq!(digit_sum(5, 0), 0);
        assert_eq!(min_m_for_digit_sum(2, 3), Some(7));
        assert_eq!(min_m_for_digit_sum(3, 5), Some(17));
        assert_eq!(min_m_for_digit_sum(7, 0), Some(0));
    }

    #[test]
    fn predicate_examples() {
        assert_eq!(
            r1_predicate(2, R1Kind::Y, 3, 2).unwrap(),
            R1Status::NonzeroNonNilpotent
        );
        assert_eq!(
            r1_predicate(3, R1Kind::Xy, 1, 1).unwrap(),
            R1Status::Nonzero
        );
        assert_eq!(r1_predicate(3, R1Kind::Y, 2, 2).unwrap(), R1Status::Zero);
        assert_eq!(
            r1_predicate(3, R1Kind::Y, 1, 1).unwrap(),
            R1Status::Undefined
        );
        assert!(r1_predicate(2, R1Kind::Xy, 1, 1).is_err());
    }

    #[test]
    fn witness_examples() {
        let c3 = CohCtx::new(3, 1).unwrap();
        assert_eq!(witness_alpha(&c3, 2, WitnessKind::YPower).unwrap(), y(8));
        assert_eq!(c3.degree(&y(8)), 16);
        let mixed = witness_alpha(&c3, 2, WitnessKind::Mixed).unwrap();
        assert_eq!(mixed, Monomial::new(vec![1], vec![5]).unwrap());
        assert_eq!(c3.degree(&mixed), 11);
        let c2 = CohCtx::new(2, 1).unwrap();
        assert_eq!(witness_alpha(&c2, 3, WitnessKind::YPower).unwrap(), y(7));
        assert_eq!(witness_degree(2, 1, 3, WitnessKind::YPower).unwrap(), 7);
        assert!(witness_alpha(&c2, 1, WitnessKind::Mixed).is_err());
    }

    #[test]
    fn witness_terms_appear_in_the_expansion() {
        for (p, r, n) in [(3, 1, 2), (2, 2, 2), (3, 2, 1), (5, 1, 2), (2, 1, 3)] {
            let c = CohCtx::new(p, r).unwrap();
            let mut kinds = vec![WitnessKind::YPower];
            if p != 2 {
                kinds.push(WitnessKind::Mixed);
            }
            for kind in kinds {
                let alpha = witness_alpha(&c, n, kind).unwrap();
                let factors = witness_splitting(&c, n, kind).unwrap();
                let coeff = term_coefficient(&c, &alpha, &factors).unwrap();
                assert_ne!(coeff, 0);
                assert_eq!(chi_basic(&c, &alpha, n).unwrap().coeff(&factors), coeff);
            }
        }
    }

    #[test]
    fn table_examples() {
        let c3 = CohCtx::new(3, 1).unwrap();
        let rows = universal_table(&c3, 2).unwrap();
        assert_eq!(rows.len(), 16);
        assert!(rows.iter().all(|r| (2..=9).contains(&r.dim)));
        assert!(rows
            .iter()
            .any(|r| r.degree == 16 && r.status == TableStatus::NonNilpotent));
        assert!(rows
            .iter()
            .any(|r| r.degree == 11 && r.status == TableStatus::Nonzero));

        let rows = universal_table(&CohCtx::new(2, 1).unwrap(), 2).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.degree == 3));

        let rows = universal_table(&CohCtx::new(2, 2).unwrap(), 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].degree, 2);
        assert_eq!(rows[0].alpha, Monomial::y_power(vec![1, 1]));

        let rows = r1_table(2, 2, 6).unwrap();
        let degrees: Vec<u64> = rows
            .iter()
            .filter(|r| r.dim == 2)
            .map(|r| r.degree)
            .collect();
        assert_eq!(degrees, vec![3, 5, 6]);
    }

    #[test]
    fn tuple_examples() {
        let t = indecomposable_tuples(3, 2, 10).unwrap();
        let d = t.iter().find(|c| c.parts == vec![2, 6]).unwrap();
        assert_eq!(d.degree, 16);
        assert!(t.iter().all(|c| c.parts != vec![2, 2]));
        let t = indecomposable_tuples(2, 2, 4).unwrap();
        assert_eq!(t.iter().find(|c| c.parts == vec![1, 2]).unwrap().degree, 3);
        let t = indecomposable_tuples(2, 2, 7).unwrap();
        let parts: Vec<Vec<u64>> = t.iter().map(|c| c.parts.clone()).collect();
        assert_eq!(
            parts,
            vec![
                vec![1, 2],
                vec![1, 4],
                vec![2, 4],
                vec![1, 6],
                vec![2, 5],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn wedge_examples() {
        let c2 = CohCtx::new(2, 1).unwrap();
        assert!(wedge_split_check(&c2, &y(3), 1, 1).unwrap());
        let c4 = CohCtx::new(2, 2).unwrap();
        let m = Monomial::y_power(vec![1, 1]);
        assert!(wedge_split_check(&c4, &m, 1, 1).unwrap());
        assert!(chi_basic(&c4, &m, 2).unwrap().is_zero());
    }
}
