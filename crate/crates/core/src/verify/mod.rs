//! Cross-check suites, one per acceptance criterion. Each suite compares the
//! library against the reference computations in [`oracles`] or against closed
//! forms, and records every disagreement.

pub mod oracles;

use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chi::{
    self, is_chi_nonzero, min_m_for_digit_sum, r1_predicate, term_coefficient, universal_table,
    witness_alpha, witness_degree, witness_splitting, R1Kind, R1Status, WitnessKind,
};
use crate::coalg::{
    apply_coproduct_at, coproduct, counit, gaussian_binomial, lucas_binomial, multinomial_mod_p,
};
use crate::dickson::{chi_via_power_sum, dickson_report, power_sum, tensor_to_poly, MultiPoly};
use crate::error::Result;
use crate::ff::FieldCtx;
use crate::mono::{CohClass, CohCtx, Monomial, TensorClass};
use crate::reps::{
    basic_rep, big_rep, chi_of_rep, classify, conjugate, direct_sum, iso_to_basic, j_filtration,
    j_filtration_by_augmentation, j_tensor_check, pullback, random_rep, regular_rep, restrict,
    sym_power_rep, trivial_rep, wedge_sum, ChiReduction, Rep,
};

/// The (p, n) pairs shared by the first three suites.
pub const GRID: [(u64, usize); 7] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl std::str::FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(format!("unknown profile {other:?}")),
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub id: u8,
    pub name: &'static str,
    pub checks: usize,
    pub failed: usize,
    /// The first few failure messages.
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1000.0).round() / 1000.0)
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checks > 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<20} {:>7} checks  {:>7.2}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks,
            self.elapsed.as_secs_f64()
        )?;
        for msg in &self.failures {
            write!(f, "\n       {msg}")?;
        }
        if self.failed > self.failures.len() {
            write!(f, "\n       … {} more", self.failed - self.failures.len())?;
        }
        Ok(())
    }
}

const KEEP_FAILURES: usize = 10;

#[derive(Default)]
struct Checker {
    checks: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Checker {
    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEEP_FAILURES {
            self.failures.push(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        self.checks += 1;
        if got != want {
            let w = what();
            self.fail(format!("{w}: got {got:?}, expected {want:?}"));
        }
    }

    /// Unwrap a library result, recording an error as a failure.
    fn ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                let w = what();
                self.fail(format!("{w}: {e}"));
                None
            }
        }
    }
}

type SuiteFn = fn(Profile, &mut Checker);

const SUITES: [(u8, &str, SuiteFn); 10] = [
    (1, "oracle-equivalence", oracle_equivalence),
    (2, "digit-sum-criterion", digit_sum_criterion),
    (3, "lowest-degree", lowest_degree),
    (4, "coalgebra-laws", coalgebra_laws),
    (5, "wedge-consistency", wedge_consistency),
    (6, "dickson", dickson_suite),
    (7, "filtration", filtration_suite),
    (8, "classification", classification_suite),
    (9, "arithmetic", arithmetic_suite),
    (10, "witnesses", witness_suite),
];

/// Names of the suites, in order.
pub fn suite_names() -> Vec<(u8, &'static str)> {
    SUITES.iter().map(|(id, name, _)| (*id, *name)).collect()
}

/// Run one suite by id (1..=10).
pub fn run_suite(id: u8, profile: Profile) -> Option<SuiteResult> {
    let (id, name, f) = SUITES.iter().find(|(i, _, _)| *i == id)?;
    let start = Instant::now();
    let mut c = Checker::default();
    f(profile, &mut c);
    Some(SuiteResult {
        id: *id,
        name,
        checks: c.checks,
        failed: c.failed,
        failures: c.failures,
        elapsed: start.elapsed(),
    })
}

/// Run every suite, in parallel; results come back in suite order.
pub fn run_all(profile: Profile) -> Vec<SuiteResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|(id, _, _)| s.spawn(move || run_suite(*id, profile).expect("known id")))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn y(b: u64) -> Monomial {
    Monomial::y_power(vec![b])
}

fn xy(b: u64) -> Monomial {
    Monomial::new(vec![1], vec![b]).expect("r = 1")
}

fn oracle_equivalence(_: Profile, c: &mut Checker) {
    let f = oracles::factorials(200);
    for (p, n) in GRID {
        let ctx = CohCtx::new(p, 1).expect("prime");
        let kmax = 2 * (p.pow(n as u32) - 1) + 2 * p;
        for k in 1..=kmax {
            let Some(ps) = c.ok(power_sum(p, n, k), || format!("power_sum({p},{n},{k})")) else {
                continue;
            };
            c.eq(&ps, &oracles::power_sum_closed_form(&f, p, n, k), || {
                format!("power sum vs closed form p={p} n={n} k={k}")
            });
            if !ctx.satisfies_p(&y(k)) {
                c.check(ps.is_zero(), || {
                    format!("power sum p={p} n={n} k={k} should vanish off the invariants")
                });
                continue;
            }
            let Some(t) = c.ok(chi::chi_basic(&ctx, &y(k), n), || {
                format!("chi_basic(y^{k}, {n}) at p={p}")
            }) else {
                continue;
            };
            if let Some(poly) = c.ok(tensor_to_poly(&t), || format!("tensor_to_poly p={p} k={k}")) {
                c.eq(&poly, &ps.neg(), || {
                    format!("chi_basic(y^{k}) vs -power_sum at p={p} n={n}")
                });
            }
        }
    }
}

fn status_of(r: &Result<bool>) -> &'static str {
    match r {
        Ok(true) => "nonzero",
        Ok(false) => "zero",
        Err(_) => "undefined",
    }
}

fn r1_status_name(s: R1Status) -> &'static str {
    match s {
        R1Status::NonzeroNonNilpotent | R1Status::Nonzero => "nonzero",
        R1Status::Zero => "zero",
        R1Status::Undefined => "undefined",
    }
}

fn digit_sum_criterion(_: Profile, c: &mut Checker) {
    for (p, n) in GRID {
        let ctx = CohCtx::new(p, 1).expect("prime");
        let mut kinds = vec![(R1Kind::Y, y as fn(u64) -> Monomial)];
        if p != 2 {
            kinds.push((R1Kind::Xy, xy));
        }
        for (kind, make) in kinds {
            for m in 0..=300 {
                let alpha = make(m);
                let direct = is_chi_nonzero(&ctx, &alpha, n);
                let Some(pred) = c.ok(r1_predicate(p, kind, m, n), || {
                    format!("r1_predicate p={p} m={m} n={n}")
                }) else {
                    continue;
                };
                c.eq(status_of(&direct), r1_status_name(pred), || {
                    format!("{kind:?} p={p} n={n} m={m}")
                });
                // brute force over the full splitting sum where it is cheap
                if m <= 40 && n <= 2 {
                    if let Ok(nonzero) = direct {
                        if let Some(t) = c.ok(chi::chi_basic(&ctx, &alpha, n), || {
                            format!("chi_basic {alpha} p={p}")
                        }) {
                            c.eq(!t.is_zero(), nonzero, || {
                                format!("is_chi_nonzero vs expansion for {alpha}, p={p}, n={n}")
                            });
                        }
                    }
                }
            }
        }
    }
}

fn lowest_degree(_: Profile, c: &mut Checker) {
    for (p, n) in GRID {
        let ctx = CohCtx::new(p, 1).expect("prime");
        let pn = p.pow(n as u32);
        let pn1 = pn / p;
        let mut cases = vec![(
            y as fn(u64) -> Monomial,
            if p == 2 { pn - 1 } else { 2 * pn - 2 },
            if p == 2 { n as u64 } else { n as u64 * (p - 1) },
            if p == 2 { 1 } else { 2 },
            0,
        )];
        if p != 2 {
            cases.push((xy, 2 * pn - 2 * pn1 - 1, n as u64 * (p - 1) - 1, 2, 1));
        }
        for (make, want, digit_sum, scale, offset) in cases {
            let first =
                (0..=300u64).find(|&m| matches!(is_chi_nonzero(&ctx, &make(m), n), Ok(true)));
            let Some(m) = first else {
                c.fail(format!("no nonzero class below m = 300 for p={p} n={n}"));
                continue;
            };
            c.eq(ctx.degree(&make(m)), want, || {
                format!("lowest degree by scan, p={p} n={n}")
            });
            let formula = min_m_for_digit_sum(p, digit_sum).map(|m| m as u64 * scale + offset);
            c.eq(formula, Some(want), || {
                format!("lowest degree via min_m_for_digit_sum, p={p} n={n}")
            });
        }
    }
}

fn swap_factors(p: u64, t: &TensorClass) -> Result<TensorClass> {
    let exterior = |m: &Monomial| m.a().iter().map(|&x| x as u64).sum::<u64>();
    t.map_terms(2, |f, coeff, out| {
        let odd = p != 2 && exterior(&f[0]) * exterior(&f[1]) % 2 == 1;
        let c = if odd { (p - coeff) % p } else { coeff };
        out.add_term(vec![f[1].clone(), f[0].clone()], c)
    })
}

fn coalgebra_laws(_: Profile, c: &mut Checker) {
    let f = oracles::factorials(64);
    for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
        let ctx = CohCtx::new(p, r).expect("supported field");
        for d in 0..=12 {
            for m in ctx.enumerate_invariant_basis(d) {
                let Some(delta) = c.ok(coproduct(&ctx, &m), || format!("coproduct {m}")) else {
                    continue;
                };
                let q = ctx.q();
                c.eq(&delta, &oracles::coproduct_oracle(&ctx, &f, &m), || {
                    format!("coproduct of {m} vs enumeration, q={q}")
                });
                let left = apply_coproduct_at(&ctx, &delta, 0);
                let right = apply_coproduct_at(&ctx, &delta, 1);
                if let (Ok(l), Ok(rr)) = (left, right) {
                    c.eq(l, rr, || format!("coassociativity for {m}, q={q}"));
                } else {
                    c.fail(format!("iterated coproduct failed for {m}, q={q}"));
                }
                match swap_factors(p, &delta) {
                    Ok(sw) => c.eq(&sw, &delta, || format!("cocommutativity for {m}, q={q}")),
                    Err(e) => c.fail(format!("swap for {m}: {e}")),
                }
                let mut lhs = CohClass::zero(p);
                let mut rhs = CohClass::zero(p);
                for (fs, coeff) in delta.terms() {
                    c.eq(
                        ctx.weight(&fs[0]) + ctx.weight(&fs[1]),
                        ctx.weight(&m),
                        || format!("weight additivity in Δ({m}), q={q}"),
                    );
                    c.check(ctx.satisfies_p(&fs[0]) && ctx.satisfies_p(&fs[1]), || {
                        format!("Δ({m}) leaves the invariants, q={q}")
                    });
                    let e0 = counit(&CohClass::monomial(p, fs[0].clone()));
                    let e1 = counit(&CohClass::monomial(p, fs[1].clone()));
                    lhs.add_term(fs[1].clone(), coeff * e0 % p);
                    rhs.add_term(fs[0].clone(), coeff * e1 % p);
                }
                let unit = CohClass::monomial(p, m.clone());
                c.eq(&lhs, &unit, || format!("left counit for {m}, q={q}"));
                c.eq(&rhs, &unit, || format!("right counit for {m}, q={q}"));
            }
        }
    }
}

fn wedge_consistency(_: Profile, c: &mut Checker) {
    for (p, r) in [(2, 1), (3, 1), (2, 2)] {
        let ctx = CohCtx::new(p, r).expect("supported field");
        for d in 0..=10 {
            for alpha in ctx.enumerate_invariant_basis(d) {
                for a in 1..=3 {
                    for b in 1..=4 - a {
                        if let Some(ok) = c.ok(chi::wedge_split_check(&ctx, &alpha, a, b), || {
                            format!("wedge check {alpha} ({a},{b})")
                        }) {
                            c.check(ok, || {
                                format!(
                                    "wedge decomposition fails for {alpha}, a={a}, b={b}, q={}",
                                    ctx.q()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
}

fn expected_dickson_sign(p: u64, n: usize, i: usize) -> i8 {
    let sign = if p != 2 && i == n { -1 } else { 1 };
    #[cfg(debug_assertions)]
    if std::env::var_os("MODCHAR_DEBUG_FLIP_SIGN").is_some() {
        return -sign;
    }
    sign
}

fn dickson_suite(profile: Profile, c: &mut Checker) {
    let mut grid: Vec<(u64, usize)> = vec![
        (2, 1),
        (2, 2),
        (2, 3),
        (3, 1),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
    ];
    if profile == Profile::Full {
        grid.push((2, 4));
    }
    for (p, n) in grid {
        let top = p.pow(n as u32) - 1;
        let Some(rep) = c.ok(dickson_report(p, n, 3 * top), || {
            format!("dickson_report({p},{n})")
        }) else {
            continue;
        };
        c.check(rep.sparsity, || {
            format!("D support {:?} at p={p} n={n}", rep.support)
        });
        c.check(rep.newton, || format!("Newton identity at p={p} n={n}"));
        c.check(rep.inverse, || format!("A from D^-1 at p={p} n={n}"));
        c.eq(&rep.unexpected_nonzero, &vec![], || {
            format!("extra nonzero chi degrees at p={p} n={n}")
        });
        c.eq(rep.products.len(), n + 1, || {
            format!("product identities at p={p} n={n}")
        });
        for id in &rep.products {
            c.eq(id.sign, expected_dickson_sign(p, n, id.i), || {
                format!("sign of product identity p={p} n={n} i={}", id.i)
            });
        }
        if n == 2 {
            c.eq(rep.independence, Some(true), || {
                format!("algebraic independence at p={p} n=2")
            });
        }
    }
}

fn check_chain(c: &mut Checker, rep: &Rep, label: &str) {
    let (Some(a), Some(b)) = (
        c.ok(j_filtration(rep), || format!("j_filtration {label}")),
        c.ok(j_filtration_by_augmentation(rep), || {
            format!("augmentation filtration {label}")
        }),
    ) else {
        return;
    };
    c.eq(&a, &b, || {
        format!("filtration definitions disagree on {label}")
    });
    let ctx = rep.ctx();
    c.check(
        a.windows(2)
            .all(|w| w[0].dim() < w[1].dim() && w[0].is_subspace_of(ctx, &w[1])),
        || format!("filtration not strictly increasing on {label}"),
    );
    c.check(
        a.last().is_some_and(|s| s.dim() == rep.dim()) && a.len() <= rep.dim().max(1),
        || format!("filtration does not saturate by J_(dim-1) on {label}"),
    );
}

fn filtration_suite(_: Profile, c: &mut Checker) {
    let fields: Vec<FieldCtx> = [(2, 1), (3, 1), (2, 2)]
        .iter()
        .map(|&(p, r)| FieldCtx::new(p, r).expect("small field"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let ctx = &fields[i % fields.len()];
        let rep = random_rep(ctx, &mut rng, 8, 3);
        c.check(rep.violations().is_empty(), || {
            format!("random rep {i} invalid")
        });
        check_chain(c, &rep, &format!("random rep {i}"));
    }

    for (p, r, n) in [
        (2, 1, 1),
        (2, 1, 2),
        (2, 1, 3),
        (3, 1, 1),
        (3, 1, 2),
        (2, 2, 1),
        (2, 2, 2),
        (5, 1, 1),
    ] {
        let ctx = FieldCtx::new(p, r).expect("small field");
        let label = format!("big_rep({p},{r},{n})");
        let Some(big) = c.ok(big_rep(&ctx, n), || label.clone()) else {
            continue;
        };
        check_chain(c, &big, &label);
        let Some(chain) = c.ok(j_filtration(&big), || label.clone()) else {
            continue;
        };
        let Some(on_j1) = c.ok(restrict(&big, &chain[1]), || format!("J_1 of {label}")) else {
            continue;
        };
        let Some(t) = c.ok(iso_to_basic(&on_j1), || format!("iso_to_basic on {label}")) else {
            continue;
        };
        if let Some(conj) = c.ok(conjugate(&on_j1, &t), || format!("conjugate {label}")) {
            c.eq(&conj, basic_rep(&ctx, n).rep(), || {
                format!("T J_1 T^-1 vs basic rep for {label}")
            });
        }
    }

    for ctx in &fields {
        let xi = sym_power_rep(ctx);
        for i in 0..=2 * ctx.p() as usize {
            if let Some((lhs, rhs)) = c.ok(j_tensor_check(&xi, &xi, i), || {
                format!("j_tensor_check q={} i={i}", ctx.order().unwrap_or(0))
            }) {
                c.eq(lhs, rhs, || {
                    format!("J_{i}(xi ⊗ xi) over F_{}^{}", ctx.p(), ctx.r())
                });
            }
        }
        let line = trivial_rep(ctx, 1, 1);
        let b = basic_rep(ctx, 1);
        if let Some((lhs, rhs)) = c.ok(j_tensor_check(b.rep(), &line, 1), || "basic ⊗ line".into())
        {
            c.eq(lhs, rhs, || "J_1(basic ⊗ line)".into());
        }
    }
    let f3 = &fields[1];
    let xi = sym_power_rep(f3);
    if let Some((lhs, _)) = c.ok(j_tensor_check(&xi, &xi, 1), || "xi ⊗ xi over F_3".into()) {
        c.eq(lhs.dim(), 3, || "dim J_1(xi ⊗ xi) over F_3".into());
    }
}

/// −Σ_{c ∈ F_p^m} (c · π w)^k with π given by rows; computed without substitution.
fn pulled_back_power_sum(p: u64, proj: &[Vec<u64>], k: u64) -> Result<MultiPoly> {
    let s = proj[0].len();
    let mut acc = MultiPoly::zero(p, s);
    for c in crate::dickson::linear_forms(p, proj.len()) {
        let coeffs: Vec<u64> = (0..s)
            .map(|j| {
                proj.iter()
                    .zip(&c)
                    .map(|(row, ci)| row[j] * ci)
                    .sum::<u64>()
                    % p
            })
            .collect();
        acc = acc.add(&MultiPoly::linear_form(p, &coeffs).pow(k)?)?;
    }
    Ok(acc.neg())
}

fn classification_suite(_: Profile, c: &mut Checker) {
    for p in [2, 3, 5] {
        let ctx = FieldCtx::prime(p).expect("prime");
        for a in 1..=2 {
            let b = basic_rep(&ctx, a);
            if let Some(ds) = c.ok(direct_sum(b.rep(), b.rep()), || "direct sum".into()) {
                if let Some(v) = c.ok(classify(&ds), || format!("classify basic({a})^2, p={p}")) {
                    c.eq(v, ChiReduction::Zero { fixed_dim: 2 }, || {
                        format!("basic({a}) ⊕ basic({a}) at p={p}")
                    });
                }
            }
            let line = trivial_rep(&ctx, 1, a);
            if let Some(ds) = c.ok(direct_sum(b.rep(), &line), || "direct sum".into()) {
                if let Some(v) = c.ok(classify(&ds), || format!("classify basic({a}) ⊕ 1")) {
                    c.check(v.is_zero(), || format!("basic({a}) ⊕ 1 at p={p} not Zero"));
                }
            }
        }
        for (a, b) in [(1, 1), (1, 2), (2, 1)] {
            if let Some(w) = c.ok(wedge_sum(&basic_rep(&ctx, a), &basic_rep(&ctx, b)), || {
                "wedge".into()
            }) {
                match classify(w.rep()) {
                    Ok(ChiReduction::Reduced { quotient_rank, .. }) => {
                        c.eq(quotient_rank, a + b, || {
                            format!("rank of basic({a}) ∨ basic({b})")
                        })
                    }
                    other => c.fail(format!("basic({a}) ∨ basic({b}) at p={p}: {other:?}")),
                }
            }
        }
    }

    for p in [2, 3] {
        let ctx = FieldCtx::prime(p).expect("prime");
        for n in 1..=2 {
            let Some(reg) = c.ok(regular_rep(&ctx, n), || format!("regular_rep({p},{n})")) else {
                continue;
            };
            for k in 1..=2 * (p.pow(n as u32) - 1) {
                let got = c.ok(chi_of_rep(&reg, k), || {
                    format!("chi of regular({p},{n}) k={k}")
                });
                let want = c.ok(chi_via_power_sum(p, n, k), || "power sum".into());
                if let (Some(g), Some(w)) = (got, want) {
                    c.eq(g, w, || format!("regular vs basic, p={p} n={n} k={k}"));
                }
            }
        }
    }

    // redundant generators: F_p^3 acting through (a, b, c) ↦ (a, b + c)
    let proj = vec![vec![1, 0, 0], vec![0, 1, 1]];
    for p in [2, 3] {
        let ctx = FieldCtx::prime(p).expect("prime");
        let Some(pb) = c.ok(pullback(basic_rep(&ctx, 2).rep(), &proj), || {
            "pullback".into()
        }) else {
            continue;
        };
        match classify(&pb) {
            Ok(ChiReduction::Reduced {
                quotient_rank,
                projection,
                ..
            }) => {
                c.eq(quotient_rank, 2, || format!("pullback rank at p={p}"));
                c.eq(&projection, &proj, || {
                    format!("pullback projection at p={p}")
                });
            }
            other => c.fail(format!("pullback at p={p}: {other:?}")),
        }
        for k in 1..=2 * (p * p - 1) {
            let got = c.ok(chi_of_rep(&pb, k), || format!("chi of pullback k={k}"));
            let want = c.ok(pulled_back_power_sum(p, &proj, k), || "oracle".into());
            if let (Some(g), Some(w)) = (got, want) {
                c.eq(g, w, || format!("pullback chi p={p} k={k}"));
            }
        }
    }
}

fn arithmetic_suite(_: Profile, c: &mut Checker) {
    let f = oracles::factorials(400);
    let primes = [2, 3, 5, 7];
    for m in 0..=300u64 {
        for k in 0..=m {
            for p in primes {
                c.eq(
                    lucas_binomial(p, m, k),
                    oracles::binomial_mod(&f, m, k, p),
                    || format!("C({m},{k}) mod {p}"),
                );
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    for a in 0..=100 {
        for b in 0..=100 {
            tuples.push(vec![a, b]);
        }
    }
    for a in 0..=20 {
        for b in 0..=20 {
            for d in 0..=20 {
                tuples.push(vec![a, b, d]);
            }
        }
    }
    use rand::Rng;
    for _ in 0..5000 {
        let len = rng.gen_range(1..=4);
        tuples.push((0..len).map(|_| rng.gen_range(0..=100)).collect());
    }
    for parts in &tuples {
        for p in primes {
            c.eq(
                multinomial_mod_p(p, parts),
                oracles::multinomial_mod(&f, parts, p),
                || format!("multinomial {parts:?} mod {p}"),
            );
        }
    }

    const SCAN: u64 = 200_000;
    for p in primes {
        for s in 0..=40 {
            let got = min_m_for_digit_sum(p, s);
            c.eq(got, oracles::min_m_dp(p, s), || {
                format!("min m with s_{p}(m) = {s}, DP")
            });
            match got {
                Some(m) if m <= SCAN as u128 => {
                    c.eq(Some(m as u64), oracles::min_m_scan(p, s, SCAN), || {
                        format!("min m with s_{p}(m) = {s}, scan")
                    });
                }
                _ => c.eq(oracles::min_m_scan(p, s, SCAN), None, || {
                    format!("no m ≤ {SCAN} with s_{p}(m) = {s}")
                }),
            }
        }
    }

    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for a in 0..=8u32 {
            for b in 0..=a {
                let g = gaussian_binomial(q, a, b);
                c.eq(&g, &oracles::gaussian_pascal(q, a, b), || {
                    format!("({a} choose {b})_{q} vs q-Pascal")
                });
                c.check(&g % q == 1u32.into(), || {
                    format!("({a} choose {b})_{q} not ≡ 1 mod {q}")
                });
            }
        }
    }
}

fn witness_suite(_: Profile, c: &mut Checker) {
    let f = oracles::factorials(400);
    for p in [2u64, 3, 5] {
        for r in 1..=3 {
            let ctx = CohCtx::new(p, r).expect("small field");
            for n in 1..=3 {
                let mut kinds = vec![WitnessKind::YPower];
                if p != 2 {
                    kinds.push(WitnessKind::Mixed);
                }
                let pn = p.pow(n as u32);
                for kind in kinds {
                    let label = format!("{kind:?} p={p} r={r} n={n}");
                    let (Some(alpha), Some(split)) = (
                        c.ok(witness_alpha(&ctx, n, kind), || label.clone()),
                        c.ok(witness_splitting(&ctx, n, kind), || label.clone()),
                    ) else {
                        continue;
                    };
                    let oracle = oracles::chi_term_oracle(&ctx, &f, &alpha, &split);
                    c.check(matches!(oracle, Some(x) if x != 0), || {
                        format!("{label}: splitting not admissible with nonzero coefficient")
                    });
                    if let Some(lib) =
                        c.ok(term_coefficient(&ctx, &alpha, &split), || label.clone())
                    {
                        c.eq(Some(lib), oracle, || format!("{label}: coefficient"));
                    }
                    let rr = r as u64;
                    let closed = match (p, kind) {
                        (2, _) => rr * (pn - 1),
                        (_, WitnessKind::YPower) => 2 * rr * (pn - 1),
                        (_, WitnessKind::Mixed) => rr * (2 * pn - 2 * pn / p - 1),
                    };
                    c.eq(ctx.degree(&alpha), closed, || format!("{label}: degree"));
                    c.eq(witness_degree(p, r, n, kind).ok(), Some(closed), || {
                        format!("{label}: witness_degree")
                    });
                    if ctx.q().pow(n as u32) <= 125 {
                        c.eq(is_chi_nonzero(&ctx, &alpha, n).ok(), Some(true), || {
                            format!("{label}: is_chi_nonzero")
                        });
                    }
                }
                if let Some(rows) = c.ok(universal_table(&ctx, n), || {
                    format!("table p={p} r={r} n={n}")
                }) {
                    c.eq(
                        rows.len() as u64,
                        (pn - 1) * if p == 2 { 1 } else { 2 },
                        || format!("table rows p={p} r={r} n={n}"),
                    );
                }
            }
        }
    }
}
