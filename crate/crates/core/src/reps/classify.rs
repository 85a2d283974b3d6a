use serde::Serialize;

use super::{basic_rep, fixed_space, j_filtration, restrict, PointedRep, Rep};
use crate::dickson::{chi_via_power_sum, MultiPoly, MAX_VARS};
use crate::error::{Error, Result};
use crate::ff::{rref_in_place, FieldCtx, Matrix, Subspace};

/// How the characteristic classes of a representation reduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ChiReduction {
    /// The fixed space has dimension at least 2, so every class vanishes.
    Zero { fixed_dim: usize },
    /// The classes are pulled back from the basic representation of A/B, where B
    /// is the subgroup acting trivially on J_1.
    Reduced {
        quotient_rank: usize,
        /// Rows of the surjection F_p^s → F_p^m, in reduced echelon form.
        projection: Vec<Vec<u64>>,
        #[serde(skip)]
        basic_model: Option<PointedRep>,
        /// Change of basis taking J_1 (in its echelon basis) to the basic model.
        #[serde(skip)]
        conjugator: Option<Matrix>,
    },
}

impl ChiReduction {
    pub fn is_zero(&self) -> bool {
        matches!(self, ChiReduction::Zero { .. })
    }
}

/// F_p-coordinates of each (g_j − 1) restricted to `j1`, one column per generator.
fn constraint_rows(rep: &Rep, j1: &Subspace) -> Vec<Vec<u64>> {
    let ctx = rep.ctx();
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(rep.rank());
    for g in rep.generators() {
        let n = g.minus_identity(ctx);
        let mut col = Vec::new();
        for b in j1.basis() {
            for x in n.apply(ctx, b).expect("square") {
                col.extend_from_slice(x.coeffs());
            }
        }
        cols.push(col);
    }
    let len = cols.first().map_or(0, Vec::len);
    (0..len)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

/// The projection F_p^s → A/B as an RREF matrix with m rows.
fn projection(rep: &Rep, j1: &Subspace) -> Result<(Vec<Vec<u64>>, Vec<usize>)> {
    let fp = FieldCtx::prime(rep.ctx().p())?;
    let s = rep.rank();
    let mut rows: Vec<_> = constraint_rows(rep, j1)
        .into_iter()
        .map(|r| r.into_iter().map(|x| fp.from_int(x)).collect())
        .collect();
    let pivots = rref_in_place(&fp, &mut rows, s);
    let proj = rows
        .iter()
        .map(|r| r.iter().map(|x| x.coeffs()[0]).collect())
        .collect();
    Ok((proj, pivots))
}

/// Decide whether χ vanishes identically and, if not, find the reduction to a
/// basic representation.
pub fn classify(rep: &Rep) -> Result<ChiReduction> {
    if rep.dim() == 0 {
        return Err(Error::Precondition(
            "zero-dimensional representation".into(),
        ));
    }
    let j0 = fixed_space(rep);
    if j0.dim() >= 2 {
        return Ok(ChiReduction::Zero {
            fixed_dim: j0.dim(),
        });
    }
    let chain = j_filtration(rep)?;
    let j1 = chain[1.min(chain.len() - 1)].clone();
    let (proj, pivots) = projection(rep, &j1)?;
    let m = proj.len();

    let (basic_model, conjugator) = if rep.ctx().r() == 1 {
        let on_j1 = restrict(rep, &j1)?;
        if on_j1.dim() != m + 1 {
            return Err(Error::IdentityFailure(format!(
                "J_1 has dimension {} but the quotient group has rank {m}",
                on_j1.dim()
            )));
        }
        let quotient_action = Rep::from_parts(
            rep.ctx().clone(),
            on_j1.dim(),
            pivots
                .iter()
                .map(|&j| on_j1.generators()[j].clone())
                .collect(),
        );
        for (j, g) in on_j1.generators().iter().enumerate() {
            let col: Vec<u64> = proj.iter().map(|row| row[j]).collect();
            if &quotient_action.element(&col)? != g {
                return Err(Error::IdentityFailure(format!(
                    "generator {j} does not act on J_1 through the quotient"
                )));
            }
        }
        let t = iso_to_basic(&quotient_action)
            .map_err(|e| Error::IdentityFailure(format!("J_1 is not basic: {e}")))?;
        (Some(basic_rep(rep.ctx(), m)), Some(t))
    } else {
        (None, None)
    };
    Ok(ChiReduction::Reduced {
        quotient_rank: m,
        projection: proj,
        basic_model,
        conjugator,
    })
}

/// For a faithful representation with dim J_0 = 1 and J_1 the whole space, an
/// invertible T with T g T^{-1} equal to the matching generator of the basic
/// representation. Generators are matched by index i·r + k.
pub fn iso_to_basic(rep: &Rep) -> Result<Matrix> {
    let ctx = rep.ctx();
    let r = ctx.r();
    let s = rep.rank();
    let dim = rep.dim();
    if !s.is_multiple_of(r) || dim != s / r + 1 {
        return Err(Error::Precondition(format!(
            "{s} generators in dimension {dim} cannot match a basic representation over F_{}^{r}",
            ctx.p()
        )));
    }
    let n = s / r;
    let j0 = fixed_space(rep);
    if j0.dim() != 1 {
        return Err(Error::Precondition(format!(
            "fixed space has dimension {}",
            j0.dim()
        )));
    }
    let v0 = j0.basis()[0].clone();
    let pivot = j0.pivots()[0];
    let cols = j0.complement_columns();
    let ns: Vec<Matrix> = rep
        .generators()
        .iter()
        .map(|g| g.minus_identity(ctx))
        .collect();
    for (j, nm) in ns.iter().enumerate() {
        for c in 0..dim {
            if !j0.contains(ctx, &nm.column(c)) {
                return Err(Error::Precondition(format!(
                    "generator {j} moves a vector out of J_1"
                )));
            }
        }
    }

    // basis S = [v0, e_c ...]; g acts on e_c as e_c + ω v0
    let mut sm = Matrix::zeros(ctx, dim, dim);
    for i in 0..dim {
        sm.set(i, 0, v0[i].clone());
    }
    for (k, &c) in cols.iter().enumerate() {
        sm.set(c, k + 1, ctx.one());
    }
    let mut d = Matrix::identity(ctx, dim);
    for i in 0..n {
        for (k, &c) in cols.iter().enumerate() {
            d.set(i + 1, k + 1, ns[i * r].get(pivot, c).clone());
        }
    }
    d.inverse(ctx)
        .map_err(|_| Error::Precondition("representation is not faithful".into()))?;
    let t = d.mul(ctx, &sm.inverse(ctx)?)?;
    let tinv = t.inverse(ctx)?;
    let basic = basic_rep(ctx, n);
    for (j, (g, b)) in rep
        .generators()
        .iter()
        .zip(basic.rep().generators())
        .enumerate()
    {
        if &t.mul(ctx, g)?.mul(ctx, &tinv)? != b {
            return Err(Error::Precondition(format!(
                "generator {j} does not match the basic action"
            )));
        }
    }
    Ok(t)
}

/// χ_{y^k} of a representation over F_p, as a polynomial in the dual coordinates
/// w_1..w_s of F_p^s.
pub fn chi_of_rep(rep: &Rep, k: u64) -> Result<MultiPoly> {
    let p = rep.ctx().p();
    if rep.ctx().r() != 1 {
        return Err(Error::Unsupported(
            "polynomial classes are computed over the prime field only".into(),
        ));
    }
    let s = rep.rank();
    if s > MAX_VARS {
        return Err(Error::Unsupported(format!(
            "at most {MAX_VARS} generators, found {s}"
        )));
    }
    match classify(rep)? {
        ChiReduction::Zero { .. } => Ok(MultiPoly::zero(p, s)),
        ChiReduction::Reduced { projection, .. } => {
            if projection.is_empty() {
                return Ok(MultiPoly::zero(p, s));
            }
            let base = chi_via_power_sum(p, projection.len(), k)?;
            let images: Vec<MultiPoly> = projection
                .iter()
                .map(|row| MultiPoly::linear_form(p, row))
                .collect();
            base.substitute(&images)
        }
    }
}
