//! Matrix representations of elementary abelian p-groups over F_q.
//!
//! A [`Rep`] lists s commuting matrices of order dividing p; the group acting is
//! always F_p^s, free on the listed generators.

mod classify;
mod construct;
mod filtration;
pub mod io;
mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FieldCtx, Matrix, Vector};

pub use classify::{chi_of_rep, classify, iso_to_basic, ChiReduction};
pub use construct::{
    basic_rep, big_rep, conjugate, direct_sum, dual_rep, pullback, regular_rep, sym_power_rep,
    tensor_rep, trivial_rep, wedge_sum,
};
pub use filtration::{
    fixed_space, j_filtration, j_filtration_by_augmentation, j_tensor_check, quotient, restrict,
};
pub use random::random_rep;

/// One reason a list of matrices fails to define a representation. Generator
/// indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    Shape {
        generator: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    NotInvertible {
        generator: usize,
    },
    WrongOrder {
        generator: usize,
        p: u64,
    },
    NotCommuting {
        first: usize,
        second: usize,
    },
    ZeroBasepoint,
    BasepointLength {
        found: usize,
        dim: usize,
    },
    BasepointNotFixed {
        generator: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape {
                generator,
                rows,
                cols,
                dim,
            } => write!(
                f,
                "generator {generator} is {rows}x{cols}, expected {dim}x{dim}"
            ),
            Violation::NotInvertible { generator } => {
                write!(f, "generator {generator} is not invertible")
            }
            Violation::WrongOrder { generator, p } => {
                write!(f, "generator {generator} does not satisfy g^{p} = 1")
            }
            Violation::NotCommuting { first, second } => {
                write!(f, "generators {first} and {second} do not commute")
            }
            Violation::ZeroBasepoint => write!(f, "basepoint is zero"),
            Violation::BasepointLength { found, dim } => {
                write!(f, "basepoint has length {found}, expected {dim}")
            }
            Violation::BasepointNotFixed { generator } => {
                write!(f, "basepoint is not fixed by generator {generator}")
            }
        }
    }
}

/// A representation of F_p^s on F_q^dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    ctx: FieldCtx,
    dim: usize,
    generators: Vec<Matrix>,
}

impl Rep {
    /// Build and validate a representation.
    pub fn new(ctx: FieldCtx, dim: usize, generators: Vec<Matrix>) -> Result<Self> {
        let rep = Self {
            ctx,
            dim,
            generators,
        };
        let v = rep.violations();
        if v.is_empty() {
            Ok(rep)
        } else {
            Err(Error::InvalidRep(v))
        }
    }

    /// For constructions that preserve validity by design.
    pub(crate) fn from_parts(ctx: FieldCtx, dim: usize, generators: Vec<Matrix>) -> Self {
        debug_assert!(
            Self {
                ctx: ctx.clone(),
                dim,
                generators: generators.clone()
            }
            .violations()
            .is_empty(),
            "construction produced an invalid representation"
        );
        Self {
            ctx,
            dim,
            generators,
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Rank s of the acting group F_p^s.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Every failure of shape, invertibility, order p and commutativity.
    pub fn violations(&self) -> Vec<Violation> {
        let ctx = &self.ctx;
        let mut out = Vec::new();
        let mut square_ok = vec![false; self.generators.len()];
        for (i, g) in self.generators.iter().enumerate() {
            if g.rows() != self.dim || g.cols() != self.dim {
                out.push(Violation::Shape {
                    generator: i,
                    rows: g.rows(),
                    cols: g.cols(),
                    dim: self.dim,
                });
                continue;
            }
            square_ok[i] = true;
            if g.inverse(ctx).is_err() {
                out.push(Violation::NotInvertible { generator: i });
                continue;
            }
            let gp = g.pow(ctx, ctx.p()).expect("square matrix");
            if !gp.is_identity(ctx) {
                out.push(Violation::WrongOrder {
                    generator: i,
                    p: ctx.p(),
                });
            }
        }
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if !(square_ok[i] && square_ok[j]) {
                    continue;
                }
                let (a, b) = (&self.generators[i], &self.generators[j]);
                if a.mul(ctx, b).expect("square") != b.mul(ctx, a).expect("square") {
                    out.push(Violation::NotCommuting {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        out
    }

    /// The action of the group element Π g_i^{e_i}.
    pub fn element(&self, exps: &[u64]) -> Result<Matrix> {
        if exps.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: exps.len(),
            });
        }
        let mut acc = Matrix::identity(&self.ctx, self.dim);
        for (g, &e) in self.generators.iter().zip(exps) {
            if e % self.ctx.p() != 0 {
                acc = acc.mul(&self.ctx, &g.pow(&self.ctx, e % self.ctx.p())?)?;
            }
        }
        Ok(acc)
    }
}

/// Validate a representation, listing every violation.
pub fn validate(rep: &Rep) -> std::result::Result<(), Vec<Violation>> {
    let v = rep.violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// A representation with a nonzero vector fixed by every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedRep {
    rep: Rep,
    basepoint: Vector,
}

impl PointedRep {
    pub fn new(rep: Rep, basepoint: Vector) -> Result<Self> {
        let v = basepoint_violations(&rep, &basepoint);
        if v.is_empty() {
            Ok(Self { rep, basepoint })
        } else {
            Err(Error::InvalidRep(v))
        }
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn basepoint(&self) -> &[crate::ff::FieldElem] {
        &self.basepoint
    }

    pub fn into_parts(self) -> (Rep, Vector) {
        (self.rep, self.basepoint)
    }
}

pub(crate) fn basepoint_violations(rep: &Rep, v: &[crate::ff::FieldElem]) -> Vec<Violation> {
    if v.len() != rep.dim() {
        return vec![Violation::BasepointLength {
            found: v.len(),
            dim: rep.dim(),
        }];
    }
    if v.iter().all(|x| x.is_zero()) {
        return vec![Violation::ZeroBasepoint];
    }
    let ctx = rep.ctx();
    rep.generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.apply(ctx, v).expect("square") != v)
        .map(|(i, _)| Violation::BasepointNotFixed { generator: i })
        .collect()
}
