use super::field::{FieldCtx, FieldElem};
use super::matrix::{kernel, rref_in_place, Matrix, Vector};
use crate::error::{Error, Result};

/// A subspace of F_q^n stored by its reduced row-echelon basis, so two subspaces
/// are equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ctx: &FieldCtx, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                (0..ambient_dim)
                    .map(|j| if i == j { ctx.one() } else { ctx.zero() })
                    .collect()
            })
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn span(ctx: &FieldCtx, ambient_dim: usize, mut vectors: Vec<Vector>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        rref_in_place(ctx, &mut vectors, ambient_dim);
        Ok(Self {
            ambient_dim,
            basis: vectors,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    /// Coordinates of the standard complement: the non-pivot columns.
    pub fn complement_columns(&self) -> Vec<usize> {
        let piv = self.pivots();
        (0..self.ambient_dim).filter(|c| !piv.contains(c)).collect()
    }

    /// `v` minus its component along the basis, read off at the pivot columns.
    /// The result vanishes at every pivot column.
    pub fn reduce(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Vector {
        let mut out = v.to_vec();
        for (row, pc) in self.basis.iter().zip(self.pivots()) {
            let c = out[pc].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                *x = ctx.sub(x, &ctx.mul(&c, y));
            }
        }
        out
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[FieldElem]) -> bool {
        v.len() == self.ambient_dim && self.reduce(ctx, v).iter().all(FieldElem::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Option<Vector> {
        if !self.contains(ctx, v) {
            return None;
        }
        Some(self.pivots().iter().map(|&pc| v[pc].clone()).collect())
    }

    /// Coordinates of the coset `v + S` along the standard complement.
    pub fn quotient_coordinates(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Vector {
        let red = self.reduce(ctx, v);
        self.complement_columns()
            .into_iter()
            .map(|c| red[c].clone())
            .collect()
    }

    pub fn is_subspace_of(&self, ctx: &FieldCtx, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(ctx, v))
    }

    pub fn sum(&self, ctx: &FieldCtx, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::span(ctx, self.ambient_dim, vecs)
    }

    /// `{w : w · v = 0 for all v in S}` under the standard bilinear pairing.
    pub fn annihilator(&self, ctx: &FieldCtx) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(ctx, self.ambient_dim);
        }
        let m = Matrix::from_rows(self.basis.clone(), self.ambient_dim)
            .expect("basis rows have ambient length");
        kernel(ctx, &m)
    }

    /// Span of all `u ⊗ v` (Kronecker order) for `u` in `self`, `v` in `other`.
    pub fn tensor(&self, ctx: &FieldCtx, other: &Subspace) -> Subspace {
        let n = self.ambient_dim * other.ambient_dim;
        let vecs = self
            .basis
            .iter()
            .flat_map(|u| {
                other.basis.iter().map(move |v| {
                    u.iter()
                        .flat_map(|a| v.iter().map(move |b| ctx.mul(a, b)))
                        .collect::<Vector>()
                })
            })
            .collect();
        Subspace::span(ctx, n, vecs).expect("tensor vectors have product length")
    }

    /// True if the stored basis is in reduced row-echelon form.
    pub fn is_canonical(&self, ctx: &FieldCtx) -> bool {
        let mut rows = self.basis.clone();
        if rows.iter().any(|r| r.iter().all(FieldElem::is_zero)) {
            return false;
        }
        rref_in_place(ctx, &mut rows, self.ambient_dim);
        rows == self.basis
    }
}
