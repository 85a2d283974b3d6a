use std::fmt;

use rand::Rng;

use super::field::{FieldCtx, FieldElem};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over F_q. The field context is passed to each operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

pub type Vector = Vec<FieldElem>;

impl Matrix {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    /// Build a matrix of prime-field residues (embedded as constants).
    pub fn from_ints(ctx: &FieldCtx, rows: &[&[u64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs = rows
            .iter()
            .map(|r| r.iter().map(|&x| ctx.from_int(x)).collect())
            .collect();
        Self::from_rows(vecs, cols).expect("ragged integer matrix")
    }

    pub fn random<R: Rng + ?Sized>(ctx: &FieldCtx, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| ctx.random(rng)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = ctx.add(out.get(i, j), &ctx.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(ctx.zero(), |acc, (a, b)| ctx.add(&acc, &ctx.mul(a, b)))
            })
            .collect())
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(&FieldElem, &FieldElem) -> FieldElem,
    ) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| ctx.add(a, b))
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| ctx.sub(a, b))
    }

    /// `self - I` for a square matrix.
    pub fn minus_identity(&self, ctx: &FieldCtx) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = ctx.sub(m.get(i, i), &ctx.one());
            m.set(i, i, v);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElem::is_zero)
    }

    pub fn is_identity(&self, ctx: &FieldCtx) -> bool {
        self.is_square() && self.minus_identity(ctx).is_zero()
    }

    pub fn pow(&self, ctx: &FieldCtx, mut e: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut acc = Matrix::identity(ctx, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base)?;
            }
            base = base.mul(ctx, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Kronecker product, with `(u ⊗ v)[i * dim(v) + j] = u[i] v[j]`.
    pub fn kron(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(ctx, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            ctx.mul(a, other.get(k, l)),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(ctx: &FieldCtx, a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(ctx, a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }

    /// Stack matrices with a common column count on top of each other.
    pub fn vstack(mats: &[Matrix], cols: usize) -> Result<Matrix> {
        let mut rows = Vec::new();
        for m in mats {
            if m.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: m.cols,
                });
            }
            rows.extend(m.row_vecs());
        }
        Matrix::from_rows(rows, cols)
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { ctx.one() } else { ctx.zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(ctx, &mut aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::ZeroDivision);
        }
        let rows = aug.into_iter().map(|row| row[n..].to_vec()).collect();
        Matrix::from_rows(rows, n)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Gauss-Jordan elimination on a list of rows. Leaves the nonzero rows in reduced
/// row-echelon form (pivots normalized to 1, zero rows dropped) and returns the
/// pivot columns.
pub fn rref_in_place(ctx: &FieldCtx, rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(found) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = ctx.inv(&rows[next][col]).expect("pivot is nonzero");
        if !ctx.is_one(&rows[next][col]) {
            for x in rows[next].iter_mut() {
                *x = ctx.mul(x, &inv);
            }
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = ctx.sub(x, &ctx.mul(&factor, y));
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

pub fn rank(ctx: &FieldCtx, m: &Matrix) -> usize {
    let mut rows = m.row_vecs();
    rref_in_place(ctx, &mut rows, m.cols).len()
}

/// The null space `{v : M v = 0}`.
pub fn kernel(ctx: &FieldCtx, m: &Matrix) -> Subspace {
    let mut rows = m.row_vecs();
    let pivots = rref_in_place(ctx, &mut rows, m.cols);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![ctx.zero(); m.cols];
            v[f] = ctx.one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = ctx.neg(&row[f]);
            }
            v
        })
        .collect();
    Subspace::span(ctx, m.cols, basis).expect("kernel vectors have the ambient length")
}

/// `{v : M v ∈ S}`.
pub fn preimage(ctx: &FieldCtx, m: &Matrix, s: &Subspace) -> Result<Subspace> {
    if s.ambient_dim() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: s.ambient_dim(),
        });
    }
    // M v lies in S iff every functional vanishing on S vanishes on M v
    let ann = s.annihilator(ctx);
    if ann.dim() == 0 {
        return Ok(Subspace::full(ctx, m.cols));
    }
    let w = Matrix::from_rows(ann.basis().to_vec(), m.rows)?;
    Ok(kernel(ctx, &w.mul(ctx, m)?))
}

/// Intersection via the kernel of the stacked-basis system `Σ a_i u_i - Σ b_j w_j = 0`.
pub fn intersect(ctx: &FieldCtx, s1: &Subspace, s2: &Subspace) -> Result<Subspace> {
    let n = s1.ambient_dim();
    if s2.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s2.ambient_dim(),
        });
    }
    let (d1, d2) = (s1.dim(), s2.dim());
    if d1 == 0 || d2 == 0 {
        return Ok(Subspace::zero(n));
    }
    // columns are the basis vectors of s1 followed by the negated basis of s2
    let mut sys = Matrix::zeros(ctx, n, d1 + d2);
    for (j, u) in s1.basis().iter().enumerate() {
        for i in 0..n {
            sys.set(i, j, u[i].clone());
        }
    }
    for (j, w) in s2.basis().iter().enumerate() {
        for i in 0..n {
            sys.set(i, d1 + j, ctx.neg(&w[i]));
        }
    }
    let ker = kernel(ctx, &sys);
    let vecs = ker
        .basis()
        .iter()
        .map(|coef| {
            let mut v = vec![ctx.zero(); n];
            for (a, u) in coef[..d1].iter().zip(s1.basis()) {
                for (x, y) in v.iter_mut().zip(u) {
                    *x = ctx.add(x, &ctx.mul(a, y));
                }
            }
            v
        })
        .collect();
    Subspace::span(ctx, n, vecs)
}

/// One solution of `M x = b`, or `None` if the system is inconsistent.
pub fn solve(ctx: &FieldCtx, m: &Matrix, b: &[FieldElem]) -> Result<Option<Vector>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    let mut aug: Vec<Vector> = (0..m.rows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(ctx, &mut aug, m.cols + 1);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![ctx.zero(); m.cols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[m.cols].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kernel_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let zero = Matrix::zeros(&f2, 2, 2);
        assert_eq!(kernel(&f2, &zero), Subspace::full(&f2, 2));

        let ones = Matrix::from_ints(&f2, &[&[1, 1], &[1, 1]]);
        let k = kernel(&f2, &ones);
        assert_eq!(
            k,
            Subspace::span(&f2, 2, vec![vec![f2.one(), f2.one()]]).unwrap()
        );

        for ctx in [f2.clone(), FieldCtx::new(3, 2).unwrap()] {
            assert_eq!(kernel(&ctx, &Matrix::identity(&ctx, 3)).dim(), 0);
        }
    }

    #[test]
    fn preimage_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        let m = Matrix::from_ints(&f3, &[&[1, 0], &[0, 0]]);
        let s = Subspace::span(&f3, 2, vec![vec![f3.one(), f3.zero()]]).unwrap();
        assert_eq!(preimage(&f3, &m, &s).unwrap(), Subspace::full(&f3, 2));
        assert_eq!(
            preimage(&f3, &m, &Subspace::full(&f3, 2)).unwrap(),
            Subspace::full(&f3, 2)
        );
        assert_eq!(
            preimage(&f3, &m, &Subspace::zero(2)).unwrap(),
            kernel(&f3, &m)
        );
        assert!(preimage(&f3, &m, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn intersect_and_solve_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let e1 = Subspace::span(&f2, 2, vec![vec![f2.one(), f2.zero()]]).unwrap();
        let e2 = Subspace::span(&f2, 2, vec![vec![f2.zero(), f2.one()]]).unwrap();
        assert_eq!(intersect(&f2, &e1, &e1).unwrap(), e1);
        assert_eq!(intersect(&f2, &e1, &e2).unwrap(), Subspace::zero(2));
        assert!(intersect(&f2, &e1, &Subspace::zero(3)).is_err());

        let f9 = FieldCtx::new(3, 2).unwrap();
        let b = vec![f9.generator(), f9.one(), f9.zero()];
        assert_eq!(
            solve(&f9, &Matrix::identity(&f9, 3), &b).unwrap(),
            Some(b.clone())
        );
        let sing = Matrix::from_ints(&f9, &[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&f9, &sing, &[f9.one(), f9.zero()]).unwrap(), None);
    }

    #[test]
    fn rank_nullity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let ctx = FieldCtx::new(p, r).unwrap();
            for _ in 0..500 {
                let rows = rng.gen_range(1..6);
                let cols = rng.gen_range(1..6);
                let mut m = Matrix::random(&ctx, rows, cols, &mut rng);
                // sprinkle in rank deficiency
                if rng.gen_bool(0.5) && rows > 1 {
                    for j in 0..cols {
                        let v = m.get(0, j).clone();
                        m.set(rows - 1, j, v);
                    }
                }
                let k = kernel(&ctx, &m);
                assert_eq!(rank(&ctx, &m) + k.dim(), cols);
                assert!(k.is_canonical(&ctx));
                for v in k.basis() {
                    assert!(m.apply(&ctx, v).unwrap().iter().all(FieldElem::is_zero));
                }
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ctx = FieldCtx::new(2, 3).unwrap();
        let mut found = 0;
        while found < 50 {
            let m = Matrix::random(&ctx, 4, 4, &mut rng);
            match m.inverse(&ctx) {
                Ok(inv) => {
                    assert!(m.mul(&ctx, &inv).unwrap().is_identity(&ctx));
                    found += 1;
                }
                Err(Error::ZeroDivision) => assert!(rank(&ctx, &m) < 4),
                Err(e) => panic!("{e}"),
            }
        }
    }
}
