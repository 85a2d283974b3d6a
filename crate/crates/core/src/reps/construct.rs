use super::{filtration::quotient, PointedRep, Rep};
use crate::dickson::linear_forms;
use crate::error::{Error, Result};
use crate::ff::prime::small_binomial;
use crate::ff::{FieldCtx, Matrix, Subspace};

/// t^k in the power basis of F_q.
fn t_power(ctx: &FieldCtx, k: usize) -> crate::ff::FieldElem {
    ctx.from_index(ctx.p().pow(k as u32))
}

/// `s` copies of the identity on F_q^dim.
pub fn trivial_rep(ctx: &FieldCtx, dim: usize, s: usize) -> Rep {
    Rep::from_parts(ctx.clone(), dim, vec![Matrix::identity(ctx, dim); s])
}

/// The basic representation F_q ⊕ (F_q^n)^* of F_q^n, with basepoint e_0.
///
/// F_q^n is presented as F_p^{rn}: generator i·r + k is the vector t^k e_i, acting
/// by e_{i+1} ↦ e_{i+1} + t^k e_0.
pub fn basic_rep(ctx: &FieldCtx, n: usize) -> PointedRep {
    let r = ctx.r();
    let mut gens = Vec::with_capacity(n * r);
    for i in 0..n {
        for k in 0..r {
            let mut g = Matrix::identity(ctx, n + 1);
            g.set(0, i + 1, t_power(ctx, k));
            gens.push(g);
        }
    }
    let mut basepoint = vec![ctx.zero(); n + 1];
    basepoint[0] = ctx.one();
    PointedRep::new(Rep::from_parts(ctx.clone(), n + 1, gens), basepoint).expect("e_0 is fixed")
}

/// Sym^{p-1}(F_q^2) as a representation of F_q = F_p^r, on the basis
/// e_1^{p-1-j} e_2^j, with a ∈ F_q acting by e_2 ↦ e_2 + a e_1.
pub fn sym_power_rep(ctx: &FieldCtx) -> Rep {
    let p = ctx.p() as usize;
    let gens = (0..ctx.r())
        .map(|k| {
            let a = t_power(ctx, k);
            let mut g = Matrix::zeros(ctx, p, p);
            for j in 0..p {
                for l in 0..=j {
                    let c = small_binomial(j as u64, l as u64, ctx.p());
                    g.set(j - l, j, ctx.scale(c, &ctx.pow(&a, l as u64)));
                }
            }
            g
        })
        .collect();
    Rep::from_parts(ctx.clone(), p, gens)
}

/// The n-fold external tensor power of [`sym_power_rep`], a representation of F_q^n
/// of dimension p^n.
pub fn big_rep(ctx: &FieldCtx, n: usize) -> Result<Rep> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let xi = sym_power_rep(ctx);
    let mut out = xi.clone();
    for _ in 1..n {
        out = tensor_rep(&out, &xi)?;
    }
    Ok(out)
}

fn same_field(a: &Rep, b: &Rep) -> Result<()> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch(
            "representations over different fields".into(),
        ));
    }
    Ok(())
}

/// External tensor product, a representation of F_p^{s1+s2}: generators g ⊗ 1 then
/// 1 ⊗ h, with u_i ⊗ v_j at index i·dim2 + j.
pub fn tensor_rep(a: &Rep, b: &Rep) -> Result<Rep> {
    same_field(a, b)?;
    let ctx = a.ctx();
    let ia = Matrix::identity(ctx, a.dim());
    let ib = Matrix::identity(ctx, b.dim());
    let gens = a
        .generators()
        .iter()
        .map(|g| g.kron(ctx, &ib))
        .chain(b.generators().iter().map(|h| ia.kron(ctx, h)))
        .collect();
    Ok(Rep::from_parts(ctx.clone(), a.dim() * b.dim(), gens))
}

/// Direct sum of two representations of the same group (equal generator counts).
pub fn direct_sum(a: &Rep, b: &Rep) -> Result<Rep> {
    same_field(a, b)?;
    if a.rank() != b.rank() {
        return Err(Error::ContextMismatch(format!(
            "direct sum needs the same group; ranks {} and {}",
            a.rank(),
            b.rank()
        )));
    }
    let ctx = a.ctx();
    let gens = a
        .generators()
        .iter()
        .zip(b.generators())
        .map(|(g, h)| Matrix::block_diag(ctx, g, h))
        .collect();
    Ok(Rep::from_parts(ctx.clone(), a.dim() + b.dim(), gens))
}

/// The wedge sum of pointed representations of G and H, a pointed representation
/// of G × H: the external direct sum modulo the line through (v_0, −w_0).
pub fn wedge_sum(a: &PointedRep, b: &PointedRep) -> Result<PointedRep> {
    let (ra, rb) = (a.rep(), b.rep());
    same_field(ra, rb)?;
    let ctx = ra.ctx();
    let ia = Matrix::identity(ctx, ra.dim());
    let ib = Matrix::identity(ctx, rb.dim());
    let gens: Vec<Matrix> = ra
        .generators()
        .iter()
        .map(|g| Matrix::block_diag(ctx, g, &ib))
        .chain(
            rb.generators()
                .iter()
                .map(|h| Matrix::block_diag(ctx, &ia, h)),
        )
        .collect();
    let dim = ra.dim() + rb.dim();
    let sum = Rep::from_parts(ctx.clone(), dim, gens);

    let mut line = a.basepoint().to_vec();
    line.extend(b.basepoint().iter().map(|x| ctx.neg(x)));
    let s = Subspace::span(ctx, dim, vec![line])?;
    let q = quotient(&sum, &s)?;
    let mut v0 = a.basepoint().to_vec();
    v0.extend(std::iter::repeat_n(ctx.zero(), rb.dim()));
    let basepoint = s.quotient_coordinates(ctx, &v0);
    PointedRep::new(q, basepoint)
}

/// The contragredient representation: each generator replaced by its inverse transpose.
pub fn dual_rep(rep: &Rep) -> Rep {
    let ctx = rep.ctx();
    let gens = rep
        .generators()
        .iter()
        .map(|g| {
            g.inverse(ctx)
                .expect("generators are invertible")
                .transpose()
        })
        .collect();
    Rep::from_parts(ctx.clone(), rep.dim(), gens)
}

/// The regular representation of F_p^n by translations (r = 1). Group elements are
/// indexed with the first coordinate most significant.
pub fn regular_rep(ctx: &FieldCtx, n: usize) -> Result<Rep> {
    if ctx.r() != 1 {
        return Err(Error::Unsupported(
            "the regular representation is built over the prime field only".into(),
        ));
    }
    let p = ctx.p();
    let elems = linear_forms(p, n);
    let dim = elems.len();
    let index = |c: &[u64]| {
        c.iter()
            .fold(0usize, |acc, &x| acc * p as usize + x as usize)
    };
    let gens = (0..n)
        .map(|j| {
            let mut g = Matrix::zeros(ctx, dim, dim);
            for (col, c) in elems.iter().enumerate() {
                let mut moved = c.clone();
                moved[j] = (moved[j] + 1) % p;
                g.set(index(&moved), col, ctx.one());
            }
            g
        })
        .collect();
    Ok(Rep::from_parts(ctx.clone(), dim, gens))
}

/// Restriction along the homomorphism F_p^s → F_p^t given by the t × s matrix `c`:
/// new generator j acts as Π_i g_i^{c[i][j]}.
pub fn pullback(rep: &Rep, c: &[Vec<u64>]) -> Result<Rep> {
    if c.len() != rep.rank() {
        return Err(Error::DimensionMismatch {
            expected: rep.rank(),
            found: c.len(),
        });
    }
    let s = c.first().map_or(0, |row| row.len());
    if c.iter().any(|row| row.len() != s) {
        return Err(Error::InvalidArgument("ragged homomorphism matrix".into()));
    }
    let gens = (0..s)
        .map(|j| {
            let exps: Vec<u64> = c.iter().map(|row| row[j]).collect();
            rep.element(&exps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Rep::from_parts(rep.ctx().clone(), rep.dim(), gens))
}

/// The same representation in the basis given by `t`: generators become t g t^{-1}.
pub fn conjugate(rep: &Rep, t: &Matrix) -> Result<Rep> {
    let ctx = rep.ctx();
    let tinv = t.inverse(ctx)?;
    let gens = rep
        .generators()
        .iter()
        .map(|g| t.mul(ctx, g)?.mul(ctx, &tinv))
        .collect::<Result<Vec<_>>>()?;
    Ok(Rep::from_parts(ctx.clone(), rep.dim(), gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_rep_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let b = basic_rep(&f2, 1);
        assert_eq!(
            b.rep().generators(),
            &[Matrix::from_ints(&f2, &[&[1, 1], &[0, 1]])]
        );
        let f3 = FieldCtx::prime(3).unwrap();
        let b = basic_rep(&f3, 2);
        assert_eq!(b.rep().rank(), 2);
        assert_eq!(
            b.rep().generators()[1],
            Matrix::from_ints(&f3, &[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]])
        );
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(basic_rep(&f4, 2).rep().rank(), 4);
    }

    #[test]
    fn sym_power_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        let xi = sym_power_rep(&f3);
        assert_eq!(
            xi.generators(),
            &[Matrix::from_ints(
                &f3,
                &[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]]
            )]
        );
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(
            sym_power_rep(&f2).generators(),
            &[Matrix::from_ints(&f2, &[&[1, 1], &[0, 1]])]
        );
        assert_eq!(big_rep(&f3, 2).unwrap().dim(), 9);
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert!(sym_power_rep(&f9).violations().is_empty());
        assert!(big_rep(&FieldCtx::new(5, 1).unwrap(), 2)
            .unwrap()
            .violations()
            .is_empty());
    }

    #[test]
    fn regular_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let reg = regular_rep(&f2, 1).unwrap();
        assert_eq!(
            reg.generators(),
            &[Matrix::from_ints(&f2, &[&[0, 1], &[1, 0]])]
        );
        assert!(regular_rep(&FieldCtx::new(2, 2).unwrap(), 1).is_err());
        let f3 = FieldCtx::prime(3).unwrap();
        assert!(regular_rep(&f3, 2).unwrap().violations().is_empty());
    }

    #[test]
    fn sums_and_duals_are_valid() {
        let f3 = FieldCtx::prime(3).unwrap();
        let b1 = basic_rep(&f3, 1);
        let b2 = basic_rep(&f3, 2);
        let ds = direct_sum(b1.rep(), b1.rep()).unwrap();
        assert!(ds.violations().is_empty());
        assert!(direct_sum(b1.rep(), b2.rep()).is_err());
        let w = wedge_sum(&b1, &b1).unwrap();
        assert_eq!(w.rep().dim(), 3);
        assert_eq!(w.rep().rank(), 2);
        assert!(w.rep().violations().is_empty());
        assert!(dual_rep(b2.rep()).violations().is_empty());
        let t = tensor_rep(b1.rep(), b2.rep()).unwrap();
        assert_eq!((t.dim(), t.rank()), (6, 3));
        assert!(t.violations().is_empty());
    }

    #[test]
    fn pullback_composes_generators() {
        let f2 = FieldCtx::prime(2).unwrap();
        let b = basic_rep(&f2, 2);
        let pb = pullback(b.rep(), &[vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(pb.rank(), 3);
        assert_eq!(pb.generators()[1], pb.generators()[2]);
        assert!(pb.violations().is_empty());
    }
}
