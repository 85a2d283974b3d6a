use itertools::Itertools;

use super::{tensor_rep, Rep};
use crate::error::{Error, Result};
use crate::ff::{kernel, Matrix, Subspace};

/// Vectors fixed by every generator.
pub fn fixed_space(rep: &Rep) -> Subspace {
    let ctx = rep.ctx();
    if rep.rank() == 0 {
        return Subspace::full(ctx, rep.dim());
    }
    let ns: Vec<Matrix> = rep
        .generators()
        .iter()
        .map(|g| g.minus_identity(ctx))
        .collect();
    let stacked = Matrix::vstack(&ns, rep.dim()).expect("square generators");
    kernel(ctx, &stacked)
}

fn check_invariant(rep: &Rep, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found: s.ambient_dim(),
        });
    }
    let ctx = rep.ctx();
    for (i, g) in rep.generators().iter().enumerate() {
        for b in s.basis() {
            if !s.contains(ctx, &g.apply(ctx, b)?) {
                return Err(Error::NotInvariantSubspace(i));
            }
        }
    }
    Ok(())
}

/// The subrepresentation on an invariant subspace, in its echelon basis.
pub fn restrict(rep: &Rep, s: &Subspace) -> Result<Rep> {
    check_invariant(rep, s)?;
    let ctx = rep.ctx();
    let d = s.dim();
    let mut gens = Vec::with_capacity(rep.rank());
    for g in rep.generators() {
        let mut m = Matrix::zeros(ctx, d, d);
        for (j, b) in s.basis().iter().enumerate() {
            let coords = s.coordinates(ctx, &g.apply(ctx, b)?).expect("invariant");
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        gens.push(m);
    }
    Ok(Rep::from_parts(ctx.clone(), d, gens))
}

/// The quotient representation V/S, on the cosets of the standard basis vectors
/// at the non-pivot columns of S.
pub fn quotient(rep: &Rep, s: &Subspace) -> Result<Rep> {
    check_invariant(rep, s)?;
    let ctx = rep.ctx();
    let cols = s.complement_columns();
    let d = cols.len();
    let mut gens = Vec::with_capacity(rep.rank());
    for g in rep.generators() {
        let mut m = Matrix::zeros(ctx, d, d);
        for (j, &c) in cols.iter().enumerate() {
            let coords = s.quotient_coordinates(ctx, &g.column(c));
            for (i, x) in coords.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        gens.push(m);
    }
    Ok(Rep::from_parts(ctx.clone(), d, gens))
}

/// The filtration J_0 ⊂ J_1 ⊂ … ⊂ J_L = V with J_0 the fixed space and J_{i+1}
/// the preimage of the fixed space of V/J_i. The last entry is the whole space.
pub fn j_filtration(rep: &Rep) -> Result<Vec<Subspace>> {
    let ctx = rep.ctx();
    let dim = rep.dim();
    let mut chain = vec![fixed_space(rep)];
    loop {
        let cur = chain.last().expect("nonempty");
        if cur.dim() == dim {
            return Ok(chain);
        }
        let q = quotient(rep, cur)?;
        let fixed = fixed_space(&q);
        let cols = cur.complement_columns();
        let mut vecs = cur.basis().to_vec();
        for v in fixed.basis() {
            let mut lift = vec![ctx.zero(); dim];
            for (x, &c) in v.iter().zip(&cols) {
                lift[c] = x.clone();
            }
            vecs.push(lift);
        }
        let next = Subspace::span(ctx, dim, vecs)?;
        if next.dim() == cur.dim() {
            return Err(Error::Precondition(
                "filtration stalled below the whole space".into(),
            ));
        }
        chain.push(next);
    }
}

/// The same filtration as the annihilators of the powers of the augmentation
/// ideal: J_i is killed by every product of i+1 factors (g_j − 1).
pub fn j_filtration_by_augmentation(rep: &Rep) -> Result<Vec<Subspace>> {
    let ctx = rep.ctx();
    let dim = rep.dim();
    if dim == 0 {
        return Ok(vec![Subspace::zero(0)]);
    }
    if rep.rank() == 0 {
        return Ok(vec![Subspace::full(ctx, dim)]);
    }
    let ns: Vec<Matrix> = rep
        .generators()
        .iter()
        .map(|g| g.minus_identity(ctx))
        .collect();
    let mut chain: Vec<Subspace> = Vec::new();
    for len in 1..=dim {
        let mut vecs = Vec::new();
        for combo in (0..ns.len()).combinations_with_replacement(len) {
            let mut prod = ns[combo[0]].clone();
            for &j in &combo[1..] {
                prod = prod.mul(ctx, &ns[j])?;
            }
            vecs.extend(prod.row_vecs());
        }
        let stacked = Matrix::from_rows(vecs, dim)?;
        let j = kernel(ctx, &stacked);
        let full = j.dim() == dim;
        chain.push(j);
        if full {
            return Ok(chain);
        }
    }
    // (g − 1)^dim vanishes for unipotent g, so the loop always reaches the top
    Err(Error::Precondition(
        "augmentation powers did not reach zero".into(),
    ))
}

/// Compare J_i of the external tensor product with Σ_{a+b=i} J_a ⊗ J_b.
/// Returns both sides.
pub fn j_tensor_check(a: &Rep, b: &Rep, i: usize) -> Result<(Subspace, Subspace)> {
    let t = tensor_rep(a, b)?;
    let ctx = t.ctx();
    let stage = |chain: &[Subspace], k: usize| chain[k.min(chain.len() - 1)].clone();
    let ja = j_filtration(a)?;
    let jb = j_filtration(b)?;
    let jt = j_filtration(&t)?;
    let mut sum = Subspace::zero(t.dim());
    for k in 0..=i {
        sum = sum.sum(ctx, &stage(&ja, k).tensor(ctx, &stage(&jb, i - k)))?;
    }
    Ok((stage(&jt, i), sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldCtx;
    use crate::reps::{basic_rep, big_rep, direct_sum, regular_rep, sym_power_rep};

    fn dims(chain: &[Subspace]) -> Vec<usize> {
        chain.iter().map(Subspace::dim).collect()
    }

    #[test]
    fn regular_fixed_space_is_ones() {
        let f2 = FieldCtx::prime(2).unwrap();
        let reg = regular_rep(&f2, 1).unwrap();
        let j0 = fixed_space(&reg);
        assert_eq!(j0.basis(), &[vec![f2.one(), f2.one()]]);
        let f3 = FieldCtx::prime(3).unwrap();
        let reg = regular_rep(&f3, 2).unwrap();
        assert_eq!(fixed_space(&reg).dim(), 1);
        assert_eq!(dims(&j_filtration(&reg).unwrap()), vec![1, 3, 6, 8, 9]);
    }

    #[test]
    fn both_filtrations_agree() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f4 = FieldCtx::new(2, 2).unwrap();
        let reps = vec![
            basic_rep(&f3, 2).rep().clone(),
            big_rep(&f3, 2).unwrap(),
            regular_rep(&f3, 2).unwrap(),
            sym_power_rep(&f4),
            big_rep(&f4, 2).unwrap(),
            direct_sum(basic_rep(&f3, 1).rep(), &sym_power_rep(&f3)).unwrap(),
        ];
        for rep in reps {
            let a = j_filtration(&rep).unwrap();
            let b = j_filtration_by_augmentation(&rep).unwrap();
            assert_eq!(a, b);
            for w in a.windows(2) {
                assert!(w[0].dim() < w[1].dim());
                assert!(w[0].is_subspace_of(rep.ctx(), &w[1]));
            }
        }
    }

    #[test]
    fn restrict_and_quotient_reject_non_invariant() {
        let f2 = FieldCtx::prime(2).unwrap();
        let b = basic_rep(&f2, 1);
        let bad = Subspace::span(&f2, 2, vec![vec![f2.zero(), f2.one()]]).unwrap();
        assert_eq!(restrict(b.rep(), &bad), Err(Error::NotInvariantSubspace(0)));
        assert_eq!(quotient(b.rep(), &bad), Err(Error::NotInvariantSubspace(0)));
        let good = fixed_space(b.rep());
        assert_eq!(restrict(b.rep(), &good).unwrap().dim(), 1);
        assert_eq!(quotient(b.rep(), &good).unwrap().dim(), 1);
    }

    #[test]
    fn tensor_filtration_example() {
        let f3 = FieldCtx::prime(3).unwrap();
        let xi = sym_power_rep(&f3);
        let (lhs, rhs) = j_tensor_check(&xi, &xi, 1).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.dim(), 3);
        for i in 0..5 {
            let (lhs, rhs) = j_tensor_check(&xi, &xi, i).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
