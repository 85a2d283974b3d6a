use rand::Rng;

use super::{
    basic_rep, big_rep, conjugate, direct_sum, dual_rep, j_filtration, pullback, quotient,
    regular_rep, restrict, sym_power_rep, trivial_rep, wedge_sum, Rep,
};
use crate::ff::{FieldCtx, Matrix};

fn random_base<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R, max_dim: usize) -> Rep {
    let p = ctx.p() as usize;
    loop {
        let rep = match rng.gen_range(0..6) {
            0 => basic_rep(ctx, rng.gen_range(1..=3)).rep().clone(),
            1 => sym_power_rep(ctx),
            2 if p * p <= max_dim => big_rep(ctx, 2).expect("n = 2"),
            3 if ctx.r() == 1 => regular_rep(ctx, rng.gen_range(1..=2)).expect("prime field"),
            4 => trivial_rep(ctx, rng.gen_range(1..=2), 1),
            5 => {
                let a = basic_rep(ctx, rng.gen_range(1..=2));
                let b = basic_rep(ctx, 1);
                wedge_sum(&a, &b).expect("same field").rep().clone()
            }
            _ => continue,
        };
        if rep.dim() <= max_dim {
            return rep;
        }
    }
}

fn random_hom<R: Rng + ?Sized>(p: u64, rng: &mut R, t: usize, s: usize) -> Vec<Vec<u64>> {
    (0..t)
        .map(|_| (0..s).map(|_| rng.gen_range(0..p)).collect())
        .collect()
}

fn random_invertible<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = Matrix::random(ctx, n, n, rng);
        if m.inverse(ctx).is_ok() {
            return m;
        }
    }
}

/// A random valid representation of F_p^s with 1 ≤ s ≤ `max_gens` and dimension at
/// most `max_dim`, built from the standard constructions and scrambled by a random
/// change of basis.
pub fn random_rep<R: Rng + ?Sized>(
    ctx: &FieldCtx,
    rng: &mut R,
    max_dim: usize,
    max_gens: usize,
) -> Rep {
    assert!(max_dim >= ctx.p() as usize && max_gens >= 1);
    let p = ctx.p();
    let mut rep = random_base(ctx, rng, max_dim);

    if rng.gen_bool(0.3) {
        let other = random_base(ctx, rng, max_dim);
        if rep.dim() + other.dim() <= max_dim {
            let s = rep.rank().max(1);
            let a = pullback(&rep, &random_hom(p, rng, rep.rank(), s)).expect("shape");
            let b = pullback(&other, &random_hom(p, rng, other.rank(), s)).expect("shape");
            rep = direct_sum(&a, &b).expect("same rank");
        }
    }
    if rng.gen_bool(0.3) {
        let chain = j_filtration(&rep).expect("valid rep");
        let stage = &chain[rng.gen_range(0..chain.len())];
        if stage.dim() > 0 && stage.dim() < rep.dim() {
            rep = if rng.gen_bool(0.5) {
                restrict(&rep, stage).expect("invariant")
            } else {
                quotient(&rep, stage).expect("invariant")
            };
        }
    }
    if rng.gen_bool(0.2) {
        rep = dual_rep(&rep);
    }
    let s = rng.gen_range(1..=max_gens);
    rep = pullback(&rep, &random_hom(p, rng, rep.rank(), s)).expect("shape");
    let t = random_invertible(ctx, rng, rep.dim());
    conjugate(&rep, &t).expect("invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{classify, j_filtration_by_augmentation};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_reps_are_valid_and_filtrations_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, r) in [(2, 1), (3, 1), (2, 2)] {
            let ctx = FieldCtx::new(p, r).unwrap();
            for _ in 0..20 {
                let rep = random_rep(&ctx, &mut rng, 8, 3);
                assert!(rep.violations().is_empty());
                assert!(rep.dim() <= 8 && (1..=3).contains(&rep.rank()));
                assert_eq!(
                    j_filtration(&rep).unwrap(),
                    j_filtration_by_augmentation(&rep).unwrap()
                );
                classify(&rep).unwrap();
            }
        }
    }
}
