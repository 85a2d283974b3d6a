use modchar::coalg::{apply_coproduct_at, coproduct, lucas_binomial, multinomial_mod_p, no_carry};
use modchar::ff::{FieldCtx, Matrix};
use modchar::mono::{CohCtx, Monomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = (u64, usize)> {
    prop::sample::select(vec![(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((p, r) in field(), i in 0u64..200, j in 0u64..200, k in 0u64..200) {
        let f = FieldCtx::new(p, r).unwrap();
        let (a, b, c) = (f.from_index(i), f.from_index(j), f.from_index(k));
        let lhs = f.mul(&a, &f.add(&b, &c));
        let rhs = f.add(&f.mul(&a, &b), &f.mul(&a, &c));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert!(f.is_one(&f.mul(&a, &inv)));
        }
    }

    #[test]
    fn matrix_inverse((p, r) in field(), n in 1usize..5, seed: u64) {
        let f = FieldCtx::new(p, r).unwrap();
        let m = Matrix::random(&f, n, n, &mut ChaCha8Rng::seed_from_u64(seed));
        if let Ok(inv) = m.inverse(&f) {
            prop_assert!(m.mul(&f, &inv).unwrap().is_identity(&f));
            prop_assert!(inv.mul(&f, &m).unwrap().is_identity(&f));
        }
    }

    #[test]
    fn monomial_text_round_trip(
        (p, r) in field(),
        a in prop::collection::vec(0u8..2, 3),
        b in prop::collection::vec(0u64..40, 3),
    ) {
        let ctx = CohCtx::new(p, r).unwrap();
        let a = if p == 2 { vec![0; r] } else { a[..r].to_vec() };
        let m = Monomial::new(a, b[..r].to_vec()).unwrap();
        prop_assert_eq!(ctx.parse_monomial(&m.to_string()).unwrap(), m.clone());
        prop_assert_eq!(ctx.parse_monomial(&m.pretty()).unwrap(), m);
    }

    #[test]
    fn two_part_multinomial_is_lucas(p in prop::sample::select(vec![2u64, 3, 5, 7]), x in 0u64..500, y in 0u64..500) {
        let c = multinomial_mod_p(p, &[x, y]);
        prop_assert_eq!(c, lucas_binomial(p, x + y, x));
        prop_assert_eq!(c != 0, no_carry(p, &[x, y]));
    }

    #[test]
    fn coproduct_is_coassociative(p in prop::sample::select(vec![2u64, 3, 5]), e in 0u8..2, b in 0u64..30) {
        let ctx = CohCtx::new(p, 1).unwrap();
        let e = if p == 2 { 0 } else { e };
        let m = Monomial::new(vec![e], vec![b]).unwrap();
        prop_assume!(ctx.satisfies_p(&m));
        let d = coproduct(&ctx, &m).unwrap();
        prop_assert_eq!(
            apply_coproduct_at(&ctx, &d, 0).unwrap(),
            apply_coproduct_at(&ctx, &d, 1).unwrap()
        );
    }
}
