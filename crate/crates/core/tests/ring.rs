use proptest::prelude::*;
use springer_core::algebra::rat;
use springer_core::{MPoly, Monomial, Vars};

const VARS: Vars = Vars { x: 2, t: true };

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..6), 0..5)
        .prop_map(|terms| MPoly::from_terms(VARS, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), rat(c)))))
}

fn homogeneous(d: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0..=d, -4i64..5), 1..4).prop_map(move |terms| {
        MPoly::from_terms(
            VARS,
            terms.into_iter().map(|(a, c)| (Monomial::from_exponents(vec![a, d - a, 0]), rat(c))),
        )
    })
}

proptest! {
    #[test]
    fn commutative_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MPoly::one(VARS), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&b), &a - &b);
    }

    #[test]
    fn degrees_add_under_products(p in 0u32..4, q in 0u32..4, f in homogeneous(3), g in homogeneous(2)) {
        let f = &f * &MPoly::t(VARS).pow(p);
        let g = &g * &MPoly::t(VARS).pow(q);
        let prod = &f * &g;
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert!(prod.is_homogeneous());
        prop_assert_eq!(prod.degree(), Some(5 + p + q));
    }

    #[test]
    fn components_sum_back(f in poly()) {
        let parts = f.homogeneous_components();
        let total = parts.iter().fold(MPoly::zero(VARS), |acc, (_, p)| &acc + p);
        prop_assert_eq!(total, f);
        for (d, p) in parts {
            prop_assert!(p.is_homogeneous());
            prop_assert_eq!(p.degree(), Some(d));
        }
    }
}
