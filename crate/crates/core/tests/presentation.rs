use proptest::prelude::*;
use springer_core::algebra::rat;
use springer_core::springer::{localize_all, ordinary_presentation_check_with, straighten_oracle, straighten_paper};
use springer_core::tableaux::verify_binomial_hook_identity;
use springer_core::{MPoly, Monomial, MonomialOrder, SpringerContext};

#[test]
fn ordinary_checks_do_not_depend_on_the_order() {
    for c in SpringerContext::all_up_to(5) {
        for order in MonomialOrder::ALL {
            let r = ordinary_presentation_check_with(&c, order).unwrap();
            assert!(r.passed(), "{c:?} {order:?}: {r:?}");
        }
    }
}

#[test]
fn quotient_dimension_is_hook_sum() {
    for c in SpringerContext::all_up_to(6) {
        let r = ordinary_presentation_check_with(&c, MonomialOrder::GRevLex).unwrap();
        let hooks = verify_binomial_hook_identity(c.n(), c.k()).unwrap();
        assert_eq!(r.quotient_dim.map(|d| d as u64), Some(r.hook_sum), "{c:?}");
        assert!(hooks.holds);
    }
}

fn context() -> impl Strategy<Value = SpringerContext> {
    (1usize..=4).prop_flat_map(|n| (Just(n), 0..=n / 2)).prop_map(|(n, k)| SpringerContext::new(n, k).unwrap())
}

/// Random polynomial in `x1..xn, t` of `x`-degree at most 5.
fn polynomial(c: SpringerContext) -> impl Strategy<Value = MPoly> {
    let n = c.n();
    prop::collection::vec((prop::collection::vec(0usize..n, 0..=5), 0u32..3, -4i64..5), 1..4).prop_map(move |terms| {
        let v = c.vars();
        MPoly::from_terms(
            v,
            terms.into_iter().map(|(xs, tdeg, coeff)| {
                let mut e = vec![0; n + 1];
                for i in xs {
                    e[i] += 1;
                }
                e[n] = tdeg;
                (Monomial::from_exponents(e), rat(coeff))
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straightening_routes_agree((c, f) in context().prop_flat_map(|c| (Just(c), polynomial(c)))) {
        let a = straighten_oracle(&f, &c).unwrap();
        let b = straighten_paper(&f, &c).unwrap();
        prop_assert_eq!(&a, &b);
        // the basis expansion has the same image at every fixed point
        let back = a.to_mpoly(c.vars());
        prop_assert_eq!(localize_all(&back, &c).unwrap(), localize_all(&f, &c).unwrap());
    }
}
