use num_bigint::BigInt;
use proptest::prelude::*;
use springer_core::algebra::linalg::{determinant, integer_determinant, solve, Matrix};
use springer_core::algebra::rat;
use springer_core::{Error, UPolyT};

/// Laplace expansion along the first row.
fn cofactor(m: &Matrix) -> UPolyT {
    if m.is_empty() {
        return UPolyT::one();
    }
    let mut acc = UPolyT::zero();
    for (j, entry) in m[0].iter().enumerate() {
        let minor: Matrix = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = entry * &cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn upoly() -> impl Strategy<Value = UPolyT> {
    prop::collection::vec(-3i64..4, 0..3).prop_map(|c| UPolyT::from_coeffs(c.into_iter().map(rat).collect()))
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(upoly(), n), n))
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor(m in square(4)) {
        prop_assert_eq!(determinant(&m).unwrap(), cofactor(&m));
    }

    #[test]
    fn integer_bareiss_matches_cofactor(rows in (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..7, n), n))) {
        let as_poly: Matrix = rows.iter().map(|r| r.iter().map(|&x| UPolyT::from(x)).collect()).collect();
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let expected = cofactor(&as_poly);
        let got = integer_determinant(&ints).unwrap();
        prop_assert_eq!(UPolyT::from_coeffs(vec![got.into()]), expected);
    }

    #[test]
    fn solve_matches_cramer((m, rhs) in square(3).prop_flat_map(|m| {
        let n = m.len();
        (Just(m), prop::collection::vec(upoly(), n))
    })) {
        let det = cofactor(&m);
        match solve(&m, &rhs) {
            Err(Error::Singular) => prop_assert!(det.is_zero()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
            Ok(s) => {
                prop_assert!(!det.is_zero());
                for i in 0..m.len() {
                    // x_i = det(M_i) / det(M), compared by cross-multiplication
                    let replaced: Matrix = m
                        .iter()
                        .zip(&rhs)
                        .map(|(row, b)| row.iter().enumerate().map(|(j, v)| if j == i { b.clone() } else { v.clone() }).collect())
                        .collect();
                    prop_assert_eq!(&s.numerators[i] * &det, &cofactor(&replaced) * &s.denominator);
                }
            }
        }
    }
}
