//! Checks that the equivariant ideal is exactly the kernel of localization,
//! and that its `t = 0` shadow presents the ordinary cohomology.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use super::straighten::image_matrix;
use super::{fixed_points, ideal_i_generators, ideal_j_generators, localize, tanisaki_generators, FixedPoint, SpringerContext};
use crate::algebra::linalg::{self, Matrix, SparseEchelon};
use crate::algebra::{binomial, MPoly, Monomial, MonomialOrder, Rational, UPolyT};
use crate::error::Result;
use crate::groebner::{ideal_equal, quotient_dimension, IdealComparison};
use crate::tableaux::{standard_basis, verify_binomial_hook_identity, StandardTableau};

/// Localizations of the basis monomials `x_T` at every fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisImage {
    pub points: Vec<FixedPoint>,
    pub basis: Vec<StandardTableau>,
    /// `matrix[w][T] = (∏_{j ∈ bottom(T)} w(j)) t^{l(T)}`.
    pub matrix: Matrix,
    /// The integer coefficients of `matrix`.
    pub core: Vec<Vec<BigInt>>,
    pub core_determinant: BigInt,
    /// Total `t`-degree `Σ l(T)` factored out of the determinant.
    pub t_degree: usize,
}

impl BasisImage {
    /// Determinant of `matrix` over `Q[t]`, by fraction-free elimination.
    /// Column `T` carries the factor `t^{l(T)}`, so this is always
    /// `core_determinant * t^{t_degree}`; it is slow for large bases.
    pub fn determinant(&self) -> Result<UPolyT> {
        linalg::determinant(&self.matrix)
    }

    /// Checks the factorization above by computing both sides.
    pub fn is_consistent(&self) -> bool {
        let scaled = UPolyT::monomial(Rational::from_integer(self.core_determinant.clone()), self.t_degree);
        self.determinant().is_ok_and(|d| d == scaled)
    }

    pub fn is_independent(&self) -> bool {
        !self.core_determinant.is_zero()
    }
}

pub fn basis_image_matrix(ctx: &SpringerContext) -> Result<BasisImage> {
    let points = fixed_points(ctx);
    let basis = standard_basis(ctx.n(), ctx.k())?;
    let matrix = image_matrix(ctx, &points, &basis);
    let core: Vec<Vec<BigInt>> = points
        .iter()
        .map(|w| basis.iter().map(|tab| tab.bottom().iter().map(|&j| BigInt::from(w.apply(j))).product()).collect())
        .collect();
    let core_determinant = linalg::integer_determinant(&core)?;
    let t_degree = basis.iter().map(StandardTableau::bottom_len).sum();
    Ok(BasisImage { points, basis, matrix, core, core_determinant, t_degree })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: u32,
    /// Number of monomials of this degree in `x1..xn, t`.
    pub space_dim: usize,
    pub kernel_dim: usize,
    pub ideal_dim: usize,
    pub equal: bool,
}

/// Integer row with denominators cleared; the scale does not affect rank.
fn integer_row(p: &MPoly, index: &HashMap<Monomial, usize>) -> BTreeMap<usize, BigInt> {
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    p.terms()
        .map(|(m, c)| (index[m], (c * &den).to_integer()))
        .collect()
}

/// Compares, in degree `d`, the kernel of localization with the degree-`d`
/// part of the equivariant ideal.
///
/// The kernel dimension is the number of monomials minus the rank of their
/// evaluation vectors over the fixed points. The ideal dimension is the rank
/// of all products `m * g` with `deg(m * g) = d`. Both ranks are exact over
/// `Q`. When every generator localizes to zero, each `m * g` lies in the
/// kernel, so the span can stop growing once it reaches the kernel dimension.
pub fn kernel_equals_ideal_in_degree(ctx: &SpringerContext, d: u32) -> Result<DegreeReport> {
    let v = ctx.vars();
    let order = MonomialOrder::GRevLex;
    let monomials = Monomial::all_of_degree(v.len(), d, order);
    let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let points = fixed_points(ctx);

    let mut evaluation = SparseEchelon::new();
    for m in &monomials {
        let row: BTreeMap<usize, BigInt> = points
            .iter()
            .enumerate()
            .map(|(j, w)| {
                let val = (0..ctx.n())
                    .map(|i| Pow::pow(BigInt::from(w.apply(i + 1)), m.exponent(i)))
                    .fold(BigInt::one(), |a, b| a * b);
                (j, val)
            })
            .collect();
        evaluation.insert(row);
    }
    let kernel_dim = monomials.len() - evaluation.rank();

    let gens = ideal_i_generators(ctx).polys();
    let vanishing = gens
        .iter()
        .all(|g| points.iter().all(|w| localize(g, w).map(|x| x.is_zero()).unwrap_or(false)));
    let mut span = SparseEchelon::new();
    // larger generators first: their multiples are the sparsest rows
    let mut ordered: Vec<&MPoly> = gens.iter().filter(|g| g.degree().is_some_and(|e| e <= d)).collect();
    ordered.sort_by_key(|g| std::cmp::Reverse(g.degree()));
    'outer: for g in ordered {
        let e = g.degree().unwrap();
        for m in Monomial::all_of_degree(v.len(), d - e, order) {
            if vanishing && span.rank() == kernel_dim {
                break 'outer;
            }
            span.insert(integer_row(&g.mul_monomial(&m), &index));
        }
    }
    let ideal_dim = span.rank();
    Ok(DegreeReport { degree: d, space_dim: monomials.len(), kernel_dim, ideal_dim, equal: kernel_dim == ideal_dim })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdinaryReport {
    pub quotient_dim: Option<usize>,
    pub expected_dim: u64,
    /// `Σ_{l <= k} f^(n-l, l)`.
    pub hook_sum: u64,
    pub tanisaki_equal: bool,
    pub t_zero_equal: bool,
    /// A generator on one side that is not in the other ideal, if any.
    pub witness: Option<String>,
}

impl OrdinaryReport {
    pub fn passed(&self) -> bool {
        self.quotient_dim == Some(self.expected_dim as usize)
            && self.hook_sum == self.expected_dim
            && self.tanisaki_equal
            && self.t_zero_equal
    }
}

fn describe(label: &str, cmp: &IdealComparison) -> Option<String> {
    cmp.witness
        .as_ref()
        .map(|w| format!("{label}: {:?} generator {} = {} has remainder {}", w.side, w.index, w.generator, w.remainder))
}

/// Gröbner-basis checks of the ordinary presentation.
pub fn ordinary_presentation_check(ctx: &SpringerContext) -> Result<OrdinaryReport> {
    ordinary_presentation_check_with(ctx, MonomialOrder::GRevLex)
}

pub fn ordinary_presentation_check_with(ctx: &SpringerContext, order: MonomialOrder) -> Result<OrdinaryReport> {
    let j = ideal_j_generators(ctx).polys();
    let tanisaki = tanisaki_generators(ctx).polys();
    let i_at_zero = ideal_i_generators(ctx)
        .polys()
        .iter()
        .map(MPoly::specialize_t_zero)
        .collect::<Result<Vec<_>>>()?;
    let quotient_dim = quotient_dimension(&j, order)?.dimension();
    let cmp_tanisaki = ideal_equal(&j, &tanisaki, order)?;
    let cmp_zero = ideal_equal(&j, &i_at_zero, order)?;
    let hook = verify_binomial_hook_identity(ctx.n(), ctx.k())?;
    let hook_sum = u64::try_from(&hook.hook_sum).expect("hook sum fits in u64");
    Ok(OrdinaryReport {
        quotient_dim,
        expected_dim: binomial(ctx.n() as u64, ctx.k() as u64),
        hook_sum,
        tanisaki_equal: cmp_tanisaki.equal,
        t_zero_equal: cmp_zero.equal,
        witness: describe("tanisaki", &cmp_tanisaki).or_else(|| describe("t=0", &cmp_zero)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ctx(n: usize, k: usize) -> SpringerContext {
        SpringerContext::new(n, k).unwrap()
    }

    #[test]
    fn basis_matrix_n2() {
        let b = basis_image_matrix(&ctx(2, 1)).unwrap();
        let t = |c: i64| UPolyT::monomial(rat(c), 1);
        assert_eq!(b.matrix, vec![vec![UPolyT::one(), t(1)], vec![UPolyT::one(), t(2)]]);
        assert_eq!(b.determinant().unwrap(), UPolyT::monomial(rat(1), 1));
        assert!(b.is_consistent() && b.is_independent());
    }

    #[test]
    fn basis_matrix_trivial_and_n4() {
        let b = basis_image_matrix(&ctx(1, 0)).unwrap();
        assert_eq!(b.determinant().unwrap(), UPolyT::one());
        let b = basis_image_matrix(&ctx(4, 2)).unwrap();
        assert_eq!(b.matrix.len(), 6);
        assert!(b.is_consistent() && b.is_independent());
    }

    #[test]
    fn degree_zero_and_one() {
        let r = kernel_equals_ideal_in_degree(&ctx(3, 1), 0).unwrap();
        assert_eq!((r.kernel_dim, r.ideal_dim), (0, 0));
        let r = kernel_equals_ideal_in_degree(&ctx(2, 1), 1).unwrap();
        assert_eq!((r.space_dim, r.kernel_dim, r.ideal_dim), (3, 1, 1));
    }

    #[test]
    fn kernel_matches_ideal_n4() {
        let c = ctx(4, 2);
        for d in 1..=6 {
            let r = kernel_equals_ideal_in_degree(&c, d).unwrap();
            assert!(r.equal, "{r:?}");
        }
    }

    #[test]
    fn ordinary_small() {
        let r = ordinary_presentation_check(&ctx(3, 1)).unwrap();
        assert_eq!(r.quotient_dim, Some(3));
        assert!(r.passed(), "{r:?}");
        let r = ordinary_presentation_check(&ctx(4, 2)).unwrap();
        assert_eq!(r.quotient_dim, Some(6));
        assert!(r.passed());
        let r = ordinary_presentation_check(&ctx(5, 0)).unwrap();
        assert_eq!(r.quotient_dim, Some(1));
        assert!(r.passed());
    }
}
