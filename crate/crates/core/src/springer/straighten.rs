//! Writing a polynomial as a `Q[t]`-combination of the basis monomials `x_T`
//! modulo the equivariant ideal.
//!
//! Two independent routes are provided. The oracle solves the localization
//! equations over the fraction field of `Q[t]`; the rewriting route applies
//! the ideal relations directly, by induction on `x`-degree.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use super::{fixed_points, localize, localize_all, square_reduction, FixedPoint, SpringerContext};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{MPoly, Monomial, Rational, UPolyT, Vars};
use crate::error::{Error, Result};
use crate::tableaux::{standard_basis, StandardTableau, TwoRowFilling};

/// Coefficients `c_T ∈ Q[t]`, one per basis tableau in basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Straightening {
    pub basis: Vec<StandardTableau>,
    pub coefficients: Vec<UPolyT>,
}

impl Straightening {
    pub fn nonzero(&self) -> impl Iterator<Item = (&StandardTableau, &UPolyT)> {
        self.basis.iter().zip(&self.coefficients).filter(|(_, c)| !c.is_zero())
    }

    pub fn coefficient(&self, bottom: &[usize]) -> Option<&UPolyT> {
        self.basis.iter().position(|t| t.bottom() == bottom).map(|i| &self.coefficients[i])
    }

    /// `Σ c_T(t) x_T`.
    pub fn to_mpoly(&self, vars: Vars) -> MPoly {
        self.basis.iter().zip(&self.coefficients).fold(MPoly::zero(vars), |acc, (tab, c)| {
            let xt = MPoly::term(vars, Rational::from_integer(1.into()), tab.monomial(vars));
            &acc + &(&c.to_mpoly(vars) * &xt)
        })
    }
}

fn check_ring(f: &MPoly, ctx: &SpringerContext) -> Result<()> {
    if f.vars() == ctx.vars() {
        Ok(())
    } else {
        Err(Error::VarMismatch(ctx.vars(), f.vars()))
    }
}

/// Matrix of basis images: rows are fixed points, columns basis tableaux.
pub(super) fn image_matrix(ctx: &SpringerContext, points: &[FixedPoint], basis: &[StandardTableau]) -> Matrix {
    let v = ctx.vars();
    points
        .iter()
        .map(|w| {
            basis
                .iter()
                .map(|tab| {
                    let xt = MPoly::term(v, Rational::from_integer(1.into()), tab.monomial(v));
                    localize(&xt, w).expect("basis monomial lives in the context ring")
                })
                .collect()
        })
        .collect()
}

/// Straightening by linear algebra through localization.
///
/// Each homogeneous component is solved separately. Fails with
/// [`Error::Consistency`] if the basis images are dependent or a coefficient
/// is not a polynomial in `t`.
pub fn straighten_oracle(f: &MPoly, ctx: &SpringerContext) -> Result<Straightening> {
    check_ring(f, ctx)?;
    let basis = standard_basis(ctx.n(), ctx.k())?;
    let points = fixed_points(ctx);
    let matrix = image_matrix(ctx, &points, &basis);
    let mut coefficients = vec![UPolyT::zero(); basis.len()];
    for (_, part) in f.homogeneous_components() {
        let rhs = points.iter().map(|w| localize(&part, w)).collect::<Result<Vec<_>>>()?;
        let sol = match linalg::solve(&matrix, &rhs) {
            Ok(s) => s,
            Err(Error::Singular) => {
                return Err(Error::Consistency("basis images are linearly dependent".into()));
            }
            Err(e) => return Err(e),
        };
        let poly = sol.polynomial().ok_or_else(|| {
            Error::Consistency(format!("straightening of {part} has a non-polynomial coefficient"))
        })?;
        for (acc, c) in coefficients.iter_mut().zip(poly) {
            *acc = &*acc + &c;
        }
    }
    let result = Straightening { basis, coefficients };
    let diff = f - &result.to_mpoly(ctx.vars());
    if !localize_all(&diff, ctx)?.is_zero() {
        return Err(Error::Consistency("straightened form does not localize like the input".into()));
    }
    Ok(result)
}

/// Straightening by rewriting with the ideal relations.
///
/// A monomial `x^α` is rewritten by the first applicable rule:
///
/// 1. a repeated variable `x_i^2` is replaced by its square reduction,
/// 2. a squarefree monomial of degree `>= k+1` uses the product relation on
///    its `k+1` smallest indices,
/// 3. a squarefree monomial whose filling is not standard, with first bad
///    column `j`, uses the `j`-th power of the linear relation split as
///    `(-Σ_{r<j} x_{a_r})^j = (Σ x_b + Σ_{r>=j} x_{a_r} - n(n+1)/2 t)^j`,
///    both sides times `∏_{r>j} x_{b_r}`, solved for `x_U`.
///
/// Each rule produces only monomials of lower `x`-degree, with repeated
/// variables, or with a larger first bad column, so the recursion ends.
pub fn straighten_paper(f: &MPoly, ctx: &SpringerContext) -> Result<Straightening> {
    check_ring(f, ctx)?;
    let mut rw = Rewriter::new(ctx)?;
    let coefficients = rw.combine(f)?;
    Ok(Straightening { basis: rw.basis, coefficients })
}

struct Rewriter {
    ctx: SpringerContext,
    vars: Vars,
    basis: Vec<StandardTableau>,
    index: HashMap<Vec<usize>, usize>,
    memo: HashMap<Vec<u32>, Vec<UPolyT>>,
    in_progress: HashSet<Vec<u32>>,
}

impl Rewriter {
    fn new(ctx: &SpringerContext) -> Result<Self> {
        let basis = standard_basis(ctx.n(), ctx.k())?;
        let index = basis.iter().enumerate().map(|(i, t)| (t.bottom().to_vec(), i)).collect();
        Ok(Rewriter {
            ctx: *ctx,
            vars: ctx.vars(),
            basis,
            index,
            memo: HashMap::new(),
            in_progress: HashSet::new(),
        })
    }

    fn zero(&self) -> Vec<UPolyT> {
        vec![UPolyT::zero(); self.basis.len()]
    }

    fn x_monomial(&self, alpha: &[u32]) -> MPoly {
        let mut e = alpha.to_vec();
        e.push(0);
        MPoly::term(self.vars, Rational::from_integer(1.into()), Monomial::from_exponents(e))
    }

    fn x_product(&self, indices: &[usize]) -> MPoly {
        let mut alpha = vec![0; self.ctx.n()];
        for &i in indices {
            alpha[i - 1] += 1;
        }
        self.x_monomial(&alpha)
    }

    fn x_sum(&self, indices: &[usize]) -> MPoly {
        indices.iter().fold(MPoly::zero(self.vars), |acc, &i| &acc + &MPoly::x(self.vars, i))
    }

    /// Straightens every term of `p`: `c t^e x^α ↦ c t^e · straighten(x^α)`.
    fn combine(&mut self, p: &MPoly) -> Result<Vec<UPolyT>> {
        let n = self.ctx.n();
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let alpha = m.exponents()[..n].to_vec();
            let shift = UPolyT::monomial(c.clone(), m.exponent(n) as usize);
            let part = self.reduce(alpha)?;
            for (a, q) in acc.iter_mut().zip(&part) {
                if !q.is_zero() {
                    *a = &*a + &(&shift * q);
                }
            }
        }
        Ok(acc)
    }

    fn reduce(&mut self, alpha: Vec<u32>) -> Result<Vec<UPolyT>> {
        if let Some(hit) = self.memo.get(&alpha) {
            return Ok(hit.clone());
        }
        if !self.in_progress.insert(alpha.clone()) {
            return Err(Error::Consistency(format!("rewriting revisits {}", self.x_monomial(&alpha))));
        }
        let out = self.rewrite(&alpha)?;
        self.in_progress.remove(&alpha);
        self.memo.insert(alpha, out.clone());
        Ok(out)
    }

    /// For a filling whose first bad column is `j`: with `a` the top row,
    /// `b` the bottom row and `s` the linear relation, the difference
    /// `(Σ_{i>=j} a_i + Σ b - s)^j - (-Σ_{i<j} a_i)^j`, times `x_{b_{j+1}} ... x_{b_l}`.
    /// It lies in the ideal and contains `x_U = x_b` with coefficient `j!`.
    fn column_relation(&self, filling: &TwoRowFilling, j: usize) -> MPoly {
        let (a, b) = (filling.top(), filling.bottom());
        let n = self.ctx.n();
        let trailing = self.x_product(&b[j..]);
        let lhs = &(-&self.x_sum(&a[..j - 1])).pow(j as u32) * &trailing;
        let linear = &(&self.x_sum(b) + &self.x_sum(&a[j - 1..]))
            - &MPoly::t(self.vars).scale(&Rational::from_integer(((n * (n + 1) / 2) as i64).into()));
        let rhs = &linear.pow(j as u32) * &trailing;
        &rhs - &lhs
    }

    fn rewrite(&mut self, alpha: &[u32]) -> Result<Vec<UPolyT>> {
        let k = self.ctx.k();
        if let Some(i) = alpha.iter().position(|&e| e >= 2) {
            let mut rest = alpha.to_vec();
            rest[i] -= 2;
            let replaced = &self.x_monomial(&rest) * &square_reduction(&self.ctx, i + 1)?;
            return self.combine(&replaced);
        }
        let support: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] == 1).map(|i| i + 1).collect();
        if support.len() > k {
            let (head, tail) = support.split_at(k + 1);
            let t = MPoly::t(self.vars);
            let relation = head.iter().enumerate().fold(MPoly::one(self.vars), |acc, (j, &i)| {
                &acc * &(&MPoly::x(self.vars, i) - &t.scale(&Rational::from_integer((i as i64 - j as i64).into())))
            });
            // the relation is x_head + (lower x-degree terms)
            let lower = &self.x_product(head) - &relation;
            return self.combine(&(&lower * &self.x_product(tail)));
        }
        let filling = TwoRowFilling::from_bottom(self.ctx.n(), &support)?;
        let Some(j) = filling.first_bad_column() else {
            let mut out = self.zero();
            out[self.index[&support]] = UPolyT::one();
            return Ok(out);
        };
        let relation = self.column_relation(&filling, j);
        let b = filling.bottom();
        let x_u = self.x_product(b);
        let lead = x_u.terms().next().unwrap().0.clone();
        let coeff = relation.coefficient(&lead);
        if coeff.is_zero() {
            return Err(Error::Consistency(format!("x_U has coefficient zero in the relation for {filling}")));
        }
        let replacement = &x_u - &relation.scale(&coeff.recip());
        debug_assert!(replacement.coefficient(&lead).is_zero());
        self.combine(&replacement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn ctx(n: usize, k: usize) -> SpringerContext {
        SpringerContext::new(n, k).unwrap()
    }

    fn nonzero(s: &Straightening) -> Vec<(String, String)> {
        s.nonzero().map(|(t, c)| (t.to_string(), c.to_string())).collect()
    }

    #[test]
    fn column_relation_has_factorial_coefficient() {
        let c = ctx(6, 3);
        let rw = Rewriter::new(&c).unwrap();
        let mut seen = HashSet::new();
        for l in 1..=3 {
            for bottom in itertools::Itertools::combinations(1..=6usize, l) {
                let filling = TwoRowFilling::from_bottom(6, &bottom).unwrap();
                let Some(j) = filling.first_bad_column() else { continue };
                let relation = rw.column_relation(&filling, j);
                let lead = filling.monomial(c.vars());
                let factorial: i64 = (1..=j as i64).product();
                assert_eq!(relation.coefficient(&lead), rat(factorial), "{filling}");
                assert!(localize_all(&relation, &c).unwrap().is_zero(), "{filling}");
                seen.insert(j);
            }
        }
        assert_eq!(seen, HashSet::from([1, 2, 3]));
    }

    #[test]
    fn basis_elements_are_fixed() {
        let c = ctx(4, 2);
        let f = parse_poly("x3*x4", c.vars()).unwrap();
        for s in [straighten_oracle(&f, &c).unwrap(), straighten_paper(&f, &c).unwrap()] {
            assert_eq!(nonzero(&s), vec![("[[1,2],[3,4]]".to_string(), "1".to_string())]);
        }
    }

    #[test]
    fn x1_for_n2() {
        let c = ctx(2, 1);
        let f = MPoly::x(c.vars(), 1);
        let expect = vec![("[[1,2],[]]".to_string(), "3*t".to_string()), ("[[1],[2]]".to_string(), "-1".to_string())];
        assert_eq!(nonzero(&straighten_oracle(&f, &c).unwrap()), expect);
        assert_eq!(nonzero(&straighten_paper(&f, &c).unwrap()), expect);
    }

    #[test]
    fn x1_squared_for_n2() {
        // x1^2 = 3t x1 - 2t^2 = 3t(3t - x2) - 2t^2 = 7t^2 - 3t x2
        let c = ctx(2, 1);
        let f = parse_poly("x1^2", c.vars()).unwrap();
        let oracle = straighten_oracle(&f, &c).unwrap();
        assert_eq!(oracle.coefficient(&[]), Some(&UPolyT::monomial(rat(7), 2)));
        assert_eq!(oracle.coefficient(&[2]), Some(&UPolyT::monomial(rat(-3), 1)));
        assert_eq!(straighten_paper(&f, &c).unwrap(), oracle);
    }

    #[test]
    fn high_degree_squarefree_uses_product_relation() {
        let c = ctx(4, 2);
        let f = parse_poly("x1*x2*x3", c.vars()).unwrap();
        let paper = straighten_paper(&f, &c).unwrap();
        assert_eq!(paper, straighten_oracle(&f, &c).unwrap());
        assert!(paper.nonzero().all(|(t, _)| t.bottom_len() <= 2));
    }

    #[test]
    fn inhomogeneous_inputs() {
        let c = ctx(4, 1);
        let f = parse_poly("x1^2*x2 + 3*x4 - 5 + t*x2", c.vars()).unwrap();
        assert_eq!(straighten_paper(&f, &c).unwrap(), straighten_oracle(&f, &c).unwrap());
    }

    #[test]
    fn rejects_foreign_ring() {
        let c = ctx(3, 1);
        assert!(straighten_oracle(&MPoly::x(Vars::with_t(4), 1), &c).is_err());
        assert!(straighten_paper(&MPoly::x(Vars::without_t(3), 1), &c).is_err());
    }

    #[test]
    fn routes_agree_on_small_monomials() {
        for c in SpringerContext::all_up_to(4) {
            let v = c.vars();
            for d in 0..=4 {
                for m in Monomial::all_of_degree(v.len(), d, Default::default()) {
                    let f = MPoly::term(v, rat(1), m);
                    let a = straighten_oracle(&f, &c).unwrap();
                    let b = straighten_paper(&f, &c).unwrap();
                    assert_eq!(a, b, "{f} in {c:?}");
                }
            }
        }
    }
}
