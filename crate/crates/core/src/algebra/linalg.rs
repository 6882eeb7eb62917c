//! Fraction-free (Bareiss) elimination over `Q[t]` and `Z`, and exact ranks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, UPolyT};
use crate::error::{invalid, Error, Result};

pub type Matrix = Vec<Vec<UPolyT>>;

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(invalid("matrix is not square"));
    }
    Ok(n)
}

/// Determinant over `Q[t]` by Bareiss elimination. Every division is exact.
pub fn determinant(m: &[Vec<UPolyT>]) -> Result<UPolyT> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(UPolyT::one());
    }
    let mut a: Matrix = m.to_vec();
    let mut prev = UPolyT::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(UPolyT::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = UPolyT::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Determinant of an integer matrix by Bareiss elimination.
pub fn integer_determinant(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Solution of a square system over the fraction field of `Q[t]`:
/// `x[i] = numerators[i] / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub numerators: Vec<UPolyT>,
    pub denominator: UPolyT,
}

impl Solution {
    /// Components as elements of `Q[t]`, or `None` if some component is a
    /// proper rational function.
    pub fn polynomial(&self) -> Option<Vec<UPolyT>> {
        self.numerators.iter().map(|n| n.exact_div(&self.denominator)).collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.polynomial().is_some()
    }
}

/// Solves `m * x = rhs` by fraction-free Gauss-Jordan elimination.
///
/// After the last step every diagonal entry equals `±det(m)` and the augmented
/// column holds `±det(m) * x`, so no rational functions appear until the end.
pub fn solve(m: &[Vec<UPolyT>], rhs: &[UPolyT]) -> Result<Solution> {
    let n = check_square(m)?;
    if rhs.len() != n {
        return Err(invalid(format!("right-hand side has {} entries, expected {n}", rhs.len())));
    }
    let mut a: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let mut prev = UPolyT::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(p, k);
        for i in (0..n).filter(|&i| i != k) {
            // columns left of k are zero in row k except where they hold an
            // earlier pivot, which must be rescaled too
            for j in (0..=n).filter(|&j| j != k) {
                if j < k && j != i {
                    continue;
                }
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("fraction-free division is exact");
            }
            a[i][k] = UPolyT::zero();
        }
        prev = a[k][k].clone();
    }
    // All pivots are equal to the final one; normalize to a common denominator.
    let denominator = a[n - 1][n - 1].clone();
    let numerators = (0..n)
        .map(|i| {
            if a[i][i] == denominator {
                a[i][n].clone()
            } else {
                debug_assert_eq!(a[i][i], -&denominator);
                -&a[i][n]
            }
        })
        .collect();
    Ok(Solution { numerators, denominator })
}

/// Rank of a dense rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (done, rest) = a.split_at_mut(r + 1);
        let pivot = &done[r];
        let inv = pivot[c].recip();
        for row in rest.iter_mut().filter(|row| !row[c].is_zero()) {
            let f = &row[c] * &inv;
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Incremental row echelon form over `Z` (hence over `Q`) for sparse vectors.
///
/// Rows are stored primitive with positive leading entry; each stored row has
/// a distinct leading column, so the number of rows is the rank of everything
/// inserted.
#[derive(Debug, Default, Clone)]
pub struct SparseEchelon {
    pivots: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored rows and stores the remainder if it is
    /// nonzero. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: BTreeMap<usize, BigInt>) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, _)) = v.iter().next() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                make_primitive(&mut v);
                self.pivots.insert(lead, v);
                return true;
            };
            // v <- p_lead * v - v_lead * pivot, keeping integers
            let p = &pivot[&lead];
            let c = v[&lead].clone();
            let g = p.gcd(&c);
            let (pm, cm) = (p / &g, &c / &g);
            for val in v.values_mut() {
                *val *= &pm;
            }
            for (&col, pv) in pivot {
                let e = v.entry(col).or_insert_with(BigInt::zero);
                *e -= &cm * pv;
                if e.is_zero() {
                    v.remove(&col);
                }
            }
            make_primitive(&mut v);
        }
    }
}

fn make_primitive(v: &mut BTreeMap<usize, BigInt>) {
    let g = v.values().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return;
    }
    let negate = v.values().next().is_some_and(Signed::is_negative);
    for c in v.values_mut() {
        *c /= &g;
        if negate {
            *c = -&*c;
        }
    }
}
