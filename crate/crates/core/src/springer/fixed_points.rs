use itertools::Itertools;
use serde::Serialize;

use super::SpringerContext;
use crate::error::{invalid, Result};

/// The circle-fixed flag `w_{l_1..l_k}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixedPoint {
    ell: Vec<usize>,
    w: Vec<usize>,
}

impl FixedPoint {
    /// The positions `l_1 < ... < l_k` (1-based).
    pub fn ell(&self) -> &[usize] {
        &self.ell
    }

    /// One-line notation `[w(1), ..., w(n)]`.
    pub fn permutation(&self) -> &[usize] {
        &self.w
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.w[i - 1]
    }
}

/// Builds `w` with `w(l_j) = n - k + j` and the remaining positions filled
/// with `1, 2, ..., n - k` in order.
pub fn build_fixed_point(ctx: &SpringerContext, ell: &[usize]) -> Result<FixedPoint> {
    let (n, k) = (ctx.n(), ctx.k());
    if ell.len() != k {
        return Err(invalid(format!("expected {k} positions, got {}", ell.len())));
    }
    if ell.iter().any(|&l| l == 0 || l > n) {
        return Err(invalid(format!("positions must lie in 1..={n}")));
    }
    if ell.windows(2).any(|p| p[0] >= p[1]) {
        return Err(invalid("positions must be strictly increasing"));
    }
    let mut w = Vec::with_capacity(n);
    let mut j = 0;
    for i in 1..=n {
        if j < k && ell[j] == i {
            j += 1;
            w.push(n - k + j);
        } else {
            w.push(i - j);
        }
    }
    Ok(FixedPoint { ell: ell.to_vec(), w })
}

/// All `C(n, k)` fixed points, lexicographic in `ell`.
pub fn fixed_points(ctx: &SpringerContext) -> Vec<FixedPoint> {
    (1..=ctx.n())
        .combinations(ctx.k())
        .map(|ell| build_fixed_point(ctx, &ell).expect("combinations are valid"))
        .collect()
}

/// Whether the coordinate flag of `w` is stable under the nilpotent operator
/// with Jordan blocks `(n - k, k)`: `N e_v = 0` for `v ∈ {1, n-k+1}` and
/// `N e_v = e_{v-1}` otherwise, so each `e_{w(i)}` must map into the span of
/// the earlier basis vectors.
pub fn satisfies_springer_condition(ctx: &SpringerContext, w: &[usize]) -> bool {
    let n = ctx.n();
    let head = n - ctx.k() + 1;
    let mut position = vec![0; n + 1];
    for (i, &v) in w.iter().enumerate() {
        position[v] = i;
    }
    w.iter().enumerate().all(|(i, &v)| v == 1 || v == head || position[v - 1] < i)
}

/// Filters all `n!` permutations by the Springer condition, lexicographic in
/// one-line notation.
pub fn fixed_points_bruteforce(ctx: &SpringerContext) -> Vec<Vec<usize>> {
    (1..=ctx.n())
        .permutations(ctx.n())
        .filter(|w| satisfies_springer_condition(ctx, w))
        .collect()
}
