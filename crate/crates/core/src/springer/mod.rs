//! Computations specific to the Springer variety of shape `(n - k, k)`.

mod fixed_points;
mod ideals;
mod localize;
mod presentation;
mod straighten;

pub use fixed_points::{build_fixed_point, fixed_points, fixed_points_bruteforce, satisfies_springer_condition, FixedPoint};
pub use ideals::{
    ideal_i_generators, ideal_j_generators, square_reduction, tanisaki_generators, verify_square_reduction,
    Family, IdealKind, IdealPresentation, LabeledGenerator,
};
pub use localize::{localize, localize_all, verify_relations, LocalizedClass, RelationFailure, RelationReport};
pub use presentation::{
    basis_image_matrix, kernel_equals_ideal_in_degree, ordinary_presentation_check, ordinary_presentation_check_with,
    BasisImage, DegreeReport,
    OrdinaryReport,
};
pub use straighten::{straighten_oracle, straighten_paper, Straightening};

use serde::Serialize;

use crate::algebra::Vars;
use crate::error::{invalid, Result};

/// The pair `(n, k)` with `0 <= k <= n/2`, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpringerContext {
    n: usize,
    k: usize,
}

impl SpringerContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        if 2 * k > n {
            return Err(invalid(format!("need 2k <= n, got n = {n}, k = {k}")));
        }
        Ok(SpringerContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `Q[x1..xn, t]`.
    pub fn vars(&self) -> Vars {
        Vars::with_t(self.n)
    }

    /// `Q[x1..xn]`.
    pub fn ordinary_vars(&self) -> Vars {
        Vars::without_t(self.n)
    }

    /// Every valid context with `n <= n_max`, ordered by `n` then `k`.
    pub fn all_up_to(n_max: usize) -> Vec<SpringerContext> {
        (1..=n_max).flat_map(|n| (0..=n / 2).map(move |k| SpringerContext { n, k })).collect()
    }
}
