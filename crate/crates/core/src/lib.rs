//! Exact computer algebra for the cohomology of two-row Springer varieties.
//!
//! The crate builds the circle-equivariant presentation ideal of the Springer
//! variety of shape `(n-k, k)`, its ordinary (`t = 0`) counterpart and
//! Tanisaki's ideal, and checks the presentation mechanically: fixed points,
//! localization, straightening onto the standard-tableau basis, and
//! Gröbner-basis comparisons. All arithmetic is over `Q`.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod springer;
pub mod tableaux;
pub mod verify;

pub use algebra::{MPoly, Monomial, MonomialOrder, Rational, UPolyT, Vars};
pub use error::{Error, Result};
pub use springer::SpringerContext;
