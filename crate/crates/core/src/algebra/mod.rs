//! Scalars, polynomials and exact linear algebra.

pub mod linalg;
mod monomial;
mod mpoly;
mod parse;
mod rational;
mod upoly;

pub use monomial::{Monomial, MonomialOrder, Vars};
pub use mpoly::{elementary_symmetric, MPoly};
pub use parse::parse_poly;
pub use rational::{binomial, rat, Rational};
pub use upoly::UPolyT;
