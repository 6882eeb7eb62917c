use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use super::{fixed_points, ideal_i_generators, FixedPoint, SpringerContext};
use crate::algebra::{MPoly, Rational, UPolyT};
use crate::error::{Error, Result};

/// Restriction of `f` to the fixed point `w`: `x_i ↦ w(i) t`, `t ↦ t`.
pub fn localize(f: &MPoly, w: &FixedPoint) -> Result<UPolyT> {
    let n = w.permutation().len();
    let vars = f.vars();
    if vars.x != n || !vars.t {
        return Err(Error::InvalidInput(format!("cannot localize a polynomial in {vars} at a point of S_{n}")));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    for (m, c) in f.terms() {
        let weight: BigInt = (0..n)
            .map(|i| Pow::pow(BigInt::from(w.permutation()[i]), m.exponent(i)))
            .fold(BigInt::one(), |a, b| a * b);
        let d = m.degree() as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, Rational::default());
        }
        coeffs[d] += c * Rational::from_integer(weight);
    }
    Ok(UPolyT::from_coeffs(coeffs))
}

/// Values of a class at every fixed point, in [`fixed_points`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedClass {
    pub values: Vec<(FixedPoint, UPolyT)>,
}

impl LocalizedClass {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|(_, v)| v.is_zero())
    }

    pub fn get(&self, w: &FixedPoint) -> Option<&UPolyT> {
        self.values.iter().find(|(p, _)| p == w).map(|(_, v)| v)
    }
}

pub fn localize_all(f: &MPoly, ctx: &SpringerContext) -> Result<LocalizedClass> {
    let values = fixed_points(ctx)
        .into_iter()
        .map(|w| localize(f, &w).map(|v| (w, v)))
        .collect::<Result<_>>()?;
    Ok(LocalizedClass { values })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub generator: String,
    pub fixed_point: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub generators: usize,
    pub fixed_points: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Localizes every generator of the equivariant ideal at every fixed point and
/// records any nonzero value.
pub fn verify_relations(ctx: &SpringerContext) -> RelationReport {
    let ideal = ideal_i_generators(ctx);
    let points = fixed_points(ctx);
    let mut failures = Vec::new();
    for g in &ideal.generators {
        for w in &points {
            let value = localize(&g.poly, w).expect("generator lives in the context ring");
            if !value.is_zero() {
                failures.push(RelationFailure {
                    generator: g.family.to_string(),
                    fixed_point: w.permutation().to_vec(),
                    value: value.to_string(),
                });
            }
        }
    }
    RelationReport { generators: ideal.generators.len(), fixed_points: points.len(), failures }
}
