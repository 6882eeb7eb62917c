//! Browser bindings. Every export takes plain numbers and strings and returns
//! a JSON document; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use springer_core::algebra::parse_poly;
use springer_core::springer::{fixed_points as enumerate, localize_all, straighten_oracle, straighten_paper};
use springer_core::{Result, SpringerContext};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Fixed points of the torus action, as `{ell, permutation}` pairs.
#[wasm_bindgen]
pub fn fixed_points(n: usize, k: usize) -> String {
    respond(SpringerContext::new(n, k).map(|ctx| {
        let points: Vec<Value> =
            enumerate(&ctx).iter().map(|w| json!({"ell": w.ell(), "permutation": w.permutation()})).collect();
        json!({ "n": n, "k": k, "points": points })
    }))
}

/// Values of `poly` at each fixed point, as polynomials in `t`.
#[wasm_bindgen]
pub fn localize(n: usize, k: usize, poly: &str) -> String {
    respond((|| {
        let ctx = SpringerContext::new(n, k)?;
        let f = parse_poly(poly, ctx.vars())?;
        let values: Vec<Value> = localize_all(&f, &ctx)?
            .values
            .iter()
            .map(|(w, v)| json!({"permutation": w.permutation(), "value": v.to_string()}))
            .collect();
        Ok(json!({ "input": f.to_string(), "values": values }))
    })())
}

/// Coefficients of `poly` on the standard-tableau basis, computed both ways.
#[wasm_bindgen]
pub fn straighten(n: usize, k: usize, poly: &str) -> String {
    respond((|| {
        let ctx = SpringerContext::new(n, k)?;
        let f = parse_poly(poly, ctx.vars())?;
        let paper = straighten_paper(&f, &ctx)?;
        let oracle = straighten_oracle(&f, &ctx)?;
        let terms: Vec<Value> = paper
            .nonzero()
            .map(|(tab, c)| json!({"tableau": tab.to_string(), "coefficient": c.to_string()}))
            .collect();
        Ok(json!({ "input": f.to_string(), "terms": terms, "agree": paper == oracle }))
    })())
}
