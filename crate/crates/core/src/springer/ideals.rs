use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use super::SpringerContext;
use crate::algebra::{elementary_symmetric, rat, MPoly};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdealKind {
    /// The equivariant ideal in `Q[x1..xn, t]`.
    I,
    /// Its `t = 0` analogue in `Q[x1..xn]`.
    J,
    Tanisaki,
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::I => "I",
            IdealKind::J => "J",
            IdealKind::Tanisaki => "tanisaki",
        })
    }
}

/// Which family a generator belongs to. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `Σ x_i - n(n+1)/2 t` (or `Σ x_i` without `t`).
    Linear,
    /// `(x_i + x_{i-1} - (n-k+i)t)(x_i - x_{i-1} - t)`.
    Quadratic(usize),
    /// `∏_j (x_{i_j} - (i_j - j)t)` over a `(k+1)`-subset.
    Product(Vec<usize>),
    Square(usize),
    SquarefreeProduct(Vec<usize>),
    /// `e_2` of the variables other than `x_i`.
    E2Omitting(usize),
    /// `e_{k+1}` of a `(k+1)`-subset.
    ETop(Vec<usize>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().join(",");
        match self {
            Family::Linear => write!(f, "linear"),
            Family::Quadratic(i) => write!(f, "quadratic[{i}]"),
            Family::Product(s) => write!(f, "product[{}]", list(s)),
            Family::Square(i) => write!(f, "square[{i}]"),
            Family::SquarefreeProduct(s) => write!(f, "squarefree[{}]", list(s)),
            Family::E2Omitting(i) => write!(f, "e2-omitting[{i}]"),
            Family::ETop(s) => write!(f, "e-top[{}]", list(s)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGenerator {
    pub family: Family,
    pub poly: MPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    pub kind: IdealKind,
    pub context: SpringerContext,
    pub generators: Vec<LabeledGenerator>,
}

impl IdealPresentation {
    pub fn polys(&self) -> Vec<MPoly> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }
}

/// Generators of the equivariant ideal, fully expanded: the linear relation,
/// one quadratic per `i` (with `x_0 = 0`) and one product per
/// `(k+1)`-subset.
pub fn ideal_i_generators(ctx: &SpringerContext) -> IdealPresentation {
    let (n, k) = (ctx.n(), ctx.k());
    let v = ctx.vars();
    let t = MPoly::t(v);
    let x = |i: usize| if i == 0 { MPoly::zero(v) } else { MPoly::x(v, i) };
    let t_times = |c: i64| t.scale(&rat(c));

    let mut generators = Vec::new();
    let sum = (1..=n).fold(MPoly::zero(v), |acc, i| &acc + &x(i));
    generators.push(LabeledGenerator {
        family: Family::Linear,
        poly: &sum - &t_times((n * (n + 1) / 2) as i64),
    });
    for i in 1..=n {
        let plus = &(&x(i) + &x(i - 1)) - &t_times((n - k + i) as i64);
        let minus = &(&x(i) - &x(i - 1)) - &t;
        generators.push(LabeledGenerator { family: Family::Quadratic(i), poly: &plus * &minus });
    }
    for subset in (1..=n).combinations(k + 1) {
        let poly = subset
            .iter()
            .enumerate()
            .fold(MPoly::one(v), |acc, (j, &i)| &acc * &(&x(i) - &t_times(i as i64 - j as i64)));
        generators.push(LabeledGenerator { family: Family::Product(subset), poly });
    }
    IdealPresentation { kind: IdealKind::I, context: *ctx, generators }
}

/// `Σ x_i`, all `x_i^2`, and all squarefree `(k+1)`-fold products.
pub fn ideal_j_generators(ctx: &SpringerContext) -> IdealPresentation {
    let n = ctx.n();
    let v = ctx.ordinary_vars();
    let mut generators = vec![LabeledGenerator {
        family: Family::Linear,
        poly: elementary_symmetric(v, 1, &(0..n).collect_vec()),
    }];
    for i in 1..=n {
        generators.push(LabeledGenerator { family: Family::Square(i), poly: MPoly::x(v, i).pow(2) });
    }
    for subset in (1..=n).combinations(ctx.k() + 1) {
        let poly = subset.iter().fold(MPoly::one(v), |acc, &i| &acc * &MPoly::x(v, i));
        generators.push(LabeledGenerator { family: Family::SquarefreeProduct(subset), poly });
    }
    IdealPresentation { kind: IdealKind::J, context: *ctx, generators }
}

/// `e_1` of all variables, `e_2` of each `(n-1)`-subset, `e_{k+1}` of each
/// `(k+1)`-subset. For `n < 3` some `e_2` generators are zero; they are kept
/// so the count is always `1 + n + C(n, k+1)`.
pub fn tanisaki_generators(ctx: &SpringerContext) -> IdealPresentation {
    let n = ctx.n();
    let v = ctx.ordinary_vars();
    let all = (0..n).collect_vec();
    let mut generators = vec![LabeledGenerator { family: Family::Linear, poly: elementary_symmetric(v, 1, &all) }];
    for omit in 1..=n {
        let rest: Vec<usize> = all.iter().copied().filter(|&i| i != omit - 1).collect();
        generators.push(LabeledGenerator { family: Family::E2Omitting(omit), poly: elementary_symmetric(v, 2, &rest) });
    }
    for subset in (1..=n).combinations(ctx.k() + 1) {
        let idx: Vec<usize> = subset.iter().map(|i| i - 1).collect();
        generators.push(LabeledGenerator {
            family: Family::ETop(subset),
            poly: elementary_symmetric(v, ctx.k() + 1, &idx),
        });
    }
    IdealPresentation { kind: IdealKind::Tanisaki, context: *ctx, generators }
}

/// The value of `x_i^2` modulo the quadratic relations:
/// `(n-k+i+1) t x_i + t Σ_{p<i} x_p - Σ_{p<=i} (n-k+p) t^2`.
pub fn square_reduction(ctx: &SpringerContext, i: usize) -> Result<MPoly> {
    let (n, k) = (ctx.n(), ctx.k());
    if i == 0 || i > n {
        return Err(invalid(format!("index {i} outside 1..={n}")));
    }
    let v = ctx.vars();
    let t = MPoly::t(v);
    let lower = (1..i).fold(MPoly::zero(v), |acc, p| &acc + &MPoly::x(v, p));
    let constant: i64 = (1..=i).map(|p| (n - k + p) as i64).sum();
    let mut rhs = &(&t * &MPoly::x(v, i)).scale(&rat((n - k + i + 1) as i64)) + &(&t * &lower);
    rhs = &rhs - &t.pow(2).scale(&rat(constant));
    Ok(rhs)
}

/// Checks that each quadratic generator equals
/// `(x_i^2 - R_i) - (x_{i-1}^2 - R_{i-1})` exactly, with the `i = 0` term
/// zero, where `R_i` is [`square_reduction`]. Telescoping then puts every
/// `x_i^2 - R_i` in the ideal.
pub fn verify_square_reduction(ctx: &SpringerContext) -> bool {
    let v = ctx.vars();
    let ideal = ideal_i_generators(ctx);
    let reduced = |i: usize| -> MPoly {
        if i == 0 {
            MPoly::zero(v)
        } else {
            &MPoly::x(v, i).pow(2) - &square_reduction(ctx, i).unwrap()
        }
    };
    ideal.generators.iter().all(|g| match g.family {
        Family::Quadratic(i) => g.poly == &reduced(i) - &reduced(i - 1),
        _ => true,
    })
}
