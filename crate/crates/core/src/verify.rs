//! Verification driver and the machine-readable report shared by the CLI.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, MPoly, Monomial, Rational};
use crate::springer::{
    basis_image_matrix, fixed_points, fixed_points_bruteforce, kernel_equals_ideal_in_degree,
    ordinary_presentation_check, straighten_oracle, straighten_paper, verify_relations, verify_square_reduction,
    SpringerContext,
};
use crate::tableaux::verify_binomial_hook_identity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
    pub elapsed_ms: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ContextInfo {
    pub n: Option<usize>,
    pub k: Option<usize>,
}

/// Output of every CLI command: the checks run plus optional listing data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub context: ContextInfo,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    /// One line per check followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(out, "{tag} {} ({:.1} ms): {}", c.name, c.elapsed_ms, c.details);
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed, {:.1} ms",
            self.checks.len(),
            self.failures(),
            self.elapsed_ms
        );
        out
    }
}

/// Runs `f` and records its verdict and timing.
pub fn timed_check(name: impl Into<String>, f: impl FnOnce() -> (bool, String)) -> Check {
    let start = Instant::now();
    let (ok, details) = f();
    Check {
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        details,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    FixedPoints,
    Relations,
    SquareReduction,
    Basis,
    Straighten,
    Kernel,
    Ordinary,
    HookIdentity,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::FixedPoints,
        CheckKind::Relations,
        CheckKind::SquareReduction,
        CheckKind::Basis,
        CheckKind::Straighten,
        CheckKind::Kernel,
        CheckKind::Ordinary,
        CheckKind::HookIdentity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::FixedPoints => "fixed-points",
            CheckKind::Relations => "relations",
            CheckKind::SquareReduction => "square-reduction",
            CheckKind::Basis => "basis",
            CheckKind::Straighten => "straighten",
            CheckKind::Kernel => "kernel",
            CheckKind::Ordinary => "ordinary",
            CheckKind::HookIdentity => "hook-identity",
        }
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check '{s}' (expected one of {})", CheckKind::ALL.map(|c| c.name()).join(", ")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KPolicy {
    /// Every `0 <= k <= n/2`.
    #[default]
    All,
    /// Only `k = floor(n/2)`.
    Max,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub k_policy: KPolicy,
    /// Largest degree for the kernel comparison; `None` means `2(k+1)`.
    pub degree_max: Option<u32>,
    pub checks: Vec<CheckKind>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { n_max: 4, k_policy: KPolicy::All, degree_max: None, checks: CheckKind::ALL.to_vec(), seed: 2013 }
    }
}

pub const RANDOM_SAMPLES: usize = 50;
pub const RANDOM_MAX_DEGREE: u32 = 5;

/// Monomials used for the straightening cross-check: every squarefree
/// monomial in `x` of degree `<= k+1`, then [`RANDOM_SAMPLES`] seeded random
/// monomials in `x, t` of total degree `<= 5`.
pub fn sample_monomials(ctx: &SpringerContext, seed: u64) -> Vec<Monomial> {
    let v = ctx.vars();
    let mut out: Vec<Monomial> = Vec::new();
    for d in 0..=ctx.k() + 1 {
        for subset in (0..ctx.n()).combinations(d) {
            let mut e = vec![0; v.len()];
            for i in subset {
                e[i] = 1;
            }
            out.push(Monomial::from_exponents(e));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((ctx.n() as u64) << 32) ^ ctx.k() as u64);
    for _ in 0..RANDOM_SAMPLES {
        let d = rng.random_range(0..=RANDOM_MAX_DEGREE);
        let mut e = vec![0u32; v.len()];
        for _ in 0..d {
            e[rng.random_range(0..v.len())] += 1;
        }
        out.push(Monomial::from_exponents(e));
    }
    out
}

fn ctx_label(ctx: &SpringerContext) -> String {
    format!("n={} k={}", ctx.n(), ctx.k())
}

pub fn check_fixed_points(ctx: &SpringerContext) -> Check {
    timed_check(format!("fixed-points {}", ctx_label(ctx)), || {
        let mut ours: Vec<Vec<usize>> = fixed_points(ctx).iter().map(|f| f.permutation().to_vec()).collect();
        let expected = binomial(ctx.n() as u64, ctx.k() as u64) as usize;
        let count = ours.len();
        ours.sort();
        let brute = fixed_points_bruteforce(ctx);
        let ok = ours == brute && count == expected;
        (ok, format!("{count} fixed points, brute force {}, C(n,k) = {expected}", brute.len()))
    })
}

pub fn check_relations(ctx: &SpringerContext) -> Check {
    timed_check(format!("relations {}", ctx_label(ctx)), || {
        let r = verify_relations(ctx);
        let mut details = format!("{} generators x {} fixed points", r.generators, r.fixed_points);
        if let Some(f) = r.failures.first() {
            let _ = write!(details, "; {} nonzero, first {} at {:?} = {}", r.failures.len(), f.generator, f.fixed_point, f.value);
        }
        (r.passed(), details)
    })
}

pub fn check_square_reduction(ctx: &SpringerContext) -> Check {
    timed_check(format!("square-reduction {}", ctx_label(ctx)), || {
        let ok = verify_square_reduction(ctx);
        (ok, format!("telescoping identity for i = 1..{}", ctx.n()))
    })
}

pub fn check_basis(ctx: &SpringerContext) -> Check {
    timed_check(format!("basis {}", ctx_label(ctx)), || match basis_image_matrix(ctx) {
        Ok(b) => (
            b.is_independent(),
            format!("{0}x{0} matrix, det = {1} * t^{2}", b.basis.len(), b.core_determinant, b.t_degree),
        ),
        Err(e) => (false, e.to_string()),
    })
}

/// Straightening cross-check on [`sample_monomials`].
pub fn check_straighten(ctx: &SpringerContext, seed: u64) -> Check {
    timed_check(format!("straighten {}", ctx_label(ctx)), || {
        let v = ctx.vars();
        let samples = sample_monomials(ctx, seed);
        for m in &samples {
            let f = MPoly::term(v, Rational::from_integer(1.into()), m.clone());
            let (a, b) = match (straighten_oracle(&f, ctx), straighten_paper(&f, ctx)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return (false, format!("{f}: {e}")),
            };
            if a != b {
                return (false, format!("routes disagree on {f}"));
            }
        }
        (true, format!("{} monomials agree", samples.len()))
    })
}

pub fn check_kernel(ctx: &SpringerContext, degree_max: u32) -> Check {
    timed_check(format!("kernel {}", ctx_label(ctx)), || {
        let mut ok = true;
        let mut parts = Vec::new();
        for d in 0..=degree_max {
            match kernel_equals_ideal_in_degree(ctx, d) {
                Ok(r) => {
                    ok &= r.equal;
                    parts.push(format!("d={}: ker {} I {}", d, r.kernel_dim, r.ideal_dim));
                }
                Err(e) => return (false, e.to_string()),
            }
        }
        (ok, parts.join(", "))
    })
}

pub fn check_ordinary(ctx: &SpringerContext) -> Check {
    timed_check(format!("ordinary {}", ctx_label(ctx)), || match ordinary_presentation_check(ctx) {
        Ok(r) => {
            let mut details = format!(
                "dim {} (C(n,k) = {}), J = tanisaki: {}, J = I|t=0: {}",
                r.quotient_dim.map_or("infinite".to_string(), |d| d.to_string()),
                r.expected_dim,
                r.tanisaki_equal,
                r.t_zero_equal
            );
            if let Some(w) = &r.witness {
                let _ = write!(details, "; {w}");
            }
            (r.passed(), details)
        }
        Err(e) => (false, e.to_string()),
    })
}

pub fn check_hook_identity(ctx: &SpringerContext) -> Check {
    timed_check(format!("hook-identity {}", ctx_label(ctx)), || match verify_binomial_hook_identity(ctx.n(), ctx.k()) {
        Ok(r) => (r.holds, format!("C({}, {}) = {}, hook sum {}", r.n, r.k, r.binomial, r.hook_sum)),
        Err(e) => (false, e.to_string()),
    })
}

pub fn run_check(kind: CheckKind, ctx: &SpringerContext, opts: &VerifyOptions) -> Check {
    match kind {
        CheckKind::FixedPoints => check_fixed_points(ctx),
        CheckKind::Relations => check_relations(ctx),
        CheckKind::SquareReduction => check_square_reduction(ctx),
        CheckKind::Basis => check_basis(ctx),
        CheckKind::Straighten => check_straighten(ctx, opts.seed),
        CheckKind::Kernel => check_kernel(ctx, opts.degree_max.unwrap_or(2 * (ctx.k() as u32 + 1))),
        CheckKind::Ordinary => check_ordinary(ctx),
        CheckKind::HookIdentity => check_hook_identity(ctx),
    }
}

/// Runs the selected checks on every context up to `n_max`. Checks run in
/// parallel; the report lists them by context, then in `opts.checks` order.
pub fn run_verify(opts: &VerifyOptions) -> Report {
    let start = Instant::now();
    let contexts: Vec<SpringerContext> = SpringerContext::all_up_to(opts.n_max)
        .into_iter()
        .filter(|c| opts.k_policy == KPolicy::All || c.k() == c.n() / 2)
        .collect();
    let tasks: Vec<(SpringerContext, CheckKind)> =
        contexts.iter().flat_map(|c| opts.checks.iter().map(move |k| (*c, *k))).collect();
    let checks: Vec<Check> = tasks.par_iter().map(|(c, kind)| run_check(*kind, c, opts)).collect();
    Report {
        command: "verify".to_string(),
        context: ContextInfo { n: Some(opts.n_max), k: None },
        checks,
        data: None,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_is_deterministic() {
        let c = SpringerContext::new(5, 2).unwrap();
        let a = sample_monomials(&c, 7);
        assert_eq!(a, sample_monomials(&c, 7));
        // 1 + 5 + 10 + 10 squarefree, then the random ones
        assert_eq!(a.len(), 26 + RANDOM_SAMPLES);
        assert!(a.iter().all(|m| m.degree() <= RANDOM_MAX_DEGREE));
    }

    #[test]
    fn check_names_parse() {
        for k in CheckKind::ALL {
            assert_eq!(k.name().parse::<CheckKind>().unwrap(), k);
        }
        assert!("bogus".parse::<CheckKind>().is_err());
    }

    #[test]
    fn single_point_report() {
        let r = run_verify(&VerifyOptions { n_max: 1, ..Default::default() });
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.checks.len(), CheckKind::ALL.len());
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
