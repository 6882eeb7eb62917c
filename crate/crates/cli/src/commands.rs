//! Each subcommand produces a [`Report`] plus human-readable listing lines.

use std::time::Instant;

use clap::ValueEnum;
use serde_json::json;
use springer_core::algebra::{binomial, parse_poly};
use springer_core::springer::{
    fixed_points as enumerate_fixed_points, ideal_i_generators, ideal_j_generators, localize_all, straighten_oracle,
    straighten_paper, tanisaki_generators, IdealKind, Straightening,
};
use springer_core::tableaux::{enumerate_standard_tableaux, Partition};
use springer_core::verify::{run_verify, timed_check, Check, ContextInfo, Report, VerifyOptions};
use springer_core::{Result, SpringerContext};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Paper,
    Both,
}

pub struct CommandOutput {
    pub report: Report,
    pub listing: Vec<String>,
}

impl CommandOutput {
    pub fn to_text(&self) -> String {
        let mut out: String = self.listing.iter().map(|l| format!("{l}\n")).collect();
        out.push_str(&self.report.to_text());
        out
    }
}

fn output(
    command: &str,
    context: ContextInfo,
    start: Instant,
    checks: Vec<Check>,
    data: serde_json::Value,
    listing: Vec<String>,
) -> CommandOutput {
    let report = Report {
        command: command.to_string(),
        context,
        checks,
        data: Some(data),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    CommandOutput { report, listing }
}

fn info(ctx: &SpringerContext) -> ContextInfo {
    ContextInfo { n: Some(ctx.n()), k: Some(ctx.k()) }
}

pub fn fixed_points(ctx: &SpringerContext) -> CommandOutput {
    let start = Instant::now();
    let points = enumerate_fixed_points(ctx);
    let listing = points.iter().map(|w| format!("ell={:?} w={:?}", w.ell(), w.permutation())).collect();
    let data = points.iter().map(|w| json!({"ell": w.ell(), "permutation": w.permutation()})).collect();
    let expected = binomial(ctx.n() as u64, ctx.k() as u64);
    let count = timed_check("count", || {
        (points.len() as u64 == expected, format!("{} fixed points, C(n,k) = {expected}", points.len()))
    });
    output("fixed-points", info(ctx), start, vec![count], data, listing)
}

pub fn generators(ctx: &SpringerContext, kind: IdealKind) -> CommandOutput {
    let start = Instant::now();
    let ideal = match kind {
        IdealKind::I => ideal_i_generators(ctx),
        IdealKind::J => ideal_j_generators(ctx),
        IdealKind::Tanisaki => tanisaki_generators(ctx),
    };
    let mut listing: Vec<String> = ideal.generators.iter().map(|g| format!("{}: {}", g.family, g.poly)).collect();
    listing.push(format!("{} generators of {kind} in {}", ideal.generators.len(), ideal.generators[0].poly.vars()));
    let data = json!({
        "ideal": kind.to_string(),
        "generators": ideal.generators.iter().map(|g| json!({"family": g.family.to_string(), "poly": g.poly.to_string()})).collect::<Vec<_>>(),
    });
    let expected = 1 + ctx.n() as u64 + binomial(ctx.n() as u64, ctx.k() as u64 + 1);
    let count = timed_check("count", || {
        let got = ideal.generators.len() as u64;
        (got == expected, format!("{got} generators, 1 + n + C(n,k+1) = {expected}"))
    });
    output("generators", info(ctx), start, vec![count], data, listing)
}

fn table(s: &Straightening) -> Vec<(String, String)> {
    s.nonzero().map(|(t, c)| (t.to_string(), c.to_string())).collect()
}

pub fn straighten(ctx: &SpringerContext, text: &str, method: Method) -> Result<CommandOutput> {
    let start = Instant::now();
    let f = parse_poly(text, ctx.vars())?;
    let oracle = matches!(method, Method::Oracle | Method::Both).then(|| straighten_oracle(&f, ctx)).transpose()?;
    let paper = matches!(method, Method::Paper | Method::Both).then(|| straighten_paper(&f, ctx)).transpose()?;
    let result = paper.as_ref().or(oracle.as_ref()).expect("at least one route runs");

    let rows = table(result);
    let mut listing: Vec<String> = rows.iter().map(|(t, c)| format!("{t}: {c}")).collect();
    if listing.is_empty() {
        listing.push("0".to_string());
    }
    let mut checks = vec![timed_check("localization", || {
        let back = result.to_mpoly(ctx.vars());
        match (localize_all(&back, ctx), localize_all(&f, ctx)) {
            (Ok(a), Ok(b)) => (a == b, "basis expansion restricts to the input at every fixed point".to_string()),
            (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
        }
    })];
    if let (Some(a), Some(b)) = (&oracle, &paper) {
        checks.push(timed_check("agreement", || (a == b, "oracle and rewriting routes".to_string())));
    }
    let method_name = method.to_possible_value().expect("no skipped variants").get_name().to_string();
    let data = json!({
        "input": f.to_string(),
        "method": method_name,
        "coefficients": rows.iter().map(|(t, c)| json!({"tableau": t, "coefficient": c})).collect::<Vec<_>>(),
    });
    Ok(output("straighten", info(ctx), start, checks, data, listing))
}

pub fn verify(opts: &VerifyOptions) -> CommandOutput {
    CommandOutput { report: run_verify(opts), listing: Vec::new() }
}

pub fn tableaux(n: usize, l: Option<usize>) -> Result<CommandOutput> {
    let start = Instant::now();
    let lengths: Vec<usize> = match l {
        Some(l) => vec![l],
        None => (0..=n / 2).collect(),
    };
    let mut listing = Vec::new();
    let mut data = Vec::new();
    let mut checks = Vec::new();
    for l in lengths {
        let shape = Partition::two_row(n, l)?;
        let tabs = enumerate_standard_tableaux(n, l)?;
        let f = shape.hook_count();
        listing.push(format!("shape {shape}: f = {f}"));
        listing.extend(tabs.iter().map(|t| format!("  {t}")));
        checks.push(timed_check(format!("hook-formula {shape}"), || {
            (f == tabs.len().into(), format!("hook formula {f}, enumerated {}", tabs.len()))
        }));
        data.push(json!({
            "shape": shape.parts(),
            "hook_count": f.to_string(),
            "tableaux": tabs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }
    let context = ContextInfo { n: Some(n), k: None };
    Ok(output("tableaux", context, start, checks, data.into(), listing))
}

pub fn hooks(parts: Vec<usize>, hook: Option<(usize, usize)>) -> Result<CommandOutput> {
    let start = Instant::now();
    let shape = Partition::new(parts)?;
    let mut listing = vec![format!("shape {shape}: f = {}", shape.hook_count())];
    let mut data = json!({"shape": shape.parts(), "hook_count": shape.hook_count().to_string()});
    if let Some((i, j)) = hook {
        let h = shape.hook_length(i, j)?;
        listing.push(format!("h({i},{j}) = {h}"));
        data["hook"] = json!({"cell": [i, j], "length": h});
    }
    let context = ContextInfo { n: Some(shape.size()), k: None };
    Ok(output("tableaux", context, start, Vec::new(), data, listing))
}
