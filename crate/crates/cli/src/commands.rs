use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use plucker::fock::{boson_fermion_check, derivation_suite};
use plucker::grasshom::{degree_cap, giambelli_sweep, minimal_ambient, theorem13_sweep, SigmaProduct};
use plucker::num::{factorial, format_q};
use plucker::partitions::{degree_hook, hook_lengths, partitions_of, syt_count_bruteforce};
use plucker::ringb::{
    degree_derivative, expand_in_schur, integral_closed_form, integral_h_mu,
    integral_via_generating_function, WeightedPolynomial,
};
use plucker::schurdet::{degree_determinant, exp_series, required_order, schur_determinant};
use plucker::symz::{counting_check, power_expansion_check};
use plucker::{Error, Partition};

use crate::limits::Limits;
use crate::output::{verdict, Outcome};
use crate::Method;

/// Most variables allowed in `identity powersum`.
const MAX_VARIABLES: usize = 8;
/// Most monomials in `(z_1 + ... + z_r)^d` that `identity powersum` will expand.
const MAX_MONOMIALS: u64 = 20_000;
/// Largest `dim ⋀^r V_n` accepted by `verify fock`.
const MAX_WEDGE_DIMENSION: u64 = 300;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Refused(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::NotInRectangle { .. }
            | Error::IndexOutOfRange { .. }
            | Error::TooFewVariables { .. } => CliError::Usage(e.to_string()),
            Error::CutoffExceeded { .. } => CliError::Refused(e.to_string()),
            Error::InsufficientOrder { .. } | Error::Invariant(_) => CliError::Internal(e.to_string()),
        }
    }
}

type CliResult = Result<Outcome, CliError>;

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    Partition::from_str(text).map_err(|e| CliError::Usage(format!("cannot parse partition {text:?}: {e}")))
}

fn check_ambient(r: u32, n: u32, limits: &Limits) -> Result<(), CliError> {
    if r == 0 || r >= n {
        return Err(CliError::Usage(format!("need 0 < r < n, got r = {r}, n = {n}")));
    }
    limits.check_weight(r * (n - r), &format!("the {r} x {} box", n - r))
}

fn degree_by(method: Method, lambda: &Partition) -> Result<BigUint, Error> {
    match method {
        Method::Hook => Ok(degree_hook(lambda)),
        Method::Det => degree_determinant(lambda),
        Method::Deriv => degree_derivative(lambda),
        Method::Cap => {
            let (r, n) = minimal_ambient(lambda);
            degree_cap(lambda, r, n)
        }
        Method::All => unreachable!("expanded by the caller"),
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Hook => "hook",
        Method::Det => "det",
        Method::Deriv => "deriv",
        Method::Cap => "cap",
        Method::All => "all",
    }
}

const ALL_METHODS: [Method; 4] = [Method::Hook, Method::Det, Method::Deriv, Method::Cap];

fn csv_header() -> Vec<String> {
    ["partition", "weight", "f_hook", "f_det", "f_deriv", "f_cap", "agree"]
        .map(String::from)
        .to_vec()
}

/// One CSV row; methods that were not run leave their cell empty.
fn csv_row(lambda: &Partition, values: &[(&str, String)], agree: bool) -> Vec<String> {
    let mut row = vec![lambda.to_string(), lambda.weight().to_string()];
    for m in ALL_METHODS {
        let name = method_name(m);
        row.push(
            values
                .iter()
                .find(|(k, _)| *k == name)
                .map(|(_, v)| v.clone())
                .unwrap_or_default(),
        );
    }
    row.push(agree.to_string());
    row
}

pub fn degree(text: &str, method: Method, oracle: bool, limits: &Limits) -> CliResult {
    let lambda = parse_partition(text)?;
    limits.check_weight(lambda.weight(), &format!("partition {lambda}"))?;
    if oracle {
        limits.check_syt(lambda.weight())?;
    }
    let methods: Vec<Method> = if method == Method::All {
        ALL_METHODS.to_vec()
    } else {
        vec![method]
    };
    let mut values: Vec<(&str, String)> = Vec::new();
    for m in methods {
        values.push((method_name(m), degree_by(m, &lambda)?.to_string()));
    }
    if oracle {
        let count = syt_count_bruteforce(&lambda, limits.syt_cutoff)?;
        values.push(("syt", count.to_string()));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);

    let mut summary = vec![format!("partition {lambda}, weight {}", lambda.weight())];
    for (name, v) in &values {
        summary.push(format!("  {name:<6} {v}"));
    }
    if values.len() > 1 {
        summary.push(format!("verdict {}", verdict(agree)));
    }
    let json_values: serde_json::Map<String, Value> = values
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
        .collect();
    Ok(Outcome {
        pass: agree,
        summary,
        detail: Vec::new(),
        json: json!({
            "command": "degree",
            "partition": lambda,
            "weight": lambda.weight(),
            "values": json_values,
            "agree": agree,
            "pass": agree,
        }),
        csv: vec![csv_header(), csv_row(&lambda, &values, agree)],
    })
}

struct TableRow {
    lambda: Partition,
    hooks: Vec<Vec<u32>>,
    delta: String,
    values: Vec<(&'static str, String)>,
    agree: bool,
}

fn table_row(lambda: Partition) -> Result<TableRow, Error> {
    let mut values = Vec::new();
    for m in ALL_METHODS {
        values.push((method_name(m), degree_by(m, &lambda)?.to_string()));
    }
    let delta = schur_determinant(&exp_series(required_order(&lambda)), &lambda)?;
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(TableRow {
        hooks: hook_lengths(&lambda).rows,
        delta: format_q(&delta),
        values,
        agree,
        lambda,
    })
}

fn render_hooks(rows: &[Vec<u32>]) -> String {
    if rows.is_empty() {
        return "-".into();
    }
    rows.iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn table(d: u32, limits: &Limits) -> CliResult {
    limits.check_weight(d, &format!("table {d}"))?;
    let rows: Vec<TableRow> = partitions_of(d)
        .into_par_iter()
        .map(table_row)
        .collect::<Result<_, _>>()?;
    let pass = rows.iter().all(|r| r.agree);

    let width = rows.iter().map(|r| r.lambda.to_string().len()).max().unwrap_or(1).max(9);
    let fwidth = rows.iter().map(|r| r.values[0].1.len()).max().unwrap_or(1).max(3);
    let mut summary = vec![format!(
        "{:<width$}  {:>fwidth$}  {:<5}  {}",
        "partition", "f", "agree", "Δ_λ(exp t)   hooks"
    )];
    let mut csv = vec![csv_header()];
    let mut json_rows = Vec::new();
    for r in &rows {
        summary.push(format!(
            "{:<width$}  {:>fwidth$}  {:<5}  {:<12} {}",
            r.lambda.to_string(),
            r.values[0].1,
            verdict(r.agree),
            r.delta,
            render_hooks(&r.hooks)
        ));
        csv.push(csv_row(&r.lambda, &r.values, r.agree));
        let values: serde_json::Map<String, Value> = r
            .values
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect();
        json_rows.push(json!({
            "partition": r.lambda,
            "hooks": r.hooks,
            "delta": r.delta,
            "values": values,
            "agree": r.agree,
        }));
    }
    summary.push(format!("{} partitions of {d}: {}", rows.len(), verdict(pass)));
    Ok(Outcome {
        pass,
        summary,
        detail: Vec::new(),
        json: json!({ "command": "table", "d": d, "rows": json_rows, "pass": pass }),
        csv,
    })
}

pub fn square(n: u32, limits: &Limits) -> CliResult {
    limits.check_weight(n, &format!("identity square {n}"))?;
    let lhs = factorial(n);
    let terms: Vec<(Partition, BigUint)> = partitions_of(n)
        .into_iter()
        .map(|l| {
            let f = degree_hook(&l);
            (l, &f * &f)
        })
        .collect();
    let rhs: BigUint = terms.iter().map(|(_, s)| s).sum();
    let pass = lhs == rhs;
    let sum_text = terms.iter().map(|(_, s)| s.to_string()).collect::<Vec<_>>().join("+");
    let line = if pass {
        format!("{lhs} = {sum_text} {}", verdict(pass))
    } else {
        format!("{lhs} != {sum_text} = {rhs} {}", verdict(pass))
    };
    let detail = terms
        .iter()
        .map(|(l, s)| format!("  {l}: (f^λ)^2 = {s}"))
        .collect();
    Ok(Outcome {
        pass,
        summary: vec![line],
        detail,
        json: json!({
            "command": "identity square",
            "n": n,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "terms": terms.iter().map(|(l, s)| json!({"partition": l, "f_squared": s.to_string()})).collect::<Vec<_>>(),
            "pass": pass,
        }),
        csv: vec![
            vec!["n".into(), "lhs".into(), "rhs".into(), "pass".into()],
            vec![n.to_string(), lhs.to_string(), rhs.to_string(), pass.to_string()],
        ],
    })
}

pub fn powersum(r: usize, d: u32, limits: &Limits) -> CliResult {
    limits.check_weight(d, &format!("degree {d}"))?;
    if r == 0 {
        return Err(CliError::Usage("need at least one variable".into()));
    }
    if r > MAX_VARIABLES {
        return Err(CliError::Refused(format!(
            "{r} variables requested, at most {MAX_VARIABLES} supported"
        )));
    }
    let monomials = binomial(d as u64 + r as u64 - 1, r as u64 - 1);
    if monomials > MAX_MONOMIALS {
        return Err(CliError::Refused(format!(
            "(z1+...+z{r})^{d} has {monomials} monomials, above the limit {MAX_MONOMIALS}"
        )));
    }
    let counting = counting_check(d, r)?;
    let poly = power_expansion_check(d, r)?;
    let pass = counting.pass && poly.pass;
    let mut summary = vec![
        format!(
            "{r}^{d} = {} = Σ s_λ(1^{r}) f^λ = {} {}",
            counting.lhs,
            counting.rhs,
            verdict(counting.pass)
        ),
        format!(
            "(z1+...+z{r})^{d} = Σ f^λ s_λ(z): {} monomials compared {}",
            poly.lhs.terms().count(),
            verdict(poly.pass)
        ),
    ];
    for (e, a, b) in &poly.diff {
        summary.push(format!("  z^{e:?}: {a} vs {b}"));
    }
    let detail = counting
        .terms
        .iter()
        .map(|(l, s, f)| format!("  {l}: s_λ(1^{r}) = {s}, f^λ = {f}"))
        .collect();
    Ok(Outcome {
        pass,
        summary,
        detail,
        json: json!({
            "command": "identity powersum",
            "r": r,
            "d": d,
            "counting": counting,
            "polynomial": { "pass": poly.pass, "lhs": poly.lhs, "diff": poly.diff },
            "pass": pass,
        }),
        csv: vec![
            vec!["check".into(), "lhs".into(), "rhs".into(), "pass".into()],
            vec!["counting".into(), counting.lhs.clone(), counting.rhs.clone(), counting.pass.to_string()],
            vec![
                "polynomial".into(),
                poly.lhs.to_string(),
                poly.rhs.to_string(),
                poly.pass.to_string(),
            ],
        ],
    })
}

pub fn integrals(text: &str, limits: &Limits) -> CliResult {
    let mu = parse_partition(text)?;
    let d = mu.weight();
    limits.check_weight(d, &format!("partition {mu}"))?;
    let closed = integral_closed_form(&mu);
    let (derivative, derivative_ok) = match integral_h_mu(&mu, limits.max_weight) {
        Ok(v) => (format_q(&v), true),
        Err(Error::Invariant(msg)) => (msg, false),
        Err(e) => return Err(e.into()),
    };
    let generating = integral_via_generating_function(&mu);
    let pass = derivative_ok && generating == closed;
    let summary = vec![
        format!("  multinomial          {}", format_q(&closed)),
        format!("  ∂^{d} h_μ / ∂x1^{d}     {derivative}"),
        format!("  generating function  {}", format_q(&generating)),
        format!("μ = {mu}: {}", verdict(pass)),
    ];
    Ok(Outcome {
        pass,
        summary,
        detail: Vec::new(),
        json: json!({
            "command": "identity integrals",
            "mu": mu,
            "closed_form": format_q(&closed),
            "derivative": derivative,
            "generating_function": format_q(&generating),
            "pass": pass,
        }),
        csv: vec![
            ["mu", "closed_form", "derivative", "generating_function", "pass"].map(String::from).to_vec(),
            vec![mu.to_string(), format_q(&closed), derivative.clone(), format_q(&generating), pass.to_string()],
        ],
    })
}

fn diff_lines(diff: &[(Partition, String, String)]) -> Vec<String> {
    diff.iter()
        .map(|(l, a, b)| format!("      Ω[{l}]: {a} vs {b}"))
        .collect()
}

pub fn theorem13(r: u32, n: u32, limits: &Limits) -> CliResult {
    check_ambient(r, n, limits)?;
    let reports = theorem13_sweep(r, n)?;
    let pass = reports.iter().all(|t| t.pass);
    let checks: usize = reports.iter().map(|t| t.checks.len()).sum();
    let mut summary = Vec::new();
    let mut detail = Vec::new();
    let mut csv = vec![vec!["partition".into(), "i".into(), "pass".into()]];
    for t in &reports {
        for c in &t.checks {
            let line = format!("  λ = {}, i = {}: σ_i ∩ Ω^λ = {} {}", t.partition, c.i, c.cap, verdict(c.pass));
            csv.push(vec![t.partition.to_string(), c.i.to_string(), c.pass.to_string()]);
            if c.pass {
                detail.push(line);
            } else {
                summary.push(line);
                summary.push(format!("      operator side: {}", c.operator));
                summary.extend(diff_lines(&c.diff));
                if !c.leaked.is_zero() {
                    summary.push(format!("      outside the box: {}", c.leaked));
                }
            }
        }
    }
    summary.push(format!(
        "theorem13 G({r},{n}): {} partitions, {checks} checks {}",
        reports.len(),
        verdict(pass)
    ));
    Ok(Outcome {
        pass,
        summary,
        detail,
        json: json!({ "command": "verify theorem13", "r": r, "n": n, "reports": reports, "pass": pass }),
        csv,
    })
}

fn render_products(products: &[SigmaProduct]) -> String {
    if products.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, p) in products.iter().enumerate() {
        let sign = if p.sign < 0 { "-" } else { "+" };
        if k == 0 {
            if p.sign < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if p.indices.is_empty() {
            out.push('1');
        } else {
            out.push_str(&p.indices.iter().map(|i| format!("σ{i}")).collect::<Vec<_>>().join(""));
        }
    }
    out
}

pub fn giambelli(r: u32, n: u32, limits: &Limits) -> CliResult {
    check_ambient(r, n, limits)?;
    let reports = giambelli_sweep(r, n)?;
    let pass = reports.iter().all(|g| g.pass);
    let mut summary = Vec::new();
    let mut detail = Vec::new();
    let mut csv = vec![vec!["partition".into(), "complement".into(), "pass".into()]];
    for g in &reports {
        let line = format!(
            "  λ = {}: ({}) ∩ [G] = {} {}",
            g.partition,
            render_products(&g.products),
            g.result,
            verdict(g.pass)
        );
        csv.push(vec![g.partition.to_string(), g.complement.to_string(), g.pass.to_string()]);
        if g.pass {
            detail.push(line);
        } else {
            summary.push(line);
            summary.extend(diff_lines(&g.diff));
        }
    }
    summary.push(format!("giambelli G({r},{n}): {} partitions {}", reports.len(), verdict(pass)));
    Ok(Outcome {
        pass,
        summary,
        detail,
        json: json!({ "command": "verify giambelli", "r": r, "n": n, "reports": reports, "pass": pass }),
        csv,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn fock(r: usize, n: usize, cut: u32, limits: &Limits) -> CliResult {
    if r == 0 || r > n {
        return Err(CliError::Usage(format!("need 0 < r <= n, got r = {r}, n = {n}")));
    }
    let top = (r * (n - r)) as u32;
    if cut > top {
        return Err(CliError::Usage(format!("cut {cut} exceeds r(n-r) = {top}")));
    }
    limits.check_weight(cut, &format!("cut {cut}"))?;
    let dim = binomial(n as u64, r as u64);
    if dim > MAX_WEDGE_DIMENSION {
        return Err(CliError::Refused(format!(
            "⋀^{r} V_{n} has dimension {dim}, above the limit {MAX_WEDGE_DIMENSION}"
        )));
    }
    let suite = derivation_suite(r, n, cut);
    let bf = boson_fermion_check(r, n, cut)?;
    let pass = suite.pass() && bf.pass;
    let mut summary = vec![
        format!("  σ_+ Pieri = plethystic exponential   {}", verdict(suite.pieri_equals_exponential)),
        format!("  σ_- exponential = dual Pieri          {}", verdict(suite.minus_equals_dual_pieri)),
        format!("  Leibniz rule                          {}", verdict(suite.leibniz)),
        format!("  adjointness                           {}", verdict(suite.adjoint)),
        format!("  σ_+ σ̄_+ = id                          {}", verdict(suite.inverse_series)),
        format!(
            "  boson-fermion through degree {cut:<9}{} ({} partitions)",
            verdict(bf.pass),
            bf.compared
        ),
    ];
    for f in &suite.failures {
        summary.push(format!("      {f}"));
    }
    for m in &bf.mismatches {
        summary.push(format!("      X^r({}): got {}, expected {}", m.partition, m.got, m.expected));
    }
    summary.push(format!("fock ⋀^{r} V_{n}, order {cut}: {}", verdict(pass)));
    let csv = vec![
        vec!["check".into(), "pass".into()],
        vec!["pieri_equals_exponential".into(), suite.pieri_equals_exponential.to_string()],
        vec!["minus_equals_dual_pieri".into(), suite.minus_equals_dual_pieri.to_string()],
        vec!["leibniz".into(), suite.leibniz.to_string()],
        vec!["adjoint".into(), suite.adjoint.to_string()],
        vec!["inverse_series".into(), suite.inverse_series.to_string()],
        vec!["boson_fermion".into(), bf.pass.to_string()],
    ];
    Ok(Outcome {
        pass,
        summary,
        detail: Vec::new(),
        json: json!({
            "command": "verify fock",
            "r": r,
            "n": n,
            "cut": cut,
            "derivations": suite,
            "boson_fermion": bf,
            "pass": pass,
        }),
        csv,
    })
}

pub fn expand(text: &str, limits: &Limits) -> CliResult {
    let poly = WeightedPolynomial::from_str(text)
        .map_err(|e| CliError::Usage(format!("cannot parse polynomial {text:?}: {e}")))?;
    let top = poly.max_weighted_degree().unwrap_or(0);
    limits.check_weight(top, "polynomial")?;
    let expansion = expand_in_schur(&poly)?;
    let pass = expansion.to_polynomial() == poly;
    let mut csv = vec![vec!["partition".into(), "coef".into()]];
    for (l, c) in expansion.terms() {
        csv.push(vec![l.to_string(), format_q(c)]);
    }
    Ok(Outcome {
        pass,
        summary: vec![expansion.to_string()],
        detail: vec![format!("  input: {poly}"), format!("  round trip {}", verdict(pass))],
        json: json!({
            "command": "expand",
            "input": poly,
            "expansion": expansion,
            "pass": pass,
        }),
        csv,
    })
}
