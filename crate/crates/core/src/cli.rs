//! Command-line front end.
//!
//! Every command produces a list of [`OutputRecord`]s which are rendered as
//! plain text, JSON lines or CSV. Exact values are always strings (`"p"` or
//! `"p/q"`); the only JSON numbers are the millisecond timings.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::classes::{self, chi_values, euler_char, stirling_trace, Formula};
use crate::lambert::{a_n_polynomial, f_m_polynomial, sigma_poly, FmPoly};
use crate::poly::Poly;
use crate::ppoly::{self, delta_poly, gamma_poly, p_polynomial, precompute, ulc_certify};
use crate::ring::{q_to_string, scalar_mul_count, Q};
use crate::suite::{self, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "mbar0n", version, about = "Exact classes and Betti numbers of M̄(0,n) and related polynomial families")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel commands.
    #[arg(long, global = true, value_name = "K")]
    pub threads: Option<usize>,
    /// Reserved for randomized suites; currently unused.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassFormula {
    Stirling,
    Keel,
    Ellsum,
    Getzler,
    Trace,
    Bernoulli,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BettiFormula {
    Stirling,
    Keel,
    Ellsum,
    Getzler,
    Trace,
    Bernoulli,
    Gamma,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Identities,
    Crosscheck,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Grothendieck class of M̄(0,n).
    Class {
        n: usize,
        #[arg(long, value_enum, default_value_t = ClassFormula::Stirling)]
        formula: ClassFormula,
    },
    /// Betti number rk H^{2ℓ} of M̄(0,n).
    Betti {
        n: usize,
        ell: usize,
        #[arg(long, value_enum, default_value_t = BettiFormula::Stirling)]
        formula: BettiFormula,
    },
    /// Euler characteristic of M̄(0,n).
    Euler { n: usize },
    /// (n-1)!-scaled coefficients of the Euler characteristic series through z^order.
    ChiSeries { order: usize },
    /// The polynomial p_m^(k)(z).
    PPoly { k: usize, m: usize },
    /// Γ_mj(ℓ).
    Gamma { m: usize, j: usize },
    /// Δ_mj(ℓ).
    Delta { m: usize, j: usize },
    /// F_m(z, T), one row per power of z.
    FPoly { m: usize },
    /// σ_a(x).
    Sigma { a: usize },
    /// a_n(k), the values along the n-th trace diagonal.
    APoly { n: usize },
    /// Ultra-log-concavity certificates for m_min ≤ m ≤ m_max.
    Ulc { m_min: usize, m_max: usize },
    /// Shifted trace tr_{n-2} through L^order and the class it yields.
    Trace { n: usize, order: usize },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_name = "N")]
        n_max: Option<usize>,
        #[arg(long, value_name = "M")]
        m_max: Option<usize>,
    },
    /// Time every class route and count scalar multiplications.
    Bench {
        #[arg(long, value_name = "N", default_value_t = 20)]
        n_max: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// One computed result.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub result: Value,
    pub ms: u64,
    /// Plain-text rendering of `result`.
    pub text: String,
}

impl OutputRecord {
    pub fn new(kind: &str, params: &[(&str, String)], result: Value, text: String) -> Self {
        OutputRecord {
            kind: kind.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            result,
            ms: 0,
            text,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "kind": self.kind, "params": self.params, "result": self.result, "ms": self.ms })
    }

    /// One JSON line; keys are sorted at every level.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("records serialize")
    }

    fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }

    fn result_string(&self) -> String {
        match &self.result {
            Value::String(s) => s.clone(),
            Value::Array(a) if a.iter().all(Value::is_string) => {
                a.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(",")
            }
            v => v.to_string(),
        }
    }
}

fn strings(p: &Poly<Q>) -> Value {
    let mut c = p.coeff_strings();
    if c.is_empty() {
        c.push("0".into());
    }
    json!(c)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn timed(f: impl FnOnce() -> Vec<OutputRecord>) -> Vec<OutputRecord> {
    let t = Instant::now();
    let mut out = f();
    let ms = t.elapsed().as_millis() as u64;
    for r in &mut out {
        r.ms = ms;
    }
    out
}

fn class_routes(f: ClassFormula) -> Vec<Formula> {
    match f {
        ClassFormula::Stirling => vec![Formula::Stirling],
        ClassFormula::Keel => vec![Formula::Keel],
        ClassFormula::Ellsum => vec![Formula::EllSum],
        ClassFormula::Getzler => vec![Formula::Getzler],
        ClassFormula::Trace => vec![Formula::Trace],
        ClassFormula::Bernoulli => vec![Formula::Bernoulli],
        ClassFormula::All => Formula::CLASS_ROUTES.to_vec(),
    }
}

fn class_records(n: usize, formula: ClassFormula) -> Result<Vec<OutputRecord>, CliError> {
    if n < 3 {
        return Err(usage("class needs n >= 3"));
    }
    let mut out = Vec::new();
    for f in class_routes(formula) {
        out.extend(timed(|| {
            let c = f.class(n);
            let row = c.poly.coeff_strings().join(",");
            vec![OutputRecord::new(
                "class",
                &[("n", n.to_string()), ("formula", f.name().into())],
                strings(&c.poly),
                format!("{row}\t{}", f.name()),
            )]
        }));
    }
    Ok(out)
}

fn betti_records(n: usize, ell: usize, formula: BettiFormula) -> Result<Vec<OutputRecord>, CliError> {
    if n < 3 {
        return Err(usage("betti needs n >= 3"));
    }
    let routes: Vec<(&str, Box<dyn Fn() -> String>)> = {
        let class_route = |f: Formula| -> (&str, Box<dyn Fn() -> String>) {
            (f.name(), Box::new(move || f.class(n).betti(ell).to_string()))
        };
        let mut v = Vec::new();
        let all = formula == BettiFormula::All;
        let pairs = [
            (BettiFormula::Stirling, Formula::Stirling),
            (BettiFormula::Keel, Formula::Keel),
            (BettiFormula::Ellsum, Formula::EllSum),
            (BettiFormula::Getzler, Formula::Getzler),
            (BettiFormula::Trace, Formula::Trace),
        ];
        for (b, f) in pairs {
            if all || formula == b {
                v.push(class_route(f));
            }
        }
        if all || formula == BettiFormula::Bernoulli {
            v.push(("bernoulli", Box::new(move || classes::betti_bernoulli(n, ell).to_string())));
        }
        if all || formula == BettiFormula::Gamma {
            v.push(("gamma", Box::new(move || ppoly::betti_gamma(n, ell).to_string())));
        }
        v
    };
    let mut out = Vec::new();
    for (name, f) in routes {
        out.extend(timed(|| {
            let v = f();
            let text = if formula == BettiFormula::All { format!("{v}\t{name}") } else { v.clone() };
            vec![OutputRecord::new(
                "betti",
                &[("n", n.to_string()), ("ell", ell.to_string()), ("formula", name.into())],
                json!(v),
                text,
            )]
        }));
    }
    Ok(out)
}

fn poly_record(kind: &str, params: &[(&str, String)], p: &Poly<Q>, var: &str) -> OutputRecord {
    OutputRecord::new(kind, params, strings(p), p.display(var))
}

fn f_poly_record(m: usize) -> OutputRecord {
    match f_m_polynomial(m) {
        FmPoly::Geometric => OutputRecord::new("f-poly", &[("m", "0".into())], json!("1/(1-T)"), "1/(1-T)".into()),
        fm => {
            let rows: Vec<Value> = (0..=2 * m).map(|j| strings(&fm.z_coeff(j))).collect();
            let text = (0..=2 * m)
                .map(|j| format!("z^{j}: {}", fm.z_coeff(j).display("T")))
                .collect::<Vec<_>>()
                .join("\n");
            OutputRecord::new("f-poly", &[("m", m.to_string())], json!(rows), text)
        }
    }
}

fn ulc_records(m_min: usize, m_max: usize) -> Result<Vec<OutputRecord>, CliError> {
    use rayon::prelude::*;
    if m_min < 1 || m_min > m_max {
        return Err(usage("ulc needs 1 <= m_min <= m_max"));
    }
    precompute(m_max);
    let t = Instant::now();
    let reports: Vec<_> = (m_min..=m_max).into_par_iter().map(|m| ulc_certify(m, 10)).collect();
    let ms = t.elapsed().as_millis() as u64;
    Ok(reports
        .into_iter()
        .map(|r| {
            let ks: Vec<String> = r.exceptional_ell.iter().map(|l| (l + r.m).to_string()).collect();
            let text = if ks.is_empty() && !r.fails_eventually {
                format!("m={}: ultra-log-concave for every k >= m", r.m)
            } else {
                let mut s = format!("m={}: exceptions at k = {}", r.m, ks.join(", "));
                if r.fails_eventually {
                    s.push_str(" and for all large k");
                }
                s
            };
            let mut rec = OutputRecord::new(
                "ulc",
                &[("m", r.m.to_string())],
                json!({
                    "exceptional_k": ks,
                    "fails_eventually": r.fails_eventually,
                    "all_pass": r.all_pass(),
                }),
                text,
            );
            rec.ms = ms;
            rec
        })
        .collect())
}

fn trace_record(n: usize, order: usize) -> Result<OutputRecord, CliError> {
    if n < 3 || order + 3 < n {
        return Err(usage("trace needs n >= 3 and order >= n-3"));
    }
    let (tr, class) = stirling_trace(n, order);
    let coeffs: Vec<String> = tr.coeffs().iter().map(q_to_string).collect();
    Ok(OutputRecord::new(
        "trace",
        &[("n", n.to_string()), ("order", order.to_string())],
        json!({ "series": coeffs, "class": class.poly.coeff_strings() }),
        format!("tr = {}\nclass = {}", tr.display(), class.poly.display("L")),
    ))
}

fn verify_records(suite_arg: SuiteArg, n_max: Option<usize>, m_max: Option<usize>) -> Result<(Vec<OutputRecord>, bool), CliError> {
    let mut cfg = SuiteConfig::default();
    if let Some(n) = n_max {
        if n < 6 {
            return Err(usage("--n-max must be at least 6"));
        }
        cfg.n_max = n;
    }
    if let Some(m) = m_max {
        if m < 20 {
            return Err(usage("--m-max must be at least 20"));
        }
        cfg.m_max = m;
    }
    let suite = match suite_arg {
        SuiteArg::All => Suite::All,
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Crosscheck => Suite::Crosscheck,
    };
    let mut ok = true;
    let mut out = Vec::new();
    for &i in suite.criteria() {
        out.extend(timed(|| {
            let r = suite::criterion(i, &cfg);
            ok &= r.passed;
            let mut text = r.to_string();
            for n in &r.notes {
                text.push_str(&format!("\n  note: {n}"));
            }
            let mut params = vec![("criterion", i.to_string())];
            params.extend(r.params.iter().map(|(k, v)| (k.as_str(), v.clone())));
            vec![OutputRecord::new(
                "verify",
                &params,
                json!({
                    "name": r.name,
                    "passed": r.passed,
                    "witness": r.witness,
                    "notes": r.notes,
                }),
                text,
            )]
        }));
    }
    Ok((out, ok))
}

fn bench_records(n_max: usize) -> Result<Vec<OutputRecord>, CliError> {
    if n_max < 3 {
        return Err(usage("bench needs --n-max >= 3"));
    }
    let mut routes = Formula::CLASS_ROUTES.to_vec();
    routes.push(Formula::Bernoulli);
    let mut out = Vec::new();
    for f in routes {
        let before = scalar_mul_count();
        let t = Instant::now();
        for n in 3..=n_max {
            f.class(n);
        }
        let ms = t.elapsed().as_millis() as u64;
        let muls = scalar_mul_count() - before;
        let mut rec = OutputRecord::new(
            "bench",
            &[("n_max", n_max.to_string()), ("formula", f.name().into())],
            json!({ "scalar_muls": muls.to_string() }),
            format!("{:<10} {:>10} ms {:>14} scalar muls", f.name(), ms, muls),
        );
        rec.ms = ms;
        out.push(rec);
    }
    Ok(out)
}

fn execute(cmd: &Command) -> Result<(Vec<OutputRecord>, bool), CliError> {
    let one = |r: OutputRecord| vec![r];
    let recs = match *cmd {
        Command::Class { n, formula } => class_records(n, formula)?,
        Command::Betti { n, ell, formula } => betti_records(n, ell, formula)?,
        Command::Euler { n } => {
            if n < 3 {
                return Err(usage("euler needs n >= 3"));
            }
            timed(|| {
                let chi = euler_char(n).to_string();
                one(OutputRecord::new("euler", &[("n", n.to_string())], json!(chi), chi))
            })
        }
        Command::ChiSeries { order } => timed(|| {
            let v: Vec<String> = chi_values(order).iter().map(|c| c.to_string()).collect();
            one(OutputRecord::new("chi-series", &[("order", order.to_string())], json!(v), v.join(",")))
        }),
        Command::PPoly { k, m } => {
            if m > k {
                return Err(usage("p-poly needs m <= k"));
            }
            timed(|| one(poly_record("p-poly", &[("k", k.to_string()), ("m", m.to_string())], &p_polynomial(k, m), "z")))
        }
        Command::Gamma { m, j } => {
            if j > 2 * m {
                return Err(usage("gamma needs j <= 2m"));
            }
            timed(|| one(poly_record("gamma", &[("m", m.to_string()), ("j", j.to_string())], &gamma_poly(m, j), "l")))
        }
        Command::Delta { m, j } => {
            if j > 2 * m {
                return Err(usage("delta needs j <= 2m"));
            }
            timed(|| one(poly_record("delta", &[("m", m.to_string()), ("j", j.to_string())], &delta_poly(m, j), "l")))
        }
        Command::FPoly { m } => timed(|| one(f_poly_record(m))),
        Command::Sigma { a } => {
            if a < 1 {
                return Err(usage("sigma needs a >= 1"));
            }
            timed(|| one(poly_record("sigma", &[("a", a.to_string())], &sigma_poly(a), "x")))
        }
        Command::APoly { n } => {
            if n < 3 {
                return Err(usage("a-poly needs n >= 3"));
            }
            timed(|| one(poly_record("a-poly", &[("n", n.to_string())], &a_n_polynomial(n), "k")))
        }
        Command::Ulc { m_min, m_max } => ulc_records(m_min, m_max)?,
        Command::Trace { n, order } => {
            let t = Instant::now();
            let mut r = trace_record(n, order)?;
            r.ms = t.elapsed().as_millis() as u64;
            vec![r]
        }
        Command::Verify { suite, n_max, m_max } => return verify_records(suite, n_max, m_max),
        Command::Bench { n_max } => bench_records(n_max)?,
    };
    Ok((recs, true))
}

/// Renders records in the requested format.
pub fn render(records: &[OutputRecord], format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => records.iter().map(|r| format!("{}\n", r.text)).collect(),
        Format::Json => records.iter().map(|r| format!("{}\n", r.to_json_line())).collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["kind", "params", "result", "ms"])?;
            for r in records {
                w.write_record([r.kind.clone(), r.params_string(), r.result_string(), r.ms.to_string()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is UTF-8")
        }
    })
}

fn run_cli(cli: &Cli) -> Result<bool, CliError> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(usage("--threads must be positive"));
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let (records, ok) = match catch_unwind(AssertUnwindSafe(|| execute(&cli.command))) {
        Ok(r) => r?,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            return Err(CliError::Internal(msg));
        }
    };
    let text = render(&records, cli.format)?;
    match &cli.out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if !ok {
        for r in &records {
            if r.result.get("passed") == Some(&Value::Bool(false)) {
                eprintln!("{}", r.text);
            }
        }
    }
    Ok(ok)
}

/// Parses `args` (program name first) and runs the command.
///
/// Returns the process exit code: 0 on success, 1 on a failed verification
/// or internal check, 2 on a usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_cli(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn records(args: &[&str]) -> Vec<OutputRecord> {
        let cli = Cli::try_parse_from(std::iter::once("mbar0n").chain(args.iter().copied())).unwrap();
        execute(&cli.command).unwrap().0
    }

    #[test]
    fn class_all_rows_agree() {
        let recs = records(&["class", "6", "--formula", "all"]);
        assert_eq!(recs.len(), 5);
        for r in &recs {
            assert!(r.text.starts_with("1,16,16,1\t"));
        }
    }

    #[test]
    fn betti_default() {
        let recs = records(&["betti", "10", "3"]);
        assert_eq!(recs[0].text, "63173");
    }

    #[test]
    fn json_round_trip() {
        let recs = records(&["p-poly", "2", "2"]);
        let line = recs[0].to_json_line();
        let v: Value = serde_json::from_str(&line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), line);
        assert!(line.starts_with("{\"kind\":\"p-poly\",\"ms\":"));
        assert!(line.contains("\"result\":[\"1/2\",\"2\",\"2\",\"5/6\",\"1/8\"]"));
    }

    #[test]
    fn csv_has_header() {
        let out = render(&records(&["sigma", "4"]), Format::Csv).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("kind,params,result,ms"));
        assert!(lines.next().unwrap().starts_with("sigma,a=4,"));
    }

    #[test]
    fn usage_errors() {
        let parse = |a: &[&str]| Cli::try_parse_from(std::iter::once("mbar0n").chain(a.iter().copied()));
        assert!(parse(&["class"]).is_err());
        assert!(parse(&["--format", "yaml", "euler", "5"]).is_err());
        for a in [&["class", "2"][..], &["gamma", "1", "3"], &["ulc", "4", "2"]] {
            let cli = parse(a).unwrap();
            assert!(matches!(execute(&cli.command), Err(CliError::Usage(_))), "{a:?}");
        }
    }

    #[test]
    fn ulc_exceptions() {
        let recs = records(&["ulc", "1", "6"]);
        let ks: Vec<(usize, Vec<String>)> = recs
            .iter()
            .map(|r| {
                let m = r.params["m"].parse().unwrap();
                let k = r.result["exceptional_k"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string());
                (m, k.collect())
            })
            .collect();
        let want: Vec<(usize, Vec<String>)> = (1..=6)
            .map(|m| (m, if m % 2 == 1 && m <= 5 { vec![m.to_string()] } else { vec![] }))
            .collect();
        assert_eq!(ks, want);
    }
}
