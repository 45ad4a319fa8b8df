//! Command-line front end. Output on stdout is deterministic; stage timings
//! go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{self, Check, Suite};
use crate::enumerate::Limits;
use crate::error::{Error, Result};
use crate::mlieadm::{mla_basis, mla_basis_multilinear, mla_dims, mla_nf_term, mla_sym_generators};
use crate::mnov::{nov_basis, nov_basis_multilinear, nov_dims, nov_nf_term, nov_sym_generators};
use crate::oracle::{consequence_basis, dim_multilinear, ColumnRanking, IdentitySet};
use crate::parse::{parse_poly, parse_term};
use crate::poly::{format_coefficient, Polynomial};
use crate::term::{Signature, Term};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "metabel", version, about = "Normal forms, bases and dimensions of free metabelian algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Basis,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Basis,
    Table,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Basis => Suite::Basis,
            SuiteArg::Table => Suite::Table,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
struct Common {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Raise the degree caps of the oracle and the enumeration to this value.
    #[arg(long, global = true, value_name = "DEGREE")]
    max_cost: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multilinear dimensions per degree.
    Dims {
        /// novikov, mnov, lieadm, mlieadm, or custom together with --identities.
        #[arg(long)]
        variety: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long)]
        identities: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Normal form of a term.
    Nf {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        term: String,
        #[command(flatten)]
        common: Common,
    },
    /// Basis monomials of one degree.
    Basis {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        degree: usize,
        /// Number of generators; defaults to the degree.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        multilinear: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Symmetric polynomials of one degree.
    Sym {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-validation suites.
    Verify {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
    },
    /// Reduce a multilinear polynomial modulo the consequences of an
    /// identity file.
    Reduce {
        #[arg(long)]
        identities: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: Common,
    },
}

impl Common {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(cap) = self.max_cost {
            limits.oracle = cap;
            limits.enumeration = limits.enumeration.max(cap);
        }
        limits
    }
}

/// Structured normal forms exist for these two varieties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Structured {
    Mnov,
    Mlieadm,
}

impl Structured {
    fn parse(name: &str) -> Result<Self> {
        match name {
            "mnov" => Ok(Structured::Mnov),
            "mlieadm" => Ok(Structured::Mlieadm),
            other => Err(Error::UnknownVariety(format!(
                "{other} (only mnov and mlieadm have structured normal forms)"
            ))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Structured::Mnov => "mnov",
            Structured::Mlieadm => "mlieadm",
        }
    }

    fn signature(self) -> Signature {
        match self {
            Structured::Mnov => Signature::Star,
            Structured::Mlieadm => Signature::Polarized,
        }
    }
}

fn load_identities(path: &Path) -> Result<IdentitySet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "custom".into());
    IdentitySet::parse_file(name, &text)
}

fn resolve_variety(name: &str, identities: Option<&Path>) -> Result<IdentitySet> {
    match (name, identities) {
        ("custom", Some(path)) => load_identities(path),
        ("custom", None) => Err(Error::Unsupported("--variety custom needs --identities <path>".into())),
        (other, _) => IdentitySet::builtin(other),
    }
}

fn structured_dims(name: &str, n: usize) -> Result<u64> {
    match Structured::parse(name)? {
        Structured::Mnov => Ok(nov_dims(n) as u64),
        Structured::Mlieadm => Ok(mla_dims(n)),
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_parse_error() {
        EXIT_PARSE
    } else {
        EXIT_PRECONDITION
    }
}

fn poly_json(p: &Polynomial) -> Value {
    Value::Array(
        p.iter()
            .map(|(t, c)| json!({"coef": format_coefficient(c), "term": t.to_string()}))
            .collect(),
    )
}

fn checks_lines(out: &mut dyn Write, checks: &[Check]) -> std::io::Result<()> {
    for c in checks {
        writeln!(out, "{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)?;
    }
    Ok(())
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn timing(&mut self, stage: &str, start: Instant) {
        let _ = writeln!(self.err, "[{stage}] {} ms", start.elapsed().as_millis());
    }

    fn json(&mut self, v: &Value) -> Result<()> {
        let text = serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(self.out, "{text}").map_err(io_err)
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn cmd_dims(
    io: &mut Io,
    variety: &str,
    max_degree: usize,
    method: Method,
    identities: Option<&Path>,
    common: &Common,
) -> Result<i32> {
    if max_degree == 0 {
        return Err(Error::Unsupported("--max-degree must be at least 1".into()));
    }
    let limits = common.limits();
    let want_basis = method != Method::Oracle;
    let want_oracle = method != Method::Basis;
    if want_basis {
        Structured::parse(variety)?;
        limits.check_enumeration(max_degree)?;
    }
    let ids = if want_oracle {
        limits.check_oracle(max_degree)?;
        Some(resolve_variety(variety, identities)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut all_match = true;
    for n in 1..=max_degree {
        let basis = if want_basis {
            let start = Instant::now();
            let d = structured_dims(variety, n)?;
            io.timing(&format!("basis degree {n}"), start);
            Some(d)
        } else {
            None
        };
        let oracle = match &ids {
            Some(ids) => {
                let start = Instant::now();
                let d = dim_multilinear(ids, n, &limits)? as u64;
                io.timing(&format!("oracle degree {n}"), start);
                Some(d)
            }
            None => None,
        };
        let matched = match (basis, oracle) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        };
        all_match &= matched != Some(false);
        rows.push((n, basis, oracle, matched));
    }
    let method_name = match method {
        Method::Basis => "basis",
        Method::Oracle => "oracle",
        Method::Both => "both",
    };
    if common.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(n, b, o, m)| {
                let mut row = json!({"degree": n});
                if let Some(b) = b {
                    row["basis"] = json!(b);
                }
                if let Some(o) = o {
                    row["oracle"] = json!(o);
                }
                if let Some(m) = m {
                    row["match"] = json!(m);
                }
                row
            })
            .collect();
        io.json(&json!({"variety": variety, "method": method_name, "rows": rows}))?;
    } else if method == Method::Both {
        writeln!(io.out, "degree basis oracle match").map_err(io_err)?;
        for (n, b, o, m) in &rows {
            writeln!(io.out, "{n} {} {} {}", b.unwrap(), o.unwrap(), m.unwrap()).map_err(io_err)?;
        }
    } else {
        let values: Vec<String> = rows
            .iter()
            .map(|(_, b, o, _)| b.or(*o).unwrap().to_string())
            .collect();
        writeln!(io.out, "{}", values.join(" ")).map_err(io_err)?;
    }
    Ok(if all_match { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_nf(io: &mut Io, variety: &str, text: &str, common: &Common) -> Result<i32> {
    let v = Structured::parse(variety)?;
    let term = parse_term(text, v.signature())?;
    let start = Instant::now();
    let nf = match v {
        Structured::Mnov => nov_nf_term(&term)?.to_polynomial(),
        Structured::Mlieadm => mla_nf_term(&term)?,
    };
    io.timing("nf", start);
    if common.json {
        io.json(&json!({"variety": v.name(), "input": term.to_string(), "normal_form": poly_json(&nf)}))?;
    } else {
        writeln!(io.out, "{nf}").map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_basis(
    io: &mut Io,
    variety: &str,
    degree: usize,
    vars: Option<usize>,
    multilinear: bool,
    common: &Common,
) -> Result<i32> {
    let v = Structured::parse(variety)?;
    if degree == 0 || vars == Some(0) {
        return Err(Error::Unsupported("--degree and --vars must be at least 1".into()));
    }
    common.limits().check_enumeration(degree)?;
    let m = vars.unwrap_or(degree);
    if multilinear && m < degree {
        return Err(Error::Unsupported(format!(
            "a multilinear monomial of degree {degree} needs {degree} generators, got {m}"
        )));
    }
    let start = Instant::now();
    let terms: Vec<Term> = match (v, multilinear) {
        (Structured::Mnov, true) => nov_basis_multilinear(degree).iter().map(|b| b.to_term()).collect(),
        (Structured::Mnov, false) => nov_basis(degree, m).iter().map(|b| b.to_term()).collect(),
        (Structured::Mlieadm, true) => mla_basis_multilinear(degree).iter().map(|b| b.to_term()).collect(),
        (Structured::Mlieadm, false) => mla_basis(degree, m).iter().map(|b| b.to_term()).collect(),
    };
    io.timing("basis", start);
    if common.json {
        let list: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        io.json(&json!({"variety": v.name(), "degree": degree, "basis": list, "count": terms.len()}))?;
    } else {
        for t in &terms {
            writeln!(io.out, "{t}").map_err(io_err)?;
        }
        writeln!(io.out, "count={}", terms.len()).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_sym(io: &mut Io, variety: &str, degree: usize, verify: bool, common: &Common) -> Result<i32> {
    let v = Structured::parse(variety)?;
    if degree == 0 {
        return Err(Error::Unsupported("--degree must be at least 1".into()));
    }
    let limits = common.limits();
    let gens: Vec<(String, Polynomial)> = match v {
        Structured::Mnov => nov_sym_generators(degree).into_iter().map(|g| (g.label, g.poly)).collect(),
        Structured::Mlieadm => mla_sym_generators(degree)
            .into_iter()
            .map(|g| (g.label, g.poly))
            .collect(),
    };
    let checks = if verify {
        limits.check_oracle(degree)?;
        let start = Instant::now();
        let c = match v {
            Structured::Mnov => checks::nov_sym_checks(degree, &limits)?,
            Structured::Mlieadm => checks::mla_sym_checks(degree, &limits)?,
        };
        io.timing("verify", start);
        c
    } else {
        Vec::new()
    };
    let owned_by = |label: &str, c: &Check| c.name.starts_with(&format!("{label} "));
    if common.json {
        let generators: Vec<Value> = gens
            .iter()
            .map(|(label, poly)| {
                let mut g = json!({"label": label, "poly": poly.to_string()});
                if verify {
                    let mine: serde_json::Map<String, Value> = checks
                        .iter()
                        .filter(|c| owned_by(label, c))
                        .map(|c| (c.name[label.len() + 1..].to_string(), json!(c.pass)))
                        .collect();
                    g["checks"] = Value::Object(mine);
                }
                g
            })
            .collect();
        let mut doc = json!({"variety": v.name(), "degree": degree, "generators": generators});
        if verify {
            let global: Vec<&Check> = checks
                .iter()
                .filter(|c| !gens.iter().any(|(l, _)| owned_by(l, c)))
                .collect();
            doc["checks"] = json!(global);
        }
        io.json(&doc)?;
    } else {
        for (label, poly) in &gens {
            writeln!(io.out, "{label} = {poly}").map_err(io_err)?;
        }
        checks_lines(io.out, &checks).map_err(io_err)?;
    }
    Ok(if checks.iter().all(|c| c.pass) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_verify(io: &mut Io, variety: &str, degree: usize, suite: Suite, common: &Common) -> Result<i32> {
    let v = Structured::parse(variety)?;
    if degree == 0 {
        return Err(Error::Unsupported("--degree must be at least 1".into()));
    }
    let limits = common.limits();
    limits.check_oracle(degree)?;
    let start = Instant::now();
    let report = checks::run_suite(v.name(), suite, degree, &limits)?;
    io.timing(&format!("verify {}", suite.name()), start);
    if common.json {
        io.json(&serde_json::to_value(&report).map_err(|e| Error::Io(e.to_string()))?)?;
    } else {
        checks_lines(io.out, &report.checks).map_err(io_err)?;
        let failed = report.checks.iter().filter(|c| !c.pass).count();
        writeln!(
            io.out,
            "suite {}: {} checks, {} failed",
            report.suite,
            report.checks.len(),
            failed
        )
        .map_err(io_err)?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_reduce(io: &mut Io, path: &Path, degree: usize, text: &str, common: &Common) -> Result<i32> {
    let ids = load_identities(path)?;
    let poly = parse_poly(text, Some(ids.signature()))?;
    poly.check_multilinear(degree)?;
    let limits = common.limits();
    let start = Instant::now();
    let basis = consequence_basis(&ids, degree, &ColumnRanking::Default, &limits)?;
    io.timing("consequences", start);
    let reduced = basis.reduce(&poly)?;
    let consequence = reduced.is_zero();
    if common.json {
        io.json(&json!({
            "identities": ids.name(),
            "input": poly.to_string(),
            "reduced": poly_json(&reduced),
            "consequence": consequence,
        }))?;
    } else {
        writeln!(io.out, "{reduced}").map_err(io_err)?;
        writeln!(io.out, "consequence={consequence}").map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn dispatch(io: &mut Io, cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Dims {
            variety,
            max_degree,
            method,
            identities,
            common,
        } => cmd_dims(io, &variety, max_degree, method, identities.as_deref(), &common),
        Command::Nf { variety, term, common } => cmd_nf(io, &variety, &term, &common),
        Command::Basis {
            variety,
            degree,
            vars,
            multilinear,
            common,
        } => cmd_basis(io, &variety, degree, vars, multilinear, &common),
        Command::Sym {
            variety,
            degree,
            verify,
            common,
        } => cmd_sym(io, &variety, degree, verify, &common),
        Command::Verify {
            variety,
            degree,
            suite,
            common,
        } => cmd_verify(io, &variety, degree, suite.into(), &common),
        Command::Reduce {
            identities,
            degree,
            poly,
            common,
        } => cmd_reduce(io, &identities, degree, &poly, &common),
    }
}

/// Run the command line and return the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(&mut io, cli) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit_code(&e)
        }
    }
}
