//! Command-line front end.
//!
//! Exit codes: 0 certified, verified, or complete without a witness; 1 a
//! witness was found (refuted, reducible); 2 unknown or inapplicable;
//! 3 usage or internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certificates::{certify_with, Certificate, Status};
use crate::constructions::{
    domain_substitution, even_split_substitution, field_substitution, naive_substitution, quartic_witness,
    SubstitutionWitness,
};
use crate::error::{Error, Result};
use crate::factor::{factor_over_rationals, Factorization};
use crate::parse::parse_polynomial;
use crate::poly::{IntPoly, RatPoly};
use crate::search::{self, SearchJob, SearchOptions, SearchReport};
use crate::weak::{congruence_verify, trinomial, trinomial_disc, weak_check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WITNESS: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Naive,
    Field,
    Domain,
    EvenSplit,
    Quartic,
}

#[derive(Debug, Parser)]
#[command(name = "superirred", version, about = "Composition irreducibility toolkit")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "SUPERIRRED_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor a polynomial over the rationals.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Compose f(g) and factor the result.
    Compose {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Build a reducing substitution with a verified factorization.
    Construct {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum)]
        method: Method,
        /// Exponent k in g = x^k f + x (naive method).
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Certify or refute 2-superirreducibility of a*x^(4k) + b.
    Certify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Sweep quadratic substitutions for a reducing witness.
    Search {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 10)]
        bound: u64,
        /// Also allow denominators up to --denom.
        #[arg(long)]
        rational: bool,
        #[arg(long, default_value_t = 1)]
        denom: u64,
        /// JSON Lines checkpoint file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint instead of starting over.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Stop after this many slices.
        #[arg(long)]
        max_slices: Option<u64>,
    },
    /// Check f_k(a*x^j + b), j = 1, 2, for irreducibility over a box.
    WeakCheck {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Exhaustive mod-4 obstruction check for f_k.
    CongruenceVerify {
        #[arg(long)]
        k: u32,
    },
    /// Discriminant of x^(2k+1) + 2x + 1, closed form against resultant.
    Disc {
        #[arg(long = "trinomial-k")]
        trinomial_k: u32,
    },
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Text => write!(out, "{}", text())?,
    }
    Ok(())
}

fn integral(f: &RatPoly) -> Result<IntPoly> {
    f.to_int()
        .ok_or_else(|| Error::InvalidArgument(format!("{f} must have integer coefficients")))
}

pub fn render_factorization(fac: &Factorization) -> String {
    let mut parts = vec![fac.unit.to_string()];
    for (g, m) in &fac.factors {
        if *m == 1 {
            parts.push(format!("({g})"));
        } else {
            parts.push(format!("({g})^{m}"));
        }
    }
    parts.join(" * ")
}

pub fn render_witness(w: &SubstitutionWitness) -> String {
    format!(
        "f = {}\ng = {}\nf(g) = {} * ({}) * ({})\n",
        w.target, w.substitution, w.scalar, w.divisor, w.cofactor
    )
}

pub fn render_certificate(c: &Certificate) -> String {
    let mut s = format!("input: {}\nstatus: {:?}\n", c.input, c.status);
    if let Some(rule) = c.rule {
        s += &format!("rule: {}\n", serde_json::to_string(&rule).unwrap_or_default().trim_matches('"'));
    }
    if let Some(d) = &c.equivalent_d {
        s += &format!("equivalent D: {d}\n");
    }
    if let Some(t) = &c.witnesses.diophantine {
        s += &format!("solution: x^4 + ({})y^4 = z^2 at (x, y, z) = ({}, {}, {})\n", t.d, t.x, t.y, t.z);
    }
    if let Some(w) = &c.witnesses.substitution {
        s += &render_witness(w);
    }
    for r in &c.references {
        s += &format!("because: {r}\n");
    }
    s
}

pub fn render_report(r: &SearchReport) -> String {
    let mut s = format!(
        "target: {}\nmode: {:?}, bound {}, denominators up to {}\nslices: {}/{}{}\n",
        r.target,
        r.mode,
        r.bounds.coeff,
        r.bounds.denom,
        r.checkpoint,
        r.slices_total,
        if r.exhausted { " (exhausted)" } else { "" }
    );
    if r.witnesses.is_empty() {
        s += "no witness\n";
    }
    for w in &r.witnesses {
        s += &format!("witness g = {}  divisor degree {}\n", w.substitution, w.divisor.deg());
    }
    s
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    match &cli.command {
        Command::Factor { poly } => {
            let f = parse_polynomial(poly)?;
            let fac = factor_over_rationals(&f)?;
            emit(out, fmt, &fac, || format!("{f} = {}\n", render_factorization(&fac)))?;
            Ok(EXIT_OK)
        }
        Command::Compose { f, g } => {
            let f = parse_polynomial(f)?;
            let g = parse_polynomial(g)?;
            let h = f.compose(&g);
            let fac = factor_over_rationals(&h)?;
            let value = serde_json::json!({ "composition": h, "factorization": fac });
            emit(out, fmt, &value, || format!("f(g) = {h}\n      = {}\n", render_factorization(&fac)))?;
            Ok(if fac.is_irreducible() { EXIT_OK } else { EXIT_WITNESS })
        }
        Command::Construct { poly, method, k } => {
            let f = parse_polynomial(poly)?;
            let w = match method {
                Method::Naive => Some(naive_substitution(&integral(&f)?, *k)?),
                Method::Field => Some(field_substitution(&f)?),
                Method::Domain => Some(domain_substitution(&integral(&f)?)?),
                Method::EvenSplit => Some(even_split_substitution(&f)?),
                Method::Quartic => quartic_witness(&f)?,
            };
            match w {
                Some(w) => {
                    emit(out, fmt, &w, || render_witness(&w))?;
                    Ok(EXIT_WITNESS)
                }
                None => {
                    emit(out, fmt, &serde_json::Value::Null, || "criterion does not apply\n".into())?;
                    Ok(EXIT_UNKNOWN)
                }
            }
        }
        Command::Certify { poly, bound } => {
            let f = integral(&parse_polynomial(poly)?)?;
            let opts = SearchOptions { jobs: cli.jobs, ..Default::default() };
            let cert = certify_with(&f, *bound, &opts)?;
            cert.verify()?;
            emit(out, fmt, &cert, || render_certificate(&cert))?;
            Ok(match cert.status {
                Status::Certified => EXIT_OK,
                Status::Refuted => EXIT_WITNESS,
                Status::MethodInapplicable | Status::Unknown => EXIT_UNKNOWN,
            })
        }
        Command::Search { poly, bound, rational, denom, checkpoint, resume, max_slices } => {
            let f = parse_polynomial(poly)?;
            let job = if *rational {
                SearchJob::rational(&f, *bound, *denom)?
            } else {
                if *denom != 1 {
                    return Err(Error::InvalidArgument("--denom needs --rational".into()));
                }
                SearchJob::integer(&f, *bound)?
            };
            let opts = SearchOptions { jobs: cli.jobs, checkpoint: checkpoint.clone(), max_slices: *max_slices };
            let report = match (resume, checkpoint) {
                (true, Some(path)) => search::resume(path, &job, &opts)?,
                _ => search::run(&job, &opts)?,
            };
            emit(out, fmt, &report, || render_report(&report))?;
            Ok(if report.found() {
                EXIT_WITNESS
            } else if report.exhausted {
                EXIT_OK
            } else {
                EXIT_UNKNOWN
            })
        }
        Command::WeakCheck { k, bound } => {
            let r = weak_check(*k, *bound)?;
            emit(out, fmt, &r, || {
                let mut s = format!(
                    "f_{k} = {}\nchecked {} quadratic and {} linear substitutions\n",
                    trinomial(*k).map(|f| f.to_string()).unwrap_or_default(),
                    r.quadratic_checked,
                    r.linear_checked
                );
                if r.passed() {
                    s += "pass: every composition is irreducible\n";
                }
                for c in &r.counterexamples {
                    s += &format!("reducible at g = {}*x^{} + {}\n", c.a, c.j, c.b);
                }
                s
            })?;
            Ok(if r.passed() { EXIT_OK } else { EXIT_WITNESS })
        }
        Command::CongruenceVerify { k } => {
            let r = congruence_verify(*k)?;
            emit(out, fmt, &r, || {
                format!(
                    "k = {}: {} primitive vectors mod 4, {} reach the linear form, {} violations\n",
                    r.k,
                    r.vectors_checked,
                    r.candidates,
                    r.violations.len()
                )
            })?;
            Ok(if r.passed() { EXIT_OK } else { EXIT_WITNESS })
        }
        Command::Disc { trinomial_k } => {
            let d = trinomial_disc(*trinomial_k)?;
            let value = serde_json::json!({ "k": trinomial_k, "discriminant": d.to_string() });
            emit(out, fmt, &value, || format!("disc(f_{trinomial_k}) = {d}\n"))?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["superirred"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn certify_exit_codes() {
        assert_eq!(call(&["certify", "x^4+7"]).0, EXIT_OK);
        assert_eq!(call(&["certify", "x^4+3"]).0, EXIT_UNKNOWN);
        assert_eq!(call(&["certify", "x^4+4"]).0, EXIT_WITNESS);
        assert_eq!(call(&["certify", "x^4+x+7"]).0, EXIT_ERROR);
    }

    #[test]
    fn search_finds_rational_witness() {
        let (code, text) = call(&["search", "x^4+x^2+2*x+3", "--bound", "3", "--rational", "--denom", "2"]);
        assert_eq!(code, EXIT_WITNESS);
        assert!(text.contains("witness g = -1/2*x^2 - 1/2*x - 3/2"), "{text}");
    }

    #[test]
    fn weak_and_disc() {
        assert_eq!(call(&["weak-check", "--k", "2", "--bound", "4"]).0, EXIT_OK);
        let (code, text) = call(&["disc", "--trinomial-k", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("11317"));
        assert_eq!(call(&["congruence-verify", "--k", "2"]).0, EXIT_OK);
    }

    #[test]
    fn construct_and_json() {
        let (code, text) = call(&["construct", "x^3+2*x+1", "--method", "domain", "--format", "json"]);
        assert_eq!(code, EXIT_WITNESS);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["substitution"], serde_json::json!(["0", "-8", "-16"]));
        assert_eq!(call(&["construct", "x^4+1", "--method", "quartic"]).0, EXIT_UNKNOWN);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_ERROR);
        let (code, text) = call(&["factor", "x^^2"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(text.contains("offset 2"));
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn factor_and_compose() {
        let (code, text) = call(&["factor", "x^4+4"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("(x^2 - 2*x + 2) * (x^2 + 2*x + 2)"), "{text}");
        assert_eq!(call(&["compose", "x^2+1", "x^2+x+1"]).0, EXIT_WITNESS);
        assert_eq!(call(&["compose", "x^4+1", "x^2"]).0, EXIT_OK);
        let (code, text) = call(&["factor", "-x^2+1"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("(x - 1)"), "{text}");
    }
}
