//! Command-line front end. [`run`] parses argv and returns a [`Report`]; the
//! binary only prints it and exits with its code.

use std::ffi::OsString;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::colength::{colength, ColengthMode};
use crate::error::{Error, Result};
use crate::format::{big_to_json, parse_ideal};
use crate::hilbert::{hilbert_polynomial, mixed_multiplicities, mixed_via_vandermonde, MixedMultiplicities};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::milnor::{jacobian_ideal, milnor_report, BrieskornPolynomial};
use crate::newton::{closure_membership_oracle, closure_report, default_oracle_bound, is_reduction};
use crate::sweep::{sweep, SweepConfig};
use crate::theorems::{check_rees, equality_conditions, minkowski_from, MinkowskiStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "teissier",
    version,
    about = "Exact multiplicities of m-primary monomial ideals"
)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check results against the brute-force oracles.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct One {
    /// Ideal: a file path, inline JSON, or text such as "x^2, x*y, y^3".
    #[arg(long = "i")]
    i: String,
    /// Ambient dimension, when the text form uses fewer variables.
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Debug, Args)]
struct Two {
    #[arg(long = "i")]
    i: String,
    #[arg(long = "j")]
    j: String,
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Length of R/I.
    Colength(One),
    /// Hilbert-Samuel multiplicity e(I).
    Mult(One),
    /// Hilbert-Samuel polynomial of I.
    Hilbert(One),
    /// Mixed multiplicities e_0(I|J), ..., e_d(I|J).
    Mixed(Two),
    /// Integral closure of I.
    Closure(One),
    /// Whether J is a reduction of I.
    Reduce(Two),
    /// Minkowski status of the pair.
    Minkowski(Two),
    /// The three equality conditions for the pair.
    Equality(Two),
    /// Rees's theorem for J inside I.
    Rees(Two),
    /// Sectional Milnor numbers of x_0^a_0 + ... + x_n^a_n.
    Milnor {
        /// Exponents a_0,...,a_n (comma separated) or {"exponents": [...]}.
        #[arg(long)]
        exponents: String,
    },
    /// Seeded property sweep over random ideal pairs.
    Sweep {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long = "max-exp", default_value_t = 5)]
        max_exp: u32,
        /// Worker threads (default: TEISSIER_THREADS, then the core count).
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub verdict: String,
    pub payload: Value,
    pub human: String,
    pub exit_code: i32,
    pub json: bool,
}

impl Report {
    fn ok(verdict: impl Into<String>, payload: Value, human: String) -> Self {
        Self {
            verdict: verdict.into(),
            payload,
            human,
            exit_code: EXIT_OK,
            json: false,
        }
    }

    fn with_exit(mut self, code: i32) -> Self {
        self.exit_code = code;
        self
    }

    fn from_error(err: &Error) -> Self {
        let (verdict, code) = match err {
            Error::StabilizationCap { .. } => ("stabilization-cap", EXIT_CAP),
            Error::NonIntegral(_) | Error::Inconsistent(_) | Error::Singular => ("violation", EXIT_VIOLATION),
            _ => ("input-error", EXIT_INPUT),
        };
        Self {
            verdict: verdict.into(),
            payload: json!({"error": err.to_string(), "verdict": verdict}),
            human: format!("error: {err}"),
            exit_code: code,
            json: false,
        }
    }

    /// The text the binary prints: JSON under `--json`, otherwise the table.
    pub fn rendered(&self) -> String {
        if self.json {
            self.payload.to_string()
        } else {
            self.human.clone()
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return Report {
                verdict: if code == EXIT_OK { "ok" } else { "input-error" }.into(),
                payload: json!({"error": text.trim_end()}),
                human: text.trim_end().to_string(),
                exit_code: code,
                json: false,
            };
        }
    };
    let mut report = dispatch(&cli).unwrap_or_else(|e| Report::from_error(&e));
    report.json = cli.json;
    report
}

fn read_source(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('{') && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn load_one(args: &One) -> Result<MonomialIdeal> {
    let ideal = parse_ideal(&read_source(&args.i)?, args.dim)?;
    ideal.require_m_primary()?;
    Ok(ideal)
}

/// Text forms of the two ideals are read in the larger of their dimensions.
fn load_two(args: &Two) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let (si, sj) = (read_source(&args.i)?, read_source(&args.j)?);
    let dim = match args.dim {
        Some(d) => d,
        None => parse_ideal(&si, None)?.dim().max(parse_ideal(&sj, None)?.dim()),
    };
    let i = parse_ideal(&si, Some(dim))?;
    let j = parse_ideal(&sj, Some(dim))?;
    i.require_m_primary()?;
    j.require_m_primary()?;
    Ok((i, j))
}

fn seq_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big_to_json).collect())
}

fn mismatch(what: &str, detail: String) -> Report {
    Report {
        verdict: "mismatch".into(),
        payload: json!({"verdict": "mismatch", "check": what, "detail": detail}),
        human: format!("oracle mismatch ({what}): {detail}"),
        exit_code: EXIT_VIOLATION,
        json: false,
    }
}

/// Vandermonde cross-check of the mixed multiplicities, if requested.
fn mixed_oracle(
    cli: &Cli,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    e: &MixedMultiplicities,
) -> Result<Option<Report>> {
    if !cli.oracle {
        return Ok(None);
    }
    let v = mixed_via_vandermonde(i, j)?;
    Ok((v != *e).then(|| mismatch("mixed", format!("bhattacharya {e}, vandermonde {v}"))))
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Colength(args) => {
            let ideal = parse_ideal(&read_source(&args.i)?, args.dim)?;
            let n = colength(&ideal, ColengthMode::Sliced)?;
            if cli.oracle {
                let brute = colength(&ideal, ColengthMode::Bruteforce)?;
                if brute != n {
                    return Ok(mismatch("colength", format!("sliced {n}, bruteforce {brute}")));
                }
            }
            Ok(Report::ok(
                "ok",
                json!({"colength": big_to_json(&n)}),
                format!("colength: {n}"),
            ))
        }
        Command::Mult(args) | Command::Hilbert(args) => {
            let ideal = load_one(args)?;
            let poly = hilbert_polynomial(&ideal)?;
            if cli.oracle {
                let d = ideal.dim() as u64;
                for n in poly.threshold..=poly.threshold + d {
                    let power = ideal.power(u32::try_from(n).map_err(|_| Error::ExponentOverflow)?)?;
                    let brute = colength(&power, ColengthMode::Bruteforce)?;
                    if brute != poly.eval(n) {
                        return Ok(mismatch(
                            "hilbert",
                            format!("n = {n}: polynomial {}, bruteforce {brute}", poly.eval(n)),
                        ));
                    }
                }
            }
            let e = poly.multiplicity().clone();
            if matches!(cli.command, Command::Mult(_)) {
                Ok(Report::ok(
                    "ok",
                    json!({"multiplicity": big_to_json(&e)}),
                    format!("e(I) = {e}"),
                ))
            } else {
                let coeffs: Vec<String> = poly.coeffs.iter().map(|c| c.to_string()).collect();
                let human = format!(
                    "Hilbert-Samuel coefficients e_0..e_d: {}\nthreshold: n >= {}\nmultiplicity: {e}",
                    coeffs.join(", "),
                    poly.threshold
                );
                Ok(Report::ok("ok", poly.to_json(), human))
            }
        }
        Command::Mixed(args) => {
            let (i, j) = load_two(args)?;
            let e = mixed_multiplicities(&i, &j)?;
            if let Some(r) = mixed_oracle(cli, &i, &j, &e)? {
                return Ok(r);
            }
            Ok(Report::ok("ok", e.to_json(), format!("e(I|J) = {e}")))
        }
        Command::Closure(args) => {
            let ideal = load_one(args)?;
            let (closure, payload) = closure_report(&ideal)?;
            if cli.oracle {
                if let Some(r) = closure_oracle(&ideal, &closure)? {
                    return Ok(r);
                }
            }
            Ok(Report::ok("ok", payload, format!("closure: {closure}")))
        }
        Command::Reduce(args) => {
            let (i, j) = load_two(args)?;
            let reduction = is_reduction(&j, &i)?;
            let word = if reduction { "is" } else { "is not" };
            Ok(Report::ok(
                if reduction { "reduction" } else { "not-reduction" },
                json!({"reduction": reduction}),
                format!("({j}) {word} a reduction of ({i})"),
            ))
        }
        Command::Minkowski(args) => {
            let (i, j) = load_two(args)?;
            let e = mixed_multiplicities(&i, &j)?;
            if let Some(r) = mixed_oracle(cli, &i, &j, &e)? {
                return Ok(r);
            }
            let e_product = crate::hilbert::multiplicity(&i.product(&j)?)?;
            let out = minkowski_from(e, e_product)?;
            let status = out.status.as_str();
            Ok(Report::ok(
                status,
                json!({"status": status, "e": seq_json(&out.mixed.e), "e_product": big_to_json(&out.e_product)}),
                format!("e(I|J) = {}, e(IJ) = {}: {status}", out.mixed, out.e_product),
            ))
        }
        Command::Equality(args) => {
            let (i, j) = load_two(args)?;
            let cert = equality_conditions(&i, &j)?;
            if let Some(r) = mixed_oracle(cli, &i, &j, &cert.mixed)? {
                return Ok(r);
            }
            let all = cert.condition_minkowski && cert.condition_geometric && cert.condition_closure;
            let verdict = if !cert.agree {
                "violation"
            } else if all {
                MinkowskiStatus::Equality.as_str()
            } else {
                MinkowskiStatus::Strict.as_str()
            };
            let mut payload = cert.to_json();
            payload["verdict"] = json!(verdict);
            let ratio = cert
                .ratio
                .as_ref()
                .map_or("none".to_string(), |(r, s)| format!("{r}/{s}"));
            let human = format!(
                "e(I|J) = {}\nminkowski: {}\ngeometric: {}\nclosure: {}\nratio: {ratio}\nverdict: {verdict}",
                cert.mixed, cert.condition_minkowski, cert.condition_geometric, cert.condition_closure
            );
            let report = Report::ok(verdict, payload, human);
            Ok(if cert.agree {
                report
            } else {
                report.with_exit(EXIT_VIOLATION)
            })
        }
        Command::Rees(args) => {
            let (i, j) = load_two(args)?;
            let report = check_rees(&j, &i)?;
            let verdict = report.verdict;
            let human = format!(
                "e(I) = {}, e(J) = {}: {verdict}",
                report.details["e_i"], report.details["e_j"]
            );
            let r = Report::ok(verdict.as_str(), report.to_json(), human);
            Ok(if verdict.is_violation() {
                r.with_exit(EXIT_VIOLATION)
            } else {
                r
            })
        }
        Command::Milnor { exponents } => {
            let f = BrieskornPolynomial::parse(&read_source(exponents)?)?;
            let report = milnor_report(&f)?;
            if cli.oracle {
                let m = MonomialIdeal::maximal(f.dim());
                let jac = jacobian_ideal(&f)?;
                let v = mixed_via_vandermonde(&m, &jac)?;
                if v.e != report.spectrum.mu {
                    return Ok(mismatch("milnor", format!("vandermonde {v}")));
                }
            }
            let mu: Vec<String> = report.spectrum.mu.iter().map(|v| v.to_string()).collect();
            let human = format!(
                "mu* = ({})\nmilnor number: {}\nlog-convex: {}\nformal alternating sum: {}",
                mu.join(", "),
                report.milnor,
                report.log_convex(),
                report.alt_sum
            );
            let r = Report::ok(
                if report.passes() { "ok" } else { "violation" },
                report.to_json(),
                human,
            );
            Ok(if report.passes() {
                r
            } else {
                r.with_exit(EXIT_VIOLATION)
            })
        }
        Command::Sweep {
            seed,
            count,
            dim,
            max_exp,
            threads,
        } => {
            let config = SweepConfig {
                seed: *seed,
                count: *count,
                dim: *dim,
                max_exp: *max_exp,
                threads: *threads,
                oracle: cli.oracle,
            };
            let report = sweep(&config)?;
            let mut human = report.summary();
            for f in report.failures() {
                human.push_str(&format!(
                    "\n  reproduce: --seed {seed} index {} [{}] {}",
                    f.index, f.property, f.detail
                ));
            }
            let (verdict, code) = if report.hit_cap() {
                ("stabilization-cap", EXIT_CAP)
            } else if report.all_hold() {
                ("holds", EXIT_OK)
            } else {
                ("violation", EXIT_VIOLATION)
            };
            Ok(Report::ok(verdict, report.to_json(), human).with_exit(code))
        }
    }
}

/// Every box point the power oracle certifies must lie in the computed closure.
fn closure_oracle(ideal: &MonomialIdeal, closure: &MonomialIdeal) -> Result<Option<Report>> {
    let bounds = ideal.pure_power_bounds()?;
    let kmax = default_oracle_bound(ideal);
    let mut point = vec![0u32; ideal.dim()];
    loop {
        let p = ExponentVector::new(point.clone());
        if !closure.contains_monomial(&p)? && closure_membership_oracle(ideal, &p, kmax)? {
            return Ok(Some(mismatch(
                "closure",
                format!(
                    "{:?} is integral over ({ideal}) but missing from ({closure})",
                    p.coords()
                ),
            )));
        }
        let mut axis = 0;
        loop {
            if axis == point.len() {
                return Ok(None);
            }
            point[axis] += 1;
            if point[axis] <= bounds[axis] {
                break;
            }
            point[axis] = 0;
            axis += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Report {
        run(std::iter::once("teissier").chain(args.iter().copied()))
    }

    #[test]
    fn mixed_example() {
        let r = run_args(&["--json", "mixed", "--i", "x,y", "--j", "x^2,y^3"]);
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.payload, json!({"e": [1, 2, 6]}));
        assert_eq!(r.rendered(), r#"{"e":[1,2,6]}"#);
    }

    #[test]
    fn equality_example() {
        let r = run_args(&["equality", "--i", "x,y", "--j", "x^2,x*y,y^2"]);
        assert_eq!((r.exit_code, r.verdict.as_str()), (EXIT_OK, "equality"));
        assert_eq!(r.payload["ratio"], json!([2, 1]));
    }

    #[test]
    fn milnor_example() {
        let r = run_args(&["milnor", "--exponents", "3,3"]);
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.payload["mu"], json!([1, 2, 4]));
        assert_eq!(r.payload["milnor"], json!(4));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["frobnicate"]).exit_code, EXIT_INPUT);
        assert_eq!(run_args(&["colength", "--i", "x^"]).exit_code, EXIT_INPUT);
        assert_eq!(
            run_args(&["mult", "--i", "x*y", "--dim", "2"]).exit_code,
            EXIT_INPUT
        );
        assert_eq!(run_args(&["sweep", "--count", "0"]).exit_code, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).exit_code, EXIT_OK);
    }

    #[test]
    fn oracle_modes_agree() {
        for args in [
            &["--oracle", "colength", "--i", "x^3, x*y^2, y^4"][..],
            &["--oracle", "mult", "--i", "x^2, y^3"],
            &["--oracle", "closure", "--i", "x^4, x*y^2, y^3"],
            &["--oracle", "mixed", "--i", "x,y", "--j", "x^2,y^3"],
        ] {
            let r = run_args(args);
            assert_eq!(r.exit_code, EXIT_OK, "{args:?}: {}", r.human);
        }
    }
}
