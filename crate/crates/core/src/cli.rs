//! The `shiftmat` command line.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a command is
//! asked for something the verdict rules out (weights for a non-threshold
//! matroid, a certificate for a threshold one), 3 when an enumeration cap is hit.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::census::{census, ratio_csv, ratio_series, DEFAULT_CENSUS_CAP};
use crate::error::Error;
use crate::oracles::{
    asummability_oracle, asummability_oracle_general, lp_threshold_oracle, LpWitness, SmallMatroid,
};
use crate::poset::SubsetWord;
use crate::recognition::{canonicalize, is_shifted, ExplicitMatroid, Shiftedness};
use crate::shifted::{circuits, DefiningBasis};
use crate::threshold::{certificate, classify, synthesize_weights, verify_weights, VerifyMode};
use crate::DEFAULT_CAP;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERDICT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "shiftmat", version, about = "Shifted and threshold matroids")]
struct Cli {
    /// Output format; `census` defaults to json, everything else to text.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Cap on exhaustive enumerations (subsets, bases, constraints).
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ShiftedArgs {
    /// Ground set size.
    #[arg(long)]
    n: u32,
    /// Defining basis, e.g. "2 4 6 8".
    #[arg(long)]
    t: String,
}

impl ShiftedArgs {
    fn basis(&self) -> Result<DefiningBasis, Error> {
        Ok(DefiningBasis::new(SubsetWord::parse(self.n, &self.t)?))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Threshold verdict and case.
    Classify(ShiftedArgs),
    /// A verified separating weight function.
    Weights(ShiftedArgs),
    /// Two bases and two non-bases with equal sorted concatenations.
    Certify(ShiftedArgs),
    /// Canonical defining basis of a matroid given as a bases file.
    Recognize {
        #[arg(long)]
        bases: std::path::PathBuf,
        /// Ground set `[n]`; tokens must then be integers in `1..=n`.
        #[arg(long)]
        n: Option<u32>,
        /// Also classify the canonical form.
        #[arg(long)]
        classify: bool,
    },
    /// All circuits, by size and then lexicographically.
    Circuits(ShiftedArgs),
    /// Classify every non-empty T on [n].
    Census {
        #[arg(long)]
        n: u32,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        max_n: u32,
    },
    /// Threshold classes over all shifted classes, n = 1..=max, as CSV.
    Ratio {
        #[arg(long)]
        max: u32,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Exact LP feasibility of a separating weighting.
    Lp(ShiftedArgs),
    /// Search for an l-fold violation of uniform asummability.
    Asummable {
        #[command(flatten)]
        shifted: ShiftedArgs,
        #[arg(long, default_value_t = 2)]
        l: usize,
        /// Match against all basis multisets instead of comparing with T.
        #[arg(long)]
        general: bool,
    },
}

/// Runs the command line on `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_CAP,
            Error::ContractViolation(_) => EXIT_VERDICT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.format == Some(Format::Json);
    let cap = cli.cap;
    match &cli.command {
        Command::Classify(a) => {
            let c = classify(&a.basis()?);
            if json {
                emit_json(out, &c)?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::Weights(a) => {
            let m = a.basis()?;
            let w = synthesize_weights(&m)?;
            let mode = match verify_weights(&m, &w, VerifyMode::Full, cap) {
                Ok(true) => "full",
                Ok(false) => return Err(verification_bug(&m)),
                Err(Error::ResourceLimit { .. }) => {
                    if !verify_weights(&m, &w, VerifyMode::Structural, cap)? {
                        return Err(verification_bug(&m));
                    }
                    "structural"
                }
                Err(e) => return Err(e.into()),
            };
            if json {
                emit_json(out, &json!({ "weights": w, "verified": mode }))?;
            } else {
                write!(out, "{w}")?;
            }
        }
        Command::Certify(a) => {
            let c = certificate(&a.basis()?)?;
            if json {
                emit_json(out, &c)?;
            } else {
                write!(out, "{c}")?;
            }
        }
        Command::Recognize {
            bases,
            n,
            classify: with_class,
        } => {
            let text = std::fs::read_to_string(bases).map_err(|e| {
                Failure::from(std::io::Error::new(
                    e.kind(),
                    format!("{}: {e}", bases.display()),
                ))
            })?;
            let m = ExplicitMatroid::parse(&text, *n)?;
            if let Shiftedness::NotShifted { first, second } = is_shifted(&m) {
                let (a, b) = (&m.ground()[first], &m.ground()[second]);
                if json {
                    emit_json(out, &json!({ "shifted": false, "incomparable": [a, b] }))?;
                } else {
                    writeln!(out, "not shifted: {a} and {b} are incomparable")?;
                }
                return Ok(EXIT_OK);
            }
            let c = canonicalize(&m)?;
            let class = with_class.then(|| classify(&c.basis));
            if json {
                emit_json(
                    out,
                    &json!({ "shifted": true, "canonical": c, "classification": class }),
                )?;
            } else {
                write!(out, "{c}")?;
                if let Some(class) = class {
                    writeln!(out, "{class}")?;
                }
            }
        }
        Command::Circuits(a) => {
            let cs = circuits(&a.basis()?);
            if json {
                emit_json(out, &cs)?;
            } else {
                for c in &cs {
                    writeln!(out, "{c}")?;
                }
            }
        }
        Command::Census { n, max_n } => {
            let r = census(*n, *max_n)?;
            if cli.format == Some(Format::Text) {
                writeln!(out, "n={}", r.n)?;
                writeln!(out, "shifted classes: {}", r.shifted_classes)?;
                writeln!(out, "threshold: {}", r.threshold_count)?;
                writeln!(out, "not threshold: {}", r.non_threshold_count)?;
                writeln!(out, "ratio: {}", r.ratio)?;
                for (case, count) in &r.threshold_by_case {
                    writeln!(out, "  {case}: {count}")?;
                }
                for t in &r.non_threshold {
                    writeln!(out, "not threshold: T={t}")?;
                }
            } else {
                emit_json(out, &r)?;
            }
        }
        Command::Ratio { max } => {
            let rows = ratio_series(*max);
            if json {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "n": r.n,
                            "numerator": r.numerator.to_string(),
                            "denominator": r.denominator.to_string(),
                            "decimal": r.decimal(6),
                        })
                    })
                    .collect();
                emit_json(out, &rows)?;
            } else {
                write!(out, "{}", ratio_csv(&rows))?;
            }
        }
        Command::Oracle { oracle } => match oracle {
            OracleCommand::Lp(a) => {
                let m = SmallMatroid::from_shifted(&a.basis()?, cap)?;
                let w = lp_threshold_oracle(&m, cap)?;
                if json {
                    emit_json(out, &w)?;
                } else {
                    match &w {
                        LpWitness::Feasible { weights, .. } => {
                            writeln!(out, "feasible")?;
                            for (i, x) in weights.iter().enumerate() {
                                writeln!(out, "{}: {}/{}", i + 1, x.numer(), x.denom())?;
                            }
                        }
                        LpWitness::Infeasible { contradiction, .. } => {
                            writeln!(out, "infeasible")?;
                            for s in contradiction {
                                writeln!(out, "uses {s}")?;
                            }
                        }
                    }
                    let sizes: Vec<String> =
                        w.stage_sizes().iter().map(|s| s.to_string()).collect();
                    writeln!(out, "stages: {}", sizes.join(" "))?;
                }
            }
            OracleCommand::Asummable {
                shifted,
                l,
                general,
            } => {
                let basis = shifted.basis()?;
                let v = if *general {
                    asummability_oracle_general(&SmallMatroid::from_shifted(&basis, cap)?, *l, cap)?
                } else {
                    asummability_oracle(&basis, *l, cap)?
                };
                if json {
                    emit_json(out, &v)?;
                } else {
                    match v {
                        None => writeln!(out, "no violation for l={l}")?,
                        Some(v) => {
                            for (i, b) in v.bases.iter().enumerate() {
                                writeln!(out, "B{}={b}", i + 1)?;
                            }
                            for (i, d) in v.non_bases.iter().enumerate() {
                                writeln!(out, "D{}={d}", i + 1)?;
                            }
                        }
                    }
                }
            }
        },
    }
    Ok(EXIT_OK)
}

fn verification_bug(m: &DefiningBasis) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("internal error: synthesized weights for {m} do not verify"),
    }
}
