//! Command-line front end: `check`, `margin`, `sweep`, `verify` and `rho`.
//!
//! Exit codes: 0 on success, 1 on an input error, 2 when a verification
//! finds a failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::classify::{classify, crosscheck, GenPrvChecker, RedSpInstance, DEFAULT_CAP};
use crate::dirac::{DiracContext, MarginReport};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::{format_scalar, parse_scalar};
use crate::schmid::SchmidCoeffs;
use crate::suites;
use crate::weight::{validate_weight, Weight};
use crate::weyl::{rho, DEFAULT_ORBIT_LIMIT};

pub const CAP_ENV: &str = "DIRAC_GATE_CAP";

/// Pair budget per family for the orbit-bound verification.
pub const GEN_PRV_PAIR_CAP: usize = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dirac-gate", version, about = "Dirac inequality checks for highest weight modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a highest weight.
    Check {
        /// sp:N, so*:N, su:P,Q, so-even:N or so-odd:N
        family: String,
        /// Comma-separated rationals; su uses '|' between the blocks.
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Highest Schmid level to scan [default: $DIRAC_GATE_CAP or 12]
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Exit with status 2 unless the verdict has this tag.
        #[arg(long, value_parser = ["UnitaryIrreducible", "NotUnitary", "Boundary", "InconclusiveAtCap"])]
        expect: Option<String>,
    },
    /// Exact margin of one Schmid module.
    Margin {
        family: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Coefficients c1,c2,… over the basic modules, or weight:<weight>.
        schmid: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify along a line of weights and print CSV.
    Sweep {
        family: String,
        /// Weight whose other coordinates stay fixed [default: zero]
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        /// 1-based coordinate to vary.
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value = "1")]
        step: String,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Run a built-in verification suite.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest Lie rank included (p+q−1 for su).
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Print ρ for a family.
    Rho {
        family: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    #[value(name = "red-sp-1")]
    RedSp1,
    #[value(name = "red-sp-2")]
    RedSp2,
    #[value(name = "red-sp-3")]
    RedSp3,
    GenPrv,
    Crosscheck,
}

enum Failure {
    Input(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check { family, lambda, cap, json, expect } => {
            cmd_check(&family, &lambda, cap, json, expect.as_deref(), out, err)
        }
        Command::Margin { family, lambda, schmid, json } => cmd_margin(&family, &lambda, &schmid, json, out),
        Command::Sweep { family, base, index, from, to, step, cap } => {
            cmd_sweep(&family, base.as_deref(), index, &from, &to, &step, cap, out, err)
        }
        Command::Verify { target, trials, seed, max_rank, cap } => {
            cmd_verify(target, trials, seed, max_rank, cap, out)
        }
        Command::Rho { family, json } => cmd_rho(&family, json, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Verify) => EXIT_VERIFY,
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(Error::InvalidArgument(format!("write failed: {e}")))
}

fn resolve_cap(flag: Option<u64>) -> Result<u64> {
    let cap = match flag {
        Some(c) => c,
        None => match std::env::var(CAP_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Error::InvalidArgument(format!("{CAP_ENV}={v:?} is not a level")))?,
            Err(_) => DEFAULT_CAP,
        },
    };
    if cap == 0 {
        return Err(Error::InvalidArgument("level cap must be at least 1".into()));
    }
    Ok(cap)
}

fn parse_valid(family: &Family, text: &str) -> Result<Weight> {
    let w = Weight::parse(family, text)?;
    validate_weight(family, &w)?;
    Ok(w)
}

fn cmd_check(
    family: &str,
    lambda: &str,
    cap: Option<u64>,
    json: bool,
    expect: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let family: Family = family.parse()?;
    let lambda = parse_valid(&family, lambda)?;
    let cap = resolve_cap(cap)?;
    let verdict = classify(&family, &lambda, cap)?;
    if json {
        let text = serde_json::to_string(&verdict.report(cap)).expect("report serializes");
        writeln!(out, "{text}").map_err(io)?;
    } else {
        writeln!(out, "{verdict}").map_err(io)?;
    }
    match expect {
        Some(tag) if tag != verdict.tag() => {
            let _ = writeln!(err, "expected {tag}, got {}", verdict.tag());
            Err(Failure::Verify)
        }
        _ => Ok(()),
    }
}

fn cmd_margin(family: &str, lambda: &str, schmid: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let family: Family = family.parse()?;
    let lambda = parse_valid(&family, lambda)?;
    let s = SchmidCoeffs::parse(family, schmid)?;
    let m = DiracContext::new(&family, &lambda)?.margin(&s)?;
    if json {
        let text = serde_json::to_string(&MarginReport::from(&m)).expect("report serializes");
        writeln!(out, "{text}").map_err(io)?;
    } else {
        writeln!(out, "{m}").map_err(io)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    family: &str,
    base: Option<&str>,
    index: usize,
    from: &str,
    to: &str,
    step: &str,
    cap: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let family: Family = family.parse()?;
    let base = match base {
        Some(t) => Weight::parse(&family, t)?,
        None => Weight::zero(family.dim()),
    };
    if index == 0 || index > family.dim() {
        return Err(Error::IndexOutOfRange { index, max: family.dim() }.into());
    }
    let (from, to, step) = (parse_scalar(from)?, parse_scalar(to)?, parse_scalar(step)?);
    if step <= Zero::zero() {
        return Err(Error::InvalidArgument("--step must be positive".into()).into());
    }
    let cap = resolve_cap(cap)?;
    let mut csv = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Failure::Input(Error::InvalidArgument(format!("CSV write failed: {e}")));
    csv.write_record(["lambda", "verdict", "witness", "witness_level", "margin_at_witness"]).map_err(csv_err)?;
    let mut x = from;
    while x <= to {
        let mut coords = base.clone().into_coords();
        coords[index - 1] = x.clone();
        let lambda = Weight::new(coords);
        let text = lambda.display(&family).to_string();
        match classify(&family, &lambda, cap) {
            Ok(v) => {
                let (witness, level, margin) = match v.witness() {
                    Some((s, m)) => (s.to_text(), s.level().to_string(), format_scalar(m.value())),
                    None => (String::new(), String::new(), String::new()),
                };
                csv.write_record([text, v.tag().to_string(), witness, level, margin]).map_err(csv_err)?;
            }
            Err(e) => {
                let _ = writeln!(err, "skipping {text}: {e}");
            }
        }
        x += &step;
    }
    csv.flush().map_err(io)?;
    Ok(())
}

fn cmd_verify(target: Target, trials: usize, seed: u64, max_rank: usize, cap: Option<u64>, out: &mut dyn Write) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families = suites::families_up_to_rank(max_rank);
    let (passed, total) = match target {
        Target::RedSp1 | Target::RedSp2 | Target::RedSp3 => {
            let part = match target {
                Target::RedSp1 => 1,
                Target::RedSp2 => 2,
                _ => 3,
            };
            let min_n = if part == 3 { 3 } else { 2 };
            let usable: Vec<Family> = families.into_iter().filter(|f| f.dim() >= min_n).collect();
            if usable.is_empty() {
                return Err(Error::InvalidArgument(format!("no family of rank ≤ {max_rank} fits part {part}")).into());
            }
            let mut passed = 0;
            for k in 0..trials {
                let f = usable[k % usable.len()];
                let inst = RedSpInstance::random(part, f.dim(), &mut rng)?;
                if crate::classify::verify_red_sp(&f, &inst)? {
                    passed += 1;
                } else {
                    writeln!(out, "FAIL {f} {inst:?}").map_err(io)?;
                }
            }
            (passed, trials)
        }
        Target::GenPrv => {
            let (mut passed, mut total) = (0, 0);
            for f in &families {
                let checker = GenPrvChecker::new(f, DEFAULT_ORBIT_LIMIT)?;
                let pool = suites::integer_pool(f, 3);
                let pairs = suites::pairs_capped(&pool, GEN_PRV_PAIR_CAP, &mut rng);
                let mut ok = 0;
                for &(i, j) in &pairs {
                    if checker.check(&pool[i], &pool[j])? {
                        ok += 1;
                    } else {
                        writeln!(out, "FAIL {f} μ={} ν={}", pool[i].display(f), pool[j].display(f)).map_err(io)?;
                    }
                }
                writeln!(out, "{f}: {ok}/{} pass", pairs.len()).map_err(io)?;
                passed += ok;
                total += pairs.len();
            }
            (passed, total)
        }
        Target::Crosscheck => {
            let cap = resolve_cap(cap)?;
            let mut mismatches = 0usize;
            for f in suites::threshold_families().iter().filter(|f| f.rank() <= max_rank) {
                for lambda in suites::threshold_grid(f) {
                    for m in crosscheck(f, &lambda, cap)? {
                        mismatches += 1;
                        writeln!(out, "{f} λ={}: {m}", lambda.display(f)).map_err(io)?;
                    }
                }
            }
            writeln!(out, "{mismatches} mismatches").map_err(io)?;
            return if mismatches == 0 { Ok(()) } else { Err(Failure::Verify) };
        }
    };
    writeln!(out, "{passed}/{total} pass").map_err(io)?;
    if passed == total {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn cmd_rho(family: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let family: Family = family.parse()?;
    let r = rho(&family).display(&family).to_string();
    if json {
        writeln!(out, "{}", json!({ "family": family.to_string(), "rho": r })).map_err(io)?;
    } else {
        writeln!(out, "{r}").map_err(io)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["dirac-gate"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_texts() {
        assert_eq!(call(&["check", "sp:1", "1"]), (0, "NOT UNITARY, witness s=(1) level 1\n".into(), String::new()));
        assert_eq!(call(&["check", "sp:2", "0,0"]).1, "BOUNDARY at s=(1,0) level 1\n");
        assert_eq!(
            call(&["check", "so-even:4", "-3,0,0,0"]).1,
            "UNITARY (N(λ) irreducible), guaranteed by scalar-case theorem\n"
        );
    }

    #[test]
    fn expect_mismatch_exits_two() {
        assert_eq!(call(&["check", "sp:1", "1", "--expect", "NotUnitary"]).0, 0);
        let (code, _, err) = call(&["check", "sp:1", "1", "--expect", "Boundary"]);
        assert_eq!(code, 2);
        assert_eq!(err, "expected Boundary, got NotUnitary\n");
        assert_eq!(call(&["check", "sp:1", "1", "--expect", "Maybe"]).0, 1);
    }

    #[test]
    fn margin_texts() {
        assert_eq!(call(&["margin", "sp:1", "-1", "1"]).1, "4 (POSITIVE)\n");
        assert_eq!(call(&["margin", "sp:2", "0,0", "1,0"]).1, "0 (ZERO)\n");
        assert_eq!(call(&["margin", "su:1,1", "0|0", "1"]).1, "0 (ZERO)\n");
        assert_eq!(call(&["margin", "sp:2", "0,0", "weight:2,0"]).1, "0 (ZERO)\n");
    }

    #[test]
    fn input_errors_exit_one() {
        assert_eq!(call(&["check", "sp:0", "1"]).0, 1);
        assert_eq!(call(&["check", "sp:2", "0,1"]).0, 1);
        assert_eq!(call(&["check", "sp:2", "0,x"]).0, 1);
        assert_eq!(call(&["margin", "sp:2", "0,0", "1"]).0, 1);
        assert_eq!(call(&["bogus"]).0, 1);
        assert_eq!(call(&["check", "sp:1", "0", "--cap", "0"]).0, 1);
        assert_eq!(call(&["sweep", "sp:1", "--from", "0", "--to", "1", "--step", "0"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn sweep_rows() {
        let (code, out, _) = call(&["sweep", "sp:1", "--from", "-2", "--to", "1"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "lambda,verdict,witness,witness_level,margin_at_witness");
        assert_eq!(lines[1], "-2,UnitaryIrreducible,,,");
        assert_eq!(lines[3], "0,Boundary,1,1,0");
        assert_eq!(lines[4], "1,NotUnitary,1,1,-4");
        let (code, out, _) = call(&["sweep", "sp:1", "--from", "1", "--to", "0"]);
        assert_eq!((code, out.as_str()), (0, "lambda,verdict,witness,witness_level,margin_at_witness\n"));
    }

    #[test]
    fn sweep_skips_invalid_points() {
        let (code, out, err) = call(&["sweep", "sp:2", "--base", "0,0", "--index", "2", "--from", "-1", "--to", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
        assert!(err.contains("skipping 0,1"), "{err}");
    }

    #[test]
    fn rho_output() {
        assert_eq!(call(&["rho", "su:2,2"]).1, "3/2,1/2|-1/2,-3/2\n");
        assert_eq!(call(&["rho", "so-odd:3", "--json"]).1, "{\"family\":\"so-odd:3\",\"rho\":\"5/2,3/2,1/2\"}\n");
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "red-sp-1", "--trials", "200", "--seed", "7"]);
        assert_eq!((code, out.trim_end()), (0, "200/200 pass"));
        let (code, out, _) = call(&["verify", "crosscheck", "--cap", "4", "--max-rank", "2"]);
        assert_eq!((code, out.trim_end()), (0, "0 mismatches"));
    }
}
