//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code with everything that would be printed, so the binary is a
//! thin wrapper and the commands are testable in-process.
//!
//! Exit codes:
//!
//! | command          | 0             | 1                  | 2                          | 3              |
//! |------------------|---------------|--------------------|----------------------------|----------------|
//! | `match`          | matching      | Hall violator      | input error                |                |
//! | `verify`, `suite`| all pass      | some check failed  | input error, size limit    |                |
//! | `counterexample` | constructed   | not confirmed      | input error                | not applicable |
//! | `lattice`        | pass          | fail               | input error, no instances  |                |
//! | `table`          | written       |                    | input error                |                |

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};
use crate::io::{
    format_table, parse_finite_subset, parse_lattice_subset, write_table, AnyGroup, GroupSpec,
};
use crate::lab::{
    check_lattice_matching, construct_counterexample, full_suite, run_checks, CheckKind, LabConfig,
    LatticeParams, Status, SuiteReport,
};
use crate::matching::{find_matching, MatchOutcome};
use crate::subset::GroupSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "grpmatch",
    version,
    about = "Matchings in groups and checks of the theorems about them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct LabArgs {
    #[arg(long, default_value_t = LabConfig::default().seed)]
    pub seed: u64,
    /// Worker threads; 1 is single-threaded, 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a matching from A to B, or a Hall violator proving none exists.
    Match {
        /// Group spec (C6, D4, C2xC4, Q8, S3, Z^2) or @file for a Cayley table.
        group: String,
        /// Subset literal, e.g. {0,2} or {(0,0),(1,-2)}.
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run theorem checks on one finite group.
    Verify {
        group: String,
        /// Comma-separated: kemperman, corollary, olson, automatching,
        /// matching-property, hall, or all.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Largest group order the checks accept.
        #[arg(long)]
        cap_order: Option<usize>,
        #[command(flatten)]
        lab: LabArgs,
    },
    /// Build the subgroup counterexample to the matching property.
    Counterexample {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Random matching checks in Z^d.
    Lattice {
        #[arg(short = 'd', long = "dim", default_value_t = 1)]
        dim: usize,
        #[arg(short = 't', long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Coordinates are drawn from [-bound, bound].
        #[arg(long, default_value_t = 4)]
        bound: i64,
        #[command(flatten)]
        lab: LabArgs,
    },
    /// Run every check over the built-in catalog and Z, Z^2, Z^3.
    Suite {
        #[command(flatten)]
        lab: LabArgs,
    },
    /// Print a group's Cayley table in the table-file format.
    Table {
        group: String,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::out(0, text)
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Match {
            group,
            a,
            b,
            format,
        } => cmd_match(&group, &a, &b, format),
        Command::Verify {
            group,
            checks,
            cap_order,
            lab,
        } => cmd_verify(&group, &checks, cap_order, &lab),
        Command::Counterexample { group, format } => cmd_counterexample(&group, format),
        Command::Lattice {
            dim,
            trials,
            max_size,
            bound,
            lab,
        } => {
            let params = LatticeParams {
                dim,
                trials,
                max_size,
                coordinate_bound: bound,
            };
            cmd_lattice(&params, &lab)
        }
        Command::Suite { lab } => cmd_suite(&lab),
        Command::Table { group, output } => cmd_table(&group, output),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn load_finite(spec: &str) -> Result<GroupTable> {
    GroupSpec::parse(spec).load()?.into_finite()
}

fn lab_config(lab: &LabArgs) -> LabConfig {
    LabConfig {
        seed: lab.seed,
        jobs: lab.jobs,
        ..LabConfig::default()
    }
}

pub fn cmd_match(group: &str, a: &str, b: &str, format: Format) -> Result<Outcome> {
    match GroupSpec::parse(group).load()? {
        AnyGroup::Finite(g) => {
            let a = parse_finite_subset(&g, a)?;
            let b = parse_finite_subset(&g, b)?;
            render_match(&g, &a, &b, format)
        }
        AnyGroup::Lattice(z) => {
            let a = parse_lattice_subset(&z, a)?;
            let b = parse_lattice_subset(&z, b)?;
            render_match(&z, &a, &b, format)
        }
    }
}

fn render_match<G: Group>(
    g: &G,
    a: &GroupSubset<'_, G>,
    b: &GroupSubset<'_, G>,
    format: Format,
) -> Result<Outcome> {
    let outcome = find_matching(a, b)?;
    let code = if outcome.is_matched() { 0 } else { 1 };
    let text = match (&outcome, format) {
        (MatchOutcome::Matched(m), Format::Text) => {
            let mut s = format!("matching from {a} to {b} in {}:\n", g.label());
            for (x, y) in m.pairs() {
                let p = g.op(x, y);
                s += &format!(
                    "  {} -> {}   ({}·{} = {})\n",
                    g.display_elem(x),
                    g.display_elem(y),
                    g.display_elem(x),
                    g.display_elem(y),
                    g.display_elem(&p)
                );
            }
            s
        }
        (MatchOutcome::Violator(v), Format::Text) => format!(
            "no matching from {a} to {b} in {}\n  Hall violator S={} N(S)={} deficiency={}\n",
            g.label(),
            v.subset,
            v.neighborhood,
            v.deficiency
        ),
        (MatchOutcome::Matched(m), Format::Machine) => {
            let pairs: Vec<[String; 2]> = m
                .pairs()
                .iter()
                .map(|(x, y)| [g.display_elem(x), g.display_elem(y)])
                .collect();
            machine(&json!({
                "group": g.label(),
                "A": a.to_string(),
                "B": b.to_string(),
                "outcome": "matched",
                "pairs": pairs,
            }))
        }
        (MatchOutcome::Violator(v), Format::Machine) => machine(&json!({
            "group": g.label(),
            "A": a.to_string(),
            "B": b.to_string(),
            "outcome": "violator",
            "S": v.subset.to_string(),
            "N(S)": v.neighborhood.to_string(),
            "deficiency": v.deficiency,
        })),
    };
    Ok(Outcome::out(code, text))
}

fn machine(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json serializes");
    s.push('\n');
    s
}

fn suite_outcome(suite: &SuiteReport, format: Format) -> Outcome {
    let code = if suite.all_passed() { 0 } else { 1 };
    let text = match format {
        Format::Text => suite.to_text(),
        Format::Machine => suite.to_machine(),
    };
    Outcome::out(code, text)
}

pub fn cmd_verify(
    group: &str,
    checks: &str,
    cap_order: Option<usize>,
    lab: &LabArgs,
) -> Result<Outcome> {
    let kinds = CheckKind::parse_list(checks)?;
    let g = load_finite(group)?;
    let mut cfg = lab_config(lab);
    if let Some(cap) = cap_order {
        if cap > 64 {
            return Err(Error::InvalidParameter(format!(
                "--cap-order {cap} exceeds the hard limit 64"
            )));
        }
        cfg.caps.max_order = cap;
        cfg.caps.automatching_order = cap;
        cfg.caps.corollary_order = cfg.caps.corollary_order.min(cap);
    }
    let suite = run_checks(&g, &kinds, &cfg)?;
    Ok(suite_outcome(&suite, lab.format))
}

pub fn cmd_suite(lab: &LabArgs) -> Result<Outcome> {
    let suite = full_suite(&lab_config(lab))?;
    Ok(suite_outcome(&suite, lab.format))
}

pub fn cmd_counterexample(group: &str, format: Format) -> Result<Outcome> {
    let g = load_finite(group)?;
    let pair = match construct_counterexample(&g) {
        Ok(p) => p,
        Err(Error::NotApplicable(why)) => {
            return Ok(Outcome {
                code: 3,
                stdout: String::new(),
                stderr: format!("not applicable: {why}\n"),
            })
        }
        Err(e) => return Err(e),
    };
    let code = if pair.is_confirmed() { 0 } else { 1 };
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "counterexample in {}: A={} B={}\n  A = <{}>, B = (A ∪ {{{}}}) minus identity\n",
                g.label(),
                pair.a,
                pair.b,
                g.display_elem(&pair.generator),
                g.display_elem(&pair.outsider)
            );
            if let Some(v) = &pair.violator {
                s += &format!(
                    "  Hall violator S={} N(S)={} deficiency={}\n",
                    v.subset, v.neighborhood, v.deficiency
                );
            } else {
                s += "  engine found a matching: construction NOT confirmed\n";
            }
            match pair.brute_force_confirmed {
                Some(true) => s += "  brute force: no bijection works\n",
                Some(false) => s += "  brute force: a bijection works\n",
                None => s += "  brute force: skipped (|A| above cap)\n",
            }
            s
        }
        Format::Machine => machine(&json!({
            "group": g.label(),
            "A": pair.a.to_string(),
            "B": pair.b.to_string(),
            "generator": g.display_elem(&pair.generator),
            "outsider": g.display_elem(&pair.outsider),
            "violator": pair.violator.as_ref().map(|v| json!({
                "S": v.subset.to_string(),
                "N(S)": v.neighborhood.to_string(),
                "deficiency": v.deficiency,
            })),
            "brute_force_confirmed": pair.brute_force_confirmed,
            "confirmed": pair.is_confirmed(),
        })),
    };
    Ok(Outcome::out(code, text))
}

pub fn cmd_lattice(params: &LatticeParams, lab: &LabArgs) -> Result<Outcome> {
    let report = check_lattice_matching(params, &lab_config(lab))?;
    let code = match report.status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Skipped => 2,
    };
    let suite = SuiteReport::new(vec![report]);
    let text = match lab.format {
        Format::Text => suite.to_text(),
        Format::Machine => suite.to_machine(),
    };
    Ok(Outcome::out(code, text))
}

pub fn cmd_table(group: &str, output: Option<PathBuf>) -> Result<Outcome> {
    let g = load_finite(group)?;
    match output {
        Some(path) => {
            write_table(&path, &g)?;
            Ok(Outcome::out(
                0,
                format!(
                    "wrote {} (order {}) to {}\n",
                    g.label(),
                    g.order(),
                    path.display()
                ),
            ))
        }
        None => Ok(Outcome::out(0, format_table(&g))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("grpmatch").chain(args.iter().copied()))
    }

    #[test]
    fn match_exit_codes() {
        let o = go(&["match", "C4", "{0,2}", "{1,2}"]);
        assert_eq!(o.code, 1, "{o:?}");
        assert!(o.stdout.contains("S={0,2}"));
        assert_eq!(go(&["match", "C5", "{1,2,3,4}", "{1,2,3,4}"]).code, 0);
        let o = go(&["match", "C4", "{0,2}", "{0,2}"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("identity"));
        assert_eq!(go(&["match", "C4", "{0,2}", "{1}"]).code, 2);
        assert_eq!(
            go(&["match", "Z^2", "{(0,0),(1,0)}", "{(0,1),(1,1)}"]).code,
            0
        );
    }

    #[test]
    fn parse_errors_carry_columns() {
        let o = go(&["match", "C4", "{0,9}", "{1,2}"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("column 4"), "{}", o.stderr);
        let o = go(&["match", "C4x", "{0}", "{1}"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("column"), "{}", o.stderr);
    }

    #[test]
    fn verify_examples() {
        assert_eq!(
            go(&["verify", "C5", "--checks", "all", "--jobs", "1"]).code,
            0
        );
        let o = go(&["verify", "C4", "--checks", "matching-property"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("failing-pair"), "{}", o.stdout);
        let o = go(&["verify", "C3", "--checks", "corollary"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("flagged"));
    }

    #[test]
    fn verify_size_limits() {
        let o = go(&["verify", "C8", "--checks", "corollary"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("corollary"), "{}", o.stderr);
        let o = go(&[
            "verify",
            "C6",
            "--checks",
            "automatching",
            "--cap-order",
            "5",
        ]);
        assert_eq!(o.code, 2);
        assert_eq!(go(&["verify", "C5", "--checks", "nope"]).code, 2);
        assert_eq!(go(&["verify", "Z^1"]).code, 2);
    }

    #[test]
    fn counterexample_codes() {
        let o = go(&["counterexample", "C6"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("A={0,2,4} B={1,2,4}"), "{}", o.stdout);
        assert_eq!(go(&["counterexample", "C5"]).code, 3);
        assert_eq!(go(&["counterexample", "Q8", "--format", "machine"]).code, 0);
    }

    #[test]
    fn lattice_codes() {
        assert_eq!(go(&["lattice", "-d", "1", "-t", "100"]).code, 0);
        assert_eq!(go(&["lattice", "-d", "1", "-t", "0"]).code, 2);
        assert_eq!(go(&["lattice", "-d", "0"]).code, 2);
    }

    #[test]
    fn table_and_help() {
        let o = go(&["table", "C3"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("n: 3"));
        assert_eq!(go(&["--help"]).code, 0);
        assert_eq!(go(&["bogus"]).code, 2);
    }
}
