//! `yd`: command-line access to Dodgson/Young scoring and the reduction
//! generators. All logic lives in `yd-core`; this crate only parses
//! arguments, reads files and prints.
//!
//! Exit codes: 0 on success (decision verbs print `true`/`false` and exit 0
//! either way), 1 on domain errors, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use yd_core::lp::fraction_string;
use yd_core::reductions::{
    amplify_for_winner, inc_to_mspc, mspc_to_young_ranking, verify_reduction_chain, ChainCaps, Graph,
    MspcInstance, SetFamily, DEFAULT_KAPPA_CAP,
};
use yd_core::{homogeneous, scores, Profile, Rational, Scheme, ScoreReport};

#[derive(Debug, Parser)]
#[command(name = "yd", version, about = "Exact and homogeneous Dodgson/Young election scores")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Dodgson,
    Young,
    DodgsonStar,
    YoungStar,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Dodgson => Scheme::Dodgson,
            SchemeArg::Young => Scheme::Young,
            SchemeArg::DodgsonStar => Scheme::DodgsonStar,
            SchemeArg::YoungStar => Scheme::YoungStar,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LimitScheme {
    DodgsonStar,
    YoungStar,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score candidates under a scheme.
    Score {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Profile file (`.elect`).
        #[arg(long)]
        profile: PathBuf,
        /// Restrict the report to these candidates (repeatable).
        #[arg(long)]
        candidate: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print lift / kept-voter witnesses for the exact schemes.
        #[arg(long)]
        witness: bool,
    },
    /// Is the candidate a winner under the scheme? Prints true/false.
    Winner {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        candidate: String,
    },
    /// Does the candidate tie or defeat the rival? Prints true/false.
    Ranking {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        rival: String,
    },
    /// Print the Condorcet winner, or `none`.
    Condorcet {
        #[arg(long)]
        profile: PathBuf,
    },
    /// Build the Young-ranking profile from two set families or two graphs.
    Reduce {
        /// Two set-family files (`.sets`).
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"], conflicts_with = "graphs", required_unless_present = "graphs")]
        sets: Vec<PathBuf>,
        /// Two graph files (`.graph`), converted through their edge-incidence families.
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        graphs: Vec<PathBuf>,
    },
    /// Replace every candidate except the two designated ones by rotated blocks.
    Amplify {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        /// Permit a one-voter profile (the blocks degenerate).
        #[arg(long)]
        allow_single_voter: bool,
    },
    /// Run two graphs through the whole reduction chain and check that every
    /// stage gives the same answer. Prints the stage report, then true/false.
    Verify {
        #[arg(long)]
        graph1: PathBuf,
        #[arg(long)]
        graph2: PathBuf,
    },
    /// Tabulate score(qV)/q against the limit program's value.
    Convergence {
        #[arg(long, value_enum)]
        scheme: LimitScheme,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        candidate: String,
        /// Comma-separated replication factors.
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8,16", value_parser = clap::value_parser!(u32).range(1..))]
        q: Vec<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_profile(path: &Path) -> anyhow::Result<Profile> {
    Profile::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    Graph::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_sets(path: &Path) -> anyhow::Result<SetFamily> {
    SetFamily::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn print_bool(out: &mut dyn Write, b: bool) -> anyhow::Result<()> {
    writeln!(out, "{b}")?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<()> {
    match command {
        Command::Score {
            scheme,
            profile,
            candidate,
            format,
            witness,
        } => {
            let p = load_profile(&profile)?;
            let only: Vec<&str> = candidate.iter().map(String::as_str).collect();
            let report = ScoreReport::build(&p, scheme.into(), &only, witness)?;
            match format {
                Format::Text => write!(out, "{}", report.to_text())?,
                Format::Json => writeln!(out, "{}", report.to_json())?,
            }
        }
        Command::Winner {
            scheme,
            profile,
            candidate,
        } => {
            let p = load_profile(&profile)?;
            print_bool(out, Scheme::from(scheme).winner(&p, &candidate)?)?;
        }
        Command::Ranking {
            scheme,
            profile,
            candidate,
            rival,
        } => {
            let p = load_profile(&profile)?;
            print_bool(out, Scheme::from(scheme).ranking(&p, &candidate, &rival)?)?;
        }
        Command::Condorcet { profile } => {
            let p = load_profile(&profile)?;
            match p.condorcet_winner() {
                Some(c) => writeln!(out, "{c}")?,
                None => writeln!(out, "none")?,
            }
        }
        Command::Reduce { sets, graphs } => {
            let inst = if sets.len() == 2 {
                MspcInstance {
                    first: load_sets(&sets[0])?,
                    second: load_sets(&sets[1])?,
                }
            } else {
                inc_to_mspc(&load_graph(&graphs[0])?, &load_graph(&graphs[1])?)?
            };
            let reduced = mspc_to_young_ranking(&inst, DEFAULT_KAPPA_CAP)?;
            writeln!(out, "# designated: {} {}", reduced.c, reduced.d)?;
            write!(out, "{}", reduced.profile)?;
        }
        Command::Amplify {
            profile,
            c,
            d,
            allow_single_voter,
        } => {
            let p = load_profile(&profile)?;
            write!(out, "{}", amplify_for_winner(&p, &c, &d, allow_single_voter)?)?;
        }
        Command::Verify { graph1, graph2 } => {
            let report = verify_reduction_chain(&load_graph(&graph1)?, &load_graph(&graph2)?, &ChainCaps::default())?;
            write!(out, "{report}")?;
            print_bool(out, report.consistent())?;
        }
        Command::Convergence {
            scheme,
            profile,
            candidate,
            q,
            format,
        } => {
            let p = load_profile(&profile)?;
            let limit = match scheme {
                LimitScheme::DodgsonStar => homogeneous::dodgson_star_score(&p, &candidate)?,
                LimitScheme::YoungStar => homogeneous::young_star_score(&p, &candidate)?,
            };
            let mut rows: Vec<(u32, usize, Rational)> = Vec::with_capacity(q.len());
            for &factor in &q {
                let replicated = p.replicate(factor as usize)?;
                let score = match scheme {
                    LimitScheme::DodgsonStar => scores::dodgson_score(&replicated, &candidate)?,
                    LimitScheme::YoungStar => scores::young_score(&replicated, &candidate)?,
                };
                rows.push((factor, score, Rational::new((score as i64).into(), i64::from(factor).into())));
            }
            write_convergence(out, format, &rows, &limit)?;
        }
    }
    Ok(())
}

fn write_convergence(
    out: &mut dyn Write,
    format: Format,
    rows: &[(u32, usize, Rational)],
    limit: &Rational,
) -> anyhow::Result<()> {
    match format {
        Format::Text => {
            writeln!(out, "{:>4}  {:>7}  score/q", "q", "score")?;
            for (q, score, ratio) in rows {
                writeln!(out, "{q:>4}  {score:>7}  {}", fraction_string(ratio))?;
            }
            writeln!(out, "limit  {}", fraction_string(limit))?;
        }
        Format::Json => {
            let rows: Vec<String> = rows
                .iter()
                .map(|(q, score, ratio)| {
                    format!(r#"{{"q":{q},"score":{score},"ratio":"{}"}}"#, fraction_string(ratio))
                })
                .collect();
            writeln!(out, r#"{{"rows":[{}],"limit":"{}"}}"#, rows.join(","), fraction_string(limit))?;
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}
