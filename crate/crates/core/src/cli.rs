//! The `patchwork` command line.
//!
//! Instances are read from the named file or from stdin. Results go to
//! stdout as JSON (or DOT for `graph --format dot`), diagnostics to stderr.
//!
//! Exit codes: 0 success / orderable, 1 input error, 2 internal contract
//! violation, 3 not orderable.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::closure::{close, close_bounded, ClosureOutcome};
use crate::error::Error;
use crate::intervalgraph::{c_plus, intersection_graph};
use crate::orderability::{decide, DecideOptions};
use crate::setcore::{family_to_json, parse_family, SetFamily};
use crate::structure::{autonomy_tree, synthesize_patchwork, TreeSpec};
use crate::testkit::{brute_force_decide, interval_example, powerset_example};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_NOT_ORDERABLE: i32 = 3;

const DEFAULT_TRIPLE_CAP: usize = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "patchwork",
    version,
    about = "Patchwork closures and convex orderings of set families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the patchwork generated by an instance.
    Close {
        file: Option<PathBuf>,
        /// Stop once the closure has more than this many members.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Decide whether the ground set has an order making every set convex.
    Decide {
        file: Option<PathBuf>,
        /// Past the size bound, keep closing to exhibit an adjacent triple.
        #[arg(long)]
        find_triple: bool,
        /// Closure size limit for --find-triple.
        #[arg(long, default_value_t = DEFAULT_TRIPLE_CAP)]
        triple_cap: usize,
        /// Skip collapsing indistinguishable points.
        #[arg(long)]
        no_quotient: bool,
    },
    /// Print the autonomy tree of the generated patchwork.
    Analyze { file: Option<PathBuf> },
    /// Build the patchwork described by a tree spec.
    Synth { file: Option<PathBuf> },
    /// Intersection graph of the nonempty sets plus all singletons.
    Graph {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Emit one of the extremal instances.
    Extremal {
        #[arg(long, value_enum)]
        kind: ExtremalKind,
        #[arg(long)]
        n: usize,
    },
    /// Decide by trying every order (at most 8 points).
    Oracle { file: Option<PathBuf> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtremalKind {
    Powerset,
    Interval,
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn json(value: Value, code: i32) -> Self {
        let mut text = serde_json::to_string_pretty(&value).expect("json values serialize");
        text.push('\n');
        Output { text, code }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Contract(_) | Error::NotAPatchwork(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli.command, stdin) {
        Ok(out) => {
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_input(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Error> {
    let mut text = String::new();
    let res = match file {
        Some(path) => fs::read_to_string(path).map(|t| text = t),
        None => stdin.read_to_string(&mut text).map(|_| ()),
    };
    res.map_err(|e| {
        let name = file
            .as_ref()
            .map_or("<stdin>".to_string(), |p| p.display().to_string());
        Error::Io(format!("{name}: {e}"))
    })?;
    Ok(text)
}

fn read_family(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<SetFamily, Error> {
    parse_family(&read_input(file, stdin)?)
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<Output, Error> {
    match command {
        Command::Close { file, bound } => {
            let f = read_family(file, stdin)?;
            let outcome = match bound {
                Some(b) => close_bounded(&f, *b),
                None => ClosureOutcome::Closed(close(&f)),
            };
            let value = match outcome {
                ClosureOutcome::Closed(p) => json!({
                    "size": p.len(),
                    "exceeded": false,
                    "sets": family_to_json(p.family())["sets"],
                }),
                ClosureOutcome::Exceeded { reached, bound } => json!({
                    "size": reached,
                    "exceeded": true,
                    "bound": bound,
                }),
            };
            Ok(Output::json(value, EXIT_OK))
        }
        Command::Decide {
            file,
            find_triple,
            triple_cap,
            no_quotient,
        } => {
            let f = read_family(file, stdin)?;
            let opts = DecideOptions {
                quotient: !no_quotient,
                find_triple_cap: find_triple.then_some(*triple_cap),
            };
            let d = decide(&f, &opts)?;
            let code = if d.verdict.is_orderable() {
                EXIT_OK
            } else {
                EXIT_NOT_ORDERABLE
            };
            Ok(Output::json(d.verdict.to_json(f.ground()), code))
        }
        Command::Analyze { file } => {
            let f = read_family(file, stdin)?;
            let p = close(&f);
            let tree = autonomy_tree(&p)?;
            let g = p.ground();
            let labels: Vec<Value> = tree
                .nodes()
                .iter()
                .map(|n| json!({"set": g.labels_of(&n.mask), "case": n.label.name()}))
                .collect();
            Ok(Output::json(
                json!({
                    "closure_size": p.len(),
                    "tree": tree.to_json(g),
                    "case_labels": labels,
                }),
                EXIT_OK,
            ))
        }
        Command::Synth { file } => {
            let spec = TreeSpec::parse(&read_input(file, stdin)?)?;
            let (_, p, _) = synthesize_patchwork(&spec)?;
            Ok(Output::json(family_to_json(p.family()), EXIT_OK))
        }
        Command::Graph { file, format } => {
            let f = read_family(file, stdin)?;
            let g = intersection_graph(&c_plus(&f));
            Ok(match format {
                GraphFormat::Dot => Output {
                    text: g.to_dot(),
                    code: EXIT_OK,
                },
                GraphFormat::Json => Output::json(g.to_json(), EXIT_OK),
            })
        }
        Command::Extremal { kind, n } => {
            let f = match kind {
                ExtremalKind::Powerset => powerset_example(*n)?,
                ExtremalKind::Interval => interval_example(*n)?,
            };
            Ok(Output::json(family_to_json(&f), EXIT_OK))
        }
        Command::Oracle { file } => {
            let f = read_family(file, stdin)?;
            let verdict = brute_force_decide(&f)?;
            let code = if verdict.is_some() {
                EXIT_OK
            } else {
                EXIT_NOT_ORDERABLE
            };
            let value = json!({
                "orderable": verdict.is_some(),
                "order": verdict.map(|o| o.iter().map(|&i| f.ground().label(i).to_string()).collect::<Vec<_>>()),
            });
            Ok(Output::json(value, code))
        }
    }
}
