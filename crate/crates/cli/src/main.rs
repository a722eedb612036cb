//! `fewswitch`: generate colorings, inspect component graphs, compute
//! few-switch paths and run the verification harness.
//!
//! Summaries go to standard output; JSON, DOT and CSV artifacts are written
//! only to the paths given with `-o` (or `--dot` / `--json`).

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fewswitch", version, about = "Few-switch paths in 2-edge-colored graphs")]
struct Cli {
    /// Worker threads for parallel runs (1 = sequential).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a named coloring family to a coloring file.
    Gen(GenArgs),
    /// Component graph statistics, optionally exported as JSON or DOT.
    Comp(CompArgs),
    /// Fewest switches between two vertices, or from some u to phi(u).
    Switch(SwitchArgs),
    /// Run the long-cycle witness construction for a given k.
    Witness(WitnessArgs),
    /// Build the few-switch antipodal pair on a torus coloring.
    TorusPair(TorusArgs),
    /// Exhaustive or sampled check of the conjectured bound.
    Verify(VerifyArgs),
    /// Random-coloring experiments with CSV output.
    Experiment(ExperimentArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Directional,
    TwoCube,
    DoubleLevel,
    LevelAlternating,
    ProperCycle,
    Monochromatic,
    Random,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Family parameter: k for directional, two-cube and double-level; n for
    /// level-alternating; m for proper-cycle.
    #[arg(long)]
    k: Option<usize>,
    /// Leading block size of the two-cube coloring.
    #[arg(long)]
    m: Option<usize>,
    /// Base graph for the monochromatic and random families.
    #[arg(long)]
    graph: Option<String>,
    /// Red probability for the random family.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o', long)]
    output: String,
}

#[derive(Args, Debug)]
struct CompArgs {
    coloring: String,
    #[arg(long)]
    json: Option<String>,
    #[arg(long)]
    dot: Option<String>,
    /// Search-node budget for the longest-cycle search.
    #[arg(long, default_value_t = fewswitch::switchpaths::DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct SwitchArgs {
    coloring: String,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// `farthest`, `antipodal`, `identity` or a comma-separated permutation.
    #[arg(long, default_value = "farthest")]
    phi: String,
    #[arg(short = 'o', long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    coloring: String,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "farthest")]
    phi: String,
    #[arg(long, default_value_t = fewswitch::switchpaths::DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(short = 'o', long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct TorusArgs {
    coloring: String,
    #[arg(short = 'o', long)]
    output: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    /// Simple colorings of Q_n (n <= 3).
    Simple,
    /// Random graphs with the long-cycle hypothesis.
    Main,
    /// Induced cycles in component graphs of Q_4..Q_6.
    Induced,
    /// Random torus colorings.
    Torus,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Graph for the d(G, phi) check, e.g. `cycle:6` or `hypercube:4`.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, default_value = "farthest")]
    phi: String,
    /// Enumerate every coloring instead of sampling.
    #[arg(long)]
    exhaustive: bool,
    /// Run a property suite instead of the d(G, phi) check.
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Dimension for the simple suite; torus `a` for the torus suite.
    #[arg(long)]
    n: Option<usize>,
    /// Torus `b` for the torus suite.
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound to check against; defaults to the conjectured value.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(short = 'o', long)]
    output: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Experiment {
    TreeFraction,
    Connectivity,
    AverageSwitch,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(value_enum)]
    kind: Experiment,
    /// Hypercube dimensions, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "6,8,10")]
    ns: Vec<usize>,
    #[arg(long, default_value_t = 2000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge-keep probability for the connectivity experiment.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(short = 'o', long)]
    output: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("fewswitch: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
