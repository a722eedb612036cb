use std::fmt;

use fewswitch::colorings::{self, Color, EdgeColoring};
use fewswitch::compgraph::{ComponentGraph, CycleLength};
use fewswitch::graphs::{self, Automorphism, Graph, GraphSpec};
use fewswitch::harness::{self, SuiteReport, VerificationReport};
use fewswitch::par::Exec;
use fewswitch::switchpaths::{self, WitnessOutcome};
use fewswitch::torus::{self, PairCase, TorusColoring};
use fewswitch::{io, Error};

use crate::{
    Cli, Command, CompArgs, Experiment, ExperimentArgs, Family, GenArgs, Suite, SwitchArgs, TorusArgs,
    VerifyArgs, WitnessArgs,
};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Violation(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Violation(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Violation(m) => write!(f, "VIOLATION: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: Cli) -> Outcome {
    let exec = match cli.workers {
        Some(0) => return Err(Failure::Usage("--workers must be at least 1".into())),
        Some(1) => Exec::Sequential,
        _ => Exec::default(),
    };
    #[cfg(feature = "parallel")]
    if let Some(w) = cli.workers.filter(|&w| w > 1) {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Failure::Internal(e.to_string()))?;
        return pool.install(|| dispatch(cli.command, exec));
    }
    dispatch(cli.command, exec)
}

fn dispatch(command: Command, exec: Exec) -> Outcome {
    match command {
        Command::Gen(args) => gen(args),
        Command::Comp(args) => comp(args),
        Command::Switch(args) => switch(args),
        Command::Witness(args) => witness(args),
        Command::TorusPair(args) => torus_pair(args),
        Command::Verify(args) => verify(args, exec),
        Command::Experiment(args) => experiment(args, exec),
    }
}

fn required(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for the {family} family")))
}

fn parse_graph(s: &str) -> Result<Graph, Failure> {
    Ok(s.parse::<GraphSpec>()?.build()?)
}

fn parse_phi(g: &Graph, s: &str) -> Result<Automorphism, Failure> {
    match s {
        "farthest" => Ok(graphs::farthest_point_map(g)?),
        "antipodal" => {
            let n = g.hypercube_dim().ok_or(Error::NotHypercube)?;
            Ok(graphs::antipodal(n)?)
        }
        "identity" => Ok(graphs::identity(g)),
        list => {
            let perm = list
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("bad automorphism {list:?}")))?;
            Ok(graphs::validate_automorphism(g, perm)?)
        }
    }
}

fn write_json(path: &Option<String>, value: &impl serde::Serialize) -> Outcome {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
        text.push('\n');
        io::write_text(path, &text)?;
        println!("wrote {path}");
    }
    Ok(())
}

fn gen(args: GenArgs) -> Outcome {
    let name = format!("{:?}", args.family).to_lowercase();
    let (g, c) = match args.family {
        Family::Directional => colorings::directional_coloring(required(args.k, "k", &name)?)?,
        Family::TwoCube => {
            colorings::two_cube_coloring(required(args.m, "m", &name)?, required(args.k, "k", &name)?)?
        }
        Family::DoubleLevel => colorings::double_level_coloring(required(args.k, "k", &name)?)?,
        Family::LevelAlternating => colorings::level_alternating_coloring(required(args.k, "k", &name)?)?,
        Family::ProperCycle => colorings::proper_cycle_coloring(required(args.k, "k", &name)?)?,
        Family::Monochromatic | Family::Random => {
            let spec = args
                .graph
                .as_deref()
                .ok_or_else(|| Failure::Usage(format!("--graph is required for the {name} family")))?;
            let g = parse_graph(spec)?;
            let c = if args.family == Family::Random {
                println!("seed = {}, p = {}", args.seed, args.p);
                colorings::random_coloring(&g, args.p, args.seed)?
            } else {
                EdgeColoring::monochromatic(&g, Color::Red)
            };
            (g, c)
        }
    };
    io::write_coloring(&args.output, &g, &c)?;
    println!(
        "{name}: {} with {} edges ({} red, {} blue) -> {}",
        g.spec(),
        g.edge_count(),
        c.count(Color::Red),
        c.count(Color::Blue),
        args.output
    );
    Ok(())
}

fn comp(args: CompArgs) -> Outcome {
    let (g, c) = io::read_coloring(&args.coloring)?;
    let cg = ComponentGraph::build(&g, &c)?;
    println!("graph: {}", g.spec());
    println!("components: {} ({} red, {} blue)", cg.len(), cg.red_count(), cg.blue_count());
    println!("meta-edges: {}", cg.edges().len());
    println!("connected: {}", cg.is_connected());
    println!("tree: {}", cg.is_tree());
    println!("complete bipartite: {}", cg.is_complete_bipartite());
    let longest = match cg.longest_cycle_length(args.budget) {
        CycleLength::Acyclic => "none (acyclic)".to_string(),
        CycleLength::Exact { length, .. } => format!("{length} (exact)"),
        CycleLength::LowerBound { length, .. } => format!(">= {length} (budget exhausted)"),
    };
    println!("longest cycle: {longest}");
    if let Some(path) = &args.json {
        write_json(&Some(path.clone()), &cg.to_json())?;
    }
    if let Some(path) = &args.dot {
        io::write_text(path, &cg.export_dot())?;
        println!("wrote {path}");
    }
    Ok(())
}

fn switch(args: SwitchArgs) -> Outcome {
    let (g, c) = io::read_coloring(&args.coloring)?;
    match (args.u, args.v) {
        (None, Some(_)) => Err(Failure::Usage("--v needs --u".into())),
        (Some(u), v) => {
            g.check_vertex(u)?;
            let v = match v {
                Some(v) => v,
                None => parse_phi(&g, &args.phi)?.apply(u),
            };
            match switchpaths::min_switches(&g, &c, u, v)? {
                Some(path) => {
                    println!("u = {u}, v = {v}: {} switches over {} edges", path.switches, path.len());
                    write_json(&args.output, &path.to_json())
                }
                None => {
                    println!("u = {u}, v = {v}: unreachable");
                    Ok(())
                }
            }
        }
        (None, None) => {
            let phi = parse_phi(&g, &args.phi)?;
            let best = switchpaths::orbit_objective(&g, &c, &phi)?;
            println!(
                "min over u of switches(u, phi(u)) = {} at u = {}",
                best.best_switches, best.witness_vertex
            );
            write_json(&args.output, &best.path.witness_json())
        }
    }
}

fn witness(args: WitnessArgs) -> Outcome {
    let (g, c) = io::read_coloring(&args.coloring)?;
    let phi = parse_phi(&g, &args.phi)?;
    let outcome = switchpaths::theorem_witness(&g, &c, &phi, args.k, args.budget)?;
    let result = match &outcome {
        WitnessOutcome::Witness { u, path, trace } => {
            println!(
                "witness: u = {u}, phi(u) = {}, {} switches (k = {}), {} rounds",
                path.end(),
                path.switches,
                args.k,
                trace.len()
            );
            Ok(())
        }
        WitnessOutcome::HypothesisViolated { cycle } => {
            println!(
                "hypothesis fails: component graph has a cycle of length {} >= {}",
                cycle.len(),
                2 * args.k + 3
            );
            Ok(())
        }
        WitnessOutcome::Failure { reason, .. } => Err(Failure::Internal(reason.clone())),
    };
    write_json(&args.output, &outcome.to_json())?;
    result
}

fn torus_pair(args: TorusArgs) -> Outcome {
    let (g, c) = io::read_coloring(&args.coloring)?;
    let tc = TorusColoring::from_graph(&g, c)?;
    let pair = torus::find_pair(&tc)?;
    let (ux, uy) = tc.coords(pair.u);
    let (vx, vy) = tc.coords(pair.v);
    let case = match pair.case {
        PairCase::AllProper => "every 4-cycle alternates".to_string(),
        PairCase::Diagonal { start_row } => format!("lazy diagonal from row {start_row}"),
    };
    println!(
        "u = ({ux}, {uy}), v = ({vx}, {vy}): {} switches (bound {}), {case}",
        pair.path.switches,
        tc.b() - 1
    );
    write_json(&args.output, &pair.to_json(&tc))
}

fn print_verification(r: &VerificationReport) {
    println!("instance: {}", r.instance);
    println!("colorings evaluated: {}", r.colorings_evaluated);
    println!("worst case: {} switches (coloring #{})", r.worst_case_switches, r.worst_case_index);
    if let Some(b) = r.bound {
        println!("bound: {b}, violations: {}", r.violation_count);
    }
}

fn print_suite(r: &SuiteReport) {
    println!("suite: {} (seed = {})", r.name, r.seed);
    println!(
        "instances: {}, checked: {}, skipped: {}, violations: {}",
        r.instances, r.checked, r.skipped, r.violation_count
    );
    for v in &r.violations {
        println!("  {v}");
    }
}

fn verify(args: VerifyArgs, exec: Exec) -> Outcome {
    if let Some(suite) = args.suite {
        let report = match suite {
            Suite::Simple => {
                let n = match (args.n, &args.graph) {
                    (Some(n), _) => n,
                    (None, Some(spec)) => parse_graph(spec)?.hypercube_dim().ok_or(Error::NotHypercube)?,
                    (None, None) => {
                        return Err(Failure::Usage("--n is required for the simple suite".into()))
                    }
                };
                let r = harness::simple_coloring_suite(n, exec)?;
                print_verification(&r);
                write_json(&args.output, &r)?;
                return if r.holds() {
                    Ok(())
                } else {
                    Err(Failure::Violation(format!("{} simple colorings fail", r.violation_count)))
                };
            }
            Suite::Main => {
                println!("seed = {}", args.seed);
                harness::main_theorem_suite(args.samples, 10, args.seed, exec)?
            }
            Suite::Induced => {
                println!("seed = {}", args.seed);
                harness::induced_cycle_suite(args.samples, &[4, 5, 6], args.seed, exec)?
            }
            Suite::Torus => {
                let a = args.n.ok_or_else(|| Failure::Usage("--n (torus a) is required".into()))?;
                let b = args.b.ok_or_else(|| Failure::Usage("--b is required".into()))?;
                println!("seed = {}", args.seed);
                harness::torus_suite(a, b, args.samples, args.seed, exec)?
            }
        };
        print_suite(&report);
        write_json(&args.output, &report)?;
        return if report.holds() {
            Ok(())
        } else {
            Err(Failure::Violation(format!(
                "{} violations in the {} suite",
                report.violation_count, report.name
            )))
        };
    }

    let spec =
        args.graph.as_deref().ok_or_else(|| Failure::Usage("--graph or --suite is required".into()))?;
    let g = parse_graph(spec)?;
    let phi = parse_phi(&g, &args.phi)?;
    let bound = args.bound.or_else(|| harness::conjectured_bound(g.spec()));
    let report = if args.exhaustive {
        let r = harness::exhaustive_report(&g, &phi, bound, exec)?;
        println!("d = {}", r.worst_case_switches);
        r
    } else {
        println!("seed = {}, samples = {}", args.seed, args.samples);
        harness::sampled_d_with(&g, &phi, args.samples, args.seed, bound, exec)?
    };
    print_verification(&report);
    write_json(&args.output, &report)?;
    if report.holds() {
        Ok(())
    } else {
        let first = &report.violations[0];
        Err(Failure::Violation(format!(
            "{} colorings exceed the bound; first #{} needs {} switches: {}",
            report.violation_count, first.index, first.switches, first.coloring
        )))
    }
}

fn experiment(args: ExperimentArgs, exec: Exec) -> Outcome {
    println!("seed = {}, samples = {}", args.seed, args.samples);
    let mut csv = String::from("n,samples,value\n");
    for &n in &args.ns {
        let (samples, value, note) = match args.kind {
            Experiment::TreeFraction => (
                args.samples,
                harness::tree_fraction_experiment(n, args.samples, args.seed, exec)?,
                String::new(),
            ),
            Experiment::Connectivity => {
                let v = harness::connectivity_experiment(n, args.p, args.samples, args.seed, exec)?;
                (args.samples, v, format!("  (1/e = {:.4})", (-1f64).exp()))
            }
            Experiment::AverageSwitch => {
                let (g, c) = colorings::level_alternating_coloring(n)?;
                let phi = graphs::antipodal(n)?;
                let r = harness::average_switch_experiment(&g, &c, &phi, exec)?;
                (r.vertices as u64, r.mean, format!("  (mean/sqrt(n) = {:.4})", r.mean / (n as f64).sqrt()))
            }
        };
        println!("n = {n}: {value:.6}{note}");
        csv.push_str(&format!("{n},{samples},{value}\n"));
    }
    if let Some(path) = &args.output {
        io::write_text(path, &csv)?;
        println!("wrote {path}");
    }
    Ok(())
}
