//! Exhaustive and sampled verification runs and the random-coloring
//! experiments.
//!
//! Everything here is a map-reduce over coloring indices or sample numbers,
//! executed through [`Exec`]. Sample `i` draws from [`rng::sample_rng`]`(seed,
//! i)`, and every reduction breaks ties by lowest index, so reports do not
//! depend on the worker count.
//!
//! Exhaustive enumeration goes through colorings `0..2^m` in edge order with
//! no symmetry reduction; an orbit-reduced enumerator would slot in as a
//! different index source for the same reductions.

use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::colorings::{self, Color, EdgeColoring};
use crate::compgraph::{ComponentGraph, CycleLength, InducedCycle};
use crate::error::{Error, Result};
use crate::graphs::{self, Automorphism, Graph, GraphSpec};
use crate::par::Exec;
use crate::rng::{self, SampleRng};
use crate::switchpaths::{self, WitnessOutcome, DEFAULT_NODE_BUDGET};
use crate::torus::{self, TorusColoring};
use crate::unionfind::UnionFind;

pub const MAX_EXHAUSTIVE_EDGES: usize = 24;
pub const MAX_TREE_FRACTION_DIM: usize = 14;
pub const MAX_CONNECTIVITY_DIM: usize = 16;
pub const MAX_SIMPLE_SUITE_DIM: usize = 3;
/// Violations kept in full in a report; the count is always exact.
pub const MAX_LISTED_VIOLATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: u64,
    pub switches: usize,
    pub coloring: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub mode: Mode,
    pub colorings_evaluated: u64,
    pub worst_case_switches: usize,
    pub worst_case_index: u64,
    pub worst_case_coloring: String,
    pub bound: Option<usize>,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }
}

/// Running state of a max-reduction: worst `(switches, index)` plus the
/// lowest-indexed violations.
#[derive(Debug, Clone, Default)]
struct Tally {
    evaluated: u64,
    worst: Option<(usize, u64)>,
    violation_count: u64,
    violations: Vec<(u64, usize)>,
}

impl Tally {
    fn single(index: u64, value: usize, bound: Option<usize>) -> Self {
        let bad = bound.is_some_and(|b| value > b);
        Tally {
            evaluated: 1,
            worst: Some((value, index)),
            violation_count: u64::from(bad),
            violations: if bad { vec![(index, value)] } else { Vec::new() },
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.evaluated += other.evaluated;
        self.worst = match (self.worst, other.worst) {
            (Some(a), Some(b)) => Some(if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a }),
            (a, b) => a.or(b),
        };
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.sort_unstable();
        self.violations.truncate(MAX_LISTED_VIOLATIONS);
        self
    }
}

fn describe(g: &Graph, phi: &Automorphism) -> String {
    let map = if phi.perm().iter().enumerate().all(|(i, &p)| i == p) { "identity" } else { "phi" };
    format!("{} ({map}, order {})", g.spec(), phi.order())
}

fn check_instance(g: &Graph, phi: &Automorphism) -> Result<()> {
    if phi.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("automorphism size does not match graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn objective(g: &Graph, c: &EdgeColoring, phi: &Automorphism) -> usize {
    // Connected base graphs connect every orbit pair under every coloring.
    switchpaths::orbit_objective_value(g, c, phi).expect("connected graph").0
}

fn finish(
    instance: String,
    mode: Mode,
    bound: Option<usize>,
    tally: Tally,
    coloring_at: impl Fn(u64) -> EdgeColoring,
    started: Instant,
) -> VerificationReport {
    let (worst_switches, worst_index) = tally.worst.unwrap_or((0, 0));
    VerificationReport {
        instance,
        mode,
        colorings_evaluated: tally.evaluated,
        worst_case_switches: worst_switches,
        worst_case_index: worst_index,
        worst_case_coloring: coloring_at(worst_index).to_string(),
        bound,
        violation_count: tally.violation_count,
        violations: tally
            .violations
            .iter()
            .map(|&(index, switches)| Violation { index, switches, coloring: coloring_at(index).to_string() })
            .collect(),
        runtime: started.elapsed(),
    }
}

fn exhaustive_guard(g: &Graph) -> Result<u64> {
    if g.edge_count() > MAX_EXHAUSTIVE_EDGES {
        return Err(Error::TooManyEdges { edges: g.edge_count(), limit: MAX_EXHAUSTIVE_EDGES });
    }
    Ok(1u64 << g.edge_count())
}

/// Max over all colorings of the orbit objective, with the lowest-index
/// extremal coloring.
pub fn exhaustive_d(g: &Graph, phi: &Automorphism) -> Result<(usize, EdgeColoring)> {
    exhaustive_d_with(g, phi, Exec::default())
}

pub fn exhaustive_d_with(g: &Graph, phi: &Automorphism, exec: Exec) -> Result<(usize, EdgeColoring)> {
    let report = exhaustive_report(g, phi, None, exec)?;
    Ok((report.worst_case_switches, EdgeColoring::from_index(g, report.worst_case_index)))
}

pub fn exhaustive_report(
    g: &Graph,
    phi: &Automorphism,
    bound: Option<usize>,
    exec: Exec,
) -> Result<VerificationReport> {
    check_instance(g, phi)?;
    let total = exhaustive_guard(g)?;
    let started = Instant::now();
    let tally = exec.map_reduce(
        0..total,
        Tally::default(),
        |i| Tally::single(i, objective(g, &EdgeColoring::from_index(g, i), phi), bound),
        Tally::merge,
    );
    Ok(finish(describe(g, phi), Mode::Exhaustive, bound, tally, |i| EdgeColoring::from_index(g, i), started))
}

/// Sample 0 is all red; sample `i >= 1` colors each edge red with
/// probability 1/2 from its own sub-seeded generator.
pub fn sampled_coloring(g: &Graph, seed: u64, index: u64) -> EdgeColoring {
    if index == 0 {
        EdgeColoring::monochromatic(g, Color::Red)
    } else {
        colorings::random_coloring_with(g, 0.5, &mut rng::sample_rng(seed, index))
    }
}

pub fn sampled_d(
    g: &Graph,
    phi: &Automorphism,
    samples: u64,
    seed: u64,
    bound: Option<usize>,
) -> Result<VerificationReport> {
    sampled_d_with(g, phi, samples, seed, bound, Exec::default())
}

pub fn sampled_d_with(
    g: &Graph,
    phi: &Automorphism,
    samples: u64,
    seed: u64,
    bound: Option<usize>,
    exec: Exec,
) -> Result<VerificationReport> {
    check_instance(g, phi)?;
    let started = Instant::now();
    let tally = exec.map_reduce(
        0..samples,
        Tally::default(),
        |i| Tally::single(i, objective(g, &sampled_coloring(g, seed, i), phi), bound),
        Tally::merge,
    );
    let mode = Mode::Sampled { samples, seed };
    Ok(finish(describe(g, phi), mode, bound, tally, |i| sampled_coloring(g, seed, i), started))
}

/// The value the conjectures predict for `d(G, phi)` with `phi` the
/// antipodal / farthest-point map, when they make a prediction.
pub fn conjectured_bound(spec: &GraphSpec) -> Option<usize> {
    let factors = spec.cycle_factors()?;
    if factors.iter().any(|&a| a % 2 == 1) {
        return None;
    }
    if factors.iter().all(|&a| a == 2) {
        return Some(usize::from(factors.len() >= 2));
    }
    factors.iter().map(|&a| a / 2 - 1).max()
}

fn hypercube_guard(n: usize, limit: usize) -> Result<Graph> {
    if n == 0 || n > limit {
        return Err(Error::InvalidParameter(format!("dimension must be in 1..={limit}, got {n}")));
    }
    graphs::hypercube(n)
}

/// Fraction of uniform random colorings of `Q_n` whose component graph is a
/// tree.
pub fn tree_fraction_experiment(n: usize, samples: u64, seed: u64, exec: Exec) -> Result<f64> {
    let g = hypercube_guard(n, MAX_TREE_FRACTION_DIM)?;
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    let trees = exec.map_reduce(
        0..samples,
        0u64,
        |i| {
            let c = colorings::random_coloring_with(&g, 0.5, &mut rng::sample_rng(seed, i));
            u64::from(ComponentGraph::build(&g, &c).expect("coloring matches").is_tree())
        },
        |a, b| a + b,
    );
    Ok(trees as f64 / samples as f64)
}

/// `(trees, 2^m)` over every coloring of `Q_n`.
pub fn tree_count_exhaustive(n: usize, exec: Exec) -> Result<(u64, u64)> {
    let g = hypercube_guard(n, MAX_TREE_FRACTION_DIM)?;
    let total = exhaustive_guard(&g)?;
    let trees = exec.map_reduce(
        0..total,
        0u64,
        |i| {
            u64::from(
                ComponentGraph::build(&g, &EdgeColoring::from_index(&g, i))
                    .expect("coloring matches")
                    .is_tree(),
            )
        },
        |a, b| a + b,
    );
    Ok((trees, total))
}

/// Probability that keeping each edge of `Q_n` independently with
/// probability `p` leaves a connected graph.
pub fn connectivity_experiment(n: usize, p: f64, samples: u64, seed: u64, exec: Exec) -> Result<f64> {
    let g = hypercube_guard(n, MAX_CONNECTIVITY_DIM)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    let connected = exec.map_reduce(
        0..samples,
        0u64,
        |i| {
            let mut r = rng::sample_rng(seed, i);
            let mut uf = UnionFind::new(g.vertex_count());
            let mut parts = g.vertex_count();
            for &(u, v) in g.edges() {
                if r.gen_bool(p) && uf.union(u, v) {
                    parts -= 1;
                }
            }
            u64::from(parts == 1)
        },
        |a, b| a + b,
    );
    Ok(connected as f64 / samples as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AverageSwitchReport {
    pub vertices: usize,
    pub mean: f64,
    /// `histogram[s]` = number of vertices `u` needing `s` switches.
    pub histogram: Vec<u64>,
    /// Vertices with no path to their image.
    pub disconnected: Vec<usize>,
}

/// Mean over `u` of the switch distance from `u` to `phi(u)`.
pub fn average_switch_experiment(
    g: &Graph,
    c: &EdgeColoring,
    phi: &Automorphism,
    exec: Exec,
) -> Result<AverageSwitchReport> {
    c.check(g)?;
    if phi.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("automorphism size does not match graph".into()));
    }
    let per_vertex = exec.map_collect(0..g.vertex_count() as u64, |u| {
        let u = u as usize;
        switchpaths::switch_distances_from(g, c, u).map(|d| d[phi.apply(u)])
    });
    let mut histogram = Vec::new();
    let mut disconnected = Vec::new();
    let mut sum = 0u64;
    for (u, d) in per_vertex.into_iter().enumerate() {
        match d? {
            Some(s) => {
                if histogram.len() <= s {
                    histogram.resize(s + 1, 0);
                }
                histogram[s] += 1;
                sum += s as u64;
            }
            None => disconnected.push(u),
        }
    }
    let reached = g.vertex_count() - disconnected.len();
    let mean = if reached == 0 { f64::NAN } else { sum as f64 / reached as f64 };
    Ok(AverageSwitchReport { vertices: g.vertex_count(), mean, histogram, disconnected })
}

/// Checks every simple coloring of `Q_n` for a monochromatic antipodal path
/// and a tree component graph. A violation has `switches` = the orbit
/// objective, or `usize::MAX` when only the tree property fails.
pub fn simple_coloring_suite(n: usize, exec: Exec) -> Result<VerificationReport> {
    let g = hypercube_guard(n, MAX_SIMPLE_SUITE_DIM)?;
    let phi = graphs::antipodal(n)?;
    let total = 1u64 << g.edge_count();
    let started = Instant::now();
    let tally = exec.map_reduce(
        0..total,
        Tally::default(),
        |i| {
            let c = EdgeColoring::from_index(&g, i);
            if !colorings::is_simple(&g, &c).expect("hypercube").is_simple() {
                return Tally::default();
            }
            let value = objective(&g, &c, &phi);
            let tree = ComponentGraph::build(&g, &c).expect("coloring matches").is_tree();
            let mut t = Tally::single(i, value, Some(0));
            if !tree && value == 0 {
                t.violation_count = 1;
                t.violations = vec![(i, usize::MAX)];
            }
            t
        },
        Tally::merge,
    );
    let instance = format!("simple colorings of Q_{n} among {total}");
    Ok(finish(instance, Mode::Exhaustive, Some(0), tally, |i| EdgeColoring::from_index(&g, i), started))
}

/// A connected graph on `n` vertices with a non-trivial automorphism: a
/// uniformly random permutation `pi` and a random union of edge orbits under
/// `pi`.
pub fn random_symmetric_graph(n: usize, r: &mut impl Rng) -> Result<(Graph, Automorphism)> {
    if n < 2 {
        return Err(Error::InvalidParameter("need at least 2 vertices".into()));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, r.gen_range(0..=i));
    }
    let mut orbit_of = vec![vec![usize::MAX; n]; n];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if orbit_of[u][v] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let (mut x, mut y) = (u, v);
            while orbit_of[x.min(y)][x.max(y)] == usize::MAX {
                orbit_of[x.min(y)][x.max(y)] = id;
                orbit.push((x.min(y), x.max(y)));
                x = perm[x];
                y = perm[y];
            }
            orbits.push(orbit);
        }
    }
    for attempt in 0.. {
        let keep: Vec<bool> = if attempt < 64 {
            (0..orbits.len()).map(|_| r.gen_bool(0.5)).collect()
        } else {
            vec![true; orbits.len()]
        };
        let edges = orbits.iter().zip(&keep).filter(|(_, &k)| k).flat_map(|(o, _)| o.iter().copied());
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            let phi = graphs::validate_automorphism(&g, perm.clone())?;
            return Ok((g, phi));
        }
    }
    unreachable!("the complete graph is connected")
}

/// Outcome of a randomized property suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub instances: u64,
    /// Instances where the statement's hypothesis held and it was checked.
    pub checked: u64,
    /// Instances skipped because a search budget ran out.
    pub skipped: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, Default)]
struct SuiteTally {
    checked: u64,
    skipped: u64,
    violation_count: u64,
    violations: Vec<(u64, String)>,
}

impl SuiteTally {
    fn checked() -> Self {
        SuiteTally { checked: 1, ..Default::default() }
    }

    fn skipped() -> Self {
        SuiteTally { skipped: 1, ..Default::default() }
    }

    fn violation(index: u64, message: String) -> Self {
        SuiteTally {
            checked: 1,
            violation_count: 1,
            violations: vec![(index, message)],
            ..Default::default()
        }
    }

    fn merge(mut self, other: SuiteTally) -> SuiteTally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.sort();
        self.violations.truncate(MAX_LISTED_VIOLATIONS);
        self
    }
}

fn run_suite(
    name: String,
    instances: u64,
    seed: u64,
    exec: Exec,
    instance: impl Fn(u64, &mut SampleRng) -> SuiteTally + Sync + Send,
) -> SuiteReport {
    let started = Instant::now();
    let t = exec.map_reduce(
        0..instances,
        SuiteTally::default(),
        |i| instance(i, &mut rng::sample_rng(seed, i)),
        SuiteTally::merge,
    );
    SuiteReport {
        name,
        seed,
        instances,
        checked: t.checked,
        skipped: t.skipped,
        violation_count: t.violation_count,
        violations: t.violations.into_iter().map(|(i, m)| format!("#{i}: {m}")).collect(),
        runtime: started.elapsed(),
    }
}

/// Random graphs on `2..=max_vertices` vertices with a random automorphism
/// and coloring, `k` in `0..=2`: whenever the longest meta-cycle is shorter
/// than `2k + 3`, the witness finder must succeed with at most `k` switches
/// and agree with the orbit objective.
pub fn main_theorem_suite(instances: u64, max_vertices: usize, seed: u64, exec: Exec) -> Result<SuiteReport> {
    if max_vertices < 2 {
        return Err(Error::InvalidParameter("need at least 2 vertices".into()));
    }
    Ok(run_suite("main theorem".into(), instances, seed, exec, |i, r| {
        let n = r.gen_range(2..=max_vertices);
        let (g, phi) = random_symmetric_graph(n, r).expect("n >= 2");
        let p = r.gen_range(0.1..0.9);
        let c = colorings::random_coloring_with(&g, p, r);
        let k = r.gen_range(0..=2usize);
        let cg = ComponentGraph::build(&g, &c).expect("coloring matches");
        match cg.longest_cycle_length(DEFAULT_NODE_BUDGET) {
            CycleLength::LowerBound { .. } => return SuiteTally::skipped(),
            len if len.length() >= 2 * k + 3 => return SuiteTally::default(),
            _ => {}
        }
        let best = objective(&g, &c, &phi);
        match switchpaths::theorem_witness(&g, &c, &phi, k, DEFAULT_NODE_BUDGET) {
            Ok(WitnessOutcome::Witness { u, path, .. }) => {
                let ok = path.switches <= k
                    && best <= path.switches
                    && path.start() == u
                    && path.end() == phi.apply(u)
                    && path.is_valid(&g, &c);
                if ok {
                    SuiteTally::checked()
                } else {
                    SuiteTally::violation(
                        i,
                        format!("bad witness on {} with k={k}: {}", g.spec(), path.to_json()),
                    )
                }
            }
            other => SuiteTally::violation(i, format!("{} k={k} coloring {c}: {other:?}", g.spec())),
        }
    }))
}

/// Random colorings of `Q_n`, `n` cycling through `dims`, each with its own
/// red probability in `[0.1, 0.9]`: whenever the antipodal orbit objective
/// is `k > 1`, the component graph must have an induced cycle of length at
/// least `2k - 2`.
pub fn induced_cycle_suite(instances: u64, dims: &[usize], seed: u64, exec: Exec) -> Result<SuiteReport> {
    if dims.is_empty() {
        return Err(Error::InvalidParameter("no dimensions given".into()));
    }
    let cubes = dims
        .iter()
        .map(|&n| Ok((graphs::hypercube(n)?, graphs::antipodal(n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(run_suite("induced cycle".into(), instances, seed, exec, |i, r| {
        let (g, phi) = &cubes[i as usize % cubes.len()];
        let p = r.gen_range(0.1..0.9);
        let c = colorings::random_coloring_with(g, p, r);
        let k = objective(g, &c, phi);
        if k <= 1 {
            return SuiteTally::default();
        }
        let cg = ComponentGraph::build(g, &c).expect("coloring matches");
        match cg.longest_induced_cycle(2 * k - 2, DEFAULT_NODE_BUDGET) {
            InducedCycle::Found(_) => SuiteTally::checked(),
            InducedCycle::BudgetExhausted(_) => SuiteTally::skipped(),
            InducedCycle::NotFound => SuiteTally::violation(i, format!("{} k={k} coloring {c}", g.spec())),
        }
    }))
}

/// Random colorings of `C_{2a} □ C_{2b}`: the constructed pair, the charging
/// bounds on its diagonal family, and the orbit objective cross-check.
pub fn torus_suite(a: usize, b: usize, instances: u64, seed: u64, exec: Exec) -> Result<SuiteReport> {
    let g = graphs::product_of_cycles(&[2 * a, 2 * b])?;
    TorusColoring::new(a, b, EdgeColoring::monochromatic(&g, Color::Red))?;
    let phi = graphs::farthest_point_automorphism(&[2 * a, 2 * b])?;
    Ok(run_suite(format!("torus a={a} b={b}"), instances, seed, exec, |i, r| {
        let c = colorings::random_coloring_with(&g, 0.5, r);
        let tc = TorusColoring::new(a, b, c.clone()).expect("validated above");
        let pair = match torus::find_pair(&tc) {
            Ok(pair) => pair,
            Err(e) => return SuiteTally::violation(i, format!("coloring {c}: {e}")),
        };
        let charges = torus::charge_accounting(&tc, &pair.diagonals);
        let best = objective(&g, &c, &phi);
        if charges.max_charge > 2 || charges.mean() > a as f64 {
            SuiteTally::violation(i, format!("coloring {c}: charges {charges:?}"))
        } else if best > pair.path.switches {
            SuiteTally::violation(i, format!("coloring {c}: pair beats the optimum {best}"))
        } else {
            SuiteTally::checked()
        }
    }))
}
