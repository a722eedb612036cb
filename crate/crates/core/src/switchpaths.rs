//! Minimum-switch paths and the component-graph witness construction.
//!
//! The switch count of a path is the number of positions where consecutive
//! edges differ in color. The minimum over paths from `u` to `v` is a 0/1
//! shortest path over states `(vertex, color of the last edge)`, both colors
//! being free at the start.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::colorings::{Color, EdgeColoring};
use crate::compgraph::{self, ComponentGraph, CycleLength};
use crate::error::{Error, Result};
use crate::flow::{self, Separation};
use crate::graphs::{Automorphism, Graph};

/// A path in the base graph with its edge colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchPath {
    pub vertices: Vec<usize>,
    pub colors: Vec<Color>,
    pub switches: usize,
}

pub fn count_switches(colors: &[Color]) -> usize {
    colors.windows(2).filter(|w| w[0] != w[1]).count()
}

impl SwitchPath {
    /// A single vertex, no edges.
    pub fn trivial(u: usize) -> Self {
        SwitchPath { vertices: vec![u], colors: Vec::new(), switches: 0 }
    }

    pub fn from_vertices(g: &Graph, c: &EdgeColoring, vertices: Vec<usize>) -> Result<Self> {
        let mut colors = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            let e = g
                .edge_id(w[0], w[1])
                .ok_or_else(|| Error::InvalidParameter(format!("{} and {} are not adjacent", w[0], w[1])))?;
            colors.push(c.get(e));
        }
        let switches = count_switches(&colors);
        Ok(SwitchPath { vertices, colors, switches })
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("non-empty path")
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Consecutive vertices adjacent, colors match `c`, switches recounted,
    /// no repeated vertex.
    pub fn is_valid(&self, g: &Graph, c: &EdgeColoring) -> bool {
        let mut seen = std::collections::HashSet::new();
        !self.vertices.is_empty()
            && self.vertices.iter().all(|&v| v < g.vertex_count() && seen.insert(v))
            && self.colors.len() + 1 == self.vertices.len()
            && self
                .vertices
                .windows(2)
                .zip(&self.colors)
                .all(|(w, &col)| c.between(g, w[0], w[1]) == Some(col))
            && self.switches == count_switches(&self.colors)
    }

    pub fn color_string(&self) -> String {
        self.colors.iter().map(|c| c.as_char()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "switches": self.switches,
            "vertices": self.vertices,
            "colors": self.color_string(),
        })
    }

    /// Witness form: `{"u", "phi_u", "switches", "vertices", "colors"}`.
    pub fn witness_json(&self) -> serde_json::Value {
        json!({
            "u": self.start(),
            "phi_u": self.end(),
            "switches": self.switches,
            "vertices": self.vertices,
            "colors": self.color_string(),
        })
    }
}

/// Removes cycles from a walk, keeping the first visit of each vertex.
/// Never increases the switch count.
pub fn loop_erase(walk: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    let mut pos = std::collections::HashMap::new();
    for &v in walk {
        if let Some(&i) = pos.get(&v) {
            for w in out.drain(i + 1..) {
                pos.remove(&w);
            }
        } else {
            pos.insert(v, out.len());
            out.push(v);
        }
    }
    out
}

const NONE: usize = usize::MAX;

/// 0/1 BFS from `source`; stops early once `target` is settled or the
/// frontier reaches `limit`.
struct SwitchBfs {
    dist: Vec<usize>,
    parent: Vec<usize>,
}

impl SwitchBfs {
    fn run(g: &Graph, c: &EdgeColoring, source: usize, target: Option<usize>, limit: usize) -> Self {
        let states = 2 * g.vertex_count();
        let mut dist = vec![NONE; states];
        let mut parent = vec![NONE; states];
        let mut done = vec![false; states];
        let mut deque = VecDeque::new();
        for col in Color::BOTH {
            let s = 2 * source + col.index();
            dist[s] = 0;
            deque.push_back(s);
        }
        while let Some(s) = deque.pop_front() {
            if done[s] {
                continue;
            }
            done[s] = true;
            let d = dist[s];
            if d >= limit {
                break;
            }
            let (x, last) = (s / 2, s % 2);
            if Some(x) == target
                && Color::BOTH.iter().all(|col| done[2 * x + col.index()] || dist[2 * x + col.index()] > d)
            {
                break;
            }
            for (&y, &e) in g.neighbors(x).iter().zip(g.incident_edges(x)) {
                let col = c.get(e).index();
                let t = 2 * y + col;
                let nd = d + usize::from(col != last);
                if nd < dist[t] {
                    dist[t] = nd;
                    parent[t] = s;
                    if nd == d {
                        deque.push_front(t);
                    } else {
                        deque.push_back(t);
                    }
                }
            }
        }
        SwitchBfs { dist, parent }
    }

    fn best_state(&self, v: usize) -> Option<usize> {
        let (r, b) = (2 * v, 2 * v + 1);
        match (self.dist[r], self.dist[b]) {
            (NONE, NONE) => None,
            (dr, db) if dr <= db => Some(r),
            _ => Some(b),
        }
    }

    fn distance(&self, v: usize) -> Option<usize> {
        self.best_state(v).map(|s| self.dist[s])
    }

    fn walk_to(&self, v: usize) -> Option<Vec<usize>> {
        let mut s = self.best_state(v)?;
        let mut walk = vec![s / 2];
        while self.parent[s] != NONE {
            s = self.parent[s];
            walk.push(s / 2);
        }
        walk.reverse();
        Some(walk)
    }
}

/// Minimum-switch path from `u` to `v`; `None` when they are disconnected.
pub fn min_switches(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<Option<SwitchPath>> {
    c.check(g)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(Some(SwitchPath::trivial(u)));
    }
    let bfs = SwitchBfs::run(g, c, u, Some(v), NONE);
    bfs.walk_to(v).map(|walk| SwitchPath::from_vertices(g, c, loop_erase(&walk))).transpose()
}

/// Minimum switch counts from `u` to every vertex.
pub fn switch_distances_from(g: &Graph, c: &EdgeColoring, u: usize) -> Result<Vec<Option<usize>>> {
    c.check(g)?;
    g.check_vertex(u)?;
    let bfs = SwitchBfs::run(g, c, u, None, NONE);
    Ok((0..g.vertex_count()).map(|v| bfs.distance(v)).collect())
}

/// Switch distance from `u` to `v` if it is below `limit`.
fn switch_distance_below(g: &Graph, c: &EdgeColoring, u: usize, v: usize, limit: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    SwitchBfs::run(g, c, u, Some(v), limit).distance(v).filter(|&d| d < limit)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitObjectiveResult {
    pub best_switches: usize,
    pub witness_vertex: usize,
    pub path: SwitchPath,
}

/// Minimum over `u` of the switch distance from `u` to `phi(u)`.
pub fn orbit_objective(g: &Graph, c: &EdgeColoring, phi: &Automorphism) -> Result<OrbitObjectiveResult> {
    c.check(g)?;
    if phi.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("automorphism size does not match graph".into()));
    }
    let (best, u) = orbit_objective_value(g, c, phi).ok_or(Error::NoConnectedOrbitPair)?;
    let path = min_switches(g, c, u, phi.apply(u))?
        .ok_or_else(|| Error::Internal("orbit pair lost its path".into()))?;
    debug_assert_eq!(path.switches, best);
    Ok(OrbitObjectiveResult { best_switches: best, witness_vertex: u, path })
}

/// `(value, lowest minimizing u)` without building a path.
pub fn orbit_objective_value(g: &Graph, c: &EdgeColoring, phi: &Automorphism) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for u in 0..g.vertex_count() {
        let limit = best.map_or(NONE, |b| b.0);
        if let Some(d) = switch_distance_below(g, c, u, phi.apply(u), limit) {
            best = Some((d, u));
            if d == 0 {
                break;
            }
        }
    }
    best
}

/// One iteration of the region-shrinking loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessStep {
    /// Current center `a_i`.
    pub center: usize,
    /// Size of the component of `Comp \ B_k(a_i)` holding `S(a_i)`.
    pub region_size: usize,
    /// Size of the boundary `H_i` of the ball inside that region.
    pub boundary_size: usize,
    /// Cut vertex separating the center from the boundary.
    pub cut: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Witness {
        u: usize,
        path: SwitchPath,
        trace: Vec<WitnessStep>,
    },
    /// The component graph has a cycle of length at least `2k + 3`.
    HypothesisViolated {
        cycle: Vec<usize>,
    },
    /// Should not happen when the hypothesis holds.
    Failure {
        reason: String,
        trace: Vec<WitnessStep>,
    },
}

impl WitnessOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            WitnessOutcome::Witness { path, trace, .. } => {
                let mut v = path.witness_json();
                v["outcome"] = json!("witness");
                v["iterations"] = json!(trace.len());
                v
            }
            WitnessOutcome::HypothesisViolated { cycle } => {
                json!({"outcome": "hypothesis_violated", "cycle_length": cycle.len(), "cycle": cycle})
            }
            WitnessOutcome::Failure { reason, trace } => {
                json!({"outcome": "failure", "reason": reason, "trace": trace})
            }
        }
    }
}

/// Default expansion budget for the cycle searches behind [`theorem_witness`].
pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

/// Finds `u` and a path from `u` to `phi(u)` with at most `k` switches,
/// provided every cycle of the component graph is shorter than `2k + 3`.
///
/// Starting from the largest component `a_0`, each round checks whether
/// `S(a_i)` meets the ball `B_k(a_i)`. If not, the boundary `H_i` of the
/// ball on the side of `S(a_i)` is separated from `a_i` by a single vertex
/// `s_i`, and the center moves one step towards `s_i`. The region holding
/// `S(a_i)` shrinks strictly every round.
pub fn theorem_witness(
    g: &Graph,
    c: &EdgeColoring,
    phi: &Automorphism,
    k: usize,
    node_budget: u64,
) -> Result<WitnessOutcome> {
    c.check(g)?;
    if phi.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("automorphism size does not match graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let cg = ComponentGraph::build(g, c)?;
    let limit = 2 * k + 3;
    match cg.cycle_at_least(limit, node_budget) {
        CycleLength::Exact { length, cycle } | CycleLength::LowerBound { length, cycle }
            if length >= limit =>
        {
            return Ok(WitnessOutcome::HypothesisViolated { cycle });
        }
        CycleLength::LowerBound { length, .. } => {
            return Ok(WitnessOutcome::Failure {
                reason: format!("cycle search budget exhausted; longest cycle seen {length}"),
                trace: Vec::new(),
            });
        }
        _ => {}
    }

    let adjacency: Vec<Vec<usize>> = (0..cg.len()).map(|a| cg.neighbors(a).to_vec()).collect();
    let mut center = (0..cg.len())
        .max_by(|&x, &y| cg.members(x).len().cmp(&cg.members(y).len()).then(y.cmp(&x)))
        .expect("non-empty component graph");
    let mut trace = Vec::new();
    let mut previous_region = usize::MAX;
    let fail = |reason: String, trace: Vec<WitnessStep>| Ok(WitnessOutcome::Failure { reason, trace });

    for _ in 0..=cg.len() {
        let dist = cg.distances_from(center);
        let image = cg.image_component_set(phi, center)?;
        let hit = image.iter().filter(|&&b| dist[b].is_some_and(|d| d <= k)).min_by_key(|&&b| (dist[b], b));
        if let Some(&target) = hit {
            let path = stitch(g, c, &cg, phi, center, target)?;
            if path.switches > k || path.end() != phi.apply(path.start()) || !path.is_valid(g, c) {
                return fail(format!("stitched path has {} switches", path.switches), trace);
            }
            return Ok(WitnessOutcome::Witness { u: path.start(), path, trace });
        }

        let in_ball = |v: usize| dist[v].is_some_and(|d| d <= k);
        let region = compgraph::bfs(&adjacency, image[0], |v| !in_ball(v));
        if image.iter().any(|&b| region[b].is_none()) {
            return fail("S(a) is split by the ball".into(), trace);
        }
        let region_size = region.iter().filter(|d| d.is_some()).count();
        let boundary: Vec<usize> =
            (0..cg.len()).filter(|&v| region[v].is_some() && dist[v] == Some(k + 1)).collect();
        let mut step = WitnessStep { center, region_size, boundary_size: boundary.len(), cut: None };
        if region_size >= previous_region {
            trace.push(step);
            return fail("region did not shrink".into(), trace);
        }
        previous_region = region_size;

        let allowed: Vec<bool> = dist.iter().map(|d| d.is_some_and(|d| d <= k + 1)).collect();
        let cut = match flow::separate(&adjacency, &allowed, center, &boundary) {
            Separation::Single { cut } => cut,
            Separation::Multiple => {
                trace.push(step);
                return fail("two vertex-disjoint paths reach the boundary".into(), trace);
            }
            Separation::Unreachable => {
                trace.push(step);
                return fail("boundary unreachable from the center".into(), trace);
            }
        };
        step.cut = Some(cut);
        trace.push(step);
        let from_cut = cg.distances_from(cut);
        let toward = from_cut[center].expect("connected") - 1;
        center = *cg
            .neighbors(center)
            .iter()
            .find(|&&w| from_cut[w] == Some(toward))
            .expect("shortest path to the cut vertex");
    }
    fail("iteration limit reached".into(), trace)
}

/// Walks the meta path `from -> to` and joins monochromatic pieces.
fn stitch(
    g: &Graph,
    c: &EdgeColoring,
    cg: &ComponentGraph,
    phi: &Automorphism,
    from: usize,
    to: usize,
) -> Result<SwitchPath> {
    let meta_path = meta_shortest_path(cg, from, to);
    let u = *cg
        .members(from)
        .iter()
        .find(|&&x| {
            let (r, b) = cg.components_of(phi.apply(x));
            r == to || b == to
        })
        .ok_or_else(|| Error::Internal("target component misses phi(a)".into()))?;
    let goal = phi.apply(u);
    let mut walk = vec![u];
    let mut current = u;
    for pair in meta_path.windows(2) {
        let (here, next) = (pair[0], pair[1]);
        let next_color = cg.color(next);
        let joint = *cg
            .members(here)
            .iter()
            .find(|&&x| cg.component_of(x, next_color) == next)
            .ok_or_else(|| Error::Internal("adjacent components share no vertex".into()))?;
        walk.extend(mono_path(g, c, cg.color(here), current, joint).into_iter().skip(1));
        current = joint;
    }
    walk.extend(mono_path(g, c, cg.color(to), current, goal).into_iter().skip(1));
    SwitchPath::from_vertices(g, c, loop_erase(&walk))
}

fn meta_shortest_path(cg: &ComponentGraph, from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![NONE; cg.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in cg.neighbors(x) {
            if parent[y] == NONE {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// BFS path using only edges of one color.
fn mono_path(g: &Graph, c: &EdgeColoring, color: Color, from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![NONE; g.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for (&y, &e) in g.neighbors(x).iter().zip(g.incident_edges(x)) {
            if c.get(e) == color && parent[y] == NONE {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Minimum switches from `u` to its antipode over the `n!` coordinate-monotone
/// geodesics of `Q_n`, by dynamic programming over flipped-coordinate sets.
pub fn geodesic_min_switches(qn: &Graph, c: &EdgeColoring, u: usize) -> Result<SwitchPath> {
    let n = qn.hypercube_dim().ok_or(Error::NotHypercube)?;
    c.check(qn)?;
    qn.check_vertex(u)?;
    let full = (1usize << n) - 1;
    let states = 2usize << n;
    let mut cost = vec![u32::MAX; states];
    // (previous set, previous color) packed as 2*set + color
    let mut parent = vec![NONE; states];
    cost[0] = 0;
    cost[1] = 0;
    for set in 0..full {
        let x = u ^ set;
        for bit in (0..n).filter(|b| set >> b & 1 == 0) {
            let y = x ^ (1 << bit);
            let e = c.between(qn, x, y).expect("hypercube edge").index();
            let next = 2 * (set | 1 << bit) + e;
            for last in 0..2 {
                let here = 2 * set + last;
                if cost[here] == u32::MAX {
                    continue;
                }
                let nc = cost[here] + u32::from(set != 0 && last != e);
                if nc < cost[next] {
                    cost[next] = nc;
                    parent[next] = here;
                }
            }
        }
    }
    let mut s = if cost[2 * full] <= cost[2 * full + 1] { 2 * full } else { 2 * full + 1 };
    let mut vertices = vec![u ^ full];
    while s >= 2 {
        s = parent[s];
        vertices.push(u ^ (s / 2));
    }
    vertices.reverse();
    SwitchPath::from_vertices(qn, c, vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings;
    use crate::graphs;

    #[test]
    fn trivial_and_proper_c4() {
        let (g, c) = colorings::proper_cycle_coloring(4).unwrap();
        let p = min_switches(&g, &c, 2, 2).unwrap().unwrap();
        assert_eq!((p.switches, p.len()), (0, 0));
        let p = min_switches(&g, &c, 0, 2).unwrap().unwrap();
        assert_eq!(p.switches, 1);
        assert!(p.is_valid(&g, &c));
    }

    /// Brute force on an alternating cycle: both arcs between antipodes.
    fn arc_switches(m: usize, c: &EdgeColoring, g: &Graph, u: usize) -> usize {
        let v = (u + m / 2) % m;
        let forward: Vec<usize> = (0..=m / 2).map(|i| (u + i) % m).collect();
        let backward: Vec<usize> = (0..=m / 2).map(|i| (u + m - i) % m).collect();
        assert_eq!(*backward.last().unwrap(), v);
        [forward, backward]
            .into_iter()
            .map(|p| SwitchPath::from_vertices(g, c, p).unwrap().switches)
            .min()
            .unwrap()
    }

    #[test]
    fn proper_cycles_antipodes() {
        for half in 2..=8 {
            let m = 2 * half;
            let (g, c) = colorings::proper_cycle_coloring(m).unwrap();
            for u in 0..m {
                let p = min_switches(&g, &c, u, (u + half) % m).unwrap().unwrap();
                assert_eq!(p.switches, arc_switches(m, &c, &g, u));
                assert_eq!(p.switches, half - 1);
            }
        }
    }

    #[test]
    fn disconnected_pair() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Red);
        assert_eq!(min_switches(&g, &c, 0, 2).unwrap(), None);
        let phi = graphs::validate_automorphism(&g, vec![1, 0, 2]).unwrap();
        // 2 is a fixed point, so it trivially reaches its own image.
        assert_eq!(orbit_objective(&g, &c, &phi).unwrap().best_switches, 0);
        let h = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = EdgeColoring::monochromatic(&h, Color::Red);
        let swap = graphs::validate_automorphism(&h, vec![2, 3, 0, 1]).unwrap();
        assert_eq!(orbit_objective(&h, &c, &swap), Err(Error::NoConnectedOrbitPair));
    }

    #[test]
    fn orbit_objective_examples() {
        let g = graphs::hypercube(3).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Blue);
        assert_eq!(orbit_objective(&g, &c, &graphs::antipodal(3).unwrap()).unwrap().best_switches, 0);
        for k in 2..=4 {
            let (g, c) = colorings::proper_cycle_coloring(2 * k).unwrap();
            let phi = graphs::farthest_point_map(&g).unwrap();
            let r = orbit_objective(&g, &c, &phi).unwrap();
            assert_eq!(r.best_switches, k - 1);
            assert_eq!((r.path.start(), r.path.end()), (r.witness_vertex, phi.apply(r.witness_vertex)));
        }
        let (g, c) = colorings::directional_coloring(2).unwrap();
        let r = orbit_objective(&g, &c, &graphs::antipodal(4).unwrap()).unwrap();
        assert_eq!(r.best_switches, 1);
    }

    #[test]
    fn loop_erasure() {
        assert_eq!(loop_erase(&[0, 1, 2, 1, 3]), vec![0, 1, 3]);
        assert_eq!(loop_erase(&[0, 1, 2, 0, 4]), vec![0, 4]);
        assert_eq!(loop_erase(&[5]), vec![5]);
    }

    #[test]
    fn witness_on_tree_component_graph() {
        let g = graphs::hypercube(3).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Red);
        let phi = graphs::antipodal(3).unwrap();
        match theorem_witness(&g, &c, &phi, 0, 1000).unwrap() {
            WitnessOutcome::Witness { path, .. } => {
                assert_eq!(path.switches, 0);
                assert_eq!(path.end(), phi.apply(path.start()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_on_proper_cycles() {
        let (g, c) = colorings::proper_cycle_coloring(6).unwrap();
        let phi = graphs::farthest_point_map(&g).unwrap();
        match theorem_witness(&g, &c, &phi, 2, 1000).unwrap() {
            WitnessOutcome::Witness { path, .. } => {
                assert!(path.switches <= 2);
                assert!(path.switches >= orbit_objective(&g, &c, &phi).unwrap().best_switches);
            }
            other => panic!("{other:?}"),
        }
        let (g, c) = colorings::proper_cycle_coloring(8).unwrap();
        let phi = graphs::farthest_point_map(&g).unwrap();
        match theorem_witness(&g, &c, &phi, 2, 1000).unwrap() {
            WitnessOutcome::HypothesisViolated { cycle } => assert_eq!(cycle.len(), 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_rejects_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Red);
        let phi = graphs::identity(&g);
        assert_eq!(theorem_witness(&g, &c, &phi, 0, 10), Err(Error::Disconnected));
    }

    /// All `n!` monotone paths from `u` to its antipode.
    fn geodesic_oracle(g: &Graph, c: &EdgeColoring, n: usize, u: usize) -> usize {
        fn perms(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                perms(items, k + 1, out);
                items.swap(k, i);
            }
        }
        let mut all = Vec::new();
        perms(&mut (0..n).collect(), 0, &mut all);
        all.iter()
            .map(|order| {
                let mut x = u;
                let mut verts = vec![x];
                for &b in order {
                    x ^= 1 << b;
                    verts.push(x);
                }
                SwitchPath::from_vertices(g, c, verts).unwrap().switches
            })
            .min()
            .unwrap()
    }

    #[test]
    fn geodesic_variant() {
        let g = graphs::hypercube(4).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Red);
        assert_eq!(geodesic_min_switches(&g, &c, 3).unwrap().switches, 0);
        let (q2, c2) = colorings::directional_coloring(1).unwrap();
        assert_eq!(geodesic_min_switches(&q2, &c2, 0).unwrap().switches, 1);

        let (g, c) = colorings::level_alternating_coloring(4).unwrap();
        let geo = geodesic_min_switches(&g, &c, 0).unwrap();
        assert_eq!(geo.switches, geodesic_oracle(&g, &c, 4, 0));
        assert_eq!(geo.switches, 3);
        assert_eq!(min_switches(&g, &c, 0, 15).unwrap().unwrap().switches, 3);
        assert_eq!(geo.len(), 4);
        assert!(geo.is_valid(&g, &c));

        for seed in 0..20 {
            let g = graphs::hypercube(5).unwrap();
            let c = colorings::random_coloring(&g, 0.5, seed).unwrap();
            for u in [0, 7, 19] {
                let geo = geodesic_min_switches(&g, &c, u).unwrap();
                assert_eq!(geo.switches, geodesic_oracle(&g, &c, 5, u));
                assert!(geo.switches >= min_switches(&g, &c, u, u ^ 31).unwrap().unwrap().switches);
            }
        }
        let c6 = graphs::cycle(6).unwrap();
        assert!(geodesic_min_switches(&c6, &EdgeColoring::monochromatic(&c6, Color::Red), 0).is_err());
    }

    #[test]
    fn json_forms() {
        let (g, c) = colorings::proper_cycle_coloring(4).unwrap();
        let p = min_switches(&g, &c, 0, 2).unwrap().unwrap();
        let j = p.witness_json();
        assert_eq!(j["u"], 0);
        assert_eq!(j["phi_u"], 2);
        assert_eq!(j["switches"], 1);
        assert_eq!(j["colors"].as_str().unwrap().len(), 2);
    }
}
