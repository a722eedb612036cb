//! The component graph `Comp(G, c)`.
//!
//! Meta-vertices are the monochromatic components of `(G, c)`, red ones first
//! then blue ones, each color ordered by smallest member. A vertex without an
//! incident edge of some color still owns a singleton component of that
//! color, so every base vertex lies in exactly one red and one blue
//! component. Two components are adjacent when they share a base vertex,
//! which makes the meta-graph bipartite by color.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colorings::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graphs::{Automorphism, Distance, Graph};
use crate::unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaVertex {
    pub id: usize,
    pub color: Color,
    /// Sorted base vertices.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGraph {
    vertices: Vec<MetaVertex>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    vertex_components: Vec<(usize, usize)>,
    red_count: usize,
}

/// Result of the longest-cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleLength {
    Acyclic,
    Exact {
        length: usize,
        cycle: Vec<usize>,
    },
    /// Budget ran out; `cycle` is the longest cycle seen.
    LowerBound {
        length: usize,
        cycle: Vec<usize>,
    },
}

impl CycleLength {
    pub fn length(&self) -> usize {
        match self {
            CycleLength::Acyclic => 0,
            CycleLength::Exact { length, .. } | CycleLength::LowerBound { length, .. } => *length,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, CycleLength::LowerBound { .. })
    }
}

/// Result of the induced-cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedCycle {
    Found(Vec<usize>),
    NotFound,
    /// Budget ran out; carries the longest induced cycle seen, if any.
    BudgetExhausted(Option<Vec<usize>>),
}

#[derive(Serialize)]
struct JsonView<'a> {
    vertices: &'a [MetaVertex],
    edges: Vec<[usize; 2]>,
}

impl ComponentGraph {
    pub fn build(g: &Graph, c: &EdgeColoring) -> Result<Self> {
        c.check(g)?;
        let n = g.vertex_count();
        let mut forests = [UnionFind::new(n), UnionFind::new(n)];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            forests[c.get(e).index()].union(u, v);
        }

        let mut vertices = Vec::new();
        let mut vertex_components = vec![(0, 0); n];
        let mut red_count = 0;
        for color in Color::BOTH {
            let forest = &mut forests[color.index()];
            let mut root_id: Vec<Option<usize>> = vec![None; n];
            for (v, slot) in vertex_components.iter_mut().enumerate() {
                let root = forest.find(v);
                let id = *root_id[root].get_or_insert_with(|| {
                    vertices.push(MetaVertex { id: vertices.len(), color, members: Vec::new() });
                    vertices.len() - 1
                });
                vertices[id].members.push(v);
                match color {
                    Color::Red => slot.0 = id,
                    Color::Blue => slot.1 = id,
                }
            }
            if color == Color::Red {
                red_count = vertices.len();
            }
        }

        let pairs: BTreeSet<(usize, usize)> = vertex_components.iter().copied().collect();
        let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(r, b) in &edges {
            adjacency[r].push(b);
            adjacency[b].push(r);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(ComponentGraph { vertices, adjacency, edges, vertex_components, red_count })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[MetaVertex] {
        &self.vertices
    }

    pub fn vertex(&self, a: usize) -> &MetaVertex {
        &self.vertices[a]
    }

    pub fn members(&self, a: usize) -> &[usize] {
        &self.vertices[a].members
    }

    pub fn color(&self, a: usize) -> Color {
        self.vertices[a].color
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adjacency[a]
    }

    /// Meta-edges `(red, blue)`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn red_count(&self) -> usize {
        self.red_count
    }

    pub fn blue_count(&self) -> usize {
        self.vertices.len() - self.red_count
    }

    /// `(red component, blue component)` of base vertex `v`.
    pub fn components_of(&self, v: usize) -> (usize, usize) {
        self.vertex_components[v]
    }

    pub fn component_of(&self, v: usize, color: Color) -> usize {
        match color {
            Color::Red => self.vertex_components[v].0,
            Color::Blue => self.vertex_components[v].1,
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn check_meta(&self, a: usize) -> Result<()> {
        if a < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidMetaVertex { id: a, count: self.len() })
        }
    }

    /// Index of a meta-vertex within its color class (`R<i>` / `B<j>`).
    pub fn label(&self, a: usize) -> String {
        let v = &self.vertices[a];
        match v.color {
            Color::Red => format!("R{}({})", a, v.members.len()),
            Color::Blue => format!("B{}({})", a - self.red_count, v.members.len()),
        }
    }

    /// BFS distances in the meta-graph from `a`.
    pub fn distances_from(&self, a: usize) -> Vec<Option<usize>> {
        bfs(&self.adjacency, a, |_| true)
    }

    pub fn meta_distance(&self, a: usize, b: usize) -> Result<Distance> {
        self.check_meta(a)?;
        self.check_meta(b)?;
        Ok(self.distances_from(a)[b].into())
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.edges.len() + 1 == self.len() && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        let components = count_components(&self.adjacency);
        self.edges.len() + components == self.len()
    }

    /// Every meta-edge joins a red and a blue component.
    pub fn is_bipartite_by_color(&self) -> bool {
        self.edges.iter().all(|&(a, b)| self.color(a) != self.color(b))
    }

    /// Complete bipartite between the red and the blue components.
    pub fn is_complete_bipartite(&self) -> bool {
        self.red_count > 0
            && self.blue_count() > 0
            && self.edges.len() == self.red_count * self.blue_count()
            && self.is_bipartite_by_color()
    }

    /// Components (either color) meeting `phi(a)`.
    pub fn image_component_set(&self, phi: &Automorphism, a: usize) -> Result<Vec<usize>> {
        self.check_meta(a)?;
        if phi.len() != self.vertex_components.len() {
            return Err(Error::InvalidParameter("automorphism size does not match graph".into()));
        }
        let mut set = BTreeSet::new();
        for &x in self.members(a) {
            let (r, b) = self.vertex_components[phi.apply(x)];
            set.insert(r);
            set.insert(b);
        }
        Ok(set.into_iter().collect())
    }

    /// Components traversed by a vertex sequence of `g`, one per maximal
    /// monochromatic run. Its length minus one is the number of switches.
    pub fn components_along(&self, g: &Graph, c: &EdgeColoring, path: &[usize]) -> Vec<usize> {
        let mut walk: Vec<usize> = Vec::new();
        for w in path.windows(2) {
            let color = c.between(g, w[0], w[1]).expect("path edge");
            let comp = self.component_of(w[0], color);
            if walk.last() != Some(&comp) {
                walk.push(comp);
            }
        }
        walk
    }

    /// Longest cycle by backtracking, bounded by `node_budget` expansions.
    pub fn longest_cycle_length(&self, node_budget: u64) -> CycleLength {
        self.cycle_search(None, node_budget)
    }

    /// Like [`Self::longest_cycle_length`] but stops as soon as a cycle of
    /// length `target` or more is seen (returned as `Exact` only when the
    /// search also completed).
    pub fn cycle_at_least(&self, target: usize, node_budget: u64) -> CycleLength {
        self.cycle_search(Some(target), node_budget)
    }

    fn cycle_search(&self, target: Option<usize>, node_budget: u64) -> CycleLength {
        let mut blocks: Vec<Block> = biconnected_blocks(&self.adjacency)
            .into_iter()
            .filter(|b| b.len() >= 3)
            .map(|b| Block::new(self, b))
            .collect();
        if blocks.is_empty() {
            return CycleLength::Acyclic;
        }
        blocks.sort_by(|x, y| y.bound.cmp(&x.bound).then(x.members.cmp(&y.members)));

        let mut best = blocks[0].short_cycle();
        let mut budget = node_budget;
        let mut exhausted = false;
        for block in &blocks {
            if block.bound <= best.len() {
                continue;
            }
            if target.is_some_and(|t| best.len() >= t) {
                break;
            }
            let mut search = LongestCycleSearch {
                block,
                best: &mut best,
                budget: &mut budget,
                target,
                path: Vec::new(),
                on_path: vec![false; block.members.len()],
            };
            if !search.run() {
                exhausted = true;
                break;
            }
        }
        let length = best.len();
        let hit_target = target.is_some_and(|t| length >= t);
        if exhausted || hit_target {
            CycleLength::LowerBound { length, cycle: best }
        } else {
            CycleLength::Exact { length, cycle: best }
        }
    }

    /// Searches for an induced (chordless) cycle of length at least `min_len`.
    pub fn longest_induced_cycle(&self, min_len: usize, node_budget: u64) -> InducedCycle {
        let min_len = min_len.max(4);
        let blocks: Vec<Block> = biconnected_blocks(&self.adjacency)
            .into_iter()
            .filter(|b| b.len() >= min_len)
            .map(|b| Block::new(self, b))
            .collect();
        let mut best: Option<Vec<usize>> = None;
        let mut budget = node_budget;
        for block in &blocks {
            let mut search = InducedSearch::new(block, min_len, &mut budget, &mut best);
            match search.run() {
                SearchEnd::Found(cycle) => return InducedCycle::Found(cycle),
                SearchEnd::Exhausted => return InducedCycle::BudgetExhausted(best),
                SearchEnd::Complete => {}
            }
        }
        InducedCycle::NotFound
    }

    /// Deterministic Graphviz rendering.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for a in 0..self.len() {
            let shade = match self.color(a) {
                Color::Red => "red",
                Color::Blue => "blue",
            };
            let _ = writeln!(out, "  {a} [label=\"{}\", color={shade}];", self.label(a));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let view =
            JsonView { vertices: &self.vertices, edges: self.edges.iter().map(|&(a, b)| [a, b]).collect() };
        serde_json::to_value(view).expect("component graph serializes")
    }
}

pub(crate) fn bfs(
    adjacency: &[Vec<usize>],
    source: usize,
    allowed: impl Fn(usize) -> bool,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; adjacency.len()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap_or(0);
        for &y in &adjacency[x] {
            if dist[y].is_none() && allowed(y) {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

fn count_components(adjacency: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adjacency.len()];
    let mut count = 0;
    for s in 0..adjacency.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Vertex sets of the biconnected components (iterative Hopcroft–Tarjan).
fn biconnected_blocks(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < adjacency[v].len() {
                let w = adjacency[v][*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut members = BTreeSet::new();
                        while let Some((x, y)) = edge_stack.pop() {
                            members.insert(x);
                            members.insert(y);
                            if (x, y) == (p, v) {
                                break;
                            }
                        }
                        blocks.push(members.into_iter().collect());
                    }
                }
            }
        }
    }
    blocks
}

/// A biconnected block with local indexing.
struct Block {
    /// Global ids, sorted; local id = position.
    members: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    /// Upper bound on any cycle length inside the block.
    bound: usize,
}

impl Block {
    fn new(cg: &ComponentGraph, members: Vec<usize>) -> Self {
        let local = |g: usize| members.binary_search(&g).ok();
        let adjacency: Vec<Vec<usize>> =
            members.iter().map(|&g| cg.neighbors(g).iter().filter_map(|&h| local(h)).collect()).collect();
        let red = members.iter().filter(|&&g| cg.color(g) == Color::Red).count();
        let bound = (2 * red.min(members.len() - red)).min(members.len());
        Block { members, adjacency, bound }
    }

    fn globalize(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&l| self.members[l]).collect()
    }

    /// Some cycle through the first edge of the block.
    fn short_cycle(&self) -> Vec<usize> {
        let u = 0;
        let v = self.adjacency[0][0];
        let mut parent = vec![usize::MAX; self.members.len()];
        let mut queue = VecDeque::from([u]);
        parent[u] = u;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if (x, y) == (u, v) || parent[y] != usize::MAX {
                    continue;
                }
                parent[y] = x;
                queue.push_back(y);
            }
        }
        let mut cycle = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            cycle.push(x);
        }
        cycle.reverse();
        self.globalize(&cycle)
    }
}

struct LongestCycleSearch<'a> {
    block: &'a Block,
    best: &'a mut Vec<usize>,
    budget: &'a mut u64,
    target: Option<usize>,
    path: Vec<usize>,
    on_path: Vec<bool>,
}

impl LongestCycleSearch<'_> {
    /// Returns false when the budget ran out.
    fn run(&mut self) -> bool {
        let n = self.block.members.len();
        for start in 0..n {
            if self.best.len() >= self.block.bound.min(n - start) || self.target_hit() {
                break;
            }
            self.path.push(start);
            self.on_path[start] = true;
            let ok = self.extend(start, n - start - 1);
            self.on_path[start] = false;
            self.path.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    fn target_hit(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    fn extend(&mut self, start: usize, free: usize) -> bool {
        if *self.budget == 0 {
            return false;
        }
        *self.budget -= 1;
        let block = self.block;
        let last = *self.path.last().unwrap();
        for &w in &block.adjacency[last] {
            if w == start && self.path.len() >= 3 && self.path.len() > self.best.len() {
                *self.best = block.globalize(&self.path);
                if self.best.len() >= block.bound || self.target_hit() {
                    return true;
                }
            }
            if w <= start || self.on_path[w] {
                continue;
            }
            if self.path.len() + free <= self.best.len() {
                break;
            }
            self.on_path[w] = true;
            self.path.push(w);
            let ok = self.extend(start, free - 1);
            self.path.pop();
            self.on_path[w] = false;
            if !ok {
                return false;
            }
            if self.best.len() >= block.bound || self.target_hit() {
                return true;
            }
        }
        true
    }
}

enum SearchEnd {
    Found(Vec<usize>),
    Exhausted,
    Complete,
}

struct InducedSearch<'a> {
    block: &'a Block,
    min_len: usize,
    budget: &'a mut u64,
    best: &'a mut Option<Vec<usize>>,
    path: Vec<usize>,
    /// Number of path vertices adjacent to each vertex.
    touching: Vec<usize>,
    on_path: Vec<bool>,
}

impl<'a> InducedSearch<'a> {
    fn new(block: &'a Block, min_len: usize, budget: &'a mut u64, best: &'a mut Option<Vec<usize>>) -> Self {
        let n = block.members.len();
        InducedSearch {
            block,
            min_len,
            budget,
            best,
            path: Vec::new(),
            touching: vec![0; n],
            on_path: vec![false; n],
        }
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        for &w in &self.block.adjacency[v] {
            self.touching[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().unwrap();
        self.on_path[v] = false;
        for &w in &self.block.adjacency[v] {
            self.touching[w] -= 1;
        }
    }

    fn run(&mut self) -> SearchEnd {
        let n = self.block.members.len();
        for start in 0..n {
            if n - start < self.min_len {
                break;
            }
            self.push(start);
            let end = self.extend(start);
            self.pop();
            match end {
                SearchEnd::Complete => {}
                other => return other,
            }
        }
        SearchEnd::Complete
    }

    fn record(&mut self, cycle: &[usize]) {
        if self.best.as_ref().is_none_or(|b| b.len() < cycle.len()) {
            *self.best = Some(self.block.globalize(cycle));
        }
    }

    fn extend(&mut self, start: usize) -> SearchEnd {
        if *self.budget == 0 {
            return SearchEnd::Exhausted;
        }
        *self.budget -= 1;
        let block = self.block;
        let last = *self.path.last().unwrap();
        // Free vertices: eligible, off the path and not adjacent to it.
        let free =
            (start + 1..block.members.len()).filter(|&v| !self.on_path[v] && self.touching[v] == 0).count();
        // Beyond the free vertices a cycle can only add the next vertex and
        // the closing one.
        if self.path.len() + 2 + free < self.min_len {
            return SearchEnd::Complete;
        }
        for &w in &block.adjacency[last] {
            if w <= start || self.on_path[w] {
                continue;
            }
            let touches_start = self.path.len() >= 2 && block.adjacency[start].binary_search(&w).is_ok();
            if touches_start && self.touching[w] == 2 {
                self.path.push(w);
                let cycle = self.path.clone();
                self.path.pop();
                if cycle.len() >= self.min_len {
                    return SearchEnd::Found(block.globalize(&cycle));
                }
                self.record(&cycle);
            } else if self.touching[w] == 1 {
                self.push(w);
                let end = self.extend(start);
                self.pop();
                match end {
                    SearchEnd::Complete => {}
                    other => return other,
                }
            }
        }
        SearchEnd::Complete
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{colorings, graphs};

    fn comp(g: &Graph, c: &EdgeColoring) -> ComponentGraph {
        ComponentGraph::build(g, c).unwrap()
    }

    #[test]
    fn monochromatic_q2_is_a_star() {
        let g = graphs::hypercube(2).unwrap();
        let cg = comp(&g, &EdgeColoring::monochromatic(&g, Color::Red));
        assert_eq!((cg.red_count(), cg.blue_count()), (1, 4));
        assert_eq!(cg.edges().len(), 4);
        assert_eq!(cg.neighbors(0).len(), 4);
        assert!(cg.is_tree());
        let phi = graphs::antipodal(2).unwrap();
        assert_eq!(cg.image_component_set(&phi, 0).unwrap(), (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn proper_six_cycle_gives_six_cycle() {
        let (g, c) = colorings::proper_cycle_coloring(6).unwrap();
        let cg = comp(&g, &c);
        assert_eq!(cg.len(), 6);
        assert!(cg.neighbors(0).len() == 2 && (0..6).all(|a| cg.neighbors(a).len() == 2));
        assert!(cg.is_connected() && !cg.is_tree());
        let longest = cg.longest_cycle_length(1_000);
        assert!(longest.is_exact());
        assert_eq!(longest.length(), 6);
    }

    #[test]
    fn directional_is_complete_bipartite() {
        let (g, c) = colorings::directional_coloring(2).unwrap();
        let cg = comp(&g, &c);
        assert_eq!((cg.red_count(), cg.blue_count()), (4, 4));
        assert!(cg.is_complete_bipartite());
        assert!(cg.vertices().iter().all(|m| m.members.len() == 4));
        assert_eq!(cg.longest_cycle_length(100_000).length(), 8);
        assert!(cg.longest_cycle_length(100_000).is_exact());
    }

    #[test]
    fn cycles_in_trees_and_long_cycles() {
        let g = graphs::hypercube(3).unwrap();
        let cg = comp(&g, &EdgeColoring::monochromatic(&g, Color::Blue));
        assert_eq!(cg.longest_cycle_length(10), CycleLength::Acyclic);
        assert_eq!(cg.longest_induced_cycle(4, 10), InducedCycle::NotFound);
        let (g, c) = colorings::proper_cycle_coloring(8).unwrap();
        let cg = comp(&g, &c);
        assert_eq!(cg.longest_cycle_length(1000).length(), 8);
        match cg.longest_induced_cycle(8, 1000) {
            InducedCycle::Found(cyc) => assert_eq!(cyc.len(), 8),
            other => panic!("{other:?}"),
        }
        assert_eq!(cg.longest_induced_cycle(10, 1000), InducedCycle::NotFound);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let (g, c) = colorings::directional_coloring(3).unwrap();
        let cg = comp(&g, &c);
        match cg.longest_cycle_length(1) {
            CycleLength::LowerBound { length, cycle } => {
                assert!(length >= 4);
                assert_eq!(cycle.len(), length);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(cg.longest_induced_cycle(4, 0), InducedCycle::BudgetExhausted(None)));
    }

    #[test]
    fn meta_distances() {
        let (g, c) = colorings::proper_cycle_coloring(8).unwrap();
        let cg = comp(&g, &c);
        assert_eq!(cg.meta_distance(3, 3).unwrap(), Distance::Finite(0));
        let n0 = cg.neighbors(0)[0];
        assert_eq!(cg.meta_distance(0, n0).unwrap(), Distance::Finite(1));
        let far = (0..8).max_by_key(|&b| cg.distances_from(0)[b]).unwrap();
        assert_eq!(cg.meta_distance(0, far).unwrap(), Distance::Finite(4));
        assert!(cg.meta_distance(0, 99).is_err());
    }

    #[test]
    fn proper_eight_cycle_image_set() {
        let (g, c) = colorings::proper_cycle_coloring(8).unwrap();
        let cg = comp(&g, &c);
        let phi = graphs::farthest_point_map(&g).unwrap();
        // Red component 0 is the 2-path 0-1; its image 4-5 is the red path 4-5
        // plus the blue edges at 4 and at 5.
        assert_eq!(cg.members(0), &[0, 1]);
        let s = cg.image_component_set(&phi, 0).unwrap();
        let expected: BTreeSet<usize> =
            [4, 5].iter().flat_map(|&v| [cg.components_of(v).0, cg.components_of(v).1]).collect();
        assert_eq!(s, expected.into_iter().collect::<Vec<_>>());
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn dot_export() {
        let g = Graph::from_edges(0, []).unwrap();
        let cg = comp(&g, &EdgeColoring::monochromatic(&g, Color::Red));
        assert_eq!(cg.export_dot(), "graph {\n}\n");
        let k2 = graphs::cycle(2).unwrap();
        let cg = comp(&k2, &EdgeColoring::monochromatic(&k2, Color::Red));
        let dot = cg.export_dot();
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.contains("label=\"R0(2)\""));
        assert!(dot.contains("label=\"B1(1)\""));
        assert_eq!(dot, cg.export_dot());
        // a lone vertex: one red and one blue singleton
        let g = Graph::from_edges(1, []).unwrap();
        let cg = comp(&g, &EdgeColoring::monochromatic(&g, Color::Red));
        assert_eq!(cg.export_dot().matches(" -- ").count(), 1);
    }

    #[test]
    fn json_shape() {
        let k2 = graphs::cycle(2).unwrap();
        let cg = comp(&k2, &EdgeColoring::monochromatic(&k2, Color::Blue));
        let j = cg.to_json();
        assert_eq!(j["vertices"][0]["color"], 0);
        assert_eq!(j["vertices"][2]["members"], serde_json::json!([0, 1]));
        assert_eq!(j["edges"], serde_json::json!([[0, 2], [1, 2]]));
    }

    #[test]
    fn blocks_of_two_triangles_sharing_vertex() {
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1, 3, 4], vec![2, 4], vec![2, 3], vec![]];
        let mut blocks = biconnected_blocks(&adj);
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let path = vec![vec![1], vec![0, 2], vec![1]];
        assert_eq!(biconnected_blocks(&path).len(), 2);
    }
}
