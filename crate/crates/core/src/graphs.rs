//! Graph families and their distinguished automorphisms.
//!
//! Every [`Graph`] is simple and undirected, with neighbors sorted and edges
//! numbered `0..m` in lexicographic order of `(u, v)` with `u < v`. Edge ids
//! are part of the file format: a coloring is stored as one color per edge id.
//!
//! Products of cycles use mixed-radix vertex ids, least-significant factor
//! first: the coordinate vector `(x_1, .., x_k)` is vertex
//! `x_1 + a_1 * (x_2 + a_2 * (..))`. The hypercube `Q_n` is the product of `n`
//! copies of `K_2` under this numbering, so bit `i` of a hypercube vertex is
//! the coordinate of the `(i + 1)`-th factor.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest hypercube dimension (and largest product vertex count exponent)
/// accepted by the constructors.
pub const MAX_HYPERCUBE_DIM: usize = 24;

/// Serializable description of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphSpec {
    Hypercube { n: usize },
    Cycle { m: usize },
    Product { cycles: Vec<usize> },
    Explicit { n: usize, edges: Vec<[usize; 2]> },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Hypercube { n } => hypercube(*n),
            GraphSpec::Cycle { m } => cycle(*m),
            GraphSpec::Product { cycles } => product_of_cycles(cycles),
            GraphSpec::Explicit { n, edges } => Graph::from_edges(*n, edges.iter().map(|&[u, v]| (u, v))),
        }
    }

    /// Cycle lengths when this graph is a product of cycles, with `Q_n`
    /// reported as `[2; n]` and `C_m` as `[m]`.
    pub fn cycle_factors(&self) -> Option<Vec<usize>> {
        match self {
            GraphSpec::Hypercube { n } => Some(vec![2; *n]),
            GraphSpec::Cycle { m } => Some(vec![*m]),
            GraphSpec::Product { cycles } => Some(cycles.clone()),
            GraphSpec::Explicit { .. } => None,
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Hypercube { n } => write!(f, "hypercube:{n}"),
            GraphSpec::Cycle { m } => write!(f, "cycle:{m}"),
            GraphSpec::Product { cycles } => {
                let parts: Vec<String> = cycles.iter().map(|a| a.to_string()).collect();
                write!(f, "product:{}", parts.join("x"))
            }
            GraphSpec::Explicit { n, edges } => write!(f, "explicit:{n}v{}e", edges.len()),
        }
    }
}

/// Parses the short CLI form: `hypercube:4`, `cycle:6`, `product:4x6`.
impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("graph spec {s:?} is not of the form kind:arg")))?;
        let int = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in graph spec {s:?}")))
        };
        match kind.trim() {
            "hypercube" | "q" => Ok(GraphSpec::Hypercube { n: int(arg)? }),
            "cycle" | "c" => Ok(GraphSpec::Cycle { m: int(arg)? }),
            "product" | "torus" => {
                let cycles = arg.split('x').map(int).collect::<Result<Vec<_>>>()?;
                Ok(GraphSpec::Product { cycles })
            }
            other => Err(Error::Parse(format!("unknown graph kind {other:?}"))),
        }
    }
}

/// Immutable simple undirected graph with canonical edge numbering.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    adjacency_edges: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    spec: GraphSpec,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds an explicit graph. Edges may be given in any order and
    /// orientation; loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidVertex { vertex: u.max(v), vertex_count: n });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!("repeated edge {{{}, {}}}", w[0].0, w[0].1)));
        }
        let spec = GraphSpec::Explicit { n, edges: list.iter().map(|&(u, v)| [u, v]).collect() };
        Ok(Self::from_sorted_edges(n, list, spec))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>, spec: GraphSpec) -> Self {
        let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            pairs[u].push((v, id));
            pairs[v].push((u, id));
        }
        let mut adjacency = Vec::with_capacity(n);
        let mut adjacency_edges = Vec::with_capacity(n);
        for mut row in pairs {
            row.sort_unstable();
            adjacency.push(row.iter().map(|p| p.0).collect());
            adjacency_edges.push(row.iter().map(|p| p.1).collect());
        }
        Graph { adjacency, adjacency_edges, edges, spec }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edge ids parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adjacency_edges[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Endpoints `(u, v)`, `u < v`, of edge `id`.
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let row = self.adjacency.get(u)?;
        row.binary_search(&v).ok().map(|i| self.adjacency_edges[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, vertex_count: self.vertex_count() })
        }
    }

    /// Dimension `n` when this graph was built as `Q_n` (or as the product
    /// of `n` copies of `K_2`, which has the same numbering).
    pub fn hypercube_dim(&self) -> Option<usize> {
        match &self.spec {
            GraphSpec::Hypercube { n } => Some(*n),
            GraphSpec::Product { cycles } if cycles.iter().all(|&a| a == 2) => Some(cycles.len()),
            GraphSpec::Cycle { m: 2 } => Some(1),
            _ => None,
        }
    }

    /// BFS distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }
}

/// Shortest-path distance; disconnected pairs are `Unreachable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl From<Option<usize>> for Distance {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Distance::Unreachable, Distance::Finite)
    }
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Distance> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(Distance::Finite(0));
    }
    Ok(g.bfs_distances(u)[v].into())
}

/// `C_m` for `m >= 3`; `m = 2` gives `K_2`, a single edge.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("cycle length {m} < 2")));
    }
    let mut edges: Vec<(usize, usize)> = if m == 2 {
        vec![(0, 1)]
    } else {
        (0..m)
            .map(|i| {
                let j = (i + 1) % m;
                (i.min(j), i.max(j))
            })
            .collect()
    };
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(m, edges, GraphSpec::Cycle { m }))
}

/// `Q_n`: vertices are bitmasks, adjacent iff they differ in one bit.
pub fn hypercube(n: usize) -> Result<Graph> {
    if n == 0 || n > MAX_HYPERCUBE_DIM {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension {n} outside 1..={MAX_HYPERCUBE_DIM}"
        )));
    }
    let size = 1usize << n;
    let mut edges = Vec::with_capacity(n << (n - 1));
    for u in 0..size {
        for bit in 0..n {
            let v = u | (1 << bit);
            if v != u {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_edges(size, edges, GraphSpec::Hypercube { n }))
}

/// Mixed-radix coordinate helper for products of cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadix {
    radices: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl MixedRadix {
    pub fn new(radices: &[usize]) -> Result<Self> {
        if radices.is_empty() {
            return Err(Error::InvalidParameter("empty product of cycles".into()));
        }
        let mut strides = Vec::with_capacity(radices.len());
        let mut size: usize = 1;
        for &a in radices {
            if a < 2 {
                return Err(Error::InvalidParameter(format!("cycle length {a} < 2")));
            }
            strides.push(size);
            size = size
                .checked_mul(a)
                .filter(|&s| s <= 1 << MAX_HYPERCUBE_DIM)
                .ok_or_else(|| Error::InvalidParameter("product of cycles too large".into()))?;
        }
        Ok(MixedRadix { radices: radices.to_vec(), strides, size })
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.radices).zip(&self.strides).map(|((&x, &a), &s)| (x % a) * s).sum()
    }

    pub fn decode(&self, id: usize) -> Vec<usize> {
        self.radices.iter().zip(&self.strides).map(|(&a, &s)| (id / s) % a).collect()
    }

    /// Vertex reached from `id` by adding `delta` (mod a_i) to coordinate `axis`.
    pub fn shift(&self, id: usize, axis: usize, delta: isize) -> usize {
        let a = self.radices[axis];
        let s = self.strides[axis];
        let x = (id / s) % a;
        let nx = (x as isize + delta).rem_euclid(a as isize) as usize;
        id - x * s + nx * s
    }
}

/// `C_{a_1} □ .. □ C_{a_k}` with mixed-radix vertex ids.
pub fn product_of_cycles(cycles: &[usize]) -> Result<Graph> {
    let radix = MixedRadix::new(cycles)?;
    let mut edges = Vec::new();
    for u in 0..radix.size() {
        for axis in 0..cycles.len() {
            for delta in [-1isize, 1] {
                let v = radix.shift(u, axis, delta);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_sorted_edges(radix.size(), edges, GraphSpec::Product { cycles: cycles.to_vec() }))
}

/// A vertex permutation known to preserve adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Automorphism {
    perm: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order_hint: Option<usize>,
}

impl Automorphism {
    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn order_hint(&self) -> Option<usize> {
        self.order_hint
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_involution(&self) -> bool {
        self.perm.iter().enumerate().all(|(v, &w)| self.perm[w] == v)
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut seen = vec![false; self.perm.len()];
        let mut order = 1;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.perm[v];
                len += 1;
            }
            order = order / gcd(order, len) * len;
        }
        order
    }
}

/// Checks that `perm` is a permutation of `0..n` mapping edges to edges.
pub fn validate_automorphism(g: &Graph, perm: Vec<usize>) -> Result<Automorphism> {
    let n = g.vertex_count();
    if perm.len() != n {
        return Err(Error::NotPermutation(n));
    }
    let mut hit = vec![false; n];
    for &w in &perm {
        if w >= n || std::mem::replace(&mut hit[w], true) {
            return Err(Error::NotPermutation(n));
        }
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !g.has_edge(perm[u], perm[v])) {
        return Err(Error::EdgeNotPreserved(u, v));
    }
    Ok(Automorphism { perm, order_hint: None })
}

/// Identity map on `g`.
pub fn identity(g: &Graph) -> Automorphism {
    Automorphism { perm: (0..g.vertex_count()).collect(), order_hint: Some(1) }
}

/// The half-shift `x_i -> x_i + a_i/2` on a product of even cycles: every
/// vertex goes to its unique farthest vertex. On `Q_n` this is bit complement.
pub fn farthest_point_automorphism(cycles: &[usize]) -> Result<Automorphism> {
    if let Some(&odd) = cycles.iter().find(|&&a| a % 2 == 1) {
        return Err(Error::NotUniqueFarthest(odd));
    }
    let radix = MixedRadix::new(cycles)?;
    let perm = (0..radix.size())
        .map(|id| (0..cycles.len()).fold(id, |v, axis| radix.shift(v, axis, (cycles[axis] / 2) as isize)))
        .collect();
    Ok(Automorphism { perm, order_hint: Some(2) })
}

/// Farthest-point map of a graph built from a cycle, hypercube or product spec.
pub fn farthest_point_map(g: &Graph) -> Result<Automorphism> {
    let cycles = g.spec().cycle_factors().ok_or_else(|| {
        Error::InvalidParameter("farthest-point map needs a cycle, hypercube or product".into())
    })?;
    farthest_point_automorphism(&cycles)
}

/// Antipodal map `v -> !v` of `Q_n`.
pub fn antipodal(n: usize) -> Result<Automorphism> {
    if n == 0 || n > MAX_HYPERCUBE_DIM {
        return Err(Error::InvalidParameter(format!("hypercube dimension {n}")));
    }
    let mask = (1usize << n) - 1;
    Ok(Automorphism { perm: (0..=mask).map(|v| v ^ mask).collect(), order_hint: Some(2) })
}
