//! Red/blue edge colorings and the coloring families of the hypercube problem.
//!
//! Hypercube generators use bit `i - 1` of a vertex for the `i`-th direction
//! and the `i`-th coordinate. "Level" means Hamming weight.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{self, Graph, MAX_HYPERCUBE_DIM};
use crate::rng;

/// Edge color. Encoded as `0` (red) and `1` (blue) everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Color {
    Red = 0,
    Blue = 1,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' | 'r' | '0' => Some(Color::Red),
            'B' | 'b' | '1' => Some(Color::Blue),
            _ => None,
        }
    }

    fn red_if(red: bool) -> Color {
        if red {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c as u8
    }
}

impl TryFrom<u8> for Color {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(Color::Red),
            1 => Ok(Color::Blue),
            other => Err(format!("color {other} is not 0 (red) or 1 (blue)")),
        }
    }
}

/// Total 2-coloring of the edges of one graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    vertex_count: usize,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != g.edge_count() {
            return Err(Error::ColoringMismatch { colors: colors.len(), edges: g.edge_count() });
        }
        Ok(EdgeColoring { vertex_count: g.vertex_count(), colors })
    }

    pub fn monochromatic(g: &Graph, color: Color) -> Self {
        EdgeColoring { vertex_count: g.vertex_count(), colors: vec![color; g.edge_count()] }
    }

    /// Coloring number `index` of the canonical enumeration: bit `e` of
    /// `index` set means edge `e` is blue. Requires `m <= 64`.
    pub fn from_index(g: &Graph, index: u64) -> Self {
        debug_assert!(g.edge_count() <= 64);
        let colors = (0..g.edge_count())
            .map(|e| if (index >> e) & 1 == 1 { Color::Blue } else { Color::Red })
            .collect();
        EdgeColoring { vertex_count: g.vertex_count(), colors }
    }

    pub fn from_fn(g: &Graph, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let colors = g.edges().iter().map(|&(u, v)| f(u, v)).collect();
        EdgeColoring { vertex_count: g.vertex_count(), colors }
    }

    /// Errors unless this coloring has exactly one entry per edge of `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() || self.vertex_count != g.vertex_count() {
            return Err(Error::ColoringMismatch { colors: self.colors.len(), edges: g.edge_count() });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Color of edge `{u, v}`, if it is an edge of `g`.
    pub fn between(&self, g: &Graph, u: usize, v: usize) -> Option<Color> {
        g.edge_id(u, v).map(|e| self.colors[e])
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }
}

/// `R`/`B` string in edge-id order.
impl fmt::Display for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.colors {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

fn guard_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_HYPERCUBE_DIM {
        Err(Error::InvalidParameter(format!("hypercube dimension {n} outside 1..={MAX_HYPERCUBE_DIM}")))
    } else {
        Ok(())
    }
}

fn direction(u: usize, v: usize) -> usize {
    (u ^ v).trailing_zeros() as usize
}

/// `Q_{2k}` with directions `1..=k` red and `k+1..=2k` blue.
pub fn directional_coloring(k: usize) -> Result<(Graph, EdgeColoring)> {
    if k == 0 {
        return Err(Error::InvalidParameter("directional coloring needs k >= 1".into()));
    }
    guard_dim(2 * k)?;
    let g = graphs::hypercube(2 * k)?;
    let c = EdgeColoring::from_fn(&g, |u, v| Color::red_if(direction(u, v) < k));
    Ok((g, c))
}

/// The two-cube coloring of `Q_{m+k}`.
///
/// Writing `t` for the last `k` coordinates of an edge (which both endpoints
/// share for the first `m` directions):
/// - directions `1..=m/2` are red unless `t` is all ones;
/// - directions `m/2+1..=m` are red only when `t` is all zeros;
/// - a direction among the last `k` is red when setting that coordinate to one
///   leaves an even number of ones among the last `k` coordinates.
///
/// At `t = 0` the first `m` coordinates span a red `m`-cube, at `t = 1..1` a
/// blue one, and elsewhere a directional coloring.
pub fn two_cube_coloring(m: usize, k: usize) -> Result<(Graph, EdgeColoring)> {
    if m % 2 == 1 || m == 0 {
        return Err(Error::InvalidParameter(format!("two-cube coloring needs even m >= 2, got {m}")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("two-cube coloring needs k >= 1".into()));
    }
    guard_dim(m + k)?;
    let g = graphs::hypercube(m + k)?;
    let tail_mask = ((1usize << k) - 1) << m;
    let c = EdgeColoring::from_fn(&g, |u, v| {
        let d = direction(u, v);
        let tail = u & tail_mask;
        let red = if d < m / 2 {
            tail != tail_mask
        } else if d < m {
            tail == 0
        } else {
            ((u | v) & tail_mask).count_ones().is_multiple_of(2)
        };
        Color::red_if(red)
    });
    Ok((g, c))
}

/// The double-level coloring of `Q_{2k}`: an edge in one of the first `k`
/// directions is red when setting its coordinate to one makes the weight of
/// the first `k` coordinates odd; likewise for the last `k` directions with
/// the weight of the last `k` coordinates.
pub fn double_level_coloring(k: usize) -> Result<(Graph, EdgeColoring)> {
    if k < 2 {
        return Err(Error::InvalidParameter("double-level coloring needs k >= 2".into()));
    }
    guard_dim(2 * k)?;
    let g = graphs::hypercube(2 * k)?;
    let low = (1usize << k) - 1;
    let high = low << k;
    let c = EdgeColoring::from_fn(&g, |u, v| {
        let block = if direction(u, v) < k { low } else { high };
        Color::red_if(((u | v) & block).count_ones() % 2 == 1)
    });
    Ok((g, c))
}

/// `Q_n` with the edge between levels `i` and `i + 1` red iff `i` is even.
pub fn level_alternating_coloring(n: usize) -> Result<(Graph, EdgeColoring)> {
    guard_dim(n)?;
    let g = graphs::hypercube(n)?;
    let c = EdgeColoring::from_fn(&g, |u, _| Color::red_if(u.count_ones() % 2 == 0));
    Ok((g, c))
}

/// `C_m` colored alternately; edge `{i, i+1}` is red iff `i` is even.
pub fn proper_cycle_coloring(m: usize) -> Result<(Graph, EdgeColoring)> {
    if m < 4 || m % 2 == 1 {
        return Err(Error::InvalidParameter(format!("proper 2-coloring of C_{m} needs even m >= 4")));
    }
    let g = graphs::cycle(m)?;
    let c = EdgeColoring::from_fn(&g, |u, v| {
        let low = if (u, v) == (0, m - 1) { m - 1 } else { u };
        Color::red_if(low % 2 == 0)
    });
    Ok((g, c))
}

/// Each edge red independently with probability `p`, from the given seed.
pub fn random_coloring(g: &Graph, p: f64, seed: u64) -> Result<EdgeColoring> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    let mut r = rng::rng_from_seed(seed);
    Ok(random_coloring_with(g, p, &mut r))
}

pub fn random_coloring_with(g: &Graph, p: f64, r: &mut impl Rng) -> EdgeColoring {
    let colors = (0..g.edge_count()).map(|_| Color::red_if(r.gen_bool(p))).collect();
    EdgeColoring { vertex_count: g.vertex_count(), colors }
}

/// Whether the 4-cycle `v0 v1 v2 v3` alternates colors.
pub fn is_properly_colored_4cycle(g: &Graph, c: &EdgeColoring, cyc: [usize; 4]) -> Result<bool> {
    c.check(g)?;
    for &v in &cyc {
        g.check_vertex(v)?;
    }
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| cyc[i] != cyc[j]));
    let mut colors = [Color::Red; 4];
    for i in 0..4 {
        match (distinct, c.between(g, cyc[i], cyc[(i + 1) % 4])) {
            (true, Some(col)) => colors[i] = col,
            _ => return Err(Error::NotAFourCycle(cyc)),
        }
    }
    Ok((0..4).all(|i| colors[i] != colors[(i + 1) % 4]))
}

/// Outcome of the simple-coloring scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    /// A properly colored 4-cycle.
    NotSimple([usize; 4]),
}

impl Simplicity {
    pub fn is_simple(self) -> bool {
        self == Simplicity::Simple
    }
}

/// Scans every 4-cycle of `Q_n` (one per direction pair and base vertex)
/// for an alternating one.
pub fn is_simple(qn: &Graph, c: &EdgeColoring) -> Result<Simplicity> {
    let n = qn.hypercube_dim().ok_or(Error::NotHypercube)?;
    c.check(qn)?;
    let col = |u: usize, v: usize| c.between(qn, u, v).expect("hypercube edge");
    for i in 0..n {
        for j in i + 1..n {
            let (bi, bj) = (1usize << i, 1usize << j);
            for v in (0..qn.vertex_count()).filter(|v| v & (bi | bj) == 0) {
                let cyc = [v, v | bi, v | bi | bj, v | bj];
                let a = col(cyc[0], cyc[1]);
                let b = col(cyc[1], cyc[2]);
                if a != b && col(cyc[2], cyc[3]) == a && col(cyc[3], cyc[0]) == b {
                    return Ok(Simplicity::NotSimple(cyc));
                }
            }
        }
    }
    Ok(Simplicity::Simple)
}

/// Whether every edge and its antipodal edge get different colors.
pub fn is_antipodal_coloring(qn: &Graph, c: &EdgeColoring) -> Result<bool> {
    let n = qn.hypercube_dim().ok_or(Error::NotHypercube)?;
    c.check(qn)?;
    let mask = (1usize << n) - 1;
    Ok(qn
        .edges()
        .iter()
        .enumerate()
        .all(|(e, &(u, v))| c.between(qn, u ^ mask, v ^ mask).is_some_and(|other| other != c.get(e))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_red_q(n: usize) -> (Graph, EdgeColoring) {
        let g = graphs::hypercube(n).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Red);
        (g, c)
    }

    #[test]
    fn color_encoding() {
        assert_eq!(serde_json::to_string(&Color::Red).unwrap(), "0");
        assert_eq!(serde_json::from_str::<Color>("1").unwrap(), Color::Blue);
        assert!(serde_json::from_str::<Color>("2").is_err());
        assert_eq!(Color::Red.flip(), Color::Blue);
    }

    #[test]
    fn directional_small() {
        let (g, c) = directional_coloring(1).unwrap();
        assert_eq!(c.to_string(), "RBBR");
        assert!(is_properly_colored_4cycle(&g, &c, [0, 1, 3, 2]).unwrap());
        let (_, c2) = directional_coloring(2).unwrap();
        assert_eq!(c2.count(Color::Red), 16);
        assert!(directional_coloring(0).is_err());
        assert!(directional_coloring(13).is_err());
    }

    #[test]
    fn two_cube_clauses_m2_k1() {
        // Q_3; direction 1 = bit 0, direction 2 = bit 1, tail = bit 2.
        let (g, c) = two_cube_coloring(2, 1).unwrap();
        let col = |u, v| c.between(&g, u, v).unwrap();
        // first m/2 directions: red unless tail all ones
        assert_eq!(col(0b000, 0b001), Color::Red);
        assert_eq!(col(0b100, 0b101), Color::Blue);
        // second m/2 directions: red only when tail all zeros
        assert_eq!(col(0b000, 0b010), Color::Red);
        assert_eq!(col(0b001, 0b011), Color::Red);
        assert_eq!(col(0b100, 0b110), Color::Blue);
        assert_eq!(col(0b101, 0b111), Color::Blue);
        // tail direction: setting the bit gives one tail one, odd, so blue
        for base in 0..4 {
            assert_eq!(col(base, base | 0b100), Color::Blue);
        }
    }

    #[test]
    fn two_cube_tail_parity_m2_k2() {
        let (g, c) = two_cube_coloring(2, 2).unwrap();
        let col = |u, v| c.between(&g, u, v).unwrap();
        // tail bits 2,3: 00 -> 01 gives weight 1 (blue); 01 -> 11 gives weight 2 (red)
        assert_eq!(col(0b0000, 0b0100), Color::Blue);
        assert_eq!(col(0b0100, 0b1100), Color::Red);
        assert_eq!(col(0b1000, 0b1100), Color::Red);
        // tail = 01 is neither all-zero nor all-one, so directional
        assert_eq!(col(0b0100, 0b0101), Color::Red);
        assert_eq!(col(0b0100, 0b0110), Color::Blue);
        assert!(two_cube_coloring(3, 1).is_err());
        assert!(two_cube_coloring(2, 0).is_err());
    }

    #[test]
    fn double_level_rules() {
        let (g, c) = double_level_coloring(2).unwrap();
        let col = |u, v| c.between(&g, u, v).unwrap();
        assert_eq!(col(0b0000, 0b0001), Color::Red);
        assert_eq!(col(0b0001, 0b0011), Color::Blue);
        assert_eq!(col(0b0000, 0b0100), Color::Red);
        assert_eq!(col(0b0111, 0b1111), Color::Blue);
        assert!(double_level_coloring(1).is_err());
    }

    #[test]
    fn level_alternating_never_alternates_on_a_square() {
        // Both edges at the lowest vertex of a 4-cycle join the same levels.
        let (g, c) = level_alternating_coloring(2).unwrap();
        assert!(!is_properly_colored_4cycle(&g, &c, [0, 1, 3, 2]).unwrap());
        for n in 2..=6 {
            let (g, c) = level_alternating_coloring(n).unwrap();
            assert!(is_simple(&g, &c).unwrap().is_simple());
        }
    }

    #[test]
    fn proper_cycle() {
        let (g, c) = proper_cycle_coloring(4).unwrap();
        assert!(is_properly_colored_4cycle(&g, &c, [0, 1, 2, 3]).unwrap());
        let (g, c) = proper_cycle_coloring(10).unwrap();
        for v in 0..10 {
            let e = g.incident_edges(v);
            assert_ne!(c.get(e[0]), c.get(e[1]));
        }
        assert!(proper_cycle_coloring(5).is_err());
        assert!(proper_cycle_coloring(2).is_err());
    }

    #[test]
    fn random_extremes_and_determinism() {
        let g = graphs::hypercube(3).unwrap();
        assert_eq!(random_coloring(&g, 0.0, 9).unwrap().count(Color::Blue), 12);
        assert_eq!(random_coloring(&g, 1.0, 9).unwrap().count(Color::Red), 12);
        assert_eq!(random_coloring(&g, 0.5, 42).unwrap(), random_coloring(&g, 0.5, 42).unwrap());
        assert!(random_coloring(&g, 1.5, 0).is_err());
    }

    #[test]
    fn four_cycle_checks() {
        let g = graphs::cycle(4).unwrap();
        let c = EdgeColoring::monochromatic(&g, Color::Red);
        assert!(!is_properly_colored_4cycle(&g, &c, [0, 1, 2, 3]).unwrap());
        assert!(matches!(is_properly_colored_4cycle(&g, &c, [0, 2, 1, 3]), Err(Error::NotAFourCycle(_))));
        assert!(matches!(is_properly_colored_4cycle(&g, &c, [0, 1, 0, 3]), Err(Error::NotAFourCycle(_))));
    }

    #[test]
    fn simplicity() {
        let (g, c) = all_red_q(4);
        assert!(is_simple(&g, &c).unwrap().is_simple());
        let (g, c) = directional_coloring(2).unwrap();
        match is_simple(&g, &c).unwrap() {
            Simplicity::NotSimple(w) => assert!(is_properly_colored_4cycle(&g, &c, w).unwrap()),
            Simplicity::Simple => panic!("directional coloring has alternating 4-cycles"),
        }
        let c6 = graphs::cycle(6).unwrap();
        assert_eq!(is_simple(&c6, &EdgeColoring::monochromatic(&c6, Color::Red)), Err(Error::NotHypercube));
    }

    /// Independent antipodal check: pair every edge with the edge whose
    /// endpoints are the complements, found by linear scan.
    fn antipodal_oracle(g: &Graph, c: &EdgeColoring, n: usize) -> bool {
        let mask = (1 << n) - 1;
        g.edges().iter().enumerate().all(|(e, &(u, v))| {
            let (a, b) = (u ^ mask, v ^ mask);
            let f = g.edges().iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
            c.get(e) != c.get(f)
        })
    }

    #[test]
    fn antipodal_colorings() {
        let (g, c) = all_red_q(2);
        assert!(!is_antipodal_coloring(&g, &c).unwrap());
        // The proper coloring of Q_2 gives parallel (antipodal) edges equal colors.
        let (g, c) = directional_coloring(1).unwrap();
        assert!(!antipodal_oracle(&g, &c, 2));
        assert!(!is_antipodal_coloring(&g, &c).unwrap());
        let (g, c) = level_alternating_coloring(3).unwrap();
        assert!(!antipodal_oracle(&g, &c, 3));
        assert!(!is_antipodal_coloring(&g, &c).unwrap());
        // Level-alternating is antipodal exactly when n is even.
        let (g, c) = level_alternating_coloring(4).unwrap();
        assert!(antipodal_oracle(&g, &c, 4));
        assert!(is_antipodal_coloring(&g, &c).unwrap());
        // An antipodal coloring of Q_2.
        let q2 = graphs::hypercube(2).unwrap();
        let c = EdgeColoring::from_fn(&q2, |u, _| if u == 0 { Color::Red } else { Color::Blue });
        assert!(is_antipodal_coloring(&q2, &c).unwrap());
    }

    #[test]
    fn from_index_enumeration() {
        let g = graphs::cycle(4).unwrap();
        assert_eq!(EdgeColoring::from_index(&g, 0b0101).to_string(), "BRBR");
    }
}
