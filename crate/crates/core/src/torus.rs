//! Few-switch antipodal pairs on the torus `C_{2a} □ C_{2b}`.
//!
//! Vertices are `(x, y)` with `x` mod `2a` and `y` mod `2b`, numbered
//! `x + 2a * y` as in [`crate::graphs::product_of_cycles`]. A `j`-diagonal is a
//! staircase of `j` two-edge steps from `(x, y)` to `(x ± j, y + j)`; each
//! step turns either at `(x ± 1, y)` (horizontal first) or at `(x, y + 1)`
//! (vertical first).
//!
//! [`find_pair`] returns `u` and `v = u + (a, b)` joined by a path with at
//! most `b - 1` switches. Unless every 4-cycle alternates, the `4a` lazy
//! `a`-diagonals starting on a row through a non-alternating 4-cycle contain
//! one with at most `a - 1` switches (each 4-cycle is charged at most two
//! switches, and the non-alternating starting one at most one); climbing
//! `b - a` more vertical edges adds at most `b - a` switches.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use crate::colorings::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graphs::{self, Distance, Graph};
use crate::switchpaths::{count_switches, SwitchPath};

/// A 2-coloring of `C_{2a} □ C_{2b}` with `1 <= a <= b`, `b >= 2`.
#[derive(Debug, Clone)]
pub struct TorusColoring {
    a: usize,
    b: usize,
    graph: Graph,
    coloring: EdgeColoring,
}

impl TorusColoring {
    pub fn new(a: usize, b: usize, coloring: EdgeColoring) -> Result<Self> {
        if a == 0 || a > b || b < 2 {
            return Err(Error::InvalidParameter(format!(
                "torus needs 1 <= a <= b and b >= 2, got a={a}, b={b}"
            )));
        }
        let graph = graphs::product_of_cycles(&[2 * a, 2 * b])?;
        coloring.check(&graph)?;
        Ok(TorusColoring { a, b, graph, coloring })
    }

    /// Accepts a graph built as `product:[2a, 2b]`.
    pub fn from_graph(g: &Graph, coloring: EdgeColoring) -> Result<Self> {
        match g.spec().cycle_factors().as_deref() {
            Some(&[p, q]) if p % 2 == 0 && q % 2 == 0 => Self::new(p / 2, q / 2, coloring),
            _ => Err(Error::InvalidParameter("torus coloring needs a product of two even cycles".into())),
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn width(&self) -> usize {
        2 * self.a
    }

    pub fn height(&self) -> usize {
        2 * self.b
    }

    pub fn vertex(&self, x: isize, y: isize) -> usize {
        let x = x.rem_euclid(self.width() as isize) as usize;
        let y = y.rem_euclid(self.height() as isize) as usize;
        x + self.width() * y
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v % self.width(), v / self.width())
    }

    fn color(&self, p: usize, q: usize) -> Color {
        self.coloring.between(&self.graph, p, q).expect("torus edge")
    }

    /// Color of the edge `(x, y) - (x + 1, y)`.
    pub fn horizontal(&self, x: isize, y: isize) -> Color {
        self.color(self.vertex(x, y), self.vertex(x + 1, y))
    }

    /// Color of the edge `(x, y) - (x, y + 1)`.
    pub fn vertical(&self, x: isize, y: isize) -> Color {
        self.color(self.vertex(x, y), self.vertex(x, y + 1))
    }

    /// Whether the 4-cycle with lower-left corner `(x, y)` alternates.
    pub fn is_proper_square(&self, x: isize, y: isize) -> bool {
        let bottom = self.horizontal(x, y);
        let right = self.vertical(x + 1, y);
        let top = self.horizontal(x, y + 1);
        let left = self.vertical(x, y);
        bottom != right && right != top && top != left
    }

    /// First non-alternating 4-cycle, scanning rows then columns upward.
    pub fn first_improper_square(&self) -> Option<(usize, usize)> {
        (0..self.height())
            .flat_map(|y| (0..self.width()).map(move |x| (x, y)))
            .find(|&(x, y)| !self.is_proper_square(x as isize, y as isize))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalKind {
    Ascending,
    Descending,
}

impl DiagonalKind {
    fn dx(self) -> isize {
        match self {
            DiagonalKind::Ascending => 1,
            DiagonalKind::Descending => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagonal {
    pub kind: DiagonalKind,
    pub start: (usize, usize),
    /// `true` = horizontal edge first in that step.
    pub corners: Vec<bool>,
    pub switches: usize,
}

impl Diagonal {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// The `2j + 1` vertices of the staircase.
    pub fn vertices(&self, tc: &TorusColoring) -> Vec<usize> {
        let (mut x, mut y) = (self.start.0 as isize, self.start.1 as isize);
        let dx = self.kind.dx();
        let mut out = vec![tc.vertex(x, y)];
        for &horizontal_first in &self.corners {
            let corner = if horizontal_first { (x + dx, y) } else { (x, y + 1) };
            out.push(tc.vertex(corner.0, corner.1));
            x += dx;
            y += 1;
            out.push(tc.vertex(x, y));
        }
        out
    }

    pub fn colors(&self, tc: &TorusColoring) -> Vec<Color> {
        let vs = self.vertices(tc);
        vs.windows(2).map(|w| tc.color(w[0], w[1])).collect()
    }

    /// Lower-left corners of the 4-cycles crossed by each step.
    pub fn squares(&self, tc: &TorusColoring) -> Vec<(usize, usize)> {
        let (x, y) = (self.start.0 as isize, self.start.1 as isize);
        (0..self.len() as isize)
            .map(|i| {
                let left = match self.kind {
                    DiagonalKind::Ascending => x + i,
                    DiagonalKind::Descending => x - i - 1,
                };
                tc.coords(tc.vertex(left, y + i))
            })
            .collect()
    }

    /// Switches charged to each step's 4-cycle: a change at the step's first
    /// vertex or at its corner.
    pub fn charges(&self, tc: &TorusColoring) -> Vec<usize> {
        let colors = self.colors(tc);
        (0..self.len())
            .map(|i| {
                let entry = i > 0 && colors[2 * i - 1] != colors[2 * i];
                usize::from(entry) + usize::from(colors[2 * i] != colors[2 * i + 1])
            })
            .collect()
    }
}

/// The two edge colors of one step from `(x, y)`.
fn step_colors(tc: &TorusColoring, x: isize, y: isize, dx: isize, horizontal_first: bool) -> (Color, Color) {
    if horizontal_first {
        let first = tc.color(tc.vertex(x, y), tc.vertex(x + dx, y));
        (first, tc.vertical(x + dx, y))
    } else {
        (tc.vertical(x, y), tc.color(tc.vertex(x, y + 1), tc.vertex(x + dx, y + 1)))
    }
}

const INF: usize = usize::MAX;

/// The lazy `j`-diagonal from `start`: every prefix has the fewest switches
/// among diagonals of that length from `start`.
///
/// Forward dynamic programming records, per step and final color, the best
/// switch count. The path is then traced back from the end through states
/// that are optimal for their own prefix length; such a predecessor always
/// exists because the two final colors of a prefix differ in cost by at most
/// one switch. Ties prefer the horizontal-first corner, then red.
pub fn lazy_diagonal(
    tc: &TorusColoring,
    start: (usize, usize),
    kind: DiagonalKind,
    j: usize,
) -> Result<Diagonal> {
    if j == 0 {
        return Err(Error::InvalidParameter("diagonal length must be at least 1".into()));
    }
    if start.0 >= tc.width() || start.1 >= tc.height() {
        return Err(Error::InvalidParameter(format!("start {start:?} outside the torus")));
    }
    let dx = kind.dx();
    let (x0, y0) = (start.0 as isize, start.1 as isize);
    // cost[i][c]: best switches over i-step prefixes ending in color c.
    let mut cost = vec![[INF; 2]; j + 1];
    let mut step_table = Vec::with_capacity(j);
    for i in 0..j {
        let (x, y) = (x0 + dx * i as isize, y0 + i as isize);
        let options = [true, false].map(|hf| (hf, step_colors(tc, x, y, dx, hf)));
        for &(_, (first, second)) in &options {
            let inner = usize::from(first != second);
            let before = if i == 0 {
                0
            } else {
                Color::BOTH
                    .iter()
                    .filter(|c| cost[i][c.index()] != INF)
                    .map(|&c| cost[i][c.index()] + usize::from(c != first))
                    .min()
                    .unwrap_or(INF)
            };
            let slot = &mut cost[i + 1][second.index()];
            *slot = (*slot).min(before + inner);
        }
        step_table.push(options);
    }

    let optimum = |i: usize| cost[i][0].min(cost[i][1]);
    let mut corners = vec![false; j];
    let mut end = if cost[j][0] == optimum(j) { Color::Red } else { Color::Blue };
    for i in (0..j).rev() {
        let target = cost[i + 1][end.index()];
        let mut chosen = None;
        'search: for &(hf, (first, second)) in &step_table[i] {
            if second != end {
                continue;
            }
            let inner = usize::from(first != second);
            if i == 0 {
                if inner == target {
                    chosen = Some((hf, Color::Red));
                    break;
                }
                continue;
            }
            for prev in Color::BOTH {
                let p = cost[i][prev.index()];
                if p == optimum(i) && p + usize::from(prev != first) + inner == target {
                    chosen = Some((hf, prev));
                    break 'search;
                }
            }
        }
        let (hf, prev) = chosen.ok_or_else(|| {
            Error::Internal(format!("no prefix-optimal predecessor at step {i} of a lazy diagonal"))
        })?;
        corners[i] = hf;
        end = prev;
    }
    let diagonal = Diagonal { kind, start, corners, switches: 0 };
    let switches = count_switches(&diagonal.colors(tc));
    debug_assert_eq!(switches, optimum(j));
    Ok(Diagonal { switches, ..diagonal })
}

/// The `4a` lazy `a`-diagonals starting on row `row`: ascending from
/// `x = 0..2a`, then descending.
pub fn diagonal_family(tc: &TorusColoring, row: usize) -> Result<Vec<Diagonal>> {
    let mut out = Vec::with_capacity(4 * tc.a);
    for kind in [DiagonalKind::Ascending, DiagonalKind::Descending] {
        for x in 0..tc.width() {
            out.push(lazy_diagonal(tc, (x, row), kind, tc.a)?);
        }
    }
    Ok(out)
}

/// Per-4-cycle switch charges of a diagonal family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeReport {
    /// Charges keyed by lower-left corner of the 4-cycle.
    pub per_square: BTreeMap<(usize, usize), usize>,
    pub max_charge: usize,
    pub total: usize,
    pub diagonals: usize,
}

impl ChargeReport {
    pub fn mean(&self) -> f64 {
        self.total as f64 / self.diagonals as f64
    }
}

pub fn charge_accounting(tc: &TorusColoring, family: &[Diagonal]) -> ChargeReport {
    let mut per_square = BTreeMap::new();
    let mut total = 0;
    for d in family {
        let charges = d.charges(tc);
        debug_assert_eq!(charges.iter().sum::<usize>(), d.switches);
        for (sq, ch) in d.squares(tc).into_iter().zip(charges) {
            *per_square.entry(sq).or_insert(0) += ch;
        }
        total += d.switches;
    }
    let max_charge = per_square.values().copied().max().unwrap_or(0);
    ChargeReport { per_square, max_charge, total, diagonals: family.len() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCase {
    /// Every 4-cycle alternates; the path turns once.
    AllProper,
    /// A lazy diagonal from `start_row` followed by a vertical climb.
    Diagonal { start_row: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPair {
    pub u: usize,
    pub v: usize,
    pub case: PairCase,
    pub diagonals: Vec<Diagonal>,
    pub chosen: Option<usize>,
    pub path: SwitchPath,
}

impl TorusPair {
    pub fn to_json(&self, tc: &TorusColoring) -> serde_json::Value {
        let table: Vec<_> = self
            .diagonals
            .iter()
            .map(|d| json!({"start": [d.start.0, d.start.1], "kind": d.kind, "switches": d.switches}))
            .collect();
        let (ux, uy) = tc.coords(self.u);
        let (vx, vy) = tc.coords(self.v);
        json!({
            "a": tc.a,
            "b": tc.b,
            "u": [ux, uy],
            "v": [vx, vy],
            "case": self.case,
            "chosen_diagonal": self.chosen,
            "diagonals": table,
            "path": self.path.to_json(),
        })
    }
}

/// Finds `u` and `v = u + (a, b)` joined by a path with at most `b - 1`
/// switches. The result is checked before it is returned.
pub fn find_pair(tc: &TorusColoring) -> Result<TorusPair> {
    let (a, b) = (tc.a as isize, tc.b as isize);
    let pair = match tc.first_improper_square() {
        None => {
            let mut vertices: Vec<usize> = (0..=a).map(|x| tc.vertex(x, 0)).collect();
            vertices.extend((1..=b).map(|y| tc.vertex(a, y)));
            let path = SwitchPath::from_vertices(&tc.graph, &tc.coloring, vertices)?;
            TorusPair {
                u: path.start(),
                v: path.end(),
                case: PairCase::AllProper,
                diagonals: diagonal_family(tc, 0)?,
                chosen: None,
                path,
            }
        }
        Some((_, row)) => {
            let family = diagonal_family(tc, row)?;
            let (index, best) =
                family.iter().enumerate().min_by_key(|(i, d)| (d.switches, *i)).expect("4a >= 4 diagonals");
            if best.switches + 1 > tc.a {
                let table: Vec<String> =
                    family.iter().map(|d| format!("{:?}@{:?}:{}", d.kind, d.start, d.switches)).collect();
                return Err(Error::Internal(format!(
                    "no lazy diagonal with at most a-1 = {} switches: {}",
                    tc.a - 1,
                    table.join(", ")
                )));
            }
            let mut vertices = best.vertices(tc);
            let (ex, ey) = tc.coords(*vertices.last().unwrap());
            vertices.extend((1..=b - a).map(|dy| tc.vertex(ex as isize, ey as isize + dy)));
            let path = SwitchPath::from_vertices(&tc.graph, &tc.coloring, vertices)?;
            TorusPair {
                u: path.start(),
                v: path.end(),
                case: PairCase::Diagonal { start_row: row },
                chosen: Some(index),
                diagonals: family,
                path,
            }
        }
    };
    verify_pair(tc, &pair)?;
    Ok(pair)
}

fn verify_pair(tc: &TorusColoring, pair: &TorusPair) -> Result<()> {
    let (ux, uy) = tc.coords(pair.u);
    let expected = tc.vertex(ux as isize + tc.a as isize, uy as isize + tc.b as isize);
    let dist = graphs::distance(&tc.graph, pair.u, pair.v)?;
    let ok = pair.v == expected
        && dist == Distance::Finite(tc.a + tc.b)
        && pair.path.is_valid(&tc.graph, &tc.coloring)
        && pair.path.start() == pair.u
        && pair.path.end() == pair.v
        && pair.path.switches < tc.b;
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "torus pair check failed: u={:?} v={:?} dist={dist:?} switches={}",
            tc.coords(pair.u),
            tc.coords(pair.v),
            pair.path.switches
        )))
    }
}
