//! Vertex-disjoint paths via unit vertex capacities (Menger).

use std::collections::VecDeque;

const BIG: u32 = u32::MAX / 4;

struct Residual {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl Residual {
    fn new(nodes: usize) -> Self {
        Residual { head: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// One BFS augmentation of a unit of flow; false when none exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.out[x] {
                let y = self.head[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut y = sink;
        while y != source {
            let e = via[y];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            y = self.head[e ^ 1];
        }
        true
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            for &e in &self.out[x] {
                let y = self.head[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Separation {
    /// No path from the source to any target.
    Unreachable,
    /// Exactly one vertex-disjoint path; `cut` lies on every source-target
    /// path and is the cut vertex closest to the source.
    Single { cut: usize },
    /// At least two internally vertex-disjoint paths exist.
    Multiple,
}

/// Menger separation of `source` from `targets` in the subgraph induced by
/// `allowed`, with unit capacity on every vertex but the source.
pub(crate) fn separate(
    adjacency: &[Vec<usize>],
    allowed: &[bool],
    source: usize,
    targets: &[usize],
) -> Separation {
    let n = adjacency.len();
    let sink = 2 * n;
    let mut net = Residual::new(2 * n + 1);
    for v in (0..n).filter(|&v| allowed[v]) {
        net.add(2 * v, 2 * v + 1, if v == source { BIG } else { 1 });
        for &w in adjacency[v].iter().filter(|&&w| allowed[w]) {
            net.add(2 * v + 1, 2 * w, BIG);
        }
    }
    for &h in targets {
        net.add(2 * h + 1, sink, BIG);
    }
    let start = 2 * source + 1;
    let mut flow = 0;
    while flow < 2 && net.augment(start, sink) {
        flow += 1;
    }
    match flow {
        0 => Separation::Unreachable,
        1 => {
            let seen = net.reachable(start);
            let cut = (0..n)
                .find(|&v| allowed[v] && v != source && seen[2 * v] && !seen[2 * v + 1])
                .expect("unit flow has a saturated vertex in the minimum cut");
            Separation::Single { cut }
        }
        _ => Separation::Multiple,
    }
}
