use fewswitch::colorings::{self, Color, EdgeColoring};
use fewswitch::compgraph::ComponentGraph;
use fewswitch::graphs::{self, Distance, Graph};
use fewswitch::harness;
use fewswitch::par::Exec;
use fewswitch::rng;
use fewswitch::switchpaths::{self, count_switches, loop_erase, WitnessOutcome, DEFAULT_NODE_BUDGET};
use fewswitch::torus::{self, TorusColoring};
use proptest::prelude::*;
use rand::Rng;

/// A graph on `1..=max_n` vertices with each pair joined independently.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_colored(max_n: usize) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    (arb_graph(max_n), any::<u64>(), 0.0..=1.0f64).prop_map(|(g, seed, p)| {
        let c = colorings::random_coloring(&g, p, seed).unwrap();
        (g, c)
    })
}

fn arb_connected_colored(max_n: usize) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    arb_colored(max_n).prop_filter("connected", |(g, _)| g.is_connected())
}

/// Fewest switches over all simple u-v paths, by depth-first enumeration.
fn brute_min_switches(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Option<usize> {
    fn go(
        g: &Graph,
        c: &EdgeColoring,
        v: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        best: &mut Option<usize>,
    ) {
        let x = *path.last().unwrap();
        if x == v {
            let colors: Vec<Color> = path.windows(2).map(|w| c.between(g, w[0], w[1]).unwrap()).collect();
            let s = count_switches(&colors);
            *best = Some(best.map_or(s, |b| b.min(s)));
            return;
        }
        for &y in g.neighbors(x) {
            if !on[y] {
                on[y] = true;
                path.push(y);
                go(g, c, v, path, on, best);
                path.pop();
                on[y] = false;
            }
        }
    }
    let mut on = vec![false; g.vertex_count()];
    on[u] = true;
    let mut best = None;
    go(g, c, v, &mut vec![u], &mut on, &mut best);
    best
}

fn meta_formula(cg: &ComponentGraph, u: usize, v: usize) -> Option<usize> {
    let (ur, ub) = cg.components_of(u);
    let (vr, vb) = cg.components_of(v);
    [ur, ub].iter().flat_map(|&a| [vr, vb].map(|b| cg.meta_distance(a, b).unwrap().finite())).flatten().min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn components_partition_each_color((g, c) in arb_colored(12)) {
        let cg = ComponentGraph::build(&g, &c).unwrap();
        for color in Color::BOTH {
            let mut seen = vec![0usize; g.vertex_count()];
            for a in (0..cg.len()).filter(|&a| cg.color(a) == color) {
                let members = cg.members(a);
                for &x in members {
                    seen[x] += 1;
                    prop_assert_eq!(cg.component_of(x, color), a);
                    // closed under edges of this color
                    for &y in g.neighbors(x) {
                        if c.between(&g, x, y) == Some(color) {
                            prop_assert!(members.binary_search(&y).is_ok());
                        }
                    }
                }
            }
            prop_assert!(seen.iter().all(|&k| k == 1));
        }
    }

    #[test]
    fn meta_graph_is_simple_bipartite_and_connected_like_base((g, c) in arb_colored(12)) {
        let cg = ComponentGraph::build(&g, &c).unwrap();
        prop_assert!(cg.is_bipartite_by_color());
        let mut edges = cg.edges().to_vec();
        edges.sort_unstable();
        edges.dedup();
        prop_assert_eq!(edges.len(), cg.edges().len());
        prop_assert_eq!(cg.is_connected(), g.is_connected());
        prop_assert_eq!(cg.len(), cg.red_count() + cg.blue_count());
    }

    #[test]
    fn min_switches_matches_meta_distance((g, c) in arb_colored(12)) {
        let cg = ComponentGraph::build(&g, &c).unwrap();
        for u in 0..g.vertex_count() {
            let row = switchpaths::switch_distances_from(&g, &c, u).unwrap();
            for (v, &d) in row.iter().enumerate() {
                prop_assert_eq!(d, meta_formula(&cg, u, v), "pair ({}, {})", u, v);
            }
        }
    }

    #[test]
    fn edge_index_round_trip(g in arb_graph(12)) {
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert!(u < v);
            prop_assert_eq!(g.edge_id(u, v), Some(e));
            prop_assert_eq!(g.edge_id(v, u), Some(e));
            prop_assert_eq!(g.edge(e), (u, v));
        }
        prop_assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn coloring_file_round_trip((g, c) in arb_colored(10)) {
        let text = fewswitch::io::to_json_string(&g, &c);
        let (g2, c2) = fewswitch::io::from_json_str(&text).unwrap();
        prop_assert_eq!(g2, g);
        prop_assert_eq!(c2, c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn min_switches_matches_path_enumeration((g, c) in arb_colored(7)) {
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let got = switchpaths::min_switches(&g, &c, u, v).unwrap();
                let want = brute_min_switches(&g, &c, u, v);
                prop_assert_eq!(got.as_ref().map(|p| p.switches), want);
                if let Some(p) = got {
                    prop_assert!(p.is_valid(&g, &c));
                    prop_assert_eq!((p.start(), p.end()), (u, v));
                }
            }
        }
    }

    #[test]
    fn walks_follow_the_component_graph((g, c) in arb_connected_colored(12), seed in any::<u64>()) {
        let cg = ComponentGraph::build(&g, &c).unwrap();
        let mut r = rng::rng_from_seed(seed);
        let mut walk = vec![r.gen_range(0..g.vertex_count())];
        for _ in 0..30 {
            let nb = g.neighbors(*walk.last().unwrap());
            if nb.is_empty() {
                break;
            }
            walk.push(nb[r.gen_range(0..nb.len())]);
        }
        let path = loop_erase(&walk);
        let colors: Vec<Color> = path.windows(2).map(|w| c.between(&g, w[0], w[1]).unwrap()).collect();
        let comps = cg.components_along(&g, &c, &path);
        if path.len() > 1 {
            prop_assert_eq!(comps.len() - 1, count_switches(&colors));
        }
        prop_assert!(comps.windows(2).all(|w| cg.has_edge(w[0], w[1])));
        let walk_colors: Vec<Color> = walk.windows(2).map(|w| c.between(&g, w[0], w[1]).unwrap()).collect();
        prop_assert!(count_switches(&colors) <= count_switches(&walk_colors));
    }

    #[test]
    fn image_sets_are_connected_and_overlap_for_neighbors(seed in any::<u64>(), n in 2..=10usize) {
        let mut r = rng::rng_from_seed(seed);
        let (g, phi) = harness::random_symmetric_graph(n, &mut r).unwrap();
        let c = colorings::random_coloring_with(&g, r.gen_range(0.0..=1.0), &mut r);
        let cg = ComponentGraph::build(&g, &c).unwrap();
        let sets: Vec<Vec<usize>> = (0..cg.len()).map(|a| cg.image_component_set(&phi, a).unwrap()).collect();
        for set in &sets {
            // connected inside the component graph
            let mut reached = vec![set[0]];
            let mut i = 0;
            while i < reached.len() {
                let x = reached[i];
                for &y in cg.neighbors(x) {
                    if set.binary_search(&y).is_ok() && !reached.contains(&y) {
                        reached.push(y);
                    }
                }
                i += 1;
            }
            prop_assert_eq!(reached.len(), set.len());
        }
        for &(a, b) in cg.edges() {
            prop_assert!(sets[a].iter().any(|x| sets[b].binary_search(x).is_ok()));
        }
    }

    #[test]
    fn witness_respects_its_bound(seed in any::<u64>(), n in 2..=9usize, k in 0..=2usize) {
        let mut r = rng::rng_from_seed(seed);
        let (g, phi) = harness::random_symmetric_graph(n, &mut r).unwrap();
        let c = colorings::random_coloring_with(&g, 0.5, &mut r);
        match switchpaths::theorem_witness(&g, &c, &phi, k, DEFAULT_NODE_BUDGET).unwrap() {
            WitnessOutcome::Witness { u, path, .. } => {
                prop_assert!(path.switches <= k);
                prop_assert_eq!((path.start(), path.end()), (u, phi.apply(u)));
                prop_assert!(path.is_valid(&g, &c));
            }
            WitnessOutcome::HypothesisViolated { cycle } => {
                prop_assert!(cycle.len() >= 2 * k + 3);
                let cg = ComponentGraph::build(&g, &c).unwrap();
                for i in 0..cycle.len() {
                    prop_assert!(cg.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
            WitnessOutcome::Failure { reason, .. } => prop_assert!(false, "failure: {}", reason),
        }
    }

    #[test]
    fn farthest_map_is_an_involution_at_maximum_distance(
        factors in prop::collection::vec(prop::sample::select(vec![2usize, 4, 6, 8]), 1..=3)
    ) {
        let g = graphs::product_of_cycles(&factors).unwrap();
        let phi = graphs::farthest_point_automorphism(&factors).unwrap();
        let radius: usize = factors.iter().map(|a| a / 2).sum();
        prop_assert!(phi.is_involution());
        for v in 0..g.vertex_count() {
            let d = g.bfs_distances(v);
            prop_assert_eq!(d[phi.apply(v)], Some(radius));
            let far = d.iter().filter(|&&x| x == Some(radius)).count();
            prop_assert_eq!(far, 1);
        }
    }

    #[test]
    fn geodesic_restriction_never_helps(n in 1..=5usize, seed in any::<u64>()) {
        let g = graphs::hypercube(n).unwrap();
        let c = colorings::random_coloring(&g, 0.5, seed).unwrap();
        let mask = (1 << n) - 1;
        for u in 0..g.vertex_count() {
            let geo = switchpaths::geodesic_min_switches(&g, &c, u).unwrap();
            prop_assert_eq!(geo.len(), n);
            prop_assert_eq!(graphs::distance(&g, u, u ^ mask).unwrap(), Distance::Finite(n));
            let free = switchpaths::min_switches(&g, &c, u, u ^ mask).unwrap().unwrap();
            prop_assert!(geo.switches >= free.switches);
        }
    }

    #[test]
    fn torus_pairs_meet_the_bound(a in 1..=3usize, extra in 0..=2usize, seed in any::<u64>()) {
        let b = (a + extra).max(2);
        let g = graphs::product_of_cycles(&[2 * a, 2 * b]).unwrap();
        let c = colorings::random_coloring(&g, 0.5, seed).unwrap();
        let tc = TorusColoring::new(a, b, c).unwrap();
        let pair = torus::find_pair(&tc).unwrap();
        prop_assert!(pair.path.switches < b);
        prop_assert_eq!(graphs::distance(&g, pair.u, pair.v).unwrap(), Distance::Finite(a + b));
        let report = torus::charge_accounting(&tc, &pair.diagonals);
        prop_assert!(report.max_charge <= 2);
        prop_assert!(report.mean() <= a as f64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn reports_do_not_depend_on_execution(seed in any::<u64>()) {
        let g = graphs::hypercube(4).unwrap();
        let phi = graphs::antipodal(4).unwrap();
        let seq = harness::sampled_d_with(&g, &phi, 200, seed, Some(1), Exec::Sequential).unwrap();
        let def = harness::sampled_d_with(&g, &phi, 200, seed, Some(1), Exec::default()).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            serde_json::to_string(&def).unwrap()
        );
        let t1 = harness::tree_fraction_experiment(5, 100, seed, Exec::Sequential).unwrap();
        let t2 = harness::tree_fraction_experiment(5, 100, seed, Exec::default()).unwrap();
        prop_assert_eq!(t1, t2);
    }
}
