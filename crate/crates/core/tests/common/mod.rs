//! Shared helpers for the integration suites: a deterministic generator,
//! random graph builders, brute-force oracles independent of the library's
//! traversals, and collection wrappers.
#![allow(dead_code)]

use std::ops::ControlFlow;

use pathlist_core::{
    brute_force_paths, list_bounded_directed, list_bounded_undirected, list_iterative,
    BoundedPathQuery, ContainerKind, Distance, EnumStats, Graph, Path, VertexId, Weight,
};

/// SplitMix64: tiny, deterministic, seedable; keeps the suites reproducible
/// without external dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

pub fn wi(n: i64) -> Weight {
    Weight::from_int(n)
}

/// Arcs 1->2:1, 2->4:1, 1->3:2, 3->4:2, 1->4:5, 2->3:1 in file ids
/// (0-based here); s = 0, t = 3.
pub fn d1() -> Graph {
    let mut g = Graph::directed(4);
    g.add_edge(0, 1, wi(1)).unwrap();
    g.add_edge(1, 3, wi(1)).unwrap();
    g.add_edge(0, 2, wi(2)).unwrap();
    g.add_edge(2, 3, wi(2)).unwrap();
    g.add_edge(0, 3, wi(5)).unwrap();
    g.add_edge(1, 2, wi(1)).unwrap();
    g
}

/// Edges 1-2:1, 2-3:1, 3-4:1, 2-4:10 in file ids (0-based here).
pub fn u1() -> Graph {
    let mut g = Graph::undirected(4);
    g.add_edge(0, 1, wi(1)).unwrap();
    g.add_edge(1, 2, wi(1)).unwrap();
    g.add_edge(2, 3, wi(1)).unwrap();
    g.add_edge(1, 3, wi(10)).unwrap();
    g
}

/// Complete directed graph on five vertices, unit weights.
pub fn k5() -> Graph {
    let mut g = Graph::directed(5);
    for u in 0..5 {
        for v in 0..5 {
            if u != v {
                g.add_edge(u, v, Weight::one()).unwrap();
            }
        }
    }
    g
}

/// Random directed graph: n in 2..=max_n, each ordered pair an arc with
/// probability 2/5, weights uniform in 1..=w_max.
pub fn random_directed(rng: &mut Rng, max_n: usize, w_max: i64) -> Graph {
    let n = 2 + rng.below(max_n - 1);
    let mut g = Graph::directed(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.chance(2, 5) {
                g.add_edge(u, v, wi(1 + rng.below(w_max as usize) as i64))
                    .unwrap();
            }
        }
    }
    g
}

/// Random connected undirected graph: a random spanning tree plus each
/// remaining pair with probability 2/5, weights uniform in 1..=w_max.
pub fn random_connected_undirected(rng: &mut Rng, max_n: usize, w_max: i64) -> Graph {
    let n = 2 + rng.below(max_n - 1);
    let mut g = Graph::undirected(n);
    for v in 1..n {
        let u = rng.below(v);
        g.add_edge(u, v, wi(1 + rng.below(w_max as usize) as i64))
            .unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.alive_arc_between(u, v).is_none() && rng.chance(2, 5) {
                g.add_edge(u, v, wi(1 + rng.below(w_max as usize) as i64))
                    .unwrap();
            }
        }
    }
    g
}

pub fn two_distinct(rng: &mut Rng, n: usize) -> (VertexId, VertexId) {
    let s = rng.below(n);
    let mut t = rng.below(n);
    while t == s {
        t = rng.below(n);
    }
    (s, t)
}

/// A budget no simple path in `g` can exceed (robust to negative arcs).
pub fn weight_bound(g: &Graph) -> Weight {
    let mut bound = Weight::one();
    for (_, u, v, w) in g.alive_arcs() {
        if g.is_undirected() && u > v {
            continue;
        }
        if w.is_negative() {
            bound -= w;
        } else {
            bound += w;
        }
    }
    bound
}

/// Distinct st-path weights in ascending order (empty when t is
/// unreachable).
pub fn distinct_path_weights(g: &Graph, s: VertexId, t: VertexId) -> Vec<Weight> {
    let mut weights: Vec<Weight> = brute_force_paths(g, s, t, weight_bound(g))
        .iter()
        .map(|p| p.weight())
        .collect();
    weights.sort();
    weights.dedup();
    weights
}

fn query(s: VertexId, t: VertexId, alpha: Weight) -> BoundedPathQuery {
    BoundedPathQuery {
        source: s,
        target: t,
        budget: alpha,
    }
}

pub fn collect_directed(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) -> (Vec<Path>, EnumStats) {
    let mut out = Vec::new();
    let stats = list_bounded_directed(g, &query(s, t, alpha), |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })
    .unwrap();
    (out, stats)
}

pub fn collect_undirected(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) -> (Vec<Path>, EnumStats) {
    let mut out = Vec::new();
    let stats = list_bounded_undirected(g, &query(s, t, alpha), |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })
    .unwrap();
    (out, stats)
}

pub fn collect_iterative(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
    kind: ContainerKind,
) -> (Vec<Path>, EnumStats) {
    let mut out = Vec::new();
    let stats = list_iterative(g, &query(s, t, alpha), kind, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })
    .unwrap();
    (out, stats)
}

/// Checks the per-emission contract: one st-path per call, simple, within
/// budget, weight cached correctly, and no duplicates across the run.
pub fn assert_valid_emissions(
    g: &Graph,
    paths: &[Path],
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) {
    let mut sorted: Vec<&Path> = paths.iter().collect();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), paths.len(), "duplicate emission");
    for p in paths {
        assert_eq!(p.start(), s);
        assert_eq!(p.end(), t);
        assert!(p.weight() <= alpha, "emitted path exceeds the budget");
        assert_eq!(g.path_weight(p).unwrap(), p.weight());
        let mut verts = p.vertices().to_vec();
        verts.sort_unstable();
        verts.dedup();
        assert_eq!(verts.len(), p.vertices().len(), "path repeats a vertex");
    }
}

/// Sorted copy for set comparisons.
pub fn sorted(paths: &[Path]) -> Vec<Path> {
    let mut v = paths.to_vec();
    v.sort();
    v
}

/// Exhaustive single-source distances over simple paths, following
/// out-arcs (`forward`) or in-arcs backwards (`!forward`). Independent of
/// the library's shortest-path code; exponential, for small graphs only.
pub fn exhaustive_dist(g: &Graph, root: VertexId, forward: bool) -> Vec<Distance> {
    let n = g.vertex_count();
    let mut best = vec![Distance::Unreachable; n];
    let mut visited = vec![false; n];
    fn walk(
        g: &Graph,
        u: VertexId,
        acc: Weight,
        forward: bool,
        visited: &mut [bool],
        best: &mut [Distance],
    ) {
        if Distance::Finite(acc) < best[u] {
            best[u] = Distance::Finite(acc);
        }
        visited[u] = true;
        let next: Vec<(VertexId, Weight)> = if forward {
            g.out_arcs(u).map(|(_, v, w)| (v, w)).collect()
        } else {
            g.in_arcs(u).map(|(_, v, w)| (v, w)).collect()
        };
        for (v, w) in next {
            if !visited[v] {
                walk(g, v, acc + w, forward, visited, best);
            }
        }
        visited[u] = false;
    }
    if g.vertex_alive(root) {
        walk(g, root, Weight::zero(), forward, &mut visited, &mut best);
    }
    best
}
