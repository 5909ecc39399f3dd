//! Randomized structural properties of the mutable graph.

mod common;

use common::{random_connected_undirected, random_directed, wi, Rng};
use pathlist_core::Graph;

#[test]
fn thousand_remove_restore_pairs_are_identity() {
    let mut rng = Rng::new(0x5eed_0001);
    let mut g = Graph::directed(50);
    for u in 0..50 {
        for v in 0..50 {
            if u != v && rng.chance(1, 10) {
                g.add_edge(u, v, wi(1 + rng.below(9) as i64)).unwrap();
            }
        }
    }
    let initial = g.clone();
    for _ in 0..1000 {
        let v = rng.below(50);
        if !g.vertex_alive(v) {
            continue;
        }
        let token = g.remove_vertex(v).unwrap();
        g.restore(token).unwrap();
        assert_eq!(g, initial);
    }
}

#[test]
fn nested_stack_of_removals_unwinds_exactly() {
    let mut rng = Rng::new(0x5eed_0002);
    for _ in 0..50 {
        let mut g = random_directed(&mut rng, 12, 5);
        let initial = g.clone();
        let mut tokens = Vec::new();
        let mut alive: Vec<usize> = (0..g.vertex_count()).collect();
        for _ in 0..g.vertex_count() / 2 {
            let idx = rng.below(alive.len());
            let v = alive.swap_remove(idx);
            tokens.push(g.remove_vertex(v).unwrap());
        }
        while let Some(token) = tokens.pop() {
            g.restore(token).unwrap();
        }
        assert_eq!(g, initial);
    }
}

#[test]
fn in_and_out_adjacency_agree() {
    let mut rng = Rng::new(0x5eed_0003);
    for _ in 0..40 {
        let g = random_directed(&mut rng, 10, 5);
        for (id, u, v, w) in g.alive_arcs() {
            assert!(g.out_arcs(u).any(|(a, h, x)| (a, h, x) == (id, v, w)));
            assert!(g.in_arcs(v).any(|(a, t, x)| (a, t, x) == (id, u, w)));
        }
    }
}

#[test]
fn undirected_neighborhoods_are_symmetric() {
    let mut rng = Rng::new(0x5eed_0004);
    for _ in 0..40 {
        let g = random_connected_undirected(&mut rng, 10, 5);
        for v in 0..g.vertex_count() {
            let mut outs: Vec<_> = g.out_arcs(v).map(|(_, h, w)| (h, w)).collect();
            let mut ins: Vec<_> = g.in_arcs(v).map(|(_, t, w)| (t, w)).collect();
            outs.sort();
            ins.sort();
            assert_eq!(outs, ins);
        }
    }
}
