#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relbound::generators::{complete, complete_bipartite, complete_split, cycle, path};
use relbound::{er_graph, ortho_graph, Graph};

/// Named graphs with at least one edge, all of order ≤ 60.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 2..=10 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 2..=6 {
        out.push((format!("K{n}"), complete(n)));
    }
    for (a, b) in [(1, 3), (1, 5), (2, 3), (2, 5), (3, 3), (3, 4)] {
        out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
    }
    for (m, s) in [(2, 2), (3, 3), (4, 2), (2, 5)] {
        out.push((format!("split{m},{s}"), complete_split(m, s)));
    }
    for (name, base) in [
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("P3", path(3)),
    ] {
        out.push((format!("cone({name})"), base.cone().unwrap()));
    }
    out.push((
        "cone(K2,3)".into(),
        complete_bipartite(2, 3).cone().unwrap(),
    ));
    out.push(("P3+C4".into(), path(3).disjoint_union(&cycle(4))));
    out.push((
        "K1,3+P2".into(),
        complete_bipartite(1, 3).disjoint_union(&path(2)),
    ));
    out.push(("P3xP4".into(), path(3).cartesian_product(&path(4))));
    out.push(("C5xP2".into(), cycle(5).cartesian_product(&path(2))));
    out.push((
        "split3,3xP4".into(),
        complete_split(3, 3).cartesian_product(&path(4)),
    ));
    out.push(("petersen".into(), petersen()));
    for q in [2, 3, 4, 5] {
        out.push((format!("ER{q}"), er_graph(q).unwrap()));
    }
    out.push(("O5_2".into(), ortho_graph(5, 2).unwrap()));
    out.push(("O4_3".into(), ortho_graph(4, 3).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for i in 0..6 {
        let n = 8 + 2 * i;
        out.push((format!("gnp{i}"), random_graph(&mut rng, n, 0.3)));
    }
    out
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Erdős–Rényi G(n, p), resampled until no vertex is isolated.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if (0..n).all(|v| g.degree(v) > 0) {
            return g;
        }
    }
}

/// Independence number by enumerating every vertex subset (n ≤ 20).
pub fn brute_force_alpha(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "brute force is for small graphs");
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s & (1 << v) == 0 || s & masks[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
