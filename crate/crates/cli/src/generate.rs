//! Seeded random instance generators. The same seed always yields the same
//! instance, so generated corpora are reproducible across runs and machines.

use crate::format::InstanceFile;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use recolor_core::coloring::{Color, Coloring, ListAssignment};
use recolor_core::graph::Graph;

/// Random graph of maximum degree three on `n` vertices: a target edge
/// count up to `3n/2` is drawn, then random vertex pairs are tried while
/// both endpoints have room.
pub fn subcubic(n: usize, seed: u64, extra_colors: u32) -> InstanceFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut degree = vec![0usize; n];
    if n >= 2 {
        let m_target = rng.gen_range(0..=3 * n / 2);
        let mut attempts = 10 * n;
        while edges.len() < m_target && attempts > 0 {
            attempts -= 1;
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || degree[u] >= 3 || degree[v] >= 3 {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if edges.contains(&e) {
                continue;
            }
            degree[e.0] += 1;
            degree[e.1] += 1;
            edges.push(e);
        }
        edges.sort_unstable();
    }
    let g = Graph::new(n, &edges).expect("generated edges are simple");
    instance_around(g, &mut rng, extra_colors)
}

/// Complete multipartite graph with the given part sizes.
pub fn multipartite(sizes: &[usize], seed: u64, extra_colors: u32) -> InstanceFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Graph::complete_multipartite(sizes);
    instance_around(g, &mut rng, extra_colors)
}

/// Draws per-vertex lists of size `d(v) + 2 + extra` from the color pool
/// `1..=(Δ + 4 + extra)` and samples two proper colorings greedily along
/// shuffled vertex orders; degree-plus-two list sizes guarantee success.
fn instance_around(g: Graph, rng: &mut ChaCha8Rng, extra_colors: u32) -> InstanceFile {
    let n = g.n();
    let extra = extra_colors as usize;
    let pool: Vec<Color> = (1..=(g.max_degree() + 4 + extra) as Color).collect();
    let mut lists: Vec<Vec<Color>> = Vec::with_capacity(n);
    for v in 0..n {
        let want = (g.degree(v) + 2 + extra).min(pool.len());
        let mut colors = pool.clone();
        colors.shuffle(rng);
        colors.truncate(want);
        colors.sort_unstable();
        lists.push(colors);
    }
    let assignment = ListAssignment::new(lists.clone());
    let alpha = greedy_coloring(&g, &assignment, rng);
    let beta = greedy_coloring(&g, &assignment, rng);
    InstanceFile {
        graph: crate::format::GraphFile {
            n,
            edges: g.edges().to_vec(),
        },
        lists,
        alpha: alpha.as_slice().to_vec(),
        beta: beta.as_slice().to_vec(),
    }
}

fn greedy_coloring(g: &Graph, lists: &ListAssignment, rng: &mut ChaCha8Rng) -> Coloring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for &v in &order {
        let available: Vec<Color> = lists
            .list(v)
            .iter()
            .copied()
            .filter(|&c| g.neighbors(v).iter().all(|&u| colors[u] != Some(c)))
            .collect();
        let &pick = available
            .choose(rng)
            .expect("degree-plus-two lists always leave a color");
        colors[v] = Some(pick);
    }
    Coloring::new(colors.into_iter().map(Option::unwrap).collect())
}
