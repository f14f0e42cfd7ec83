//! Shared helpers for the integration tests: instance builders, a full
//! plan validator (replay + stitch + ledger audit + length bound), and
//! seeded random instance generators.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use recolor_core::coloring::{replay, stitch, Color, Coloring, Instance, ListAssignment};
use recolor_core::graph::{max_matching, Graph};
use recolor_core::oracle::{bfs_distance, OracleOptions};
use recolor_core::planner::{audit_ledger, Planned};

pub fn uniform_instance(
    g: Graph,
    colors: &[Color],
    alpha: Vec<Color>,
    beta: Vec<Color>,
) -> Instance {
    let lists = ListAssignment::uniform(g.n(), colors);
    Instance::new(g, lists, Coloring::new(alpha), Coloring::new(beta))
        .expect("test instance should be valid")
}

pub fn listed_instance(
    g: Graph,
    lists: Vec<Vec<Color>>,
    alpha: Vec<Color>,
    beta: Vec<Color>,
) -> Instance {
    Instance::new(
        g,
        ListAssignment::new(lists),
        Coloring::new(alpha),
        Coloring::new(beta),
    )
    .expect("test instance should be valid")
}

/// Validates a plan end to end and returns its total length:
///
/// * stitching succeeds and the stitched forward walk really goes from the
///   start coloring to the target coloring through proper colorings only;
/// * the ledger audit passes and its budget figures are consistent;
/// * the total length respects `n + μ`.
pub fn check_plan(instance: &Instance, planned: &Planned) -> usize {
    let steps = stitch(instance, &planned.plan).expect("plan should stitch");
    assert_eq!(steps.len(), planned.plan.len());

    let trajectory = replay(instance.graph(), instance.lists(), instance.alpha(), &steps)
        .expect("stitched walk should replay");
    assert_eq!(
        trajectory.last().unwrap(),
        instance.beta(),
        "stitched walk must end at the target coloring"
    );

    let mu = max_matching(instance.graph()).len();
    assert!(
        planned.plan.len() <= instance.n() + mu,
        "plan uses {} steps, above the bound {} + {mu}",
        planned.plan.len(),
        instance.n()
    );

    let audit = audit_ledger(instance, planned).expect("ledger should audit cleanly");
    assert_eq!(audit.vertex_count, instance.n());
    assert_eq!(audit.matching_number, mu);
    assert_eq!(audit.total_steps, planned.plan.len());
    assert!(audit.total_steps <= audit.step_budget);
    assert_eq!(audit.levels, planned.ledger.len());

    planned.plan.len()
}

pub fn oracle_distance(instance: &Instance) -> usize {
    bfs_distance(instance, &OracleOptions::default())
        .expect("oracle should stay within budget")
        .expect("endpoints should be connected")
}

/// Random subcubic instance: a graph of maximum degree three on `1..=max_n`
/// vertices, per-vertex lists of size `d(v) + 2` (sometimes one larger)
/// drawn from a small palette, and two greedily sampled proper colorings.
pub fn random_subcubic_instance(seed: u64, max_n: usize) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < 3 && degree[v] < 3 && rng.gen_bool(0.7) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    let g = Graph::new(n, &edges).unwrap();
    random_lists_and_colorings(g, &mut rng)
}

/// Random complete multipartite instance over the given part sizes, with
/// uniform lists of size `Δ + 2` (sometimes one larger) and two greedily
/// sampled proper colorings.
pub fn random_multipartite_instance(sizes: &[usize], seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Graph::complete_multipartite(sizes);
    random_lists_and_colorings(g, &mut rng)
}

fn random_lists_and_colorings(g: Graph, rng: &mut ChaCha8Rng) -> Instance {
    let n = g.n();
    let palette_size = g.max_degree() + 4 + rng.gen_range(0..=2);
    let palette: Vec<Color> = (1..=palette_size as Color).collect();
    let mut lists: Vec<Vec<Color>> = Vec::with_capacity(n);
    for v in 0..n {
        let want = g.degree(v) + 2 + rng.gen_range(0..=1);
        let mut pool = palette.clone();
        pool.shuffle(rng);
        pool.truncate(want.min(pool.len()));
        lists.push(pool);
    }
    let lists = ListAssignment::new(lists);
    let alpha = greedy_coloring(&g, &lists, rng);
    let beta = greedy_coloring(&g, &lists, rng);
    Instance::new(g, lists, alpha, beta).expect("generated instance should be valid")
}

/// Samples a proper list coloring by visiting vertices in random order and
/// picking a random available color; `|L(v)| ≥ d(v) + 2` guarantees one.
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
            .expect("degree-plus-two lists always leave a choice");
        colors[v] = Some(pick);
    }
    Coloring::new(colors.into_iter().map(Option::unwrap).collect())
}

/// All integer partitions of `1..=max_n`, each sorted descending — the part
/// profiles of every complete multipartite graph on at most `max_n` vertices.
pub fn part_profiles_up_to(max_n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        extend(n, n, &mut Vec::new(), &mut out);
    }
    out
}
