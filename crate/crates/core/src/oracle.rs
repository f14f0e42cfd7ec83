//! Exhaustive ground truth at small scale: enumerate every proper list
//! coloring, connect colorings differing at exactly one vertex, and answer
//! distance/diameter/connectivity questions by breadth-first search.
//!
//! Enumeration is capped by an explicit state budget; spaces above the cap
//! are refused rather than silently truncated, so every answer returned is
//! exact for the full state space.

use crate::coloring::{Color, Coloring, Instance, ListAssignment, Plan, Step};
use crate::graph::Graph;
use rayon::prelude::*;
use thiserror::Error;

/// Default cap on the number of enumerated colorings.
pub const DEFAULT_STATE_BUDGET: usize = 5_000_000;

/// Knobs for the exhaustive search.
#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Refuse to enumerate more than this many colorings.
    pub state_budget: usize,
    /// Require every list to have at least degree-plus-two colors. Disable
    /// only for experiments on spaces that may legitimately be disconnected.
    pub require_degree_plus_two: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            state_budget: DEFAULT_STATE_BUDGET,
            require_degree_plus_two: true,
        }
    }
}

/// Why the exhaustive search refused to run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("state space exceeds the budget of {budget} colorings")]
    BudgetExceeded { budget: usize },
    #[error(
        "vertex {vertex} has {list_len} colors but degree-plus-two needs {required}; \
         pass require_degree_plus_two = false to search anyway"
    )]
    DegreeCondition {
        vertex: usize,
        list_len: usize,
        required: usize,
    },
}

/// The reconfiguration graph: every proper list coloring of the input graph,
/// with edges between colorings differing at exactly one vertex. Colorings
/// are stored in lexicographic order; adjacency is compressed sparse rows.
#[derive(Debug, Clone)]
pub struct ReconfGraph {
    colorings: Vec<Coloring>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl ReconfGraph {
    /// Enumerates the state space of `(g, lists)` and wires up adjacency.
    pub fn build(
        g: &Graph,
        lists: &ListAssignment,
        opts: &OracleOptions,
    ) -> Result<Self, OracleError> {
        if opts.require_degree_plus_two {
            for v in 0..g.n() {
                let required = g.degree(v) + 2;
                if lists.list(v).len() < required {
                    return Err(OracleError::DegreeCondition {
                        vertex: v,
                        list_len: lists.list(v).len(),
                        required,
                    });
                }
            }
        }
        let colorings = enumerate_proper(g, lists, opts.state_budget)?;

        // Adjacency: for every coloring, try every single-vertex recoloring
        // and look the result up by binary search (enumeration is sorted).
        let neighbor_lists: Vec<Vec<usize>> = colorings
            .par_iter()
            .map(|coloring| {
                let mut scratch: Vec<Color> = coloring.as_slice().to_vec();
                let mut out = Vec::new();
                for v in 0..g.n() {
                    let old = scratch[v];
                    for &c in lists.list(v) {
                        if c == old {
                            continue;
                        }
                        if g.neighbors(v).iter().any(|&u| scratch[u] == c) {
                            continue;
                        }
                        scratch[v] = c;
                        let idx = colorings
                            .binary_search_by(|probe| probe.as_slice().cmp(&scratch))
                            .expect("proper neighbor coloring is enumerated");
                        out.push(idx);
                        scratch[v] = old;
                    }
                    scratch[v] = old;
                }
                out
            })
            .collect();

        let mut offsets = Vec::with_capacity(colorings.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for list in &neighbor_lists {
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Ok(ReconfGraph {
            colorings,
            offsets,
            targets,
        })
    }

    /// Number of proper colorings in the space.
    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn coloring(&self, i: usize) -> &Coloring {
        &self.colorings[i]
    }

    pub fn index_of(&self, coloring: &Coloring) -> Option<usize> {
        self.colorings
            .binary_search_by(|probe| probe.as_slice().cmp(coloring.as_slice()))
            .ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// BFS distances from `start`; unreachable states get `usize::MAX`.
    pub fn bfs_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in self.neighbors(i) {
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    /// Exact recoloring distance between two states, if connected.
    pub fn distance(&self, from: usize, to: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(i) = queue.pop_front() {
            if i == to {
                return Some(dist[i]);
            }
            for &j in self.neighbors(i) {
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        None
    }
}

/// Enumerates all proper list colorings in lexicographic order (vertices
/// ascending, colors ascending), refusing once the budget is exceeded.
fn enumerate_proper(
    g: &Graph,
    lists: &ListAssignment,
    budget: usize,
) -> Result<Vec<Coloring>, OracleError> {
    fn rec(
        v: usize,
        g: &Graph,
        lists: &ListAssignment,
        budget: usize,
        cur: &mut Vec<Color>,
        out: &mut Vec<Coloring>,
    ) -> Result<(), OracleError> {
        if v == g.n() {
            if out.len() >= budget {
                return Err(OracleError::BudgetExceeded { budget });
            }
            out.push(Coloring::new(cur.clone()));
            return Ok(());
        }
        for &c in lists.list(v) {
            // Only earlier vertices are colored yet.
            if g.neighbors(v).iter().all(|&u| u >= v || cur[u] != c) {
                cur[v] = c;
                rec(v + 1, g, lists, budget, cur, out)?;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut cur = vec![0; g.n()];
    rec(0, g, lists, budget, &mut cur, &mut out)?;
    Ok(out)
}

/// Exact distance between the two endpoint colorings of `instance`, or
/// `Ok(None)` when they lie in different components of the state space.
pub fn bfs_distance(instance: &Instance, opts: &OracleOptions) -> Result<Option<usize>, OracleError> {
    let space = ReconfGraph::build(instance.graph(), instance.lists(), opts)?;
    let from = space
        .index_of(instance.alpha())
        .expect("validated start coloring is enumerated");
    let to = space
        .index_of(instance.beta())
        .expect("validated target coloring is enumerated");
    Ok(space.distance(from, to))
}

/// Summary of an exhaustive state-space search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfGraphStats {
    /// Number of proper list colorings.
    pub vertex_count: usize,
    /// Whether every coloring can reach every other.
    pub connected: bool,
    /// Exact diameter when connected (`None` when disconnected).
    pub diameter: Option<usize>,
    /// A pair of colorings realizing the diameter.
    pub witness: Option<(Coloring, Coloring)>,
}

/// Exhaustively computes connectivity and exact diameter of the recoloring
/// state space of `(g, lists)`. All-source BFS runs in parallel; ties among
/// diameter witnesses break deterministically (smallest source, then target).
pub fn diameter(
    g: &Graph,
    lists: &ListAssignment,
    opts: &OracleOptions,
) -> Result<ReconfGraphStats, OracleError> {
    let space = ReconfGraph::build(g, lists, opts)?;
    if space.is_empty() {
        return Ok(ReconfGraphStats {
            vertex_count: 0,
            connected: true,
            diameter: None,
            witness: None,
        });
    }
    let from_zero = space.bfs_from(0);
    if from_zero.contains(&usize::MAX) {
        return Ok(ReconfGraphStats {
            vertex_count: space.len(),
            connected: false,
            diameter: None,
            witness: None,
        });
    }

    // (eccentricity, source, farthest target), preferring larger
    // eccentricity, then smaller source, then smaller target.
    let best = (0..space.len())
        .into_par_iter()
        .map(|src| {
            let dist = space.bfs_from(src);
            let (tgt, ecc) = dist
                .iter()
                .copied()
                .enumerate()
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .expect("nonempty space");
            (ecc, src, tgt)
        })
        .reduce(
            || (0, usize::MAX, usize::MAX),
            |a, b| {
                let better = b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2));
                if better {
                    b
                } else {
                    a
                }
            },
        );
    let (ecc, src, tgt) = best;
    Ok(ReconfGraphStats {
        vertex_count: space.len(),
        connected: true,
        diameter: Some(ecc),
        witness: Some((space.coloring(src).clone(), space.coloring(tgt).clone())),
    })
}

/// A shortest recoloring plan found by exhaustive search: all steps forward,
/// none backward. `Ok(None)` when the endpoints are disconnected.
pub fn oracle_plan(instance: &Instance, opts: &OracleOptions) -> Result<Option<Plan>, OracleError> {
    let space = ReconfGraph::build(instance.graph(), instance.lists(), opts)?;
    let from = space
        .index_of(instance.alpha())
        .expect("validated start coloring is enumerated");
    let to = space
        .index_of(instance.beta())
        .expect("validated target coloring is enumerated");

    let mut parent = vec![usize::MAX; space.len()];
    let mut seen = vec![false; space.len()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    let mut found = from == to;
    'bfs: while let Some(i) = queue.pop_front() {
        for &j in space.neighbors(i) {
            if !seen[j] {
                seen[j] = true;
                parent[j] = i;
                if j == to {
                    found = true;
                    break 'bfs;
                }
                queue.push_back(j);
            }
        }
    }
    if !found {
        return Ok(None);
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    let mut forward = Vec::with_capacity(path.len().saturating_sub(1));
    for w in path.windows(2) {
        let (a, b) = (space.coloring(w[0]), space.coloring(w[1]));
        let v = (0..instance.n())
            .find(|&v| a.get(v) != b.get(v))
            .expect("adjacent states differ somewhere");
        forward.push(Step::new(v, b.get(v)));
    }
    Ok(Some(Plan {
        forward,
        backward: Vec::new(),
    }))
}
