//! Colorings, per-vertex color lists, recoloring steps and plans, and the
//! conflict structures that drive plan construction: the color-shift digraph
//! (who blocks whom between the two endpoint colorings) and per-color
//! conflict graphs.

use crate::graph::Graph;
use std::fmt;
use thiserror::Error;

/// Colors are small nonnegative integers; no contiguity is assumed.
pub type Color = u32;

/// Which endpoint coloring a step or diagnostic refers to: plans grow from
/// the start coloring forwards and from the target coloring backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlanSide {
    Forward,
    Backward,
}

impl PlanSide {
    pub fn other(self) -> PlanSide {
        match self {
            PlanSide::Forward => PlanSide::Backward,
            PlanSide::Backward => PlanSide::Forward,
        }
    }
}

impl fmt::Display for PlanSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanSide::Forward => write!(f, "forward"),
            PlanSide::Backward => write!(f, "backward"),
        }
    }
}

/// A color list per vertex, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// The same list for every one of `n` vertices.
    pub fn uniform(n: usize, colors: &[Color]) -> Self {
        ListAssignment::new(vec![colors.to_vec(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Color]> {
        self.lists.iter().map(Vec::as_slice)
    }
}

/// A total assignment of colors to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }
}

impl From<Vec<Color>> for Coloring {
    fn from(colors: Vec<Color>) -> Self {
        Coloring::new(colors)
    }
}

/// Whether no edge of `g` joins two vertices of equal color.
pub fn is_proper(g: &Graph, coloring: &Coloring) -> bool {
    first_conflict(g, coloring).is_none()
}

/// The first edge (in normalized edge order) with equal endpoint colors.
pub fn first_conflict(g: &Graph, coloring: &Coloring) -> Option<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| coloring.get(u) == coloring.get(v))
}

/// A single recoloring move: vertex `vertex` takes color `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub vertex: usize,
    pub to: Color,
}

impl Step {
    pub fn new(vertex: usize, to: Color) -> Self {
        Step { vertex, to }
    }
}

/// A recoloring plan: steps applied from the start coloring, plus steps
/// applied from the target coloring, meeting in a common coloring.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Plan {
    pub forward: Vec<Step>,
    pub backward: Vec<Step>,
}

impl Plan {
    /// Total number of recoloring moves in the combined plan.
    pub fn len(&self) -> usize {
        self.forward.len() + self.backward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty() && self.backward.is_empty()
    }
}

/// Applies `step` without validation.
pub fn apply_step(coloring: &mut Coloring, step: Step) {
    coloring.set(step.vertex, step.to);
}

/// Why a step sequence fails to replay. `index` is the offending step's
/// position in the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {index}: vertex {vertex} out of range")]
    VertexOutOfRange { index: usize, vertex: usize },
    #[error("step {index}: color {color} is not in the list of vertex {vertex}")]
    ColorNotInList {
        index: usize,
        vertex: usize,
        color: Color,
    },
    #[error("step {index}: vertex {vertex} already has color {color}")]
    NoChange {
        index: usize,
        vertex: usize,
        color: Color,
    },
    #[error("step {index}: recoloring vertex {u} to {color} collides with neighbor {v}")]
    MonochromeEdge {
        index: usize,
        u: usize,
        v: usize,
        color: Color,
    },
}

/// Replays `steps` from `start`, checking at every step that the recolored
/// vertex exists, takes a genuinely new color from its own list, and that the
/// coloring stays proper. Returns the whole trajectory (`steps.len() + 1`
/// colorings, starting with `start`).
pub fn replay(
    g: &Graph,
    lists: &ListAssignment,
    start: &Coloring,
    steps: &[Step],
) -> Result<Vec<Coloring>, ReplayError> {
    let mut trajectory = Vec::with_capacity(steps.len() + 1);
    let mut current = start.clone();
    trajectory.push(current.clone());
    for (index, step) in steps.iter().enumerate() {
        let Step { vertex, to } = *step;
        if vertex >= g.n() {
            return Err(ReplayError::VertexOutOfRange { index, vertex });
        }
        if !lists.contains(vertex, to) {
            return Err(ReplayError::ColorNotInList {
                index,
                vertex,
                color: to,
            });
        }
        if current.get(vertex) == to {
            return Err(ReplayError::NoChange {
                index,
                vertex,
                color: to,
            });
        }
        if let Some(&nb) = g.neighbors(vertex).iter().find(|&&u| current.get(u) == to) {
            return Err(ReplayError::MonochromeEdge {
                index,
                u: vertex,
                v: nb,
                color: to,
            });
        }
        current.set(vertex, to);
        trajectory.push(current.clone());
    }
    Ok(trajectory)
}

/// Why a two-sided plan fails to combine into one recoloring sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StitchError {
    #[error("{side} replay failed: {source}")]
    Replay {
        side: PlanSide,
        source: ReplayError,
    },
    #[error(
        "plan sides do not meet: vertex {vertex} ends at {forward_color} forward \
         but {backward_color} backward"
    )]
    MeetMismatch {
        vertex: usize,
        forward_color: Color,
        backward_color: Color,
    },
}

/// A graph/lists/start/target bundle, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    lists: ListAssignment,
    alpha: Coloring,
    beta: Coloring,
}

/// Why a proposed instance is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("{what} has {got} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("vertex {vertex} has a list of {list_len} colors but needs {required} (degree + 2)")]
    ListTooSmall {
        vertex: usize,
        list_len: usize,
        required: usize,
    },
    #[error("{side} coloring gives vertex {vertex} color {color}, which is not in its list")]
    ColorNotInList {
        side: PlanSide,
        vertex: usize,
        color: Color,
    },
    #[error("{side} coloring is improper: edge ({u}, {v}) is monochrome in color {color}")]
    MonochromeEdge {
        side: PlanSide,
        u: usize,
        v: usize,
        color: Color,
    },
}

impl Instance {
    /// Validates lengths, the degree-plus-two list-size condition, list
    /// membership of both endpoint colorings, and properness of both.
    pub fn new(
        graph: Graph,
        lists: ListAssignment,
        alpha: Coloring,
        beta: Coloring,
    ) -> Result<Self, InstanceError> {
        let n = graph.n();
        if lists.len() != n {
            return Err(InstanceError::LengthMismatch {
                what: "list assignment",
                expected: n,
                got: lists.len(),
            });
        }
        if alpha.len() != n {
            return Err(InstanceError::LengthMismatch {
                what: "start coloring",
                expected: n,
                got: alpha.len(),
            });
        }
        if beta.len() != n {
            return Err(InstanceError::LengthMismatch {
                what: "target coloring",
                expected: n,
                got: beta.len(),
            });
        }
        for v in 0..n {
            let required = graph.degree(v) + 2;
            if lists.list(v).len() < required {
                return Err(InstanceError::ListTooSmall {
                    vertex: v,
                    list_len: lists.list(v).len(),
                    required,
                });
            }
        }
        for (side, coloring) in [(PlanSide::Forward, &alpha), (PlanSide::Backward, &beta)] {
            for v in 0..n {
                if !lists.contains(v, coloring.get(v)) {
                    return Err(InstanceError::ColorNotInList {
                        side,
                        vertex: v,
                        color: coloring.get(v),
                    });
                }
            }
            if let Some((u, v)) = first_conflict(&graph, coloring) {
                return Err(InstanceError::MonochromeEdge {
                    side,
                    u,
                    v,
                    color: coloring.get(u),
                });
            }
        }
        Ok(Instance {
            graph,
            lists,
            alpha,
            beta,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub fn alpha(&self) -> &Coloring {
        &self.alpha
    }

    pub fn beta(&self) -> &Coloring {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Combines the two sides of `plan` into a single step sequence leading from
/// the instance's start coloring to its target coloring. Backward steps are
/// replayed from the target, then reversed: each reversed step restores the
/// color the vertex had just before that step.
pub fn stitch(instance: &Instance, plan: &Plan) -> Result<Vec<Step>, StitchError> {
    let g = instance.graph();
    let lists = instance.lists();
    let forward_traj =
        replay(g, lists, instance.alpha(), &plan.forward).map_err(|source| StitchError::Replay {
            side: PlanSide::Forward,
            source,
        })?;
    let backward_traj =
        replay(g, lists, instance.beta(), &plan.backward).map_err(|source| StitchError::Replay {
            side: PlanSide::Backward,
            source,
        })?;
    let meet_fwd = forward_traj.last().expect("trajectory includes start");
    let meet_bwd = backward_traj.last().expect("trajectory includes start");
    for v in 0..instance.n() {
        if meet_fwd.get(v) != meet_bwd.get(v) {
            return Err(StitchError::MeetMismatch {
                vertex: v,
                forward_color: meet_fwd.get(v),
                backward_color: meet_bwd.get(v),
            });
        }
    }
    let mut combined = plan.forward.clone();
    for (i, step) in plan.backward.iter().enumerate().rev() {
        // Undo step i: the vertex returns to its color in the coloring the
        // backward replay had just before applying step i.
        combined.push(Step::new(step.vertex, backward_traj[i].get(step.vertex)));
    }
    Ok(combined)
}

/// The color-shift digraph between two colorings: an arc `u -> v` for every
/// edge `uv` with `beta(u) == alpha(v)` — recoloring `u` to its target color
/// is blocked by `v` holding that color now.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorShiftDigraph {
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl ColorShiftDigraph {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.incoming[v].len()
    }
}

/// Builds the color-shift digraph of `(alpha, beta)` on `g`.
pub fn color_shift(g: &Graph, alpha: &Coloring, beta: &Coloring) -> ColorShiftDigraph {
    let n = g.n();
    let mut arcs = Vec::new();
    let mut out = vec![Vec::new(); n];
    let mut incoming = vec![Vec::new(); n];
    for (u, out_u) in out.iter_mut().enumerate() {
        for &v in g.neighbors(u) {
            if beta.get(u) == alpha.get(v) {
                arcs.push((u, v));
                out_u.push(v);
                incoming[v].push(u);
            }
        }
    }
    arcs.sort_unstable();
    ColorShiftDigraph {
        arcs,
        out,
        incoming,
    }
}

/// The conflict graph of one color `c`: its vertices hold `c` in at least one
/// of the two colorings, and its edges are the graph edges along which `c`
/// would collide — one endpoint holding `c` now, the other targeting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorGraph {
    color: Color,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl ColorGraph {
    pub fn color(&self) -> Color {
        self.color
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Degree of a member vertex within this conflict graph.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }

    /// Connected components (isolated members are singleton components),
    /// each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
        for &v in &self.vertices {
            adj.entry(v).or_default();
        }
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen: std::collections::HashSet<usize> = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &adj[&v] {
                    if seen.insert(u) {
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Builds the conflict graph of color `c` between `alpha` and `beta` on `g`.
pub fn color_graph(g: &Graph, alpha: &Coloring, beta: &Coloring, c: Color) -> ColorGraph {
    let vertices: Vec<usize> = (0..g.n())
        .filter(|&v| alpha.get(v) == c || beta.get(v) == c)
        .collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            (alpha.get(u) == c && beta.get(v) == c) || (beta.get(u) == c && alpha.get(v) == c)
        })
        .collect();
    ColorGraph {
        color: c,
        vertices,
        edges,
    }
}

/// Colors in `v`'s list that no neighbor holds in either coloring; recoloring
/// `v` to such a color is safe on both sides at once.
pub fn free_colors(
    g: &Graph,
    lists: &ListAssignment,
    alpha: &Coloring,
    beta: &Coloring,
    v: usize,
) -> Vec<Color> {
    lists
        .list(v)
        .iter()
        .copied()
        .filter(|&c| {
            g.neighbors(v)
                .iter()
                .all(|&u| alpha.get(u) != c && beta.get(u) != c)
        })
        .collect()
}
