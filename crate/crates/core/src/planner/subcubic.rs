//! Reductions for graphs of maximum degree at most three.
//!
//! Three rules cover every instance: a vertex isolated in some conflict
//! graph recolors directly; if every conflict is an isolated edge (the
//! color-shift digraph is a disjoint union of directed cycles), three
//! consecutive cycle vertices rotate; otherwise some conflict graph has a
//! component on three or more vertices, and a cover-based procedure makes
//! the colorings agree on all of it.

use super::{
    invariant, run_levels, MuWitness, Planned, PlannerError, Reduction, ReductionKind,
    StepEmitter,
};
use crate::coloring::{color_graph, color_shift, Color, Instance, PlanSide};
use crate::graph::{degree1_free_cover, max_matching, Graph};

/// Builds a recoloring plan of length at most `n + μ` for a graph of
/// maximum degree at most three.
pub fn plan_subcubic(instance: &Instance) -> Result<Planned, PlannerError> {
    let max_degree = instance.graph().max_degree();
    if max_degree > 3 {
        return Err(PlannerError::DegreeTooHigh { max_degree });
    }
    run_levels(instance, |inst| {
        if let Some(r) = reduce_isolated(inst)? {
            return Ok(r);
        }
        if let Some(r) = reduce_cycle_triple(inst)? {
            return Ok(r);
        }
        if let Some(r) = agree_on_component(inst)? {
            return Ok(r);
        }
        Err(invariant(
            "max-degree-3 planner",
            "no reduction applies to a nonempty instance",
        ))
    })
}

/// Every color appearing in either endpoint coloring, ascending.
pub(crate) fn colors_in_play(instance: &Instance) -> Vec<Color> {
    let mut colors: Vec<Color> = instance
        .alpha()
        .as_slice()
        .iter()
        .chain(instance.beta().as_slice())
        .copied()
        .collect();
    colors.sort_unstable();
    colors.dedup();
    colors
}

/// Settles one vertex that is isolated in some conflict graph: it holds a
/// color `c` in exactly one endpoint coloring and no neighbor holds `c` in
/// either, so the opposite side recolors it to `c` in a single step.
/// Scans first for forward steps (vertex holds `c` in the target coloring),
/// then backward, colors ascending and vertices ascending within each pass.
pub fn reduce_isolated(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let (alpha, beta) = (instance.alpha(), instance.beta());
    for side in [PlanSide::Forward, PlanSide::Backward] {
        for &c in &colors_in_play(instance) {
            let gc = color_graph(instance.graph(), alpha, beta, c);
            for &v in gc.vertices() {
                if !gc.is_isolated(v) || alpha.get(v) == beta.get(v) {
                    continue;
                }
                let holds_in_target = match side {
                    PlanSide::Forward => beta.get(v) == c,
                    PlanSide::Backward => alpha.get(v) == c,
                };
                if !holds_in_target {
                    continue;
                }
                let mut em = StepEmitter::new(instance);
                em.emit(side, v, c)?;
                return em
                    .finish(
                        ReductionKind::IsolatedVertex,
                        vec![v],
                        0,
                        MuWitness::Edges(Vec::new()),
                    )
                    .map(Some);
            }
        }
    }
    Ok(None)
}

/// When every vertex has exactly one incoming and one outgoing arc in the
/// color-shift digraph (equivalently, every conflict-graph component is a
/// single edge), rotates three consecutive vertices of the cycle through
/// vertex 0: the third parks on a spare color, the middle two land on their
/// targets. Removes two adjacent vertices for three steps, certified by the
/// edge between them.
pub fn reduce_cycle_triple(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let (alpha, beta) = (instance.alpha(), instance.beta());
    if (0..n).any(|v| alpha.get(v) == beta.get(v)) {
        return Ok(None);
    }
    let shift = color_shift(g, alpha, beta);
    if (0..n).any(|v| shift.out_degree(v) != 1 || shift.in_degree(v) != 1) {
        return Ok(None);
    }
    let u = 0;
    let v = shift.out_neighbors(u)[0];
    let w = shift.out_neighbors(v)[0];

    let mut em = StepEmitter::new(instance);
    // Park w on a color clear of its neighbors and of v's target; that also
    // rules out w's own current color, which equals β(v).
    let blocked = beta.get(v);
    let junk = instance
        .lists()
        .list(w)
        .iter()
        .copied()
        .find(|&c| {
            c != blocked
                && !g
                    .neighbors(w)
                    .iter()
                    .any(|&x| em.current(PlanSide::Forward).get(x) == c)
        })
        .ok_or_else(|| invariant("cycle rotation", format!("no parking color for vertex {w}")))?;
    em.emit(PlanSide::Forward, w, junk)?;
    em.emit(PlanSide::Forward, v, beta.get(v))?;
    em.emit(PlanSide::Forward, u, beta.get(u))?;
    em.finish(
        ReductionKind::CycleTriple,
        vec![u, v],
        1,
        MuWitness::Edges(vec![(u.min(v), u.max(v))]),
    )
    .map(Some)
}

/// The largest conflict-graph component on at least three vertices, with its
/// color. Ties prefer the smallest color, then the smallest member vertex.
pub fn largest_conflict_component(instance: &Instance) -> Option<(Color, Vec<usize>)> {
    let mut best: Option<(Color, Vec<usize>)> = None;
    for &c in &colors_in_play(instance) {
        let gc = color_graph(instance.graph(), instance.alpha(), instance.beta(), c);
        for comp in gc.components() {
            if comp.len() < 3 {
                continue;
            }
            let better = match &best {
                None => true,
                Some((_, held)) => comp.len() > held.len(),
            };
            if better {
                best = Some((c, comp));
            }
        }
    }
    best
}

/// Makes both colorings agree across an entire conflict-graph component of
/// size at least three.
///
/// With `V₀` the chosen component over color `c`, a minimum vertex cover `W`
/// of the component (adjusted so no cover vertex has degree one in it) is
/// settled first: each cover vertex takes a free color on both sides, or —
/// when it has none — its unique blocking neighbor parks and the vertex
/// copies its other side's color. Everyone else in `V₀` then lands on `c` on
/// whichever side still differs. Removes `V₀` in at most `|W| + |V₀|` steps,
/// certified by a maximum matching of the component (size `|W|`).
pub fn agree_on_component(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let Some((c, v0)) = largest_conflict_component(instance) else {
        return Ok(None);
    };
    let g = instance.graph();
    let gc = color_graph(g, instance.alpha(), instance.beta(), c);

    // The component as a standalone graph on local ids 0..|V₀|.
    let local_of = |v: usize| v0.binary_search(&v).ok();
    let mut local_edges = Vec::new();
    for &(a, b) in gc.edges() {
        if let (Some(la), Some(lb)) = (local_of(a), local_of(b)) {
            local_edges.push((la, lb));
        }
    }
    let comp_graph = Graph::new(v0.len(), &local_edges)
        .map_err(|e| invariant("component extraction", e))?;
    let cover = degree1_free_cover(&comp_graph).map_err(|e| invariant("component cover", e))?;
    let matching = max_matching(&comp_graph);
    if matching.len() != cover.len() {
        return Err(invariant(
            "component cover",
            format!(
                "cover size {} does not match matching size {}",
                cover.len(),
                matching.len()
            ),
        ));
    }
    let w_set: Vec<usize> = cover.vertices().iter().map(|&i| v0[i]).collect();
    let certificate: Vec<(usize, usize)> = matching
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (v0[a], v0[b]);
            (x.min(y), x.max(y))
        })
        .collect();

    let mut em = StepEmitter::new(instance);

    // Phase 1: settle the cover.
    for &w in &w_set {
        let free = em.free_colors_now(w);
        if let Some(&cstar) = free.first() {
            if cstar == c {
                return Err(invariant(
                    "component cover",
                    format!("free color of cover vertex {w} equals the component color {c}"),
                ));
            }
            for side in [PlanSide::Forward, PlanSide::Backward] {
                if em.current(side).get(w) != cstar {
                    em.emit(side, w, cstar)?;
                }
            }
        } else {
            // No free color: w still holds c on one side; on that side its
            // other-side target is blocked by exactly one neighbor.
            let side_c = if em.current(PlanSide::Forward).get(w) == c {
                PlanSide::Forward
            } else if em.current(PlanSide::Backward).get(w) == c {
                PlanSide::Backward
            } else {
                return Err(invariant(
                    "component cover",
                    format!("cover vertex {w} no longer holds the component color {c}"),
                ));
            };
            let side_o = side_c.other();
            let target = em.current(side_o).get(w);
            let blockers: Vec<usize> = g
                .neighbors(w)
                .iter()
                .copied()
                .filter(|&x| em.current(side_c).get(x) == target)
                .collect();
            let incoming = g
                .neighbors(w)
                .iter()
                .filter(|&&x| em.current(side_o).get(x) == c)
                .count();
            if blockers.len() != 1 {
                return Err(invariant(
                    "component cover",
                    format!(
                        "vertex {w} without a free color should have exactly one blocking \
                         neighbor, found {}",
                        blockers.len()
                    ),
                ));
            }
            if !(1..=2).contains(&incoming) {
                return Err(invariant(
                    "component cover",
                    format!(
                        "vertex {w} without a free color should have one or two incoming \
                         conflicts, found {incoming}"
                    ),
                ));
            }
            let u = blockers[0];
            let junk = instance
                .lists()
                .list(u)
                .iter()
                .copied()
                .find(|&col| {
                    col != em.current(side_c).get(u)
                        && !g
                            .neighbors(u)
                            .iter()
                            .any(|&x| em.current(side_c).get(x) == col)
                })
                .ok_or_else(|| {
                    invariant("component cover", format!("no parking color for vertex {u}"))
                })?;
            em.emit(side_c, u, junk)?;
            em.emit(side_c, w, target)?;
        }
    }

    // Phase 1 leaves every cover vertex agreeing on a non-c color, and every
    // non-cover component vertex holding c on exactly one side.
    for &w in &w_set {
        let (f, b) = (
            em.current(PlanSide::Forward).get(w),
            em.current(PlanSide::Backward).get(w),
        );
        if f != b || f == c {
            return Err(invariant(
                "component cover",
                format!("cover vertex {w} should agree on a color other than {c}"),
            ));
        }
    }
    let in_cover = |v: usize| w_set.binary_search(&v).is_ok();
    for &v in &v0 {
        if in_cover(v) {
            continue;
        }
        let holds_f = em.current(PlanSide::Forward).get(v) == c;
        let holds_b = em.current(PlanSide::Backward).get(v) == c;
        if holds_f == holds_b {
            return Err(invariant(
                "component cover",
                format!("vertex {v} should hold color {c} on exactly one side"),
            ));
        }
    }

    // Phase 2: the rest of the component lands on c.
    for &v in &v0 {
        if in_cover(v) {
            continue;
        }
        let side = if em.current(PlanSide::Forward).get(v) == c {
            PlanSide::Backward
        } else {
            PlanSide::Forward
        };
        em.emit(side, v, c)?;
    }

    let claim = w_set.len();
    em.finish(
        ReductionKind::ComponentCover,
        v0,
        claim,
        MuWitness::Edges(certificate),
    )
    .map(Some)
}
