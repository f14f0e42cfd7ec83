//! Reductions for complete multipartite graphs.
//!
//! The planner branches on the largest part. When it holds at least half the
//! vertices, conflicts involving the remaining parts are cleared color by
//! color, ending with a three-phase direct finish. Otherwise the parts are
//! balanced, the graph has a near-perfect matching, and a family of rules
//! built around uniquely-held colors ("cousins") peels vertices off until
//! the third-largest part can be swept wholesale.
//!
//! Every public probe inspects the instance and returns one certified
//! [`Reduction`] if its rule applies. Probes assume the zero-step pre-pass
//! has already dropped agreeing vertices and that earlier rules in the
//! priority order are inapplicable; outside that regime they may report an
//! internal-invariant error rather than emit an unsound step.

use super::subcubic::colors_in_play;
use super::{
    invariant, run_levels, MuWitness, Planned, PlannerError, Reduction, ReductionKind,
    StepEmitter,
};
use crate::coloring::{free_colors, Color, Coloring, Instance, PlanSide};
use crate::graph::{detect_multipartite, MultipartiteStructure};
use std::collections::BTreeSet;

/// Builds a recoloring plan of length at most `n + μ` for a complete
/// multipartite graph.
pub fn plan_multipartite(instance: &Instance) -> Result<Planned, PlannerError> {
    if detect_multipartite(instance.graph()).is_none() {
        return Err(PlannerError::NotMultipartite);
    }
    run_levels(instance, |inst| {
        let parts = parts_of(inst).map_err(|_| {
            invariant(
                "multipartite planner",
                "restriction lost the complete multipartite structure",
            )
        })?;
        if parts.num_parts() <= 1 {
            return finish_edgeless(inst)?.ok_or_else(|| {
                invariant("multipartite planner", "edgeless finish did not apply")
            });
        }
        if let Some(r) = reduce_no_conflict(inst)? {
            return Ok(r);
        }
        if 2 * parts.part(0).len() >= inst.n() {
            large_set_reduction(inst)?.ok_or_else(|| {
                invariant("multipartite planner", "dominant-part branch did not apply")
            })
        } else {
            if let Some(r) = reduce_cousin_multiplicity(inst)? {
                return Ok(r);
            }
            if let Some(r) = reduce_cousin_intersection(inst)? {
                return Ok(r);
            }
            if let Some(r) = reduce_double_pair(inst)? {
                return Ok(r);
            }
            if let Some(r) = reduce_third_part_majority(inst)? {
                return Ok(r);
            }
            finish_third_part_sweep(inst)?
                .ok_or_else(|| invariant("multipartite planner", "no reduction applies"))
        }
    })
}

fn parts_of(instance: &Instance) -> Result<MultipartiteStructure, PlannerError> {
    detect_multipartite(instance.graph()).ok_or(PlannerError::NotMultipartite)
}

/// Vertices currently holding color `c` under `coloring`, ascending.
fn holders(coloring: &Coloring, c: Color) -> Vec<usize> {
    (0..coloring.len())
        .filter(|&v| coloring.get(v) == c)
        .collect()
}

/// Settles every vertex in a single step when the graph has no edges:
/// each differing vertex takes its target color directly.
pub fn finish_edgeless(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let n = instance.n();
    if n == 0 || instance.graph().edge_count() > 0 {
        return Ok(None);
    }
    let mut em = StepEmitter::new(instance);
    for v in 0..n {
        let target = instance.beta().get(v);
        if em.current(PlanSide::Forward).get(v) != target {
            em.emit(PlanSide::Forward, v, target)?;
        }
    }
    em.finish(
        ReductionKind::EdgelessFinish,
        (0..n).collect(),
        0,
        MuWitness::Edges(Vec::new()),
    )
    .map(Some)
}

/// Settles one vertex whose target color is unblocked: if no neighbor of
/// `v` holds `β(v)` in the current start-side coloring, one forward step
/// lands `v`; the backward pass does the symmetric check against `α(v)`.
pub fn reduce_no_conflict(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let passes = [
        (PlanSide::Forward, alpha, beta),
        (PlanSide::Backward, beta, alpha),
    ];
    for (side, own, other) in passes {
        for v in 0..g.n() {
            let target = other.get(v);
            if own.get(v) == target {
                continue;
            }
            if g.neighbors(v).iter().any(|&x| own.get(x) == target) {
                continue;
            }
            let mut em = StepEmitter::new(instance);
            em.emit(side, v, target)?;
            return em
                .finish(
                    ReductionKind::NoConflict,
                    vec![v],
                    0,
                    MuWitness::Edges(Vec::new()),
                )
                .map(Some);
        }
    }
    Ok(None)
}

/// Reduction family for the case where the largest part holds at least half
/// the vertices. Tries, in order: clearing a color whose conflict lies
/// entirely outside the dominant part; vacating a color held exactly once
/// inside the dominant part; and the terminal three-phase direct finish.
/// Returns `None` only when the dominant part holds less than half.
pub fn large_set_reduction(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let parts = parts_of(instance)?;
    if parts.num_parts() <= 1 || 2 * parts.part(0).len() < instance.n() {
        return Ok(None);
    }
    if let Some(r) = large_outside_conflict(instance, &parts)? {
        return Ok(Some(r));
    }
    if let Some(r) = singleton_dominant_color(instance, &parts)? {
        return Ok(Some(r));
    }
    large_direct_finish(instance, &parts).map(Some)
}

/// A color both of whose holder classes live outside the dominant part, in
/// two different parts: the smaller class parks on spare colors and the
/// larger class lands on the color, all on the side that settles the larger
/// class. Removing the larger class is certified by the dominant part, which
/// every maximum matching must pair against.
fn large_outside_conflict(
    instance: &Instance,
    parts: &MultipartiteStructure,
) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    for &c in &colors_in_play(instance) {
        let av = holders(alpha, c);
        let bv = holders(beta, c);
        if av.is_empty() || bv.is_empty() {
            continue;
        }
        let pa = parts.part_of(av[0]);
        let pb = parts.part_of(bv[0]);
        if pa == pb || pa == 0 || pb == 0 {
            continue;
        }
        let (side, off, onto) = if av.len() <= bv.len() {
            (PlanSide::Forward, av, bv)
        } else {
            (PlanSide::Backward, bv, av)
        };
        let mut em = StepEmitter::new(instance);
        for &u in &off {
            let junk = instance
                .lists()
                .list(u)
                .iter()
                .copied()
                .find(|&col| {
                    col != c
                        && !g
                            .neighbors(u)
                            .iter()
                            .any(|&x| em.current(side).get(x) == col)
                })
                .ok_or_else(|| {
                    invariant("dominant-part conflict", format!("no spare color for vertex {u}"))
                })?;
            em.emit(side, u, junk)?;
        }
        for &v in &onto {
            em.emit(side, v, c)?;
        }
        let claim = onto.len();
        return em
            .finish(
                ReductionKind::LargeOutsideConflict,
                onto,
                claim,
                MuWitness::CoversComplement {
                    large_part: parts.part(0).to_vec(),
                },
            )
            .map(Some);
    }
    Ok(None)
}

/// A color held by exactly one dominant-part vertex on one side, with all
/// its other-side holders outside the dominant part: the singleton parks on
/// a spare color and the other-side class lands, freeing that class.
fn singleton_dominant_color(
    instance: &Instance,
    parts: &MultipartiteStructure,
) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let passes = [
        (PlanSide::Forward, alpha, beta),
        (PlanSide::Backward, beta, alpha),
    ];
    for (side, own, other) in passes {
        for &c in &colors_in_play(instance) {
            let ov = holders(own, c);
            if ov.len() != 1 || parts.part_of(ov[0]) != 0 {
                continue;
            }
            let w = ov[0];
            let tv = holders(other, c);
            if tv.is_empty() || tv.iter().any(|&x| parts.part_of(x) == 0) {
                continue;
            }
            let mut em = StepEmitter::new(instance);
            let junk = instance
                .lists()
                .list(w)
                .iter()
                .copied()
                .find(|&col| {
                    col != c
                        && !g
                            .neighbors(w)
                            .iter()
                            .any(|&x| em.current(side).get(x) == col)
                })
                .ok_or_else(|| {
                    invariant(
                        "dominant-part singleton",
                        format!("no spare color for vertex {w}"),
                    )
                })?;
            em.emit(side, w, junk)?;
            for &u in &tv {
                em.emit(side, u, c)?;
            }
            let claim = tv.len();
            return em
                .finish(
                    ReductionKind::SingletonLargeColor,
                    tv,
                    claim,
                    MuWitness::CoversComplement {
                        large_part: parts.part(0).to_vec(),
                    },
                )
                .map(Some);
        }
    }
    Ok(None)
}

/// Terminal rule of the dominant-part branch: every remaining color appears
/// at least twice inside the dominant part on both sides, so the small parts
/// park on colors clear of everyone else and of the dominant part's targets,
/// the dominant part lands, and the small parts land after it. Settles the
/// whole level in at most `n + μ` steps.
fn large_direct_finish(
    instance: &Instance,
    parts: &MultipartiteStructure,
) -> Result<Reduction, PlannerError> {
    let n = instance.n();
    let beta = instance.beta();
    let i1: Vec<usize> = parts.part(0).to_vec();
    let beta_i1: BTreeSet<Color> = i1.iter().map(|&v| beta.get(v)).collect();

    let mut em = StepEmitter::new(instance);
    for pi in 1..parts.num_parts() {
        for &u in parts.part(pi) {
            let mut banned = beta_i1.clone();
            {
                let cur = em.current(PlanSide::Forward);
                for x in 0..n {
                    if parts.part_of(x) != pi {
                        banned.insert(cur.get(x));
                    }
                }
                banned.insert(cur.get(u));
            }
            let junk = instance
                .lists()
                .list(u)
                .iter()
                .copied()
                .find(|col| !banned.contains(col))
                .ok_or_else(|| {
                    invariant(
                        "dominant-part finish",
                        format!("no parking color for vertex {u}"),
                    )
                })?;
            em.emit(PlanSide::Forward, u, junk)?;
        }
    }
    for &w in &i1 {
        let target = beta.get(w);
        if em.current(PlanSide::Forward).get(w) != target {
            em.emit(PlanSide::Forward, w, target)?;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| parts.part_of(v) != 0).collect();
    for &u in &rest {
        let target = beta.get(u);
        if em.current(PlanSide::Forward).get(u) != target {
            em.emit(PlanSide::Forward, u, target)?;
        }
    }
    let claim = rest.len();
    let certificate: Vec<(usize, usize)> = rest
        .iter()
        .zip(i1.iter())
        .map(|(&a, &b)| (a.min(b), a.max(b)))
        .collect();
    em.finish(
        ReductionKind::LargeDirectFinish,
        (0..n).collect(),
        claim,
        MuWitness::Edges(certificate),
    )
}

/// A uniquely-held color whose other-side class has two or more members:
/// the unique holder parks clear of its closed neighborhood and the whole
/// class lands on the color, all on one side. Removing the class (at least
/// two vertices of one part) drops the near-perfect matching by parity.
pub fn reduce_cousin_multiplicity(
    instance: &Instance,
) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let passes = [
        (PlanSide::Forward, alpha, beta),
        (PlanSide::Backward, beta, alpha),
    ];
    for (side, own, other) in passes {
        for w in 0..g.n() {
            if own.get(w) == other.get(w) {
                continue;
            }
            let a = own.get(w);
            if holders(own, a).len() != 1 {
                continue;
            }
            let mates = holders(other, a);
            if mates.len() < 2 {
                continue;
            }
            let mut em = StepEmitter::new(instance);
            let junk = instance
                .lists()
                .list(w)
                .iter()
                .copied()
                .find(|&col| {
                    col != em.current(side).get(w)
                        && !g
                            .neighbors(w)
                            .iter()
                            .any(|&x| em.current(side).get(x) == col)
                })
                .ok_or_else(|| {
                    invariant("cousin multiplicity", format!("no spare color for vertex {w}"))
                })?;
            em.emit(side, w, junk)?;
            for &u in &mates {
                em.emit(side, u, a)?;
            }
            return em
                .finish(ReductionKind::CousinMultiplicity, mates, 1, MuWitness::Parity)
                .map(Some);
        }
    }
    Ok(None)
}

/// A vertex unique in both colorings swaps with its two cousins (the unique
/// target-side holder of its start color and the unique start-side holder
/// of its target color, possibly one and the same vertex): the blocking
/// cousin parks, the vertex lands, the other cousin lands. Removes the
/// vertex and its target-side cousin, an adjacent pair.
pub fn reduce_cousin_intersection(
    instance: &Instance,
) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    for v in 0..g.n() {
        if alpha.get(v) == beta.get(v) {
            continue;
        }
        if holders(alpha, alpha.get(v)).len() != 1 || holders(beta, beta.get(v)).len() != 1 {
            continue;
        }
        let bu = holders(beta, alpha.get(v));
        let aw = holders(alpha, beta.get(v));
        if bu.len() != 1 || aw.len() != 1 {
            continue;
        }
        let (u, w) = (bu[0], aw[0]);
        if u == v || w == v || !g.has_edge(u, v) || !g.has_edge(w, v) {
            continue;
        }
        let mut em = StepEmitter::new(instance);
        let junk = instance
            .lists()
            .list(w)
            .iter()
            .copied()
            .find(|&col| {
                col != em.current(PlanSide::Forward).get(w)
                    && !g
                        .neighbors(w)
                        .iter()
                        .any(|&x| em.current(PlanSide::Forward).get(x) == col)
            })
            .ok_or_else(|| invariant("cousin swap", format!("no spare color for vertex {w}")))?;
        em.emit(PlanSide::Forward, w, junk)?;
        em.emit(PlanSide::Forward, v, beta.get(v))?;
        em.emit(PlanSide::Forward, u, beta.get(u))?;
        return em
            .finish(
                ReductionKind::CousinIntersection,
                vec![u, v],
                1,
                MuWitness::Edges(vec![(u.min(v), u.max(v))]),
            )
            .map(Some);
    }
    Ok(None)
}

/// A color held exactly twice on one side, by two vertices each uniquely
/// colored on the other side: their two cousins park (each avoiding the
/// other landing target), the pair lands, and the color's whole other-side
/// class lands on the vacated color. Removes the pair plus that class,
/// certified by two disjoint cross edges.
pub fn reduce_double_pair(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let g = instance.graph();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let passes = [
        (PlanSide::Forward, alpha, beta),
        (PlanSide::Backward, beta, alpha),
    ];
    for (side, own, other) in passes {
        for &a in &colors_in_play(instance) {
            let hv = holders(own, a);
            if hv.len() != 2 {
                continue;
            }
            let (v1, v2) = (hv[0], hv[1]);
            if other.get(v1) == a || other.get(v2) == a {
                continue;
            }
            if holders(other, other.get(v1)).len() != 1
                || holders(other, other.get(v2)).len() != 1
            {
                continue;
            }
            let c1 = holders(own, other.get(v1));
            let c2 = holders(own, other.get(v2));
            if c1.len() != 1 || c2.len() != 1 {
                continue;
            }
            let (cousin1, cousin2) = (c1[0], c2[0]);
            let mates = holders(other, a);
            if mates.len() < 2 {
                return Err(invariant(
                    "double pair",
                    format!("color {a} should have at least two target-side holders"),
                ));
            }
            let mut em = StepEmitter::new(instance);
            for (cousin, avoid) in [(cousin1, other.get(v2)), (cousin2, other.get(v1))] {
                let junk = instance
                    .lists()
                    .list(cousin)
                    .iter()
                    .copied()
                    .find(|&col| {
                        col != avoid
                            && col != em.current(side).get(cousin)
                            && !g
                                .neighbors(cousin)
                                .iter()
                                .any(|&x| em.current(side).get(x) == col)
                    })
                    .ok_or_else(|| {
                        invariant("double pair", format!("no spare color for vertex {cousin}"))
                    })?;
                em.emit(side, cousin, junk)?;
            }
            em.emit(side, v1, other.get(v1))?;
            em.emit(side, v2, other.get(v2))?;
            for &x in &mates {
                em.emit(side, x, a)?;
            }
            let mut removed = vec![v1, v2];
            removed.extend_from_slice(&mates);
            let certificate = vec![
                (v1.min(mates[0]), v1.max(mates[0])),
                (v2.min(mates[1]), v2.max(mates[1])),
            ];
            return em
                .finish(
                    ReductionKind::DoublePair,
                    removed,
                    2,
                    MuWitness::Edges(certificate),
                )
                .map(Some);
        }
    }
    Ok(None)
}

/// A third-part color without a strict majority on its own side: every
/// holder moves to its smallest free color on both sides, then the
/// other-side class lands on the color. Removes both classes, certified by
/// pairing them across parts.
pub fn reduce_third_part_majority(
    instance: &Instance,
) -> Result<Option<Reduction>, PlannerError> {
    let parts = parts_of(instance)?;
    if parts.num_parts() < 3 {
        return Ok(None);
    }
    let i3 = parts.part(2);
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let passes = [
        (PlanSide::Forward, alpha, beta),
        (PlanSide::Backward, beta, alpha),
    ];
    for (land_side, own, other) in passes {
        let own_colors: BTreeSet<Color> = i3.iter().map(|&v| own.get(v)).collect();
        for &a in &own_colors {
            let xs = holders(own, a);
            let ys = holders(other, a);
            if xs.len() > ys.len() {
                continue;
            }
            let mut em = StepEmitter::new(instance);
            for &v in &xs {
                let free = em.free_colors_now(v);
                let &f = free.first().ok_or_else(|| {
                    invariant(
                        "third-part retirement",
                        format!("no free color for vertex {v}"),
                    )
                })?;
                em.emit(PlanSide::Forward, v, f)?;
                em.emit(PlanSide::Backward, v, f)?;
            }
            for &u in &ys {
                em.emit(land_side, u, a)?;
            }
            let mut removed = xs.clone();
            removed.extend_from_slice(&ys);
            let claim = xs.len();
            let certificate: Vec<(usize, usize)> = xs
                .iter()
                .zip(ys.iter())
                .map(|(&p, &q)| (p.min(q), p.max(q)))
                .collect();
            return em
                .finish(
                    ReductionKind::ThirdPartMajority,
                    removed,
                    claim,
                    MuWitness::Edges(certificate),
                )
                .map(Some);
        }
    }
    Ok(None)
}

/// Vertices whose color is unique in one endpoint coloring, and the pairing
/// between the two kinds: each start-unique vertex is paired with the unique
/// target-side holder of its color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CousinMap {
    /// Vertices whose start-coloring color appears exactly once, ascending.
    pub alpha_unique: Vec<usize>,
    /// Vertices whose target-coloring color appears exactly once, ascending.
    pub beta_unique: Vec<usize>,
    /// `(v, partner)` for each start-unique `v`, ascending in `v`.
    pub pairs: Vec<(usize, usize)>,
}

/// Builds the cousin pairing and verifies it is a bijection between the
/// start-unique and target-unique vertices. Well-defined once the
/// multiplicity and swap reductions are inapplicable.
pub fn cousin_map(instance: &Instance) -> Result<CousinMap, PlannerError> {
    let n = instance.n();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let alpha_unique: Vec<usize> = (0..n)
        .filter(|&v| holders(alpha, alpha.get(v)).len() == 1)
        .collect();
    let beta_unique: Vec<usize> = (0..n)
        .filter(|&v| holders(beta, beta.get(v)).len() == 1)
        .collect();
    let mut pairs = Vec::with_capacity(alpha_unique.len());
    let mut used = vec![false; n];
    for &v in &alpha_unique {
        let mates = holders(beta, alpha.get(v));
        if mates.len() != 1 {
            return Err(invariant(
                "cousin map",
                format!(
                    "color {} of vertex {v} has {} target-side holders instead of one",
                    alpha.get(v),
                    mates.len()
                ),
            ));
        }
        let partner = mates[0];
        if beta_unique.binary_search(&partner).is_err() {
            return Err(invariant(
                "cousin map",
                format!("partner {partner} of vertex {v} is not target-unique"),
            ));
        }
        if used[partner] {
            return Err(invariant(
                "cousin map",
                format!("partner {partner} is shared by two start-unique vertices"),
            ));
        }
        used[partner] = true;
        pairs.push((v, partner));
    }
    if pairs.len() != beta_unique.len() {
        return Err(invariant(
            "cousin map",
            format!(
                "{} start-unique vertices against {} target-unique",
                pairs.len(),
                beta_unique.len()
            ),
        ));
    }
    Ok(CousinMap {
        alpha_unique,
        beta_unique,
        pairs,
    })
}

/// Terminal rule of the balanced branch: with every earlier rule silent, the
/// third-largest part's colors are strict majorities held at least three
/// times, both endpoint colorings use the same, at most `⌈2n/3⌉`-sized color
/// set, and every third-part vertex keeps a free color. The blockers of the
/// third part's targets park, the whole third part lands, and the vertices
/// holding the third part's start colors on the target side land after it
/// (roles swap to whichever side has fewer blockers). Removes the third part
/// plus the landed class. All entry facts are hard-checked.
pub fn finish_third_part_sweep(instance: &Instance) -> Result<Option<Reduction>, PlannerError> {
    let parts = parts_of(instance)?;
    if parts.num_parts() < 3 {
        return Ok(None);
    }
    let g = instance.graph();
    let n = instance.n();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let i3: Vec<usize> = parts.part(2).to_vec();

    let ca: BTreeSet<Color> = alpha.as_slice().iter().copied().collect();
    let cb: BTreeSet<Color> = beta.as_slice().iter().copied().collect();
    if ca != cb {
        return Err(invariant(
            "third-part sweep",
            "endpoint colorings use different color sets",
        ));
    }
    if 3 * ca.len() > 2 * n + 2 {
        return Err(invariant(
            "third-part sweep",
            format!(
                "{} colors in play exceed the two-thirds bound on {n} vertices",
                ca.len()
            ),
        ));
    }
    let map = cousin_map(instance)?;
    if map
        .alpha_unique
        .iter()
        .any(|v| map.beta_unique.binary_search(v).is_ok())
    {
        return Err(invariant(
            "third-part sweep",
            "a vertex holds a unique color in both endpoint colorings",
        ));
    }
    for &v in &i3 {
        if free_colors(g, instance.lists(), alpha, beta, v).is_empty() {
            return Err(invariant(
                "third-part sweep",
                format!("third-part vertex {v} has no free color"),
            ));
        }
    }
    let a_i3: BTreeSet<Color> = i3.iter().map(|&v| alpha.get(v)).collect();
    let b_i3: BTreeSet<Color> = i3.iter().map(|&v| beta.get(v)).collect();
    if a_i3.intersection(&b_i3).next().is_some() {
        return Err(invariant(
            "third-part sweep",
            "a color appears in the third part in both colorings",
        ));
    }
    for &a in &a_i3 {
        let x = holders(alpha, a).len();
        let y = holders(beta, a).len();
        if x < 3 || x <= y {
            return Err(invariant(
                "third-part sweep",
                format!("third-part color {a} lacks a strict start-side majority ({x} vs {y})"),
            ));
        }
    }
    for &b in &b_i3 {
        let y = holders(beta, b).len();
        let x = holders(alpha, b).len();
        if y < 3 || y <= x {
            return Err(invariant(
                "third-part sweep",
                format!("third-part color {b} lacks a strict target-side majority ({y} vs {x})"),
            ));
        }
    }
    let u_set: Vec<usize> = (0..n).filter(|&u| b_i3.contains(&alpha.get(u))).collect();
    let w_set: Vec<usize> = (0..n).filter(|&w| a_i3.contains(&beta.get(w))).collect();
    let in_i3 = |v: usize| i3.binary_search(&v).is_ok();
    if u_set.iter().any(|&u| in_i3(u)) || w_set.iter().any(|&w| in_i3(w)) {
        return Err(invariant(
            "third-part sweep",
            "a blocker set intersects the third part",
        ));
    }
    if u_set.len() >= i3.len() || w_set.len() >= i3.len() {
        return Err(invariant(
            "third-part sweep",
            format!(
                "blocker sets of sizes {} and {} should be smaller than the third part ({})",
                u_set.len(),
                w_set.len(),
                i3.len()
            ),
        ));
    }

    let (side, parked, landers) = if u_set.len() > w_set.len() {
        (PlanSide::Backward, w_set, u_set)
    } else {
        (PlanSide::Forward, u_set, w_set)
    };
    let target: &Coloring = match side {
        PlanSide::Forward => beta,
        PlanSide::Backward => alpha,
    };
    let banned: &BTreeSet<Color> = match side {
        PlanSide::Forward => &b_i3,
        PlanSide::Backward => &a_i3,
    };

    let mut em = StepEmitter::new(instance);
    for &p in &parked {
        let junk = instance
            .lists()
            .list(p)
            .iter()
            .copied()
            .find(|&col| {
                !banned.contains(&col)
                    && !g
                        .neighbors(p)
                        .iter()
                        .any(|&x| em.current(side).get(x) == col)
            })
            .ok_or_else(|| {
                invariant("third-part sweep", format!("no parking color for vertex {p}"))
            })?;
        em.emit(side, p, junk)?;
    }
    for &v in &i3 {
        em.emit(side, v, target.get(v))?;
    }
    for &w in &landers {
        em.emit(side, w, target.get(w))?;
    }

    let mut removed = i3.clone();
    removed.extend_from_slice(&landers);
    let claim = landers.len();
    let certificate: Vec<(usize, usize)> = landers
        .iter()
        .zip(i3.iter())
        .map(|(&a, &b)| (a.min(b), a.max(b)))
        .collect();
    em.finish(
        ReductionKind::ThirdPartSweep,
        removed,
        claim,
        MuWitness::Edges(certificate),
    )
    .map(Some)
}
