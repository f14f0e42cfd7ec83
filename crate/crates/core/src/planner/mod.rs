//! Plan construction by certified reductions.
//!
//! Both planners work the same way: inspect the current instance, emit a
//! short batch of recoloring steps (on the forward side, the backward side,
//! or both) after which some nonempty vertex set agrees between the two
//! colorings, remove that set, restrict the lists, and recurse. Every batch
//! is logged as a [`Reduction`] carrying the removed set, a claimed decrease
//! of the matching number, and a checkable witness for that claim; the sum
//! `|removed| + claimed decrease` bounds the batch's step count, so the total
//! plan length never exceeds `n + μ`.
//!
//! [`audit_ledger`] re-derives every intermediate instance from the ledger
//! and verifies the accounting against exact matching computations.

pub mod multipartite;
pub mod subcubic;

use crate::coloring::{
    replay, Color, Coloring, Instance, ListAssignment, Plan, PlanSide, ReplayError, Step,
};
use crate::graph::{max_matching, Graph, Matching};
use std::fmt;
use thiserror::Error;

/// Which rule produced a reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// Vertices already agreeing between the two colorings are dropped.
    AgreePrepass,
    /// A vertex isolated in some conflict graph takes its other color.
    IsolatedVertex,
    /// Three consecutive vertices of a shift-digraph cycle rotate colors.
    CycleTriple,
    /// A whole conflict-graph component agrees on its color via a cover.
    ComponentCover,
    /// A vertex whose target color nobody blocks takes it directly.
    NoConflict,
    /// A color conflicting only outside the dominant part is cleared there.
    LargeOutsideConflict,
    /// A color held once in the dominant part vacates it for the others.
    SingletonLargeColor,
    /// Everything is recolored in three phases through fresh colors.
    LargeDirectFinish,
    /// A uniquely-held color with several target holders hands over to them.
    CousinMultiplicity,
    /// A vertex unique in both colorings swaps with its two cousins.
    CousinIntersection,
    /// Two target-unique vertices sharing a doubly-held color both land.
    DoublePair,
    /// A third-part color with no strict majority is retired on both sides.
    ThirdPartMajority,
    /// The third part and its target holders are recolored wholesale.
    ThirdPartSweep,
    /// No edges remain; every vertex recolors directly to its target.
    EdgelessFinish,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ReductionKind::AgreePrepass => "agree-prepass",
            ReductionKind::IsolatedVertex => "isolated-vertex",
            ReductionKind::CycleTriple => "cycle-triple",
            ReductionKind::ComponentCover => "component-cover",
            ReductionKind::NoConflict => "no-conflict",
            ReductionKind::LargeOutsideConflict => "large-outside-conflict",
            ReductionKind::SingletonLargeColor => "singleton-large-color",
            ReductionKind::LargeDirectFinish => "large-direct-finish",
            ReductionKind::CousinMultiplicity => "cousin-multiplicity",
            ReductionKind::CousinIntersection => "cousin-intersection",
            ReductionKind::DoublePair => "double-pair",
            ReductionKind::ThirdPartMajority => "third-part-majority",
            ReductionKind::ThirdPartSweep => "third-part-sweep",
            ReductionKind::EdgelessFinish => "edgeless-finish",
        };
        write!(f, "{name}")
    }
}

/// A checkable certificate that removing a reduction's vertex set decreases
/// the matching number by at least the claimed amount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuWitness {
    /// Pairwise-disjoint edges inside the removed set — one per claimed unit:
    /// any matching of the rest extends by these edges.
    Edges(Vec<(usize, usize)>),
    /// The removed set avoids the given independent part, which holds at
    /// least half the vertices; every maximum matching must cover the
    /// complement of that part, so each removed vertex costs a matching edge.
    CoversComplement { large_part: Vec<usize> },
    /// The graph has a near-perfect matching (`2μ ≥ n − 1`) and at least two
    /// vertices are removed, so the matching number drops by parity.
    Parity,
}

/// One certified reduction: its steps, the vertex set it settles, and the
/// claimed matching-number decrease with its witness. Inside a [`Planned`]
/// ledger all vertex ids refer to the original instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub kind: ReductionKind,
    pub steps_forward: Vec<Step>,
    pub steps_backward: Vec<Step>,
    pub removed: Vec<usize>,
    pub mu_drop: usize,
    pub witness: MuWitness,
}

impl Reduction {
    pub fn steps_used(&self) -> usize {
        self.steps_forward.len() + self.steps_backward.len()
    }
}

/// A finished plan together with the reduction ledger that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planned {
    pub plan: Plan,
    pub ledger: Vec<Reduction>,
}

/// Why planning failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlannerError {
    #[error("graph has maximum degree {max_degree}; this planner handles at most 3")]
    DegreeTooHigh { max_degree: usize },
    #[error("graph is not complete multipartite")]
    NotMultipartite,
    #[error("internal invariant violated in {context}: {details}")]
    InternalInvariant {
        context: &'static str,
        details: String,
    },
}

pub(crate) fn invariant(context: &'static str, details: impl fmt::Display) -> PlannerError {
    PlannerError::InternalInvariant {
        context,
        details: details.to_string(),
    }
}

/// Records recoloring steps for one reduction while enforcing, per step, that
/// the touched vertex exists, the new color comes from its list, genuinely
/// changes the vertex, and keeps that side's coloring proper.
pub(crate) struct StepEmitter<'a> {
    instance: &'a Instance,
    gamma: Coloring,
    zeta: Coloring,
    forward: Vec<Step>,
    backward: Vec<Step>,
}

impl<'a> StepEmitter<'a> {
    pub(crate) fn new(instance: &'a Instance) -> Self {
        StepEmitter {
            instance,
            gamma: instance.alpha().clone(),
            zeta: instance.beta().clone(),
            forward: Vec::new(),
            backward: Vec::new(),
        }
    }

    /// The evolving coloring on `side`.
    pub(crate) fn current(&self, side: PlanSide) -> &Coloring {
        match side {
            PlanSide::Forward => &self.gamma,
            PlanSide::Backward => &self.zeta,
        }
    }

    pub(crate) fn emit(
        &mut self,
        side: PlanSide,
        vertex: usize,
        to: Color,
    ) -> Result<(), PlannerError> {
        let g = self.instance.graph();
        if vertex >= g.n() {
            return Err(invariant(
                "step emission",
                format!("vertex {vertex} out of range"),
            ));
        }
        if !self.instance.lists().contains(vertex, to) {
            return Err(invariant(
                "step emission",
                format!("color {to} not in the list of vertex {vertex}"),
            ));
        }
        let coloring = match side {
            PlanSide::Forward => &mut self.gamma,
            PlanSide::Backward => &mut self.zeta,
        };
        if coloring.get(vertex) == to {
            return Err(invariant(
                "step emission",
                format!("{side} step would not change vertex {vertex} (color {to})"),
            ));
        }
        if let Some(&nb) = g
            .neighbors(vertex)
            .iter()
            .find(|&&u| coloring.get(u) == to)
        {
            return Err(invariant(
                "step emission",
                format!(
                    "{side} step recoloring vertex {vertex} to {to} collides with neighbor {nb}"
                ),
            ));
        }
        coloring.set(vertex, to);
        match side {
            PlanSide::Forward => self.forward.push(Step::new(vertex, to)),
            PlanSide::Backward => self.backward.push(Step::new(vertex, to)),
        }
        Ok(())
    }

    /// Colors free for `v` against both evolving colorings.
    pub(crate) fn free_colors_now(&self, v: usize) -> Vec<Color> {
        crate::coloring::free_colors(
            self.instance.graph(),
            self.instance.lists(),
            &self.gamma,
            &self.zeta,
            v,
        )
    }

    /// Packages the emitted steps into a reduction after validating the
    /// agreement of removed vertices, the step budget, and the witness.
    pub(crate) fn finish(
        self,
        kind: ReductionKind,
        mut removed: Vec<usize>,
        mu_drop: usize,
        witness: MuWitness,
    ) -> Result<Reduction, PlannerError> {
        removed.sort_unstable();
        removed.dedup();
        let g = self.instance.graph();
        if removed.is_empty() {
            return Err(invariant("reduction packaging", "empty removed set"));
        }
        if let Some(&v) = removed.iter().find(|&&v| v >= g.n()) {
            return Err(invariant(
                "reduction packaging",
                format!("removed vertex {v} out of range"),
            ));
        }
        for &v in &removed {
            if self.gamma.get(v) != self.zeta.get(v) {
                return Err(invariant(
                    "reduction packaging",
                    format!(
                        "removed vertex {v} still differs: forward {} vs backward {}",
                        self.gamma.get(v),
                        self.zeta.get(v)
                    ),
                ));
            }
        }
        let reduction = Reduction {
            kind,
            steps_forward: self.forward,
            steps_backward: self.backward,
            removed,
            mu_drop,
            witness,
        };
        if reduction.steps_used() > reduction.removed.len() + reduction.mu_drop {
            return Err(invariant(
                "reduction packaging",
                format!(
                    "{} steps exceed budget {} removed + {} matching decrease",
                    reduction.steps_used(),
                    reduction.removed.len(),
                    reduction.mu_drop
                ),
            ));
        }
        validate_witness(g, &reduction).map_err(|details| {
            invariant("reduction packaging", details)
        })?;
        Ok(reduction)
    }
}

/// Checks a reduction's witness against the graph it was emitted on.
/// Returns a human-readable defect description on failure.
fn validate_witness(g: &Graph, reduction: &Reduction) -> Result<(), String> {
    let removed = &reduction.removed;
    let in_removed = |v: usize| removed.binary_search(&v).is_ok();
    match &reduction.witness {
        MuWitness::Edges(edges) => {
            if edges.len() != reduction.mu_drop {
                return Err(format!(
                    "edge witness has {} edges for a claimed decrease of {}",
                    edges.len(),
                    reduction.mu_drop
                ));
            }
            let mut used = std::collections::HashSet::new();
            for &(u, v) in edges {
                if !g.has_edge(u, v) {
                    return Err(format!("witness pair ({u}, {v}) is not an edge"));
                }
                if !in_removed(u) || !in_removed(v) {
                    return Err(format!(
                        "witness edge ({u}, {v}) leaves the removed set"
                    ));
                }
                if !used.insert(u) || !used.insert(v) {
                    return Err(format!("witness edges overlap at ({u}, {v})"));
                }
            }
            Ok(())
        }
        MuWitness::CoversComplement { large_part } => {
            if reduction.mu_drop != removed.len() {
                return Err(format!(
                    "complement witness must claim one per removed vertex, \
                     got {} for {} removed",
                    reduction.mu_drop,
                    removed.len()
                ));
            }
            if 2 * large_part.len() < g.n() {
                return Err(format!(
                    "claimed dominant part has {} of {} vertices",
                    large_part.len(),
                    g.n()
                ));
            }
            for (i, &u) in large_part.iter().enumerate() {
                if in_removed(u) {
                    return Err(format!("removed vertex {u} lies in the dominant part"));
                }
                for &v in &large_part[i + 1..] {
                    if g.has_edge(u, v) {
                        return Err(format!(
                            "claimed dominant part is not independent: edge ({u}, {v})"
                        ));
                    }
                }
            }
            Ok(())
        }
        MuWitness::Parity => {
            if reduction.mu_drop != 1 {
                return Err(format!(
                    "parity witness claims {} but certifies exactly 1",
                    reduction.mu_drop
                ));
            }
            if removed.len() < 2 {
                return Err("parity witness needs at least two removed vertices".into());
            }
            let mu = max_matching(g).len();
            if 2 * mu < g.n().saturating_sub(1) {
                return Err(format!(
                    "parity witness needs a near-perfect matching, μ = {mu} on {} vertices",
                    g.n()
                ));
            }
            Ok(())
        }
    }
}

/// Restricts `instance` after a reduction: drops `removed`, and deletes each
/// removed vertex's settled color from its surviving neighbors' lists (the
/// settled color is the same in both colorings, so both restricted colorings
/// stay proper and list sizes keep pace with degrees).
pub(crate) fn restrict_level(
    instance: &Instance,
    gamma: &Coloring,
    zeta: &Coloring,
    removed: &[usize],
) -> Result<(Instance, Vec<usize>), PlannerError> {
    let g = instance.graph();
    let mut drop = vec![false; g.n()];
    for &v in removed {
        drop[v] = true;
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
    let (g2, map) = g.induced(&kept);

    let mut lists2 = Vec::with_capacity(kept.len());
    let mut alpha2 = Vec::with_capacity(kept.len());
    let mut beta2 = Vec::with_capacity(kept.len());
    for &old in &kept {
        let banned: Vec<Color> = g
            .neighbors(old)
            .iter()
            .filter(|&&u| drop[u])
            .map(|&u| gamma.get(u))
            .collect();
        let list: Vec<Color> = instance
            .lists()
            .list(old)
            .iter()
            .copied()
            .filter(|c| !banned.contains(c))
            .collect();
        lists2.push(list);
        alpha2.push(gamma.get(old));
        beta2.push(zeta.get(old));
    }
    let next = Instance::new(
        g2,
        ListAssignment::new(lists2),
        Coloring::new(alpha2),
        Coloring::new(beta2),
    )
    .map_err(|e| invariant("level restriction", e))?;
    debug_assert_eq!(map.kept(), kept.as_slice());
    Ok((next, kept))
}

/// Vertices already agreeing between the two endpoint colorings.
pub(crate) fn agreeing_vertices(instance: &Instance) -> Vec<usize> {
    (0..instance.n())
        .filter(|&v| instance.alpha().get(v) == instance.beta().get(v))
        .collect()
}

/// Shared level-descent driver. At each level it first drops agreeing
/// vertices, then asks `next_reduction` for one applicable reduction,
/// validates its steps by replay, applies it, and restricts. Ledger entries
/// and plan steps are translated back to original vertex ids.
pub(crate) fn run_levels(
    instance: &Instance,
    mut next_reduction: impl FnMut(&Instance) -> Result<Reduction, PlannerError>,
) -> Result<Planned, PlannerError> {
    let mut current = instance.clone();
    let mut to_original: Vec<usize> = (0..instance.n()).collect();
    let mut plan = Plan::default();
    let mut ledger: Vec<Reduction> = Vec::new();

    while current.n() > 0 {
        let agreeing = agreeing_vertices(&current);
        let reduction = if agreeing.is_empty() {
            next_reduction(&current)?
        } else {
            Reduction {
                kind: ReductionKind::AgreePrepass,
                steps_forward: Vec::new(),
                steps_backward: Vec::new(),
                removed: agreeing,
                mu_drop: 0,
                witness: MuWitness::Edges(Vec::new()),
            }
        };

        // Re-validate the reduction's steps independently of its emitter.
        let gammas = replay(
            current.graph(),
            current.lists(),
            current.alpha(),
            &reduction.steps_forward,
        )
        .map_err(|e| invariant("level replay (forward)", e))?;
        let zetas = replay(
            current.graph(),
            current.lists(),
            current.beta(),
            &reduction.steps_backward,
        )
        .map_err(|e| invariant("level replay (backward)", e))?;
        let gamma = gammas.last().expect("trajectory includes start").clone();
        let zeta = zetas.last().expect("trajectory includes start").clone();
        if reduction.removed.is_empty() {
            return Err(invariant("level descent", "reduction removed nothing"));
        }
        for &v in &reduction.removed {
            if v >= current.n() {
                return Err(invariant(
                    "level descent",
                    format!("removed vertex {v} out of range"),
                ));
            }
            if gamma.get(v) != zeta.get(v) {
                return Err(invariant(
                    "level descent",
                    format!("removed vertex {v} does not agree after the steps"),
                ));
            }
        }

        // Record in original ids.
        let translate_steps = |steps: &[Step]| -> Vec<Step> {
            steps
                .iter()
                .map(|s| Step::new(to_original[s.vertex], s.to))
                .collect()
        };
        let entry = Reduction {
            kind: reduction.kind,
            steps_forward: translate_steps(&reduction.steps_forward),
            steps_backward: translate_steps(&reduction.steps_backward),
            removed: {
                let mut r: Vec<usize> =
                    reduction.removed.iter().map(|&v| to_original[v]).collect();
                r.sort_unstable();
                r
            },
            mu_drop: reduction.mu_drop,
            witness: match &reduction.witness {
                MuWitness::Edges(edges) => MuWitness::Edges(
                    edges
                        .iter()
                        .map(|&(u, v)| {
                            let (a, b) = (to_original[u], to_original[v]);
                            (a.min(b), a.max(b))
                        })
                        .collect(),
                ),
                MuWitness::CoversComplement { large_part } => MuWitness::CoversComplement {
                    large_part: large_part.iter().map(|&v| to_original[v]).collect(),
                },
                MuWitness::Parity => MuWitness::Parity,
            },
        };
        plan.forward.extend_from_slice(&entry.steps_forward);
        plan.backward.extend_from_slice(&entry.steps_backward);
        ledger.push(entry);

        let (next, kept) = restrict_level(&current, &gamma, &zeta, &reduction.removed)?;
        to_original = kept.iter().map(|&v| to_original[v]).collect();
        current = next;
    }

    let mu = max_matching(instance.graph()).len();
    if plan.len() > instance.n() + mu {
        return Err(invariant(
            "plan length",
            format!(
                "{} steps exceed the bound {} + {}",
                plan.len(),
                instance.n(),
                mu
            ),
        ));
    }
    Ok(Planned { plan, ledger })
}

/// One reconstructed level of a plan's reduction ledger.
#[derive(Debug, Clone)]
pub struct DecompositionLevel {
    pub kind: ReductionKind,
    /// The instance this level's reduction was applied to (local vertex ids).
    pub instance: Instance,
    /// Translation from this level's local ids to original ids.
    pub to_original: Vec<usize>,
    /// The ledger entry, in original ids.
    pub entry: Reduction,
}

/// Why a ledger fails its audit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("ledger {side} steps do not concatenate to the plan")]
    PlanMismatch { side: PlanSide },
    #[error("level {level}: vertex {vertex} was already removed earlier")]
    RemovedNotKept { level: usize, vertex: usize },
    #[error("level {level}: {side} steps fail to replay: {source}")]
    StepsInvalid {
        level: usize,
        side: PlanSide,
        source: ReplayError,
    },
    #[error("level {level}: removed vertex {vertex} does not agree after the steps")]
    RemovedDisagrees { level: usize, vertex: usize },
    #[error("ledger ends with {count} vertices never removed")]
    LeftoverVertices { count: usize },
    #[error(
        "level {level}: {steps} steps exceed the budget of {removed} removed + {mu_drop} claimed"
    )]
    StepsExceedEntryBudget {
        level: usize,
        steps: usize,
        removed: usize,
        mu_drop: usize,
    },
    #[error(
        "level {level}: claimed matching decrease {claimed} not realized \
         (μ {mu_before} before, {mu_after} after)"
    )]
    MuDropNotCertified {
        level: usize,
        claimed: usize,
        mu_before: usize,
        mu_after: usize,
    },
    #[error("level {level}: witness invalid: {reason}")]
    WitnessInvalid { level: usize, reason: String },
    #[error("edge certificates overlap at vertex {vertex}")]
    CertificatesOverlap { vertex: usize },
    #[error("edge certificates do not form a matching of the original graph: {reason}")]
    CertificatesNotMatching { reason: String },
    #[error("plan uses {steps} steps, above the certified budget {budget}")]
    BoundExceeded { steps: usize, budget: usize },
    #[error("level {level}: could not rebuild the next instance: {reason}")]
    InstanceReconstruction { level: usize, reason: String },
}

/// Replays a plan's ledger level by level, rebuilding every intermediate
/// instance and validating steps and agreement along the way.
pub fn replay_decomposition(
    instance: &Instance,
    planned: &Planned,
) -> Result<Vec<DecompositionLevel>, AuditError> {
    let mut current = instance.clone();
    let mut to_original: Vec<usize> = (0..instance.n()).collect();
    let mut levels = Vec::with_capacity(planned.ledger.len());

    for (level, entry) in planned.ledger.iter().enumerate() {
        // Translate original ids to this level's local ids.
        let mut to_local = vec![None; instance.n()];
        for (local, &orig) in to_original.iter().enumerate() {
            to_local[orig] = Some(local);
        }
        let localize = |v: usize| -> Result<usize, AuditError> {
            to_local
                .get(v)
                .copied()
                .flatten()
                .ok_or(AuditError::RemovedNotKept { level, vertex: v })
        };
        let mut local_forward = Vec::with_capacity(entry.steps_forward.len());
        for s in &entry.steps_forward {
            local_forward.push(Step::new(localize(s.vertex)?, s.to));
        }
        let mut local_backward = Vec::with_capacity(entry.steps_backward.len());
        for s in &entry.steps_backward {
            local_backward.push(Step::new(localize(s.vertex)?, s.to));
        }
        let mut local_removed = Vec::with_capacity(entry.removed.len());
        for &v in &entry.removed {
            local_removed.push(localize(v)?);
        }
        local_removed.sort_unstable();

        let gammas = replay(
            current.graph(),
            current.lists(),
            current.alpha(),
            &local_forward,
        )
        .map_err(|source| AuditError::StepsInvalid {
            level,
            side: PlanSide::Forward,
            source,
        })?;
        let zetas = replay(
            current.graph(),
            current.lists(),
            current.beta(),
            &local_backward,
        )
        .map_err(|source| AuditError::StepsInvalid {
            level,
            side: PlanSide::Backward,
            source,
        })?;
        let gamma = gammas.last().expect("trajectory includes start");
        let zeta = zetas.last().expect("trajectory includes start");
        for (&local, &orig) in local_removed.iter().zip(entry.removed.iter()) {
            if gamma.get(local) != zeta.get(local) {
                return Err(AuditError::RemovedDisagrees {
                    level,
                    vertex: orig,
                });
            }
        }

        levels.push(DecompositionLevel {
            kind: entry.kind,
            instance: current.clone(),
            to_original: to_original.clone(),
            entry: entry.clone(),
        });

        let (next, kept) = restrict_level(&current, gamma, zeta, &local_removed)
            .map_err(|e| AuditError::InstanceReconstruction {
                level,
                reason: e.to_string(),
            })?;
        to_original = kept.iter().map(|&v| to_original[v]).collect();
        current = next;
    }

    if current.n() > 0 {
        return Err(AuditError::LeftoverVertices { count: current.n() });
    }

    // The ledger's steps must concatenate exactly to the plan.
    let fwd: Vec<Step> = planned
        .ledger
        .iter()
        .flat_map(|e| e.steps_forward.iter().copied())
        .collect();
    if fwd != planned.plan.forward {
        return Err(AuditError::PlanMismatch {
            side: PlanSide::Forward,
        });
    }
    let bwd: Vec<Step> = planned
        .ledger
        .iter()
        .flat_map(|e| e.steps_backward.iter().copied())
        .collect();
    if bwd != planned.plan.backward {
        return Err(AuditError::PlanMismatch {
            side: PlanSide::Backward,
        });
    }
    Ok(levels)
}

/// Summary of a successful ledger audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerAudit {
    pub levels: usize,
    pub total_steps: usize,
    pub vertex_count: usize,
    pub matching_number: usize,
    /// `vertex_count + matching_number`.
    pub step_budget: usize,
    /// Size of the matching composed from explicit edge certificates.
    pub certified_edges: usize,
}

/// Verifies a plan's reduction ledger end to end:
///
/// * per level, `steps ≤ |removed| + claimed matching decrease`;
/// * per level, the claimed decrease is realized exactly on the rebuilt
///   graphs (via fresh maximum-matching computations) and the structural
///   witness holds;
/// * explicit edge certificates from all levels compose into one valid
///   matching of the original graph;
/// * the total plan length stays within `n + μ`.
pub fn audit_ledger(instance: &Instance, planned: &Planned) -> Result<LedgerAudit, AuditError> {
    let levels = replay_decomposition(instance, planned)?;
    let mut all_cert_edges: Vec<(usize, usize)> = Vec::new();

    for (idx, level) in levels.iter().enumerate() {
        let entry = &level.entry;
        if entry.steps_used() > entry.removed.len() + entry.mu_drop {
            return Err(AuditError::StepsExceedEntryBudget {
                level: idx,
                steps: entry.steps_used(),
                removed: entry.removed.len(),
                mu_drop: entry.mu_drop,
            });
        }

        let g_level = level.instance.graph();
        let mut to_local = vec![None; instance.n()];
        for (local, &orig) in level.to_original.iter().enumerate() {
            to_local[orig] = Some(local);
        }
        let localize = |v: usize| -> Result<usize, AuditError> {
            to_local
                .get(v)
                .copied()
                .flatten()
                .ok_or(AuditError::RemovedNotKept {
                    level: idx,
                    vertex: v,
                })
        };
        let mut local_removed = Vec::with_capacity(entry.removed.len());
        for &v in &entry.removed {
            local_removed.push(localize(v)?);
        }
        local_removed.sort_unstable();

        let mu_before = max_matching(g_level).len();
        let (g_after, _) = crate::graph::restrict(g_level, &local_removed);
        let mu_after = max_matching(&g_after).len();
        if mu_after + entry.mu_drop > mu_before {
            return Err(AuditError::MuDropNotCertified {
                level: idx,
                claimed: entry.mu_drop,
                mu_before,
                mu_after,
            });
        }

        // Structural witness check on the level graph (local ids).
        let local_witness = match &entry.witness {
            MuWitness::Edges(edges) => {
                let mut local = Vec::with_capacity(edges.len());
                for &(u, v) in edges {
                    local.push((localize(u)?, localize(v)?));
                }
                MuWitness::Edges(local)
            }
            MuWitness::CoversComplement { large_part } => {
                let mut local = Vec::with_capacity(large_part.len());
                for &v in large_part {
                    local.push(localize(v)?);
                }
                MuWitness::CoversComplement { large_part: local }
            }
            MuWitness::Parity => MuWitness::Parity,
        };
        let local_entry = Reduction {
            kind: entry.kind,
            steps_forward: Vec::new(),
            steps_backward: Vec::new(),
            removed: local_removed,
            mu_drop: entry.mu_drop,
            witness: local_witness,
        };
        validate_witness(g_level, &local_entry)
            .map_err(|reason| AuditError::WitnessInvalid { level: idx, reason })?;

        if let MuWitness::Edges(edges) = &entry.witness {
            all_cert_edges.extend_from_slice(edges);
        }
    }

    // Explicit certificates from different levels touch disjoint removed
    // sets, so together they must form a matching of the original graph.
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in &all_cert_edges {
        if !seen.insert(u) {
            return Err(AuditError::CertificatesOverlap { vertex: u });
        }
        if !seen.insert(v) {
            return Err(AuditError::CertificatesOverlap { vertex: v });
        }
    }
    let composed = Matching::new(instance.graph(), all_cert_edges)
        .map_err(|e| AuditError::CertificatesNotMatching {
            reason: e.to_string(),
        })?;

    let mu = max_matching(instance.graph()).len();
    let budget = instance.n() + mu;
    let total_steps = planned.plan.len();
    if total_steps > budget {
        return Err(AuditError::BoundExceeded {
            steps: total_steps,
            budget,
        });
    }
    Ok(LedgerAudit {
        levels: levels.len(),
        total_steps,
        vertex_count: instance.n(),
        matching_number: mu,
        step_budget: budget,
        certified_edges: composed.len(),
    })
}
