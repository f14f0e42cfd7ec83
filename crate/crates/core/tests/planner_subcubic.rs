//! End-to-end tests of the subcubic planner on hand-checked instances:
//! exact step sequences where the deterministic scan order pins them down,
//! ledger shapes, the `n + μ` bound, and agreement with the exhaustive
//! search oracle.

mod common;

use common::{check_plan, oracle_distance, uniform_instance};
use recolor_core::coloring::Step;
use recolor_core::graph::Graph;
use recolor_core::{plan_subcubic, MuWitness, PlannerError, ReductionKind};

#[test]
fn single_edge_swap_rotates_through_a_junk_color() {
    let inst = uniform_instance(Graph::complete(2), &[1, 2, 3], vec![1, 2], vec![2, 1]);
    let planned = plan_subcubic(&inst).unwrap();

    // One shift-digraph 2-cycle: vertex 0 parks on the junk color 3, vertex 1
    // takes its target, vertex 0 follows. All moves lie on the forward side.
    assert_eq!(
        planned.plan.forward,
        vec![Step::new(0, 3), Step::new(1, 1), Step::new(0, 2)]
    );
    assert!(planned.plan.backward.is_empty());

    assert_eq!(planned.ledger.len(), 1);
    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::CycleTriple);
    assert_eq!(entry.removed, vec![0, 1]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(0, 1)]));

    assert_eq!(check_plan(&inst, &planned), 3);
    assert_eq!(oracle_distance(&inst), 3);
}

#[test]
fn disjoint_swaps_are_handled_smallest_vertex_first() {
    let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let inst = uniform_instance(g, &[1, 2, 3], vec![1, 2, 1, 2], vec![2, 1, 2, 1]);
    let planned = plan_subcubic(&inst).unwrap();

    assert_eq!(planned.ledger.len(), 2);
    assert_eq!(planned.ledger[0].kind, ReductionKind::CycleTriple);
    assert_eq!(planned.ledger[0].removed, vec![0, 1]);
    assert_eq!(planned.ledger[1].kind, ReductionKind::CycleTriple);
    assert_eq!(planned.ledger[1].removed, vec![2, 3]);

    // Each swap costs three moves; that meets the bound n + μ = 4 + 2 and
    // the oracle confirms nothing shorter exists.
    assert_eq!(check_plan(&inst, &planned), 6);
    assert_eq!(oracle_distance(&inst), 6);
}

#[test]
fn isolated_vertex_in_a_conflict_graph_moves_directly() {
    // A path whose endpoints already agree; the middle vertex's target color
    // conflicts with nobody in either coloring, so one forward move ends it.
    let g = Graph::path(3);
    let inst = uniform_instance(g, &[1, 2, 3, 4], vec![1, 2, 1], vec![1, 3, 1]);
    let planned = plan_subcubic(&inst).unwrap();

    assert_eq!(planned.ledger[0].kind, ReductionKind::AgreePrepass);
    assert_eq!(planned.ledger[0].removed, vec![0, 2]);
    assert_eq!(planned.ledger[1].kind, ReductionKind::IsolatedVertex);
    assert_eq!(planned.ledger[1].steps_forward, vec![Step::new(1, 3)]);
    assert!(planned.ledger[1].steps_backward.is_empty());

    assert_eq!(check_plan(&inst, &planned), 1);
    assert_eq!(oracle_distance(&inst), 1);
}

#[test]
fn seven_vertex_conflict_component_settles_via_cover() {
    // Every vertex is in the color-1 conflict graph and that graph is a
    // single seven-vertex component: its minimum vertex cover (size three,
    // matching number three) parks or lands first, everyone else follows.
    let g = Graph::new(
        7,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 6),
            (2, 4),
            (2, 5),
            (2, 6),
        ],
    )
    .unwrap();
    let inst = uniform_instance(
        g,
        &[1, 2, 3, 4, 5],
        vec![1, 1, 1, 2, 5, 5, 3],
        vec![2, 3, 5, 1, 1, 1, 1],
    );
    let planned = plan_subcubic(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::ComponentCover);
    assert_eq!(entry.removed, vec![0, 1, 2, 3, 4, 5, 6]);
    assert_eq!(entry.mu_drop, 3);
    assert!(entry.steps_used() <= 7 + 3);
    match &entry.witness {
        MuWitness::Edges(edges) => assert_eq!(edges.len(), 3),
        other => panic!("expected an explicit edge certificate, got {other:?}"),
    }

    let len = check_plan(&inst, &planned);
    assert!(oracle_distance(&inst) <= len);
}

#[test]
fn path_cover_vertex_parks_on_both_sides() {
    // On a path a–b–c where b starts on the color that a and c must reach,
    // b is the cover of the conflict component: it parks on a free color on
    // both sides and the endpoints land.
    let inst = uniform_instance(Graph::path(3), &[1, 2, 3, 4], vec![2, 1, 2], vec![1, 2, 1]);
    let planned = plan_subcubic(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::ComponentCover);
    assert_eq!(
        entry.steps_forward,
        vec![Step::new(1, 3), Step::new(0, 1), Step::new(2, 1)]
    );
    assert_eq!(entry.steps_backward, vec![Step::new(1, 3)]);
    assert_eq!(entry.removed, vec![0, 1, 2]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(0, 1)]));

    // n + μ = 3 + 1 = 4 is tight here: no vertex can move straight to its
    // target at the start, so three moves cannot suffice.
    assert_eq!(check_plan(&inst, &planned), 4);
    assert_eq!(oracle_distance(&inst), 4);
}

#[test]
fn high_degree_graphs_are_rejected() {
    let g = Graph::complete(5);
    let inst = uniform_instance(
        g,
        &[1, 2, 3, 4, 5, 6],
        vec![1, 2, 3, 4, 5],
        vec![2, 1, 3, 4, 5],
    );
    assert_eq!(
        plan_subcubic(&inst).unwrap_err(),
        PlannerError::DegreeTooHigh { max_degree: 4 }
    );
}

#[test]
fn equal_endpoints_need_no_steps() {
    let inst = uniform_instance(Graph::cycle(4), &[1, 2, 3, 4], vec![1, 2, 1, 2], vec![1, 2, 1, 2]);
    let planned = plan_subcubic(&inst).unwrap();
    assert!(planned.plan.forward.is_empty() && planned.plan.backward.is_empty());
    assert_eq!(planned.ledger.len(), 1);
    assert_eq!(planned.ledger[0].kind, ReductionKind::AgreePrepass);
    assert_eq!(check_plan(&inst, &planned), 0);
}
