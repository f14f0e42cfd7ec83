//! End-to-end tests of the complete-multipartite planner: one hand-checked
//! instance per reduction rule, frozen step sequences where the scan order
//! pins them down, ledger shapes, the `n + μ` bound, and oracle agreement.

mod common;

use common::{check_plan, oracle_distance, uniform_instance};
use recolor_core::coloring::{Coloring, Instance, ListAssignment, Step};
use recolor_core::graph::Graph;
use recolor_core::oracle::{OracleOptions, ReconfGraph};
use recolor_core::{plan_multipartite, MuWitness, PlannerError, ReductionKind};

#[test]
fn non_multipartite_graphs_are_rejected() {
    let inst = uniform_instance(Graph::path(4), &[1, 2, 3, 4], vec![1, 2, 1, 2], vec![2, 1, 2, 1]);
    assert_eq!(
        plan_multipartite(&inst).unwrap_err(),
        PlannerError::NotMultipartite
    );
}

#[test]
fn unblocked_targets_land_one_by_one() {
    // On a triangle with disjoint color ranges, nobody blocks anybody.
    let inst = uniform_instance(
        Graph::complete(3),
        &[1, 2, 3, 4, 5, 6],
        vec![1, 2, 3],
        vec![4, 5, 6],
    );
    let planned = plan_multipartite(&inst).unwrap();
    assert_eq!(planned.plan.forward.len() + planned.plan.backward.len(), 3);
    // Two vertices land via the no-conflict rule; the last one, alone on its
    // level, falls to the edgeless finisher.
    assert_eq!(
        planned.ledger.iter().map(|e| e.kind).collect::<Vec<_>>(),
        vec![
            ReductionKind::NoConflict,
            ReductionKind::NoConflict,
            ReductionKind::EdgelessFinish,
        ]
    );
    assert_eq!(check_plan(&inst, &planned), 3);
    assert_eq!(oracle_distance(&inst), 3);
}

#[test]
fn dominant_part_singleton_color_vacates() {
    // Parts {0,1,2} and {3,4}. Color 2 is held once in the dominant part
    // (vertex 2) and once outside it in the target coloring (vertex 4):
    // vertex 2 parks on the smallest clear color and vertex 4 lands.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[3, 2]),
        &[1, 2, 3, 4, 5],
        vec![1, 1, 2, 3, 4],
        vec![3, 4, 3, 1, 2],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::SingletonLargeColor);
    assert_eq!(entry.steps_forward, vec![Step::new(2, 1), Step::new(4, 2)]);
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![4]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(
        entry.witness,
        MuWitness::CoversComplement {
            large_part: vec![0, 1, 2]
        }
    );

    let len = check_plan(&inst, &planned);
    assert!(oracle_distance(&inst) <= len);
}

#[test]
fn conflict_outside_dominant_part_clears_smaller_class() {
    // Parts {0,1,2,3}, {4,5}, {6}. Color 5 is held by vertex 5 at the start
    // and by vertex 6 at the target — a conflict entirely outside the
    // dominant part, in two different parts. The start class is not larger,
    // so it parks and the target class lands on the forward side.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[4, 2, 1]),
        &[1, 2, 3, 4, 5, 6, 7, 8],
        vec![1, 1, 2, 2, 3, 5, 4],
        vec![3, 4, 3, 4, 1, 2, 5],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::LargeOutsideConflict);
    assert_eq!(entry.steps_forward, vec![Step::new(5, 3), Step::new(6, 5)]);
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![6]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(
        entry.witness,
        MuWitness::CoversComplement {
            large_part: vec![0, 1, 2, 3]
        }
    );

    let len = check_plan(&inst, &planned);
    assert!(oracle_distance(&inst) <= len);
}

#[test]
fn star_finishes_in_three_phases_meeting_the_bound_exactly() {
    // A star K_{4,1} whose leaves and center trade colors: the center parks
    // on a fresh color, the leaves land, the center lands. Six moves on five
    // vertices with μ = 1, and the oracle confirms the bound n + μ is tight.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[4, 1]),
        &[1, 2, 3, 4, 5, 6],
        vec![1, 1, 1, 1, 3],
        vec![3, 3, 3, 3, 1],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::LargeDirectFinish);
    assert_eq!(
        entry.steps_forward,
        vec![
            Step::new(4, 2),
            Step::new(0, 3),
            Step::new(1, 3),
            Step::new(2, 3),
            Step::new(3, 3),
            Step::new(4, 1),
        ]
    );
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![0, 1, 2, 3, 4]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(0, 4)]));

    assert_eq!(check_plan(&inst, &planned), 6);
    assert_eq!(oracle_distance(&inst), 6);
}

#[test]
fn uniquely_held_color_hands_over_to_its_class() {
    // Parts {0,1}, {2,3}, {4,5}. Color 4 is unique to vertex 4 at the start
    // and covers {0,1} at the target: vertex 4 parks clear of its closed
    // neighborhood and both mates land. Removing a non-independent pair from
    // a balanced multipartite graph drops the near-perfect matching.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[2, 2, 2]),
        &[1, 2, 3, 4, 5, 6],
        vec![1, 1, 2, 3, 4, 5],
        vec![4, 4, 5, 1, 2, 3],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::CousinMultiplicity);
    assert_eq!(
        entry.steps_forward,
        vec![Step::new(4, 5), Step::new(0, 4), Step::new(1, 4)]
    );
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![0, 1]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(entry.witness, MuWitness::Parity);

    let len = check_plan(&inst, &planned);
    assert!(oracle_distance(&inst) <= len);
}

#[test]
fn doubly_unique_vertex_swaps_with_two_cousins() {
    // On a triangle with one spare color, vertex 0's start and target colors
    // are both unique, held on the other side by vertices 2 and 1: vertex 1
    // parks on the spare color, vertex 0 lands, vertex 2 lands. The pair
    // {0, 2} leaves; vertex 1 finishes alone on the next level.
    let inst = uniform_instance(
        Graph::complete(3),
        &[1, 2, 3, 4],
        vec![1, 2, 3],
        vec![2, 3, 1],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::CousinIntersection);
    assert_eq!(
        entry.steps_forward,
        vec![Step::new(1, 4), Step::new(0, 2), Step::new(2, 1)]
    );
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![0, 2]);
    assert_eq!(entry.mu_drop, 1);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(0, 2)]));

    assert_eq!(planned.ledger[1].kind, ReductionKind::EdgelessFinish);
    assert_eq!(planned.ledger[1].steps_forward, vec![Step::new(1, 3)]);

    assert_eq!(check_plan(&inst, &planned), 4);
    assert_eq!(oracle_distance(&inst), 4);
}

#[test]
fn coinciding_cousins_still_rotate_cleanly() {
    // Two disjoint color swaps on K4. For vertex 0 the two cousins coincide
    // in vertex 1, which parks on the only spare color before the rotation.
    // Each level settles one adjacent pair; six moves meet n + μ = 4 + 2 and
    // the oracle confirms optimality.
    let inst = uniform_instance(
        Graph::complete(4),
        &[1, 2, 3, 4, 5],
        vec![1, 2, 3, 4],
        vec![2, 1, 4, 3],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::CousinIntersection);
    assert_eq!(
        entry.steps_forward,
        vec![Step::new(1, 5), Step::new(0, 2), Step::new(1, 1)]
    );
    assert_eq!(entry.removed, vec![0, 1]);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(0, 1)]));

    assert_eq!(check_plan(&inst, &planned), 6);
    assert_eq!(oracle_distance(&inst), 6);
}

#[test]
fn doubly_held_color_lands_with_both_cousins_parked() {
    // Parts {0,1,2}, {3,4}, {5,6}, {7,8}. Color 1 is held exactly twice at
    // the start (vertices 3, 4), both target-unique; their cousins 5 and 6
    // park (each avoiding the other's landing target), the pair lands, and
    // the target-side class {7, 8} takes color 1.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[3, 2, 2, 2]),
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        vec![6, 6, 6, 1, 1, 2, 3, 4, 4],
        vec![4, 4, 4, 2, 3, 6, 6, 1, 1],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::DoublePair);
    assert_eq!(
        entry.steps_forward,
        vec![
            Step::new(5, 5),
            Step::new(6, 5),
            Step::new(3, 2),
            Step::new(4, 3),
            Step::new(7, 1),
            Step::new(8, 1),
        ]
    );
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![3, 4, 7, 8]);
    assert_eq!(entry.mu_drop, 2);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(3, 7), (4, 8)]));

    let len = check_plan(&inst, &planned);
    assert!(len <= 9 + 4);
}

#[test]
fn outnumbered_third_part_color_retires_on_both_sides() {
    // Parts {0,1,2}, {3,4,5}, {6,7}. The third part holds color 2 twice at
    // the start while three vertices want it at the target: both holders
    // move to their smallest free color on both sides, the target class
    // lands forward, and the remaining part finishes edgeless.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[3, 3, 2]),
        &[1, 2, 3, 4, 5, 6, 7, 8],
        vec![1, 1, 1, 3, 3, 3, 2, 2],
        vec![2, 2, 2, 1, 1, 1, 3, 3],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::ThirdPartMajority);
    assert_eq!(
        entry.steps_forward,
        vec![
            Step::new(6, 4),
            Step::new(7, 4),
            Step::new(0, 2),
            Step::new(1, 2),
            Step::new(2, 2),
        ]
    );
    assert_eq!(entry.steps_backward, vec![Step::new(6, 4), Step::new(7, 4)]);
    assert_eq!(entry.removed, vec![0, 1, 2, 6, 7]);
    assert_eq!(entry.mu_drop, 2);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(0, 6), (1, 7)]));

    assert_eq!(planned.ledger[1].kind, ReductionKind::EdgelessFinish);
    assert_eq!(
        planned.ledger[1].steps_forward,
        vec![Step::new(3, 1), Step::new(4, 1), Step::new(5, 1)]
    );

    assert_eq!(check_plan(&inst, &planned), 10);
}

#[test]
fn third_part_retirement_cascades_through_levels() {
    // Three parts of three. Level one retires the singleton color 4 (held
    // by vertex 6, wanted by vertex 0); level two retires color 5 from what
    // remains of the third part; the final part finishes edgeless. Twelve
    // moves against the bound 9 + 4.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[3, 3, 3]),
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        vec![1, 1, 1, 2, 2, 2, 4, 5, 5],
        vec![4, 2, 2, 5, 5, 5, 1, 1, 1],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let first = &planned.ledger[0];
    assert_eq!(first.kind, ReductionKind::ThirdPartMajority);
    assert_eq!(first.steps_forward, vec![Step::new(6, 3), Step::new(0, 4)]);
    assert_eq!(first.steps_backward, vec![Step::new(6, 3)]);
    assert_eq!(first.removed, vec![0, 6]);
    assert_eq!(first.mu_drop, 1);
    assert_eq!(first.witness, MuWitness::Edges(vec![(0, 6)]));

    let second = &planned.ledger[1];
    assert_eq!(second.kind, ReductionKind::ThirdPartMajority);
    assert_eq!(
        second.steps_forward,
        vec![
            Step::new(7, 3),
            Step::new(8, 3),
            Step::new(3, 5),
            Step::new(4, 5),
            Step::new(5, 5),
        ]
    );
    assert_eq!(second.steps_backward, vec![Step::new(7, 3), Step::new(8, 3)]);
    assert_eq!(second.removed, vec![3, 4, 5, 7, 8]);
    assert_eq!(second.mu_drop, 2);
    assert_eq!(second.witness, MuWitness::Edges(vec![(3, 7), (4, 8)]));

    let third = &planned.ledger[2];
    assert_eq!(third.kind, ReductionKind::EdgelessFinish);
    assert_eq!(third.steps_forward, vec![Step::new(1, 2), Step::new(2, 2)]);

    assert_eq!(check_plan(&inst, &planned), 12);
}

#[test]
fn balanced_deadlock_sweeps_the_third_part_wholesale() {
    // Parts {0,1,2,3}, {4,5,6}, {7,8,9}. Both third-part colors hold strict
    // majorities on their own side, every cheaper rule is silent, and the
    // blocker sets coincide: vertices 2 and 3 park, the third part lands on
    // its targets, and the blockers land after it. The residual K_{2,3}
    // finishes via the dominant-part direct finish. Fourteen moves against
    // the bound 10 + 5.
    let inst = uniform_instance(
        Graph::complete_multipartite(&[4, 3, 3]),
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        vec![1, 1, 4, 4, 2, 2, 2, 3, 3, 3],
        vec![2, 2, 3, 3, 1, 1, 1, 4, 4, 4],
    );
    let planned = plan_multipartite(&inst).unwrap();

    let entry = &planned.ledger[0];
    assert_eq!(entry.kind, ReductionKind::ThirdPartSweep);
    assert_eq!(
        entry.steps_forward,
        vec![
            Step::new(2, 1),
            Step::new(3, 1),
            Step::new(7, 4),
            Step::new(8, 4),
            Step::new(9, 4),
            Step::new(2, 3),
            Step::new(3, 3),
        ]
    );
    assert!(entry.steps_backward.is_empty());
    assert_eq!(entry.removed, vec![2, 3, 7, 8, 9]);
    assert_eq!(entry.mu_drop, 2);
    assert_eq!(entry.witness, MuWitness::Edges(vec![(2, 7), (3, 8)]));

    let finish = &planned.ledger[1];
    assert_eq!(finish.kind, ReductionKind::LargeDirectFinish);
    assert_eq!(
        finish.steps_forward,
        vec![
            Step::new(0, 3),
            Step::new(1, 3),
            Step::new(4, 1),
            Step::new(5, 1),
            Step::new(6, 1),
            Step::new(0, 2),
            Step::new(1, 2),
        ]
    );
    assert_eq!(finish.removed, vec![0, 1, 4, 5, 6]);
    assert_eq!(finish.mu_drop, 2);
    assert_eq!(finish.witness, MuWitness::Edges(vec![(0, 4), (1, 5)]));

    assert_eq!(check_plan(&inst, &planned), 14);
}

#[test]
fn every_coloring_pair_of_a_four_cycle_stays_within_bound() {
    // K_{2,2} with four colors has 84 proper list colorings; every ordered
    // pair must be solvable within n + μ = 6 moves, and the plan for an
    // equal pair must be empty.
    let g = Graph::complete_multipartite(&[2, 2]);
    let lists = ListAssignment::uniform(4, &[1, 2, 3, 4]);
    let space = ReconfGraph::build(&g, &lists, &OracleOptions::default()).unwrap();
    assert_eq!(space.len(), 84);

    let colorings: Vec<Coloring> = space.colorings().to_vec();
    for a in &colorings {
        for b in &colorings {
            let inst = Instance::new(g.clone(), lists.clone(), a.clone(), b.clone()).unwrap();
            let planned = plan_multipartite(&inst)
                .unwrap_or_else(|e| panic!("{a:?} -> {b:?} failed to plan: {e}"));
            let len = check_plan(&inst, &planned);
            assert!(len <= 6, "{a:?} -> {b:?} used {len} moves");
            if a == b {
                assert_eq!(len, 0);
            }
        }
    }
}
