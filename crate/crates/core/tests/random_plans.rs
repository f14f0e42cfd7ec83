//! Randomized cross-validation of the planners against the exhaustive
//! search oracle: every generated instance must plan within `n + μ`, replay
//! to the target, audit cleanly, and never beat the true distance.

mod common;

use common::{
    check_plan, oracle_distance, part_profiles_up_to, random_multipartite_instance,
    random_subcubic_instance,
};
use proptest::prelude::*;
use recolor_core::coloring::{stitch, Instance};
use recolor_core::oracle::{bfs_distance, oracle_plan, OracleOptions};
use recolor_core::{plan_multipartite, plan_subcubic};

#[test]
fn subcubic_corpus_stays_within_bound_and_oracle_distance() {
    for seed in 0..200u64 {
        let inst = random_subcubic_instance(seed, 7);
        let planned = plan_subcubic(&inst)
            .unwrap_or_else(|e| panic!("seed {seed}: planning failed: {e}"));
        let len = check_plan(&inst, &planned);
        let dist = oracle_distance(&inst);
        assert!(
            dist <= len,
            "seed {seed}: oracle distance {dist} exceeds plan length {len}"
        );
    }
}

#[test]
fn multipartite_corpus_stays_within_bound_and_oracle_distance() {
    for profile in part_profiles_up_to(7) {
        for seed in 0..4u64 {
            let inst = random_multipartite_instance(&profile, seed);
            let planned = plan_multipartite(&inst)
                .unwrap_or_else(|e| panic!("{profile:?} seed {seed}: planning failed: {e}"));
            let len = check_plan(&inst, &planned);
            let dist = oracle_distance(&inst);
            assert!(
                dist <= len,
                "{profile:?} seed {seed}: oracle distance {dist} exceeds plan length {len}"
            );
        }
    }
}

#[test]
fn oracle_shortest_plans_replay_and_are_symmetric() {
    for seed in 0..20u64 {
        let inst = random_subcubic_instance(seed, 6);
        let opts = OracleOptions::default();
        let plan = oracle_plan(&inst, &opts)
            .expect("within budget")
            .expect("connected");
        let steps = stitch(&inst, &plan).expect("oracle plan should stitch");
        assert_eq!(steps.len(), oracle_distance(&inst));

        let swapped = Instance::new(
            inst.graph().clone(),
            inst.lists().clone(),
            inst.beta().clone(),
            inst.alpha().clone(),
        )
        .unwrap();
        assert_eq!(
            bfs_distance(&inst, &opts).unwrap(),
            bfs_distance(&swapped, &opts).unwrap(),
            "seed {seed}: distance must not depend on direction"
        );
    }
}

proptest! {
    #[test]
    fn any_subcubic_seed_plans_cleanly(seed in any::<u64>()) {
        let inst = random_subcubic_instance(seed, 8);
        let planned = plan_subcubic(&inst).unwrap();
        check_plan(&inst, &planned);
    }

    #[test]
    fn any_multipartite_seed_plans_cleanly(profile_idx in 0usize..44, seed in any::<u64>()) {
        let profiles = part_profiles_up_to(7);
        let inst = random_multipartite_instance(&profiles[profile_idx], seed);
        let planned = plan_multipartite(&inst).unwrap();
        check_plan(&inst, &planned);
    }
}
