use jordan_lab::conicfibers::{
    construct_no_swap_subgroup, greedy_selection, random_model, trial_rng, FiberActionModel, SelectionOutcome,
};
use jordan_lab::group::Subgroup;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn brute_swap_free(model: &FiberActionModel, h: &Subgroup<'_>) -> bool {
    h.members()
        .iter()
        .all(|&x| model.fibers().iter().all(|&[a, b]| model.act(x, a) != b))
}

fn random_subgroup<'g>(model: &'g FiberActionModel, rng: &mut impl Rng) -> Subgroup<'g> {
    let g = model.group();
    let k = rng.gen_range(0..=2);
    let seeds: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.order())).collect();
    Subgroup::generated(g, &seeds)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn greedy_succeeds_iff_no_swap(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let model = random_model(&mut rng).unwrap();
        let h = random_subgroup(&model, &mut rng);
        let out = greedy_selection(&model, &h);
        prop_assert_eq!(out.is_success(), brute_swap_free(&model, &h));
        match out {
            SelectionOutcome::Selected { components } => {
                prop_assert_eq!(components.len(), model.fibers().len());
                let fibers: std::collections::BTreeSet<usize> =
                    components.iter().map(|&c| model.fiber_of(c)).collect();
                prop_assert_eq!(fibers.len(), model.fibers().len());
                for &x in &h.members() {
                    for &c in &components {
                        prop_assert!(components.binary_search(&model.act(x, c)).is_ok());
                    }
                }
            }
            SelectionOutcome::Failure { witness, fiber } => {
                prop_assert!(h.contains(witness));
                prop_assert!(model.swaps(witness, fiber));
            }
        }
    }

    #[test]
    fn relabeling_does_not_change_the_outcome(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 1);
        let model = random_model(&mut rng).unwrap();
        let seeds: Vec<usize> = {
            let h = random_subgroup(&model, &mut rng);
            h.generators().to_vec()
        };
        let m = model.fibers().len();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut rng);
        let flip: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
        let other = model.relabeled(&perm, &flip).unwrap();
        let a = greedy_selection(&model, &Subgroup::generated(model.group(), &seeds)).is_success();
        let b = greedy_selection(&other, &Subgroup::generated(other.group(), &seeds)).is_success();
        prop_assert_eq!(a, b);
        prop_assert_eq!(
            construct_no_swap_subgroup(&model).index,
            construct_no_swap_subgroup(&other).index
        );
    }

    #[test]
    fn swap_signature_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 2);
        let model = random_model(&mut rng).unwrap();
        let g = model.group();
        for &a in g.generators() {
            for &b in g.generators() {
                prop_assert_eq!(model.swap_signature(g.mul(a, b)), model.swap_signature(a) ^ model.swap_signature(b));
            }
        }
    }

    #[test]
    fn no_swap_subgroup_is_swap_free(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 3);
        let model = random_model(&mut rng).unwrap();
        let r = construct_no_swap_subgroup(&model);
        prop_assert!(brute_swap_free(&model, &r.subgroup));
        prop_assert!(greedy_selection(&model, &r.subgroup).is_success());
        prop_assert!(r.index <= 16);
    }
}
