use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;

fn s3() -> FiniteGroup {
    perm_group(3, &[&[&[1, 2]], &[&[2, 3]]]).unwrap()
}

fn s5() -> FiniteGroup {
    perm_group(5, &[&[&[1, 2]], &[&[1, 2, 3, 4, 5]]]).unwrap()
}

fn a5() -> FiniteGroup {
    perm_group(5, &[&[&[1, 2, 3]], &[&[1, 2, 3, 4, 5]]]).unwrap()
}

fn d6() -> FiniteGroup {
    perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]], &[&[2, 6], &[3, 5]]]).unwrap()
}

fn frobenius10() -> FiniteGroup {
    perm_group(5, &[&[&[1, 3, 4, 5, 2]], &[&[3, 2], &[4, 5]]]).unwrap()
}

/// Conjugacy classes by conjugating with every element.
fn brute_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|y| g.conjugate(y, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        out.push(class);
    }
    out
}

/// Subgroup generated by every commutator of every pair.
fn brute_commutator(g: &FiniteGroup) -> Subgroup<'_> {
    let mut all = Vec::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            all.push(g.commutator(a, b));
        }
    }
    Subgroup::generated(g, &all)
}

#[test]
fn closure_examples() {
    assert_eq!(s3().order(), 6);
    let c5 = perm_group(5, &[&[&[1, 3, 4, 5, 2]]]).unwrap();
    assert_eq!(c5.order(), 5);
    assert_eq!(frobenius10().order(), 10);
    assert_eq!(s5().order(), 120);
}

#[test]
fn identity_is_element_zero() {
    for g in [s3(), s5(), d6()] {
        assert!(g.element(0).as_perm().unwrap().is_identity());
        assert!(g.validate_table());
    }
}

#[test]
fn closure_errors() {
    let p = GroupElement::from(Perm::from_cycles(3, &[vec![1, 2]]).unwrap());
    let q = GroupElement::from(Perm::from_cycles(4, &[vec![1, 2]]).unwrap());
    let m = GroupElement::from(ModMatrix::from_signed(5, 2, &[0, 1, 1, 0]).unwrap());
    assert!(matches!(
        close_generators(&[p.clone(), q], 100),
        Err(Error::IncompatiblePayloads(_))
    ));
    assert!(matches!(
        close_generators(&[p, m], 100),
        Err(Error::IncompatiblePayloads(_))
    ));
    let big = GroupElement::from(Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap());
    let t = GroupElement::from(Perm::from_cycles(5, &[vec![1, 2]]).unwrap());
    assert_eq!(
        close_generators(&[big, t], 50).unwrap_err(),
        Error::CapExceeded { cap: 50 }
    );
    assert_eq!(close_generators(&[], 50).unwrap_err(), Error::NoGenerators);
}

#[test]
fn matrix_groups_close() {
    // SL₂(Z/3) has order 24
    let a = GroupElement::from(ModMatrix::from_signed(3, 2, &[1, 1, 0, 1]).unwrap());
    let b = GroupElement::from(ModMatrix::from_signed(3, 2, &[1, 0, 1, 1]).unwrap());
    let g = close_generators(&[a, b], 1000).unwrap();
    assert_eq!(g.order(), 24);
    assert!(g.validate_table());
}

#[test]
fn class_examples() {
    let sizes = |g: &FiniteGroup| -> Vec<usize> { conjugacy_classes(g).iter().map(Vec::len).collect() };
    assert_eq!(sizes(&s3()), vec![1, 2, 3]);
    let c6 = perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]]]).unwrap();
    assert_eq!(sizes(&c6), vec![1; 6]);
    let d = d6();
    assert_eq!(conjugacy_classes(&d).len(), brute_classes(&d).len());
    assert_eq!(conjugacy_classes(&d).len(), 6);
}

#[test]
fn classes_agree_with_brute_force() {
    for g in [s3(), d6(), s5(), frobenius10()] {
        let mut ours = conjugacy_classes(&g);
        assert_eq!(ours[0], vec![0]);
        let mut brute = brute_classes(&g);
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute);
    }
}

#[test]
fn commutator_examples() {
    let c6 = perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]]]).unwrap();
    assert!(commutator_subgroup(&c6).is_trivial());
    let s = s5();
    assert_eq!(commutator_subgroup(&s).order(), 60);
    let f = frobenius10();
    let derived = commutator_subgroup(&f);
    assert_eq!(derived.order(), 5);
    assert_eq!(derived, brute_commutator(&f));
    assert!(derived.is_normal());
}

#[test]
fn character_examples() {
    assert_eq!(sign_characters(&a5()).len(), 1);
    let s = s5();
    let chars = sign_characters(&s);
    assert_eq!(chars.len(), 2);
    assert!(chars[0].iter().all(|&v| v == 1));
    for (i, e) in s.elements().iter().enumerate() {
        assert_eq!(chars[1][i], e.as_perm().unwrap().sign());
    }
    let c4 = perm_group(4, &[&[&[1, 2, 3, 4]]]).unwrap();
    assert_eq!(sign_characters(&c4).len(), 2);
    // Klein four-group: 4 characters
    let v4 = perm_group(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]).unwrap();
    assert_eq!(sign_characters(&v4).len(), 4);
}

#[test]
fn commutator_lies_in_every_character_kernel() {
    for g in [s3(), d6(), s5(), frobenius10(), a5()] {
        let derived = commutator_subgroup(&g);
        for chi in sign_characters(&g) {
            for m in derived.members() {
                assert_eq!(chi[m], 1);
            }
        }
    }
}

#[test]
fn closure_is_deterministic() {
    let a = s5().canonical_bytes();
    let b = s5().canonical_bytes();
    assert_eq!(a, b);
    let h1 = crate::lemma52::build_group(5, DEFAULT_CAP).unwrap();
    let h2 = crate::lemma52::build_group(5, DEFAULT_CAP).unwrap();
    assert_eq!(h1.canonical_bytes(), h2.canonical_bytes());
}

#[test]
fn lagrange_spot_check() {
    let h = crate::lemma52::build_group(5, DEFAULT_CAP).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in [s5(), d6(), h] {
        assert!(g.validate_table());
        for _ in 0..100 {
            let x = rng.gen_range(0..g.order());
            assert_eq!(g.order() % g.element_order(x), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_permutation_groups_are_consistent(
        a in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle(),
        b in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let pa = Perm::from_images(a.iter().map(|x| x - 1).collect()).unwrap();
        let pb = Perm::from_images(b.iter().map(|x| x - 1).collect()).unwrap();
        let g = close_generators(&[pa.into(), pb.into()], 1000).unwrap();
        prop_assert!(g.validate_table());
        let classes = conjugacy_classes(&g);
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        for c in &classes {
            prop_assert_eq!(g.order() % c.len(), 0);
        }
        let derived = commutator_subgroup(&g);
        prop_assert_eq!(&derived, &brute_commutator(&g));
        let chars = sign_characters(&g);
        prop_assert!(chars.len().is_power_of_two());
        for chi in &chars {
            for x in 0..g.order() {
                for y in 0..g.order() {
                    prop_assert_eq!(chi[g.mul(x, y)], chi[x] * chi[y]);
                }
            }
        }
    }
}
