#![allow(dead_code)]

use std::collections::BTreeSet;

use jordan_lab::group::{perm_group, FiniteGroup};
use jordan_lab::lemma52;

/// Members as a sorted index list.
pub type Members = Vec<usize>;

/// Closure of `seeds` using only the multiplication table.
pub fn close(g: &FiniteGroup, seeds: &[usize]) -> Members {
    let mut set = BTreeSet::from([0usize]);
    let mut stack = vec![0usize];
    while let Some(a) = stack.pop() {
        for &s in seeds {
            let b = g.mul(a, s);
            if set.insert(b) {
                stack.push(b);
            }
        }
    }
    set.into_iter().collect()
}

/// Every subgroup, reached by adjoining one element at a time from the trivial group.
pub fn all_subgroups(g: &FiniteGroup) -> BTreeSet<Members> {
    let mut found = BTreeSet::new();
    let mut frontier = vec![vec![0usize]];
    found.insert(vec![0usize]);
    while let Some(h) = frontier.pop() {
        for x in 0..g.order() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut seeds = h.clone();
            seeds.push(x);
            let k = close(g, &seeds);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    found
}

pub fn is_normal(g: &FiniteGroup, h: &[usize]) -> bool {
    (0..g.order()).all(|x| h.iter().all(|&y| h.binary_search(&g.conjugate(x, y)).is_ok()))
}

pub fn is_abelian(g: &FiniteGroup, h: &[usize]) -> bool {
    h.iter().all(|&a| h.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn brute_normal_subgroups(g: &FiniteGroup) -> BTreeSet<Members> {
    all_subgroups(g).into_iter().filter(|h| is_normal(g, h)).collect()
}

pub fn brute_jordan_index(g: &FiniteGroup) -> usize {
    brute_normal_subgroups(g)
        .iter()
        .filter(|h| is_abelian(g, h))
        .map(|h| g.order() / h.len())
        .min()
        .unwrap()
}

/// The small groups every lattice computation is checked against.
pub fn corpus() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("S3", perm_group(3, &[&[&[1, 2]], &[&[1, 2, 3]]]).unwrap()),
        ("D12", perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]], &[&[1, 6], &[2, 5], &[3, 4]]]).unwrap()),
        ("C6", perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]]]).unwrap()),
        (
            "Q8",
            perm_group(8, &[&[&[1, 2, 4, 7], &[3, 6, 8, 5]], &[&[1, 3, 4, 8], &[2, 5, 7, 6]]]).unwrap(),
        ),
        ("C4xC2", perm_group(6, &[&[&[1, 2, 3, 4]], &[&[5, 6]]]).unwrap()),
        ("A4", perm_group(4, &[&[&[1, 2, 3]], &[&[2, 3, 4]]]).unwrap()),
        ("S4", perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]).unwrap()),
        ("H2", lemma52::build_group(2, 100_000).unwrap()),
    ]
}
