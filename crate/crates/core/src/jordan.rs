//! Normal-subgroup enumeration and the Jordan index: the least index of an abelian
//! normal subgroup.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, FiniteGroup, Subgroup, DEFAULT_CAP};

/// All normal subgroups of a group, sorted by `(order, member keys)`, with a join table.
#[derive(Debug, Clone)]
pub struct NormalSubgroupLattice<'g> {
    group: &'g FiniteGroup,
    subgroups: Vec<Subgroup<'g>>,
    abelian: Vec<bool>,
    join: Vec<Vec<usize>>,
}

impl<'g> NormalSubgroupLattice<'g> {
    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    pub fn is_abelian(&self, i: usize) -> bool {
        self.abelian[i]
    }

    /// Index of the join of subgroups `i` and `j`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn orders(&self) -> Vec<usize> {
        self.subgroups.iter().map(Subgroup::order).collect()
    }

    pub fn abelian_subgroups(&self) -> impl Iterator<Item = &Subgroup<'g>> {
        self.subgroups
            .iter()
            .zip(&self.abelian)
            .filter(|(_, &a)| a)
            .map(|(s, _)| s)
    }
}

pub fn normal_subgroups(g: &FiniteGroup) -> Result<NormalSubgroupLattice<'_>> {
    normal_subgroups_capped(g, DEFAULT_CAP)
}

/// Normal closures of the conjugacy classes, closed under pairwise joins.
///
/// Every normal subgroup is the union of the classes it contains, hence the join of
/// their normal closures, so the fixpoint is complete.
pub fn normal_subgroups_capped<'g>(
    g: &'g FiniteGroup,
    cap: usize,
) -> Result<NormalSubgroupLattice<'g>> {
    if g.order() > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut list: Vec<Subgroup<'_>> = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut push = |s: Subgroup<'g>, list: &mut Vec<Subgroup<'g>>| {
        if !seen.contains_key(s.member_set()) {
            seen.insert(s.member_set().clone(), list.len());
            list.push(s);
        }
    };
    push(g.trivial(), &mut list);
    push(g.whole(), &mut list);
    for class in conjugacy_classes(g) {
        push(Subgroup::generated(g, &class), &mut list);
    }
    let mut done = 0;
    while done < list.len() {
        let next = list[done].clone();
        for j in 0..done {
            let joined = next.join(&list[j]);
            push(joined, &mut list);
        }
        done += 1;
    }

    list.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.sort_key().cmp(&b.sort_key())));
    let position: HashMap<FixedBitSet, usize> = list
        .iter()
        .enumerate()
        .map(|(i, s)| (s.member_set().clone(), i))
        .collect();
    let n = list.len();
    let mut join = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let k = if list[i].is_subgroup_of(&list[j]) {
                j
            } else if list[j].is_subgroup_of(&list[i]) {
                i
            } else {
                position[list[i].join(&list[j]).member_set()]
            };
            join[i][j] = k;
            join[j][i] = k;
        }
    }
    let abelian = list.iter().map(Subgroup::is_abelian).collect();
    Ok(NormalSubgroupLattice {
        group: g,
        subgroups: list,
        abelian,
        join,
    })
}

/// Minimal-index abelian normal subgroup together with the index.
#[derive(Debug, Clone)]
pub struct JordanCertificate<'g> {
    pub group_order: usize,
    pub index: usize,
    pub witness: Subgroup<'g>,
    pub witness_abelian: bool,
    pub witness_normal: bool,
}

pub fn jordan_index(g: &FiniteGroup) -> Result<JordanCertificate<'_>> {
    jordan_index_capped(g, DEFAULT_CAP)
}

pub fn jordan_index_capped(g: &FiniteGroup, cap: usize) -> Result<JordanCertificate<'_>> {
    let lattice = normal_subgroups_capped(g, cap)?;
    Ok(certificate(&lattice))
}

/// Picks the witness from an already computed lattice. Ties on index go to the
/// smallest member-key list.
pub fn certificate<'g>(lattice: &NormalSubgroupLattice<'g>) -> JordanCertificate<'g> {
    let witness = lattice
        .abelian_subgroups()
        .min_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then_with(|| a.sort_key().cmp(&b.sort_key()))
        })
        .expect("the trivial subgroup is abelian and normal")
        .clone();
    JordanCertificate {
        group_order: lattice.group().order(),
        index: witness.index(),
        witness_abelian: witness.is_abelian(),
        witness_normal: witness.is_normal(),
        witness,
    }
}

/// Report fragment for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JordanSummary {
    pub order: usize,
    pub jordan_index: usize,
    pub witness_order: usize,
    pub normal_subgroup_count: usize,
}

pub fn summarize(g: &FiniteGroup, cap: usize) -> Result<JordanSummary> {
    let lattice = normal_subgroups_capped(g, cap)?;
    let cert = certificate(&lattice);
    Ok(JordanSummary {
        order: g.order(),
        jordan_index: cert.index,
        witness_order: cert.witness.order(),
        normal_subgroup_count: lattice.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm_group;

    #[test]
    fn symmetric_group_on_three_letters() {
        let s3 = perm_group(3, &[&[&[1, 2]], &[&[2, 3]]]).unwrap();
        let lattice = normal_subgroups(&s3).unwrap();
        assert_eq!(lattice.orders(), vec![1, 3, 6]);
        let cert = jordan_index(&s3).unwrap();
        assert_eq!(cert.index, 2);
        assert_eq!(cert.witness.order(), 3);
        assert!(cert.witness_abelian && cert.witness_normal);
    }

    #[test]
    fn cyclic_group_of_order_six() {
        let c6 = perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]]]).unwrap();
        let lattice = normal_subgroups(&c6).unwrap();
        assert_eq!(lattice.orders(), vec![1, 2, 3, 6]);
        let cert = jordan_index(&c6).unwrap();
        assert_eq!(cert.index, 1);
        assert!(cert.witness.is_whole());
    }

    #[test]
    fn dihedral_group_of_order_twelve() {
        let d6 = perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]], &[&[2, 6], &[3, 5]]]).unwrap();
        let lattice = normal_subgroups(&d6).unwrap();
        let rotations = crate::group::Subgroup::generated(&d6, &[d6.generators()[0]]);
        assert!(lattice.subgroups().contains(&rotations));
        assert_eq!(rotations.order(), 6);
        assert_eq!(jordan_index(&d6).unwrap().index, 2);
    }

    #[test]
    fn join_table_is_commutative_and_idempotent() {
        let s4 = perm_group(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]).unwrap();
        let lattice = normal_subgroups(&s4).unwrap();
        assert_eq!(lattice.orders(), vec![1, 4, 12, 24]);
        for i in 0..lattice.len() {
            assert_eq!(lattice.join(i, i), i);
            for j in 0..lattice.len() {
                assert_eq!(lattice.join(i, j), lattice.join(j, i));
            }
        }
        assert_eq!(jordan_index(&s4).unwrap().index, 6);
    }

    #[test]
    fn cap_is_enforced() {
        let s4 = perm_group(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]).unwrap();
        assert_eq!(
            normal_subgroups_capped(&s4, 10).unwrap_err(),
            Error::CapExceeded { cap: 10 }
        );
    }
}
