use fixedbitset::FixedBitSet;

use super::finite::FiniteGroup;

/// A subgroup of a [`FiniteGroup`], stored as a membership bitset over element indices.
#[derive(Debug, Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: FixedBitSet,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    /// Wraps an already-closed member set.
    pub(crate) fn from_members(
        group: &'g FiniteGroup,
        members: impl IntoIterator<Item = usize>,
        generators: Vec<usize>,
    ) -> Self {
        let mut set = FixedBitSet::with_capacity(group.order());
        set.insert(0);
        for m in members {
            set.insert(m);
        }
        Subgroup {
            group,
            members: set,
            generators,
        }
    }

    /// Subgroup generated by `seeds`.
    pub fn generated(group: &'g FiniteGroup, seeds: &[usize]) -> Self {
        let mut sub = group.trivial();
        for &s in seeds {
            sub.adjoin(s);
        }
        sub
    }

    /// Normal closure of `seeds`: the smallest normal subgroup containing them.
    pub fn normal_closure(group: &'g FiniteGroup, seeds: &[usize]) -> Self {
        let mut sub = Subgroup::generated(group, seeds);
        loop {
            let mut grew = false;
            let gens = sub.generators.clone();
            for &g in group.generators() {
                for &h in &gens {
                    let c = group.conjugate(g, h);
                    if !sub.contains(c) {
                        sub.adjoin(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return sub;
            }
        }
    }

    /// Adds `x` to the generating set and re-closes. No-op when `x` is already a member.
    pub fn adjoin(&mut self, x: usize) {
        if self.contains(x) {
            return;
        }
        self.generators.push(x);
        let g = self.group;
        let mut stack: Vec<usize> = self.members.ones().collect();
        while let Some(a) = stack.pop() {
            for &s in &self.generators {
                let b = g.mul(a, s);
                if !self.members.contains(b) {
                    self.members.insert(b);
                    stack.push(b);
                }
            }
        }
    }

    /// Subgroup generated by both operands.
    pub fn join(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let mut out = self.clone();
        for &g in &other.generators {
            out.adjoin(g);
        }
        out
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'g>) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    /// Closed under conjugation by the parent's generators.
    pub fn is_normal(&self) -> bool {
        let g = self.group;
        g.generators().iter().all(|&x| {
            self.members
                .ones()
                .all(|h| self.members.contains(g.conjugate(x, h)))
        })
    }

    /// Pairwise commutation over the members, with early exit.
    pub fn is_abelian(&self) -> bool {
        let g = self.group;
        let gens = if self.generators.is_empty() {
            self.members()
        } else {
            self.generators.clone()
        };
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                if g.mul(a, b) != g.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Closed under the parent's multiplication and inverse; contains the identity.
    pub fn is_closed(&self) -> bool {
        let g = self.group;
        self.members.contains(0)
            && self.members.ones().all(|a| {
                self.members.contains(g.inv(a))
                    && self.members.ones().all(|b| self.members.contains(g.mul(a, b)))
            })
    }

    /// Sorted list of member element keys; orders equal-size subgroups deterministically.
    pub fn sort_key(&self) -> Vec<&'g [u8]> {
        let mut keys: Vec<&[u8]> = self.members.ones().map(|m| self.group.key(m)).collect();
        keys.sort();
        keys
    }

    /// Re-closes this subgroup as a standalone [`FiniteGroup`] on its generators,
    /// returning the group and the embedding of its element indices into the parent.
    pub fn to_group(&self, cap: usize) -> crate::Result<(FiniteGroup, Vec<usize>)> {
        let g = self.group;
        let gens: Vec<_> = if self.generators.is_empty() {
            vec![g.element(0).clone()]
        } else {
            self.generators.iter().map(|&i| g.element(i).clone()).collect()
        };
        let sub = super::close_generators(&gens, cap)?;
        let embed = sub
            .elements()
            .iter()
            .map(|e| g.index_of(e).expect("subgroup element lies in the parent"))
            .collect();
        Ok((sub, embed))
    }
}
