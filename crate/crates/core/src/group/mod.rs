//! Finite groups built by closing a generator list.

mod element;
mod finite;
mod modmatrix;
mod perm;
mod structure;
mod subgroup;

pub use element::GroupElement;
pub use finite::{close_generators, FiniteGroup, DEFAULT_CAP};
pub use modmatrix::ModMatrix;
pub use perm::Perm;
pub use structure::{
    commutator_subgroup, conjugacy_classes, reduced_generators, sign_characters, SignCharacter,
};
pub use subgroup::Subgroup;

/// Group generated by permutations given in one-based cycle notation.
pub fn perm_group(degree: usize, gens: &[&[&[usize]]]) -> crate::Result<FiniteGroup> {
    let elems = gens
        .iter()
        .map(|cycles| {
            let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
            Perm::from_cycles(degree, &cycles).map(GroupElement::from)
        })
        .collect::<crate::Result<Vec<_>>>()?;
    close_generators(&elems, DEFAULT_CAP)
}

#[cfg(test)]
mod tests;
