//! Invariant lines of subgroups of `S₅` on the anticanonical space of the quintic del
//! Pezzo surface.
//!
//! The six-dimensional space has basis `s_ij`, `i ≠ j ∈ {1, 2, 3}`, in the order of
//! [`BASIS`]. Matrices act on column vectors; column `j` of `ρ(g)` is the image of the
//! `j`-th basis vector, and `ρ(g ∘ h) = ρ(g) ρ(h)` where `g ∘ h` applies `h` first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    close_generators, commutator_subgroup, sign_characters, FiniteGroup, GroupElement, Perm,
    Subgroup, DEFAULT_CAP,
};
use crate::linalg::{common_kernel, cyclotomic_factors};
use crate::{IntMatrix, RationalMatrix};

pub const BASIS: [&str; 6] = ["s12", "s13", "s21", "s23", "s31", "s32"];

const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)];

fn basis_index(i: usize, j: usize) -> usize {
    PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .expect("label with distinct indices in 1..=3")
}

type Label = (usize, usize);

/// Matrix whose column for `src` is the listed integer combination of basis labels.
fn from_images(images: &[(Label, &[(Label, i64)])]) -> IntMatrix {
    let mut m = IntMatrix::zeros(6, 6);
    for &((si, sj), terms) in images {
        let col = basis_index(si, sj);
        for &((ti, tj), c) in terms {
            m[(basis_index(ti, tj), col)] += BigInt::from(c);
        }
    }
    m
}

fn transposition_matrix() -> IntMatrix {
    let swap = |i: usize| match i {
        1 => 2,
        2 => 1,
        k => k,
    };
    let images: Vec<(Label, Vec<(Label, i64)>)> = PAIRS
        .iter()
        .map(|&(i, j)| ((i, j), vec![((swap(i), swap(j)), 1)]))
        .collect();
    let borrowed: Vec<_> = images.iter().map(|(s, t)| (*s, t.as_slice())).collect();
    from_images(&borrowed)
}

fn five_cycle_matrix() -> IntMatrix {
    from_images(&[
        ((1, 2), &[((3, 1), 1)]),
        ((1, 3), &[((1, 3), 1), ((3, 1), -1), ((2, 3), -1)]),
        ((2, 1), &[((2, 1), 1)]),
        ((2, 3), &[((1, 2), 1), ((2, 1), -1), ((3, 2), -1)]),
        ((3, 1), &[((1, 3), 1), ((3, 1), -1), ((2, 1), 1)]),
        ((3, 2), &[((1, 2), 1), ((2, 1), -1), ((3, 1), 1)]),
    ])
}

/// An integral matrix representation of a permutation group, one matrix per element.
#[derive(Debug, Clone)]
pub struct GroupRepresentation {
    group: FiniteGroup,
    matrices: Vec<IntMatrix>,
}

impl GroupRepresentation {
    /// Extends generator images along a spanning tree and checks every product.
    pub fn from_generators(group: FiniteGroup, images: &[IntMatrix]) -> Result<Self> {
        let gens = group.generators().to_vec();
        if images.len() != gens.len() {
            return Err(Error::HomomorphismFailure(format!(
                "{} generator images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let dim = images[0].rows();
        let mut matrices: Vec<Option<IntMatrix>> = vec![None; group.order()];
        matrices[0] = Some(IntMatrix::identity(dim));
        for (j, p, s) in group.spanning_tree(&gens) {
            let m = matrices[p].as_ref().expect("parent precedes child").mul(&images[s]);
            matrices[j] = Some(m);
        }
        let rep = GroupRepresentation {
            matrices: matrices.into_iter().map(|m| m.expect("tree spans the group")).collect(),
            group,
        };
        rep.check_homomorphism()?;
        Ok(rep)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrix(&self, g: usize) -> &IntMatrix {
        &self.matrices[g]
    }

    /// Checks `ρ(ab) = ρ(a)ρ(b)` on every pair; returns the number of pairs checked.
    pub fn check_homomorphism(&self) -> Result<usize> {
        let k = self.group.order();
        for a in 0..k {
            for b in 0..k {
                if self.matrices[a].mul(&self.matrices[b]) != self.matrices[self.group.mul(a, b)] {
                    return Err(Error::HomomorphismFailure(format!(
                        "rho({}) rho({}) != rho({})",
                        self.group.element(a),
                        self.group.element(b),
                        self.group.element(self.group.mul(a, b))
                    )));
                }
            }
        }
        Ok(k * k)
    }

    /// The contragredient action `g ↦ ρ(g⁻¹)ᵀ`.
    pub fn dual(&self) -> GroupRepresentation {
        GroupRepresentation {
            group: self.group.clone(),
            matrices: (0..self.group.order())
                .map(|g| self.matrices[self.group.inv(g)].transpose())
                .collect(),
        }
    }
}

/// The representation of `S₅` generated by `(1 2)` and `(1 2 3 4 5)`.
pub fn s5_representation() -> Result<GroupRepresentation> {
    let t = Perm::from_cycles(5, &[vec![1, 2]])?;
    let c = Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]])?;
    let group = close_generators(&[t.into(), c.into()], DEFAULT_CAP)?;
    GroupRepresentation::from_generators(group, &[transposition_matrix(), five_cycle_matrix()])
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if lead_negative { -g } else { g };
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

fn eigen_blocks(rep: &GroupRepresentation, gens: &[(usize, i8)]) -> Vec<IntMatrix> {
    gens.iter()
        .map(|&(g, chi)| rep.matrix(g).shift(&BigInt::from(chi)))
        .collect()
}

/// Integral basis of `{v : ρ(h)v = v for all h ∈ H}`.
///
/// The dimension is cross-checked against the trace of the averaging projector
/// `|H|⁻¹ Σ ρ(h)`.
pub fn fixed_space(rep: &GroupRepresentation, h: &Subgroup<'_>) -> Result<Vec<Vec<BigInt>>> {
    let gens: Vec<(usize, i8)> = h.generators().iter().map(|&g| (g, 1)).collect();
    let basis: Vec<Vec<BigInt>> = common_kernel(rep.dim(), &eigen_blocks(rep, &gens))
        .into_iter()
        .map(primitive)
        .collect();
    let trace = projector_trace(rep, h);
    if trace != BigRational::from_integer(BigInt::from(basis.len())) {
        return Err(Error::ProjectorMismatch {
            kernel: basis.len(),
            trace: trace.to_string(),
        });
    }
    Ok(basis)
}

/// `tr(|H|⁻¹ Σ_{h ∈ H} ρ(h))`
pub fn projector_trace(rep: &GroupRepresentation, h: &Subgroup<'_>) -> BigRational {
    let sum: BigInt = h.members().iter().map(|&x| rep.matrix(x).trace()).sum();
    BigRational::new(sum, BigInt::from(h.order()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineWitness {
    /// Values of the character on the subgroup's generators.
    pub character: Vec<i8>,
    pub vector: Vec<i64>,
}

/// Eigenvalue data of a generator of the cyclic quotient `G / [G, G]` restricted to the
/// fixed space of `[G, G]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexNote {
    pub quotient_order: usize,
    pub generator: String,
    /// `(k, multiplicity)` for each cyclotomic factor `Φ_k` of the characteristic polynomial.
    pub cyclotomic_factors: Vec<(usize, usize)>,
    pub factor_degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantLineReport {
    pub name: String,
    pub order: usize,
    pub rational_line_exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LineWitness>,
    pub fix_space_dim: usize,
    pub complex_note: ComplexNote,
}

/// Looks for a line `L ⊂ Q⁶` stable under `G`.
///
/// Over the rationals `G` acts on such a line through a `{±1}`-valued character, so it
/// suffices to intersect the eigenspaces `ker(ρ(g) − χ(g))` over generators for each
/// character `χ` of `G`.
pub fn rational_invariant_lines(
    rep: &GroupRepresentation,
    g: &Subgroup<'_>,
    name: &str,
) -> Result<InvariantLineReport> {
    let (sub, embed) = g.to_group(DEFAULT_CAP)?;
    let mut witness = None;
    for chi in sign_characters(&sub) {
        let gens: Vec<(usize, i8)> = sub.generators().iter().map(|&x| (embed[x], chi[x])).collect();
        if let Some(v) = common_kernel(rep.dim(), &eigen_blocks(rep, &gens)).into_iter().next() {
            witness = Some(LineWitness {
                character: gens.iter().map(|&(_, c)| c).collect(),
                vector: primitive(v)
                    .iter()
                    .map(|x| x.to_i64().expect("small entries"))
                    .collect(),
            });
            break;
        }
    }

    let derived = commutator_subgroup(&sub);
    let derived_gens: Vec<usize> = derived.generators().iter().map(|&x| embed[x]).collect();
    let derived_in_parent = Subgroup::generated(rep.group(), &derived_gens);
    let fixed = fixed_space(rep, &derived_in_parent)?;
    let complex_note = complex_note(rep, &sub, &embed, &derived, &fixed);

    Ok(InvariantLineReport {
        name: name.to_string(),
        order: g.order(),
        rational_line_exists: witness.is_some(),
        witness,
        fix_space_dim: fixed.len(),
        complex_note,
    })
}

fn complex_note(
    rep: &GroupRepresentation,
    sub: &FiniteGroup,
    embed: &[usize],
    derived: &Subgroup<'_>,
    fixed: &[Vec<BigInt>],
) -> ComplexNote {
    // order of x modulo [G, G]
    let quotient_order = |x: usize| {
        let mut y = x;
        let mut k = 1;
        while !derived.contains(y) {
            y = sub.mul(y, x);
            k += 1;
        }
        k
    };
    let (x, q) = (0..sub.order())
        .map(|x| (x, quotient_order(x)))
        .fold((0, 1), |best, cur| if cur.1 > best.1 { cur } else { best });

    let f = fixed.len();
    let (factors, degrees) = if f == 0 {
        (Vec::new(), Vec::new())
    } else {
        let to_q = |v: &BigInt| BigRational::from_integer(v.clone());
        let basis = RationalMatrix::from_columns(rep.dim(), &fixed.iter().map(|v| v.iter().map(to_q).collect()).collect::<Vec<_>>());
        let m = rep.matrix(embed[x]).map(to_q);
        // R with basis · R = ρ(x) · basis, by least squares on the full-rank basis
        let bt = basis.transpose();
        let gram_inv = bt.mul(&basis).inverse().expect("basis has full column rank");
        let r = gram_inv.mul(&bt).mul(&m).mul(&basis);
        debug_assert_eq!(basis.mul(&r), m.mul(&basis));
        let (factors, rest) = cyclotomic_factors(&r.characteristic_polynomial(), sub.element_order(x));
        debug_assert!(rest.len() == 1 && rest[0].is_one());
        let degrees = factors
            .iter()
            .flat_map(|&(k, mult)| std::iter::repeat_n(crate::linalg::totient(k), mult))
            .collect();
        (factors, degrees)
    };
    ComplexNote {
        quotient_order: q,
        generator: sub.element(x).to_string(),
        cyclotomic_factors: factors,
        factor_degrees: degrees,
    }
}

/// Subgroup of `G` on an explicit member set, generated greedily.
fn subgroup_on<'g>(g: &'g FiniteGroup, members: &[usize]) -> Subgroup<'g> {
    let mut sub = g.trivial();
    for &m in members {
        sub.adjoin(m);
    }
    sub
}

fn perm_index(g: &FiniteGroup, cycles: &[Vec<usize>]) -> Result<usize> {
    let p = GroupElement::from(Perm::from_cycles(5, cycles)?);
    g.index_of(&p)
        .ok_or_else(|| Error::GroupDefinition(format!("{p} is not in the group")))
}

/// Normalizer of `h` in the ambient group, by scanning every element.
pub fn normalizer<'g>(h: &Subgroup<'g>) -> Subgroup<'g> {
    let g = h.group();
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| h.generators().iter().all(|&y| h.contains(g.conjugate(x, y))))
        .collect();
    subgroup_on(g, &members)
}

/// The five named subgroups: `(name, subgroup)` in the order S₅, A₅, 5:4, 5:2, C₅.
pub fn named_subgroups(rep: &GroupRepresentation) -> Result<Vec<(&'static str, Subgroup<'_>)>> {
    let g = rep.group();
    let c = perm_index(g, &[vec![1, 3, 4, 5, 2]])?;
    let r = perm_index(g, &[vec![3, 2], vec![4, 5]])?;
    let c5 = Subgroup::generated(g, &[c]);
    let d5 = Subgroup::generated(g, &[c, r]);
    let f20 = normalizer(&c5);
    let a5 = commutator_subgroup(g);
    Ok(vec![
        ("S5", g.whole()),
        ("A5", a5),
        ("5:4", f20),
        ("5:2", d5),
        ("C5", c5),
    ])
}

/// Expected verdicts for [`named_subgroups`], in the same order.
pub const EXPECTED_VERDICTS: [(&str, bool); 5] =
    [("S5", false), ("A5", false), ("5:4", false), ("5:2", true), ("C5", true)];

pub fn dp5_suite() -> Result<Vec<InvariantLineReport>> {
    let rep = s5_representation()?;
    dp5_suite_for(&rep)
}

pub fn dp5_suite_for(rep: &GroupRepresentation) -> Result<Vec<InvariantLineReport>> {
    named_subgroups(rep)?
        .iter()
        .map(|(name, h)| rational_invariant_lines(rep, h, name))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn generator_matrices() {
        let t = transposition_matrix();
        // (1 2) permutes labels: every column has a single 1
        for j in 0..6 {
            let col = t.column(j);
            assert_eq!(col.iter().filter(|x| **x == int(1)).count(), 1);
            assert_eq!(col.iter().filter(|x| x.is_zero()).count(), 5);
        }
        assert!(t.pow(2).is_identity());
        let c = five_cycle_matrix();
        assert!(c.pow(5).is_identity());
        assert!(!c.is_identity());
        // s12 -> s31
        assert_eq!(c.column(0), vec![int(0), int(0), int(0), int(0), int(1), int(0)]);
    }

    #[test]
    fn representation_basics() {
        let rep = s5_representation().unwrap();
        assert_eq!(rep.group().order(), 120);
        assert!(rep.matrix(0).is_identity());
        for g in 0..120 {
            assert!(rep.matrix(g).determinant().abs().is_one());
        }
        assert!(rep.dual().check_homomorphism().is_ok());
    }

    #[test]
    fn broken_images_are_rejected() {
        let t = Perm::from_cycles(5, &[vec![1, 2]]).unwrap();
        let c = Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let group = close_generators(&[t.into(), c.into()], DEFAULT_CAP).unwrap();
        let err = GroupRepresentation::from_generators(
            group,
            &[IntMatrix::identity(6), five_cycle_matrix()],
        )
        .unwrap_err();
        assert!(matches!(err, Error::HomomorphismFailure(_)));
    }

    #[test]
    fn fixed_space_examples() {
        let rep = s5_representation().unwrap();
        let g = rep.group();
        assert_eq!(fixed_space(&rep, &g.trivial()).unwrap().len(), 6);
        let subs = named_subgroups(&rep).unwrap();
        let dims: Vec<usize> = subs.iter().map(|(_, h)| fixed_space(&rep, h).unwrap().len()).collect();
        assert_eq!((dims[1], dims[4]), (0, 2));
        for ((_, h), d) in subs.iter().zip(&dims) {
            // independent oracle: average of traces over every member
            let total: i64 = h.members().iter().map(|&x| {
                (0..6).map(|i| rep.matrix(x)[(i, i)].to_i64().unwrap()).sum::<i64>()
            }).sum();
            assert_eq!(total, (*d * h.order()) as i64);
        }
        let orders: Vec<usize> = subs.iter().map(|(_, h)| h.order()).collect();
        assert_eq!(orders, vec![120, 60, 20, 10, 5]);
    }

    #[test]
    fn verdicts() {
        let reports = dp5_suite().unwrap();
        for (r, (name, expected)) in reports.iter().zip(EXPECTED_VERDICTS) {
            assert_eq!(r.name, name);
            assert_eq!(r.rational_line_exists, expected, "{name}");
        }
        let f20 = &reports[2];
        assert_eq!(f20.fix_space_dim, 2);
        assert_eq!(f20.complex_note.quotient_order, 4);
        assert_eq!(f20.complex_note.cyclotomic_factors, vec![(4, 1)]);
    }

    #[test]
    fn witness_is_an_eigenvector() {
        let rep = s5_representation().unwrap();
        for (name, h) in named_subgroups(&rep).unwrap() {
            let r = rational_invariant_lines(&rep, &h, name).unwrap();
            let Some(w) = r.witness else { continue };
            let v: Vec<BigInt> = w.vector.iter().map(|&x| int(x)).collect();
            let (sub, embed) = h.to_group(DEFAULT_CAP).unwrap();
            for (&x, &chi) in sub.generators().iter().zip(&w.character) {
                let image = rep.matrix(embed[x]).apply(&v);
                let scaled: Vec<BigInt> = v.iter().map(|a| a * chi as i64).collect();
                assert_eq!(image, scaled);
            }
        }
    }
}
