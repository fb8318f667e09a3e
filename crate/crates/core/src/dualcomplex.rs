//! Boundary cycles of log Calabi–Yau pairs on rational surfaces.
//!
//! A [`PoleCycle`] records the boundary divisor as a cyclic sequence of components,
//! each labeled by self-intersection and arithmetic genus, together with the degree
//! `K²` of the ambient surface. Blowing up a node inserts a `(-1)`-curve into the cycle;
//! blowing up a smooth boundary point only lowers one self-intersection. Along both
//! rules `Σ C² − K² + 2L − 2Σ g` stays zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label {
    pub self_int: i32,
    pub genus: u8,
}

impl Label {
    pub fn rational(self_int: i32) -> Self {
        Label { self_int, genus: 0 }
    }

    /// Necessary condition for a curve on a del Pezzo surface: `K·C = 2g − 2 − C² < 0`.
    pub fn fano_admissible(self) -> bool {
        2 * self.genus as i32 - 2 - self.self_int < 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub label: Label,
    /// Stable identity across blow-ups; base components are numbered from 0.
    pub id: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasePair {
    /// Three lines in general position.
    Triangle,
    /// A smooth conic and a line meeting it transversally.
    ConicLine,
    /// An irreducible cubic with one node.
    NodalCubic,
}

impl BasePair {
    pub const ALL: [BasePair; 3] = [BasePair::Triangle, BasePair::ConicLine, BasePair::NodalCubic];

    pub fn name(self) -> &'static str {
        match self {
            BasePair::Triangle => "triangle",
            BasePair::ConicLine => "conic+line",
            BasePair::NodalCubic => "nodal cubic",
        }
    }
}

/// Positional blow-up: node `i` joins components `i` and `i + 1 (mod L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlowUp {
    Node(usize),
    Smooth(usize),
}

impl fmt::Display for BlowUp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowUp::Node(i) => write!(f, "N{i}"),
            BlowUp::Smooth(i) => write!(f, "S{i}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PoleCycle {
    components: Vec<Component>,
    node_ids: Vec<u32>,
    k2: i32,
    base: BasePair,
    word: Vec<BlowUp>,
    next_component_id: u32,
    next_node_id: u32,
}

impl PoleCycle {
    pub fn base(pair: BasePair) -> PoleCycle {
        let (labels, genus): (&[i32], u8) = match pair {
            BasePair::Triangle => (&[1, 1, 1], 0),
            BasePair::ConicLine => (&[4, 1], 0),
            BasePair::NodalCubic => (&[9], 1),
        };
        let components: Vec<Component> = labels
            .iter()
            .enumerate()
            .map(|(i, &s)| Component {
                label: Label { self_int: s, genus },
                id: i as u32,
            })
            .collect();
        let len = components.len() as u32;
        PoleCycle {
            components,
            node_ids: (0..len).collect(),
            k2: 9,
            base: pair,
            word: Vec::new(),
            next_component_id: len,
            next_node_id: len,
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn k2(&self) -> i32 {
        self.k2
    }

    pub fn base_pair(&self) -> BasePair {
        self.base
    }

    pub fn word(&self) -> &[BlowUp] {
        &self.word
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn labels(&self) -> Vec<Label> {
        self.components.iter().map(|c| c.label).collect()
    }

    /// `Σ C² − K² + 2L − 2Σ g`; zero for every reachable configuration.
    pub fn conservation(&self) -> i64 {
        let sum: i64 = self.components.iter().map(|c| c.label.self_int as i64).sum();
        let genus: i64 = self.components.iter().map(|c| c.label.genus as i64).sum();
        sum - self.k2 as i64 + 2 * self.len() as i64 - 2 * genus
    }

    pub fn is_loop(&self) -> bool {
        self.len() == 1
    }

    pub fn fano_admissible(&self) -> bool {
        self.components.iter().all(|c| c.label.fano_admissible())
    }

    pub fn blow_up(&self, op: BlowUp) -> Result<PoleCycle> {
        match op {
            BlowUp::Node(i) => blow_up_node(self, i),
            BlowUp::Smooth(i) => blow_up_smooth(self, i),
        }
    }

    /// Every positional blow-up available on this cycle, nodes first.
    pub fn moves(&self) -> impl Iterator<Item = BlowUp> {
        let l = self.len();
        (0..l).map(BlowUp::Node).chain((0..l).map(BlowUp::Smooth))
    }

    pub fn node_position(&self, node_id: u32) -> Option<usize> {
        self.node_ids.iter().position(|&n| n == node_id)
    }

    pub fn component_position(&self, component_id: u32) -> Option<usize> {
        self.components.iter().position(|c| c.id == component_id)
    }

    /// Lexicographically least label sequence over all rotations and reflections.
    pub fn canonical_labels(&self) -> Vec<Label> {
        let labels = self.labels();
        let l = labels.len();
        let mut best: Option<Vec<Label>> = None;
        for start in 0..l {
            for reflect in [false, true] {
                let seq: Vec<Label> = (0..l)
                    .map(|i| {
                        let j = if reflect { start + l - i } else { start + i };
                        labels[j % l]
                    })
                    .collect();
                if best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Deduplication key: canonical labels and `K²`.
    pub fn canonical_key(&self) -> CycleKey {
        CycleKey {
            labels: self.canonical_labels(),
            k2: self.k2,
        }
    }

    pub fn witness(&self) -> String {
        let mut s = self.base.name().to_string();
        if !self.word.is_empty() {
            s.push(':');
            for op in &self.word {
                s.push(' ');
                s.push_str(&op.to_string());
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleKey {
    pub labels: Vec<Label>,
    pub k2: i32,
}

/// The three coregularity-zero boundaries on the plane.
pub fn base_pairs() -> Vec<PoleCycle> {
    BasePair::ALL.iter().map(|&p| PoleCycle::base(p)).collect()
}

/// Blows up node `node` of the cycle.
///
/// On a cycle of length at least two the neighbouring components each lose one and a
/// `(-1)`-curve is inserted between them. On a nodal loop the self-intersection drops by
/// four, the genus drops to zero and the loop opens into a 2-cycle.
pub fn blow_up_node(c: &PoleCycle, node: usize) -> Result<PoleCycle> {
    let l = c.len();
    if node >= l {
        return Err(Error::NoSuchTarget { index: node, len: l });
    }
    let mut out = c.clone();
    let exceptional = Component {
        label: Label::rational(-1),
        id: out.next_component_id,
    };
    out.next_component_id += 1;
    let fresh = [out.next_node_id, out.next_node_id + 1];
    out.next_node_id += 2;

    if l == 1 {
        let comp = &mut out.components[0];
        if comp.label.genus != 1 {
            return Err(Error::NoSuchTarget { index: node, len: l });
        }
        comp.label = Label::rational(comp.label.self_int - 4);
        out.components.push(exceptional);
        out.node_ids = fresh.to_vec();
    } else {
        let next = (node + 1) % l;
        out.components[node].label.self_int -= 1;
        out.components[next].label.self_int -= 1;
        out.components.insert(node + 1, exceptional);
        out.node_ids.splice(node..=node, fresh);
    }
    out.k2 -= 1;
    out.word.push(BlowUp::Node(node));
    Ok(out)
}

/// Blows up a smooth boundary point on component `component`.
pub fn blow_up_smooth(c: &PoleCycle, component: usize) -> Result<PoleCycle> {
    if component >= c.len() {
        return Err(Error::NoSuchTarget {
            index: component,
            len: c.len(),
        });
    }
    let mut out = c.clone();
    out.components[component].label.self_int -= 1;
    out.k2 -= 1;
    out.word.push(BlowUp::Smooth(component));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    Trivial,
    /// Rotations only, `k` of them.
    Cyclic(usize),
    /// `k` rotations and `k` reflections.
    Dihedral(usize),
    Klein4,
    C2,
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryKind::Trivial => write!(f, "trivial"),
            SymmetryKind::Cyclic(k) => write!(f, "cyclic({k})"),
            SymmetryKind::Dihedral(k) => write!(f, "dihedral({k})"),
            SymmetryKind::Klein4 => write!(f, "klein4"),
            SymmetryKind::C2 => write!(f, "c2"),
        }
    }
}

impl Serialize for SymmetryKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetryGroup {
    pub order: usize,
    pub kind: SymmetryKind,
}

/// Label-preserving symmetries of the dual complex.
///
/// For cycles of length at least three these are the rotations and reflections of the
/// polygon fixing the label sequence. A 2-cycle always admits the swap of its two nodes
/// and admits the swap of its components iff their labels agree. A nodal loop has the
/// swap of the two branches at the node.
pub fn symmetry_group(c: &PoleCycle) -> SymmetryGroup {
    let labels = c.labels();
    let l = labels.len();
    match l {
        0 => SymmetryGroup {
            order: 1,
            kind: SymmetryKind::Trivial,
        },
        1 => SymmetryGroup {
            order: 2,
            kind: SymmetryKind::C2,
        },
        2 if labels[0] == labels[1] => SymmetryGroup {
            order: 4,
            kind: SymmetryKind::Klein4,
        },
        2 => SymmetryGroup {
            order: 2,
            kind: SymmetryKind::C2,
        },
        _ => {
            let rotations = (0..l)
                .filter(|&t| (0..l).all(|i| labels[(i + t) % l] == labels[i]))
                .count();
            let reflections = (0..l)
                .filter(|&t| (0..l).all(|i| labels[(t + l - i) % l] == labels[i]))
                .count();
            let order = rotations + reflections;
            let kind = if order == 1 {
                SymmetryKind::Trivial
            } else if reflections == 0 {
                SymmetryKind::Cyclic(rotations)
            } else {
                SymmetryKind::Dihedral(rotations)
            };
            SymmetryGroup { order, kind }
        }
    }
}

/// One surviving configuration of an enumeration.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub cycle: PoleCycle,
    pub symmetry: SymmetryGroup,
}

/// Output row of the `enumerate` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationRow {
    pub labels: Vec<i32>,
    pub genus: Vec<u8>,
    #[serde(rename = "K2")]
    pub k2: i32,
    pub symmetry_order: usize,
    pub symmetry_kind: SymmetryKind,
    pub witness_word: String,
}

impl Configuration {
    pub fn row(&self) -> ConfigurationRow {
        let labels = self.cycle.canonical_labels();
        ConfigurationRow {
            labels: labels.iter().map(|l| l.self_int).collect(),
            genus: labels.iter().map(|l| l.genus).collect(),
            k2: self.cycle.k2(),
            symmetry_order: self.symmetry.order,
            symmetry_kind: self.symmetry.kind,
            witness_word: self.cycle.witness(),
        }
    }
}

/// All boundary cycles on del Pezzo surfaces of degree `degree` reachable from the
/// three plane pairs by `9 − degree` blow-ups on the boundary, up to rotation and
/// reflection, keeping those whose components pass the Fano condition.
///
/// Self-intersections never increase along a blow-up word, and opening a nodal loop of
/// self-intersection `s` leaves `s − 4`, so a word violating the condition midway cannot
/// satisfy it at the end. Branches are pruned as soon as they fail.
pub fn enumerate(degree: i32) -> Result<Vec<Configuration>> {
    if !(1..=8).contains(&degree) {
        return Err(Error::InvalidDegree(degree));
    }
    let steps = (9 - degree) as usize;
    let mut found: BTreeMap<CycleKey, PoleCycle> = BTreeMap::new();
    for pair in BasePair::ALL {
        for cycle in grow(PoleCycle::base(pair), steps, true) {
            found.entry(cycle.canonical_key()).or_insert(cycle);
        }
    }
    Ok(found
        .into_values()
        .filter(PoleCycle::fano_admissible)
        .map(|cycle| Configuration {
            symmetry: symmetry_group(&cycle),
            cycle,
        })
        .collect())
}

/// Distinct configurations reached from `start` by words of length `steps`.
pub(crate) fn grow(start: PoleCycle, steps: usize, prune: bool) -> Vec<PoleCycle> {
    let mut frontier: BTreeMap<CycleKey, PoleCycle> = BTreeMap::new();
    frontier.insert(start.canonical_key(), start);
    for _ in 0..steps {
        let mut next: BTreeMap<CycleKey, PoleCycle> = BTreeMap::new();
        for cycle in frontier.values() {
            for op in cycle.moves() {
                let Ok(child) = cycle.blow_up(op) else {
                    continue;
                };
                if prune && !child.fano_admissible() {
                    continue;
                }
                next.entry(child.canonical_key()).or_insert(child);
            }
        }
        frontier = next;
    }
    frontier.into_values().collect()
}

/// Applies `len` blow-ups chosen uniformly among the available moves, ignoring the Fano
/// condition.
pub fn random_word<R: rand::Rng>(start: &PoleCycle, len: usize, rng: &mut R) -> PoleCycle {
    let mut c = start.clone();
    for _ in 0..len {
        let moves: Vec<BlowUp> = c.moves().collect();
        let op = moves[rng.gen_range(0..moves.len())];
        c = c.blow_up(op).expect("listed moves apply");
    }
    c
}

/// Largest dual-complex symmetry order for degrees 1 through 6.
pub fn max_symmetry_by_degree() -> Result<BTreeMap<i32, usize>> {
    (1..=6)
        .map(|d| {
            let best = enumerate(d)?
                .iter()
                .map(|c| c.symmetry.order)
                .max()
                .unwrap_or(0);
            Ok((d, best))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn self_ints(c: &PoleCycle) -> Vec<i32> {
        c.labels().iter().map(|l| l.self_int).collect()
    }

    #[test]
    fn base_pairs_are_balanced() {
        let pairs = base_pairs();
        assert_eq!(self_ints(&pairs[0]), vec![1, 1, 1]);
        assert_eq!(self_ints(&pairs[1]), vec![4, 1]);
        assert_eq!(self_ints(&pairs[2]), vec![9]);
        assert_eq!(pairs[2].labels()[0].genus, 1);
        for p in &pairs {
            assert_eq!(p.k2(), 9);
            assert_eq!(p.conservation(), 0);
        }
    }

    #[test]
    fn node_blow_up_on_triangle() {
        let t = PoleCycle::base(BasePair::Triangle);
        let once = blow_up_node(&t, 0).unwrap();
        assert_eq!(self_ints(&once), vec![0, -1, 0, 1]);
        assert_eq!(once.k2(), 8);
        assert_eq!(once.conservation(), 0);

        // blow up each of the three original nodes
        let mut c = t.clone();
        for id in 0..3 {
            let pos = c.node_position(id).unwrap();
            c = blow_up_node(&c, pos).unwrap();
        }
        assert_eq!(self_ints(&c), vec![-1; 6]);
        assert_eq!(c.k2(), 6);
    }

    #[test]
    fn loop_node_drops_by_four() {
        let cubic = PoleCycle::base(BasePair::NodalCubic);
        let opened = blow_up_node(&cubic, 0).unwrap();
        assert_eq!(self_ints(&opened), vec![5, -1]);
        assert!(opened.labels().iter().all(|l| l.genus == 0));
        assert_eq!(opened.k2(), 8);
        assert_eq!(opened.conservation(), 0);
    }

    #[test]
    fn smooth_blow_ups() {
        let t = blow_up_smooth(&PoleCycle::base(BasePair::Triangle), 0).unwrap();
        assert_eq!(self_ints(&t), vec![0, 1, 1]);
        assert_eq!(t.k2(), 8);

        let mut cl = PoleCycle::base(BasePair::ConicLine);
        for _ in 0..5 {
            cl = blow_up_smooth(&cl, 0).unwrap();
        }
        for _ in 0..2 {
            cl = blow_up_smooth(&cl, 1).unwrap();
        }
        assert_eq!(self_ints(&cl), vec![-1, -1]);
        assert_eq!(cl.k2(), 2);
        assert_eq!(symmetry_group(&cl).kind, SymmetryKind::Klein4);

        let mut cubic = PoleCycle::base(BasePair::NodalCubic);
        for _ in 0..8 {
            cubic = blow_up_smooth(&cubic, 0).unwrap();
        }
        assert_eq!(cubic.labels(), vec![Label { self_int: 1, genus: 1 }]);
        assert_eq!(cubic.k2(), 1);
    }

    #[test]
    fn bad_targets() {
        let t = PoleCycle::base(BasePair::Triangle);
        assert!(blow_up_node(&t, 3).is_err());
        assert!(blow_up_smooth(&t, 7).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let mut hex = PoleCycle::base(BasePair::Triangle);
        for id in 0..3 {
            let pos = hex.node_position(id).unwrap();
            hex = blow_up_node(&hex, pos).unwrap();
        }
        assert_eq!(
            symmetry_group(&hex),
            SymmetryGroup {
                order: 12,
                kind: SymmetryKind::Dihedral(6)
            }
        );
        let loop_ = PoleCycle::base(BasePair::NodalCubic);
        assert_eq!(symmetry_group(&loop_).order, 2);
        assert_eq!(symmetry_group(&loop_).kind, SymmetryKind::C2);
        let once = blow_up_node(&PoleCycle::base(BasePair::Triangle), 0).unwrap();
        // (0, -1, 0, 1): one reflection through the (-1) and 1 components
        assert_eq!(
            symmetry_group(&once),
            SymmetryGroup {
                order: 2,
                kind: SymmetryKind::Dihedral(1)
            }
        );
        let cl = PoleCycle::base(BasePair::ConicLine);
        assert_eq!(symmetry_group(&cl).kind, SymmetryKind::C2);
    }

    #[test]
    fn canonical_form_ignores_rotation_and_reflection() {
        let t = PoleCycle::base(BasePair::Triangle);
        let a = blow_up_smooth(&t, 0).unwrap();
        let b = blow_up_smooth(&t, 2).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_eq!(
            a.canonical_labels(),
            vec![Label::rational(0), Label::rational(1), Label::rational(1)]
        );
    }

    #[test]
    fn degree_examples() {
        let has = |d: i32, labels: &[i32], order: usize| {
            enumerate(d).unwrap().iter().any(|c| {
                c.cycle.canonical_labels().iter().map(|l| l.self_int).collect::<Vec<_>>() == labels
                    && c.symmetry.order == order
            })
        };
        assert!(has(6, &[-1; 6], 12));
        assert!(has(5, &[-1; 5], 10));
        assert!(has(4, &[-1; 4], 8));
        assert!(has(3, &[-1; 3], 6));
        assert!(has(2, &[-1; 2], 4));
        assert!(has(1, &[1], 2));
    }

    #[test]
    fn maximal_symmetry_table() {
        let table = max_symmetry_by_degree().unwrap();
        let expected: BTreeMap<i32, usize> = [(6, 12), (5, 10), (4, 8), (3, 6), (2, 4), (1, 2)].into();
        assert_eq!(table, expected);
    }

    #[test]
    fn degree_is_validated() {
        assert_eq!(enumerate(0).unwrap_err(), Error::InvalidDegree(0));
        assert_eq!(enumerate(9).unwrap_err(), Error::InvalidDegree(9));
    }

    #[test]
    fn pruning_matches_late_filtering() {
        for d in 4..=8 {
            let pruned: Vec<CycleKey> = enumerate(d).unwrap().iter().map(|c| c.cycle.canonical_key()).collect();
            let mut late: BTreeMap<CycleKey, ()> = BTreeMap::new();
            for pair in BasePair::ALL {
                for c in grow(PoleCycle::base(pair), (9 - d) as usize, false) {
                    if c.fano_admissible() {
                        late.insert(c.canonical_key(), ());
                    }
                }
            }
            assert_eq!(pruned, late.into_keys().collect::<Vec<_>>(), "degree {d}");
        }
    }

    #[test]
    fn every_configuration_has_the_requested_degree() {
        for d in 1..=8 {
            for c in enumerate(d).unwrap() {
                assert_eq!(c.cycle.k2(), d);
                assert_eq!(c.cycle.conservation(), 0);
            }
        }
    }
}
