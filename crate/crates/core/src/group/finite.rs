use std::collections::{BTreeMap, HashMap};

use super::element::GroupElement;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 100_000;

/// A finite group given by an explicit element list and Cayley table.
///
/// Element 0 is always the identity. Elements are listed breadth-first from the
/// generators; within one breadth-first layer they are sorted by canonical key, so the
/// table is a deterministic function of the generator list.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    elements: Vec<GroupElement>,
    keys: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    mul: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
}

/// Closes `gens` under composition, failing once more than `cap` elements appear.
pub fn close_generators(gens: &[GroupElement], cap: usize) -> Result<FiniteGroup> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    for g in gens {
        if !first.compatible(g) {
            return Err(Error::IncompatiblePayloads(format!(
                "{} and {}",
                first.kind(),
                g.kind()
            )));
        }
    }

    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut keys = vec![identity.key()];
    let mut index = HashMap::new();
    index.insert(keys[0].clone(), 0usize);

    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut fresh: BTreeMap<Vec<u8>, GroupElement> = BTreeMap::new();
        for &i in &layer {
            for g in gens {
                let prod = elements[i].compose(g);
                let key = prod.key();
                if !index.contains_key(&key) {
                    fresh.entry(key).or_insert(prod);
                }
            }
        }
        if elements.len() + fresh.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        layer = Vec::with_capacity(fresh.len());
        for (key, elem) in fresh {
            let i = elements.len();
            index.insert(key.clone(), i);
            keys.push(key);
            elements.push(elem);
            layer.push(i);
        }
    }

    let generators: Vec<usize> = gens.iter().map(|g| index[&g.key()]).collect();
    FiniteGroup::from_closed(elements, keys, index, generators)
}

impl FiniteGroup {
    fn from_closed(
        elements: Vec<GroupElement>,
        keys: Vec<Vec<u8>>,
        index: HashMap<Vec<u8>, usize>,
        generators: Vec<usize>,
    ) -> Result<FiniteGroup> {
        let k = elements.len();
        let gen_elems: Vec<&GroupElement> = generators.iter().map(|&g| &elements[g]).collect();

        // right_gen[i * ng + s] = index of elements[i] · gens[s]
        let ng = gen_elems.len();
        let mut right_gen = vec![0u32; k * ng];
        for (i, e) in elements.iter().enumerate() {
            for (s, g) in gen_elems.iter().enumerate() {
                right_gen[i * ng + s] = index[&e.compose(g).key()] as u32;
            }
        }

        // Breadth-first spanning tree: every j > 0 is parent[j] · gens[step[j]].
        let mut parent = vec![(u32::MAX, 0u32); k];
        parent[0] = (0, 0);
        let mut order = Vec::with_capacity(k);
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in 0..ng {
                let j = right_gen[i * ng + s] as usize;
                if j != 0 && parent[j].0 == u32::MAX {
                    parent[j] = (i as u32, s as u32);
                    order.push(j);
                    queue.push_back(j);
                }
            }
        }

        let mut mul = vec![0u32; k * k];
        for i in 0..k {
            mul[i * k] = i as u32;
        }
        for &j in &order {
            let (p, s) = parent[j];
            for i in 0..k {
                let ip = mul[i * k + p as usize] as usize;
                mul[i * k + j] = right_gen[ip * ng + s as usize];
            }
        }

        let mut inverse = vec![u32::MAX; k];
        for i in 0..k {
            if let Some(j) = (0..k).find(|&j| mul[i * k + j] == 0) {
                inverse[i] = j as u32;
            }
        }
        if inverse.contains(&u32::MAX) {
            return Err(Error::GroupDefinition(
                "generators do not generate a group (non-invertible element)".into(),
            ));
        }

        Ok(FiniteGroup {
            elements,
            keys,
            index,
            mul,
            inverse,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn key(&self, i: usize) -> &[u8] {
        &self.keys[i]
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(&e.key()).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g a g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, exp: usize) -> usize {
        (0..exp).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_members(self, 0..self.order(), self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup<'_> {
        Subgroup::from_members(self, [0], Vec::new())
    }

    /// Checks the Latin-square property and the inverse table.
    pub fn validate_table(&self) -> bool {
        let k = self.order();
        let mut seen = vec![0u32; k];
        for i in 0..k {
            for j in 0..k {
                let v = self.mul(i, j);
                if seen[v] == (2 * i + 1) as u32 {
                    return false;
                }
                seen[v] = (2 * i + 1) as u32;
            }
            if self.mul(i, self.inv(i)) != 0 || self.mul(self.inv(i), i) != 0 {
                return false;
            }
        }
        for j in 0..k {
            let mut col = vec![false; k];
            for i in 0..k {
                let v = self.mul(i, j);
                if col[v] {
                    return false;
                }
                col[v] = true;
            }
        }
        true
    }

    /// Byte serialization of the element keys, generators and Cayley table.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(&(self.order() as u64).to_be_bytes());
        for key in &self.keys {
            out.extend_from_slice(&(key.len() as u32).to_be_bytes());
            out.extend_from_slice(key);
        }
        for &g in &self.generators {
            out.extend_from_slice(&(g as u32).to_be_bytes());
        }
        for &m in &self.mul {
            out.extend_from_slice(&m.to_be_bytes());
        }
        out
    }

    /// Breadth-first words over `gens`: triples `(j, parent, s)` with
    /// `j = parent · gens[s]`, parents always listed before their children.
    pub fn spanning_tree(&self, gens: &[usize]) -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = Vec::with_capacity(self.order());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (s, &g) in gens.iter().enumerate() {
                let j = self.mul(i, g);
                if !seen[j] {
                    seen[j] = true;
                    out.push((j, i, s));
                    queue.push_back(j);
                }
            }
        }
        out
    }
}
