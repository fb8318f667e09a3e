//! Finite abelian groups acting on the singular fibers of a conic bundle over a line.
//!
//! The model is combinatorial: every singular fiber is a pair of components, the group
//! permutes components, and its action on fibers away from the two marked base points
//! factors through a cyclic quotient acting freely on those fibers.
//! [`construct_no_swap_subgroup`] finds a subgroup `A'` exchanging no pair of components
//! of any fiber, which is what an equivariant contraction of one component per fiber
//! needs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{close_generators, sign_characters, FiniteGroup, GroupElement, Perm, Subgroup};

/// The index `[G : A]` of an abelian subgroup bounding the conic-bundle case, quoted
/// from the literature.
pub const ABELIAN_INDEX_BOUND: u64 = 288;

/// A finite abelian group as a product of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianType {
    pub factors: Vec<u32>,
}

fn prime_power_parts(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl AbelianType {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidModel("cyclic factor of order 0".into()));
        }
        Ok(AbelianType { factors })
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&n| n as u64).product()
    }

    /// Invariant factors `d₁ | d₂ | … | d_k`, each greater than 1.
    pub fn invariant_factors(&self) -> Vec<u32> {
        let mut by_prime: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for &n in &self.factors {
            for (p, q) in prime_power_parts(n) {
                by_prime.entry(p).or_default().push(q);
            }
        }
        let k = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![1u32; k];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            // largest powers go to the last invariant factors
            for (slot, q) in out.iter_mut().rev().zip(powers.iter().rev()) {
                *slot *= q;
            }
        }
        out
    }

    /// Number of invariant factors divisible by 2.
    pub fn two_rank(&self) -> u32 {
        self.factors.iter().filter(|&&n| n % 2 == 0).count() as u32
    }

    /// Whether the group is isomorphic to one of the finite abelian subgroups of the
    /// plane Cremona group: `Z/m × Z/n`, `Z/2n × (Z/2)²`, `(Z/4)² × Z/2`, `(Z/3)³`,
    /// `(Z/2)⁴`.
    pub fn is_admissible(&self) -> bool {
        match self.invariant_factors().as_slice() {
            f if f.len() <= 2 => true,
            [2, 2, d] => d % 2 == 0,
            [2, 4, 4] | [3, 3, 3] | [2, 2, 2, 2] => true,
            _ => false,
        }
    }
}

/// Families of admissible types, with `m`, `n` drawn from `1..=max_param`.
pub fn admissible_families(max_param: u32) -> Vec<AbelianType> {
    let mut out = Vec::new();
    for m in 1..=max_param {
        for n in m..=max_param {
            out.push(AbelianType { factors: vec![m, n] });
        }
    }
    for n in 1..=max_param {
        out.push(AbelianType { factors: vec![2 * n, 2, 2] });
    }
    out.push(AbelianType { factors: vec![4, 4, 2] });
    out.push(AbelianType { factors: vec![3, 3, 3] });
    out.push(AbelianType { factors: vec![2, 2, 2, 2] });
    out
}

/// `ABELIAN_INDEX_BOUND · max 2^r` over the admissible families.
pub fn weak_geometric_constant() -> u64 {
    ABELIAN_INDEX_BOUND * two_rank_factor()
}

pub fn two_rank_factor() -> u64 {
    admissible_families(12)
        .iter()
        .map(|t| 1u64 << t.two_rank())
        .max()
        .unwrap_or(1)
}

/// Recipe for a [`FiberActionModel`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelSpec {
    pub abelian_type: AbelianType,
    /// Base homomorphism `A → Z/base_modulus`, by its values on the cyclic generators.
    pub base_modulus: u32,
    pub base_values: Vec<u32>,
    /// Swap characters `A → Z/2` of the (at most two) marked fibers, on the generators.
    pub marked: Vec<Vec<u8>>,
    /// One entry per orbit of unmarked fibers: a `{±1}`-character of the base kernel `K`,
    /// tabulated over all of `A` (entries outside `K` are ignored). The components of
    /// the orbit are the cosets of its kernel.
    pub orbits: Vec<Vec<i8>>,
}

/// `A` acting on `2m` components grouped into `m` fibers.
#[derive(Debug, Clone)]
pub struct FiberActionModel {
    abelian_type: AbelianType,
    group: FiniteGroup,
    fibers: Vec<[usize; 2]>,
    marked: Vec<usize>,
    /// `action[g][c]` is the image of component `c` under element `g`.
    action: Vec<Vec<usize>>,
    fiber_of: Vec<usize>,
}

/// The product of cyclic groups as permutations on disjoint cycles, with coordinates.
pub fn abelian_group(t: &AbelianType) -> Result<(FiniteGroup, Vec<Vec<u32>>)> {
    let degree: usize = t.factors.iter().map(|&n| n as usize).sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut offset = 0;
    for &n in &t.factors {
        let cycle: Vec<usize> = (offset + 1..=offset + n as usize).collect();
        let cycles = if n > 1 { vec![cycle] } else { Vec::new() };
        gens.push(GroupElement::from(Perm::from_cycles(degree, &cycles)?));
        offset += n as usize;
    }
    if gens.is_empty() {
        gens.push(GroupElement::from(Perm::identity(degree)));
    }
    let group = close_generators(&gens, crate::group::DEFAULT_CAP)?;
    let coords = group
        .elements()
        .iter()
        .map(|e| {
            let p = e.as_perm().expect("permutation group");
            let mut offset = 0;
            t.factors
                .iter()
                .map(|&n| {
                    let x = (p.apply(offset) + n as usize - offset) as u32 % n;
                    offset += n as usize;
                    x
                })
                .collect()
        })
        .collect();
    Ok((group, coords))
}

fn linear_form(coords: &[u32], values: &[u32], modulus: u32) -> u32 {
    coords
        .iter()
        .zip(values)
        .map(|(&x, &v)| (x as u64 * v as u64 % modulus as u64) as u32)
        .fold(0, |acc, y| (acc + y) % modulus)
}

impl FiberActionModel {
    pub fn build(spec: &ModelSpec) -> Result<Self> {
        let t = &spec.abelian_type;
        let k = t.factors.len();
        let (group, coords) = abelian_group(t)?;
        let order = group.order();
        let c = spec.base_modulus;
        if c == 0 || spec.base_values.len() != k {
            return Err(Error::InvalidModel("base homomorphism needs one value per factor".into()));
        }
        for (&n, &v) in t.factors.iter().zip(&spec.base_values) {
            if (n as u64 * v as u64) % c as u64 != 0 {
                return Err(Error::InvalidModel(format!("{v} has no order dividing {n} in Z/{c}")));
            }
        }
        if spec.marked.len() > 2 {
            return Err(Error::InvalidModel("at most two marked fibers".into()));
        }
        for mu in &spec.marked {
            if mu.len() != k || t.factors.iter().zip(mu).any(|(&n, &v)| v > 1 || (v == 1 && n % 2 == 1)) {
                return Err(Error::InvalidModel("swap character is not a homomorphism".into()));
            }
        }
        let base: Vec<u32> = coords.iter().map(|x| linear_form(x, &spec.base_values, c)).collect();

        let mut fibers: Vec<[usize; 2]> = Vec::new();
        let mut action: Vec<Vec<usize>> = vec![Vec::new(); order];
        let mut marked = Vec::new();

        for mu in &spec.marked {
            let mu: Vec<u32> = mu.iter().map(|&v| v as u32).collect();
            let first = fibers.len() * 2;
            marked.push(fibers.len());
            fibers.push([first, first + 1]);
            for g in 0..order {
                let s = linear_form(&coords[g], &mu, 2) as usize;
                action[g].push(first + s);
                action[g].push(first + 1 - s);
            }
        }

        for chi in &spec.orbits {
            if chi.len() != order {
                return Err(Error::InvalidModel("orbit character must be tabulated over A".into()));
            }
            // K' = ker chi ∩ K; components are its cosets
            let in_kernel: Vec<bool> = (0..order).map(|g| base[g] == 0 && chi[g] == 1).collect();
            for x in (0..order).filter(|&x| base[x] == 0) {
                for y in (0..order).filter(|&y| base[y] == 0) {
                    if chi[group.mul(x, y)] != chi[x] * chi[y] {
                        return Err(Error::InvalidModel("orbit character is not a homomorphism on K".into()));
                    }
                }
            }
            let split = (0..order).any(|g| base[g] == 0 && chi[g] == -1);
            let coset_rep = |x: usize| {
                (0..order)
                    .filter(|&h| in_kernel[h])
                    .map(|h| group.mul(x, h))
                    .min()
                    .expect("kernel contains the identity")
            };
            let reps: BTreeSet<usize> = (0..order).map(coset_rep).collect();
            let reps: Vec<usize> = reps.into_iter().collect();
            let base_first = fibers.len() * 2;
            // component ids: coset reps (and a second copy when the orbit does not split)
            let copies = if split { 1 } else { 2 };
            let comp_id = |rep: usize, copy: usize| {
                base_first + reps.iter().position(|&r| r == rep).unwrap() * copies + copy
            };
            let mut seen = BTreeSet::new();
            for &r in &reps {
                if seen.contains(&r) {
                    continue;
                }
                if split {
                    // partner coset: r·k with chi(k) = -1
                    let k_minus = (0..order).find(|&g| base[g] == 0 && chi[g] == -1).unwrap();
                    let partner = coset_rep(group.mul(r, k_minus));
                    seen.insert(r);
                    seen.insert(partner);
                    fibers.push([comp_id(r, 0), comp_id(partner, 0)]);
                } else {
                    seen.insert(r);
                    fibers.push([comp_id(r, 0), comp_id(r, 1)]);
                }
            }
            for g in 0..order {
                for &r in &reps {
                    for copy in 0..copies {
                        debug_assert_eq!(action[g].len(), comp_id(r, copy));
                        action[g].push(comp_id(coset_rep(group.mul(g, r)), copy));
                    }
                }
            }
        }

        let model = FiberActionModel::from_parts(t.clone(), group, fibers, marked, action)?;
        Ok(model)
    }

    fn from_parts(
        abelian_type: AbelianType,
        group: FiniteGroup,
        fibers: Vec<[usize; 2]>,
        marked: Vec<usize>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut fiber_of = vec![usize::MAX; fibers.len() * 2];
        for (f, pair) in fibers.iter().enumerate() {
            for &c in pair {
                fiber_of[c] = f;
            }
        }
        let model = FiberActionModel {
            abelian_type,
            group,
            fibers,
            marked,
            action,
            fiber_of,
        };
        model.validate()?;
        Ok(model)
    }

    /// Checks the homomorphism property, fiber preservation and fixed marked fibers.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let n = self.component_count();
        if self.fiber_of.contains(&usize::MAX) {
            return Err(Error::InvalidModel("components and fibers do not match".into()));
        }
        for a in 0..g.order() {
            let act = &self.action[a];
            if act.len() != n || act.iter().collect::<BTreeSet<_>>().len() != n {
                return Err(Error::InvalidModel(format!("element {a} does not permute components")));
            }
            for pair in &self.fibers {
                if self.fiber_of[act[pair[0]]] != self.fiber_of[act[pair[1]]] {
                    return Err(Error::InvalidModel("action breaks a fiber".into()));
                }
            }
            for &f in &self.marked {
                if self.fiber_of[act[self.fibers[f][0]]] != f {
                    return Err(Error::InvalidModel("marked fiber moved".into()));
                }
            }
        }
        for &a in g.generators() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                if (0..n).any(|c| self.action[ab][c] != self.action[a][self.action[b][c]]) {
                    return Err(Error::InvalidModel("action is not a homomorphism".into()));
                }
            }
        }
        if !g.is_abelian() {
            return Err(Error::InvalidModel("group is not abelian".into()));
        }
        Ok(())
    }

    pub fn abelian_type(&self) -> &AbelianType {
        &self.abelian_type
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn fibers(&self) -> &[[usize; 2]] {
        &self.fibers
    }

    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn component_count(&self) -> usize {
        self.fibers.len() * 2
    }

    pub fn act(&self, g: usize, component: usize) -> usize {
        self.action[g][component]
    }

    pub fn fiber_of(&self, component: usize) -> usize {
        self.fiber_of[component]
    }

    pub fn partner(&self, component: usize) -> usize {
        let [a, b] = self.fibers[self.fiber_of[component]];
        if a == component {
            b
        } else {
            a
        }
    }

    /// Does `g` exchange the two components of fiber `f`?
    pub fn swaps(&self, g: usize, f: usize) -> bool {
        self.action[g][self.fibers[f][0]] == self.fibers[f][1]
    }

    /// Does `g` map fiber `f` to itself?
    pub fn fixes_fiber(&self, g: usize, f: usize) -> bool {
        self.fiber_of[self.action[g][self.fibers[f][0]]] == f
    }

    /// Swap signature at the marked fibers, as a bit mask.
    pub fn swap_signature(&self, g: usize) -> u32 {
        self.marked
            .iter()
            .enumerate()
            .filter(|&(_, &f)| self.swaps(g, f))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn unmarked(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.fibers.len()).filter(|f| !self.marked.contains(f))
    }

    /// The first element of `h` (in index order) swapping some fiber, with that fiber.
    pub fn find_swap(&self, h: &Subgroup<'_>) -> Option<(usize, usize)> {
        h.members()
            .into_iter()
            .find_map(|g| (0..self.fibers.len()).find(|&f| self.swaps(g, f)).map(|f| (g, f)))
    }

    /// Renames fibers and components by the given permutations; the group is unchanged.
    pub fn relabeled(&self, fiber_perm: &[usize], flip: &[bool]) -> Result<FiberActionModel> {
        let m = self.fibers.len();
        // old component -> new component
        let mut rename = vec![0usize; 2 * m];
        let mut fibers = vec![[0usize; 2]; m];
        for (f, pair) in self.fibers.iter().enumerate() {
            let nf = fiber_perm[f];
            let (a, b) = if flip[f] { (1, 0) } else { (0, 1) };
            rename[pair[0]] = 2 * nf + a;
            rename[pair[1]] = 2 * nf + b;
            fibers[nf] = [2 * nf, 2 * nf + 1];
        }
        let action = self
            .action
            .iter()
            .map(|act| {
                let mut out = vec![0; 2 * m];
                for c in 0..2 * m {
                    out[rename[c]] = rename[act[c]];
                }
                out
            })
            .collect();
        let marked = self.marked.iter().map(|&f| fiber_perm[f]).collect();
        FiberActionModel::from_parts(self.abelian_type.clone(), self.group.clone(), fibers, marked, action)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SelectionOutcome {
    /// One component per fiber, sorted, forming a union of orbits.
    Selected { components: Vec<usize> },
    /// `witness` exchanges the two components of `fiber`.
    Failure { witness: usize, fiber: usize },
}

impl SelectionOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, SelectionOutcome::Selected { .. })
    }
}

/// Picks a component of an uncovered fiber, adds its orbit under `h`, and repeats.
pub fn greedy_selection(model: &FiberActionModel, h: &Subgroup<'_>) -> SelectionOutcome {
    let members = h.members();
    let g = model.group();
    let mut chosen = vec![false; model.component_count()];
    let mut covered = vec![false; model.fibers().len()];
    for f in 0..model.fibers().len() {
        if covered[f] {
            continue;
        }
        let start = model.fibers()[f][0];
        // orbit element -> an element carrying `start` there
        let mut orbit: Vec<(usize, usize)> = Vec::new();
        for &x in &members {
            let c = model.act(x, start);
            if !orbit.iter().any(|&(d, _)| d == c) {
                orbit.push((c, x));
            }
        }
        for &(c, x) in &orbit {
            if let Some(&(_, y)) = orbit.iter().find(|&&(d, _)| d == model.partner(c)) {
                // y x⁻¹ carries c to its partner
                return SelectionOutcome::Failure {
                    witness: g.mul(y, g.inv(x)),
                    fiber: model.fiber_of(c),
                };
            }
        }
        for &(c, _) in &orbit {
            chosen[c] = true;
            covered[model.fiber_of(c)] = true;
        }
    }
    SelectionOutcome::Selected {
        components: (0..chosen.len()).filter(|&c| chosen[c]).collect(),
    }
}

#[derive(Debug, Clone)]
pub struct NoSwapSubgroup<'g> {
    pub subgroup: Subgroup<'g>,
    pub index: usize,
    /// The lift `a`, if one was used.
    pub lift: Option<usize>,
    /// Whether `⟨a⟩` meets the fiber stabilizer trivially.
    pub clean_lift: bool,
    /// Orders of `A₀`, its fiber stabilizer `A₀,F`, and `S`.
    pub a0_order: usize,
    pub a0f_order: usize,
    pub s_order: usize,
}

/// Builds `A' = ⟨S, a⟩`.
///
/// `A₀` fixes both components of every marked fiber, `A₀,F ⊂ A₀` fixes every unmarked
/// fiber, `S ⊂ A₀,F` fixes every component, and `a ∈ A₀` maps onto a generator of the
/// cyclic group `A₀ / A₀,F` with `⟨a⟩ ∩ A₀,F = 1`.
///
/// When no such `a` exists the result is flagged (`clean_lift = false`): the smallest
/// `⟨S, a⟩` over all other generators of the quotient that still contains no swap is
/// used, and failing that `S` itself.
pub fn construct_no_swap_subgroup<'g>(model: &'g FiberActionModel) -> NoSwapSubgroup<'g> {
    let g = model.group();
    let order = g.order();
    let unmarked: Vec<usize> = model.unmarked().collect();
    let a0: Vec<usize> = (0..order).filter(|&x| model.swap_signature(x) == 0).collect();
    let a0f: Vec<usize> = a0
        .iter()
        .copied()
        .filter(|&x| unmarked.iter().all(|&f| model.fixes_fiber(x, f)))
        .collect();
    let s: Vec<usize> = a0f
        .iter()
        .copied()
        .filter(|&x| unmarked.iter().all(|&f| !model.swaps(x, f)))
        .collect();
    let quotient = a0.len() / a0f.len();
    let in_a0f = |x: usize| a0f.binary_search(&x).is_ok();
    let order_mod = |x: usize| {
        let mut y = x;
        let mut k = 1;
        while !in_a0f(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k
    };
    let s_group = {
        let mut sub = g.trivial();
        for &x in &s {
            sub.adjoin(x);
        }
        sub
    };
    let generators_of_quotient: Vec<usize> =
        a0.iter().copied().filter(|&x| order_mod(x) == quotient).collect();

    let result = |sub: Subgroup<'g>, lift: Option<usize>, clean: bool| -> NoSwapSubgroup<'g> {
        let index = sub.index();
        NoSwapSubgroup {
            subgroup: sub,
            index,
            lift,
            clean_lift: clean,
            a0_order: a0.len(),
            a0f_order: a0f.len(),
            s_order: s.len(),
        }
    };

    if let Some(&a) = generators_of_quotient
        .iter()
        .find(|&&x| g.element_order(x) == quotient)
    {
        let mut sub = s_group.clone();
        sub.adjoin(a);
        return result(sub, Some(a), true);
    }
    let best = generators_of_quotient
        .iter()
        .map(|&a| {
            let mut sub = s_group.clone();
            sub.adjoin(a);
            (a, sub)
        })
        .filter(|(_, sub)| model.find_swap(sub).is_none())
        .min_by_key(|(a, sub)| (sub.index(), *a));
    match best {
        Some((a, sub)) => result(sub, Some(a), false),
        None => result(s_group, None, false),
    }
}

fn random_type(rng: &mut ChaCha8Rng) -> AbelianType {
    let factors = match rng.gen_range(0..5) {
        0 => vec![rng.gen_range(1..=6), rng.gen_range(1..=6)],
        1 => vec![2 * rng.gen_range(1..=3), 2, 2],
        2 => vec![4, 4, 2],
        3 => vec![3, 3, 3],
        _ => vec![2, 2, 2, 2],
    };
    AbelianType { factors }
}

/// Maximum number of singular fibers in random models.
pub const MAX_FIBERS: usize = 6;

/// A random admissible model: random base quotient, up to two marked fibers with random
/// swap characters, and random unmarked orbits, then random relabeling.
pub fn random_model(rng: &mut ChaCha8Rng) -> Result<FiberActionModel> {
    let t = random_type(rng);
    let (group, coords) = abelian_group(&t)?;
    let order = group.order();
    let c: u32 = rng.gen_range(1..=6);
    let base_values: Vec<u32> = t
        .factors
        .iter()
        .map(|&n| {
            let step = c / num_integer::gcd(c, n);
            step * rng.gen_range(0..c / step) % c
        })
        .collect();
    let base: Vec<u32> = coords.iter().map(|x| linear_form(x, &base_values, c)).collect();
    let quotient = order / base.iter().filter(|&&b| b == 0).count();

    let marked_count = rng.gen_range(0..=2usize);
    let marked: Vec<Vec<u8>> = (0..marked_count)
        .map(|_| {
            t.factors
                .iter()
                .map(|&n| if n % 2 == 0 { rng.gen_range(0..=1) } else { 0 })
                .collect()
        })
        .collect();

    let max_orbits = (MAX_FIBERS - marked_count) / quotient;
    let orbit_count = if max_orbits == 0 { 0 } else { rng.gen_range(0..=max_orbits) };
    let kernel: Vec<usize> = (0..order).filter(|&x| base[x] == 0).collect();
    let kernel_group = {
        let mut sub = group.trivial();
        for &x in &kernel {
            sub.adjoin(x);
        }
        sub
    };
    let (kgroup, embed) = kernel_group.to_group(crate::group::DEFAULT_CAP)?;
    let characters = sign_characters(&kgroup);
    let orbits: Vec<Vec<i8>> = (0..orbit_count)
        .map(|_| {
            let chi = characters.choose(rng).expect("trivial character exists");
            let mut table = vec![1i8; order];
            for (i, &x) in embed.iter().enumerate() {
                table[x] = chi[i];
            }
            table
        })
        .collect();

    let spec = ModelSpec {
        abelian_type: t,
        base_modulus: c,
        base_values,
        marked,
        orbits,
    };
    let model = FiberActionModel::build(&spec)?;
    let m = model.fibers().len();
    let mut fiber_perm: Vec<usize> = (0..m).collect();
    fiber_perm.shuffle(rng);
    let flip: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
    model.relabeled(&fiber_perm, &flip)
}

/// Generator for trial `trial` under `seed`: independent streams of one seed.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub factors: Vec<u32>,
    pub fibers: usize,
    pub marked: usize,
    pub index: usize,
    pub two_rank_bound: u64,
    pub clean_lift: bool,
    pub swap_free: bool,
    pub selection_ok: bool,
}

pub fn run_trial(seed: u64, trial: u64) -> Result<TrialRecord> {
    let mut rng = trial_rng(seed, trial);
    let model = random_model(&mut rng)?;
    let r = construct_no_swap_subgroup(&model);
    Ok(TrialRecord {
        trial,
        factors: model.abelian_type().factors.clone(),
        fibers: model.fibers().len(),
        marked: model.marked().len(),
        index: r.index,
        two_rank_bound: 1 << model.abelian_type().two_rank(),
        clean_lift: r.clean_lift,
        swap_free: model.find_swap(&r.subgroup).is_none(),
        selection_ok: greedy_selection(&model, &r.subgroup).is_success(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimulationSummary {
    pub seed: u64,
    pub trials: u64,
    pub all_swap_free: bool,
    pub max_index: usize,
    pub index_over_16: usize,
    pub index_over_two_rank_bound: usize,
    pub no_clean_lift: usize,
}

pub fn simulate(seed: u64, trials: u64) -> Result<(SimulationSummary, Vec<TrialRecord>)> {
    let records = (0..trials).map(|t| run_trial(seed, t)).collect::<Result<Vec<_>>>()?;
    let summary = SimulationSummary {
        seed,
        trials,
        all_swap_free: records.iter().all(|r| r.swap_free && r.selection_ok),
        max_index: records.iter().map(|r| r.index).max().unwrap_or(1),
        index_over_16: records.iter().filter(|r| r.index > 16).count(),
        index_over_two_rank_bound: records
            .iter()
            .filter(|r| r.index as u64 > r.two_rank_bound)
            .count(),
        no_clean_lift: records.iter().filter(|r| !r.clean_lift).count(),
    };
    Ok((summary, records))
}
