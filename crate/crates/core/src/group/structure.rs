use super::finite::FiniteGroup;
use super::subgroup::Subgroup;

/// A homomorphism to `{+1, -1}`, tabulated over element indices.
pub type SignCharacter = Vec<i8>;

/// Conjugacy classes, identity class first, then sorted by `(size, smallest member key)`.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let k = g.order();
    let mut assigned = vec![false; k];
    let mut classes = Vec::new();
    for x in 0..k {
        if assigned[x] {
            continue;
        }
        // orbit under conjugation by generators is the full conjugacy class
        let mut class = vec![x];
        assigned[x] = true;
        let mut cursor = 0;
        while cursor < class.len() {
            let y = class[cursor];
            cursor += 1;
            for &s in g.generators() {
                let z = g.conjugate(s, y);
                if !assigned[z] {
                    assigned[z] = true;
                    class.push(z);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    let min_key = |c: &Vec<usize>| c.iter().map(|&i| g.key(i)).min().unwrap().to_vec();
    classes.sort_by(|a, b| {
        let a_id = a[0] == 0;
        let b_id = b[0] == 0;
        b_id.cmp(&a_id)
            .then(a.len().cmp(&b.len()))
            .then_with(|| min_key(a).cmp(&min_key(b)))
    });
    classes
}

/// Derived subgroup `[G, G]`: normal closure of the commutators of generator pairs.
pub fn commutator_subgroup(g: &FiniteGroup) -> Subgroup<'_> {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = g.commutator(a, b);
            if c != 0 {
                seeds.push(c);
            }
        }
    }
    Subgroup::normal_closure(g, &seeds)
}

/// Every homomorphism `G → {±1}`, trivial character first.
pub fn sign_characters(g: &FiniteGroup) -> Vec<SignCharacter> {
    let gens = reduced_generators(g);
    let tree = g.spanning_tree(&gens);
    let mut out: Vec<SignCharacter> = Vec::new();
    for mask in 0u64..(1u64 << gens.len()) {
        let on_gens: Vec<i8> = (0..gens.len())
            .map(|s| if mask >> s & 1 == 1 { -1 } else { 1 })
            .collect();
        let mut chi = vec![0i8; g.order()];
        chi[0] = 1;
        for &(j, p, s) in &tree {
            chi[j] = chi[p] * on_gens[s];
        }
        let consistent = (0..g.order()).all(|i| {
            gens.iter()
                .enumerate()
                .all(|(s, &x)| chi[g.mul(i, x)] == chi[i] * on_gens[s])
        });
        if consistent {
            out.push(chi);
        }
    }
    out.sort_by(|a, b| {
        let a_triv = a.iter().all(|&v| v == 1);
        let b_triv = b.iter().all(|&v| v == 1);
        b_triv.cmp(&a_triv).then_with(|| b.cmp(a))
    });
    out
}

/// Greedy irredundant sub-list of the group's generators.
pub fn reduced_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut sub = g.trivial();
    let mut kept = Vec::new();
    for &x in g.generators() {
        if !sub.contains(x) {
            sub.adjoin(x);
            kept.push(x);
        }
    }
    kept
}
