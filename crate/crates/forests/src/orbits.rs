//! Orbits of weights under the shift and automorphism groups, and the
//! Galois action on those orbits.

use crate::shape::ForestShape;
use crate::weights::{enumerate_weights, Weight};
use crate::ForestError;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

/// Orbit decomposition of W(F) under the semidirect product of shifts and
/// automorphisms. Representatives are the lexicographically smallest
/// weights of their orbits, listed in sorted order.
#[derive(Debug, Clone)]
pub struct WeightOrbits {
    pub reps: Vec<Weight>,
    pub orbit_sizes: Vec<usize>,
    /// Map from every weight to the index of its orbit in `reps`.
    pub class_of: HashMap<Weight, usize>,
}

impl WeightOrbits {
    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

/// Breadth-first closure over the generators: per-tree shift by one and
/// the automorphism involutions.
pub fn weight_orbits(shape: &ForestShape) -> WeightOrbits {
    let all = enumerate_weights(shape);
    let trees = shape.tree_range.len();
    let mut class_of: HashMap<Weight, usize> = HashMap::new();
    let mut reps: Vec<Weight> = Vec::new();
    let mut orbit_sizes: Vec<usize> = Vec::new();
    for w in &all {
        if class_of.contains_key(w) {
            continue;
        }
        // New orbit: close under the generators.
        let mut orbit: BTreeSet<Weight> = BTreeSet::new();
        let mut queue: VecDeque<Weight> = VecDeque::new();
        orbit.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            let mut moved: Vec<Weight> = Vec::new();
            for alpha in 0..trees {
                let mut g = vec![0u64; trees];
                g[alpha] = 1;
                moved.push(x.shift(shape, &g));
            }
            for perm in &shape.aut_generators {
                moved.push(x.permute(perm));
            }
            for y in moved {
                if orbit.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let rep = orbit.iter().next().expect("orbit nonempty").clone();
        let idx = reps.len();
        orbit_sizes.push(orbit.len());
        for y in orbit {
            class_of.insert(y, idx);
        }
        reps.push(rep);
    }
    // Sort orbits by representative for determinism.
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| reps[a].cmp(&reps[b]));
    let mut new_reps = Vec::with_capacity(reps.len());
    let mut new_sizes = Vec::with_capacity(reps.len());
    let mut renumber = vec![0usize; reps.len()];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        renumber[old_idx] = new_idx;
        new_reps.push(reps[old_idx].clone());
        new_sizes.push(orbit_sizes[old_idx]);
    }
    for v in class_of.values_mut() {
        *v = renumber[*v];
    }
    WeightOrbits { reps: new_reps, orbit_sizes: new_sizes, class_of }
}

/// Field-of-definition label derived from the Galois stabilizer of a
/// weight-orbit class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldLabel {
    /// Stabilizer is everything: defined over Q.
    Rational,
    /// Stabilizer is the kernel of reduction to level e (e >= 2): Q(e).
    Cyclotomic(u8),
    /// Stabilizer is the preimage of {-1, 1} at level e (e >= 3): Q(e)+.
    RealCyclotomic(u8),
    /// Any other stabilizer, listed by its odd residues.
    Stabilizer(Vec<u64>),
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldLabel::Rational => write!(f, "Q"),
            FieldLabel::Cyclotomic(e) => write!(f, "Q({e})"),
            FieldLabel::RealCyclotomic(e) => write!(f, "Q({e})+"),
            FieldLabel::Stabilizer(gs) => {
                let body: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
                write!(f, "stab[{}]", body.join(","))
            }
        }
    }
}

impl std::str::FromStr for FieldLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "Q" {
            return Ok(FieldLabel::Rational);
        }
        if let Some(rest) = s.strip_prefix("Q(") {
            if let Some(level) = rest.strip_suffix(")+") {
                return level
                    .parse::<u8>()
                    .map(FieldLabel::RealCyclotomic)
                    .map_err(|e| e.to_string());
            }
            if let Some(level) = rest.strip_suffix(')') {
                return level
                    .parse::<u8>()
                    .map(FieldLabel::Cyclotomic)
                    .map_err(|e| e.to_string());
            }
        }
        if let Some(body) = s.strip_prefix("stab[").and_then(|r| r.strip_suffix(']')) {
            let gs: Result<Vec<u64>, _> = body.split(',').map(|x| x.trim().parse()).collect();
            return gs.map(FieldLabel::Stabilizer).map_err(|e: std::num::ParseIntError| e.to_string());
        }
        Err(format!("unrecognized field label {s}"))
    }
}

/// Galois orbit of a weight-orbit class: the residues (Z/2^d)^* act on
/// classes; returns the orbit size and the field label computed from the
/// stabilizer subgroup.
pub fn galois_orbit_and_field(
    shape: &ForestShape,
    orbits: &WeightOrbits,
    rep: &Weight,
) -> Result<(usize, FieldLabel), ForestError> {
    let class = *orbits
        .class_of
        .get(rep)
        .ok_or_else(|| ForestError::Domain("weight does not belong to this forest".into()))?;
    let d = shape.forest.depth();
    if d <= 1 {
        // The Galois group of level <= 1 is trivial.
        return Ok((1, FieldLabel::Rational));
    }
    let modulus = 1u64 << d;
    let group: Vec<u64> = (1..modulus).step_by(2).collect();
    let mut stab: Vec<u64> = Vec::new();
    let mut orbit: BTreeSet<usize> = BTreeSet::new();
    for &gamma in &group {
        let moved = rep.galois(shape, gamma)?;
        let target = *orbits
            .class_of
            .get(&moved)
            .expect("galois action preserves admissibility");
        orbit.insert(target);
        if target == class {
            stab.push(gamma);
        }
    }
    debug_assert_eq!(orbit.len() * stab.len(), group.len());
    Ok((orbit.len(), classify_stabilizer(&stab, d)))
}

fn classify_stabilizer(stab: &[u64], d: u32) -> FieldLabel {
    let modulus = 1u64 << d;
    let stab_set: BTreeSet<u64> = stab.iter().copied().collect();
    for e in (0..=d).rev() {
        let sub = 1u64 << e;
        // Kernel of reduction to level e: residues congruent to 1 mod 2^e.
        let kernel: BTreeSet<u64> = (1..modulus)
            .step_by(2)
            .filter(|g| g % sub == 1 % sub)
            .collect();
        if kernel == stab_set {
            return if e <= 1 { FieldLabel::Rational } else { FieldLabel::Cyclotomic(e as u8) };
        }
        // Preimage of {1, -1} at level e.
        let pm: BTreeSet<u64> = (1..modulus)
            .step_by(2)
            .filter(|g| {
                let r = g % sub;
                r == 1 % sub || r == (sub - 1) % sub
            })
            .collect();
        if pm == stab_set {
            return if e <= 2 { FieldLabel::Rational } else { FieldLabel::RealCyclotomic(e as u8) };
        }
    }
    FieldLabel::Stabilizer(stab.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate_forests, Forest, Tree};
    use num_bigint::BigInt;

    #[test]
    fn chain_has_one_orbit() {
        for len in 1..=5usize {
            let shape = ForestShape::new(&Forest::new(vec![Tree::chain(len)]));
            let orbits = weight_orbits(&shape);
            assert_eq!(orbits.count(), 1, "chain of {len}");
        }
    }

    #[test]
    fn orbit_sizes_partition_the_weight_set() {
        for i in 1..=7usize {
            for j in 1..=i {
                for f in enumerate_forests(i, j) {
                    let shape = ForestShape::new(&f);
                    let orbits = weight_orbits(&shape);
                    let total: usize = orbits.orbit_sizes.iter().sum();
                    let l = f.final_count();
                    assert_eq!(total, 1 << (i - l), "forest {f}");
                }
            }
        }
    }

    #[test]
    fn free_action_on_non_contractible_trees() {
        // When no contraction is possible the product group acts freely:
        // every orbit has the full group order.
        for i in 1..=7usize {
            for t in crate::tree::enumerate_trees(i).unwrap() {
                let (_, gamma) = crate::minimal_contraction(&t);
                if gamma > 0 {
                    continue;
                }
                let f = Forest::new(vec![t.clone()]);
                let shape = ForestShape::new(&f);
                let orbits = weight_orbits(&shape);
                let group_order = BigInt::from(shape.shift_group_order())
                    * crate::aut_order(&f);
                for &s in &orbits.orbit_sizes {
                    assert_eq!(BigInt::from(s), group_order, "tree {t}");
                }
            }
        }
    }

    #[test]
    fn simple_tree_galois_is_trivial_on_classes() {
        let shape = ForestShape::new(&Forest::new(vec![Tree::chain(4)]));
        let orbits = weight_orbits(&shape);
        let (size, field) = galois_orbit_and_field(&shape, &orbits, &orbits.reps[0]).unwrap();
        assert_eq!(size, 1);
        assert_eq!(field, FieldLabel::Rational);
    }

    #[test]
    fn doubled_conjugate_tree_orbits_are_a_symmetric_product() {
        // Two copies of the two-class tree: orbit classes of the pair are
        // unordered pairs of single-tree classes {aa, ab, bb}; conjugation
        // swaps aa and bb and fixes the mixed class.
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(3)]);
        let f = Forest::new(vec![t.clone(), t]);
        let shape = ForestShape::new(&f);
        let orbits = weight_orbits(&shape);
        assert_eq!(orbits.count(), 3);
        let mut census: Vec<(usize, FieldLabel)> = orbits
            .reps
            .iter()
            .map(|rep| galois_orbit_and_field(&shape, &orbits, rep).unwrap())
            .collect();
        census.sort_by_key(|(size, _)| *size);
        assert_eq!(census[0], (1, FieldLabel::Rational));
        assert_eq!(census[1], (2, FieldLabel::Cyclotomic(2)));
        assert_eq!(census[2], (2, FieldLabel::Cyclotomic(2)));
    }

    #[test]
    fn conjugate_pair_tree() {
        // Root over chains of 2 and 3: two classes forming one Galois orbit
        // defined over the level-2 field.
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(3)]);
        let shape = ForestShape::new(&Forest::new(vec![t]));
        let orbits = weight_orbits(&shape);
        assert_eq!(orbits.count(), 2);
        for rep in &orbits.reps {
            let (size, field) = galois_orbit_and_field(&shape, &orbits, rep).unwrap();
            assert_eq!(size, 2);
            assert_eq!(field, FieldLabel::Cyclotomic(2));
        }
    }
}
