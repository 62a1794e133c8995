//! Component records: one per weight orbit per forest, with degree
//! coefficient, multiplicity, Jordan partition and Galois data.

use crate::param::param_vector;
use crate::ComponentError;
use atlas_arith::{binomial, factorial, Integer, Partition, SplitMix64};
use atlas_forests::{
    enumerate_forests, galois_orbit_and_field, jordan_partition, minimal_contraction,
    weight_orbits, FieldLabel, Forest, ForestShape, Tree, Weight,
};
use num_traits::{One, Zero};

/// One (conjectural) irreducible component.
#[derive(Debug, Clone)]
pub struct ComponentRecord {
    pub i: usize,
    pub j: usize,
    /// Canonical 1-based label within (i, j).
    pub k: usize,
    pub forest: Forest,
    /// Canonical weight-orbit representative.
    pub weight: Weight,
    /// Weight values at final nodes, preorder (compact form).
    pub weight_finals: Vec<u64>,
    /// Degree coefficient c: the component's degree at level m is
    /// c * binom(m - i, j).
    pub degree_coeff: Integer,
    /// Multiplicity mu.
    pub multiplicity: Integer,
    pub jordan: Partition,
    pub field: FieldLabel,
    pub galois_orbit: usize,
    /// Invariants carried as computed-vs-conjectural markers.
    pub flags: Vec<String>,
}

impl ComponentRecord {
    pub fn label(&self) -> String {
        format!("{}.{}.{}", self.i, self.j, self.k)
    }

    /// Degree of the level-m member of the series; zero means the member
    /// vanishes (m < i + j).
    pub fn degree_at(&self, m: usize) -> Integer {
        if m < self.i + self.j {
            return Integer::zero();
        }
        self.degree_coeff.clone() * binomial((m - self.i) as u64, self.j as u64)
    }
}

/// Multiplicity of the component of a forest: the multinomial of the tree
/// sizes times, per tree, the product over ramification nodes of
/// binom(q1 + q2, q1) with q the descendant counts.
pub fn multiplicity(forest: &Forest) -> Integer {
    let i = forest.node_count();
    let mut acc = factorial(i as u64);
    for t in forest.trees() {
        acc /= factorial(t.size() as u64);
    }
    for t in forest.trees() {
        acc *= tree_ramification_product(t);
    }
    acc
}

fn tree_ramification_product(t: &Tree) -> Integer {
    let mut acc = Integer::one();
    if let [c1, c2] = t.children() {
        acc *= binomial((c1.size() + c2.size()) as u64, c1.size() as u64);
    }
    for c in t.children() {
        acc *= tree_ramification_product(c);
    }
    acc
}

/// Degree coefficient of the minimal component of (F, w):
/// 2^{sum d_alpha} j! / (2^{sum gamma_alpha} prod f_beta!) where the
/// f_beta are the sizes of the slot classes under "isomorphic tree with
/// shift-equivalent weight".
pub fn degree_coefficient(shape: &ForestShape, w: &Weight) -> Integer {
    let j = shape.tree_range.len();
    let mut num = Integer::one();
    for &d in &shape.tree_depth {
        num <<= d;
    }
    num *= factorial(j as u64);
    let mut den = Integer::one();
    for t in shape.forest.trees() {
        let (_, gamma) = minimal_contraction(t);
        den <<= gamma;
    }
    for f in slot_class_sizes(shape, w) {
        den *= factorial(f as u64);
    }
    debug_assert!((num.clone() % den.clone()).is_zero(), "degree coefficient is integral");
    num / den
}

/// Class sizes of the equivalence "same tree, weights in the same
/// single-tree shift+automorphism orbit".
fn slot_class_sizes(shape: &ForestShape, w: &Weight) -> Vec<usize> {
    let trees = shape.forest.trees();
    let mut keys: Vec<(String, Weight)> = Vec::new();
    for (alpha, t) in trees.iter().enumerate() {
        let (s, e) = shape.tree_range[alpha];
        let restricted = Weight(w.0[s..e].to_vec());
        let single = ForestShape::new(&Forest::new(vec![t.clone()]));
        let orbits = weight_orbits(&single);
        let class = orbits.class_of[&restricted];
        keys.push((t.encode(), orbits.reps[class].clone()));
    }
    let mut sizes: Vec<usize> = Vec::new();
    let mut seen: Vec<(String, Weight)> = Vec::new();
    for k in keys {
        if let Some(pos) = seen.iter().position(|x| *x == k) {
            sizes[pos] += 1;
        } else {
            seen.push(k);
            sizes.push(1);
        }
    }
    sizes
}

/// Covering data for a single tree: the contraction depth gamma, the
/// conjectural image degree 2^{d - gamma}, with two independent
/// confirmations: every coordinate lies in the subring generated by
/// c^{2^gamma}, and a random hyperplane section has parameter degree
/// 2^d (bounded resampling if a section degenerates).
pub fn covering_and_degree(
    tree: &Tree,
    w: &Weight,
    seed: u64,
) -> Result<(u32, Integer), ComponentError> {
    let shape = ForestShape::new(&Forest::new(vec![tree.clone()]));
    let (_, gamma) = minimal_contraction(tree);
    let d = tree.depth();
    let pv = param_vector(&shape, w)?;
    // Coordinates are polynomials in c^{2^gamma}.
    let step = 1usize << gamma;
    for lam in &pv.lambda {
        for (e, _) in lam.iter_terms() {
            if e[0] as usize % step != 0 {
                return Err(ComponentError::Domain(format!(
                    "coordinate exponent {} not a multiple of 2^{gamma}",
                    e[0]
                )));
            }
        }
    }
    // Hyperplane confirmation.
    let mut rng = SplitMix64::new(seed).fork("hyperplane");
    let expected = 1usize << d;
    for _ in 0..16 {
        let mut section = atlas_arith::MPoly::zero_over(&pv.vars);
        for lam in &pv.lambda {
            let h = atlas_arith::CycNum::from_rational(rng.rational());
            section = section + lam.scaled(&h);
        }
        if section.degree_in(0) == expected {
            let mut deg = Integer::one();
            deg <<= d - gamma;
            return Ok((gamma, deg));
        }
    }
    Err(ComponentError::Domain(
        "hyperplane sections kept degenerating".into(),
    ))
}

/// Enumerate all component records of given node count and tree count,
/// labeled canonically: sorted by (degree coefficient, multiplicity,
/// Jordan partition, forest encoding, weight representative).
pub fn enumerate_components(i: usize, j: usize) -> Result<Vec<ComponentRecord>, ComponentError> {
    let mut rows: Vec<ComponentRecord> = Vec::new();
    for forest in enumerate_forests(i, j) {
        let shape = ForestShape::new(&forest);
        let orbits = weight_orbits(&shape);
        let mu = multiplicity(&forest);
        let jordan = jordan_partition(&forest);
        for rep in &orbits.reps {
            let c = degree_coefficient(&shape, rep);
            let (orbit_size, field) = galois_orbit_and_field(&shape, &orbits, rep)?;
            rows.push(ComponentRecord {
                i,
                j,
                k: 0,
                forest: forest.clone(),
                weight: rep.clone(),
                weight_finals: rep.final_values(&shape),
                degree_coeff: c,
                multiplicity: mu.clone(),
                jordan: jordan.clone(),
                field,
                galois_orbit: orbit_size,
                flags: vec!["degree:conjectural".into(), "multiplicity:conjectural".into()],
            });
        }
    }
    rows.sort_by(|a, b| {
        a.degree_coeff
            .cmp(&b.degree_coeff)
            .then_with(|| a.multiplicity.cmp(&b.multiplicity))
            .then_with(|| a.jordan.cmp(&b.jordan))
            .then_with(|| a.forest.cmp(&b.forest))
            .then_with(|| a.weight.cmp(&b.weight))
    });
    for (idx, r) in rows.iter_mut().enumerate() {
        r.k = idx + 1;
    }
    Ok(rows)
}

/// The balance identity: sum over k of c * mu in Irr(i, j) equals
/// binom(i-1, i-j) * i!.
pub fn balance_identity(i: usize, j: usize) -> Result<(Integer, Integer), ComponentError> {
    let rows = enumerate_components(i, j)?;
    let got: Integer = rows
        .iter()
        .map(|r| r.degree_coeff.clone() * r.multiplicity.clone())
        .sum();
    let expect = binomial((i - 1) as u64, (i - j) as u64) * factorial(i as u64);
    Ok((got, expect))
}
