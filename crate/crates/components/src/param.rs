//! The parametrization of a minimal component from a weighted forest.
//!
//! Every non-ramification node of the forest contributes one factor in an
//! abstract variable Y: a final node u at depth k of tree alpha gives the
//! quadratic Y^2 - w(u) c_alpha^{2^{d_alpha - k}}, and a non-final node
//! with child u' gives the linear Y + w(u') c_alpha^{2^{d_alpha - k - 1}}
//! (weights written multiplicatively as roots of unity). The coefficients
//! lambda_0..lambda_m of the expanded product are the projective
//! coordinates; no square root is ever materialized because paired roots
//! stay inside the quadratics.

use crate::ComponentError;
use atlas_arith::{CycNum, CycPoly, MPoly, Rational, VarSet};
use atlas_forests::{ForestShape, Weight};
use num_traits::{One, Zero};
use std::sync::Arc;

/// One multiplicative factor of the parametrizing product.
#[derive(Debug, Clone, PartialEq)]
pub enum CFactor {
    /// Y^2 - scale * c_alpha^power
    Quadratic { tree: usize, scale: CycNum, power: u32 },
    /// Y + scale * c_alpha^power
    Linear { tree: usize, scale: CycNum, power: u32 },
}

/// The factor list of a weighted forest.
#[derive(Debug, Clone)]
pub struct CFactors {
    pub factors: Vec<CFactor>,
}

impl CFactors {
    pub fn new(shape: &ForestShape, w: &Weight) -> CFactors {
        let mut factors = Vec::new();
        for u in 0..shape.node_count() {
            let tree = shape.tree_of[u];
            let d_alpha = shape.tree_depth[tree];
            let k = shape.depth[u];
            match shape.children[u].len() {
                0 => {
                    let scale = CycNum::zeta_pow(k as u8, w.0[u]);
                    factors.push(CFactor::Quadratic {
                        tree,
                        scale,
                        power: 1 << (d_alpha - k),
                    });
                }
                1 => {
                    let child = shape.children[u][0];
                    let scale = CycNum::zeta_pow((k + 1) as u8, w.0[child]);
                    factors.push(CFactor::Linear {
                        tree,
                        scale,
                        power: 1 << (d_alpha - k - 1),
                    });
                }
                _ => {} // ramification nodes contribute no factor
            }
        }
        CFactors { factors }
    }

    /// Total degree in Y of the product: twice the final-node count plus
    /// the chain-node count, which is m = i + j.
    pub fn y_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|f| match f {
                CFactor::Quadratic { .. } => 2,
                CFactor::Linear { .. } => 1,
            })
            .sum()
    }

    /// The constants of the factors evaluated at scalar parameters: the
    /// quadratic and linear constant sets, used for genericity checks.
    pub fn evaluated_constants(&self, c: &[CycNum]) -> (Vec<CycNum>, Vec<CycNum>) {
        let mut quad = Vec::new();
        let mut lin = Vec::new();
        for f in &self.factors {
            match f {
                CFactor::Quadratic { tree, scale, power } => {
                    quad.push(scale.clone() * c[*tree].pow_u64(*power as u64));
                }
                CFactor::Linear { tree, scale, power } => {
                    lin.push(scale.clone() * c[*tree].pow_u64(*power as u64));
                }
            }
        }
        (quad, lin)
    }

    /// All roots of the evaluated product are pairwise distinct iff the
    /// quadratic constants are nonzero and pairwise distinct, the linear
    /// constants are pairwise distinct, and no linear constant squares to
    /// a quadratic constant.
    pub fn roots_distinct_at(&self, c: &[CycNum]) -> bool {
        let (quad, lin) = self.evaluated_constants(c);
        for (idx, a) in quad.iter().enumerate() {
            if a.is_zero() {
                return false;
            }
            if quad[..idx].contains(a) {
                return false;
            }
        }
        for (idx, b) in lin.iter().enumerate() {
            if lin[..idx].contains(b) {
                return false;
            }
            if quad.contains(&(b.clone() * b.clone())) {
                return false;
            }
        }
        true
    }
}

/// Coefficient vector of the parametrizing product.
#[derive(Debug, Clone)]
pub struct ParamVector {
    /// m = i + j.
    pub m: usize,
    /// `lambda[beta]` over the variables c1..cj, coefficients in the
    /// 2-power cyclotomic tower; `lambda[m]` = 1.
    pub lambda: Vec<CycPoly>,
    pub vars: Arc<VarSet>,
}

impl ParamVector {
    /// Evaluate at scalar parameters, yielding a projective point.
    pub fn eval(&self, c: &[CycNum]) -> Vec<CycNum> {
        self.lambda.iter().map(|p| p.eval(c)).collect()
    }
}

/// Expand the product of the weighted forest's factors.
pub fn param_vector(shape: &ForestShape, w: &Weight) -> Result<ParamVector, ComponentError> {
    w.validate(shape)?;
    let j = shape.tree_range.len();
    let names: Vec<String> = (1..=j).map(|a| format!("c{a}")).collect();
    let vars = VarSet::new(&names);
    let yvars = vars.extended("Y");
    let y = MPoly::<CycNum>::var_named(&yvars, "Y");
    let factors = CFactors::new(shape, w);
    let mut product = MPoly::one_over(&yvars);
    for f in &factors.factors {
        let term = match f {
            CFactor::Quadratic { tree, scale, power } => {
                let mut e = vec![0u16; yvars.len()];
                e[*tree] = *power as u16;
                y.clone() * y.clone() - MPoly::monomial(&yvars, &e, scale.clone())
            }
            CFactor::Linear { tree, scale, power } => {
                let mut e = vec![0u16; yvars.len()];
                e[*tree] = *power as u16;
                y.clone() + MPoly::monomial(&yvars, &e, scale.clone())
            }
        };
        product = product * term;
    }
    let m = factors.y_degree();
    debug_assert_eq!(m, shape.node_count() + j);
    let y_idx = yvars.index_of("Y").unwrap();
    let lambda: Vec<CycPoly> = (0..=m as u16)
        .map(|b| product.coeff_of_power(y_idx, b).drop_var(y_idx))
        .collect();
    debug_assert!(lambda[m].is_one());
    Ok(ParamVector { m, lambda, vars })
}

/// Sample distinct rational parameters for which all roots of the product
/// are distinct; deterministic in the rng state, bounded retries.
pub fn sample_generic_parameters(
    shape: &ForestShape,
    w: &Weight,
    rng: &mut atlas_arith::SplitMix64,
) -> Result<Vec<CycNum>, ComponentError> {
    let j = shape.tree_range.len();
    let factors = CFactors::new(shape, w);
    for _ in 0..64 {
        let qs: Vec<Rational> = rng.distinct_rationals(j);
        let c: Vec<CycNum> = qs.into_iter().map(CycNum::from_rational).collect();
        if factors.roots_distinct_at(&c) {
            return Ok(c);
        }
    }
    Err(ComponentError::Domain(
        "could not find generic parameters with distinct roots".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_arith::rint;
    use atlas_forests::{enumerate_forests, weight_orbits, Forest, Tree};

    fn cyc(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn monic_and_constant_term() {
        // lambda_m = 1 and lambda_0 = (-1)^j prod c_alpha^{2^{d_alpha}}.
        for i in 1..=6usize {
            for j in 1..=i {
                for f in enumerate_forests(i, j) {
                    let shape = ForestShape::new(&f);
                    let orbits = weight_orbits(&shape);
                    for rep in &orbits.reps {
                        let pv = param_vector(&shape, rep).unwrap();
                        assert!(pv.lambda[pv.m].is_one(), "forest {f}");
                        let mut expect = MPoly::one_over(&pv.vars);
                        for (alpha, d) in shape.tree_depth.iter().enumerate() {
                            let mut e = vec![0u16; pv.vars.len()];
                            e[alpha] = 1 << d;
                            expect = expect * MPoly::monomial(&pv.vars, &e, CycNum::one());
                        }
                        if j % 2 == 1 {
                            expect = -expect;
                        }
                        assert_eq!(pv.lambda[0], expect, "forest {f} weight {rep:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn cherry_of_two_chains_fixture() {
        // The depth-2 tree with two length-2 branches, weight 0 on one
        // branch and (1, 1) on the other: the printed lambda vector with
        // zeta = zeta_2.
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(2)]);
        let shape = ForestShape::new(&Forest::new(vec![t]));
        let w = atlas_forests::Weight(vec![0, 0, 0, 1, 1]);
        let pv = param_vector(&shape, &w).unwrap();
        assert_eq!(pv.m, 6);
        let zeta = CycNum::zeta(2);
        let c = |q: i64| CycNum::from_int(q);
        // (-c^4, (-1+z)c^3, (1-z)c^3 + z c^2, -2z c^2, (-1-z)c + z c^2, (1+z)c, 1)
        let vars = pv.vars.clone();
        let mono = |coeff: CycNum, e: u16| {
            MPoly::monomial(&vars, &[e], coeff)
        };
        let expected = vec![
            mono(c(-1), 4),
            mono(c(-1) + zeta.clone(), 3),
            mono(c(1) - zeta.clone(), 3) + mono(zeta.clone(), 2),
            mono(c(-2) * zeta.clone(), 2),
            mono(c(-1) - zeta.clone(), 1) + mono(zeta.clone(), 2),
            mono(c(1) + zeta.clone(), 1),
            MPoly::one_over(&vars),
        ];
        assert_eq!(pv.lambda, expected);
    }

    #[test]
    fn simple_tree_symmetric_function_form() {
        // For a chain with zero weight the coefficients are
        // e_{m-b}(S) - c e_{m-b-2}(S) with S = {c, c^2, ..., c^{2^{m-3}}}.
        for i in 2..=5usize {
            let m = i + 1;
            let shape = ForestShape::new(&Forest::new(vec![Tree::chain(i)]));
            let w = atlas_forests::Weight(vec![0; i]);
            let pv = param_vector(&shape, &w).unwrap();
            let vars = pv.vars.clone();
            let powers: Vec<u32> = (0..=(m - 3) as u32).map(|e| 1u32 << e).collect();
            let e_sym = |k: usize| -> CycPoly {
                // elementary symmetric polynomial in the listed powers of c
                let mut acc = MPoly::zero_over(&vars);
                let n = powers.len();
                let mut idx: Vec<usize> = (0..k).collect();
                if k > n {
                    return acc;
                }
                loop {
                    let degree: u32 = idx.iter().map(|&t| powers[t]).sum();
                    acc = acc + MPoly::monomial(&vars, &[degree as u16], CycNum::one());
                    // next combination
                    let mut t = k;
                    loop {
                        if t == 0 {
                            return acc;
                        }
                        t -= 1;
                        if idx[t] != t + n - k {
                            idx[t] += 1;
                            for s in t + 1..k {
                                idx[s] = idx[s - 1] + 1;
                            }
                            break;
                        }
                    }
                }
            };
            let c_var = MPoly::<CycNum>::var(&vars, 0);
            for b in 0..=m {
                let expect = e_sym(m - b)
                    - c_var.clone() * if m >= b + 2 { e_sym(m - b - 2) } else { MPoly::zero_over(&vars) };
                assert_eq!(pv.lambda[b], expect, "i={i} beta={b}");
            }
        }
    }

    #[test]
    fn distinctness_checks() {
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(2)]);
        let shape = ForestShape::new(&Forest::new(vec![t]));
        let w = atlas_forests::Weight(vec![0, 0, 0, 1, 1]);
        let factors = CFactors::new(&shape, &w);
        assert!(factors.roots_distinct_at(&[cyc(2)]));
        assert!(!factors.roots_distinct_at(&[cyc(0)]));
        let mut rng = atlas_arith::SplitMix64::new(5);
        let c = sample_generic_parameters(&shape, &w, &mut rng).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn empty_e_sym_handles_k_zero() {
        // e_0 = 1 is exercised through lambda_m = 1 above; spot check eval.
        let shape = ForestShape::new(&Forest::new(vec![Tree::leaf()]));
        let w = atlas_forests::Weight(vec![0]);
        let pv = param_vector(&shape, &w).unwrap();
        // Single node: product is Y^2 - c.
        assert_eq!(pv.m, 2);
        assert_eq!(pv.eval(&[cyc(9)]), vec![cyc(-9), cyc(0), cyc(1)]);
        let _ = rint(0);
    }
}
