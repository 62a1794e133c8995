//! Exact membership verification: the defining polynomials D(m, 0..i-1)
//! vanish identically on the image of a weighted-forest parametrization.
//!
//! For one or two parameters the identity is proved by symbolic expansion
//! of the characteristic polynomial of the evaluated matrix. For more
//! parameters it is certified by evaluation on a full tensor grid whose
//! per-variable cardinality exceeds the per-variable degree bound, which
//! is a proof, not a sampling argument; equal parametrized trees cut the
//! grid down to sorted tuples by symmetry.

use crate::param::param_vector;
use crate::ComponentError;
use atlas_arith::{CycNum, Matrix, Rational};
use atlas_forests::{ForestShape, Weight};
use num_traits::Zero;
use std::fmt;

/// Counterexample bundle surfaced when a membership check fails: a failed
/// check refutes the component description and must abort table building.
#[derive(Debug, Clone)]
pub struct MembershipFailure {
    pub forest: String,
    pub weight: Vec<u64>,
    /// Index of the offending defining polynomial.
    pub offending_index: usize,
    /// A witness point (parameter values) where it does not vanish, when
    /// the failure was found by evaluation.
    pub witness: Option<Vec<Rational>>,
}

impl fmt::Display for MembershipFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D(m,{}) does not vanish on the image of forest {} with weight {:?}",
            self.offending_index, self.forest, self.weight
        )?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w:?})")?;
        }
        Ok(())
    }
}

/// Verify that the image of the parametrization lies in the scheme cut out
/// by the first i defining polynomials (m = i + j).
pub fn verify_membership(shape: &ForestShape, w: &Weight) -> Result<(), ComponentError> {
    let i = shape.node_count();
    let j = shape.tree_range.len();
    if j <= 2 {
        verify_symbolic(shape, w, i, j)
    } else {
        verify_grid(shape, w, i, j)
    }
}

fn verify_symbolic(
    shape: &ForestShape,
    w: &Weight,
    i: usize,
    j: usize,
) -> Result<(), ComponentError> {
    let pv = param_vector(shape, w)?;
    let m = i + j;
    let n = m - 1;
    let lam = |idx: isize| {
        if idx < 0 || idx as usize > m {
            atlas_arith::MPoly::zero_over(&pv.vars)
        } else {
            pv.lambda[idx as usize].clone()
        }
    };
    let mat = Matrix::from_fn(n, n, |r, c| {
        lam(2 * (c as isize + 1) - (r as isize + 1))
    });
    let ch = mat.char_poly("U")?;
    let u = ch.vars().index_of("U").unwrap();
    for d_idx in 0..i {
        if !ch.coeff_of_power(u, d_idx as u16).is_zero() {
            return Err(ComponentError::Membership(MembershipFailure {
                forest: shape.forest.encode(),
                weight: w.0.clone(),
                offending_index: d_idx,
                witness: None,
            }));
        }
    }
    Ok(())
}

fn verify_grid(
    shape: &ForestShape,
    w: &Weight,
    i: usize,
    j: usize,
) -> Result<(), ComponentError> {
    let pv = param_vector(shape, w)?;
    let m = i + j;
    // Per-variable degree bound of D(m, *) composed with the
    // parametrization: total a-degree at most m-1, and each coordinate has
    // c_alpha-degree at most 2^{d_alpha}.
    let bounds: Vec<usize> = shape
        .tree_depth
        .iter()
        .map(|&d| (m - 1) * (1usize << d) + 1)
        .collect();
    // Slots with equal tree and equal weight restriction give symmetric
    // dependence; only non-decreasing value tuples are needed there.
    let sym_class = slot_classes(shape, w);
    let mut point = vec![0u64; j];
    grid_walk(shape, w, &pv, i, &bounds, &sym_class, &mut point, 0)
}

/// Equality classes of (tree, restricted weight) slots: same class means
/// the composed polynomial is symmetric under swapping those parameters.
fn slot_classes(shape: &ForestShape, w: &Weight) -> Vec<usize> {
    let j = shape.tree_range.len();
    let mut keys: Vec<(String, Vec<u64>)> = Vec::new();
    for alpha in 0..j {
        let (s, e) = shape.tree_range[alpha];
        keys.push((shape.forest.trees()[alpha].encode(), w.0[s..e].to_vec()));
    }
    let mut classes = vec![0usize; j];
    for alpha in 1..j {
        if keys[alpha] == keys[alpha - 1] {
            classes[alpha] = classes[alpha - 1];
        } else {
            classes[alpha] = alpha;
        }
    }
    classes
}

fn grid_walk(
    shape: &ForestShape,
    w: &Weight,
    pv: &crate::param::ParamVector,
    i: usize,
    bounds: &[usize],
    sym_class: &[usize],
    point: &mut Vec<u64>,
    alpha: usize,
) -> Result<(), ComponentError> {
    if alpha == point.len() {
        return check_point(shape, w, pv, i, point);
    }
    // Within a symmetry class only non-decreasing tuples are evaluated.
    let start = if alpha > 0 && sym_class[alpha] == sym_class[alpha - 1] {
        point[alpha - 1]
    } else {
        1
    };
    for v in start..=(bounds[alpha] as u64) {
        point[alpha] = v;
        grid_walk(shape, w, pv, i, bounds, sym_class, point, alpha + 1)?;
    }
    Ok(())
}

fn check_point(
    shape: &ForestShape,
    w: &Weight,
    pv: &crate::param::ParamVector,
    i: usize,
    point: &[u64],
) -> Result<(), ComponentError> {
    let c: Vec<CycNum> = point.iter().map(|&v| CycNum::from_int(v as i64)).collect();
    let a = pv.eval(&c);
    let m = pv.m;
    let mat = atlas_matrices::hurwitz_matrix_at(m, &atlas_matrices::CoeffVector::new(a));
    // det(xI - M): vanishing of the low-order coefficients is equivalent to
    // vanishing of the defining polynomials at this point.
    let coeffs = mat.char_poly_coeffs();
    for (d_idx, coeff) in coeffs.iter().take(i).enumerate() {
        if !coeff.is_zero() {
            return Err(ComponentError::Membership(MembershipFailure {
                forest: shape.forest.encode(),
                weight: w.0.clone(),
                offending_index: d_idx,
                witness: Some(
                    point.iter().map(|&v| atlas_arith::rint(v as i64)).collect(),
                ),
            }));
        }
    }
    Ok(())
}

/// Direct refutation helper: evaluate one defining polynomial at an
/// arbitrary coefficient point; used to confirm that membership is a
/// meaningful test (generic points fail it).
pub fn point_in_variety(a: &[Rational], i: usize) -> bool {
    let m = a.len() - 1;
    let cv = atlas_matrices::CoeffVector::new(
        a.iter().cloned().map(CycNum::from_rational).collect::<Vec<_>>(),
    );
    let mat = atlas_matrices::hurwitz_matrix_at(m, &cv);
    let coeffs = mat.char_poly_coeffs();
    coeffs.iter().take(i).all(|c| c.is_zero())
}
