//! The truncated Hurwitz matrix family.

use crate::{CoeffVector, MatrixFamilyError};
use atlas_arith::{Integer, MPoly, Matrix, Ring, VarSet, ZPoly};
use std::sync::Arc;

/// Variable list a_0..a_m plus any extra names.
pub fn hurwitz_vars(m: usize, extra: &[&str]) -> Arc<VarSet> {
    VarSet::coeff_vars(m, extra)
}

/// The (m-1)x(m-1) matrix with 1-based entry (i,j) = a_{2j-i}, i.e. the
/// Hurwitz matrix of a_0..a_m without its last row and column.
///
/// Symbolic over Z[a_0..a_m].
pub fn hurwitz_matrix(m: usize) -> Result<Matrix<ZPoly>, MatrixFamilyError> {
    if m < 2 {
        return Err(MatrixFamilyError::EmptyVariety(m));
    }
    let vars = hurwitz_vars(m, &[]);
    let coeffs = CoeffVector::new(
        (0..=m).map(|i| MPoly::<Integer>::var(&vars, i)).collect::<Vec<_>>(),
    );
    Ok(hurwitz_matrix_at(m, &coeffs))
}

/// Same layout with arbitrary ring entries plugged in for a_0..a_m.
pub fn hurwitz_matrix_at<C: Ring>(m: usize, a: &CoeffVector<C>) -> Matrix<C> {
    assert!(m >= 2, "degree below 2 has no matrix");
    let n = m - 1;
    Matrix::from_fn(n, n, |i, j| {
        // 1-based rule a_{2j - i}
        let idx = 2 * (j as isize + 1) - (i as isize + 1);
        a.get(idx)
    })
}
