//! The t-deformed coefficient matrices behind the L-function formula.

use crate::{CoeffVector, MatrixFamilyError};
use atlas_arith::{binomial, Integer, MPoly, Matrix, Ring};
use num_traits::ToPrimitive;

/// size x size matrix over the ring of `a` entries extended by t, with
/// 1-based entry
///
///   (i,j) = sum_{l=0..n} (-1)^l binom(n,l) a_{qj-i-l} t^{n-l}
///
/// Only q = 2 is accepted; the parameter is carried for interface
/// compatibility. `t` must be a ring element (typically a variable).
pub fn carlitz_matrix<C: Ring>(
    a: &CoeffVector<C>,
    n: usize,
    size: usize,
    q: u32,
    t: &C,
) -> Result<Matrix<C>, MatrixFamilyError> {
    if q != 2 {
        return Err(MatrixFamilyError::UnsupportedBase(q));
    }
    // Precompute signed binomials and powers of t.
    let signed_binom: Vec<C> = (0..=n)
        .map(|l| {
            let b = binomial(n as u64, l as u64)
                .to_u64()
                .expect("binomial fits in u64 at supported sizes");
            // Ring-generic integer multiple of one.
            let mut acc = C::zero();
            for _ in 0..b {
                acc = acc + C::one();
            }
            if l % 2 == 1 {
                -acc
            } else {
                acc
            }
        })
        .collect();
    let mut t_pows = vec![C::one()];
    for _ in 0..n {
        let last = t_pows.last().unwrap().clone();
        t_pows.push(last * t.clone());
    }
    Ok(Matrix::from_fn(size, size, |i, j| {
        let mut acc = C::zero();
        for l in 0..=n {
            let idx = 2 * (j as isize + 1) - (i as isize + 1) - l as isize;
            let coeff = a.get(idx);
            if coeff.is_zero() {
                continue;
            }
            acc = acc + signed_binom[l].clone() * coeff * t_pows[n - l].clone();
        }
        acc
    }))
}

/// Symbolic convenience: entries in `Z[a_0..a_m][t]`.
pub fn carlitz_matrix_symbolic(
    m: usize,
    n: usize,
    size: usize,
    q: u32,
) -> Result<Matrix<MPoly<Integer>>, MatrixFamilyError> {
    carlitz_symbolic_with_extra(m, n, size, q, &["t"])
}

/// Symbolic matrix over Z[a_0..a_m] extended by the given variables, the
/// first of which must be "t".
pub(crate) fn carlitz_symbolic_with_extra(
    m: usize,
    n: usize,
    size: usize,
    q: u32,
    extra: &[&str],
) -> Result<Matrix<MPoly<Integer>>, MatrixFamilyError> {
    assert!(extra.contains(&"t"), "the deformation variable t is required");
    let vars = crate::hurwitz_vars(m, extra);
    let a = CoeffVector::new((0..=m).map(|i| MPoly::var(&vars, i)).collect::<Vec<_>>());
    let t = MPoly::var_named(&vars, "t");
    carlitz_matrix(&a, n, size, q, &t)
}
