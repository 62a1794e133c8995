//! Sylvester resultants and the cross-check against the truncated Hurwitz
//! determinant.

use crate::{d_system, hurwitz_vars, MatrixFamilyError};
use atlas_arith::{MPoly, Matrix, Ring, ZPoly};

/// Sylvester matrix of two polynomials given by coefficient slices in
/// ascending degree order (nonzero leading coefficients expected).
pub fn sylvester_matrix<T: Ring>(f: &[T], g: &[T]) -> Matrix<T> {
    assert!(f.len() > 1 || g.len() > 1, "resultant of two constants");
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let n = df + dg;
    Matrix::from_fn(n, n, |i, j| {
        if i < dg {
            // Row i: coefficients of f, descending, shifted right by i.
            let k = df as isize - (j as isize - i as isize);
            if (0..=df as isize).contains(&k) {
                f[k as usize].clone()
            } else {
                T::zero()
            }
        } else {
            let i2 = i - dg;
            let k = dg as isize - (j as isize - i2 as isize);
            if (0..=dg as isize).contains(&k) {
                g[k as usize].clone()
            } else {
                T::zero()
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantReport {
    pub m: usize,
    /// Whether det of the truncated Hurwitz matrix equals the Sylvester
    /// resultant up to one global sign.
    pub equal_up_to_sign: bool,
    /// The realized sign (+1 or -1) when they agree.
    pub sign: i8,
}

/// Compare det of the degree-m truncated Hurwitz matrix against the
/// resultant of the odd- and even-index coefficient polynomials,
/// symbolically, via an independently constructed Sylvester matrix.
pub fn sylvester_resultant_check(m: usize) -> Result<ResultantReport, MatrixFamilyError> {
    if m < 3 {
        return Err(MatrixFamilyError::BadSize(format!(
            "resultant check needs m >= 3, got {m}"
        )));
    }
    let vars = hurwitz_vars(m, &[]);
    let a = |i: usize| MPoly::var(&vars, i);
    // P_[1] collects odd-index coefficients, P_[0] even-index ones.
    let odd: Vec<ZPoly> = (0..)
        .map(|k| 2 * k + 1)
        .take_while(|&i| i <= m)
        .map(a)
        .collect();
    let even: Vec<ZPoly> = (0..)
        .map(|k| 2 * k)
        .take_while(|&i| i <= m)
        .map(a)
        .collect();
    let resultant = sylvester_matrix(&odd, &even).det_expansion()?;
    let hurwitz_det = d_system(m)?.polys[0].clone();
    let (equal, sign) = if hurwitz_det == resultant {
        (true, 1)
    } else if hurwitz_det == -resultant.clone() {
        (true, -1)
    } else {
        (false, 0)
    };
    Ok(ResultantReport { m, equal_up_to_sign: equal, sign })
}
