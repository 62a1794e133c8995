//! Coefficient systems read off characteristic polynomials.

use crate::carlitz::carlitz_symbolic_with_extra;
use crate::{hurwitz_matrix, hurwitz_vars, MatrixFamilyError};
use atlas_arith::{Integer, MPoly, Matrix, ZPoly};
use num_traits::Zero;
use std::collections::BTreeMap;

/// The polynomials D(m,0), ..., D(m,m-2): coefficients of U^i in
/// det(M - U I) for the truncated Hurwitz matrix M of degree m. The
/// leading term (-U)^{m-1} is implicit and not stored.
#[derive(Debug, Clone)]
pub struct DSystem {
    pub m: usize,
    /// `polys[i]` = D(m, i), over `Z[a_0..a_m]`.
    pub polys: Vec<ZPoly>,
}

impl DSystem {
    pub fn trace_coefficient(&self) -> &ZPoly {
        self.polys.last().expect("m >= 2 so D(m, m-2) exists")
    }
}

pub fn d_system(m: usize) -> Result<DSystem, MatrixFamilyError> {
    let mat = hurwitz_matrix(m)?;
    let ch = mat.char_poly("U")?;
    let u = ch.vars().index_of("U").expect("fresh variable");
    let polys = (0..=(m - 2) as u16)
        .map(|k| ch.coeff_of_power(u, k).drop_var(u))
        .collect();
    Ok(DSystem { m, polys })
}

/// The table of H_{ij,n}: coefficients of t^j T^{k-i} in
/// det(I_k - M_nt T), where M_nt is the size-k t-deformed matrix and
/// k = m + n - 1 for q = 2.
#[derive(Debug, Clone)]
pub struct HSystem {
    pub m: usize,
    pub n: usize,
    /// Matrix size; the table indices satisfy 0 <= i <= k, 0 <= j <= n(k-i).
    pub k: usize,
    /// (i, j) -> H_{ij,n}(m) over Z[a_0..a_m]; absent entries are zero.
    pub table: BTreeMap<(usize, usize), ZPoly>,
}

impl HSystem {
    pub fn get(&self, i: usize, j: usize) -> ZPoly {
        self.table
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| MPoly::zero_over(&hurwitz_vars(self.m, &[])))
    }
}

pub fn h_system(m: usize, n: usize, q: u32) -> Result<HSystem, MatrixFamilyError> {
    if q != 2 {
        return Err(MatrixFamilyError::UnsupportedBase(q));
    }
    let k = m + n - 1;
    if k == 0 {
        // det of the empty matrix is 1; nothing varies, the table is empty.
        return Ok(HSystem { m, n, k, table: BTreeMap::new() });
    }
    let mat = carlitz_symbolic_with_extra(m, n, k, q, &["t", "T"])?;
    let vars = mat[(0, 0)].vars().clone();
    let t_cap = MPoly::<Integer>::var_named(&vars, "T");
    let shifted = Matrix::from_fn(k, k, |i, j| {
        let e = -(mat[(i, j)].clone() * t_cap.clone());
        if i == j {
            e + MPoly::one_over(&vars)
        } else {
            e
        }
    });
    let det = shifted.det_expansion()?;
    let t_idx = vars.index_of("t").unwrap();
    let cap_idx = vars.index_of("T").unwrap();
    let mut table = BTreeMap::new();
    for cap_pow in 0..=det.degree_in(cap_idx) as u16 {
        let slice = det.coeff_of_power(cap_idx, cap_pow);
        if slice.is_zero() {
            continue;
        }
        let i = k - cap_pow as usize;
        for j in 0..=slice.degree_in(t_idx) as u16 {
            let h = slice.coeff_of_power(t_idx, j).drop_var(cap_idx).drop_var(t_idx);
            if !h.is_zero() {
                table.insert((i, j as usize), h);
            }
        }
    }
    Ok(HSystem { m, n, k, table })
}

/// Odd system D_odd(alpha, j): coefficients of U^j in
/// det(U I_alpha - (lambda A + mu B)) with A, B the odd blocks. The result
/// has length alpha + 1 with leading coefficient 1.
///
/// This is the block determinant of the odd matrix with -U/lambda on the
/// upper diagonal, cleared of denominators: the lower blocks are scalar, so
/// the 2-alpha determinant collapses to det(U I - (lambda A + mu B)).
pub fn d_odd_system(alpha: usize) -> Result<Vec<ZPoly>, MatrixFamilyError> {
    let (a, b) = crate::odd_blocks(alpha)?;
    let vars = a[(0, 0)].vars().clone();
    let lambda = MPoly::<Integer>::var_named(&vars, "lambda");
    let mu = MPoly::<Integer>::var_named(&vars, "mu");
    let combined = a.map(|p| p.clone() * lambda.clone()).add(&b.map(|p| p.clone() * mu.clone()));
    let ch = combined.char_poly("U")?;
    let u = ch.vars().index_of("U").unwrap();
    // det(M - UI) = (-1)^alpha det(UI - M)
    let mut coeffs: Vec<ZPoly> = (0..=alpha as u16)
        .map(|k| ch.coeff_of_power(u, k).drop_var(u))
        .collect();
    if alpha % 2 == 1 {
        coeffs = coeffs.into_iter().map(|c| -c).collect();
    }
    Ok(coeffs)
}
