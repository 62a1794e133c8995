//! Odd block matrices over P^1 x P^alpha.

use crate::MatrixFamilyError;
use atlas_arith::{Integer, MPoly, Matrix, VarSet, ZPoly};
use std::sync::Arc;

fn odd_vars(alpha: usize) -> Arc<VarSet> {
    let mut names: Vec<String> = (0..=alpha).map(|i| format!("b{i}")).collect();
    names.push("lambda".into());
    names.push("mu".into());
    VarSet::new(&names)
}

/// The two alpha x alpha blocks: A has 1-based entry b_{2j-i-1}, B is the
/// full (untruncated) Hurwitz matrix with entry b_{2j-i}.
pub fn odd_blocks(alpha: usize) -> Result<(Matrix<ZPoly>, Matrix<ZPoly>), MatrixFamilyError> {
    if alpha < 2 {
        return Err(MatrixFamilyError::BadSize(format!(
            "odd blocks need alpha >= 2, got {alpha}"
        )));
    }
    let vars = odd_vars(alpha);
    let b = |idx: isize| -> ZPoly {
        if idx < 0 || idx as usize > alpha {
            MPoly::zero_over(&vars)
        } else {
            MPoly::var(&vars, idx as usize)
        }
    };
    let a_block = Matrix::from_fn(alpha, alpha, |i, j| {
        b(2 * (j as isize + 1) - (i as isize + 1) - 1)
    });
    let b_block = Matrix::from_fn(alpha, alpha, |i, j| {
        b(2 * (j as isize + 1) - (i as isize + 1))
    });
    Ok((a_block, b_block))
}

/// The 2-alpha x 2-alpha block matrix [[A, B], [mu I, -lambda I]] over
/// Z[b_0..b_alpha, lambda, mu].
pub fn odd_matrix(alpha: usize) -> Result<Matrix<ZPoly>, MatrixFamilyError> {
    let (a_block, b_block) = odd_blocks(alpha)?;
    let vars = a_block[(0, 0)].vars().clone();
    let lambda = MPoly::<Integer>::var_named(&vars, "lambda");
    let mu = MPoly::<Integer>::var_named(&vars, "mu");
    let zero = MPoly::<Integer>::zero_over(&vars);
    Ok(Matrix::from_fn(2 * alpha, 2 * alpha, |i, j| {
        match (i < alpha, j < alpha) {
            (true, true) => a_block[(i, j)].clone(),
            (true, false) => b_block[(i, j - alpha)].clone(),
            (false, true) => {
                if i - alpha == j {
                    mu.clone()
                } else {
                    zero.clone()
                }
            }
            (false, false) => {
                if i == j {
                    -lambda.clone()
                } else {
                    zero.clone()
                }
            }
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &Matrix<ZPoly>) -> Vec<Vec<String>> {
        (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)].to_string()).collect())
            .collect()
    }

    #[test]
    fn alpha_four_matches_printed_layout() {
        let m = odd_matrix(4).unwrap();
        let expect = [
            ["b0", "b2", "b4", "0", "b1", "b3", "0", "0"],
            ["0", "b1", "b3", "0", "b0", "b2", "b4", "0"],
            ["0", "b0", "b2", "b4", "0", "b1", "b3", "0"],
            ["0", "0", "b1", "b3", "0", "b0", "b2", "b4"],
            ["mu", "0", "0", "0", "-lambda", "0", "0", "0"],
            ["0", "mu", "0", "0", "0", "-lambda", "0", "0"],
            ["0", "0", "mu", "0", "0", "0", "-lambda", "0"],
            ["0", "0", "0", "mu", "0", "0", "0", "-lambda"],
        ];
        for (i, row) in rows(&m).iter().enumerate() {
            assert_eq!(row, &expect[i], "row {i}");
        }
    }

    #[test]
    fn corner_entries() {
        let (a, b) = odd_blocks(5).unwrap();
        assert_eq!(a[(0, 0)].to_string(), "b0");
        assert_eq!(b[(4, 4)].to_string(), "b5");
    }

    #[test]
    fn scalar_block_row_shape() {
        // Row alpha+1 is (mu, 0, ..., 0, -lambda, 0, ..., 0).
        let alpha = 3;
        let m = odd_matrix(alpha).unwrap();
        let row = &rows(&m)[alpha];
        assert_eq!(row[0], "mu");
        assert_eq!(row[alpha], "-lambda");
        for (j, s) in row.iter().enumerate() {
            if j != 0 && j != alpha {
                assert_eq!(s, "0");
            }
        }
    }
}
