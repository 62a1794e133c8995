//! Canonical text dumps of matrices and systems for golden files.

use anyhow::{bail, Result};
use atlas_matrices::{d_system, h_system, hurwitz_matrix, odd_matrix};

pub fn run_dump(object: &str, m: Option<usize>, n: Option<usize>, alpha: Option<usize>) -> Result<String> {
    match object {
        "matrix" => {
            let m = m.ok_or_else(|| anyhow::anyhow!("--m is required for matrix"))?;
            let mat = hurwitz_matrix(m)?;
            Ok(format!("{mat}"))
        }
        "dsystem" => {
            let m = m.ok_or_else(|| anyhow::anyhow!("--m is required for dsystem"))?;
            let d = d_system(m)?;
            let mut out = String::new();
            for (i, p) in d.polys.iter().enumerate() {
                out.push_str(&format!("D({m},{i}) = {p}\n"));
            }
            Ok(out)
        }
        "hsystem" => {
            let m = m.ok_or_else(|| anyhow::anyhow!("--m is required for hsystem"))?;
            let n = n.unwrap_or(0);
            let h = h_system(m, n, 2)?;
            let mut out = String::new();
            if h.table.is_empty() {
                out.push_str("H table is empty (size-zero matrix, unit determinant)\n");
            }
            for ((i, j), p) in &h.table {
                out.push_str(&format!("H[{i},{j};n={n}]({m}) = {p}\n"));
            }
            Ok(out)
        }
        "odd" => {
            let alpha = alpha.ok_or_else(|| anyhow::anyhow!("--alpha is required for odd"))?;
            let mat = odd_matrix(alpha)?;
            Ok(format!("{mat}"))
        }
        other => bail!("unknown dump object {other} (expected matrix|dsystem|hsystem|odd)"),
    }
}
