//! Extending a minimal component to its series by coefficient convolution.

use crate::records::ComponentRecord;
use atlas_arith::{binomial, Integer, Ring};
use num_traits::Zero;

/// Convolution of coefficient vectors (polynomial product): the degree-m
/// vector extended by a degree-d vector has length m + d + 1.
pub fn nu_extend<C: Ring>(lambda: &[C], b: &[C]) -> Vec<C> {
    assert!(!lambda.is_empty() && !b.is_empty());
    let m = lambda.len() - 1;
    let d = b.len() - 1;
    let mut out = vec![C::zero(); m + d + 1];
    for (i, x) in lambda.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Predicted degree of the level-m member of a series with coefficient c:
/// c * binom(m - i, j); zero means the member vanishes.
pub fn series_degree(c: &Integer, i: usize, j: usize, m: usize) -> Integer {
    if m < i + j {
        return Integer::zero();
    }
    c.clone() * binomial((m - i) as u64, j as u64)
}

/// The level-m view of a record: (degree, vanished?).
pub fn series_record(record: &ComponentRecord, m: usize) -> (Integer, bool) {
    let deg = record.degree_at(m);
    let vanished = m < record.i + record.j;
    (deg, vanished)
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_arith::rint;

    #[test]
    fn identity_extension() {
        let lambda = vec![rint(2), rint(3), rint(1)];
        assert_eq!(nu_extend(&lambda, &[rint(1)]), lambda);
    }

    #[test]
    fn convolution_is_a_product() {
        // (1 + x)(1 + x + x^2) = 1 + 2x + 2x^2 + x^3
        let a = vec![rint(1), rint(1)];
        let b = vec![rint(1), rint(1), rint(1)];
        assert_eq!(nu_extend(&a, &b), vec![rint(1), rint(2), rint(2), rint(1)]);
    }

    #[test]
    fn degree_law() {
        // Coefficient 4 at (i, j) = (5, 1): degree 4(m-5).
        assert_eq!(series_degree(&Integer::from(4), 5, 1, 7), Integer::from(8));
        // Below the minimal level the member vanishes.
        assert_eq!(series_degree(&Integer::from(4), 5, 1, 5), Integer::from(0));
        // Segre degree of the extension is binom(m-i, j): with c = 1,
        // extending by d steps multiplies by binom(j + d, j).
        for j in 1..=4usize {
            for d in 0..=3usize {
                let i = 3;
                let m = i + j + d;
                assert_eq!(
                    series_degree(&Integer::from(1), i, j, m),
                    binomial((j + d) as u64, j as u64)
                );
            }
        }
    }
}
