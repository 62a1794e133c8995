//! Coefficient vectors a_0..a_m with the out-of-range-reads-zero convention.

use atlas_arith::Ring;

/// Coefficient vector of a degree-m polynomial; index reads outside
/// 0..=m yield zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector<C> {
    entries: Vec<C>,
}

impl<C: Ring> CoeffVector<C> {
    pub fn new(entries: Vec<C>) -> Self {
        assert!(!entries.is_empty(), "coefficient vector needs at least a_0");
        CoeffVector { entries }
    }

    /// Degree m (entries are a_0..a_m).
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// a_i, with a_* = 0 outside [0..m]; the index is signed on purpose.
    pub fn get(&self, i: isize) -> C {
        if i < 0 || i as usize >= self.entries.len() {
            C::zero()
        } else {
            self.entries[i as usize].clone()
        }
    }

    pub fn entries(&self) -> &[C] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<C> {
        self.entries
    }

    /// Convolution with another coefficient vector (polynomial product).
    pub fn convolve(&self, other: &CoeffVector<C>) -> CoeffVector<C> {
        let m = self.degree();
        let d = other.degree();
        let mut out = vec![C::zero(); m + d + 1];
        for (i, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.entries.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        CoeffVector::new(out)
    }

    /// Interleave with zeros: a_0, 0, a_1, 0, ..., 0, a_m (degree 2m).
    pub fn interleave_zeros(&self) -> CoeffVector<C> {
        let m = self.degree();
        let mut out = vec![C::zero(); 2 * m + 1];
        for (i, a) in self.entries.iter().enumerate() {
            out[2 * i] = a.clone();
        }
        CoeffVector::new(out)
    }
}

impl<C: Ring> From<Vec<C>> for CoeffVector<C> {
    fn from(entries: Vec<C>) -> Self {
        CoeffVector::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_arith::{rint, Rational};

    #[test]
    fn out_of_range_reads_zero() {
        let v = CoeffVector::new(vec![rint(1), rint(2)]);
        assert_eq!(v.get(-1), Rational::from(rint(0)));
        assert_eq!(v.get(2), rint(0));
        assert_eq!(v.get(1), rint(2));
    }

    #[test]
    fn convolution_is_polynomial_product() {
        // (1 + x)(1 - x) = 1 - x^2
        let a = CoeffVector::new(vec![rint(1), rint(1)]);
        let b = CoeffVector::new(vec![rint(1), rint(-1)]);
        assert_eq!(a.convolve(&b).entries(), &[rint(1), rint(0), rint(-1)]);
    }
}
