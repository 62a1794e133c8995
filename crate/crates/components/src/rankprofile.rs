//! Jordan partitions read off matrix ranks at sampled component points.
//!
//! At a generic point of a component, the kernel dimensions of powers of
//! the matrix grow by the dual partition; sampling the parametrization at
//! deterministic rational parameters and computing exact ranks over the
//! cyclotomic field recovers the partition. Samples whose rank profile is
//! degenerate (non-monotone steps or wrong total) are resampled.

use crate::param::{param_vector, sample_generic_parameters};
use crate::ComponentError;
use atlas_arith::{CycNum, Partition, SplitMix64};
use atlas_forests::{ForestShape, Weight};
use atlas_matrices::{hurwitz_matrix_at, CoeffVector};
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum RankProfileError {
    #[error("rank profiles disagree across samples: {0:?} vs {1:?}")]
    Unstable(Vec<u32>, Vec<u32>),
    #[error("could not find a stable sample after bounded retries")]
    Degenerate,
}

/// Rank profile of one evaluated matrix: kernel-dimension increments of
/// successive powers, or None if the profile is not weakly decreasing or
/// the nilpotent size is not i.
fn profile_at(point: &[CycNum], m: usize, i: usize) -> Option<Vec<u32>> {
    let cv = CoeffVector::new(point.to_vec());
    let mat = hurwitz_matrix_at(m, &cv);
    let n = m - 1;
    let mut increments: Vec<u32> = Vec::new();
    let mut power = mat.clone();
    let mut prev_kernel = 0usize;
    loop {
        let r = power.rank();
        let kernel = n - r;
        let step = kernel - prev_kernel;
        if step == 0 {
            break;
        }
        if let Some(&last) = increments.last() {
            if step as u32 > last {
                return None; // kernel increments must not grow
            }
        }
        increments.push(step as u32);
        prev_kernel = kernel;
        if kernel >= n {
            break;
        }
        power = power.mul(&mat);
    }
    let total: u32 = increments.iter().sum();
    if total as usize != i {
        return None;
    }
    Some(increments)
}

/// Partition of the component of (F, w) from matrix ranks at `samples`
/// independently drawn parameter points; all samples must agree.
pub fn rank_profile_partition(
    shape: &ForestShape,
    w: &Weight,
    samples: usize,
    seed: u64,
) -> Result<Partition, ComponentError> {
    let i = shape.node_count();
    let pv = param_vector(shape, w)?;
    let mut rng = SplitMix64::new(seed).fork("rank-profile");
    let mut agreed: Option<Vec<u32>> = None;
    let mut collected = 0usize;
    let mut attempts = 0usize;
    while collected < samples {
        attempts += 1;
        if attempts > 32 + 8 * samples {
            return Err(ComponentError::Domain(RankProfileError::Degenerate.to_string()));
        }
        let c = sample_generic_parameters(shape, w, &mut rng)?;
        let point = pv.eval(&c);
        let Some(profile) = profile_at(&point, pv.m, i) else {
            continue;
        };
        match &agreed {
            None => agreed = Some(profile),
            Some(p) if *p != profile => {
                return Err(ComponentError::Domain(
                    RankProfileError::Unstable(p.clone(), profile).to_string(),
                ));
            }
            _ => {}
        }
        collected += 1;
    }
    let dual = Partition::new(agreed.expect("samples > 0"));
    Ok(dual.dual())
}

/// Rank profile of an explicit coefficient point (not parametrized):
/// ranks of successive powers until stabilization.
pub fn power_ranks(point: &[CycNum], upto: usize) -> Vec<usize> {
    let m = point.len() - 1;
    let cv = CoeffVector::new(point.to_vec());
    let mat = hurwitz_matrix_at(m, &cv);
    let mut out = Vec::with_capacity(upto);
    let mut power = mat.clone();
    for _ in 0..upto {
        out.push(power.rank());
        power = power.mul(&mat);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_arith::rint;
    use atlas_forests::{jordan_partition, weight_orbits, Forest, Tree};

    #[test]
    fn printed_component_partition() {
        // Cherry of two 2-chains: partition 3+2.
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(2)]);
        let f = Forest::new(vec![t]);
        let shape = ForestShape::new(&f);
        let w = Weight(vec![0, 0, 0, 1, 1]);
        let p = rank_profile_partition(&shape, &w, 2, 7).unwrap();
        assert_eq!(p, Partition::new(vec![3, 2]));
        assert_eq!(p, jordan_partition(&f));
    }

    #[test]
    fn zero_matrix_profile() {
        let zeros: Vec<CycNum> = (0..5).map(|_| CycNum::from_int(0)).collect();
        assert_eq!(power_ranks(&zeros, 2), vec![0, 0]);
    }

    #[test]
    fn rank_agrees_with_combinatorial_partition_small() {
        for i in 1..=4usize {
            for j in 1..=i {
                for f in atlas_forests::enumerate_forests(i, j) {
                    let shape = ForestShape::new(&f);
                    let orbits = weight_orbits(&shape);
                    for rep in &orbits.reps {
                        let p = rank_profile_partition(&shape, rep, 2, 1000 + i as u64)
                            .unwrap();
                        assert_eq!(p, jordan_partition(&f), "forest {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn interleaved_subspace_rank_drop() {
        // Points supported on indices divisible by 2^alpha: ranks of powers
        // fall as 2^{alpha-gamma} * delta - 1 down to delta - 1.
        let alpha = 2u32;
        let delta = 2usize;
        let m = (1usize << alpha) * delta; // 8
        let mut a = vec![rint(0); m + 1];
        let vals = [3i64, -2, 5];
        for (b, &v) in (0..=delta).zip(vals.iter()) {
            a[(1 << alpha) * b] = rint(v);
        }
        let point: Vec<CycNum> = a.into_iter().map(CycNum::from_rational).collect();
        let ranks = power_ranks(&point, 3);
        // gamma = 1, 2, 3: expect 2^{2-1}*2 - 1 = 3, 2^0*2 - 1 = 1, then 1.
        assert_eq!(ranks, vec![3, 1, 1]);
    }
}
