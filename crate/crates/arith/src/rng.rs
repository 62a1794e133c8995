//! Deterministic pseudo-random generator for seeded sampling.
//!
//! SplitMix64: tiny, stable across platforms and versions, which is what the
//! reproducibility contract needs. Not cryptographic.

use crate::{rat, Rational};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derive an independent stream for a named purpose.
    pub fn fork(&self, salt: &str) -> Self {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in salt.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        SplitMix64::new(self.state ^ h)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, n).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Small nonzero rational, suitable for generic-point sampling.
    pub fn rational(&mut self) -> Rational {
        let num = self.below(199) as i64 - 99;
        let num = if num == 0 { 7 } else { num };
        let den = 1 + self.below(9) as i64;
        rat(num, den)
    }

    /// `count` pairwise distinct nonzero rationals.
    pub fn distinct_rationals(&mut self, count: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(count);
        while out.len() < count {
            let q = self.rational();
            if !out.contains(&q) {
                out.push(q);
            }
        }
        out
    }
}
