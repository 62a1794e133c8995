//! Elements of the 2-power cyclotomic tower Q(zeta_{2^d}).
//!
//! A level-d element (d >= 2) is the class of `sum coords[k] * x^k` in
//! `Q[x]/(x^{2^{d-1}} + 1)`, so zeta_d (the class of x) satisfies
//! zeta_d^{2^{d-1}} = -1 and has multiplicative order 2^d. Levels 0 and 1
//! collapse to Q (zeta_0 = 1, zeta_1 = -1). Values are kept in the unique
//! minimal-level representation, so structural equality is field equality.
//!
//! Embedding level d into level d' > d sends x to x^{2^{d'-d}} and is
//! injective; arithmetic first lifts both operands to the larger level.

use crate::ring::{ArithError, Coeff, ExactDiv, Field};
use crate::Rational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest tower level constructable through the public API. Depth-5 forests
/// need level 6; anything beyond that is a bug upstream.
pub const MAX_LEVEL: u8 = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    /// Tower level d; 0 means rational. Never 1 after reduction.
    level: u8,
    /// Coordinates over the power basis 1, x, ..., x^{2^{d-1}-1}; length 1 at level 0.
    coords: Vec<Rational>,
}

impl CycNum {
    fn dim(level: u8) -> usize {
        if level <= 1 {
            1
        } else {
            1usize << (level - 1)
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum { level: 0, coords: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(crate::rint(n))
    }

    /// The root of unity zeta_d = exp(2*pi*sqrt(-1)/2^d).
    pub fn zeta(d: u8) -> Self {
        assert!(d <= MAX_LEVEL, "cyclotomic level {d} exceeds the supported tower");
        match d {
            0 => Self::from_int(1),
            1 => Self::from_int(-1),
            _ => {
                let mut coords = vec![Rational::zero(); Self::dim(d)];
                coords[1] = Rational::one();
                CycNum { level: d, coords }
            }
        }
    }

    /// zeta_d^k, reduced.
    pub fn zeta_pow(d: u8, k: u64) -> Self {
        let mut z = Self::zeta(d);
        z = z.pow_u64(k);
        z
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn is_rational(&self) -> bool {
        self.level == 0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.level == 0 {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Keep the minimal-level representation canonical.
    fn reduce(&mut self) {
        while self.level >= 2 {
            if self.coords.iter().skip(1).step_by(2).all(|c| c.is_zero()) {
                let next: Vec<Rational> =
                    self.coords.iter().step_by(2).cloned().collect();
                self.coords = next;
                self.level -= 1;
                if self.level == 1 {
                    self.level = 0;
                }
            } else {
                return;
            }
        }
        if self.level == 1 {
            self.level = 0;
        }
    }

    /// Representation of `self` at exactly `level` >= self.level.
    fn lifted(&self, level: u8) -> Vec<Rational> {
        let n = Self::dim(level);
        let mut out = vec![Rational::zero(); n];
        if self.level <= 1 {
            out[0] = self.coords[0].clone();
            return out;
        }
        let step = 1usize << (level - self.level);
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out[k * step] = c.clone();
            }
        }
        out
    }

    fn from_level_coords(level: u8, coords: Vec<Rational>) -> Self {
        let mut v = CycNum { level, coords };
        v.reduce();
        v
    }

    /// Ring automorphism determined by zeta_d -> zeta_d^gamma for odd gamma.
    ///
    /// gamma is read modulo 2^level, so any odd residue at a level at least
    /// `self.level()` acts consistently.
    pub fn galois(&self, gamma: u64) -> Result<Self, ArithError> {
        if gamma % 2 == 0 {
            return Err(ArithError::Domain(format!(
                "galois automorphism needs an odd residue, got {gamma}"
            )));
        }
        if self.level <= 1 {
            return Ok(self.clone());
        }
        let d = self.level;
        let n = Self::dim(d); // zeta^n = -1, order 2n
        let modulus = 2 * n as u64;
        let g = gamma % modulus;
        let mut out = vec![Rational::zero(); n];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (g * k as u64) % modulus;
            if (e as usize) < n {
                out[e as usize] = &out[e as usize] + c;
            } else {
                out[e as usize - n] = &out[e as usize - n] - c;
            }
        }
        Ok(Self::from_level_coords(d, out))
    }

    /// Complex conjugation (gamma = -1).
    pub fn conj(&self) -> Self {
        if self.level <= 1 {
            return self.clone();
        }
        let modulus = (2 * Self::dim(self.level)) as u64;
        self.galois(modulus - 1).expect("odd")
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        result
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.level == 0 && self.coords[0].is_one()
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: Self) -> Self {
        let level = self.level.max(rhs.level);
        let mut a = self.lifted(level);
        let b = rhs.lifted(level);
        for (x, y) in a.iter_mut().zip(b) {
            *x = &*x + y;
        }
        Self::from_level_coords(level, a)
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> Self {
        for c in &mut self.coords {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: Self) -> Self {
        // Fast paths keep rational-heavy workloads cheap.
        if self.level == 0 {
            let q = &self.coords[0];
            if q.is_zero() {
                return Self::zero();
            }
            let mut out = rhs;
            for c in &mut out.coords {
                *c = &*c * q;
            }
            return out;
        }
        if rhs.level == 0 {
            return rhs * self;
        }
        let level = self.level.max(rhs.level);
        let n = Self::dim(level);
        let a = self.lifted(level);
        let b = rhs.lifted(level);
        // Negacyclic convolution: x^n = -1.
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let p = ai * bj;
                let k = i + j;
                if k < n {
                    out[k] = &out[k] + p;
                } else {
                    out[k - n] = &out[k - n] - p;
                }
            }
        }
        Self::from_level_coords(level, out)
    }
}

impl Field for CycNum {
    /// Inversion by descending the tower: with s the automorphism
    /// zeta -> -zeta, the product x * s(x) lies one level down, so
    /// 1/x = s(x) / (x * s(x)) recursively, ending at a rational.
    fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.level == 0 {
            return Ok(Self::from_rational(self.coords[0].recip()));
        }
        let mut twisted = self.clone();
        for (k, c) in twisted.coords.iter_mut().enumerate() {
            if k % 2 == 1 {
                *c = -c.clone();
            }
        }
        let down = self.clone() * twisted.clone();
        debug_assert!(down.level < self.level);
        Ok(twisted * down.inv()?)
    }
}

impl Coeff for CycNum {
    fn term_text(&self) -> (bool, String) {
        if let Some(q) = self.as_rational() {
            let neg = q.is_negative();
            let a = q.abs();
            if a.is_one() {
                (neg, String::new())
            } else {
                (neg, a.to_string())
            }
        } else {
            (false, format!("({self})"))
        }
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let d = self.level;
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "zeta{d}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ExactDiv for CycNum {
    fn exact_div(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv().expect("division by zero")
    }
}

impl From<Rational> for CycNum {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn random_cyc(rng: &mut SplitMix64, level: u8) -> CycNum {
        let n = CycNum::dim(level);
        let coords: Vec<Rational> = (0..n)
            .map(|_| crate::rat(rng.below(13) as i64 - 6, 1 + rng.below(4) as i64))
            .collect();
        CycNum::from_level_coords(level, coords)
    }

    #[test]
    fn zeta2_squares_to_minus_one() {
        let i = CycNum::zeta(2);
        assert_eq!(i.clone() * i, CycNum::from_int(-1));
    }

    #[test]
    fn zeta3_squares_to_zeta2() {
        let z = CycNum::zeta(3);
        assert_eq!(z.clone() * z, CycNum::zeta(2));
    }

    #[test]
    fn tower_embedding_is_consistent() {
        // zeta_d lifted two levels is zeta_{d+2}^4.
        let z3 = CycNum::zeta(3);
        let z5 = CycNum::zeta(5);
        assert_eq!(z5.pow_u64(4), z3);
    }

    #[test]
    fn inverse_of_zeta_matches_power_formula() {
        for d in 1..=6u8 {
            let z = CycNum::zeta(d);
            let inv = z.inv().unwrap();
            // zeta^{2^d - 1} = -zeta^{2^{d-1}-1}
            assert_eq!(inv, CycNum::zeta_pow(d, (1u64 << d) - 1));
            assert_eq!(inv, -CycNum::zeta_pow(d, (1u64 << (d - 1)) - 1));
            assert!((z * inv).is_one());
        }
    }

    #[test]
    fn inverse_roundtrip_random() {
        let mut rng = SplitMix64::new(0x1dea);
        for level in 0..=5u8 {
            for _ in 0..8 {
                let x = random_cyc(&mut rng, level);
                if x.is_zero() {
                    continue;
                }
                assert!((x.clone() * x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycNum::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn field_axioms_spot_checked() {
        let mut rng = SplitMix64::new(0xf1e1d);
        for level in 2..=5u8 {
            for _ in 0..6 {
                let a = random_cyc(&mut rng, level);
                let b = random_cyc(&mut rng, level.saturating_sub(1));
                let c = random_cyc(&mut rng, level);
                assert_eq!(
                    (a.clone() * b.clone()) * c.clone(),
                    a.clone() * (b.clone() * c.clone())
                );
                assert_eq!(
                    a.clone() * (b.clone() + c.clone()),
                    a.clone() * b.clone() + a.clone() * c.clone()
                );
                assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                assert_eq!(a.clone() * b.clone(), b * a);
            }
        }
    }

    #[test]
    fn galois_identity_and_conjugation() {
        let mut rng = SplitMix64::new(77);
        for level in 0..=5u8 {
            let x = random_cyc(&mut rng, level);
            assert_eq!(x.galois(1).unwrap(), x);
        }
        // gamma = 2^d - 1 is complex conjugation.
        let z = CycNum::zeta(4);
        assert_eq!(z.galois(15).unwrap(), z.inv().unwrap());
    }

    #[test]
    fn galois_even_rejected() {
        assert!(CycNum::zeta(3).galois(2).is_err());
    }

    #[test]
    fn galois_is_a_group_action() {
        // gamma = 3 at level 3 applied twice equals gamma = 9 = 1 mod 8.
        let z = CycNum::zeta(3);
        let once = z.galois(3).unwrap();
        assert_eq!(once, CycNum::zeta_pow(3, 3));
        let twice = once.galois(3).unwrap();
        assert_eq!(twice, z);
        // Homomorphism on random elements.
        let mut rng = SplitMix64::new(0xabc);
        for level in 2..=5u8 {
            for _ in 0..5 {
                let x = random_cyc(&mut rng, level);
                let modulus = 1u64 << level;
                let g1 = 2 * rng.below(8) + 1;
                let g2 = 2 * rng.below(8) + 1;
                let lhs = x.galois(g2).unwrap().galois(g1).unwrap();
                let rhs = x.galois((g1 * g2) % modulus).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn galois_fixes_rationals() {
        let q = CycNum::from_rational(crate::rat(7, 3));
        assert_eq!(q.galois(5).unwrap(), q);
    }

    #[test]
    fn display_is_reduced() {
        let z = CycNum::zeta(3);
        let v = z.clone() * z.clone() * z.clone() * z; // zeta3^4 = -1
        assert_eq!(v.to_string(), "-1");
        assert_eq!(CycNum::zeta(2).to_string(), "zeta2");
    }
}
