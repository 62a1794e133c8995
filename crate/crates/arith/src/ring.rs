//! Scalar traits shared by the polynomial and matrix types.
//!
//! [`Ring`] is a blanket trait over `num_traits::{Zero, One}` plus the usual
//! ring operators; it is implemented automatically for `BigInt`,
//! `BigRational`, [`crate::CycNum`] and [`crate::MPoly`] over any of them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Ring with multiplicative inverses for nonzero elements.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Division by a small positive integer (used by Faddeev-LeVerrier).
    fn div_usize(&self, k: usize) -> Result<Self, ArithError> {
        let mut kk = Self::zero();
        for _ in 0..k {
            kk = kk + Self::one();
        }
        Ok(self.clone() * kk.inv()?)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.recip())
    }
}

/// Exact division in an integral domain; the caller asserts divisibility
/// (as in fraction-free elimination, where it is guaranteed).
pub trait ExactDiv: Sized {
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(!rhs.is_zero());
        debug_assert!((self % rhs).is_zero(), "inexact integer division");
        self / rhs
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// How a scalar renders when it appears as a term coefficient inside a
/// polynomial string.
///
/// Returns `(negative, magnitude)`; an empty magnitude means the coefficient
/// is a unit that is suppressed next to a nonempty monomial.
pub trait Coeff: Ring {
    fn term_text(&self) -> (bool, String);
}

impl Coeff for BigInt {
    fn term_text(&self) -> (bool, String) {
        let neg = self.is_negative();
        let a = self.abs();
        if a.is_one() {
            (neg, String::new())
        } else {
            (neg, a.to_string())
        }
    }
}

impl Coeff for BigRational {
    fn term_text(&self) -> (bool, String) {
        let neg = self.is_negative();
        let a = self.abs();
        if a.is_one() {
            (neg, String::new())
        } else {
            (neg, a.to_string())
        }
    }
}
