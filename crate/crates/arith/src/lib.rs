//! Exact arithmetic foundation for the atlas workspace.
//!
//! Everything here is exact: arbitrary-precision rationals, elements of the
//! 2-power cyclotomic tower Q(zeta_{2^d}), sparse multivariate polynomials
//! over a generic coefficient ring, and exact linear algebra over any of
//! these. No floating point, no modular shortcuts.
//!
//! The polynomial and matrix types are generic over the scalar via the
//! [`Ring`] / [`Field`] traits (built on `num_traits::{Zero, One}`); the
//! concrete instantiations used throughout the workspace are exported as
//! type aliases at the crate root.

pub mod cyclotomic;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod ring;
pub mod rng;

pub use cyclotomic::CycNum;
pub use matrix::Matrix;
pub use partition::Partition;
pub use poly::{MPoly, VarSet};
pub use ring::{ArithError, Coeff, ExactDiv, Field, Ring};
pub use rng::SplitMix64;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Sparse polynomial with integer coefficients.
pub type ZPoly = MPoly<Integer>;
/// Sparse polynomial with rational coefficients.
pub type QPoly = MPoly<Rational>;
/// Sparse polynomial with 2-power cyclotomic coefficients.
pub type CycPoly = MPoly<CycNum>;

/// Matrix over integer polynomials (symbolic matrices live here).
pub type ZPolyMatrix = Matrix<ZPoly>;
/// Matrix over cyclotomic scalars (evaluated matrices live here).
pub type CycMatrix = Matrix<CycNum>;

/// Shorthand for a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Exact binomial coefficient; zero when k > n.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    let k = k.min(n - k);
    let mut acc = Integer::from(1);
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> Integer {
    let mut acc = Integer::from(1);
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}
