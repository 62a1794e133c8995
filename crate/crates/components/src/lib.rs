//! From weighted forests to irreducible-component data.
//!
//! A weighted forest parametrizes a rational map into projective space by
//! the coefficients of a product of one factor per non-ramification node;
//! its image is (conjecturally) a minimal irreducible component of the
//! scheme cut out by the leading characteristic-polynomial coefficients of
//! the truncated Hurwitz matrix. This crate builds those parametrizations,
//! verifies membership exactly, computes degrees, multiplicities, Jordan
//! partitions and Galois data, extends minimal components to their series,
//! and implements the even and odd lifts with their identities.

mod chow;
mod lifts;
mod membership;
mod param;
mod rankprofile;
mod records;
mod series;
mod zmap;

pub use chow::{chow_pushforward_degree, segre_monomial_pushforward, segre_pushforward_multinomial};
pub use lifts::{
    endpoint_charpoly, endpoint_charpoly_is_pure_power, even_interleave_identity,
    even_lift, even_rank_shift_identity, hsystem_determinant_factor_identity,
    odd_charpoly_factorization, odd_hsystem_identity, odd_segre, odd_segre_inverse,
    product_hsystem_identity, EvenLift, SignReport,
};
pub use membership::{point_in_variety, verify_membership, MembershipFailure};
pub use param::{param_vector, CFactors, ParamVector};
pub use rankprofile::{power_ranks, rank_profile_partition, RankProfileError};
pub use records::{balance_identity, enumerate_components, ComponentRecord};
pub use series::{series_degree, series_record, nu_extend};
pub use zmap::{hyperplane_descent, DescentTarget};
pub use records::covering_and_degree;
pub use records::{degree_coefficient, multiplicity};

use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum ComponentError {
    #[error(transparent)]
    Arith(#[from] atlas_arith::ArithError),
    #[error(transparent)]
    Matrix(#[from] atlas_matrices::MatrixFamilyError),
    #[error(transparent)]
    Forest(#[from] atlas_forests::ForestError),
    #[error("membership failure: {0}")]
    Membership(MembershipFailure),
    #[error("domain error: {0}")]
    Domain(String),
}
