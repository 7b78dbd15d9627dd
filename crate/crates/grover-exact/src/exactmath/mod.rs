//! Exact arithmetic foundation: rationals over big integers, integer
//! polynomials and the Chebyshev-like family, integer-root enumeration,
//! and the rational-angle classification.

pub mod niven;
pub mod poly;
pub mod rational;

pub use niven::{decide_rational_angle, NivenVerdict};
pub use poly::{chebyshev_like, integer_roots, IntPolynomial};
pub use rational::Rational;
