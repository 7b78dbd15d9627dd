//! Exactness analysis of the original Grover search algorithm.
//!
//! The toolkit answers, for a database of N entries with t targets,
//! whether repeated amplitude amplification can succeed with certainty,
//! by three mutually cross-validating routes:
//!
//! - an analytic classifier over the exact rational cos(2θ) = 1 - 2t/N,
//!   backed by the classification of rational cosine values at rational
//!   multiples of π;
//! - an exact rational hit search on the success probability sequence
//!   p_n, computed through the integer polynomial family with
//!   f_n(2cos φ) = 2cos(nφ);
//! - a dense real statevector simulation of the oracle sign-flip and the
//!   inversion about the average.
//!
//! The survey layer enumerates all instances up to a bound, checks the
//! three routes against each other, and emits CSV/JSON reports.

pub mod error;
pub mod exactmath;
pub mod grover;
pub mod simulator;
pub mod survey;

pub use error::Error;
pub use exactmath::{chebyshev_like, decide_rational_angle, integer_roots, IntPolynomial, NivenVerdict, Rational};
pub use grover::{ExactnessVerdict, InstanceParams};
pub use simulator::{IterationTrace, SearchSpec, StateVector};
pub use survey::{cross_validate, emit_report, survey_range, ReportFormat, SurveyRecord, ValidationSummary};
