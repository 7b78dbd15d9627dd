//! Classification of rational cosine values: cos(rπ) is rational for
//! rational r exactly when it is one of 0, ±1/2, ±1.

use crate::error::Error;
use crate::exactmath::rational::Rational;

/// Whether a rational cosine value corresponds to a rational multiple of π.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NivenVerdict {
    /// cos(rπ) equals the queried value, with r in lowest terms in [0, 1].
    RationalAngle(Rational),
    IrrationalAngle,
}

/// Decides whether c = cos(rπ) for some rational r, returning the
/// principal r ∈ [0, 1] when it exists.
///
/// The only rational c admitting a rational angle are 1, 1/2, 0, -1/2,
/// and -1, mapping to r = 0, 1/3, 1/2, 2/3, and 1 respectively.
pub fn decide_rational_angle(c: &Rational) -> Result<NivenVerdict, Error> {
    if c.abs() > Rational::one() {
        return Err(Error::CosineOutOfRange(c.to_string()));
    }
    let table = [
        ((1, 1), (0, 1)),
        ((1, 2), (1, 3)),
        ((0, 1), (1, 2)),
        ((-1, 2), (2, 3)),
        ((-1, 1), (1, 1)),
    ];
    for ((cn, cd), (rn, rd)) in table {
        if c == &Rational::new(cn, cd).unwrap() {
            return Ok(NivenVerdict::RationalAngle(Rational::new(rn, rd).unwrap()));
        }
    }
    Ok(NivenVerdict::IrrationalAngle)
}
