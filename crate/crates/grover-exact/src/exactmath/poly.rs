//! Integer-coefficient polynomials, the Chebyshev-like family
//! f_0 = 2, f_1 = x, f_n = x f_{n-1} - f_{n-2}, and integer-root
//! enumeration for monic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exactmath::rational::Rational;

/// Dense integer-coefficient polynomial, stored low-to-high.
///
/// Trailing zero coefficients are trimmed; the zero polynomial is the
/// empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients low-to-high; empty for the zero polynomial.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds the constant `k`, e.g. to form f_n ± 2.
    pub fn add_constant(&self, k: impl Into<BigInt>) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        coeffs[0] += k.into();
        IntPolynomial::new(coeffs)
    }

    /// Exact evaluation at a rational point by Horner's scheme.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The polynomial f_n with f_n(2cosφ) = 2cos(nφ), built from
/// f_0 = 2, f_1 = x by f_n = x f_{n-1} - f_{n-2}.
///
/// For n ≥ 1 the result is monic of degree n; f_0 is the constant 2 and
/// is not monic.
pub fn chebyshev_like(n: u64) -> IntPolynomial {
    let f0 = IntPolynomial::from_i64(&[2]);
    if n == 0 {
        return f0;
    }
    let f1 = IntPolynomial::from_i64(&[0, 1]);
    if n == 1 {
        return f1;
    }
    let (mut prev, mut cur) = (f0, f1);
    for _ in 2..=n {
        // x * cur - prev
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend_from_slice(&cur.coeffs);
        for (c, p) in coeffs.iter_mut().zip(&prev.coeffs) {
            *c -= p;
        }
        prev = cur;
        cur = IntPolynomial::new(coeffs);
    }
    cur
}

/// All integer roots of a monic polynomial of degree ≥ 1.
///
/// By the rational root theorem for monic integer polynomials this set
/// equals the set of all rational roots. Powers of x are deflated first
/// (contributing the root 0 when present), then every signed divisor of
/// the remaining constant term is tested.
pub fn integer_roots(p: &IntPolynomial) -> Result<Vec<BigInt>, Error> {
    if p.degree().unwrap_or(0) < 1 || !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut coeffs = p.coeffs.clone();
    let mut roots = Vec::new();
    while coeffs.first().is_some_and(|c| c.is_zero()) {
        if roots.is_empty() {
            roots.push(BigInt::zero());
        }
        coeffs.remove(0);
    }
    let deflated = IntPolynomial::new(coeffs);
    if deflated.degree().unwrap_or(0) >= 1 {
        let constant = deflated.constant_term().abs();
        for d in divisors(&constant) {
            for candidate in [d.clone(), -d] {
                if deflated.eval_integer(&candidate).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    let mut out = Vec::new();
    let limit = n.sqrt();
    let mut d = BigInt::one();
    while d <= limit {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}
