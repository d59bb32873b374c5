//! Exact rational and sparse multivariate polynomial arithmetic.
//!
//! This is the algebra kernel: arbitrary-precision rationals, sparse
//! multivariate polynomials in canonical graded-lex form, polynomial
//! matrices with fraction-free determinants, resultants, and complex
//! evaluation. Everything here is exact until the final conversion to
//! floating point in [`MPoly::eval`].

mod matrix;
mod mpoly;

pub use matrix::{det, det_cofactor, PolyMatrix};
pub use mpoly::{MPoly, Monomial, PolyJson, TermJson};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Kept reduced with a positive denominator by
/// `num-rational`; zero is canonically `0/1`.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational-to-double conversion used by every numeric evaluation.
/// Each coefficient is converted independently (round-to-nearest); this is
/// the documented rounding model behind all residual tolerances.
pub fn rat_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num = r.numer();
    let den = r.denom();
    let (nf, df) = (num.to_f64(), den.to_f64());
    if let (Some(nf), Some(df)) = (nf, df) {
        if nf.is_finite() && df.is_finite() && df != 0.0 {
            return nf / df;
        }
    }
    // Out of f64 range: shift both parts down by a common power of two.
    let shift = num.bits().max(den.bits()).saturating_sub(512) as usize;
    let (n, d) = (num >> shift, den >> shift);
    let nf = n.to_f64().unwrap_or(if num.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let df = d.to_f64().unwrap_or(f64::INFINITY);
    nf / df
}

/// Parses "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> crate::error::Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let num: BigInt = p
                .trim()
                .parse()
                .map_err(|_| crate::error::Error::Parse(format!("bad numerator `{p}`")))?;
            let den: BigInt = q
                .trim()
                .parse()
                .map_err(|_| crate::error::Error::Parse(format!("bad denominator `{q}`")))?;
            if den.is_zero() {
                return Err(crate::error::Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s
                .parse()
                .map_err(|_| crate::error::Error::Parse(format!("bad integer `{s}`")))?;
            Ok(BigRational::from_integer(num))
        }
    }
}

pub fn rat_one() -> Rational {
    BigRational::one()
}

pub fn rat_zero() -> Rational {
    BigRational::zero()
}
