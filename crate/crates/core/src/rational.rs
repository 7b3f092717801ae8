//! Exact scalar types and their `"p/q"` text form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {text:?}: {reason}")]
pub struct ParseRationalError {
    pub text: String,
    pub reason: &'static str,
}

/// Parses `"p"` or `"p/q"` with `q != 0`. Surrounding whitespace is not accepted.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        text: text.to_string(),
        reason,
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let parse_int = |s: &str| -> Result<Int, ParseRationalError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(
                "expected an integer numerator and optional /denominator",
            ));
        }
        Int::from_str(s).map_err(|_| err("integer out of range"))
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => Int::one(),
    };
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: lowest terms, positive denominator, integers without `/1`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: &Int) -> Rational {
    Rational::from_integer(n.clone())
}

/// Display adapter for a rational vector, e.g. `(1/2, 1/2)`.
pub struct RatVec<'a>(pub &'a [Rational]);

impl fmt::Display for RatVec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(q))?;
        }
        write!(f, ")")
    }
}

/// True iff `u` is a point of the standard simplex: nonnegative entries summing to one.
pub fn is_barycentric(u: &[Rational]) -> bool {
    !u.is_empty()
        && u.iter().all(|x| !x.is_negative())
        && u.iter().fold(Rational::zero(), |acc, x| acc + x) == Rational::one()
}
