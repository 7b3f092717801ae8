//! Tropical projective space over `Q ∪ {∞}` and min-plus evaluation of
//! monomial valuations.
//!
//! Values are kept in `-log` form throughout: the valuation of a function on
//! the canonical simplex at weights `u` is `min_m <u, m>` over the exponents of
//! its expansion, and the exponential is never formed.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropValue {
    Finite(Rational),
    Infinity,
}

impl TropValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropValue::Finite(q) => Some(q),
            TropValue::Infinity => None,
        }
    }
}

impl From<Rational> for TropValue {
    fn from(q: Rational) -> Self {
        TropValue::Finite(q)
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropValue::Finite(q) => f.write_str(&format_rational(q)),
            TropValue::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropError {
    #[error("every coordinate is infinite")]
    AllInfinite,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("monomial support is empty")]
    EmptySupport,
    #[error("exponent has {got} entries, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("weight vector has {got} entries, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("weights must be nonnegative")]
    NegativeWeight,
}

/// A point of `TP^n` in canonical form: the smallest finite coordinate is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalProjectivePoint {
    coords: Vec<TropValue>,
}

impl TropicalProjectivePoint {
    pub fn coords(&self) -> &[TropValue] {
        &self.coords
    }

    /// Projective dimension `n` (one less than the coordinate count).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Display for TropicalProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Shifts every finite coordinate by minus the smallest finite one.
pub fn trop_normalize(raw: &[TropValue]) -> Result<TropicalProjectivePoint, TropError> {
    let min = raw
        .iter()
        .filter_map(TropValue::finite)
        .min()
        .cloned()
        .ok_or(TropError::AllInfinite)?;
    let coords = raw
        .iter()
        .map(|c| match c {
            TropValue::Finite(q) => TropValue::Finite(q - &min),
            TropValue::Infinity => TropValue::Infinity,
        })
        .collect();
    Ok(TropicalProjectivePoint { coords })
}

/// Equality in `TP^n`: same canonical representative.
pub fn trop_eq(
    x: &TropicalProjectivePoint,
    y: &TropicalProjectivePoint,
) -> Result<bool, TropError> {
    if x.coords.len() != y.coords.len() {
        return Err(TropError::LengthMismatch(x.coords.len(), y.coords.len()));
    }
    let (x, y) = (trop_normalize(&x.coords)?, trop_normalize(&y.coords)?);
    Ok(x.coords == y.coords)
}

/// The exponents `m` with nonzero coefficient in an expansion
/// `f = Σ a_m T_1^{m_1} ... T_r^{m_r}` around the generic point of a stratum.
/// Only the support matters for the valuation, so coefficients are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSupport {
    r: usize,
    exponents: BTreeSet<Vec<u64>>,
}

impl MonomialSupport {
    pub fn new(r: usize, exponents: impl IntoIterator<Item = Vec<u64>>) -> Result<Self, TropError> {
        let exponents: BTreeSet<Vec<u64>> = exponents.into_iter().collect();
        if exponents.is_empty() {
            return Err(TropError::EmptySupport);
        }
        if let Some(m) = exponents.iter().find(|m| m.len() != r) {
            return Err(TropError::ExponentLength {
                expected: r,
                got: m.len(),
            });
        }
        Ok(Self { r, exponents })
    }

    /// Support of a single monomial `T^m`.
    pub fn monomial(m: Vec<u64>) -> Self {
        let r = m.len();
        Self {
            r,
            exponents: BTreeSet::from([m]),
        }
    }

    /// The uniformizer `ϖ = T_1 ⋯ T_r` near a stratum with `r` local coordinates.
    pub fn uniformizer(r: usize) -> Self {
        Self::monomial(vec![1; r])
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.exponents.iter()
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn union(&self, other: &Self) -> Result<Self, TropError> {
        if self.r != other.r {
            return Err(TropError::LengthMismatch(self.r, other.r));
        }
        Ok(Self {
            r: self.r,
            exponents: self.exponents.union(&other.exponents).cloned().collect(),
        })
    }

    /// Support of a product with generic coefficients: the Minkowski sum.
    pub fn product(&self, other: &Self) -> Result<Self, TropError> {
        if self.r != other.r {
            return Err(TropError::LengthMismatch(self.r, other.r));
        }
        let mut exponents = BTreeSet::new();
        for a in &self.exponents {
            for b in &other.exponents {
                exponents.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(Self {
            r: self.r,
            exponents,
        })
    }
}

/// `-log |f|_{u,S} = min_m <u, m>` over the support of `f`.
pub fn eval_min_plus(f: &MonomialSupport, u: &[Rational]) -> Result<Rational, TropError> {
    if u.len() != f.r {
        return Err(TropError::WeightLength {
            expected: f.r,
            got: u.len(),
        });
    }
    if u.iter().any(Signed::is_negative) {
        return Err(TropError::NegativeWeight);
    }
    f.exponents
        .iter()
        .map(|m| {
            m.iter()
                .zip(u)
                .filter(|(e, _)| **e != 0)
                .fold(Rational::zero(), |acc, (&e, w)| {
                    acc + w * Rational::from_integer(e.into())
                })
        })
        .min()
        .ok_or(TropError::EmptySupport)
}
