//! Basepoint-freeness thresholds for adjoint bundles and the resulting
//! section counts.
//!
//! `φ(d)` is the least integer such that `N^m ⊗ ω_Z` is basepoint free for
//! every ample `N` on every smooth projective `Z` of dimension `d` and every
//! `m >= φ(d)`. Only upper bounds are available: the Angehrn–Siu bound
//! `d(d+1)/2 + 1` in general and Fujita's `d + 1`, which is proven for `d <= 4`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMode {
    AngehrnSiu,
    Fujita,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CanonicalClass {
    /// `K_X` trivial (e.g. abelian or Calabi–Yau varieties).
    TrivialCanonical,
    /// Relative dualizing sheaf of the model relatively ample.
    AmpleCanonical,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("component count must be at least 1")]
    NoComponents,
    #[error("Fujita's bound is only known for d <= 4, got d = {0}")]
    FujitaUnknown(usize),
    #[error("the twist bound requires d <= 4, got d = {0}")]
    TwistOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundQuery {
    pub d: usize,
    pub ell: usize,
    pub mode: BoundMode,
}

impl BoundQuery {
    pub fn new(d: usize, ell: usize, mode: BoundMode) -> Result<Self, BoundError> {
        if d == 0 {
            return Err(BoundError::ZeroDimension);
        }
        if ell == 0 {
            return Err(BoundError::NoComponents);
        }
        if mode == BoundMode::Fujita && d > 4 {
            return Err(BoundError::FujitaUnknown(d));
        }
        Ok(Self { d, ell, mode })
    }
}

pub fn phi_upper_bound(q: &BoundQuery) -> Result<usize, BoundError> {
    let d = q.d;
    if d == 0 {
        return Err(BoundError::ZeroDimension);
    }
    match q.mode {
        BoundMode::AngehrnSiu => Ok(d * (d + 1) / 2 + 1),
        BoundMode::Fujita if d <= 4 => Ok(d + 1),
        BoundMode::Fujita => Err(BoundError::FujitaUnknown(d)),
    }
}

/// Number of sections `s_0, ..., s_{ell+d}` used for the tropicalization;
/// the target tropical projective space has one dimension less.
pub fn coordinate_count(ell: usize, d: usize) -> Result<usize, BoundError> {
    if d == 0 {
        return Err(BoundError::ZeroDimension);
    }
    if ell == 0 {
        return Err(BoundError::NoComponents);
    }
    Ok(ell + d + 1)
}

/// Smallest `m` from which `|L^m|` (trivial canonical bundle) or `|ω_X^m|`
/// (relatively ample relative canonical bundle) gives a faithful
/// tropicalization, for `d <= 4`.
pub fn corollary_twist(d: usize, case: CanonicalClass) -> Result<usize, BoundError> {
    if d == 0 {
        return Err(BoundError::ZeroDimension);
    }
    if d > 4 {
        return Err(BoundError::TwistOutOfRange(d));
    }
    Ok(match case {
        CanonicalClass::TrivialCanonical => d + 1,
        CanonicalClass::AmpleCanonical => d + 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(d: usize, mode: BoundMode) -> usize {
        phi_upper_bound(&BoundQuery::new(d, 1, mode).unwrap()).unwrap()
    }

    #[test]
    fn bound_examples() {
        assert_eq!(phi(2, BoundMode::Fujita), 3);
        assert_eq!(phi(4, BoundMode::AngehrnSiu), 11);
        assert_eq!(phi(1, BoundMode::AngehrnSiu), 2);
        assert_eq!(phi(1, BoundMode::Fujita), 2);
        assert_eq!(
            BoundQuery::new(5, 1, BoundMode::Fujita),
            Err(BoundError::FujitaUnknown(5))
        );
        assert!(phi_upper_bound(&BoundQuery {
            d: 5,
            ell: 1,
            mode: BoundMode::Fujita
        })
        .is_err());
        assert_eq!(
            BoundQuery::new(0, 1, BoundMode::AngehrnSiu),
            Err(BoundError::ZeroDimension)
        );
    }

    #[test]
    fn counts() {
        assert_eq!(coordinate_count(2, 1).unwrap(), 4);
        assert_eq!(coordinate_count(1, 1).unwrap(), 3);
        assert_eq!(coordinate_count(5, 3).unwrap(), 9);
        assert!(coordinate_count(0, 3).is_err());
    }

    #[test]
    fn twists() {
        assert_eq!(
            corollary_twist(3, CanonicalClass::TrivialCanonical).unwrap(),
            4
        );
        assert_eq!(
            corollary_twist(4, CanonicalClass::AmpleCanonical).unwrap(),
            6
        );
        assert_eq!(
            corollary_twist(5, CanonicalClass::TrivialCanonical),
            Err(BoundError::TwistOutOfRange(5))
        );
    }

    #[test]
    fn fujita_never_exceeds_angehrn_siu_and_both_grow() {
        let mut prev = (0, 0);
        for d in 1..=4 {
            let (f, a) = (phi(d, BoundMode::Fujita), phi(d, BoundMode::AngehrnSiu));
            assert!(f <= a);
            assert!(f >= prev.0 && a >= prev.1);
            prev = (f, a);
        }
        for d in 5..40 {
            assert!(phi(d, BoundMode::AngehrnSiu) >= phi(d - 1, BoundMode::AngehrnSiu));
        }
    }
}
