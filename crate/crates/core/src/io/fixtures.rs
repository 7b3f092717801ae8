use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::input::{ComplexSpec, FaceSpec, InputDocument, StratumSpec};
use crate::complex::ComplexMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    /// `n` components in a ring. `n = 2` is the delta complex of two
    /// components meeting in two curves.
    Cycle(usize),
    Path(usize),
    /// Boundary of the `k`-simplex on `k + 1` components.
    SimplexBoundary(usize),
    Random {
        ell: usize,
        d: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("{kind} needs {what}, got {got}")]
    OutOfRange {
        kind: &'static str,
        what: &'static str,
        got: usize,
    },
}

fn need(ok: bool, kind: &'static str, what: &'static str, got: usize) -> Result<(), FixtureError> {
    if ok {
        Ok(())
    } else {
        Err(FixtureError::OutOfRange { kind, what, got })
    }
}

fn facets_doc(ell: usize, d: usize, facets: Vec<Vec<usize>>) -> InputDocument {
    InputDocument::from_complex(ComplexSpec {
        ell,
        d,
        mode: ComplexMode::Simplicial,
        facets: Some(facets),
        strata: None,
        face_map: None,
    })
}

fn two_cycle() -> InputDocument {
    let stratum = |name: &str, vertices: Vec<usize>| StratumSpec {
        name: name.to_string(),
        vertices,
    };
    let mut face_map = Vec::new();
    for e in ["1-2", "1-2'"] {
        for v in [1, 2] {
            face_map.push(FaceSpec {
                stratum: e.to_string(),
                vertices: vec![v],
                face: v.to_string(),
            });
        }
    }
    InputDocument::from_complex(ComplexSpec {
        ell: 2,
        d: 1,
        mode: ComplexMode::Delta,
        facets: None,
        strata: Some(vec![
            stratum("1", vec![1]),
            stratum("2", vec![2]),
            stratum("1-2", vec![1, 2]),
            stratum("1-2'", vec![1, 2]),
        ]),
        face_map: Some(face_map),
    })
}

fn random_facets(ell: usize, d: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = (d + 1).min(ell);
    let count = rng.gen_range(1..=ell + 1);
    let vertices: Vec<usize> = (1..=ell).collect();
    let mut facets = BTreeSet::new();
    for _ in 0..count {
        let size = rng.gen_range(1..=max);
        let mut f: Vec<usize> = vertices.choose_multiple(&mut rng, size).copied().collect();
        f.sort_unstable();
        facets.insert(f);
    }
    // keep only maximal sets
    let all: Vec<Vec<usize>> = facets.into_iter().collect();
    all.iter()
        .filter(|f| {
            !all.iter()
                .any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v)))
        })
        .cloned()
        .collect()
}

pub fn generate_fixture(kind: FixtureKind) -> Result<InputDocument, FixtureError> {
    Ok(match kind {
        FixtureKind::Cycle(n) => {
            need(n >= 2, "cycle", "n >= 2", n)?;
            if n == 2 {
                two_cycle()
            } else {
                let facets = (1..=n)
                    .map(|i| {
                        let mut e = vec![i, i % n + 1];
                        e.sort_unstable();
                        e
                    })
                    .collect();
                facets_doc(n, 1, facets)
            }
        }
        FixtureKind::Path(n) => {
            need(n >= 2, "path", "n >= 2", n)?;
            facets_doc(n, 1, (1..n).map(|i| vec![i, i + 1]).collect())
        }
        FixtureKind::SimplexBoundary(k) => {
            need(k >= 1, "simplex_boundary", "k >= 1", k)?;
            let ell = k + 1;
            let facets = (1..=ell)
                .rev()
                .map(|skip| (1..=ell).filter(|&v| v != skip).collect())
                .collect();
            facets_doc(ell, (k - 1).max(1), facets)
        }
        FixtureKind::Random { ell, d, seed } => {
            need(ell >= 1, "random", "ell >= 1", ell)?;
            need(d >= 1, "random", "d >= 1", d)?;
            facets_doc(ell, d, random_facets(ell, d, seed))
        }
    })
}
