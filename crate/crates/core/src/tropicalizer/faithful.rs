use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::disjoint::{
    images_relint_disjoint_exact, separation_unchecked, ExactVerdict, SeparationCertificate,
};
use super::map::{check_unimodular, PiecewiseAffineMap, UnimodularityCertificate};
use super::TropicalizerError;
use crate::complex::{DualComplex, StratumId};
use crate::sections::OrderMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Certificate,
    Exact,
    #[default]
    Both,
}

impl CheckMode {
    fn certificate(self) -> bool {
        self != CheckMode::Exact
    }

    fn exact(self) -> bool {
        self != CheckMode::Certificate
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    pub mode: CheckMode,
    /// Worker threads for pair checks; the report does not depend on it.
    pub jobs: usize,
    /// Restrict pair checks to these unordered pairs.
    pub pairs: Option<Vec<(StratumId, StratumId)>>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            mode: CheckMode::Both,
            jobs: 1,
            pairs: None,
        }
    }
}

impl CheckOptions {
    pub fn with_mode(mode: CheckMode) -> Self {
        Self {
            mode,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    /// One stratum is a face of `ambient`, the other.
    Face {
        ambient: StratumId,
    },
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateEvidence {
    Separation(Box<SeparationCertificate>),
    /// Face pair discharged by a unimodular (hence injective) ambient piece.
    AmbientInjective {
        ambient: StratumId,
    },
    Missing {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub s: StratumId,
    pub t: StratumId,
    pub relation: PairRelation,
    pub certificate: Option<CertificateEvidence>,
    pub exact: Option<ExactVerdict>,
}

impl PairRecord {
    /// Whether both paths ran and reached the same conclusion. A missing
    /// certificate is not a conclusion, so it agrees with nothing.
    pub fn paths_agree(&self) -> Option<bool> {
        let cert = self.certificate.as_ref()?;
        let exact = self.exact.as_ref()?;
        let certified = !matches!(cert, CertificateEvidence::Missing { .. });
        Some(certified && exact.is_disjoint())
    }

    fn defect(&self) -> Option<String> {
        match (&self.certificate, &self.exact) {
            (Some(c), Some(ExactVerdict::Collision { .. }))
                if !matches!(c, CertificateEvidence::Missing { .. }) =>
            {
                Some(format!(
                    "pair ({}, {}): certified disjoint but the exact oracle found a collision",
                    self.s, self.t
                ))
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    Faithful,
    NotFaithful,
    CertificateIncomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub mode: CheckMode,
    /// One certificate per stratum, in stratum order.
    pub strata: Vec<UnimodularityCertificate>,
    /// Sorted by `(s, t)` with `s < t`.
    pub pairs: Vec<PairRecord>,
    /// Disagreements between the certificate and exact paths.
    pub defects: Vec<String>,
    pub notes: Vec<String>,
    pub overall: Overall,
}

impl FaithfulnessReport {
    pub fn collisions(&self) -> impl Iterator<Item = &PairRecord> {
        self.pairs
            .iter()
            .filter(|p| matches!(p.exact, Some(ExactVerdict::Collision { .. })))
    }
}

fn relation(c: &DualComplex, s: StratumId, t: StratumId) -> PairRelation {
    if c.is_face(s, t) {
        PairRelation::Face { ambient: t }
    } else if c.is_face(t, s) {
        PairRelation::Face { ambient: s }
    } else {
        PairRelation::Independent
    }
}

fn certificate_for(
    f: &PiecewiseAffineMap<'_>,
    m: &OrderMatrix,
    unimodular: &[UnimodularityCertificate],
    s: StratumId,
    t: StratumId,
    rel: PairRelation,
) -> CertificateEvidence {
    let c = f.complex();
    match rel {
        PairRelation::Face { ambient } => {
            if unimodular[ambient.0].verdict {
                CertificateEvidence::AmbientInjective { ambient }
            } else {
                CertificateEvidence::Missing {
                    reason: format!("piece on {} is not unimodular", c.stratum(ambient).name),
                }
            }
        }
        PairRelation::Independent => {
            // an open-interval separation needs a stratum with at least two vertices
            let mut order = [(s, t), (t, s)];
            if c.stratum(t).vertices.len() > c.stratum(s).vertices.len() {
                order.swap(0, 1);
            }
            if let Some(cert) = order
                .iter()
                .find_map(|&(a, b)| separation_unchecked(f, m, a, b))
            {
                return CertificateEvidence::Separation(Box::new(cert));
            }
            let (vs, vt) = (c.stratum(s).vertex_set(), c.stratum(t).vertex_set());
            let reason = if vs == vt {
                format!(
                    "{} and {} share the vertex set {:?}; no vertex of either lies outside the other",
                    c.stratum(s).name,
                    c.stratum(t).name,
                    vs
                )
            } else {
                "no coordinate separates the two cells".to_string()
            };
            CertificateEvidence::Missing { reason }
        }
    }
}

/// Runs unimodularity on every stratum and disjointness on every unordered
/// pair of strata, by the separation certificate, the exact oracle, or both.
pub fn check_faithful(
    c: &DualComplex,
    m: &OrderMatrix,
    options: &CheckOptions,
) -> Result<FaithfulnessReport, TropicalizerError> {
    let f = PiecewiseAffineMap::build(c, m)?;
    let strata: Vec<UnimodularityCertificate> = c
        .strata()
        .iter()
        .map(|s| check_unimodular(&f, s.id))
        .collect();

    let n = c.strata().len();
    let mut pairs: Vec<(StratumId, StratumId)> = match &options.pairs {
        Some(list) => {
            let set: BTreeSet<(StratumId, StratumId)> = list
                .iter()
                .filter(|(a, b)| a != b)
                .map(|&(a, b)| (a.min(b), a.max(b)))
                .collect();
            set.into_iter().collect()
        }
        None => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (StratumId(i), StratumId(j))))
            .collect(),
    };
    pairs.retain(|(a, b)| a.0 < n && b.0 < n);

    let mode = options.mode;
    let run = |&(s, t): &(StratumId, StratumId)| -> Result<PairRecord, TropicalizerError> {
        let rel = relation(c, s, t);
        let certificate = mode
            .certificate()
            .then(|| certificate_for(&f, m, &strata, s, t, rel));
        let exact = if mode.exact() {
            Some(images_relint_disjoint_exact(&f, s, t)?)
        } else {
            None
        };
        Ok(PairRecord {
            s,
            t,
            relation: rel,
            certificate,
            exact,
        })
    };
    let records: Vec<PairRecord> = if options.jobs <= 1 {
        pairs.iter().map(run).collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| TropicalizerError::ThreadPool(e.to_string()))?;
        pool.install(|| pairs.par_iter().map(run).collect::<Result<_, _>>())?
    };

    let defects: Vec<String> = records.iter().filter_map(PairRecord::defect).collect();
    let mut notes = Vec::new();
    let components = c.connected_components();
    if components.len() > 1 {
        notes.push(format!(
            "complex is disconnected ({} components)",
            components.len()
        ));
    }
    for rec in &records {
        if let Some(CertificateEvidence::Missing { reason }) = &rec.certificate {
            notes.push(format!(
                "pair ({}, {}): no certificate: {reason}",
                rec.s, rec.t
            ));
        }
    }

    let all_unimodular = strata.iter().all(|u| u.verdict);
    let collision = records
        .iter()
        .any(|r| matches!(r.exact, Some(ExactVerdict::Collision { .. })));
    let missing = records
        .iter()
        .any(|r| matches!(r.certificate, Some(CertificateEvidence::Missing { .. })));
    let overall = if !all_unimodular || collision {
        Overall::NotFaithful
    } else if mode == CheckMode::Certificate && missing {
        Overall::CertificateIncomplete
    } else {
        Overall::Faithful
    };

    Ok(FaithfulnessReport {
        mode,
        strata,
        pairs: records,
        defects,
        notes,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sections::canonical_order_matrix;

    fn cycle(n: usize) -> DualComplex {
        let facets: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, i % n + 1]).collect();
        DualComplex::build_from_facets(n, 1, &facets).unwrap()
    }

    #[test]
    fn cycles_are_faithful_in_every_mode() {
        for n in 3..=6 {
            let c = cycle(n);
            let m = canonical_order_matrix(&c);
            for mode in [CheckMode::Certificate, CheckMode::Exact, CheckMode::Both] {
                let r = check_faithful(&c, &m, &CheckOptions::with_mode(mode)).unwrap();
                assert_eq!(r.overall, Overall::Faithful, "cycle({n}) {mode:?}");
                assert!(r.defects.is_empty());
                let s = c.strata().len();
                assert_eq!(r.pairs.len(), s * (s - 1) / 2);
            }
        }
    }

    #[test]
    fn both_mode_paths_agree_on_simplex_boundary() {
        let facets: Vec<Vec<usize>> = (1..=4)
            .map(|skip| (1..=4).filter(|&v| v != skip).collect())
            .collect();
        let c = DualComplex::build_from_facets(4, 2, &facets).unwrap();
        let r = check_faithful(&c, &canonical_order_matrix(&c), &CheckOptions::default()).unwrap();
        assert_eq!(r.overall, Overall::Faithful);
        assert!(r.pairs.iter().all(|p| p.paths_agree() == Some(true)));
    }

    #[test]
    fn shared_vertex_set_is_not_faithful() {
        let c = super::super::disjoint::tests::two_edges();
        let m = canonical_order_matrix(&c);
        let r = check_faithful(&c, &m, &CheckOptions::default()).unwrap();
        assert_eq!(r.overall, Overall::NotFaithful);
        assert_eq!(r.collisions().count(), 1);
        assert!(r.defects.is_empty());
        assert!(r.notes.iter().any(|n| n.contains("share the vertex set")));

        let cert_only =
            check_faithful(&c, &m, &CheckOptions::with_mode(CheckMode::Certificate)).unwrap();
        assert_eq!(cert_only.overall, Overall::CertificateIncomplete);
    }

    #[test]
    fn pair_filter_and_jobs() {
        let c = cycle(5);
        let m = canonical_order_matrix(&c);
        let opts = CheckOptions {
            mode: CheckMode::Both,
            jobs: 4,
            pairs: Some(vec![
                (StratumId(7), StratumId(5)),
                (StratumId(5), StratumId(7)),
                (StratumId(1), StratumId(1)),
            ]),
        };
        let r = check_faithful(&c, &m, &opts).unwrap();
        assert_eq!(r.pairs.len(), 1);
        assert_eq!((r.pairs[0].s, r.pairs[0].t), (StratumId(5), StratumId(7)));
        let serial = check_faithful(&c, &m, &CheckOptions { jobs: 1, ..opts }).unwrap();
        assert_eq!(r, serial);
    }

    #[test]
    fn invalid_orders_are_rejected() {
        let c = cycle(3);
        let mut m = canonical_order_matrix(&c);
        m.set_order(1, 2, 2);
        assert!(matches!(
            check_faithful(&c, &m, &CheckOptions::default()),
            Err(TropicalizerError::InvalidOrders(_))
        ));
    }
}
