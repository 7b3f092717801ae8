use serde::Serialize;
use sha2::{Digest, Sha256};

use super::input::InputDocument;
use crate::complex::{ComplexMode, DualComplex, StratumId};
use crate::rational::{format_rational, Int, Rational};
use crate::tropicalizer::{
    CertificateEvidence, CheckMode, ExactVerdict, FaithfulnessReport, Overall, PairRelation,
};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateDocument {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub mode: CheckMode,
    pub complex: ComplexSummary,
    pub strata: Vec<StratumRecord>,
    pub pairs: Vec<PairEvidence>,
    pub defects: Vec<String>,
    pub notes: Vec<String>,
    pub overall: Overall,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub ell: usize,
    pub d: usize,
    pub mode: ComplexMode,
    pub strata: usize,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumRecord {
    pub id: usize,
    pub name: String,
    pub vertices: Vec<usize>,
    pub edge_matrix: Vec<Vec<String>>,
    pub elementary_divisors: Vec<String>,
    pub rank: usize,
    pub unimodular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairEvidence {
    pub s: String,
    pub t: String,
    pub relation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateRecord {
    Separation {
        separating: String,
        other: String,
        vertex: usize,
        slot: usize,
        vertex_values: Vec<String>,
        relint_range: [String; 2],
        other_lower_bound: String,
    },
    AmbientInjective {
        ambient: String,
    },
    Missing {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExactRecord {
    Disjoint {
        #[serde(skip_serializing_if = "Option::is_none")]
        ambient_injective: Option<String>,
    },
    Collision {
        witness: Vec<String>,
    },
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn ints(v: &[Int]) -> Vec<String> {
    v.iter().map(Int::to_string).collect()
}

/// SHA-256 of the canonical serialization of `doc`, hex encoded.
pub fn input_digest(doc: &InputDocument) -> String {
    hex::encode(Sha256::digest(doc.to_canonical_json().as_bytes()))
}

pub fn certificate_document(
    doc: &InputDocument,
    c: &DualComplex,
    report: &FaithfulnessReport,
) -> CertificateDocument {
    let name = |id: StratumId| c.stratum(id).name.clone();
    let strata = report
        .strata
        .iter()
        .map(|u| {
            let s = c.stratum(u.stratum);
            StratumRecord {
                id: s.id.0,
                name: s.name.clone(),
                vertices: s.vertices.clone(),
                edge_matrix: u.edge_matrix.iter().map(|r| ints(r)).collect(),
                elementary_divisors: ints(&u.elementary_divisors),
                rank: u.rank,
                unimodular: u.verdict,
            }
        })
        .collect();
    let pairs = report
        .pairs
        .iter()
        .map(|p| {
            let (relation, ambient) = match p.relation {
                PairRelation::Face { ambient } => ("face", Some(name(ambient))),
                PairRelation::Independent => ("independent", None),
            };
            let certificate = p.certificate.as_ref().map(|e| match e {
                CertificateEvidence::Separation(cert) => CertificateRecord::Separation {
                    separating: name(cert.separating),
                    other: name(cert.other),
                    vertex: cert.vertex,
                    slot: cert.slot,
                    vertex_values: rats(&cert.vertex_values),
                    relint_range: [
                        format_rational(&cert.relint_range.0),
                        format_rational(&cert.relint_range.1),
                    ],
                    other_lower_bound: format_rational(&cert.other_lower_bound),
                },
                CertificateEvidence::AmbientInjective { ambient } => {
                    CertificateRecord::AmbientInjective {
                        ambient: name(*ambient),
                    }
                }
                CertificateEvidence::Missing { reason } => CertificateRecord::Missing {
                    reason: reason.clone(),
                },
            });
            let exact = p.exact.as_ref().map(|v| match v {
                ExactVerdict::Disjoint { ambient_injective } => ExactRecord::Disjoint {
                    ambient_injective: ambient_injective.map(name),
                },
                ExactVerdict::Collision { witness } => ExactRecord::Collision {
                    witness: rats(witness),
                },
            });
            PairEvidence {
                s: name(p.s),
                t: name(p.t),
                relation,
                ambient,
                certificate,
                exact,
            }
        })
        .collect();
    CertificateDocument {
        tool: TOOL.to_string(),
        version: VERSION.to_string(),
        input_sha256: input_digest(doc),
        mode: report.mode,
        complex: ComplexSummary {
            ell: c.ell(),
            d: c.dim_bound(),
            mode: c.mode(),
            strata: c.strata().len(),
            components: c.connected_components().len(),
        },
        strata,
        pairs,
        defects: report.defects.clone(),
        notes: report.notes.clone(),
        overall: report.overall,
    }
}

/// Pretty-printed certificate with a trailing newline. Byte-stable for a
/// given input and report.
pub fn emit_certificate(
    doc: &InputDocument,
    c: &DualComplex,
    report: &FaithfulnessReport,
) -> String {
    let mut out = serde_json::to_string_pretty(&certificate_document(doc, c, report))
        .expect("certificate serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{generate_fixture, FixtureKind};
    use crate::tropicalizer::check_faithful;

    fn run(kind: FixtureKind, jobs: usize) -> (String, FaithfulnessReport) {
        let doc = generate_fixture(kind).unwrap();
        let p = doc.resolve().unwrap();
        let report = check_faithful(&p.complex, &p.orders, &p.options(None, jobs)).unwrap();
        (emit_certificate(&doc, &p.complex, &report), report)
    }

    #[test]
    fn triangle_certificate() {
        let (text, report) = run(FixtureKind::Cycle(3), 1);
        assert_eq!(report.overall, Overall::Faithful);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["overall"], "faithful");
        assert_eq!(v["strata"].as_array().unwrap().len(), 6);
        assert_eq!(v["pairs"].as_array().unwrap().len(), 15);
        assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
        let sep = v["pairs"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["certificate"]["kind"] == "separation")
            .unwrap();
        assert_eq!(sep["certificate"]["other_lower_bound"], "1");
    }

    #[test]
    fn two_cycle_records_the_collision() {
        let (text, report) = run(FixtureKind::Cycle(2), 1);
        assert_eq!(report.overall, Overall::NotFaithful);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["overall"], "not_faithful");
        let bad = v["pairs"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["exact"]["kind"] == "collision")
            .unwrap();
        assert_eq!(bad["certificate"]["kind"], "missing");
        let w: Vec<&str> = bad["exact"]["witness"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_str().unwrap())
            .collect();
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn stable_across_jobs() {
        for kind in [FixtureKind::SimplexBoundary(3), FixtureKind::Cycle(5)] {
            assert_eq!(run(kind, 1).0, run(kind, 8).0);
        }
    }
}
