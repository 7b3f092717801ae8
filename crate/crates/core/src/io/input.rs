use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::complex::{ComplexError, ComplexMode, DualComplex, StratumId};
use crate::rational::{parse_rational, ParseRationalError};
use crate::sections::{canonical_order_matrix, OrderMatrix, SectionError};
use crate::tropicalizer::{CheckMode, CheckOptions};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Schema { field: String, message: String },
    #[error("{field}: {source}")]
    Number {
        field: String,
        source: ParseRationalError,
    },
    #[error("complex: {0}")]
    Complex(#[from] ComplexError),
    #[error("order_matrix: {0}")]
    Section(#[from] SectionError),
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Schema {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    pub complex: ComplexSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_matrix: Option<OrderSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub ell: usize,
    pub d: usize,
    #[serde(default = "default_mode")]
    pub mode: ComplexMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<StratumSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_map: Option<Vec<FaceSpec>>,
}

fn default_mode() -> ComplexMode {
    ComplexMode::Simplicial
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumSpec {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// `face` is the face of `stratum` spanned by `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceSpec {
    pub stratum: String,
    pub vertices: Vec<usize>,
    pub face: String,
}

/// Order entries are JSON integers or `"p/q"` strings that reduce to a
/// nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderEntry {
    Int(u64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    /// Rows `0..=ell`, row 0 the base section; columns are components `1..=ell`.
    pub rows: Vec<Vec<OrderEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizontal_effective: Option<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<CheckMode>,
    /// Pairs of stratum names to restrict the pair checks to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<[String; 2]>>,
}

/// Everything an input document resolves to.
#[derive(Debug, Clone)]
pub struct Problem {
    pub complex: DualComplex,
    pub orders: OrderMatrix,
    pub mode: Option<CheckMode>,
    pub pairs: Option<Vec<(StratumId, StratumId)>>,
}

impl Problem {
    /// Check options from the document, with `mode` overriding the document's.
    pub fn options(&self, mode: Option<CheckMode>, jobs: usize) -> CheckOptions {
        CheckOptions {
            mode: mode.or(self.mode).unwrap_or_default(),
            jobs,
            pairs: self.pairs.clone(),
        }
    }
}

fn order_entry(e: &OrderEntry, field: &str) -> Result<u64, InputError> {
    match e {
        OrderEntry::Int(n) => Ok(*n),
        OrderEntry::Text(t) => {
            let q = parse_rational(t).map_err(|source| InputError::Number {
                field: field.to_string(),
                source,
            })?;
            if !q.is_integer() || q.is_negative() {
                return Err(schema(
                    field,
                    format!("order {t:?} is not a nonnegative integer"),
                ));
            }
            u64::try_from(q.to_integer())
                .map_err(|_| schema(field, format!("order {t:?} too large")))
        }
    }
}

fn check_vertices(vertices: &[usize], ell: usize, field: &str) -> Result<(), InputError> {
    match vertices.iter().find(|&&v| v == 0 || v > ell) {
        Some(v) => Err(schema(field, format!("vertex {v} out of range 1..={ell}"))),
        None => Ok(()),
    }
}

impl InputDocument {
    pub fn from_complex(spec: ComplexSpec) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            complex: spec,
            order_matrix: None,
            check: None,
        }
    }

    pub fn build_complex(&self) -> Result<DualComplex, InputError> {
        let c = &self.complex;
        match (&c.facets, &c.strata) {
            (Some(facets), None) => {
                if c.face_map.is_some() {
                    return Err(schema(
                        "complex.face_map",
                        "only allowed together with strata",
                    ));
                }
                if c.mode == ComplexMode::Delta {
                    return Err(schema(
                        "complex.mode",
                        "delta mode needs strata and face_map",
                    ));
                }
                for (k, f) in facets.iter().enumerate() {
                    check_vertices(f, c.ell, &format!("complex.facets[{k}]"))?;
                }
                Ok(DualComplex::build_from_facets(c.ell, c.d, facets)?)
            }
            (None, Some(strata)) => {
                let named: Vec<(String, Vec<usize>)> = strata
                    .iter()
                    .enumerate()
                    .map(|(k, s)| {
                        check_vertices(&s.vertices, c.ell, &format!("complex.strata[{k}]"))?;
                        Ok((s.name.clone(), s.vertices.clone()))
                    })
                    .collect::<Result<_, InputError>>()?;
                let faces: Vec<(String, Vec<usize>, String)> = c
                    .face_map
                    .iter()
                    .flatten()
                    .map(|f| (f.stratum.clone(), f.vertices.clone(), f.face.clone()))
                    .collect();
                Ok(DualComplex::from_parts(c.ell, c.d, c.mode, &named, &faces)?)
            }
            (Some(_), Some(_)) => Err(schema("complex", "give either facets or strata, not both")),
            (None, None) => Err(schema("complex", "missing facets or strata")),
        }
    }

    /// The document's order matrix, or the canonical one when absent.
    pub fn build_orders(&self, c: &DualComplex) -> Result<OrderMatrix, InputError> {
        let Some(spec) = &self.order_matrix else {
            return Ok(canonical_order_matrix(c));
        };
        let rows = spec
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| order_entry(e, &format!("order_matrix.rows[{i}][{j}]")))
                    .collect::<Result<Vec<u64>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ell = self.complex.ell;
        let flags = spec
            .horizontal_effective
            .clone()
            .unwrap_or_else(|| vec![true; ell + 1]);
        Ok(OrderMatrix::new(ell, rows, flags)?)
    }

    pub fn resolve(&self) -> Result<Problem, InputError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(schema(
                "schema_version",
                format!(
                    "unsupported version {}, expected {SCHEMA_VERSION}",
                    self.schema_version
                ),
            ));
        }
        if self.complex.ell == 0 {
            return Err(schema("complex.ell", "must be at least 1"));
        }
        let complex = self.build_complex()?;
        let orders = self.build_orders(&complex)?;
        let check = self.check.clone().unwrap_or_default();
        let pairs = match &check.pairs {
            None => None,
            Some(list) => Some(
                list.iter()
                    .enumerate()
                    .map(|(k, [a, b])| {
                        let find = |n: &String| {
                            complex.by_name(n).map(|s| s.id).ok_or_else(|| {
                                schema(
                                    format!("check.pairs[{k}]"),
                                    format!("unknown stratum {n:?}"),
                                )
                            })
                        };
                        Ok((find(a)?, find(b)?))
                    })
                    .collect::<Result<Vec<_>, InputError>>()?,
            ),
        };
        Ok(Problem {
            complex,
            orders,
            mode: check.mode,
            pairs,
        })
    }

    /// Canonical compact serialization, used for digests.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn to_pretty_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parses and fully resolves a JSON input document.
pub fn parse_input(text: &str) -> Result<InputDocument, InputError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.resolve()?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EDGE: &str =
        r#"{"schema_version": 1, "complex": {"ell": 2, "d": 1, "facets": [[1, 2]]}}"#;

    #[test]
    fn minimal_edge() {
        let doc = parse_input(EDGE).unwrap();
        assert_eq!(doc.complex.ell, 2);
        assert_eq!(doc.complex.facets, Some(vec![vec![1, 2]]));
        let p = doc.resolve().unwrap();
        assert_eq!(p.complex.strata().len(), 3);
        assert_eq!(p.orders, canonical_order_matrix(&p.complex));
    }

    #[test]
    fn oversized_facet() {
        let text = r#"{"schema_version": 1, "complex": {"ell": 3, "d": 1, "facets": [[1, 2, 3]]}}"#;
        let err = parse_input(text).unwrap_err();
        assert!(matches!(
            err,
            InputError::Complex(ComplexError::FacetTooLarge { .. })
        ));
        assert!(err.to_string().contains("exceeding d+1"));
    }

    #[test]
    fn delta_document_matches_builder() {
        let text = r#"{
          "schema_version": 1,
          "complex": {
            "ell": 2, "d": 1, "mode": "delta",
            "strata": [
              {"name": "e", "vertices": [1, 2]}, {"name": "e'", "vertices": [1, 2]},
              {"name": "1", "vertices": [1]}, {"name": "2", "vertices": [2]}
            ],
            "face_map": [
              {"stratum": "e", "vertices": [1], "face": "1"},
              {"stratum": "e", "vertices": [2], "face": "2"},
              {"stratum": "e'", "vertices": [1], "face": "1"},
              {"stratum": "e'", "vertices": [2], "face": "2"}
            ]
          }
        }"#;
        let c = parse_input(text).unwrap().build_complex().unwrap();
        let strata: Vec<(String, Vec<usize>)> = [
            ("1", vec![1]),
            ("2", vec![2]),
            ("e", vec![1, 2]),
            ("e'", vec![1, 2]),
        ]
        .into_iter()
        .map(|(n, v)| (n.to_string(), v))
        .collect();
        let faces: Vec<(String, Vec<usize>, String)> = ["e", "e'"]
            .into_iter()
            .flat_map(|e| {
                [
                    (e.to_string(), vec![1], "1".to_string()),
                    (e.to_string(), vec![2], "2".to_string()),
                ]
            })
            .collect();
        assert_eq!(
            c,
            DualComplex::from_parts(2, 1, ComplexMode::Delta, &strata, &faces).unwrap()
        );
        assert!(c.validate().is_empty());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_input("{\n  \"schema_version\": 1,\n  \"complex\": [}").unwrap_err();
        match err {
            InputError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let err = parse_input(r#"{"schema_version": 1, "complex": {"ell": 2, "d": 1, "facets": [[1,2]], "extra": 0}}"#)
            .unwrap_err();
        assert!(err.to_string().contains("extra"));
    }

    #[test]
    fn order_entries() {
        let text = r#"{"schema_version": 1, "complex": {"ell": 2, "d": 1, "facets": [[1, 2]]},
            "order_matrix": {"rows": [[0, 0], ["0", "2/2"], [1, "0/5"]]}}"#;
        let p = parse_input(text).unwrap().resolve().unwrap();
        assert_eq!(p.orders.rows(), &[vec![0, 0], vec![0, 1], vec![1, 0]]);

        let bad = text.replace("\"2/2\"", "\"1/2\"");
        assert!(matches!(parse_input(&bad), Err(InputError::Schema { .. })));
        let bad = text.replace("\"2/2\"", "\"1/0\"");
        let err = parse_input(&bad).unwrap_err();
        assert!(matches!(err, InputError::Number { .. }));
        assert!(err.to_string().contains("order_matrix.rows[1][1]"));
        let bad = text.replace("[1, \"0/5\"]", "[1]");
        assert!(matches!(parse_input(&bad), Err(InputError::Section(_))));
    }

    #[test]
    fn schema_checks() {
        let v2 = EDGE.replace("\"schema_version\": 1", "\"schema_version\": 2");
        assert!(parse_input(&v2)
            .unwrap_err()
            .to_string()
            .contains("schema_version"));
        let range = EDGE.replace("[[1, 2]]", "[[1, 3]]");
        assert!(parse_input(&range)
            .unwrap_err()
            .to_string()
            .contains("complex.facets[0]"));
        let none = r#"{"schema_version": 1, "complex": {"ell": 2, "d": 1}}"#;
        assert!(parse_input(none).is_err());
        let pairs = EDGE.replace("}}", r#"}, "check": {"pairs": [["1", "9"]]}}"#);
        assert!(parse_input(&pairs)
            .unwrap_err()
            .to_string()
            .contains("unknown stratum"));
    }

    #[test]
    fn check_options_resolve() {
        let text = EDGE.replace(
            "}}",
            r#"}, "check": {"mode": "exact", "pairs": [["1", "2"]]}}"#,
        );
        let p = parse_input(&text).unwrap().resolve().unwrap();
        let o = p.options(None, 3);
        assert_eq!(o.mode, CheckMode::Exact);
        assert_eq!(o.jobs, 3);
        assert_eq!(o.pairs, Some(vec![(StratumId(0), StratumId(1))]));
        assert_eq!(
            p.options(Some(CheckMode::Certificate), 1).mode,
            CheckMode::Certificate
        );
    }

    #[test]
    fn round_trip() {
        let text = EDGE.replace("}}", r#"}, "order_matrix": {"rows": [[0, 0], [0, "1"], [1, 0]], "horizontal_effective": [true, true, false]}}"#);
        let doc = parse_input(&text).unwrap();
        let again = parse_input(&doc.to_pretty_json()).unwrap();
        assert_eq!(doc, again);
        assert_eq!(doc.to_canonical_json(), again.to_canonical_json());
    }
}
