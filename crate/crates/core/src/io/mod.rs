//! JSON input documents, fixtures and certificate output.

mod certificate;
mod fixtures;
mod input;

pub use certificate::{
    certificate_document, emit_certificate, input_digest, CertificateDocument, CertificateRecord,
    ComplexSummary, ExactRecord, PairEvidence, StratumRecord, TOOL, VERSION,
};
pub use fixtures::{generate_fixture, FixtureError, FixtureKind};
pub use input::{
    parse_input, CheckSpec, ComplexSpec, FaceSpec, InputDocument, InputError, OrderEntry,
    OrderSpec, Problem, StratumSpec, SCHEMA_VERSION,
};
