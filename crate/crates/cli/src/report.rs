//! The JSON report and its fixed-width text rendering.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};
use threshold_dim::certificate::Certificate;
use threshold_dim::io::write_edge_list;
use threshold_dim::irreducible::{IrreducibilityVerdict, Status};
use threshold_dim::threshold::{TauBounds, UpperWitness};
use threshold_dim::{BetaResult, CertificateKind, Graph};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDescriptor {
    pub order: usize,
    pub edges: usize,
    /// SHA-256 of the canonical edge list.
    pub sha256: String,
}

impl GraphDescriptor {
    pub fn of(g: &Graph) -> Self {
        GraphDescriptor { order: g.order(), edges: g.edge_count(), sha256: content_hash(g) }
    }
}

pub fn content_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(write_edge_list(g).as_bytes()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictTag {
    Irreducible,
    Reducible,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub graph: GraphDescriptor,
    pub beta: Option<BetaResult>,
    pub tau_lower: Option<usize>,
    pub tau_lower_certificate: Option<Certificate>,
    pub tau_upper: Option<usize>,
    pub tau_upper_witness: Option<UpperWitness>,
    pub tau_exact: Option<usize>,
    pub verdict: Option<VerdictTag>,
    pub verdict_certificate: Option<Certificate>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(g: &Graph) -> Self {
        Report {
            schema: SCHEMA,
            graph: GraphDescriptor::of(g),
            beta: None,
            tau_lower: None,
            tau_lower_certificate: None,
            tau_upper: None,
            tau_upper_witness: None,
            tau_exact: None,
            verdict: None,
            verdict_certificate: None,
            wall_time_ms: 0,
        }
    }

    pub fn with_bounds(mut self, b: &TauBounds) -> Self {
        self.tau_lower = Some(b.lower);
        self.tau_lower_certificate = Some(b.certificate.clone());
        self.tau_upper = Some(b.upper);
        self.tau_upper_witness = Some(b.witness.clone());
        self.tau_exact = b.exact;
        self
    }

    pub fn with_verdict(mut self, v: &IrreducibilityVerdict) -> Self {
        self = self.with_bounds(&v.tau_bounds);
        self.beta = Some(v.beta.clone());
        let (tag, cert) = match &v.status {
            Status::Irreducible { certificate } => (VerdictTag::Irreducible, Some(certificate.clone())),
            Status::Reducible { .. } => (VerdictTag::Reducible, None),
            Status::Unknown => (VerdictTag::Unknown, None),
        };
        self.verdict = Some(tag);
        self.verdict_certificate = cert;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialise")
    }

    /// Fixed-width `key  value` lines; absent fields are omitted.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<12}{v}");
        };
        row("graph", format!("n={} m={} sha256={}", self.graph.order, self.graph.edges, self.graph.sha256));
        if let Some(b) = &self.beta {
            row("beta", format!("{}  basis {}", b.beta, set(&b.basis)));
        }
        if let (Some(l), Some(c)) = (self.tau_lower, &self.tau_lower_certificate) {
            row("tau lower", format!("{l}  ({})", kind_name(c.kind)));
        }
        if let (Some(u), Some(w)) = (self.tau_upper, &self.tau_upper_witness) {
            row("tau upper", format!("{u}  ({:?}, +{} edges, basis {})", w.source, w.edges.len(), set(&w.basis)));
        }
        if let Some(t) = self.tau_exact {
            row("tau exact", t.to_string());
        }
        if let Some(v) = self.verdict {
            let how =
                self.verdict_certificate.as_ref().map(|c| format!("  ({})", kind_name(c.kind))).unwrap_or_default();
            row("verdict", format!("{v:?}{how}").to_lowercase());
        }
        row("time", format!("{} ms", self.wall_time_ms));
        out
    }
}

pub fn kind_name(k: CertificateKind) -> String {
    format!("{k:?}")
}

pub fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}
