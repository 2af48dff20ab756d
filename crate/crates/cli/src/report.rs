//! Machine-readable run reports. Verification verdicts are recomputed from
//! the emitted coloring by the caller, never copied from the algorithm.

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use earcolor::bounds::TheoremTag;
use earcolor::coloring::Coloring;
use earcolor::digraph::VertexCycle;
use earcolor::oracle::{CycleStats, ResidueCensus};

use crate::input::GraphInput;

#[derive(Serialize)]
pub struct InputMeta {
    pub digest: String,
    pub mode: &'static str,
    pub vertices: usize,
    pub pairs: usize,
}

impl InputMeta {
    pub fn of(input: &GraphInput) -> Self {
        let canonical = input.serialize();
        let digest = format!("{:x}", Sha256::digest(canonical.as_bytes()));
        Self {
            digest,
            mode: input.mode(),
            vertices: input.n(),
            pairs: input.pair_count(),
        }
    }
}

#[derive(Serialize)]
pub struct HypothesisReport {
    pub modulus: usize,
    pub residue: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct CensusReport {
    pub modulus: usize,
    pub realized: Vec<usize>,
    pub witnesses: Vec<Option<VertexCycle>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<u64>>,
    pub complete: bool,
}

impl CensusReport {
    pub fn of(census: ResidueCensus) -> Self {
        Self {
            modulus: census.modulus,
            realized: census.realized_residues(),
            witnesses: census.witnesses,
            counts: census.counts,
            complete: census.complete,
        }
    }
}

#[derive(Serialize)]
pub struct DecompositionSummary {
    pub components: usize,
    pub steps: usize,
    pub seed_residues: Vec<usize>,
}

#[derive(Serialize)]
pub struct BoundSection {
    pub theorem: TheoremTag,
    pub parameter_name: String,
    pub parameter: usize,
    pub bound: usize,
    pub method: String,
}

#[derive(Serialize)]
pub struct CertificateSection {
    pub cycle: Vec<usize>,
    pub covered: Vec<usize>,
    pub detours: Vec<earcolor::clique_cycle::Detour>,
    pub hamiltonian_core: Vec<usize>,
}

/// The one report shape every subcommand emits; absent sections are
/// omitted from the JSON.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputMeta,
    pub parameters: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<CycleStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSection>,
    /// Recomputed by an independent checker inside this invocation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification_detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSummary>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, input: &GraphInput) -> Self {
        Self {
            command: command.to_string(),
            input: InputMeta::of(input),
            parameters: BTreeMap::new(),
            hypothesis: None,
            census: None,
            stats: None,
            coloring: None,
            color_count: None,
            bound: None,
            certificate: None,
            verified: None,
            verification_detail: None,
            decomposition: None,
            timing_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(
            key.to_string(),
            serde_json::to_value(value).expect("parameters serialize"),
        );
    }

    pub fn set_coloring(&mut self, coloring: &Coloring) {
        self.coloring = Some(coloring.colors.clone());
        self.color_count = Some(coloring.color_count());
    }

    /// JSON by default, `key: value` lines in plain mode.
    pub fn render(&self, plain: bool) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        if !plain {
            return serde_json::to_string_pretty(&value).expect("report serializes");
        }
        let mut out = String::new();
        if let serde_json::Value::Object(map) = value {
            for (key, val) in map {
                let rendered = match &val {
                    serde_json::Value::String(s) => s.clone(),
                    other => serde_json::to_string(other).expect("value serializes"),
                };
                out.push_str(&format!("{key}: {rendered}\n"));
            }
        }
        out
    }
}
