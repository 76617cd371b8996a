//! JSON report schema.

use pisgraph_core::classifier::{Prediction, Timings};
use pisgraph_core::profile::LocalInvariants;
use pisgraph_core::recognition::{forbidden_library, LineVerdict, Witness};
use pisgraph_core::{FiniteRing, Graph, IdealLattice};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CliReport {
    pub schema_version: u32,
    pub ring: RingSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<IdealSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pis: Option<PisSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<VerdictSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coline: Option<VerdictSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<Prediction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RingSection {
    pub spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub factor_orders: Vec<usize>,
}

impl RingSection {
    pub fn new(spec: &str, ring: &FiniteRing, factor_orders: Vec<usize>) -> Self {
        RingSection {
            spec: spec.to_string(),
            order: Some(ring.order()),
            factor_orders,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealSection {
    pub total: usize,
    pub nontrivial_proper: usize,
    pub prime_count: usize,
    pub maximal: Vec<String>,
}

impl IdealSection {
    pub fn new(ring: &FiniteRing, lattice: &IdealLattice) -> Self {
        IdealSection {
            total: lattice.len(),
            nontrivial_proper: lattice.nontrivial_proper().len(),
            prime_count: lattice.prime_flags().iter().filter(|&&p| p).count(),
            maximal: lattice.maximal_indices().into_iter().map(|i| lattice.label(ring, i)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FactorProfile {
    pub order: usize,
    #[serde(flatten)]
    pub invariants: LocalInvariants,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProfileSection {
    pub is_local: bool,
    pub factors: Vec<FactorProfile>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PisSection {
    pub vertices: usize,
    pub edges: usize,
    pub labels: Vec<String>,
}

impl PisSection {
    pub fn new(g: &Graph) -> Self {
        PisSection {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            labels: g.labels().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictSection {
    pub verdict: bool,
    pub witness_kind: &'static str,
    pub witness_detail: Value,
}

impl VerdictSection {
    /// `complement` is set for co-line verdicts, whose witnesses refer to
    /// the complement of the PIS graph.
    pub fn new(pis: &Graph, verdict: &LineVerdict, complement: bool) -> Self {
        match &verdict.witness {
            Witness::Forbidden(m) => {
                let lib = forbidden_library();
                let induced = pis.induced(&m.vertices);
                VerdictSection {
                    verdict: verdict.is_line,
                    witness_kind: "forbidden",
                    witness_detail: json!({
                        "vertices": m.vertices,
                        "labels": induced.labels(),
                        "libraryIndex": m.library_index,
                        "libraryGraph": lib.name(m.library_index),
                        "inducesComplement": complement,
                        "degreeSequence": induced.degree_sequence(),
                        "canonicalAdjacency": induced.canonical_code().ok(),
                    }),
                }
            }
            Witness::Root { root, cliques } => {
                let clique_labels: Vec<Vec<&str>> = cliques
                    .iter()
                    .map(|c| c.iter().map(|&v| pis.label(v)).collect())
                    .collect();
                VerdictSection {
                    verdict: verdict.is_line,
                    witness_kind: "root",
                    witness_detail: json!({
                        "rootOf": if complement { "complement" } else { "graph" },
                        "rootVertices": root.graph.vertex_count(),
                        "rootEdges": root.graph.edges().collect::<Vec<_>>(),
                        "cliques": clique_labels,
                    }),
                }
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Agreement {
    pub line: bool,
    pub coline: bool,
}
