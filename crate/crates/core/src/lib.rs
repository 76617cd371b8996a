//! Prime ideal sum graphs of finite commutative rings.
//!
//! The pipeline is: build a [`FiniteRing`] from a [`RingSpec`], enumerate
//! its [`IdealLattice`], form the prime ideal sum graph (vertices are the
//! nonzero proper ideals, `I ~ J` when `I + J` is prime), then decide
//! whether that graph is a line graph or the complement of one. Two
//! independent deciders are run and must agree: a scan for the nine
//! forbidden induced subgraphs, and a search for a Krausz clique partition.
//! The [`classifier`] module predicts the same verdicts from ring structure
//! alone and [`classifier::verify`] compares the two.

pub mod bitset;
pub mod catalog;
pub mod classifier;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod pis;
pub mod profile;
pub mod recognition;
pub mod ring;

pub use bitset::ElementSet;
pub use classifier::{census, classify_coline, classify_line, verify, Prediction, Report, Rule};
pub use error::{BuildError, Error, GraphError, IdealError, RecognitionError, SpecError};
pub use graph::Graph;
pub use ideal::{Ideal, IdealLattice};
pub use pis::pis_graph;
pub use profile::{decompose_local, local_profile, LocalProfile};
pub use recognition::{is_complement_line_graph, is_line_graph, LineVerdict, Witness};
pub use ring::{build_ring, parse_ring_spec, Elem, FiniteRing, RingSpec};

/// Resource caps shared by the pipeline stages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order that will be tabulated.
    pub order_cap: usize,
    /// Largest number of ideals the lattice closure may produce.
    pub ideal_cap: usize,
    /// Largest graph the forbidden-subgraph scan accepts.
    pub scan_cap: usize,
    /// Rings up to this order get an exhaustive axiom check at build time.
    pub axiom_check_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 4096,
            ideal_cap: 100_000,
            scan_cap: 64,
            axiom_check_order: 256,
        }
    }
}
