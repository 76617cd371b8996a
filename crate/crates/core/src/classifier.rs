//! Structural predictions of line / co-line membership and their
//! comparison against recognition.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::graph::Graph;
use crate::ideal::IdealLattice;
use crate::pis::pis_graph;
use crate::profile::{decompose_local, local_profile, LocalInvariants, LocalProfile};
use crate::recognition::{is_complement_line_graph_with, is_line_graph_with, LineVerdict};
use crate::ring::{build_ring_with, parse_ring_spec, FiniteRing};
use crate::Limits;

/// Which case of the classification produced a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// Local PIR with `η(M) ≤ 4`.
    T2_1I,
    /// Local, `M = <x, y>` with `x² = y² = 0`.
    T2_1II,
    /// `F1 × F2 × F3`.
    T2_3I,
    /// `F1 × F2`.
    T2_3II,
    /// `R1 × F2`, `R1` a PIR with `η(M1) = 2`.
    T2_3III,
    /// Local PIR.
    T3_1I,
    /// Local, `M = <x, y>` with `x² = y² = xy = 0`.
    T3_1II,
    T3_2I,
    T3_2II,
    T3_2III,
    /// No positive case of rule family `family` applies; `reason` names
    /// the failed condition.
    Negative { family: &'static str, reason: String },
}

impl Rule {
    fn negative(family: &'static str, reason: &str) -> Rule {
        Rule::Negative {
            family,
            reason: reason.to_string(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Rule::Negative { .. })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Rule::T2_1I => "T2.1-i",
            Rule::T2_1II => "T2.1-ii",
            Rule::T2_3I => "T2.3-i",
            Rule::T2_3II => "T2.3-ii",
            Rule::T2_3III => "T2.3-iii",
            Rule::T3_1I => "T3.1-i",
            Rule::T3_1II => "T3.1-ii",
            Rule::T3_2I => "T3.2-i",
            Rule::T3_2II => "T3.2-ii",
            Rule::T3_2III => "T3.2-iii",
            Rule::Negative { reason, .. } => return write!(f, "NEGATIVE({reason})"),
        };
        f.write_str(tag)
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A predicted verdict for one side (line or co-line).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SidePrediction {
    pub holds: bool,
    pub rule: Rule,
}

impl SidePrediction {
    fn yes(rule: Rule) -> Self {
        SidePrediction { holds: true, rule }
    }

    fn no(family: &'static str, reason: &str) -> Self {
        SidePrediction {
            holds: false,
            rule: Rule::negative(family, reason),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub line: SidePrediction,
    pub coline: SidePrediction,
}

/// Splits a ring into local factors and profiles each one.
pub fn local_factors(r: &FiniteRing, limits: &Limits) -> Result<Vec<(FiniteRing, LocalInvariants)>, Error> {
    decompose_local(r)
        .into_iter()
        .map(|f| {
            let lattice = IdealLattice::enumerate_with(&f, limits)?;
            let profile = local_profile(&f, &lattice)
                .local
                .expect("decomposition factors are local");
            Ok((f, profile))
        })
        .collect()
}

fn field(f: &LocalInvariants) -> bool {
    f.eta == 1
}

/// Shared non-local cases: the line and co-line classifications list the
/// same three product classes.
fn classify_product(
    factors: &[LocalInvariants],
    family: &'static str,
    rules: [Rule; 3],
) -> SidePrediction {
    let [three_fields, two_fields, pir_times_field] = rules;
    match factors.len() {
        3 if factors.iter().all(field) => SidePrediction::yes(three_fields),
        3 => SidePrediction::no(family, "n = 3 with a non-field factor"),
        2 => {
            let (a, b) = (&factors[0], &factors[1]);
            match (field(a), field(b)) {
                (true, true) => SidePrediction::yes(two_fields),
                (false, false) => SidePrediction::no(family, "n = 2 with no field factor"),
                _ => {
                    let other = if field(a) { b } else { a };
                    if !other.is_pir {
                        SidePrediction::no(family, "minGen(M₁) ≥ 2")
                    } else if other.eta == 2 {
                        SidePrediction::yes(pir_times_field)
                    } else {
                        SidePrediction::no(family, "η(M₁) ≥ 3")
                    }
                }
            }
        }
        _ => unreachable!("called with 2 or 3 factors"),
    }
}

/// Line-graph side, from the invariants of the local factors.
pub fn classify_line_factors(factors: &[LocalInvariants]) -> SidePrediction {
    match factors {
        [] => unreachable!("a ring has at least one local factor"),
        [f] => {
            if f.is_pir {
                if f.eta <= 4 {
                    SidePrediction::yes(Rule::T2_1I)
                } else {
                    SidePrediction::no("T2.1", "PIR with η(M) ≥ 5")
                }
            } else if f.min_gen == 2 {
                if f.has_nil_pair {
                    SidePrediction::yes(Rule::T2_1II)
                } else {
                    SidePrediction::no("T2.1", "minGen = 2 and no generators with x² = y² = 0")
                }
            } else {
                SidePrediction::no("T2.1", "minGen ≥ 3")
            }
        }
        fs if fs.len() >= 4 => SidePrediction::no("L2.2", "n ≥ 4"),
        fs => classify_product(fs, "T2.3", [Rule::T2_3I, Rule::T2_3II, Rule::T2_3III]),
    }
}

/// Co-line side, from the invariants of the local factors.
pub fn classify_coline_factors(factors: &[LocalInvariants]) -> SidePrediction {
    match factors {
        [] => unreachable!("a ring has at least one local factor"),
        [f] => {
            if f.is_pir {
                SidePrediction::yes(Rule::T3_1I)
            } else if f.min_gen == 2 {
                if f.has_nil_pair_xy_zero {
                    SidePrediction::yes(Rule::T3_1II)
                } else if f.has_nil_pair {
                    SidePrediction::no("T3.1", "xy ≠ 0 and not PIR")
                } else {
                    SidePrediction::no("T3.1", "x² ≠ 0 and not PIR")
                }
            } else {
                SidePrediction::no("T3.1", "minGen ≥ 3")
            }
        }
        fs if fs.len() >= 4 => SidePrediction::no("T3.2", "n ≥ 4"),
        fs => classify_product(fs, "T3.2", [Rule::T3_2I, Rule::T3_2II, Rule::T3_2III]),
    }
}

pub fn classify_line(r: &FiniteRing) -> Result<SidePrediction, Error> {
    let fs: Vec<LocalInvariants> = local_factors(r, &Limits::default())?.into_iter().map(|(_, p)| p).collect();
    Ok(classify_line_factors(&fs))
}

pub fn classify_coline(r: &FiniteRing) -> Result<SidePrediction, Error> {
    let fs: Vec<LocalInvariants> = local_factors(r, &Limits::default())?.into_iter().map(|(_, p)| p).collect();
    Ok(classify_coline_factors(&fs))
}

/// Wall-clock time per stage, in milliseconds.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timings {
    pub build_ms: f64,
    pub ideals_ms: f64,
    pub pis_ms: f64,
    pub recognize_ms: f64,
    pub classify_ms: f64,
}

/// Everything computed for one ring.
#[derive(Debug, Clone)]
pub struct Report {
    pub ring: FiniteRing,
    pub lattice: IdealLattice,
    pub profile: LocalProfile,
    pub factors: Vec<(FiniteRing, LocalInvariants)>,
    pub pis: Graph,
    pub line: LineVerdict,
    pub coline: LineVerdict,
    pub prediction: Prediction,
    pub agreement_line: bool,
    pub agreement_coline: bool,
    pub timings: Timings,
}

impl Report {
    pub fn agrees(&self) -> bool {
        self.agreement_line && self.agreement_coline
    }

    pub fn prime_count(&self) -> usize {
        self.lattice.prime_flags().iter().filter(|&&p| p).count()
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Builds the lattice and PIS graph, runs both recognizers and both
/// classifier sides, and records whether prediction matches recognition.
pub fn verify(r: &FiniteRing) -> Result<Report, Error> {
    verify_with(r.clone(), &Limits::default(), 0.0)
}

pub fn verify_spec(text: &str, limits: &Limits) -> Result<Report, Error> {
    let t = Instant::now();
    let spec = parse_ring_spec(text)?;
    let r = build_ring_with(&spec, limits)?;
    verify_with(r, limits, ms(t))
}

fn verify_with(r: FiniteRing, limits: &Limits, build_ms: f64) -> Result<Report, Error> {
    let mut timings = Timings { build_ms, ..Timings::default() };

    let t = Instant::now();
    let lattice = IdealLattice::enumerate_with(&r, limits)?;
    let profile = local_profile(&r, &lattice);
    timings.ideals_ms = ms(t);

    let t = Instant::now();
    let pis = pis_graph(&r, &lattice);
    timings.pis_ms = ms(t);

    let t = Instant::now();
    let line = is_line_graph_with(&pis, limits)?;
    let coline = is_complement_line_graph_with(&pis, limits)?;
    timings.recognize_ms = ms(t);

    let t = Instant::now();
    let factors = match &profile.local {
        Some(inv) => vec![(r.clone(), inv.clone())],
        None => local_factors(&r, limits)?,
    };
    let invariants: Vec<LocalInvariants> = factors.iter().map(|(_, p)| p.clone()).collect();
    let prediction = Prediction {
        line: classify_line_factors(&invariants),
        coline: classify_coline_factors(&invariants),
    };
    timings.classify_ms = ms(t);

    Ok(Report {
        agreement_line: prediction.line.holds == line.is_line,
        agreement_coline: prediction.coline.holds == coline.is_line,
        ring: r,
        lattice,
        profile,
        factors,
        pis,
        line,
        coline,
        prediction,
        timings,
    })
}

/// One catalog entry's outcome. Errors are kept per entry.
#[derive(Debug)]
pub struct CensusEntry {
    pub spec: String,
    pub outcome: Result<Report, Error>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusSummary {
    pub total: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub errors: usize,
}

impl CensusSummary {
    pub fn from_entries(entries: &[CensusEntry]) -> Self {
        let mut s = CensusSummary { total: entries.len(), ..Default::default() };
        for e in entries {
            match &e.outcome {
                Ok(r) if r.agrees() => s.agreements += 1,
                Ok(_) => s.disagreements += 1,
                Err(_) => s.errors += 1,
            }
        }
        s
    }
}

/// Verifies every spec. Results are in catalog order regardless of
/// `threads`; `threads <= 1` runs sequentially.
pub fn census(catalog: &[String], threads: usize, limits: &Limits) -> Vec<CensusEntry> {
    let run = |spec: &String| CensusEntry {
        spec: spec.clone(),
        outcome: verify_spec(spec, limits),
    };
    if threads <= 1 {
        return catalog.iter().map(run).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| catalog.par_iter().map(run).collect()),
        Err(_) => catalog.iter().map(run).collect(),
    }
}
