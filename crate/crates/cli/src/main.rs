//! `pisgraph`: prime ideal sum graphs from the command line.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pisgraph_core::catalog::{default_catalog, parse_catalog};
use pisgraph_core::classifier::{census, local_factors, verify_spec, CensusSummary, Report, Timings};
use pisgraph_core::recognition::{is_complement_line_graph_with, is_line_graph_with, Witness};
use pisgraph_core::ring::build_ring_with;
use pisgraph_core::{
    local_profile, parse_ring_spec, pis_graph, Error, FiniteRing, Graph, IdealLattice, Limits,
};
use serde::Serialize;

use report::{
    Agreement, CliReport, FactorProfile, IdealSection, PisSection, ProfileSection, RingSection,
    VerdictSection, SCHEMA_VERSION,
};

const EXIT_DISAGREE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUILD: u8 = 3;
const EXIT_IO: u8 = 4;
const EXIT_PRECONDITION: u8 = 5;

#[derive(Parser)]
#[command(name = "pisgraph", version, about = "Prime ideal sum graphs of finite commutative rings")]
struct Cli {
    /// Omit stage timings so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring order, ideal counts and local invariants.
    RingInfo { spec: String },
    /// Size of the prime ideal sum graph; optionally write it as DOT.
    Pis {
        spec: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also write the adjacency-list dump.
        #[arg(long)]
        adjacency: Option<PathBuf>,
    },
    /// Line / co-line verdicts with witnesses.
    Recognize {
        spec: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Full report; exit 1 if prediction and recognition disagree.
    Verify { spec: String },
    /// Verify every ring in a catalog (newline-delimited JSON).
    Census {
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Write a root graph H with L(H) isomorphic to the PIS graph.
    RootGraph {
        spec: String,
        #[arg(long)]
        dot: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Line,
    Coline,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Spec(_) => EXIT_PARSE,
            Error::Build(pisgraph_core::BuildError::Spec(_)) => EXIT_PARSE,
            Error::Build(pisgraph_core::BuildError::Io { .. }) => EXIT_IO,
            Error::Recognition(pisgraph_core::RecognitionError::Disagreement { .. }) => EXIT_DISAGREE,
            _ => EXIT_BUILD,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// The stages every subcommand shares.
struct Pipeline {
    spec: String,
    ring: FiniteRing,
    lattice: IdealLattice,
    pis: Graph,
    timings: Timings,
}

impl Pipeline {
    fn run(spec: &str, limits: &Limits) -> Result<Pipeline, Failure> {
        let mut timings = Timings::default();
        let t = Instant::now();
        let parsed = parse_ring_spec(spec).map_err(Error::from)?;
        let ring = build_ring_with(&parsed, limits).map_err(Error::from)?;
        timings.build_ms = ms(t);
        let t = Instant::now();
        let lattice = IdealLattice::enumerate_with(&ring, limits).map_err(Error::from)?;
        timings.ideals_ms = ms(t);
        let t = Instant::now();
        let pis = pis_graph(&ring, &lattice);
        timings.pis_ms = ms(t);
        Ok(Pipeline {
            spec: spec.to_string(),
            ring,
            lattice,
            pis,
            timings,
        })
    }

    fn report(&self, factor_orders: Vec<usize>) -> CliReport {
        CliReport {
            schema_version: SCHEMA_VERSION,
            ring: RingSection::new(&self.spec, &self.ring, factor_orders),
            ideals: Some(IdealSection::new(&self.ring, &self.lattice)),
            ..CliReport::default()
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}

fn strip_timings(mut r: CliReport, no_timings: bool) -> CliReport {
    if no_timings {
        r.timings = None;
    }
    r
}

fn ring_info(spec: &str, limits: &Limits) -> Result<CliReport, Failure> {
    let p = Pipeline::run(spec, limits)?;
    let t = Instant::now();
    let factors = match local_profile(&p.ring, &p.lattice).local {
        Some(inv) => vec![(p.ring.clone(), inv)],
        None => local_factors(&p.ring, limits)?,
    };
    let mut timings = p.timings.clone();
    timings.classify_ms = ms(t);
    let mut report = p.report(factors.iter().map(|(f, _)| f.order()).collect());
    report.profile = Some(ProfileSection {
        is_local: factors.len() == 1,
        factors: factors
            .into_iter()
            .map(|(f, invariants)| FactorProfile { order: f.order(), invariants })
            .collect(),
    });
    report.timings = Some(timings);
    Ok(report)
}

fn pis(spec: &str, dot: Option<&Path>, adjacency: Option<&Path>, limits: &Limits) -> Result<CliReport, Failure> {
    let p = Pipeline::run(spec, limits)?;
    if let Some(path) = dot {
        p.pis.export_dot(&format!("PIS({spec})"), path).map_err(|e| io_failure(path, e))?;
    }
    if let Some(path) = adjacency {
        std::fs::write(path, p.pis.to_adjacency_text()).map_err(|e| io_failure(path, e))?;
    }
    let mut report = p.report(Vec::new());
    report.pis = Some(PisSection::new(&p.pis));
    report.timings = Some(p.timings.clone());
    Ok(report)
}

fn recognize(spec: &str, mode: Mode, limits: &Limits) -> Result<CliReport, Failure> {
    let p = Pipeline::run(spec, limits)?;
    let mut timings = p.timings.clone();
    let t = Instant::now();
    let mut report = p.report(Vec::new());
    report.pis = Some(PisSection::new(&p.pis));
    if mode != Mode::Coline {
        let v = is_line_graph_with(&p.pis, limits).map_err(Error::from)?;
        report.line = Some(VerdictSection::new(&p.pis, &v, false));
    }
    if mode != Mode::Line {
        let v = is_complement_line_graph_with(&p.pis, limits).map_err(Error::from)?;
        report.coline = Some(VerdictSection::new(&p.pis, &v, true));
    }
    timings.recognize_ms = ms(t);
    report.timings = Some(timings);
    Ok(report)
}

fn full_report(spec: &str, r: &Report) -> CliReport {
    CliReport {
        schema_version: SCHEMA_VERSION,
        ring: RingSection::new(spec, &r.ring, r.factors.iter().map(|(f, _)| f.order()).collect()),
        error: None,
        ideals: Some(IdealSection::new(&r.ring, &r.lattice)),
        profile: Some(ProfileSection {
            is_local: r.profile.is_local,
            factors: r
                .factors
                .iter()
                .map(|(f, inv)| FactorProfile { order: f.order(), invariants: inv.clone() })
                .collect(),
        }),
        pis: Some(PisSection::new(&r.pis)),
        line: Some(VerdictSection::new(&r.pis, &r.line, false)),
        coline: Some(VerdictSection::new(&r.pis, &r.coline, true)),
        prediction: Some(r.prediction.clone()),
        agreement: Some(Agreement {
            line: r.agreement_line,
            coline: r.agreement_coline,
        }),
        root: None,
        timings: Some(r.timings.clone()),
    }
}

fn root_graph(spec: &str, dot: &Path, limits: &Limits) -> Result<(CliReport, u8), Failure> {
    let p = Pipeline::run(spec, limits)?;
    let verdict = is_line_graph_with(&p.pis, limits).map_err(Error::from)?;
    let mut report = p.report(Vec::new());
    report.pis = Some(PisSection::new(&p.pis));
    report.line = Some(VerdictSection::new(&p.pis, &verdict, false));
    report.timings = Some(p.timings.clone());
    let Witness::Root { root, .. } = &verdict.witness else {
        return Ok((report, EXIT_PRECONDITION));
    };
    // The root's edges are indexed by PIS vertex, so L(H) can be compared
    // with the PIS graph under the identity map.
    let line_of_root = root.line_graph_in_vertex_order();
    let identity_ok = line_of_root.edges().eq(p.pis.edges());
    root.graph
        .export_dot(&format!("root of PIS({spec})"), dot)
        .map_err(|e| io_failure(dot, e))?;
    report.root = Some(serde_json::json!({
        "vertices": root.graph.vertex_count(),
        "edges": root.graph.edge_count(),
        "edgeList": root.graph.edges().collect::<Vec<_>>(),
        "lineGraphIsomorphic": identity_ok,
        "dot": dot.display().to_string(),
    }));
    Ok((report, if identity_ok { 0 } else { EXIT_DISAGREE }))
}

#[derive(Serialize)]
struct SummaryLine {
    summary: CensusSummary,
    #[serde(rename = "elapsedMs", skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

fn run_census(catalog: Option<&Path>, parallel: usize, no_timings: bool, limits: &Limits) -> Result<u8, Failure> {
    let entries = match catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
            parse_catalog(&text)
        }
        None => default_catalog(),
    };
    let t = Instant::now();
    let results = census(&entries, parallel, limits);
    let elapsed = ms(t);
    for entry in &results {
        let report = match &entry.outcome {
            Ok(r) => full_report(&entry.spec, r),
            Err(e) => CliReport {
                schema_version: SCHEMA_VERSION,
                ring: RingSection { spec: entry.spec.clone(), ..RingSection::default() },
                error: Some(e.to_string()),
                ..CliReport::default()
            },
        };
        emit(&strip_timings(report, no_timings));
    }
    let summary = CensusSummary::from_entries(&results);
    emit(&SummaryLine {
        summary,
        elapsed_ms: (!no_timings).then_some(elapsed),
    });
    Ok(if summary.disagreements == 0 && summary.errors == 0 { 0 } else { EXIT_DISAGREE })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let limits = Limits::default();
    let nt = cli.no_timings;
    match &cli.command {
        Command::RingInfo { spec } => emit(&strip_timings(ring_info(spec, &limits)?, nt)),
        Command::Pis { spec, dot, adjacency } => {
            emit(&strip_timings(pis(spec, dot.as_deref(), adjacency.as_deref(), &limits)?, nt))
        }
        Command::Recognize { spec, mode } => emit(&strip_timings(recognize(spec, *mode, &limits)?, nt)),
        Command::Verify { spec } => {
            let r = verify_spec(spec, &limits)?;
            emit(&strip_timings(full_report(spec, &r), nt));
            return Ok(if r.agrees() { 0 } else { EXIT_DISAGREE });
        }
        Command::Census { catalog, parallel } => return run_census(catalog.as_deref(), *parallel, nt, &limits),
        Command::RootGraph { spec, dot } => {
            let (report, code) = root_graph(spec, dot, &limits)?;
            emit(&strip_timings(report, nt));
            if code == EXIT_PRECONDITION {
                eprintln!("error: PIS({spec}) is not a line graph");
            }
            return Ok(code);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
