//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so
//! the report is printed even when everything passes.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{
    all_graphs, brute_force_ideals, brute_force_pis, claw, co_claw, graphs_by_edge_count, lattice, named,
    product_ideal, random_graph, ring, Factor,
};
use pisgraph_core::catalog::default_catalog;
use pisgraph_core::classifier::{census, classify_line, CensusSummary};
use pisgraph_core::graph::NamedGraph;
use pisgraph_core::pis::{ideal_of_vertex, vertex_of_ideal};
use pisgraph_core::recognition::{find_forbidden_induced, forbidden_library, krausz_partition, Witness};
use pisgraph_core::{
    build_ring, is_complement_line_graph, is_line_graph, local_profile, parse_ring_spec, pis_graph, ElementSet,
    Graph, LineVerdict, Limits,
};
use proptest::test_runner::{RngAlgorithm, TestRng};

type Outcome = Result<(), String>;
type Check = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn root_of(v: &LineVerdict) -> Result<&Graph, String> {
    match &v.witness {
        Witness::Root { root, .. } => Ok(&root.graph),
        Witness::Forbidden(_) => Err("expected a root witness".into()),
    }
}

fn forbidden_vertices(v: &LineVerdict) -> Result<&[usize], String> {
    match &v.witness {
        Witness::Forbidden(m) => Ok(&m.vertices),
        Witness::Root { .. } => Err("expected a forbidden witness".into()),
    }
}

fn pis_of(spec: &str) -> (pisgraph_core::FiniteRing, pisgraph_core::IdealLattice, Graph) {
    let r = ring(spec);
    let lat = lattice(&r);
    let g = pis_graph(&r, &lat);
    (r, lat, g)
}

fn criterion_1() -> Outcome {
    let (_, _, g) = pis_of("Z 16");
    ensure!(g.vertex_count() == 3, "{} vertices", g.vertex_count());
    ensure!(g.is_isomorphic_small(&named(NamedGraph::Path(3))).unwrap(), "not P3");
    let v = is_line_graph(&g).map_err(|e| e.to_string())?;
    ensure!(v.is_line, "not recognised as a line graph");
    ensure!(root_of(&v)?.is_isomorphic(&named(NamedGraph::Path(4))), "root is not P4");
    Ok(())
}

fn criterion_2() -> Outcome {
    let (_, lat, g) = pis_of("Z 32");
    let f = Factor::new("Z 32");
    let powers: BTreeSet<usize> = (1..=4).map(|k| lat.index_of(f.maximal_power(k)).unwrap()).collect();
    let m = find_forbidden_induced(&g, forbidden_library()).unwrap().ok_or("no forbidden subgraph")?;
    let found: BTreeSet<usize> = m.vertices.iter().map(|&v| ideal_of_vertex(v)).collect();
    ensure!(found == powers, "witness ideals {found:?}, expected {powers:?}");
    ensure!(g.induced(&m.vertices).is_isomorphic_small(&claw()).unwrap(), "witness is not a claw");
    ensure!(!is_line_graph(&g).unwrap().is_line, "recognised as a line graph");
    ensure!(is_complement_line_graph(&g).unwrap().is_line, "not a complement of a line graph");
    ensure!(g.is_isomorphic_small(&claw()).unwrap(), "PIS is not K1,3");
    Ok(())
}

fn criterion_3() -> Outcome {
    let spec = "mon 2 [x,y] / (x^2,y^2)";
    let (_, lat, g) = pis_of(spec);
    let f = Factor::new(spec);
    ensure!(lat.nontrivial_proper().len() == 5, "{} nontrivial ideals", lat.nontrivial_proper().len());
    let xy = vertex_of_ideal(&lat, lat.index_of(f.generated(&["xy"])).unwrap()).unwrap();
    let m = vertex_of_ideal(&lat, f.maximal_index()).unwrap();
    ensure!(g.neighbors(xy).collect::<Vec<_>>() == vec![m], "<xy> is not a pendant on M");
    ensure!(is_line_graph(&g).unwrap().is_line, "line verdict false");
    let co = is_complement_line_graph(&g).unwrap();
    ensure!(!co.is_line, "co-line verdict true");
    let w = forbidden_vertices(&co)?;
    ensure!(g.complement().induced(w).is_isomorphic_small(&claw()).unwrap(), "complement witness is not a claw");
    ensure!(g.induced(w).is_isomorphic_small(&co_claw()).unwrap(), "witness is not a co-claw");
    Ok(())
}

fn criterion_4() -> Outcome {
    let r = ring("mon 3 [x,y] / (x^2,y^2)");
    let lat = lattice(&r);
    let residue = local_profile(&r, &lat).local.ok_or("not local")?.residue_order;
    ensure!(residue == 3, "residue field of order {residue}");
    ensure!(lat.nontrivial_proper().len() == residue + 3, "{} nontrivial ideals", lat.nontrivial_proper().len());
    let (x, y) = (r.element_by_label("x").unwrap(), r.element_by_label("y").unwrap());
    let classes: BTreeSet<usize> =
        r.units().iter().map(|u| lat.principal_index(r.add(x, r.mul(u, y)))).collect();
    ensure!(classes.len() == residue - 1, "{} distinct <x+uy>", classes.len());
    Ok(())
}

fn criterion_5() -> Outcome {
    let (_, _, g) = pis_of("mon 2 [x,y] / (x^2,y^2,xy)");
    ensure!(g.is_isomorphic_small(&named(NamedGraph::Complete(4))).unwrap(), "PIS is not K4");
    let v = is_line_graph(&g).unwrap();
    ensure!(v.is_line, "line verdict false");
    ensure!(root_of(&v)?.is_isomorphic(&named(NamedGraph::Star(4))), "root is not K1,4");
    ensure!(is_complement_line_graph(&g).unwrap().is_line, "co-line verdict false");
    Ok(())
}

fn criterion_6() -> Outcome {
    let (_, _, g) = pis_of("prod(Z 2, Z 3)");
    ensure!(g.vertex_count() == 2 && g.edge_count() == 0, "PIS is not 2 isolated vertices");
    ensure!(is_line_graph(&g).unwrap().is_line, "line verdict false");
    ensure!(is_complement_line_graph(&g).unwrap().is_line, "co-line verdict false");
    Ok(())
}

fn criterion_7() -> Outcome {
    let (r, _, g) = pis_of("prod(Z 4, GF 2 1)");
    let (_, oracle) = brute_force_pis(&r);
    ensure!(oracle.vertex_count() == 4 && oracle.edge_count() == 4, "oracle disagrees with expected size");
    let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    ensure!(oracle.is_isomorphic_small(&paw).unwrap(), "oracle graph is not a triangle plus pendant");
    ensure!(g.vertex_count() == 4 && g.edge_count() == 4, "PIS has {} vertices {} edges", g.vertex_count(), g.edge_count());
    ensure!(g.is_isomorphic_small(&oracle).unwrap(), "PIS differs from the oracle graph");
    ensure!(is_line_graph(&g).unwrap().is_line, "line verdict false");
    ensure!(is_complement_line_graph(&g).unwrap().is_line, "co-line verdict false");
    Ok(())
}

fn criterion_8() -> Outcome {
    let (_, _, g) = pis_of("prod(Z 8, GF 2 1)");
    ensure!(!is_line_graph(&g).unwrap().is_line, "line verdict true");
    let co = is_complement_line_graph(&g).unwrap();
    ensure!(!co.is_line, "co-line verdict true");
    let w = forbidden_vertices(&co)?;
    ensure!(w.len() == 6, "witness has {} vertices", w.len());
    let induced = g.induced(w);
    let lib = forbidden_library();
    ensure!(
        lib.graphs().iter().any(|l| induced.complement().is_isomorphic_small(l).unwrap()),
        "witness is not the complement of a library graph"
    );
    Ok(())
}

fn criterion_9() -> Outcome {
    let spec = "prod(Z 2, Z 2, Z 2, Z 2)";
    let (r, lat, g) = pis_of(spec);
    let fs: Vec<Factor> = (0..4).map(|_| Factor::new("Z 2")).collect();
    let (m, w) = (|i: usize| fs[i].maximal(), |i: usize| fs[i].whole());
    let vertices = |sets: Vec<[&ElementSet; 4]>| -> Vec<usize> {
        let mut v: Vec<usize> =
            sets.iter().map(|p| vertex_of_ideal(&lat, product_ideal(&r, &lat, p)).unwrap()).collect();
        v.sort();
        v
    };
    let s = vertices(vec![
        [m(0), w(1), w(2), w(3)],
        [m(0), m(1), w(2), w(3)],
        [m(0), m(1), m(2), w(3)],
        [m(0), m(1), w(2), m(3)],
    ]);
    let s_prime = vertices(vec![
        [m(0), m(1), w(2), w(3)],
        [w(0), m(1), m(2), w(3)],
        [m(0), w(1), m(2), w(3)],
        [m(0), m(1), m(2), w(3)],
    ]);
    ensure!(g.induced(&s).is_isomorphic_small(&claw()).unwrap(), "S does not induce K1,3");
    ensure!(!is_line_graph(&g).unwrap().is_line, "line verdict true");
    ensure!(g.induced(&s_prime).is_isomorphic_small(&co_claw()).unwrap(), "S' does not induce a co-claw");
    ensure!(!is_complement_line_graph(&g).unwrap().is_line, "co-line verdict true");
    Ok(())
}

fn criterion_10() -> Outcome {
    let spec = "mon 2 [x,y,z] / (x^2,y^2,z^2,xy,xz,yz)";
    let (r, lat, g) = pis_of(spec);
    let inv = local_profile(&r, &lat).local.ok_or("not local")?;
    ensure!(inv.min_gen == 3, "minGen = {}", inv.min_gen);
    ensure!(!is_line_graph(&g).unwrap().is_line, "line verdict true");
    ensure!(!is_complement_line_graph(&g).unwrap().is_line, "co-line verdict true");
    Ok(())
}

fn criterion_11() -> Outcome {
    let spec = "mon 2 [x,y] / (x^3,xy,y^2)";
    let (r, lat, g) = pis_of(spec);
    let inv = local_profile(&r, &lat).local.ok_or("not local")?;
    ensure!(inv.min_gen == 2, "minGen = {}", inv.min_gen);
    let x = r.element_by_label("x").unwrap();
    ensure!(r.mul(x, x) != r.zero(), "x^2 = 0");
    let p = classify_line(&r).map_err(|e| e.to_string())?;
    ensure!(!p.holds, "classifier predicts a line graph ({})", p.rule);
    ensure!(!is_line_graph(&g).unwrap().is_line, "recogniser says line graph");
    Ok(())
}

fn criterion_12() -> Outcome {
    let catalog = default_catalog();
    ensure!(catalog.len() >= 35, "catalog has {} rings", catalog.len());
    let start = Instant::now();
    let entries = census(&catalog, 1, &Limits::default());
    let elapsed = start.elapsed();
    let summary = CensusSummary::from_entries(&entries);
    ensure!(summary.errors == 0, "{} rings failed", summary.errors);
    ensure!(summary.disagreements == 0, "{} disagreements", summary.disagreements);
    ensure!(elapsed < Duration::from_secs(120), "census took {elapsed:?}");
    // Every case of the classification must be exercised, on both sides.
    let mut rules = BTreeSet::new();
    let (mut neg_line, mut neg_coline) = (0, 0);
    for e in &entries {
        let r = e.outcome.as_ref().unwrap();
        rules.insert(r.prediction.line.rule.to_string());
        rules.insert(r.prediction.coline.rule.to_string());
        neg_line += !r.prediction.line.holds as usize;
        neg_coline += !r.prediction.coline.holds as usize;
    }
    for tag in ["T2.1-i", "T2.1-ii", "T2.3-i", "T2.3-ii", "T2.3-iii", "T3.1-i", "T3.1-ii", "T3.2-i", "T3.2-ii", "T3.2-iii"] {
        ensure!(rules.contains(tag), "no catalog ring exercises {tag}");
    }
    ensure!(neg_line > 0 && neg_coline > 0, "no negative cases");
    println!("    {} rings in {:.2?}", summary.total, elapsed);
    Ok(())
}

fn criterion_13() -> Outcome {
    // Ideal enumeration against a subset scan.
    let catalog: Vec<_> = default_catalog()
        .iter()
        .map(|s| (s.clone(), build_ring(&parse_ring_spec(s).unwrap()).unwrap()))
        .collect();
    for (spec, r) in catalog.iter().filter(|(_, r)| r.order() <= 16) {
        let found: BTreeSet<Vec<usize>> = lattice(r).ideals().iter().map(|i| i.members().iter().collect()).collect();
        ensure!(found == brute_force_ideals(r), "{spec}: ideals differ from the subset scan");
    }
    // Prime ideals are exactly the maximal ones.
    for (spec, r) in &catalog {
        let lat = lattice(r);
        ensure!(lat.prime_flags() == lat.maximal_flags(), "{spec}: prime and maximal flags differ");
    }
    // Forbidden scan against Krausz partition search.
    let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    for i in 0..1000 {
        let g = random_graph(&mut rng, 4 + i % 6, 1 + (i as u32 % 15));
        let scan = find_forbidden_induced(&g, forbidden_library()).unwrap();
        ensure!(scan.is_none() == krausz_partition(&g).is_some(), "deciders disagree on {g:?}");
    }
    // The library is minimal, and is every minimal non-line graph.
    let lib = forbidden_library();
    for g in lib.graphs() {
        ensure!(krausz_partition(g).is_none(), "library graph is a line graph");
        for d in 0..g.vertex_count() {
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != d).collect();
            ensure!(krausz_partition(&g.induced(&keep)).is_some(), "library graph is not minimal");
        }
    }
    let mut minimal = BTreeSet::new();
    for n in 4..=6 {
        for g in all_graphs(n) {
            if krausz_partition(&g).is_none()
                && (0..n).all(|d| {
                    let keep: Vec<usize> = (0..n).filter(|&v| v != d).collect();
                    krausz_partition(&g.induced(&keep)).is_some()
                })
            {
                minimal.insert(g.canonical_code().unwrap());
            }
        }
    }
    ensure!(minimal.len() == 9, "{} minimal non-line graphs", minimal.len());
    // Line graphs of all small roots.
    for h in graphs_by_edge_count(6) {
        ensure!(is_line_graph(&h.line_graph()).unwrap().is_line, "L(H) rejected for {h:?}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Check; 13] = [
        ("PIS(Z16) is P3 with root P4", criterion_1),
        ("PIS(Z32) is a claw found on M, M^2, M^3, M^4", criterion_2),
        ("GF(2)[x,y]/(x^2,y^2): five ideals, pendant <xy>, line but not co-line", criterion_3),
        ("GF(3)[x,y]/(x^2,y^2): six ideals and two classes <x+uy>", criterion_4),
        ("GF(2)[x,y]/(x^2,y^2,xy): K4 with root K1,4, co-line", criterion_5),
        ("Z2 x Z3: two isolated vertices, line and co-line", criterion_6),
        ("Z4 x GF(2): paw graph, line and co-line", criterion_7),
        ("Z8 x GF(2): neither, six-vertex co-line witness", criterion_8),
        ("Z2^4: claw on S, co-claw on S'", criterion_9),
        ("three-generator nil algebra: neither", criterion_10),
        ("GF(2)[x,y]/(x^3,xy,y^2): predicted and recognised non-line", criterion_11),
        ("default catalog census: no disagreements, under 120 s", criterion_12),
        ("property suites", criterion_13),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS ({secs:.2}s) {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL ({secs:.2}s) {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
