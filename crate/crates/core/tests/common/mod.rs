//! Helpers shared by the integration tests. The oracles here work on raw
//! element sets and never call into the ideal or recognition modules.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pisgraph_core::graph::{make_named_graph, NamedGraph};
use pisgraph_core::{build_ring, parse_ring_spec, ElementSet, FiniteRing, Graph, IdealLattice};
use proptest::prelude::{Rng, RngExt};

pub fn ring(spec: &str) -> FiniteRing {
    build_ring(&parse_ring_spec(spec).unwrap()).unwrap()
}

pub fn lattice(r: &FiniteRing) -> IdealLattice {
    IdealLattice::enumerate(r).unwrap()
}

pub fn named(kind: NamedGraph) -> Graph {
    make_named_graph(&kind).unwrap()
}

pub fn claw() -> Graph {
    named(NamedGraph::Star(3))
}

pub fn co_claw() -> Graph {
    claw().complement()
}

/// Every ideal of `r`, found by testing each subset that contains zero.
/// Only feasible for small orders.
pub fn brute_force_ideals(r: &FiniteRing) -> BTreeSet<Vec<usize>> {
    let n = r.order();
    assert!(n <= 20, "subset scan is exponential");
    let others: Vec<usize> = r.elements().filter(|&a| a != r.zero()).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << others.len() {
        let mut member = vec![false; n];
        member[r.zero()] = true;
        for (bit, &a) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                member[a] = true;
            }
        }
        if is_ideal_by_definition(r, &member) {
            out.insert((0..n).filter(|&a| member[a]).collect());
        }
    }
    out
}

fn is_ideal_by_definition(r: &FiniteRing, member: &[bool]) -> bool {
    let inside: Vec<usize> = (0..member.len()).filter(|&a| member[a]).collect();
    inside
        .iter()
        .all(|&a| inside.iter().all(|&b| member[r.add(a, b)]) && r.elements().all(|s| member[r.mul(s, a)]))
}

/// `I + J` as a member list.
pub fn set_sum(r: &FiniteRing, i: &[usize], j: &[usize]) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for &a in i {
        for &b in j {
            out.insert(r.add(a, b));
        }
    }
    out.into_iter().collect()
}

/// Primality straight from the definition.
pub fn is_prime_by_definition(r: &FiniteRing, ideal: &[usize]) -> bool {
    let mut member = vec![false; r.order()];
    ideal.iter().for_each(|&a| member[a] = true);
    if member[r.one()] {
        return false;
    }
    r.elements()
        .all(|a| r.elements().all(|b| !member[r.mul(a, b)] || member[a] || member[b]))
}

/// The prime ideal sum graph built from subset enumeration: vertices are
/// the nonzero proper ideals in the returned order.
pub fn brute_force_pis(r: &FiniteRing) -> (Vec<Vec<usize>>, Graph) {
    let vertices: Vec<Vec<usize>> = brute_force_ideals(r)
        .into_iter()
        .filter(|m| m.len() > 1 && m.len() < r.order())
        .collect();
    let mut g = Graph::new(vertices.len());
    for u in 0..vertices.len() {
        for v in u + 1..vertices.len() {
            if is_prime_by_definition(r, &set_sum(r, &vertices[u], &vertices[v])) {
                g.add_edge(u, v);
            }
        }
    }
    (vertices, g)
}

/// The ideal of a constructed product whose `i`-th component set is
/// `parts[i]`, as a lattice index.
pub fn product_ideal(r: &FiniteRing, lat: &IdealLattice, parts: &[&ElementSet]) -> usize {
    let members = r.elements().filter(|&a| {
        let comps = r.components_of(a).expect("constructed product");
        comps.iter().zip(parts).all(|(&c, part)| part.contains(c))
    });
    lat.index_of(&ElementSet::from_members(r.order(), members))
        .expect("component-wise product of ideals is an ideal")
}

/// A local factor together with its lattice and maximal ideal index.
pub struct Factor {
    pub ring: FiniteRing,
    pub lattice: IdealLattice,
}

impl Factor {
    pub fn new(spec: &str) -> Factor {
        let ring = ring(spec);
        let lattice = lattice(&ring);
        Factor { ring, lattice }
    }

    pub fn zero(&self) -> &ElementSet {
        self.lattice.ideal(self.lattice.zero_index()).members()
    }

    pub fn whole(&self) -> &ElementSet {
        self.lattice.ideal(self.lattice.whole_index()).members()
    }

    pub fn maximal_index(&self) -> usize {
        let m = self.lattice.maximal_indices();
        assert_eq!(m.len(), 1, "factor must be local");
        m[0]
    }

    pub fn maximal(&self) -> &ElementSet {
        self.lattice.ideal(self.maximal_index()).members()
    }

    /// `M^k`.
    pub fn maximal_power(&self, k: u32) -> &ElementSet {
        let m = self.maximal_index();
        let mut p = m;
        for _ in 1..k {
            p = self.lattice.product(&self.ring, p, m);
        }
        self.lattice.ideal(p).members()
    }

    /// The ideal generated by the elements with the given labels.
    pub fn generated(&self, labels: &[&str]) -> &ElementSet {
        let gens: Vec<usize> = labels
            .iter()
            .map(|l| self.ring.element_by_label(l).unwrap_or_else(|| panic!("no element {l}")))
            .collect();
        self.lattice.ideal(self.lattice.generated_index(&gens)).members()
    }
}

/// Uniform random graph where each edge is present with probability
/// `num / 16`.
pub fn random_graph(rng: &mut impl Rng, n: usize, num: u32) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..16u32) < num {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every graph on exactly `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges)
    })
}

/// Every graph with between one and `max_edges` edges and no isolated
/// vertices, up to relabelling (with repeats). Vertices appear in order of
/// first use and edges are listed in increasing order, which a BFS
/// labelling of any graph satisfies.
pub fn graphs_by_edge_count(max_edges: usize) -> Vec<Graph> {
    fn grow(edges: &mut Vec<(usize, usize)>, used: usize, max: usize, out: &mut Vec<Graph>) {
        if !edges.is_empty() {
            out.push(Graph::from_edges(used, edges));
        }
        if edges.len() == max {
            return;
        }
        for a in 0..=used {
            for b in a + 1..=used + 1 {
                // Only the next unused label (or the next two, for an edge
                // starting a new component) may appear.
                if a < used && b > used {
                    continue;
                }
                if edges.last().is_some_and(|&last| (a, b) <= last) {
                    continue;
                }
                edges.push((a, b));
                let now = used.max(b + 1);
                grow(edges, now, max, out);
                edges.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 0, max_edges, &mut out);
    out
}
