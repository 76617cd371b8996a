//! The prime ideal sum graph.

use crate::graph::Graph;
use crate::ideal::IdealLattice;
use crate::ring::FiniteRing;

/// Vertices are the nonzero proper ideals in lattice order (vertex `v` is
/// lattice index `v + 1`); `I ~ J` when `I ≠ J` and `I + J` is prime.
pub fn pis_graph(r: &FiniteRing, lattice: &IdealLattice) -> Graph {
    let vertices: Vec<usize> = lattice.nontrivial_proper().collect();
    let mut g = Graph::with_labels(vertices.iter().map(|&i| lattice.label(r, i)).collect());
    for (a, &i) in vertices.iter().enumerate() {
        for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
            if lattice.is_prime(lattice.sum(i, j)) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// PIS vertex of a lattice index, if the ideal is nonzero and proper.
pub fn vertex_of_ideal(lattice: &IdealLattice, ideal: usize) -> Option<usize> {
    lattice.nontrivial_proper().contains(&ideal).then(|| ideal - 1)
}

/// Lattice index of a PIS vertex.
pub fn ideal_of_vertex(vertex: usize) -> usize {
    vertex + 1
}
