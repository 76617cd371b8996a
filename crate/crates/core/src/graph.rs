//! Small labeled simple graphs with bitset adjacency.

use std::fmt::Write as _;
use std::path::Path;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::GraphError;

/// Largest graph accepted by [`Graph::is_isomorphic_small`].
pub const SMALL_ISO_LIMIT: usize = 10;

/// Largest graph accepted by [`Graph::canonical_code`].
pub const CANONICAL_LIMIT: usize = 8;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl Graph {
    /// `n` isolated vertices labeled `v0, v1, ...`.
    pub fn new(n: usize) -> Graph {
        Graph::with_labels((0..n).map(|i| format!("v{i}")).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Graph {
        let n = labels.len();
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    /// Degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Neighborhood of `u` as a 64-bit mask. Requires at most 64 vertices.
    pub(crate) fn mask(&self, u: usize) -> u64 {
        debug_assert!(self.vertex_count() <= 64);
        self.adj[u].ones().fold(0, |m, v| m | (1 << v))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::with_labels(self.labels.clone());
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, in the given order, labels preserved.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::with_labels(vertices.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Line graph with one vertex per edge, in [`Graph::edges`] order.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let labels = edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        let mut g = Graph::with_labels(labels);
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut g = Graph::with_labels(labels);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v);
        }
        g
    }

    /// Isomorphism test for graphs of at most [`SMALL_ISO_LIMIT`] vertices.
    pub fn is_isomorphic_small(&self, other: &Graph) -> Result<bool, GraphError> {
        let n = self.vertex_count().max(other.vertex_count());
        if n > SMALL_ISO_LIMIT {
            return Err(GraphError::TooLarge { n, limit: SMALL_ISO_LIMIT });
        }
        Ok(self.is_isomorphic(other))
    }

    /// Backtracking isomorphism test over degree-compatible assignments.
    /// Exponential in the worst case; intended for graphs of a few dozen
    /// vertices.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// A bijection `map` with `u ~ v` in `self` iff `map[u] ~ map[v]` in `other`.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n != other.vertex_count()
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return None;
        }
        // Invariant per vertex: own degree plus sorted neighbor degrees.
        let signature = |g: &Graph, u: usize| {
            let mut nd: Vec<usize> = g.neighbors(u).map(|v| g.degree(v)).collect();
            nd.sort_unstable();
            (g.degree(u), nd)
        };
        let sig_a: Vec<_> = (0..n).map(|u| signature(self, u)).collect();
        let sig_b: Vec<_> = (0..n).map(|u| signature(other, u)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| std::cmp::Reverse(self.degree(u)));
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];

        #[allow(clippy::too_many_arguments)]
        fn extend(
            a: &Graph,
            b: &Graph,
            order: &[usize],
            depth: usize,
            sig_a: &[(usize, Vec<usize>)],
            sig_b: &[(usize, Vec<usize>)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            let Some(&u) = order.get(depth) else { return true };
            for v in 0..b.vertex_count() {
                if used[v] || sig_a[u] != sig_b[v] {
                    continue;
                }
                let consistent = order[..depth]
                    .iter()
                    .all(|&w| a.has_edge(u, w) == b.has_edge(v, map[w]));
                if !consistent {
                    continue;
                }
                map[u] = v;
                used[v] = true;
                if extend(a, b, order, depth + 1, sig_a, sig_b, map, used) {
                    return true;
                }
                used[v] = false;
            }
            map[u] = usize::MAX;
            false
        }

        extend(self, other, &order, 0, &sig_a, &sig_b, &mut map, &mut used).then_some(map)
    }

    /// Smallest upper-triangle adjacency bit string over all vertex
    /// orderings. Equal codes (at equal vertex count) mean isomorphic graphs.
    pub fn canonical_code(&self) -> Result<u64, GraphError> {
        let n = self.vertex_count();
        if n > CANONICAL_LIMIT {
            return Err(GraphError::TooLarge { n, limit: CANONICAL_LIMIT });
        }
        Ok((0..n)
            .permutations(n)
            .map(|perm| self.ordered_code(&perm))
            .min()
            .unwrap_or(0))
    }

    /// Adjacency bits of the ordered vertex list: the pair at positions
    /// `i < j` maps to bit `j(j-1)/2 + i`.
    pub(crate) fn ordered_code(&self, vertices: &[usize]) -> u64 {
        let mut code = 0u64;
        for j in 1..vertices.len() {
            for i in 0..j {
                if self.has_edge(vertices[i], vertices[j]) {
                    code |= 1 << (j * (j - 1) / 2 + i);
                }
            }
        }
        code
    }

    /// Graphviz DOT text with vertices and edges in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", escape(name));
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn export_dot(&self, name: &str, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_dot(name))
    }

    /// First line `n`, then one line per vertex listing its neighbors.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for u in 0..self.vertex_count() {
            out.push_str(&self.neighbors(u).map(|v| v.to_string()).join(" "));
            out.push('\n');
        }
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Standard graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    /// `P_n`, `n` vertices.
    Path(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{1,k}`.
    Star(usize),
    /// `K_{m,n}`.
    CompleteBipartite(usize, usize),
    /// `m` disjoint copies of a graph.
    DisjointCopies(usize, Box<NamedGraph>),
}

pub fn make_named_graph(kind: &NamedGraph) -> Result<Graph, GraphError> {
    let bad = |what: &str| Err(GraphError::BadParams(format!("{what} must be positive")));
    match kind {
        NamedGraph::Path(0) => bad("path length"),
        NamedGraph::Path(n) => Ok(Graph::from_edges(*n, &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>())),
        NamedGraph::Complete(0) => bad("clique size"),
        NamedGraph::Complete(n) => Ok(Graph::from_edges(*n, &(0..*n).tuple_combinations().collect::<Vec<_>>())),
        NamedGraph::Star(0) => bad("star leaf count"),
        NamedGraph::Star(k) => make_named_graph(&NamedGraph::CompleteBipartite(1, *k)),
        NamedGraph::CompleteBipartite(m, n) if *m == 0 || *n == 0 => bad("part size"),
        NamedGraph::CompleteBipartite(m, n) => {
            let edges: Vec<(usize, usize)> = (0..*m).flat_map(|i| (0..*n).map(move |j| (i, m + j))).collect();
            Ok(Graph::from_edges(m + n, &edges))
        }
        NamedGraph::DisjointCopies(0, _) => bad("copy count"),
        NamedGraph::DisjointCopies(m, inner) => {
            let one = make_named_graph(inner)?;
            Ok((1..*m).fold(one.clone(), |acc, _| acc.disjoint_union(&one)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(kind: NamedGraph) -> Graph {
        make_named_graph(&kind).unwrap()
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named(NamedGraph::Path(4)).edge_count(), 3);
        let claw = named(NamedGraph::CompleteBipartite(1, 3));
        assert_eq!((claw.vertex_count(), claw.edge_count()), (4, 3));
        assert_eq!(claw.degree_sequence(), [3, 1, 1, 1]);
        let two_k2 = named(NamedGraph::DisjointCopies(2, Box::new(NamedGraph::Complete(2))));
        assert_eq!((two_k2.vertex_count(), two_k2.edge_count()), (4, 2));
        assert!(make_named_graph(&NamedGraph::Path(0)).is_err());
        assert!(make_named_graph(&NamedGraph::CompleteBipartite(0, 3)).is_err());
    }

    #[test]
    fn complement_basics() {
        let k4 = named(NamedGraph::Complete(4));
        assert_eq!(k4.complement().edge_count(), 0);
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]);
        assert_eq!(g.complement().complement(), g);
        // K4 plus a pendant at vertex 0: complement is a claw centred at the
        // pendant vertex plus the isolated vertex 0.
        let mut kp = Graph::new(5);
        for (u, v) in (0..4).tuple_combinations() {
            kp.add_edge(u, v);
        }
        kp.add_edge(0, 4);
        let c = kp.complement();
        assert_eq!(c.edge_count(), 3);
        assert_eq!(c.degree(4), 3);
        assert_eq!(c.degree(0), 0);
        let claw_plus_k1 = named(NamedGraph::Star(3)).disjoint_union(&Graph::new(1));
        assert!(c.is_isomorphic_small(&claw_plus_k1).unwrap());
    }

    #[test]
    fn induced_subgraphs() {
        let g = named(NamedGraph::Path(5));
        assert_eq!(g.induced(&[2]).vertex_count(), 1);
        assert_eq!(g.induced(&(0..5).collect::<Vec<_>>()), g);
        assert_eq!(g.induced(&[0, 2, 4]).edge_count(), 0);
    }

    #[test]
    fn isomorphism() {
        let p3 = named(NamedGraph::Path(3));
        let k12 = named(NamedGraph::CompleteBipartite(1, 2));
        assert!(p3.is_isomorphic_small(&k12).unwrap());
        let k3 = named(NamedGraph::Complete(3));
        let claw = named(NamedGraph::Star(3));
        assert!(!k3.is_isomorphic_small(&claw).unwrap());
        let big = Graph::new(11);
        assert!(matches!(big.is_isomorphic_small(&big), Err(GraphError::TooLarge { n: 11, .. })));
        // C6 vs two triangles: same degree sequence, not isomorphic.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_k3 = named(NamedGraph::DisjointCopies(2, Box::new(NamedGraph::Complete(3))));
        assert!(!c6.is_isomorphic(&two_k3));
        let map = c6.find_isomorphism(&c6.induced(&[3, 4, 5, 0, 1, 2])).unwrap();
        assert_eq!(map.len(), 6);
    }

    #[test]
    fn canonical_codes_agree_with_isomorphism() {
        let p4 = named(NamedGraph::Path(4));
        let relabeled = p4.induced(&[2, 0, 3, 1]);
        assert_eq!(p4.canonical_code().unwrap(), relabeled.canonical_code().unwrap());
        assert_ne!(p4.canonical_code().unwrap(), named(NamedGraph::Star(3)).canonical_code().unwrap());
    }

    #[test]
    fn line_graphs() {
        assert!(named(NamedGraph::Path(4)).line_graph().is_isomorphic(&named(NamedGraph::Path(3))));
        assert!(named(NamedGraph::Star(4)).line_graph().is_isomorphic(&named(NamedGraph::Complete(4))));
        assert_eq!(named(NamedGraph::Complete(2)).line_graph().vertex_count(), 1);
    }

    #[test]
    fn dot_output() {
        let k2 = named(NamedGraph::Complete(2));
        let dot = k2.to_dot("k2");
        assert_eq!(dot, "graph \"k2\" {\n  0 [label=\"v0\"];\n  1 [label=\"v1\"];\n  0 -- 1;\n}\n");
        assert_eq!(Graph::new(0).to_dot("empty"), "graph \"empty\" {\n}\n");
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k2.dot");
        k2.export_dot("k2", &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), dot);
        assert!(k2.export_dot("k2", &dir.path().join("no/such/dir.dot")).is_err());
    }

    #[test]
    fn adjacency_text() {
        let p3 = named(NamedGraph::Path(3));
        assert_eq!(p3.to_adjacency_text(), "3\n1\n0 2\n1\n");
    }
}
