//! Line-graph recognition by two independent routes.
//!
//! * A scan for the nine minimal non-line graphs as induced subgraphs.
//! * A backtracking search for a Krausz partition: a partition of the edges
//!   into cliques such that every vertex lies in at most two of them. A
//!   partition yields a root graph `H` with `L(H) ≅ G`.
//!
//! [`is_line_graph`] runs both and fails hard if they disagree.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{GraphError, RecognitionError};
use crate::graph::Graph;
use crate::Limits;

type EdgeList = &'static [(usize, usize)];

/// Edge lists of the nine minimal non-line graphs. The claw comes first,
/// the rest by vertex count, then edge count, then degree sequence.
const BEINEKE: [(&str, usize, EdgeList); 9] = [
    ("claw K1,3", 4, &[(0, 3), (1, 3), (2, 3)]),
    ("K2,3 plus an edge", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]),
    (
        "K5 minus an edge",
        5,
        &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    ),
    ("6v7e", 6, &[(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]),
    ("6v8e", 6, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)]),
    (
        "6v9e-a",
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (4, 5)],
    ),
    (
        "6v9e-b",
        6,
        &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
    ),
    (
        "6v10e",
        6,
        &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)],
    ),
    (
        "6v11e",
        6,
        &[(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)],
    ),
];

const NO_MATCH: u8 = u8::MAX;

/// The nine forbidden induced subgraphs for line graphs and their
/// complements, with lookup tables for the subset scan.
#[derive(Debug)]
pub struct ForbiddenLibrary {
    graphs: Vec<Graph>,
    complements: Vec<Graph>,
    names: Vec<&'static str>,
    /// For `k = 4, 5, 6`: ordered adjacency code of a `k`-vertex list to the
    /// library index it is isomorphic to.
    lookup: [Vec<u8>; 3],
}

impl ForbiddenLibrary {
    /// Builds the library and validates it: every graph is non-line, every
    /// single-vertex deletion is a line graph, and the nine graphs are
    /// pairwise non-isomorphic. The Krausz search is the oracle.
    pub fn new() -> Result<ForbiddenLibrary, RecognitionError> {
        let mut graphs = Vec::new();
        let mut names = Vec::new();
        for (name, n, edges) in BEINEKE {
            let mut g = Graph::with_labels((0..n).map(|i| format!("g{i}")).collect());
            for &(u, v) in edges {
                g.add_edge(u, v);
            }
            graphs.push(g);
            names.push(name);
        }
        let fail = |m: String| Err(RecognitionError::Library(m));
        let mut codes = Vec::new();
        for (i, g) in graphs.iter().enumerate() {
            if !(4..=6).contains(&g.vertex_count()) {
                return fail(format!("graph {i} has {} vertices", g.vertex_count()));
            }
            if krausz_partition(g).is_some() {
                return fail(format!("graph {i} ({}) admits a Krausz partition", names[i]));
            }
            for v in 0..g.vertex_count() {
                let rest: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
                if krausz_partition(&g.induced(&rest)).is_none() {
                    return fail(format!("graph {i} ({}) minus vertex {v} is not a line graph", names[i]));
                }
            }
            let code = (g.vertex_count(), g.canonical_code()?);
            if let Some(j) = codes.iter().position(|c| *c == code) {
                return fail(format!("graphs {j} and {i} are isomorphic"));
            }
            codes.push(code);
        }

        let mut lookup = [vec![NO_MATCH; 1 << 6], vec![NO_MATCH; 1 << 10], vec![NO_MATCH; 1 << 15]];
        for (i, g) in graphs.iter().enumerate() {
            let k = g.vertex_count();
            for perm in (0..k).permutations(k) {
                lookup[k - 4][g.ordered_code(&perm) as usize] = i as u8;
            }
        }
        let complements = graphs.iter().map(Graph::complement).collect();
        Ok(ForbiddenLibrary {
            graphs,
            complements,
            names,
            lookup,
        })
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// Complements of the nine graphs: the forbidden induced subgraphs of
    /// complements of line graphs.
    pub fn complements(&self) -> &[Graph] {
        &self.complements
    }

    pub fn name(&self, index: usize) -> &'static str {
        self.names[index]
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// The shared, validated library. Panics if validation fails, which can
/// only mean a mis-entered graph.
pub fn forbidden_library() -> &'static ForbiddenLibrary {
    static LIBRARY: OnceLock<ForbiddenLibrary> = OnceLock::new();
    LIBRARY.get_or_init(|| ForbiddenLibrary::new().expect("forbidden library self-validation"))
}

/// An induced copy of a library graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenMatch {
    /// Vertices of the host graph, ascending.
    pub vertices: Vec<usize>,
    pub library_index: usize,
}

/// Scans vertex subsets of size 4, then 5, then 6, each in lexicographic
/// order, and returns the first one inducing a library graph.
pub fn find_forbidden_induced(
    g: &Graph,
    library: &ForbiddenLibrary,
) -> Result<Option<ForbiddenMatch>, GraphError> {
    find_forbidden_induced_with(g, library, Limits::default().scan_cap)
}

pub fn find_forbidden_induced_with(
    g: &Graph,
    library: &ForbiddenLibrary,
    cap: usize,
) -> Result<Option<ForbiddenMatch>, GraphError> {
    let n = g.vertex_count();
    let limit = cap.min(64);
    if n > limit {
        return Err(GraphError::TooLarge { n, limit });
    }
    let masks: Vec<u64> = (0..n).map(|u| g.mask(u)).collect();
    let mut chosen = [0usize; 6];
    for k in 4..=6.min(n) {
        let table = &library.lookup[k - 4];
        if let Some(index) = scan(&masks, table, k, 0, 0, 0, &mut chosen) {
            return Ok(Some(ForbiddenMatch {
                vertices: chosen[..k].to_vec(),
                library_index: index,
            }));
        }
    }
    Ok(None)
}

/// Depth-first enumeration of `k`-subsets in lexicographic order, extending
/// the ordered adjacency code one vertex at a time.
fn scan(masks: &[u64], table: &[u8], k: usize, depth: usize, start: usize, code: u64, chosen: &mut [usize; 6]) -> Option<usize> {
    if depth == k {
        let hit = table[code as usize];
        return (hit != NO_MATCH).then_some(hit as usize);
    }
    let n = masks.len();
    let base = depth * depth.saturating_sub(1) / 2;
    for v in start..=n - (k - depth) {
        let mut next = code;
        for (i, &u) in chosen[..depth].iter().enumerate() {
            if masks[v] >> u & 1 == 1 {
                next |= 1 << (base + i);
            }
        }
        chosen[depth] = v;
        if let Some(hit) = scan(masks, table, k, depth + 1, v + 1, next, chosen) {
            return Some(hit);
        }
    }
    None
}

/// Cliques (each of at least two vertices, ascending) partitioning the edge
/// set, with every vertex in at most two cliques.
pub type KrauszPartition = Vec<Vec<usize>>;

/// Searches for a Krausz partition.
///
/// Pick a vertex `u` with uncovered edges. If `u` already lies in one
/// clique, all of its uncovered edges must form its second clique. If it
/// lies in none, its uncovered neighbourhood must split into at most two
/// cliques; two neighbours that are not joined by an uncovered edge must be
/// on opposite sides, so the candidates are the 2-colourings of that
/// conflict graph. Exponential in the worst case.
pub fn krausz_partition(g: &Graph) -> Option<KrauszPartition> {
    let n = g.vertex_count();
    let mut state = KrauszState {
        uncovered: (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                g.neighbors(u).for_each(|v| row.insert(v));
                row
            })
            .collect(),
        count: vec![0; n],
        cliques: Vec::new(),
    };
    state.search().then_some(state.cliques)
}

struct KrauszState {
    uncovered: Vec<FixedBitSet>,
    count: Vec<u8>,
    cliques: Vec<Vec<usize>>,
}

impl KrauszState {
    fn search(&mut self) -> bool {
        let mut pick = None;
        for u in 0..self.count.len() {
            if self.uncovered[u].is_clear() {
                continue;
            }
            match self.count[u] {
                0 => {
                    pick.get_or_insert(u);
                }
                1 => {
                    pick = Some(u);
                    break;
                }
                _ => return false,
            }
        }
        let Some(u) = pick else { return true };
        let nbrs: Vec<usize> = self.uncovered[u].ones().collect();

        if self.count[u] == 1 {
            let mut clique = nbrs;
            clique.push(u);
            return self.try_cliques(&[clique]);
        }

        // 2-colour the conflict graph on the neighbourhood.
        let d = nbrs.len();
        let mut colour = vec![u8::MAX; d];
        let mut component = vec![usize::MAX; d];
        let mut components = 0;
        for s in 0..d {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            component[s] = components;
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for b in 0..d {
                    if a == b || self.uncovered[nbrs[a]].contains(nbrs[b]) {
                        continue;
                    }
                    if colour[b] == u8::MAX {
                        colour[b] = 1 - colour[a];
                        component[b] = components;
                        stack.push(b);
                    } else if colour[b] == colour[a] {
                        return false;
                    }
                }
            }
            components += 1;
        }
        // Component 0 (holding the first neighbour) is pinned to side A;
        // flipping a component's colours moves it across. No flips first, so
        // the single-clique option is tried before any split.
        let free = components - 1;
        if free >= 63 {
            return false;
        }
        for flips in 0u64..(1 << free) {
            let mut side_a = vec![u];
            let mut side_b = vec![u];
            for i in 0..d {
                let flipped = component[i] > 0 && flips >> (component[i] - 1) & 1 == 1;
                if (colour[i] == 0) != flipped {
                    side_a.push(nbrs[i]);
                } else {
                    side_b.push(nbrs[i]);
                }
            }
            let mut cliques = vec![side_a];
            if side_b.len() > 1 {
                cliques.push(side_b);
            }
            if self.try_cliques(&cliques) {
                return true;
            }
        }
        false
    }

    /// Commits the cliques, recurses, and rolls back on failure.
    fn try_cliques(&mut self, cliques: &[Vec<usize>]) -> bool {
        for c in cliques {
            for (i, &a) in c.iter().enumerate() {
                if self.count[a] >= 2 {
                    return false;
                }
                if c[i + 1..].iter().any(|&b| !self.uncovered[a].contains(b)) {
                    return false;
                }
            }
        }
        let mut applied = 0;
        let mut ok = true;
        for c in cliques {
            if c.iter().any(|&a| self.count[a] >= 2) {
                ok = false;
                break;
            }
            self.apply(c, true);
            applied += 1;
        }
        // A vertex that just reached two cliques cannot take any more edges.
        ok = ok
            && cliques
                .iter()
                .flatten()
                .all(|&a| self.count[a] < 2 || self.uncovered[a].is_clear());
        if ok && self.search() {
            return true;
        }
        for c in cliques[..applied].iter().rev() {
            self.apply(c, false);
        }
        false
    }

    fn apply(&mut self, clique: &[usize], commit: bool) {
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                self.uncovered[a].set(b, !commit);
                self.uncovered[b].set(a, !commit);
            }
            if commit {
                self.count[a] += 1;
            } else {
                self.count[a] -= 1;
            }
        }
        if commit {
            let mut sorted = clique.to_vec();
            sorted.sort_unstable();
            self.cliques.push(sorted);
        } else {
            self.cliques.pop();
        }
    }
}

/// A root graph together with the correspondence between vertices of the
/// line graph and edges of the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootGraph {
    pub graph: Graph,
    /// `edge_of_vertex[v]` is the root edge that vertex `v` of `G` represents.
    pub edge_of_vertex: Vec<(usize, usize)>,
}

impl RootGraph {
    /// `L(root)` with vertex `v` standing for `edge_of_vertex[v]`.
    pub fn line_graph_in_vertex_order(&self) -> Graph {
        let e = &self.edge_of_vertex;
        let mut g = Graph::new(e.len());
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let ((a, b), (c, d)) = (e[i], e[j]);
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Builds `H` with one vertex per clique, plus an auxiliary endpoint for
/// every vertex of `G` covered by a single clique (two for a vertex covered
/// by none). Each vertex of `G` becomes the edge joining its cliques.
pub fn root_graph_from_partition(g: &Graph, partition: &KrauszPartition) -> RootGraph {
    let n = g.vertex_count();
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, clique) in partition.iter().enumerate() {
        for &v in clique {
            covering[v].push(ci);
        }
    }
    let mut labels: Vec<String> = (0..partition.len()).map(|i| format!("C{i}")).collect();
    let mut edge_of_vertex = Vec::with_capacity(n);
    for (v, cover) in covering.iter().enumerate() {
        let edge = match cover[..] {
            [a, b] => (a, b),
            [a] => {
                labels.push(format!("a{v}"));
                (a, labels.len() - 1)
            }
            [] => {
                labels.push(format!("a{v}"));
                labels.push(format!("b{v}"));
                (labels.len() - 2, labels.len() - 1)
            }
            _ => panic!("vertex {v} lies in more than two cliques"),
        };
        edge_of_vertex.push(edge);
    }
    let mut graph = Graph::with_labels(labels);
    for &(a, b) in &edge_of_vertex {
        graph.add_edge(a, b);
    }
    RootGraph { graph, edge_of_vertex }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The vertices induce library graph `library_index` (in the graph that
    /// was tested for being a line graph).
    Forbidden(ForbiddenMatch),
    Root {
        root: RootGraph,
        cliques: KrauszPartition,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineVerdict {
    pub is_line: bool,
    pub witness: Witness,
}

pub fn is_line_graph(g: &Graph) -> Result<LineVerdict, RecognitionError> {
    is_line_graph_with(g, &Limits::default())
}

/// Runs both deciders and returns the verdict with its witness.
pub fn is_line_graph_with(g: &Graph, limits: &Limits) -> Result<LineVerdict, RecognitionError> {
    let forbidden = find_forbidden_induced_with(g, forbidden_library(), limits.scan_cap)?;
    let partition = krausz_partition(g);
    match (forbidden, partition) {
        (None, Some(cliques)) => Ok(LineVerdict {
            is_line: true,
            witness: Witness::Root {
                root: root_graph_from_partition(g, &cliques),
                cliques,
            },
        }),
        (Some(m), None) => Ok(LineVerdict {
            is_line: false,
            witness: Witness::Forbidden(m),
        }),
        (f, p) => Err(RecognitionError::Disagreement {
            scan_says_line: f.is_none(),
            krausz_says_line: p.is_some(),
        }),
    }
}

/// Tests whether `g` is the complement of a line graph. A negative witness
/// `W` satisfies `G[W] ≅ complement(Γ_i)`; a positive witness is a root of
/// the complement of `g`.
pub fn is_complement_line_graph(g: &Graph) -> Result<LineVerdict, RecognitionError> {
    is_complement_line_graph_with(g, &Limits::default())
}

pub fn is_complement_line_graph_with(g: &Graph, limits: &Limits) -> Result<LineVerdict, RecognitionError> {
    is_line_graph_with(&g.complement(), limits)
}
