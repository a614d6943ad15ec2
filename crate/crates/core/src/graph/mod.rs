//! Simple undirected graphs on `0..n` and the structural operations the
//! reductions and the decision procedure are built from.

mod format;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{write_int_list, Permutation};

pub use format::{parse_edge_list, parse_graph6, parse_graph6_lines, write_edge_list, write_graph6};

/// Simple undirected graph on vertices `0..n`. Adjacency lists are kept sorted,
/// so structural equality is edge-set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {{{u},{v}}} out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u},{}}}", w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds from sorted, already validated adjacency lists.
    pub(crate) fn from_sorted_adj(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Self::from_sorted_adj(adj)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The image of this graph under `p`: `{p[u], p[v]}` is an edge iff `{u, v}` is.
    pub fn permuted(&self, p: &Permutation) -> Graph {
        assert_eq!(p.len(), self.n(), "permutation size does not match graph");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[p.apply(u)] = list.iter().map(|&v| p.apply(v)).collect();
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, m: self.m }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Self::from_sorted_adj(adj)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || component_labels(self).1 == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_set().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Vertex 2-coloring with colors 1 and 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct TwoColoring(Vec<u8>);

impl TwoColoring {
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c != 1 && c != 2) {
            return Err(Error::InvalidInput(format!("vertex {v} has color {}, expected 1 or 2", colors[v])));
        }
        Ok(TwoColoring(colors))
    }

    pub fn uniform(n: usize) -> Self {
        TwoColoring(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub(crate) fn set(&mut self, v: usize, color: u8) {
        debug_assert!(color == 1 || color == 2);
        self.0[v] = color;
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.len() == g.n() && g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }

    /// Colors renamed 1 <-> 2.
    pub fn swapped(&self) -> Self {
        TwoColoring(self.0.iter().map(|&c| 3 - c).collect())
    }

    /// The coloring carried along by `p`: vertex `p[v]` gets the color of `v`.
    pub fn permuted(&self, p: &Permutation) -> Self {
        let mut out = vec![0; self.len()];
        for (v, &c) in self.0.iter().enumerate() {
            out[p.apply(v)] = c;
        }
        TwoColoring(out)
    }

    /// True iff `c[p[v]] = c[v]` for every vertex.
    pub fn is_preserved_by(&self, p: &Permutation) -> bool {
        p.len() == self.len() && (0..self.len()).all(|v| self.0[p.apply(v)] == self.0[v])
    }
}

impl TryFrom<Vec<u8>> for TwoColoring {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Self> {
        TwoColoring::new(v)
    }
}

impl From<TwoColoring> for Vec<u8> {
    fn from(c: TwoColoring) -> Self {
        c.0
    }
}

impl fmt::Display for TwoColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_int_list(f, &self.0)
    }
}

/// An odd cycle `v0, v1, ..., v(k-1)` witnessing that a graph is not bipartite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycleCertificate {
    pub cycle: Vec<usize>,
}

impl OddCycleCertificate {
    /// Odd length at least 3, distinct vertices, cyclically consecutive vertices adjacent.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 3 || k.is_multiple_of(2) || self.cycle.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = vec![false; g.n()];
        if self.cycle.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
            return false;
        }
        (0..k).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % k]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubdivisionTag {
    Original(usize),
    EdgeVertex(usize, usize),
}

/// Provenance of every vertex of a subdivided graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionMap {
    pub source_n: usize,
    pub tags: Vec<SubdivisionTag>,
}

impl SubdivisionMap {
    /// Vertex id of the subdividing vertex of source edge `{u, v}`.
    pub fn edge_vertex(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.tags[self.source_n..]
            .binary_search_by(|t| match *t {
                SubdivisionTag::EdgeVertex(a, b) => (a, b).cmp(&key),
                SubdivisionTag::Original(_) => std::cmp::Ordering::Less,
            })
            .ok()
            .map(|i| i + self.source_n)
    }

    pub fn is_original(&self, v: usize) -> bool {
        matches!(self.tags[v], SubdivisionTag::Original(_))
    }
}

/// One connected component: the relabeled subgraph and its vertex ids in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[i]` is the parent id of local vertex `i`; ascending.
    pub vertices: Vec<usize>,
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|u| {
            let nb = g.neighbors(u);
            let mut j = 0;
            let mut out = Vec::with_capacity(n - 1 - nb.len());
            for v in 0..n {
                if j < nb.len() && nb[j] == v {
                    j += 1;
                } else if v != u {
                    out.push(v);
                }
            }
            out
        })
        .collect();
    Graph::from_sorted_adj(adj)
}

/// Component id of every vertex plus the component count. Ids are assigned in
/// order of smallest member.
fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..g.n() {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = count;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Components ordered by smallest vertex id, each relabeled `0..|C|` in ascending id order.
pub fn connected_components(g: &Graph) -> Vec<Component> {
    let (label, count) = component_labels(g);
    let mut members = vec![Vec::new(); count];
    for (v, &c) in label.iter().enumerate() {
        members[c].push(v);
    }
    members.into_iter().map(|vertices| Component { graph: g.induced(&vertices), vertices }).collect()
}

/// Proper 2-coloring with the smallest vertex of every component colored 1, or an odd cycle.
pub fn bipartition(g: &Graph) -> Result<TwoColoring, OddCycleCertificate> {
    let n = g.n();
    let mut color = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root] != 0 {
            continue;
        }
        color[root] = 1;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == 0 {
                    color[w] = 3 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Err(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Ok(TwoColoring(color))
}

/// Closes the BFS-tree paths from `u` and `w` (same parity, adjacent) at their
/// lowest common ancestor.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> OddCycleCertificate {
    let (mut a, mut b) = (u, w);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    OddCycleCertificate { cycle: left }
}

/// Subdivides every edge once. Originals keep ids `0..n`; the vertex on edge
/// `{u, v}` gets id `n + k` where `k` is the edge's lexicographic rank.
pub fn subdivide(g: &Graph) -> (Graph, SubdivisionMap) {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut adj = vec![Vec::new(); n + edges.len()];
    let mut tags: Vec<SubdivisionTag> = (0..n).map(SubdivisionTag::Original).collect();
    for (k, &(u, v)) in edges.iter().enumerate() {
        let x = n + k;
        adj[u].push(x);
        adj[v].push(x);
        adj[x] = vec![u, v];
        tags.push(SubdivisionTag::EdgeVertex(u, v));
    }
    // edge vertices were appended in increasing id order, so lists stay sorted
    (Graph::from_sorted_adj(adj), SubdivisionMap { source_n: n, tags })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn new_rejects_bad_edges() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&Graph::complete(2)), Graph::empty(2));
        assert_eq!(complement(&Graph::path(3)), g(3, &[(0, 2)]));
        let h = g(5, &[(0, 3), (1, 2), (2, 4)]);
        assert_eq!(complement(&complement(&h)), h);
    }

    #[test]
    fn components_examples() {
        let c = connected_components(&Graph::complete(2));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].graph, Graph::complete(2));

        let c = connected_components(&Graph::empty(2));
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|c| c.graph == Graph::empty(1)));

        let h = Graph::path(3).disjoint_union(&Graph::complete(2));
        let c = connected_components(&h);
        assert_eq!(c.iter().map(|c| c.graph.n()).collect::<Vec<_>>(), vec![3, 2]);
        assert_eq!(c[1].vertices, vec![3, 4]);
    }

    #[test]
    fn components_are_ordered_by_smallest_vertex() {
        let h = g(5, &[(1, 4), (0, 3)]);
        let c = connected_components(&h);
        let firsts: Vec<usize> = c.iter().map(|c| c.vertices[0]).collect();
        assert_eq!(firsts, vec![0, 1, 2]);
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(bipartition(&Graph::path(3)).unwrap().colors(), &[1, 2, 1]);
        assert_eq!(bipartition(&Graph::empty(2)).unwrap().colors(), &[1, 1]);
        let c5 = Graph::cycle(5);
        let cert = bipartition(&c5).unwrap_err();
        assert_eq!(cert.cycle.len(), 5);
        assert!(cert.verify(&c5));
    }

    #[test]
    fn odd_cycle_inside_larger_graph() {
        // triangle 2-3-4 hanging off a path
        let h = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 5)]);
        let cert = bipartition(&h).unwrap_err();
        assert!(cert.verify(&h));
        assert_eq!(cert.cycle.len(), 3);
    }

    #[test]
    fn subdivide_examples() {
        let (p3, map) = subdivide(&Graph::complete(2));
        assert_eq!(p3, g(3, &[(0, 2), (1, 2)]));
        assert_eq!(map.tags[2], SubdivisionTag::EdgeVertex(0, 1));
        assert_eq!(map.edge_vertex(1, 0), Some(2));

        let (c6, _) = subdivide(&Graph::complete(3));
        assert_eq!(c6.n(), 6);
        assert!(c6.is_connected());
        assert!((0..6).all(|v| c6.degree(v) == 2));

        let (k1, map) = subdivide(&Graph::empty(1));
        assert_eq!(k1, Graph::empty(1));
        assert_eq!(map.tags, vec![SubdivisionTag::Original(0)]);
    }

    #[test]
    fn coloring_permuted_roundtrip() {
        let c = TwoColoring::new(vec![1, 2, 2]).unwrap();
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(c.permuted(&p).colors(), &[2, 2, 1]);
        assert!(TwoColoring::new(vec![0]).is_err());
    }
}
