//! Isomorphism, automorphism and canonical labeling.

mod brute;
mod refine;
mod search;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{connected_components, write_graph6, Component, Graph, TwoColoring};
pub use crate::perm::Permutation;

pub use brute::{brute_force_isomorphic, brute_force_nta, BruteForce, DEFAULT_BRUTE_THRESHOLD};

use refine::Partition;
use search::Mode;

/// Sequence of disjoint, non-empty vertex cells covering `0..n`; order matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Validates and normalizes (each cell sorted ascending).
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for c in &cells {
            if c.is_empty() {
                return Err(Error::InvalidInput("empty cell".into()));
            }
            for &v in c {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidInput(format!("vertex {v} out of range or repeated")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInput(format!("vertex {v} is in no cell")));
        }
        let cells = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(OrderedPartition { cells })
    }

    /// The single-cell partition (empty when `n = 0`).
    pub fn unit(n: usize) -> Self {
        OrderedPartition { cells: if n == 0 { Vec::new() } else { vec![(0..n).collect()] } }
    }

    /// Color-1 cell before color-2 cell; empty classes are dropped.
    pub fn from_coloring(c: &TwoColoring) -> Self {
        let class = |k| (0..c.len()).filter(|&v| c.get(v) == k).collect::<Vec<_>>();
        let cells = [class(1), class(2)].into_iter().filter(|c| !c.is_empty()).collect();
        OrderedPartition { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn n(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Every vertex of cell `i` has the same number of neighbours in cell `j`, for all `i, j`.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        let mut cell_of = vec![0; g.n()];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let counts = |v: usize| {
            let mut k = vec![0usize; self.cells.len()];
            for &w in g.neighbors(v) {
                k[cell_of[w]] += 1;
            }
            k
        };
        self.cells.iter().all(|c| {
            let first = counts(c[0]);
            c[1..].iter().all(|&v| counts(v) == first)
        })
    }

    /// Every cell of `self` lies inside a cell of `coarser`, and cell order is compatible.
    pub fn refines(&self, coarser: &OrderedPartition) -> bool {
        let mut cell_of = vec![usize::MAX; self.n()];
        for (i, c) in coarser.cells.iter().enumerate() {
            for &v in c {
                if v < cell_of.len() {
                    cell_of[v] = i;
                }
            }
        }
        let mut last = 0;
        for c in &self.cells {
            let i = cell_of[c[0]];
            if i < last || c.iter().any(|&v| cell_of[v] != i) {
                return false;
            }
            last = i;
        }
        true
    }

    fn to_partition(&self) -> Partition {
        Partition::from_cells(self.n(), &self.cells)
    }
}

/// A canonical relabeling of a (possibly 2-colored) graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Maps the input graph onto `canon`.
    pub labeling: Permutation,
    pub canon: Graph,
    /// graph6 of `canon`; for colored input followed by `:` and the size of color class 1.
    pub key: String,
}

/// Coarsest equitable partition refining `initial`.
pub fn color_refine(g: &Graph, initial: &OrderedPartition) -> OrderedPartition {
    assert_eq!(initial.n(), g.n(), "partition does not cover the graph");
    let mut p = initial.to_partition();
    p.refine_all(g);
    OrderedPartition { cells: p.cells() }
}

fn initial_partition(g: &Graph, colors: Option<&TwoColoring>) -> Partition {
    let op = match colors {
        Some(c) => {
            assert_eq!(c.len(), g.n(), "coloring length does not match graph");
            OrderedPartition::from_coloring(c)
        }
        None => OrderedPartition::unit(g.n()),
    };
    let mut p = op.to_partition();
    p.refine_all(g);
    p
}

/// Canonical labeling by individualization-refinement: the least graph6 string
/// over the leaves of the search tree. Supplied colors are respected absolutely.
pub fn canonical_form(g: &Graph, colors: Option<&TwoColoring>) -> CanonicalForm {
    let outcome = search::run(g, initial_partition(g, colors), Mode::Canonical);
    let mut img = vec![0; g.n()];
    for (i, &v) in outcome.best_lab.iter().enumerate() {
        img[v] = i;
    }
    let labeling = Permutation::new(img).expect("leaf is a bijection");
    let canon = g.permuted(&labeling);
    let mut key = write_graph6(&canon);
    if let Some(c) = colors {
        let ones = c.colors().iter().filter(|&&x| x == 1).count();
        key.push_str(&format!(":{ones}"));
    }
    CanonicalForm { labeling, canon, key }
}

/// A mapping of `g1` onto `g2`, if the graphs are isomorphic.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<Permutation> {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return None;
    }
    let (c1, c2) = (canonical_form(g1, None), canonical_form(g2, None));
    if c1.key != c2.key {
        return None;
    }
    let phi = c1.labeling.then(&c2.labeling.inverse());
    assert!(phi.is_isomorphism(g1, g2), "composed canonical labelings must be an isomorphism");
    Some(phi)
}

/// A nontrivial automorphism of `g`, if `g` is not asymmetric.
pub fn has_nta(g: &Graph) -> Option<Permutation> {
    find_nta(g, None)
}

/// A nontrivial automorphism `p` with `c[p[v]] = c[v]` for all `v`, if one exists.
/// The coloring need not be proper.
pub fn has_color_preserving_nta(g: &Graph, c: &TwoColoring) -> Option<Permutation> {
    assert_eq!(c.len(), g.n(), "coloring length does not match graph");
    find_nta(g, Some(c))
}

fn find_nta(g: &Graph, colors: Option<&TwoColoring>) -> Option<Permutation> {
    let found =
        if g.is_connected() { find_nta_connected(g, colors) } else { find_nta_by_components(g, colors) };
    if let Some(p) = &found {
        assert!(
            p.is_automorphism(g) && !p.is_identity() && colors.is_none_or(|c| c.is_preserved_by(p)),
            "search returned an invalid automorphism"
        );
    }
    found
}

fn find_nta_connected(g: &Graph, colors: Option<&TwoColoring>) -> Option<Permutation> {
    let root = initial_partition(g, colors);
    if root.is_discrete() {
        return None;
    }
    search::run(g, root, Mode::FindAutomorphism).automorphisms.into_iter().next()
}

/// Aut(g) is nontrivial iff some component has a nontrivial automorphism or two
/// components are isomorphic (colors included).
fn find_nta_by_components(g: &Graph, colors: Option<&TwoColoring>) -> Option<Permutation> {
    let comps = connected_components(g);
    let local_colors = |c: &Component| {
        colors.map(|col| {
            TwoColoring::new(c.vertices.iter().map(|&v| col.get(v)).collect()).expect("valid colors")
        })
    };
    for comp in &comps {
        let lc = local_colors(comp);
        if let Some(p) = find_nta_connected(&comp.graph, lc.as_ref()) {
            return Some(extend_local(g.n(), comp, &p));
        }
    }
    let mut seen: HashMap<String, (usize, Permutation)> = HashMap::new();
    for (i, comp) in comps.iter().enumerate() {
        let lc = local_colors(comp);
        let cf = canonical_form(&comp.graph, lc.as_ref());
        if let Some((j, labeling)) = seen.get(&cf.key) {
            let phi = labeling.then(&cf.labeling.inverse());
            return Some(swap_components(g.n(), &comps[*j], comp, &phi));
        }
        seen.insert(cf.key, (i, cf.labeling));
    }
    None
}

/// Lifts a permutation of a component to the whole graph (identity elsewhere).
pub fn extend_local(n: usize, comp: &Component, local: &Permutation) -> Permutation {
    let mut img: Vec<usize> = (0..n).collect();
    for (i, &v) in comp.vertices.iter().enumerate() {
        img[v] = comp.vertices[local.apply(i)];
    }
    Permutation::new(img).expect("component permutation lifts to a bijection")
}

/// The involution exchanging components `a` and `b` along `phi: a -> b` (local ids).
pub fn swap_components(n: usize, a: &Component, b: &Component, phi: &Permutation) -> Permutation {
    let mut img: Vec<usize> = (0..n).collect();
    for (i, &v) in a.vertices.iter().enumerate() {
        let w = b.vertices[phi.apply(i)];
        img[v] = w;
        img[w] = v;
    }
    Permutation::new(img).expect("component swap is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn tc(c: &[u8]) -> TwoColoring {
        TwoColoring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn refine_examples() {
        let unit = |n| OrderedPartition::unit(n);
        assert_eq!(color_refine(&Graph::cycle(6), &unit(6)).cells().len(), 1);
        assert_eq!(color_refine(&Graph::path(3), &unit(3)).cells(), &[vec![0, 2], vec![1]]);
        let k1k2 = g(3, &[(1, 2)]);
        assert_eq!(color_refine(&k1k2, &unit(3)).cells(), &[vec![0], vec![1, 2]]);
    }

    #[test]
    fn refine_output_is_equitable_and_finer() {
        let h = g(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]);
        let init = OrderedPartition::new(7, vec![vec![6, 5], vec![0, 1, 2, 3, 4]]).unwrap();
        let out = color_refine(&h, &init);
        assert!(out.is_equitable(&h));
        assert!(out.refines(&init));
    }

    #[test]
    fn canonical_form_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(canonical_form(&k3, None).key, "Bw");
        assert_ne!(canonical_form(&Graph::path(3), None).key, canonical_form(&k3, None).key);
        let p3 = Graph::path(3);
        let a = canonical_form(&p3, Some(&tc(&[1, 2, 1])));
        let b = canonical_form(&p3, Some(&tc(&[2, 1, 2])));
        assert_ne!(a.key, b.key);
        assert_eq!(p3.permuted(&a.labeling), a.canon);
    }

    #[test]
    fn colored_keys_separate_equal_graphs() {
        let e2 = Graph::empty(2);
        assert_ne!(canonical_form(&e2, Some(&tc(&[1, 1]))).key, canonical_form(&e2, Some(&tc(&[1, 2]))).key);
    }

    #[test]
    fn isomorphism_examples() {
        let p3b = g(3, &[(0, 2), (1, 2)]);
        let phi = are_isomorphic(&Graph::path(3), &p3b).unwrap();
        assert!(phi.is_isomorphism(&Graph::path(3), &p3b));
        assert!(are_isomorphic(&Graph::path(3), &Graph::complete(3)).is_none());
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(are_isomorphic(&Graph::cycle(6), &two_k3).is_none());
    }

    #[test]
    fn nta_examples() {
        assert_eq!(has_nta(&Graph::complete(2)).unwrap().images(), &[1, 0]);
        assert!(has_nta(&Graph::empty(1)).is_none());
        assert!(has_nta(&Graph::empty(3)).is_some());
        // smallest asymmetric trees have 7 vertices
        let t7 = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        assert!(has_nta(&t7).is_none());
    }

    #[test]
    fn color_preserving_examples() {
        let p = has_color_preserving_nta(&Graph::path(3), &tc(&[1, 2, 1])).unwrap();
        assert_eq!(p.images(), &[2, 1, 0]);
        assert!(has_color_preserving_nta(&Graph::complete(2), &tc(&[1, 2])).is_none());
        assert!(has_color_preserving_nta(&Graph::empty(2), &tc(&[1, 2])).is_none());
        assert_eq!(has_color_preserving_nta(&Graph::empty(2), &tc(&[1, 1])).unwrap().images(), &[1, 0]);
    }

    #[test]
    fn color_preserving_across_components() {
        let t7 = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        let h = t7.disjoint_union(&t7);
        let base = [1, 2, 1, 2, 1, 2, 2];
        let flipped: Vec<u8> = base.iter().map(|c| 3 - c).collect();
        let opposite: Vec<u8> = base.iter().chain(&flipped).copied().collect();
        assert!(has_color_preserving_nta(&h, &tc(&opposite)).is_none());
        let same: Vec<u8> = base.iter().chain(&base).copied().collect();
        let p = has_color_preserving_nta(&h, &tc(&same)).unwrap();
        assert!(p.is_automorphism(&h));
        assert_eq!(p.apply(0), 7);
    }
}
