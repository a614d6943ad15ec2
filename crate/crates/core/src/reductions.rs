//! Many-one reductions between "has a nontrivial automorphism" (GA) and
//! "connected graph whose distinguishing chromatic number exceeds 2" (CC),
//! plus the certificate maps that carry automorphisms across them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, complement, subdivide, Graph, SubdivisionMap, SubdivisionTag};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GaToCcCase {
    /// The (possibly complemented) input is K1; output is K1.
    K1,
    Subdivided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaToCc {
    pub graph: Graph,
    pub map: Option<SubdivisionMap>,
    /// The input was disconnected and was replaced by its complement first.
    pub complemented: bool,
    pub case: GaToCcCase,
}

/// Output is connected, and has distinguishing chromatic number above 2 iff
/// `g` has a nontrivial automorphism.
pub fn ga_to_cc(g: &Graph) -> Result<GaToCc> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    let complemented = !g.is_connected();
    let h = if complemented { complement(g) } else { g.clone() };
    if h.n() == 1 {
        return Ok(GaToCc { graph: h, map: None, complemented, case: GaToCcCase::K1 });
    }
    let (graph, map) = subdivide(&h);
    Ok(GaToCc { graph, map: Some(map), complemented, case: GaToCcCase::Subdivided })
}

impl SubdivisionMap {
    pub fn source_graph(&self) -> Graph {
        let edges = self.tags[self.source_n..].iter().map(|t| match *t {
            SubdivisionTag::EdgeVertex(u, v) => (u, v),
            SubdivisionTag::Original(_) => unreachable!("originals precede edge vertices"),
        });
        Graph::new(self.source_n, edges).expect("map edges are a simple graph")
    }

    pub fn subdivided_graph(&self) -> Graph {
        subdivide(&self.source_graph()).0
    }
}

/// Extends an automorphism `f` of the source graph to the subdivided graph:
/// originals follow `f`, the vertex on `{u, v}` goes to the vertex on `{f(u), f(v)}`.
pub fn lift_nta_to_subdivision(f: &Permutation, m: &SubdivisionMap) -> Result<Permutation> {
    let source = m.source_graph();
    if f.len() != source.n() || !f.is_automorphism(&source) {
        return Err(Error::NotAutomorphism(format!("{f} is not an automorphism of the source graph")));
    }
    let img = m
        .tags
        .iter()
        .map(|t| match *t {
            SubdivisionTag::Original(v) => Ok(f.apply(v)),
            SubdivisionTag::EdgeVertex(u, v) => m
                .edge_vertex(f.apply(u), f.apply(v))
                .ok_or_else(|| Error::Internal(format!("no image for edge vertex {{{u},{v}}}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let lifted = Permutation::new(img)?;
    let sub = m.subdivided_graph();
    let keeps_sides = (0..m.tags.len()).all(|v| m.is_original(v) == m.is_original(lifted.apply(v)));
    if !lifted.is_automorphism(&sub) || !keeps_sides {
        return Err(Error::Internal(format!("lifted map {lifted} is not a side-preserving automorphism")));
    }
    Ok(lifted)
}

/// Restricts an automorphism of the subdivided graph to the original vertices.
/// Fails with [`Error::CycleCase`] if some original is sent to an edge vertex,
/// which can only happen when the source is a chordless cycle.
pub fn restrict_nta_from_subdivision(f_prime: &Permutation, m: &SubdivisionMap) -> Result<Permutation> {
    let sub = m.subdivided_graph();
    if f_prime.len() != sub.n() || !f_prime.is_automorphism(&sub) {
        return Err(Error::NotAutomorphism(format!(
            "{f_prime} is not an automorphism of the subdivided graph"
        )));
    }
    if let Some(v) = (0..m.source_n).find(|&v| !m.is_original(f_prime.apply(v))) {
        return Err(Error::CycleCase(format!(
            "original vertex {v} is mapped to edge vertex {}; the source is a chordless cycle",
            f_prime.apply(v)
        )));
    }
    let f = Permutation::new((0..m.source_n).map(|v| f_prime.apply(v)).collect())?;
    if !f.is_automorphism(&m.source_graph()) {
        return Err(Error::Internal(format!("restriction {f} is not an automorphism")));
    }
    Ok(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CcToGaCase {
    K1OrK2,
    NonBipartite,
    Unbalanced,
    Balanced,
}

impl CcToGaCase {
    pub fn tag(self) -> &'static str {
        match self {
            CcToGaCase::K1OrK2 => "K1_OR_K2",
            CcToGaCase::NonBipartite => "NON_BIPARTITE",
            CcToGaCase::Unbalanced => "UNBALANCED",
            CcToGaCase::Balanced => "BALANCED",
        }
    }
}

impl GaToCcCase {
    pub fn tag(self) -> &'static str {
        match self {
            GaToCcCase::K1 => "K1",
            GaToCcCase::Subdivided => "SUBDIVIDED",
        }
    }
}

/// The three vertices added to a balanced bipartite graph: `a` sees all of
/// `x` and `b`, `b` sees `a` and `c`, `c` is a leaf on `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub source_n: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// The bipartition class `a` is attached to: the class of vertex 0.
    pub x: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcToGa {
    pub graph: Graph,
    pub gadget: Option<GadgetMap>,
    pub case: CcToGaCase,
}

/// For connected `g`: the output has a nontrivial automorphism iff `g` has
/// distinguishing chromatic number above 2.
pub fn cc_to_ga(g: &Graph) -> Result<CcToGa> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("input must be connected".into()));
    }
    if n <= 2 {
        return Ok(CcToGa { graph: Graph::empty(1), gadget: None, case: CcToGaCase::K1OrK2 });
    }
    let Ok(coloring) = bipartition(g) else {
        return Ok(CcToGa { graph: Graph::complete(2), gadget: None, case: CcToGaCase::NonBipartite });
    };
    let x: Vec<usize> = (0..n).filter(|&v| coloring.get(v) == coloring.get(0)).collect();
    if 2 * x.len() != n {
        return Ok(CcToGa { graph: g.clone(), gadget: None, case: CcToGaCase::Unbalanced });
    }
    let (a, b, c) = (n, n + 1, n + 2);
    let edges = g.edges().chain(x.iter().map(|&v| (v, a))).chain([(a, b), (b, c)]);
    let graph = Graph::new(n + 3, edges)?;
    Ok(CcToGa { graph, gadget: Some(GadgetMap { source_n: n, a, b, c, x }), case: CcToGaCase::Balanced })
}

/// Restricts an automorphism of the gadget graph to the source graph. The
/// gadget vertices are always fixed; anything else is a consistency failure.
pub fn restrict_gadget_nta(f: &Permutation, gadget: &Graph, m: &GadgetMap) -> Result<Permutation> {
    if f.len() != gadget.n() || !f.is_automorphism(gadget) {
        return Err(Error::NotAutomorphism(format!("{f} is not an automorphism of the gadget graph")));
    }
    for v in [m.a, m.b, m.c] {
        if f.apply(v) != v {
            return Err(Error::Internal(format!("automorphism {f} moves gadget vertex {v}")));
        }
    }
    let restricted = Permutation::new((0..m.source_n).map(|v| f.apply(v)).collect())?;
    let source = gadget.induced(&(0..m.source_n).collect::<Vec<_>>());
    let mut in_x = vec![false; m.source_n];
    for &v in &m.x {
        in_x[v] = true;
    }
    let keeps_classes = (0..m.source_n).all(|v| in_x[v] == in_x[restricted.apply(v)]);
    if !restricted.is_automorphism(&source) || !keeps_classes {
        return Err(Error::Internal(format!("restriction {restricted} does not preserve the 2-coloring")));
    }
    Ok(restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{brute_force_nta, BruteForce};
    use crate::oracle::brute_chi_d_le_2;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ga_to_cc_examples() {
        let r = ga_to_cc(&Graph::complete(2)).unwrap();
        assert_eq!(r.graph, g(3, &[(0, 2), (1, 2)]));
        assert!(!brute_chi_d_le_2(&r.graph).unwrap());

        let r = ga_to_cc(&Graph::empty(2)).unwrap();
        assert!(r.complemented);
        assert_eq!(r.case, GaToCcCase::Subdivided);
        assert!(!brute_chi_d_le_2(&r.graph).unwrap());

        let r = ga_to_cc(&Graph::empty(1)).unwrap();
        assert_eq!((r.graph.n(), r.case), (1, GaToCcCase::K1));
        assert!(brute_chi_d_le_2(&r.graph).unwrap());

        assert!(ga_to_cc(&Graph::empty(0)).is_err());
    }

    #[test]
    fn lift_examples() {
        let (_, m) = subdivide(&Graph::complete(2));
        assert_eq!(lift_nta_to_subdivision(&perm(&[1, 0]), &m).unwrap().images(), &[1, 0, 2]);
        assert!(lift_nta_to_subdivision(&Permutation::identity(2), &m).unwrap().is_identity());

        let (c6, m) = subdivide(&Graph::complete(3));
        let f = lift_nta_to_subdivision(&perm(&[1, 2, 0]), &m).unwrap();
        assert!(f.is_automorphism(&c6));
        assert!(f.then(&f).then(&f).is_identity() && !f.is_identity());

        assert!(matches!(
            lift_nta_to_subdivision(&perm(&[1, 0, 2]), &subdivide(&Graph::path(3)).1),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn restrict_examples() {
        let (_, m) = subdivide(&Graph::complete(2));
        assert_eq!(restrict_nta_from_subdivision(&perm(&[1, 0, 2]), &m).unwrap().images(), &[1, 0]);
        assert!(restrict_nta_from_subdivision(&Permutation::identity(3), &m).unwrap().is_identity());

        // K3 subdivided: 0 - 3 - 1 - 5 - 2 - 4 - 0; rotate one step along that cycle
        let (c6, m) = subdivide(&Graph::complete(3));
        let order = [0, 3, 1, 5, 2, 4];
        let mut img = vec![0; 6];
        for i in 0..6 {
            img[order[i]] = order[(i + 1) % 6];
        }
        let rot = perm(&img);
        assert!(rot.is_automorphism(&c6));
        assert!(matches!(restrict_nta_from_subdivision(&rot, &m), Err(Error::CycleCase(_))));
    }

    #[test]
    fn cc_to_ga_examples() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = cc_to_ga(&star).unwrap();
        assert_eq!((r.case, &r.graph), (CcToGaCase::Unbalanced, &star));
        assert!(!brute_chi_d_le_2(&star).unwrap());
        assert!(brute_force_nta(&r.graph).unwrap().is_some());

        let r = cc_to_ga(&Graph::path(4)).unwrap();
        assert_eq!((r.case, r.graph.n()), (CcToGaCase::Balanced, 7));
        assert!(brute_chi_d_le_2(&Graph::path(4)).unwrap());
        assert!(brute_force_nta(&r.graph).unwrap().is_none());

        let r = cc_to_ga(&Graph::cycle(6)).unwrap();
        assert_eq!((r.case, r.graph.n()), (CcToGaCase::Balanced, 9));
        assert!(brute_force_nta(&r.graph).unwrap().is_some());

        assert_eq!(cc_to_ga(&Graph::complete(2)).unwrap().case, CcToGaCase::K1OrK2);
        assert_eq!(cc_to_ga(&Graph::cycle(5)).unwrap().case, CcToGaCase::NonBipartite);
        assert!(cc_to_ga(&Graph::empty(2)).is_err());
    }

    #[test]
    fn gadget_structure() {
        let r = cc_to_ga(&Graph::path(4)).unwrap();
        let m = r.gadget.unwrap();
        assert_eq!(m.x, vec![0, 2]);
        assert_eq!(r.graph.neighbors(m.a), &[0, 2, 5]);
        assert_eq!(r.graph.neighbors(m.b), &[4, 6]);
        assert_eq!(r.graph.neighbors(m.c), &[5]);
    }

    #[test]
    fn restrict_gadget_examples() {
        let c6 = Graph::cycle(6);
        let r = cc_to_ga(&c6).unwrap();
        let m = r.gadget.as_ref().unwrap();
        let rot2 = [2, 3, 4, 5, 0, 1, 6, 7, 8];
        let f = restrict_gadget_nta(&perm(&rot2), &r.graph, m).unwrap();
        assert_eq!(f.images(), &[2, 3, 4, 5, 0, 1]);
        assert!(restrict_gadget_nta(&Permutation::identity(9), &r.graph, m).unwrap().is_identity());

        let r = cc_to_ga(&Graph::path(4)).unwrap();
        let auts = BruteForce::default().automorphisms(&r.graph).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(restrict_gadget_nta(&auts[0], &r.graph, r.gadget.as_ref().unwrap()).unwrap().is_identity());
    }
}
