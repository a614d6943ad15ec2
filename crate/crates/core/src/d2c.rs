//! Decision procedure for "does `g` have a proper distinguishing 2-coloring".
//!
//! A graph qualifies iff it is bipartite and, for every component `C`:
//! `C` alone qualifies, `C` is isomorphic to at most one other component,
//! and if it has such a twin then `C` is asymmetric. Connected components are
//! checked through their unique 2-coloring; twins are found by canonical
//! labeling.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, connected_components, Component, Graph, OddCycleCertificate, TwoColoring};
use crate::iso::{
    are_isomorphic, canonical_form, extend_local, has_color_preserving_nta, has_nta, swap_components,
};
use crate::perm::{write_int_list, Permutation};

/// Why a graph has no proper distinguishing 2-coloring. Every permutation is
/// an automorphism of the whole input graph, in its vertex ids; component
/// indices follow [`connected_components`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason")]
pub enum NoReason {
    NonBipartite {
        certificate: OddCycleCertificate,
    },
    /// `nta` moves only vertices of the component and preserves its 2-coloring.
    ComponentNotDistinguishable {
        component_index: usize,
        nta: Permutation,
    },
    /// `isomorphisms[k]` swaps component 0 of the triple with component `k + 1`.
    ThreeIsomorphicComponents {
        component_indices: [usize; 3],
        isomorphisms: [Permutation; 2],
    },
    /// `iso` swaps the two components; `nta` is supported on the first one.
    IsomorphicPairNotAsymmetric {
        component_indices: [usize; 2],
        iso: Permutation,
        nta: Permutation,
    },
}

impl NoReason {
    pub fn name(&self) -> &'static str {
        match self {
            NoReason::NonBipartite { .. } => "NonBipartite",
            NoReason::ComponentNotDistinguishable { .. } => "ComponentNotDistinguishable",
            NoReason::ThreeIsomorphicComponents { .. } => "ThreeIsomorphicComponents",
            NoReason::IsomorphicPairNotAsymmetric { .. } => "IsomorphicPairNotAsymmetric",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "UPPERCASE")]
pub enum D2cVerdict {
    Yes { witness: TwoColoring },
    No(NoReason),
}

impl D2cVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, D2cVerdict::Yes { .. })
    }
}

impl fmt::Display for D2cVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D2cVerdict::Yes { witness } => write!(f, "YES witness={witness}"),
            D2cVerdict::No(reason) => {
                write!(f, "NO {}", reason.name())?;
                match reason {
                    NoReason::NonBipartite { certificate } => {
                        f.write_str(" cycle=")?;
                        write_int_list(f, &certificate.cycle)
                    }
                    NoReason::ComponentNotDistinguishable { nta, .. } => write!(f, " nta={nta}"),
                    NoReason::ThreeIsomorphicComponents { component_indices, isomorphisms } => {
                        f.write_str(" components=")?;
                        write_int_list(f, component_indices)?;
                        write!(f, " isos=[{},{}]", isomorphisms[0], isomorphisms[1])
                    }
                    NoReason::IsomorphicPairNotAsymmetric { component_indices, iso, nta } => {
                        f.write_str(" components=")?;
                        write_int_list(f, component_indices)?;
                        write!(f, " iso={iso} nta={nta}")
                    }
                }
            }
        }
    }
}

/// For connected `g`: a nontrivial automorphism preserving its 2-coloring, or
/// `None` when `g` has a proper distinguishing 2-coloring. `g` must be bipartite.
pub fn cc_check(g: &Graph) -> Result<Option<Permutation>> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::InvalidInput("cc_check needs a non-empty connected graph".into()));
    }
    if g.n() == 1 {
        return Ok(None);
    }
    let coloring =
        bipartition(g).map_err(|_| Error::InvalidInput("cc_check needs a bipartite graph".into()))?;
    Ok(has_color_preserving_nta(g, &coloring))
}

pub fn decide_d2c(g: &Graph) -> Result<D2cVerdict> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    let verdict = decide_unchecked(g)?;
    if !verify_verdict(g, &verdict)? {
        return Err(Error::Internal(format!("certificate failed re-verification: {verdict}")));
    }
    Ok(verdict)
}

fn decide_unchecked(g: &Graph) -> Result<D2cVerdict> {
    if let Err(certificate) = bipartition(g) {
        return Ok(D2cVerdict::No(NoReason::NonBipartite { certificate }));
    }
    let comps = connected_components(g);
    for (i, comp) in comps.iter().enumerate() {
        if let Some(local) = cc_check(&comp.graph)? {
            let nta = extend_local(g.n(), comp, &local);
            return Ok(D2cVerdict::No(NoReason::ComponentNotDistinguishable { component_index: i, nta }));
        }
    }

    let classes = isomorphism_classes(&comps);
    if let Some(class) = classes.iter().find(|c| c.members.len() >= 3) {
        let [a, b, c] = [class.members[0], class.members[1], class.members[2]];
        let isomorphisms = [class.swap(g.n(), &comps, 0, 1), class.swap(g.n(), &comps, 0, 2)];
        return Ok(D2cVerdict::No(NoReason::ThreeIsomorphicComponents {
            component_indices: [a, b, c],
            isomorphisms,
        }));
    }
    for class in classes.iter().filter(|c| c.members.len() == 2) {
        let a = class.members[0];
        if let Some(local) = has_nta(&comps[a].graph) {
            return Ok(D2cVerdict::No(NoReason::IsomorphicPairNotAsymmetric {
                component_indices: [a, class.members[1]],
                iso: class.swap(g.n(), &comps, 0, 1),
                nta: extend_local(g.n(), &comps[a], &local),
            }));
        }
    }

    let witness = witness_from_classes(g, &comps, &classes);
    Ok(D2cVerdict::Yes { witness })
}

/// Components grouped by canonical form, classes ordered by first member.
struct IsoClass {
    members: Vec<usize>,
    /// Canonical labeling of each member, parallel to `members`.
    labelings: Vec<Permutation>,
}

impl IsoClass {
    /// Local isomorphism from member `i` to member `j`.
    fn local_iso(&self, i: usize, j: usize) -> Permutation {
        self.labelings[i].then(&self.labelings[j].inverse())
    }

    fn swap(&self, n: usize, comps: &[Component], i: usize, j: usize) -> Permutation {
        let phi = self.local_iso(i, j);
        swap_components(n, &comps[self.members[i]], &comps[self.members[j]], &phi)
    }
}

fn isomorphism_classes(comps: &[Component]) -> Vec<IsoClass> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut classes: Vec<IsoClass> = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        let cf = canonical_form(&comp.graph, None);
        let k = *index.entry(cf.key).or_insert_with(|| {
            classes.push(IsoClass { members: Vec::new(), labelings: Vec::new() });
            classes.len() - 1
        });
        classes[k].members.push(i);
        classes[k].labelings.push(cf.labeling);
    }
    classes
}

/// Bipartition coloring everywhere, except that the second member of each twin
/// pair is colored opposite to the first along the isomorphism between them.
fn witness_from_classes(g: &Graph, comps: &[Component], classes: &[IsoClass]) -> TwoColoring {
    let mut c = bipartition(g).expect("checked bipartite");
    for class in classes.iter().filter(|c| c.members.len() == 2) {
        let phi = class.local_iso(0, 1);
        let (a, b) = (&comps[class.members[0]], &comps[class.members[1]]);
        for (i, &v) in a.vertices.iter().enumerate() {
            c.set(b.vertices[phi.apply(i)], 3 - c.get(v));
        }
    }
    c
}

/// Builds the witness coloring for a graph known to qualify. `classes` lists
/// component indices grouped into isomorphism classes; the preconditions are
/// re-checked and violations rejected.
pub fn build_witness_coloring(
    g: &Graph,
    components: &[Component],
    classes: &[Vec<usize>],
) -> Result<TwoColoring> {
    let reject = |msg: String| Err(Error::InvalidInput(format!("witness preconditions: {msg}")));
    if bipartition(g).is_err() {
        return reject("graph is not bipartite".into());
    }
    let mut covered = vec![false; components.len()];
    let mut iso_classes = Vec::new();
    for class in classes {
        if class.is_empty() || class.len() > 2 {
            return reject(format!("class {class:?} must have one or two members"));
        }
        for &i in class {
            if i >= components.len() || std::mem::replace(&mut covered[i], true) {
                return reject(format!("component {i} missing or listed twice"));
            }
            if cc_check(&components[i].graph)?.is_some() {
                return reject(format!("component {i} has no distinguishing 2-coloring"));
            }
        }
        let first = &components[class[0]].graph;
        let mut labelings = vec![Permutation::identity(first.n())];
        if let [_, j] = class[..] {
            let Some(phi) = are_isomorphic(first, &components[j].graph) else {
                return reject(format!("components {} and {j} are not isomorphic", class[0]));
            };
            if has_nta(first).is_some() {
                return reject(format!("paired component {} is not asymmetric", class[0]));
            }
            // so that local_iso(0, 1) == phi
            labelings.push(phi.inverse());
        }
        iso_classes.push(IsoClass { members: class.clone(), labelings });
    }
    if covered.iter().any(|c| !c) {
        return reject("not every component is classified".into());
    }
    let witness = witness_from_classes(g, components, &iso_classes);
    if !verify_distinguishing(g, &witness)? {
        return Err(Error::Internal(format!("witness {witness} is not distinguishing")));
    }
    Ok(witness)
}

/// True iff `c` is proper on `g` and preserved by no nontrivial automorphism.
pub fn verify_distinguishing(g: &Graph, c: &TwoColoring) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "coloring has {} entries, graph has {} vertices",
            c.len(),
            g.n()
        )));
    }
    Ok(c.is_proper(g) && has_color_preserving_nta(g, c).is_none())
}

fn moves_only(p: &Permutation, comp: &Component, n: usize) -> bool {
    let mut inside = vec![false; n];
    for &v in &comp.vertices {
        inside[v] = true;
    }
    (0..n).all(|v| inside[v] || p.apply(v) == v)
}

fn maps_onto(p: &Permutation, from: &Component, to: &Component) -> bool {
    let mut target = to.vertices.clone();
    let mut image: Vec<usize> = from.vertices.iter().map(|&v| p.apply(v)).collect();
    target.sort_unstable();
    image.sort_unstable();
    image == target
}

/// Structural re-check of a verdict's certificate against `g`.
pub fn verify_verdict(g: &Graph, verdict: &D2cVerdict) -> Result<bool> {
    let n = g.n();
    let is_aut = |p: &Permutation| p.len() == n && p.is_automorphism(g);
    let reason = match verdict {
        D2cVerdict::Yes { witness } => return verify_distinguishing(g, witness),
        D2cVerdict::No(r) => r,
    };
    if let NoReason::NonBipartite { certificate } = reason {
        return Ok(certificate.verify(g));
    }
    let comps = connected_components(g);
    let comp = |i: usize| comps.get(i);
    Ok(match reason {
        NoReason::NonBipartite { .. } => unreachable!(),
        NoReason::ComponentNotDistinguishable { component_index, nta } => {
            let Some(c) = comp(*component_index) else { return Ok(false) };
            let coloring = bipartition(g).ok();
            is_aut(nta)
                && !nta.is_identity()
                && moves_only(nta, c, n)
                && coloring.is_some_and(|col| col.is_preserved_by(nta))
        }
        NoReason::ThreeIsomorphicComponents { component_indices: [a, b, c], isomorphisms } => {
            let (Some(ca), Some(cb), Some(cc)) = (comp(*a), comp(*b), comp(*c)) else { return Ok(false) };
            a != b
                && b != c
                && a != c
                && is_aut(&isomorphisms[0])
                && is_aut(&isomorphisms[1])
                && maps_onto(&isomorphisms[0], ca, cb)
                && maps_onto(&isomorphisms[1], ca, cc)
        }
        NoReason::IsomorphicPairNotAsymmetric { component_indices: [a, b], iso, nta } => {
            let (Some(ca), Some(cb)) = (comp(*a), comp(*b)) else { return Ok(false) };
            a != b
                && is_aut(iso)
                && maps_onto(iso, ca, cb)
                && is_aut(nta)
                && !nta.is_identity()
                && moves_only(nta, ca, n)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn reason(v: &D2cVerdict) -> &'static str {
        match v {
            D2cVerdict::Yes { .. } => "Yes",
            D2cVerdict::No(r) => r.name(),
        }
    }

    fn asym_tree() -> Graph {
        g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])
    }

    #[test]
    fn cc_check_examples() {
        assert_eq!(cc_check(&Graph::complete(2)).unwrap(), None);
        assert_eq!(cc_check(&Graph::path(3)).unwrap().unwrap().images(), &[2, 1, 0]);
        let rot = cc_check(&Graph::cycle(6)).unwrap().unwrap();
        assert!(rot.is_automorphism(&Graph::cycle(6)));
        assert!((0..6).all(|v| (rot.apply(v) + v).is_multiple_of(2)));
        assert_eq!(cc_check(&Graph::empty(1)).unwrap(), None);
        assert!(cc_check(&Graph::cycle(5)).is_err());
        assert!(cc_check(&Graph::empty(2)).is_err());
    }

    #[test]
    fn decide_examples() {
        let yes = |h: &Graph| match decide_d2c(h).unwrap() {
            D2cVerdict::Yes { witness } => witness.colors().to_vec(),
            other => panic!("expected YES, got {other}"),
        };
        assert_eq!(yes(&Graph::empty(1)), vec![1]);
        assert_eq!(yes(&Graph::empty(2)), vec![1, 2]);
        assert_eq!(yes(&Graph::complete(2)), vec![1, 2]);

        assert_eq!(reason(&decide_d2c(&Graph::empty(3)).unwrap()), "ThreeIsomorphicComponents");
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(reason(&decide_d2c(&two_k2).unwrap()), "IsomorphicPairNotAsymmetric");
        assert_eq!(reason(&decide_d2c(&Graph::cycle(5)).unwrap()), "NonBipartite");
        let p3 = decide_d2c(&Graph::path(3)).unwrap();
        assert_eq!(p3.to_string(), "NO ComponentNotDistinguishable nta=[2,1,0]");
        assert!(decide_d2c(&Graph::empty(0)).is_err());
    }

    #[test]
    fn twin_asymmetric_components_get_opposite_colors() {
        let t = asym_tree();
        let h = t.disjoint_union(&t);
        let D2cVerdict::Yes { witness } = decide_d2c(&h).unwrap() else { panic!("expected YES") };
        for v in 0..7 {
            assert_ne!(witness.get(v), witness.get(v + 7));
        }
        assert!(verify_distinguishing(&h, &witness).unwrap());
        // a third copy breaks it
        let h3 = h.disjoint_union(&t);
        assert_eq!(reason(&decide_d2c(&h3).unwrap()), "ThreeIsomorphicComponents");
    }

    #[test]
    fn build_witness_examples() {
        let h = Graph::empty(2);
        let comps = connected_components(&h);
        assert_eq!(build_witness_coloring(&h, &comps, &[vec![0, 1]]).unwrap().colors(), &[1, 2]);
        assert!(build_witness_coloring(&h, &comps, &[vec![0], vec![1]]).is_err());

        let t = asym_tree();
        let comps = connected_components(&t);
        assert_eq!(build_witness_coloring(&t, &comps, &[vec![0]]).unwrap(), bipartition(&t).unwrap());

        let p3 = Graph::path(3);
        assert!(build_witness_coloring(&p3, &connected_components(&p3), &[vec![0]]).is_err());
    }

    #[test]
    fn verify_distinguishing_examples() {
        let tc = |c: &[u8]| TwoColoring::new(c.to_vec()).unwrap();
        assert!(verify_distinguishing(&Graph::complete(2), &tc(&[1, 2])).unwrap());
        assert!(!verify_distinguishing(&Graph::path(3), &tc(&[1, 2, 1])).unwrap());
        assert!(!verify_distinguishing(&Graph::complete(2), &tc(&[1, 1])).unwrap());
        assert!(verify_distinguishing(&Graph::complete(2), &tc(&[1])).is_err());
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let mut v = decide_d2c(&two_k2).unwrap();
        assert!(verify_verdict(&two_k2, &v).unwrap());
        if let D2cVerdict::No(NoReason::IsomorphicPairNotAsymmetric { nta, .. }) = &mut v {
            *nta = Permutation::identity(4);
        }
        assert!(!verify_verdict(&two_k2, &v).unwrap());
    }
}
