//! Individualization-refinement search tree.
//!
//! Children of a node are the vertices of its target cell, in ascending order,
//! so the leftmost path is the "first path". A leaf whose relabeled graph equals
//! the first leaf's yields an automorphism that maps the first path onto the
//! current one; the subtree hanging off the divergence point is then an image of
//! an already explored subtree and is abandoned. Automorphisms fixing the current
//! path pointwise also prune children lying in the orbit of an explored child.

use std::cmp::Ordering;

use crate::graph::Graph;
use crate::perm::Permutation;

use super::refine::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Visit every leaf up to automorphism pruning; keep the least one.
    Canonical,
    /// Stop at the first nontrivial automorphism.
    FindAutomorphism,
}

enum Flow {
    Continue,
    /// Unwind to the first-path node at this depth.
    AbortTo(usize),
    Stop,
}

pub(crate) struct Outcome {
    pub best_lab: Vec<usize>,
    pub automorphisms: Vec<Permutation>,
}

/// Edge positions of the relabeled graph in graph6 bit order, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
struct LeafKey(Vec<u64>);

impl LeafKey {
    fn of(g: &Graph, lab: &[usize]) -> Self {
        let mut label = vec![0usize; lab.len()];
        for (i, &v) in lab.iter().enumerate() {
            label[v] = i;
        }
        let mut bits: Vec<u64> = g
            .edges()
            .map(|(u, v)| {
                let (i, j) = (label[u].min(label[v]) as u64, label[u].max(label[v]) as u64);
                j * (j - 1) / 2 + i
            })
            .collect();
        bits.sort_unstable();
        LeafKey(bits)
    }
}

impl Ord for LeafKey {
    /// Order of the graph6 strings: at the first differing bit position the
    /// key holding the set bit is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            if a != b {
                return b.cmp(a);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for LeafKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Search<'a> {
    g: &'a Graph,
    mode: Mode,
    first_lab: Option<Vec<usize>>,
    first_key: Option<LeafKey>,
    first_shapes: Vec<Vec<usize>>,
    best_lab: Vec<usize>,
    best_key: Option<LeafKey>,
    automorphisms: Vec<Permutation>,
}

/// Runs the search from an already equitable partition.
pub(crate) fn run(g: &Graph, root: Partition, mode: Mode) -> Outcome {
    let mut s = Search {
        g,
        mode,
        first_lab: None,
        first_key: None,
        first_shapes: Vec::new(),
        best_lab: Vec::new(),
        best_key: None,
        automorphisms: Vec::new(),
    };
    let mut path = Vec::new();
    s.explore(&root, &mut path, None);
    Outcome { best_lab: s.best_lab, automorphisms: s.automorphisms }
}

/// The automorphism sending `from[k]` to `to[k]`, if it is one.
fn leaf_map(g: &Graph, from: &[usize], to: &[usize]) -> Option<Permutation> {
    let mut img = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        img[a] = b;
    }
    let p = Permutation::new(img).expect("leaf labels are bijections");
    p.is_automorphism(g).then_some(p)
}

struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl Search<'_> {
    fn explore(&mut self, part: &Partition, path: &mut Vec<usize>, diverge: Option<usize>) -> Flow {
        let depth = path.len();
        if diverge.is_none() {
            self.first_shapes.push(part.shape());
        } else if self.mode == Mode::FindAutomorphism && self.first_shapes[depth] != part.shape() {
            return Flow::Continue;
        }
        let Some((start, _)) = part.target_cell() else {
            return self.leaf(&part.lab, diverge);
        };
        let candidates: Vec<usize> = {
            let mut c = part.cell_members(start).to_vec();
            c.sort_unstable();
            c
        };

        let mut explored: Vec<usize> = Vec::new();
        let mut orbits = Orbits::new(part.n());
        let mut absorbed = 0;
        for &w in &candidates {
            // fold in automorphisms found since the last child that fix the path
            while absorbed < self.automorphisms.len() {
                let gamma = &self.automorphisms[absorbed];
                if path.iter().all(|&v| gamma.apply(v) == v) {
                    for v in 0..part.n() {
                        orbits.union(v, gamma.apply(v));
                    }
                }
                absorbed += 1;
            }
            if !explored.is_empty() {
                let r = orbits.find(w);
                if explored.iter().any(|&e| orbits.find(e) == r) {
                    continue;
                }
            }

            let child_diverge = match diverge {
                Some(l) => Some(l),
                None if explored.is_empty() => None,
                None => Some(depth),
            };
            let mut child = part.clone();
            let s = child.individualize(w);
            child.refine(self.g, [s]);
            path.push(w);
            let flow = self.explore(&child, path, child_diverge);
            path.pop();
            explored.push(w);
            match flow {
                Flow::Continue => {}
                Flow::AbortTo(l) if l == depth => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self, lab: &[usize], diverge: Option<usize>) -> Flow {
        let Some(first) = &self.first_lab else {
            self.first_lab = Some(lab.to_vec());
            self.best_lab = lab.to_vec();
            if self.mode == Mode::Canonical {
                let key = LeafKey::of(self.g, lab);
                self.first_key = Some(key.clone());
                self.best_key = Some(key);
            }
            return Flow::Continue;
        };
        let diverge = diverge.expect("only the first leaf lies on the first path");
        match self.mode {
            Mode::FindAutomorphism => match leaf_map(self.g, first, lab) {
                Some(gamma) => {
                    self.automorphisms.push(gamma);
                    Flow::Stop
                }
                None => Flow::Continue,
            },
            Mode::Canonical => {
                let key = LeafKey::of(self.g, lab);
                if Some(&key) == self.first_key.as_ref() {
                    let gamma = leaf_map(self.g, first, lab).expect("equal leaf graphs give an automorphism");
                    self.automorphisms.push(gamma);
                    return Flow::AbortTo(diverge);
                }
                let best = self.best_key.as_ref().expect("best set with first leaf");
                match key.cmp(best) {
                    Ordering::Less => {
                        self.best_key = Some(key);
                        self.best_lab = lab.to_vec();
                    }
                    Ordering::Equal => {
                        let gamma = leaf_map(self.g, &self.best_lab, lab)
                            .expect("equal leaf graphs give an automorphism");
                        self.automorphisms.push(gamma);
                    }
                    Ordering::Greater => {}
                }
                Flow::Continue
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_key_order_matches_graph6_order() {
        use crate::graph::write_graph6;
        let g = Graph::path(4);
        let labs = [vec![0, 1, 2, 3], vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![3, 1, 0, 2]];
        for a in &labs {
            for b in &labs {
                let relabel = |lab: &[usize]| {
                    let mut img = vec![0; lab.len()];
                    for (i, &v) in lab.iter().enumerate() {
                        img[v] = i;
                    }
                    write_graph6(&g.permuted(&Permutation::new(img).unwrap()))
                };
                assert_eq!(
                    LeafKey::of(&g, a).cmp(&LeafKey::of(&g, b)),
                    relabel(a).cmp(&relabel(b)),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }
}
