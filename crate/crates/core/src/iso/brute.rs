//! Exhaustive permutation scans used as test oracles for the search engine.
//!
//! Permutations are enumerated in lexicographic order of their image
//! sequence. A prefix is abandoned as soon as it maps an adjacent pair to a
//! non-adjacent one (or vice versa); no completion of such a prefix can be an
//! isomorphism, so the scan stays exhaustive.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

pub const DEFAULT_BRUTE_THRESHOLD: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForce {
    pub threshold: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { threshold: DEFAULT_BRUTE_THRESHOLD }
    }
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

struct Scan<'a> {
    from: &'a [Vec<bool>],
    to: &'a [Vec<bool>],
    img: Vec<usize>,
    used: Vec<bool>,
}

impl Scan<'_> {
    /// Calls `visit` on every complete isomorphism; stops when it returns true.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.from.len();
        if depth == n {
            return visit(&self.img);
        }
        for y in 0..n {
            if self.used[y] {
                continue;
            }
            if (0..depth).any(|x| self.from[x][depth] != self.to[self.img[x]][y]) {
                continue;
            }
            self.used[y] = true;
            self.img.push(y);
            let stop = self.run(depth + 1, visit);
            self.img.pop();
            self.used[y] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

impl BruteForce {
    pub fn new(threshold: usize) -> Self {
        BruteForce { threshold }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.threshold {
            return Err(Error::Refused { n, threshold: self.threshold });
        }
        Ok(())
    }

    pub fn nta(&self, g: &Graph) -> Result<Option<Permutation>> {
        self.check(g.n())?;
        let a = matrix(g);
        let mut found = None;
        let mut scan = Scan { from: &a, to: &a, img: Vec::new(), used: vec![false; g.n()] };
        scan.run(0, &mut |img| {
            if img.iter().enumerate().any(|(i, &x)| i != x) {
                found = Some(img.to_vec());
                true
            } else {
                false
            }
        });
        Ok(found.map(|v| Permutation::new(v).expect("scan yields bijections")))
    }

    pub fn isomorphic(&self, g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
        self.check(g1.n().max(g2.n()))?;
        if g1.n() != g2.n() || g1.m() != g2.m() {
            return Ok(None);
        }
        let (a, b) = (matrix(g1), matrix(g2));
        let mut found = None;
        let mut scan = Scan { from: &a, to: &b, img: Vec::new(), used: vec![false; g1.n()] };
        scan.run(0, &mut |img| {
            found = Some(img.to_vec());
            true
        });
        Ok(found.map(|v| Permutation::new(v).expect("scan yields bijections")))
    }

    /// Every automorphism of `g`, identity first.
    pub fn automorphisms(&self, g: &Graph) -> Result<Vec<Permutation>> {
        self.check(g.n())?;
        let a = matrix(g);
        let mut all = Vec::new();
        let mut scan = Scan { from: &a, to: &a, img: Vec::new(), used: vec![false; g.n()] };
        scan.run(0, &mut |img| {
            all.push(Permutation::new(img.to_vec()).expect("scan yields bijections"));
            false
        });
        Ok(all)
    }
}

pub fn brute_force_nta(g: &Graph) -> Result<Option<Permutation>> {
    BruteForce::default().nta(g)
}

pub fn brute_force_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
    BruteForce::default().isomorphic(g1, g2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c4 = Graph::cycle(4);
        let p = brute_force_nta(&c4).unwrap().unwrap();
        assert!(p.is_automorphism(&c4) && !p.is_identity());
        assert_eq!(brute_force_isomorphic(&Graph::complete(2), &Graph::empty(2)).unwrap(), None);
        assert_eq!(brute_force_nta(&Graph::empty(1)).unwrap(), None);
    }

    #[test]
    fn automorphism_counts() {
        let b = BruteForce::default();
        assert_eq!(b.automorphisms(&Graph::cycle(6)).unwrap().len(), 12);
        assert_eq!(b.automorphisms(&Graph::complete(4)).unwrap().len(), 24);
        assert_eq!(b.automorphisms(&Graph::path(5)).unwrap().len(), 2);
    }

    #[test]
    fn refuses_above_threshold() {
        let g = Graph::empty(10);
        assert_eq!(brute_force_nta(&g), Err(Error::Refused { n: 10, threshold: 9 }));
        assert!(BruteForce::new(10).nta(&g).unwrap().is_some());
    }

    #[test]
    fn c6_and_two_triangles_are_not_isomorphic() {
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(brute_force_isomorphic(&Graph::cycle(6), &two_k3).unwrap(), None);
    }
}
