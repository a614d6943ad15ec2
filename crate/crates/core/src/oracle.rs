//! Definition-level brute force for "is there a proper 2-coloring preserved by
//! no nontrivial automorphism". Shares no code with [`crate::iso`] or
//! [`crate::d2c`]: it has its own traversal, properness check and permutation
//! scan, so a bug in the engine cannot hide behind the same bug here.

use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring};

pub const DEFAULT_THRESHOLD: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub threshold: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { threshold: DEFAULT_THRESHOLD }
    }
}

/// All proper 2-colorings. Empty iff `g` is not bipartite; otherwise `2^k` for
/// `k` components, ordered by binary counting over per-component swap bits
/// (bit `i` flips the `i`-th component by smallest vertex).
pub fn enumerate_proper_2_colorings(g: &Graph) -> Vec<TwoColoring> {
    let n = g.n();
    let mut base = vec![0u8; n];
    let mut comp = vec![usize::MAX; n];
    let mut k = 0;
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = k;
        base[root] = 1;
        let mut frontier = vec![root];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in g.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = k;
                        base[w] = 3 - base[u];
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        k += 1;
    }
    let proper = (0..n).all(|u| g.neighbors(u).iter().all(|&w| base[w] != base[u]));
    if !proper {
        return Vec::new();
    }
    assert!(k < usize::BITS as usize, "too many components to enumerate");
    (0..1usize << k)
        .map(|mask| {
            let colors =
                (0..n).map(|v| if mask >> comp[v] & 1 == 1 { 3 - base[v] } else { base[v] }).collect();
            TwoColoring::new(colors).expect("colors are 1 or 2")
        })
        .collect()
}

/// Scan over permutations `p` (built vertex by vertex along `order`) keeping
/// adjacency, degree and the color classes.
struct Scan<'a> {
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    colors: Option<&'a [u8]>,
    order: Vec<usize>,
    img: Vec<usize>,
    used: Vec<bool>,
}

const UNSET: usize = usize::MAX;

impl<'a> Scan<'a> {
    fn new(g: &Graph, colors: Option<&'a [u8]>) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        let mut deg = vec![0; n];
        for u in 0..n {
            for &w in g.neighbors(u) {
                adj[u][w] = true;
                deg[u] += 1;
            }
        }
        // breadth-first domain order so adjacency constraints bind early
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut i = order.len();
            order.push(root);
            while i < order.len() {
                let u = order[i];
                i += 1;
                for w in 0..n {
                    if adj[u][w] && !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        Scan { adj, deg, colors, order, img: vec![UNSET; n], used: vec![false; n] }
    }

    /// True iff some non-identity automorphism exists (respecting colors if set).
    fn nontrivial_exists(&mut self, depth: usize) -> bool {
        let n = self.order.len();
        if depth == n {
            return (0..n).any(|v| self.img[v] != v);
        }
        let x = self.order[depth];
        for y in 0..n {
            if self.used[y] || self.deg[x] != self.deg[y] {
                continue;
            }
            if let Some(c) = self.colors {
                if c[x] != c[y] {
                    continue;
                }
            }
            let consistent = self.order[..depth].iter().all(|&z| self.adj[z][x] == self.adj[self.img[z]][y]);
            if !consistent {
                continue;
            }
            self.img[x] = y;
            self.used[y] = true;
            let found = self.nontrivial_exists(depth + 1);
            self.used[y] = false;
            self.img[x] = UNSET;
            if found {
                return true;
            }
        }
        false
    }
}

impl Oracle {
    pub fn new(threshold: usize) -> Self {
        Oracle { threshold }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.threshold {
            return Err(Error::Refused { n: g.n(), threshold: self.threshold });
        }
        Ok(())
    }

    /// The first enumerated proper 2-coloring that no nontrivial automorphism preserves.
    pub fn distinguishing_2_coloring(&self, g: &Graph) -> Result<Option<TwoColoring>> {
        self.check(g)?;
        Ok(enumerate_proper_2_colorings(g)
            .into_iter()
            .find(|c| !Scan::new(g, Some(c.colors())).nontrivial_exists(0)))
    }

    pub fn chi_d_le_2(&self, g: &Graph) -> Result<bool> {
        Ok(self.distinguishing_2_coloring(g)?.is_some())
    }

    pub fn is_asymmetric(&self, g: &Graph) -> Result<bool> {
        self.check(g)?;
        Ok(!Scan::new(g, None).nontrivial_exists(0))
    }
}

pub fn brute_chi_d_le_2(g: &Graph) -> Result<bool> {
    Oracle::default().chi_d_le_2(g)
}

pub fn brute_is_asymmetric(g: &Graph) -> Result<bool> {
    Oracle::default().is_asymmetric(g)
}
