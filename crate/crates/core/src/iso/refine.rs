//! Ordered partitions and equitable refinement (1-dimensional Weisfeiler-Leman).
//!
//! Cells are identified by the position of their first vertex in `lab`. Every
//! decision taken during refinement depends only on cell positions and
//! neighbour counts, never on vertex ids, which keeps the result
//! isomorphism-invariant.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub(crate) struct Partition {
    /// Vertices in cell order.
    pub lab: Vec<usize>,
    /// Position of each vertex in `lab`.
    pos: Vec<usize>,
    /// Start position of the cell holding each vertex.
    cell: Vec<usize>,
    /// Cell length, indexed by start position; stale elsewhere.
    len: Vec<usize>,
    ncells: usize,
}

impl Partition {
    /// `cells` must be disjoint, non-empty and cover `0..n`.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut lab = Vec::with_capacity(n);
        let mut cell = vec![0; n];
        let mut len = vec![0; n];
        for c in cells {
            let start = lab.len();
            let mut sorted = c.clone();
            sorted.sort_unstable();
            for &v in &sorted {
                cell[v] = start;
            }
            len[start] = sorted.len();
            lab.extend(sorted);
        }
        debug_assert_eq!(lab.len(), n);
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        Partition { lab, pos, cell, len, ncells: cells.len() }
    }

    pub fn n(&self) -> usize {
        self.lab.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.ncells == self.n()
    }

    /// `(start, len)` of every cell, in order.
    pub fn cell_bounds(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.n()).then(|| {
                let item = (s, self.len[s]);
                s += self.len[s];
                item
            })
        })
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_bounds()
            .map(|(s, l)| {
                let mut c = self.lab[s..s + l].to_vec();
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Cell lengths in order; equal for partitions related by an automorphism.
    pub fn shape(&self) -> Vec<usize> {
        self.cell_bounds().map(|(_, l)| l).collect()
    }

    /// First cell of minimum size among the non-singleton cells.
    pub fn target_cell(&self) -> Option<(usize, usize)> {
        self.cell_bounds().filter(|&(_, l)| l > 1).fold(None, |best: Option<(usize, usize)>, c| match best {
            Some(b) if b.1 <= c.1 => Some(b),
            _ => Some(c),
        })
    }

    pub fn cell_members(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.len[start]]
    }

    /// Splits `v` off the front of its cell and returns the new singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[v];
        let l = self.len[s];
        debug_assert!(l > 1);
        let p = self.pos[v];
        let u = self.lab[s];
        self.lab.swap(s, p);
        self.pos[u] = p;
        self.pos[v] = s;
        self.len[s] = 1;
        self.len[s + 1] = l - 1;
        for &w in &self.lab[s + 1..s + l] {
            self.cell[w] = s + 1;
        }
        self.ncells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than `self`, using
    /// the cells starting at `active` as initial splitters.
    pub fn refine(&mut self, g: &Graph, active: impl IntoIterator<Item = usize>) {
        let n = self.n();
        let mut count = vec![0usize; n];
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::new();
        for s in active {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut touched = Vec::new();
        let mut hit_cells = Vec::new();
        let mut frags = Vec::new();
        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            if self.is_discrete() {
                break;
            }
            let splitter = self.cell_members(w).to_vec();
            for &x in &splitter {
                for &y in g.neighbors(x) {
                    if count[y] == 0 {
                        touched.push(y);
                    }
                    count[y] += 1;
                }
            }
            hit_cells.clear();
            hit_cells.extend(touched.iter().map(|&y| self.cell[y]));
            hit_cells.sort_unstable();
            hit_cells.dedup();
            for &s in &hit_cells {
                let l = self.len[s];
                if l == 1 {
                    continue;
                }
                let slice = &mut self.lab[s..s + l];
                slice.sort_unstable_by_key(|&v| (count[v], v));
                for (i, &v) in slice.iter().enumerate() {
                    self.pos[v] = s + i;
                }
                frags.clear();
                let mut start = s;
                for i in s + 1..s + l {
                    if count[self.lab[i]] != count[self.lab[i - 1]] {
                        frags.push((start, i - start));
                        start = i;
                    }
                }
                frags.push((start, s + l - start));
                if frags.len() == 1 {
                    continue;
                }
                for &(fs, fl) in &frags {
                    self.len[fs] = fl;
                    for &v in &self.lab[fs..fs + fl] {
                        self.cell[v] = fs;
                    }
                }
                self.ncells += frags.len() - 1;
                let skip = if in_queue[s] {
                    Some(s)
                } else {
                    // all but the first largest fragment
                    let mut big = frags[0];
                    for &f in &frags[1..] {
                        if f.1 > big.1 {
                            big = f;
                        }
                    }
                    Some(big.0)
                };
                for &(fs, _) in &frags {
                    if Some(fs) != skip && !in_queue[fs] {
                        in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            for &y in &touched {
                count[y] = 0;
            }
            touched.clear();
        }
    }

    /// Refines using every cell as a splitter.
    pub fn refine_all(&mut self, g: &Graph) {
        let starts: Vec<usize> = self.cell_bounds().map(|(s, _)| s).collect();
        self.refine(g, starts);
    }
}
