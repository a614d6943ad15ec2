use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `0..n`; `p[i]` is the image of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::InvalidInput(format!("permutation image {x} of {i} out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidInput(format!("permutation repeats image {x}")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `self.then(other)` maps `v` to `other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    /// True iff this maps the edge set of `from` exactly onto the edge set of `to`.
    pub fn is_isomorphism(&self, from: &Graph, to: &Graph) -> bool {
        if from.n() != self.len() || to.n() != self.len() || from.m() != to.m() {
            return false;
        }
        from.edges().all(|(u, v)| to.has_edge(self.0[u], self.0[v]))
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.is_isomorphism(g, g)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_int_list(f, &self.0)
    }
}

pub(crate) fn write_int_list<T: fmt::Display>(f: &mut impl fmt::Write, xs: &[T]) -> fmt::Result {
    f.write_char('[')?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{x}")?;
    }
    f.write_char(']')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn compose_and_invert() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.then(&p).images(), &[2, 0, 1]);
        assert_eq!(p.to_string(), "[1,2,0]");
    }
}
