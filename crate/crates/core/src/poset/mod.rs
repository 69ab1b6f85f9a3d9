//! Finite posets on dense indices `0..n` with a precomputed `n x n`
//! reachability table.

mod canon;
mod generate;

pub use canon::CanonicalKey;
pub use generate::generate_posets;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interchange form: `{"n": 3, "covers": [[2,0],[2,1]]}`, where `[i, j]`
/// means `j` covers `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

/// A finite, nonempty partial order.
///
/// `covers` is always the transitive reduction of `leq`, sorted
/// lexicographically; redundant pairs passed to [`Poset::new`] are absorbed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PosetSpec", into = "PosetSpec")]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    leq: Vec<bool>,
}

impl TryFrom<PosetSpec> for Poset {
    type Error = Error;

    fn try_from(spec: PosetSpec) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = spec.covers.iter().map(|&[i, j]| (i, j)).collect();
        Poset::new(spec.n, &pairs)
    }
}

impl From<Poset> for PosetSpec {
    fn from(p: Poset) -> Self {
        PosetSpec {
            n: p.n,
            covers: p.covers.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl Poset {
    /// Builds the poset generated by `covers` (pairs `(i, j)` with `i < j`).
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut succ = vec![Vec::new(); n];
        for &(i, j) in covers {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
            }
            if i == j {
                return Err(Error::Cycle { cycle: vec![i, i] });
            }
            succ[i].push(j);
        }
        if let Some(cycle) = find_cycle(&succ) {
            return Err(Error::Cycle { cycle });
        }

        let mut leq = vec![false; n * n];
        for start in 0..n {
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if leq[start * n + v] {
                    continue;
                }
                leq[start * n + v] = true;
                stack.extend(succ[v].iter().copied());
            }
        }
        Ok(Self::from_closed(n, leq))
    }

    /// Builds a poset from a table already known to be a partial order.
    pub(crate) fn from_closed(n: usize, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), n * n);
        let mut poset = Poset {
            n,
            covers: Vec::new(),
            leq,
        };
        poset.covers = poset.reduce();
        poset
    }

    fn reduce(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let implied = (0..n).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !implied {
                    covers.push((i, j));
                }
            }
        }
        covers
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &covers)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// Order-reversed copy on the same indices.
    pub fn opposite(&self) -> Poset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[j * n + i] = self.leq(i, j);
            }
        }
        Self::from_closed(n, leq)
    }

    /// Disjoint union; elements of `other` are shifted by `self.len()`.
    pub fn direct_sum(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut leq = vec![false; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                leq[i * n + j] = self.leq(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                leq[(i + self.n) * n + j + self.n] = other.leq(i, j);
            }
        }
        Self::from_closed(n, leq)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cover pairs `(i, j)` (`j` covers `i`), sorted lexicographically.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `i <= j`. Panics on out-of-range indices.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "element index out of range");
        self.leq[i * self.n + j]
    }

    /// `i < j`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Checked variant of [`Poset::leq`].
    pub fn try_leq(&self, i: usize, j: usize) -> Result<bool> {
        for index in [i, j] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange {
                    index,
                    size: self.n,
                });
            }
        }
        Ok(self.leq(i, j))
    }

    /// `{j : i <= j}` in increasing index order.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.leq(i, j)).collect()
    }

    /// `{j : j <= i}` in increasing index order.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.leq(j, i)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| (0..self.n).all(|j| !self.lt(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| (0..self.n).all(|j| !self.lt(i, j)))
            .collect()
    }

    pub fn has_unique_min_or_max(&self) -> bool {
        self.minimal_elements().len() == 1 || self.maximal_elements().len() == 1
    }

    /// Connected components of the comparability graph, each sorted, ordered
    /// by smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut label = vec![usize::MAX; n];
        let mut components = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = Vec::new();
            let mut stack = vec![start];
            label[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for (w, slot) in label.iter_mut().enumerate() {
                    if *slot == usize::MAX && self.comparable(v, w) {
                        *slot = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Splits into connected summands. Each entry carries the map from the
    /// summand's local indices back to indices of `self`.
    pub fn decompose_direct_sum(&self) -> Vec<(Poset, Vec<usize>)> {
        self.components()
            .into_iter()
            .map(|members| (self.induced(&members), members))
            .collect()
    }

    /// Subposet on `members` (re-indexed in the given order).
    pub fn induced(&self, members: &[usize]) -> Poset {
        let m = members.len();
        let mut leq = vec![false; m * m];
        for (a, &i) in members.iter().enumerate() {
            for (b, &j) in members.iter().enumerate() {
                leq[a * m + b] = self.leq(i, j);
            }
        }
        Self::from_closed(m, leq)
    }

    /// No incomparable pair has a common strict upper bound.
    pub fn is_rooted(&self) -> bool {
        self.find_non_rooted().is_none()
    }

    /// No incomparable pair has a common strict lower bound.
    pub fn is_co_rooted(&self) -> bool {
        self.find_non_co_rooted().is_none()
    }

    /// Lexicographically first `(a, b, c)` with `a < b` incomparable and
    /// `a, b < c`.
    pub(crate) fn find_non_rooted(&self) -> Option<(usize, usize, usize)> {
        self.find_triple(|p, a, c| p.lt(a, c))
    }

    /// Lexicographically first `(a, b, c)` with `a < b` incomparable and
    /// `c < a, b`.
    pub(crate) fn find_non_co_rooted(&self) -> Option<(usize, usize, usize)> {
        self.find_triple(|p, a, c| p.lt(c, a))
    }

    fn find_triple(
        &self,
        bound: impl Fn(&Poset, usize, usize) -> bool,
    ) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    continue;
                }
                if let Some(c) = (0..n).find(|&c| bound(self, a, c) && bound(self, b, c)) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.comparable(i, j)))
    }

    pub fn is_antichain(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn is_sum_of_chains(&self) -> bool {
        self.decompose_direct_sum()
            .iter()
            .all(|(c, _)| c.is_chain())
    }

    pub fn to_spec(&self) -> PosetSpec {
        self.clone().into()
    }
}

/// Iterative DFS returning one directed cycle as a vertex path `v0 .. vk v0`.
fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // (vertex, next successor position)
        let mut path: Vec<(usize, usize)> = vec![(root, 0)];
        mark[root] = Mark::Active;
        while let Some(&mut (v, ref mut pos)) = path.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        path.push((w, 0));
                    }
                    Mark::Active => {
                        let from = path.iter().position(|&(u, _)| u == w).unwrap();
                        let mut cycle: Vec<usize> = path[from..].iter().map(|&(u, _)| u).collect();
                        cycle.push(w);
                        return Some(cycle);
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                path.pop();
            }
        }
    }
    None
}
