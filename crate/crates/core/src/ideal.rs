//! Squarefree monomial ideals on a `rows x cols` grid of variables.
//!
//! A monomial is the set of cells `(p, q)` standing for the variables
//! `x_{pq}` it contains. An ideal is stored as its minimal generating set:
//! an antichain of supports under inclusion, sorted so that equal ideals have
//! identical representations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homset::{enumerate_hom, IsotoneMap};
use crate::poset::Poset;

/// The variable `x_{pq}`. Serialized as `[p, q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub p: usize,
    pub q: usize,
}

impl Cell {
    pub fn new(p: usize, q: usize) -> Self {
        Cell { p, q }
    }

    pub fn swapped(self) -> Self {
        Cell {
            p: self.q,
            q: self.p,
        }
    }
}

impl From<[usize; 2]> for Cell {
    fn from([p, q]: [usize; 2]) -> Self {
        Cell { p, q }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.p, c.q]
    }
}

impl From<(usize, usize)> for Cell {
    fn from((p, q): (usize, usize)) -> Self {
        Cell { p, q }
    }
}

/// A squarefree monomial: a sorted, duplicate-free list of cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Cell>")]
pub struct Monomial(Vec<Cell>);

impl From<Vec<Cell>> for Monomial {
    fn from(mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        Monomial(cells)
    }
}

impl FromIterator<Cell> for Monomial {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Monomial::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl Monomial {
    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.0.binary_search(cell).is_ok()
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn meets(&self, cells: &[Cell]) -> bool {
        cells.iter().any(|c| self.contains(c))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.0.iter().chain(&other.0).copied().collect()
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Monomial {
        self.0.iter().map(|&c| f(c)).collect()
    }
}

fn is_sorted_subset(small: &[Cell], large: &[Cell]) -> bool {
    let mut rest = large.iter();
    small.iter().all(|c| rest.by_ref().any(|d| d == c))
}

#[derive(Serialize, Deserialize)]
struct IdealSpec {
    rows: usize,
    cols: usize,
    gens: Vec<Monomial>,
}

/// A squarefree monomial ideal together with its ambient grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealSpec", into = "IdealSpec")]
pub struct Ideal {
    rows: usize,
    cols: usize,
    gens: Vec<Monomial>,
}

impl TryFrom<IdealSpec> for Ideal {
    type Error = Error;

    fn try_from(spec: IdealSpec) -> Result<Self> {
        let count = spec.gens.len();
        let ideal = Ideal::from_generators(spec.rows, spec.cols, spec.gens)?;
        if ideal.gens.len() != count {
            return Err(Error::NotAntichain);
        }
        Ok(ideal)
    }
}

impl From<Ideal> for IdealSpec {
    fn from(i: Ideal) -> Self {
        IdealSpec {
            rows: i.rows,
            cols: i.cols,
            gens: i.gens,
        }
    }
}

impl Ideal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn from_generators(rows: usize, cols: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if let Some(c) = g.cells().iter().find(|c| c.p >= rows || c.q >= cols) {
                return Err(Error::CellOutOfRange {
                    p: c.p,
                    q: c.q,
                    rows,
                    cols,
                });
            }
        }
        Ok(Ideal {
            rows,
            cols,
            gens: minimize(gens),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn grid(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Re-homes this ideal in a larger grid, sending row `p` to `row_map[p]`
    /// and column `q` to `col_map[q]`.
    pub fn embed(
        &self,
        rows: usize,
        cols: usize,
        row_map: &[usize],
        col_map: &[usize],
    ) -> Result<Ideal> {
        if row_map.len() != self.rows || col_map.len() != self.cols {
            return Err(Error::GridMismatch {
                left: self.grid(),
                right: (row_map.len(), col_map.len()),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_cells(|c| Cell::new(row_map[c.p], col_map[c.q])))
            .collect();
        Ideal::from_generators(rows, cols, gens)
    }
}

/// Removes duplicates and non-minimal supports, then sorts lexicographically.
pub(crate) fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

/// `u_phi`: the cells `(p, phi(p))`, one per row.
pub fn monomial_of_map(phi: &IsotoneMap<'_>) -> Monomial {
    phi.image()
        .iter()
        .enumerate()
        .map(|(p, &q)| Cell::new(p, q))
        .collect()
}

/// `L(P, Q)` on the `|P| x |Q|` grid: one generator per isotone map `P -> Q`.
pub fn build_l(p: &Poset, q: &Poset, hom_cap: usize) -> Result<Ideal> {
    let gens: Vec<Monomial> = enumerate_hom(p, q, hom_cap)?
        .iter()
        .map(monomial_of_map)
        .collect();
    // Distinct maps have distinct supports of equal degree, so nothing is dropped.
    let ideal = Ideal::from_generators(p.len(), q.len(), gens)?;
    Ok(ideal)
}

/// Swaps the two indices of every variable.
pub fn tau(ideal: &Ideal) -> Ideal {
    let gens = ideal
        .gens
        .iter()
        .map(|g| g.map_cells(Cell::swapped))
        .collect();
    Ideal {
        rows: ideal.cols,
        cols: ideal.rows,
        gens: minimize(gens),
    }
}

/// Equality of minimal generating sets; ideals on different grids differ.
pub fn ideal_equals(i: &Ideal, j: &Ideal) -> bool {
    i == j
}

fn same_grid(i: &Ideal, j: &Ideal) -> Result<()> {
    if i.grid() != j.grid() {
        return Err(Error::GridMismatch {
            left: i.grid(),
            right: j.grid(),
        });
    }
    Ok(())
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_grid(i, j)?;
    let gens = i.gens.iter().chain(&j.gens).cloned().collect();
    Ok(Ideal {
        rows: i.rows,
        cols: i.cols,
        gens: minimize(gens),
    })
}

/// Product in the squarefree model: generators are the pairwise support
/// unions. When the two factors live on disjoint variable sets this is the
/// ordinary product; otherwise it is the radical of the product.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_grid(i, j)?;
    let gens = i
        .gens
        .iter()
        .flat_map(|a| j.gens.iter().map(move |b| a.lcm(b)))
        .collect();
    Ok(Ideal {
        rows: i.rows,
        cols: i.cols,
        gens: minimize(gens),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::{lambda_poset, v_poset};

    const CAP: usize = 1_000_000;

    fn mono(cells: &[(usize, usize)]) -> Monomial {
        cells.iter().map(|&c| Cell::from(c)).collect()
    }

    #[test]
    fn monomials_of_maps() {
        let c2 = Poset::chain(2).unwrap();
        let id = IsotoneMap::new(&c2, &c2, vec![0, 1]).unwrap();
        assert_eq!(monomial_of_map(&id), mono(&[(0, 0), (1, 1)]));

        let a2 = Poset::antichain(2).unwrap();
        let c1 = Poset::chain(1).unwrap();
        let constant = IsotoneMap::new(&a2, &c1, vec![0, 0]).unwrap();
        assert_eq!(monomial_of_map(&constant), mono(&[(0, 0), (1, 0)]));

        let (v, l) = (v_poset(), lambda_poset());
        let phi = IsotoneMap::new(&v, &l, vec![2, 2, 0]).unwrap();
        assert_eq!(monomial_of_map(&phi), mono(&[(0, 2), (1, 2), (2, 0)]));
    }

    #[test]
    fn build_examples() {
        let c1 = Poset::chain(1).unwrap();
        let c2 = Poset::chain(2).unwrap();
        let a2 = Poset::antichain(2).unwrap();
        assert_eq!(build_l(&c1, &c1, CAP).unwrap().gens(), &[mono(&[(0, 0)])]);

        let la2c2 = build_l(&a2, &c2, CAP).unwrap();
        assert_eq!(la2c2.gens().len(), 4);
        assert!(la2c2.gens().iter().all(|g| g.degree() == 2));

        let lc2 = build_l(&c2, &c2, CAP).unwrap();
        assert_eq!(
            lc2.gens(),
            &[
                mono(&[(0, 0), (1, 0)]),
                mono(&[(0, 0), (1, 1)]),
                mono(&[(0, 1), (1, 1)])
            ]
        );
    }

    #[test]
    fn tau_examples() {
        let single = Ideal::from_generators(1, 2, vec![mono(&[(0, 1)])]).unwrap();
        let t = tau(&single);
        assert_eq!(t.grid(), (2, 1));
        assert_eq!(t.gens(), &[mono(&[(1, 0)])]);
        assert_eq!(tau(&t), single);

        let c2 = Poset::chain(2).unwrap();
        let lc2 = build_l(&c2, &c2, CAP).unwrap();
        assert_eq!(
            tau(&lc2).gens(),
            &[
                mono(&[(0, 0), (0, 1)]),
                mono(&[(0, 0), (1, 1)]),
                mono(&[(1, 0), (1, 1)])
            ]
        );
        assert!(!ideal_equals(&lc2, &tau(&lc2)));
    }

    #[test]
    fn equality_across_grids() {
        let q = v_poset();
        let c1 = Poset::chain(1).unwrap();
        // Same grid, but L(C1, Q) has |Q| singletons while the swapped
        // L(Q, C1) is the single product of the row.
        let left = build_l(&c1, &q, CAP).unwrap();
        let right = tau(&build_l(&q, &c1, CAP).unwrap());
        assert_eq!(left.grid(), right.grid());
        assert_eq!(left.gens().len(), 3);
        assert!(left.gens().iter().all(|g| g.degree() == 1));
        assert_eq!(right.gens().len(), 1);
        assert!(!ideal_equals(&left, &right));
        assert!(ideal_equals(&left, &left.clone()));
        assert!(!ideal_equals(&left, &tau(&left)));
    }

    #[test]
    fn sums_and_products() {
        let c2 = Poset::chain(2).unwrap();
        let lc2 = build_l(&c2, &c2, CAP).unwrap();
        assert_eq!(ideal_sum(&lc2, &lc2).unwrap(), lc2);

        let a = Ideal::from_generators(2, 2, vec![mono(&[(0, 0)])]).unwrap();
        let b = Ideal::from_generators(2, 2, vec![mono(&[(1, 1)])]).unwrap();
        assert_eq!(
            ideal_product(&a, &b).unwrap().gens(),
            &[mono(&[(0, 0), (1, 1)])]
        );

        let other = Ideal::from_generators(1, 2, vec![mono(&[(0, 0)])]).unwrap();
        assert!(matches!(
            ideal_sum(&a, &other),
            Err(Error::GridMismatch { .. })
        ));
    }

    #[test]
    fn l_over_direct_sum_is_sum_of_columns() {
        let c2 = Poset::chain(2).unwrap();
        let c1 = Poset::chain(1).unwrap();
        let q = c1.direct_sum(&c1);
        let full = build_l(&c2, &q, CAP).unwrap();
        assert_eq!(full.gens().len(), 2);

        let mut sum = Ideal::from_generators(2, 2, vec![]).unwrap();
        for (component, cols) in q.decompose_direct_sum() {
            let part = build_l(&c2, &component, CAP)
                .unwrap()
                .embed(2, 2, &[0, 1], &cols)
                .unwrap();
            sum = ideal_sum(&sum, &part).unwrap();
        }
        assert_eq!(sum, full);
    }

    #[test]
    fn minimization_and_validation() {
        let gens = vec![mono(&[(0, 0), (0, 1)]), mono(&[(0, 0)]), mono(&[(0, 0)])];
        let i = Ideal::from_generators(1, 2, gens).unwrap();
        assert_eq!(i.gens(), &[mono(&[(0, 0)])]);
        assert!(matches!(
            Ideal::from_generators(1, 1, vec![mono(&[(0, 1)])]),
            Err(Error::CellOutOfRange { .. })
        ));
    }

    #[test]
    fn json_format() {
        let c2 = Poset::chain(2).unwrap();
        let lc2 = build_l(&c2, &c2, CAP).unwrap();
        let text = serde_json::to_string(&lc2).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"gens":[[[0,0],[1,0]],[[0,0],[1,1]],[[0,1],[1,1]]]}"#
        );
        assert_eq!(serde_json::from_str::<Ideal>(&text).unwrap(), lc2);
        let redundant = r#"{"rows":1,"cols":2,"gens":[[[0,0]],[[0,0],[0,1]]]}"#;
        assert!(serde_json::from_str::<Ideal>(redundant).is_err());
    }
}
