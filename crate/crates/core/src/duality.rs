//! Minimal primes and Alexander duals of squarefree monomial ideals.
//!
//! The minimal primes of a squarefree ideal are generated by the minimal
//! transversals (vertex covers) of its generator hypergraph, and the
//! Alexander dual is the ideal whose generators are exactly those covers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::homset::{enumerate_hom, IsotoneMap};
use crate::ideal::{build_l, tau, Cell, Ideal, Monomial};
use crate::poset::Poset;
use crate::Limits;

/// A monomial prime, given by the set of variables that generate it. Its
/// height is the number of cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeCover {
    cells: Vec<Cell>,
}

impl PrimeCover {
    pub fn new(mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        PrimeCover { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.binary_search(cell).is_ok()
    }

    /// Whether the cover meets the support of `m`.
    pub fn hits(&self, m: &Monomial) -> bool {
        m.meets(&self.cells)
    }

    pub fn to_monomial(&self) -> Monomial {
        self.cells.iter().copied().collect()
    }
}

fn to_bits(cells: &[Cell], cols: usize, width: usize) -> Bits {
    let mut b = Bits::empty(width);
    for c in cells {
        b.insert(c.p * cols + c.q);
    }
    b
}

/// All minimal transversals of the generator supports, sorted.
///
/// Generators are processed one at a time: transversals that already meet
/// the new edge are kept, the others are extended by each cell of the edge,
/// and non-minimal candidates are discarded. The number of live transversals
/// is bounded by `cap`.
pub fn minimal_covers(ideal: &Ideal, cap: usize) -> Result<Vec<PrimeCover>> {
    if ideal.gens().is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let cols = ideal.cols();
    let width = ideal.rows() * cols;
    let mut edges: Vec<Bits> = ideal
        .gens()
        .iter()
        .map(|g| to_bits(g.cells(), cols, width))
        .collect();
    edges.sort_by_key(Bits::count);

    let mut transversals = vec![Bits::empty(width)];
    for edge in &edges {
        let (hit, missed): (Vec<Bits>, Vec<Bits>) =
            transversals.into_iter().partition(|t| t.intersects(edge));
        let mut candidates: Vec<Bits> = Vec::new();
        for t in &missed {
            for cell in edge.iter() {
                let extended = t.with(cell);
                if hit.iter().any(|h| h.is_subset(&extended)) {
                    continue;
                }
                candidates.push(extended);
            }
        }
        candidates.sort_by_key(Bits::count);
        candidates.dedup();
        let mut fresh: Vec<Bits> = Vec::with_capacity(candidates.len());
        for c in candidates {
            if !fresh.iter().any(|f| f.is_subset(&c)) {
                fresh.push(c);
            }
        }
        transversals = hit;
        transversals.extend(fresh);
        if transversals.len() > cap {
            return Err(Error::CoverCapExceeded {
                cap,
                partial: transversals.len(),
            });
        }
    }

    let mut covers: Vec<PrimeCover> = transversals
        .iter()
        .map(|t| PrimeCover::new(t.iter().map(|i| Cell::new(i / cols, i % cols)).collect()))
        .collect();
    covers.sort_unstable();
    covers.dedup();
    Ok(covers)
}

/// Checks directly that `cover` meets every generator and that dropping any
/// one of its cells leaves some generator unmet.
pub fn is_minimal_cover(ideal: &Ideal, cover: &PrimeCover) -> bool {
    let gens = ideal.gens();
    if !gens.iter().all(|g| cover.hits(g)) {
        return false;
    }
    cover.cells().iter().all(|c| {
        // some generator is met by c alone
        gens.iter()
            .any(|g| g.contains(c) && cover.cells().iter().filter(|d| g.contains(d)).count() == 1)
    })
}

/// The Alexander dual: generators are the minimal covers of `ideal`.
pub fn alexander_dual(ideal: &Ideal, cap: usize) -> Result<Ideal> {
    let covers = minimal_covers(ideal, cap)?;
    Ideal::from_generators(
        ideal.rows(),
        ideal.cols(),
        covers.iter().map(PrimeCover::to_monomial).collect(),
    )
}

/// Smallest height among the minimal primes.
pub fn ideal_height(ideal: &Ideal, cap: usize) -> Result<usize> {
    minimal_covers(ideal, cap)?
        .iter()
        .map(PrimeCover::height)
        .min()
        .ok_or_else(|| Error::Precondition("the unit ideal has no minimal primes".into()))
}

/// The prime `(x_{psi(q) q} : q in Q)` of an isotone `psi: Q -> P`, on the
/// `|P| x |Q|` grid.
pub fn prime_of_map(psi: &IsotoneMap<'_>) -> PrimeCover {
    PrimeCover::new(
        psi.image()
            .iter()
            .enumerate()
            .map(|(q, &p)| Cell::new(p, q))
            .collect(),
    )
}

/// Whether the minimal primes of `L(P, Q)` are exactly the primes of the
/// isotone maps `Q -> P`.
pub fn check_min_eq_hom(p: &Poset, q: &Poset, limits: &Limits) -> Result<bool> {
    let covers: BTreeSet<PrimeCover> =
        minimal_covers(&build_l(p, q, limits.hom_cap)?, limits.cover_cap)?
            .into_iter()
            .collect();
    let from_maps: BTreeSet<PrimeCover> = enumerate_hom(q, p, limits.hom_cap)?
        .iter()
        .map(prime_of_map)
        .collect();
    Ok(covers == from_maps)
}

/// Literal comparison of the dual of `L(P, Q)` with `L(Q, P)` index-swapped.
pub fn duality_holds_computed(p: &Poset, q: &Poset, limits: &Limits) -> Result<bool> {
    let dual = alexander_dual(&build_l(p, q, limits.hom_cap)?, limits.cover_cap)?;
    let swapped = tau(&build_l(q, p, limits.hom_cap)?);
    Ok(dual == swapped)
}
