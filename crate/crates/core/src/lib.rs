//! Isotone-map ideals `L(P, Q)` of finite poset pairs.
//!
//! The generators of `L(P, Q)` are the squarefree monomials
//! `u_phi = prod_p x_{p, phi(p)}`, one per order-preserving map `phi: P -> Q`.
//! Monomials are modelled as sets of cells on the `|P| x |Q|` grid, which is
//! all that is needed to compute Alexander duals (minimal vertex covers of the
//! generator hypergraph) and to compare `L(P, Q)` dual against the
//! index-swapped `L(Q, P)`.
//!
//! The crate also contains the classification predicate deciding, from the
//! shapes of `P` and `Q` alone, when that equality holds, the constructive
//! counterexamples used when it fails, and an exhaustive sweep harness that
//! checks the predicate against direct computation.

mod bits;
pub mod classifier;
pub mod duality;
mod error;
pub mod homset;
pub mod ideal;
pub mod poset;
pub mod sweep;

pub use classifier::{
    build_disconnected_witness, build_high_prime, find_non_co_rooted_config,
    find_non_rooted_config, predict_duality, verify_pair, Clause, DualityVerdict, PairReport,
    Witness, WitnessKind,
};
pub use duality::{
    alexander_dual, check_min_eq_hom, duality_holds_computed, ideal_height, minimal_covers,
    prime_of_map, PrimeCover,
};
pub use error::{Error, Result};
pub use homset::{enumerate_hom, fixpoints, is_isotone, IsotoneMap};
pub use ideal::{
    build_l, ideal_equals, ideal_product, ideal_sum, monomial_of_map, tau, Cell, Ideal, Monomial,
};
pub use poset::{generate_posets, CanonicalKey, Poset};
pub use sweep::{run_sweep, SweepConfig, SweepReport};

/// Resource bounds shared by the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset accepted by [`Poset::canonical_key`].
    pub canonical_max_n: usize,
    /// Largest size accepted by [`generate_posets`].
    pub generate_max_n: usize,
    /// Maximum number of isotone maps materialized by one enumeration.
    pub hom_cap: usize,
    /// Maximum number of (partial) transversals held during dualization.
    pub cover_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            canonical_max_n: 8,
            generate_max_n: 5,
            hom_cap: 1_000_000,
            cover_cap: 100_000,
        }
    }
}
