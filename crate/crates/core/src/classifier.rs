//! Structural prediction of when the dual of `L(P, Q)` equals `L(Q, P)`
//! index-swapped, together with explicit certificates for the failing cases.
//!
//! The prediction holds iff `P` or `Q` is connected and one of the following
//! applies: both are rooted; both are co-rooted; `P` is connected and `Q` a
//! sum of chains; `Q` is connected and `P` a sum of chains; one of them is a
//! chain.

use std::fmt;

use serde::Serialize;

use crate::duality::{duality_holds_computed, is_minimal_cover, PrimeCover};
use crate::error::{Error, Result};
use crate::ideal::{build_l, Cell, Monomial};
use crate::poset::Poset;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Clause {
    #[serde(rename = "both-rooted")]
    BothRooted,
    #[serde(rename = "both-co-rooted")]
    BothCoRooted,
    #[serde(rename = "P-connected-Q-sum-of-chains")]
    PConnectedQSumOfChains,
    #[serde(rename = "Q-connected-P-sum-of-chains")]
    QConnectedPSumOfChains,
    #[serde(rename = "some-chain")]
    SomeChain,
    #[serde(rename = "fails-disconnected")]
    FailsDisconnected,
    #[serde(rename = "fails-rooted-mismatch")]
    FailsRootedMismatch,
    #[serde(rename = "fails-co-rooted-mismatch")]
    FailsCoRootedMismatch,
    #[serde(rename = "fails-general")]
    FailsGeneral,
}

impl Clause {
    pub const ALL: [Clause; 9] = [
        Clause::BothRooted,
        Clause::BothCoRooted,
        Clause::PConnectedQSumOfChains,
        Clause::QConnectedPSumOfChains,
        Clause::SomeChain,
        Clause::FailsDisconnected,
        Clause::FailsRootedMismatch,
        Clause::FailsCoRootedMismatch,
        Clause::FailsGeneral,
    ];

    pub fn holds(self) -> bool {
        matches!(
            self,
            Clause::BothRooted
                | Clause::BothCoRooted
                | Clause::PConnectedQSumOfChains
                | Clause::QConnectedPSumOfChains
                | Clause::SomeChain
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Clause::BothRooted => "both-rooted",
            Clause::BothCoRooted => "both-co-rooted",
            Clause::PConnectedQSumOfChains => "P-connected-Q-sum-of-chains",
            Clause::QConnectedPSumOfChains => "Q-connected-P-sum-of-chains",
            Clause::SomeChain => "some-chain",
            Clause::FailsDisconnected => "fails-disconnected",
            Clause::FailsRootedMismatch => "fails-rooted-mismatch",
            Clause::FailsCoRootedMismatch => "fails-co-rooted-mismatch",
            Clause::FailsGeneral => "fails-general",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// A minimal prime of height greater than the number of columns.
    HighPrime,
    /// A generator missed by the prime of an isotone map.
    DisconnectedMonomial,
}

/// Certificate that the duality fails for a pair.
///
/// When `swapped` is set the certificate is about `L(Q, P)` rather than
/// `L(P, Q)`; the two equalities are equivalent, and the construction needs
/// the connected poset in the first slot. `opposite` records that the
/// configuration was found in the order-reversed posets (which have the same
/// ideal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub cover: Option<PrimeCover>,
    pub monomial: Option<Monomial>,
    /// `[p1, p2, p3, q1, q2, q3]` for high primes, `[p1, p2, q1, q2]` for the
    /// disconnected case.
    pub config: Vec<usize>,
    pub swapped: bool,
    pub opposite: bool,
}

impl Witness {
    /// Re-checks the certificate against a freshly built ideal.
    pub fn verify(&self, p: &Poset, q: &Poset, limits: &Limits) -> Result<bool> {
        let (rows, cols) = if self.swapped { (q, p) } else { (p, q) };
        let ideal = build_l(rows, cols, limits.hom_cap)?;
        Ok(match self.kind {
            WitnessKind::HighPrime => match &self.cover {
                Some(cover) => cover.height() > cols.len() && is_minimal_cover(&ideal, cover),
                None => false,
            },
            WitnessKind::DisconnectedMonomial => match (&self.cover, &self.monomial) {
                (Some(cover), Some(m)) => ideal.gens().contains(m) && !cover.hits(m),
                _ => false,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityVerdict {
    pub holds: bool,
    pub clause: Clause,
    pub witness: Option<Witness>,
}

/// Decides the duality from the shapes of `p` and `q`. Clauses are tried in
/// the order: some-chain, both-rooted, both-co-rooted, then the two
/// connected/sum-of-chains clauses.
pub fn predict_duality(p: &Poset, q: &Poset) -> DualityVerdict {
    let (p_connected, q_connected) = (p.is_connected(), q.is_connected());
    if !p_connected && !q_connected {
        let witness = build_disconnected_witness(p, q)
            .ok()
            .map(|(cover, monomial)| {
                let components = |x: &Poset| {
                    let parts = x.components();
                    [parts[0][0], parts[1][0]]
                };
                let [p1, p2] = components(p);
                let [q1, q2] = components(q);
                Witness {
                    kind: WitnessKind::DisconnectedMonomial,
                    cover: Some(cover),
                    monomial: Some(monomial),
                    config: vec![p1, p2, q1, q2],
                    swapped: false,
                    opposite: false,
                }
            });
        return DualityVerdict {
            holds: false,
            clause: Clause::FailsDisconnected,
            witness,
        };
    }

    let clause = if p.is_chain() || q.is_chain() {
        Some(Clause::SomeChain)
    } else if p.is_rooted() && q.is_rooted() {
        Some(Clause::BothRooted)
    } else if p.is_co_rooted() && q.is_co_rooted() {
        Some(Clause::BothCoRooted)
    } else if p_connected && q.is_sum_of_chains() {
        Some(Clause::PConnectedQSumOfChains)
    } else if q_connected && p.is_sum_of_chains() {
        Some(Clause::QConnectedPSumOfChains)
    } else {
        None
    };
    if let Some(clause) = clause {
        return DualityVerdict {
            holds: true,
            clause,
            witness: None,
        };
    }

    // Work from the connected side; it is not a chain here.
    let swapped = !p_connected;
    let (x, y) = if swapped { (q, p) } else { (p, q) };
    let clause = if x.is_rooted() {
        Clause::FailsRootedMismatch
    } else if x.is_co_rooted() {
        Clause::FailsCoRootedMismatch
    } else {
        Clause::FailsGeneral
    };
    DualityVerdict {
        holds: false,
        clause,
        witness: high_prime_witness(x, y, swapped),
    }
}

fn high_prime_witness(x: &Poset, y: &Poset, swapped: bool) -> Option<Witness> {
    let make =
        |x: &Poset, y: &Poset, ps: (usize, usize, usize), qs: (usize, usize, usize), opposite| {
            let (p1, p2, p3) = ps;
            let (q1, q2, q3) = qs;
            build_high_prime(x, y, ps, qs).ok().map(|cover| Witness {
                kind: WitnessKind::HighPrime,
                cover: Some(cover),
                monomial: None,
                config: vec![p1, p2, p3, q1, q2, q3],
                swapped,
                opposite,
            })
        };
    if let (Some(ps), Some(qs)) = (find_non_co_rooted_config(x), find_non_rooted_config(y)) {
        return make(x, y, ps, qs, false);
    }
    if let (Some(ps), Some(qs)) = (find_non_rooted_config(x), find_non_co_rooted_config(y)) {
        // Reversing both orders leaves the set of isotone maps unchanged.
        return make(&x.opposite(), &y.opposite(), ps, qs, true);
    }
    None
}

/// Lexicographically first `(q1, q2, q3)` with `q1, q2` incomparable and
/// `q1, q2 < q3`; `None` iff `q` is rooted.
pub fn find_non_rooted_config(q: &Poset) -> Option<(usize, usize, usize)> {
    q.find_non_rooted()
}

/// Lexicographically first `(q1, q2, q3)` with `q1, q2` incomparable and
/// `q3 < q1, q2`; `None` iff `q` is co-rooted.
pub fn find_non_co_rooted_config(q: &Poset) -> Option<(usize, usize, usize)> {
    q.find_non_co_rooted()
}

/// The prime generated by
/// `{(p1, q) : q >= q1} ∪ {(p2, q) : q >= q2} ∪ {(p3, q) : q ≱ q1, q ≱ q2}`.
///
/// Requires `p1, p2` incomparable above `p3` in `p`, and `q1, q2`
/// incomparable below `q3` in `q`. The result is a minimal prime of
/// `L(p, q)` of height `|q| + |up(q1) ∩ up(q2)|`.
pub fn build_high_prime(
    p: &Poset,
    q: &Poset,
    (p1, p2, p3): (usize, usize, usize),
    (q1, q2, q3): (usize, usize, usize),
) -> Result<PrimeCover> {
    for (index, size) in [
        (p1, p.len()),
        (p2, p.len()),
        (p3, p.len()),
        (q1, q.len()),
        (q2, q.len()),
        (q3, q.len()),
    ] {
        if index >= size {
            return Err(Error::IndexOutOfRange { index, size });
        }
    }
    let fail = |what: String| Err(Error::Precondition(what));
    if p.comparable(p1, p2) {
        return fail(format!("p1={p1} and p2={p2} are comparable"));
    }
    if !p.lt(p3, p1) || !p.lt(p3, p2) {
        return fail(format!("p3={p3} is not below both p1={p1} and p2={p2}"));
    }
    if q.comparable(q1, q2) {
        return fail(format!("q1={q1} and q2={q2} are comparable"));
    }
    if !q.lt(q1, q3) || !q.lt(q2, q3) {
        return fail(format!("q3={q3} is not above both q1={q1} and q2={q2}"));
    }

    let mut cells = Vec::new();
    for c in 0..q.len() {
        let above1 = q.leq(q1, c);
        let above2 = q.leq(q2, c);
        if above1 {
            cells.push(Cell::new(p1, c));
        }
        if above2 {
            cells.push(Cell::new(p2, c));
        }
        if !above1 && !above2 {
            cells.push(Cell::new(p3, c));
        }
    }
    Ok(PrimeCover::new(cells))
}

/// For `P = P1 + P2` and `Q = Q1 + Q2` (first component versus the rest),
/// returns the prime of `psi: Q -> P` sending `Q1` to `p1` and `Q2` to `p2`,
/// and the generator `u_phi` of `phi: P -> Q` sending `P1` to `q2` and `P2`
/// to `q1`. The prime misses the generator.
pub fn build_disconnected_witness(p: &Poset, q: &Poset) -> Result<(PrimeCover, Monomial)> {
    let p_parts = p.components();
    let q_parts = q.components();
    if p_parts.len() < 2 || q_parts.len() < 2 {
        return Err(Error::Precondition(
            "both posets must be disconnected".into(),
        ));
    }
    let (p1, p2) = (p_parts[0][0], p_parts[1][0]);
    let (q1, q2) = (q_parts[0][0], q_parts[1][0]);
    let in_p1 = |x: usize| p_parts[0].contains(&x);
    let in_q1 = |y: usize| q_parts[0].contains(&y);

    let cover = PrimeCover::new(
        (0..q.len())
            .map(|c| Cell::new(if in_q1(c) { p1 } else { p2 }, c))
            .collect(),
    );
    let monomial = (0..p.len())
        .map(|r| Cell::new(r, if in_p1(r) { q2 } else { q1 }))
        .collect();
    Ok((cover, monomial))
}

/// Prediction and computation for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    #[serde(rename = "P")]
    pub p: Poset,
    #[serde(rename = "Q")]
    pub q: Poset,
    pub predicted: bool,
    pub clause: Clause,
    pub computed: bool,
    pub agree: bool,
    pub witness: Option<Witness>,
    /// Independent re-check of `witness`, when one was emitted.
    pub witness_verified: Option<bool>,
}

impl PairReport {
    /// Prediction matches computation and any witness re-verified.
    pub fn is_consistent(&self) -> bool {
        self.agree && self.witness_verified != Some(false)
    }
}

pub fn verify_pair(p: &Poset, q: &Poset, limits: &Limits) -> Result<PairReport> {
    let verdict = predict_duality(p, q);
    let computed = duality_holds_computed(p, q, limits)?;
    let witness_verified = match &verdict.witness {
        Some(w) => Some(w.verify(p, q, limits)?),
        None => None,
    };
    Ok(PairReport {
        p: p.clone(),
        q: q.clone(),
        predicted: verdict.holds,
        clause: verdict.clause,
        computed,
        agree: verdict.holds == computed,
        witness: verdict.witness,
        witness_verified,
    })
}
