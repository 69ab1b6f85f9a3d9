use std::collections::BTreeMap;

use super::Poset;
use crate::error::{Error, Result};

/// One representative per isomorphism class of `n`-element posets, sorted by
/// canonical key. Rejects `n == 0` and `n > bound`.
///
/// Every `n`-poset is obtained from an `(n-1)`-poset by adjoining a new
/// maximal element above some down-closed set, so it suffices to extend the
/// previous level's representatives and deduplicate.
pub fn generate_posets(n: usize, bound: usize) -> Result<Vec<Poset>> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    let mut level = vec![Poset::chain(1)?];
    for size in 2..=n {
        let mut classes = BTreeMap::new();
        for base in &level {
            for below in down_closed_sets(base) {
                let extended = adjoin_maximal(base, &below);
                let key = extended.canonical_key_within(bound.max(size))?;
                classes.entry(key).or_insert(extended);
            }
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

fn down_closed_sets(p: &Poset) -> Vec<Vec<bool>> {
    let n = p.len();
    assert!(
        n < 32,
        "down-set enumeration is only meant for small posets"
    );
    (0u32..1 << n)
        .filter(|mask| {
            (0..n).all(|j| {
                mask & (1 << j) == 0 || p.down_set(j).iter().all(|&i| mask & (1 << i) != 0)
            })
        })
        .map(|mask| (0..n).map(|i| mask & (1 << i) != 0).collect())
        .collect()
}

fn adjoin_maximal(p: &Poset, below: &[bool]) -> Poset {
    let n = p.len();
    let m = n + 1;
    let mut leq = vec![false; m * m];
    for i in 0..n {
        for j in 0..n {
            leq[i * m + j] = p.leq(i, j);
        }
        leq[i * m + n] = below[i];
    }
    leq[n * m + n] = true;
    Poset::from_closed(m, leq)
}
