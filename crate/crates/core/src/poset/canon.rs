use serde::Serialize;

use super::Poset;
use crate::error::{Error, Result};

/// Isomorphism-invariant key: equal keys iff the posets are order-isomorphic.
///
/// The first byte is the element count; the rest is the strict order matrix,
/// bit-packed row-major, minimized over all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl Poset {
    /// Canonical key under the default bound of 8 elements.
    pub fn canonical_key(&self) -> Result<CanonicalKey> {
        self.canonical_key_within(crate::Limits::default().canonical_max_n)
    }

    /// Brute force over all `n!` relabelings; rejects `n > bound`.
    pub fn canonical_key_within(&self, bound: usize) -> Result<CanonicalKey> {
        let n = self.len();
        if n > bound || n > u8::MAX as usize {
            return Err(Error::TooLarge { n, bound });
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.encode(&perm);
        // Heap's algorithm, iterative.
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let candidate = self.encode(&perm);
                if candidate < best {
                    best = candidate;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        Ok(CanonicalKey(best))
    }

    /// Encodes the relabeled order where new element `a` is old `perm[a]`.
    fn encode(&self, perm: &[usize]) -> Vec<u8> {
        let n = perm.len();
        let mut out = Vec::with_capacity(1 + (n * n).div_ceil(8));
        out.push(n as u8);
        let mut byte = 0u8;
        let mut filled = 0;
        for &i in perm {
            for &j in perm {
                // Set bits are "not below" so that more relations sort first.
                byte = (byte << 1) | u8::from(!self.lt(i, j));
                filled += 1;
                if filled == 8 {
                    out.push(byte);
                    byte = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(byte << (8 - filled));
        }
        out
    }

    pub fn is_isomorphic(&self, other: &Poset) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }
}
