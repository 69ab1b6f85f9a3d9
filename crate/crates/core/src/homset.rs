//! Order-preserving maps between finite posets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// An isotone map `source -> target`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsotoneMap<'a> {
    source: &'a Poset,
    target: &'a Poset,
    image: Vec<usize>,
}

impl<'a> IsotoneMap<'a> {
    /// Validates `image` and wraps it.
    pub fn new(source: &'a Poset, target: &'a Poset, image: Vec<usize>) -> Result<Self> {
        if !is_isotone(source, target, &image)? {
            return Err(Error::Precondition(format!(
                "image {image:?} is not order preserving"
            )));
        }
        Ok(IsotoneMap {
            source,
            target,
            image,
        })
    }

    pub fn source(&self) -> &'a Poset {
        self.source
    }

    pub fn target(&self) -> &'a Poset {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p]
    }

    /// `other . self`, i.e. first `self`, then `other`.
    pub fn then(&self, other: &IsotoneMap<'a>) -> Result<IsotoneMap<'a>> {
        if self.target != other.source {
            return Err(Error::Precondition("maps are not composable".into()));
        }
        let image = self.image.iter().map(|&q| other.image[q]).collect();
        IsotoneMap::new(self.source, other.target, image)
    }
}

/// Whether `image` (one target index per source element) preserves order.
/// Checking the cover pairs of `source` is enough.
pub fn is_isotone(source: &Poset, target: &Poset, image: &[usize]) -> Result<bool> {
    if image.len() != source.len() {
        return Err(Error::LengthMismatch {
            expected: source.len(),
            got: image.len(),
        });
    }
    if let Some(&index) = image.iter().find(|&&q| q >= target.len()) {
        return Err(Error::IndexOutOfRange {
            index,
            size: target.len(),
        });
    }
    Ok(source
        .covers()
        .iter()
        .all(|&(i, j)| target.leq(image[i], image[j])))
}

/// All isotone maps `source -> target` in lexicographic order of their image
/// sequences. Fails once more than `cap` maps have been produced.
pub fn enumerate_hom<'a>(
    source: &'a Poset,
    target: &'a Poset,
    cap: usize,
) -> Result<Vec<IsotoneMap<'a>>> {
    let n = source.len();
    // constraints[i]: already-assigned elements j < i comparable to i.
    let constraints: Vec<Vec<(usize, bool)>> = (0..n)
        .map(|i| {
            (0..i)
                .filter(|&j| source.comparable(i, j))
                .map(|j| (j, source.leq(j, i)))
                .collect()
        })
        .collect();

    let mut maps = Vec::new();
    let mut image = vec![0usize; n];
    let mut depth = 0usize;
    // next candidate value at each depth
    let mut next = vec![0usize; n + 1];
    loop {
        if depth == n {
            if maps.len() == cap {
                return Err(Error::HomCapExceeded { cap });
            }
            maps.push(IsotoneMap {
                source,
                target,
                image: image.clone(),
            });
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        let mut placed = false;
        while next[depth] < target.len() {
            let q = next[depth];
            next[depth] += 1;
            let ok = constraints[depth].iter().all(|&(j, below)| {
                if below {
                    target.leq(image[j], q)
                } else {
                    target.leq(q, image[j])
                }
            });
            if ok {
                image[depth] = q;
                depth += 1;
                next[depth] = 0;
                placed = true;
                break;
            }
        }
        if !placed {
            if depth == 0 {
                break;
            }
            depth -= 1;
        }
    }
    Ok(maps)
}

/// `{p : phi(p) = p}` for a self-map.
pub fn fixpoints(phi: &IsotoneMap<'_>) -> Result<BTreeSet<usize>> {
    if phi.source != phi.target {
        return Err(Error::NotEndomorphism);
    }
    Ok(phi
        .image
        .iter()
        .enumerate()
        .filter(|&(p, &q)| p == q)
        .map(|(p, _)| p)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::{lambda_poset, v_poset};

    const CAP: usize = 1_000_000;

    #[test]
    fn isotone_examples() {
        let c2 = Poset::chain(2).unwrap();
        assert!(is_isotone(&c2, &c2, &[0, 1]).unwrap());
        assert!(!is_isotone(&c2, &c2, &[1, 0]).unwrap());
        assert!(is_isotone(&v_poset(), &lambda_poset(), &[2, 2, 0]).unwrap());
    }

    #[test]
    fn isotone_errors() {
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(
            is_isotone(&c2, &c2, &[0]),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            is_isotone(&c2, &c2, &[0, 2]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
    }

    #[test]
    fn hom_counts() {
        let c2 = Poset::chain(2).unwrap();
        let a2 = Poset::antichain(2).unwrap();
        let (v, l) = (v_poset(), lambda_poset());
        assert_eq!(enumerate_hom(&c2, &c2, CAP).unwrap().len(), 3);
        assert_eq!(enumerate_hom(&a2, &c2, CAP).unwrap().len(), 4);
        assert_eq!(enumerate_hom(&v, &l, CAP).unwrap().len(), 9);
    }

    #[test]
    fn hom_order_is_lexicographic() {
        let c2 = Poset::chain(2).unwrap();
        let images: Vec<Vec<usize>> = enumerate_hom(&c2, &c2, CAP)
            .unwrap()
            .into_iter()
            .map(|m| m.image)
            .collect();
        assert_eq!(images, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn hom_cap() {
        let a3 = Poset::antichain(3).unwrap();
        assert_eq!(enumerate_hom(&a3, &a3, 27).unwrap().len(), 27);
        assert_eq!(
            enumerate_hom(&a3, &a3, 26),
            Err(Error::HomCapExceeded { cap: 26 })
        );
    }

    #[test]
    fn fixpoint_examples() {
        let c3 = Poset::chain(3).unwrap();
        let id = IsotoneMap::new(&c3, &c3, vec![0, 1, 2]).unwrap();
        assert_eq!(fixpoints(&id).unwrap(), BTreeSet::from([0, 1, 2]));

        let v = v_poset();
        let to_min = IsotoneMap::new(&v, &v, vec![2, 2, 2]).unwrap();
        assert_eq!(fixpoints(&to_min).unwrap(), BTreeSet::from([2]));

        let a2 = Poset::antichain(2).unwrap();
        let swap = IsotoneMap::new(&a2, &a2, vec![1, 0]).unwrap();
        assert!(fixpoints(&swap).unwrap().is_empty());

        let c2 = Poset::chain(2).unwrap();
        let cross = IsotoneMap::new(&a2, &c2, vec![0, 1]).unwrap();
        assert_eq!(fixpoints(&cross), Err(Error::NotEndomorphism));
    }

    #[test]
    fn composition() {
        let (v, l) = (v_poset(), lambda_poset());
        let c2 = Poset::chain(2).unwrap();
        for f in enumerate_hom(&v, &l, CAP).unwrap() {
            for g in enumerate_hom(&l, &c2, CAP).unwrap() {
                let h = f.then(&g).unwrap();
                assert!(is_isotone(&v, &c2, h.image()).unwrap());
            }
        }
    }
}
