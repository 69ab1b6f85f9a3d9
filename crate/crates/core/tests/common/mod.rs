//! Brute-force reference implementations. None of these call into the code
//! paths they are used to check.
#![allow(dead_code)]

use isodual::{Cell, Ideal, Poset, PrimeCover};

/// Every minimal hitting set, found by scanning all subsets of the grid.
pub fn brute_force_covers(ideal: &Ideal) -> Vec<PrimeCover> {
    let cols = ideal.cols();
    let width = ideal.rows() * cols;
    assert!(width <= 20, "oracle is exponential in the grid size");
    let masks: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| {
            g.cells()
                .iter()
                .fold(0u32, |m, c| m | 1 << (c.p * cols + c.q))
        })
        .collect();
    let hits = |s: u32| masks.iter().all(|&g| g & s != 0);
    let mut out: Vec<PrimeCover> = (0u32..1 << width)
        .filter(|&s| hits(s) && (0..width).all(|b| s & (1 << b) == 0 || !hits(s & !(1 << b))))
        .map(|s| {
            PrimeCover::new(
                (0..width)
                    .filter(|b| s & (1 << b) != 0)
                    .map(|b| Cell::new(b / cols, b % cols))
                    .collect(),
            )
        })
        .collect();
    out.sort();
    out
}

/// All image sequences `P -> Q` that respect every comparable pair of `P`,
/// in lexicographic order.
pub fn brute_force_hom(p: &Poset, q: &Poset) -> Vec<Vec<usize>> {
    let (n, m) = (p.len(), q.len());
    let total = m.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        // most significant digit first gives lexicographic order
        let mut image = vec![0; n];
        let mut c = code;
        for slot in image.iter_mut().rev() {
            *slot = c % m;
            c /= m;
        }
        let ok = (0..n).all(|a| (0..n).all(|b| !p.leq(a, b) || q.leq(image[a], image[b])));
        if ok {
            out.push(image);
        }
    }
    out
}

/// Strict-order matrices of all partial orders on `n` labeled elements,
/// obtained by filtering every irreflexive relation for transitivity.
pub fn labeled_partial_orders(n: usize) -> Vec<Vec<bool>> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let mut lt = vec![false; n * n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            lt[i * n + j] = mask & (1 << k) != 0;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(lt[a * n + b] && lt[b * n + c]) || lt[a * n + c]))
        });
        if transitive {
            out.push(lt);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Isomorphism of strict-order matrices by trying every bijection.
pub fn isomorphic_matrices(a: &[bool], b: &[bool], n: usize) -> bool {
    permutations(n)
        .iter()
        .any(|pi| (0..n).all(|i| (0..n).all(|j| a[i * n + j] == b[pi[i] * n + pi[j]])))
}

pub fn strict_matrix(p: &Poset) -> Vec<bool> {
    let n = p.len();
    (0..n * n).map(|k| p.lt(k / n, k % n)).collect()
}

/// Representatives of the isomorphism classes of labeled partial orders.
pub fn labeled_classes(n: usize) -> Vec<Vec<bool>> {
    let mut reps: Vec<Vec<bool>> = Vec::new();
    for lt in labeled_partial_orders(n) {
        if !reps.iter().any(|r| isomorphic_matrices(r, &lt, n)) {
            reps.push(lt);
        }
    }
    reps
}

/// The posets named in the examples.
pub fn v() -> Poset {
    Poset::new(3, &[(2, 0), (2, 1)]).unwrap()
}

pub fn lambda() -> Poset {
    Poset::new(3, &[(0, 2), (1, 2)]).unwrap()
}

pub fn n_poset() -> Poset {
    Poset::new(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
}
