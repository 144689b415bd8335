//! Exhaustive enumeration, used to cross-check the modular solvers.

use std::collections::{HashSet, VecDeque};

use crate::surgery::LinkingMatrix;

use super::StructureError;

/// Largest search space accepted (number of candidate vectors).
pub const MAX_SEARCH: u128 = 1 << 24;

fn space(m: u64, n: usize) -> Result<u128, StructureError> {
    let size = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > MAX_SEARCH {
        Err(StructureError::TooLarge(size))
    } else {
        Ok(size)
    }
}

/// Calls `f` on every vector of (Z_m)^n in lexicographic order.
pub fn for_each_vector(m: u64, n: usize, mut f: impl FnMut(&[i64])) {
    let mut cur = vec![0i64; n];
    loop {
        f(&cur);
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < m as i64 {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// All s ∈ (Z_m)^n with L·s ≡ b (mod m).
pub fn solutions(l: &LinkingMatrix, b: &[i64], m: u64) -> Result<Vec<Vec<i64>>, StructureError> {
    space(m, l.size())?;
    let mi = m as i64;
    let mut out = Vec::new();
    for_each_vector(m, l.size(), |s| {
        let ls = l.apply(s);
        if ls.iter().zip(b).all(|(x, y)| (x - y).rem_euclid(mi) == 0) {
            out.push(s.to_vec());
        }
    });
    Ok(out)
}

pub fn spin_solutions(l: &LinkingMatrix, d: u64) -> Result<Vec<Vec<i64>>, StructureError> {
    let b: Vec<i64> = l.diagonal().iter().map(|x| x * (d as i64 / 2)).collect();
    solutions(l, &b, d)
}

pub fn cohomology_classes(l: &LinkingMatrix, d: u64) -> Result<Vec<Vec<i64>>, StructureError> {
    solutions(l, &vec![0; l.size()], d)
}

/// The subgroup of (Z_m)^n generated by `scale` times the columns of L,
/// by breadth-first closure.
pub fn image_closure(l: &LinkingMatrix, scale: i64, m: u64) -> Result<HashSet<Vec<i64>>, StructureError> {
    let n = l.size();
    space(m, n)?;
    let mi = m as i64;
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| (scale * l.get(i, j)).rem_euclid(mi)).collect())
        .collect();
    let zero = vec![0i64; n];
    let mut seen = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(mi)).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Lexicographically minimal coset representatives of `set` modulo `subgroup`.
fn coset_minima(set: Vec<Vec<i64>>, subgroup: &HashSet<Vec<i64>>, m: u64) -> Vec<Vec<i64>> {
    let mi = m as i64;
    let mut covered: HashSet<Vec<i64>> = HashSet::new();
    let mut reps = Vec::new();
    // `set` arrives sorted, so the first uncovered element of a coset is its minimum
    for x in set {
        if covered.contains(&x) {
            continue;
        }
        for g in subgroup {
            covered.insert(x.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(mi)).collect());
        }
        reps.push(x);
    }
    reps
}

/// Chern vector classes by exhaustive enumeration over (Z_2d)^n.
pub fn chern_vectors(l: &LinkingMatrix, d: u64) -> Result<Vec<Vec<i64>>, StructureError> {
    let m = 2 * d;
    let sub = image_closure(l, 2, m)?;
    let diag = l.diagonal();
    let mut parity = Vec::new();
    for_each_vector(m, l.size(), |s| {
        if s.iter().zip(&diag).all(|(a, b)| (a - b).rem_euclid(2) == 0) {
            parity.push(s.to_vec());
        }
    });
    Ok(coset_minima(parity, &sub, m))
}

pub fn homology_classes(l: &LinkingMatrix, d: u64) -> Result<Vec<Vec<i64>>, StructureError> {
    let sub = image_closure(l, 1, d)?;
    let mut all = Vec::new();
    for_each_vector(d, l.size(), |s| all.push(s.to_vec()));
    Ok(coset_minima(all, &sub, d))
}
