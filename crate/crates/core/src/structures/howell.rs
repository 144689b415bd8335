//! Submodules of (Z_m)^n in Howell form, used for canonical coset representatives.

use super::snf::ext_gcd;

/// A submodule of (Z_m)^n in Howell normal form.
///
/// Reduction against the pivot rows in column order yields the
/// lexicographically smallest element of a coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    modulus: u64,
    dim: usize,
    /// (pivot column, row); the pivot entry divides the modulus.
    rows: Vec<(usize, Vec<i64>)>,
}

fn unit_multiplier(x: i128, m: i128) -> i128 {
    // u with u·x ≡ gcd(x, m) (mod m) and gcd(u, m) = 1
    let (g, _, _) = ext_gcd(x, m);
    let mp = m / g;
    let (_, inv, _) = ext_gcd(x / g, mp);
    let u0 = inv.rem_euclid(mp.max(1));
    let mut u = u0;
    while ext_gcd(u, m).0 != 1 {
        u += mp;
    }
    u
}

impl Submodule {
    pub fn from_generators(modulus: u64, dim: usize, generators: &[Vec<i64>]) -> Submodule {
        let m = modulus as i128;
        let md = |x: i128| x.rem_euclid(m) as i64;
        let mut work: Vec<Vec<i64>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| md(x as i128)).collect())
            .filter(|g: &Vec<i64>| g.iter().any(|&x| x != 0))
            .collect();
        let mut rows = Vec::new();
        for col in 0..dim {
            let mut pivot: Option<Vec<i64>> = None;
            let mut rest = Vec::with_capacity(work.len());
            for r in work.drain(..) {
                if r[col] == 0 {
                    rest.push(r);
                    continue;
                }
                match pivot.take() {
                    None => pivot = Some(r),
                    Some(p) => {
                        let (a, b) = (p[col] as i128, r[col] as i128);
                        let (g, x, y) = ext_gcd(a, b);
                        let np: Vec<i64> = (0..dim).map(|c| md(x * p[c] as i128 + y * r[c] as i128)).collect();
                        let nr: Vec<i64> = (0..dim)
                            .map(|c| md((b / g) * p[c] as i128 - (a / g) * r[c] as i128))
                            .collect();
                        if nr.iter().any(|&v| v != 0) {
                            rest.push(nr);
                        }
                        pivot = Some(np);
                    }
                }
            }
            if let Some(p) = pivot {
                let u = unit_multiplier(p[col] as i128, m);
                let p: Vec<i64> = p.iter().map(|&v| md(u * v as i128)).collect();
                let g = p[col] as i128;
                let annihilated: Vec<i64> = p.iter().map(|&v| md((m / g) * v as i128)).collect();
                if annihilated.iter().any(|&v| v != 0) {
                    rest.push(annihilated);
                }
                rows.push((col, p));
            }
            work = rest;
        }
        Submodule { modulus, dim, rows }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u128 {
        self.rows
            .iter()
            .map(|(c, r)| (self.modulus / r[*c] as u64) as u128)
            .product()
    }

    /// (column, pivot entry) pairs.
    pub fn pivots(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.rows.iter().map(|(c, r)| (*c, r[*c] as u64))
    }

    /// Lexicographically minimal element of `x + self`, entries in [0, m).
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        let m = self.modulus as i128;
        let mut x: Vec<i128> = x.iter().map(|&v| (v as i128).rem_euclid(m)).collect();
        for (col, row) in &self.rows {
            let q = x[*col] / row[*col] as i128;
            if q != 0 {
                for (xi, &ri) in x.iter_mut().zip(row) {
                    *xi = (*xi - q * ri as i128).rem_euclid(m);
                }
            }
        }
        x.into_iter().map(|v| v as i64).collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&v| v == 0)
    }

    /// Every element, as Σ c_i·row_i with 0 ≤ c_i < m / pivot_i.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let m = self.modulus as i64;
        let mut out = vec![vec![0i64; self.dim]];
        for (c, row) in &self.rows {
            let count = m / row[*c];
            let mut next = Vec::with_capacity(out.len() * count as usize);
            for x in &out {
                for k in 0..count {
                    next.push(x.iter().zip(row).map(|(a, b)| (a + k * b).rem_euclid(m)).collect());
                }
            }
            out = next;
        }
        out
    }

    /// Canonical representatives of (Z_m)^n / self in lexicographic order.
    pub fn quotient_representatives(&self) -> Vec<Vec<i64>> {
        let mut bound = vec![self.modulus as i64; self.dim];
        for (c, p) in self.pivots() {
            bound[c] = p as i64;
        }
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.dim];
        loop {
            out.push(cur.clone());
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < bound[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure(m: i64, gens: &[Vec<i64>], n: usize) -> HashSet<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = vec![vec![0; n]];
        seen.insert(vec![0; n]);
        while let Some(x) = queue.pop() {
            for g in gens {
                let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(m)).collect();
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn matches_closure() {
        let cases: Vec<(i64, Vec<Vec<i64>>)> = vec![
            (4, vec![vec![2, 0], vec![0, 2]]),
            (8, vec![vec![2, 4, 6], vec![4, 0, 2], vec![6, 2, 0]]),
            (6, vec![vec![3, 2], vec![2, 3]]),
            (12, vec![vec![4, 6, 0], vec![6, 9, 3]]),
            (4, vec![vec![0, 0]]),
        ];
        for (m, gens) in cases {
            let n = gens[0].len();
            let sub = Submodule::from_generators(m as u64, n, &gens);
            let set = closure(m, &gens, n);
            assert_eq!(sub.order(), set.len() as u128);
            let elems: HashSet<Vec<i64>> = sub.elements().into_iter().collect();
            assert_eq!(elems, set);
            for x in &set {
                assert!(sub.contains(x));
            }
            let reps = sub.quotient_representatives();
            assert_eq!(reps.len() as u128 * sub.order(), (m as u128).pow(n as u32));
            // each representative is the minimum of its coset
            for r in &reps {
                let min = set
                    .iter()
                    .map(|s| r.iter().zip(s).map(|(a, b)| (a + b).rem_euclid(m)).collect::<Vec<_>>())
                    .min()
                    .unwrap();
                assert_eq!(&min, r);
            }
        }
    }
}
