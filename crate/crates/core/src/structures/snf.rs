//! Diagonalization of integer matrices over Z_m and linear solving mod m.

pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Bézout coefficients for a pivot step, preferring plain subtraction when p | q.
fn pivot_gcd(p: i128, q: i128) -> (i128, i128, i128) {
    if q % p == 0 {
        (p, 1, 0)
    } else {
        ext_gcd(p, q)
    }
}

/// U·A·V ≡ D (mod m) with U, V invertible over Z_m and D diagonal.
#[derive(Debug, Clone)]
pub struct ModDiagonalization {
    pub modulus: u64,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub diagonal: Vec<i64>,
}

impl ModDiagonalization {
    /// |coker(A mod m)| = Π gcd(D_ii, m).
    pub fn cokernel_order(&self) -> u128 {
        let m = self.modulus as i128;
        self.diagonal
            .iter()
            .map(|&x| ext_gcd(x as i128, m).0 as u128)
            .product()
    }
}

/// Smith-style diagonalization of a square matrix over Z_m by unimodular
/// row and column operations on representatives.
pub fn diagonalize_mod(a: &[Vec<i64>], m: u64) -> ModDiagonalization {
    let n = a.len();
    let mi = m as i128;
    let md = |x: i128| x.rem_euclid(mi);
    let mut a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| md(x as i128)).collect()).collect();
    let ident = |n: usize| -> Vec<Vec<i128>> {
        (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
    };
    let mut u = ident(n);
    let mut v = ident(n);
    for t in 0..n {
        let Some((pi, pj)) = (t..n)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] != 0)
        else {
            break;
        };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..n {
                if a[i][t] == 0 {
                    continue;
                }
                dirty = true;
                let (p, q) = (a[t][t], a[i][t]);
                let (g, x, y) = pivot_gcd(p, q);
                let (pg, qg) = (p / g, q / g);
                // [x y; -q/g p/g] has determinant 1
                for (mat, cols) in [(&mut a, n), (&mut u, n)] {
                    for c in 0..cols {
                        let (rt, ri) = (mat[t][c], mat[i][c]);
                        mat[t][c] = md(x * rt + y * ri);
                        mat[i][c] = md(-qg * rt + pg * ri);
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] == 0 {
                    continue;
                }
                dirty = true;
                let (p, q) = (a[t][t], a[t][j]);
                let (g, x, y) = pivot_gcd(p, q);
                let (pg, qg) = (p / g, q / g);
                for mat in [&mut a, &mut v] {
                    for row in mat.iter_mut() {
                        let (ct, cj) = (row[t], row[j]);
                        row[t] = md(x * ct + y * cj);
                        row[j] = md(-qg * ct + pg * cj);
                    }
                }
            }
            if !dirty {
                break;
            }
        }
    }
    let to64 = |m: Vec<Vec<i128>>| -> Vec<Vec<i64>> {
        m.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect()
    };
    ModDiagonalization {
        modulus: m,
        diagonal: (0..n).map(|i| a[i][i] as i64).collect(),
        u: to64(u),
        v: to64(v),
    }
}

/// All s ∈ (Z_m)^n with A·s ≡ b (mod m), sorted lexicographically.
pub fn solve_mod(a: &[Vec<i64>], b: &[i64], m: u64) -> Vec<Vec<i64>> {
    let n = a.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let dz = diagonalize_mod(a, m);
    let mi = m as i128;
    // per-coordinate solutions of D_ii·y_i ≡ (U b)_i
    let mut choices: Vec<Vec<i128>> = Vec::with_capacity(n);
    for i in 0..n {
        let c: i128 = (0..n).map(|k| dz.u[i][k] as i128 * b[k] as i128).sum::<i128>().rem_euclid(mi);
        let di = dz.diagonal[i] as i128;
        let (g, x, _) = ext_gcd(di, mi);
        if c % g != 0 {
            return Vec::new();
        }
        let step = mi / g;
        let y0 = (x * (c / g)).rem_euclid(step);
        choices.push((0..g).map(|k| y0 + k * step).collect());
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let s: Vec<i64> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|k| dz.v[r][k] as i128 * choices[k][idx[k]])
                    .sum::<i128>()
                    .rem_euclid(mi) as i64
            })
            .collect();
        out.push(s);
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>], m: i64) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] as i128 * b[k][j] as i128).sum::<i128>().rem_euclid(m as i128) as i64)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn diagonalization_identity() {
        let a = vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]];
        for m in [2u64, 3, 4, 6, 12] {
            let dz = diagonalize_mod(&a, m);
            let d = matmul(&matmul(&dz.u, &a, m as i64), &dz.v, m as i64);
            for i in 0..3 {
                for j in 0..3 {
                    let expect = if i == j { dz.diagonal[i].rem_euclid(m as i64) } else { 0 };
                    assert_eq!(d[i][j], expect, "m = {m}");
                }
            }
        }
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_mod(&[vec![1]], &[1], 2), vec![vec![1]]);
        assert_eq!(solve_mod(&[vec![0]], &[0], 2), vec![vec![0], vec![1]]);
        assert_eq!(solve_mod(&[vec![2]], &[0], 2), vec![vec![0], vec![1]]);
        assert_eq!(solve_mod(&[vec![2, 1], vec![1, 2]], &[0, 0], 3).len(), 3);
        assert!(solve_mod(&[vec![2]], &[1], 4).is_empty());
    }
}
