use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{PlumbingForest, SurgeryError};

/// A symmetric integer matrix: the linking matrix of a framed link.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct LinkingMatrix {
    rows: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SurgeryError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SurgeryError::InvalidMatrix("matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(SurgeryError::InvalidMatrix(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(LinkingMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.size()).map(|i| self.rows[i][i]).collect()
    }

    /// L·x over the integers.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Parses `[[a, b], [b, c]]` (JSON-style nested lists).
    pub fn parse(text: &str) -> Result<Self, SurgeryError> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(text.trim())
            .map_err(|e| SurgeryError::InvalidMatrix(format!("expected [[...], ...]: {e}")))?;
        Self::new(rows)
    }
}

impl TryFrom<Vec<Vec<i64>>> for LinkingMatrix {
    type Error = SurgeryError;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, SurgeryError> {
        Self::new(rows)
    }
}

impl From<LinkingMatrix> for Vec<Vec<i64>> {
    fn from(m: LinkingMatrix) -> Self {
        m.rows
    }
}

/// Diagonal framings, edge signs off the diagonal.
pub fn linking_matrix(forest: &PlumbingForest) -> LinkingMatrix {
    let n = forest.vertex_count();
    let mut rows = vec![vec![0i64; n]; n];
    for (v, row) in rows.iter_mut().enumerate() {
        row[v] = forest.framing(v);
    }
    for e in forest.edges() {
        rows[e.u][e.v] = i64::from(e.sign);
        rows[e.v][e.u] = i64::from(e.sign);
    }
    LinkingMatrix { rows }
}

/// Inertia of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignaturePair {
    pub b_plus: usize,
    pub b_minus: usize,
    pub nullity: usize,
}

/// Exact inertia by symmetric elimination over Q.
///
/// When every remaining diagonal entry vanishes, a congruence e_i ↦ e_i + e_j with
/// a_ij ≠ 0 produces the nonzero pivot 2a_ij.
pub fn signature(matrix: &LinkingMatrix) -> SignaturePair {
    let n = matrix.size();
    let mut a: Vec<Vec<BigRational>> = matrix
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut out = SignaturePair {
        b_plus: 0,
        b_minus: 0,
        nullity: 0,
    };
    while !alive.is_empty() {
        let pivot = alive.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = alive.iter().flat_map(|&i| alive.iter().map(move |&j| (i, j))).find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else {
                    out.nullity += alive.len();
                    break;
                };
                for &k in &alive {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for &k in &alive {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        if a[p][p].is_positive() {
            out.b_plus += 1;
        } else {
            out.b_minus += 1;
        }
        alive.retain(|&x| x != p);
        let inv = a[p][p].recip();
        let col: Vec<BigRational> = alive.iter().map(|&k| a[k][p].clone()).collect();
        for (x, &j) in alive.iter().enumerate() {
            if col[x].is_zero() {
                continue;
            }
            let f = &col[x] * &inv;
            for (y, &k) in alive.iter().enumerate() {
                if !col[y].is_zero() {
                    let t = &f * &col[y];
                    a[j][k] -= t;
                }
            }
        }
    }
    out
}
