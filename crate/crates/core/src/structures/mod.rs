//! Spin, cohomology, Chern-vector and homology structure sets of a linking matrix.

pub mod brute;
pub mod howell;
pub mod snf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::surgery::LinkingMatrix;

pub use howell::Submodule;
pub use snf::{diagonalize_mod, solve_mod, ModDiagonalization};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("invalid structure element: {0}")]
    InvalidElement(String),
    #[error("invalid matrix move: {0}")]
    InvalidMove(String),
    #[error("search space too large for exhaustive enumeration ({0} vectors)")]
    TooLarge(u128),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    /// Modulo-d characteristic solutions.
    Spin,
    /// Kernel of L over Z_d.
    #[serde(rename = "coh")]
    Cohomology,
    /// Modulo-d Chern vectors, in (Z_2d)^n modulo 2·Im L.
    Chern,
    /// (Z_d)^n modulo Im L.
    #[serde(rename = "hom")]
    Homology,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Spin => "spin",
            StructureKind::Cohomology => "coh",
            StructureKind::Chern => "chern",
            StructureKind::Homology => "hom",
        }
    }

    pub fn parse(s: &str) -> Option<StructureKind> {
        match s {
            "spin" => Some(StructureKind::Spin),
            "coh" | "cohomology" => Some(StructureKind::Cohomology),
            "chern" | "spinc" => Some(StructureKind::Chern),
            "hom" | "homology" => Some(StructureKind::Homology),
            _ => None,
        }
    }

    /// The modulus of the coordinates: 2d for Chern vectors, d otherwise.
    pub fn coordinate_modulus(self, d: u64) -> u64 {
        match self {
            StructureKind::Chern => 2 * d,
            _ => d,
        }
    }

    /// Whether elements are cosets (compared through canonical representatives).
    pub fn is_class_valued(self) -> bool {
        matches!(self, StructureKind::Chern | StructureKind::Homology)
    }
}

/// Moves on linking matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixMove {
    /// Append a ±1 diagonal block.
    Stabilize(i64),
    /// Remove a ±1 diagonal block at the given index.
    Destabilize(usize),
    /// Slide component i over j: e'_i = e_i + sign·e_j, L' = PᵀLP.
    Slide { i: usize, j: usize, sign: i64 },
    /// Reverse component i.
    Reverse(usize),
}

pub fn apply_matrix_move(l: &LinkingMatrix, mv: &MatrixMove) -> Result<LinkingMatrix, StructureError> {
    let n = l.size();
    let mut rows = l.rows().to_vec();
    let range = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(StructureError::InvalidMove(format!("index {v} out of range for size {n}")))
        }
    };
    match *mv {
        MatrixMove::Stabilize(e) => {
            if e.abs() != 1 {
                return Err(StructureError::InvalidMove(format!("stabilization by {e}")));
            }
            for r in rows.iter_mut() {
                r.push(0);
            }
            let mut last = vec![0; n + 1];
            last[n] = e;
            rows.push(last);
        }
        MatrixMove::Destabilize(i) => {
            range(i)?;
            if rows[i][i].abs() != 1 || (0..n).any(|k| k != i && rows[i][k] != 0) {
                return Err(StructureError::InvalidMove(format!("component {i} is not a split ±1 block")));
            }
            rows.remove(i);
            for r in rows.iter_mut() {
                r.remove(i);
            }
        }
        MatrixMove::Slide { i, j, sign } => {
            range(i)?;
            range(j)?;
            if i == j || sign.abs() != 1 {
                return Err(StructureError::InvalidMove(format!("slide of {i} over {j} with sign {sign}")));
            }
            let lij = rows[i][j];
            let (lii, ljj) = (rows[i][i], rows[j][j]);
            for k in 0..n {
                if k != i {
                    let v = rows[i][k] + sign * rows[j][k];
                    rows[i][k] = v;
                    rows[k][i] = v;
                }
            }
            rows[i][i] = lii + 2 * sign * lij + ljj;
        }
        MatrixMove::Reverse(i) => {
            range(i)?;
            for k in 0..n {
                if k != i {
                    rows[i][k] = -rows[i][k];
                    rows[k][i] = -rows[k][i];
                }
            }
        }
    }
    Ok(LinkingMatrix::new(rows).expect("moves preserve symmetry"))
}

fn check_modulus(kind: StructureKind, d: u64) -> Result<(), StructureError> {
    if d == 0 {
        return Err(StructureError::InvalidModulus("d must be at least 1".into()));
    }
    if kind == StructureKind::Spin && d % 2 != 0 {
        return Err(StructureError::InvalidModulus(format!("spin structures need even d, got {d}")));
    }
    Ok(())
}

fn reduce_vec(x: &[i64], m: u64) -> Vec<i64> {
    x.iter().map(|&v| v.rem_euclid(m as i64)).collect()
}

/// Right-hand side (d/2)·diag(L) of the characteristic equation.
fn spin_target(l: &LinkingMatrix, d: u64) -> Vec<i64> {
    l.diagonal().iter().map(|&x| (x * (d as i64 / 2)).rem_euclid(d as i64)).collect()
}

/// Checks that `x` is a valid element of the given kind.
pub fn validate(kind: StructureKind, l: &LinkingMatrix, d: u64, x: &[i64]) -> Result<(), StructureError> {
    check_modulus(kind, d)?;
    let n = l.size();
    if x.len() != n {
        return Err(StructureError::InvalidElement(format!("expected {n} coordinates, found {}", x.len())));
    }
    let di = d as i64;
    match kind {
        StructureKind::Spin | StructureKind::Cohomology => {
            let lhs = l.apply(&reduce_vec(x, d));
            let rhs = if kind == StructureKind::Spin { spin_target(l, d) } else { vec![0; n] };
            if let Some(i) = (0..n).find(|&i| (lhs[i] - rhs[i]).rem_euclid(di) != 0) {
                return Err(StructureError::InvalidElement(format!(
                    "row {i}: Σ L_ij x_j = {} but {} is required mod {d}",
                    lhs[i].rem_euclid(di),
                    rhs[i]
                )));
            }
        }
        StructureKind::Chern => {
            if let Some(i) = (0..n).find(|&i| (x[i] - l.get(i, i)).rem_euclid(2) != 0) {
                return Err(StructureError::InvalidElement(format!(
                    "coordinate {i} has the wrong parity (L_ii = {})",
                    l.get(i, i)
                )));
            }
        }
        StructureKind::Homology => {}
    }
    Ok(())
}

fn columns(l: &LinkingMatrix, scale: i64) -> Vec<Vec<i64>> {
    (0..l.size()).map(|j| (0..l.size()).map(|i| scale * l.get(i, j)).collect()).collect()
}

fn parity_vector(l: &LinkingMatrix) -> Vec<i64> {
    l.diagonal().iter().map(|x| x.rem_euclid(2)).collect()
}

/// Lexicographically minimal representative (plain reduction for the vector kinds).
pub fn canonical_element(kind: StructureKind, l: &LinkingMatrix, d: u64, x: &[i64]) -> Result<Vec<i64>, StructureError> {
    validate(kind, l, d, x)?;
    Ok(match kind {
        StructureKind::Spin | StructureKind::Cohomology => reduce_vec(x, d),
        StructureKind::Homology => Submodule::from_generators(d, l.size(), &columns(l, 1)).reduce(x),
        StructureKind::Chern => {
            let p = parity_vector(l);
            let h: Vec<i64> = reduce_vec(x, 2 * d).iter().zip(&p).map(|(s, q)| (s - q) / 2).collect();
            let h = Submodule::from_generators(d, l.size(), &columns(l, 1)).reduce(&h);
            h.iter().zip(&p).map(|(a, q)| q + 2 * a).collect()
        }
    })
}

/// Carries an element across a matrix move; returns the new matrix and element.
///
/// Vector kinds transform contravariantly (x' = P⁻¹x), class kinds covariantly (σ' = Pᵀσ).
pub fn transport(
    kind: StructureKind,
    l: &LinkingMatrix,
    d: u64,
    mv: &MatrixMove,
    x: &[i64],
) -> Result<(LinkingMatrix, Vec<i64>), StructureError> {
    validate(kind, l, d, x)?;
    let next = apply_matrix_move(l, mv)?;
    let mut y = x.to_vec();
    match *mv {
        MatrixMove::Stabilize(_) => y.push(match kind {
            StructureKind::Spin => d as i64 / 2,
            StructureKind::Cohomology | StructureKind::Homology => 0,
            StructureKind::Chern => 1,
        }),
        MatrixMove::Destabilize(i) => {
            y.remove(i);
        }
        MatrixMove::Slide { i, j, sign } => {
            if kind.is_class_valued() {
                y[i] += sign * x[j];
            } else {
                y[j] -= sign * x[i];
            }
        }
        MatrixMove::Reverse(i) => y[i] = -y[i],
    }
    let y = reduce_vec(&y, kind.coordinate_modulus(d));
    debug_assert!(validate(kind, &next, d, &y).is_ok());
    Ok((next, y))
}

/// Modulo-d characteristic solutions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpinSolutionSet {
    pub modulus: u64,
    pub solutions: Vec<Vec<i64>>,
}

/// Solutions of L·h ≡ 0 (mod d).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyClassSet {
    pub modulus: u64,
    pub solutions: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVectorSet {
    pub modulus: u64,
    /// Lexicographically minimal coset representatives in (Z_2d)^n.
    pub classes: Vec<Vec<i64>>,
    /// 2·Im L inside (Z_2d)^n.
    pub subgroup: Submodule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyClassSet {
    pub modulus: u64,
    pub classes: Vec<Vec<i64>>,
    /// Im L inside (Z_d)^n.
    pub image: Submodule,
}

pub fn spin_solutions(l: &LinkingMatrix, d: u64) -> Result<SpinSolutionSet, StructureError> {
    check_modulus(StructureKind::Spin, d)?;
    Ok(SpinSolutionSet {
        modulus: d,
        solutions: solve_mod(l.rows(), &spin_target(l, d), d),
    })
}

pub fn cohomology_classes(l: &LinkingMatrix, d: u64) -> Result<CohomologyClassSet, StructureError> {
    check_modulus(StructureKind::Cohomology, d)?;
    Ok(CohomologyClassSet {
        modulus: d,
        solutions: solve_mod(l.rows(), &vec![0; l.size()], d),
    })
}

pub fn homology_classes(l: &LinkingMatrix, d: u64) -> Result<HomologyClassSet, StructureError> {
    check_modulus(StructureKind::Homology, d)?;
    let image = Submodule::from_generators(d, l.size(), &columns(l, 1));
    Ok(HomologyClassSet {
        modulus: d,
        classes: image.quotient_representatives(),
        image,
    })
}

/// Chern vectors mod 2·Im L. Since σ ↦ (σ − parity)/2 identifies these cosets
/// with (Z_d)^n / Im L monotonically, representatives come from the homology quotient.
pub fn chern_vectors(l: &LinkingMatrix, d: u64) -> Result<ChernVectorSet, StructureError> {
    check_modulus(StructureKind::Chern, d)?;
    let p = parity_vector(l);
    let hom = homology_classes(l, d)?;
    Ok(ChernVectorSet {
        modulus: d,
        classes: hom
            .classes
            .iter()
            .map(|h| h.iter().zip(&p).map(|(a, q)| q + 2 * a).collect())
            .collect(),
        subgroup: Submodule::from_generators(2 * d, l.size(), &columns(l, 2)),
    })
}

/// |coker(L mod d)| from the diagonalization, independent of the coset enumeration.
pub fn cokernel_order(l: &LinkingMatrix, d: u64) -> u128 {
    diagonalize_mod(l.rows(), d).cokernel_order()
}

/// All elements (or canonical representatives) of a structure set, sorted.
pub fn enumerate(kind: StructureKind, l: &LinkingMatrix, d: u64) -> Result<Vec<Vec<i64>>, StructureError> {
    Ok(match kind {
        StructureKind::Spin => spin_solutions(l, d)?.solutions,
        StructureKind::Cohomology => cohomology_classes(l, d)?.solutions,
        StructureKind::Chern => chern_vectors(l, d)?.classes,
        StructureKind::Homology => homology_classes(l, d)?.classes,
    })
}

/// One cyclic factor Z_d of a (K, v) structure: spin (v ≠ 0) or cohomological (v = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub d: u64,
    pub spin: bool,
}

/// (K, v) structures for K = ⊕ Z_{d_j}, as tuples of per-factor elements.
pub fn kv_structures(l: &LinkingMatrix, factors: &[CyclicFactor]) -> Result<Vec<Vec<Vec<i64>>>, StructureError> {
    let mut out: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for f in factors {
        let kind = if f.spin { StructureKind::Spin } else { StructureKind::Cohomology };
        let elems = enumerate(kind, l, f.d)?;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                elems.iter().map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e.clone());
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
