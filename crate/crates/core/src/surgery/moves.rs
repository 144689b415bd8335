use serde::{Deserialize, Serialize};

use crate::structures::{self, MatrixMove, StructureKind};

use super::{linking_matrix, Edge, PlumbingForest, SurgeryError};

/// ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Moves that keep a surgery presentation inside the plumbing-forest class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// Add an isolated ±1-framed vertex.
    Stabilize(Sign),
    /// Add a ±1-framed leaf on `vertex`, changing its framing by the same sign.
    BlowUp { vertex: usize, sign: Sign },
    /// Remove a ±1-framed leaf or isolated vertex.
    BlowDown { vertex: usize },
    /// Reverse the orientation of one component.
    Reverse { vertex: usize },
}

pub fn apply_move(forest: &PlumbingForest, mv: &Move) -> Result<PlumbingForest, SurgeryError> {
    let n = forest.vertex_count();
    let check = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(SurgeryError::IllegalMove(format!("vertex {v} out of range")))
        }
    };
    let mut framings = forest.framings().to_vec();
    let mut edges = forest.edges().to_vec();
    match *mv {
        Move::Stabilize(s) => framings.push(s.value()),
        Move::BlowUp { vertex, sign } => {
            check(vertex)?;
            framings[vertex] += sign.value();
            framings.push(sign.value());
            edges.push(Edge::new(vertex, n, 1));
        }
        Move::BlowDown { vertex } => {
            check(vertex)?;
            let eps = forest.framing(vertex);
            if eps.abs() != 1 {
                return Err(SurgeryError::IllegalMove(format!(
                    "blow-down of vertex {vertex} with framing {eps}"
                )));
            }
            let nbrs = forest.neighbors(vertex);
            if nbrs.len() > 1 {
                return Err(SurgeryError::IllegalMove(format!(
                    "blow-down of vertex {vertex} of degree {}",
                    nbrs.len()
                )));
            }
            if let Some(&(u, _)) = nbrs.first() {
                framings[u] -= eps;
            }
            framings.remove(vertex);
            edges.retain(|e| e.u != vertex && e.v != vertex);
            let shift = |x: usize| if x > vertex { x - 1 } else { x };
            for e in edges.iter_mut() {
                *e = Edge::new(shift(e.u), shift(e.v), e.sign);
            }
        }
        Move::Reverse { vertex } => {
            check(vertex)?;
            for e in edges.iter_mut() {
                if e.u == vertex || e.v == vertex {
                    e.sign = -e.sign;
                }
            }
        }
    }
    PlumbingForest::new(framings, edges)
}

/// The move as a sequence of linking-matrix moves (stabilizations, slides, reversals).
pub fn matrix_moves(forest: &PlumbingForest, mv: &Move) -> Result<Vec<MatrixMove>, SurgeryError> {
    let n = forest.vertex_count();
    Ok(match *mv {
        Move::Stabilize(s) => vec![MatrixMove::Stabilize(s.value())],
        Move::Reverse { vertex } => vec![MatrixMove::Reverse(vertex)],
        Move::BlowUp { vertex, sign } => vec![
            MatrixMove::Stabilize(sign.value()),
            MatrixMove::Slide {
                i: vertex,
                j: n,
                sign: sign.value(),
            },
        ],
        Move::BlowDown { vertex } => {
            // validates the target
            apply_move(forest, mv)?;
            let eps = forest.framing(vertex);
            let mut out = Vec::new();
            if let Some(&(u, e)) = forest.neighbors(vertex).first() {
                out.push(MatrixMove::Slide {
                    i: u,
                    j: vertex,
                    sign: -i64::from(e) * eps,
                });
            }
            out.push(MatrixMove::Destabilize(vertex));
            out
        }
    })
}

/// Carries a structure vector of `forest` across `mv`.
///
/// Class-valued kinds (Chern vectors, homology) are returned as canonical
/// representatives of the target set.
pub fn structure_transport(
    forest: &PlumbingForest,
    mv: &Move,
    kind: StructureKind,
    d: u64,
    element: &[i64],
) -> Result<Vec<i64>, SurgeryError> {
    let mut matrix = linking_matrix(forest);
    let mut x = element.to_vec();
    structures::validate(kind, &matrix, d, &x)?;
    for m in matrix_moves(forest, mv)? {
        let (next, y) = structures::transport(kind, &matrix, d, &m, &x)?;
        matrix = next;
        x = y;
    }
    debug_assert_eq!(matrix, linking_matrix(&apply_move(forest, mv)?));
    Ok(structures::canonical_element(kind, &matrix, d, &x)?)
}
