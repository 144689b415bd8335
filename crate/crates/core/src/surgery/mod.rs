//! Plumbing forests, linking matrices, signatures and Kirby-type moves.

mod forest;
mod matrix;
mod moves;

use thiserror::Error;

use crate::structures::StructureError;

pub use forest::{Edge, PlumbingForest};
pub use matrix::{linking_matrix, signature, LinkingMatrix, SignaturePair};
pub use moves::{apply_move, matrix_moves, structure_transport, Move, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::structures::{self, StructureKind};

    fn e8() -> PlumbingForest {
        // star with arms of length 1, 2, 4 around a central vertex
        let edges = vec![
            Edge::new(0, 1, 1),
            Edge::new(0, 2, 1),
            Edge::new(2, 3, 1),
            Edge::new(0, 4, 1),
            Edge::new(4, 5, 1),
            Edge::new(5, 6, 1),
            Edge::new(6, 7, 1),
        ];
        PlumbingForest::new(vec![2; 8], edges).unwrap()
    }

    #[test]
    fn linking_matrix_examples() {
        let single = PlumbingForest::new(vec![5], vec![]).unwrap();
        assert_eq!(linking_matrix(&single).rows(), &[vec![5]]);
        let hopf = PlumbingForest::new(vec![0, 0], vec![Edge::new(0, 1, 1)]).unwrap();
        assert_eq!(linking_matrix(&hopf).rows(), &[vec![0, 1], vec![1, 0]]);
        let chain = PlumbingForest::chain(&[1, 2, 3]);
        assert_eq!(linking_matrix(&chain).rows(), &[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 3]]);
    }

    #[test]
    fn forest_validation() {
        assert!(PlumbingForest::new(vec![0, 0], vec![Edge::new(0, 1, 2)]).is_err());
        assert!(PlumbingForest::new(vec![0, 0], vec![Edge::new(0, 1, 1), Edge::new(1, 0, -1)]).is_err());
        assert!(PlumbingForest::new(vec![0, 0, 0], vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(0, 2, 1)]).is_err());
        assert!(PlumbingForest::new(vec![0], vec![Edge::new(0, 0, 1)]).is_err());
        assert!(PlumbingForest::new(vec![0], vec![Edge::new(0, 3, 1)]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let text = "# lens space\nvertex a framing -2\nvertex b framing 3 # tail\n\nedge a b -1\n";
        let f = PlumbingForest::parse(text).unwrap();
        assert_eq!(f.framings(), &[-2, 3]);
        assert_eq!(f.edges(), &[Edge::new(0, 1, -1)]);
        assert_eq!(PlumbingForest::parse(&f.to_text()).unwrap(), f);
        assert_eq!(PlumbingForest::parse(&e8().to_text()).unwrap(), e8());
        let err = PlumbingForest::parse("vertex a framing 1\nedge a z 1\n").unwrap_err();
        assert!(matches!(err, SurgeryError::Parse { line: 2, .. }));
        assert!(PlumbingForest::parse("vertex a framing x").is_err());
        assert!(PlumbingForest::parse("vertex a framing 1\nvertex a framing 2").is_err());
    }

    #[test]
    fn matrix_parse() {
        let m = LinkingMatrix::parse("[[0, 1], [1, 0]]").unwrap();
        assert_eq!(m.size(), 2);
        assert!(LinkingMatrix::parse("[[0, 1], [2, 0]]").is_err());
        assert!(LinkingMatrix::parse("[[0, 1]]").is_err());
        assert!(LinkingMatrix::parse("nonsense").is_err());
    }

    #[test]
    fn signature_examples() {
        let sig = |rows: Vec<Vec<i64>>| signature(&LinkingMatrix::new(rows).unwrap());
        let pair = |p, m, z| SignaturePair {
            b_plus: p,
            b_minus: m,
            nullity: z,
        };
        assert_eq!(sig(vec![vec![0, 1], vec![1, 0]]), pair(1, 1, 0));
        assert_eq!(sig(vec![vec![3]]), pair(1, 0, 0));
        assert_eq!(sig(vec![vec![-3]]), pair(0, 1, 0));
        assert_eq!(sig(vec![vec![0]]), pair(0, 0, 1));
        assert_eq!(sig(vec![]), pair(0, 0, 0));
        assert_eq!(signature(&linking_matrix(&e8())), pair(8, 0, 0));
        let neg: Vec<i64> = vec![-2; 8];
        let f = PlumbingForest::new(neg, e8().edges().to_vec()).unwrap();
        assert_eq!(signature(&linking_matrix(&f)), pair(0, 8, 0));
        assert_eq!(sig(vec![vec![1, 1], vec![1, 1]]), pair(1, 0, 1));
    }

    #[test]
    fn moves_examples() {
        let iso = PlumbingForest::new(vec![3, 1], vec![]).unwrap();
        let down = apply_move(&iso, &Move::BlowDown { vertex: 1 }).unwrap();
        assert_eq!(down.framings(), &[3]);
        let chain = PlumbingForest::chain(&[4, 1]);
        let down = apply_move(&chain, &Move::BlowDown { vertex: 1 }).unwrap();
        assert_eq!(down.framings(), &[3]);
        let hopf = PlumbingForest::chain(&[0, 0]);
        let rev = apply_move(&hopf, &Move::Reverse { vertex: 1 }).unwrap();
        assert_eq!(rev.edges()[0].sign, -1);
        let st = apply_move(&hopf, &Move::Stabilize(Sign::Minus)).unwrap();
        assert_eq!(linking_matrix(&st).rows(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]);
        assert!(apply_move(&hopf, &Move::BlowDown { vertex: 0 }).is_err());
        let mid = PlumbingForest::chain(&[2, 1, 2]);
        assert!(apply_move(&mid, &Move::BlowDown { vertex: 1 }).is_err());
        assert!(apply_move(&mid, &Move::Reverse { vertex: 7 }).is_err());
    }

    #[test]
    fn blow_up_down_identity() {
        let f = e8();
        for v in 0..8 {
            for sign in [Sign::Plus, Sign::Minus] {
                let up = apply_move(&f, &Move::BlowUp { vertex: v, sign }).unwrap();
                let back = apply_move(&up, &Move::BlowDown { vertex: 8 }).unwrap();
                assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn transport_through_forest_moves() {
        let f = PlumbingForest::chain(&[2, -3, 1]);
        let l = linking_matrix(&f);
        let mv_list = [
            Move::Stabilize(Sign::Plus),
            Move::BlowUp { vertex: 1, sign: Sign::Minus },
            Move::BlowDown { vertex: 2 },
            Move::Reverse { vertex: 0 },
        ];
        for (kind, d) in [
            (StructureKind::Spin, 2),
            (StructureKind::Spin, 4),
            (StructureKind::Cohomology, 3),
            (StructureKind::Chern, 3),
            (StructureKind::Homology, 4),
        ] {
            for mv in &mv_list {
                let g = apply_move(&f, mv).unwrap();
                let mut img: Vec<Vec<i64>> = structures::enumerate(kind, &l, d)
                    .unwrap()
                    .iter()
                    .map(|x| structure_transport(&f, mv, kind, d, x).unwrap())
                    .collect();
                img.sort();
                img.dedup();
                assert_eq!(img, structures::enumerate(kind, &linking_matrix(&g), d).unwrap(), "{kind:?} {mv:?}");
            }
        }
        // blow up then down returns the same structure
        let s = structures::spin_solutions(&l, 4).unwrap().solutions;
        for x in &s {
            let up_mv = Move::BlowUp { vertex: 0, sign: Sign::Plus };
            let y = structure_transport(&f, &up_mv, StructureKind::Spin, 4, x).unwrap();
            let up = apply_move(&f, &up_mv).unwrap();
            let z = structure_transport(&up, &Move::BlowDown { vertex: 3 }, StructureKind::Spin, 4, &y).unwrap();
            assert_eq!(&z, x);
        }
    }

    #[test]
    fn stabilize_block_diagonal() {
        let f = e8();
        let st = apply_move(&f, &Move::Stabilize(Sign::Plus)).unwrap();
        let l = linking_matrix(&st);
        assert_eq!(l.get(8, 8), 1);
        assert!((0..8).all(|i| l.get(i, 8) == 0));
    }

    fn sym(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let mut rows = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    rows[i][j] = v[i * n + j];
                    rows[j][i] = v[i * n + j];
                }
            }
            rows
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn signature_congruence_invariant(
            rows in (1usize..=6).prop_flat_map(sym),
            ops in prop::collection::vec((0usize..6, 0usize..6, -2i64..=2), 0..12),
        ) {
            let n = rows.len();
            let l = LinkingMatrix::new(rows.clone()).unwrap();
            let s = signature(&l);
            prop_assert_eq!(s.b_plus + s.b_minus + s.nullity, n);
            // PᵀLP for P a product of elementary matrices
            let mut a = rows;
            for (i, j, c) in ops {
                let (i, j) = (i % n, j % n);
                if i == j {
                    continue;
                }
                for k in 0..n {
                    a[i][k] += c * a[j][k];
                }
                for k in 0..n {
                    a[k][i] += c * a[k][j];
                }
            }
            prop_assert_eq!(signature(&LinkingMatrix::new(a).unwrap()), s);
        }
    }
}
