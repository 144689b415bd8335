use proptest::prelude::*;

use super::*;

fn mat(rows: Vec<Vec<i64>>) -> LinkingMatrix {
    LinkingMatrix::new(rows).unwrap()
}

fn sym_matrix(max_n: usize, bound: i64) -> impl Strategy<Value = LinkingMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * (n + 1) / 2).prop_map(move |vals| {
            let mut rows = vec![vec![0i64; n]; n];
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in i..n {
                    let v = it.next().unwrap();
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
            mat(rows)
        })
    })
}

#[test]
fn spin_examples() {
    assert_eq!(spin_solutions(&mat(vec![vec![1]]), 2).unwrap().solutions, vec![vec![1]]);
    assert_eq!(spin_solutions(&mat(vec![vec![0]]), 2).unwrap().solutions, vec![vec![0], vec![1]]);
    assert_eq!(spin_solutions(&mat(vec![vec![2]]), 2).unwrap().solutions, vec![vec![0], vec![1]]);
    assert!(spin_solutions(&mat(vec![vec![1]]), 3).is_err());
}

#[test]
fn cohomology_examples() {
    assert_eq!(cohomology_classes(&mat(vec![vec![1]]), 4).unwrap().solutions, vec![vec![0]]);
    assert_eq!(cohomology_classes(&mat(vec![vec![0]]), 5).unwrap().solutions.len(), 5);
    let a2 = mat(vec![vec![2, 1], vec![1, 2]]);
    let sols = cohomology_classes(&a2, 3).unwrap().solutions;
    assert_eq!(sols.len(), 3);
    assert_eq!(sols, brute::cohomology_classes(&a2, 3).unwrap());
}

#[test]
fn chern_examples() {
    let l0 = mat(vec![vec![0]]);
    for d in 1..=6u64 {
        let c = chern_vectors(&l0, d).unwrap();
        let expect: Vec<Vec<i64>> = (0..d as i64).map(|k| vec![2 * k]).collect();
        assert_eq!(c.classes, expect);
        assert_eq!(c.subgroup.order(), 1);
        assert_eq!(chern_vectors(&mat(vec![vec![1]]), d).unwrap().classes.len(), 1);
    }
    let l = mat(vec![vec![0, 2], vec![2, 0]]);
    let c = chern_vectors(&l, 2).unwrap();
    assert_eq!(c.classes, brute::chern_vectors(&l, 2).unwrap());
    assert_eq!(c.classes.len() as u128, cokernel_order(&l, 2));
    assert_eq!(c.classes.len(), 4);
}

#[test]
fn homology_examples() {
    assert_eq!(homology_classes(&mat(vec![vec![1]]), 7).unwrap().classes.len(), 1);
    assert_eq!(homology_classes(&mat(vec![vec![0]]), 5).unwrap().classes.len(), 5);
    assert_eq!(homology_classes(&mat(vec![vec![2]]), 4).unwrap().classes, vec![vec![0], vec![1]]);
}

#[test]
fn transport_examples() {
    let l = mat(vec![vec![1]]);
    let (l2, s) = transport(StructureKind::Spin, &l, 2, &MatrixMove::Stabilize(1), &[1]).unwrap();
    assert_eq!(s, vec![1, 1]);
    assert_eq!(l2, mat(vec![vec![1, 0], vec![0, 1]]));
    let (_, h) = transport(StructureKind::Cohomology, &mat(vec![vec![0]]), 5, &MatrixMove::Stabilize(-1), &[3]).unwrap();
    assert_eq!(h, vec![3, 0]);
    let (_, h) = transport(StructureKind::Cohomology, &mat(vec![vec![0]]), 5, &MatrixMove::Reverse(0), &[3]).unwrap();
    assert_eq!(h, vec![2]);
    // h'_j = h_j - h_i when sliding i over j
    let z = mat(vec![vec![0, 0], vec![0, 0]]);
    let slide = MatrixMove::Slide { i: 0, j: 1, sign: 1 };
    let (_, h) = transport(StructureKind::Cohomology, &z, 5, &slide, &[2, 4]).unwrap();
    assert_eq!(h, vec![2, 2]);
    assert!(transport(StructureKind::Spin, &l, 2, &MatrixMove::Stabilize(1), &[0]).is_err());
}

#[test]
fn matrix_moves_examples() {
    let l = mat(vec![vec![2, 1], vec![1, 3]]);
    let s = apply_matrix_move(&l, &MatrixMove::Slide { i: 0, j: 1, sign: 1 }).unwrap();
    assert_eq!(s, mat(vec![vec![7, 4], vec![4, 3]]));
    let s = apply_matrix_move(&l, &MatrixMove::Slide { i: 0, j: 1, sign: -1 }).unwrap();
    assert_eq!(s, mat(vec![vec![3, -2], vec![-2, 3]]));
    assert!(apply_matrix_move(&l, &MatrixMove::Destabilize(0)).is_err());
    let st = apply_matrix_move(&l, &MatrixMove::Stabilize(-1)).unwrap();
    assert_eq!(apply_matrix_move(&st, &MatrixMove::Destabilize(2)).unwrap(), l);
}

#[test]
fn kv_products() {
    let l = mat(vec![vec![0]]);
    let kv = kv_structures(&l, &[CyclicFactor { d: 2, spin: true }, CyclicFactor { d: 3, spin: false }]).unwrap();
    assert_eq!(kv.len(), 6);
    assert!(kv_structures(&l, &[]).unwrap() == vec![Vec::<Vec<i64>>::new()]);
}

fn moves_for(n: usize) -> impl Strategy<Value = MatrixMove> {
    prop_oneof![
        prop_oneof![Just(1i64), Just(-1)].prop_map(MatrixMove::Stabilize),
        (0..n).prop_map(MatrixMove::Reverse),
        (0..n, 0..n, prop_oneof![Just(1i64), Just(-1)])
            .prop_filter("distinct", |(i, j, _)| i != j)
            .prop_map(|(i, j, sign)| MatrixMove::Slide { i, j, sign }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn solvers_agree_with_brute_force(l in sym_matrix(4, 6), d in 1u64..=6) {
        let n = l.size();
        prop_assume!((d as u128).pow(n as u32) <= 4096);
        let coh = cohomology_classes(&l, d).unwrap().solutions;
        prop_assert_eq!(&coh, &brute::cohomology_classes(&l, d).unwrap());
        if d % 2 == 0 {
            let spin = spin_solutions(&l, d).unwrap().solutions;
            prop_assert_eq!(&spin, &brute::spin_solutions(&l, d).unwrap());
            prop_assert!(spin.is_empty() || spin.len() == coh.len());
            // affine over the kernel
            if let Some(s0) = spin.first() {
                for h in &coh {
                    let t: Vec<i64> = s0.iter().zip(h).map(|(a, b)| (a + b).rem_euclid(d as i64)).collect();
                    prop_assert!(spin.binary_search(&t).is_ok());
                }
            }
            if l.diagonal().iter().all(|x| x % 2 == 0) {
                prop_assert_eq!(&spin, &coh);
            }
        }
        let hom = homology_classes(&l, d).unwrap();
        prop_assert_eq!(&hom.classes, &brute::homology_classes(&l, d).unwrap());
        prop_assert_eq!(hom.classes.len() as u128, cokernel_order(&l, d));
        prop_assert_eq!(hom.classes.len(), coh.len());
        if (2 * d as u128).pow(n as u32) <= 4096 {
            let chern = chern_vectors(&l, d).unwrap();
            prop_assert_eq!(&chern.classes, &brute::chern_vectors(&l, d).unwrap());
            prop_assert_eq!(chern.classes.len() as u128, cokernel_order(&l, d));
            prop_assert_eq!(chern.subgroup.order(), brute::image_closure(&l, 2, 2 * d).unwrap().len() as u128);
        }
    }

    #[test]
    fn transport_is_a_bijection(l in sym_matrix(3, 4), d in 1u64..=4, mv in (0usize..1).prop_flat_map(|_| moves_for(3))) {
        prop_assume!(match mv {
            MatrixMove::Reverse(i) => i < l.size(),
            MatrixMove::Slide { i, j, .. } => i < l.size() && j < l.size(),
            _ => true,
        });
        for kind in [StructureKind::Spin, StructureKind::Cohomology, StructureKind::Chern, StructureKind::Homology] {
            if kind == StructureKind::Spin && d % 2 != 0 {
                continue;
            }
            let next = apply_matrix_move(&l, &mv).unwrap();
            let source = enumerate(kind, &l, d).unwrap();
            let mut image: Vec<Vec<i64>> = source
                .iter()
                .map(|x| {
                    let (m2, y) = transport(kind, &l, d, &mv, x).unwrap();
                    canonical_element(kind, &m2, d, &y).unwrap()
                })
                .collect();
            image.sort();
            image.dedup();
            prop_assert_eq!(image, enumerate(kind, &next, d).unwrap(), "{:?}", kind);
        }
    }

    #[test]
    fn canonical_is_coset_minimum(l in sym_matrix(3, 5), d in 1u64..=4, seed in prop::collection::vec(0i64..8, 3)) {
        let n = l.size();
        let x: Vec<i64> = seed[..n].iter().map(|v| v.rem_euclid(d as i64)).collect();
        let c = canonical_element(StructureKind::Homology, &l, d, &x).unwrap();
        let img = brute::image_closure(&l, 1, d).unwrap();
        let min = img
            .iter()
            .map(|g| x.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(d as i64)).collect::<Vec<_>>())
            .min()
            .unwrap();
        prop_assert_eq!(c, min);
    }
}
