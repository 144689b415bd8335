//! Premodular and modular category data, gradings, Kirby colors and constructions.

mod axioms;
mod builtin;
mod construct;
mod data;
mod group;
pub mod io;
pub mod search;

pub use axioms::{check_axioms, rank, transparent_objects, AxiomReport};
pub use builtin::{abelian_category, parse_builtin, product_category, sl2_category, trivial_category};
pub use construct::{extend_category, modularize, reduced_subcategory};
pub use data::{CategoryData, FusionTensor, Label};
pub use group::{
    character_table, grading, invertibles, kirby_color, primitive_root, refinable_structures,
    CharacterTable, Grading, InvertibleGroup, KirbyColor, KirbyKind, RefinableStructure,
};

use crate::cyclo::CycloError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("malformed category data: {0}")]
    Malformed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown builtin category {0:?}")]
    UnknownBuiltin(String),
    #[error("corrupt category data: {0}")]
    Corrupt(String),
    #[error("label {0} has zero quantum dimension")]
    ZeroDimension(String),
    #[error("subset not closed: {0}")]
    NotClosed(String),
    #[error("cannot modularize: {0}")]
    Modularization(String),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{make_root, CycloField, CycloNumber};

    fn assert_modular(cat: &CategoryData) {
        let report = check_axioms(cat);
        assert!(report.premodular, "{}: {:?}", cat.name(), report.violations);
        assert!(report.modular, "{} not modular", cat.name());
        assert_eq!(report.transparent_objects, vec![0], "{}", cat.name());
        assert_eq!(report.transparency_criterion_agrees, Some(true));
    }

    #[test]
    fn sl2_is_modular() {
        for r in 3..=12 {
            assert_modular(&sl2_category(r).unwrap());
        }
    }

    #[test]
    fn sl2_3_matrix() {
        let cat = sl2_category(3).unwrap();
        assert_eq!(cat.rank(), 2);
        // ⟨1⟩ = −[2] = −(A² + A^{−2}) with A = ζ_12
        let f = cat.field();
        let d1 = -(CycloNumber::root(f, 2) + CycloNumber::root(f, -2));
        assert_eq!(cat.qdim(1), &d1);
        assert_eq!(cat.s(0, 1), &d1);
        assert!(cat.s(0, 0).is_one());
        // S̃_11 = [4] = A^6 + A^2 + A^{-2} + A^{-6}
        let s11 = [6, 2, -2, -6].iter().fold(CycloNumber::zero(f), |acc, &k| acc + CycloNumber::root(f, k));
        assert_eq!(cat.s(1, 1), &s11);
    }

    #[test]
    fn abelian_examples() {
        let semion = abelian_category(2, &make_root(4, 1)).unwrap();
        assert_modular(&semion);
        assert_eq!(semion.twist(1), &make_root(4, 1));

        let z3 = abelian_category(3, &make_root(3, 1)).unwrap();
        assert_modular(&z3);

        let f = CycloField::new(1);
        let degenerate = abelian_category(4, &CycloNumber::one(&f)).unwrap();
        let report = check_axioms(&degenerate);
        assert!(report.premodular && !report.modular);
        assert_eq!(report.transparent_objects, vec![0, 1, 2, 3]);

        assert!(abelian_category(2, &make_root(8, 1)).is_err());
    }

    #[test]
    fn trivial_is_modular() {
        assert_modular(&trivial_category());
    }

    #[test]
    fn products() {
        let a = sl2_category(4).unwrap();
        let p = product_category(&a, &trivial_category()).unwrap();
        assert_eq!(p.rank(), a.rank());
        assert_eq!(p.smatrix(), a.smatrix());
        assert_eq!(product_category(&a, &sl2_category(5).unwrap()).unwrap().rank(), 12);
        let q = product_category(&a, &abelian_category(3, &make_root(3, 1)).unwrap()).unwrap();
        assert_modular(&q);
    }

    #[test]
    fn corrupted_data_is_reported() {
        let cat = sl2_category(5).unwrap();
        let mut twist = cat.twists().to_vec();
        twist[2] = twist[2].mul_root(1);
        let bad = CategoryData::new(
            "bad",
            cat.field().clone(),
            cat.labels().iter().map(|l| l.name.clone()).collect(),
            cat.duals().to_vec(),
            cat.qdims().to_vec(),
            twist,
            cat.smatrix().to_vec(),
            cat.fusion().clone(),
        )
        .unwrap();
        let report = check_axioms(&bad);
        assert!(!report.premodular);
        assert!(report.violations.iter().any(|v| v.contains("balancing")));
    }

    #[test]
    fn malformed_data_is_rejected() {
        let cat = sl2_category(4).unwrap();
        let res = CategoryData::new(
            "bad",
            cat.field().clone(),
            vec!["0".into(), "1".into()],
            cat.duals().to_vec(),
            cat.qdims().to_vec(),
            cat.twists().to_vec(),
            cat.smatrix().to_vec(),
            cat.fusion().clone(),
        );
        assert!(matches!(res, Err(CategoryError::Malformed(_))));
    }

    #[test]
    fn sl2_invertibles() {
        for r in 3..=10 {
            let cat = sl2_category(r).unwrap();
            let g = invertibles(&cat);
            assert_eq!(g.elements, vec![0, (r - 2) as usize]);
            assert_eq!(g.generator, Some((r - 2) as usize));
            let t = (r - 2) as usize;
            let sign = if r % 2 == 0 { 1 } else { -1 };
            assert_eq!(cat.qdim(t).as_integer(), Some(sign));
        }
        let ab = abelian_category(5, &make_root(5, 1)).unwrap();
        assert_eq!(invertibles(&ab).order(), 5);
        let prod = product_category(&sl2_category(4).unwrap(), &sl2_category(6).unwrap()).unwrap();
        let g = invertibles(&prod);
        assert_eq!(g.order(), 4);
        assert_eq!(g.generator, None);
        assert!(g.element_orders.iter().all(|&o| o <= 2));
    }

    fn parity_grading(cat: &CategoryData) -> Grading {
        let g = invertibles(cat);
        let t = g.generator.unwrap();
        let e = primitive_root(cat, g.order_of(t).unwrap(), 1).unwrap();
        grading(cat, &g, t, &e).unwrap()
    }

    #[test]
    fn sl2_gradings() {
        let g5 = parity_grading(&sl2_category(5).unwrap());
        assert_eq!(g5.degree[0], 0);
        assert_eq!(g5.degree[3], 1);
        for r in 3..=12 {
            let cat = sl2_category(r).unwrap();
            let gr = parity_grading(&cat);
            for l in 0..cat.rank() {
                assert_eq!(gr.degree[l], l % 2, "r = {r}");
            }
        }
    }

    #[test]
    fn grading_is_additive_and_characters_multiply() {
        let cats = [
            sl2_category(7).unwrap(),
            sl2_category(8).unwrap(),
            abelian_category(6, &make_root(12, 1)).unwrap(),
            product_category(&sl2_category(4).unwrap(), &sl2_category(5).unwrap()).unwrap(),
        ];
        for cat in &cats {
            let g = invertibles(cat);
            let chars = character_table(cat, &g).unwrap();
            for (i, &a) in g.elements.iter().enumerate() {
                for (j, _) in g.elements.iter().enumerate() {
                    let ab = g.table[i][j];
                    for l in 0..cat.rank() {
                        let lhs = &chars.values[l][ab];
                        let rhs = &chars.values[l][i] * &chars.values[l][j];
                        assert_eq!(lhs, &rhs, "{} at {a}", cat.name());
                    }
                }
            }
            for &t in &g.elements {
                let d = g.order_of(t).unwrap();
                let Ok(e) = primitive_root(cat, d, 1) else { continue };
                let gr = grading(cat, &g, t, &e).unwrap();
                assert_eq!(gr.degree[0], 0);
                for (a, b, c, _) in cat.fusion().triples() {
                    assert_eq!((gr.degree[a] + gr.degree[b]) % d, gr.degree[c]);
                }
                for l in 0..cat.rank() {
                    assert_eq!((gr.degree[l] + gr.degree[cat.dual(l)]) % d, 0);
                }
                if d % 2 == 1 {
                    assert!(cat.qdim(t).is_one());
                }
            }
        }
    }

    #[test]
    fn refinability_of_sl2() {
        for r in 4..=12u32 {
            let cat = sl2_category(r).unwrap();
            let g = invertibles(&cat);
            let chars = character_table(&cat, &g).unwrap();
            let structs = refinable_structures(&cat, &g, &chars).unwrap();
            let nontrivial: Vec<_> = structs.iter().filter(|s| s.order > 1).collect();
            if r % 2 == 1 {
                assert!(nontrivial.is_empty(), "r = {r}");
            } else {
                assert_eq!(nontrivial.len(), 1);
                assert_eq!(nontrivial[0].subgroup, vec![0, (r - 2) as usize]);
                assert_eq!(nontrivial[0].is_spin, r % 4 == 0, "r = {r}");
            }
            assert!(!structs[0].is_spin);
        }
    }

    #[test]
    fn kirby_colors() {
        let cat = sl2_category(8).unwrap();
        let gr = parity_grading(&cat);
        let plain = kirby_color(&cat, KirbyKind::Plain, None).unwrap();
        assert_eq!(plain.weights, cat.qdims());
        let odd = kirby_color(&cat, KirbyKind::Graded(1), Some(&gr)).unwrap();
        for l in 0..cat.rank() {
            assert_eq!(odd.weights[l].is_zero(), l % 2 == 0);
        }
        let even = kirby_color(&cat, KirbyKind::Graded(0), Some(&gr)).unwrap();
        for l in 0..cat.rank() {
            assert_eq!(&even.weights[l] + &odd.weights[l], plain.weights[l]);
        }
        assert_eq!(kirby_color(&cat, KirbyKind::Dual(0), Some(&gr)).unwrap().weights, plain.weights);
        assert!(kirby_color(&cat, KirbyKind::Graded(2), Some(&gr)).is_err());
        assert!(kirby_color(&cat, KirbyKind::Dual(0), None).is_err());
    }

    #[test]
    fn reduced_subcategories() {
        for (r, expect) in [(5u32, vec![0usize, 2]), (7, vec![0, 2, 4])] {
            let cat = sl2_category(r).unwrap();
            let gr = parity_grading(&cat);
            let sub = reduced_subcategory(&cat, &gr, 2).unwrap();
            let names: Vec<usize> = sub.labels().iter().map(|l| l.name.parse().unwrap()).collect();
            assert_eq!(names, expect);
            assert_modular(&sub);
            assert_eq!(reduced_subcategory(&cat, &gr, 1).unwrap(), cat);
            assert!(reduced_subcategory(&cat, &gr, 3).is_err());
        }
    }

    #[test]
    fn trivial_extension_is_identity() {
        let cat = sl2_category(6).unwrap();
        let gr = parity_grading(&cat);
        let f: Vec<i64> = gr.degree.iter().map(|&d| d as i64).collect();
        let ext = extend_category(&cat, &gr, 1, &CycloNumber::one(cat.field()), &f).unwrap();
        assert_eq!(ext.smatrix(), cat.smatrix());
        assert_eq!(ext.twists(), cat.twists());
        assert_eq!(ext.fusion(), cat.fusion());
    }

    #[test]
    fn extension_of_sl2_5_and_modularization() {
        // sl2(5) graded by t = 3 (d = 2), every ξ with ξ^{4α} = 1
        let cat = sl2_category(5).unwrap();
        let gr = parity_grading(&cat);
        let f: Vec<i64> = gr.degree.iter().map(|&d| d as i64).collect();
        for alpha in 1..=3usize {
            let period = 4 * alpha as u32;
            for k in 0..period as i64 {
                let xi = make_root(period, k);
                let ext = extend_category(&cat, &gr, alpha, &xi, &f).unwrap();
                assert_eq!(ext.rank(), alpha * cat.rank());
                let report = check_axioms(&ext);
                assert!(report.premodular, "α={alpha} k={k}: {:?}", report.violations);
                if let Ok(m) = modularize(&ext) {
                    let mr = check_axioms(&m);
                    assert!(mr.premodular, "{:?}", mr.violations);
                    assert_eq!(mr.transparent_objects, vec![0]);
                    assert!(mr.modular);
                    assert_eq!(m.rank() * report.transparent_objects.len(), ext.rank());
                }
            }
        }
    }

    #[test]
    fn extension_rejects_bad_section() {
        let cat = sl2_category(5).unwrap();
        let gr = parity_grading(&cat);
        let f = vec![0, 0, 0, 1];
        assert!(extend_category(&cat, &gr, 1, &CycloNumber::one(cat.field()), &f).is_err());
    }

    #[test]
    fn modularize_trivial_transparent() {
        let cat = sl2_category(5).unwrap();
        assert_eq!(modularize(&cat).unwrap(), cat);
        // Z_4 with q = ζ_8^2 has transparent {0, 2}, twist θ_2 = q^4 = 1
        let ab = abelian_category(4, &make_root(8, 2)).unwrap();
        let rep = check_axioms(&ab);
        assert_eq!(rep.transparent_objects, vec![0, 2]);
        let m = modularize(&ab).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(check_axioms(&m).modular);
    }

    #[test]
    fn modularize_rejects_fermion() {
        // Z_2 with q = −1: a transparent fermion
        let ab = abelian_category(2, &make_root(2, 1)).unwrap();
        assert_eq!(check_axioms(&ab).transparent_objects, vec![0, 1]);
        assert!(matches!(modularize(&ab), Err(CategoryError::Modularization(_))));
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(parse_builtin("builtin:sl2:8").unwrap().rank(), 7);
        assert_eq!(parse_builtin("sl2:4*sl2:5").unwrap().rank(), 12);
        assert_eq!(parse_builtin("abelian:3:2").unwrap().rank(), 3);
        assert_eq!(parse_builtin("trivial").unwrap().rank(), 1);
        assert!(parse_builtin("su3:4").is_err());
        assert!(parse_builtin("sl2:x").is_err());
    }
}
