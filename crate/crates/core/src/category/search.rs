//! Bounded search for modular categories carrying a spin structure of large order.
//!
//! Candidates are extensions ext(sl2(r), α, ξ, deg) of the parity-graded sl2
//! categories, modularized when their transparent subgroup allows it. Other
//! lifts f ≡ deg (mod d) only relabel (λ, k) ↦ (λ, k + c_λ), so one lift suffices.

use serde::Serialize;

use crate::cyclo::make_root;

use super::{
    character_table, check_axioms, extend_category, grading, invertibles, modularize, primitive_root,
    refinable_structures, sl2_category, transparent_objects, CategoryData, RefinableStructure,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// sl2 levels r in 3..=max_r.
    pub max_r: u32,
    /// Extension multiplicities α in 1..=max_alpha; ξ runs over all 4α-th roots of unity.
    pub max_alpha: usize,
    /// Smallest order |H| of a spin subgroup that counts as a hit.
    pub min_spin_order: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_r: 9,
            max_alpha: 4,
            min_spin_order: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchHit {
    pub description: String,
    pub category: CategoryData,
    pub structure: RefinableStructure,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub budget: SearchBudget,
    /// Parameter triples (r, α, ξ) tried.
    pub examined: usize,
    /// Extensions that were valid data (section and ξ accepted).
    pub extensions: usize,
    /// Candidates with a cyclic spin subgroup of the wanted order, before the axiom check.
    pub spin_candidates: usize,
    pub hits: Vec<SearchHit>,
}

pub fn search_spin_categories(budget: SearchBudget) -> SearchReport {
    let mut report = SearchReport {
        budget,
        examined: 0,
        extensions: 0,
        spin_candidates: 0,
        hits: Vec::new(),
    };
    for r in 3..=budget.max_r {
        let cat = sl2_category(r).expect("r >= 3");
        let group = invertibles(&cat);
        let t = (r - 2) as usize;
        let e = primitive_root(&cat, 2, 1).expect("sl2 fields contain -1");
        let gr = grading(&cat, &group, t, &e).expect("sl2 parity grading");
        let section: Vec<i64> = gr.degree.iter().map(|&d| d as i64).collect();
        for alpha in 1..=budget.max_alpha {
            let period = 4 * alpha as u32;
            for k in 0..period as i64 {
                report.examined += 1;
                let xi = make_root(period, k);
                let Ok(ext) = extend_category(&cat, &gr, alpha, &xi, &section) else {
                    continue;
                };
                report.extensions += 1;
                let candidate = if transparent_objects(&ext) == [0] {
                    ext
                } else {
                    match modularize(&ext) {
                        Ok(m) => m,
                        Err(_) => continue,
                    }
                };
                let g = invertibles(&candidate);
                let Ok(chars) = character_table(&candidate, &g) else {
                    continue;
                };
                let Ok(structs) = refinable_structures(&candidate, &g, &chars) else {
                    continue;
                };
                let wanted: Vec<RefinableStructure> = structs
                    .into_iter()
                    .filter(|s| s.is_spin && s.generator.is_some() && s.order >= budget.min_spin_order)
                    .collect();
                if wanted.is_empty() {
                    continue;
                }
                report.spin_candidates += 1;
                let axioms = check_axioms(&candidate);
                if !(axioms.premodular && axioms.modular) {
                    continue;
                }
                for structure in wanted {
                    report.hits.push(SearchHit {
                        description: format!("sl2({r}) extended with alpha={alpha}, xi=ζ_{period}^{k}"),
                        category: candidate.clone(),
                        structure,
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_budget_runs() {
        let report = search_spin_categories(SearchBudget {
            max_r: 4,
            max_alpha: 2,
            min_spin_order: 2,
        });
        assert_eq!(report.examined, 2 * (4 + 8));
        assert!(report.extensions > 0);
    }
}
