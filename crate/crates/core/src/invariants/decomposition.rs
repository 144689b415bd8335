//! τ_C(M) = τ_C̃(M) · τ^MOO_ξ(M) when the grading splits as Z_δ × Z_m with gcd(m, δ) = 1.

use serde::Serialize;

use crate::category::{grading, invertibles, primitive_root, reduced_subcategory, sl2_category, CategoryData};
use crate::cyclo::CycloNumber;
use crate::surgery::{linking_matrix, PlumbingForest};

use super::{moo, Evaluator, InvariantError, MooParams};

#[derive(Debug, Clone)]
pub struct DecompositionSetup {
    pub category: CategoryData,
    pub reduced: CategoryData,
    /// The invertible t of order d = δm.
    pub t: usize,
    pub delta: u32,
    pub m: u32,
    /// Braiding coefficient of t^δ with itself.
    pub eta: CycloNumber,
    /// ξ = η⟨t⟩^δ.
    pub xi: CycloNumber,
    full: Evaluator,
    small: Evaluator,
}

impl DecompositionSetup {
    pub fn new(cat: &CategoryData, t: usize, m: u32) -> Result<Self, InvariantError> {
        let group = invertibles(cat);
        let d = group
            .order_of(t)
            .ok_or_else(|| InvariantError::InvalidParameter(format!("{} is not invertible", cat.label_name(t))))?
            as u32;
        if m == 0 || d % m != 0 {
            return Err(InvariantError::InvalidParameter(format!("m = {m} does not divide d = {d}")));
        }
        let delta = d / m;
        if num_integer::gcd(m, delta) != 1 {
            return Err(InvariantError::Hypothesis(format!("gcd(m, δ) = gcd({m}, {delta}) ≠ 1")));
        }
        let powers = group.powers(t);
        let td = powers[delta as usize % powers.len()];
        let qd = cat.qdim(td);
        let eta = cat.twist(td).try_div(qd)?;
        let monodromy = cat.s(td, td).try_div(&(qd * qd))?;
        if &eta * &eta != monodromy {
            return Err(InvariantError::Hypothesis(format!(
                "η² = {} differs from the monodromy {}",
                &eta * &eta,
                monodromy
            )));
        }
        let xi = &eta * &cat.qdim(t).pow(delta as i64)?;
        let e = primitive_root(cat, d as usize, 1)?;
        let gr = grading(cat, &group, t, &e)?;
        let reduced = reduced_subcategory(cat, &gr, m as usize)?;
        Ok(DecompositionSetup {
            full: Evaluator::new(cat)?,
            small: Evaluator::new(&reduced)?,
            category: cat.clone(),
            reduced,
            t,
            delta,
            m,
            eta,
            xi,
        })
    }

    /// sl2(r) for odd r: t = r − 2, d = m = 2, δ = 1.
    pub fn sl2(r: u32) -> Result<Self, InvariantError> {
        if r % 2 == 0 {
            return Err(InvariantError::Hypothesis(format!("sl2({r}) needs odd r")));
        }
        let cat = sl2_category(r)?;
        Self::new(&cat, (r - 2) as usize, 2)
    }

    pub fn check(&self, forest: &PlumbingForest) -> Result<DecompositionCheck, InvariantError> {
        let lhs = self.full.wrt(forest)?.exact;
        let reduced = self.small.wrt(forest)?.exact;
        let moo = moo(&linking_matrix(forest), &MooParams::new(self.m, self.xi.clone()))?.exact;
        let rhs = &reduced * &moo;
        Ok(DecompositionCheck {
            holds: lhs == rhs,
            lhs,
            reduced,
            moo,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub lhs: CycloNumber,
    pub reduced: CycloNumber,
    pub moo: CycloNumber,
    pub holds: bool,
}
