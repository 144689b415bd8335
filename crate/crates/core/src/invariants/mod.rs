//! Colored evaluation of plumbing forests, WRT invariants and their refinements,
//! MOO invariants and the decomposition check.

mod decomposition;
mod eval;
mod moo;
mod refined;

use serde::Serialize;
use thiserror::Error;

use crate::category::CategoryError;
use crate::cyclo::{CycloError, CycloNumber};
use crate::structures::StructureError;
use crate::surgery::SurgeryError;

pub use decomposition::{DecompositionCheck, DecompositionSetup};
pub use eval::{component_roots, Evaluator};
pub use moo::{moo, moo_refined, quadratic_sum, MooParams, MooRefinement};
pub use refined::{
    coset_sums, refined_table, wrt_cohomology, wrt_homology, wrt_spin, wrt_spinc, CosetRoute, RefinedInvariantTable,
    Refinement, RefinementCache, RefinementKind, RefinementOptions,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("label {label} at vertex {vertex} has zero quantum dimension")]
    ZeroDimension { vertex: usize, label: usize },
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),
    #[error("category is not refinable as requested: {0}")]
    NotRefinable(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
}

/// How an invariant was normalized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub b_plus: usize,
    pub b_minus: usize,
    pub nullity: usize,
    /// F(U_1(ω)), or g for MOO sums.
    pub plus_denominator: CycloNumber,
    /// F(U_{−1}(ω)), or ḡ for MOO sums.
    pub minus_denominator: CycloNumber,
    /// Rational prefactor such as d^-n, when present.
    pub prefactor: Option<String>,
}

/// An exact invariant with its complex approximation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantValue {
    pub exact: CycloNumber,
    pub approx: Approx,
    pub normalization: Normalization,
    pub structure: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Approx {
    pub re: f64,
    pub im: f64,
}

impl Eq for Approx {}

impl InvariantValue {
    pub fn new(exact: CycloNumber, normalization: Normalization, structure: Option<Vec<i64>>) -> Self {
        let (re, im) = exact.embed_complex();
        InvariantValue {
            exact,
            approx: Approx { re, im },
            normalization,
            structure,
        }
    }
}
