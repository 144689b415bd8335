//! Exact refined Witten–Reshetikhin–Turaev invariants of plumbed 3-manifolds.
#![allow(clippy::needless_range_loop)]

pub mod category;
pub mod corpus;
pub mod cyclo;
pub mod invariants;
pub mod structures;
pub mod surgery;
pub mod verify;

pub use category::{CategoryData, CategoryError};
pub use cyclo::{CycloError, CycloField, CycloNumber};
pub use invariants::{Evaluator, InvariantError, InvariantValue, RefinedInvariantTable, RefinementKind};
pub use structures::{StructureError, StructureKind};
pub use surgery::{LinkingMatrix, PlumbingForest, SurgeryError};
