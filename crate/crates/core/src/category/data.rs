use std::sync::Arc;

use crate::cyclo::{CycloField, CycloNumber};

use super::CategoryError;

/// A simple object: a dense index into the label table plus a display name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Label {
    pub index: usize,
    pub name: String,
}

/// Dense fusion tensor; `get(a, b, c)` is N^c_{ab}, the multiplicity of c in a ⊗ b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTensor {
    rank: usize,
    data: Vec<u32>,
}

impl FusionTensor {
    pub fn zeros(rank: usize) -> Self {
        FusionTensor {
            rank,
            data: vec![0; rank * rank * rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        self.data[(a * self.rank + b) * self.rank + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, value: u32) {
        let n = self.rank;
        self.data[(a * n + b) * n + c] = value;
    }

    /// Nonzero channels of a ⊗ b as (c, multiplicity).
    pub fn channels(&self, a: usize, b: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let start = (a * self.rank + b) * self.rank;
        self.data[start..start + self.rank]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(c, &m)| (c, m))
    }

    /// All nonzero entries as (a, b, c, multiplicity).
    pub fn triples(&self) -> Vec<(usize, usize, usize, u32)> {
        let n = self.rank;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for (c, m) in self.channels(a, b) {
                    out.push((a, b, c, m));
                }
            }
        }
        out
    }
}

/// A finite premodular category presented by its numerical data over Q(ζ_N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryData {
    name: String,
    field: Arc<CycloField>,
    labels: Vec<Label>,
    dual: Vec<usize>,
    qdim: Vec<CycloNumber>,
    twist: Vec<CycloNumber>,
    smatrix: Vec<Vec<CycloNumber>>,
    fusion: FusionTensor,
}

impl CategoryData {
    /// Assembles category data, rejecting structurally malformed input.
    ///
    /// Only shapes, ranges and fields are checked here; the ribbon identities
    /// are the job of [`check_axioms`](super::check_axioms).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: Arc<CycloField>,
        label_names: Vec<String>,
        dual: Vec<usize>,
        qdim: Vec<CycloNumber>,
        twist: Vec<CycloNumber>,
        smatrix: Vec<Vec<CycloNumber>>,
        fusion: FusionTensor,
    ) -> Result<Self, CategoryError> {
        let n = label_names.len();
        let malformed = |msg: String| Err(CategoryError::Malformed(msg));
        if n == 0 {
            return malformed("no labels".into());
        }
        if dual.len() != n || qdim.len() != n || twist.len() != n || smatrix.len() != n {
            return malformed(format!("expected {n} entries in dual/qdim/twist/smatrix"));
        }
        if smatrix.iter().any(|row| row.len() != n) {
            return malformed(format!("S-matrix must be {n}x{n}"));
        }
        if fusion.rank() != n {
            return malformed(format!("fusion tensor has rank {}, expected {n}", fusion.rank()));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= n) {
            return malformed(format!("dual index {bad} out of range"));
        }
        let order = field.order();
        let all = qdim.iter().chain(&twist).chain(smatrix.iter().flatten());
        if let Some(x) = all.into_iter().find(|x| x.order() != order) {
            return malformed(format!(
                "value in Q(ζ_{}) but category field is Q(ζ_{order})",
                x.order()
            ));
        }
        let labels = label_names
            .into_iter()
            .enumerate()
            .map(|(index, name)| Label { index, name })
            .collect();
        Ok(CategoryData {
            name: name.into(),
            field,
            labels,
            dual,
            qdim,
            twist,
            smatrix,
            fusion,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label_name(&self, i: usize) -> &str {
        &self.labels[i].name
    }

    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name == name)
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn qdim(&self, i: usize) -> &CycloNumber {
        &self.qdim[i]
    }

    pub fn qdims(&self) -> &[CycloNumber] {
        &self.qdim
    }

    pub fn twist(&self, i: usize) -> &CycloNumber {
        &self.twist[i]
    }

    pub fn twists(&self) -> &[CycloNumber] {
        &self.twist
    }

    pub fn s(&self, i: usize, j: usize) -> &CycloNumber {
        &self.smatrix[i][j]
    }

    pub fn smatrix(&self) -> &[Vec<CycloNumber>] {
        &self.smatrix
    }

    pub fn fusion(&self) -> &FusionTensor {
        &self.fusion
    }

    /// N^c_{ab}.
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        self.fusion.get(a, b, c)
    }

    /// ⟨ω⟩ = Σ_λ ⟨λ⟩².
    pub fn global_dimension(&self) -> CycloNumber {
        let mut acc = CycloNumber::zero(&self.field);
        for d in &self.qdim {
            acc += &(d * d);
        }
        acc
    }

    /// Re-expresses all data in the larger field `target`.
    pub fn embed_into(&self, target: &Arc<CycloField>) -> Result<Self, CategoryError> {
        let e = |x: &CycloNumber| x.embed_into(target);
        Ok(CategoryData {
            name: self.name.clone(),
            field: target.clone(),
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            qdim: self.qdim.iter().map(e).collect::<Result<_, _>>()?,
            twist: self.twist.iter().map(e).collect::<Result<_, _>>()?,
            smatrix: self
                .smatrix
                .iter()
                .map(|row| row.iter().map(e).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?,
            fusion: self.fusion.clone(),
        })
    }
}
