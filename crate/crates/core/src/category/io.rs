//! JSON category files.

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloField, CycloNumber, CycloRecord};

use super::{CategoryData, CategoryError, FusionTensor};

/// On-disk layout of a category; see `docs/formats.md`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    pub name: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub labels: Vec<String>,
    pub dual: Vec<usize>,
    pub qdim: Vec<CycloRecord>,
    pub twist: Vec<CycloRecord>,
    pub smatrix: Vec<Vec<CycloRecord>>,
    /// Sparse fusion entries `[λ, ν, μ, N^μ_{λν}]`.
    pub fusion: Vec<[u64; 4]>,
}

impl From<&CategoryData> for CategoryFile {
    fn from(cat: &CategoryData) -> Self {
        let rec = |x: &CycloNumber| CycloRecord::from(x);
        CategoryFile {
            name: cat.name().to_string(),
            n: cat.field().order(),
            labels: cat.labels().iter().map(|l| l.name.clone()).collect(),
            dual: cat.duals().to_vec(),
            qdim: cat.qdims().iter().map(rec).collect(),
            twist: cat.twists().iter().map(rec).collect(),
            smatrix: cat.smatrix().iter().map(|row| row.iter().map(rec).collect()).collect(),
            fusion: cat
                .fusion()
                .triples()
                .into_iter()
                .map(|(a, b, c, m)| [a as u64, b as u64, c as u64, u64::from(m)])
                .collect(),
        }
    }
}

impl TryFrom<&CategoryFile> for CategoryData {
    type Error = CategoryError;

    fn try_from(file: &CategoryFile) -> Result<Self, CategoryError> {
        if file.n == 0 {
            return Err(CategoryError::Malformed("N must be positive".into()));
        }
        let field = CycloField::new(file.n);
        let parse = |r: &CycloRecord| -> Result<CycloNumber, CategoryError> {
            if r.n != file.n {
                return Err(CategoryError::Malformed(format!(
                    "value over Q(ζ_{}) in a Q(ζ_{}) category",
                    r.n, file.n
                )));
            }
            Ok(CycloNumber::try_from(r)?)
        };
        let rank = file.labels.len();
        let mut fusion = FusionTensor::zeros(rank);
        for &[a, b, c, m] in &file.fusion {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            if a >= rank || b >= rank || c >= rank {
                return Err(CategoryError::Malformed(format!("fusion entry [{a}, {b}, {c}] out of range")));
            }
            let m = u32::try_from(m).map_err(|_| CategoryError::Malformed("fusion multiplicity too large".into()))?;
            fusion.set(a, b, c, m);
        }
        CategoryData::new(
            file.name.clone(),
            field,
            file.labels.clone(),
            file.dual.clone(),
            file.qdim.iter().map(parse).collect::<Result<_, _>>()?,
            file.twist.iter().map(parse).collect::<Result<_, _>>()?,
            file.smatrix
                .iter()
                .map(|row| row.iter().map(parse).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?,
            fusion,
        )
    }
}

pub fn to_json(cat: &CategoryData) -> String {
    serde_json::to_string_pretty(&CategoryFile::from(cat)).expect("category serializes")
}

pub fn from_json(text: &str) -> Result<CategoryData, CategoryError> {
    let file: CategoryFile =
        serde_json::from_str(text).map_err(|e| CategoryError::Malformed(e.to_string()))?;
    CategoryData::try_from(&file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{parse_builtin, sl2_category};

    #[test]
    fn round_trip() {
        for spec in ["sl2:3", "sl2:8", "abelian:4:1", "sl2:4*abelian:3:2", "trivial"] {
            let cat = parse_builtin(spec).unwrap();
            let back = from_json(&to_json(&cat)).unwrap();
            assert_eq!(back, cat, "{spec}");
        }
    }

    #[test]
    fn rejects_bad_files() {
        let cat = sl2_category(4).unwrap();
        let mut file = CategoryFile::from(&cat);
        file.fusion.push([9, 0, 0, 1]);
        assert!(CategoryData::try_from(&file).is_err());
        let mut file = CategoryFile::from(&cat);
        file.qdim[1].n = 8;
        assert!(CategoryData::try_from(&file).is_err());
        assert!(from_json("{\"name\": 3}").is_err());
    }
}
