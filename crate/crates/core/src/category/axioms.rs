use serde::Serialize;

use crate::cyclo::CycloNumber;

use super::CategoryData;

const MAX_VIOLATIONS: usize = 25;

/// Outcome of [`check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub premodular: bool,
    pub modular: bool,
    pub s_rank: usize,
    pub transparent_objects: Vec<usize>,
    /// `Some(agree)` when ⟨ω⟩ ≠ 0: whether "modular" matches "only the unit is transparent".
    pub transparency_criterion_agrees: Option<bool>,
    pub violations: Vec<String>,
}

struct Violations {
    list: Vec<String>,
    extra: usize,
}

impl Violations {
    fn push(&mut self, msg: impl FnOnce() -> String) {
        if self.list.len() < MAX_VIOLATIONS {
            self.list.push(msg());
        } else {
            self.extra += 1;
        }
    }

    fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    fn finish(mut self) -> Vec<String> {
        if self.extra > 0 {
            self.list.push(format!("... and {} more", self.extra));
        }
        self.list
    }
}

/// Checks the ribbon and fusion identities, modularity and transparency.
pub fn check_axioms(cat: &CategoryData) -> AxiomReport {
    let n = cat.rank();
    let name = |i: usize| cat.label_name(i).to_string();
    let mut v = Violations {
        list: Vec::new(),
        extra: 0,
    };

    if cat.dual(0) != 0 {
        v.push(|| "dual of the unit is not the unit".into());
    }
    for i in 0..n {
        let d = cat.dual(i);
        if cat.dual(d) != i {
            v.push(|| format!("dual is not an involution at {}", name(i)));
        }
        if cat.qdim(i) != cat.qdim(d) {
            v.push(|| format!("qdim({}) != qdim of its dual", name(i)));
        }
        if cat.twist(i) != cat.twist(d) {
            v.push(|| format!("twist({}) != twist of its dual", name(i)));
        }
        if cat.s(i, 0) != cat.qdim(i) {
            v.push(|| format!("S[{}][1] != qdim", name(i)));
        }
        if cat.twist(i).is_zero() {
            v.push(|| format!("twist({}) is zero", name(i)));
        }
        for j in 0..n {
            if j > i && cat.s(i, j) != cat.s(j, i) {
                v.push(|| format!("S not symmetric at ({}, {})", name(i), name(j)));
            }
            if cat.s(d, cat.dual(j)) != cat.s(i, j) {
                v.push(|| format!("S[λ*][μ*] != S[λ][μ] at ({}, {})", name(i), name(j)));
            }
        }
    }
    if !cat.s(0, 0).is_one() {
        v.push(|| "S[1][1] != 1".into());
    }
    if !cat.twist(0).is_one() {
        v.push(|| "twist of the unit != 1".into());
    }

    let fusion = cat.fusion();
    for a in 0..n {
        for c in 0..n {
            let expect = u32::from(a == c);
            if fusion.get(a, 0, c) != expect || fusion.get(0, a, c) != expect {
                v.push(|| format!("unit fusion fails for ({}, {})", name(a), name(c)));
            }
            if fusion.get(a, c, 0) != u32::from(c == cat.dual(a)) {
                v.push(|| format!("N^1 fails for ({}, {})", name(a), name(c)));
            }
            for b in 0..n {
                if fusion.get(a, b, c) != fusion.get(b, a, c) {
                    v.push(|| format!("fusion not commutative at ({}, {}, {})", name(a), name(b), name(c)));
                }
            }
        }
    }
    // (a ⊗ b) ⊗ c = a ⊗ (b ⊗ c)
    let mut left = vec![0u64; n];
    let mut right = vec![0u64; n];
    'assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                left.iter_mut().for_each(|x| *x = 0);
                right.iter_mut().for_each(|x| *x = 0);
                for (r, m) in fusion.channels(a, b) {
                    for (s, k) in fusion.channels(r, c) {
                        left[s] += u64::from(m) * u64::from(k);
                    }
                }
                for (r, m) in fusion.channels(b, c) {
                    for (s, k) in fusion.channels(a, r) {
                        right[s] += u64::from(m) * u64::from(k);
                    }
                }
                if left != right {
                    v.push(|| format!("fusion not associative at ({}, {}, {})", name(a), name(b), name(c)));
                    break 'assoc;
                }
            }
        }
    }

    for a in 0..n {
        for b in a..n {
            // dimension is a ring homomorphism of the fusion ring
            let mut dims = CycloNumber::zero(cat.field());
            let mut bal = CycloNumber::zero(cat.field());
            for (c, m) in fusion.channels(a, b) {
                let dc = cat.qdim(c).scale(i64::from(m));
                bal += &(&dc * cat.twist(c));
                dims += &dc;
            }
            if dims != cat.qdim(a) * cat.qdim(b) {
                v.push(|| format!("qdim not multiplicative on ({}, {})", name(a), name(b)));
            }
            if bal != &(cat.twist(a) * cat.twist(b)) * cat.s(a, b) {
                v.push(|| format!("balancing identity fails at ({}, {})", name(a), name(b)));
            }
        }
    }

    let transparent_objects = transparent_objects(cat);
    let s_rank = rank(cat.smatrix());
    let modular = s_rank == n;
    let transparency_criterion_agrees = if cat.global_dimension().is_zero() {
        None
    } else {
        Some(modular == (transparent_objects == [0]))
    };
    let premodular = v.is_empty();
    AxiomReport {
        premodular,
        modular,
        s_rank,
        transparent_objects,
        transparency_criterion_agrees,
        violations: v.finish(),
    }
}

/// Labels λ with S̃_{λμ} = ⟨λ⟩⟨μ⟩ for every μ.
pub fn transparent_objects(cat: &CategoryData) -> Vec<usize> {
    (0..cat.rank())
        .filter(|&i| (0..cat.rank()).all(|j| cat.s(i, j) == &(cat.qdim(i) * cat.qdim(j))))
        .collect()
}

/// Exact rank over the ground field.
pub fn rank(m: &[Vec<CycloNumber>]) -> usize {
    let mut rows: Vec<Vec<CycloNumber>> = m.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].invert().expect("pivot is nonzero");
        let pivot: Vec<CycloNumber> = rows[r][col..].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot) {
                *x -= &(&f * p);
            }
        }
        r += 1;
    }
    r
}
