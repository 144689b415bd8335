use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::category::{
    character_table, grading, invertibles, kirby_color, primitive_root, refinable_structures, Grading, KirbyKind,
};
use crate::cyclo::CycloNumber;
use crate::structures::{self, StructureKind};
use crate::surgery::{linking_matrix, signature, PlumbingForest};

use super::{Evaluator, InvariantError, InvariantValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RefinementKind {
    Spin,
    #[serde(rename = "coh")]
    Cohomology,
    Spinc,
    #[serde(rename = "hom")]
    Homology,
}

impl RefinementKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "spin" => Some(Self::Spin),
            "coh" | "cohomology" => Some(Self::Cohomology),
            "spinc" | "chern" => Some(Self::Spinc),
            "hom" | "homology" => Some(Self::Homology),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Spin => "spin",
            Self::Cohomology => "coh",
            Self::Spinc => "spinc",
            Self::Homology => "hom",
        }
    }

    pub fn structure_kind(self) -> StructureKind {
        match self {
            Self::Spin => StructureKind::Spin,
            Self::Cohomology => StructureKind::Cohomology,
            Self::Spinc => StructureKind::Chern,
            Self::Homology => StructureKind::Homology,
        }
    }

    /// Order of the grading group: 2d for spin^c, d otherwise.
    pub fn grading_modulus(self, d: u64) -> u64 {
        match self {
            Self::Spinc => 2 * d,
            _ => d,
        }
    }

    fn wants_spin(self) -> bool {
        matches!(self, Self::Spin | Self::Spinc)
    }
}

/// How coset sums over Chern classes or H_1 classes are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CosetRoute {
    /// Character sums over graded evaluations, one per g with L·g ≡ 0 (mod d).
    #[default]
    Fourier,
    /// Every element of every coset.
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementOptions {
    /// e_D = ζ_D^k for the grading group of order D.
    pub e_power: i64,
    /// Skip the hypotheses on spin type and parity of d.
    pub allow_override: bool,
    pub route: CosetRoute,
}

impl Default for RefinementOptions {
    fn default() -> Self {
        RefinementOptions {
            e_power: 1,
            allow_override: false,
            route: CosetRoute::Fourier,
        }
    }
}

/// A grading of the category matched to a refinement kind and modulus.
#[derive(Debug, Clone)]
pub struct Refinement {
    pub kind: RefinementKind,
    pub d: u64,
    pub options: RefinementOptions,
    pub grading: Grading,
    /// ω_u for u in 0..D.
    pub graded: Vec<Vec<CycloNumber>>,
    /// ω^v for v in 0..D.
    pub dual: Vec<Vec<CycloNumber>>,
}

impl Refinement {
    pub fn new(
        ev: &Evaluator,
        kind: RefinementKind,
        d: u64,
        options: RefinementOptions,
    ) -> Result<Self, InvariantError> {
        let cat = ev.category();
        if d == 0 {
            return Err(InvariantError::InvalidParameter("d must be positive".into()));
        }
        if kind == RefinementKind::Spin && d % 2 == 1 {
            return Err(InvariantError::InvalidParameter(format!("spin refinements need even d, got {d}")));
        }
        if kind == RefinementKind::Spinc && d % 2 == 1 && !options.allow_override {
            return Err(InvariantError::Hypothesis(format!(
                "spin^c refinements are defined for even d (got {d}); pass the override flag to experiment"
            )));
        }
        let order = kind.grading_modulus(d) as usize;
        let group = invertibles(cat);
        let chars = character_table(cat, &group)?;
        let structs = refinable_structures(cat, &group, &chars)?;
        let matching = structs
            .iter()
            .filter(|s| s.order == order && s.generator.is_some())
            .find(|s| s.is_spin == kind.wants_spin());
        let t = match matching {
            Some(s) => s.generator.expect("filtered"),
            None if options.allow_override => group
                .elements
                .iter()
                .zip(&group.element_orders)
                .find(|&(_, &o)| o == order)
                .map(|(&g, _)| g)
                .ok_or_else(|| InvariantError::NotRefinable(format!("no invertible object of order {order}")))?,
            None => {
                let what = if kind.wants_spin() { "spin" } else { "non-spin refinable" };
                return Err(InvariantError::NotRefinable(format!(
                    "{} has no cyclic {what} subgroup of order {order}",
                    cat.name()
                )));
            }
        };
        let e = primitive_root(cat, order, options.e_power)?;
        let grading = grading(cat, &group, t, &e)?;
        let graded = (0..order)
            .map(|u| kirby_color(cat, KirbyKind::Graded(u), Some(&grading)).map(|k| k.weights))
            .collect::<Result<Vec<_>, _>>()?;
        let dual = (0..order)
            .map(|v| kirby_color(cat, KirbyKind::Dual(v), Some(&grading)).map(|k| k.weights))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Refinement {
            kind,
            d,
            options,
            grading,
            graded,
            dual,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.kind.grading_modulus(self.d)
    }
}

/// Refined invariants keyed by structure representatives, in sorted order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefinedInvariantTable {
    pub kind: RefinementKind,
    pub d: u64,
    pub entries: Vec<(Vec<i64>, InvariantValue)>,
}

impl RefinedInvariantTable {
    pub fn total(&self) -> Option<CycloNumber> {
        let first = self.entries.first()?;
        Some(crate::cyclo::sum(first.1.exact.field(), self.entries.iter().map(|(_, v)| &v.exact)))
    }

    /// The entry values, sorted: the table as a multiset.
    pub fn multiset(&self) -> Vec<CycloNumber> {
        let mut v: Vec<CycloNumber> = self.entries.iter().map(|(_, x)| x.exact.clone()).collect();
        v.sort();
        v
    }
}

fn graded_eval(
    ev: &Evaluator,
    r: &Refinement,
    forest: &PlumbingForest,
    g: &[i64],
) -> Result<CycloNumber, InvariantError> {
    let w: Vec<&[CycloNumber]> = g.iter().map(|&u| r.graded[u as usize].as_slice()).collect();
    ev.eval_weighted(forest, &w)
}

fn dual_eval(
    ev: &Evaluator,
    r: &Refinement,
    forest: &PlumbingForest,
    eps: &[i64],
) -> Result<CycloNumber, InvariantError> {
    let w: Vec<&[CycloNumber]> = eps.iter().map(|&v| r.dual[v as usize].as_slice()).collect();
    ev.eval_weighted(forest, &w)
}

/// Σ_{ε ∈ class} F(L(ω^{ε_1}, …, ω^{ε_n})) for every class, keyed by representative.
pub fn coset_sums(
    ev: &Evaluator,
    r: &Refinement,
    forest: &PlumbingForest,
) -> Result<Vec<(Vec<i64>, CycloNumber)>, InvariantError> {
    let l = linking_matrix(forest);
    let d = r.d;
    let n = forest.vertex_count();
    let field = ev.category().field();
    let (classes, subgroup, m) = match r.kind {
        RefinementKind::Spinc => {
            let c = structures::chern_vectors(&l, d)?;
            (c.classes, c.subgroup, 2 * d)
        }
        RefinementKind::Homology => {
            let c = structures::homology_classes(&l, d)?;
            (c.classes, c.image, d)
        }
        _ => {
            return Err(InvariantError::InvalidParameter(format!(
                "{} refinements are not coset sums",
                r.kind.name()
            )))
        }
    };
    match r.options.route {
        CosetRoute::Enumerate => {
            let elems = subgroup.elements();
            classes
                .into_iter()
                .map(|c| {
                    let mut total = CycloNumber::zero(field);
                    for k in &elems {
                        let eps: Vec<i64> = c.iter().zip(k).map(|(a, b)| (a + b).rem_euclid(m as i64)).collect();
                        total += dual_eval(ev, r, forest, &eps)?;
                    }
                    Ok((c, total))
                })
                .collect()
        }
        CosetRoute::Fourier => {
            // g ∈ (Z_m)^n with L·g ≡ 0 (mod d): lifts of the mod-d kernel
            let kernel = structures::cohomology_classes(&l, d)?.solutions;
            let lifts = (m / d) as usize;
            let mut terms: Vec<(Vec<i64>, CycloNumber)> = Vec::new();
            for g0 in &kernel {
                let mut b = vec![0usize; n];
                loop {
                    let g: Vec<i64> = g0.iter().zip(&b).map(|(x, &y)| x + (d as i64) * y as i64).collect();
                    let val = graded_eval(ev, r, forest, &g)?;
                    if !val.is_zero() {
                        terms.push((g, val));
                    }
                    let mut k = 0;
                    loop {
                        if k == n {
                            break;
                        }
                        b[k] += 1;
                        if b[k] < lifts {
                            break;
                        }
                        b[k] = 0;
                        k += 1;
                    }
                    if k == n {
                        break;
                    }
                }
            }
            let size = BigInt::from(subgroup.order());
            let e = &r.grading.primitive_root;
            let powers: Vec<CycloNumber> = (0..m as i64).map(|k| e.pow(k)).collect::<Result<_, _>>()?;
            Ok(classes
                .into_iter()
                .map(|c| {
                    let mut total = CycloNumber::zero(field);
                    for (g, val) in &terms {
                        let dot: i64 = c.iter().zip(g).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m as i64);
                        total += &powers[dot as usize] * val;
                    }
                    (c, total.scale_rational(&BigRational::from_integer(size.clone())))
                })
                .collect())
        }
    }
}

/// The refined table of the given kind.
pub fn refined_table(
    ev: &Evaluator,
    r: &Refinement,
    forest: &PlumbingForest,
) -> Result<RefinedInvariantTable, InvariantError> {
    let l = linking_matrix(forest);
    let sig = signature(&l);
    let n = forest.vertex_count() as u32;
    let mut entries = Vec::new();
    match r.kind {
        RefinementKind::Spin | RefinementKind::Cohomology => {
            let sols = structures::enumerate(r.kind.structure_kind(), &l, r.d)?;
            for s in sols {
                let v = graded_eval(ev, r, forest, &s)?;
                entries.push((s.clone(), ev.normalize(v, sig, None, Some(s))?));
            }
        }
        RefinementKind::Spinc | RefinementKind::Homology => {
            let (base, label) = if r.kind == RefinementKind::Spinc {
                (-(r.d as i64), format!("(-{})^-{n}", r.d))
            } else {
                (r.d as i64, format!("{}^-{n}", r.d))
            };
            let q = BigRational::new(BigInt::from(1), BigInt::from(base).pow(n));
            for (c, v) in coset_sums(ev, r, forest)? {
                entries.push((c.clone(), ev.normalize(v, sig, Some((q.clone(), label.clone())), Some(c))?));
            }
        }
    }
    Ok(RefinedInvariantTable {
        kind: r.kind,
        d: r.d,
        entries,
    })
}

/// Refinement objects reused across many manifolds.
#[derive(Debug, Default)]
pub struct RefinementCache {
    map: HashMap<(RefinementKind, u64), Refinement>,
}

impl RefinementCache {
    pub fn get(
        &mut self,
        ev: &Evaluator,
        kind: RefinementKind,
        d: u64,
        options: RefinementOptions,
    ) -> Result<&Refinement, InvariantError> {
        match self.map.entry((kind, d)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(Refinement::new(ev, kind, d, options)?)),
        }
    }
}

pub fn wrt_spin(ev: &Evaluator, forest: &PlumbingForest, d: u64) -> Result<RefinedInvariantTable, InvariantError> {
    let r = Refinement::new(ev, RefinementKind::Spin, d, RefinementOptions::default())?;
    refined_table(ev, &r, forest)
}

pub fn wrt_cohomology(ev: &Evaluator, forest: &PlumbingForest, d: u64) -> Result<RefinedInvariantTable, InvariantError> {
    let r = Refinement::new(ev, RefinementKind::Cohomology, d, RefinementOptions::default())?;
    refined_table(ev, &r, forest)
}

pub fn wrt_spinc(
    ev: &Evaluator,
    forest: &PlumbingForest,
    d: u64,
    options: RefinementOptions,
) -> Result<RefinedInvariantTable, InvariantError> {
    let r = Refinement::new(ev, RefinementKind::Spinc, d, options)?;
    refined_table(ev, &r, forest)
}

pub fn wrt_homology(ev: &Evaluator, forest: &PlumbingForest, d: u64) -> Result<RefinedInvariantTable, InvariantError> {
    let r = Refinement::new(ev, RefinementKind::Homology, d, RefinementOptions::default())?;
    refined_table(ev, &r, forest)
}
