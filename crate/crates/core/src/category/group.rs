use std::collections::BTreeSet;

use serde::Serialize;

use crate::cyclo::CycloNumber;

use super::{CategoryData, CategoryError};

/// The group G of invertible simple objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvertibleGroup {
    /// Labels of the invertible objects, ascending; `elements[0]` is the unit.
    pub elements: Vec<usize>,
    /// `table[i][j]` is the position in `elements` of `elements[i] ⊗ elements[j]`.
    pub table: Vec<Vec<usize>>,
    /// A generating label when G is cyclic.
    pub generator: Option<usize>,
    /// Order of each element, aligned with `elements`.
    pub element_orders: Vec<usize>,
}

impl InvertibleGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.elements.iter().position(|&g| g == label)
    }

    pub fn order_of(&self, label: usize) -> Option<usize> {
        self.position(label).map(|p| self.element_orders[p])
    }

    /// The cyclic subgroup generated by `label`, as labels in generation order.
    pub fn powers(&self, label: usize) -> Vec<usize> {
        let Some(p) = self.position(label) else {
            return Vec::new();
        };
        let mut out = vec![self.elements[0]];
        let mut cur = p;
        while cur != 0 {
            out.push(self.elements[cur]);
            cur = self.table[cur][p];
        }
        out
    }

    /// Label of g ⊗ h.
    pub fn multiply(&self, g: usize, h: usize) -> Option<usize> {
        Some(self.elements[self.table[self.position(g)?][self.position(h)?]])
    }
}

/// Computes the group of invertible objects from the fusion rules.
pub fn invertibles(cat: &CategoryData) -> InvertibleGroup {
    let n = cat.rank();
    let fusion = cat.fusion();
    let elements: Vec<usize> = (0..n)
        .filter(|&g| {
            fusion.get(g, cat.dual(g), 0) == 1
                && (0..n).all(|l| fusion.channels(g, l).map(|(_, m)| m).sum::<u32>() == 1)
        })
        .collect();
    let pos = |label: usize| elements.iter().position(|&g| g == label);
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|&g| {
            elements
                .iter()
                .map(|&h| {
                    let (c, _) = fusion.channels(g, h).next().expect("invertible product");
                    pos(c).expect("product of invertibles is invertible")
                })
                .collect()
        })
        .collect();
    let element_orders: Vec<usize> = (0..elements.len())
        .map(|i| {
            let mut k = 1;
            let mut cur = i;
            while cur != 0 {
                cur = table[cur][i];
                k += 1;
            }
            k
        })
        .collect();
    let generator = element_orders
        .iter()
        .position(|&o| o == elements.len())
        .map(|i| elements[i]);
    InvertibleGroup {
        elements,
        table,
        generator,
        element_orders,
    }
}

/// χ_λ(g) = S̃_{λg} / (⟨λ⟩⟨g⟩), indexed `[λ][position of g in G]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub group: Vec<usize>,
    pub values: Vec<Vec<CycloNumber>>,
}

pub fn character_table(cat: &CategoryData, group: &InvertibleGroup) -> Result<CharacterTable, CategoryError> {
    let mut values = Vec::with_capacity(cat.rank());
    let inv_g: Vec<CycloNumber> = group
        .elements
        .iter()
        .map(|&g| cat.qdim(g).invert())
        .collect::<Result<_, _>>()?;
    for l in 0..cat.rank() {
        let inv_l = cat
            .qdim(l)
            .invert()
            .map_err(|_| CategoryError::ZeroDimension(cat.label_name(l).into()))?;
        let mut row = Vec::with_capacity(group.order());
        for (gi, &g) in group.elements.iter().enumerate() {
            let chi = &(cat.s(l, g) * &inv_l) * &inv_g[gi];
            if !chi.pow(group.element_orders[gi] as i64)?.is_one() {
                return Err(CategoryError::Corrupt(format!(
                    "χ_{}({}) is not a root of unity of order dividing {}",
                    cat.label_name(l),
                    cat.label_name(g),
                    group.element_orders[gi]
                )));
            }
            row.push(chi);
        }
        values.push(row);
    }
    Ok(CharacterTable {
        group: group.elements.clone(),
        values,
    })
}

/// A Z_d-grading of the labels by braiding with an invertible object t of order d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub modulus: usize,
    pub generator: usize,
    pub primitive_root: CycloNumber,
    pub degree: Vec<usize>,
    pub characters: CharacterTable,
}

impl Grading {
    pub fn degree(&self, label: usize) -> usize {
        self.degree[label]
    }
}

/// The default primitive d-th root e_d = ζ_d^k in the category's field.
pub fn primitive_root(cat: &CategoryData, d: usize, k: i64) -> Result<CycloNumber, CategoryError> {
    if d == 0 || num_integer::gcd(k.rem_euclid(d as i64), d as i64) != 1 {
        return Err(CategoryError::InvalidParameter(format!(
            "ζ_{d}^{k} is not a primitive {d}-th root of unity"
        )));
    }
    CycloNumber::root_of_unity(cat.field(), d as u32, k).ok_or_else(|| {
        CategoryError::InvalidParameter(format!(
            "Q(ζ_{}) has no primitive {d}-th root of unity",
            cat.field().order()
        ))
    })
}

/// Grades Γ by deg(λ) = log_{e_d} χ_λ(t), where d is the order of t.
///
/// `t` need not generate G; for cyclic G with generator t this is the full grading.
pub fn grading(
    cat: &CategoryData,
    group: &InvertibleGroup,
    t: usize,
    e_d: &CycloNumber,
) -> Result<Grading, CategoryError> {
    let tp = group.position(t).ok_or_else(|| {
        CategoryError::InvalidParameter(format!("{} is not invertible", cat.label_name(t)))
    })?;
    let d = group.element_orders[tp];
    if e_d.order() != cat.field().order() {
        return Err(CategoryError::InvalidParameter("e_d lies in a different field".into()));
    }
    if e_d.root_order() != Some(d as u32) {
        return Err(CategoryError::InvalidParameter(format!(
            "e_d is not a primitive {d}-th root of unity"
        )));
    }
    let characters = character_table(cat, group)?;
    let mut powers = Vec::with_capacity(d);
    let mut cur = CycloNumber::one(cat.field());
    for _ in 0..d {
        powers.push(cur.clone());
        cur *= e_d;
    }
    let degree = (0..cat.rank())
        .map(|l| {
            let chi = &characters.values[l][tp];
            powers.iter().position(|p| p == chi).ok_or_else(|| {
                CategoryError::Corrupt(format!(
                    "χ_{}({}) is not a power of e_d",
                    cat.label_name(l),
                    cat.label_name(t)
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Grading {
        modulus: d,
        generator: t,
        primitive_root: e_d.clone(),
        degree,
        characters,
    })
}

/// A subgroup H of trivial-degree invertibles, with its spin data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinableStructure {
    /// Labels in H, ascending.
    pub subgroup: Vec<usize>,
    pub order: usize,
    /// A generating label when H is cyclic.
    pub generator: Option<usize>,
    pub is_spin: bool,
    /// Twist sign θ_h ∈ {±1} for each h in `subgroup` (the spin character when spin).
    pub spin_character: Vec<i8>,
}

/// Enumerates every subgroup H ⊂ G lying in the trivial-degree component.
pub fn refinable_structures(
    cat: &CategoryData,
    group: &InvertibleGroup,
    characters: &CharacterTable,
) -> Result<Vec<RefinableStructure>, CategoryError> {
    // positions of elements braiding trivially with all of G
    let trivial: Vec<usize> = (0..group.order())
        .filter(|&i| characters.values[group.elements[i]].iter().all(|c| c.is_one()))
        .collect();
    let close = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut out = set.clone();
        loop {
            let mut added = false;
            let cur: Vec<usize> = out.iter().copied().collect();
            for &a in &cur {
                for &b in &cur {
                    added |= out.insert(group.table[a][b]);
                }
            }
            if !added {
                return out;
            }
        }
    };
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![BTreeSet::from([0usize])];
    seen.insert(vec![0]);
    while let Some(h) = frontier.pop() {
        for &g in &trivial {
            if h.contains(&g) {
                continue;
            }
            let mut next = h.clone();
            next.insert(g);
            let next = close(&next);
            let key: Vec<usize> = next.iter().copied().collect();
            if seen.insert(key) {
                frontier.push(next);
            }
        }
    }
    let mut out = Vec::new();
    for positions in seen {
        let subgroup: Vec<usize> = positions.iter().map(|&p| group.elements[p]).collect();
        let order = subgroup.len();
        let generator = positions
            .iter()
            .find(|&&p| group.element_orders[p] == order)
            .map(|&p| group.elements[p]);
        let spin_character = subgroup
            .iter()
            .map(|&h| {
                let t = cat.twist(h);
                if t.is_one() {
                    Ok(1)
                } else if (t + &CycloNumber::one(cat.field())).is_zero() {
                    Ok(-1)
                } else {
                    Err(CategoryError::Corrupt(format!(
                        "twist of trivial-degree invertible {} is not ±1",
                        cat.label_name(h)
                    )))
                }
            })
            .collect::<Result<Vec<i8>, _>>()?;
        out.push(RefinableStructure {
            is_spin: spin_character.contains(&-1),
            subgroup,
            order,
            generator,
            spin_character,
        });
    }
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.subgroup.cmp(&b.subgroup)));
    Ok(out)
}

/// Which Kirby color to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KirbyKind {
    Plain,
    Graded(usize),
    Dual(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KirbyColor {
    pub kind: KirbyKind,
    pub weights: Vec<CycloNumber>,
}

/// ω, ω_u (degree-u part) or ω^v (λ weighted by e_d^{v·deg λ}).
pub fn kirby_color(
    cat: &CategoryData,
    kind: KirbyKind,
    grading: Option<&Grading>,
) -> Result<KirbyColor, CategoryError> {
    let need = || {
        grading.ok_or_else(|| CategoryError::InvalidParameter("graded Kirby colors need a grading".into()))
    };
    let weights = match kind {
        KirbyKind::Plain => cat.qdims().to_vec(),
        KirbyKind::Graded(u) => {
            let g = need()?;
            check_residue(u, g.modulus)?;
            (0..cat.rank())
                .map(|l| {
                    if g.degree[l] == u {
                        cat.qdim(l).clone()
                    } else {
                        CycloNumber::zero(cat.field())
                    }
                })
                .collect()
        }
        KirbyKind::Dual(v) => {
            let g = need()?;
            check_residue(v, g.modulus)?;
            let e = &g.primitive_root;
            (0..cat.rank())
                .map(|l| {
                    let k = (v * g.degree[l]) % g.modulus;
                    Ok(&e.pow(k as i64)? * cat.qdim(l))
                })
                .collect::<Result<_, CategoryError>>()?
        }
    };
    Ok(KirbyColor { kind, weights })
}

fn check_residue(u: usize, d: usize) -> Result<(), CategoryError> {
    if u >= d {
        Err(CategoryError::InvalidParameter(format!("parameter {u} not in [0, {d})")))
    } else {
        Ok(())
    }
}
