use std::sync::Arc;

use crate::cyclo::{lcm_order, CycloField, CycloNumber};

use super::{invertibles, transparent_objects, CategoryData, CategoryError, FusionTensor, Grading};

/// Restriction to Γ̃ = {λ : deg λ ≡ 0 mod m}.
pub fn reduced_subcategory(
    cat: &CategoryData,
    grading: &Grading,
    m: usize,
) -> Result<CategoryData, CategoryError> {
    if m == 0 || grading.modulus % m != 0 {
        return Err(CategoryError::InvalidParameter(format!(
            "m = {m} does not divide d = {}",
            grading.modulus
        )));
    }
    if m == 1 {
        return Ok(cat.clone());
    }
    let keep: Vec<usize> = (0..cat.rank()).filter(|&l| grading.degree[l] % m == 0).collect();
    let mut index = vec![usize::MAX; cat.rank()];
    for (i, &l) in keep.iter().enumerate() {
        index[l] = i;
    }
    let n = keep.len();
    let mut fusion = FusionTensor::zeros(n);
    for (i, &a) in keep.iter().enumerate() {
        for (j, &b) in keep.iter().enumerate() {
            for (c, mult) in cat.fusion().channels(a, b) {
                if index[c] == usize::MAX {
                    return Err(CategoryError::NotClosed(format!(
                        "{} ⊗ {} contains {}",
                        cat.label_name(a),
                        cat.label_name(b),
                        cat.label_name(c)
                    )));
                }
                fusion.set(i, j, index[c], mult);
            }
        }
    }
    let dual = keep
        .iter()
        .map(|&l| match index[cat.dual(l)] {
            usize::MAX => Err(CategoryError::NotClosed(format!("dual of {}", cat.label_name(l)))),
            i => Ok(i),
        })
        .collect::<Result<Vec<_>, _>>()?;
    CategoryData::new(
        format!("{}[deg = 0 mod {m}]", cat.name()),
        cat.field().clone(),
        keep.iter().map(|&l| cat.label_name(l).to_string()).collect(),
        dual,
        keep.iter().map(|&l| cat.qdim(l).clone()).collect(),
        keep.iter().map(|&l| cat.twist(l).clone()).collect(),
        keep.iter()
            .map(|&a| keep.iter().map(|&b| cat.s(a, b).clone()).collect())
            .collect(),
        fusion,
    )
}

/// The extension C′ with labels Γ × Z_α, f(λ, k) = f(λ) + d·k,
/// θ′ = ξ^{−f²}θ and S̃′_{XY} = ξ^{−2f(X)f(Y)}S̃.
///
/// `section` gives f(λ) for each label and must satisfy f(λ) ≡ deg λ mod d.
pub fn extend_category(
    cat: &CategoryData,
    grading: &Grading,
    alpha: usize,
    xi: &CycloNumber,
    section: &[i64],
) -> Result<CategoryData, CategoryError> {
    let d = grading.modulus as i64;
    let n = cat.rank();
    if alpha == 0 {
        return Err(CategoryError::InvalidParameter("alpha must be positive".into()));
    }
    if section.len() != n {
        return Err(CategoryError::InvalidParameter(format!(
            "section has {} values, expected {n}",
            section.len()
        )));
    }
    for (l, &f) in section.iter().enumerate() {
        if (f - grading.degree[l] as i64).rem_euclid(d) != 0 {
            return Err(CategoryError::InvalidParameter(format!(
                "f({}) = {f} is not congruent to deg = {} mod {d}",
                cat.label_name(l),
                grading.degree[l]
            )));
        }
    }
    let ad = alpha as i64 * d;
    let xi_order_ok = xi.pow(ad)?.is_one() || (d % 2 == 0 && xi.pow(2 * ad)?.is_one());
    if !xi_order_ok {
        return Err(CategoryError::InvalidParameter(format!("ξ^{ad} != 1 (and ξ^{} != 1)", 2 * ad)));
    }
    let field = CycloField::new(lcm_order(cat.field().order(), xi.order()));
    let base = cat.embed_into(&field)?;
    let xi = xi.embed_into(&field)?;
    let period = 2 * ad;
    let mut xipow = Vec::with_capacity(period as usize);
    let mut cur = CycloNumber::one(&field);
    for _ in 0..period {
        xipow.push(cur.clone());
        cur *= &xi;
    }
    let xi_neg = |e: i64| xipow[(-e).rem_euclid(period) as usize].clone();

    let a = alpha as i64;
    let idx = |l: usize, k: i64| l * alpha + k.rem_euclid(a) as usize;
    let lift = |l: usize, k: usize| section[l] + d * k as i64;
    let size = n * alpha;
    let mut names = Vec::with_capacity(size);
    let mut dual = Vec::with_capacity(size);
    let mut qdim = Vec::with_capacity(size);
    let mut twist = Vec::with_capacity(size);
    for l in 0..n {
        let ld = cat.dual(l);
        let shift = section[l] + section[ld];
        if shift.rem_euclid(d) != 0 {
            return Err(CategoryError::InvalidParameter(format!(
                "f({}) + f(dual) is not divisible by d",
                cat.label_name(l)
            )));
        }
        for k in 0..alpha {
            names.push(format!("({},{k})", cat.label_name(l)));
            // f(λ*, k*) ≡ −f(λ, k) mod αd
            dual.push(idx(ld, -shift / d - k as i64));
            qdim.push(base.qdim(l).clone());
            let f = lift(l, k);
            twist.push(&xi_neg(f * f) * base.twist(l));
        }
    }
    let mut smatrix = vec![Vec::with_capacity(size); size];
    for l in 0..n {
        for k in 0..alpha {
            let f = lift(l, k);
            for m in 0..n {
                for j in 0..alpha {
                    let g = lift(m, j);
                    smatrix[idx(l, k as i64)].push(&xi_neg(2 * f * g) * base.s(l, m));
                }
            }
        }
    }
    let mut fusion = FusionTensor::zeros(size);
    for (v, w, u, mult) in cat.fusion().triples() {
        let num = section[v] + section[w] - section[u];
        if num.rem_euclid(d) != 0 {
            return Err(CategoryError::InvalidParameter(format!(
                "cocycle shift not integral on {} ⊗ {} → {}",
                cat.label_name(v),
                cat.label_name(w),
                cat.label_name(u)
            )));
        }
        let chi = num / d;
        for k in 0..a {
            for l in 0..a {
                fusion.set(idx(v, k), idx(w, l), idx(u, k + l + chi), mult);
            }
        }
    }
    CategoryData::new(
        format!("ext({}, alpha={alpha}, xi={xi})", cat.name()),
        field,
        names,
        dual,
        qdim,
        twist,
        smatrix,
        fusion,
    )
}

/// Quotient by the transparent subgroup T (trivial twists and dimensions, free action).
pub fn modularize(cat: &CategoryData) -> Result<CategoryData, CategoryError> {
    let transparent = transparent_objects(cat);
    if transparent.len() == 1 {
        return Ok(cat.clone());
    }
    let group = invertibles(cat);
    for &t in &transparent {
        let name = cat.label_name(t);
        if group.position(t).is_none() {
            return Err(CategoryError::Modularization(format!("transparent {name} is not invertible")));
        }
        if !cat.twist(t).is_one() {
            return Err(CategoryError::Modularization(format!("transparent {name} has twist != 1")));
        }
        if !cat.qdim(t).is_one() {
            return Err(CategoryError::Modularization(format!("transparent {name} has dimension != 1")));
        }
    }
    let act = |t: usize, l: usize| cat.fusion().channels(t, l).next().expect("invertible action").0;
    let n = cat.rank();
    let mut orbit_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for l in 0..n {
        if orbit_of[l] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(l);
        for &t in &transparent {
            let x = act(t, l);
            if t != 0 && x == l {
                return Err(CategoryError::Modularization(format!(
                    "{} fixes {}",
                    cat.label_name(t),
                    cat.label_name(l)
                )));
            }
            orbit_of[x] = id;
        }
    }
    let size = reps.len();
    for l in 0..n {
        let r = reps[orbit_of[l]];
        if cat.twist(l) != cat.twist(r) || cat.qdim(l) != cat.qdim(r) {
            return Err(CategoryError::Modularization(format!(
                "twist or dimension not constant on the orbit of {}",
                cat.label_name(l)
            )));
        }
        for m in 0..n {
            if cat.s(l, m) != cat.s(r, reps[orbit_of[m]]) {
                return Err(CategoryError::Modularization(format!(
                    "S not constant on orbits ({}, {})",
                    cat.label_name(l),
                    cat.label_name(m)
                )));
            }
        }
    }
    let mut fusion = FusionTensor::zeros(size);
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![0u32; size];
            for (c, mult) in cat.fusion().channels(a, b) {
                row[orbit_of[c]] += mult;
            }
            let (oa, ob) = (orbit_of[a], orbit_of[b]);
            for (c, &m) in row.iter().enumerate() {
                if a == reps[oa] && b == reps[ob] {
                    fusion.set(oa, ob, c, m);
                } else if fusion.get(oa, ob, c) != m {
                    return Err(CategoryError::Modularization(format!(
                        "fusion not constant on orbits ({}, {})",
                        cat.label_name(a),
                        cat.label_name(b)
                    )));
                }
            }
        }
    }
    CategoryData::new(
        format!("mod({})", cat.name()),
        Arc::clone(cat.field()),
        reps.iter()
            .map(|&r| {
                let members: Vec<&str> = (0..n)
                    .filter(|&l| orbit_of[l] == orbit_of[r])
                    .map(|l| cat.label_name(l))
                    .collect();
                if members.len() == 1 {
                    members[0].to_string()
                } else {
                    format!("[{}]", members.join("|"))
                }
            })
            .collect(),
        reps.iter().map(|&r| orbit_of[cat.dual(r)]).collect(),
        reps.iter().map(|&r| cat.qdim(r).clone()).collect(),
        reps.iter().map(|&r| cat.twist(r).clone()).collect(),
        reps.iter()
            .map(|&a| reps.iter().map(|&b| cat.s(a, b).clone()).collect())
            .collect(),
        fusion,
    )
}
