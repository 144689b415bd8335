use std::sync::Arc;

use crate::cyclo::{lcm_order, CycloField, CycloNumber};

use super::{CategoryData, CategoryError, FusionTensor};

/// [n]_A = (A^{2n} − A^{−2n}) / (A² − A^{−2}), as A^{2(n−1)} + A^{2(n−3)} + … + A^{−2(n−1)}.
fn quantum_integer(field: &Arc<CycloField>, n: i64) -> CycloNumber {
    let mut acc = CycloNumber::zero(field);
    let sign = n.signum();
    let n = n.abs();
    for k in 0..n {
        acc += &CycloNumber::root(field, 2 * (n - 1 - 2 * k));
    }
    acc.scale(sign)
}

fn neg_one_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The sl2 modular category at A = ζ_{4r}: labels 0..=r−2 (Kauffman bracket normalization).
pub fn sl2_category(r: u32) -> Result<CategoryData, CategoryError> {
    if r < 3 {
        return Err(CategoryError::InvalidParameter(format!("sl2 level needs r >= 3, got {r}")));
    }
    let field = CycloField::new(4 * r);
    let n = (r - 1) as usize;
    let qint: Vec<CycloNumber> = (0..=(n * n) as i64)
        .map(|k| quantum_integer(&field, k))
        .collect();
    let qdim: Vec<CycloNumber> = (0..n).map(|i| qint[i + 1].scale(neg_one_pow(i))).collect();
    let twist: Vec<CycloNumber> = (0..n)
        .map(|i| CycloNumber::root(&field, (i * i + 2 * i) as i64).scale(neg_one_pow(i)))
        .collect();
    let smatrix: Vec<Vec<CycloNumber>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| qint[(i + 1) * (j + 1)].scale(neg_one_pow(i + j)))
                .collect()
        })
        .collect();
    let top = 2 * (n - 1);
    let mut fusion = FusionTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let hi = (i + j).min(top - i - j);
            let mut k = i.abs_diff(j);
            while k <= hi {
                fusion.set(i, j, k, 1);
                k += 2;
            }
        }
    }
    CategoryData::new(
        format!("sl2({r})"),
        field,
        (0..n).map(|i| i.to_string()).collect(),
        (0..n).collect(),
        qdim,
        twist,
        smatrix,
        fusion,
    )
}

/// The pointed category on Z_N with θ_j = q^{j²} and S̃_{jk} = q^{2jk}.
pub fn abelian_category(n: u32, q: &CycloNumber) -> Result<CategoryData, CategoryError> {
    if n == 0 {
        return Err(CategoryError::InvalidParameter("abelian category needs N >= 1".into()));
    }
    if !q.pow(2 * i64::from(n))?.is_one() {
        return Err(CategoryError::InvalidParameter(format!("q^{} != 1", 2 * n)));
    }
    let field = q.field().clone();
    let n = n as usize;
    let one = CycloNumber::one(&field);
    let mut qpow = Vec::with_capacity(2 * n);
    let mut cur = one.clone();
    for _ in 0..2 * n {
        qpow.push(cur.clone());
        cur *= q;
    }
    let at = |e: usize| qpow[e % (2 * n)].clone();
    let mut fusion = FusionTensor::zeros(n);
    for a in 0..n {
        for b in 0..n {
            fusion.set(a, b, (a + b) % n, 1);
        }
    }
    CategoryData::new(
        format!("abelian({n}, {q})"),
        field,
        (0..n).map(|i| i.to_string()).collect(),
        (0..n).map(|i| (n - i) % n).collect(),
        vec![one; n],
        (0..n).map(|j| at(j * j)).collect(),
        (0..n).map(|j| (0..n).map(|k| at(2 * j * k)).collect()).collect(),
        fusion,
    )
}

/// The one-object category over Q.
pub fn trivial_category() -> CategoryData {
    let field = CycloField::new(1);
    let one = CycloNumber::one(&field);
    let mut fusion = FusionTensor::zeros(1);
    fusion.set(0, 0, 0, 1);
    CategoryData::new(
        "trivial",
        field,
        vec!["1".into()],
        vec![0],
        vec![one.clone()],
        vec![one.clone()],
        vec![vec![one]],
        fusion,
    )
    .expect("trivial category is well formed")
}

/// Deligne product: labels Γ_a × Γ_b with componentwise data, over Q(ζ_lcm).
pub fn product_category(a: &CategoryData, b: &CategoryData) -> Result<CategoryData, CategoryError> {
    let field = CycloField::new(lcm_order(a.field().order(), b.field().order()));
    let a = a.embed_into(&field)?;
    let b = b.embed_into(&field)?;
    let (na, nb) = (a.rank(), b.rank());
    let idx = |i: usize, j: usize| i * nb + j;
    let n = na * nb;
    let mut names = Vec::with_capacity(n);
    let mut dual = Vec::with_capacity(n);
    let mut qdim = Vec::with_capacity(n);
    let mut twist = Vec::with_capacity(n);
    for i in 0..na {
        for j in 0..nb {
            names.push(format!("({},{})", a.label_name(i), b.label_name(j)));
            dual.push(idx(a.dual(i), b.dual(j)));
            qdim.push(a.qdim(i) * b.qdim(j));
            twist.push(a.twist(i) * b.twist(j));
        }
    }
    let mut smatrix = vec![Vec::with_capacity(n); n];
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    smatrix[idx(i, j)].push(a.s(i, k) * b.s(j, l));
                }
            }
        }
    }
    let mut fusion = FusionTensor::zeros(n);
    for (i, k, m, x) in a.fusion().triples() {
        for (j, l, p, y) in b.fusion().triples() {
            fusion.set(idx(i, j), idx(k, l), idx(m, p), x * y);
        }
    }
    CategoryData::new(
        format!("{} x {}", a.name(), b.name()),
        field,
        names,
        dual,
        qdim,
        twist,
        smatrix,
        fusion,
    )
}

/// Parses a builtin description: `sl2:<r>`, `abelian:<N>:<k>` (q = ζ_{2N}^k),
/// `trivial`, or a `*`-separated product of these. A leading `builtin:` is accepted.
pub fn parse_builtin(spec: &str) -> Result<CategoryData, CategoryError> {
    let spec = spec.trim();
    let spec = spec.strip_prefix("builtin:").unwrap_or(spec);
    let bad = || CategoryError::UnknownBuiltin(spec.to_string());
    let mut result: Option<CategoryData> = None;
    for part in spec.split('*') {
        let fields: Vec<&str> = part.trim().split(':').collect();
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
        let cat = match fields.as_slice() {
            ["sl2", r] => sl2_category(num(r)?)?,
            ["abelian", n, k] => {
                let n = num(n)?;
                let k: i64 = k.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                let field = CycloField::new(2 * n);
                abelian_category(n, &CycloNumber::root(&field, k))?
            }
            ["trivial"] => trivial_category(),
            _ => return Err(bad()),
        };
        result = Some(match result {
            None => cat,
            Some(acc) => product_category(&acc, &cat)?,
        });
    }
    result.ok_or_else(bad)
}
