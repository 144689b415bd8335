use serde::{Deserialize, Serialize};

use crate::cyclo::{gauss_sum, CycloNumber};
use crate::surgery::{signature, LinkingMatrix};

use super::{InvariantError, InvariantValue, Normalization};

/// Refinement data {δ, α, c} for the refined MOO sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MooRefinement {
    pub delta: u32,
    pub alpha: u32,
    pub class: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MooParams {
    pub m: u32,
    pub xi: CycloNumber,
    pub refinement: Option<MooRefinement>,
}

impl MooParams {
    pub fn new(m: u32, xi: CycloNumber) -> Self {
        MooParams { m, xi, refinement: None }
    }

    pub fn refined(mut self, delta: u32, alpha: u32, class: Vec<i64>) -> Self {
        self.refinement = Some(MooRefinement { delta, alpha, class });
        self
    }
}

fn xi_order(xi: &CycloNumber) -> Result<u32, InvariantError> {
    xi.root_order()
        .ok_or_else(|| InvariantError::InvalidParameter("ξ is not a root of unity".into()))
}

/// Σ over γ ∈ (Z_N)^n with γ ≡ c (mod δ) of ξ^{γᵗLγ}, accumulated by exponent.
pub fn quadratic_sum(l: &LinkingMatrix, xi: &CycloNumber, range: i64, delta: i64, class: &[i64]) -> Result<CycloNumber, InvariantError> {
    let ord = xi_order(xi)? as i64;
    let n = l.size();
    let steps = range / delta;
    let mut counts = vec![0i64; ord as usize];
    let mut k = vec![0i64; n];
    loop {
        let g: Vec<i64> = (0..n).map(|i| class[i].rem_euclid(delta) + delta * k[i]).collect();
        let lg = l.apply(&g);
        let q: i64 = g.iter().zip(&lg).map(|(a, b)| (a * b).rem_euclid(ord)).sum::<i64>();
        counts[q.rem_euclid(ord) as usize] += 1;
        let mut i = 0;
        loop {
            if i == n {
                let mut total = CycloNumber::zero(xi.field());
                let mut p = CycloNumber::one(xi.field());
                for &c in &counts {
                    if c != 0 {
                        total += p.scale(c);
                    }
                    p *= xi;
                }
                return Ok(total);
            }
            k[i] += 1;
            if k[i] < steps {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

fn normalize(
    sum: CycloNumber,
    l: &LinkingMatrix,
    g: CycloNumber,
) -> Result<InvariantValue, InvariantError> {
    if g.is_zero() {
        return Err(InvariantError::ZeroDenominator("the Gauss sum vanishes".into()));
    }
    let gbar = g.conj();
    let sig = signature(l);
    let den = g.pow(sig.b_plus as i64)? * gbar.pow(sig.b_minus as i64)?;
    Ok(InvariantValue::new(
        sum.try_div(&den)?,
        Normalization {
            b_plus: sig.b_plus,
            b_minus: sig.b_minus,
            nullity: sig.nullity,
            plus_denominator: g,
            minus_denominator: gbar,
            prefactor: None,
        },
        None,
    ))
}

/// Σ_{l ∈ (Z_m)^n} ξ^{lᵗLl} / (g^{b_+} ḡ^{b_−}) with g = Σ_{i ∈ Z_m} ξ^{i²}.
pub fn moo(l: &LinkingMatrix, p: &MooParams) -> Result<InvariantValue, InvariantError> {
    if p.m == 0 {
        return Err(InvariantError::InvalidParameter("m must be positive".into()));
    }
    let ord = xi_order(&p.xi)?;
    let period = if p.m % 2 == 1 { p.m } else { 2 * p.m };
    if period % ord != 0 {
        return Err(InvariantError::InvalidParameter(format!(
            "ξ has order {ord}, which does not divide {period}"
        )));
    }
    let sum = quadratic_sum(l, &p.xi, p.m as i64, 1, &vec![0; l.size()])?;
    normalize(sum, l, gauss_sum(p.m, &p.xi))
}

/// g^{−b_+} ḡ^{−b_−} Σ_{γ ∈ (Z_{αd})^n, γ ≡ c mod δ} ξ^{γᵗLγ}, d = δm,
/// with g = Σ_{γ ∈ Z_{αd}, γ ≡ δ/2 mod δ} ξ^{γ²}.
pub fn moo_refined(l: &LinkingMatrix, p: &MooParams) -> Result<InvariantValue, InvariantError> {
    let r = p
        .refinement
        .as_ref()
        .ok_or_else(|| InvariantError::InvalidParameter("missing refinement data".into()))?;
    let (m, delta, alpha) = (p.m as i64, r.delta as i64, r.alpha as i64);
    if m <= 0 || delta <= 0 || alpha <= 0 {
        return Err(InvariantError::InvalidParameter("m, δ and α must be positive".into()));
    }
    if delta > 1 && delta % 2 == 1 {
        return Err(InvariantError::InvalidParameter(format!("δ = {delta} must be 1 or even")));
    }
    if r.class.len() != l.size() {
        return Err(InvariantError::InvalidParameter(format!(
            "class has {} coordinates, expected {}",
            r.class.len(),
            l.size()
        )));
    }
    let range = alpha * delta * m;
    let ord = xi_order(&p.xi)? as i64;
    if (2 * range) % ord != 0 || (range * range) % ord != 0 {
        return Err(InvariantError::InvalidParameter(format!(
            "ξ^(γᵗLγ) is not well defined on Z_{range} for ξ of order {ord}"
        )));
    }
    let sum = quadratic_sum(l, &p.xi, range, delta, &r.class)?;
    let one = LinkingMatrix::new(vec![vec![1]]).expect("1x1");
    let g = quadratic_sum(&one, &p.xi, range, delta, &[if delta == 1 { 0 } else { delta / 2 }])?;
    normalize(sum, l, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::make_root;

    fn mat(rows: Vec<Vec<i64>>) -> LinkingMatrix {
        LinkingMatrix::new(rows).unwrap()
    }

    #[test]
    fn unrefined_examples() {
        for (m, xi) in [(2u32, make_root(4, 1)), (3, make_root(3, 1)), (5, make_root(5, 2)), (4, make_root(8, 3))] {
            let p = MooParams::new(m, xi.clone());
            assert!(moo(&mat(vec![vec![1]]), &p).unwrap().exact.is_one());
            assert_eq!(moo(&mat(vec![vec![0]]), &p).unwrap().exact.as_integer(), Some(m as i64));
        }
        // four terms i^{2ab}: 1 + 1 + 1 - 1 = 2, over g·ḡ = |1 + i|² = 2
        let p = MooParams::new(2, make_root(4, 1));
        let v = moo(&mat(vec![vec![0, 1], vec![1, 0]]), &p).unwrap();
        assert!(v.exact.is_one());
        assert!(moo(&mat(vec![vec![1]]), &MooParams::new(3, make_root(4, 1))).is_err());
    }

    #[test]
    fn gauss_norm() {
        for m in [3u32, 5, 7] {
            for k in 1..m as i64 {
                let g = gauss_sum(m, &make_root(m, k));
                assert_eq!((&g * &g.conj()).as_integer(), Some(m as i64));
            }
        }
    }

    #[test]
    fn refined_partition() {
        let xi = make_root(8, 1);
        let l = mat(vec![vec![2, 1], vec![1, -2]]);
        let base = moo(&l, &MooParams::new(2, make_root(4, 1)));
        assert!(base.is_ok());
        // δ = 2, m = 2, α = 1: range Z_4, ξ of order 8
        let (delta, alpha, m) = (2i64, 1i64, 2u32);
        let mut total = CycloNumber::zero(xi.field());
        for c0 in 0..delta {
            for c1 in 0..delta {
                let p = MooParams::new(m, xi.clone()).refined(delta as u32, alpha as u32, vec![c0, c1]);
                total += moo_refined(&l, &p).unwrap().exact;
            }
        }
        let unrefined = quadratic_sum(&l, &xi, alpha * delta * m as i64, 1, &[0, 0]).unwrap();
        let one = mat(vec![vec![1]]);
        let g = quadratic_sum(&one, &xi, 4, 2, &[1]).unwrap();
        let sig = signature(&l);
        let den = g.pow(sig.b_plus as i64).unwrap() * g.conj().pow(sig.b_minus as i64).unwrap();
        assert_eq!(total, unrefined.try_div(&den).unwrap());
        // L = [1] with the forced spin value c = 1
        let p = MooParams::new(m, xi.clone()).refined(2, 1, vec![1]);
        assert!(moo_refined(&one, &p).unwrap().exact.is_one());
        // δ = 1 is the unrefined sum over Z_{αm}
        let p = MooParams::new(2, make_root(4, 1)).refined(1, 1, vec![0, 0]);
        assert_eq!(moo_refined(&l, &p).unwrap().exact, base.unwrap().exact);
    }
}
