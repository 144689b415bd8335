use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The cyclotomic field Q(ζ_N), represented by the power basis 1, ζ, …, ζ^{φ(N)−1}.
///
/// Fields are interned: `CycloField::new(n)` returns the same `Arc` for the same `n`.
pub struct CycloField {
    order: u32,
    phi: Vec<i64>,
    // nonzero non-leading coefficients of Φ_N as (index, value)
    phi_terms: Vec<(usize, i64)>,
    // ζ^k reduced mod Φ_N for k in 0..N
    powers: Vec<Vec<i64>>,
}

static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();

impl CycloField {
    /// Returns the interned field of order `order`.
    ///
    /// # Panics
    /// If `order == 0`.
    pub fn new(order: u32) -> Arc<CycloField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let cache = FIELDS.get_or_init(Default::default);
        let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(order)
            .or_insert_with(|| Arc::new(Self::build(order)))
            .clone()
    }

    fn build(order: u32) -> CycloField {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        let phi_terms = phi[..deg]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect::<Vec<_>>();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce the overflowing top coefficient
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for &(i, c) in &phi_terms {
                    cur[i] -= top * c;
                }
            }
        }
        CycloField {
            order,
            phi,
            phi_terms,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of Φ_N, equal to the totient of N.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of Φ_N, constant term first.
    pub fn phi_coeffs(&self) -> &[i64] {
        &self.phi
    }

    pub(crate) fn phi_terms(&self) -> &[(usize, i64)] {
        &self.phi_terms
    }

    /// Canonical coordinates of ζ^k.
    pub fn power(&self, k: i64) -> &[i64] {
        &self.powers[k.rem_euclid(self.order as i64) as usize]
    }

    /// Whether Q(ζ_N) contains a primitive d-th root of unity.
    pub fn contains_roots_of_order(&self, d: u32) -> bool {
        d >= 1 && (self.order % d == 0 || (self.order % 2 == 1 && (2 * self.order) % d == 0))
    }
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.order)
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CycloField {}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
///
/// Uses Φ_n = Π_{k | n} (x^k − 1)^{μ(n/k)}.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let divisors: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    let mut p = vec![1i64];
    for &k in &divisors {
        if mobius(n / k) == 1 {
            let mut q = vec![0i64; p.len() + k as usize];
            for (i, &c) in p.iter().enumerate() {
                q[i] -= c;
                q[i + k as usize] += c;
            }
            p = q;
        }
    }
    for &k in &divisors {
        if mobius(n / k) == -1 {
            p = divide_by_xk_minus_one(&p, k as usize);
        }
    }
    p
}

// exact division of p by x^k − 1
fn divide_by_xk_minus_one(p: &[i64], k: usize) -> Vec<i64> {
    let deg = p.len() - 1;
    let mut rem = p.to_vec();
    let mut q = vec![0i64; deg - k + 1];
    for i in (k..=deg).rev() {
        let c = rem[i];
        q[i - k] = c;
        rem[i] = 0;
        rem[i - k] += c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polymul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn product_over_divisors_is_xn_minus_one() {
        for n in 1..=120u32 {
            let mut prod = vec![1i64];
            for k in (1..=n).filter(|k| n % k == 0) {
                prod = polymul(&prod, &cyclotomic_polynomial(k));
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n) as usize);
        }
    }

    #[test]
    fn cyclotomic_105_has_a_two() {
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn powers_wrap_around() {
        let f = CycloField::new(12);
        assert_eq!(f.power(0), &[1, 0, 0, 0]);
        assert_eq!(f.power(4), &[-1, 0, 1, 0]);
        assert_eq!(f.power(12), f.power(0));
        assert_eq!(f.power(-1), f.power(11));
    }

    #[test]
    fn interned() {
        assert!(Arc::ptr_eq(&CycloField::new(7), &CycloField::new(7)));
    }
}
