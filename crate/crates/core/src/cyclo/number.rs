use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CycloError, CycloField};

/// An element of Q(ζ_N) in canonical form.
///
/// Coordinates are stored as integer numerators over one positive common
/// denominator, reduced so that the gcd of all entries is 1. Values whose
/// entries fit in `i64` always use the small representation, so structural
/// equality is value equality.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl CycloNumber {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycloField>, value: i64) -> Self {
        let mut num = vec![0; field.degree()];
        num[0] = value;
        CycloNumber {
            field: field.clone(),
            repr: Repr::Small { num, den: 1 },
        }
    }

    pub fn from_rational(field: &Arc<CycloField>, value: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = value.numer().clone();
        Self::from_big(field, num, value.denom().clone())
    }

    /// Builds a number from power-basis coordinates.
    pub fn from_coeffs(
        field: &Arc<CycloField>,
        coeffs: &[BigRational],
    ) -> Result<Self, CycloError> {
        if coeffs.len() != field.degree() {
            return Err(CycloError::CoefficientLength {
                expected: field.degree(),
                found: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_big(field, num, den))
    }

    /// ζ^k in the given field.
    pub fn root(field: &Arc<CycloField>, k: i64) -> Self {
        CycloNumber {
            field: field.clone(),
            repr: Repr::Small {
                num: field.power(k).to_vec(),
                den: 1,
            },
        }
    }

    /// ζ_d^k as an element of `field`, if the field contains the d-th roots of unity.
    pub fn root_of_unity(field: &Arc<CycloField>, d: u32, k: i64) -> Option<Self> {
        let n = field.order();
        if d == 0 {
            return None;
        }
        if n % d == 0 {
            return Some(Self::root(field, k * (n / d) as i64));
        }
        if n % 2 == 1 && (2 * n) % d == 0 {
            // ζ_{2N} = −ζ_N^{(N+1)/2}
            let e = k * ((2 * n) / d) as i64;
            let r = Self::root(field, e * ((n as i64 + 1) / 2));
            return Some(if e.rem_euclid(2) == 1 { -r } else { r });
        }
        None
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num.iter().all(|&c| c == 0),
            Repr::Big { .. } => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small { num, den } => {
                *den == 1 && num[0] == 1 && num[1..].iter().all(|&c| c == 0)
            }
            Repr::Big { .. } => false,
        }
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        let coeffs = self.coeffs();
        if coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match &self.repr {
            Repr::Small { num, den: 1 } if num[1..].iter().all(|&c| c == 0) => Some(num[0]),
            _ => None,
        }
    }

    /// Power-basis coordinates.
    pub fn coeffs(&self) -> Vec<BigRational> {
        let (num, den) = self.to_big();
        num.into_iter()
            .map(|c| BigRational::new(c, den.clone()))
            .collect()
    }

    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match &self.repr {
            Repr::Small { num, den } => (
                num.iter().map(|&c| BigInt::from(c)).collect(),
                BigInt::from(*den),
            ),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    fn from_wide(field: &Arc<CycloField>, mut num: Vec<i128>, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den == i128::MIN || num.contains(&i128::MIN) {
            return Self::from_big(
                field,
                num.into_iter().map(BigInt::from).collect(),
                BigInt::from(den),
            );
        }
        if den < 0 {
            den = -den;
            for c in num.iter_mut() {
                *c = -*c;
            }
        }
        if den != 1 {
            let mut g = den as u128;
            for &c in &num {
                if g == 1 {
                    break;
                }
                g = gcd_u128(g, c.unsigned_abs());
            }
            if g > 1 {
                let g = g as i128;
                den /= g;
                for c in num.iter_mut() {
                    *c /= g;
                }
            }
        }
        if num.iter().all(|c| c.unsigned_abs() < 1u128 << 63) && den < 1i128 << 63 {
            CycloNumber {
                field: field.clone(),
                repr: Repr::Small {
                    num: num.into_iter().map(|c| c as i64).collect(),
                    den: den as i64,
                },
            }
        } else {
            CycloNumber {
                field: field.clone(),
                repr: Repr::Big {
                    num: num.into_iter().map(BigInt::from).collect(),
                    den: BigInt::from(den),
                },
            }
        }
    }

    fn from_big(field: &Arc<CycloField>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        if num.iter().all(|c| c.is_zero()) {
            den = BigInt::one();
        } else if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                den /= &g;
                for c in num.iter_mut() {
                    *c /= &g;
                }
            }
        }
        let small_den = den.to_i64();
        let small_num: Option<Vec<i64>> = num.iter().map(|c| c.to_i64()).collect();
        match (small_num, small_den) {
            (Some(num), Some(den)) if den != i64::MIN && num.iter().all(|&c| c != i64::MIN) => {
                CycloNumber {
                    field: field.clone(),
                    repr: Repr::Small { num, den },
                }
            }
            _ => CycloNumber {
                field: field.clone(),
                repr: Repr::Big { num, den },
            },
        }
    }

    fn check_field(&self, other: &Self) -> Result<(), CycloError> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.order() == other.field.order() {
            Ok(())
        } else {
            Err(CycloError::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            })
        }
    }

    fn add_signed(&self, other: &Self, sign: i128) -> Self {
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) =
            (&self.repr, &other.repr)
        {
            if let Some((num, den)) = add_small(a, *da, b, *db, sign) {
                return Self::from_wide(&self.field, num, den);
            }
        }
        let (a, da) = self.to_big();
        let (b, db) = other.to_big();
        let l = da.lcm(&db);
        let fa = &l / &da;
        let fb = &l / &db;
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                if sign > 0 {
                    x * &fa + y * &fb
                } else {
                    x * &fa - y * &fb
                }
            })
            .collect();
        Self::from_big(&self.field, num, l)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_field(other)?;
        Ok(self.add_signed(other, 1))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_field(other)?;
        Ok(self.add_signed(other, -1))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) =
            (&self.repr, &other.repr)
        {
            if let Some(num) = mul_small(&self.field, a, b) {
                return Self::from_wide(&self.field, num, *da as i128 * *db as i128);
            }
        }
        let (a, da) = self.to_big();
        let (b, db) = other.to_big();
        let deg = self.field.degree();
        let mut p = vec![BigInt::zero(); 2 * deg - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        for k in (deg..2 * deg - 1).rev() {
            if p[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut p[k]);
            for &(i, phi) in self.field.phi_terms() {
                p[k - deg + i] -= &c * phi;
            }
        }
        p.truncate(deg);
        Self::from_big(&self.field, p, da * db)
    }

    /// Multiplies by an integer.
    pub fn scale(&self, k: i64) -> Self {
        if let Repr::Small { num, den } = &self.repr {
            let num = num.iter().map(|&c| c as i128 * k as i128).collect();
            return Self::from_wide(&self.field, num, *den as i128);
        }
        let (num, den) = self.to_big();
        Self::from_big(&self.field, num.into_iter().map(|c| c * k).collect(), den)
    }

    /// Multiplies by a rational number.
    pub fn scale_rational(&self, q: &BigRational) -> Self {
        let (num, den) = self.to_big();
        Self::from_big(
            &self.field,
            num.into_iter().map(|c| c * q.numer()).collect(),
            den * q.denom(),
        )
    }

    /// Multiplies by ζ^k.
    pub fn mul_root(&self, k: i64) -> Self {
        self.mul_unchecked(&Self::root(&self.field, k))
    }

    /// Multiplicative inverse, by solving the linear system of multiplication-by-self.
    pub fn invert(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let deg = self.field.degree();
        let (num, den) = self.to_big();
        if num[1..].iter().all(|c| c.is_zero()) {
            let mut out = vec![BigInt::zero(); deg];
            out[0] = den;
            return Ok(Self::from_big(&self.field, out, num[0].clone()));
        }
        // column j of the matrix holds the coordinates of num·ζ^j; solve M x = e_0
        let numer = Self::from_big(&self.field, num, BigInt::one());
        let mut columns = Vec::with_capacity(deg);
        let mut cur = numer;
        for j in 0..deg {
            if j > 0 {
                cur = cur.mul_root(1);
            }
            columns.push(cur.to_big().0);
        }
        let (y, det) = match solve_unit_small(&columns) {
            Some(sol) => (
                sol.0.into_iter().map(BigInt::from).collect(),
                BigInt::from(sol.1),
            ),
            None => solve_unit_big(&columns),
        };
        // x = y / det, and the inverse of num/den is den·x
        Ok(Self::from_big(
            &self.field,
            y.into_iter().map(|c| c * &den).collect(),
            det,
        ))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(&other.invert()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, CycloError> {
        let mut base = if e < 0 { self.invert()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism ζ ↦ ζ^k (k coprime to N).
    pub fn galois(&self, k: i64) -> Self {
        let field = &self.field;
        let deg = field.degree();
        if let Repr::Small { num, den } = &self.repr {
            let mut out = vec![0i128; deg];
            let mut ok = true;
            'outer: for (j, &c) in num.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (o, &p) in out.iter_mut().zip(field.power(k * j as i64)) {
                    match o.checked_add(c as i128 * p as i128) {
                        Some(v) => *o = v,
                        None => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                return Self::from_wide(field, out, *den as i128);
            }
        }
        let (num, den) = self.to_big();
        let mut out = vec![BigInt::zero(); deg];
        for (j, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(field.power(k * j as i64)) {
                *o += c * p;
            }
        }
        Self::from_big(field, out, den)
    }

    /// Image under Q(ζ_N) → Q(ζ_M), ζ_N ↦ ζ_M^{M/N}; requires N | M.
    pub fn embed_into(&self, target: &Arc<CycloField>) -> Result<Self, CycloError> {
        let n = self.field.order();
        let m = target.order();
        if m % n != 0 {
            return Err(CycloError::NotEmbeddable { from: n, to: m });
        }
        if m == n {
            return Ok(CycloNumber {
                field: target.clone(),
                repr: self.repr.clone(),
            });
        }
        let step = (m / n) as i64;
        let (num, den) = self.to_big();
        let mut out = vec![BigInt::zero(); target.degree()];
        for (j, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(target.power(step * j as i64)) {
                if p != 0 {
                    *o += c * p;
                }
            }
        }
        Ok(Self::from_big(target, out, den))
    }

    /// Evaluates at ζ_N = exp(2πi/N).
    pub fn embed_complex(&self) -> (f64, f64) {
        let n = self.field.order() as f64;
        let coords: Vec<f64> = match &self.repr {
            Repr::Small { num, den } => num.iter().map(|&c| c as f64 / *den as f64).collect(),
            Repr::Big { num, den } => num
                .iter()
                .map(|c| BigRational::new(c.clone(), den.clone()).to_f64().unwrap_or(f64::NAN))
                .collect(),
        };
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in coords.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let (s, co) = (2.0 * std::f64::consts::PI * j as f64 / n).sin_cos();
            re += c * co;
            im += c * s;
        }
        (re, im)
    }

    /// Multiplicative order as a root of unity, if it is one.
    pub fn root_order(&self) -> Option<u32> {
        let n = 2 * self.field.order();
        let mut p = self.clone();
        for k in 1..=n {
            if p.is_one() {
                return Some(k);
            }
            p = p.mul_unchecked(self);
        }
        None
    }
}

/// Fraction-free (Bareiss) solve of M y = det(M)·e_0 where `columns[j]` is column j of M.
/// Returns `None` on i128 overflow.
fn solve_unit_small(columns: &[Vec<BigInt>]) -> Option<(Vec<i128>, i128)> {
    let n = columns.len();
    let mut m = vec![vec![0i128; n + 1]; n];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            m[i][j] = c.to_i128()?;
        }
    }
    m[0][n] = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let p = (k + 1..n).find(|&i| m[i][k] != 0)?;
            m.swap(k, p);
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = pivot_row[k];
        for row in rest.iter_mut() {
            let f = row[k];
            for j in k + 1..=n {
                let v = row[j].checked_mul(pivot)?.checked_sub(f.checked_mul(pivot_row[j])?)?;
                row[j] = v / prev;
            }
            row[k] = 0;
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1];
    // y_i = det·x_i are integers (Cramer)
    let mut y = vec![0i128; n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].checked_mul(det)?;
        for j in i + 1..n {
            acc = acc.checked_sub(m[i][j].checked_mul(y[j])?)?;
        }
        y[i] = acc / m[i][i];
    }
    Some((y, det))
}

fn solve_unit_big(columns: &[Vec<BigInt>]) -> (Vec<BigInt>, BigInt) {
    let n = columns.len();
    let mut m = vec![vec![BigInt::zero(); n + 1]; n];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            m[i][j] = c.clone();
        }
    }
    m[0][n] = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let p = (k + 1..n)
                .find(|&i| !m[i][k].is_zero())
                .expect("multiplication matrix of a nonzero element is invertible");
            m.swap(k, p);
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[k]);
            for j in k + 1..=n {
                let v = &row[j] * pivot - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
    }
    let det = m[n - 1][n - 1].clone();
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &m[i][n] * &det;
        for j in i + 1..n {
            acc -= &m[i][j] * &y[j];
        }
        y[i] = acc / &m[i][i];
    }
    (y, det)
}

fn add_small(a: &[i64], da: i64, b: &[i64], db: i64, sign: i128) -> Option<(Vec<i128>, i128)> {
    if da == db {
        let num = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| x as i128 + sign * y as i128)
            .collect();
        return Some((num, da as i128));
    }
    let g = (da as i128).gcd(&(db as i128));
    let fa = db as i128 / g;
    let fb = da as i128 / g;
    let l = da as i128 * fa;
    let mut num = Vec::with_capacity(a.len());
    for (&x, &y) in a.iter().zip(b) {
        let u = (x as i128).checked_mul(fa)?;
        let v = (y as i128).checked_mul(fb)?;
        num.push(u.checked_add(sign * v)?);
    }
    Some((num, l))
}

fn mul_small(field: &CycloField, a: &[i64], b: &[i64]) -> Option<Vec<i128>> {
    let deg = a.len();
    let mut p = vec![0i128; 2 * deg - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                p[i + j] = p[i + j].checked_add(x as i128 * y as i128)?;
            }
        }
    }
    for k in (deg..2 * deg - 1).rev() {
        let c = p[k];
        if c == 0 {
            continue;
        }
        for &(i, phi) in field.phi_terms() {
            let t = c.checked_mul(phi as i128)?;
            p[k - deg + i] = p[k - deg + i].checked_sub(t)?;
        }
    }
    p.truncate(deg);
    Some(p)
}

/// Σ_{i=0}^{m−1} ξ^{i²}.
pub fn gauss_sum(m: u32, xi: &CycloNumber) -> CycloNumber {
    let field = xi.field();
    let mut total = CycloNumber::zero(field);
    let mut term = CycloNumber::one(field);
    let xi2 = xi.mul_unchecked(xi);
    let mut step = xi.clone();
    for _ in 0..m {
        total += &term;
        // ξ^{(i+1)²} = ξ^{i²} · ξ^{2i+1}
        term = term.mul_unchecked(&step);
        step = step.mul_unchecked(&xi2);
    }
    total
}

/// ζ_N^k in Q(ζ_N).
pub fn make_root(n: u32, k: i64) -> CycloNumber {
    CycloNumber::root(&CycloField::new(n), k)
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.repr == other.repr
    }
}

impl Eq for CycloNumber {}

impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.repr.hash(state);
    }
}

impl Ord for CycloNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .order()
            .cmp(&other.field.order())
            .then_with(|| match (&self.repr, &other.repr) {
                (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) => {
                    da.cmp(db).then_with(|| a.cmp(b))
                }
                _ => {
                    let (a, da) = self.to_big();
                    let (b, db) = other.to_big();
                    da.cmp(&db).then_with(|| a.cmp(&b))
                }
            })
    }
}

impl PartialOrd for CycloNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.field)
    }
}

/// Writes the value as a polynomial in z = ζ_N, e.g. `1/2 - z + 3*z^2`.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coeffs();
        let mut first = true;
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                _ => write!(f, "{a}*")?,
            }
            match j {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.scale(-1)
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.scale(-1)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                self.$imp(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloNumber> for CycloNumber {
    fn mul_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self * rhs;
    }
}

impl AddAssign for CycloNumber {
    fn add_assign(&mut self, rhs: CycloNumber) {
        *self += &rhs;
    }
}

impl MulAssign for CycloNumber {
    fn mul_assign(&mut self, rhs: CycloNumber) {
        *self *= &rhs;
    }
}
