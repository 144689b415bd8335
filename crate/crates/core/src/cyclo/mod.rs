//! Exact arithmetic in cyclotomic fields Q(ζ_N).

mod field;
mod number;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use field::{cyclotomic_polynomial, euler_phi, CycloField};
pub use number::{gauss_sum, make_root, CycloNumber};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("field mismatch: Q(ζ_{left}) vs Q(ζ_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("Q(ζ_{from}) does not embed into Q(ζ_{to})")]
    NotEmbeddable { from: u32, to: u32 },
    #[error("expected {expected} coefficients, found {found}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("malformed rational {0:?}")]
    Parse(String),
}

/// Least common multiple of two field orders.
pub fn lcm_order(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// Re-expresses every value in the common field `target`.
pub fn embed_all(values: &[CycloNumber], target: &Arc<CycloField>) -> Result<Vec<CycloNumber>, CycloError> {
    values.iter().map(|v| v.embed_into(target)).collect()
}

pub fn parse_rational(s: &str) -> Result<BigRational, CycloError> {
    let err = || CycloError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d == BigInt::from(0) {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Serialized form of a [`CycloNumber`]: `{"N": order, "coeffs": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloRecord {
    #[serde(rename = "N")]
    pub n: u32,
    pub coeffs: Vec<String>,
}

impl From<&CycloNumber> for CycloRecord {
    fn from(x: &CycloNumber) -> Self {
        CycloRecord {
            n: x.order(),
            coeffs: x.coeffs().iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<&CycloRecord> for CycloNumber {
    type Error = CycloError;

    fn try_from(rec: &CycloRecord) -> Result<Self, CycloError> {
        if rec.n == 0 {
            return Err(CycloError::Parse("N = 0".into()));
        }
        let field = CycloField::new(rec.n);
        let coeffs = rec
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        CycloNumber::from_coeffs(&field, &coeffs)
    }
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = CycloRecord::deserialize(d)?;
        CycloNumber::try_from(&rec).map_err(serde::de::Error::custom)
    }
}

/// Sum of an iterator of numbers in `field`.
pub fn sum<'a, I: IntoIterator<Item = &'a CycloNumber>>(field: &Arc<CycloField>, items: I) -> CycloNumber {
    let mut acc = CycloNumber::zero(field);
    for x in items {
        acc += x;
    }
    acc
}

/// Product of an iterator of numbers in `field`.
pub fn product<'a, I: IntoIterator<Item = &'a CycloNumber>>(field: &Arc<CycloField>, items: I) -> CycloNumber {
    let mut acc = CycloNumber::one(field);
    for x in items {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_number(n: u32) -> impl Strategy<Value = CycloNumber> {
        let field = CycloField::new(n);
        let deg = field.degree();
        (prop::collection::vec(-20i64..20, deg), 1i64..6).prop_map(move |(c, den)| {
            let coeffs: Vec<BigRational> = c
                .into_iter()
                .map(|x| BigRational::new(x.into(), den.into()))
                .collect();
            CycloNumber::from_coeffs(&field, &coeffs).unwrap()
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CycloNumber, CycloNumber, CycloNumber)> {
        (1u32..=120).prop_flat_map(|n| (arb_number(n), arb_number(n), arb_number(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn inverse_is_two_sided((a, _, _) in (1u32..=40).prop_flat_map(|n| (arb_number(n), arb_number(n), arb_number(n)))) {
            prop_assume!(!a.is_zero());
            let inv = a.invert().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }

        #[test]
        fn embed_complex_is_homomorphism((a, b, _) in arb_triple()) {
            let (ar, ai) = a.embed_complex();
            let (br, bi) = b.embed_complex();
            let (pr, pi) = (&a * &b).embed_complex();
            let (sr, si) = (&a + &b).embed_complex();
            let scale = 1.0 + ar.abs() + ai.abs() + br.abs() + bi.abs();
            prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-10 * scale * scale);
            prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-10 * scale * scale);
            prop_assert!((sr - ar - br).abs() < 1e-10 * scale);
            prop_assert!((si - ai - bi).abs() < 1e-10 * scale);
        }

        #[test]
        fn conj_is_involutive_automorphism((a, b, _) in arb_triple()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            let (re, im) = a.embed_complex();
            let (cr, ci) = a.conj().embed_complex();
            prop_assert!((re - cr).abs() < 1e-9 && (im + ci).abs() < 1e-9);
        }

        #[test]
        fn serde_round_trip((a, _, _) in arb_triple()) {
            let json = serde_json::to_string(&a).unwrap();
            let back: CycloNumber = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, a);
        }
    }

    #[test]
    fn thousand_random_inverses() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=64u32);
            let field = CycloField::new(n);
            let coeffs: Vec<BigRational> = (0..field.degree())
                .map(|_| BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
                .collect();
            let a = CycloNumber::from_coeffs(&field, &coeffs).unwrap();
            if a.is_zero() {
                continue;
            }
            assert!((&a * &a.invert().unwrap()).is_one(), "{a:?}");
        }
    }

    #[test]
    fn record_format() {
        let rec = CycloRecord::from(&make_root(4, 1));
        assert_eq!(rec.coeffs, vec!["0/1", "1/1"]);
        assert_eq!(serde_json::to_string(&rec).unwrap(), r#"{"N":4,"coeffs":["0/1","1/1"]}"#);
        let parsed: CycloNumber = serde_json::from_str(r#"{"N":4,"coeffs":["1/2","-3"]}"#).unwrap();
        assert_eq!(parsed.coeffs()[1], BigRational::from_integer((-3).into()));
        assert!(serde_json::from_str::<CycloNumber>(r#"{"N":4,"coeffs":["1"]}"#).is_err());
    }
}
