//! Exact scalars: Laurent polynomials in `q` with arbitrary-precision
//! rational coefficients.
//!
//! Every matrix entry produced by the operator formulas in this crate lies in
//! `Q[q, q^-1]`, so the full rational function field is never needed. The
//! only division is [`exact_div`], which fails loudly with
//! [`Error::NonExactDivision`] instead of truncating.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Renders a rational as `"num/den"`, always including the denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// A Laurent polynomial `sum_k c_k q^k` over the rationals.
///
/// Terms are stored sorted by exponent with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    terms: Vec<(i64, Rational)>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rational_int(c))
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// `sign * q^k` with `sign` in `{-1, 1}`.
    pub fn signed_q_pow(sign: i64, k: i64) -> Self {
        Self::monomial(rational_int(sign), k)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(k, c)] }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert_with(Rational::zero) += c;
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, k: i64) -> Rational {
        self.terms
            .binary_search_by_key(&k, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// `Some((c, k))` when the polynomial is the single term `c q^k`.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        match self.terms.as_slice() {
            [(k, c)] => Some((c, *k)),
            _ => None,
        }
    }

    /// Inverse in the Laurent ring; only monomials are units.
    pub fn inverse(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((c, k)) => Ok(Self::monomial(c.recip(), k.checked_neg().ok_or(Error::ExponentOverflow)?)),
            None if self.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(k).expect("q-exponent overflow"), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// Multiplication with overflow detection on exponents.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((c, k)) = rhs.as_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, d) in &self.terms {
                terms.push((e.checked_add(k).ok_or(Error::ExponentOverflow)?, d * c));
            }
            return Ok(Self { terms });
        }
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
                *map.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `q = value`; see [`specialize`].
    pub fn specialize(&self, value: &Rational) -> Result<Rational> {
        specialize(self, value)
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &rhs.terms;
        let rhs_coeff = |c: &Rational| if negate_rhs { -c } else { c.clone() };
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, rhs_coeff(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + rhs_coeff(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest power first, as the polynomials are usually written.
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match (*k, abs.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{coeff} q")?,
                (k, true) => write!(f, "q^{k}")?,
                (k, false) => write!(f, "{coeff} q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        self.merge(rhs, false)
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        self.merge(rhs, true)
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        self.checked_mul(rhs).expect("q-exponent overflow")
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: &QLaurent) -> QLaurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(mut self) -> QLaurent {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        *self = self.merge(rhs, true);
    }
}

impl From<i64> for QLaurent {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

/// The q-integer `[k]_q = (q^k - q^-k) / (q - q^-1)`, i.e.
/// `q^{k-1} + q^{k-3} + ... + q^{1-k}`.
pub fn q_int(k: i64) -> Result<QLaurent> {
    if k < 0 {
        return Err(Error::OutOfRange(format!("q_int({k}): k must be nonnegative")));
    }
    Ok(QLaurent::from_terms((0..k).map(|j| (k - 1 - 2 * j, Rational::one()))))
}

pub fn q_factorial(k: i64) -> Result<QLaurent> {
    if k < 0 {
        return Err(Error::OutOfRange(format!("q_factorial({k})")));
    }
    let mut acc = QLaurent::one();
    for j in 1..=k {
        acc = &acc * &q_int(j)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[a]! / ([b]! [a-b]!)` computed by exact division.
pub fn q_binomial(a: i64, b: i64) -> Result<QLaurent> {
    if b < 0 || a < b {
        return Err(Error::OutOfRange(format!("q_binomial({a}, {b}) needs 0 <= b <= a")));
    }
    let den = &q_factorial(b)? * &q_factorial(a - b)?;
    exact_div(&q_factorial(a)?, &den)
}

/// Quotient of `num` by `den` in `Q[q, q^-1]`.
///
/// Fails with [`Error::NonExactDivision`] if `den` does not divide `num`.
pub fn exact_div(num: &QLaurent, den: &QLaurent) -> Result<QLaurent> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(QLaurent::zero());
    }
    let (den_lo, den_hi) = (den.min_exponent().unwrap(), den.max_exponent().unwrap());
    let den_lead = den.terms.last().unwrap().1.clone();
    let lowest_quotient_exp = num.min_exponent().unwrap() - den_lo;

    let mut rem = num.clone();
    let mut quotient = Vec::new();
    while let Some(top) = rem.max_exponent() {
        let e = top - den_hi;
        if e < lowest_quotient_exp {
            return Err(Error::NonExactDivision {
                num: num.to_string(),
                den: den.to_string(),
            });
        }
        let c = rem.terms.last().unwrap().1.clone() / &den_lead;
        rem = &rem - &den.shift(e).scale(&c);
        quotient.push((e, c));
    }
    Ok(QLaurent::from_terms(quotient))
}

/// Evaluates `p` at `q = value`.
pub fn specialize(p: &QLaurent, value: &Rational) -> Result<Rational> {
    if value.is_zero() {
        return Err(Error::ZeroEvaluationPoint);
    }
    let mut acc = Rational::zero();
    for (k, c) in &p.terms {
        let power = i32::try_from(*k).map_err(|_| Error::ExponentOverflow)?;
        acc += c * num_traits::pow::Pow::pow(value, power);
    }
    Ok(acc)
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for QLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct QVisitor;
        impl<'de> Visitor<'de> for QVisitor {
            type Value = QLaurent;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from exponent strings to \"num/den\" strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<QLaurent, A::Error> {
                let mut terms = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let k: i64 = k.parse().map_err(de::Error::custom)?;
                    let c = parse_rational(&v).map_err(de::Error::custom)?;
                    terms.push((k, c));
                }
                Ok(QLaurent::from_terms(terms))
            }
        }
        deserializer.deserialize_map(QVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> QLaurent {
        QLaurent::q_pow(k)
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(0).unwrap(), QLaurent::zero());
        assert_eq!(q_int(1).unwrap(), QLaurent::one());
        assert_eq!(q_int(3).unwrap(), q(2) + QLaurent::one() + q(-2));
        assert!(q_int(-1).is_err());
    }

    #[test]
    fn q_int_matches_division_oracle() {
        let den = q(1) - q(-1);
        for k in 0..10 {
            let num = q(k) - q(-k);
            assert_eq!(q_int(k).unwrap(), exact_div(&num, &den).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(2, 1).unwrap(), q(1) + q(-1));
        assert_eq!(q_binomial(3, 0).unwrap(), QLaurent::one());
        let expected = q(4) + q(2) + QLaurent::from_int(2) + q(-2) + q(-4);
        assert_eq!(q_binomial(4, 2).unwrap(), expected);
        assert!(q_binomial(2, 3).is_err());
        assert!(q_binomial(2, -1).is_err());
    }

    #[test]
    fn q_pascal() {
        for a in 1..=8 {
            for b in 1..=a {
                let lhs = q_binomial(a, b).unwrap();
                let rhs = q_binomial(a - 1, b - 1).unwrap().shift(a - b)
                    + if b <= a - 1 { q_binomial(a - 1, b).unwrap().shift(-b) } else { QLaurent::zero() };
                assert_eq!(lhs, rhs, "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn exact_div_cases() {
        let d = q(1) - q(-1);
        assert_eq!(exact_div(&(q(2) - q(-2)), &d).unwrap(), q(1) + q(-1));
        assert_eq!(exact_div(&d, &d).unwrap(), QLaurent::one());
        assert!(matches!(exact_div(&q(1), &d), Err(Error::NonExactDivision { .. })));
        assert_eq!(exact_div(&q(1), &QLaurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn specialize_cases() {
        let one = rational_int(1);
        assert_eq!(specialize(&(q(1) + q(-1)), &one).unwrap(), rational_int(2));
        let p = q(2) + QLaurent::one() + q(-2);
        assert_eq!(specialize(&p, &rational_int(2)).unwrap(), rational(21, 4));
        assert_eq!(specialize(&(q(1) - q(-1)), &one).unwrap(), rational_int(0));
        assert_eq!(specialize(&p, &rational_int(0)), Err(Error::ZeroEvaluationPoint));
        for k in 0..=12 {
            assert_eq!(specialize(&q_int(k).unwrap(), &one).unwrap(), rational_int(k));
        }
    }

    #[test]
    fn json_format() {
        let p = q(1) + q(-1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":"1/1","1":"1/1"}"#);
        let back: QLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = q(2) - QLaurent::from_int(3) + q(-1).scale(&rational(1, 2));
        assert_eq!(p.to_string(), "q^2 - 3 + 1/2 q^-1");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn monomial_inverse() {
        let p = QLaurent::monomial(rational(-2, 3), 4);
        assert!((&p * &p.inverse().unwrap()).is_one());
        assert!((q(1) + q(-1)).inverse().is_err());
    }
}
