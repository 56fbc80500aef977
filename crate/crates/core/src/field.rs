//! Exact arithmetic over Q and the real quadratic fields Q(√2), Q(√3).
//!
//! Every coordinate in the system is a `Quad`: an exact value a + b·√d with
//! a, b rational and d ∈ {1, 2, 3}. Rationals are kept canonical (d = 1,
//! b = 0), so lattice tables run in pure rational arithmetic. No floating
//! point is ever used in a predicate; `approx` exists for rendering only.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Errors from field operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed radicands: sqrt({0}) and sqrt({1})")]
    MixedRadicands(u8, u8),
    #[error("unsupported radicand {0} (expected 1, 2 or 3)")]
    BadRadicand(u8),
    #[error("cannot parse {0:?} as an exact number")]
    Parse(String),
}

/// a + b·√d with a, b ∈ Q and d ∈ {1, 2, 3}.
///
/// Canonical form: if b = 0 the radicand is stored as 1, so plain rationals
/// compare equal regardless of how they were produced. Arithmetic never mixes
/// two distinct radicands > 1; that is a hard error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad {
    a: Rational,
    b: Rational,
    d: u8,
}

impl Quad {
    pub fn new(a: Rational, b: Rational, d: u8) -> Result<Self, FieldError> {
        if !matches!(d, 1 | 2 | 3) {
            return Err(FieldError::BadRadicand(d));
        }
        Ok(Self::make(a, b, d))
    }

    fn make(a: Rational, b: Rational, d: u8) -> Self {
        if b.is_zero() || d == 1 {
            debug_assert!(d == 1 || b.is_zero());
            Quad { a: a + b, b: Rational::zero(), d: 1 }
        } else {
            Quad { a, b, d }
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        Quad { a, b: Rational::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// num/den + (snum/sden)·√d
    pub fn with_sqrt(num: i64, den: i64, snum: i64, sden: i64, d: u8) -> Self {
        Self::make(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::new(BigInt::from(snum), BigInt::from(sden)),
            d,
        )
    }

    pub fn sqrt_coeff(snum: i64, sden: i64, d: u8) -> Self {
        Self::with_sqrt(0, 1, snum, sden, d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u8 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn join(&self, other: &Quad) -> Result<u8, FieldError> {
        match (self.d, other.d) {
            (x, y) if x == y => Ok(x),
            (1, y) => Ok(y),
            (x, 1) => Ok(x),
            (x, y) => Err(FieldError::MixedRadicands(x, y)),
        }
    }

    pub fn checked_add(&self, other: &Quad) -> Result<Quad, FieldError> {
        let d = self.join(other)?;
        Ok(Quad::make(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Quad) -> Result<Quad, FieldError> {
        let d = self.join(other)?;
        Ok(Quad::make(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Quad) -> Result<Quad, FieldError> {
        let d = self.join(other)?;
        let dd = Rational::from_integer(BigInt::from(d));
        Ok(Quad::make(
            &self.a * &other.a + (&self.b * &other.b) * &dd,
            &self.a * &other.b + &self.b * &other.a,
            d,
        ))
    }

    /// 1/(a+b√d) = (a−b√d)/(a²−b²d)
    pub fn inv(&self) -> Result<Quad, FieldError> {
        let dd = Rational::from_integer(BigInt::from(self.d));
        let n = &self.a * &self.a - (&self.b * &self.b) * &dd;
        if n.is_zero() {
            // a² = b²·d with d square-free forces a = b = 0
            return Err(FieldError::DivisionByZero);
        }
        Ok(Quad::make(&self.a / &n, -(&self.b / &n), self.d))
    }

    pub fn checked_div(&self, other: &Quad) -> Result<Quad, FieldError> {
        self.checked_mul(&other.inv()?)
    }

    /// Field norm N(a+b√d) = a² − b²·d (a rational).
    pub fn norm(&self) -> Rational {
        let dd = Rational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - (&self.b * &self.b) * &dd
    }

    /// Galois conjugate a − b√d.
    pub fn conj(&self) -> Quad {
        Quad::make(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Exact sign of the real value a + b√d.
    pub fn sign(&self) -> i8 {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb {
            return sa;
        }
        // opposite signs: compare a² with b²·d
        let dd = Rational::from_integer(BigInt::from(self.d));
        let lhs = &self.a * &self.a;
        let rhs = (&self.b * &self.b) * &dd;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0, // impossible for square-free d unless a=b=0
        }
    }

    /// Decimal expansion with `digits` digits after the point, rounded
    /// half-away-from-zero. Render-only; never used in predicates.
    pub fn approx(&self, digits: u32) -> String {
        let neg = self.sign() < 0;
        let v = if neg { -self.clone() } else { self.clone() };
        let scale = BigInt::from(10u32).pow(digits);
        // m = round(v * 10^digits), half away from zero (v >= 0 here)
        let scaled = Quad::make(
            &v.a * Rational::from_integer(scale.clone()),
            &v.b * Rational::from_integer(scale.clone()),
            v.d,
        );
        let m = scaled.round_nearest();
        let (int_part, frac_part) = (m.clone() / &scale, m % &scale);
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if digits > 0 {
            let frac = frac_part.to_string();
            s.push('.');
            for _ in 0..(digits as usize - frac.len()) {
                s.push('0');
            }
            s.push_str(&frac);
        }
        s
    }

    /// Nearest integer to a nonnegative value, half rounded up.
    fn round_nearest(&self) -> BigInt {
        debug_assert!(self.sign() >= 0);
        // start from the float estimate, then correct exactly
        let mut m = BigInt::from(self.to_f64().round() as i64);
        if m.is_negative() {
            m = BigInt::zero();
        }
        // want: m - 1/2 <= x < m + 1/2, i.e. sign(x - m - 1/2) < 0 <= sign(x - m + 1/2)
        loop {
            let hi = self.cmp_to_ratio(&(2 * &m + 1), &BigInt::from(2));
            if hi >= 0 {
                m += 1;
                continue;
            }
            let lo = self.cmp_to_ratio(&(2 * &m - 1), &BigInt::from(2));
            if lo < 0 {
                m -= 1;
                continue;
            }
            return m;
        }
    }

    fn cmp_to_ratio(&self, num: &BigInt, den: &BigInt) -> i8 {
        let r = Quad::from_rational(Rational::new(num.clone(), den.clone()));
        match self.partial_cmp(&r) {
            Some(Ordering::Less) => -1,
            Some(Ordering::Equal) => 0,
            _ => 1,
        }
    }

    /// f64 approximation (rendering only).
    pub fn to_f64(&self) -> f64 {
        let fa = self.a.to_f64().unwrap_or(f64::NAN);
        let fb = self.b.to_f64().unwrap_or(f64::NAN);
        fa + fb * (self.d as f64).sqrt()
    }

    /// Parse "p/q", "p", "p/q+r/s*sqrt2", "-1/2+3*sqrt3", "sqrt2", "-sqrt3/2"…
    pub fn parse(s: &str, expect_d: Option<u8>) -> Result<Quad, FieldError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || FieldError::Parse(s.to_string());
        // split into signed terms
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, c) in t.chars().enumerate() {
            if (c == '+' || c == '-') && i > 0 && !cur.ends_with('/') && !cur.is_empty() {
                terms.push(cur.clone());
                cur.clear();
            }
            cur.push(c);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        let mut a = Rational::zero();
        let mut b = Rational::zero();
        let mut d: u8 = expect_d.unwrap_or(1);
        for term in &terms {
            if let Some(pos) = term.find("sqrt") {
                let rad: u8 = term[pos + 4..pos + 5].parse().map_err(|_| err())?;
                if d != 1 && rad != d {
                    return Err(FieldError::MixedRadicands(d, rad));
                }
                d = rad;
                let mut coeff = term[..pos].trim_end_matches('*').to_string();
                let tail = &term[pos + 5..]; // possible "/k"
                if coeff.is_empty() || coeff == "+" {
                    coeff = "1".into();
                } else if coeff == "-" {
                    coeff = "-1".into();
                }
                let mut c = parse_ratio(&coeff).ok_or_else(err)?;
                if let Some(denom) = tail.strip_prefix('/') {
                    let q = parse_ratio(denom).ok_or_else(err)?;
                    c /= q;
                } else if !tail.is_empty() {
                    return Err(err());
                }
                b += c;
            } else {
                a += parse_ratio(term).ok_or_else(err)?;
            }
        }
        if let Some(e) = expect_d {
            if d != 1 && d != e {
                return Err(FieldError::MixedRadicands(d, e));
            }
        }
        Quad::new(a, b, d)
    }
}

fn parse_ratio(s: &str) -> Option<Rational> {
    if let Some((n, m)) = s.split_once('/') {
        let n = BigInt::from_str(n).ok()?;
        let m = BigInt::from_str(m).ok()?;
        if m.is_zero() {
            return None;
        }
        Some(Rational::new(n, m))
    } else {
        Some(Rational::from_integer(BigInt::from_str(s).ok()?))
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Quad) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(match diff.sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                self.$checked(rhs).expect("field operation failed")
            }
        }
        impl $trait for Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                (&self).$checked(&rhs).expect("field operation failed")
            }
        }
        impl $trait<&Quad> for Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                (&self).$checked(rhs).expect("field operation failed")
            }
        }
        impl $trait<Quad> for &Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                self.$checked(&rhs).expect("field operation failed")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::make(-self.a, -self.b, self.d)
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::make(-self.a.clone(), -self.b.clone(), self.d)
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt{}", self.b, self.d)
        } else if self.b.is_positive() {
            write!(f, "{}+{}*sqrt{}", self.a, self.b, self.d)
        } else {
            write!(f, "{}{}*sqrt{}", self.a, self.b, self.d)
        }
    }
}

impl Serialize for Quad {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // {"a":"p/q","b":"r/s","d":2} with arbitrary-precision decimal strings
        let mut st = s.serialize_struct("Quad", 3)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.serialize_field("d", &self.d)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Quad {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: String,
            b: String,
            d: u8,
        }
        let raw = Raw::deserialize(de)?;
        let a = parse_ratio(&raw.a).ok_or_else(|| serde::de::Error::custom("bad rational"))?;
        let b = parse_ratio(&raw.b).ok_or_else(|| serde::de::Error::custom("bad rational"))?;
        Quad::new(a, b, raw.d).map_err(serde::de::Error::custom)
    }
}

/// Exact cos/sin of k·45° as values of Q(√2) (or Q for multiples of 90°).
pub fn cos_sin_deg_sqrt2(mut deg: i32) -> (Quad, Quad) {
    deg = deg.rem_euclid(360);
    let h = || Quad::sqrt_coeff(1, 2, 2); // √2/2
    match deg {
        0 => (Quad::from_int(1), Quad::from_int(0)),
        45 => (h(), h()),
        90 => (Quad::from_int(0), Quad::from_int(1)),
        135 => (-h(), h()),
        180 => (Quad::from_int(-1), Quad::from_int(0)),
        225 => (-h(), -h()),
        270 => (Quad::from_int(0), Quad::from_int(-1)),
        315 => (h(), -h()),
        _ => panic!("angle {deg} not a multiple of 45"),
    }
}

/// Exact cos/sin of k·30° as values of Q(√3) (or Q for multiples of 90°).
pub fn cos_sin_deg_sqrt3(mut deg: i32) -> (Quad, Quad) {
    deg = deg.rem_euclid(360);
    let c = || Quad::sqrt_coeff(1, 2, 3); // √3/2
    let h = || Quad::ratio(1, 2);
    match deg {
        0 => (Quad::from_int(1), Quad::from_int(0)),
        30 => (c(), h()),
        60 => (h(), c()),
        90 => (Quad::from_int(0), Quad::from_int(1)),
        120 => (-h(), c()),
        150 => (-c(), h()),
        180 => (Quad::from_int(-1), Quad::from_int(0)),
        210 => (-c(), -h()),
        240 => (-h(), -c()),
        270 => (Quad::from_int(0), Quad::from_int(-1)),
        300 => (h(), -c()),
        330 => (c(), -h()),
        _ => panic!("angle {deg} not a multiple of 30"),
    }
}

/// Exact cos/sin of an angle that must be representable in the field of
/// radicand `d`: multiples of 90° for d=1, 45° for d=2, 30° for d=3.
pub fn cos_sin_for_field(deg: i32, d: u8) -> Result<(Quad, Quad), FieldError> {
    let deg = deg.rem_euclid(360);
    match d {
        1 => {
            if deg % 90 != 0 {
                return Err(FieldError::Parse(format!("{deg} deg not representable over Q")));
            }
            Ok(match deg {
                0 => (Quad::from_int(1), Quad::from_int(0)),
                90 => (Quad::from_int(0), Quad::from_int(1)),
                180 => (Quad::from_int(-1), Quad::from_int(0)),
                _ => (Quad::from_int(0), Quad::from_int(-1)),
            })
        }
        2 => {
            if deg % 45 != 0 {
                return Err(FieldError::Parse(format!("{deg} deg not representable over Q(sqrt2)")));
            }
            Ok(cos_sin_deg_sqrt2(deg))
        }
        3 => {
            if deg % 30 != 0 {
                return Err(FieldError::Parse(format!("{deg} deg not representable over Q(sqrt3)")));
            }
            Ok(cos_sin_deg_sqrt3(deg))
        }
        _ => Err(FieldError::BadRadicand(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, m: i64) -> Quad {
        Quad::ratio(n, m)
    }

    #[test]
    fn difference_of_squares() {
        // (1+√2)(1−√2) = −1
        let x = Quad::with_sqrt(1, 1, 1, 1, 2);
        let y = Quad::with_sqrt(1, 1, -1, 1, 2);
        assert_eq!(&x * &y, Quad::from_int(-1));
    }

    #[test]
    fn conjugate_inverse() {
        // 1/(1+√2) = −1+√2
        let x = Quad::with_sqrt(1, 1, 1, 1, 2);
        assert_eq!(Quad::one() / x, Quad::with_sqrt(-1, 1, 1, 1, 2));
    }

    #[test]
    fn contraction_ratio_is_unit() {
        // (7−4√3)(7+4√3) = 1
        let l = Quad::with_sqrt(7, 1, -4, 1, 3);
        let li = Quad::with_sqrt(7, 1, 4, 1, 3);
        assert_eq!(&l * &li, Quad::one());
        assert_eq!(l.inv().unwrap(), li);
    }

    #[test]
    fn signs() {
        assert_eq!(Quad::with_sqrt(3, 1, -2, 1, 2).sign(), 1); // 3 − 2√2
        assert_eq!(Quad::with_sqrt(7, 1, -4, 1, 3).sign(), 1); // 7 − 4√3
        assert_eq!(Quad::with_sqrt(1, 1, -1, 1, 2).sign(), -1); // 1 − √2
        assert_eq!(Quad::zero().sign(), 0);
    }

    #[test]
    fn approx_examples() {
        assert_eq!(Quad::with_sqrt(7, 1, -4, 1, 3).approx(3), "0.072");
        assert_eq!(Quad::sqrt_coeff(1, 1, 2).approx(4), "1.4142");
        assert_eq!(q(-1, 2).approx(2), "-0.50");
        assert_eq!(q(1, 2).approx(0), "1"); // half away from zero
        assert_eq!(q(-1, 2).approx(0), "-1");
    }

    #[test]
    fn mixed_radicands_rejected() {
        let x = Quad::sqrt_coeff(1, 1, 2);
        let y = Quad::sqrt_coeff(1, 1, 3);
        assert!(matches!(x.checked_add(&y), Err(FieldError::MixedRadicands(2, 3))));
    }

    #[test]
    fn rational_canonical_form() {
        // √2 * √2 = 2 must compare equal to the plain rational 2
        let x = Quad::sqrt_coeff(1, 1, 2);
        let two = &x * &x;
        assert_eq!(two, Quad::from_int(2));
        assert!(two.is_rational());
        assert_eq!(two.radicand(), 1);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["1/2", "-3", "1/2+1/2*sqrt2", "-1+sqrt3", "sqrt2/2", "-sqrt3/2", "2-3/2*sqrt3"] {
            let v = Quad::parse(s, None).unwrap();
            let js = serde_json::to_string(&v).unwrap();
            let back: Quad = serde_json::from_str(&js).unwrap();
            assert_eq!(v, back, "{s}");
        }
        assert_eq!(Quad::parse("sqrt2/2", None).unwrap(), Quad::sqrt_coeff(1, 2, 2));
    }

    #[test]
    fn norm_multiplicative() {
        let x = Quad::with_sqrt(3, 2, -5, 7, 2);
        let y = Quad::with_sqrt(-1, 3, 2, 1, 2);
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }
}
