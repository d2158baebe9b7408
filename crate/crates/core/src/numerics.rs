//! Exact scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. [`QuadExt`] is an element `u + v·√D` of the real
//! quadratic field over the rationals with a per-value discriminant `D`; the
//! Cartesian embedding of a triangle places every constructed point in one such
//! field. [`FloatPolicy`] is the tolerance used when exact verdicts are
//! re-checked in `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GeometryError, Result};

pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n"`, `"n/d"` or a plain decimal such as `"-0.25"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || GeometryError::ParseRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let (neg, whole) = match whole.strip_prefix('-') {
            Some(w) => (true, w),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let digits_ok = |x: &str| x.chars().all(|c| c.is_ascii_digit());
        if !digits_ok(whole) || !digits_ok(frac) || (whole.is_empty() && frac.is_empty()) {
            return Err(bad());
        }
        let joined = format!("{whole}{frac}");
        let n: BigInt = joined.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let q = Rational::new(n, d);
        return Ok(if neg { -q } else { q });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Nearest `f64` (saturating to ±inf for huge magnitudes).
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact square root when `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &n * &n == *q.numer() && &d * &d == *q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Serde adapter: a rational as the string `"n/d"` (or `"n"`).
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub fn rational_strings<'a, I: IntoIterator<Item = &'a Rational>>(qs: I) -> Vec<String> {
    qs.into_iter().map(|q| q.to_string()).collect()
}

/// Arithmetic operator selector for [`QuadExt::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// `u + v·√D` with rational `u`, `v` and a rational discriminant `D ≥ 0`.
///
/// Canonical form: when `D` is the square of a rational (including 0) the
/// irrational part is folded into `u`, so `v = 0`. Structural equality is
/// therefore numeric equality for values sharing `D`.
///
/// The `+ - *` operators panic on mismatched discriminants; use the `checked_*`
/// methods when the operands come from different embeddings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    u: Rational,
    v: Rational,
    d: Rational,
}

impl QuadExt {
    pub fn new(u: Rational, v: Rational, d: Rational) -> Result<Self> {
        if d.is_negative() {
            return Err(GeometryError::NegativeDiscriminant(d.to_string()));
        }
        Ok(Self::canonical(u, v, d))
    }

    fn canonical(u: Rational, v: Rational, d: Rational) -> Self {
        if v.is_zero() {
            return QuadExt { u, v, d };
        }
        match rational_sqrt(&d) {
            Some(root) => QuadExt {
                u: u + v * root,
                v: Rational::zero(),
                d,
            },
            None => QuadExt { u, v, d },
        }
    }

    /// The rational `q` embedded in ℚ(√d).
    pub fn from_rational(q: Rational, d: &Rational) -> Self {
        QuadExt {
            u: q,
            v: Rational::zero(),
            d: d.clone(),
        }
    }

    pub fn zero(d: &Rational) -> Self {
        Self::from_rational(Rational::zero(), d)
    }

    /// `√d` itself.
    pub fn sqrt_of(d: &Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn discriminant(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// `Some(u)` when the value is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.v.is_zero().then_some(&self.u)
    }

    fn check_d(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(GeometryError::MismatchedDiscriminant(
                self.d.to_string(),
                other.d.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_d(other)?;
        Ok(Self::canonical(&self.u + &other.u, &self.v + &other.v, self.d.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_d(other)?;
        Ok(Self::canonical(&self.u - &other.u, &self.v - &other.v, self.d.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_d(other)?;
        let u = &self.u * &other.u + &self.v * &other.v * &self.d;
        let v = &self.u * &other.v + &self.v * &other.u;
        Ok(Self::canonical(u, v, self.d.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_d(other)?;
        let inv = other.recip()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse: `(u − v√D) / (u² − v²D)`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(GeometryError::DivisionByZero);
        }
        // v ≠ 0 only when D is not a rational square, so the norm is nonzero.
        let norm = &self.u * &self.u - &self.v * &self.v * &self.d;
        Ok(Self::canonical(&self.u / &norm, -&self.v / &norm, self.d.clone()))
    }

    pub fn arith(&self, other: &Self, op: QuadOp) -> Result<Self> {
        match op {
            QuadOp::Add => self.checked_add(other),
            QuadOp::Sub => self.checked_sub(other),
            QuadOp::Mul => self.checked_mul(other),
            QuadOp::Div => self.checked_div(other),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::canonical(&self.u * k, &self.v * k, self.d.clone())
    }

    /// Exact sign of `u + v√D` from rational comparisons only.
    pub fn signum(&self) -> i32 {
        let su = sign_of(&self.u);
        let sv = sign_of(&self.v);
        if sv == 0 || su == sv {
            return if su == 0 { sv } else { su };
        }
        if su == 0 {
            return sv;
        }
        // Opposite signs: the larger of u² and v²D wins.
        let u2 = &self.u * &self.u;
        let v2d = &self.v * &self.v * &self.d;
        match u2.cmp(&v2d) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let u = to_f64(&self.u);
        if self.v.is_zero() {
            return u;
        }
        u + to_f64(&self.v) * to_f64(&self.d).sqrt()
    }
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "{} + {}·√({})", self.u, self.v, self.d)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).expect("QuadExt operands must share a discriminant")
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            u: -&self.u,
            v: -&self.v,
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct QuadExtRepr {
    #[serde(with = "rational_str")]
    u: Rational,
    #[serde(with = "rational_str")]
    v: Rational,
    #[serde(rename = "D", with = "rational_str")]
    d: Rational,
    #[serde(default, skip_deserializing)]
    approx: f64,
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadExtRepr {
            u: self.u.clone(),
            v: self.v.clone(),
            d: self.d.clone(),
            approx: self.to_f64(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QuadExtRepr::deserialize(d)?;
        QuadExt::new(r.u, r.v, r.d).map_err(serde::de::Error::custom)
    }
}

/// Tolerances for comparing a floating-point re-evaluation with an exact value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatPolicy {
    rel_tol: f64,
    abs_tol: f64,
}

impl Default for FloatPolicy {
    fn default() -> Self {
        FloatPolicy {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
        }
    }
}

impl FloatPolicy {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Result<Self> {
        if rel_tol > 0.0 && abs_tol > 0.0 {
            Ok(FloatPolicy { rel_tol, abs_tol })
        } else {
            Err(GeometryError::InvalidPolicy)
        }
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn close(&self, x: f64, y: f64) -> bool {
        let diff = (x - y).abs();
        diff <= self.abs_tol || diff <= self.rel_tol * x.abs().max(y.abs())
    }
}

/// 3×3 determinant over any commutative ring with reference arithmetic.
pub(crate) fn det3<T>(m: [[&T; 3]; 3]) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let minor = |r: usize, s: usize, t: usize, q: usize| &(m[r][s] * m[t][q]) - &(m[r][q] * m[t][s]);
    let t0 = m[0][0] * &minor(1, 1, 2, 2);
    let t1 = m[0][1] * &minor(1, 0, 2, 2);
    let t2 = m[0][2] * &minor(1, 0, 2, 1);
    &(&t0 - &t1) + &t2
}

/// Determinant of a small square rational matrix by exact Gaussian elimination.
pub(crate) fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for k in col..n {
                let delta = &f * &m[col][k];
                m[r][k] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(u: Rational, v: Rational, d: i64) -> QuadExt {
        QuadExt::new(u, v, int(d)).unwrap()
    }

    #[test]
    fn multiplication_expands_and_reduces() {
        let x = q(int(1), int(2), 5);
        let y = q(int(3), int(-1), 5);
        assert_eq!(x.checked_mul(&y).unwrap(), q(int(-7), int(5), 5));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = q(rat(3, 7), rat(-2, 9), 11);
        assert!((&x + &(-&x)).is_zero());
        assert!(x.checked_sub(&x).unwrap().is_zero());
    }

    #[test]
    fn sqrt_squared_is_d() {
        let r2 = QuadExt::sqrt_of(&int(2)).unwrap();
        assert_eq!(&r2 * &r2, q(int(2), int(0), 2));
    }

    #[test]
    fn mismatched_discriminant_and_zero_division() {
        let x = q(int(1), int(1), 2);
        let y = q(int(1), int(1), 3);
        for op in [QuadOp::Add, QuadOp::Sub, QuadOp::Mul, QuadOp::Div] {
            assert!(matches!(
                x.arith(&y, op),
                Err(GeometryError::MismatchedDiscriminant(..))
            ));
        }
        assert_eq!(
            x.checked_div(&QuadExt::zero(&int(2))),
            Err(GeometryError::DivisionByZero)
        );
        assert!(matches!(
            QuadExt::new(int(0), int(1), int(-1)),
            Err(GeometryError::NegativeDiscriminant(_))
        ));
    }

    #[test]
    fn signs() {
        assert_eq!(q(int(0), int(0), 7).signum(), 0);
        assert_eq!(q(int(-3), int(2), 2).signum(), -1);
        assert_eq!(QuadExt::new(int(1), int(-1), rat(1, 2)).unwrap().signum(), 1);
        assert_eq!(q(int(3), int(-2), 2).signum(), 1);
        assert_eq!(q(int(-1), int(1), 2).signum(), 1);
    }

    #[test]
    fn float_values() {
        assert_eq!(q(int(1), int(1), 0).to_f64(), 1.0);
        assert!((q(int(0), int(1), 2).to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(q(rat(1, 2), int(0), 3).to_f64(), 0.5);
    }

    #[test]
    fn perfect_square_discriminant_collapses() {
        let y = QuadExt::sqrt_of(&rat(144, 25)).unwrap();
        assert_eq!(y.as_rational(), Some(&rat(12, 5)));
        assert_eq!(y.discriminant(), &rat(144, 25));
        let z = q(int(4), int(9), 0);
        assert_eq!(z.v(), &int(0));
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-11/25").unwrap(), rat(-11, 25));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        for bad in ["", "1/0", "abc", "1.2.3", "-", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
        assert_eq!(rat(-13, 27).to_string(), "-13/27");
        assert_eq!(int(37).to_string(), "37");
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    #[test]
    fn quad_ext_json_shape() {
        let x = q(rat(1, 2), int(-3), 5);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v["u"], "1/2");
        assert_eq!(v["v"], "-3");
        assert_eq!(v["D"], "5");
        assert!((v["approx"].as_f64().unwrap() - (0.5 - 3.0 * 5f64.sqrt())).abs() < 1e-12);
        let back: QuadExt = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn determinants() {
        let m = vec![
            vec![int(2), int(0), int(1)],
            vec![int(1), int(3), int(2)],
            vec![int(1), int(1), int(1)],
        ];
        let d3 = det3([[&m[0][0], &m[0][1], &m[0][2]], [&m[1][0], &m[1][1], &m[1][2]], [&m[2][0], &m[2][1], &m[2][2]]]);
        assert_eq!(d3, det_rational(m));
        assert_eq!(d3, int(0));
        let id = vec![
            vec![int(0), int(1)],
            vec![int(1), int(0)],
        ];
        assert_eq!(det_rational(id), int(-1));
    }

    #[test]
    fn float_policy() {
        let p = FloatPolicy::default();
        assert!(p.close(1.0, 1.0 + 1e-12));
        assert!(!p.close(1.0, 1.001));
        assert!(FloatPolicy::new(0.0, 1.0).is_err());
    }
}
