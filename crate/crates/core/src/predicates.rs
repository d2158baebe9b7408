//! Exact incidence predicates.
//!
//! Theorem-level checks use barycentric coordinates over the rationals. A
//! circle relative to the reference triangle is the conic
//!
//! ```text
//! a²yz + b²zx + c²xy + (x + y + z)(ux + vy + wz) = 0
//! ```
//!
//! and the squared distance between finite points with normalized
//! displacement `(dx, dy, dz)` (summing to zero) is
//! `−a²·dy·dz − b²·dz·dx − c²·dx·dy`.
//!
//! The Cartesian helpers at the bottom work over `ℚ(√D)` and exist as an
//! independent second route for the same verdicts.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::numerics::{det3, det_rational, rational_strings, QuadExt, Rational};
use crate::triangle::{cross3, BaryPoint, CartPoint, Triangle};

/// A line `lx + my + nz = 0`; projectively equal up to scale.
#[derive(Debug, Clone)]
pub struct BaryLine {
    l: Rational,
    m: Rational,
    n: Rational,
}

impl BaryLine {
    pub fn new(l: Rational, m: Rational, n: Rational) -> Result<Self> {
        if l.is_zero() && m.is_zero() && n.is_zero() {
            return Err(GeometryError::DegenerateBarycentric);
        }
        Ok(BaryLine { l, m, n })
    }

    pub fn coeffs(&self) -> [&Rational; 3] {
        [&self.l, &self.m, &self.n]
    }

    pub fn eval(&self, p: &BaryPoint) -> Rational {
        let [x, y, z] = p.coords();
        &self.l * x + &self.m * y + &self.n * z
    }

    pub fn contains(&self, p: &BaryPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Common point of two lines, or `None` when they coincide.
    pub fn meet(&self, other: &BaryLine) -> Option<BaryPoint> {
        let [x, y, z] = cross3(self.coeffs(), other.coeffs());
        BaryPoint::new(x, y, z).ok()
    }

    /// Same line with the first coefficient negated. Used to inject faults
    /// into the verification harness.
    #[doc(hidden)]
    pub fn with_first_sign_flipped(&self) -> BaryLine {
        BaryLine {
            l: -&self.l,
            m: self.m.clone(),
            n: self.n.clone(),
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        rational_strings(self.coeffs())
    }
}

impl PartialEq for BaryLine {
    fn eq(&self, other: &Self) -> bool {
        cross3(self.coeffs(), other.coeffs()).iter().all(Zero::is_zero)
    }
}

impl Eq for BaryLine {}

impl Serialize for BaryLine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

pub fn line_through(p: &BaryPoint, q: &BaryPoint) -> Result<BaryLine> {
    let [l, m, n] = p.cross(q);
    BaryLine::new(l, m, n).map_err(|_| GeometryError::IdenticalPoints)
}

fn det_points(p: &BaryPoint, q: &BaryPoint, r: &BaryPoint) -> Rational {
    det3([p.coords(), q.coords(), r.coords()])
}

pub fn collinear(p: &BaryPoint, q: &BaryPoint, r: &BaryPoint) -> bool {
    det_points(p, q, r).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Concurrency {
    Concurrent(BaryPoint),
    NotConcurrent,
    AllIdentical,
}

impl std::fmt::Display for Concurrency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Concurrency::Concurrent(p) => write!(f, "concurrent at {p}"),
            Concurrency::NotConcurrent => f.write_str("not concurrent"),
            Concurrency::AllIdentical => f.write_str("all three lines coincide"),
        }
    }
}

impl Serialize for Concurrency {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(1))?;
        match self {
            Concurrency::Concurrent(p) => {
                let coords = p.to_strings().map_err(serde::ser::Error::custom)?;
                m.serialize_entry("concurrent", &coords)?
            }
            Concurrency::NotConcurrent => m.serialize_entry("concurrent", &false)?,
            Concurrency::AllIdentical => m.serialize_entry("concurrent", "all_identical")?,
        }
        m.end()
    }
}

/// Decides whether three lines share a point. A common point at infinity
/// (parallel lines) is reported as [`GeometryError::ParallelLines`].
pub fn concurrent(l1: &BaryLine, l2: &BaryLine, l3: &BaryLine) -> Result<Concurrency> {
    let det = det3([l1.coeffs(), l2.coeffs(), l3.coeffs()]);
    if !det.is_zero() {
        return Ok(Concurrency::NotConcurrent);
    }
    let meet = l1.meet(l2).or_else(|| l1.meet(l3)).or_else(|| l2.meet(l3));
    match meet {
        None => Ok(Concurrency::AllIdentical),
        Some(p) if !p.is_finite() => Err(GeometryError::ParallelLines),
        Some(p) => Ok(Concurrency::Concurrent(p)),
    }
}

/// Dot product of two displacement vectors given by normalized barycentric
/// differences (each summing to zero).
pub fn displacement_dot(t: &Triangle, u: &[Rational; 3], v: &[Rational; 3]) -> Rational {
    let (a2, b2, c2) = (t.a() * t.a(), t.b() * t.b(), t.c() * t.c());
    let s = a2 * (&u[1] * &v[2] + &u[2] * &v[1])
        + b2 * (&u[2] * &v[0] + &u[0] * &v[2])
        + c2 * (&u[0] * &v[1] + &u[1] * &v[0]);
    -s / crate::numerics::int(2)
}

fn displacement(p: &BaryPoint, q: &BaryPoint) -> Result<[Rational; 3]> {
    let (p, q) = (p.normalized()?, q.normalized()?);
    Ok([&q[0] - &p[0], &q[1] - &p[1], &q[2] - &p[2]])
}

/// Squared distance between two finite points.
pub fn bary_dist_sq(t: &Triangle, p: &BaryPoint, q: &BaryPoint) -> Result<Rational> {
    let d = displacement(p, q)?;
    Ok(displacement_dot(t, &d, &d))
}

/// A circle `a²yz + b²zx + c²xy + (x+y+z)(ux+vy+wz) = 0` of a fixed triangle.
/// The circumcircle is `u = v = w = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaryCircle {
    pub u: Rational,
    pub v: Rational,
    pub w: Rational,
}

impl BaryCircle {
    pub fn circumcircle() -> Self {
        BaryCircle {
            u: Rational::zero(),
            v: Rational::zero(),
            w: Rational::zero(),
        }
    }

    /// The circle form at the homogeneous coordinates of `p` as given.
    pub fn evaluate(&self, t: &Triangle, p: &BaryPoint) -> Rational {
        let [x, y, z] = p.coords();
        circle_quadratic(t, x, y, z) + p.sum() * (&self.u * x + &self.v * y + &self.w * z)
    }

    pub fn contains(&self, t: &Triangle, p: &BaryPoint) -> bool {
        self.evaluate(t, p).is_zero()
    }

    pub fn to_strings(&self) -> Vec<String> {
        rational_strings([&self.u, &self.v, &self.w])
    }
}

impl Serialize for BaryCircle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

fn circle_quadratic(t: &Triangle, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    t.a() * t.a() * y * z + t.b() * t.b() * z * x + t.c() * t.c() * x * y
}

fn ensure_distinct(pts: &[&BaryPoint]) -> Result<()> {
    for (i, p) in pts.iter().enumerate() {
        if !p.is_finite() {
            return Err(GeometryError::PointAtInfinity);
        }
        if pts[..i].iter().any(|q| *q == *p) {
            return Err(GeometryError::DuplicatePoint(i));
        }
    }
    Ok(())
}

/// Whether four distinct finite points lie on one circle. Four collinear
/// points are reported as not concyclic.
pub fn concyclic(t: &Triangle, pts: [&BaryPoint; 4]) -> Result<bool> {
    ensure_distinct(&pts)?;
    let rows = pts
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            let s = p.sum();
            vec![circle_quadratic(t, x, y, z), x * &s, y * &s, z * &s]
        })
        .collect();
    if !det_rational(rows).is_zero() {
        return Ok(false);
    }
    Ok(!(collinear(pts[0], pts[1], pts[2]) && collinear(pts[0], pts[1], pts[3])))
}

/// Like [`concyclic`] but tolerates repeated points: a set with at most three
/// distinct points is concyclic unless three of them are collinear.
pub fn concyclic_allowing_repeats(t: &Triangle, pts: [&BaryPoint; 4]) -> Result<bool> {
    let mut distinct: Vec<&BaryPoint> = Vec::with_capacity(4);
    for p in pts {
        if !p.is_finite() {
            return Err(GeometryError::PointAtInfinity);
        }
        if !distinct.iter().any(|q| *q == p) {
            distinct.push(p);
        }
    }
    match distinct.as_slice() {
        [p, q, r, s] => concyclic(t, [p, q, r, s]),
        [p, q, r] => Ok(!collinear(p, q, r)),
        _ => Ok(true),
    }
}

/// The circle through three distinct, non-collinear, finite points.
pub fn circle_through(t: &Triangle, p1: &BaryPoint, p2: &BaryPoint, p3: &BaryPoint) -> Result<BaryCircle> {
    ensure_distinct(&[p1, p2, p3])?;
    let n = [p1.normalized()?, p2.normalized()?, p3.normalized()?];
    let rows: [[&Rational; 3]; 3] = [
        [&n[0][0], &n[0][1], &n[0][2]],
        [&n[1][0], &n[1][1], &n[1][2]],
        [&n[2][0], &n[2][1], &n[2][2]],
    ];
    let det = det3(rows);
    if det.is_zero() {
        return Err(GeometryError::CollinearPoints);
    }
    // u·x + v·y + w·z = −(a²yz + b²zx + c²xy) at each normalized point
    let rhs: Vec<Rational> = n
        .iter()
        .map(|[x, y, z]| -circle_quadratic(t, x, y, z))
        .collect();
    let solve = |col: usize| {
        let pick = |r: usize, k: usize| if k == col { &rhs[r] } else { rows[r][k] };
        det3([
            [pick(0, 0), pick(0, 1), pick(0, 2)],
            [pick(1, 0), pick(1, 1), pick(1, 2)],
            [pick(2, 0), pick(2, 1), pick(2, 2)],
        ]) / &det
    };
    Ok(BaryCircle {
        u: solve(0),
        v: solve(1),
        w: solve(2),
    })
}

/// Power of a finite point: `|PO|² − R²` for the circle with center `O` and
/// radius `R`, equal to minus the circle form at normalized `P`.
pub fn power_of_point(t: &Triangle, p: &BaryPoint, circle: &BaryCircle) -> Result<Rational> {
    let [x, y, z] = p.normalized()?;
    let np = BaryPoint::new(x, y, z)?;
    Ok(-circle.evaluate(t, &np))
}

/// Signed products `PD·PE` and `PM·PN` for `P, D, E` and `P, M, N` collinear.
pub fn feuerbach_products(
    t: &Triangle,
    p: &BaryPoint,
    d: &BaryPoint,
    e: &BaryPoint,
    m: &BaryPoint,
    n: &BaryPoint,
) -> Result<(Rational, Rational)> {
    if !collinear(p, d, e) {
        return Err(GeometryError::PreconditionViolated("P, D, E are not collinear".into()));
    }
    if !collinear(p, m, n) {
        return Err(GeometryError::PreconditionViolated("P, M, N are not collinear".into()));
    }
    let (pd, pe) = (displacement(p, d)?, displacement(p, e)?);
    let (pm, pn) = (displacement(p, m)?, displacement(p, n)?);
    Ok((displacement_dot(t, &pd, &pe), displacement_dot(t, &pm, &pn)))
}

/// With `(DE)` and `(MN)` meeting at `P`, the four points `D, E, M, N` are
/// concyclic exactly when `PD·PE = PM·PN` as signed dot products.
pub fn feuerbach_check(
    t: &Triangle,
    p: &BaryPoint,
    d: &BaryPoint,
    e: &BaryPoint,
    m: &BaryPoint,
    n: &BaryPoint,
) -> Result<bool> {
    let (lhs, rhs) = feuerbach_products(t, p, d, e, m, n)?;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equidistance {
    CommonSq(Rational),
    /// Index of the first point whose squared distance differs from the
    /// first point's.
    Unequal(usize),
}

impl Equidistance {
    pub fn common_sq(&self) -> Option<&Rational> {
        match self {
            Equidistance::CommonSq(q) => Some(q),
            Equidistance::Unequal(_) => None,
        }
    }
}

pub fn equidistant_from(t: &Triangle, center: &BaryPoint, pts: &[&BaryPoint]) -> Result<Equidistance> {
    let mut common: Option<Rational> = None;
    for (i, p) in pts.iter().enumerate() {
        let d = bary_dist_sq(t, center, p)?;
        match &common {
            None => common = Some(d),
            Some(c) if *c != d => return Ok(Equidistance::Unequal(i)),
            Some(_) => {}
        }
    }
    Ok(Equidistance::CommonSq(common.unwrap_or_else(Rational::zero)))
}

/// A circle in the Cartesian embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartCircle {
    pub center: CartPoint,
    pub radius_sq: QuadExt,
}

impl CartCircle {
    pub fn contains(&self, p: &CartPoint) -> bool {
        p.dist_sq(&self.center) == self.radius_sq
    }

    pub fn power(&self, p: &CartPoint) -> QuadExt {
        &p.dist_sq(&self.center) - &self.radius_sq
    }
}

pub fn cart_collinear(p: &CartPoint, q: &CartPoint, r: &CartPoint) -> bool {
    q.sub(p).cross(&r.sub(p)).is_zero()
}

/// Cartesian concyclicity: the determinant `|x  y  x²+y²  1|` reduced by the
/// fourth row, evaluated in `ℚ(√D)`. Four collinear points are not concyclic.
pub fn cart_concyclic(pts: [&CartPoint; 4]) -> bool {
    let rel: Vec<[QuadExt; 3]> = pts[..3]
        .iter()
        .map(|p| {
            let d = p.sub(pts[3]);
            let n = d.dot(&d);
            [d.x, d.y, n]
        })
        .collect();
    let det = det3([
        [&rel[0][0], &rel[0][1], &rel[0][2]],
        [&rel[1][0], &rel[1][1], &rel[1][2]],
        [&rel[2][0], &rel[2][1], &rel[2][2]],
    ]);
    det.is_zero() && !(cart_collinear(pts[0], pts[1], pts[2]) && cart_collinear(pts[0], pts[1], pts[3]))
}
