//! Triangles given by rational side lengths `a = BC`, `b = CA`, `c = AB`,
//! homogeneous barycentric points, and the canonical Cartesian placement.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::numerics::{int, rational_sqrt, rational_strings, to_f64, QuadExt, Rational};

/// A vertex of the reference triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Apex {
    A,
    B,
    C,
}

impl fmt::Display for Apex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Apex::A => "A",
            Apex::B => "B",
            Apex::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    Scalene,
    IsoscelesApexA,
    IsoscelesApexB,
    IsoscelesApexC,
    Equilateral,
}

impl Shape {
    /// Whether the triangle is isosceles with apex `apex`. Equilateral
    /// triangles count as isosceles at every apex.
    pub fn isosceles_at(self, apex: Apex) -> bool {
        matches!(
            (self, apex),
            (Shape::Equilateral, _)
                | (Shape::IsoscelesApexA, Apex::A)
                | (Shape::IsoscelesApexB, Apex::B)
                | (Shape::IsoscelesApexC, Apex::C)
        )
    }
}

/// A homogeneous barycentric point `(x : y : z)` relative to `A, B, C`.
///
/// Equality is projective: two triples are equal when one is a nonzero
/// multiple of the other.
#[derive(Debug, Clone)]
pub struct BaryPoint {
    x: Rational,
    y: Rational,
    z: Rational,
}

impl BaryPoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Result<Self> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(GeometryError::DegenerateBarycentric);
        }
        Ok(BaryPoint { x, y, z })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(int(x), int(y), int(z))
    }

    pub fn vertex(apex: Apex) -> Self {
        let (o, z) = (Rational::one(), Rational::zero());
        match apex {
            Apex::A => BaryPoint { x: o, y: z.clone(), z },
            Apex::B => BaryPoint { x: z.clone(), y: o, z },
            Apex::C => BaryPoint { x: z.clone(), y: z, z: o },
        }
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn sum(&self) -> Rational {
        &self.x + &self.y + &self.z
    }

    pub fn is_finite(&self) -> bool {
        !self.sum().is_zero()
    }

    /// Coordinates scaled to sum 1.
    pub fn normalized(&self) -> Result<[Rational; 3]> {
        let s = self.sum();
        if s.is_zero() {
            return Err(GeometryError::PointAtInfinity);
        }
        Ok([&self.x / &s, &self.y / &s, &self.z / &s])
    }

    /// Homogeneous cross product; zero exactly when the points coincide.
    pub(crate) fn cross(&self, other: &BaryPoint) -> [Rational; 3] {
        cross3(self.coords(), other.coords())
    }

    /// Normalized coordinates as strings, the serialized form of a point.
    pub fn to_strings(&self) -> Result<Vec<String>> {
        Ok(rational_strings(&self.normalized()?))
    }
}

pub(crate) fn cross3(p: [&Rational; 3], q: [&Rational; 3]) -> [Rational; 3] {
    [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ]
}

impl PartialEq for BaryPoint {
    fn eq(&self, other: &Self) -> bool {
        self.cross(other).iter().all(Zero::is_zero)
    }
}

impl Eq for BaryPoint {}

impl BaryPoint {
    /// Coprime integer representative, with positive coordinate sum (or, at
    /// infinity, positive first nonzero coordinate).
    pub fn primitive(&self) -> [BigInt; 3] {
        let c = self.coords();
        let l = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut n = c.map(|q| (q * Rational::from(l.clone())).to_integer());
        let g = n.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for v in n.iter_mut() {
            *v /= &g;
        }
        let s: BigInt = n.iter().sum();
        let flip = if s.is_zero() {
            n.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative())
        } else {
            s.is_negative()
        };
        if flip {
            n = n.map(|v| -v);
        }
        n
    }
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.primitive();
        write!(f, "({x} : {y} : {z})")
    }
}

/// A point of the plane in the canonical embedding, with coordinates in ℚ(√D).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CartPoint {
    pub x: QuadExt,
    pub y: QuadExt,
}

impl CartPoint {
    pub fn new(x: QuadExt, y: QuadExt) -> Self {
        CartPoint { x, y }
    }

    pub fn sub(&self, o: &CartPoint) -> CartPoint {
        CartPoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &CartPoint) -> CartPoint {
        CartPoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, k: &Rational) -> CartPoint {
        CartPoint::new(self.x.scale(k), self.y.scale(k))
    }

    pub fn dot(&self, o: &CartPoint) -> QuadExt {
        &(&self.x * &o.x) + &(&self.y * &o.y)
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, o: &CartPoint) -> QuadExt {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }

    pub fn dist_sq(&self, o: &CartPoint) -> QuadExt {
        let d = self.sub(o);
        d.dot(&d)
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }
}

/// `A = (0,0)`, `B = (c,0)`, `C` above the x-axis; all coordinates live in
/// ℚ(√D) with `D = 16·area² / (4c²)` so that `y_C = √D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianEmbedding {
    pub a: CartPoint,
    pub b: CartPoint,
    pub c: CartPoint,
    pub d: Rational,
}

impl CartesianEmbedding {
    pub fn vertex(&self, apex: Apex) -> &CartPoint {
        match apex {
            Apex::A => &self.a,
            Apex::B => &self.b,
            Apex::C => &self.c,
        }
    }

    pub fn rational(&self, q: Rational) -> QuadExt {
        QuadExt::from_rational(q, &self.d)
    }

    /// Image of a finite barycentric point.
    pub fn to_cartesian(&self, p: &BaryPoint) -> Result<CartPoint> {
        let [x, y, z] = p.normalized()?;
        Ok(self.a.scale(&x).add(&self.b.scale(&y)).add(&self.c.scale(&z)))
    }
}

/// A nondegenerate triangle with rational sides and its exact derived metrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    a: Rational,
    b: Rational,
    c: Rational,
    p: Rational,
    area_sq16: Rational,
    r_sq: Rational,
}

impl Triangle {
    pub fn from_sides(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(GeometryError::NonPositiveSide);
        }
        if a >= &b + &c || b >= &a + &c || c >= &a + &b {
            return Err(GeometryError::TriangleInequalityViolated(
                a.to_string(),
                b.to_string(),
                c.to_string(),
            ));
        }
        let p = (&a + &b + &c) / int(2);
        let (pa, pb, pc) = (&p - &a, &p - &b, &p - &c);
        let prod = &pa * &pb * &pc;
        let area_sq16 = int(16) * &p * &prod;
        let r_sq = prod / &p;
        Ok(Triangle {
            a,
            b,
            c,
            p,
            area_sq16,
            r_sq,
        })
    }

    pub fn from_int_sides(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_sides(int(a), int(b), int(c))
    }

    /// Builds the triangle from exact vertex coordinates. Each squared side
    /// must be rational with a rational square root.
    pub fn from_vertices(a: &CartPoint, b: &CartPoint, c: &CartPoint) -> Result<Self> {
        let side = |p: &CartPoint, q: &CartPoint| -> Result<Rational> {
            let sq = p.dist_sq(q);
            let r = sq
                .as_rational()
                .and_then(rational_sqrt)
                .ok_or_else(|| GeometryError::IrrationalSide(sq.to_string()))?;
            Ok(r)
        };
        Self::from_sides(side(b, c)?, side(a, c)?, side(a, b)?)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn c(&self) -> &Rational {
        &self.c
    }
    /// Semiperimeter.
    pub fn p(&self) -> &Rational {
        &self.p
    }
    /// `16·area²` by Heron.
    pub fn area_sq16(&self) -> &Rational {
        &self.area_sq16
    }
    /// Inradius squared, `(p−a)(p−b)(p−c)/p`.
    pub fn r_sq(&self) -> &Rational {
        &self.r_sq
    }

    pub fn sides(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn side_strings(&self) -> Vec<String> {
        rational_strings(self.sides())
    }

    pub fn shape(&self) -> Shape {
        let (ab, bc, ca) = (self.a == self.b, self.b == self.c, self.c == self.a);
        match (ab, bc, ca) {
            (true, true, _) => Shape::Equilateral,
            (true, _, _) => Shape::IsoscelesApexC,
            (_, true, _) => Shape::IsoscelesApexA,
            (_, _, true) => Shape::IsoscelesApexB,
            _ => Shape::Scalene,
        }
    }

    pub fn is_scalene(&self) -> bool {
        self.shape() == Shape::Scalene
    }

    pub fn embed(&self) -> CartesianEmbedding {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let xc = (b * b + c * c - a * a) / (int(2) * c);
        let d = &self.area_sq16 / (int(4) * c * c);
        let q = |v: Rational| QuadExt::from_rational(v, &d);
        let yc = QuadExt::sqrt_of(&d).expect("area is positive");
        CartesianEmbedding {
            a: CartPoint::new(q(Rational::zero()), q(Rational::zero())),
            b: CartPoint::new(q(c.clone()), q(Rational::zero())),
            c: CartPoint::new(q(xc), yc),
            d,
        }
    }

    /// Incenter `(a : b : c)`.
    pub fn incenter(&self) -> BaryPoint {
        BaryPoint {
            x: self.a.clone(),
            y: self.b.clone(),
            z: self.c.clone(),
        }
    }

    /// Nagel point `(−a+b+c : a−b+c : a+b−c)`.
    pub fn nagel(&self) -> BaryPoint {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        BaryPoint {
            x: b + c - a,
            y: a + c - b,
            z: a + b - c,
        }
    }

    /// Incircle contact points `(U, V, W)` on `AB`, `BC`, `CA`, placed by
    /// `AU = p−a`, `BV = p−b`, `CW = p−c`.
    pub fn contact_points(&self) -> [BaryPoint; 3] {
        let (pa, pb, pc) = (&self.p - &self.a, &self.p - &self.b, &self.p - &self.c);
        let z = Rational::zero;
        [
            BaryPoint { x: pb.clone(), y: pa.clone(), z: z() },
            BaryPoint { x: z(), y: pc.clone(), z: pb },
            BaryPoint { x: pc, y: z(), z: pa },
        ]
    }

    pub fn approx_sides(&self) -> [f64; 3] {
        [to_f64(&self.a), to_f64(&self.b), to_f64(&self.c)]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// JSON summary of a triangle.
#[derive(Debug, Clone, Serialize)]
pub struct TriangleSummary {
    pub sides: Vec<String>,
    pub p: String,
    pub area_sq16: String,
    pub r_sq: String,
    pub shape: Shape,
    pub incenter: Vec<String>,
    pub nagel: Vec<String>,
}

impl From<&Triangle> for TriangleSummary {
    fn from(t: &Triangle) -> Self {
        TriangleSummary {
            sides: t.side_strings(),
            p: t.p.to_string(),
            area_sq16: t.area_sq16.to_string(),
            r_sq: t.r_sq.to_string(),
            shape: t.shape(),
            incenter: t.incenter().to_strings().expect("incenter is finite"),
            nagel: t.nagel().to_strings().expect("Nagel point is finite"),
        }
    }
}
