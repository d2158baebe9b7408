//! The six points `A′, A″, B′, B″, C′, C″` of a triangle and a triplet.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::numerics::{int, rational_strings, QuadExt, Rational};
use crate::predicates::bary_dist_sq;
use crate::triangle::{Apex, BaryPoint, CartPoint, CartesianEmbedding, Triangle, TriangleSummary};

/// The parameter triple `(α; β; γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triplet {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl Triplet {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Triplet { alpha, beta, gamma }
    }

    pub fn uniform(k: Rational) -> Self {
        Triplet::new(k.clone(), k.clone(), k)
    }

    /// `(1, 1, 1)`.
    pub fn conway() -> Self {
        Self::uniform(Rational::one())
    }

    /// `(−1, −1, −1)`.
    pub fn anti_conway() -> Self {
        Self::uniform(int(-1))
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    pub fn to_strings(&self) -> Vec<String> {
        rational_strings(self.components())
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.alpha, self.beta, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointLabel {
    APrime,
    ADouble,
    BPrime,
    BDouble,
    CPrime,
    CDouble,
}

impl PointLabel {
    pub const ALL: [PointLabel; 6] = [
        PointLabel::APrime,
        PointLabel::ADouble,
        PointLabel::BPrime,
        PointLabel::BDouble,
        PointLabel::CPrime,
        PointLabel::CDouble,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// ASCII name used as a JSON key: `A'`, `A''`, ...
    pub fn ascii(self) -> &'static str {
        match self {
            PointLabel::APrime => "A'",
            PointLabel::ADouble => "A''",
            PointLabel::BPrime => "B'",
            PointLabel::BDouble => "B''",
            PointLabel::CPrime => "C'",
            PointLabel::CDouble => "C''",
        }
    }

    /// Typographic name: `A′`, `A″`, ...
    pub fn pretty(self) -> &'static str {
        match self {
            PointLabel::APrime => "A′",
            PointLabel::ADouble => "A″",
            PointLabel::BPrime => "B′",
            PointLabel::BDouble => "B″",
            PointLabel::CPrime => "C′",
            PointLabel::CDouble => "C″",
        }
    }

    /// `(from, towards)`: the point is `from + k·(towards − from)`.
    pub fn anchors(self) -> (Apex, Apex) {
        match self {
            PointLabel::APrime => (Apex::A, Apex::B),
            PointLabel::ADouble => (Apex::A, Apex::C),
            PointLabel::BPrime => (Apex::B, Apex::C),
            PointLabel::BDouble => (Apex::B, Apex::A),
            PointLabel::CPrime => (Apex::C, Apex::A),
            PointLabel::CDouble => (Apex::C, Apex::B),
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.pretty())
    }
}

/// The six points of `(triangle, triplet)` in barycentric and Cartesian form.
///
/// Barycentric triples are kept unnormalized. Their coordinate sums are
/// `c, b, a, c, b, a` respectively, so every point is finite for every triplet.
#[derive(Debug, Clone)]
pub struct Configuration {
    triangle: Triangle,
    triplet: Triplet,
    embedding: CartesianEmbedding,
    bary: [BaryPoint; 6],
    cart: [CartPoint; 6],
}

/// Signed ratio `k` with `XX′ = k·XY` for each point, in label order.
pub fn vector_ratios(t: &Triangle, tr: &Triplet) -> [Rational; 6] {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (al, be, ga) = (&tr.alpha, &tr.beta, &tr.gamma);
    [
        -(al * a / c),
        -(al * a / b),
        -(be * b / a),
        -(be * b / c),
        -(ga * c / b),
        -(ga * c / a),
    ]
}

impl Configuration {
    pub fn new(triangle: &Triangle, triplet: &Triplet) -> Self {
        let (a, b, c) = (triangle.a(), triangle.b(), triangle.c());
        let (al, be, ga) = (&triplet.alpha, &triplet.beta, &triplet.gamma);
        let z = Rational::zero;
        let (aa, bb, cc) = (al * a, be * b, ga * c);
        let pt = |x, y, w| BaryPoint::new(x, y, w).expect("coordinate sum is a side length");
        let bary = [
            pt(c + &aa, -&aa, z()),
            pt(b + &aa, z(), -&aa),
            pt(z(), a + &bb, -&bb),
            pt(-&bb, c + &bb, z()),
            pt(-&cc, z(), b + &cc),
            pt(z(), -&cc, a + &cc),
        ];

        let embedding = triangle.embed();
        let ratios = vector_ratios(triangle, triplet);
        let cart = PointLabel::ALL.map(|label| {
            let (from, to) = label.anchors();
            let o = embedding.vertex(from);
            let dir = embedding.vertex(to).sub(o);
            o.add(&dir.scale(&ratios[label.index()]))
        });

        Configuration {
            triangle: triangle.clone(),
            triplet: triplet.clone(),
            embedding,
            bary,
            cart,
        }
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn triplet(&self) -> &Triplet {
        &self.triplet
    }

    pub fn embedding(&self) -> &CartesianEmbedding {
        &self.embedding
    }

    pub fn bary(&self, label: PointLabel) -> &BaryPoint {
        &self.bary[label.index()]
    }

    pub fn cart(&self, label: PointLabel) -> &CartPoint {
        &self.cart[label.index()]
    }

    pub fn bary_points(&self) -> &[BaryPoint; 6] {
        &self.bary
    }

    pub fn cart_points(&self) -> &[CartPoint; 6] {
        &self.cart
    }

    pub fn hexagon_metrics(&self) -> Result<HexagonMetrics> {
        use PointLabel::*;
        let t = &self.triangle;
        let d2 = |p: PointLabel, q: PointLabel| bary_dist_sq(t, self.bary(p), self.bary(q));
        let diag_main_sq = [
            d2(APrime, BDouble)?,
            d2(ADouble, CPrime)?,
            d2(BPrime, CDouble)?,
        ];
        let diag_pairs_sq = [
            (d2(APrime, CPrime)?, d2(ADouble, BDouble)?),
            (d2(APrime, BPrime)?, d2(BDouble, CDouble)?),
            (d2(BPrime, CPrime)?, d2(ADouble, CDouble)?),
        ];
        // Hexagon A′A″B′B″C′C″: opposite sides pair up as
        // (A′A″, B″C′), (A″B′, C′C″), (B′B″, C″A′).
        let side = |p: PointLabel, q: PointLabel| self.cart(q).sub(self.cart(p));
        let parallel = |u: CartPoint, v: CartPoint| u.cross(&v).is_zero();
        let opposite_sides_parallel = [
            parallel(side(APrime, ADouble), side(BDouble, CPrime)),
            parallel(side(ADouble, BPrime), side(CPrime, CDouble)),
            parallel(side(BPrime, BDouble), side(CDouble, APrime)),
        ];
        Ok(HexagonMetrics {
            diag_main_sq,
            diag_pairs_sq,
            opposite_sides_parallel,
        })
    }

    /// Signed ratio `XX′ / XY` measured back from the Cartesian points, used
    /// for orientation checks.
    pub fn signed_ratio(&self, label: PointLabel) -> QuadExt {
        let (from, to) = label.anchors();
        let o = self.embedding.vertex(from);
        let dir = self.embedding.vertex(to).sub(o);
        self.cart(label)
            .sub(o)
            .dot(&dir)
            .checked_div(&dir.dot(&dir))
            .expect("triangle sides have positive length")
    }

    pub fn to_json(&self) -> ConfigurationJson {
        let points = PointLabel::ALL
            .iter()
            .map(|&l| PointJson {
                label: l.ascii(),
                bary: self.bary(l).to_strings().expect("configuration points are finite"),
                cart: self.cart(l).to_f64(),
                exact: self.cart(l).clone(),
            })
            .collect();
        let e = &self.embedding;
        ConfigurationJson {
            triangle: TriangleSummary::from(&self.triangle),
            triplet: self.triplet.to_strings(),
            points,
            vertices: VerticesJson {
                a: e.a.clone(),
                b: e.b.clone(),
                c: e.c.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointJson {
    pub label: &'static str,
    pub bary: Vec<String>,
    pub cart: [f64; 2],
    pub exact: CartPoint,
}

#[derive(Debug, Clone, Serialize, serde::Deserialize)]
pub struct VerticesJson {
    #[serde(rename = "A")]
    pub a: CartPoint,
    #[serde(rename = "B")]
    pub b: CartPoint,
    #[serde(rename = "C")]
    pub c: CartPoint,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigurationJson {
    pub triangle: TriangleSummary,
    pub triplet: Vec<String>,
    pub points: Vec<PointJson>,
    pub vertices: VerticesJson,
}

/// Squared diagonals and side parallelism of the hexagon `A′A″B′B″C′C″`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexagonMetrics {
    /// `A′B″`, `A″C′`, `B′C″`.
    pub diag_main_sq: [Rational; 3],
    /// `(A′C′, A″B″)`, `(A′B′, B″C″)`, `(B′C′, A″C″)`.
    pub diag_pairs_sq: [(Rational, Rational); 3],
    pub opposite_sides_parallel: [bool; 3],
}

impl HexagonMetrics {
    pub fn diag_pairs_equal(&self) -> [bool; 3] {
        self.diag_pairs_sq.clone().map(|(x, y)| x == y)
    }
}

impl Serialize for HexagonMetrics {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            diag_main_sq: Vec<String>,
            diag_pairs_sq: Vec<[String; 2]>,
            diag_pairs_equal: [bool; 3],
            opposite_sides_parallel: [bool; 3],
        }
        Repr {
            diag_main_sq: rational_strings(&self.diag_main_sq),
            diag_pairs_sq: self
                .diag_pairs_sq
                .iter()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
            diag_pairs_equal: self.diag_pairs_equal(),
            opposite_sides_parallel: self.opposite_sides_parallel,
        }
        .serialize(s)
    }
}
