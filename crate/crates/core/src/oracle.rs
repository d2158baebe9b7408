//! Randomized instances and independent re-derivation of every theorem.
//!
//! Triangles have rational sides `n/q` with `q ≤ denominator_bound` and
//! `min ≤ n/q ≤ max`. Randomness comes from ChaCha8 (`rand_chacha`): trial
//! `i` of a suite seeded with `s` uses `ChaCha8Rng::seed_from_u64(s)` on
//! stream `i`, so a report depends only on `(seed, spec, checks)` and not on
//! thread scheduling.
//!
//! The cross-checks avoid the barycentric machinery where possible: circles
//! are fitted through perpendicular bisectors in `ℚ(√D)`, lines are
//! intersected in Cartesian coordinates, the (Σ) system is solved by
//! elimination of α and β, and radii and powers are re-evaluated in `f64`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configuration::{Configuration, PointLabel, Triplet};
use crate::error::{GeometryError, Result};
use crate::numerics::{int, rational_sqrt, to_f64, FloatPolicy, QuadExt, Rational};
use crate::predicates::{
    cart_collinear, cart_concyclic, concurrent, concyclic, equidistant_from, feuerbach_check, line_through,
    CartCircle, Concurrency,
};
use crate::theorems::{
    self, CongruenceResult, Membership, ANTI_CONWAY_QUADRUPLES,
};
use crate::triangle::{Apex, BaryPoint, CartPoint, CartesianEmbedding, Shape, Triangle};

const MAX_REJECTIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeFilter {
    Any,
    Scalene,
    /// Exactly two equal sides.
    Isosceles,
    Equilateral,
}

impl FromStr for ShapeFilter {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(ShapeFilter::Any),
            "scalene" => Ok(ShapeFilter::Scalene),
            "isosceles" => Ok(ShapeFilter::Isosceles),
            "equilateral" => Ok(ShapeFilter::Equilateral),
            other => Err(GeometryError::InvalidSampleSpec(format!("unknown shape filter {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: usize,
    pub side_range: (u64, u64),
    pub denominator_bound: u64,
    pub shape_filter: ShapeFilter,
    pub avoid_exclusions: bool,
}

impl SampleSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        SampleSpec {
            seed,
            count,
            side_range: (1, 20),
            denominator_bound: 8,
            shape_filter: ShapeFilter::Any,
            avoid_exclusions: false,
        }
    }

    pub fn with_shape(mut self, shape_filter: ShapeFilter) -> Self {
        self.shape_filter = shape_filter;
        self
    }

    pub fn with_side_range(mut self, min: u64, max: u64) -> Self {
        self.side_range = (min, max);
        self
    }

    pub fn with_denominator_bound(mut self, q: u64) -> Self {
        self.denominator_bound = q;
        self
    }

    pub fn avoiding_exclusions(mut self, yes: bool) -> Self {
        self.avoid_exclusions = yes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (min, max) = self.side_range;
        let bad = |m: &str| Err(GeometryError::InvalidSampleSpec(m.to_string()));
        if min < 1 {
            return bad("side_range min must be at least 1");
        }
        if max < min {
            return bad("side_range max is below min");
        }
        if self.count < 1 {
            return bad("count must be at least 1");
        }
        if self.denominator_bound < 1 {
            return bad("denominator_bound must be at least 1");
        }
        // keeps n = max·q within i64
        if max.checked_mul(self.denominator_bound).is_none_or(|v| v > i64::MAX as u64) {
            return bad("side_range max times denominator_bound overflows");
        }
        Ok(())
    }

    /// Generator for trial `index`.
    pub fn trial_rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

fn random_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, qmax: u64) -> Rational {
    let q = rng.random_range(1..=qmax as i64);
    let n = rng.random_range(lo * q..=hi * q);
    Rational::new(n.into(), q.into())
}

fn random_side<R: Rng>(spec: &SampleSpec, rng: &mut R) -> Rational {
    let (min, max) = spec.side_range;
    random_rational(rng, min as i64, max as i64, spec.denominator_bound)
}

fn draw(spec: &SampleSpec, filter: ShapeFilter, rng: &mut impl Rng) -> Option<Triangle> {
    let (a, b, c) = match filter {
        ShapeFilter::Any | ShapeFilter::Scalene => (random_side(spec, rng), random_side(spec, rng), random_side(spec, rng)),
        ShapeFilter::Equilateral => {
            let s = random_side(spec, rng);
            (s.clone(), s.clone(), s)
        }
        ShapeFilter::Isosceles => {
            let apex = [Apex::A, Apex::B, Apex::C][rng.random_range(0..3)];
            let (leg, base) = (random_side(spec, rng), random_side(spec, rng));
            if leg == base {
                return None;
            }
            match apex {
                Apex::A => (base, leg.clone(), leg),
                Apex::B => (leg.clone(), base, leg),
                Apex::C => (leg.clone(), leg, base),
            }
        }
    };
    let t = Triangle::from_sides(a, b, c).ok()?;
    let shape_ok = match filter {
        ShapeFilter::Any => true,
        ShapeFilter::Scalene => t.is_scalene(),
        ShapeFilter::Isosceles => !matches!(t.shape(), Shape::Scalene | Shape::Equilateral),
        ShapeFilter::Equilateral => t.shape() == Shape::Equilateral,
    };
    let excluded = spec.avoid_exclusions && theorems::exclusion(&t).is_some();
    (shape_ok && !excluded).then_some(t)
}

/// Draws one triangle honoring the spec; rejection sampling with a bounded
/// number of attempts.
pub fn sample_triangle<R: Rng>(spec: &SampleSpec, rng: &mut R) -> Result<Triangle> {
    sample_shaped(spec, spec.shape_filter, rng)
}

fn sample_shaped<R: Rng>(spec: &SampleSpec, filter: ShapeFilter, rng: &mut R) -> Result<Triangle> {
    spec.validate()?;
    for _ in 0..MAX_REJECTIONS {
        if let Some(t) = draw(spec, filter, rng) {
            return Ok(t);
        }
    }
    Err(GeometryError::ExhaustedRejections(MAX_REJECTIONS))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircleFit {
    Circle(CartCircle),
    /// Index of the first point off the circle through the first three.
    NotConcyclic(usize),
}

/// Circle through the first three points from the intersection of two
/// perpendicular bisectors; the remaining points are tested by exact
/// squared distance.
pub fn brute_force_circle(points: &[CartPoint]) -> Result<CircleFit> {
    if points.len() < 3 {
        return Err(GeometryError::PreconditionViolated("at least three points are needed".into()));
    }
    let (p, q, r) = (&points[0], &points[1], &points[2]);
    // 2(q−p)·X = |q|²−|p|², 2(r−p)·X = |r|²−|p|²
    let (u, v) = (q.sub(p), r.sub(p));
    let two = int(2);
    let (a11, a12) = (u.x.scale(&two), u.y.scale(&two));
    let (a21, a22) = (v.x.scale(&two), v.y.scale(&two));
    let norm = |s: &CartPoint| -> Result<QuadExt> {
        s.x.checked_mul(&s.x)?.checked_add(&s.y.checked_mul(&s.y)?)
    };
    let np = norm(p)?;
    let r1 = norm(q)?.checked_sub(&np)?;
    let r2 = norm(r)?.checked_sub(&np)?;
    let det = a11.checked_mul(&a22)?.checked_sub(&a12.checked_mul(&a21)?)?;
    if det.is_zero() {
        return Err(GeometryError::CollinearSeed);
    }
    let x = r1.checked_mul(&a22)?.checked_sub(&a12.checked_mul(&r2)?)?.checked_div(&det)?;
    let y = a11.checked_mul(&r2)?.checked_sub(&r1.checked_mul(&a21)?)?.checked_div(&det)?;
    let center = CartPoint::new(x, y);
    let radius_sq = center.dist_sq(p);
    for (i, s) in points.iter().enumerate().skip(3) {
        if s.x.discriminant() != center.x.discriminant() {
            return Err(GeometryError::MismatchedDiscriminant(
                s.x.discriminant().to_string(),
                center.x.discriminant().to_string(),
            ));
        }
        if s.dist_sq(&center) != radius_sq {
            return Ok(CircleFit::NotConcyclic(i));
        }
    }
    Ok(CircleFit::Circle(CartCircle { center, radius_sq }))
}

/// Incenter `(aA + bB + cC) / 2p` from the embedded vertices.
pub fn cartesian_incenter(t: &Triangle, e: &CartesianEmbedding) -> CartPoint {
    let k = Rational::one() / (int(2) * t.p());
    e.a.scale(t.a()).add(&e.b.scale(t.b())).add(&e.c.scale(t.c())).scale(&k)
}

/// Nagel point `((p−a)A + (p−b)B + (p−c)C) / p` from the embedded vertices.
pub fn cartesian_nagel(t: &Triangle, e: &CartesianEmbedding) -> CartPoint {
    let p = t.p();
    e.a.scale(&(p - t.a()))
        .add(&e.b.scale(&(p - t.b())))
        .add(&e.c.scale(&(p - t.c())))
        .scale(&(Rational::one() / p))
}

/// Intersection of lines `(p1 p2)` and `(q1 q2)`; `None` when parallel.
pub fn cartesian_meet(p1: &CartPoint, p2: &CartPoint, q1: &CartPoint, q2: &CartPoint) -> Result<Option<CartPoint>> {
    let dp = p2.sub(p1);
    let dq = q2.sub(q1);
    let den = dp.cross(&dq);
    if den.is_zero() {
        return Ok(None);
    }
    let s = q1.sub(p1).cross(&dq).checked_div(&den)?;
    Ok(Some(CartPoint::new(&p1.x + &(&s * &dp.x), &p1.y + &(&s * &dp.y))))
}

/// Solutions of (Σ) found without the closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSolutions {
    /// Rational solutions, sorted.
    pub triplets: Vec<Triplet>,
    /// Some branch left a parameter free.
    pub degenerate: bool,
}

fn poly_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); x.len() + y.len() - 1];
    for (i, u) in x.iter().enumerate() {
        for (j, v) in y.iter().enumerate() {
            out[i + j] += u * v;
        }
    }
    out
}

fn poly_add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len().max(y.len());
    (0..n)
        .map(|i| x.get(i).cloned().unwrap_or_default() + y.get(i).cloned().unwrap_or_default())
        .collect()
}

fn poly_eval(x: &[Rational], g: &Rational) -> Rational {
    x.iter().rev().fold(Rational::zero(), |acc, c| acc * g + c)
}

/// Rational roots of a polynomial of degree at most two (ascending
/// coefficients); `None` when it vanishes identically.
fn rational_roots(poly: &[Rational]) -> Option<Vec<Rational>> {
    let get = |i: usize| poly.get(i).cloned().unwrap_or_default();
    let (c0, c1, c2) = (get(0), get(1), get(2));
    if c2.is_zero() {
        if c1.is_zero() {
            return if c0.is_zero() { None } else { Some(Vec::new()) };
        }
        return Some(vec![-c0 / c1]);
    }
    let disc = &c1 * &c1 - int(4) * &c2 * &c0;
    if disc.is_negative() {
        return Some(Vec::new());
    }
    let Some(s) = rational_sqrt(&disc) else {
        return Some(Vec::new());
    };
    let two_a = int(2) * &c2;
    Some(vec![(-&c1 - &s) / &two_a, (-&c1 + s) / two_a])
}

/// Solves (Σ) by writing α and β as functions of γ from the first and third
/// equations and clearing denominators in the second.
pub fn solve_sigma(t: &Triangle) -> SigmaSolutions {
    let (a, b, c, p) = (t.a().clone(), t.b().clone(), t.c().clone(), t.p().clone());
    // polynomials in γ, ascending
    let n_alpha = vec![&b - &p, -c.clone()];
    let n_beta = vec![&a - &p, -c.clone()];
    let d_alpha = vec![a.clone(), p.clone()];
    let d_beta = vec![b.clone(), p.clone()];
    let scale = |k: &Rational, x: &[Rational]| x.iter().map(|v| k * v).collect::<Vec<_>>();

    let mut cleared = scale(&a, &poly_mul(&n_alpha, &d_beta));
    cleared = poly_add(&cleared, &scale(&b, &poly_mul(&n_beta, &d_alpha)));
    cleared = poly_add(&cleared, &scale(&p, &poly_mul(&n_alpha, &n_beta)));
    cleared = poly_add(&cleared, &scale(&-(&c - &p), &poly_mul(&d_alpha, &d_beta)));

    let mut found = BTreeSet::new();
    let mut degenerate = false;
    match rational_roots(&cleared) {
        None => degenerate = true,
        Some(roots) => {
            for g in roots {
                let (da, db) = (poly_eval(&d_alpha, &g), poly_eval(&d_beta, &g));
                if da.is_zero() || db.is_zero() {
                    continue;
                }
                let alpha = poly_eval(&n_alpha, &g) / da;
                let beta = poly_eval(&n_beta, &g) / db;
                found.insert((alpha, beta, g));
            }
        }
    }
    // γ = −a/p or γ = −b/p leave α or β undetermined by their own equation
    for (num, den) in [(&n_alpha, &d_alpha), (&n_beta, &d_beta)] {
        let g = -(&den[0] / &den[1]);
        if poly_eval(num, &g).is_zero() {
            degenerate = true;
        }
    }
    SigmaSolutions {
        triplets: found.into_iter().map(|(x, y, z)| Triplet::new(x, y, z)).collect(),
        degenerate,
    }
}

/// Float image of the configuration computed straight from the side lengths.
struct FloatFigure {
    incenter: [f64; 2],
    nagel: [f64; 2],
    points: [[f64; 2]; 6],
    r_sq: f64,
}

impl FloatFigure {
    fn new(t: &Triangle, tr: &Triplet) -> Self {
        let [a, b, c] = t.approx_sides();
        let [al, be, ga] = tr.components().map(to_f64);
        let cx = (b * b + c * c - a * a) / (2.0 * c);
        let cy = (b * b - cx * cx).max(0.0).sqrt();
        let (pa, pb, pc) = ([0.0, 0.0], [c, 0.0], [cx, cy]);
        let along = |from: [f64; 2], to: [f64; 2], k: f64| [from[0] + k * (to[0] - from[0]), from[1] + k * (to[1] - from[1])];
        let p = (a + b + c) / 2.0;
        let comb = |wa: f64, wb: f64, wc: f64| {
            let s = wa + wb + wc;
            [(wa * pa[0] + wb * pb[0] + wc * pc[0]) / s, (wa * pa[1] + wb * pb[1] + wc * pc[1]) / s]
        };
        FloatFigure {
            incenter: comb(a, b, c),
            nagel: comb(p - a, p - b, p - c),
            points: [
                along(pa, pb, -al * a / c),
                along(pa, pc, -al * a / b),
                along(pb, pc, -be * b / a),
                along(pb, pa, -be * b / c),
                along(pc, pa, -ga * c / b),
                along(pc, pb, -ga * c / a),
            ],
            r_sq: (p - a) * (p - b) * (p - c) / p,
        }
    }
}

fn fdist_sq(p: [f64; 2], q: [f64; 2]) -> f64 {
    (p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)
}

fn fcircle(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> Option<([f64; 2], f64)> {
    let (ux, uy) = (q[0] - p[0], q[1] - p[1]);
    let (vx, vy) = (r[0] - p[0], r[1] - p[1]);
    let det = 2.0 * (ux * vy - uy * vx);
    if det == 0.0 {
        return None;
    }
    let (nu, nv) = (ux * ux + uy * uy, vx * vx + vy * vy);
    let cx = (nu * vy - uy * nv) / det;
    let cy = (ux * nv - nu * vx) / det;
    let center = [p[0] + cx, p[1] + cy];
    Some((center, cx * cx + cy * cy))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Conway,
    Hexagon,
    Family,
    Necessity,
    Isosceles,
    Dussau,
    AntiConway,
    Congruence,
    Predicates,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Conway,
        Check::Hexagon,
        Check::Family,
        Check::Necessity,
        Check::Isosceles,
        Check::Dussau,
        Check::AntiConway,
        Check::Congruence,
        Check::Predicates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Conway => "conway",
            Check::Hexagon => "hexagon",
            Check::Family => "family",
            Check::Necessity => "necessity",
            Check::Isosceles => "isosceles",
            Check::Dussau => "dussau",
            Check::AntiConway => "anti_conway",
            Check::Congruence => "congruence",
            Check::Predicates => "predicates",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(GeometryError::InvalidSampleSpec("no checks selected".into()));
        }
        Ok(out.into_iter().collect())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s || (s == "anti-conway" && *c == Check::AntiConway))
            .ok_or_else(|| GeometryError::InvalidSampleSpec(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub triangle: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triplet: Option<Vec<String>>,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<Check>,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Deliberate defects for testing that the suite notices broken formulas.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Negates the first coefficient of the `(A′C″)` line.
    FlipLineSign,
}

pub fn run_suite(spec: &SampleSpec, checks: &[Check]) -> Result<Report> {
    run_suite_with(spec, checks, Fault::None)
}

#[doc(hidden)]
pub fn run_suite_with(spec: &SampleSpec, checks: &[Check], fault: Fault) -> Result<Report> {
    spec.validate()?;
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let per_trial: Vec<Vec<Failure>> = (0..spec.count)
        .into_par_iter()
        .map(|i| Trial::run(spec, &checks, fault, i))
        .collect();
    Ok(Report {
        seed: spec.seed,
        trials: spec.count,
        checks,
        failures: per_trial.into_iter().flatten().collect(),
    })
}

struct Trial<'a> {
    spec: &'a SampleSpec,
    index: usize,
    rng: ChaCha8Rng,
    failures: Vec<Failure>,
    policy: FloatPolicy,
    fault: Fault,
}

impl<'a> Trial<'a> {
    fn run(spec: &'a SampleSpec, checks: &[Check], fault: Fault, index: usize) -> Vec<Failure> {
        let mut trial = Trial {
            spec,
            index,
            rng: spec.trial_rng(index),
            failures: Vec::new(),
            policy: FloatPolicy::default(),
            fault,
        };
        let t = match sample_triangle(spec, &mut trial.rng) {
            Ok(t) => t,
            Err(e) => {
                trial.failures.push(Failure {
                    trial: index,
                    triangle: Vec::new(),
                    triplet: None,
                    check: "sample".into(),
                    expected: "a triangle".into(),
                    actual: e.to_string(),
                });
                return trial.failures;
            }
        };
        for &check in checks {
            trial.dispatch(check, &t);
        }
        trial.failures
    }

    fn fail(&mut self, t: &Triangle, tr: Option<&Triplet>, check: &str, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure {
            trial: self.index,
            triangle: t.side_strings(),
            triplet: tr.map(Triplet::to_strings),
            check: check.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn expect(&mut self, ok: bool, t: &Triangle, tr: Option<&Triplet>, check: &str, expected: impl ToString, actual: impl FnOnce() -> String) {
        if !ok {
            let a = actual();
            self.fail(t, tr, check, expected, a);
        }
    }

    fn float_close(&mut self, t: &Triangle, tr: Option<&Triplet>, check: &str, exact: &Rational, approx: f64) {
        let e = to_f64(exact);
        if e.abs() <= 1e6 && !self.policy.close(e, approx) {
            self.fail(t, tr, check, e, approx);
        }
    }

    /// The trial triangle if it already has the shape, else a fresh draw.
    fn shaped(&mut self, t: &Triangle, filter: ShapeFilter) -> Result<Triangle> {
        let fits = match filter {
            ShapeFilter::Scalene => t.is_scalene(),
            ShapeFilter::Isosceles => !matches!(t.shape(), Shape::Scalene),
            _ => true,
        };
        if fits {
            Ok(t.clone())
        } else {
            sample_shaped(self.spec, filter, &mut self.rng)
        }
    }

    fn dispatch(&mut self, check: Check, t: &Triangle) {
        let needs = match check {
            Check::Necessity | Check::Dussau | Check::AntiConway | Check::Congruence => ShapeFilter::Scalene,
            Check::Isosceles => ShapeFilter::Isosceles,
            _ => ShapeFilter::Any,
        };
        let t = match self.shaped(t, needs) {
            Ok(t) => t,
            Err(e) => return self.fail(t, None, check.name(), "a suitably shaped triangle", e),
        };
        let outcome = match check {
            Check::Conway => self.conway(&t),
            Check::Hexagon => self.hexagon(&t),
            Check::Family => self.family(&t),
            Check::Necessity => self.necessity(&t),
            Check::Isosceles => self.isosceles(&t),
            Check::Dussau => self.dussau(&t),
            Check::AntiConway => self.anti_conway(&t),
            Check::Congruence => self.congruence(&t),
            Check::Predicates => self.predicates(&t),
        };
        if let Err(e) = outcome {
            self.fail(&t, None, check.name(), "no error", format!("{}: {e}", e.name()));
        }
    }

    /// Circle fitted through the distinct Cartesian points must be centered
    /// at the Cartesian incenter with the given squared radius.
    fn incenter_fit(&mut self, cfg: &Configuration, radius_sq: &Rational, check: &str) -> Result<()> {
        let t = cfg.triangle();
        let mut distinct: Vec<CartPoint> = Vec::new();
        for p in cfg.cart_points() {
            if !distinct.contains(p) {
                distinct.push(p.clone());
            }
        }
        let omega = cartesian_incenter(t, cfg.embedding());
        let want = cfg.embedding().rational(radius_sq.clone());
        if distinct.len() < 3 {
            let ok = distinct.iter().all(|p| p.dist_sq(&omega) == want);
            self.expect(ok, t, Some(cfg.triplet()), check, format!("distance² {radius_sq} from incenter"), || {
                "different distances".to_string()
            });
            return Ok(());
        }
        match brute_force_circle(&distinct)? {
            CircleFit::Circle(c) => {
                let ok = c.center == omega && c.radius_sq == want;
                self.expect(ok, t, Some(cfg.triplet()), check, format!("circle about incenter, r² = {radius_sq}"), || {
                    format!("center {:?}, r² = {}", c.center.to_f64(), c.radius_sq)
                });
            }
            CircleFit::NotConcyclic(i) => {
                self.fail(t, Some(cfg.triplet()), check, "concyclic", format!("point {i} off the fitted circle"))
            }
        }
        let ff = FloatFigure::new(t, cfg.triplet());
        let approx = fdist_sq(ff.incenter, ff.points[0]);
        self.float_close(t, Some(cfg.triplet()), &format!("{check}/float"), radius_sq, approx);
        Ok(())
    }

    fn conway(&mut self, t: &Triangle) -> Result<()> {
        let tr = Triplet::conway();
        let cfg = Configuration::new(t, &tr);
        let pts: Vec<&BaryPoint> = cfg.bary_points().iter().collect();
        let eq = equidistant_from(t, &t.incenter(), &pts)?;
        let want = t.p() * t.p() + t.r_sq();
        self.expect(eq.common_sq() == Some(&want), t, Some(&tr), "conway", &want, || format!("{eq:?}"));
        let circle = theorems::conway_circle(t);
        self.expect(circle.radius_sq == want && circle.center == t.incenter(), t, Some(&tr), "conway/closed_form", &want, || {
            circle.radius_sq.to_string()
        });
        self.incenter_fit(&cfg, &want, "conway/cartesian")
    }

    fn hexagon(&mut self, t: &Triangle) -> Result<()> {
        let tr = Triplet::conway();
        let m = Configuration::new(t, &tr).hexagon_metrics()?;
        let four_p2 = int(4) * t.p() * t.p();
        let ok = m.diag_main_sq.iter().all(|d| *d == four_p2);
        self.expect(ok, t, Some(&tr), "hexagon/diagonals", &four_p2, || format!("{:?}", m.diag_main_sq));
        let ok = m.opposite_sides_parallel.iter().all(|&b| b);
        self.expect(ok, t, Some(&tr), "hexagon/parallel", "[true, true, true]", || {
            format!("{:?}", m.opposite_sides_parallel)
        });
        Ok(())
    }

    fn family(&mut self, t: &Triangle) -> Result<()> {
        let alpha = random_rational(&mut self.rng, -3, 3, 12);
        for alpha in [alpha, theorems::inscribed_alpha(t)] {
            let tr = theorems::family_triplet(t, &alpha);
            let v = theorems::verify_family(t, &tr)?;
            let want = theorems::family_radius_sq(t, &alpha);
            let ok = v.ok
                && v.membership == Membership::InFamilyT { alpha: alpha.clone() }
                && v.radius_sq.as_ref() == Some(&want)
                && v.addendum == Some([true; 3]);
            self.expect(ok, t, Some(&tr), "family", format!("ok, r² = {want}, addendum concyclic"), || {
                format!("{v:?}")
            });
            self.addendum_cartesian(t, &tr)?;
            self.incenter_fit(&Configuration::new(t, &tr), &want, "family/cartesian")?;
        }
        let r_sq = theorems::family_radius_sq(t, &theorems::inscribed_alpha(t));
        self.expect(r_sq == *t.r_sq(), t, None, "family/inscribed", t.r_sq(), || r_sq.to_string());
        Ok(())
    }

    /// Contact-point quadruples through the Cartesian determinant.
    fn addendum_cartesian(&mut self, t: &Triangle, tr: &Triplet) -> Result<()> {
        use PointLabel::*;
        let cfg = Configuration::new(t, tr);
        let e = cfg.embedding();
        let [u, v, w] = t.contact_points().map(|p| e.to_cartesian(&p));
        let (u, v, w) = (u?, v?, w?);
        let quads = [
            [&u, &w, cfg.cart(APrime), cfg.cart(ADouble)],
            [&u, &v, cfg.cart(BPrime), cfg.cart(BDouble)],
            [&v, &w, cfg.cart(CPrime), cfg.cart(CDouble)],
        ];
        for (k, q) in quads.iter().enumerate() {
            let mut distinct: Vec<CartPoint> = Vec::new();
            for p in q {
                if !distinct.contains(p) {
                    distinct.push((*p).clone());
                }
            }
            let ok = match distinct.len() {
                4 => cart_concyclic([&distinct[0], &distinct[1], &distinct[2], &distinct[3]]),
                3 => !cart_collinear(&distinct[0], &distinct[1], &distinct[2]),
                _ => true,
            };
            self.expect(ok, t, Some(tr), "family/addendum_cartesian", "concyclic", || format!("quadruple {k} is not"));
        }
        Ok(())
    }

    fn necessity(&mut self, t: &Triangle) -> Result<()> {
        let random = Triplet::new(
            random_rational(&mut self.rng, -4, 4, 8),
            random_rational(&mut self.rng, -4, 4, 8),
            random_rational(&mut self.rng, -4, 4, 8),
        );
        // a family member with γ nudged off the family
        let alpha = random_rational(&mut self.rng, -3, 3, 12);
        let near = theorems::family_triplet(t, &alpha);
        let nudge = Rational::new(1.into(), self.rng.random_range(1..=50i64).into());
        let near = Triplet::new(near.alpha, near.beta, near.gamma + nudge);
        for tr in [random, near] {
            if theorems::classify_triplet(t, &tr) != Membership::NotSolution {
                continue;
            }
            let cfg = Configuration::new(t, &tr);
            let pts: Vec<&BaryPoint> = cfg.bary_points().iter().collect();
            let eq = equidistant_from(t, &t.incenter(), &pts)?;
            self.expect(eq.common_sq().is_none(), t, Some(&tr), "necessity", "Unequal", || format!("{eq:?}"));
            // Cartesian distances from the Cartesian incenter
            let omega = cartesian_incenter(t, cfg.embedding());
            let d: Vec<QuadExt> = cfg.cart_points().iter().map(|p| p.dist_sq(&omega)).collect();
            let all_equal = d.windows(2).all(|w| w[0] == w[1]);
            self.expect(!all_equal, t, Some(&tr), "necessity/cartesian", "unequal distances", || {
                "all six equal".to_string()
            });
        }
        Ok(())
    }

    fn isosceles(&mut self, t: &Triangle) -> Result<()> {
        for apex in [Apex::A, Apex::B, Apex::C] {
            if !t.shape().isosceles_at(apex) {
                continue;
            }
            let tr = theorems::isosceles_extra(t, apex);
            let v = theorems::verify_family(t, &tr)?;
            let want = theorems::family_radius_sq(t, &tr.alpha);
            let ok = v.ok
                && v.membership.is_solution()
                && v.radius_sq.as_ref() == Some(&want)
                && v.addendum == Some([true; 3]);
            self.expect(ok, t, Some(&tr), "isosceles", format!("ok, r² = {want}"), || format!("{v:?}"));
            self.addendum_cartesian(t, &tr)?;
            let cfg = Configuration::new(t, &tr);
            self.incenter_fit(&cfg, &want, "isosceles/cartesian")?;
        }
        Ok(())
    }

    fn dussau(&mut self, t: &Triangle) -> Result<()> {
        use PointLabel::*;
        let tr = Triplet::anti_conway();
        match theorems::dussau_point(t) {
            Ok(p) => self.expect(p == t.nagel(), t, Some(&tr), "dussau", t.nagel(), || p.to_string()),
            Err(e) => self.fail(t, Some(&tr), "dussau", t.nagel(), e),
        }
        let lines = theorems::dussau_lines(t, &tr)?;
        let mut used = lines.clone();
        if self.fault == Fault::FlipLineSign {
            used[0] = used[0].with_first_sign_flipped();
        }
        let c = concurrent(&used[0], &used[1], &used[2]);
        let ok = matches!(&c, Ok(Concurrency::Concurrent(p)) if *p == t.nagel());
        self.expect(ok, t, Some(&tr), "dussau/lines", t.nagel(), || format!("{c:?}"));

        // lines through the constructed points agree with the closed forms
        let cfg = Configuration::new(t, &tr);
        for (k, (p, q)) in [(APrime, CDouble), (BPrime, ADouble), (CPrime, BDouble)].into_iter().enumerate() {
            let through = line_through(cfg.bary(p), cfg.bary(q))?;
            self.expect(through == lines[k], t, Some(&tr), "dussau/closed_form", format!("{through:?}"), || {
                format!("{:?}", lines[k])
            });
        }

        // pairwise Cartesian intersections
        let (a1, c2) = (cfg.cart(APrime), cfg.cart(CDouble));
        let (b1, a2) = (cfg.cart(BPrime), cfg.cart(ADouble));
        let (c1, b2) = (cfg.cart(CPrime), cfg.cart(BDouble));
        let nagel = cartesian_nagel(t, cfg.embedding());
        let m12 = cartesian_meet(a1, c2, b1, a2)?;
        let m23 = cartesian_meet(b1, a2, c1, b2)?;
        let ok = m12.as_ref() == Some(&nagel) && m23.as_ref() == Some(&nagel);
        self.expect(ok, t, Some(&tr), "dussau/cartesian", format!("{:?}", nagel.to_f64()), || {
            format!("{:?} {:?}", m12.map(|p| p.to_f64()), m23.map(|p| p.to_f64()))
        });
        Ok(())
    }

    fn anti_conway(&mut self, t: &Triangle) -> Result<()> {
        let tr = Triplet::anti_conway();
        let report = match theorems::anti_conway(t) {
            Ok(r) => r,
            Err(e) => {
                self.fail(t, Some(&tr), "anti_conway", "three circles", e);
                return Ok(());
            }
        };
        let cfg = Configuration::new(t, &tr);
        let nagel = cartesian_nagel(t, cfg.embedding());
        let ff = FloatFigure::new(t, &tr);
        let want = int(4) * t.r_sq();
        for (k, quad) in ANTI_CONWAY_QUADRUPLES.iter().enumerate() {
            let pts: Vec<CartPoint> = quad.iter().map(|&l| cfg.cart(l).clone()).collect();
            match brute_force_circle(&pts)? {
                CircleFit::Circle(c) => {
                    let pw = c.power(&nagel);
                    let ok = pw.as_rational() == Some(&report.nagel_powers[k]) && report.nagel_powers[k] == want;
                    self.expect(ok, t, Some(&tr), "anti_conway/power", &want, || pw.to_string());
                }
                CircleFit::NotConcyclic(i) => {
                    self.fail(t, Some(&tr), "anti_conway/cartesian", "concyclic", format!("point {i} off the circle"))
                }
            }
            let [i0, i1, i2] = [quad[0], quad[1], quad[2]].map(|l| ff.points[l.index()]);
            if let Some((center, r2)) = fcircle(i0, i1, i2) {
                let approx = fdist_sq(ff.nagel, center) - r2;
                self.float_close(t, Some(&tr), "anti_conway/float", &report.nagel_powers[k], approx);
            }
        }
        self.float_close(t, None, "anti_conway/float_r", t.r_sq(), ff.r_sq);
        Ok(())
    }

    fn congruence(&mut self, t: &Triangle) -> Result<()> {
        let solved = solve_sigma(t);
        let anti = Triplet::anti_conway();
        let others: Vec<&Triplet> = solved.triplets.iter().filter(|tr| **tr != anti).collect();
        self.expect(!solved.degenerate, t, None, "congruence/sigma", "isolated solutions", || {
            "a free parameter".to_string()
        });
        self.expect(solved.triplets.contains(&anti), t, None, "congruence/sigma", "(−1,−1,−1) solves (Σ)", || {
            format!("{:?}", solved.triplets)
        });
        match theorems::congruence(t)? {
            CongruenceResult::Found(tr) => {
                let zero = [Rational::zero(), Rational::zero(), Rational::zero()];
                let res = theorems::sigma_residuals(t, &tr);
                self.expect(res == zero, t, Some(&tr), "congruence/residuals", "zero", || format!("{res:?}"));
                let minus_one = -Rational::one();
                let bad = tr.components().iter().any(|x| x.is_zero() || **x == minus_one);
                self.expect(!bad, t, Some(&tr), "congruence/components", "no component in {0, −1}", || tr.to_string());
                let positive = tr.components().iter().all(|x| x.is_positive());
                self.expect(!positive, t, Some(&tr), "congruence/not_all_positive", "some component ≤ 0", || tr.to_string());
                let meets = theorems::lines_meet_at_nagel(t, &tr)?;
                self.expect(meets, t, Some(&tr), "congruence/nagel", "lines through the Nagel point", || {
                    "not concurrent there".to_string()
                });
                let ok = others.len() == 1 && *others[0] == tr;
                self.expect(ok, t, Some(&tr), "congruence/sigma", tr.to_string(), || format!("{others:?}"));
                let roots = theorems::e3prime_roots(t).roots;
                self.expect(roots.contains(&tr.gamma), t, Some(&tr), "congruence/e3prime", &tr.gamma, || {
                    format!("{roots:?}")
                });
            }
            CongruenceResult::Excluded(reason) => {
                // any surviving solution of (Σ) has a vanishing component
                let ok = others.iter().all(|tr| tr.components().iter().any(|x| x.is_zero()));
                self.expect(ok, t, None, "congruence/excluded", format!("no congruence ({reason})"), || {
                    format!("{others:?}")
                });
            }
        }
        Ok(())
    }

    fn predicates(&mut self, t: &Triangle) -> Result<()> {
        let on_circle = self.rng.random_bool(0.5);
        let alpha = random_rational(&mut self.rng, -3, 3, 12);
        let cfg = Configuration::new(t, &theorems::family_triplet(t, &alpha));
        let mut idx: Vec<usize> = (0..6).collect();
        for i in 0..3 {
            let j = self.rng.random_range(i..6);
            idx.swap(i, j);
        }
        let mut bary: Vec<BaryPoint> = idx[..3].iter().map(|&i| cfg.bary_points()[i].clone()).collect();
        let mut cart: Vec<CartPoint> = idx[..3].iter().map(|&i| cfg.cart_points()[i].clone()).collect();
        if on_circle {
            bary.push(cfg.bary_points()[idx[3]].clone());
            cart.push(cfg.cart_points()[idx[3]].clone());
        } else {
            let other = Triplet::new(
                random_rational(&mut self.rng, -3, 3, 12),
                random_rational(&mut self.rng, -3, 3, 12),
                random_rational(&mut self.rng, -3, 3, 12),
            );
            let k = self.rng.random_range(0..6);
            let off = Configuration::new(t, &other);
            bary.push(off.bary_points()[k].clone());
            cart.push(off.cart_points()[k].clone());
        }
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| bary[i] != bary[j]));
        if !distinct {
            return Ok(());
        }
        let quad = [&bary[0], &bary[1], &bary[2], &bary[3]];
        let by_bary = concyclic(t, quad)?;
        let by_det = cart_concyclic([&cart[0], &cart[1], &cart[2], &cart[3]]);
        let by_fit = match brute_force_circle(&cart) {
            Ok(CircleFit::Circle(_)) => true,
            Ok(CircleFit::NotConcyclic(_)) | Err(GeometryError::CollinearSeed) => false,
            Err(e) => return Err(e),
        };
        let verdicts = format!("bary {by_bary}, cartesian {by_det}, fit {by_fit}");
        self.expect(by_bary == by_det && by_det == by_fit, t, Some(cfg.triplet()), "predicates/concyclic", "unanimous", || {
            verdicts.clone()
        });
        if on_circle {
            self.expect(by_bary, t, Some(cfg.triplet()), "predicates/on_circle", "concyclic", || verdicts.clone());
        }
        // Feuerbach with P = (D E) ∩ (M N)
        let l1 = line_through(&bary[0], &bary[1])?;
        let l2 = line_through(&bary[2], &bary[3])?;
        if let Some(p) = l1.meet(&l2).filter(BaryPoint::is_finite) {
            let f = feuerbach_check(t, &p, &bary[0], &bary[1], &bary[2], &bary[3])?;
            self.expect(f == by_bary, t, Some(cfg.triplet()), "predicates/feuerbach", by_bary, || f.to_string());
        }
        Ok(())
    }
}
