//! Solvers and verifiers for the incidence theorems of the configuration.
//!
//! * [`conway_circle`]: for `(1,1,1)` the six points lie on the circle about
//!   the incenter with squared radius `p² + r²`.
//! * [`family_triplet`], [`classify_triplet`], [`verify_family`]: the triplets
//!   `(α, 1 + (α−1)a/b, 1 + (α−1)a/c)` keep that conclusion, with squared
//!   radius `(p + (α−1)a)² + r²`; isosceles triangles admit one more triplet
//!   per apex.
//! * [`dussau_lines`], [`dussau_point`]: for `(−1,−1,−1)` on a scalene
//!   triangle the lines `A′C″`, `B′A″`, `C′B″` meet at the Nagel point.
//! * [`anti_conway`]: in the same configuration `{A′,A″,B′,C″}`,
//!   `{B′,B″,C′,A″}`, `{C′,C″,A′,B″}` are concyclic and the Nagel point has
//!   the same power `4r²` with respect to all three circles.
//! * [`congruence`]: the unique other triplet whose lines still meet at the
//!   Nagel point, unless `p ∈ {2a, 2b, 2c}` or `p² ∈ {2bc, 2ca, 2ab}`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::configuration::{Configuration, PointLabel, Triplet};
use crate::error::{GeometryError, Result};
use crate::numerics::{int, rational_strings, Rational};
use crate::predicates::{
    circle_through, concurrent, concyclic_allowing_repeats, equidistant_from, power_of_point,
    BaryCircle, BaryLine, Concurrency, Equidistance,
};
use crate::triangle::{Apex, BaryPoint, Triangle};

/// Center and squared radius of a circle about a barycentric point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredCircle {
    pub center: BaryPoint,
    pub radius_sq: Rational,
}

impl Serialize for CenteredCircle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            center: Vec<String>,
            radius_sq: String,
            radius_approx: f64,
        }
        Repr {
            center: self.center.to_strings().map_err(serde::ser::Error::custom)?,
            radius_sq: self.radius_sq.to_string(),
            radius_approx: crate::numerics::to_f64(&self.radius_sq).sqrt(),
        }
        .serialize(s)
    }
}

/// Conway's circle: centered at the incenter, squared radius `r² + p²`.
pub fn conway_circle(t: &Triangle) -> CenteredCircle {
    CenteredCircle {
        center: t.incenter(),
        radius_sq: t.r_sq() + t.p() * t.p(),
    }
}

/// `(α, 1 + (α−1)a/b, 1 + (α−1)a/c)`.
pub fn family_triplet(t: &Triangle, alpha: &Rational) -> Triplet {
    let k = (alpha - Rational::one()) * t.a();
    Triplet::new(
        alpha.clone(),
        Rational::one() + &k / t.b(),
        Rational::one() + &k / t.c(),
    )
}

/// `(p + (α−1)a)² + r²`.
pub fn family_radius_sq(t: &Triangle, alpha: &Rational) -> Rational {
    let s = t.p() + (alpha - Rational::one()) * t.a();
    &s * &s + t.r_sq()
}

/// The α for which the family circle is the incircle: `1 − p/a`.
pub fn inscribed_alpha(t: &Triangle) -> Rational {
    Rational::one() - t.p() / t.a()
}

/// The additional solution of an isosceles triangle with the given apex:
/// `(0, 0, −a/c)` at C, `(0, −c/b, 0)` at B, `(−b/a, 0, 0)` at A.
pub fn isosceles_extra(t: &Triangle, apex: Apex) -> Triplet {
    let z = Rational::zero;
    match apex {
        Apex::C => Triplet::new(z(), z(), -(t.a() / t.c())),
        Apex::B => Triplet::new(z(), -(t.c() / t.b()), z()),
        Apex::A => Triplet::new(-(t.b() / t.a()), z(), z()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    InFamilyT { alpha: Rational },
    IsoscelesExtra { apex: Apex },
    NotSolution,
}

impl Membership {
    pub fn is_solution(&self) -> bool {
        !matches!(self, Membership::NotSolution)
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::InFamilyT { alpha } => write!(f, "family member with α = {alpha}"),
            Membership::IsoscelesExtra { apex } => write!(f, "isosceles extra at apex {apex}"),
            Membership::NotSolution => f.write_str("not a solution"),
        }
    }
}

impl Serialize for Membership {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        match self {
            Membership::InFamilyT { alpha } => {
                m.serialize_entry("tag", "InFamilyT")?;
                m.serialize_entry("alpha", &alpha.to_string())?;
            }
            Membership::IsoscelesExtra { apex } => {
                m.serialize_entry("tag", "IsoscelesExtra")?;
                m.serialize_entry("apex", apex)?;
            }
            Membership::NotSolution => m.serialize_entry("tag", "NotSolution")?,
        }
        m.end()
    }
}

/// Decides by exact comparison whether the six points of `tr` lie on a
/// common circle about the incenter, as a statement about `(a, b, c, tr)`.
pub fn classify_triplet(t: &Triangle, tr: &Triplet) -> Membership {
    if family_triplet(t, &tr.alpha) == *tr {
        return Membership::InFamilyT {
            alpha: tr.alpha.clone(),
        };
    }
    let shape = t.shape();
    for apex in [Apex::C, Apex::B, Apex::A] {
        if shape.isosceles_at(apex) && isosceles_extra(t, apex) == *tr {
            return Membership::IsoscelesExtra { apex };
        }
    }
    Membership::NotSolution
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    /// The construction agrees with [`classify_triplet`] (and, for solutions,
    /// with the radius formula and the contact-point cocyclicities).
    pub ok: bool,
    pub membership: Membership,
    pub equidistance: Equidistance,
    /// Common squared distance from the incenter, when there is one.
    pub radius_sq: Option<Rational>,
    /// `{U,W,A′,A″}`, `{U,V,B′,B″}`, `{V,W,C′,C″}`; only evaluated for solutions.
    pub addendum: Option<[bool; 3]>,
}

impl Serialize for FamilyVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            ok: bool,
            membership: &'a Membership,
            equidistant: bool,
            radius_sq: Option<String>,
            addendum_concyclic: Option<[bool; 3]>,
        }
        Repr {
            ok: self.ok,
            membership: &self.membership,
            equidistant: self.radius_sq.is_some(),
            radius_sq: self.radius_sq.as_ref().map(ToString::to_string),
            addendum_concyclic: self.addendum,
        }
        .serialize(s)
    }
}

/// The three contact-point quadruples of a configuration.
pub fn addendum_quadruples(cfg: &Configuration) -> Result<[bool; 3]> {
    use PointLabel::*;
    let t = cfg.triangle();
    let [u, v, w] = t.contact_points();
    let p = |l| cfg.bary(l);
    Ok([
        concyclic_allowing_repeats(t, [&u, &w, p(APrime), p(ADouble)])?,
        concyclic_allowing_repeats(t, [&u, &v, p(BPrime), p(BDouble)])?,
        concyclic_allowing_repeats(t, [&v, &w, p(CPrime), p(CDouble)])?,
    ])
}

pub fn verify_family(t: &Triangle, tr: &Triplet) -> Result<FamilyVerdict> {
    let cfg = Configuration::new(t, tr);
    let pts: Vec<&BaryPoint> = cfg.bary_points().iter().collect();
    let equidistance = equidistant_from(t, &t.incenter(), &pts)?;
    let membership = classify_triplet(t, tr);
    let radius_sq = equidistance.common_sq().cloned();

    let (ok, addendum) = if membership.is_solution() {
        let addendum = addendum_quadruples(&cfg)?;
        let ok = radius_sq.as_ref() == Some(&family_radius_sq(t, &tr.alpha))
            && addendum.iter().all(|&b| b);
        (ok, Some(addendum))
    } else {
        (radius_sq.is_none(), None)
    };
    Ok(FamilyVerdict {
        ok,
        membership,
        equidistance,
        radius_sq,
        addendum,
    })
}

/// Lines `(A′C″)`, `(B′A″)`, `(C′B″)` from their closed-form coefficients.
pub fn dussau_lines(t: &Triangle, tr: &Triplet) -> Result<[BaryLine; 3]> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (aa, bb, cc) = (&tr.alpha * a, &tr.beta * b, &tr.gamma * c);
    let (c_aa, a_cc) = (c + &aa, a + &cc);
    let (a_bb, b_aa) = (a + &bb, b + &aa);
    let (b_cc, c_bb) = (b + &cc, c + &bb);
    let build = |name, l: Rational, m: Rational, n: Rational| {
        BaryLine::new(l, m, n).map_err(|_| GeometryError::CoincidentDefiningPoints(name))
    };
    Ok([
        build("A′C″", -(&aa * &a_cc), -(&c_aa * &a_cc), -(&cc * &c_aa))?,
        build("B′A″", -(&aa * &a_bb), -(&bb * &b_aa), -(&a_bb * &b_aa))?,
        build("C′B″", -(&b_cc * &c_bb), -(&bb * &b_cc), -(&cc * &c_bb))?,
    ])
}

fn require_scalene(t: &Triangle) -> Result<()> {
    if t.is_scalene() {
        Ok(())
    } else {
        Err(GeometryError::NotScalene)
    }
}

/// Concurrency point of the `(−1,−1,−1)` lines; equals the Nagel point.
pub fn dussau_point(t: &Triangle) -> Result<BaryPoint> {
    require_scalene(t)?;
    let [l1, l2, l3] = dussau_lines(t, &Triplet::anti_conway())?;
    match concurrent(&l1, &l2, &l3)? {
        Concurrency::Concurrent(p) if p == t.nagel() => Ok(p),
        other => Err(GeometryError::TheoremViolated(format!(
            "lines of (−1,−1,−1) on {t}: {other:?}, expected Nagel point {}",
            t.nagel()
        ))),
    }
}

/// Circles and Nagel-point powers of the `(−1,−1,−1)` configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiConwayReport {
    /// Through `{A′,A″,B′,C″}`, `{B′,B″,C′,A″}`, `{C′,C″,A′,B″}`.
    pub circles: [BaryCircle; 3],
    pub nagel_powers: [Rational; 3],
    /// Closed form `4r²` of the common power.
    pub expected_power: Rational,
}

impl Serialize for AntiConwayReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            circles: &'a [BaryCircle; 3],
            nagel_powers: Vec<String>,
            expected_power: String,
        }
        Repr {
            circles: &self.circles,
            nagel_powers: rational_strings(&self.nagel_powers),
            expected_power: self.expected_power.to_string(),
        }
        .serialize(s)
    }
}

pub const ANTI_CONWAY_QUADRUPLES: [[PointLabel; 4]; 3] = {
    use PointLabel::*;
    [
        [APrime, ADouble, BPrime, CDouble],
        [BPrime, BDouble, CPrime, ADouble],
        [CPrime, CDouble, APrime, BDouble],
    ]
};

pub fn anti_conway(t: &Triangle) -> Result<AntiConwayReport> {
    require_scalene(t)?;
    let cfg = Configuration::new(t, &Triplet::anti_conway());
    let nagel = t.nagel();
    let mut circles = Vec::with_capacity(3);
    let mut powers = Vec::with_capacity(3);
    for quad in ANTI_CONWAY_QUADRUPLES {
        let [p, q, r, s] = quad.map(|l| cfg.bary(l));
        let circle = circle_through(t, p, q, r)?;
        if !circle.contains(t, s) {
            return Err(GeometryError::TheoremViolated(format!(
                "{} is off the circle through {}, {}, {} for {t}",
                quad[3], quad[0], quad[1], quad[2]
            )));
        }
        powers.push(power_of_point(t, &nagel, &circle)?);
        circles.push(circle);
    }
    let expected_power = int(4) * t.r_sq();
    if let Some(bad) = powers.iter().find(|&pw| *pw != expected_power) {
        return Err(GeometryError::TheoremViolated(format!(
            "Nagel power {bad} differs from 4r² = {expected_power} for {t}"
        )));
    }
    Ok(AntiConwayReport {
        circles: circles.try_into().expect("three circles"),
        nagel_powers: powers.try_into().expect("three powers"),
        expected_power,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExclusionReason {
    PEqualsTwoA,
    PEqualsTwoB,
    PEqualsTwoC,
    PSquaredEqualsTwoBC,
    PSquaredEqualsTwoCA,
    PSquaredEqualsTwoAB,
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExclusionReason::PEqualsTwoA => "p=2a",
            ExclusionReason::PEqualsTwoB => "p=2b",
            ExclusionReason::PEqualsTwoC => "p=2c",
            ExclusionReason::PSquaredEqualsTwoBC => "p²=2bc",
            ExclusionReason::PSquaredEqualsTwoCA => "p²=2ca",
            ExclusionReason::PSquaredEqualsTwoAB => "p²=2ab",
        };
        f.write_str(s)
    }
}

/// First exclusion condition met by the triangle, if any.
pub fn exclusion(t: &Triangle) -> Option<ExclusionReason> {
    use ExclusionReason::*;
    let (a, b, c, p) = (t.a(), t.b(), t.c(), t.p());
    let two = int(2);
    let p2 = p * p;
    [
        (*p == &two * a, PEqualsTwoA),
        (*p == &two * b, PEqualsTwoB),
        (*p == &two * c, PEqualsTwoC),
        (p2 == &two * b * c, PSquaredEqualsTwoBC),
        (p2 == &two * c * a, PSquaredEqualsTwoCA),
        (p2 == &two * a * b, PSquaredEqualsTwoAB),
    ]
    .into_iter()
    .find_map(|(hit, reason)| hit.then_some(reason))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CongruenceResult {
    Excluded(ExclusionReason),
    Found(Triplet),
}

/// The triplet other than `(−1,−1,−1)` whose three lines meet at the Nagel
/// point: `((p²−2bc)/(p(p−2a)), (p²−2ca)/(p(p−2b)), (p²−2ab)/(p(p−2c)))`.
pub fn congruence(t: &Triangle) -> Result<CongruenceResult> {
    require_scalene(t)?;
    if let Some(reason) = exclusion(t) {
        return Ok(CongruenceResult::Excluded(reason));
    }
    let (a, b, c, p) = (t.a(), t.b(), t.c(), t.p());
    let two = int(2);
    let p2 = p * p;
    let comp = |x: &Rational, y: &Rational, opp: &Rational| (&p2 - &two * x * y) / (p * (p - &two * opp));
    Ok(CongruenceResult::Found(Triplet::new(
        comp(b, c, a),
        comp(c, a, b),
        comp(a, b, c),
    )))
}

/// Residuals `LHS − RHS` of
///
/// ```text
/// aα + cγ + pαγ = b − p
/// aα + bβ + pαβ = c − p
/// bβ + cγ + pβγ = a − p
/// ```
///
/// whose common zeros are the triplets with all three lines through the
/// Nagel point. Evaluating the lines at the Nagel point gives `−ac`, `−ab`,
/// `−bc` times these residuals.
pub fn sigma_residuals(t: &Triangle, tr: &Triplet) -> [Rational; 3] {
    let (a, b, c, p) = (t.a(), t.b(), t.c(), t.p());
    let (al, be, ga) = (&tr.alpha, &tr.beta, &tr.gamma);
    [
        a * al + c * ga + p * al * ga - (b - p),
        a * al + b * be + p * al * be - (c - p),
        b * be + c * ga + p * be * ga - (a - p),
    ]
}

/// The quadratic in γ left after eliminating α and β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E3Prime {
    /// `[p(2c − p), −2(ab − pc), p² − 2ab]`, highest degree first.
    pub coefficients: [Rational; 3],
    /// Distinct rational roots in increasing order.
    pub roots: Vec<Rational>,
}

pub fn e3prime_roots(t: &Triangle) -> E3Prime {
    let (a, b, c, p) = (t.a(), t.b(), t.c(), t.p());
    let two = int(2);
    let lead = p * (&two * c - p);
    let mid = -(&two * (a * b - p * c));
    let cst = p * p - &two * a * b;
    let minus_one = -Rational::one();
    let mut roots = if lead.is_zero() {
        // degree drops to one
        if mid.is_zero() {
            Vec::new()
        } else {
            vec![-&cst / &mid]
        }
    } else {
        // −1 is always a root, so the other is −cst/lead by Vieta
        vec![minus_one, -&cst / &lead]
    };
    roots.sort();
    roots.dedup();
    E3Prime {
        coefficients: [lead, mid, cst],
        roots,
    }
}

/// Whether the closed-form lines of `tr` all pass through the Nagel point.
pub fn lines_meet_at_nagel(t: &Triangle, tr: &Triplet) -> Result<bool> {
    let [l1, l2, l3] = dussau_lines(t, tr)?;
    Ok(matches!(concurrent(&l1, &l2, &l3)?, Concurrency::Concurrent(p) if p == t.nagel()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use crate::predicates::{concyclic, line_through};

    fn tri(a: i64, b: i64, c: i64) -> Triangle {
        Triangle::from_int_sides(a, b, c).unwrap()
    }

    #[test]
    fn conway_radius() {
        assert_eq!(conway_circle(&tri(3, 4, 5)).radius_sq, int(37));
        assert_eq!(conway_circle(&tri(2, 2, 2)).radius_sq, rat(28, 3));
        assert_eq!(conway_circle(&tri(4, 5, 6)).radius_sq, int(58));
        for (a, b, c) in [(3, 4, 5), (2, 2, 2), (4, 5, 6)] {
            let t = tri(a, b, c);
            let cfg = Configuration::new(&t, &Triplet::conway());
            let pts: Vec<&BaryPoint> = cfg.bary_points().iter().collect();
            assert_eq!(
                equidistant_from(&t, &t.incenter(), &pts).unwrap(),
                Equidistance::CommonSq(conway_circle(&t).radius_sq)
            );
        }
    }

    #[test]
    fn family_members() {
        let t = tri(4, 5, 6);
        assert_eq!(family_triplet(&t, &int(0)), Triplet::new(int(0), rat(1, 5), rat(1, 3)));
        assert_eq!(family_triplet(&tri(3, 7, 9), &int(1)), Triplet::conway());
        assert_eq!(
            family_triplet(&t, &rat(3, 2)),
            Triplet::new(rat(3, 2), rat(7, 5), rat(4, 3))
        );
        assert_eq!(family_radius_sq(&t, &int(0)), int(14));
        assert_eq!(family_radius_sq(&t, &int(1)), conway_circle(&t).radius_sq);
        assert_eq!(family_radius_sq(&t, &inscribed_alpha(&t)), *t.r_sq());
    }

    #[test]
    fn inscribed_alphas() {
        assert_eq!(inscribed_alpha(&tri(4, 5, 6)), rat(-7, 8));
        assert_eq!(inscribed_alpha(&tri(2, 2, 2)), rat(-1, 2));
        assert_eq!(inscribed_alpha(&tri(3, 4, 5)), int(-1));
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_triplet(&tri(4, 5, 6), &Triplet::conway()),
            Membership::InFamilyT { alpha: int(1) }
        );
        assert_eq!(
            classify_triplet(&tri(3, 3, 4), &Triplet::new(int(0), int(0), rat(-3, 4))),
            Membership::IsoscelesExtra { apex: Apex::C }
        );
        assert_eq!(
            classify_triplet(&tri(4, 5, 6), &Triplet::new(int(0), int(0), rat(-2, 3))),
            Membership::NotSolution
        );
        let eq = tri(2, 2, 2);
        for apex in [Apex::A, Apex::B, Apex::C] {
            assert_eq!(
                classify_triplet(&eq, &isosceles_extra(&eq, apex)),
                Membership::IsoscelesExtra { apex }
            );
        }
    }

    #[test]
    fn verify_family_cases() {
        let t = tri(4, 5, 6);
        let v = verify_family(&t, &family_triplet(&t, &rat(-1, 2))).unwrap();
        assert!(v.ok);
        assert_eq!(v.addendum, Some([true; 3]));

        let v = verify_family(&tri(3, 3, 4), &Triplet::new(int(0), int(0), rat(-3, 4))).unwrap();
        assert!(v.ok);
        assert_eq!(v.radius_sq, Some(rat(24, 5)));

        let v = verify_family(&t, &Triplet::new(int(1), int(1), int(2))).unwrap();
        assert!(v.ok);
        assert_eq!(v.membership, Membership::NotSolution);
        assert!(matches!(v.equidistance, Equidistance::Unequal(_)));
    }

    #[test]
    fn proof_case_2a_is_in_the_family() {
        // isosceles at C, (0, 0, 1 − a/c): the α = 0 member
        let t = tri(3, 3, 4);
        let tr = Triplet::new(int(0), int(0), rat(1, 4));
        assert_eq!(classify_triplet(&t, &tr), Membership::InFamilyT { alpha: int(0) });
        assert_eq!(verify_family(&t, &tr).unwrap().radius_sq, Some(rat(24, 5)));
    }

    #[test]
    fn proof_case_1_equilateral_zero_triplet() {
        let t = tri(2, 2, 2);
        let v = verify_family(&t, &Triplet::uniform(int(0))).unwrap();
        assert!(v.ok);
        assert_eq!(v.membership, Membership::InFamilyT { alpha: int(0) });
        // circumradius² = abc / (4·area) squared = 4/3
        assert_eq!(v.radius_sq, Some(rat(4, 3)));
        let v = verify_family(&tri(4, 5, 6), &Triplet::uniform(int(0))).unwrap();
        assert_eq!(v.membership, Membership::NotSolution);
        assert!(v.ok && v.radius_sq.is_none());
    }

    #[test]
    fn proof_case_4_trig_identities() {
        // ΩC² = ab(p−c)/p and ΩC′² = γ²c² + (p−c)(ab/p + 2γc)
        let t = tri(5, 7, 9);
        let (a, b, c, p) = (t.a(), t.b(), t.c(), t.p());
        let e = t.embed();
        let omega = e.to_cartesian(&t.incenter()).unwrap();
        let oc = omega.dist_sq(&e.c);
        assert_eq!(oc.as_rational(), Some(&(a * b * (p - c) / p)));
        for g in [rat(1, 3), rat(-2, 5), int(2)] {
            let cfg = Configuration::new(&t, &Triplet::new(int(1), int(1), g.clone()));
            let d = omega.dist_sq(cfg.cart(PointLabel::CPrime));
            let want = &g * &g * c * c + (p - c) * (a * b / p + int(2) * &g * c);
            assert_eq!(d.as_rational(), Some(&want));
        }
    }

    #[test]
    fn dussau_line_coefficients() {
        let t = tri(3, 4, 5);
        let lines = dussau_lines(&t, &Triplet::anti_conway()).unwrap();
        let want = [(3, -2, -5), (3, -4, -1), (-1, 4, -5)];
        for (l, (x, y, z)) in lines.iter().zip(want) {
            assert_eq!(*l, BaryLine::new(int(x), int(y), int(z)).unwrap());
        }
        let t = tri(4, 5, 6);
        let lines = dussau_lines(&t, &Triplet::anti_conway()).unwrap();
        let want = [(2, -1, -3), (4, -5, -1), (-1, 5, -6)];
        for (l, (x, y, z)) in lines.iter().zip(want) {
            assert_eq!(*l, BaryLine::new(int(x), int(y), int(z)).unwrap());
        }
    }

    #[test]
    fn closed_form_lines_match_point_lines() {
        let t = tri(5, 7, 9);
        for tr in [
            Triplet::anti_conway(),
            Triplet::new(rat(2, 3), rat(-5, 4), int(3)),
            // γ = −a/c makes the a + γc factor vanish
            Triplet::new(int(1), int(2), rat(-5, 9)),
        ] {
            let cfg = Configuration::new(&t, &tr);
            let lines = dussau_lines(&t, &tr).unwrap();
            use PointLabel::*;
            let pairs = [(APrime, CDouble), (BPrime, ADouble), (CPrime, BDouble)];
            for (l, (p, q)) in lines.iter().zip(pairs) {
                assert_eq!(*l, line_through(cfg.bary(p), cfg.bary(q)).unwrap(), "{tr}");
            }
        }
        // A′ = C″ = B needs c + αa = 0 and a + γc = 0
        let tr = Triplet::new(rat(-9, 5), int(1), rat(-5, 9));
        assert_eq!(
            dussau_lines(&t, &tr).unwrap_err(),
            GeometryError::CoincidentDefiningPoints("A′C″")
        );
    }

    #[test]
    fn dussau_points() {
        assert_eq!(dussau_point(&tri(4, 5, 6)).unwrap(), BaryPoint::from_ints(7, 5, 3).unwrap());
        assert_eq!(dussau_point(&tri(3, 4, 5)).unwrap(), BaryPoint::from_ints(3, 2, 1).unwrap());
        assert_eq!(dussau_point(&tri(3, 3, 4)), Err(GeometryError::NotScalene));
    }

    #[test]
    fn anti_conway_powers() {
        for ((a, b, c), pw) in [((4, 5, 6), int(7)), ((3, 4, 5), int(4)), ((5, 6, 7), rat(32, 3))] {
            let t = tri(a, b, c);
            let r = anti_conway(&t).unwrap();
            assert_eq!(r.nagel_powers, [pw.clone(), pw.clone(), pw.clone()]);
            assert_eq!(r.expected_power, pw);
            assert_eq!(r.expected_power, int(4) * t.r_sq());
        }
        assert_eq!(anti_conway(&tri(2, 2, 2)), Err(GeometryError::NotScalene));
    }

    #[test]
    fn anti_conway_quadruples_via_determinant() {
        let t = tri(6, 7, 11);
        let cfg = Configuration::new(&t, &Triplet::anti_conway());
        for quad in ANTI_CONWAY_QUADRUPLES {
            let [p, q, r, s] = quad.map(|l| cfg.bary(l));
            assert!(concyclic(&t, [p, q, r, s]).unwrap());
        }
    }

    #[test]
    fn congruences() {
        assert_eq!(
            congruence(&tri(4, 5, 6)).unwrap(),
            CongruenceResult::Found(Triplet::new(int(1), rat(-11, 25), rat(-13, 27)))
        );
        assert_eq!(
            congruence(&tri(3, 4, 5)).unwrap(),
            CongruenceResult::Excluded(ExclusionReason::PEqualsTwoA)
        );
        assert_eq!(
            congruence(&tri(9, 8, 7)).unwrap(),
            CongruenceResult::Excluded(ExclusionReason::PSquaredEqualsTwoAB)
        );
        assert_eq!(congruence(&tri(3, 3, 4)), Err(GeometryError::NotScalene));
        let t = tri(4, 5, 6);
        let tr = Triplet::new(int(1), rat(-11, 25), rat(-13, 27));
        assert!(lines_meet_at_nagel(&t, &tr).unwrap());
    }

    #[test]
    fn residuals() {
        for (a, b, c) in [(4, 5, 6), (5, 7, 9), (3, 4, 5)] {
            let t = tri(a, b, c);
            assert_eq!(sigma_residuals(&t, &Triplet::anti_conway()), [int(0), int(0), int(0)]);
        }
        let t = tri(4, 5, 6);
        let tr = Triplet::new(int(1), rat(-11, 25), rat(-13, 27));
        assert_eq!(sigma_residuals(&t, &tr), [int(0), int(0), int(0)]);
        let r = sigma_residuals(&t, &Triplet::conway());
        assert!(r.iter().all(|x| !x.is_zero()));
        assert!(!lines_meet_at_nagel(&t, &Triplet::conway()).unwrap());
    }

    #[test]
    fn residuals_scale_line_values_at_nagel() {
        let t = tri(5, 7, 9);
        let tr = Triplet::new(rat(2, 3), rat(-5, 4), int(3));
        let lines = dussau_lines(&t, &tr).unwrap();
        let r = sigma_residuals(&t, &tr);
        // Nagel point normalized so that its coordinates are p−a, p−b, p−c
        let n = BaryPoint::new(t.p() - t.a(), t.p() - t.b(), t.p() - t.c()).unwrap();
        let (a, b, c) = (t.a(), t.b(), t.c());
        assert_eq!(lines[0].eval(&n), -(a * c) * &r[0]);
        assert_eq!(lines[1].eval(&n), -(a * b) * &r[1]);
        assert_eq!(lines[2].eval(&n), -(b * c) * &r[2]);
    }

    #[test]
    fn e3prime() {
        let e = e3prime_roots(&tri(4, 5, 6));
        assert_eq!(e.coefficients, [rat(135, 4), int(50), rat(65, 4)]);
        assert_eq!(e.roots, vec![int(-1), rat(-13, 27)]);
        for r in &e.roots {
            let [x, y, z] = &e.coefficients;
            assert!((x * r * r + y * r + z).is_zero());
        }
        assert_eq!(e3prime_roots(&tri(5, 6, 7)).roots, vec![int(-1), rat(-7, 15)]);
        // p = 2c: (a, b, c) = (4, 5, 3) has p = 6
        let e = e3prime_roots(&tri(4, 5, 3));
        assert!(e.coefficients[0].is_zero());
        assert_eq!(e.roots, vec![int(-1)]);
    }
}
