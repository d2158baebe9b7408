use conway::numerics::{int, to_f64};
use conway::oracle::{brute_force_circle, cartesian_incenter, solve_sigma, CircleFit};
use conway::predicates::{
    bary_dist_sq, cart_concyclic, circle_through, collinear, concyclic, feuerbach_check, line_through,
    power_of_point,
};
use conway::theorems::{self, CongruenceResult, ExclusionReason, Membership};
use conway::{Apex, BaryPoint, CartPoint, Configuration, Equidistance, PointLabel, QuadExt, Rational, Triangle, Triplet};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational(lo: i64, hi: i64, qmax: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi, 1..=qmax).prop_map(|(n, q)| Rational::new(n.into(), q.into()))
}

fn side() -> impl Strategy<Value = Rational> {
    (1i64..=60, 1i64..=6).prop_map(|(n, q)| Rational::new(n.into(), q.into()))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (side(), side(), side()).prop_filter_map("not a triangle", |(a, b, c)| Triangle::from_sides(a, b, c).ok())
}

fn scalene() -> impl Strategy<Value = Triangle> {
    triangle().prop_filter("not scalene", Triangle::is_scalene)
}

fn isosceles() -> impl Strategy<Value = (Triangle, Apex)> {
    (side(), side(), 0usize..3).prop_filter_map("degenerate", |(leg, base, k)| {
        let apex = [Apex::A, Apex::B, Apex::C][k];
        let (a, b, c) = match apex {
            Apex::A => (base, leg.clone(), leg),
            Apex::B => (leg.clone(), base, leg),
            Apex::C => (leg.clone(), leg, base),
        };
        Triangle::from_sides(a, b, c).ok().map(|t| (t, apex))
    })
}

fn triplet() -> impl Strategy<Value = Triplet> {
    (rational(-12, 12, 4), rational(-12, 12, 4), rational(-12, 12, 4)).prop_map(|(a, b, c)| Triplet::new(a, b, c))
}

fn discriminant() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(int(2)), Just(int(3)), Just(Rational::new(7.into(), 5.into())), Just(int(175)), Just(int(4)), Just(int(0))]
}

fn quad(d: Rational) -> impl Strategy<Value = QuadExt> {
    (rational(-30, 30, 7), rational(-30, 30, 7)).prop_map(move |(u, v)| QuadExt::new(u, v, d.clone()).unwrap())
}

fn quad_triple() -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
    discriminant().prop_flat_map(|d| (quad(d.clone()), quad(d.clone()), quad(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn quadext_field_laws((x, y, z) in quad_triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            let one = QuadExt::from_rational(Rational::one(), x.discriminant());
            prop_assert_eq!(&x * &x.recip().unwrap(), one);
        }
    }

    #[test]
    fn quadext_sign_matches_float((x, _, _) in quad_triple()) {
        let f = x.to_f64();
        if f.abs() > 1e-6 {
            prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn quadext_canonical_idempotent((x, _, _) in quad_triple()) {
        let again = QuadExt::new(x.u().clone(), x.v().clone(), x.discriminant().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        if conway::numerics::rational_sqrt(x.discriminant()).is_some() {
            prop_assert!(x.v().is_zero());
        }
    }

    #[test]
    fn embedding_reproduces_sides(t in triangle()) {
        let e = t.embed();
        let sq = |q: &Rational| e.rational(q * q);
        prop_assert_eq!(e.a.dist_sq(&e.b), sq(t.c()));
        prop_assert_eq!(e.a.dist_sq(&e.c), sq(t.b()));
        prop_assert_eq!(e.b.dist_sq(&e.c), sq(t.a()));
        prop_assert!(e.c.y.signum() > 0);
    }

    #[test]
    fn incenter_and_contact_points(t in triangle()) {
        let e = t.embed();
        let omega = e.to_cartesian(&t.incenter()).unwrap();
        let sides = [(&e.a, &e.b), (&e.b, &e.c), (&e.c, &e.a)];
        for (cp, (p, q)) in t.contact_points().iter().zip(sides) {
            let foot = e.to_cartesian(cp).unwrap();
            // foot lies on the side and Ω→foot is perpendicular to it
            prop_assert!(foot.sub(p).cross(&q.sub(p)).is_zero());
            prop_assert!(foot.sub(&omega).dot(&q.sub(p)).is_zero());
            prop_assert_eq!(foot.dist_sq(&omega), e.rational(t.r_sq().clone()));
        }
        let n = t.nagel().normalized().unwrap();
        prop_assert!(n.iter().all(|x| x.is_positive()));
        let p = t.p();
        prop_assert_eq!(p * t.r_sq(), (p - t.a()) * (p - t.b()) * (p - t.c()));
    }

    #[test]
    fn construction_is_consistent(t in triangle(), tr in triplet()) {
        let cfg = Configuration::new(&t, &tr);
        let e = cfg.embedding();
        for l in PointLabel::ALL {
            let (u, v) = l.anchors();
            let (u, v) = (BaryPoint::vertex(u), BaryPoint::vertex(v));
            prop_assert!(collinear(cfg.bary(l), &u, &v));
            prop_assert_eq!(&e.to_cartesian(cfg.bary(l)).unwrap(), cfg.cart(l));
        }
    }

    #[test]
    fn conway_identities(t in triangle()) {
        use PointLabel::*;
        let cfg = Configuration::new(&t, &Triplet::conway());
        let b = BaryPoint::vertex(Apex::B);
        let d = |p: &BaryPoint, q: &BaryPoint| bary_dist_sq(&t, p, q).unwrap();
        let ac = t.a() + t.c();
        prop_assert_eq!(d(&b, cfg.bary(APrime)), &ac * &ac);
        prop_assert_eq!(d(&b, cfg.bary(CDouble)), &ac * &ac);
        prop_assert!(cfg.hexagon_metrics().unwrap().diag_pairs_equal().iter().all(|&x| x));
        prop_assert!(cfg.signed_ratio(APrime).signum() < 0);
    }

    #[test]
    fn concyclic_symmetries(t in triangle(), alpha in rational(-6, 6, 5), k in 1i64..7, off in any::<bool>()) {
        let cfg = Configuration::new(&t, &theorems::family_triplet(&t, &alpha));
        let mut pts: Vec<BaryPoint> = Vec::new();
        for p in cfg.bary_points() {
            if !pts.contains(p) {
                pts.push(p.clone());
            }
        }
        prop_assume!(pts.len() >= 4);
        if off {
            pts[3] = t.nagel();
        }
        prop_assume!((0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j])));
        let base = concyclic(&t, [&pts[0], &pts[1], &pts[2], &pts[3]]).unwrap();
        prop_assert_eq!(concyclic(&t, [&pts[3], &pts[1], &pts[0], &pts[2]]).unwrap(), base);
        let scaled: Vec<BaryPoint> = pts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let s = int(k * (i as i64 + 1)) * if i % 2 == 0 { int(-1) } else { int(1) };
                let [x, y, z] = p.coords();
                BaryPoint::new(x * &s, y * &s, z * &s).unwrap()
            })
            .collect();
        prop_assert_eq!(concyclic(&t, [&scaled[0], &scaled[1], &scaled[2], &scaled[3]]).unwrap(), base);

        if !collinear(&pts[0], &pts[1], &pts[2]) {
            let c = circle_through(&t, &pts[0], &pts[1], &pts[2]).unwrap();
            prop_assert_eq!(c.contains(&t, &pts[3]), base);
            for p in &pts[..3] {
                prop_assert!(power_of_point(&t, p, &c).unwrap().is_zero());
            }
        }
        let cart: Vec<CartPoint> = pts[..4].iter().map(|p| cfg.embedding().to_cartesian(p).unwrap()).collect();
        prop_assert_eq!(cart_concyclic([&cart[0], &cart[1], &cart[2], &cart[3]]), base);
        if !off {
            prop_assert!(base);
        }

        let l1 = line_through(&pts[0], &pts[1]).unwrap();
        let l2 = line_through(&pts[2], &pts[3]).unwrap();
        if let Some(p) = l1.meet(&l2).filter(BaryPoint::is_finite) {
            prop_assert_eq!(feuerbach_check(&t, &p, &pts[0], &pts[1], &pts[2], &pts[3]).unwrap(), base);
        }
    }

    #[test]
    fn lines_and_meets(p in triplet(), q in triplet(), r in triplet()) {
        let pt = |t: &Triplet| BaryPoint::new(t.alpha.clone() + int(13), t.beta.clone(), t.gamma.clone());
        let (Ok(p), Ok(q), Ok(r)) = (pt(&p), pt(&q), pt(&r)) else { return Ok(()) };
        prop_assume!(p != q && q != r && p != r);
        let l = line_through(&p, &q).unwrap();
        prop_assert!(l.contains(&p) && l.contains(&q));
        let m = line_through(&q, &r).unwrap();
        if let Some(x) = l.meet(&m) {
            prop_assert!(l.contains(&x) && m.contains(&x));
        }
    }

    #[test]
    fn primitive_representative(x in rational(-20, 20, 6), y in rational(-20, 20, 6), z in rational(-20, 20, 6)) {
        let Ok(p) = BaryPoint::new(x, y, z) else { return Ok(()) };
        let [a, b, c] = p.primitive();
        let q = BaryPoint::new(Rational::from(a), Rational::from(b), Rational::from(c)).unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn distances_agree_with_cartesian(t in triangle(), tr in triplet()) {
        let cfg = Configuration::new(&t, &tr);
        let (p, q) = (cfg.bary(PointLabel::APrime), cfg.bary(PointLabel::CDouble));
        let d = bary_dist_sq(&t, p, q).unwrap();
        prop_assert_eq!(cfg.embedding().rational(d), cfg.cart(PointLabel::APrime).dist_sq(cfg.cart(PointLabel::CDouble)));
    }

    #[test]
    fn conway_circle_everywhere(t in triangle()) {
        let v = theorems::verify_family(&t, &Triplet::conway()).unwrap();
        prop_assert!(v.ok);
        prop_assert_eq!(v.radius_sq, Some(t.p() * t.p() + t.r_sq()));
    }

    #[test]
    fn family_sufficiency(t in triangle(), alpha in rational(-3, 3, 12)) {
        let tr = theorems::family_triplet(&t, &alpha);
        let v = theorems::verify_family(&t, &tr).unwrap();
        prop_assert!(v.ok);
        prop_assert_eq!(v.membership, Membership::InFamilyT { alpha: alpha.clone() });
        prop_assert_eq!(v.radius_sq, Some(theorems::family_radius_sq(&t, &alpha)));
        prop_assert_eq!(v.addendum, Some([true; 3]));

        // the float radius agrees
        let cfg = Configuration::new(&t, &tr);
        let omega = cartesian_incenter(&t, cfg.embedding()).to_f64();
        let p = cfg.cart(PointLabel::BPrime).to_f64();
        let approx = (p[0] - omega[0]).powi(2) + (p[1] - omega[1]).powi(2);
        let exact = to_f64(&theorems::family_radius_sq(&t, &alpha));
        prop_assert!((approx - exact).abs() <= 1e-9 * exact.abs().max(1.0));
    }

    #[test]
    fn family_necessity(t in scalene(), tr in triplet()) {
        prop_assume!(theorems::classify_triplet(&t, &tr) == Membership::NotSolution);
        let v = theorems::verify_family(&t, &tr).unwrap();
        prop_assert!(v.ok);
        prop_assert!(matches!(v.equidistance, Equidistance::Unequal(_)));
    }

    #[test]
    fn isosceles_extra_passes((t, apex) in isosceles()) {
        let tr = theorems::isosceles_extra(&t, apex);
        let v = theorems::verify_family(&t, &tr).unwrap();
        prop_assert!(v.ok);
        prop_assert!(v.membership.is_solution());
        prop_assert_eq!(v.radius_sq, Some(theorems::family_radius_sq(&t, &tr.alpha)));
    }

    #[test]
    fn dussau_nagel(t in scalene()) {
        prop_assert_eq!(theorems::dussau_point(&t).unwrap(), t.nagel());
    }

    #[test]
    fn anti_conway_circles(t in scalene()) {
        let r = theorems::anti_conway(&t).unwrap();
        let four_r2 = int(4) * t.r_sq();
        prop_assert!(r.nagel_powers.iter().all(|p| *p == four_r2));
        let cfg = Configuration::new(&t, &Triplet::anti_conway());
        for quad in theorems::ANTI_CONWAY_QUADRUPLES {
            let pts: Vec<CartPoint> = quad.iter().map(|&l| cfg.cart(l).clone()).collect();
            prop_assert!(matches!(brute_force_circle(&pts).unwrap(), CircleFit::Circle(_)));
        }
    }

    #[test]
    fn congruence_properties(t in scalene()) {
        let solved = solve_sigma(&t);
        prop_assert!(!solved.degenerate);
        let anti = Triplet::anti_conway();
        let others: Vec<&Triplet> = solved.triplets.iter().filter(|x| **x != anti).collect();
        match theorems::congruence(&t).unwrap() {
            CongruenceResult::Found(tr) => {
                prop_assert_eq!(theorems::sigma_residuals(&t, &tr), [int(0), int(0), int(0)]);
                prop_assert!(tr.components().iter().all(|x| !x.is_zero() && **x != int(-1)));
                prop_assert!(!tr.components().iter().all(|x| x.is_positive()));
                prop_assert!(theorems::lines_meet_at_nagel(&t, &tr).unwrap());
                prop_assert_eq!(others, vec![&tr]);
            }
            CongruenceResult::Excluded(reason) => {
                use ExclusionReason::*;
                match reason {
                    PEqualsTwoA | PEqualsTwoB | PEqualsTwoC => prop_assert!(others.is_empty()),
                    // a surviving solution puts C′ = C″ = C (or the analogue) and merges two lines
                    _ => prop_assert!(others.iter().all(|x| x.components().iter().any(|c| c.is_zero()))),
                }
            }
        }
    }
}

#[test]
fn excluded_by_square_condition_keeps_a_degenerate_solution() {
    let t = Triangle::from_int_sides(9, 8, 7).unwrap();
    let solved = solve_sigma(&t);
    let zero_gamma = Triplet::new(Rational::new((-4).into(), 9.into()), Rational::new((-3).into(), 8.into()), int(0));
    assert!(solved.triplets.contains(&zero_gamma));
    let lines = theorems::dussau_lines(&t, &zero_gamma).unwrap();
    assert_eq!(lines[0], lines[2]);
    assert!(lines.iter().all(|l| l.contains(&t.nagel())));
}

#[test]
fn excluded_triangles_from_each_class() {
    let cases = [
        ((3, 4, 5), ExclusionReason::PEqualsTwoA),
        ((4, 3, 5), ExclusionReason::PEqualsTwoB),
        ((4, 5, 3), ExclusionReason::PEqualsTwoC),
        ((9, 8, 7), ExclusionReason::PSquaredEqualsTwoAB),
        ((7, 9, 8), ExclusionReason::PSquaredEqualsTwoBC),
        ((8, 7, 9), ExclusionReason::PSquaredEqualsTwoCA),
    ];
    for ((a, b, c), reason) in cases {
        let t = Triangle::from_int_sides(a, b, c).unwrap();
        assert_eq!(theorems::congruence(&t).unwrap(), CongruenceResult::Excluded(reason), "{a} {b} {c}");
    }
}
