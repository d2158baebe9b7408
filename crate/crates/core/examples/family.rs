//! Triplets keeping the six points on a circle about the incenter.
use conway::numerics::{int, rat};
use conway::theorems::{classify_triplet, family_radius_sq, family_triplet, inscribed_alpha, isosceles_extra, verify_family};
use conway::{Apex, Triangle, Triplet};

fn main() -> conway::Result<()> {
    let t = Triangle::from_int_sides(4, 5, 6)?;
    println!("triangle {t}");
    for alpha in [int(-2), rat(-1, 2), int(0), int(1), rat(3, 2), inscribed_alpha(&t)] {
        let tr = family_triplet(&t, &alpha);
        let v = verify_family(&t, &tr)?;
        println!(
            "  α = {alpha:>5}: {tr}  R² = {} (formula {}), contact quadruples concyclic: {:?}",
            v.radius_sq.unwrap(),
            family_radius_sq(&t, &alpha),
            v.addendum.unwrap()
        );
    }
    println!("  inscribed α = 1 − p/a = {} gives the incircle, r² = {}", inscribed_alpha(&t), t.r_sq());

    let off = Triplet::new(int(1), int(1), int(2));
    println!("  {off}: {}", classify_triplet(&t, &off));

    let iso = Triangle::from_int_sides(3, 3, 4)?;
    let extra = isosceles_extra(&iso, Apex::C);
    let v = verify_family(&iso, &extra)?;
    println!("isosceles {iso}: {extra} -> {}, R² = {}", v.membership, v.radius_sq.unwrap());

    let eq = Triangle::from_int_sides(2, 2, 2)?;
    for apex in [Apex::A, Apex::B, Apex::C] {
        let tr = isosceles_extra(&eq, apex);
        println!("equilateral {eq}: {tr} -> {}", classify_triplet(&eq, &tr));
    }
    Ok(())
}
