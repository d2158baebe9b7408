//! Exact lines, circles, powers and the Feuerbach criterion in barycentrics.
use conway::predicates::{
    bary_dist_sq, circle_through, concyclic, feuerbach_products, line_through, power_of_point, BaryCircle,
};
use conway::{BaryPoint, Configuration, PointLabel::*, Triangle, Triplet};

fn main() -> conway::Result<()> {
    let t = Triangle::from_int_sides(4, 5, 6)?;
    let pt = |x, y, z| BaryPoint::from_ints(x, y, z).unwrap();

    let l = line_through(&pt(1, 0, 0), &pt(0, 1, 1))?;
    println!("median from A: {:?}", l.to_strings());
    println!("|AB|² = {}", bary_dist_sq(&t, &pt(1, 0, 0), &pt(0, 1, 0))?);

    let circum = BaryCircle::circumcircle();
    println!("power of the Nagel point w.r.t. the circumcircle: {}", power_of_point(&t, &t.nagel(), &circum)?);

    let cfg = Configuration::new(&t, &Triplet::conway());
    let [p, q, r, s] = [APrime, BDouble, CPrime, ADouble].map(|l| cfg.bary(l));
    println!("A′, B″, C′, A″ concyclic: {}", concyclic(&t, [p, q, r, s])?);
    let circle = circle_through(&t, p, q, r)?;
    println!("circle through A′, B″, C′: {:?}", circle.to_strings());
    println!("power of the incenter: {} (= −R² = −{})", power_of_point(&t, &t.incenter(), &circle)?, t.p() * t.p() + t.r_sq());

    // A′, B″ lie on AB and A″, C′ on AC, so the secants meet at A
    let a = pt(1, 0, 0);
    let (lhs, rhs) = feuerbach_products(&t, &a, cfg.bary(APrime), cfg.bary(BDouble), cfg.bary(ADouble), cfg.bary(CPrime))?;
    println!("AA′·AB″ = {lhs}, AA″·AC′ = {rhs}");
    let (lhs, rhs) = feuerbach_products(&t, &a, cfg.bary(APrime), &pt(0, 1, 0), cfg.bary(ADouble), &pt(0, 0, 1))?;
    println!("AA′·AB = {lhs}, AA″·AC = {rhs}: A′, B, A″, C are not concyclic");
    Ok(())
}
