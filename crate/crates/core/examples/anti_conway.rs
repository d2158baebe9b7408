//! The three circles of the (−1,−1,−1) configuration and the Nagel point's power.
use conway::theorems::{anti_conway, ANTI_CONWAY_QUADRUPLES};
use conway::Triangle;

fn main() -> conway::Result<()> {
    for (a, b, c) in [(3, 4, 5), (4, 5, 6), (5, 6, 7), (7, 9, 12)] {
        let t = Triangle::from_int_sides(a, b, c)?;
        let report = anti_conway(&t)?;
        println!("triangle {t}: r² = {}", t.r_sq());
        for (quad, (circle, power)) in ANTI_CONWAY_QUADRUPLES.iter().zip(report.circles.iter().zip(&report.nagel_powers)) {
            let names: Vec<&str> = quad.iter().map(|l| l.pretty()).collect();
            println!(
                "  {{{}}}: u, v, w = {}, power of the Nagel point = {power}",
                names.join(", "),
                circle.to_strings().join(", ")
            );
        }
        println!("  common power 4r² = {}", report.expected_power);
    }
    Ok(())
}
