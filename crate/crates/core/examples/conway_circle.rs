//! The six (1,1,1) points of a few triangles and their circle about the incenter.
use conway::oracle::{brute_force_circle, cartesian_incenter, CircleFit};
use conway::theorems::conway_circle;
use conway::{parse_rational, Configuration, Triangle, Triplet};

fn main() -> conway::Result<()> {
    for sides in [["3", "4", "5"], ["4", "5", "6"], ["2", "2", "2"], ["7/2", "3", "1.5"]] {
        let [a, b, c] = sides.map(|s| parse_rational(s).unwrap());
        let t = Triangle::from_sides(a, b, c)?;
        let cfg = Configuration::new(&t, &Triplet::conway());
        let circle = conway_circle(&t);
        println!("triangle {t}: p = {}, r² = {}", t.p(), t.r_sq());
        println!("  Conway circle: center {} (incenter), R² = p² + r² = {}", circle.center, circle.radius_sq);
        for (label, p) in conway::PointLabel::ALL.iter().zip(cfg.bary_points()) {
            println!("  {:<3} {p}", label.pretty());
        }

        // same circle, fitted in Cartesian coordinates
        if let CircleFit::Circle(fit) = brute_force_circle(cfg.cart_points())? {
            assert_eq!(fit.center, cartesian_incenter(&t, cfg.embedding()));
            println!("  Cartesian fit: R² = {}", fit.radius_sq);
        }
        let m = cfg.hexagon_metrics()?;
        println!(
            "  hexagon diagonals² = {}, {}, {} (4p² = {}), opposite sides parallel: {:?}",
            m.diag_main_sq[0],
            m.diag_main_sq[1],
            m.diag_main_sq[2],
            conway::numerics::int(4) * t.p() * t.p(),
            m.opposite_sides_parallel
        );
    }
    Ok(())
}
