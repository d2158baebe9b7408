//! The other triplet whose three lines still pass through the Nagel point.
use conway::oracle::solve_sigma;
use conway::theorems::{congruence, e3prime_roots, lines_meet_at_nagel, sigma_residuals, CongruenceResult};
use conway::Triangle;

fn main() -> conway::Result<()> {
    for (a, b, c) in [(4, 5, 6), (5, 6, 7), (5, 7, 9), (3, 4, 5), (9, 8, 7), (4, 5, 3)] {
        let t = Triangle::from_int_sides(a, b, c)?;
        let e = e3prime_roots(&t);
        let [x, y, z] = &e.coefficients;
        println!("triangle {t}, p = {}", t.p());
        println!("  γ equation: ({x})γ² + ({y})γ + ({z}) = 0, roots {:?}", e.roots.iter().map(ToString::to_string).collect::<Vec<_>>());
        match congruence(&t)? {
            CongruenceResult::Found(tr) => {
                println!("  congruent triplet {tr}");
                println!("  residuals {:?}", sigma_residuals(&t, &tr).map(|r| r.to_string()));
                println!("  lines meet at the Nagel point: {}", lines_meet_at_nagel(&t, &tr)?);
            }
            CongruenceResult::Excluded(reason) => println!("  excluded: {reason}"),
        }
        let solved = solve_sigma(&t);
        let all: Vec<String> = solved.triplets.iter().map(ToString::to_string).collect();
        println!("  solutions by elimination: {}", all.join(", "));
    }
    Ok(())
}
