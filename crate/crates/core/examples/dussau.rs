//! Lines A′C″, B′A″, C′B″ of the (−1,−1,−1) configuration meet at the Nagel point.
use conway::predicates::concurrent;
use conway::theorems::{dussau_lines, dussau_point};
use conway::{Triangle, Triplet};

fn main() -> conway::Result<()> {
    for (a, b, c) in [(4, 5, 6), (3, 4, 5), (5, 7, 9), (13, 14, 15)] {
        let t = Triangle::from_int_sides(a, b, c)?;
        let lines = dussau_lines(&t, &Triplet::anti_conway())?;
        println!("triangle {t}");
        for (name, l) in ["A′C″", "B′A″", "C′B″"].iter().zip(&lines) {
            println!("  ({name}): [{}]", l.to_strings().join(", "));
        }
        println!("  {}", concurrent(&lines[0], &lines[1], &lines[2])?);
        println!("  meet at {}, Nagel point {}", dussau_point(&t)?, t.nagel());
    }
    match dussau_point(&Triangle::from_int_sides(3, 3, 4)?) {
        Err(e) => println!("isosceles (3, 3, 4): {e}"),
        Ok(p) => println!("isosceles (3, 3, 4): {p}"),
    }
    Ok(())
}
