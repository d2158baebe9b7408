//! Writes SVG figures; `cargo run --example render_figure -- OUT_DIR`.
use std::path::PathBuf;

use conway::numerics::rat;
use conway::render::{render_svg, RenderOptions};
use conway::theorems::family_triplet;
use conway::{Configuration, Triangle, Triplet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    let t = Triangle::from_int_sides(4, 5, 6)?;
    let circle = RenderOptions { incenter_circle: true, ..Default::default() };
    let figures = [
        ("conway.svg", Triplet::conway(), circle.clone()),
        ("family_half.svg", family_triplet(&t, &rat(-1, 2)), circle),
        (
            "anti_conway.svg",
            Triplet::anti_conway(),
            RenderOptions { anti_conway_circles: true, dussau_lines: true, ..Default::default() },
        ),
    ];
    for (name, tr, opts) in figures {
        let svg = render_svg(&Configuration::new(&t, &tr), &opts)?;
        let path = dir.join(name);
        std::fs::write(&path, svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
