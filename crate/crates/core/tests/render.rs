use conway::cli::{run, EXIT_DOMAIN, EXIT_OK};
use conway::render::{render_svg, RenderOptions};
use conway::{Configuration, FloatPolicy, Triangle, Triplet};

fn attr(el: &str, name: &str) -> f64 {
    let key = format!(" {name}=\"");
    let start = el.find(&key).unwrap() + key.len();
    let end = start + el[start..].find('"').unwrap();
    el[start..end].parse().unwrap()
}

fn elements<'a>(svg: &'a str, tag: &str) -> Vec<&'a str> {
    svg.lines().filter(|l| l.trim_start().starts_with(&format!("<{tag} "))).collect()
}

#[test]
fn conway_figure_has_one_circle_of_radius_sq_37() {
    let t = Triangle::from_int_sides(3, 4, 5).unwrap();
    let cfg = Configuration::new(&t, &Triplet::conway());
    let svg = render_svg(&cfg, &RenderOptions { incenter_circle: true, ..Default::default() }).unwrap();
    let circles = elements(&svg, "circle");
    assert_eq!(circles.len(), 1);
    let r = attr(circles[0], "r");
    assert!(FloatPolicy::default().close(r * r, 37.0), "{r}");
    // center at the incenter (3, 1), drawn with y flipped
    assert!(FloatPolicy::default().close(attr(circles[0], "cx"), 3.0));
    assert!(FloatPolicy::default().close(attr(circles[0], "cy"), -1.0));
}

#[test]
fn dussau_lines_meet_at_the_nagel_image() {
    let t = Triangle::from_int_sides(4, 5, 6).unwrap();
    let cfg = Configuration::new(&t, &Triplet::anti_conway());
    let opts = RenderOptions { dussau_lines: true, anti_conway_circles: true, ..Default::default() };
    let svg = render_svg(&cfg, &opts).unwrap();
    let lines: Vec<[f64; 4]> = elements(&svg, "line")
        .into_iter()
        .filter(|l| l.contains("class=\"dussau\""))
        .map(|l| [attr(l, "x1"), attr(l, "y1"), attr(l, "x2"), attr(l, "y2")])
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(elements(&svg, "circle").len(), 3);
    let meet = |p: [f64; 4], q: [f64; 4]| {
        let (dx1, dy1, dx2, dy2) = (p[2] - p[0], p[3] - p[1], q[2] - q[0], q[3] - q[1]);
        let den = dx1 * dy2 - dy1 * dx2;
        let s = ((q[0] - p[0]) * dy2 - (q[1] - p[1]) * dx2) / den;
        [p[0] + s * dx1, p[1] + s * dy1]
    };
    let n = cfg.embedding().to_cartesian(&t.nagel()).unwrap().to_f64();
    let image = [n[0], -n[1]];
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let m = meet(lines[i], lines[j]);
        assert!((m[0] - image[0]).abs() < 1e-6 && (m[1] - image[1]).abs() < 1e-6, "{m:?} vs {image:?}");
    }
}

#[test]
fn numbers_have_at_most_12_significant_digits() {
    let t = Triangle::from_int_sides(5, 7, 9).unwrap();
    let cfg = Configuration::new(&t, &Triplet::anti_conway());
    let svg = render_svg(&cfg, &RenderOptions { anti_conway_circles: true, ..Default::default() }).unwrap();
    for token in svg.split(|c: char| c == '"' || c == ' ' || c == ',') {
        if let Ok(x) = token.parse::<f64>() {
            let digits = token.trim_start_matches('-').replace('.', "");
            let significant = digits.trim_start_matches('0');
            assert!(significant.len() <= 12, "{token} ({x})");
        }
    }
}

#[test]
fn viewbox_covers_everything_with_margin() {
    let t = Triangle::from_int_sides(4, 5, 6).unwrap();
    let cfg = Configuration::new(&t, &Triplet::conway());
    let svg = render_svg(&cfg, &RenderOptions { incenter_circle: true, ..Default::default() }).unwrap();
    let vb = svg.split("viewBox=\"").nth(1).unwrap().split('"').next().unwrap();
    let v: Vec<f64> = vb.split(' ').map(|s| s.parse().unwrap()).collect();
    let c = elements(&svg, "circle")[0];
    let (cx, cy, r) = (attr(c, "cx"), attr(c, "cy"), attr(c, "r"));
    // the circle is the outermost element: its box plus 5% on each side
    let tol = 1e-9;
    assert!((v[0] - (cx - r - 0.05 * 2.0 * r)).abs() < tol);
    assert!((v[1] - (cy - r - 0.05 * 2.0 * r)).abs() < tol);
    assert!((v[2] - 2.2 * r).abs() < tol && (v[3] - 2.2 * r).abs() < tol);
}

#[test]
fn render_command_writes_deterministic_files() {
    let dir = std::env::temp_dir().join(format!("conway-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = |n: &str| dir.join(n).to_str().unwrap().to_string();
    let args = |out: &str| {
        vec![
            "conway".to_string(), "render".into(), "--sides".into(), "4".into(), "5".into(), "6".into(),
            "--triplet".into(), "-1".into(), "-1".into(), "-1".into(), "--lines".into(), "--anti-conway".into(),
            "--out".into(), out.to_string(),
        ]
    };
    let (mut o, mut e) = (Vec::new(), Vec::new());
    assert_eq!(run(args(&path("a.svg")), &mut o, &mut e), EXIT_OK);
    assert_eq!(run(args(&path("b.svg")), &mut o, &mut e), EXIT_OK);
    assert_eq!(std::fs::read(path("a.svg")).unwrap(), std::fs::read(path("b.svg")).unwrap());

    let mut bad = args(&path("inf.svg"));
    bad.extend(["--point".to_string(), "1".into(), "-1".into(), "0".into()]);
    let mut err = Vec::new();
    assert_eq!(run(bad, &mut o, &mut err), EXIT_DOMAIN);
    assert!(String::from_utf8(err).unwrap().contains("PointAtInfinity"));
    assert!(!dir.join("inf.svg").exists());
    std::fs::remove_dir_all(&dir).unwrap();
}
