//! SVG figures of a configuration.
//!
//! Coordinates come from the canonical embedding (A at the origin, B on the
//! positive x-axis, C above it) converted to `f64` and flipped to the SVG
//! y-down convention. Numbers are printed with 12 significant digits and
//! elements are emitted in a fixed order, so equal inputs give equal bytes.

use std::fmt::Write as _;

use crate::configuration::{Configuration, PointLabel};
use crate::error::{GeometryError, Result};
use crate::numerics::to_f64;
use crate::predicates::{concurrent, equidistant_from, Concurrency};
use crate::theorems::{self, ANTI_CONWAY_QUADRUPLES};
use crate::triangle::{Apex, BaryPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    /// Circle about the incenter through the six points.
    pub incenter_circle: bool,
    /// Circles through `{A′,A″,B′,C″}`, `{B′,B″,C′,A″}`, `{C′,C″,A′,B″}`.
    pub anti_conway_circles: bool,
    /// Lines `A′C″`, `B′A″`, `C′B″`, extended to their common point.
    pub dussau_lines: bool,
    pub labels: bool,
    /// Additional labelled points.
    pub extra_points: Vec<(String, BaryPoint)>,
    /// Width of the SVG viewport in pixels.
    pub width: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            incenter_circle: false,
            anti_conway_circles: false,
            dussau_lines: false,
            labels: true,
            extra_points: Vec::new(),
            width: 800,
        }
    }
}

/// Formats with 12 significant digits, trailing zeros removed.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

#[derive(Default)]
struct Bounds {
    min: [f64; 2],
    max: [f64; 2],
    empty: bool,
}

impl Bounds {
    fn new() -> Self {
        Bounds { min: [0.0; 2], max: [0.0; 2], empty: true }
    }

    fn add(&mut self, p: [f64; 2]) {
        if self.empty {
            self.min = p;
            self.max = p;
            self.empty = false;
        } else {
            for i in 0..2 {
                self.min[i] = self.min[i].min(p[i]);
                self.max[i] = self.max[i].max(p[i]);
            }
        }
    }
}

/// Screen position: y flipped.
fn scr(p: [f64; 2]) -> [f64; 2] {
    [p[0], -p[1]]
}

fn fcircle(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> Option<([f64; 2], f64)> {
    let (ux, uy) = (q[0] - p[0], q[1] - p[1]);
    let (vx, vy) = (r[0] - p[0], r[1] - p[1]);
    let det = 2.0 * (ux * vy - uy * vx);
    if det == 0.0 {
        return None;
    }
    let (nu, nv) = (ux * ux + uy * uy, vx * vx + vy * vy);
    let cx = (nu * vy - uy * nv) / det;
    let cy = (ux * nv - nu * vx) / det;
    Some(([p[0] + cx, p[1] + cy], (cx * cx + cy * cy).sqrt()))
}

struct Circle {
    class: &'static str,
    center: [f64; 2],
    r: f64,
}

struct Segment {
    class: &'static str,
    from: [f64; 2],
    to: [f64; 2],
}

/// Renders the configuration as a standalone SVG document.
pub fn render_svg(cfg: &Configuration, opts: &RenderOptions) -> Result<String> {
    let t = cfg.triangle();
    let e = cfg.embedding();
    let vertices = [Apex::A, Apex::B, Apex::C].map(|v| e.vertex(v).to_f64());
    let points = cfg.cart_points().clone().map(|p| p.to_f64());

    let mut extras = Vec::with_capacity(opts.extra_points.len());
    for (name, p) in &opts.extra_points {
        if !p.is_finite() {
            return Err(GeometryError::PointAtInfinity);
        }
        extras.push((name.as_str(), e.to_cartesian(p)?.to_f64()));
    }

    let mut circles = Vec::new();
    if opts.incenter_circle {
        let pts: Vec<&BaryPoint> = cfg.bary_points().iter().collect();
        let eq = equidistant_from(t, &t.incenter(), &pts)?;
        let r_sq = eq.common_sq().ok_or_else(|| {
            GeometryError::PreconditionViolated("the six points are not equidistant from the incenter".into())
        })?;
        circles.push(Circle {
            class: "incenter-circle",
            center: e.to_cartesian(&t.incenter())?.to_f64(),
            r: to_f64(r_sq).sqrt(),
        });
    }
    if opts.anti_conway_circles {
        for quad in ANTI_CONWAY_QUADRUPLES {
            let [p, q, r] = [quad[0], quad[1], quad[2]].map(|l| points[l.index()]);
            let (center, r) = fcircle(p, q, r).ok_or(GeometryError::CollinearPoints)?;
            circles.push(Circle { class: "anti-conway", center, r });
        }
    }

    let mut segments = Vec::new();
    if opts.dussau_lines {
        let lines = theorems::dussau_lines(t, cfg.triplet())?;
        let meet = match concurrent(&lines[0], &lines[1], &lines[2]) {
            Ok(Concurrency::Concurrent(p)) => Some(e.to_cartesian(&p)?.to_f64()),
            _ => None,
        };
        use PointLabel::*;
        for (p, q) in [(APrime, CDouble), (BPrime, ADouble), (CPrime, BDouble)] {
            let (p, q) = (points[p.index()], points[q.index()]);
            let dir = [q[0] - p[0], q[1] - p[1]];
            let len2 = dir[0] * dir[0] + dir[1] * dir[1];
            // parameters along p + s·dir of everything the segment must cover
            let mut lo: f64 = 0.0;
            let mut hi: f64 = 1.0;
            if let Some(m) = meet {
                let s = ((m[0] - p[0]) * dir[0] + (m[1] - p[1]) * dir[1]) / len2;
                lo = lo.min(s);
                hi = hi.max(s);
            }
            let pad = 0.1 * (hi - lo);
            let at = |s: f64| [p[0] + s * dir[0], p[1] + s * dir[1]];
            segments.push(Segment { class: "dussau", from: at(lo - pad), to: at(hi + pad) });
        }
    }

    let mut bounds = Bounds::new();
    for p in vertices.iter().chain(points.iter()).chain(extras.iter().map(|(_, p)| p)) {
        bounds.add(scr(*p));
    }
    for c in &circles {
        let s = scr(c.center);
        bounds.add([s[0] - c.r, s[1] - c.r]);
        bounds.add([s[0] + c.r, s[1] + c.r]);
    }
    for s in &segments {
        bounds.add(scr(s.from));
        bounds.add(scr(s.to));
    }
    let w = (bounds.max[0] - bounds.min[0]).max(f64::EPSILON);
    let h = (bounds.max[1] - bounds.min[1]).max(f64::EPSILON);
    let (mx, my) = (0.05 * w, 0.05 * h);
    let view = [bounds.min[0] - mx, bounds.min[1] - my, w + 2.0 * mx, h + 2.0 * my];
    let size = view[2].max(view[3]);
    let stroke = fmt_num(0.003 * size);
    let dot = 0.006 * size;
    let font = 0.03 * size;
    let height = (opts.width as f64 * view[3] / view[2]).round().max(1.0) as u32;

    let mut out = String::new();
    let pt = |p: [f64; 2]| {
        let s = scr(p);
        (fmt_num(s[0]), fmt_num(s[1]))
    };
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        fmt_num(view[0]),
        fmt_num(view[1]),
        fmt_num(view[2]),
        fmt_num(view[3]),
        opts.width,
        height
    );
    let _ = writeln!(out, "<title>sides ({}), triplet {}</title>", t.side_strings().join(", "), cfg.triplet());
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke-width="{stroke}" font-family="serif" font-size="{}">"#,
        fmt_num(font)
    );

    let poly: Vec<String> = vertices.iter().map(|&v| {
        let (x, y) = pt(v);
        format!("{x},{y}")
    }).collect();
    let _ = writeln!(out, r#"<polygon class="triangle" stroke="black" points="{}"/>"#, poly.join(" "));
    // side lines carry the six points, which may lie outside the triangle
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 0)] {
        let on_side: Vec<[f64; 2]> = PointLabel::ALL
            .iter()
            .filter(|l| {
                let (u, v) = l.anchors();
                let k = |a: Apex| a as usize;
                (k(u), k(v)) == (i, j) || (k(u), k(v)) == (j, i)
            })
            .map(|l| points[l.index()])
            .chain([vertices[i], vertices[j]])
            .collect();
        let dir = [vertices[j][0] - vertices[i][0], vertices[j][1] - vertices[i][1]];
        let len2 = dir[0] * dir[0] + dir[1] * dir[1];
        let params = on_side
            .iter()
            .map(|p| ((p[0] - vertices[i][0]) * dir[0] + (p[1] - vertices[i][1]) * dir[1]) / len2);
        let (lo, hi) = params.fold((0.0f64, 1.0f64), |(lo, hi), s| (lo.min(s), hi.max(s)));
        if lo < 0.0 || hi > 1.0 {
            let at = |s: f64| [vertices[i][0] + s * dir[0], vertices[i][1] + s * dir[1]];
            let ((x1, y1), (x2, y2)) = (pt(at(lo)), pt(at(hi)));
            let _ = writeln!(
                out,
                r#"<line class="side-line" stroke="gray" stroke-dasharray="{} {}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#,
                fmt_num(4.0 * dot),
                fmt_num(2.0 * dot)
            );
        }
    }
    for c in &circles {
        let (cx, cy) = pt(c.center);
        let color = if c.class == "anti-conway" { "darkred" } else { "navy" };
        let _ = writeln!(
            out,
            r#"<circle class="{}" stroke="{color}" cx="{cx}" cy="{cy}" r="{}"/>"#,
            c.class,
            fmt_num(c.r)
        );
    }
    for s in &segments {
        let ((x1, y1), (x2, y2)) = (pt(s.from), pt(s.to));
        let _ = writeln!(
            out,
            r#"<line class="{}" stroke="darkgreen" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#,
            s.class
        );
    }
    let _ = writeln!(out, "</g>");

    // points are drawn as paths so that <circle> only ever means a circle of the figure
    let _ = writeln!(out, r#"<g stroke="none" font-family="serif" font-size="{}">"#, fmt_num(font));
    let mut marks: Vec<(&str, [f64; 2])> = ["A", "B", "C"].into_iter().zip(vertices).collect();
    marks.extend(PointLabel::ALL.iter().map(|l| (l.pretty(), points[l.index()])));
    marks.extend(extras.iter().map(|(n, p)| (*n, *p)));
    for (name, p) in marks {
        let (x, y) = pt(p);
        let r = fmt_num(dot);
        let d = fmt_num(2.0 * dot);
        let _ = writeln!(
            out,
            r#"<path class="point" fill="black" d="M {x} {y} m -{r} 0 a {r} {r} 0 1 0 {d} 0 a {r} {r} 0 1 0 -{d} 0"/>"#
        );
        if opts.labels {
            let s = scr(p);
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}">{name}</text>"#,
                fmt_num(s[0] + 0.8 * dot),
                fmt_num(s[1] - 0.8 * dot)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
