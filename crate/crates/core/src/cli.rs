//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error, 3 on a domain error (the error name is printed).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::configuration::{Configuration, Triplet, VerticesJson};
use crate::error::GeometryError;
use crate::numerics::{parse_rational, rational_strings, Rational};
use crate::oracle::{run_suite, Check, SampleSpec, ShapeFilter};
use crate::predicates::{concurrent, equidistant_from, Concurrency};
use crate::render::{render_svg, RenderOptions};
use crate::theorems::{self, CongruenceResult};
use crate::triangle::{BaryPoint, Triangle, TriangleSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "conway", version, about = "Exact Conway-circle configurations of rational triangles")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SidesArg {
    /// Side lengths a = BC, b = CA, c = AB as integers, n/d or decimals.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true, required = true)]
    sides: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triangle data: semiperimeter, inradius, centers, Conway circle.
    Info(SidesArg),
    /// The six points of a triangle and triplet.
    Construct {
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true,
              required_unless_present = "from_json", conflicts_with = "from_json")]
        sides: Option<Vec<String>>,
        #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], allow_hyphen_values = true,
              required_unless_present = "from_json")]
        triplet: Option<Vec<String>>,
        /// Rebuild from the JSON printed by an earlier `construct`.
        #[arg(long, value_name = "FILE")]
        from_json: Option<PathBuf>,
    },
    /// Family member for α, or classification of a given triplet.
    Family {
        #[command(flatten)]
        sides: SidesArg,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "triplet", conflicts_with = "triplet")]
        alpha: Option<String>,
        #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], allow_hyphen_values = true)]
        triplet: Option<Vec<String>>,
    },
    /// The other triplet whose lines meet at the Nagel point.
    Congruence(SidesArg),
    /// Concurrency and power results for the triplet (−1, −1, −1).
    Dussau(SidesArg),
    /// Randomized verification of every theorem.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        min_side: u64,
        #[arg(long, default_value_t = 20)]
        max_side: u64,
        #[arg(long, default_value_t = 8)]
        denominator: u64,
        /// any, scalene, isosceles or equilateral.
        #[arg(long, default_value = "any")]
        shape: String,
        #[arg(long)]
        avoid_exclusions: bool,
    },
    /// Write an SVG figure.
    Render {
        #[command(flatten)]
        sides: SidesArg,
        #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], allow_hyphen_values = true, required = true)]
        triplet: Vec<String>,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Circle about the incenter through the six points.
        #[arg(long)]
        circle: bool,
        /// The three circles of the (−1, −1, −1) configuration.
        #[arg(long)]
        anti_conway: bool,
        /// The lines A′C″, B′A″, C′B″.
        #[arg(long)]
        lines: bool,
        #[arg(long)]
        no_labels: bool,
        /// Extra point as barycentric coordinates x y z.
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_hyphen_values = true)]
        point: Option<Vec<String>>,
    },
}

enum Failure {
    Usage(String),
    Domain(GeometryError),
    Verify(String),
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<Output, Failure>;

struct Output {
    json: Value,
    text: String,
    /// Verification result carried by the output itself.
    passed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, passed: true }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn rationals(flag: &str, vals: &[String]) -> std::result::Result<Vec<Rational>, Failure> {
    vals.iter()
        .map(|v| parse_rational(v).map_err(|e| Failure::Usage(format!("invalid value '{v}' for '--{flag}': {e}"))))
        .collect()
}

fn triangle(vals: &[String]) -> std::result::Result<Triangle, Failure> {
    let [a, b, c]: [Rational; 3] = rationals("sides", vals)?.try_into().expect("three values");
    Ok(Triangle::from_sides(a, b, c)?)
}

fn triplet(flag: &str, vals: &[String]) -> std::result::Result<Triplet, Failure> {
    let [a, b, c]: [Rational; 3] = rationals(flag, vals)?.try_into().expect("three values");
    Ok(Triplet::new(a, b, c))
}

const TRIPLE_FLAGS: [&str; 3] = ["--sides", "--triplet", "--point"];

/// Three-value flags accept leading hyphens (negative rationals), which would
/// let them swallow a following option; reject short lists up front.
fn short_value_list(args: &[String]) -> Option<String> {
    for (i, a) in args.iter().enumerate() {
        if TRIPLE_FLAGS.contains(&a.as_str()) {
            let n = args[i + 1..].iter().take(3).take_while(|t| !t.starts_with("--")).count();
            if n < 3 {
                return Some(format!("'{a}' expects 3 values, found {n}"));
            }
        }
    }
    None
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let texts: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    if let Some(m) = short_value_list(&texts) {
        let _ = writeln!(err, "error: {m}");
        return EXIT_USAGE;
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{e}");
                    if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand { EXIT_USAGE } else { EXIT_OK }
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            if cli.text {
                let _ = write!(out, "{}", o.text);
            } else {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json"));
            }
            if o.passed { EXIT_OK } else { EXIT_VERIFY_FAILED }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Domain(GeometryError::TheoremViolated(m))) => {
            let _ = writeln!(err, "verification failed: {m}");
            EXIT_VERIFY_FAILED
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_DOMAIN
        }
        Err(Failure::Verify(m)) => {
            let _ = writeln!(err, "verification failed: {m}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Info(s) => info(&triangle(&s.sides)?),
        Command::Construct { sides, triplet: tr, from_json } => match from_json {
            Some(path) => construct_from_json(path),
            None => {
                let t = triangle(sides.as_deref().expect("clap enforces --sides"))?;
                let tr = triplet("triplet", tr.as_deref().expect("clap enforces --triplet"))?;
                construct(&t, &tr)
            }
        },
        Command::Family { sides, alpha, triplet: tr } => {
            let t = triangle(&sides.sides)?;
            match (alpha, tr) {
                (Some(a), _) => {
                    let a = rationals("alpha", std::slice::from_ref(a))?.remove(0);
                    family(&t, &theorems::family_triplet(&t, &a))
                }
                (None, Some(tr)) => family(&t, &triplet("triplet", tr)?),
                (None, None) => Err(Failure::Usage("family needs --alpha or --triplet".into())),
            }
        }
        Command::Congruence(s) => congruence(&triangle(&s.sides)?),
        Command::Dussau(s) => dussau(&triangle(&s.sides)?),
        Command::Verify { seed, count, checks, min_side, max_side, denominator, shape, avoid_exclusions } => {
            let checks = Check::parse_list(checks).map_err(|e| Failure::Usage(format!("--checks: {e}")))?;
            let shape: ShapeFilter = shape.parse().map_err(|e| Failure::Usage(format!("--shape: {e}")))?;
            let spec = SampleSpec {
                seed: *seed,
                count: *count,
                side_range: (*min_side, *max_side),
                denominator_bound: *denominator,
                shape_filter: shape,
                avoid_exclusions: *avoid_exclusions,
            };
            spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let report = run_suite(&spec, &checks)?;
            let mut text = format!("{} trials, {} failures\n", report.trials, report.failures.len());
            for f in &report.failures {
                text += &format!(
                    "trial {} sides ({}) {}: expected {}, got {}\n",
                    f.trial,
                    f.triangle.join(", "),
                    f.check,
                    f.expected,
                    f.actual
                );
            }
            Ok(Output { json: to_value(&report), text, passed: report.passed() })
        }
        Command::Render { sides, triplet: tr, out, circle, anti_conway, lines, no_labels, point } => {
            let t = triangle(&sides.sides)?;
            let tr = triplet("triplet", tr)?;
            let mut extra_points = Vec::new();
            if let Some(p) = point {
                let [x, y, z]: [Rational; 3] = rationals("point", p)?.try_into().expect("three values");
                extra_points.push(("P".to_string(), BaryPoint::new(x, y, z)?));
            }
            let opts = RenderOptions {
                incenter_circle: *circle,
                anti_conway_circles: *anti_conway,
                dussau_lines: *lines,
                labels: !no_labels,
                extra_points,
                ..RenderOptions::default()
            };
            let svg = render_svg(&Configuration::new(&t, &tr), &opts)?;
            std::fs::write(out, svg).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
            let path = out.display().to_string();
            Ok(Output::ok(json!({ "written": path }), format!("wrote {path}\n")))
        }
    }
}

fn info(t: &Triangle) -> Outcome {
    let circle = theorems::conway_circle(t);
    let mut json = json!({
        "triangle": TriangleSummary::from(t),
        "conway_circle": circle,
        "inscribed_alpha": theorems::inscribed_alpha(t).to_string(),
    });
    let mut text = format!(
        "sides {}\np = {}, r² = {}, shape {:?}\nincenter {}, Nagel point {}\nConway circle r² = {}\n",
        t,
        t.p(),
        t.r_sq(),
        t.shape(),
        t.incenter(),
        t.nagel(),
        circle.radius_sq
    );
    if t.is_scalene() {
        let exclusion = theorems::exclusion(t).map(|r| r.to_string());
        json["exclusion"] = json!(exclusion);
        text += &format!("exclusion: {}\n", exclusion.as_deref().unwrap_or("none"));
    }
    Ok(Output::ok(json, text))
}

fn construct(t: &Triangle, tr: &Triplet) -> Outcome {
    let cfg = Configuration::new(t, tr);
    let pts: Vec<&BaryPoint> = cfg.bary_points().iter().collect();
    let eq = equidistant_from(t, &t.incenter(), &pts)?;
    let circle = eq.common_sq().map(|r| {
        json!({
            "center": t.incenter().to_strings().expect("incenter is finite"),
            "radius_sq": r.to_string(),
        })
    });
    let mut json = to_value(&cfg.to_json());
    json["circle"] = json!(circle);
    json["membership"] = to_value(&theorems::classify_triplet(t, tr));
    json["hexagon"] = to_value(&cfg.hexagon_metrics()?);

    let mut text = format!("sides {t}, triplet {tr}\n");
    for (label, p) in crate::configuration::PointLabel::ALL.iter().zip(cfg.bary_points()) {
        let [x, y] = cfg.cart(*label).to_f64();
        text += &format!("{:<4} {}  ≈ ({x:.6}, {y:.6})\n", label.pretty(), p);
    }
    match eq.common_sq() {
        Some(r) => text += &format!("equidistant from the incenter, r² = {r}\n"),
        None => text += "not equidistant from the incenter\n",
    }
    Ok(Output::ok(json, text))
}

fn construct_from_json(path: &PathBuf) -> Outcome {
    let raw = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let bad = |m: String| Failure::Usage(format!("--from-json {}: {m}", path.display()));
    let v: Value = serde_json::from_str(&raw).map_err(|e| bad(e.to_string()))?;
    let vertices: VerticesJson =
        serde_json::from_value(v.get("vertices").cloned().unwrap_or(Value::Null)).map_err(|e| bad(e.to_string()))?;
    let tr: Vec<String> =
        serde_json::from_value(v.get("triplet").cloned().unwrap_or(Value::Null)).map_err(|e| bad(e.to_string()))?;
    if tr.len() != 3 {
        return Err(bad("triplet must have three entries".into()));
    }
    let t = Triangle::from_vertices(&vertices.a, &vertices.b, &vertices.c)?;
    construct(&t, &triplet("triplet", &tr)?)
}

fn family(t: &Triangle, tr: &Triplet) -> Outcome {
    let v = theorems::verify_family(t, tr)?;
    let formula = v.membership.is_solution().then(|| theorems::family_radius_sq(t, &tr.alpha).to_string());
    let json = json!({
        "triangle": t.side_strings(),
        "triplet": tr.to_strings(),
        "verdict": v,
        "radius_sq_formula": formula,
    });
    let text = format!(
        "sides {t}, triplet {tr}\n{}\nradius² {}\ncontact quadruples concyclic: {}\n{}\n",
        v.membership,
        v.radius_sq.as_ref().map_or("-".to_string(), ToString::to_string),
        match v.addendum {
            Some(q) => format!("{} {} {}", q[0], q[1], q[2]),
            None => "-".to_string(),
        },
        if v.ok { "consistent" } else { "INCONSISTENT" }
    );
    Ok(Output { json, text, passed: v.ok })
}

fn congruence(t: &Triangle) -> Outcome {
    Ok(match theorems::congruence(t)? {
        CongruenceResult::Found(tr) => {
            let meets = theorems::lines_meet_at_nagel(t, &tr)?;
            if !meets {
                return Err(Failure::Verify(format!("lines of {tr} miss the Nagel point")));
            }
            Output::ok(json!({ "found": tr.to_strings() }), format!("congruent triplet {tr}\n"))
        }
        CongruenceResult::Excluded(r) => {
            Output::ok(json!({ "excluded": r.to_string() }), format!("no congruence: {r}\n"))
        }
    })
}

fn dussau(t: &Triangle) -> Outcome {
    let point = theorems::dussau_point(t)?;
    let lines = theorems::dussau_lines(t, &Triplet::anti_conway())?;
    let concurrency = concurrent(&lines[0], &lines[1], &lines[2])?;
    debug_assert!(matches!(concurrency, Concurrency::Concurrent(_)));
    let report = theorems::anti_conway(t)?;
    let json = json!({
        "triangle": t.side_strings(),
        "lines": lines.iter().map(|l| l.to_strings()).collect::<Vec<_>>(),
        "concurrency": concurrency,
        "nagel_integer": point.primitive().map(|v| v.to_string()),
        "nagel": point.to_strings()?,
        "anti_conway": report,
    });
    let text = format!(
        "lines A′C″, B′A″, C′B″ meet at {point} (Nagel point)\nNagel power w.r.t. the three circles: {}\n",
        rational_strings(&report.nagel_powers).join(", ")
    );
    Ok(Output::ok(json, text))
}
