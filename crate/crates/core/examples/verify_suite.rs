//! Randomized cross-checks of every theorem; `cargo run --example verify_suite -- SEED COUNT`.
use conway::oracle::{run_suite, Check, SampleSpec, ShapeFilter};

fn main() -> conway::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);

    let spec = SampleSpec::new(seed, count);
    let report = run_suite(&spec, &Check::ALL)?;
    println!("all checks, {} trials: {} failures", report.trials, report.failures.len());

    let iso = SampleSpec::new(seed, count / 2).with_shape(ShapeFilter::Isosceles);
    let report = run_suite(&iso, &[Check::Isosceles, Check::Family])?;
    println!("isosceles triangles, {} trials: {} failures", report.trials, report.failures.len());

    let scalene = SampleSpec::new(seed, count).with_shape(ShapeFilter::Scalene).avoiding_exclusions(true);
    let report = run_suite(&scalene, &[Check::Congruence, Check::Dussau, Check::AntiConway])?;
    println!("scalene, non-excluded, {} trials: {} failures", report.trials, report.failures.len());
    for f in report.failures.iter().take(5) {
        println!("  {f:?}");
    }
    Ok(())
}
