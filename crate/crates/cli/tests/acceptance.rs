//! The acceptance gate: ten criteria, one pass/fail line each.
//! Run with `cargo test -p radmom-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use radmom::verification::{
    verify_form_equivalence, verify_lo_proportionality, verify_parseval_and_diagonalization, verify_pp_vs_hankel,
    verify_quadrature, verify_so4, verify_specfun, verify_uncertainty, CheckResult, VerificationConfig,
};
use radmom::EvaluationGrid;

type Criterion<'a> = (&'static str, Box<dyn FnOnce() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    summary: String,
}

fn checks(results: &[CheckResult]) -> Outcome {
    let passed = results.iter().all(|r| r.passed);
    let summary = results
        .iter()
        .map(|r| format!("{} {:e} (tol {:e})", r.name, r.max_residual, r.tolerance))
        .collect::<Vec<_>>()
        .join("; ");
    Outcome { passed, summary }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.passed &= elapsed < limit;
    o.summary = format!("{}; {:.2} s (limit {} s)", o.summary, elapsed.as_secs_f64(), limit.as_secs());
    o
}

fn plot(family: &str, n: u32) -> Vec<(f64, f64)> {
    let out = Command::new(env!("CARGO_BIN_EXE_radmom"))
        .args(["plot", family, &n.to_string(), "--hbar-beta", "1"])
        .output()
        .expect("run radmom");
    assert!(out.status.success(), "radmom plot {family} {n} failed");
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("p,density"));
    text.lines()
        .skip(1)
        .map(|l| {
            let (p, d) = l.split_once(',').unwrap();
            (p.parse().unwrap(), d.parse().unwrap())
        })
        .collect()
}

fn at(rows: &[(f64, f64)], p: f64) -> f64 {
    rows.iter().find(|r| r.0 == p).map(|r| r.1).unwrap_or(f64::NAN)
}

fn figure() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=4 {
        for family in ["pp", "lo"] {
            let rows = plot(family, n);
            let finite = rows.len() == 201 && rows.iter().all(|r| r.1.is_finite() && r.1 >= 0.0);
            ok &= finite;
            if !finite {
                notes.push(format!("{family} N = {n}: bad rows"));
            }
        }
    }
    let pp = plot("pp", 1);
    let lo = plot("lo", 1);
    let spots = [
        ("PP(1,0)(0)", at(&pp, 0.0), 1.0),
        ("PP(1,0)(1)", at(&pp, 1.0), 1.0 / 16.0),
        ("LO(1)(1)", at(&lo, 1.0), 0.25),
    ];
    for (label, got, want) in spots {
        let err = (got - want).abs();
        ok &= err <= 1e-15;
        notes.push(format!("{label} = {got:?} (err {err:e})"));
    }
    Outcome {
        passed: ok,
        summary: format!("N = 1..4 for pp and lo; {}", notes.join(", ")),
    }
}

fn main() -> ExitCode {
    let config = VerificationConfig::default();
    let spec = config.quadrature;
    let log_grid = config.grid(false).unwrap();
    let mirrored = config.grid(true).unwrap();

    let criteria: Vec<Criterion> = vec![
        (
            "form equivalence, N <= 8",
            Box::new(|| {
                timed(Duration::from_secs(5), || checks(&[verify_form_equivalence(&config, 8, &mirrored).unwrap()]))
            }),
        ),
        (
            "transform quadrature vs closed form, N <= 4",
            Box::new(|| {
                timed(Duration::from_secs(30), || {
                    checks(&[verify_quadrature(&config, 4, &log_grid, &spec).unwrap()])
                })
            }),
        ),
        (
            "diagonalization on [-10, 10], three test functions",
            Box::new(|| {
                let r = verify_parseval_and_diagonalization(&config, 1, &spec).unwrap();
                checks(&r[1..])
            }),
        ),
        (
            "Parseval, N <= 5, measure dp/(2 pi hbar)",
            Box::new(|| {
                let r = verify_parseval_and_diagonalization(&config, 5, &spec).unwrap();
                checks(&r[..1])
            }),
        ),
        (
            "Lombardi-Ogilvie ratio constancy, N <= 6",
            Box::new(|| checks(&[verify_lo_proportionality(&config, 6, &mirrored).unwrap()])),
        ),
        (
            "Podolsky-Pauling vs Hankel, normalization, tail",
            Box::new(|| checks(&verify_pp_vs_hankel(&config, 4, &spec).unwrap())),
        ),
        ("figure data via the CLI", Box::new(figure)),
        (
            "uncertainty bound N <= 5 and ground state 3",
            Box::new(|| checks(&verify_uncertainty(&config, 5).unwrap())),
        ),
        ("special values and Laguerre sums", Box::new(|| checks(&verify_specfun(&config).unwrap()))),
        (
            "SO(4) denominator constancy, N <= 6",
            Box::new(|| {
                let g = EvaluationGrid::log_mirrored(1e-3, 1e3, 60, 1.0).unwrap();
                checks(&[verify_so4(&config, 6, &g).unwrap()])
            }),
        ),
    ];

    let mut failed = 0;
    for (k, (label, run)) in criteria.into_iter().enumerate() {
        let o = run();
        println!("{} criterion {}: {label}: {}", if o.passed { "PASS" } else { "FAIL" }, k + 1, o.summary);
        if !o.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
