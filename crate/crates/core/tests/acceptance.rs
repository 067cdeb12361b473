//! One line per acceptance criterion. Run with `cargo test --test acceptance`.

use crmostow::verify::{
    catalog_entries, counterexample_checks, exhaustion_checks, hessian_checks, jacobi_checks, minor_checks,
    mostow_checks, regularization_checks, structural_checks, witt_checks, Check, Counts, Tolerances,
};
use std::process::ExitCode;
use std::time::{Duration, Instant};

/// Checks whose stated value is contradicted by the exact computation. They
/// must keep failing; a pass would mean the computation changed.
const KNOWN_UNATTAINABLE: &[(&str, &str)] = &[(
    "su23_f13: normalizer of nr(v) is parabolic and equals q_max",
    "the normalizer is 7-dimensional and not parabolic",
)];

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    run: Box<dyn Fn() -> Vec<Check>>,
}

fn tolerances() -> Tolerances {
    Tolerances {
        taylor_rel: 1e-7,
        closed_form_rel: 1e-9,
        orthogonality: 1e-9,
        exp_differential: 1e-5,
        minor_hand: 1e-3,
        theta_at_one: 1e-8,
        theta_at_zero_min: 0.1,
        x_norm: 1e-6,
        residual: 1e-8,
        phi_zero: 1e-8,
        phi_invariance_rel: 1e-7,
        tangency: 1e-8,
        fd_step: 1e-3,
        gap: 1e-4,
    }
}

fn counts() -> Counts {
    Counts { jacobi_specs: 100, minor_samples: 200, mostow_trials: 50, exhaustion_samples: 100, hessian_points: 10 }
}

fn criteria() -> Vec<Criterion> {
    const SEED: u64 = 1;
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion { id: 1, name: "structural", limit: secs(10), run: Box::new(|| structural_checks(&catalog_entries())) },
        Criterion { id: 2, name: "witt index", limit: secs(60), run: Box::new(|| witt_checks(&catalog_entries(), 64, SEED)) },
        Criterion { id: 3, name: "regularization", limit: None, run: Box::new(|| regularization_checks(&catalog_entries())) },
        Criterion { id: 4, name: "numerical identities", limit: secs(120), run: Box::new(|| jacobi_checks(SEED, &tolerances(), &counts())) },
        Criterion { id: 5, name: "minor inequality", limit: None, run: Box::new(|| minor_checks(SEED, &tolerances(), &counts())) },
        Criterion { id: 6, name: "counterexample", limit: None, run: Box::new(|| counterexample_checks(&tolerances())) },
        Criterion { id: 7, name: "mostow round trip", limit: None, run: Box::new(|| mostow_checks(SEED, &tolerances(), &counts())) },
        Criterion { id: 8, name: "exhaustion", limit: None, run: Box::new(|| exhaustion_checks(SEED, &tolerances(), &counts())) },
        Criterion { id: 9, name: "hessian probes", limit: None, run: Box::new(|| hessian_checks(SEED, &tolerances(), &counts())) },
    ]
}

fn known(name: &str) -> Option<&'static str> {
    KNOWN_UNATTAINABLE.iter().find(|(n, _)| *n == name).map(|(_, why)| *why)
}

fn main() -> ExitCode {
    let mut unexpected = 0;
    for c in criteria() {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let failed: Vec<&Check> = checks.iter().filter(|k| !k.pass).collect();
        let surprise: Vec<&&Check> = failed.iter().filter(|k| known(&k.name).is_none()).collect();
        let stale: Vec<&str> = KNOWN_UNATTAINABLE
            .iter()
            .filter(|(n, _)| checks.iter().any(|k| k.name == *n && k.pass))
            .map(|(n, _)| *n)
            .collect();
        let slow = c.limit.is_some_and(|l| elapsed > l);
        let limit = c.limit.map(|l| format!(" limit {}s", l.as_secs())).unwrap_or_default();
        let status = if failed.is_empty() && !slow { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {:<22} {status} {}/{} checks in {:.2}s{limit}",
            c.id,
            c.name,
            checks.len() - failed.len(),
            checks.len(),
            elapsed.as_secs_f64()
        );
        for k in &failed {
            match known(&k.name) {
                Some(why) => println!("    known unattainable: {} ({}; {why})", k.name, k.detail),
                None => println!("    failed: {} ({})", k.name, k.detail),
            }
        }
        for n in &stale {
            println!("    known-unattainable check now passes: {n}");
        }
        if slow {
            println!("    over time limit");
        }
        if checks.is_empty() || !surprise.is_empty() || !stale.is_empty() || slow {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        println!("acceptance: all criteria pass apart from the known-unattainable checks");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
