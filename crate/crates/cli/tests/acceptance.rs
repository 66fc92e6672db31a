//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use norlund::polynomials::{doubling_check, poly_gf_check};
use norlund::ring::{rat, ratio};
use norlund::verify::{
    self, oracle_check, reduction_check, run_montecarlo_rademacher, run_montecarlo_uniform,
};
use norlund::{Family, MonteCarloConfig, Tables, TupleUmbra, VerificationReport};

const ORDER: usize = 12;
const ORACLE_MAX_DEG: usize = 8;
const ORACLE_MAX_DIM: usize = 3;
const REDUCTION_MAX_DEG: usize = 12;
const REDUCTION_MAX_DIM: usize = 4;
const BATTERY_MAX_DEG: usize = 6;
const BATTERY_MAX_DIM: usize = 3;
const POLY_GF_MAX_N: usize = 8;
const DOUBLING_MAX_N: usize = 12;
const MC_SAMPLES: u64 = 1_000_000;
const MC_SEED: u64 = 42;
const MC_MAX_DEG: usize = 4;
const MC_MAX_DIM: usize = 3;
const MC_SIGMAS: f64 = 4.0;
const MUTATION_MAX_DEG: usize = 4;
const MUTATION_MAX_DIM: usize = 2;

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let attempted: u64 = reports.iter().map(|r| r.attempted).sum();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.all_passed() || r.attempted == 0)
        .map(|r| match &r.counterexample {
            Some(ce) => format!("{}: {} ({} != {})", r.suite, ce.inputs, ce.lhs, ce.rhs),
            None => format!("{}: no cases", r.suite),
        })
        .collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} suites, {attempted} cases", reports.len())
        } else {
            failed.join("; ")
        },
    }
}

fn oracle(tables: &Tables) -> Outcome {
    summarize(&[oracle_check(tables, ORACLE_MAX_DEG, ORACLE_MAX_DIM)])
}

fn reduction(tables: &Tables) -> Outcome {
    summarize(&[reduction_check(
        tables,
        REDUCTION_MAX_DEG,
        REDUCTION_MAX_DIM,
    )])
}

fn battery(tables: &Tables) -> Result<Vec<VerificationReport>, norlund::Error> {
    let mut reports = verify::run_exact_suite(tables, BATTERY_MAX_DEG, BATTERY_MAX_DIM)?;
    reports.push(poly_gf_check(tables, POLY_GF_MAX_N));
    reports.push(doubling_check(tables, DOUBLING_MAX_N));
    Ok(reports)
}

fn identity_battery(tables: &Tables) -> Outcome {
    match battery(tables) {
        Ok(reports) => summarize(&reports),
        Err(e) => Outcome {
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn monte_carlo(tables: &Tables) -> Outcome {
    // the exact targets themselves: 1/(n+1) for U, parity for X
    let uniform = TupleUmbra::new(tables.dot(Family::Bernoulli).inverse().at(&rat(1)), 1);
    let rademacher = TupleUmbra::new(tables.dot(Family::Euler).inverse().at(&rat(1)), 1);
    for n in 0..=MC_MAX_DEG as u32 {
        let v = norlund::MultiIndex::new(vec![n]);
        let parity = if n % 2 == 0 { rat(1) } else { rat(0) };
        if uniform.mv_moment(&v).ok() != Some(ratio(1, n as i64 + 1))
            || rademacher.mv_moment(&v).ok() != Some(parity)
        {
            return Outcome {
                ok: false,
                detail: format!("exact target wrong at n={n}"),
            };
        }
    }
    let mut reports = Vec::new();
    for dim in 1..=MC_MAX_DIM {
        let cfg = MonteCarloConfig {
            samples: MC_SAMPLES,
            seed: MC_SEED,
            dim,
            max_degree: MC_MAX_DEG,
            confidence: MC_SIGMAS,
            shards: 4,
        };
        for result in [
            run_montecarlo_uniform(tables, &cfg),
            run_montecarlo_rademacher(tables, &cfg),
        ] {
            match result {
                Ok(mut r) => {
                    r.suite = format!("{} d={dim}", r.suite);
                    reports.push(r);
                }
                Err(e) => {
                    return Outcome {
                        ok: false,
                        detail: e.to_string(),
                    }
                }
            }
        }
    }
    summarize(&reports)
}

fn mutation(tables: &Tables) -> Outcome {
    let mut caught = Vec::new();
    let mut missed = Vec::new();
    for (family, n) in [
        (Family::Bernoulli, 2),
        (Family::Bernoulli, 4),
        (Family::Euler, 2),
        (Family::Euler, 4),
    ] {
        let label = format!(
            "{}_{n}",
            if family == Family::Bernoulli {
                "B"
            } else {
                "E"
            }
        );
        let mutated = match tables.perturbed(family, n, &rat(1)) {
            Ok(t) => t,
            Err(e) => {
                missed.push(format!("{label}: {e}"));
                continue;
            }
        };
        let failing: Vec<String> =
            verify::run_exact_suite(&mutated, MUTATION_MAX_DEG, MUTATION_MAX_DIM)
                .map(|rs| {
                    rs.into_iter()
                        .filter(|r| !r.all_passed() && r.suite != "reduction")
                        .map(|r| r.suite)
                        .collect()
                })
                .unwrap_or_default();
        if failing.is_empty() {
            missed.push(label);
        } else {
            caught.push(format!("{label} -> {}", failing.join(",")));
        }
    }
    Outcome {
        ok: missed.is_empty(),
        detail: if missed.is_empty() {
            caught.join("; ")
        } else {
            format!("undetected: {}", missed.join(", "))
        },
    }
}

fn determinism() -> Outcome {
    let argv = [
        "norlund",
        "--no-timestamp",
        "verify",
        "--suite",
        "all",
        "--max-deg",
        "4",
        "-d",
        "2",
        "--samples",
        "1000000",
        "--seed",
        "42",
    ];
    let first = norlund_cli::run(argv);
    let second = norlund_cli::run(argv);
    let ok = first == second && first.code == 0 && !first.stdout.is_empty();
    Outcome {
        ok,
        detail: format!("{} bytes, exit {}", first.stdout.len(), first.code),
    }
}

fn main() -> ExitCode {
    let tables = Tables::new(ORDER);
    let criteria: [(&str, Check); 6] = [
        (
            "oracle equivalence, |v|<=8, d<=3, bases iota/eta/u/eta-u",
            Box::new(|| oracle(&tables)),
        ),
        (
            "reduction to classical numbers, |v|<=12, d<=4",
            Box::new(|| reduction(&tables)),
        ),
        (
            "identity battery, |v|<=6, d<=3, exact",
            Box::new(|| identity_battery(&tables)),
        ),
        (
            "monte carlo, 10^6 samples, seed 42, |v|<=4, d<=3, 4 sigma",
            Box::new(|| monte_carlo(&tables)),
        ),
        (
            "mutation of B_2, B_4, E_2, E_4 by +1 is detected",
            Box::new(|| mutation(&tables)),
        ),
        (
            "verify all is byte-identical across runs",
            Box::new(determinism),
        ),
    ];
    let mut all_ok = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let clock = Instant::now();
        let outcome = check();
        all_ok &= outcome.ok;
        println!(
            "{} criterion {}: {name} [{}] ({:.1}s)",
            if outcome.ok { "PASS" } else { "FAIL" },
            i + 1,
            outcome.detail,
            clock.elapsed().as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
