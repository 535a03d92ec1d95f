//! Acceptance criteria 1 through 11, one line each. Runs without the libtest
//! harness so the lines always reach stdout.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use lienil::battery::{select, Case};
use lienil::coeff::RingSpec;
use lienil::exprio::CaseVerdict;
use lienil::findim::{heisenberg_truncated, verify_via_theorem, Nilpotency, TheoremVerdict};
use proptest::prelude::*;
use proptest::test_runner::{TestRng, TestRunner};

struct Criterion {
    number: u32,
    title: &'static str,
    filter: Option<&'static str>,
    budget: Duration,
    /// Checks beyond the battery cases; `Err` carries the reason.
    extra: Option<fn() -> Result<(), String>>,
}

fn run_cases(filter: &str) -> Result<usize, String> {
    let cases: Vec<Case> = select(Some(filter)).map_err(|e| e.to_string())?;
    let mut failed = Vec::new();
    for c in &cases {
        let r = c.run();
        if r.verdict != CaseVerdict::Holds {
            failed.push(format!("{} ({})", r.case, r.verdict));
        }
    }
    if failed.is_empty() {
        Ok(cases.len())
    } else {
        Err(format!("failed: {}", failed.join(", ")))
    }
}

/// Caps 5 and up: the criterion reports NotLieNilpotent at n = 3 and
/// [a, ab, ab] is the basis element ac^2.
fn heisenberg_witness() -> Result<(), String> {
    let gf5 = RingSpec::prime_field(5).unwrap();
    for ring in [RingSpec::Rationals, gf5] {
        for cap in 5..=6 {
            let h = heisenberg_truncated(cap, ring).map_err(|e| e.to_string())?;
            let check = verify_via_theorem(&h, 3).map_err(|e| e.to_string())?;
            if !matches!(check.verdict, TheoremVerdict::Decided(Nilpotency::NotLieNilpotent(_))) {
                return Err(format!("cap {cap} over {ring}: {:?}", check.verdict));
            }
            let a = h.generator("a").unwrap().clone();
            let ab = h.mul(&a, h.generator("b").unwrap()).unwrap();
            let x = h.commutator(&h.commutator(&a, &ab).unwrap(), &ab).unwrap();
            let i = h
                .basis_names()
                .iter()
                .position(|s| s == "ac^2")
                .ok_or("no ac^2 in basis")?;
            if x != h.basis(i) {
                return Err(format!("cap {cap} over {ring}: [a,ab,ab] = {}", h.render(&x)));
            }
        }
    }
    Ok(())
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
) -> Result<(), String> {
    let config = config();
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Result<(), String> {
    run_property("anticommutativity", poly_triple(), anticommutativity)?;
    run_property("jacobi", poly_triple(), jacobi)?;
    run_property("partition", poly_triple(), partition)?;
    run_property("certificate soundness", membership_instance(), certificate_soundness)?;
    run_property("hermite transform", int_matrix(), hermite_transform)?;
    run_property("smith transform", int_matrix(), smith_transform)?;
    run_property(
        "expression round trip",
        (field_like_ring(), expr_tree()),
        render_parse_round_trip,
    )?;
    run_property(
        "poly text round trip",
        any_ring().prop_flat_map(|r| poly_in(r, 5)),
        poly_text_round_trip,
    )?;
    Ok(())
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            number: 1,
            title: "identity suite",
            filter: Some("identities-suite"),
            budget: secs(10),
            extra: None,
        },
        Criterion {
            number: 2,
            title: "S^(n) and T^(n) agree componentwise",
            filter: Some("theorem2-*"),
            budget: secs(300),
            extra: None,
        },
        Criterion {
            number: 3,
            title: "torsion index 3 over Z",
            filter: Some("remark2-torsion"),
            budget: secs(60),
            extra: None,
        },
        Criterion {
            number: 4,
            title: "[T^(2),A,A] member over Q, not over Z",
            filter: Some("prop3-*"),
            budget: secs(60),
            extra: None,
        },
        Criterion {
            number: 5,
            title: "T^(3) and T^(4) generating families",
            filter: Some("latyshev-t3-q,volichenko-t4-q,integer-t4-z"),
            budget: secs(600),
            extra: None,
        },
        Criterion {
            number: 6,
            title: "forms for S = {[x1,x2]} and the factor 3",
            filter: Some("corollary5-*,prop4-torsion-z"),
            budget: secs(600),
            extra: None,
        },
        Criterion {
            number: 7,
            title: "sums in T^(4), torsion of u[a1,a2,a3]",
            filter: Some("lemma10-sum-z,corollary9-torsion-z"),
            budget: secs(60),
            extra: None,
        },
        Criterion {
            number: 8,
            title: "products of commutators",
            filter: Some("remark1-*"),
            budget: secs(60),
            extra: None,
        },
        Criterion {
            number: 9,
            title: "finite criterion agrees with the lower central series",
            filter: Some("findim-agree-*,heisenberg-ladder"),
            budget: secs(120),
            extra: Some(heisenberg_witness),
        },
        Criterion {
            number: 10,
            title: "finite-dimensional T^(n) from evaluated S^(n)",
            filter: Some("findim-theorem2-*"),
            budget: secs(120),
            extra: None,
        },
        Criterion {
            number: 11,
            title: "property suites, 1000 cases each",
            filter: None,
            budget: secs(120),
            extra: Some(property_suites),
        },
    ]
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let mut outcome = Ok(0);
        if let Some(f) = c.filter {
            outcome = run_cases(f);
        }
        if let (Ok(_), Some(extra)) = (&outcome, c.extra) {
            outcome = extra().map(|()| outcome.clone().unwrap_or(0));
        }
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > c.budget {
            outcome = Err(format!("over budget of {} s", c.budget.as_secs()));
        }
        let ms = elapsed.as_millis();
        match outcome {
            Ok(n) if c.filter.is_some() => println!("criterion {:>2} PASS  {} ({n} cases, {ms} ms)", c.number, c.title),
            Ok(_) => println!("criterion {:>2} PASS  {} ({ms} ms)", c.number, c.title),
            Err(why) => {
                all_ok = false;
                println!("criterion {:>2} FAIL  {}: {why} ({ms} ms)", c.number, c.title);
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
