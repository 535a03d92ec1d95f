use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lienil::battery;
use lienil::exprio::{emit_report, load_algebra, parse_expr_list, parse_poly, render_report, CaseVerdict, Report};
use lienil::findim::{
    example_algebra, lie_nilpotency_oracle, verify_via_theorem, verify_via_theorem_forced, witness_json, Nilpotency,
    StructureAlgebra, TheoremVerdict,
};
use lienil::freealg::{default_names, identity_suite_rings, run_identity_suite, standard_identity_table};
use lienil::gensets::FamilySpec;
use lienil::ideal::{GeneratorList, GeneratorSource, IdealTower, Verdict};
use lienil::{MultiDegree, Poly, RingSpec};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "lienil",
    version,
    about = "Exact checks of commutator ideals and Lie nilpotency"
)]
struct Cli {
    /// Coefficient ring: Q (default), Z, Z3loc or Fp:<p>.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Comma-separated generator names (default x1..xN from the input).
    #[arg(long, global = true, value_delimiter = ',')]
    gens: Option<Vec<String>>,
    /// Refuse components of total degree above this cap.
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Also write the JSON report(s) to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Worker threads for independent cases.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Holds,
    Fails,
    Refused,
}

#[derive(Subcommand)]
enum Command {
    /// Is the target in the two-sided ideal generated by a family?
    Member {
        /// Target expression, e.g. "[x1,x2]*[x3,x4,x5]".
        #[arg(long)]
        expr: String,
        /// Family (Sn:<n>, TnOracle:<n>, LatyshevT3, VolichenkoT4, IntegerT4,
        /// WForms, WFourForms, IPrimeForms, WOracle, SnVariantS:<n>:<k>,
        /// SnVariantSPrime:<n>) or @file with one generator per line.
        #[arg(long)]
        ideal: String,
        /// Seed set for the seeded families, separated by ';' (default [x1,x2]).
        #[arg(long)]
        seeds: Option<String>,
        /// Exit with status 1 unless every component has this verdict.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Is a finite-dimensional algebra Lie nilpotent of class at most n-1?
    Verify {
        /// Algebra file (JSON).
        #[arg(long, conflicts_with = "example", required_unless_present = "example")]
        algebra: Option<PathBuf>,
        /// Built-in example, e.g. "heisenberg_truncated(4)".
        #[arg(long)]
        example: Option<String>,
        /// Bracket length: checks that all n-fold commutators vanish.
        #[arg(long)]
        n: usize,
        /// theorem: finite criterion, oracle: lower central series, both:
        /// run both and treat a disagreement as an error.
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        /// Run the finite criterion even when 3 is not invertible.
        #[arg(long)]
        force: bool,
        /// Exit with status 1 unless the verdict is this one (holds means
        /// Lie nilpotent).
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Randomized check of the commutator expansion identities.
    Identities {
        /// Random instances per family and ring.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Runs the reproduction battery.
    Reproduce {
        /// Comma-separated case ids; `*` matches any run of characters.
        #[arg(long)]
        filter: Option<String>,
        /// List the case ids and claims instead of running them.
        #[arg(long)]
        list: bool,
    },
}

/// Reports to print and whether every case came out as required.
struct Outcome {
    reports: Vec<Report>,
    ok: bool,
    batch: bool,
}

impl Outcome {
    /// Battery runs always write an array, even for a single case.
    fn battery(reports: Vec<Report>, ok: bool) -> Outcome {
        Outcome {
            reports,
            ok,
            batch: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { reports, ok, batch }) => {
            for r in &reports {
                println!("{}", render_report(r));
            }
            if let Some(path) = &cli.json {
                let doc = if reports.len() == 1 && !batch {
                    emit_report(&reports[0])
                } else {
                    serde_json::to_string_pretty(&reports).expect("plain data")
                };
                if let Err(e) = std::fs::write(path, doc + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let ring: RingSpec = cli.ring.as_deref().unwrap_or("Q").parse()?;
    match &cli.command {
        Command::Member {
            expr,
            ideal,
            seeds,
            expect,
        } => cmd_member(cli, ring, expr, ideal, seeds.as_deref(), *expect),
        Command::Verify {
            algebra,
            example,
            n,
            mode,
            force,
            expect,
        } => {
            let a = match (algebra, example) {
                (Some(path), _) => {
                    let a = load_algebra(path).with_context(|| format!("loading {}", path.display()))?;
                    if cli.ring.is_some() && a.ring() != ring {
                        bail!("--ring {ring} conflicts with the file's ring {}", a.ring());
                    }
                    a
                }
                (None, Some(name)) => example_algebra(name, ring)?,
                (None, None) => bail!("give --algebra or --example"),
            };
            let label = example
                .clone()
                .unwrap_or_else(|| algebra.as_ref().map(|p| p.display().to_string()).unwrap_or_default());
            cmd_verify(&a, &label, *n, *mode, *force, *expect)
        }
        Command::Identities { samples } => Ok(cmd_identities(cli.seed, *samples)),
        Command::Reproduce { filter, list } => cmd_reproduce(filter.as_deref(), *list, cli.jobs),
    }
}

/// `x1..xN` covering every `x<i>` mentioned in the texts.
fn inferred_names(texts: &[&str]) -> Vec<String> {
    let mut max = 0;
    for t in texts {
        let b = t.as_bytes();
        for i in 0..b.len() {
            let starts = b[i] == b'x' && (i == 0 || !(b[i - 1].is_ascii_alphanumeric() || b[i - 1] == b'_'));
            if !starts {
                continue;
            }
            let digits: String = t[i + 1..].chars().take_while(char::is_ascii_digit).collect();
            if let Ok(k) = digits.parse::<usize>() {
                max = max.max(k);
            }
        }
    }
    default_names(max)
}

fn cmd_member(
    cli: &Cli,
    ring: RingSpec,
    expr: &str,
    ideal: &str,
    seeds: Option<&str>,
    expect: Option<Expect>,
) -> anyhow::Result<Outcome> {
    let file_text = match ideal.strip_prefix('@') {
        Some(path) => Some(std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?),
        None => None,
    };
    let names = match &cli.gens {
        Some(g) => g.clone(),
        None => {
            let mut texts = vec![expr];
            texts.extend(file_text.as_deref());
            texts.extend(seeds);
            let mut n = inferred_names(&texts);
            if n.len() < 2 && file_text.is_none() {
                n = default_names(2);
            }
            n
        }
    };
    let target = parse_poly(expr, &names, ring).context("parsing --expr")?;
    let (source, label): (std::sync::Arc<dyn GeneratorSource>, String) = match &file_text {
        Some(text) => {
            let gens = parse_expr_list(text, &names)?
                .iter()
                .map(|e| lienil::exprio::elaborate(e, ring))
                .collect::<lienil::Result<Vec<Poly>>>()?;
            (std::sync::Arc::new(GeneratorList::new(ring, &gens)?), ideal.to_string())
        }
        None => {
            let mut spec: FamilySpec = ideal.parse()?;
            if let Some(text) = seeds {
                let s = text
                    .split(';')
                    .map(|t| parse_poly(t, &names, ring))
                    .collect::<lienil::Result<Vec<_>>>()?;
                spec = match spec {
                    FamilySpec::WForms(_) => FamilySpec::WForms(s),
                    FamilySpec::WFourForms(_) => FamilySpec::WFourForms(s),
                    FamilySpec::IPrimeForms(_) => FamilySpec::IPrimeForms(s),
                    FamilySpec::WOracle(_) => FamilySpec::WOracle(s),
                    other => bail!("family {other} takes no seed set"),
                };
            } else {
                spec = spec.with_ring(ring)?;
            }
            (spec.source(ring)?, spec.to_string())
        }
    };
    let mut tower = IdealTower::new(source, names.len());
    let parts = target.homogeneous_components_in(names.len())?;
    let split = parts.len() > 1;
    let mut reports = Vec::new();
    if parts.is_empty() {
        let r = Report::new("member", CaseVerdict::Holds, Default::default()).with_certificate(
            json!({ "target": "0", "ideal": label, "note": "the zero polynomial lies in every ideal" }),
        );
        reports.push(r);
    }
    for (mu, part) in parts {
        let case = if split {
            format!("member[{}]", mu_text(&mu))
        } else {
            "member".to_string()
        };
        reports.push(member_component(&mut tower, &case, &mu, &part, &label, cli.degree_cap)?);
    }
    let ok = match expect {
        None => true,
        Some(e) => reports.iter().all(|r| verdict_matches(r.verdict, e)),
    };
    Ok(Outcome {
        reports,
        ok,
        batch: false,
    })
}

fn mu_text(mu: &MultiDegree) -> String {
    mu.exponents().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn member_component(
    tower: &mut IdealTower,
    case: &str,
    mu: &MultiDegree,
    part: &Poly,
    label: &str,
    cap: Option<u32>,
) -> anyhow::Result<Report> {
    let start = Instant::now();
    if let Some(cap) = cap {
        if mu.total() > cap {
            return Ok(
                Report::new(case, CaseVerdict::Refused, start.elapsed()).with_certificate(json!({
                    "target": part.to_string(),
                    "component": mu.exponents(),
                    "reason": format!("component degree {} exceeds --degree-cap {cap}", mu.total()),
                })),
            );
        }
    }
    let comp = tower.component(mu)?;
    let cert = comp.member(part)?;
    if !cert.verify(part) {
        bail!("internal inconsistency: certificate for {part} does not re-expand");
    }
    let verdict = if cert.is_member() {
        CaseVerdict::Holds
    } else {
        CaseVerdict::Fails
    };
    let mut doc = json!({
        "target": part.to_string(),
        "ideal": label,
        "ring": part.ring().to_string(),
        "membership": serde_json::to_value(&cert)?,
    });
    let mut torsion = None;
    if part.ring() == RingSpec::Integers && !cert.is_member() {
        let t = comp.torsion_member(part)?;
        if !t.verify(part) {
            bail!("internal inconsistency: torsion certificate for {part} does not re-expand");
        }
        if let Verdict::Torsion(k) = &t.verdict {
            torsion = Some(k.clone());
        }
        doc["torsion"] = serde_json::to_value(&t)?;
    }
    let mut r = Report::new(case, verdict, start.elapsed()).with_certificate(doc);
    if let Some(k) = &torsion {
        r = r.with_torsion_index(k);
    }
    Ok(r)
}

fn verdict_matches(v: CaseVerdict, e: Expect) -> bool {
    matches!(
        (v, e),
        (CaseVerdict::Holds, Expect::Holds)
            | (CaseVerdict::Fails, Expect::Fails)
            | (CaseVerdict::Refused, Expect::Refused)
    )
}

fn nilpotency_json(a: &StructureAlgebra, v: &Nilpotency) -> Value {
    match v {
        Nilpotency::LieNilpotent => json!({ "lie_nilpotent": true }),
        Nilpotency::NotLieNilpotent(w) => json!({ "lie_nilpotent": false, "witness": witness_json(a, w) }),
    }
}

fn cmd_verify(
    a: &StructureAlgebra,
    label: &str,
    n: usize,
    mode: Mode,
    force: bool,
    expect: Option<Expect>,
) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let mut doc = json!({ "algebra": label, "ring": a.ring().to_string(), "dim": a.dim(), "n": n });
    let mut theorem: Option<bool> = None;
    if mode != Mode::Oracle {
        let check = if force {
            verify_via_theorem_forced(a, n)?
        } else {
            verify_via_theorem(a, n)?
        };
        match &check.verdict {
            TheoremVerdict::Decided(v) => {
                theorem = Some(v.is_nilpotent());
                let mut t = nilpotency_json(a, v);
                t["checked"] = json!(check.checked.to_string());
                t["condition_only"] = json!(check.condition_only);
                doc["theorem"] = t;
            }
            TheoremVerdict::Refused(why) => doc["theorem"] = json!({ "refused": why }),
        }
    }
    let mut oracle: Option<bool> = None;
    if mode != Mode::Theorem {
        let v = lie_nilpotency_oracle(a, n)?;
        oracle = Some(v.is_nilpotent());
        doc["oracle"] = nilpotency_json(a, &v);
    }
    if let (Some(t), Some(o)) = (theorem, oracle) {
        let condition_only = doc["theorem"]["condition_only"] == json!(true);
        doc["agree"] = json!(t == o);
        if t != o && !condition_only {
            bail!("fatal inconsistency: the finite criterion says {t} but the lower central series says {o} ({doc})");
        }
    }
    // the oracle decides only in oracle mode; a refused criterion stays refused
    let answer = if mode == Mode::Oracle { oracle } else { theorem };
    let verdict = match answer {
        Some(true) => CaseVerdict::Holds,
        Some(false) => CaseVerdict::Fails,
        None => CaseVerdict::Refused,
    };
    let r = Report::new("verify", verdict, start.elapsed()).with_certificate(doc);
    let ok = expect.is_none_or(|e| verdict_matches(verdict, e));
    Ok(Outcome {
        reports: vec![r],
        ok,
        batch: false,
    })
}

fn cmd_identities(seed: u64, samples: usize) -> Outcome {
    let start = Instant::now();
    let tallies = if samples == 0 {
        Vec::new()
    } else {
        run_identity_suite(&standard_identity_table(), &identity_suite_rings(), samples, seed)
    };
    let ok = tallies.iter().all(|t| t.passed == t.samples);
    let verdict = if ok { CaseVerdict::Holds } else { CaseVerdict::Fails };
    let r = Report::new("identities", verdict, start.elapsed())
        .with_certificate(json!({ "seed": seed, "samples": samples, "tallies": tallies }));
    Outcome {
        reports: vec![r],
        ok,
        batch: false,
    }
}

fn cmd_reproduce(filter: Option<&str>, list: bool, jobs: Option<usize>) -> anyhow::Result<Outcome> {
    let cases = battery::select(filter)?;
    if list {
        let mut out = std::io::stdout().lock();
        for c in &cases {
            // a closed pipe (`| head`) just ends the listing
            if writeln!(out, "{}\t{}", c.id, c.claim).is_err() {
                break;
            }
        }
        return Ok(Outcome::battery(Vec::new(), true));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| anyhow!("thread pool: {e}"))?;
    let reports: Vec<Report> = pool.install(|| {
        use rayon::prelude::*;
        cases.par_iter().map(|c| c.run()).collect()
    });
    let ok = reports.iter().all(|r| r.verdict == CaseVerdict::Holds);
    Ok(Outcome::battery(reports, ok))
}
