//! Named reproduction cases with stable ids. Each case recomputes one claim
//! and reports `holds` when the computed answer matches the expected one.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coeff::{RingSpec, Scalar};
use crate::error::{Error, Result};
use crate::exprio::{CaseVerdict, Report};
use crate::findim::{
    self, ideal_from_gens_findim, lie_nilpotency_oracle, sn_values, tideal_findim, verify_via_theorem,
    verify_via_theorem_forced, witness_json, Nilpotency, StructureAlgebra, TheoremVerdict,
};
use crate::freealg::{
    identity_suite_rings, left_normed_commutator, run_identity_suite, standard_identity_table, words_of_multidegree,
    MultiDegree, Poly,
};
use crate::gensets::{sn_variants, FamilySpec};
use crate::ideal::{IdealTower, Verdict};
use crate::linexact::{integer_row, RowSpace};

/// What a case computed.
pub struct Outcome {
    pub holds: bool,
    pub certificate: Value,
    pub torsion_index: Option<BigInt>,
}

impl Outcome {
    fn new(holds: bool, certificate: Value) -> Outcome {
        Outcome {
            holds,
            certificate,
            torsion_index: None,
        }
    }
}

type Runner = Arc<dyn Fn() -> Result<Outcome> + Send + Sync>;

#[derive(Clone)]
pub struct Case {
    pub id: String,
    pub claim: String,
    run: Runner,
}

impl Case {
    fn new(
        id: impl Into<String>,
        claim: impl Into<String>,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Case {
        Case {
            id: id.into(),
            claim: claim.into(),
            run: Arc::new(run),
        }
    }

    /// Runs the case; an internal error becomes a failing report.
    pub fn run(&self) -> Report {
        let start = Instant::now();
        let out = (self.run)();
        let elapsed = start.elapsed();
        match out {
            Ok(o) => {
                let verdict = if o.holds {
                    CaseVerdict::Holds
                } else {
                    CaseVerdict::Fails
                };
                let mut r = Report::new(&self.id, verdict, elapsed).with_certificate(o.certificate);
                if let Some(k) = &o.torsion_index {
                    r = r.with_torsion_index(k);
                }
                r
            }
            Err(e) => {
                Report::new(&self.id, CaseVerdict::Fails, elapsed).with_certificate(json!({ "error": e.to_string() }))
            }
        }
    }
}

const Q: RingSpec = RingSpec::Rationals;
const Z: RingSpec = RingSpec::Integers;
const Z3: RingSpec = RingSpec::IntegersLoc3;

fn ring_tag(ring: RingSpec) -> String {
    match ring {
        RingSpec::Rationals => "q".into(),
        RingSpec::Integers => "z".into(),
        RingSpec::IntegersLoc3 => "z3loc".into(),
        RingSpec::PrimeField(p) => format!("gf{}", p.get()),
    }
}

fn mu_tag(mu: &MultiDegree) -> String {
    mu.exponents().iter().map(u32::to_string).collect::<Vec<_>>().join(".")
}

fn x(ring: RingSpec, i: usize) -> Poly {
    Poly::letter(ring, i)
}

fn br(args: &[Poly]) -> Poly {
    left_normed_commutator(args).expect("same ring")
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    a.mul(b).expect("same ring")
}

fn add(a: &Poly, b: &Poly) -> Poly {
    a.add(b).expect("same ring")
}

/// `[x_{a}, x_{b}, ...]` with 0-based letters.
fn brl(ring: RingSpec, letters: &[usize]) -> Poly {
    br(&letters.iter().map(|&i| x(ring, i)).collect::<Vec<_>>())
}

fn tower(spec: &FamilySpec, ring: RingSpec, generator_count: usize) -> Result<IdealTower> {
    Ok(IdealTower::new(spec.source(ring)?, generator_count))
}

/// Compares two families in every listed component.
fn sweep(
    a: &FamilySpec,
    b: &FamilySpec,
    ring: RingSpec,
    generator_count: usize,
    mus: &[MultiDegree],
) -> Result<Outcome> {
    let mut ta = tower(a, ring, generator_count)?;
    let mut tb = tower(b, ring, generator_count)?;
    let mut mismatches = Vec::new();
    let mut largest = 0;
    for mu in mus {
        if !ta.span_equal(&mut tb, mu)? {
            mismatches.push(mu_tag(mu));
        }
        largest = largest.max(ta.component(mu)?.dim());
    }
    Ok(Outcome::new(
        mismatches.is_empty(),
        json!({
            "families": [a.to_string(), b.to_string()],
            "ring": ring.to_string(),
            "components": mus.len(),
            "largest_component": largest,
            "mismatches": mismatches,
        }),
    ))
}

fn all_components(generator_count: usize, min_total: u32, max_total: u32) -> Vec<MultiDegree> {
    MultiDegree::all_up_to(generator_count, max_total)
        .into_iter()
        .filter(|m| m.total() >= min_total)
        .collect()
}

fn multilinear_up_to(min: usize, max: usize) -> Vec<MultiDegree> {
    (min..=max).map(MultiDegree::multilinear).collect()
}

/// Membership of `target` in the ideal of `spec`, compared with `expected`.
fn membership(
    spec: &FamilySpec,
    target: &Poly,
    generator_count: usize,
    expected: Verdict,
    torsion: bool,
) -> Result<Outcome> {
    let mu = target
        .multidegree(generator_count)?
        .ok_or_else(|| Error::InvalidParameter("zero target".into()))?;
    let mut t = tower(spec, target.ring(), generator_count)?;
    let comp = t.component(&mu)?;
    let cert = if torsion {
        comp.torsion_member(target)?
    } else {
        comp.member(target)?
    };
    let observed = cert.verdict.clone();
    let sound = cert.verify(target);
    let mut o = Outcome::new(
        observed == expected && sound,
        json!({
            "target": target.to_string(),
            "ideal": spec.to_string(),
            "ring": target.ring().to_string(),
            "expected": expected.to_string(),
            "observed": observed.to_string(),
            "membership": serde_json::to_value(&cert)?,
        }),
    );
    o.torsion_index = cert.torsion_index.clone();
    Ok(o)
}

fn identities_case() -> Case {
    Case::new(
        "identities-suite",
        "the five expansion identities and the right-letter decomposition hold on 100 random instances per ring",
        || {
            let tallies = run_identity_suite(&standard_identity_table(), &identity_suite_rings(), 100, 1);
            let holds = tallies.iter().all(|t| t.passed == t.samples);
            Ok(Outcome::new(holds, json!({ "tallies": tallies })))
        },
    )
}

fn sn_oracle_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 3..=5usize {
        for ring in [Q, Z3] {
            out.push(Case::new(
                format!("theorem2-n{n}-{}", ring_tag(ring)),
                format!(
                    "S^({n}) and the T^({n}) oracle agree in every component |mu| <= {} over 3 generators, {ring}",
                    n + 2
                ),
                move || {
                    let mus = all_components(3, 1, n as u32 + 2);
                    sweep(&FamilySpec::Sn(n), &FamilySpec::TnOracle(n), ring, 3, &mus)
                },
            ));
        }
    }
    out
}

fn torsion_cases() -> Vec<Case> {
    vec![
        Case::new(
            "remark2-torsion",
            "[x1,x2][x3,x4,x5] is not in T^(4) over Z, but 3 times it is",
            || {
                let target = mul(&brl(Z, &[0, 1]), &brl(Z, &[2, 3, 4]));
                let spec = FamilySpec::TnOracle(4);
                let plain = membership(&spec, &target, 5, Verdict::NonMember, false)?;
                let mut tor = membership(&spec, &target, 5, Verdict::Torsion(BigInt::from(3)), true)?;
                tor.holds &= plain.holds;
                tor.certificate = json!({ "member": plain.certificate, "torsion_member": tor.certificate });
                Ok(tor)
            },
        ),
        Case::new("prop3-member-q", "[[x1,x2]x3, x4, x5] lies in T^(4) over Q", || {
            let t = br(&[mul(&brl(Q, &[0, 1]), &x(Q, 2)), x(Q, 3), x(Q, 4)]);
            membership(&FamilySpec::TnOracle(4), &t, 5, Verdict::Member, false)
        }),
        Case::new(
            "prop3-nonmember-z",
            "[[x1,x2]x3, x4, x5] does not lie in T^(4) over Z",
            || {
                let t = br(&[mul(&brl(Z, &[0, 1]), &x(Z, 2)), x(Z, 3), x(Z, 4)]);
                membership(&FamilySpec::TnOracle(4), &t, 5, Verdict::NonMember, false)
            },
        ),
    ]
}

fn known_generator_cases() -> Vec<Case> {
    vec![
        Case::new(
            "latyshev-t3-q",
            "the Latyshev polynomials generate T^(3) over Q in every component |mu| <= 5 over 5 generators",
            || {
                sweep(
                    &FamilySpec::LatyshevT3,
                    &FamilySpec::TnOracle(3),
                    Q,
                    5,
                    &all_components(5, 1, 5),
                )
            },
        ),
        Case::new(
            "volichenko-t4-q",
            "the Volichenko polynomials generate T^(4) over Q in the multilinear components of degree <= 6",
            || {
                sweep(
                    &FamilySpec::VolichenkoT4,
                    &FamilySpec::TnOracle(4),
                    Q,
                    6,
                    &multilinear_up_to(1, 6),
                )
            },
        ),
        Case::new(
            "integer-t4-z",
            "the integer generating set of T^(4) gives the same lattice in the multilinear components of degree <= 6",
            || {
                sweep(
                    &FamilySpec::IntegerT4,
                    &FamilySpec::TnOracle(4),
                    Z,
                    6,
                    &multilinear_up_to(1, 6),
                )
            },
        ),
    ]
}

fn seeded_cases() -> Vec<Case> {
    vec![
        Case::new(
            "corollary5-wforms-z",
            "for S = {[x1,x2]} the five forms generate W over Z in every component |mu| <= 6 over 4 generators",
            || {
                let s = FamilySpec::default_seeds(Z);
                sweep(&FamilySpec::WForms(s.clone()), &FamilySpec::WOracle(s), Z, 4, &all_components(4, 1, 6))
            },
        ),
        Case::new(
            "corollary5-fourforms-q",
            "over Q the four forms without [s,x1][x2,x3,x4] already generate W (|mu| <= 6, 4 generators)",
            || {
                let s = FamilySpec::default_seeds(Q);
                sweep(&FamilySpec::WFourForms(s.clone()), &FamilySpec::WOracle(s), Q, 4, &all_components(4, 1, 6))
            },
        ),
        Case::new(
            "prop4-torsion-z",
            "for s = [x1,x2] and v = [s,a][b,c,d] with letters a..d, the least k with k*v in I' divides 3 over Z (all letter choices over 4 generators, and the multilinear v = [s,x3][x4,x5,x6])",
            || {
                let s = FamilySpec::default_seeds(Z);
                let spec = FamilySpec::IPrimeForms(s.clone());
                let v_of = |l: [usize; 4]| mul(&br(&[s[0].clone(), x(Z, l[0])]), &brl(Z, &l[1..]));
                let mut instances = Vec::new();
                for code in 0..256usize {
                    instances.push((4, v_of([code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3])));
                }
                instances.push((6, v_of([2, 3, 4, 5])));
                let mut towers = [tower(&spec, Z, 4)?, tower(&spec, Z, 6)?];
                let mut counts = std::collections::BTreeMap::<String, usize>::new();
                let mut failures = Vec::new();
                let mut multilinear = Value::Null;
                for (gc, v) in &instances {
                    let Some(mu) = v.multidegree(*gc)? else { continue };
                    let t = &mut towers[usize::from(*gc == 6)];
                    let cert = t.component(&mu)?.torsion_member(v)?;
                    let ok = cert.verify(v)
                        && matches!(&cert.verdict, Verdict::Torsion(k) if (BigInt::from(3) % k) == BigInt::from(0));
                    *counts.entry(cert.verdict.to_string()).or_default() += 1;
                    if !ok {
                        failures.push(v.to_string());
                    }
                    if *gc == 6 {
                        multilinear = json!({ "target": v.to_string(), "membership": serde_json::to_value(&cert)? });
                    }
                }
                let mut o = Outcome::new(
                    failures.is_empty(),
                    json!({ "ideal": spec.to_string(), "verdicts": counts, "failures": failures, "multilinear": multilinear }),
                );
                o.torsion_index = Some(BigInt::from(3));
                Ok(o)
            },
        ),
    ]
}

fn t4_sum_cases() -> Vec<Case> {
    vec![
        Case::new(
            "lemma10-sum-z",
            "[u,a1][a2,a3] + [u,a2][a1,a3] lies in T^(4) over Z for u = [x1,x2], a_i in {x3,x4,x5}",
            || {
                let u = brl(Z, &[0, 1]);
                let spec = FamilySpec::TnOracle(4);
                let mut t = tower(&spec, Z, 5)?;
                let mut checked = 0;
                let mut failures = Vec::new();
                for a1 in 2..5 {
                    for a2 in 2..5 {
                        for a3 in 2..5 {
                            let p = add(
                                &mul(&br(&[u.clone(), x(Z, a1)]), &brl(Z, &[a2, a3])),
                                &mul(&br(&[u.clone(), x(Z, a2)]), &brl(Z, &[a1, a3])),
                            );
                            checked += 1;
                            let Some(mu) = p.multidegree(5)? else { continue };
                            let cert = t.component(&mu)?.member(&p)?;
                            if !(cert.is_member() && cert.verify(&p)) {
                                failures.push(p.to_string());
                            }
                        }
                    }
                }
                Ok(Outcome::new(failures.is_empty(), json!({ "instances": checked, "failures": failures })))
            },
        ),
        Case::new(
            "corollary9-torsion-z",
            "u[a1,a2,a3] has torsion index 3 in T^(4) over Z for u = [x1,x2] and distinct a_i in {x3,x4,x5}, and index 1 or 3 otherwise",
            || {
                let u = brl(Z, &[0, 1]);
                let mut t = tower(&FamilySpec::TnOracle(4), Z, 5)?;
                let mut rows = Vec::new();
                let mut holds = true;
                for a1 in 2..5 {
                    for a2 in 2..5 {
                        for a3 in 2..5 {
                            let p = mul(&u, &brl(Z, &[a1, a2, a3]));
                            let Some(mu) = p.multidegree(5)? else { continue };
                            let cert = t.component(&mu)?.torsion_member(&p)?;
                            let k = match &cert.verdict {
                                Verdict::Torsion(k) => k.clone(),
                                _ => BigInt::from(0),
                            };
                            let distinct = a1 != a2 && a2 != a3 && a1 != a3;
                            let ok = cert.verify(&p)
                                && if distinct {
                                    k == BigInt::from(3)
                                } else {
                                    k == BigInt::from(1) || k == BigInt::from(3)
                                };
                            holds &= ok;
                            rows.push(json!([p.to_string(), k.to_string(), ok]));
                        }
                    }
                }
                let mut o = Outcome::new(holds, json!({ "instances": rows }));
                o.torsion_index = Some(BigInt::from(3));
                Ok(o)
            },
        ),
    ]
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn commutator_product_cases() -> Vec<Case> {
    vec![
        Case::new(
            "remark1-t3t2-q",
            "every multilinear [a1,a2,a3][a4,a5] lies in T^(4) over Q",
            || {
                let mut t = tower(&FamilySpec::TnOracle(4), Q, 5)?;
                let comp = t.component(&MultiDegree::multilinear(5))?;
                let mut failures = Vec::new();
                let perms = permutations(&[0, 1, 2, 3, 4]);
                for p in &perms {
                    let target = mul(&brl(Q, &p[..3]), &brl(Q, &p[3..]));
                    let cert = comp.member(&target)?;
                    if !(cert.is_member() && cert.verify(&target)) {
                        failures.push(target.to_string());
                    }
                }
                Ok(Outcome::new(
                    failures.is_empty(),
                    json!({ "instances": perms.len(), "failures": failures }),
                ))
            },
        ),
        Case::new("remark1-t2t2-q", "[x1,x2][x3,x4] does not lie in T^(3) over Q", || {
            let t = mul(&brl(Q, &[0, 1]), &brl(Q, &[2, 3]));
            membership(&FamilySpec::TnOracle(3), &t, 4, Verdict::NonMember, false)
        }),
    ]
}

/// Coordinates of `p` in the words of `mu`.
fn word_row(p: &Poly, words: &[crate::Word]) -> crate::linexact::IRow<BigInt> {
    let entries: Vec<(u32, Scalar)> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (i as u32, p.coefficient(w)))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    integer_row(&entries).0
}

fn sn_variant_case(n: usize) -> Case {
    Case::new(
        format!("remark4-n{n}-z"),
        format!("over 3 generators, every bracket of S (one X^2 entry at position 3..{}) is a Z-linear combination of brackets of S'", n - 1),
        move || {
            let mut checked = 0;
            let mut failures = Vec::new();
            for k in 3..n {
                let (s, sp) = sn_variants(Z, n, 3, k)?;
                let mut by_mu: std::collections::BTreeMap<MultiDegree, Vec<Poly>> = Default::default();
                for p in sp {
                    if let Some(mu) = p.multidegree(3)? {
                        by_mu.entry(mu).or_default().push(p);
                    }
                }
                let mut spans: std::collections::BTreeMap<MultiDegree, (Vec<crate::Word>, RowSpace)> = Default::default();
                for p in &s {
                    let Some(mu) = p.multidegree(3)? else { continue };
                    let (words, space) = spans.entry(mu.clone()).or_insert_with(|| {
                        let words = words_of_multidegree(&mu);
                        let mut space = RowSpace::new(Z, words.len());
                        for q in by_mu.get(&mu).into_iter().flatten() {
                            space.insert(&word_row(q, &words));
                        }
                        (words, space)
                    });
                    checked += 1;
                    if !space.contains(&word_row(p, words)) {
                        failures.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::new(
                failures.is_empty(),
                json!({ "checked": checked, "failures": failures }),
            ))
        },
    )
}

type Builder = fn(usize, RingSpec) -> Result<StructureAlgebra>;

/// The finite-dimensional test beds as `(case-id stem, builder, parameter)`.
pub fn example_stems() -> Vec<(String, Builder, usize)> {
    let mut out: Vec<(String, Builder, usize)> = Vec::new();
    for k in 2..=4 {
        out.push((format!("grassmann{k}"), findim::grassmann, k));
    }
    for m in 2..=4 {
        out.push((format!("unitriangular{m}"), findim::unitriangular_plus_unit, m));
    }
    for m in 2..=5 {
        out.push((format!("commutative{m}"), findim::commutative_series, m));
    }
    for d in 2..=5 {
        out.push((format!("heisenberg{d}"), findim::heisenberg_truncated, d));
    }
    out
}

fn example_by_stem(stem: &str, ring: RingSpec) -> Result<StructureAlgebra> {
    let (_, build, param) = example_stems()
        .into_iter()
        .find(|(s, _, _)| s == stem)
        .ok_or_else(|| Error::UnknownCase(stem.to_string()))?;
    build(param, ring)
}

fn findim_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let gf5 = RingSpec::prime_field(5).expect("5 is prime");
    for ring in [Q, gf5] {
        for (stem, _, _) in example_stems() {
            let id = format!("findim-agree-{}-{stem}", ring_tag(ring));
            out.push(Case::new(
                id,
                format!("the finite criterion and the lower central series agree on {stem} over {ring} for n = 2..6"),
                move || {
                    let a = example_by_stem(&stem, ring)?;
                    let mut rows = Vec::new();
                    let mut holds = true;
                    for n in 2..=6 {
                        let check = verify_via_theorem(&a, n)?;
                        let oracle = lie_nilpotency_oracle(&a, n)?;
                        let agree = match &check.verdict {
                            TheoremVerdict::Decided(v) => v.is_nilpotent() == oracle.is_nilpotent(),
                            TheoremVerdict::Refused(_) => false,
                        };
                        holds &= agree;
                        let witness = match &check.verdict {
                            TheoremVerdict::Decided(Nilpotency::NotLieNilpotent(w)) => Some(witness_json(&a, w)),
                            _ => None,
                        };
                        rows.push(json!({
                            "n": n,
                            "theorem": check.nilpotency().map(|v| v.is_nilpotent()),
                            "oracle": oracle.is_nilpotent(),
                            "checked": check.checked.to_string(),
                            "witness": witness,
                        }));
                    }
                    Ok(Outcome::new(
                        holds,
                        json!({ "algebra": stem, "ring": ring.to_string(), "checks": rows }),
                    ))
                },
            ));
        }
    }
    out.push(Case::new(
        "heisenberg-ladder",
        "in heisenberg_truncated(D), [a, ab, ..., ab] with k copies of ab equals a*c^k while 2k + 1 <= D and vanishes beyond the cap",
        || {
            let mut rows = Vec::new();
            let mut holds = true;
            for d in 2..=7usize {
                let h = findim::heisenberg_truncated(d, Q)?;
                let a = h.generator("a").expect("declared").clone();
                let b = h.generator("b").expect("declared").clone();
                let ab = h.mul(&a, &b)?;
                let mut acc = a.clone();
                for k in 1..=3usize {
                    acc = h.commutator(&acc, &ab)?;
                    let name = if k == 1 { "ac".to_string() } else { format!("ac^{k}") };
                    let expected = match h.basis_names().iter().position(|s| *s == name) {
                        Some(i) => h.basis(i),
                        None => findim::Element::zero(Q, h.dim()),
                    };
                    let ok = acc == expected;
                    holds &= ok;
                    rows.push(json!([d, k, h.render(&acc), ok]));
                }
            }
            Ok(Outcome::new(holds, json!({ "ladder": rows })))
        },
    ));
    for (stem, _, _) in example_stems() {
        out.push(Case::new(
            format!("findim-theorem2-{stem}"),
            format!("the ideal generated by the evaluated S^(n) equals T^(n)({stem}) over Q for n = 3..5"),
            move || {
                let a = example_by_stem(&stem, Q)?;
                let mut rows = Vec::new();
                let mut holds = true;
                for n in 3..=5 {
                    let from_s = ideal_from_gens_findim(&a, &sn_values(&a, n)?)?;
                    let t = tideal_findim(&a, n)?;
                    let ok = from_s.same_as(&t);
                    holds &= ok;
                    rows.push(json!({ "n": n, "dim_from_s": from_s.rank(), "dim_tn": t.rank(), "equal": ok }));
                }
                Ok(Outcome::new(holds, json!({ "algebra": stem, "checks": rows })))
            },
        ));
    }
    out.push(Case::new(
        "theorem1-refuse-z",
        "the finite criterion refuses to answer over Z, where 3 is not invertible",
        || {
            let a = findim::grassmann(3, Z)?;
            let check = verify_via_theorem(&a, 3)?;
            let refused = matches!(check.verdict, TheoremVerdict::Refused(_));
            Ok(Outcome::new(
                refused,
                json!({ "verdict": format!("{:?}", check.verdict) }),
            ))
        },
    ));
    out.push(Case::new(
        "open-char3-search",
        "forced runs over GF(3): records whether the criterion's brackets and the lower central series agree (no expected outcome)",
        || {
            let gf3 = RingSpec::prime_field(3).expect("3 is prime");
            let mut rows = Vec::new();
            for (stem, build, param) in example_stems() {
                let a = build(param, gf3)?;
                for n in 2..=5 {
                    let check = verify_via_theorem_forced(&a, n)?;
                    let oracle = lie_nilpotency_oracle(&a, n)?;
                    let theorem = check.nilpotency().map(|v| v.is_nilpotent());
                    if theorem != Some(oracle.is_nilpotent()) {
                        rows.push(json!({ "algebra": stem, "n": n, "condition": theorem, "oracle": oracle.is_nilpotent() }));
                    }
                }
            }
            Ok(Outcome::new(true, json!({ "condition_only": true, "disagreements": rows })))
        },
    ));
    out
}

/// Every case, in a fixed order.
pub fn all_cases() -> Vec<Case> {
    let mut out = vec![identities_case()];
    out.extend(sn_oracle_cases());
    out.extend(torsion_cases());
    out.extend(known_generator_cases());
    out.extend(seeded_cases());
    out.extend(t4_sum_cases());
    out.extend(commutator_product_cases());
    out.push(sn_variant_case(4));
    out.push(sn_variant_case(5));
    out.extend(findim_cases());
    out
}

/// Matches `*` against any run of characters.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut i, mut j) = (0, 0);
    let (mut star, mut mark) = (None, 0);
    while j < t.len() {
        if i < p.len() && p[i] != '*' && p[i] == t[j] {
            i += 1;
            j += 1;
        } else if i < p.len() && p[i] == '*' {
            star = Some(i);
            mark = j;
            i += 1;
        } else if let Some(s) = star {
            i = s + 1;
            mark += 1;
            j = mark;
        } else {
            return false;
        }
    }
    p[i..].iter().all(|&c| c == '*')
}

/// Cases whose id matches one of the comma-separated patterns; all cases
/// when `filter` is `None`. A pattern matching nothing is an error.
pub fn select(filter: Option<&str>) -> Result<Vec<Case>> {
    let cases = all_cases();
    let Some(filter) = filter else { return Ok(cases) };
    let patterns: Vec<&str> = filter.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    for p in &patterns {
        if !cases.iter().any(|c| glob_match(p, &c.id)) {
            return Err(Error::UnknownCase(p.to_string()));
        }
    }
    Ok(cases
        .into_iter()
        .filter(|c| patterns.iter().any(|p| glob_match(p, &c.id)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_globbable() {
        let cases = all_cases();
        let mut ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), cases.len());
        assert_eq!(select(Some("theorem2-n3-*")).unwrap().len(), 2);
        assert_eq!(select(Some("remark2-torsion")).unwrap().len(), 1);
        assert!(matches!(select(Some("no-such-case")), Err(Error::UnknownCase(_))));
        assert!(glob_match("a*c", "abbc"));
        assert!(!glob_match("a*c", "abcd"));
    }

    #[test]
    fn torsion_case_reproduces() {
        let r = select(Some("remark2-torsion")).unwrap()[0].run();
        assert_eq!(r.verdict, CaseVerdict::Holds, "{r:?}");
        assert_eq!(r.torsion_index, Some(Value::from(3)));
    }
}
