//! Strategies and property bodies shared by the property targets and the
//! acceptance suite.
#![allow(dead_code)]

use lienil::coeff::RingSpec;
use lienil::exprio::{elaborate, parse_expr, parse_poly, Expr, Sign};
use lienil::freealg::{default_names, left_normed_commutator, Poly, Word};
use lienil::ideal::{member, torsion_member, Verdict};
use lienil::linexact::{hermite_normal_form, rank_over_field, smith_normal_form, NormalFormResult, SparseMat};
use lienil::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 1000;

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn any_ring() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(RingSpec::Rationals),
        Just(RingSpec::Integers),
        Just(RingSpec::IntegersLoc3),
        Just(RingSpec::prime_field(5).unwrap()),
        Just(RingSpec::prime_field(3).unwrap()),
    ]
}

pub fn word(letters: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..=max_len).prop_map(|l| Word::from_letters(&l))
}

pub fn nonunit_word(letters: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 1..=max_len).prop_map(|l| Word::from_letters(&l))
}

pub fn poly_in(ring: RingSpec, terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word(3, 3), -4i64..=4), 0..=terms).prop_map(move |ts| Poly::from_int_terms(ring, ts))
}

pub fn poly_triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    any_ring().prop_flat_map(|r| (poly_in(r, 3), poly_in(r, 3), poly_in(r, 3)))
}

// ---- freealg ----

pub fn anticommutativity((a, b, _): (Poly, Poly, Poly)) -> Result<(), TestCaseError> {
    let ab = a.commutator(&b).unwrap();
    let ba = b.commutator(&a).unwrap();
    prop_assert!(
        ab.add(&ba).unwrap().is_zero(),
        "[a,b] + [b,a] = {}",
        ab.add(&ba).unwrap()
    );
    prop_assert!(a.commutator(&a).unwrap().is_zero());
    Ok(())
}

pub fn jacobi((a, b, c): (Poly, Poly, Poly)) -> Result<(), TestCaseError> {
    let t = |x: &Poly, y: &Poly, z: &Poly| left_normed_commutator(&[x.clone(), y.clone(), z.clone()]).unwrap();
    let sum = t(&a, &b, &c).add(&t(&b, &c, &a)).unwrap().add(&t(&c, &a, &b)).unwrap();
    prop_assert!(sum.is_zero(), "Jacobi sum = {sum}");
    // derivation rule [ab, c] = a[b, c] + [a, c]b
    let lhs = a.mul(&b).unwrap().commutator(&c).unwrap();
    let rhs = a
        .mul(&b.commutator(&c).unwrap())
        .unwrap()
        .add(&a.commutator(&c).unwrap().mul(&b).unwrap())
        .unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn partition((a, b, _): (Poly, Poly, Poly)) -> Result<(), TestCaseError> {
    let p = a.mul(&b).unwrap().add(&a).unwrap();
    let parts = p.homogeneous_components();
    let mut total = Poly::zero(p.ring());
    let mut seen = 0;
    for (mu, part) in &parts {
        prop_assert!(!part.is_zero());
        prop_assert!(part.is_homogeneous());
        let md = part.multidegree(mu.generator_count()).unwrap();
        prop_assert_eq!(md.as_ref(), Some(mu));
        for (w, c) in part.terms() {
            prop_assert_eq!(&p.coefficient(w), c);
        }
        seen += part.len();
        total = total.add(part).unwrap();
    }
    prop_assert_eq!(seen, p.len());
    prop_assert_eq!(total, p);
    Ok(())
}

// ---- ideal ----

/// A homogeneous generator family, a target built from bordered generators,
/// and an optional perturbation word of the same multidegree.
#[derive(Clone, Debug)]
pub struct MembershipInstance {
    pub ring: RingSpec,
    pub gens: Vec<Poly>,
    pub target: Poly,
    pub perturbed: bool,
}

fn bracket_of_words(ring: RingSpec, ws: &[Word]) -> Poly {
    let args: Vec<Poly> = ws.iter().map(|w| Poly::word(ring, w.clone())).collect();
    left_normed_commutator(&args).unwrap()
}

const MAX_TARGET_DEGREE: usize = 7;

pub fn membership_instance() -> impl Strategy<Value = MembershipInstance> {
    let ring = prop_oneof![
        Just(RingSpec::Rationals),
        Just(RingSpec::Integers),
        Just(RingSpec::IntegersLoc3),
        Just(RingSpec::prime_field(5).unwrap()),
    ];
    let gen = prop::collection::vec(nonunit_word(3, 2), 2..=3);
    (
        ring,
        prop::collection::vec(gen, 1..=2),
        0usize..2,
        word(3, 1),
        word(3, 1),
        prop_oneof![-3i64..=-1, 1i64..=3],
        any::<bool>(),
        any::<prop::sample::Index>(),
    )
        .prop_filter_map(
            "zero generator or oversized target",
            |(ring, gws, pick, l, r, c, perturb, rot)| {
                let gens: Vec<Poly> = gws.iter().map(|ws| bracket_of_words(ring, ws)).collect();
                if gens.iter().any(Poly::is_zero) {
                    return None;
                }
                let g = &gens[pick % gens.len()];
                let mut target = g.bordered(&l, &r).scale(&ring.from_int(c)).unwrap();
                if perturb {
                    // a rotated copy of the leading word keeps the multidegree
                    let (w, _) = target.terms().next().unwrap();
                    let mut letters: Vec<usize> = w.letters().iter().map(|&x| x as usize).collect();
                    let k = rot.index(letters.len());
                    letters.rotate_left(k);
                    let extra = Poly::word(ring, Word::from_letters(&letters));
                    target = target.add(&extra).unwrap();
                }
                // components grow fast with degree; keep each case cheap
                if target.is_zero() || target.terms().next()?.0.degree() > MAX_TARGET_DEGREE {
                    return None;
                }
                Some(MembershipInstance {
                    ring,
                    gens,
                    target,
                    perturbed: perturb,
                })
            },
        )
}

pub fn certificate_soundness(inst: MembershipInstance) -> Result<(), TestCaseError> {
    let cert = member(&inst.target, &inst.gens).unwrap();
    prop_assert!(
        cert.verify(&inst.target),
        "certificate for {} does not verify",
        inst.target
    );
    if cert.is_member() {
        prop_assert_eq!(cert.expand(&inst.target).unwrap(), inst.target.clone());
    } else {
        prop_assert!(cert.witness.is_empty());
        prop_assert!(cert.rank.is_some());
    }
    if !inst.perturbed {
        // a single bordered generator is a member over every ring
        prop_assert_eq!(&cert.verdict, &Verdict::Member);
    }
    if inst.ring == RingSpec::Integers {
        let t = torsion_member(&inst.target, &inst.gens).unwrap();
        prop_assert!(t.verify(&inst.target));
        match (&cert.verdict, &t.verdict) {
            (Verdict::Member, v) => prop_assert!(t.is_member(), "torsion verdict {}", v),
            (Verdict::NonMember, Verdict::Torsion(k)) => {
                prop_assert!(*k > BigInt::one());
                let k_target = inst.target.scale(&inst.ring.from_bigint(k)).unwrap();
                prop_assert!(member(&k_target, &inst.gens).unwrap().is_member());
            }
            (Verdict::NonMember, Verdict::NonMember) => {}
            (a, b) => prop_assert!(false, "member {a} vs torsion {b}"),
        }
    } else {
        prop_assert!(matches!(
            torsion_member(&inst.target, &inst.gens),
            Err(Error::RequiresIntegers(_))
        ));
    }
    Ok(())
}

// ---- linexact ----

pub fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn sparse(rows: &[Vec<i64>]) -> SparseMat {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    SparseMat::from_ints(RingSpec::Integers, rows[0].len(), &refs).unwrap()
}

fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

/// Gaussian elimination over the rationals.
fn det(m: &[Vec<BigInt>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d *= a[col][col].clone();
        for i in col + 1..n {
            let f = &a[i][col] / &a[col][col];
            for j in col..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k-by-k minors.
fn determinantal_divisor(a: &[Vec<BigInt>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(a.len(), k) {
        for cs in subsets(a[0].len(), k) {
            let minor: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect())
                .collect();
            g = g.gcd(&det(&minor).to_integer());
        }
    }
    g
}

pub fn hermite_transform(rows: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let m = sparse(&rows);
    let a = big(&rows);
    let res = hermite_normal_form(&m).unwrap();
    prop_assert!(res.verify(&m));
    let NormalFormResult::Hermite { h, u } = res else {
        return Err(TestCaseError::fail("expected a Hermite result"));
    };
    prop_assert!(det(&u).abs().is_one(), "transform is not unimodular");
    let ua = mul(&u, &a);
    prop_assert_eq!(&ua[..h.len()], &h[..]);
    prop_assert!(ua[h.len()..].iter().flatten().all(Zero::is_zero));
    prop_assert_eq!(h.len(), rank_over_field(&sparse_q(&rows)).unwrap());
    let mut last = None;
    for (i, row) in h.iter().enumerate() {
        let c = row.iter().position(|x| !x.is_zero()).unwrap();
        prop_assert!(last.is_none_or(|l| c > l));
        prop_assert!(row[c].is_positive());
        for above in &h[..i] {
            prop_assert!(!above[c].is_negative() && above[c] < row[c]);
        }
        last = Some(c);
    }
    Ok(())
}

fn sparse_q(rows: &[Vec<i64>]) -> SparseMat {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    SparseMat::from_ints(RingSpec::Rationals, rows[0].len(), &refs).unwrap()
}

pub fn smith_transform(rows: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let m = sparse(&rows);
    let a = big(&rows);
    let res = smith_normal_form(&m).unwrap();
    prop_assert!(res.verify(&m));
    let NormalFormResult::Smith { diagonal, u, v } = res else {
        return Err(TestCaseError::fail("expected a Smith result"));
    };
    prop_assert!(det(&u).abs().is_one() && det(&v).abs().is_one());
    let uav = mul(&mul(&u, &a), &v);
    for (i, row) in uav.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let want = if i == j && i < diagonal.len() {
                diagonal[i].clone()
            } else {
                BigInt::zero()
            };
            prop_assert_eq!(x, &want);
        }
    }
    // d_1 ... d_k equals the k-th determinantal divisor
    let mut prod = BigInt::one();
    for (k, d) in diagonal.iter().enumerate() {
        prod *= d;
        prop_assert_eq!(&prod, &determinantal_divisor(&a, k + 1));
    }
    prop_assert!(determinantal_divisor(&a, diagonal.len() + 1).is_zero() || diagonal.len() == a.len().min(a[0].len()));
    Ok(())
}

// ---- exprio ----

pub fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0usize..3).prop_map(|i| Expr::generator(&format!("x{}", i + 1), i)),
        (0u32..7).prop_map(|n| Expr::Scalar(n.to_string())),
        (1u32..7).prop_map(|n| Expr::Scalar(format!("{n}/3"))),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Expr::Bracket),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Expr::Product),
            prop::collection::vec((sign, inner), 1..=3).prop_map(Expr::Sum),
        ]
    })
}

pub fn field_like_ring() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(RingSpec::Rationals),
        Just(RingSpec::IntegersLoc3),
        Just(RingSpec::prime_field(5).unwrap()),
    ]
}

pub fn render_parse_round_trip((ring, e): (RingSpec, Expr)) -> Result<(), TestCaseError> {
    let names = default_names(3);
    let text = e.to_string();
    let reparsed = parse_expr(&text, &names).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
    prop_assert_eq!(elaborate(&reparsed, ring).unwrap(), elaborate(&e, ring).unwrap());
    Ok(())
}

pub fn poly_text_round_trip(p: Poly) -> Result<(), TestCaseError> {
    let names = default_names(3);
    let text = p.render(&names);
    let q = parse_poly(&text, &names, p.ring()).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
    prop_assert_eq!(q, p);
    Ok(())
}

pub fn one_entry_bracket_rejected(e: Expr) -> Result<(), TestCaseError> {
    let names = default_names(3);
    let text = format!("x1 + [{e}]");
    match parse_expr(&text, &names) {
        Err(Error::Parse { line, column, .. }) => {
            prop_assert_eq!(line, 1);
            prop_assert_eq!(column, 6);
        }
        other => prop_assert!(false, "{text} gave {other:?}"),
    }
    Ok(())
}
