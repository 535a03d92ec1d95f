//! Commutator expansion identities and the right-letter rewriting of a
//! commutator of two words.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::{RingSpec, Scalar};
use crate::error::{Error, Result};

use super::poly::{left_normed_commutator, Poly};
use super::word::Word;

/// Names of the expansion identities for commutators with a product in the
/// first slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityName {
    /// `[a1 a2, b] = a1 [a2, b] + [a1, b] a2`
    Prod2Once,
    /// `[a1 ... ak, b] = sum_i a1..a(i-1) [ai, b] a(i+1)..ak`
    ProdKOnce,
    /// `[a1 a2, b1, b2]`
    Prod2Twice,
    /// `[a1 ... ak, b1, b2]`
    ProdKTwice,
    /// `[a1 a2, b1, b2, b3]`
    Prod2Thrice,
}

impl IdentityName {
    pub const ALL: [IdentityName; 5] = [
        IdentityName::Prod2Once,
        IdentityName::ProdKOnce,
        IdentityName::Prod2Twice,
        IdentityName::ProdKTwice,
        IdentityName::Prod2Thrice,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityName::Prod2Once => "prod2_once",
            IdentityName::ProdKOnce => "prodk_once",
            IdentityName::Prod2Twice => "prod2_twice",
            IdentityName::ProdKTwice => "prodk_twice",
            IdentityName::Prod2Thrice => "prod2_thrice",
        }
    }

    /// Number of trailing (non-product) arguments.
    fn tail(&self) -> usize {
        match self {
            IdentityName::Prod2Once | IdentityName::ProdKOnce => 1,
            IdentityName::Prod2Twice | IdentityName::ProdKTwice => 2,
            IdentityName::Prod2Thrice => 3,
        }
    }

    fn fixed_product_len(&self) -> Option<usize> {
        match self {
            IdentityName::ProdKOnce | IdentityName::ProdKTwice => None,
            _ => Some(2),
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

fn product(ps: &[Poly], ring: RingSpec) -> Result<Poly> {
    ps.iter().try_fold(Poly::one(ring), |acc, p| acc.mul(p))
}

fn bracket(parts: &[&Poly]) -> Result<Poly> {
    let owned: Vec<Poly> = parts.iter().map(|p| (*p).clone()).collect();
    left_normed_commutator(&owned)
}

/// Both sides of a named identity instantiated at `args`.
///
/// Arguments are the product factors `a1, ..., ak` followed by the bracket
/// arguments `b1, ...`. Every instantiation satisfies `lhs == rhs`.
pub fn identity_instance(name: IdentityName, args: &[Poly]) -> Result<(Poly, Poly)> {
    let tail = name.tail();
    let arity_err = || Error::Arity {
        name: name.to_string(),
        expected: match name.fixed_product_len() {
            Some(k) => (k + tail).to_string(),
            None => format!("at least {}", tail + 1),
        },
        got: args.len(),
    };
    if args.len() < tail + 1 {
        return Err(arity_err());
    }
    let k = args.len() - tail;
    if let Some(fixed) = name.fixed_product_len() {
        if k != fixed {
            return Err(arity_err());
        }
    }
    let ring = args[0].ring();
    let (a, b) = args.split_at(k);

    let mut lhs_args = vec![product(a, ring)?];
    lhs_args.extend(b.iter().cloned());
    let lhs = left_normed_commutator(&lhs_args)?;

    let pre = |i: usize| product(&a[..i], ring);
    let mid = |i: usize, j: usize| product(&a[i + 1..j], ring);
    let post = |i: usize| product(&a[i + 1..], ring);

    let rhs = match name {
        IdentityName::Prod2Once | IdentityName::ProdKOnce => {
            let mut acc = Poly::zero(ring);
            for i in 0..k {
                let t = pre(i)?.mul(&bracket(&[&a[i], &b[0]])?)?.mul(&post(i)?)?;
                acc = acc.add(&t)?;
            }
            acc
        }
        IdentityName::Prod2Twice | IdentityName::ProdKTwice => {
            let mut acc = Poly::zero(ring);
            for i in 0..k {
                let t = pre(i)?.mul(&bracket(&[&a[i], &b[0], &b[1]])?)?.mul(&post(i)?)?;
                acc = acc.add(&t)?;
            }
            for i in 0..k {
                for j in i + 1..k {
                    for (p, q) in [(&b[0], &b[1]), (&b[1], &b[0])] {
                        let t = pre(i)?
                            .mul(&bracket(&[&a[i], p])?)?
                            .mul(&mid(i, j)?)?
                            .mul(&bracket(&[&a[j], q])?)?
                            .mul(&post(j)?)?;
                        acc = acc.add(&t)?;
                    }
                }
            }
            acc
        }
        IdentityName::Prod2Thrice => {
            let (a1, a2) = (&a[0], &a[1]);
            let (b1, b2, b3) = (&b[0], &b[1], &b[2]);
            let terms = [
                a1.mul(&bracket(&[a2, b1, b2, b3])?)?,
                bracket(&[a1, b1])?.mul(&bracket(&[a2, b2, b3])?)?,
                bracket(&[a1, b2])?.mul(&bracket(&[a2, b1, b3])?)?,
                bracket(&[a1, b3])?.mul(&bracket(&[a2, b1, b2])?)?,
                bracket(&[a1, b1, b2])?.mul(&bracket(&[a2, b3])?)?,
                bracket(&[a1, b1, b3])?.mul(&bracket(&[a2, b2])?)?,
                bracket(&[a1, b2, b3])?.mul(&bracket(&[a2, b1])?)?,
                bracket(&[a1, b1, b2, b3])?.mul(a2)?,
            ];
            terms.iter().try_fold(Poly::zero(ring), |acc, t| acc.add(t))?
        }
    };
    Ok((lhs, rhs))
}

/// A term `coeff · [left, x]` with `left` a word and `x` a single generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightLetterCommutator {
    pub coeff: Scalar,
    pub left: Word,
    pub letter: usize,
}

impl RightLetterCommutator {
    pub fn expand(&self) -> Poly {
        let ring = self.coeff.ring();
        let d = Poly::word(ring, self.left.clone());
        let x = Poly::letter(ring, self.letter);
        d.commutator(&x)
            .and_then(|c| c.scale(&self.coeff))
            .expect("terms share one ring")
    }
}

/// Rewrites `[w1, w2]` as a sum of commutators `[d, x]` with `x` a letter by
/// telescoping over the letters of `w2`, last letter first.
pub fn right_letter_decomposition(w1: &Word, w2: &Word, ring: RingSpec) -> Vec<RightLetterCommutator> {
    if w1.is_unit() || w2.is_unit() {
        return Vec::new();
    }
    let z = w2.letters();
    let l = z.len();
    (1..=l)
        .rev()
        .map(|j| {
            // z_{j+1} .. z_l  w1  z_1 .. z_{j-1}
            let left = Word::from_raw(&z[j..]).sandwich(w1, &Word::from_raw(&z[..j - 1]));
            RightLetterCommutator {
                coeff: ring.one(),
                left,
                letter: z[j - 1] as usize,
            }
        })
        .collect()
}

/// Recovers words `(w1, w2)` with `p = [w1, w2]`, for `p` nonzero.
pub fn commutator_words(p: &Poly) -> Result<(Word, Word)> {
    let ring = p.ring();
    if p.len() != 2 {
        return Err(Error::MalformedCommutator);
    }
    let minus_one = ring.one().neg();
    let mut pos = None;
    let mut neg = None;
    for (w, c) in p.terms() {
        if c.is_one() && pos.is_none() {
            pos = Some(w);
        } else if *c == minus_one && neg.is_none() {
            neg = Some(w);
        } else {
            return Err(Error::MalformedCommutator);
        }
    }
    let (t, u) = match (pos, neg) {
        (Some(t), Some(u)) => (t.letters(), u.letters()),
        _ => return Err(Error::MalformedCommutator),
    };
    if t.len() != u.len() {
        return Err(Error::MalformedCommutator);
    }
    for i in 1..t.len() {
        if t[i..] == u[..t.len() - i] && t[..i] == u[t.len() - i..] {
            return Ok((Word::from_raw(&t[..i]), Word::from_raw(&t[i..])));
        }
    }
    Err(Error::MalformedCommutator)
}

/// The polynomial-level rewriting: `p` must be a commutator of two words.
/// Returns `(coefficient, [d, x])` pairs summing to `p`.
pub fn rewrite_as_right_letter_commutators(p: &Poly) -> Result<Vec<(Scalar, Poly)>> {
    if p.is_zero() {
        return Ok(Vec::new());
    }
    let (w1, w2) = commutator_words(p)?;
    Ok(right_letter_decomposition(&w1, &w2, p.ring())
        .into_iter()
        .map(|t| {
            let ring = t.coeff.ring();
            let bracket = Poly::word(ring, t.left.clone())
                .commutator(&Poly::letter(ring, t.letter))
                .expect("same ring");
            (t.coeff, bracket)
        })
        .collect())
}

/// One entry of an identity table: a family name and a builder producing
/// both sides from a random argument list.
#[derive(Clone)]
pub struct IdentityFamily {
    pub name: String,
    /// Draws the argument count for one sample.
    pub arity: fn(&mut ChaCha8Rng) -> usize,
    pub build: fn(&[Poly]) -> Result<(Poly, Poly)>,
}

fn arity_prod2_once(_: &mut ChaCha8Rng) -> usize {
    3
}
fn arity_prodk_once(r: &mut ChaCha8Rng) -> usize {
    r.gen_range(1..=4) + 1
}
fn arity_prod2_twice(_: &mut ChaCha8Rng) -> usize {
    4
}
fn arity_prodk_twice(r: &mut ChaCha8Rng) -> usize {
    r.gen_range(1..=4) + 2
}
fn arity_prod2_thrice(_: &mut ChaCha8Rng) -> usize {
    5
}
fn arity_l2(_: &mut ChaCha8Rng) -> usize {
    2
}

fn build_prod2_once(a: &[Poly]) -> Result<(Poly, Poly)> {
    identity_instance(IdentityName::Prod2Once, a)
}
fn build_prodk_once(a: &[Poly]) -> Result<(Poly, Poly)> {
    identity_instance(IdentityName::ProdKOnce, a)
}
fn build_prod2_twice(a: &[Poly]) -> Result<(Poly, Poly)> {
    identity_instance(IdentityName::Prod2Twice, a)
}
fn build_prodk_twice(a: &[Poly]) -> Result<(Poly, Poly)> {
    identity_instance(IdentityName::ProdKTwice, a)
}
fn build_prod2_thrice(a: &[Poly]) -> Result<(Poly, Poly)> {
    identity_instance(IdentityName::Prod2Thrice, a)
}

/// Right-letter rewriting checked as an identity: `[w1, w2]` against the sum
/// of its right-letter commutators. Arguments must be single words.
fn build_right_letter(a: &[Poly]) -> Result<(Poly, Poly)> {
    let word_of = |p: &Poly| -> Result<Word> {
        match p.terms().next() {
            Some((w, c)) if p.len() == 1 && c.is_one() => Ok(w.clone()),
            None => Ok(Word::unit()),
            _ => Err(Error::MalformedCommutator),
        }
    };
    let ring = a[0].ring();
    let (w1, w2) = (word_of(&a[0])?, word_of(&a[1])?);
    let lhs = a[0].commutator(&a[1])?;
    let rhs = right_letter_decomposition(&w1, &w2, ring)
        .iter()
        .try_fold(Poly::zero(ring), |acc, t| acc.add(&t.expand()))?;
    Ok((lhs, rhs))
}

/// The standard table: the five expansion identities and the right-letter
/// rewriting.
pub fn standard_identity_table() -> Vec<IdentityFamily> {
    vec![
        IdentityFamily {
            name: "prod2_once".into(),
            arity: arity_prod2_once,
            build: build_prod2_once,
        },
        IdentityFamily {
            name: "prodk_once".into(),
            arity: arity_prodk_once,
            build: build_prodk_once,
        },
        IdentityFamily {
            name: "prod2_twice".into(),
            arity: arity_prod2_twice,
            build: build_prod2_twice,
        },
        IdentityFamily {
            name: "prodk_twice".into(),
            arity: arity_prodk_twice,
            build: build_prodk_twice,
        },
        IdentityFamily {
            name: "prod2_thrice".into(),
            arity: arity_prod2_thrice,
            build: build_prod2_thrice,
        },
        IdentityFamily {
            name: "right_letter".into(),
            arity: arity_l2,
            build: build_right_letter,
        },
    ]
}

/// Per-family, per-ring outcome of a randomized identity run.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityTally {
    pub family: String,
    pub ring: String,
    pub passed: usize,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Random nonunit word of degree 1..=`max_degree` over `generators` letters.
pub fn random_word(rng: &mut ChaCha8Rng, generators: usize, max_degree: usize) -> Word {
    let len = rng.gen_range(1..=max_degree);
    let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..generators)).collect();
    Word::from_letters(&letters)
}

/// Checks every family on `samples` random word instantiations per ring.
/// Words have degree at most 4 over four generators. Deterministic in `seed`.
pub fn run_identity_suite(
    table: &[IdentityFamily],
    rings: &[RingSpec],
    samples: usize,
    seed: u64,
) -> Vec<IdentityTally> {
    let mut out = Vec::new();
    for (fi, fam) in table.iter().enumerate() {
        for (ri, ring) in rings.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((fi as u64) << 32) ^ ri as u64);
            let mut passed = 0;
            let mut counterexample = None;
            for _ in 0..samples {
                let n = (fam.arity)(&mut rng);
                let args: Vec<Poly> = (0..n).map(|_| Poly::word(*ring, random_word(&mut rng, 4, 4))).collect();
                let ok = match (fam.build)(&args) {
                    Ok((l, r)) => l == r,
                    Err(_) => false,
                };
                if ok {
                    passed += 1;
                } else if counterexample.is_none() {
                    let shown: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                    counterexample = Some(format!("{}({})", fam.name, shown.join(", ")));
                }
            }
            out.push(IdentityTally {
                family: fam.name.clone(),
                ring: ring.to_string(),
                passed,
                samples,
                counterexample,
            });
        }
    }
    out
}

/// The five rings exercised by the identity suite.
pub fn identity_suite_rings() -> Vec<RingSpec> {
    vec![
        RingSpec::Rationals,
        RingSpec::Integers,
        RingSpec::IntegersLoc3,
        RingSpec::prime_field(5).expect("5 is prime"),
        RingSpec::prime_field(3).expect("3 is prime"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::letter(RingSpec::Rationals, i)
    }

    #[test]
    fn named_instances_hold() {
        let (l, r) = identity_instance(IdentityName::Prod2Once, &[x(0), x(1), x(2)]).unwrap();
        assert_eq!(l, r);
        let (l, r) = identity_instance(IdentityName::Prod2Twice, &[x(0), x(1), x(2), x(3)]).unwrap();
        assert_eq!(l, r);
        let args: Vec<Poly> = (0..5).map(x).collect();
        let (l, r) = identity_instance(IdentityName::Prod2Thrice, &args).unwrap();
        assert_eq!(l, r);
        let (l, r) = identity_instance(IdentityName::ProdKTwice, &args).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn arity_errors() {
        assert!(identity_instance(IdentityName::Prod2Once, &[x(0), x(1)]).is_err());
        assert!(identity_instance(IdentityName::Prod2Thrice, &[x(0), x(1), x(2), x(3)]).is_err());
        assert!("prod3".parse::<IdentityName>().is_err());
        assert_eq!("prodk_twice".parse::<IdentityName>().unwrap(), IdentityName::ProdKTwice);
    }

    #[test]
    fn right_letter_examples() {
        let r = RingSpec::Rationals;
        let c = x(0).commutator(&x(1)).unwrap();
        let d = rewrite_as_right_letter_commutators(&c).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, c);

        let w = |l: &[usize]| Poly::word(r, Word::from_letters(l));
        let c = w(&[0, 1]).commutator(&w(&[2, 3])).unwrap();
        let d = right_letter_decomposition(&Word::from_letters(&[0, 1]), &Word::from_letters(&[2, 3]), r);
        assert_eq!(d[0].left, Word::from_letters(&[0, 1, 2]));
        assert_eq!(d[0].letter, 3);
        assert_eq!(d[1].left, Word::from_letters(&[3, 0, 1]));
        assert_eq!(d[1].letter, 2);
        let back = rewrite_as_right_letter_commutators(&c).unwrap();
        let sum = back
            .iter()
            .fold(Poly::zero(r), |acc, (k, p)| acc.add(&p.scale(k).unwrap()).unwrap());
        assert_eq!(sum, c);
    }

    #[test]
    fn right_letter_single_then_pair() {
        // [x1, x2 x3] = [x1 x2, x3] + [x3 x1, x2]
        let r = RingSpec::Rationals;
        let d = right_letter_decomposition(&Word::letter(0), &Word::from_letters(&[1, 2]), r);
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].left.clone(), d[0].letter), (Word::from_letters(&[0, 1]), 2));
        assert_eq!((d[1].left.clone(), d[1].letter), (Word::from_letters(&[2, 0]), 1));
    }

    #[test]
    fn malformed_commutators() {
        let p = x(0).add(&x(1)).unwrap();
        assert!(rewrite_as_right_letter_commutators(&p).is_err());
        let q = x(0).mul(&x(1)).unwrap().sub(&x(0).mul(&x(0)).unwrap()).unwrap();
        assert!(rewrite_as_right_letter_commutators(&q).is_err());
    }

    #[test]
    fn periodic_words_recover() {
        // [x1 x2, x1 x2 x1 x2] = 0, but [x1x2, x1] is nonzero and periodic-free
        let r = RingSpec::Integers;
        let w = |l: &[usize]| Poly::word(r, Word::from_letters(l));
        let c = w(&[0, 1, 0]).commutator(&w(&[0, 1])).unwrap();
        let (a, b) = commutator_words(&c).unwrap();
        assert_eq!(Poly::word(r, a).commutator(&Poly::word(r, b)).unwrap(), c);
    }

    #[test]
    fn suite_passes_and_detects_corruption() {
        let rings = identity_suite_rings();
        let tallies = run_identity_suite(&standard_identity_table(), &rings, 10, 1);
        assert!(tallies.iter().all(|t| t.passed == t.samples));

        fn broken(a: &[Poly]) -> Result<(Poly, Poly)> {
            // drops the [a1, b] a2 term
            let lhs = a[0].mul(&a[1])?.commutator(&a[2])?;
            let rhs = a[0].mul(&a[1].commutator(&a[2])?)?;
            Ok((lhs, rhs))
        }
        let mut table = standard_identity_table();
        table[0].build = broken;
        let tallies = run_identity_suite(&table[..1], &rings[..1], 20, 1);
        assert!(tallies[0].passed < 20);
        assert!(tallies[0].counterexample.is_some());
    }
}
