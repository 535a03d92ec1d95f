//! Named generating families of commutator ideals.
//!
//! Each family is a list of forms (polynomial shapes with slots). A family can
//! be expanded into an explicit list over `generator_count` letters, or used as
//! a [`GeneratorSource`] that emits only the substitutions of one exact
//! multidegree.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::freealg::{left_normed_commutator, nonunit_words_within, MultiDegree, Poly, Word};
use crate::ideal::{brackets_of_degree, GeneratorSource};

/// Which redundant generators to drop from an expanded list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pruning {
    /// Raw substitutions, zeros included.
    None,
    #[default]
    Zeros,
    /// Zeros, duplicates, and scalar multiples by units of the ring (up to
    /// sign over the integers).
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Letter,
    LetterOrPair,
    Pair,
    Seed,
    /// Nonunit word.
    Word,
    /// Any word, unit included.
    Border,
}

impl Slot {
    fn min_degree(self, seed_min: u32) -> u32 {
        match self {
            Slot::Letter | Slot::LetterOrPair | Slot::Word => 1,
            Slot::Pair => 2,
            Slot::Seed => seed_min,
            Slot::Border => 0,
        }
    }
}

type Build = fn(&[Poly]) -> Result<Poly>;

#[derive(Clone)]
struct Form {
    slots: Vec<Slot>,
    build: Build,
}

fn form(slots: Vec<Slot>, build: Build) -> Form {
    Form { slots, build }
}

fn c(args: &[&Poly]) -> Result<Poly> {
    let owned: Vec<Poly> = args.iter().map(|p| (*p).clone()).collect();
    left_normed_commutator(&owned)
}

fn bracket_all(v: &[Poly]) -> Result<Poly> {
    left_normed_commutator(v)
}

/// `[a,b][c,d] + [a,c][b,d]`
fn latyshev_pair(a: &Poly, b: &Poly, cc: &Poly, d: &Poly) -> Result<Poly> {
    c(&[a, b])?.mul(&c(&[cc, d])?)?.add(&c(&[a, cc])?.mul(&c(&[b, d])?)?)
}

fn t3_form2(v: &[Poly]) -> Result<Poly> {
    latyshev_pair(&v[0], &v[1], &v[2], &v[3])
}

fn t4_form2(v: &[Poly]) -> Result<Poly> {
    c(&[&v[0], &v[1]])?.mul(&c(&[&v[2], &v[3], &v[4]])?)
}

fn t4_form3(v: &[Poly]) -> Result<Poly> {
    latyshev_pair(&v[0], &v[1], &v[2], &v[3])?.mul(&c(&[&v[4], &v[5]])?)
}

fn z4_triple_triple(v: &[Poly]) -> Result<Poly> {
    c(&[&v[0], &v[1], &v[2]])?.mul(&c(&[&v[3], &v[4], &v[5]])?)
}

fn z4_swap_45(v: &[Poly]) -> Result<Poly> {
    let a = c(&[&v[0], &v[1], &v[2]])?.mul(&c(&[&v[3], &v[4]])?)?;
    a.add(&c(&[&v[0], &v[1], &v[3]])?.mul(&c(&[&v[2], &v[4]])?)?)
}

fn z4_swap_24(v: &[Poly]) -> Result<Poly> {
    let a = c(&[&v[0], &v[1], &v[2]])?.mul(&c(&[&v[3], &v[4]])?)?;
    a.add(&c(&[&v[0], &v[3], &v[2]])?.mul(&c(&[&v[1], &v[4]])?)?)
}

fn w_form1(v: &[Poly]) -> Result<Poly> {
    c(&[&v[0], &v[1], &v[2]])
}

fn w_form2(v: &[Poly]) -> Result<Poly> {
    v[0].mul(&c(&[&v[1], &v[2], &v[3]])?)
}

fn w_form3(v: &[Poly]) -> Result<Poly> {
    c(&[&v[0], &v[1]])?.mul(&c(&[&v[2], &v[3], &v[4]])?)
}

fn w_form4(v: &[Poly]) -> Result<Poly> {
    let a = c(&[&v[0], &v[1]])?.mul(&c(&[&v[2], &v[3]])?)?;
    a.add(&c(&[&v[0], &v[2]])?.mul(&c(&[&v[1], &v[3]])?)?)
}

fn w_form5(v: &[Poly]) -> Result<Poly> {
    v[0].mul(&latyshev_pair(&v[1], &v[2], &v[3], &v[4])?)
}

/// `[b1 s b2, b3, b4]`
fn w_oracle(v: &[Poly]) -> Result<Poly> {
    let u = v[0].mul(&v[1])?.mul(&v[2])?;
    c(&[&u, &v[3], &v[4]])
}

fn letters(k: usize) -> Vec<Slot> {
    vec![Slot::Letter; k]
}

fn w_forms_list(which: &[usize]) -> Vec<Form> {
    use Slot::*;
    let all = [
        form(vec![Seed, Letter, Letter], w_form1),
        form(vec![Seed, Letter, Letter, Letter], w_form2),
        form(vec![Seed, Letter, Letter, Letter, Letter], w_form3),
        form(vec![Seed, Letter, Letter, Letter], w_form4),
        form(vec![Seed, Letter, Letter, Letter, Letter], w_form5),
    ];
    which.iter().map(|&i| all[i - 1].clone()).collect()
}

/// A named generating family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// `[y1, ..., yn]`, `y1, yn` letters, middle entries in `X` or `X^2`.
    Sn(usize),
    /// All `[m1, ..., mn]` with nonunit words `m_i`.
    TnOracle(usize),
    LatyshevT3,
    VolichenkoT4,
    /// The generating set of `T^(4)` valid without `1/3`.
    IntegerT4,
    /// The five forms generating `W` for the seed set.
    WForms(Vec<Poly>),
    /// The five forms minus `[s,x1][x2,x3,x4]`.
    WFourForms(Vec<Poly>),
    /// Forms `[s,x1,x2]` and `[s,x1][x2,x3] + [s,x2][x1,x3]`.
    IPrimeForms(Vec<Poly>),
    /// All `[b1 s b2, b3, b4]` with words `b_i`, `b3, b4` nonunit.
    WOracle(Vec<Poly>),
    /// Brackets with one `X^2` entry at position `k` (1-based) and letters
    /// elsewhere.
    SnVariantS {
        n: usize,
        k: usize,
    },
    /// The same with `k = 2`.
    SnVariantSPrime(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Sn(_) => "Sn",
            FamilySpec::TnOracle(_) => "TnOracle",
            FamilySpec::LatyshevT3 => "LatyshevT3",
            FamilySpec::VolichenkoT4 => "VolichenkoT4",
            FamilySpec::IntegerT4 => "IntegerT4",
            FamilySpec::WForms(_) => "WForms",
            FamilySpec::WFourForms(_) => "WFourForms",
            FamilySpec::IPrimeForms(_) => "IPrimeForms",
            FamilySpec::WOracle(_) => "WOracle",
            FamilySpec::SnVariantS { .. } => "SnVariantS",
            FamilySpec::SnVariantSPrime(_) => "SnVariantSPrime",
        }
    }

    /// The seed set `S = {[x1, x2]}` used when none is given.
    pub fn default_seeds(ring: RingSpec) -> Vec<Poly> {
        vec![Poly::letter(ring, 0)
            .commutator(&Poly::letter(ring, 1))
            .expect("same ring")]
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        match self {
            FamilySpec::Sn(n) | FamilySpec::TnOracle(n) if *n < 2 => bad(format!("n must be at least 2, got {n}")),
            FamilySpec::SnVariantSPrime(n) if *n < 3 => bad(format!("n must be at least 3, got {n}")),
            FamilySpec::SnVariantS { n, k } if *k < 2 || *k + 1 > *n => {
                bad(format!("position k={k} outside 2..={}", n.saturating_sub(1)))
            }
            FamilySpec::WForms(s) | FamilySpec::WFourForms(s) | FamilySpec::IPrimeForms(s) | FamilySpec::WOracle(s) => {
                if s.is_empty() {
                    return bad("seed set S is empty".into());
                }
                for p in s {
                    if !p.is_homogeneous() {
                        return Err(Error::Inhomogeneous);
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn forms(&self) -> Vec<Form> {
        use Slot::*;
        match self {
            FamilySpec::Sn(n) => {
                let mut s = vec![Letter];
                s.extend(std::iter::repeat_n(LetterOrPair, n - 2));
                s.push(Letter);
                vec![form(s, bracket_all)]
            }
            FamilySpec::TnOracle(n) => vec![form(vec![Word; *n], bracket_all)],
            FamilySpec::LatyshevT3 => vec![form(letters(3), bracket_all), form(letters(4), t3_form2)],
            FamilySpec::VolichenkoT4 => vec![
                form(letters(4), bracket_all),
                form(letters(5), t4_form2),
                form(letters(6), t4_form3),
            ],
            FamilySpec::IntegerT4 => vec![
                form(letters(4), bracket_all),
                form(letters(6), t4_form3),
                form(letters(6), z4_triple_triple),
                form(letters(5), z4_swap_45),
                form(letters(5), z4_swap_24),
            ],
            FamilySpec::WForms(_) => w_forms_list(&[1, 2, 3, 4, 5]),
            FamilySpec::WFourForms(_) => w_forms_list(&[1, 2, 4, 5]),
            FamilySpec::IPrimeForms(_) => w_forms_list(&[1, 4]),
            FamilySpec::WOracle(_) => vec![form(vec![Border, Seed, Border, Word, Word], w_oracle)],
            FamilySpec::SnVariantS { n, k } => {
                let mut s = letters(*n);
                s[k - 1] = Pair;
                vec![form(s, bracket_all)]
            }
            FamilySpec::SnVariantSPrime(n) => {
                let mut s = letters(*n);
                s[1] = Pair;
                vec![form(s, bracket_all)]
            }
        }
    }

    fn seeds(&self) -> &[Poly] {
        match self {
            FamilySpec::WForms(s) | FamilySpec::WFourForms(s) | FamilySpec::IPrimeForms(s) | FamilySpec::WOracle(s) => {
                s
            }
            _ => &[],
        }
    }

    fn has_unbounded_slots(&self) -> bool {
        matches!(self, FamilySpec::TnOracle(_) | FamilySpec::WOracle(_))
    }

    /// Every substitution of letters `x1..x_count` into the forms.
    ///
    /// The oracle families have word slots of unbounded length and are only
    /// available through [`FamilySpec::source`].
    pub fn generators(&self, ring: RingSpec, generator_count: usize, pruning: Pruning) -> Result<Vec<Poly>> {
        self.validate()?;
        if self.has_unbounded_slots() {
            return Err(Error::InvalidParameter(format!(
                "{} has word slots; enumerate it per multidegree",
                self.name()
            )));
        }
        check_seed_ring(ring, self.seeds())?;
        let alphabet = slot_alphabet(ring, generator_count);
        let mut out = Vec::new();
        for f in self.forms() {
            let mut cur = Vec::with_capacity(f.slots.len());
            expand_all(&f, &alphabet, self.seeds(), &mut cur, &mut out)?;
        }
        Ok(prune(out, pruning))
    }

    /// A source emitting the generators of each exact multidegree.
    pub fn source(&self, ring: RingSpec) -> Result<Arc<dyn GeneratorSource>> {
        self.validate()?;
        check_seed_ring(ring, self.seeds())?;
        let seeds = self
            .seeds()
            .iter()
            .map(|s| {
                let d = s.multidegree(s.width())?.ok_or(Error::Inhomogeneous)?;
                Ok((s.clone(), d))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(FamilySource {
            ring,
            spec: self.clone(),
            forms: self.forms(),
            seeds,
        }))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Sn(n) | FamilySpec::TnOracle(n) | FamilySpec::SnVariantSPrime(n) => {
                write!(f, "{}:{n}", self.name())
            }
            FamilySpec::SnVariantS { n, k } => write!(f, "SnVariantS:{n}:{k}"),
            _ => write!(f, "{}", self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `Sn:<n>`, `TnOracle:<n>`, `SnVariantS:<n>:<k>`,
    /// `SnVariantSPrime:<n>` or a bare family name. Seeded families get the
    /// default seed set over the rationals; see [`FamilySpec::with_ring`].
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default();
        let nums = parts
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad family parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Arity {
                    name: name.to_string(),
                    expected: k.to_string(),
                    got: nums.len(),
                })
            }
        };
        let seeds = FamilySpec::default_seeds(RingSpec::Rationals);
        let spec = match name {
            "Sn" => {
                arity(1)?;
                FamilySpec::Sn(nums[0])
            }
            "TnOracle" => {
                arity(1)?;
                FamilySpec::TnOracle(nums[0])
            }
            "SnVariantS" => {
                arity(2)?;
                FamilySpec::SnVariantS { n: nums[0], k: nums[1] }
            }
            "SnVariantSPrime" => {
                arity(1)?;
                FamilySpec::SnVariantSPrime(nums[0])
            }
            other => {
                arity(0)?;
                match other {
                    "LatyshevT3" => FamilySpec::LatyshevT3,
                    "VolichenkoT4" => FamilySpec::VolichenkoT4,
                    "IntegerT4" => FamilySpec::IntegerT4,
                    "WForms" => FamilySpec::WForms(seeds),
                    "WFourForms" => FamilySpec::WFourForms(seeds),
                    "IPrimeForms" => FamilySpec::IPrimeForms(seeds),
                    "WOracle" => FamilySpec::WOracle(seeds),
                    _ => return Err(Error::UnknownFamily(s.to_string())),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FamilySpec {
    /// Moves the seed set (if any) to `ring`, re-reading integer coefficients.
    pub fn with_ring(self, ring: RingSpec) -> Result<Self> {
        let conv = |s: Vec<Poly>| -> Result<Vec<Poly>> { s.iter().map(|p| change_ring(p, ring)).collect() };
        Ok(match self {
            FamilySpec::WForms(s) => FamilySpec::WForms(conv(s)?),
            FamilySpec::WFourForms(s) => FamilySpec::WFourForms(conv(s)?),
            FamilySpec::IPrimeForms(s) => FamilySpec::IPrimeForms(conv(s)?),
            FamilySpec::WOracle(s) => FamilySpec::WOracle(conv(s)?),
            other => other,
        })
    }
}

/// Re-reads a polynomial's coefficients (as rationals) in another ring.
pub fn change_ring(p: &Poly, ring: RingSpec) -> Result<Poly> {
    if p.ring() == ring {
        return Ok(p.clone());
    }
    let terms = p
        .terms()
        .map(|(w, c)| Ok((w.clone(), ring.from_rational(&c.to_rational())?)))
        .collect::<Result<Vec<_>>>()?;
    Poly::from_terms(ring, terms)
}

fn check_seed_ring(ring: RingSpec, seeds: &[Poly]) -> Result<()> {
    for s in seeds {
        if s.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: s.ring(),
            });
        }
    }
    Ok(())
}

struct Alphabet {
    letters: Vec<Poly>,
    pairs: Vec<Poly>,
}

fn slot_alphabet(ring: RingSpec, generator_count: usize) -> Alphabet {
    let letters: Vec<Poly> = (0..generator_count).map(|i| Poly::letter(ring, i)).collect();
    let mut pairs = Vec::new();
    for i in 0..generator_count {
        for j in 0..generator_count {
            pairs.push(Poly::word(ring, Word::from_letters(&[i, j])));
        }
    }
    Alphabet { letters, pairs }
}

fn expand_all(f: &Form, alpha: &Alphabet, seeds: &[Poly], cur: &mut Vec<Poly>, out: &mut Vec<Poly>) -> Result<()> {
    let Some(&slot) = f.slots.get(cur.len()) else {
        out.push((f.build)(cur)?);
        return Ok(());
    };
    let choices: Vec<&Poly> = match slot {
        Slot::Letter => alpha.letters.iter().collect(),
        Slot::Pair => alpha.pairs.iter().collect(),
        Slot::LetterOrPair => alpha.letters.iter().chain(&alpha.pairs).collect(),
        Slot::Seed => seeds.iter().collect(),
        Slot::Word | Slot::Border => unreachable!("bounded families only"),
    };
    for p in choices {
        cur.push(p.clone());
        expand_all(f, alpha, seeds, cur, out)?;
        cur.pop();
    }
    Ok(())
}

fn prune(gens: Vec<Poly>, pruning: Pruning) -> Vec<Poly> {
    match pruning {
        Pruning::None => gens,
        Pruning::Zeros => gens.into_iter().filter(|g| !g.is_zero()).collect(),
        Pruning::Full => {
            let mut seen = HashSet::new();
            gens.into_iter()
                .filter(|g| !g.is_zero() && seen.insert(unit_normal(g)))
                .collect()
        }
    }
}

/// Representative of `g` up to multiplication by a unit: leading coefficient
/// 1 over a field, positive otherwise.
fn unit_normal(g: &Poly) -> Poly {
    let lead = g.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
    if g.ring().is_field() {
        g.scale(&lead.invert().expect("field")).expect("same ring")
    } else if lead.is_negative() {
        g.neg()
    } else {
        g.clone()
    }
}

struct FamilySource {
    ring: RingSpec,
    spec: FamilySpec,
    forms: Vec<Form>,
    seeds: Vec<(Poly, MultiDegree)>,
}

impl GeneratorSource for FamilySource {
    fn ring(&self) -> RingSpec {
        self.ring
    }

    fn generators_of(&self, mu: &MultiDegree) -> Result<Vec<Arc<Poly>>> {
        if let FamilySpec::TnOracle(n) = self.spec {
            return Ok(brackets_of_degree(self.ring, n, mu).into_iter().map(Arc::new).collect());
        }
        let seed_min = self.seeds.iter().map(|s| s.1.total()).min().unwrap_or(0);
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for f in &self.forms {
            let need: u32 = f.slots.iter().map(|s| s.min_degree(seed_min)).sum();
            if need > mu.total() || (f.slots.contains(&Slot::Seed) && self.seeds.is_empty()) {
                continue;
            }
            let mut budget = mu.exponents().to_vec();
            let mut cur = Vec::with_capacity(f.slots.len());
            self.expand_exact(f, seed_min, &mut budget, &mut cur, &mut |p| {
                if !p.is_zero() && seen.insert(p.clone()) {
                    out.push(Arc::new(p));
                }
            })?;
        }
        Ok(out)
    }
}

impl FamilySource {
    fn expand_exact(
        &self,
        f: &Form,
        seed_min: u32,
        budget: &mut Vec<u32>,
        cur: &mut Vec<Poly>,
        emit: &mut dyn FnMut(Poly),
    ) -> Result<()> {
        let k = cur.len();
        let left: u32 = budget.iter().sum();
        let Some(&slot) = f.slots.get(k) else {
            if left == 0 {
                emit((f.build)(cur)?);
            }
            return Ok(());
        };
        let need: u32 = f.slots[k + 1..].iter().map(|s| s.min_degree(seed_min)).sum();
        if need + slot.min_degree(seed_min) > left {
            return Ok(());
        }
        let count = budget.len();
        let mut choices: Vec<Word> = Vec::new();
        match slot {
            Slot::Letter | Slot::LetterOrPair | Slot::Pair => {
                if slot != Slot::Pair {
                    choices.extend((0..count).filter(|&i| budget[i] > 0).map(Word::letter));
                }
                if slot != Slot::Letter {
                    for i in 0..count {
                        for j in 0..count {
                            let ok = if i == j {
                                budget[i] >= 2
                            } else {
                                budget[i] > 0 && budget[j] > 0
                            };
                            if ok {
                                choices.push(Word::from_letters(&[i, j]));
                            }
                        }
                    }
                }
            }
            Slot::Word | Slot::Border => {
                if slot == Slot::Border {
                    choices.push(Word::unit());
                }
                let within = MultiDegree::new(budget.clone());
                choices.extend(
                    nonunit_words_within(&within)
                        .into_iter()
                        .filter(|w| w.degree() as u32 + need <= left),
                );
            }
            Slot::Seed => {
                for (s, d) in &self.seeds {
                    let Some(d) = d.resized(count) else { continue };
                    if (0..count).all(|i| d.get(i) <= budget[i]) {
                        for i in 0..count {
                            budget[i] -= d.get(i);
                        }
                        cur.push(s.clone());
                        self.expand_exact(f, seed_min, budget, cur, emit)?;
                        cur.pop();
                        for i in 0..count {
                            budget[i] += d.get(i);
                        }
                    }
                }
                return Ok(());
            }
        }
        for w in choices {
            for &l in w.letters() {
                budget[l as usize] -= 1;
            }
            cur.push(Poly::word(self.ring, w.clone()));
            self.expand_exact(f, seed_min, budget, cur, emit)?;
            cur.pop();
            for &l in w.letters() {
                budget[l as usize] += 1;
            }
        }
        Ok(())
    }
}

/// `{[y1, ..., yn]}` with `y1, yn` letters and middle entries in `X` or `X^2`.
pub fn sn_generators(ring: RingSpec, n: usize, generator_count: usize) -> Result<Vec<Poly>> {
    FamilySpec::Sn(n).generators(ring, generator_count, Pruning::Zeros)
}

pub fn sn_generators_with(ring: RingSpec, n: usize, generator_count: usize, pruning: Pruning) -> Result<Vec<Poly>> {
    FamilySpec::Sn(n).generators(ring, generator_count, pruning)
}

pub fn latyshev_t3(ring: RingSpec, generator_count: usize) -> Result<Vec<Poly>> {
    FamilySpec::LatyshevT3.generators(ring, generator_count, Pruning::Zeros)
}

pub fn volichenko_t4(ring: RingSpec, generator_count: usize) -> Result<Vec<Poly>> {
    FamilySpec::VolichenkoT4.generators(ring, generator_count, Pruning::Zeros)
}

pub fn integer_t4(ring: RingSpec, generator_count: usize) -> Result<Vec<Poly>> {
    FamilySpec::IntegerT4.generators(ring, generator_count, Pruning::Zeros)
}

/// The five forms generating `W` over `s` in `S` and letters `x_i`.
pub fn w_forms(seeds: &[Poly], generator_count: usize) -> Result<Vec<Poly>> {
    let ring = seed_ring(seeds)?;
    FamilySpec::WForms(seeds.to_vec()).generators(ring, generator_count, Pruning::Zeros)
}

/// Forms `[s,x1,x2]` and `[s,x1][x2,x3] + [s,x2][x1,x3]`.
pub fn iprime_forms(seeds: &[Poly], generator_count: usize) -> Result<Vec<Poly>> {
    let ring = seed_ring(seeds)?;
    FamilySpec::IPrimeForms(seeds.to_vec()).generators(ring, generator_count, Pruning::Zeros)
}

fn seed_ring(seeds: &[Poly]) -> Result<RingSpec> {
    seeds
        .first()
        .map(Poly::ring)
        .ok_or_else(|| Error::InvalidParameter("seed set S is empty".into()))
}

/// `(S, S')`: brackets of `n` entries with one `X^2` entry at position `k`
/// (1-based), respectively at position 2, and letters elsewhere.
pub fn sn_variants(ring: RingSpec, n: usize, generator_count: usize, k: usize) -> Result<(Vec<Poly>, Vec<Poly>)> {
    let s = FamilySpec::SnVariantS { n, k }.generators(ring, generator_count, Pruning::Zeros)?;
    let sp = FamilySpec::SnVariantSPrime(n).generators(ring, generator_count, Pruning::Zeros)?;
    Ok((s, sp))
}
