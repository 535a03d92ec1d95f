//! Ideal components built degree by degree.
//!
//! For a two-sided ideal `I` generated by homogeneous elements `G`,
//! `I_mu = sum_x x*I_(mu-e_x) + sum_x I_(mu-e_x)*x + span(G_mu)`. Each
//! component keeps only the rows that changed its span (or lattice), and every
//! kept row is a genuine `a*g*b`, so witnesses read off directly.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::cert::{MembershipCertificate, RankData, Verdict, WitnessTerm};
use crate::coeff::{is_power_of_three, reduce_big, RingSpec, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{words_of_multidegree, MultiDegree, Poly, Word};
use crate::linexact::{make_primitive, FieldEchelon, Fp, IRow, RowSpace, ZLattice};

/// Supplies the generators of one exact multidegree.
pub trait GeneratorSource: Send + Sync {
    fn ring(&self) -> RingSpec;
    /// Generators whose multidegree is exactly `mu`.
    fn generators_of(&self, mu: &MultiDegree) -> Result<Vec<Arc<Poly>>>;
}

/// Exponent vector without trailing zeros.
pub(crate) fn trimmed(e: &[u32]) -> Vec<u32> {
    let end = e.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    e[..end].to_vec()
}

/// An explicit finite list of homogeneous generators.
pub struct GeneratorList {
    ring: RingSpec,
    gens: Vec<Arc<Poly>>,
    by_degree: HashMap<Vec<u32>, Vec<usize>>,
}

impl GeneratorList {
    pub fn new(ring: RingSpec, gens: &[Poly]) -> Result<Self> {
        let mut by_degree: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        let mut stored = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: g.ring(),
                });
            }
            stored.push(Arc::new(g.clone()));
            if g.is_zero() {
                continue;
            }
            let mdeg = g.multidegree(g.width())?.ok_or(Error::Inhomogeneous)?;
            by_degree.entry(trimmed(mdeg.exponents())).or_default().push(i);
        }
        Ok(GeneratorList {
            ring,
            gens: stored,
            by_degree,
        })
    }

    pub fn generators(&self) -> &[Arc<Poly>] {
        &self.gens
    }
}

impl GeneratorSource for GeneratorList {
    fn ring(&self) -> RingSpec {
        self.ring
    }

    fn generators_of(&self, mu: &MultiDegree) -> Result<Vec<Arc<Poly>>> {
        Ok(self
            .by_degree
            .get(&trimmed(mu.exponents()))
            .map(|ix| ix.iter().map(|&i| self.gens[i].clone()).collect())
            .unwrap_or_default())
    }
}

/// Integer coefficients of `den * p` with `den` the least common denominator.
pub(crate) fn integer_form(p: &Poly) -> (Vec<(Word, BigInt)>, BigInt) {
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| match c {
        Scalar::Rational(q) | Scalar::Loc3(q) => acc.lcm(q.denom()),
        _ => acc,
    });
    let terms = p
        .terms()
        .map(|(w, c)| {
            let v = match c {
                Scalar::Rational(q) | Scalar::Loc3(q) => q.numer() * (&den / q.denom()),
                Scalar::Integer(n) => n.clone(),
                Scalar::Residue { value, .. } => BigInt::from(*value),
            };
            (w.clone(), v)
        })
        .collect();
    (terms, den)
}

/// A kept row: `values = den * (left * generator * right)` in component
/// coordinates.
#[derive(Clone, Debug)]
pub struct SpanRow {
    pub values: IRow<BigInt>,
    pub left: Word,
    pub generator: Arc<Poly>,
    pub den: BigInt,
    pub right: Word,
}

fn to_fp(v: &IRow<BigInt>, p: u64) -> Vec<(u32, Fp)> {
    v.iter()
        .filter_map(|(k, x)| {
            let r = reduce_big(x, p);
            (r != 0).then_some((*k, Fp(r)))
        })
        .collect()
}

fn to_rational(v: &IRow<BigInt>) -> Vec<(u32, BigRational)> {
    v.iter()
        .map(|(k, x)| (*k, BigRational::from_integer(x.clone())))
        .collect()
}

enum Solver {
    Field(FieldEchelon<BigRational>),
    Prime(FieldEchelon<Fp>, u64),
    Lattice(ZLattice),
}

/// One multidegree component of a truncated two-sided ideal.
pub struct Component {
    ring: RingSpec,
    mu: MultiDegree,
    words: Vec<Word>,
    index: HashMap<Word, u32>,
    rows: Vec<SpanRow>,
    space: RowSpace,
    solver: OnceLock<Solver>,
}

impl Component {
    pub fn multidegree(&self) -> &MultiDegree {
        &self.mu
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Rank of the ideal inside the component (lattice rank over the
    /// integers).
    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The kept generating rows.
    pub fn rows(&self) -> &[SpanRow] {
        &self.rows
    }

    /// Product of the lattice pivots (the lattice determinant relative to its
    /// rational span); `None` over fields.
    pub fn pivot_product(&self) -> Option<BigInt> {
        self.space.pivot_product()
    }

    pub fn space(&self) -> &RowSpace {
        &self.space
    }

    /// Integer coordinates of `den * p` and the scale `den`.
    pub fn vector_of(&self, p: &Poly) -> Result<(IRow<BigInt>, BigInt)> {
        if p.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: p.ring(),
            });
        }
        let (terms, den) = integer_form(p);
        let mut v = Vec::with_capacity(terms.len());
        for (w, x) in terms {
            let col = *self.index.get(&w).ok_or(Error::Inhomogeneous)?;
            v.push((col, x));
        }
        v.sort_by_key(|e| e.0);
        Ok((v, den))
    }

    /// Membership of an integer coordinate vector, interpreted in the
    /// component's ring.
    pub fn contains_vector(&self, v: &IRow<BigInt>) -> bool {
        self.space.contains(v)
    }

    /// Smallest `k` with `k * v` in the integer lattice.
    pub fn torsion_of_vector(&self, v: &IRow<BigInt>) -> Option<BigInt> {
        self.space.torsion(v)
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.contains_vector(&self.vector_of(p)?.0))
    }

    /// True when every kept row of `other` lies in `self`.
    pub fn contains_component(&self, other: &Component) -> bool {
        use rayon::prelude::*;
        self.words == other.words && other.rows.par_iter().all(|r| self.contains_vector(&r.values))
    }

    /// Equality of the two ideal components (span, lattice, or lattice up to
    /// powers of 3).
    pub fn same_as(&self, other: &Component) -> bool {
        self.words == other.words && self.space.same_span(&other.space)
    }

    fn solver(&self) -> &Solver {
        self.solver.get_or_init(|| match self.ring {
            RingSpec::Rationals => {
                let mut e = FieldEchelon::new(self.dim(), (), true);
                for r in &self.rows {
                    e.insert(&to_rational(&r.values));
                }
                Solver::Field(e)
            }
            RingSpec::PrimeField(p) => {
                let mut e = FieldEchelon::new(self.dim(), p.get(), true);
                for r in &self.rows {
                    e.insert(&to_fp(&r.values, p.get()));
                }
                Solver::Prime(e, p.get())
            }
            RingSpec::Integers | RingSpec::IntegersLoc3 => {
                let mut l = ZLattice::new(self.dim(), true);
                for r in &self.rows {
                    l.insert(&r.values);
                }
                Solver::Lattice(l)
            }
        })
    }

    /// Witness terms from coefficients over the kept rows; `coef(i)` is the
    /// scalar multiplying `values_i / den_i`.
    fn terms(&self, coefs: Vec<(usize, Scalar)>) -> (Vec<Poly>, Vec<WitnessTerm>) {
        let mut table: Vec<Poly> = Vec::new();
        let mut seen: HashMap<*const Poly, usize> = HashMap::new();
        let mut terms = Vec::new();
        for (i, c) in coefs {
            if c.is_zero() {
                continue;
            }
            let r = &self.rows[i];
            let g = *seen.entry(Arc::as_ptr(&r.generator)).or_insert_with(|| {
                table.push((*r.generator).clone());
                table.len() - 1
            });
            terms.push(WitnessTerm {
                coeff: c,
                left: r.left.clone(),
                generator: g,
                right: r.right.clone(),
            });
        }
        (table, terms)
    }

    /// Coefficients `c_i` (in the ring) with `k * target = sum c_i * a_i g_i b_i`
    /// where `k * den * target = sum m_i * values_i`.
    fn lattice_combination(&self, v: &IRow<BigInt>) -> Option<(BigInt, Vec<(usize, BigInt)>)> {
        let Solver::Lattice(l) = self.solver() else {
            unreachable!("lattice solver for integer rings")
        };
        let t = l.torsion(v)?;
        let combo = l.expand(&t.coefficients);
        Some((t.index, combo.into_iter().map(|(i, m)| (i as usize, m)).collect()))
    }

    fn rank_data(&self, in_span: bool) -> RankData {
        RankData {
            component_dim: self.dim(),
            ideal_rank: self.rank(),
            with_target_rank: self.rank() + usize::from(!in_span),
        }
    }

    fn certificate(&self, verdict: Verdict, coefs: Vec<(usize, Scalar)>) -> MembershipCertificate {
        let (generators, witness) = self.terms(coefs);
        MembershipCertificate {
            verdict,
            component: Some(self.mu.clone()),
            generators,
            witness,
            rank: None,
            torsion_index: None,
        }
    }

    fn negative(&self, in_span: bool, torsion: Option<BigInt>) -> MembershipCertificate {
        MembershipCertificate {
            verdict: Verdict::NonMember,
            component: Some(self.mu.clone()),
            generators: Vec::new(),
            witness: Vec::new(),
            rank: Some(self.rank_data(in_span)),
            torsion_index: torsion,
        }
    }

    /// Decides membership of a target in this component, with a witness that
    /// is re-expanded and checked before returning.
    pub fn member(&self, target: &Poly) -> Result<MembershipCertificate> {
        let (v, dt) = self.vector_of(target)?;
        let ring = self.ring;
        let cert = if v.is_empty() {
            self.certificate(Verdict::Member, Vec::new())
        } else {
            match self.solver() {
                Solver::Field(e) => match e.solve(&to_rational(&v)) {
                    None => self.negative(false, None),
                    Some(c) => {
                        let coefs = c
                            .into_iter()
                            .map(|(i, q)| {
                                let i = i as usize;
                                let s = q * BigRational::new(self.rows[i].den.clone(), dt.clone());
                                (i, Scalar::Rational(s))
                            })
                            .collect();
                        self.certificate(Verdict::Member, coefs)
                    }
                },
                Solver::Prime(e, p) => match e.solve(&to_fp(&v, *p)) {
                    None => self.negative(false, None),
                    Some(c) => {
                        let coefs = c
                            .into_iter()
                            .map(|(i, x)| {
                                (
                                    i as usize,
                                    Scalar::Residue {
                                        value: x.0,
                                        modulus: *p,
                                    },
                                )
                            })
                            .collect();
                        self.certificate(Verdict::Member, coefs)
                    }
                },
                Solver::Lattice(_) => match self.lattice_combination(&v) {
                    None => self.negative(false, None),
                    Some((k, combo)) => {
                        let ok = match ring {
                            RingSpec::IntegersLoc3 => is_power_of_three(&k),
                            _ => k.is_one(),
                        };
                        if !ok {
                            let mut c = self.negative(true, Some(k));
                            c.rank = Some(self.rank_data(true));
                            c
                        } else {
                            let coefs = combo
                                .into_iter()
                                .map(|(i, m)| {
                                    let s = ring
                                        .from_ratio(&(m * &self.rows[i].den), &(&k * &dt))
                                        .expect("coefficient lies in the ring");
                                    (i, s)
                                })
                                .collect();
                            self.certificate(Verdict::Member, coefs)
                        }
                    }
                },
            }
        };
        assert!(cert.verify(target), "membership witness failed to re-expand");
        Ok(cert)
    }

    /// Over the integers: `Torsion(k)` with a witness for `k * target`, or
    /// `NonMember` when no multiple lies in the lattice.
    pub fn torsion_member(&self, target: &Poly) -> Result<MembershipCertificate> {
        if self.ring != RingSpec::Integers {
            return Err(Error::RequiresIntegers(self.ring));
        }
        let (v, _) = self.vector_of(target)?;
        let cert = if v.is_empty() {
            self.certificate(Verdict::Torsion(BigInt::one()), Vec::new())
        } else {
            match self.lattice_combination(&v) {
                None => self.negative(false, None),
                Some((k, combo)) => {
                    let coefs = combo.into_iter().map(|(i, m)| (i, Scalar::Integer(m))).collect();
                    let mut c = self.certificate(Verdict::Torsion(k.clone()), coefs);
                    c.torsion_index = Some(k);
                    c
                }
            }
        };
        assert!(cert.verify(target), "torsion witness failed to re-expand");
        Ok(cert)
    }
}

/// Memoized components of the ideal generated by one source.
pub struct IdealTower {
    source: Arc<dyn GeneratorSource>,
    generator_count: usize,
    cache: HashMap<MultiDegree, Arc<Component>>,
}

impl IdealTower {
    pub fn new(source: Arc<dyn GeneratorSource>, generator_count: usize) -> Self {
        IdealTower {
            source,
            generator_count,
            cache: HashMap::new(),
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.source.ring()
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn component(&mut self, mu: &MultiDegree) -> Result<Arc<Component>> {
        let mu = mu.resized(self.generator_count).ok_or(Error::LetterOutOfRange {
            letter: mu.generator_count().saturating_sub(1),
            count: self.generator_count,
        })?;
        if let Some(c) = self.cache.get(&mu) {
            return Ok(c.clone());
        }
        let mut lower = Vec::new();
        for x in 0..self.generator_count {
            if mu.get(x) > 0 {
                let mut e = vec![0; self.generator_count];
                e[x] = 1;
                let sub = mu.checked_sub(&MultiDegree::new(e)).expect("positive entry");
                lower.push((x, self.component(&sub)?));
            }
        }
        let comp = Arc::new(self.build(&mu, &lower)?);
        self.cache.insert(mu, comp.clone());
        Ok(comp)
    }

    fn build(&self, mu: &MultiDegree, lower: &[(usize, Arc<Component>)]) -> Result<Component> {
        let ring = self.source.ring();
        let words = words_of_multidegree(mu);
        let index: HashMap<Word, u32> = words.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        let mut candidates: Vec<SpanRow> = Vec::new();
        for g in self.source.generators_of(mu)? {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: g.ring(),
                });
            }
            if g.is_zero() {
                continue;
            }
            let (terms, den) = integer_form(&g);
            let mut values = Vec::with_capacity(terms.len());
            for (w, x) in terms {
                let col = *index.get(&w).ok_or(Error::Inhomogeneous)?;
                values.push((col, x));
            }
            values.sort_by_key(|e| e.0);
            candidates.push(SpanRow {
                values,
                left: Word::unit(),
                generator: g,
                den,
                right: Word::unit(),
            });
        }
        let letter_words: Vec<Word> = (0..self.generator_count).map(Word::letter).collect();
        for (x, sub) in lower {
            let xw = &letter_words[*x];
            let left_map: Vec<u32> = sub.words.iter().map(|w| index[&xw.concat(w)]).collect();
            let right_map: Vec<u32> = sub.words.iter().map(|w| index[&w.concat(xw)]).collect();
            for (map, is_left) in [(&left_map, true), (&right_map, false)] {
                for r in &sub.rows {
                    let mut values: IRow<BigInt> =
                        r.values.iter().map(|(k, v)| (map[*k as usize], v.clone())).collect();
                    values.sort_by_key(|e| e.0);
                    let (left, right) = if is_left {
                        (xw.concat(&r.left), r.right.clone())
                    } else {
                        (r.left.clone(), r.right.concat(xw))
                    };
                    candidates.push(SpanRow {
                        values,
                        left,
                        generator: r.generator.clone(),
                        den: r.den.clone(),
                        right,
                    });
                }
            }
        }
        let mut seen: HashSet<IRow<BigInt>> = HashSet::new();
        let mut space = RowSpace::new(ring, words.len());
        let mut rows = Vec::new();
        for c in candidates {
            if !seen.insert(canonical_key(ring, &c.values)) {
                continue;
            }
            if space.insert(&c.values) {
                rows.push(c);
            }
        }
        Ok(Component {
            ring,
            mu: mu.clone(),
            words,
            index,
            rows,
            space,
            solver: OnceLock::new(),
        })
    }

    /// Equality of two ideals in component `mu`.
    pub fn span_equal(&mut self, other: &mut IdealTower, mu: &MultiDegree) -> Result<bool> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            });
        }
        let a = self.component(mu)?;
        let b = other.component(mu)?;
        Ok(a.same_as(&b))
    }
}

/// Key identifying rows that generate the same span (fields) or the same
/// lattice (integer rings).
fn canonical_key(ring: RingSpec, v: &IRow<BigInt>) -> IRow<BigInt> {
    let mut key = v.clone();
    match ring {
        RingSpec::Rationals => {
            make_primitive(&mut key).expect("BigInt arithmetic");
        }
        RingSpec::PrimeField(p) => {
            let p = BigInt::from(p.get());
            if let Some((_, lead)) = key.first() {
                let inv = lead.modpow(&(&p - 2), &p);
                for e in key.iter_mut() {
                    e.1 = (&e.1 * &inv).mod_floor(&p);
                }
            }
        }
        RingSpec::Integers | RingSpec::IntegersLoc3 => {
            if key.first().is_some_and(|(_, x)| x.is_negative()) {
                for e in key.iter_mut() {
                    e.1 = -std::mem::take(&mut e.1);
                }
            }
        }
    }
    key
}
