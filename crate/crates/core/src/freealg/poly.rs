use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{RingSpec, Scalar};
use crate::error::{Error, Result};

use super::word::{MultiDegree, Word};

/// An element of the free unital algebra `R<X>`: a finitely supported map
/// from words to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingSpec,
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero(ring: RingSpec) -> Self {
        Poly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: RingSpec) -> Self {
        Poly::monomial(Word::unit(), ring.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::monomial(Word::unit(), c)
    }

    pub fn letter(ring: RingSpec, index: usize) -> Self {
        Poly::monomial(Word::letter(index), ring.one())
    }

    pub fn word(ring: RingSpec, w: Word) -> Self {
        Poly::monomial(w, ring.one())
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let ring = c.ring();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Poly { ring, terms }
    }

    /// Builds from `(word, coefficient)` pairs; repeated words are summed.
    pub fn from_terms(ring: RingSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Self> {
        let mut p = Poly::zero(ring);
        for (w, c) in terms {
            if c.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.ring(),
                });
            }
            p.add_term(w, &c);
        }
        Ok(p)
    }

    /// Builds from integer coefficients, mapped into `ring`.
    pub fn from_int_terms(ring: RingSpec, terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut p = Poly::zero(ring);
        for (w, c) in terms {
            p.add_term(w, &ring.from_int(c));
        }
        p
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (degree-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add_unchecked(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            })
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Poly> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: c.ring(),
            });
        }
        let mut out = Poly::zero(self.ring);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &d.mul_unchecked(c));
        }
        Ok(out)
    }

    /// Distributive product; words multiply by concatenation.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = Poly::zero(self.ring);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &a.mul_unchecked(b));
            }
        }
        Ok(out)
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn bordered(&self, left: &Word, right: &Word) -> Poly {
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.sandwich(w, right), c.clone()))
                .collect(),
        }
    }

    /// `[p, q] = pq - qp`.
    pub fn commutator(&self, other: &Poly) -> Result<Poly> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Width of the support: one past the largest letter used.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Word::width).max().unwrap_or(0)
    }

    /// The common multidegree of all terms over `generator_count` generators,
    /// or `None` when the polynomial is zero or inhomogeneous.
    pub fn multidegree(&self, generator_count: usize) -> Result<Option<MultiDegree>> {
        let mut found: Option<MultiDegree> = None;
        for w in self.terms.keys() {
            let d = w.multidegree(generator_count)?;
            match &found {
                None => found = Some(d),
                Some(f) if *f != d => return Ok(None),
                _ => {}
            }
        }
        Ok(found)
    }

    pub fn is_homogeneous(&self) -> bool {
        let width = self.width();
        self.is_zero() || matches!(self.multidegree(width), Ok(Some(_)))
    }

    /// Splits into multidegree-homogeneous parts over `generator_count`
    /// generators.
    pub fn homogeneous_components_in(&self, generator_count: usize) -> Result<BTreeMap<MultiDegree, Poly>> {
        let mut out: BTreeMap<MultiDegree, Poly> = BTreeMap::new();
        for (w, c) in &self.terms {
            let d = w.multidegree(generator_count)?;
            out.entry(d)
                .or_insert_with(|| Poly::zero(self.ring))
                .terms
                .insert(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Splits into multidegree-homogeneous parts, sized by [`Poly::width`].
    pub fn homogeneous_components(&self) -> BTreeMap<MultiDegree, Poly> {
        self.homogeneous_components_in(self.width())
            .expect("width covers every letter")
    }

    /// Canonical text: terms in degree-lexicographic order separated by
    /// `+`/`-`, words as `*`-joined generator names.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (w.is_unit(), mag.is_one()) {
                (true, _) => out.push_str(&mag.to_string()),
                (false, true) => out.push_str(&w.render(names)),
                (false, false) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(&w.render(names));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.ring, self.render(&[]))
    }
}

/// Left-normed commutator `[a1, ..., an] = [[a1, ..., a(n-1)], an]`.
pub fn left_normed_commutator(args: &[Poly]) -> Result<Poly> {
    if args.len() < 2 {
        return Err(Error::Arity {
            name: "left_normed_commutator".into(),
            expected: "at least 2".into(),
            got: args.len(),
        });
    }
    let mut acc = args[0].clone();
    for a in &args[1..] {
        acc = acc.commutator(a)?;
    }
    Ok(acc)
}

/// Expansion of the left-normed commutator of words `[w1, ..., wn]` with
/// integer coefficients; zero coefficients removed, words ascending.
pub fn word_commutator_terms(words: &[&Word]) -> Vec<(Word, i64)> {
    let mut acc: Vec<(Word, i64)> = vec![(words[0].clone(), 1)];
    for w in &words[1..] {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (p, s) in &acc {
            next.push((p.concat(w), *s));
            next.push((w.concat(p), -*s));
        }
        acc = next;
    }
    acc.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Word, i64)> = Vec::with_capacity(acc.len());
    for (w, c) in acc {
        match out.last_mut() {
            Some((lw, lc)) if *lw == w => *lc += c,
            _ => out.push((w, c)),
        }
    }
    out.retain(|(_, c)| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::letter(RingSpec::Rationals, i)
    }

    #[test]
    fn sums_prune_zeros() {
        assert!(x(0).add(&x(0).neg()).unwrap().is_zero());
        let p = x(0).add(&x(1)).unwrap().add(&x(0)).unwrap();
        assert_eq!(p.render(&[]), "2*x1 + x2");
    }

    #[test]
    fn noncommutative_product() {
        let p = x(0).add(&x(1)).unwrap();
        let q = x(0).sub(&x(1)).unwrap();
        assert_eq!(p.mul(&q).unwrap().render(&[]), "x1*x1 - x1*x2 + x2*x1 - x2*x2");
        assert_eq!(Poly::one(RingSpec::Rationals).mul(&p).unwrap(), p);
    }

    #[test]
    fn commutators() {
        assert_eq!(x(0).commutator(&x(1)).unwrap().render(&[]), "x1*x2 - x2*x1");
        assert!(x(0).commutator(&x(0)).unwrap().is_zero());
        assert!(x(0).commutator(&Poly::one(RingSpec::Rationals)).unwrap().is_zero());
        let c = left_normed_commutator(&[x(0), x(1), x(2)]).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.terms().all(|(_, s)| s.is_one() || s.neg().is_one()));
        assert!(left_normed_commutator(&[x(0), x(0), x(1)]).unwrap().is_zero());
        assert!(left_normed_commutator(&[x(0)]).is_err());
    }

    #[test]
    fn heisenberg_style_bracket() {
        // [a, ab] = a·ab - ab·a in the free algebra on {a, b}
        let a = x(0);
        let ab = a.mul(&x(1)).unwrap();
        let lhs = a.commutator(&ab).unwrap();
        let rhs = a.mul(&ab).unwrap().sub(&ab.mul(&a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.render(&[]), "x1*x1*x2 - x1*x2*x1");
    }

    #[test]
    fn word_expansion_matches_poly_commutator() {
        let ws = [
            Word::from_letters(&[0, 1]),
            Word::letter(2),
            Word::from_letters(&[0]),
            Word::from_letters(&[1, 2]),
        ];
        let refs: Vec<&Word> = ws.iter().collect();
        let fast = Poly::from_int_terms(RingSpec::Integers, word_commutator_terms(&refs));
        let polys: Vec<Poly> = ws.iter().map(|w| Poly::word(RingSpec::Integers, w.clone())).collect();
        assert_eq!(fast, left_normed_commutator(&polys).unwrap());
    }

    #[test]
    fn components() {
        let c = x(0).commutator(&x(1)).unwrap().homogeneous_components();
        assert_eq!(c.len(), 1);
        assert!(c.contains_key(&MultiDegree::new(vec![1, 1])));
        let p = x(0).add(&x(0).mul(&x(0)).unwrap()).unwrap();
        let c = p.homogeneous_components();
        assert_eq!(
            c.keys().cloned().collect::<Vec<_>>(),
            vec![MultiDegree::new(vec![1]), MultiDegree::new(vec![2])]
        );
        assert!(Poly::zero(RingSpec::Rationals).homogeneous_components().is_empty());
    }

    #[test]
    fn mismatched_rings() {
        assert!(x(0).add(&Poly::letter(RingSpec::Integers, 0)).is_err());
    }
}
