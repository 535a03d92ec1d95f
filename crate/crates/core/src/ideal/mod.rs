//! Truncated two-sided ideals of the free algebra, one multidegree component
//! at a time.

mod cert;
mod tower;

use std::collections::HashSet;
use std::sync::Arc;

pub use cert::{MembershipCertificate, RankData, Verdict, WitnessTerm};
pub use tower::{Component, GeneratorList, GeneratorSource, IdealTower, SpanRow};

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::freealg::{words_of_multidegree, MultiDegree, Poly, Word};
use crate::linexact::{SparseMat, SparseVec};

/// Words of multidegree `mu`, ascending. Entries of `mu` past
/// `generator_count` are ignored.
pub fn component_basis(generator_count: usize, mu: &MultiDegree) -> Vec<Word> {
    let mu = MultiDegree::new((0..generator_count).map(|i| mu.get(i)).collect());
    words_of_multidegree(&mu)
}

/// Coordinates of every `a * g * b` in component `mu`: generators in input
/// order, borders `(a, b)` ascending. Generators not below `mu` are skipped.
pub fn spanning_vectors(gens: &[Poly], mu: &MultiDegree) -> Result<SparseMat> {
    let count = mu.generator_count();
    let ring = gens.first().map_or(RingSpec::Rationals, |g| g.ring());
    let words = words_of_multidegree(mu);
    let index: std::collections::HashMap<&Word, u32> = words.iter().enumerate().map(|(i, w)| (w, i as u32)).collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: g.ring(),
            });
        }
        if g.is_zero() {
            continue;
        }
        let Some(d) = g
            .multidegree(count.max(g.width()))?
            .ok_or(Error::Inhomogeneous)
            .map(|d| mu.checked_sub(&d))?
        else {
            continue;
        };
        let mut borders = Vec::new();
        for w in words_of_multidegree(&d.resized(count).expect("within mu")) {
            for i in 0..=w.degree() {
                borders.push((w.prefix(i), w.suffix_from(i)));
            }
        }
        borders.sort_by(|x, y| deglex(&x.0, &y.0).then_with(|| deglex(&x.1, &y.1)));
        for (a, b) in borders {
            let p = g.bordered(&a, &b);
            let entries = p.terms().map(|(w, c)| (index[w] as usize, c.clone()));
            rows.push(SparseVec::new(words.len(), entries)?);
        }
    }
    SparseMat::new(ring, words.len(), rows)
}

fn deglex(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.cmp(b))
}

/// Polynomial with sign fixed so that its smallest word has a positive
/// coefficient.
fn sign_normal(terms: Vec<(Word, i64)>) -> Vec<(Word, i64)> {
    if terms.first().is_some_and(|t| t.1 < 0) {
        terms.into_iter().map(|(w, c)| (w, -c)).collect()
    } else {
        terms
    }
}

/// Nonzero brackets `[m1, ..., mn]` of nonunit words with total multidegree
/// exactly `mu`, one representative per polynomial up to sign.
pub fn brackets_of_degree(ring: RingSpec, n: usize, mu: &MultiDegree) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let len = mu.total() as usize;
    if n < 2 || len < n {
        return out;
    }
    let mut cuts = Vec::new();
    compositions(len, n, &mut Vec::new(), &mut cuts);
    for w in words_of_multidegree(mu) {
        for parts in &cuts {
            let mut pieces = Vec::with_capacity(n);
            let mut at = 0;
            for &k in parts {
                pieces.push(w.prefix(at + k).suffix_from(at));
                at += k;
            }
            let refs: Vec<&Word> = pieces.iter().collect();
            let mut terms = crate::freealg::word_commutator_terms(&refs);
            if terms.is_empty() {
                continue;
            }
            terms.sort();
            let key = sign_normal(terms);
            if seen.insert(key.clone()) {
                out.push(Poly::from_int_terms(ring, key));
            }
        }
    }
    out
}

fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in 1..=total - (parts - 1) {
        cur.push(k);
        compositions(total - k, parts - 1, cur, out);
        cur.pop();
    }
}

/// All nonzero `[m1, ..., mn]` with nonunit words `m_i` and total multidegree
/// at most `mu`, up to sign; ordered by multidegree.
pub fn tideal_generators(ring: RingSpec, n: usize, generator_count: usize, mu: &MultiDegree) -> Vec<Poly> {
    let top = MultiDegree::new((0..generator_count).map(|i| mu.get(i)).collect());
    let mut degrees: Vec<MultiDegree> = MultiDegree::all_up_to(generator_count, top.total())
        .into_iter()
        .filter(|d| d.le(&top) && d.total() as usize >= n.max(2))
        .collect();
    degrees.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
    degrees.iter().flat_map(|d| brackets_of_degree(ring, n, d)).collect()
}

fn target_component(target: &Poly) -> Result<MultiDegree> {
    target.multidegree(target.width())?.ok_or(Error::Inhomogeneous)
}

fn tower_for(ring: RingSpec, gens: &[Poly], width: usize) -> Result<IdealTower> {
    let width = gens.iter().map(Poly::width).fold(width, usize::max);
    Ok(IdealTower::new(Arc::new(GeneratorList::new(ring, gens)?), width))
}

/// Decides whether a homogeneous `target` lies in the two-sided ideal
/// generated by `gens`.
///
/// Over fields this is span membership; over the integers, lattice
/// membership; over `Z[1/3]`, membership of some `3^m * target`.
pub fn member(target: &Poly, gens: &[Poly]) -> Result<MembershipCertificate> {
    let mu = target_component(target)?;
    let mut tower = tower_for(target.ring(), gens, mu.generator_count())?;
    let comp = tower.component(&mu)?;
    comp.member(target)
}

/// Over the integers: the least `k >= 1` with `k * target` in the ideal.
pub fn torsion_member(target: &Poly, gens: &[Poly]) -> Result<MembershipCertificate> {
    if target.ring() != RingSpec::Integers {
        return Err(Error::RequiresIntegers(target.ring()));
    }
    let mu = target_component(target)?;
    let mut tower = tower_for(target.ring(), gens, mu.generator_count())?;
    let comp = tower.component(&mu)?;
    comp.torsion_member(target)
}

/// Whether two generating families give the same ideal component `mu`.
pub fn span_equal(gens_a: &[Poly], gens_b: &[Poly], mu: &MultiDegree) -> Result<bool> {
    let ring = gens_a
        .iter()
        .chain(gens_b)
        .next()
        .map_or(RingSpec::Rationals, Poly::ring);
    let count = gens_a
        .iter()
        .chain(gens_b)
        .map(Poly::width)
        .fold(mu.generator_count(), usize::max);
    let mut a = IdealTower::new(Arc::new(GeneratorList::new(ring, gens_a)?), count);
    let mut b = IdealTower::new(Arc::new(GeneratorList::new(ring, gens_b)?), count);
    a.span_equal(&mut b, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::left_normed_commutator;
    use num_bigint::BigInt;

    fn br(ring: RingSpec, letters: &[usize]) -> Poly {
        let args: Vec<Poly> = letters.iter().map(|&i| Poly::letter(ring, i)).collect();
        left_normed_commutator(&args).unwrap()
    }

    fn product(a: &Poly, b: &Poly) -> Poly {
        a.mul(b).unwrap()
    }

    #[test]
    fn basis_examples() {
        let b = component_basis(2, &MultiDegree::new(vec![1, 1]));
        assert_eq!(b, vec![Word::from_letters(&[0, 1]), Word::from_letters(&[1, 0])]);
        assert_eq!(component_basis(2, &MultiDegree::new(vec![2, 0])).len(), 1);
        assert_eq!(component_basis(3, &MultiDegree::multilinear(3)).len(), 6);
    }

    #[test]
    fn spanning_vector_examples() {
        let q = RingSpec::Rationals;
        let m = spanning_vectors(&[br(q, &[0, 1])], &MultiDegree::new(vec![1, 1])).unwrap();
        assert_eq!(m.rows().len(), 1);
        assert_eq!(m.rows()[0].get(0), Some(&q.from_int(1)));
        assert_eq!(m.rows()[0].get(1), Some(&q.from_int(-1)));
        let m = spanning_vectors(&[br(q, &[0, 1])], &MultiDegree::new(vec![2, 1])).unwrap();
        assert_eq!(m.rows().len(), 2);
        assert_ne!(m.rows()[0], m.rows()[1]);
        let m = spanning_vectors(&[br(q, &[0, 1, 2])], &MultiDegree::multilinear(3)).unwrap();
        assert_eq!(m.rows().len(), 1);
        assert_eq!(m.rows()[0].entries().len(), 4);
    }

    #[test]
    fn oracle_counts() {
        let q = RingSpec::Rationals;
        assert_eq!(tideal_generators(q, 2, 2, &MultiDegree::new(vec![1, 1])).len(), 1);
        assert_eq!(tideal_generators(q, 2, 2, &MultiDegree::new(vec![2, 1])).len(), 4);
        let t3 = tideal_generators(q, 3, 3, &MultiDegree::multilinear(3));
        let m = spanning_vectors(&t3, &MultiDegree::multilinear(3)).unwrap();
        assert_eq!(crate::linexact::rank_over_field(&m).unwrap(), 2);
    }

    #[test]
    fn latyshev_members() {
        let q = RingSpec::Rationals;
        let mu = MultiDegree::multilinear(4);
        let t3 = tideal_generators(q, 3, 4, &mu);
        let a = product(&br(q, &[0, 1]), &br(q, &[2, 3]));
        let c = member(&a, &t3).unwrap();
        assert_eq!(c.verdict, Verdict::NonMember);
        let rank = c.rank.unwrap();
        assert_eq!(rank.component_dim, 24);
        assert_eq!(rank.with_target_rank, rank.ideal_rank + 1);
        let b = a.add(&product(&br(q, &[0, 2]), &br(q, &[1, 3]))).unwrap();
        let c = member(&b, &t3).unwrap();
        assert_eq!(c.verdict, Verdict::Member);
        assert!(c.verify(&b));
        let g = br(q, &[0, 1, 2]);
        assert!(member(&g, std::slice::from_ref(&g)).unwrap().is_member());
    }

    #[test]
    fn torsion_three() {
        let z = RingSpec::Integers;
        let mu = MultiDegree::multilinear(5);
        let t4 = tideal_generators(z, 4, 5, &mu);
        let target = product(&br(z, &[0, 1]), &br(z, &[2, 3, 4]));
        let c = torsion_member(&target, &t4).unwrap();
        assert_eq!(c.verdict, Verdict::Torsion(BigInt::from(3)));
        assert!(c.verify(&target));
        assert_eq!(member(&target, &t4).unwrap().verdict, Verdict::NonMember);
        let c = torsion_member(&br(z, &[0, 1, 2, 3]), &t4).unwrap();
        assert_eq!(c.verdict, Verdict::Torsion(BigInt::from(1)));
        let mono = Poly::word(z, Word::from_letters(&[0, 1, 2, 3, 4]));
        assert_eq!(torsion_member(&mono, &t4).unwrap().verdict, Verdict::NonMember);

        let l = RingSpec::IntegersLoc3;
        let t4 = tideal_generators(l, 4, 5, &mu);
        let target = product(&br(l, &[0, 1]), &br(l, &[2, 3, 4]));
        let c = member(&target, &t4).unwrap();
        assert!(c.is_member());
        assert!(c.verify(&target));
    }

    #[test]
    fn span_equal_examples() {
        let mu = MultiDegree::new(vec![1, 1]);
        for (ring, expected) in [(RingSpec::Rationals, true), (RingSpec::Integers, false)] {
            let a = br(ring, &[0, 1]);
            let b = a.scale(&ring.from_int(2)).unwrap();
            assert_eq!(span_equal(&[a], &[b], &mu).unwrap(), expected);
        }
    }

    #[test]
    fn inhomogeneous_rejected() {
        let q = RingSpec::Rationals;
        let p = Poly::letter(q, 0).add(&Poly::letter(q, 1)).unwrap();
        assert!(matches!(member(&p, &[]), Err(Error::Inhomogeneous)));
        assert!(matches!(
            spanning_vectors(&[p], &MultiDegree::new(vec![1, 1])),
            Err(Error::Inhomogeneous)
        ));
    }
}
