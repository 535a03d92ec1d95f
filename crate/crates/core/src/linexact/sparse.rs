use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::{self, Matrix};
use super::field::{FieldEchelon, Fp};
use super::lattice::ZLattice;
use super::qech::QSpan;
use crate::coeff::{RingSpec, Scalar};
use crate::error::{Error, Result};

/// A sparse vector of scalars with a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    /// Builds a vector from `(index, value)` pairs; repeated indices are
    /// summed and zeros dropped.
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Result<Self> {
        let mut map = std::collections::BTreeMap::<usize, Scalar>::new();
        for (i, x) in entries {
            if i >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: i + 1,
                });
            }
            let v = match map.remove(&i) {
                Some(prev) => prev.add(&x)?,
                None => x,
            };
            map.insert(i, v);
        }
        Ok(SparseVec {
            dim,
            entries: map.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        })
    }

    pub fn from_ints(ring: RingSpec, dim: usize, values: &[i64]) -> Result<Self> {
        SparseVec::new(dim, values.iter().enumerate().map(|(i, &v)| (i, ring.from_int(v))))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.iter().find(|e| e.0 == i).map(|e| &e.1)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Rows over one ring sharing an ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    ring: RingSpec,
    dim: usize,
    rows: Vec<SparseVec>,
}

impl SparseMat {
    pub fn new(ring: RingSpec, dim: usize, rows: Vec<SparseVec>) -> Result<Self> {
        for r in &rows {
            if r.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.dim,
                });
            }
            for (_, x) in &r.entries {
                if x.ring() != ring {
                    return Err(Error::RingMismatch {
                        left: ring,
                        right: x.ring(),
                    });
                }
            }
        }
        Ok(SparseMat { ring, dim, rows })
    }

    pub fn from_ints(ring: RingSpec, dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| SparseVec::from_ints(ring, dim, r))
            .collect::<Result<Vec<_>>>()?;
        SparseMat::new(ring, dim, rows)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn dense_integers(&self) -> Result<Matrix> {
        if self.ring != RingSpec::Integers {
            return Err(Error::RequiresIntegers(self.ring));
        }
        let mut m = dense::zeros(self.rows.len(), self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in &r.entries {
                m[i][*j] = x.to_rational().to_integer();
            }
        }
        Ok(m)
    }
}

/// Integer row with the common denominator cleared.
pub(crate) fn integer_row(v: &SparseVec) -> Vec<(u32, BigInt)> {
    let den = v.entries.iter().fold(BigInt::one(), |acc, (_, x)| {
        num_integer::lcm(acc, x.to_rational().denom().clone())
    });
    v.entries
        .iter()
        .map(|(i, x)| {
            let q = x.to_rational();
            (*i as u32, q.numer() * (&den / q.denom()))
        })
        .collect()
}

fn rational_row(v: &SparseVec) -> Vec<(u32, BigRational)> {
    v.entries.iter().map(|(i, x)| (*i as u32, x.to_rational())).collect()
}

fn residue_row(v: &SparseVec) -> Vec<(u32, Fp)> {
    v.entries
        .iter()
        .map(|(i, x)| match x {
            Scalar::Residue { value, .. } => (*i as u32, Fp(*value)),
            _ => unreachable!("residue ring checked by SparseMat::new"),
        })
        .collect()
}

/// Exact rank over a field.
pub fn rank_over_field(m: &SparseMat) -> Result<usize> {
    match m.ring {
        RingSpec::Rationals => {
            let mut span = QSpan::new(m.dim);
            for r in &m.rows {
                span.insert(&integer_row(r));
            }
            Ok(span.rank())
        }
        RingSpec::PrimeField(p) => {
            let mut e = FieldEchelon::<Fp>::new(m.dim, p.get(), false);
            for r in &m.rows {
                e.insert(&residue_row(r));
            }
            Ok(e.rank())
        }
        other => Err(Error::NotAField(other)),
    }
}

/// Coefficients `c` with `sum c_i * row_i = v`, or `None` when `v` is outside
/// the row span.
pub fn solve_in_rowspan(m: &SparseMat, v: &SparseVec) -> Result<Option<Vec<Scalar>>> {
    if v.dim != m.dim {
        return Err(Error::DimensionMismatch {
            expected: m.dim,
            got: v.dim,
        });
    }
    let n = m.rows.len();
    match m.ring {
        RingSpec::Rationals => {
            let mut e = FieldEchelon::<BigRational>::new(m.dim, (), true);
            for r in &m.rows {
                e.insert(&rational_row(r));
            }
            Ok(e.solve(&rational_row(v)).map(|c| {
                let mut out = vec![m.ring.zero(); n];
                for (i, x) in c {
                    out[i as usize] = Scalar::Rational(x);
                }
                out
            }))
        }
        RingSpec::PrimeField(p) => {
            let mut e = FieldEchelon::<Fp>::new(m.dim, p.get(), true);
            for r in &m.rows {
                e.insert(&residue_row(r));
            }
            Ok(e.solve(&residue_row(v)).map(|c| {
                let mut out = vec![m.ring.zero(); n];
                for (i, x) in c {
                    out[i as usize] = Scalar::Residue {
                        value: x.0,
                        modulus: p.get(),
                    };
                }
                out
            }))
        }
        other => Err(Error::NotAField(other)),
    }
}

/// Certified integer normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalFormResult {
    /// `u * a` equals `h` followed by zero rows; `h` has positive pivots and
    /// entries above each pivot reduced into `[0, pivot)`.
    Hermite { h: Matrix, u: Matrix },
    /// `u * a * v = diag(diagonal)` padded with zeros, `d_i | d_{i+1}`.
    Smith {
        diagonal: Vec<BigInt>,
        u: Matrix,
        v: Matrix,
    },
}

impl NormalFormResult {
    /// Re-checks the transform certificate against `a` by multiplication.
    pub fn verify(&self, a: &SparseMat) -> bool {
        let Ok(dense_a) = a.dense_integers() else {
            return false;
        };
        let (rows, cols) = (a.rows.len(), a.dim);
        let unimodular = |m: &Matrix| dense::determinant(m).abs().is_one();
        match self {
            NormalFormResult::Hermite { h, u } => {
                let prod = dense::matmul(u, &dense_a, rows, cols);
                let shape_ok = prod.len() == rows
                    && prod[..h.len()] == h[..]
                    && prod[h.len()..].iter().all(|r| r.iter().all(|x| x.is_zero()));
                shape_ok && unimodular(u) && is_hermite(h)
            }
            NormalFormResult::Smith { diagonal, u, v } => {
                let prod = dense::matmul(&dense::matmul(u, &dense_a, rows, cols), v, cols, cols);
                let diag_ok = prod.iter().enumerate().all(|(i, r)| {
                    r.iter().enumerate().all(|(j, x)| {
                        if i == j && i < diagonal.len() {
                            *x == diagonal[i]
                        } else {
                            x.is_zero()
                        }
                    })
                });
                let chain_ok =
                    diagonal.iter().all(|d| d.is_positive()) && diagonal.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
                diag_ok && chain_ok && unimodular(u) && unimodular(v)
            }
        }
    }
}

fn is_hermite(h: &Matrix) -> bool {
    let mut last: Option<usize> = None;
    for (i, row) in h.iter().enumerate() {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if last.is_some_and(|l| c <= l) || !row[c].is_positive() {
            return false;
        }
        for above in &h[..i] {
            if above[c].is_negative() || above[c] >= row[c] {
                return false;
            }
        }
        last = Some(c);
    }
    true
}

/// Row-style Hermite normal form with its unimodular transform; zero rows are
/// dropped from `h`.
pub fn hermite_normal_form(m: &SparseMat) -> Result<NormalFormResult> {
    let a = m.dense_integers()?;
    let (mut h, u, rank) = dense::hermite(&a, m.rows.len(), m.dim);
    h.truncate(rank);
    let out = NormalFormResult::Hermite { h, u };
    assert!(out.verify(m), "Hermite certificate failed to verify");
    Ok(out)
}

pub fn smith_normal_form(m: &SparseMat) -> Result<NormalFormResult> {
    let a = m.dense_integers()?;
    let (diagonal, u, v) = dense::smith(&a, m.rows.len(), m.dim);
    let out = NormalFormResult::Smith { diagonal, u, v };
    assert!(out.verify(m), "Smith certificate failed to verify");
    Ok(out)
}

/// Smallest `k >= 1` with `k * v` in the integer row lattice, or `None` when
/// `v` lies outside the rational span.
pub fn torsion_index(m: &SparseMat, v: &SparseVec) -> Result<Option<BigInt>> {
    if m.ring != RingSpec::Integers || v.entries.iter().any(|(_, x)| x.ring() != m.ring) {
        return Err(Error::RequiresIntegers(m.ring));
    }
    if v.dim != m.dim {
        return Err(Error::DimensionMismatch {
            expected: m.dim,
            got: v.dim,
        });
    }
    let mut l = ZLattice::new(m.dim, false);
    for r in &m.rows {
        l.insert(&integer_row(r));
    }
    Ok(l.torsion(&integer_row(v)).map(|t| t.index))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> SparseMat {
        let dim = rows.first().map_or(0, |r| r.len());
        SparseMat::from_ints(RingSpec::Integers, dim, rows).unwrap()
    }

    fn big(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        let q = RingSpec::Rationals;
        let id = SparseMat::from_ints(q, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(rank_over_field(&id).unwrap(), 3);
        let eq = SparseMat::from_ints(q, 2, &[&[1, 2], &[1, 2]]).unwrap();
        assert_eq!(rank_over_field(&eq).unwrap(), 1);
        let zero = SparseMat::from_ints(q, 2, &[&[0, 0]]).unwrap();
        assert_eq!(rank_over_field(&zero).unwrap(), 0);
        assert!(matches!(rank_over_field(&z(&[&[1]])), Err(Error::NotAField(_))));
    }

    #[test]
    fn solving() {
        let q = RingSpec::Rationals;
        let m = SparseMat::from_ints(q, 2, &[&[1, 0], &[0, 1]]).unwrap();
        let v = SparseVec::from_ints(q, 2, &[1, 2]).unwrap();
        assert_eq!(
            solve_in_rowspan(&m, &v).unwrap().unwrap(),
            vec![q.from_int(1), q.from_int(2)]
        );
        let m = SparseMat::from_ints(q, 2, &[&[1, 0]]).unwrap();
        let v = SparseVec::from_ints(q, 2, &[0, 1]).unwrap();
        assert_eq!(solve_in_rowspan(&m, &v).unwrap(), None);
        let m = SparseMat::from_ints(q, 2, &[&[1, 1], &[1, -1]]).unwrap();
        let v = SparseVec::from_ints(q, 2, &[1, 0]).unwrap();
        let half = q.parse_scalar("1/2").unwrap();
        assert_eq!(solve_in_rowspan(&m, &v).unwrap().unwrap(), vec![half.clone(), half]);
    }

    #[test]
    fn hermite_examples() {
        let NormalFormResult::Hermite { h, .. } = hermite_normal_form(&z(&[&[2, 0], &[0, 3]])).unwrap() else {
            panic!()
        };
        assert_eq!(h, big(&[&[2, 0], &[0, 3]]));
        let NormalFormResult::Hermite { h, .. } = hermite_normal_form(&z(&[&[1, 2], &[1, 3]])).unwrap() else {
            panic!()
        };
        assert_eq!(h, big(&[&[1, 0], &[0, 1]]));
        let NormalFormResult::Hermite { h, u } = hermite_normal_form(&z(&[&[1, 2], &[0, 0]])).unwrap() else {
            panic!()
        };
        assert_eq!(h, big(&[&[1, 2]]));
        assert_eq!(u.len(), 2);
    }

    #[test]
    fn smith_examples() {
        let diag = |m: SparseMat| match smith_normal_form(&m).unwrap() {
            NormalFormResult::Smith { diagonal, .. } => diagonal,
            _ => panic!(),
        };
        assert_eq!(diag(z(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(diag(z(&[&[4, 0], &[0, 6]])), vec![BigInt::from(2), BigInt::from(12)]);
        assert!(diag(z(&[&[0, 0], &[0, 0]])).is_empty());
    }

    #[test]
    fn torsion_examples() {
        let r = RingSpec::Integers;
        let e1 = SparseVec::from_ints(r, 2, &[1, 0]).unwrap();
        let e2 = SparseVec::from_ints(r, 2, &[0, 1]).unwrap();
        assert_eq!(torsion_index(&z(&[&[2, 0]]), &e1).unwrap(), Some(BigInt::from(2)));
        assert_eq!(torsion_index(&z(&[&[1, 0]]), &e1).unwrap(), Some(BigInt::from(1)));
        assert_eq!(torsion_index(&z(&[&[1, 0]]), &e2).unwrap(), None);
    }
}
