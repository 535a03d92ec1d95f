//! Row spans over any supported ring: vector subspaces over fields, lattices
//! over the integers, and lattices with 3 inverted over `Z[1/3]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{FieldEchelon, Fp};
use super::lattice::ZLattice;
use super::qech::QSpan;
use super::row::IRow;
use crate::coeff::{is_power_of_three, reduce_big, RingSpec, Scalar};

#[derive(Clone, Debug)]
enum Engine {
    Rational(QSpan),
    Prime(FieldEchelon<Fp>, u64),
    Lattice(ZLattice),
}

/// A row span stored as integer rows. Rows over `Q` and `Z[1/3]` are scaled
/// to integers first (a unit multiple in both rings).
#[derive(Clone, Debug)]
pub struct RowSpace {
    ring: RingSpec,
    dim: usize,
    engine: Engine,
}

impl RowSpace {
    pub fn new(ring: RingSpec, dim: usize) -> Self {
        let engine = match ring {
            RingSpec::Rationals => Engine::Rational(QSpan::new(dim)),
            RingSpec::PrimeField(p) => Engine::Prime(FieldEchelon::new(dim, p.get(), false), p.get()),
            RingSpec::Integers | RingSpec::IntegersLoc3 => Engine::Lattice(ZLattice::new(dim, false)),
        };
        RowSpace { ring, dim, engine }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of the span (of the lattice over the integer rings).
    pub fn rank(&self) -> usize {
        match &self.engine {
            Engine::Rational(s) => s.rank(),
            Engine::Prime(e, _) => e.rank(),
            Engine::Lattice(l) => l.rank(),
        }
    }

    /// Adds a row; true when the span (or lattice) changed.
    pub fn insert(&mut self, v: &IRow<BigInt>) -> bool {
        match &mut self.engine {
            Engine::Rational(s) => s.insert(v),
            Engine::Prime(e, p) => {
                let r = to_fp(v, *p);
                e.insert(&r)
            }
            Engine::Lattice(l) => {
                if self.ring == RingSpec::IntegersLoc3 && l.torsion(v).is_some_and(|t| is_power_of_three(&t.index)) {
                    return false;
                }
                l.insert(v)
            }
        }
    }

    /// Membership in the ring's sense.
    pub fn contains(&self, v: &IRow<BigInt>) -> bool {
        if v.is_empty() {
            return true;
        }
        match &self.engine {
            Engine::Rational(s) => s.contains(v),
            Engine::Prime(e, p) => e.contains(&to_fp(v, *p)),
            Engine::Lattice(l) => match self.ring {
                RingSpec::IntegersLoc3 => l.torsion(v).is_some_and(|t| is_power_of_three(&t.index)),
                _ => l.contains(v),
            },
        }
    }

    /// Least `k` with `k * v` in the integer lattice; `None` over fields or
    /// outside the rational span.
    pub fn torsion(&self, v: &IRow<BigInt>) -> Option<BigInt> {
        match &self.engine {
            Engine::Lattice(l) => l.torsion(v).map(|t| t.index),
            _ => None,
        }
    }

    /// Product of the lattice pivots (lattice determinant within its rational
    /// span); `None` over fields.
    pub fn pivot_product(&self) -> Option<BigInt> {
        match &self.engine {
            Engine::Lattice(l) => Some(l.pivot_product()),
            _ => None,
        }
    }

    /// Independent basis rows: echelon rows over fields, the Hermite basis
    /// over the integer rings.
    pub fn basis(&self) -> Vec<IRow<BigInt>> {
        match &self.engine {
            Engine::Rational(s) => s.rows(),
            Engine::Prime(e, _) => e
                .rows()
                .iter()
                .map(|r| r.iter().map(|(k, x)| (*k, BigInt::from(x.0))).collect())
                .collect(),
            Engine::Lattice(l) => l.hermite_basis(),
        }
    }

    /// A cheap invariant that must agree between equal spans.
    fn fingerprint(&self) -> (usize, Option<BigInt>) {
        let pp = self.pivot_product().map(|p| match self.ring {
            RingSpec::IntegersLoc3 => three_free(&p),
            _ => p,
        });
        (self.rank(), pp)
    }

    /// True when every basis row of `other` lies in `self`.
    pub fn contains_space(&self, other: &RowSpace) -> bool {
        self.dim == other.dim && other.basis().iter().all(|r| self.contains(r))
    }

    pub fn same_span(&self, other: &RowSpace) -> bool {
        self.ring == other.ring
            && self.fingerprint() == other.fingerprint()
            && self.contains_space(other)
            && other.contains_space(self)
    }
}

fn to_fp(v: &IRow<BigInt>, p: u64) -> Vec<(u32, Fp)> {
    v.iter()
        .filter_map(|(k, x)| {
            let r = reduce_big(x, p);
            (r != 0).then_some((*k, Fp(r)))
        })
        .collect()
}

/// `n` with every factor 3 removed.
pub(crate) fn three_free(n: &BigInt) -> BigInt {
    let three = BigInt::from(3);
    let mut n = n.abs();
    while !n.is_zero() && (&n % &three).is_zero() {
        n /= &three;
    }
    n
}

/// Integer row spanning the same line as `entries` over the ring: rationals
/// are multiplied by their common denominator, residues become their
/// representatives. Returns the row and the multiplier.
pub fn integer_row(entries: &[(u32, Scalar)]) -> (IRow<BigInt>, BigInt) {
    let den = entries.iter().fold(BigInt::one(), |acc, (_, c)| match c {
        Scalar::Rational(q) | Scalar::Loc3(q) => acc.lcm(q.denom()),
        _ => acc,
    });
    let row = entries
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let v = match c {
                Scalar::Rational(q) | Scalar::Loc3(q) => q.numer() * (&den / q.denom()),
                Scalar::Integer(n) => n.clone(),
                Scalar::Residue { value, .. } => BigInt::from(*value),
            };
            (*k, v)
        })
        .collect();
    (row, den)
}
