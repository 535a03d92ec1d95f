//! Integer row lattices kept in echelon form by extended-gcd row operations.
//! Pivots are positive; each basis row can carry its combination of the
//! inserted rows, which stays integral because every operation is unimodular.

use num_bigint::BigInt;
use num_traits::One;

use super::int::{Checked, LinInt};
use super::row::{comb, convert, make_primitive, negate, scale, sub_multiple, IRow};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Lattice<T> {
    dim: usize,
    pivot_row: Vec<u32>,
    rows: Vec<IRow<T>>,
    combos: Option<Vec<IRow<T>>>,
    inserted: usize,
}

/// `k * w = sum coef * basis[row]` with the smallest positive `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReduction<T> {
    pub index: T,
    pub coefficients: Vec<(usize, T)>,
}

impl<T: LinInt> Lattice<T> {
    pub fn new(dim: usize, track: bool) -> Self {
        Lattice {
            dim,
            pivot_row: vec![NONE; dim],
            rows: Vec::new(),
            combos: track.then(Vec::new),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[IRow<T>] {
        &self.rows
    }

    pub fn pivot_product(&self) -> BigInt {
        self.rows
            .iter()
            .fold(<BigInt as One>::one(), |acc, r| acc * r[0].1.to_big())
    }

    /// Inserts `v`; true when the lattice changed (rank grew or the index
    /// dropped). On `Err` the lattice is unchanged.
    pub fn insert(&mut self, v: &[(u32, T)]) -> Checked<bool> {
        let index = self.inserted;
        let mut v = v.to_vec();
        let mut vc: Option<IRow<T>> = self.combos.as_ref().map(|_| vec![(index as u32, T::one())]);
        let mut pending: Vec<(usize, IRow<T>, Option<IRow<T>>)> = Vec::new();
        let grew = loop {
            let Some((c, x)) = v.first().cloned() else {
                break false;
            };
            let r = self.pivot_row[c as usize];
            if r == NONE {
                if x.is_negative() {
                    negate(&mut v)?;
                    if let Some(vc) = vc.as_mut() {
                        negate(vc)?;
                    }
                }
                break true;
            }
            let r = r as usize;
            let (h, hc) = match pending.iter().position(|p| p.0 == r) {
                Some(i) => (pending[i].1.clone(), pending[i].2.clone()),
                None => (self.rows[r].clone(), self.combos.as_ref().map(|c| c[r].clone())),
            };
            let p = h[0].1.clone();
            if p.divides(&x) {
                let q = x.div_exact(&p)?;
                v = sub_multiple(&v, &q, &h)?;
                if let (Some(vc), Some(hc)) = (vc.as_mut(), hc.as_ref()) {
                    *vc = sub_multiple(vc, &q, hc)?;
                }
                continue;
            }
            let (g, s, t) = p.ext_gcd(&x)?;
            let a = p.div_exact(&g)?;
            let b = x.div_exact(&g)?.neg()?;
            let new_h = comb(&s, &h, &t, &v)?;
            let new_v = comb(&b, &h, &a, &v)?;
            let (new_hc, new_vc) = match (hc.as_ref(), vc.as_ref()) {
                (Some(hc), Some(vcr)) => (Some(comb(&s, hc, &t, vcr)?), Some(comb(&b, hc, &a, vcr)?)),
                _ => (None, None),
            };
            pending.retain(|p| p.0 != r);
            pending.push((r, new_h, new_hc));
            v = new_v;
            vc = new_vc;
        };
        self.inserted += 1;
        let changed = grew || !pending.is_empty();
        for (r, h, hc) in pending {
            self.rows[r] = h;
            if let (Some(combos), Some(hc)) = (self.combos.as_mut(), hc) {
                combos[r] = hc;
            }
        }
        if grew {
            self.pivot_row[v[0].0 as usize] = self.rows.len() as u32;
            self.rows.push(v);
            if let (Some(combos), Some(vc)) = (self.combos.as_mut(), vc) {
                combos.push(vc);
            }
        }
        if changed {
            // keeps entries bounded by the pivots; a failed reduction leaves a
            // valid (less reduced) basis, and the next overflow promotes
            let _ = self.hermite_reduce();
        }
        Ok(changed)
    }

    /// Smallest `k >= 1` with `k * w` in the lattice together with the basis
    /// coefficients of `k * w`, or `None` when no multiple lies in it.
    pub fn torsion(&self, w: &[(u32, T)]) -> Checked<Option<TorsionReduction<T>>> {
        let mut r = w.to_vec();
        let mut k = T::one();
        let mut coefs: Vec<(usize, T)> = Vec::new();
        while let Some((c, x)) = r.first().cloned() {
            let row = self.pivot_row[c as usize];
            if row == NONE {
                return Ok(None);
            }
            let h = &self.rows[row as usize];
            let p = &h[0].1;
            let g = p.gcd(&x)?;
            let m = p.div_exact(&g)?;
            if !m.is_one() {
                r = scale(&r, &m)?;
                k = k.mul(&m)?;
                for e in coefs.iter_mut() {
                    e.1 = e.1.mul(&m)?;
                }
            }
            let q = x.div_exact(&g)?;
            r = sub_multiple(&r, &q, h)?;
            coefs.push((row as usize, q));
        }
        Ok(Some(TorsionReduction {
            index: k,
            coefficients: coefs,
        }))
    }

    /// Combination of inserted rows equal to `sum coef * basis[row]`.
    pub fn expand(&self, coefficients: &[(usize, T)]) -> Checked<IRow<T>> {
        let combos = self.combos.as_ref().expect("expand requires a tracking lattice");
        let mut acc: IRow<T> = Vec::new();
        for (r, q) in coefficients {
            acc = comb(&T::one(), &acc, q, &combos[*r])?;
        }
        Ok(acc)
    }

    /// Reduces the entries above each pivot into `[0, pivot)`, giving the
    /// Hermite normal form of the lattice basis.
    pub fn hermite_reduce(&mut self) -> Checked<()> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        for (i, &r) in order.iter().enumerate() {
            let (c, p) = self.rows[r][0].clone();
            for &above in &order[..i] {
                let Some(x) = super::row::get(&self.rows[above], c).cloned() else {
                    continue;
                };
                let q = x.div_floor(&p)?;
                if q.is_zero() {
                    continue;
                }
                let h = self.rows[r].clone();
                self.rows[above] = sub_multiple(&self.rows[above], &q, &h)?;
                if let Some(combos) = self.combos.as_mut() {
                    let hc = combos[r].clone();
                    combos[above] = sub_multiple(&combos[above], &q, &hc)?;
                }
            }
        }
        Ok(())
    }

    fn promote(&self) -> Lattice<BigInt> {
        let conv = |r: &IRow<T>| convert::<T, BigInt>(r).expect("BigInt conversion");
        Lattice {
            dim: self.dim,
            pivot_row: self.pivot_row.clone(),
            rows: self.rows.iter().map(conv).collect(),
            combos: self.combos.as_ref().map(|c| c.iter().map(conv).collect()),
            inserted: self.inserted,
        }
    }
}

/// Integer lattice on `i64` that switches to `BigInt` on the first overflow.
/// `insert` reports whether the lattice changed.
#[derive(Clone, Debug)]
pub enum ZLattice {
    Small(Lattice<i64>),
    Big(Lattice<BigInt>),
}

impl ZLattice {
    pub fn new(dim: usize, track: bool) -> Self {
        ZLattice::Small(Lattice::new(dim, track))
    }

    pub fn rank(&self) -> usize {
        match self {
            ZLattice::Small(l) => l.rank(),
            ZLattice::Big(l) => l.rank(),
        }
    }

    pub fn pivot_product(&self) -> BigInt {
        match self {
            ZLattice::Small(l) => l.pivot_product(),
            ZLattice::Big(l) => l.pivot_product(),
        }
    }

    pub fn insert<S: LinInt>(&mut self, v: &[(u32, S)]) -> bool {
        if let ZLattice::Small(l) = self {
            match convert::<S, i64>(v).and_then(|v| l.insert(&v)) {
                Ok(b) => return b,
                Err(_) => *self = ZLattice::Big(l.promote()),
            }
        }
        match self {
            ZLattice::Big(l) => l
                .insert(&convert::<S, BigInt>(v).expect("BigInt conversion"))
                .expect("BigInt arithmetic"),
            ZLattice::Small(_) => unreachable!(),
        }
    }

    /// Torsion reduction with coefficients as `BigInt`.
    pub fn torsion<S: LinInt>(&self, w: &[(u32, S)]) -> Option<TorsionReduction<BigInt>> {
        let big = |l: &Lattice<BigInt>| {
            l.torsion(&convert::<S, BigInt>(w).expect("BigInt conversion"))
                .expect("BigInt arithmetic")
        };
        match self {
            ZLattice::Small(l) => match convert::<S, i64>(w).and_then(|w| l.torsion(&w)) {
                Ok(t) => t.map(|t| TorsionReduction {
                    index: BigInt::from(t.index),
                    coefficients: t.coefficients.into_iter().map(|(r, q)| (r, BigInt::from(q))).collect(),
                }),
                Err(_) => big(&l.promote()),
            },
            ZLattice::Big(l) => big(l),
        }
    }

    pub fn contains<S: LinInt>(&self, w: &[(u32, S)]) -> bool {
        self.torsion(w).is_some_and(|t| One::is_one(&t.index))
    }

    /// Combination of the inserted rows equal to `sum coef * basis[row]`.
    pub fn expand(&self, coefficients: &[(usize, BigInt)]) -> IRow<BigInt> {
        let big = match self {
            ZLattice::Small(l) => l.promote(),
            ZLattice::Big(l) => l.clone(),
        };
        big.expand(coefficients).expect("BigInt arithmetic")
    }

    /// The basis rows in Hermite normal form, ordered by pivot column.
    pub fn hermite_basis(&self) -> Vec<IRow<BigInt>> {
        let mut big = match self {
            ZLattice::Small(l) => l.promote(),
            ZLattice::Big(l) => l.clone(),
        };
        big.hermite_reduce().expect("BigInt arithmetic");
        let mut rows = big.rows;
        rows.sort_by_key(|r| r[0].0);
        rows
    }
}

/// Scales a row to be primitive with positive leading entry.
pub fn primitive<T: LinInt>(v: &[(u32, T)]) -> Checked<IRow<T>> {
    let mut v = v.to_vec();
    make_primitive(&mut v)?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_membership_and_torsion() {
        let mut l = ZLattice::new(2, true);
        assert!(l.insert::<i64>(&[(0, 4), (1, 2)]));
        assert!(l.insert::<i64>(&[(0, 6), (1, 4)]));
        // lattice spanned by (4,2),(6,4) = (2,0),(0,2) basis with index 4
        assert_eq!(l.pivot_product(), BigInt::from(4));
        assert!(l.contains::<i64>(&[(0, 2)]));
        assert!(!l.contains::<i64>(&[(0, 1)]));
        let t = l.torsion::<i64>(&[(0, 1), (1, 1)]).unwrap();
        assert_eq!(t.index, BigInt::from(2));
        let combo = l.expand(&t.coefficients);
        // check 2*(1,1) = sum combo_i * input_i
        let inputs = [[4, 2], [6, 4]];
        let mut got = [BigInt::from(0), BigInt::from(0)];
        for (i, c) in &combo {
            for j in 0..2 {
                got[j] += c * inputs[*i as usize][j];
            }
        }
        assert_eq!(got, [BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn no_multiple_outside_rational_span() {
        let mut l = ZLattice::new(2, false);
        l.insert::<i64>(&[(0, 1)]);
        assert!(l.torsion::<i64>(&[(1, 1)]).is_none());
    }

    #[test]
    fn hermite_basis_is_reduced() {
        let mut l = ZLattice::new(2, false);
        l.insert::<i64>(&[(0, 1), (1, 2)]);
        l.insert::<i64>(&[(0, 1), (1, 3)]);
        let h = l.hermite_basis();
        assert_eq!(h, vec![vec![(0, BigInt::from(1))], vec![(1, BigInt::from(1))]]);
    }
}
