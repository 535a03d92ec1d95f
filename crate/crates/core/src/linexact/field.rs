//! Incremental reduced row echelon form over an exact field, with optional
//! tracking of each basis row as a combination of the inserted rows.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{inv_mod, mul_mod};

pub trait FieldElem: Clone + PartialEq + Debug + Send + Sync {
    type Ctx: Clone + Debug + Send + Sync;
    fn zero() -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn sub(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn mul(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn inv(&self, ctx: &Self::Ctx) -> Self;
}

impl FieldElem for BigRational {
    type Ctx = ();
    fn zero() -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self, _: &()) -> Self {
        self + o
    }
    fn sub(&self, o: &Self, _: &()) -> Self {
        self - o
    }
    fn mul(&self, o: &Self, _: &()) -> Self {
        self * o
    }
    fn inv(&self, _: &()) -> Self {
        self.recip()
    }
}

/// A residue modulo the prime held in the context.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp(pub u64);

impl FieldElem for Fp {
    type Ctx = u64;
    fn zero() -> Self {
        Fp(0)
    }
    fn one(_: &u64) -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self, p: &u64) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % *p as u128) as u64)
    }
    fn sub(&self, o: &Self, p: &u64) -> Self {
        Fp(((self.0 as u128 + *p as u128 - o.0 as u128) % *p as u128) as u64)
    }
    fn mul(&self, o: &Self, p: &u64) -> Self {
        Fp(mul_mod(self.0, o.0, *p))
    }
    fn inv(&self, p: &u64) -> Self {
        Fp(inv_mod(self.0, *p))
    }
}

pub type FRow<F> = Vec<(u32, F)>;

/// Outcome of reducing a vector against the echelon.
#[derive(Clone, Debug)]
pub struct Reduction<F> {
    /// Residual after subtracting basis rows.
    pub residual: FRow<F>,
    /// Coefficients `(basis row, c)` with `v = residual + sum c * basis[row]`.
    pub used: Vec<(usize, F)>,
}

#[derive(Clone, Debug)]
pub struct FieldEchelon<F: FieldElem> {
    ctx: F::Ctx,
    dim: usize,
    pivot_row: Vec<u32>,
    rows: Vec<FRow<F>>,
    pivots: Vec<u32>,
    combos: Option<Vec<FRow<F>>>,
    inserted: usize,
}

const NONE: u32 = u32::MAX;

impl<F: FieldElem> FieldEchelon<F> {
    pub fn new(dim: usize, ctx: F::Ctx, track: bool) -> Self {
        FieldEchelon {
            ctx,
            dim,
            pivot_row: vec![NONE; dim],
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: track.then(Vec::new),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[FRow<F>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[u32] {
        &self.pivots
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Subtracts the basis rows whose pivots occur in `v`. Because the basis is
    /// fully reduced one pass suffices.
    pub fn reduce(&self, v: &[(u32, F)]) -> Reduction<F> {
        let mut used = Vec::new();
        for (c, x) in v {
            let r = self.pivot_row[*c as usize];
            if r != NONE {
                used.push((r as usize, x.clone()));
            }
        }
        if used.is_empty() {
            return Reduction {
                residual: v.to_vec(),
                used,
            };
        }
        let mut acc = Dense::from_row(self.dim, v);
        for (r, c) in &used {
            acc.sub_scaled(&self.rows[*r], c, &self.ctx);
        }
        Reduction {
            residual: acc.into_row(),
            used,
        }
    }

    pub fn contains(&self, v: &[(u32, F)]) -> bool {
        self.reduce(v).residual.is_empty()
    }

    /// Inserts `v`; returns true when it was independent of the current rows.
    pub fn insert(&mut self, v: &[(u32, F)]) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let red = self.reduce(v);
        if red.residual.is_empty() {
            return false;
        }
        let ctx = self.ctx.clone();
        let lead_inv = red.residual[0].1.inv(&ctx);
        let pivot = red.residual[0].0;
        let row: FRow<F> = red.residual.iter().map(|(k, x)| (*k, x.mul(&lead_inv, &ctx))).collect();
        let combo = self.combos.as_ref().map(|combos| {
            let mut acc = Dense::new(self.inserted);
            acc.set(index as u32, F::one(&ctx));
            for (r, c) in &red.used {
                acc.sub_scaled(&combos[*r], c, &ctx);
            }
            acc.scale(&lead_inv, &ctx);
            acc.into_row()
        });
        // keep the basis fully reduced at the new pivot column
        for r in 0..self.rows.len() {
            let Some(pos) = self.rows[r].iter().position(|e| e.0 == pivot) else {
                continue;
            };
            let c = self.rows[r][pos].1.clone();
            let mut acc = Dense::from_row(self.dim, &self.rows[r]);
            acc.sub_scaled(&row, &c, &ctx);
            self.rows[r] = acc.into_row();
            if let (Some(combos), Some(new)) = (self.combos.as_mut(), combo.as_ref()) {
                let mut acc = Dense::from_row(self.inserted, &combos[r]);
                acc.sub_scaled(new, &c, &ctx);
                combos[r] = acc.into_row();
            }
        }
        self.pivot_row[pivot as usize] = self.rows.len() as u32;
        self.rows.push(row);
        self.pivots.push(pivot);
        if let (Some(combos), Some(new)) = (self.combos.as_mut(), combo) {
            combos.push(new);
        }
        true
    }

    /// Coefficients over the inserted rows expressing `v`, if `v` is in the
    /// span. Requires tracking.
    pub fn solve(&self, v: &[(u32, F)]) -> Option<FRow<F>> {
        let combos = self.combos.as_ref().expect("solve requires a tracking echelon");
        let red = self.reduce(v);
        if !red.residual.is_empty() {
            return None;
        }
        let mut acc = Dense::new(self.inserted);
        for (r, c) in &red.used {
            acc.add_scaled(&combos[*r], c, &self.ctx);
        }
        Some(acc.into_row())
    }
}

/// Dense accumulator with a list of touched columns.
struct Dense<F> {
    vals: Vec<F>,
    touched: Vec<u32>,
    mark: Vec<bool>,
}

impl<F: FieldElem> Dense<F> {
    fn new(dim: usize) -> Self {
        Dense {
            vals: vec![F::zero(); dim],
            touched: Vec::new(),
            mark: vec![false; dim],
        }
    }

    fn from_row(dim: usize, v: &[(u32, F)]) -> Self {
        let mut d = Dense::new(dim);
        for (k, x) in v {
            d.set(*k, x.clone());
        }
        d
    }

    fn set(&mut self, k: u32, x: F) {
        let i = k as usize;
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(k);
        }
        self.vals[i] = x;
    }

    fn sub_scaled(&mut self, row: &[(u32, F)], c: &F, ctx: &F::Ctx) {
        for (k, x) in row {
            let i = *k as usize;
            let nv = self.vals[i].sub(&x.mul(c, ctx), ctx);
            self.set(*k, nv);
        }
    }

    fn add_scaled(&mut self, row: &[(u32, F)], c: &F, ctx: &F::Ctx) {
        for (k, x) in row {
            let i = *k as usize;
            let nv = self.vals[i].add(&x.mul(c, ctx), ctx);
            self.set(*k, nv);
        }
    }

    fn scale(&mut self, c: &F, ctx: &F::Ctx) {
        for &k in &self.touched {
            let i = k as usize;
            self.vals[i] = self.vals[i].mul(c, ctx);
        }
    }

    fn into_row(mut self) -> FRow<F> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for k in self.touched {
            let x = std::mem::replace(&mut self.vals[k as usize], F::zero());
            if !x.is_zero() {
                out.push((k, x));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_solve() {
        let mut e = FieldEchelon::<BigRational>::new(2, (), true);
        assert!(e.insert(&[(0, q(1, 1)), (1, q(1, 1))]));
        assert!(e.insert(&[(0, q(1, 1)), (1, q(-1, 1))]));
        assert!(!e.insert(&[(0, q(3, 1))]));
        let c = e.solve(&[(0, q(1, 1))]).unwrap();
        assert_eq!(c, vec![(0, q(1, 2)), (1, q(1, 2))]);
    }

    #[test]
    fn prime_field_rank() {
        let mut e = FieldEchelon::<Fp>::new(3, 3, true);
        assert!(e.insert(&[(0, Fp(1)), (1, Fp(1))]));
        assert!(e.insert(&[(1, Fp(1)), (2, Fp(1))]));
        // (1,2,1) = row0 + row1 over GF(3)
        assert!(!e.insert(&[(0, Fp(1)), (1, Fp(2)), (2, Fp(1))]));
        assert_eq!(e.rank(), 2);
        assert!(e.solve(&[(0, Fp(1)), (2, Fp(2))]).is_some());
    }
}
