//! Fraction-free row echelon form over the rationals. Rows are kept integral
//! and primitive with positive leading entry.

use num_bigint::BigInt;

use super::int::{Checked, LinInt};
use super::row::{comb, convert, make_primitive, IRow};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct QEchelon<T> {
    dim: usize,
    pivot_row: Vec<u32>,
    rows: Vec<IRow<T>>,
    origin: Vec<usize>,
    inserted: usize,
}

impl<T: LinInt> QEchelon<T> {
    pub fn new(dim: usize) -> Self {
        QEchelon {
            dim,
            pivot_row: vec![NONE; dim],
            rows: Vec::new(),
            origin: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Index (in insertion order) of the input row that created each basis row.
    pub fn origins(&self) -> &[usize] {
        &self.origin
    }

    pub fn rows(&self) -> &[IRow<T>] {
        &self.rows
    }

    /// Residual of `v` after eliminating leading entries; empty iff `v` is in
    /// the span.
    pub fn reduce(&self, v: &[(u32, T)]) -> Checked<IRow<T>> {
        let mut v = v.to_vec();
        make_primitive(&mut v)?;
        while let Some((c, x)) = v.first() {
            let r = self.pivot_row[*c as usize];
            if r == NONE {
                break;
            }
            let h = &self.rows[r as usize];
            let p = &h[0].1;
            let g = p.gcd(x)?;
            let a = p.div_exact(&g)?;
            let b = x.div_exact(&g)?.neg()?;
            v = comb(&a, &v, &b, h)?;
            make_primitive(&mut v)?;
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[(u32, T)]) -> Checked<bool> {
        Ok(self.reduce(v)?.is_empty())
    }

    /// Inserts `v`; true when it raised the rank. The echelon is unchanged
    /// when this returns `Err`.
    pub fn insert(&mut self, v: &[(u32, T)]) -> Checked<bool> {
        let r = self.reduce(v)?;
        let index = self.inserted;
        self.inserted += 1;
        if r.is_empty() {
            return Ok(false);
        }
        self.pivot_row[r[0].0 as usize] = self.rows.len() as u32;
        self.rows.push(r);
        self.origin.push(index);
        Ok(true)
    }

    fn promote(&self) -> QEchelon<BigInt> {
        QEchelon {
            dim: self.dim,
            pivot_row: self.pivot_row.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| convert(r).expect("BigInt conversion"))
                .collect(),
            origin: self.origin.clone(),
            inserted: self.inserted,
        }
    }
}

/// A rational row span that starts on `i64` and switches to `BigInt` on the
/// first overflow.
#[derive(Clone, Debug)]
pub enum QSpan {
    Small(QEchelon<i64>),
    Big(QEchelon<BigInt>),
}

impl QSpan {
    pub fn new(dim: usize) -> Self {
        QSpan::Small(QEchelon::new(dim))
    }

    pub fn rank(&self) -> usize {
        match self {
            QSpan::Small(e) => e.rank(),
            QSpan::Big(e) => e.rank(),
        }
    }

    pub fn origins(&self) -> &[usize] {
        match self {
            QSpan::Small(e) => e.origins(),
            QSpan::Big(e) => e.origins(),
        }
    }

    /// Basis rows (primitive, positive leading entry).
    pub fn rows(&self) -> Vec<IRow<BigInt>> {
        match self {
            QSpan::Small(e) => e
                .rows()
                .iter()
                .map(|r| convert(r).expect("BigInt conversion"))
                .collect(),
            QSpan::Big(e) => e.rows().to_vec(),
        }
    }

    pub fn insert<S: LinInt>(&mut self, v: &[(u32, S)]) -> bool {
        if let QSpan::Small(e) = self {
            match convert::<S, i64>(v).and_then(|v| e.insert(&v)) {
                Ok(b) => return b,
                Err(_) => *self = QSpan::Big(e.promote()),
            }
        }
        match self {
            QSpan::Big(e) => e
                .insert(&convert::<S, BigInt>(v).expect("BigInt conversion"))
                .expect("BigInt arithmetic"),
            QSpan::Small(_) => unreachable!(),
        }
    }

    pub fn contains<S: LinInt>(&self, v: &[(u32, S)]) -> bool {
        match self {
            QSpan::Small(e) => {
                if let Ok(b) = convert::<S, i64>(v).and_then(|v| e.contains(&v)) {
                    return b;
                }
                e.promote()
                    .contains(&convert::<S, BigInt>(v).expect("BigInt conversion"))
                    .expect("BigInt arithmetic")
            }
            QSpan::Big(e) => e
                .contains(&convert::<S, BigInt>(v).expect("BigInt conversion"))
                .expect("BigInt arithmetic"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_membership() {
        let mut s = QSpan::new(3);
        assert!(s.insert::<i64>(&[(0, 2), (1, 4)]));
        assert!(s.insert::<i64>(&[(0, 1), (2, 1)]));
        assert!(!s.insert::<i64>(&[(1, 2), (2, -1)]));
        assert!(s.contains::<i64>(&[(0, 3), (1, 4), (2, 1)]));
        assert!(!s.contains::<i64>(&[(2, 1)]));
        assert_eq!(s.rank(), 2);
        assert_eq!(s.origins(), &[0, 1]);
    }

    #[test]
    fn overflow_promotes() {
        let big = i64::MAX / 3;
        let mut s = QSpan::new(2);
        assert!(s.insert::<i64>(&[(0, big), (1, 1)]));
        assert!(s.insert::<i64>(&[(0, big - 1), (1, 7)]));
        assert!(matches!(s, QSpan::Big(_)));
        assert!(s.contains::<i64>(&[(1, 1)]));
    }
}
