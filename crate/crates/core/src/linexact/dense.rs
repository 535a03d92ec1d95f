//! Dense Hermite and Smith normal forms with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![BigInt::zero(); cols]; rows]
}

pub fn matmul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix, rows: usize, cols: usize) -> Matrix {
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &Matrix) -> BigInt {
    let n = a.len();
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

fn row_sub(a: &mut Matrix, target: usize, q: &BigInt, src: usize) {
    if q.is_zero() {
        return;
    }
    let s = a[src].clone();
    for (x, y) in a[target].iter_mut().zip(&s) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn row_neg(a: &mut Matrix, r: usize) {
    for x in a[r].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Row-style Hermite normal form of the `rows x cols` matrix `a`.
///
/// Returns `(h, u, rank)` with `u * a = h`; the first `rank` rows of `h` are
/// the nonzero Hermite rows and the remainder are zero. The pivot in each
/// column is chosen as the row with the smallest absolute value, ties going to
/// the lowest index.
pub fn hermite(a: &Matrix, rows: usize, cols: usize) -> (Matrix, Matrix, usize) {
    let mut h = a.clone();
    let mut u = identity(rows);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()).then(i.cmp(&j)));
            let Some(best) = best else { break };
            h.swap(r, best);
            u.swap(r, best);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_sub(&mut h, i, &q, r);
                row_sub(&mut u, i, &q, r);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            row_neg(&mut h, r);
            row_neg(&mut u, r);
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_sub(&mut h, i, &q, r);
            row_sub(&mut u, i, &q, r);
        }
        pivots.push(c);
        r += 1;
    }
    (h, u, r)
}

/// Smith normal form: `(d, u, v)` with `u * a * v = diag(d)` padded with
/// zeros, `d` positive and `d[i] | d[i+1]`.
pub fn smith(a: &Matrix, rows: usize, cols: usize) -> (Vec<BigInt>, Matrix, Matrix) {
    let mut m = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    loop {
        let (h, hu, _) = hermite(&m, rows, cols);
        u = matmul(&hu, &u, rows, rows);
        let ht = transpose(&h, rows, cols);
        let (g, gv, _) = hermite(&ht, cols, rows);
        // g = gv * h^T, so h * gv^T = g^T
        v = matmul(&v, &transpose(&gv, cols, cols), cols, cols);
        m = transpose(&g, cols, rows);
        if !is_diagonal(&m) {
            continue;
        }
        let n = rows.min(cols);
        let d: Vec<BigInt> = (0..n).map(|i| m[i][i].clone()).take_while(|x| !x.is_zero()).collect();
        let bad = (0..d.len())
            .flat_map(|i| (i + 1..d.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !d[j].is_multiple_of(&d[i]));
        match bad {
            None => return (d, u, v),
            Some((i, j)) => {
                // column i += column j puts d[j] below d[i]; the next Hermite
                // pass replaces d[i] by the gcd.
                for row in m.iter_mut() {
                    let x = row[j].clone();
                    row[i] += x;
                }
                for row in v.iter_mut() {
                    let x = row[j].clone();
                    row[i] += x;
                }
            }
        }
    }
}

fn is_diagonal(m: &Matrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn hermite_small() {
        let a = mat(&[&[1, 2], &[1, 3]]);
        let (h, u, r) = hermite(&a, 2, 2);
        assert_eq!(r, 2);
        assert_eq!(h, mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(matmul(&u, &a, 2, 2), h);
        assert!(determinant(&u).abs().is_one());
    }

    #[test]
    fn smith_small() {
        let a = mat(&[&[4, 0], &[0, 6]]);
        let (d, u, v) = smith(&a, 2, 2);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(12)]);
        let prod = matmul(&matmul(&u, &a, 2, 2), &v, 2, 2);
        assert_eq!(prod, mat(&[&[2, 0], &[0, 12]]));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&mat(&[&[2, 1], &[7, 4]])), BigInt::from(1));
        assert_eq!(
            determinant(&mat(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
    }
}
