//! Sparse integer rows: sorted `(column, value)` pairs with no stored zeros.

use super::int::{cast, Checked, LinInt};

pub type IRow<T> = Vec<(u32, T)>;

/// `a*v + b*h`, zeros dropped.
pub fn comb<T: LinInt>(a: &T, v: &[(u32, T)], b: &T, h: &[(u32, T)]) -> Checked<IRow<T>> {
    let mut out = Vec::with_capacity(v.len() + h.len());
    let (mut i, mut j) = (0, 0);
    let zero = T::zero();
    while i < v.len() || j < h.len() {
        let ci = v.get(i).map_or(u32::MAX, |e| e.0);
        let cj = h.get(j).map_or(u32::MAX, |e| e.0);
        let (col, val) = if ci < cj {
            i += 1;
            (ci, v[i - 1].1.mul(a)?)
        } else if cj < ci {
            j += 1;
            (cj, h[j - 1].1.mul(b)?)
        } else {
            i += 1;
            j += 1;
            (ci, T::lin2(a, &v[i - 1].1, b, &h[j - 1].1)?)
        };
        if val != zero {
            out.push((col, val));
        }
    }
    Ok(out)
}

/// `v - c*h`.
pub fn sub_multiple<T: LinInt>(v: &[(u32, T)], c: &T, h: &[(u32, T)]) -> Checked<IRow<T>> {
    comb(&T::one(), v, &c.neg()?, h)
}

pub fn scale<T: LinInt>(v: &[(u32, T)], c: &T) -> Checked<IRow<T>> {
    v.iter().map(|(k, x)| Ok((*k, x.mul(c)?))).collect()
}

pub fn negate<T: LinInt>(v: &mut IRow<T>) -> Checked<()> {
    for e in v.iter_mut() {
        e.1 = e.1.neg()?;
    }
    Ok(())
}

pub fn get<T: LinInt>(v: &[(u32, T)], col: u32) -> Option<&T> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|i| &v[i].1)
}

pub fn content<T: LinInt>(v: &[(u32, T)]) -> Checked<T> {
    let mut g = T::zero();
    for (_, x) in v {
        g = g.gcd(x)?;
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Divides by the content and makes the leading entry positive. Returns the
/// signed factor `f` with `old = f * new`.
pub fn make_primitive<T: LinInt>(v: &mut IRow<T>) -> Checked<T> {
    if v.is_empty() {
        return Ok(T::one());
    }
    let mut g = content(v)?;
    if v[0].1.is_negative() {
        g = g.neg()?;
    }
    if !g.is_one() {
        for e in v.iter_mut() {
            e.1 = e.1.div_exact(&g)?;
        }
    }
    Ok(g)
}

pub fn convert<S: LinInt, T: LinInt>(v: &[(u32, S)]) -> Checked<IRow<T>> {
    v.iter().map(|(k, x)| Ok((*k, cast(x)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_drops_zeros() {
        let v: IRow<i64> = vec![(0, 2), (3, 1)];
        let h: IRow<i64> = vec![(0, 1), (2, 5)];
        assert_eq!(comb(&1, &v, &-2, &h).unwrap(), vec![(2, -10), (3, 1)]);
    }

    #[test]
    fn primitive_form() {
        let mut v: IRow<i64> = vec![(1, -4), (5, 6)];
        assert_eq!(make_primitive(&mut v).unwrap(), -2);
        assert_eq!(v, vec![(1, 2), (5, -3)]);
    }
}
