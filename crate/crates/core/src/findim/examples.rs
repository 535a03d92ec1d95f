//! Small algebras used as test beds for the finite criterion.

use std::collections::HashMap;

use super::algebra::StructureAlgebra;
use crate::coeff::{RingSpec, Scalar};
use crate::error::{Error, Result};

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

fn power_name(base: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn unit_coords(ring: RingSpec, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ring.zero(); dim];
    v[i] = ring.one();
    v
}

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} needs a positive parameter")));
    }
    Ok(())
}

/// The enveloping algebra of the Heisenberg Lie algebra (`[a,b] = c`, `c`
/// central) modulo PBW monomials `a^i b^j c^k` of degree `i + j + 2k > cap`.
/// Generated by `a` and `b`.
pub fn heisenberg_truncated(cap: usize, ring: RingSpec) -> Result<StructureAlgebra> {
    positive("heisenberg_truncated", cap)?;
    let cap = cap as u32;
    let mut monos = Vec::new();
    for k in 0..=cap / 2 {
        for i in 0..=cap - 2 * k {
            for j in 0..=cap - 2 * k - i {
                monos.push((i, j, k));
            }
        }
    }
    monos.sort_by_key(|&(i, j, k)| (i + j + 2 * k, std::cmp::Reverse(i), std::cmp::Reverse(j)));
    let index: HashMap<(u32, u32, u32), usize> = monos.iter().enumerate().map(|(n, m)| (*m, n)).collect();
    let mut sc = Vec::new();
    for (p, &(i, j, k)) in monos.iter().enumerate() {
        for (q, &(l, m, n)) in monos.iter().enumerate() {
            // b^j a^l = sum_t (-1)^t t! C(j,t) C(l,t) a^(l-t) b^(j-t) c^t
            for t in 0..=j.min(l) {
                let key = (i + l - t, j - t + m, k + n + t);
                let Some(&r) = index.get(&key) else { continue };
                let sign = if t % 2 == 0 { 1 } else { -1 };
                let c = sign * factorial(t) * binomial(j, t) * binomial(l, t);
                sc.push((p, q, r, ring.from_int(c)));
            }
        }
    }
    let dim = monos.len();
    let names = monos
        .iter()
        .map(|&(i, j, k)| {
            let s = power_name("a", i) + &power_name("b", j) + &power_name("c", k);
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        })
        .collect();
    let mut gens = Vec::new();
    if cap >= 1 {
        gens.push(("a".to_string(), unit_coords(ring, dim, index[&(1, 0, 0)])));
        gens.push(("b".to_string(), unit_coords(ring, dim, index[&(0, 1, 0)])));
    }
    StructureAlgebra::new(ring, dim, sc, unit_coords(ring, dim, 0), gens)?.with_basis_names(names)
}

/// The exterior algebra on `k` generators, basis indexed by subsets.
pub fn grassmann(k: usize, ring: RingSpec) -> Result<StructureAlgebra> {
    positive("grassmann", k)?;
    if k > 8 {
        return Err(Error::InvalidParameter(format!("grassmann({k}) exceeds 8 generators")));
    }
    let dim = 1usize << k;
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&s| (s.count_ones(), s.reverse_bits()));
    let pos: Vec<usize> = {
        let mut p = vec![0; dim];
        for (i, &s) in order.iter().enumerate() {
            p[s] = i;
        }
        p
    };
    let mut sc = Vec::new();
    for &s in &order {
        for &t in &order {
            if s & t != 0 {
                continue;
            }
            // sign of moving each element of t past the larger elements of s
            let mut swaps = 0;
            for b in 0..k {
                if t >> b & 1 == 1 {
                    swaps += (s >> (b + 1)).count_ones();
                }
            }
            let c = if swaps % 2 == 0 { 1 } else { -1 };
            sc.push((pos[s], pos[t], pos[s | t], ring.from_int(c)));
        }
    }
    let names = order
        .iter()
        .map(|&s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..k)
                    .filter(|b| s >> b & 1 == 1)
                    .map(|b| format!("e{}", b + 1))
                    .collect()
            }
        })
        .collect();
    let gens = (0..k)
        .map(|b| (format!("e{}", b + 1), unit_coords(ring, dim, pos[1 << b])))
        .collect();
    StructureAlgebra::new(ring, dim, sc, unit_coords(ring, dim, 0), gens)?.with_basis_names(names)
}

/// `R*1` plus the strictly upper triangular `m x m` matrices, generated by
/// the superdiagonal units `E(i,i+1)`.
pub fn unitriangular_plus_unit(m: usize, ring: RingSpec) -> Result<StructureAlgebra> {
    positive("unitriangular_plus_unit", m)?;
    let mut units = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            units.push((i, j));
        }
    }
    let dim = units.len() + 1;
    let index: HashMap<(usize, usize), usize> = units.iter().enumerate().map(|(n, u)| (*u, n + 1)).collect();
    let one = ring.one();
    let mut sc = vec![(0, 0, 0, one.clone())];
    for n in 1..dim {
        sc.push((0, n, n, one.clone()));
        sc.push((n, 0, n, one.clone()));
    }
    for (p, &(i, j)) in units.iter().enumerate() {
        for (q, &(k, l)) in units.iter().enumerate() {
            if j == k {
                sc.push((p + 1, q + 1, index[&(i, l)], one.clone()));
            }
        }
    }
    let mut names = vec!["1".to_string()];
    names.extend(units.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)));
    let gens = (0..m.saturating_sub(1))
        .map(|i| {
            (
                format!("E{}{}", i + 1, i + 2),
                unit_coords(ring, dim, index[&(i, i + 1)]),
            )
        })
        .collect();
    StructureAlgebra::new(ring, dim, sc, unit_coords(ring, dim, 0), gens)?.with_basis_names(names)
}

/// All upper triangular `m x m` matrices, generated by their matrix units.
pub fn upper_triangular(m: usize, ring: RingSpec) -> Result<StructureAlgebra> {
    positive("upper_triangular", m)?;
    let mut units = Vec::new();
    for i in 0..m {
        for j in i..m {
            units.push((i, j));
        }
    }
    let dim = units.len();
    let index: HashMap<(usize, usize), usize> = units.iter().enumerate().map(|(n, u)| (*u, n)).collect();
    let mut sc = Vec::new();
    for (p, &(i, j)) in units.iter().enumerate() {
        for (q, &(k, l)) in units.iter().enumerate() {
            if j == k {
                sc.push((p, q, index[&(i, l)], ring.one()));
            }
        }
    }
    let mut unit = vec![ring.zero(); dim];
    for i in 0..m {
        unit[index[&(i, i)]] = ring.one();
    }
    let names = units
        .iter()
        .map(|(i, j)| format!("E{}{}", i + 1, j + 1))
        .collect::<Vec<_>>();
    let gens = units
        .iter()
        .enumerate()
        .map(|(n, _)| (names[n].clone(), unit_coords(ring, dim, n)))
        .collect();
    StructureAlgebra::new(ring, dim, sc, unit, gens)?.with_basis_names(names)
}

/// `R[t]/(t^m)`, generated by `t`.
pub fn commutative_series(m: usize, ring: RingSpec) -> Result<StructureAlgebra> {
    positive("commutative_series", m)?;
    let mut sc = Vec::new();
    for i in 0..m {
        for j in 0..m - i {
            sc.push((i, j, i + j, ring.one()));
        }
    }
    let names = (0..m)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                power_name("t", i as u32)
            }
        })
        .collect();
    let gens = if m >= 2 {
        vec![("t".to_string(), unit_coords(ring, m, 1))]
    } else {
        Vec::new()
    };
    StructureAlgebra::new(ring, m, sc, unit_coords(ring, m, 0), gens)?.with_basis_names(names)
}

/// Builds an example from `name(param)`, e.g. `heisenberg_truncated(4)`.
pub fn example_algebra(spec: &str, ring: RingSpec) -> Result<StructureAlgebra> {
    let spec = spec.trim();
    let bad = || Error::InvalidParameter(format!("expected name(parameter), got {spec:?}"));
    let open = spec.find('(').ok_or_else(bad)?;
    let inner = spec[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let param: usize = inner.trim().parse().map_err(|_| bad())?;
    match spec[..open].trim() {
        "heisenberg_truncated" => heisenberg_truncated(param, ring),
        "grassmann" => grassmann(param, ring),
        "unitriangular_plus_unit" => unitriangular_plus_unit(param, ring),
        "upper_triangular" => upper_triangular(param, ring),
        "commutative_series" => commutative_series(param, ring),
        other => Err(Error::InvalidParameter(format!("unknown example algebra {other:?}"))),
    }
}

/// Names accepted by [`example_algebra`].
pub const EXAMPLE_NAMES: [&str; 5] = [
    "heisenberg_truncated",
    "grassmann",
    "unitriangular_plus_unit",
    "upper_triangular",
    "commutative_series",
];
