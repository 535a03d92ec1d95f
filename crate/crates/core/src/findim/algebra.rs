use std::collections::HashSet;
use std::fmt;

use crate::coeff::{RingSpec, Scalar};
use crate::error::{Error, Result};
use crate::freealg::Poly;
use crate::linexact::{integer_row, RowSpace};

/// A vector of coordinates in a finite-dimensional algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingSpec,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(ring: RingSpec, dim: usize) -> Self {
        Element {
            ring,
            coords: vec![ring.zero(); dim],
        }
    }

    pub fn basis(ring: RingSpec, dim: usize, i: usize) -> Self {
        let mut e = Element::zero(ring, dim);
        e.coords[i] = ring.one();
        e
    }

    pub fn from_coords(ring: RingSpec, coords: Vec<Scalar>) -> Result<Self> {
        for c in &coords {
            if c.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.ring(),
                });
            }
        }
        Ok(Element { ring, coords })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(Element {
            ring: self.ring,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add_unchecked(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.scale(&self.ring.from_int(-1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Element> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: c.ring(),
            });
        }
        Ok(Element {
            ring: self.ring,
            coords: self.coords.iter().map(|a| a.mul_unchecked(c)).collect(),
        })
    }

    fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Integer row spanning the same line (see [`integer_row`]).
    pub(crate) fn row(&self) -> crate::linexact::IRow<num_bigint::BigInt> {
        let entries: Vec<(u32, Scalar)> = self.support().map(|(i, c)| (i as u32, c.clone())).collect();
        integer_row(&entries).0
    }

    /// `c1*name1 + c2*name2 ...` with the given basis names.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (i, c) in self.support() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let name = names.get(i).cloned().unwrap_or_else(|| format!("e{i}"));
            if mag.is_one() {
                out.push_str(&name);
            } else if name == "1" {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.ring, self.render(&[]))
    }
}

/// A unital associative algebra given by structure constants
/// `e_i * e_j = sum_k c_ijk e_k`, with a declared generating set.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    ring: RingSpec,
    dim: usize,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Element,
    generators: Vec<(String, Element)>,
    basis_names: Vec<String>,
}

impl StructureAlgebra {
    /// Builds and validates: indices in range, the unit axiom on every basis
    /// element, and associativity on every basis triple.
    pub fn new(
        ring: RingSpec,
        dim: usize,
        structure: Vec<(usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
        generators: Vec<(String, Vec<Scalar>)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Schema("dimension must be positive".into()));
        }
        let mut table = vec![vec![Vec::<(usize, Scalar)>::new(); dim]; dim];
        for (i, j, k, c) in structure {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Schema(format!(
                    "structure constant index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if c.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.ring(),
                });
            }
            let cell = &mut table[i][j];
            match cell.iter_mut().find(|e| e.0 == k) {
                Some(e) => e.1 = e.1.add_unchecked(&c),
                None => cell.push((k, c)),
            }
        }
        for row in &mut table {
            for cell in row {
                cell.retain(|e| !e.1.is_zero());
                cell.sort_by_key(|e| e.0);
            }
        }
        let vector = |what: &str, v: Vec<Scalar>| -> Result<Element> {
            if v.len() != dim {
                return Err(Error::Schema(format!(
                    "{what} has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
            Element::from_coords(ring, v)
        };
        let unit = vector("unit", unit)?;
        let mut names = HashSet::new();
        let mut gens = Vec::with_capacity(generators.len());
        for (name, v) in generators {
            if !names.insert(name.clone()) {
                return Err(Error::Schema(format!("generator {name:?} declared twice")));
            }
            let e = vector(&format!("generator {name:?}"), v)?;
            gens.push((name, e));
        }
        let alg = StructureAlgebra {
            ring,
            dim,
            table,
            unit,
            generators: gens,
            basis_names: (0..dim).map(|i| format!("e{i}")).collect(),
        };
        alg.check_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    /// Replaces the display names of the basis vectors.
    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    fn check_unit(&self) -> Result<()> {
        for j in 0..self.dim {
            let e = self.basis(j);
            if self.mul(&self.unit, &e)? != e {
                return Err(Error::UnitAxiom(format!("unit * e{j} != e{j}")));
            }
            if self.mul(&e, &self.unit)? != e {
                return Err(Error::UnitAxiom(format!("e{j} * unit != e{j}")));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let basis: Vec<Element> = (0..self.dim).map(|i| self.basis(i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul(&basis[i], &basis[j])?;
                for k in 0..self.dim {
                    let left = self.mul(&ij, &basis[k])?;
                    let right = self.mul(&basis[i], &self.mul(&basis[j], &basis[k])?)?;
                    if left != right {
                        return Err(Error::Associativity(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&Element> {
        self.generators.iter().find(|g| g.0 == name).map(|g| &g.1)
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.ring, self.dim, i)
    }

    /// Nonzero structure constants `(i, j, k, c)`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                out.extend(cell.iter().map(|(k, c)| (i, j, *k, c.clone())));
            }
        }
        out
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coords.len(),
            });
        }
        Element::from_coords(self.ring, coords)
    }

    fn check(&self, p: &Element) -> Result<()> {
        if p.ring != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: p.ring,
            });
        }
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, p: &Element, q: &Element) -> Result<Element> {
        self.check(p)?;
        self.check(q)?;
        let mut out = vec![self.ring.zero(); self.dim];
        for (i, a) in p.support() {
            for (j, b) in q.support() {
                let ab = a.mul_unchecked(b);
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].add_unchecked(&ab.mul_unchecked(c));
                }
            }
        }
        Ok(Element {
            ring: self.ring,
            coords: out,
        })
    }

    pub fn commutator(&self, p: &Element, q: &Element) -> Result<Element> {
        self.mul(p, q)?.sub(&self.mul(q, p)?)
    }

    pub fn render(&self, p: &Element) -> String {
        p.render(&self.basis_names)
    }

    /// Value of a free-algebra polynomial with `x_i` sent to `values[i]`.
    pub fn evaluate(&self, p: &Poly, values: &[Element]) -> Result<Element> {
        if p.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: p.ring(),
            });
        }
        let mut acc = Element::zero(self.ring, self.dim);
        for (w, c) in p.terms() {
            let mut term = self.unit.clone();
            for &l in w.letters() {
                let v = values.get(l as usize).ok_or(Error::LetterOutOfRange {
                    letter: l as usize,
                    count: values.len(),
                })?;
                term = self.mul(&term, v)?;
            }
            acc = acc.add(&term.scale(c)?)?;
        }
        Ok(acc)
    }

    /// Whether the unit and the declared generators generate the algebra
    /// (as an algebra over the ring).
    pub fn generated_by_declared(&self) -> bool {
        let mut space = RowSpace::new(self.ring, self.dim);
        let mut queue = vec![self.unit.clone()];
        space.insert(&self.unit.row());
        while let Some(v) = queue.pop() {
            for (_, x) in &self.generators {
                let w = self.mul(&v, x).expect("validated element");
                if !w.is_zero() && space.insert(&w.row()) {
                    queue.push(w);
                }
            }
        }
        (0..self.dim).all(|i| space.contains(&self.basis(i).row()))
    }
}

/// `e_i * e_j` for `fd` style callers.
pub fn fd_mul(a: &StructureAlgebra, p: &Element, q: &Element) -> Result<Element> {
    a.mul(p, q)
}

/// `p*q - q*p`.
pub fn fd_commutator(a: &StructureAlgebra, p: &Element, q: &Element) -> Result<Element> {
    a.commutator(p, q)
}
