use super::algebra::{Element, StructureAlgebra};
use crate::coeff::RingSpec;
use crate::linexact::RowSpace;

/// A subspace (a lattice over the integer rings) of a finite-dimensional
/// algebra, kept with the elements that generated it.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    ring: RingSpec,
    dim: usize,
    space: RowSpace,
    generators: Vec<Element>,
}

impl SubspaceBasis {
    pub fn new(ring: RingSpec, dim: usize) -> Self {
        SubspaceBasis {
            ring,
            dim,
            space: RowSpace::new(ring, dim),
            generators: Vec::new(),
        }
    }

    /// Adds `v`; true when the span changed.
    pub fn insert(&mut self, v: &Element) -> bool {
        if v.is_zero() || !self.space.insert(&v.row()) {
            return false;
        }
        self.generators.push(v.clone());
        true
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.space.contains(&v.row())
    }

    /// The inserted elements that changed the span, in insertion order.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Independent basis: echelon rows over fields, Hermite rows over the
    /// integer rings.
    pub fn basis(&self) -> Vec<Element> {
        self.space
            .basis()
            .into_iter()
            .map(|r| {
                let mut coords = vec![self.ring.zero(); self.dim];
                for (k, x) in r {
                    coords[k as usize] = self.ring.from_bigint(&x);
                }
                Element::from_coords(self.ring, coords).expect("ring scalars")
            })
            .collect()
    }

    pub fn same_as(&self, other: &SubspaceBasis) -> bool {
        self.space.same_span(&other.space)
    }
}

/// Two-sided ideal generated by `gens`: closes the span under left and right
/// multiplication by basis elements.
pub fn ideal_from_gens_findim(a: &StructureAlgebra, gens: &[Element]) -> crate::Result<SubspaceBasis> {
    let mut sub = SubspaceBasis::new(a.ring(), a.dim());
    let basis: Vec<Element> = (0..a.dim()).map(|i| a.basis(i)).collect();
    let mut queue = Vec::new();
    for g in gens {
        if sub.insert(g) {
            queue.push(g.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for e in &basis {
            for w in [a.mul(e, &v)?, a.mul(&v, e)?] {
                if sub.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    Ok(sub)
}
