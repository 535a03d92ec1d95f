//! Finite-dimensional algebras given by structure constants: the finite
//! Lie-nilpotency criterion, a brute-force oracle, and `T^(n)(A)` as a
//! subspace.

mod algebra;
mod examples;
mod nilpotency;
mod subspace;

pub use algebra::{fd_commutator, fd_mul, Element, StructureAlgebra};
pub use examples::{
    commutative_series, example_algebra, grassmann, heisenberg_truncated, unitriangular_plus_unit, upper_triangular,
    EXAMPLE_NAMES,
};
pub use nilpotency::{
    lie_nilpotency_oracle, sn_values, tideal_findim, verify_via_theorem, verify_via_theorem_forced, witness_json,
    BracketWitness, Nilpotency, TheoremCheck, TheoremVerdict,
};
pub use subspace::{ideal_from_gens_findim, SubspaceBasis};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingSpec;
    use crate::error::Error;

    const Q: RingSpec = RingSpec::Rationals;

    fn named(a: &StructureAlgebra, name: &str) -> Element {
        let i = a.basis_names().iter().position(|n| n == name).unwrap();
        a.basis(i)
    }

    #[test]
    fn heisenberg_products() {
        let h = heisenberg_truncated(2, Q).unwrap();
        assert_eq!(h.dim(), 7);
        let (a, b) = (named(&h, "a"), named(&h, "b"));
        assert_eq!(fd_commutator(&h, &a, &b).unwrap(), named(&h, "c"));
        assert_eq!(fd_mul(&h, h.unit(), &a).unwrap(), a);
        let h = heisenberg_truncated(5, Q).unwrap();
        assert_eq!(h.dim(), 34);
        let (a, b) = (named(&h, "a"), named(&h, "b"));
        let ab = h.mul(&a, &b).unwrap();
        let ac = named(&h, "ac");
        assert_eq!(h.commutator(&a, &ab).unwrap(), ac);
        let aab = h.commutator(&h.commutator(&a, &ab).unwrap(), &ab).unwrap();
        assert_eq!(aab, named(&h, "ac^2"));
        let b2 = h.mul(&b, &b).unwrap();
        let x = h.commutator(&h.commutator(&a, &b2).unwrap(), &a).unwrap();
        assert_eq!(x, named(&h, "c^2").scale(&Q.from_int(-2)).unwrap());
        // cap 4 truncates a*c^2
        let h4 = heisenberg_truncated(4, Q).unwrap();
        let (a, b) = (named(&h4, "a"), named(&h4, "b"));
        let ab = h4.mul(&a, &b).unwrap();
        assert!(h4.commutator(&h4.commutator(&a, &ab).unwrap(), &ab).unwrap().is_zero());
    }

    #[test]
    fn grassmann_products() {
        let g = grassmann(2, Q).unwrap();
        assert_eq!(g.dim(), 4);
        let c = fd_commutator(&g, &named(&g, "e1"), &named(&g, "e2")).unwrap();
        assert_eq!(c, named(&g, "e1e2").scale(&Q.from_int(2)).unwrap());
        assert_eq!(grassmann(4, Q).unwrap().dim(), 16);
    }

    #[test]
    fn small_examples() {
        assert_eq!(unitriangular_plus_unit(3, Q).unwrap().dim(), 4);
        assert_eq!(commutative_series(3, Q).unwrap().dim(), 3);
        let t = commutative_series(3, Q).unwrap();
        assert!(fd_commutator(&t, &t.basis(1), &t.basis(2)).unwrap().is_zero());
        assert!(example_algebra("grassmann(3)", Q).is_ok());
        assert!(example_algebra("grassmann(0)", Q).is_err());
        assert!(example_algebra("nonsense(3)", Q).is_err());
        assert!(example_algebra("grassmann 3", Q).is_err());
    }

    #[test]
    fn validation_errors() {
        let one = Q.one();
        let a = StructureAlgebra::new(Q, 1, vec![(0, 0, 0, one.clone())], vec![one.clone()], vec![]);
        assert!(a.is_ok());
        let a = StructureAlgebra::new(Q, 1, vec![(0, 0, 0, one.clone())], vec![Q.zero()], vec![]);
        assert!(matches!(a, Err(Error::UnitAxiom(_))));
        let a = StructureAlgebra::new(Q, 1, vec![(0, 0, 1, one.clone())], vec![one.clone()], vec![]);
        assert!(matches!(a, Err(Error::Schema(_))));
        // e1*e1 = e1 + e0 with unit e0 is not associative? it is; use a
        // non-associative table instead: e1*e1 = e0 and e1*e2 = e2, e2*e1 = 0
        let sc = vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (2, 0, 2, one.clone()),
            (1, 1, 2, one.clone()),
            (1, 2, 0, one.clone()),
        ];
        let unit = vec![one.clone(), Q.zero(), Q.zero()];
        assert!(matches!(
            StructureAlgebra::new(Q, 3, sc, unit, vec![]),
            Err(Error::Associativity(..))
        ));
    }

    #[test]
    fn criterion_examples() {
        let t = commutative_series(3, Q).unwrap();
        let r = verify_via_theorem(&t, 2).unwrap();
        assert_eq!(r.nilpotency(), Some(&Nilpotency::LieNilpotent));
        let g = grassmann(3, Q).unwrap();
        assert!(verify_via_theorem(&g, 3).unwrap().nilpotency().unwrap().is_nilpotent());
        assert!(lie_nilpotency_oracle(&g, 3).unwrap().is_nilpotent());
        assert!(!lie_nilpotency_oracle(&g, 2).unwrap().is_nilpotent());
        let h = heisenberg_truncated(4, Q).unwrap();
        match verify_via_theorem(&h, 3).unwrap().verdict {
            TheoremVerdict::Decided(Nilpotency::NotLieNilpotent(w)) => {
                assert_eq!(w.render(&h), "[a,a*b,b] = c^2");
            }
            other => panic!("{other:?}"),
        }
        assert!(!lie_nilpotency_oracle(&h, 3).unwrap().is_nilpotent());
        let z = heisenberg_truncated(4, RingSpec::Integers).unwrap();
        assert!(matches!(
            verify_via_theorem(&z, 3).unwrap().verdict,
            TheoremVerdict::Refused(_)
        ));
        let forced = verify_via_theorem_forced(&z, 3).unwrap();
        assert!(forced.condition_only);
        assert!(forced.nilpotency().is_some());
    }

    #[test]
    fn oracle_examples() {
        let one = commutative_series(1, Q).unwrap();
        assert!(lie_nilpotency_oracle(&one, 2).unwrap().is_nilpotent());
        let ut = upper_triangular(2, Q).unwrap();
        for n in 2..7 {
            assert!(!lie_nilpotency_oracle(&ut, n).unwrap().is_nilpotent());
        }
        let u3 = unitriangular_plus_unit(3, Q).unwrap();
        assert!(lie_nilpotency_oracle(&u3, 4).unwrap().is_nilpotent());
    }

    #[test]
    fn ideal_examples() {
        let t = commutative_series(3, Q).unwrap();
        assert!(tideal_findim(&t, 2).unwrap().is_zero());
        let g = grassmann(3, Q).unwrap();
        assert!(tideal_findim(&g, 3).unwrap().is_zero());
        // with deg c = 2 every nonzero 3-fold bracket has degree >= 4
        let h = heisenberg_truncated(3, Q).unwrap();
        assert!(tideal_findim(&h, 3).unwrap().is_zero());
        assert!(tideal_findim(&h, 2).unwrap().contains(&named(&h, "ac")));
        let h = heisenberg_truncated(4, Q).unwrap();
        let t3 = tideal_findim(&h, 3).unwrap();
        assert!(t3.contains(&named(&h, "c^2")));
        assert!(!t3.contains(&named(&h, "ac")));
        assert_eq!(ideal_from_gens_findim(&h, &[h.unit().clone()]).unwrap().rank(), h.dim());
        assert!(ideal_from_gens_findim(&h, &[]).unwrap().is_zero());
        let s3 = ideal_from_gens_findim(&h, &sn_values(&h, 3).unwrap()).unwrap();
        assert!(s3.same_as(&t3));
    }

    #[test]
    fn undeclared_generation_is_refused() {
        let one = Q.one();
        let sc = vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone())];
        let a = StructureAlgebra::new(Q, 2, sc, vec![one.clone(), Q.zero()], vec![]).unwrap();
        assert!(matches!(
            verify_via_theorem(&a, 2).unwrap().verdict,
            TheoremVerdict::Refused(_)
        ));
    }
}
