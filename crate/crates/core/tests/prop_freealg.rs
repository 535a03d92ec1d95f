mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn commutator_is_anticommutative(t in poly_triple()) {
        anticommutativity(t)?;
    }

    #[test]
    fn jacobi_and_derivation_rule(t in poly_triple()) {
        jacobi(t)?;
    }

    #[test]
    fn homogeneous_parts_partition_the_terms(t in poly_triple()) {
        partition(t)?;
    }
}
