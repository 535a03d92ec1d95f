mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn hermite_transform_checks_out(m in int_matrix()) {
        hermite_transform(m)?;
    }

    #[test]
    fn smith_transform_checks_out(m in int_matrix()) {
        smith_transform(m)?;
    }
}
