mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn certificates_re_expand(inst in membership_instance()) {
        certificate_soundness(inst)?;
    }
}
