mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rendered_expressions_reparse(x in (field_like_ring(), expr_tree())) {
        render_parse_round_trip(x)?;
    }

    #[test]
    fn rendered_polys_reparse(p in any_ring().prop_flat_map(|r| poly_in(r, 5))) {
        poly_text_round_trip(p)?;
    }

    #[test]
    fn one_entry_brackets_are_rejected(e in expr_tree()) {
        one_entry_bracket_rejected(e)?;
    }
}
