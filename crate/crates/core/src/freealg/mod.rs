//! The free unital associative algebra `R<X>`.

mod identities;
mod poly;
mod word;

pub use identities::{
    commutator_words, identity_instance, identity_suite_rings, random_word, rewrite_as_right_letter_commutators,
    right_letter_decomposition, run_identity_suite, standard_identity_table, IdentityFamily, IdentityName,
    IdentityTally, RightLetterCommutator,
};
pub use poly::{left_normed_commutator, word_commutator_terms, Poly};
pub use word::{default_names, generator_name, nonunit_words_within, words_of_multidegree, MultiDegree, Word};
