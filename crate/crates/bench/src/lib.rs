//! Shared inputs for the benchmarks.

use mahonian_core::{Multiset, Word};

/// Content `{1^k, 2^k, ..., m^k}`.
pub fn balanced(m: usize, k: usize) -> Multiset {
    Multiset::new(vec![k; m])
}

/// All words of the given content, collected.
pub fn all_words(m: &Multiset) -> Vec<Word> {
    mahonian_core::words::enumerate_words(m).collect()
}
