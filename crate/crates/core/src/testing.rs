//! Proptest strategies shared by the unit tests.

use std::sync::{Arc, OnceLock};

use proptest::collection::vec;
use proptest::prelude::*;

use crate::freealg::{Alphabet, FreePoly, Word};

pub fn xy() -> Arc<Alphabet> {
    static XY: OnceLock<Arc<Alphabet>> = OnceLock::new();
    Arc::clone(XY.get_or_init(Alphabet::xy))
}

pub fn word(max_degree: usize) -> impl Strategy<Value = Word> {
    vec(0u16..2, 0..=max_degree).prop_map(Word::from_letters)
}

/// Up to `terms` terms of degree at most `degree` over `{X, Y}`.
pub fn poly(terms: usize, degree: usize) -> impl Strategy<Value = FreePoly> {
    vec((word(degree), -3i64..=3), 0..=terms).prop_map(|ts| FreePoly::from_terms(&xy(), ts))
}

/// At most 6 terms of degree at most 4.
pub fn small_poly() -> impl Strategy<Value = FreePoly> {
    poly(6, 4)
}
