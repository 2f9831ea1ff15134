//! Shared inputs for the criterion benches.

use bsdh_core::{RootSystem, Word};

/// A deterministic non-reduced word of the given length over all letters of `rs`.
pub fn cyclic_word(rs: &RootSystem, len: usize) -> Word {
    let n = rs.rank();
    Word::new((0..len).map(|k| 1 + (k * 7 + k / n) % n).collect()).expect("letters are positive")
}

pub fn root_system(spec: &str) -> RootSystem {
    spec.parse().expect("valid root system")
}
