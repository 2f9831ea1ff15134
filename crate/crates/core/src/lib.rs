//! Exact integer computations on Bott-Samelson-Demazure-Hansen varieties.
//!
//! For a semisimple root system and a word `w = (i_1, ..., i_r)` in the simple
//! reflections this crate computes
//!
//! * expansions of characters in the `O(1)`-basis of `Pic(Z_w)` and
//!   `Pic(G x^B Z_w)` ([`picard`]),
//! * anti-canonical classes of both varieties,
//! * nef / globally generated / ample / very ample tests and Fano, weak-Fano
//!   verdicts ([`classify`]),
//! * censuses over all words up to a length bound ([`census`]).
//!
//! ```
//! use bsdh_core::{fano_status_gz, FanoVerdict, RootSystem, Word};
//!
//! let g2: RootSystem = "G2".parse().unwrap();
//! let w: Word = "2".parse().unwrap();
//! assert_eq!(fano_status_gz(&g2, &w).unwrap().verdict, FanoVerdict::NotWeakFano);
//! ```

pub mod census;
pub mod classify;
pub mod emit;
pub mod error;
pub mod picard;
pub mod rootsys;
pub mod word;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use census::{run_census, run_census_parallel, CensusError, CensusRow, CensusSummary, RowSink};
pub use classify::{
    classify_gz_bundle, classify_z_bundle, fano_status_gz, fano_status_z, FanoStatus, FanoVerdict,
    PositivityReport, Witness,
};
pub use error::{Error, Result};
pub use picard::{
    anticanonical_gz, anticanonical_z, expand_character, m_table_alpha, GZLineBundle, MTable,
    ResidualExpansion, ZLineBundle,
};
pub use rootsys::{CartanPairing, Family, RootInSimpleBasis, RootSystem, RootSystemSpec, Weight};
pub use word::{enumerate_words, parse_word, Word};
