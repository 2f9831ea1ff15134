//! Positivity of line bundles on `Z_w` and `G x^B Z_w`, and Fano deciders.
//!
//! On both varieties a line bundle is globally generated exactly when it is
//! nef, and ample exactly when it is very ample. In the `O(1)`-basis these are
//! coordinatewise sign conditions on `m` (and on the character for the
//! twisted variety).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{self, GZLineBundle, ZLineBundle};
use crate::rootsys::{RootSystem, Weight};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub nef: bool,
    pub globally_generated: bool,
    pub ample: bool,
    pub very_ample: bool,
    /// Only known for anti-canonical classes, which are always big.
    pub big: Option<bool>,
}

impl PositivityReport {
    fn from_signs(nonnegative: bool, positive: bool) -> Self {
        PositivityReport {
            nef: nonnegative,
            globally_generated: nonnegative,
            ample: positive,
            very_ample: positive,
            big: None,
        }
    }

    /// The Fano verdict for a report on an anti-canonical class.
    pub fn fano_verdict(&self) -> FanoVerdict {
        if self.ample {
            FanoVerdict::Fano
        } else if self.nef {
            FanoVerdict::WeakFanoOnly
        } else {
            FanoVerdict::NotWeakFano
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FanoVerdict {
    Fano,
    WeakFanoOnly,
    NotWeakFano,
}

impl FanoVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            FanoVerdict::Fano => "Fano",
            FanoVerdict::WeakFanoOnly => "WeakFanoOnly",
            FanoVerdict::NotWeakFano => "NotWeakFano",
        }
    }

    pub fn is_weak_fano(self) -> bool {
        self != FanoVerdict::NotWeakFano
    }
}

impl fmt::Display for FanoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first coordinate responsible for a negative (or not strictly positive) answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `n_j` of the anti-canonical class (1-based `j`).
    Coefficient { index: usize, value: i64 },
    /// Coordinate `i` of the character `2 rho + mu` (1-based `i`).
    CharacterCoordinate { index: usize, value: i64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Coefficient { index, value } => write!(f, "j={index}, n_{index}={value}"),
            Witness::CharacterCoordinate { index, value } => {
                write!(f, "character coordinate {index} = {value}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FanoStatus {
    pub verdict: FanoVerdict,
    pub witness: Option<Witness>,
}

impl FanoStatus {
    const FANO: FanoStatus = FanoStatus {
        verdict: FanoVerdict::Fano,
        witness: None,
    };
}

pub fn classify_z_bundle(
    rs: &RootSystem,
    word: &Word,
    bundle: &ZLineBundle,
) -> Result<PositivityReport> {
    rs.check_word(word)?;
    check_len(word.len(), bundle.m.len())?;
    Ok(PositivityReport::from_signs(
        bundle.m.iter().all(|&x| x >= 0),
        bundle.m.iter().all(|&x| x > 0),
    ))
}

pub fn classify_gz_bundle(
    rs: &RootSystem,
    word: &Word,
    bundle: &GZLineBundle,
) -> Result<PositivityReport> {
    rs.check_word(word)?;
    check_len(word.len(), bundle.m.len())?;
    rs.check_weight(&bundle.lambda)?;
    Ok(PositivityReport::from_signs(
        bundle.m.iter().all(|&x| x >= 0) && bundle.lambda.is_dominant(),
        bundle.m.iter().all(|&x| x > 0) && bundle.lambda.is_regular_dominant(),
    ))
}

/// Positivity of the anti-canonical bundle of `Z_w`.
pub fn anticanonical_report_z(rs: &RootSystem, word: &Word) -> Result<PositivityReport> {
    let class = picard::anticanonical_z(rs, word)?;
    let report = classify_z_bundle(rs, word, &class)?;
    Ok(PositivityReport {
        big: Some(true),
        ..report
    })
}

/// Positivity of the anti-canonical bundle of `G x^B Z_w`.
pub fn anticanonical_report_gz(rs: &RootSystem, word: &Word) -> Result<PositivityReport> {
    let class = picard::anticanonical_gz(rs, word)?;
    let report = classify_gz_bundle(rs, word, &class)?;
    Ok(PositivityReport {
        big: Some(true),
        ..report
    })
}

/// `Z_w` is Fano (weak-Fano) iff `n_j > 0` (`n_j >= 0`) for `1 <= j < r`. The
/// empty word, a point, is reported as Fano.
pub fn fano_status_z(rs: &RootSystem, word: &Word) -> Result<FanoStatus> {
    let class = picard::anticanonical_z(rs, word)?;
    Ok(z_status_from_class(&class.m))
}

/// `G x^B Z_w` is Fano (weak-Fano) iff `n_j > 0` (`n_j >= 0`) for `1 <= j < r`
/// and `2 rho + mu` is regular dominant (dominant).
pub fn fano_status_gz(rs: &RootSystem, word: &Word) -> Result<FanoStatus> {
    let class = picard::anticanonical_gz(rs, word)?;
    Ok(gz_status_from_class(&class.m, &class.lambda))
}

/// Decides the `Z_w` criterion from the column sums `n`. Only `n_1..n_{r-1}`
/// are inspected; `n_r = 2` always.
pub fn z_status_from_class(n: &[i64]) -> FanoStatus {
    let inner = &n[..n.len().saturating_sub(1)];
    let coefficient = |j: usize| Witness::Coefficient {
        index: j + 1,
        value: inner[j],
    };
    if let Some(j) = inner.iter().position(|&x| x < 0) {
        return FanoStatus {
            verdict: FanoVerdict::NotWeakFano,
            witness: Some(coefficient(j)),
        };
    }
    match inner.iter().position(|&x| x == 0) {
        Some(j) => FanoStatus {
            verdict: FanoVerdict::WeakFanoOnly,
            witness: Some(coefficient(j)),
        },
        None => FanoStatus::FANO,
    }
}

/// Decides the `G x^B Z_w` criterion from `n` and the character `2 rho + mu`.
pub fn gz_status_from_class(n: &[i64], character: &Weight) -> FanoStatus {
    let z = z_status_from_class(n);
    if z.verdict == FanoVerdict::NotWeakFano {
        return z;
    }
    let coord = |i: usize| Witness::CharacterCoordinate {
        index: i + 1,
        value: character.coords()[i],
    };
    if let Some(i) = character.coords().iter().position(|&x| x < 0) {
        return FanoStatus {
            verdict: FanoVerdict::NotWeakFano,
            witness: Some(coord(i)),
        };
    }
    if z.verdict == FanoVerdict::WeakFanoOnly {
        return z;
    }
    match character.coords().iter().position(|&x| x == 0) {
        Some(i) => FanoStatus {
            verdict: FanoVerdict::WeakFanoOnly,
            witness: Some(coord(i)),
        },
        None => FanoStatus::FANO,
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}
