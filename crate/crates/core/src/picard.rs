//! Line bundles on `Z_w` and `G x^B Z_w` in the `O(1)`-basis.
//!
//! A class on `Z_w` is a vector `(m_1, ..., m_r)` stored in word order: `m_j`
//! is the coefficient of the degree-one bundle pulled back from the tower at
//! level `j`, so `m_r` is the fibre degree of the last `P^1`-fibration. A class
//! on the twisted variety additionally carries a character `lambda` pulled back
//! from `G/B`.
//!
//! Expanding a character `lambda` along a word runs right to left:
//! `m_r = <lambda, alpha_{i_r}^vee>` and
//! `m_k = <lambda - sum_{l>k} m_l varpi_{i_l}, alpha_{i_k}^vee>`, which
//! leaves the residual `lambda - sum_l m_l varpi_{i_l}`.
//!
//! Some printed versions of the residual formula index the fundamental weight
//! by `i_j` instead of `i_l`; only the `i_l` form satisfies the reconstruction
//! identity `lambda = residual + sum_l m_l varpi_{i_l}`, and that is what is
//! implemented here.

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::word::Word;

/// `O_{Z_w}(m_1, ..., m_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZLineBundle {
    pub m: Vec<i64>,
}

impl ZLineBundle {
    pub fn new(m: Vec<i64>) -> Self {
        ZLineBundle { m }
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// `O_{Z_w}(lambda)`: the residual of the expansion lives on a point and is dropped.
    pub fn from_character(rs: &RootSystem, word: &Word, lambda: &Weight) -> Result<Self> {
        Ok(ZLineBundle::new(expand_character(rs, word, lambda)?.m))
    }

    pub fn tensor(&self, other: &ZLineBundle) -> Result<ZLineBundle> {
        add_vectors(&self.m, &other.m).map(ZLineBundle::new)
    }
}

/// `O_{G x^B Z_w}(m_1, ..., m_r) (x) pi^* L(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GZLineBundle {
    pub m: Vec<i64>,
    pub lambda: Weight,
}

impl GZLineBundle {
    pub fn new(m: Vec<i64>, lambda: Weight) -> Self {
        GZLineBundle { m, lambda }
    }

    /// The class of the bundle induced by the character `lambda`.
    pub fn from_character(rs: &RootSystem, word: &Word, lambda: &Weight) -> Result<Self> {
        let e = expand_character(rs, word, lambda)?;
        Ok(GZLineBundle::new(e.m, e.residual))
    }

    pub fn tensor(&self, other: &GZLineBundle) -> Result<GZLineBundle> {
        Ok(GZLineBundle::new(
            add_vectors(&self.m, &other.m)?,
            self.lambda.checked_add(&other.lambda)?,
        ))
    }
}

/// Coefficients of a character along a word plus what is left over on `G/B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualExpansion {
    pub m: Vec<i64>,
    pub residual: Weight,
}

impl ResidualExpansion {
    /// `residual + sum_l m_l varpi_{i_l}`.
    pub fn reconstruct(&self, rs: &RootSystem, word: &Word) -> Result<Weight> {
        let mut coords = self.residual.coords().to_vec();
        for (&a, &m) in word.letters().iter().zip(&self.m) {
            rs.check_index(a)?;
            coords[a - 1] = error::add(coords[a - 1], m, "reconstructing a character")?;
        }
        Ok(Weight::new(coords))
    }
}

/// Lower-triangular table `m_{jk}` (`1 <= k <= j <= r`). Row `j` expands
/// `alpha_{i_j}` along the prefix of length `j`; `residuals[j-1]` is what that
/// expansion leaves on `G/B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTable {
    rows: Vec<Vec<i64>>,
    residuals: Vec<Weight>,
}

impl MTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `j` (1-based), of length `j`.
    pub fn row(&self, j: usize) -> &[i64] {
        &self.rows[j - 1]
    }

    /// `m_{jk}` for `1 <= k <= j` (1-based).
    pub fn entry(&self, j: usize, k: usize) -> i64 {
        self.rows[j - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `lambda_j = alpha_{i_j} - sum_{l<=j} m_{jl} varpi_{i_l}`.
    pub fn residual(&self, j: usize) -> &Weight {
        &self.residuals[j - 1]
    }

    pub fn residuals(&self) -> &[Weight] {
        &self.residuals
    }

    /// `n_j = sum_{l >= j} m_{lj}`.
    pub fn column_sums(&self) -> Result<Vec<i64>> {
        let r = self.len();
        let mut n = vec![0i64; r];
        for row in &self.rows {
            for (acc, &x) in n.iter_mut().zip(row) {
                *acc = error::add(*acc, x, "summing m-table columns")?;
            }
        }
        Ok(n)
    }
}

/// Expands `lambda` along `letters`, writing coefficients into `m` (same
/// length as `letters`). `sums[i]` accumulates the coefficients attached to
/// letter `i + 1`; on return `lambda - sums` is the residual.
///
/// Pairing `varpi_{i_l}` with `alpha_{i_k}^vee` is a Kronecker delta, so each
/// step only needs the running sum for the current letter.
pub(crate) fn expand_into(
    letters: &[usize],
    lambda: &[i64],
    sums: &mut [i64],
    m: &mut [i64],
) -> Result<()> {
    sums.fill(0);
    for (k, &a) in letters.iter().enumerate().rev() {
        let coeff = error::sub(lambda[a - 1], sums[a - 1], "expanding a character")?;
        m[k] = coeff;
        sums[a - 1] = error::add(sums[a - 1], coeff, "expanding a character")?;
    }
    Ok(())
}

pub(crate) fn residual_from_sums(lambda: &[i64], sums: &[i64]) -> Result<Vec<i64>> {
    lambda
        .iter()
        .zip(sums)
        .map(|(&x, &s)| error::sub(x, s, "expanding a character"))
        .collect()
}

/// Writes `lambda` in the `O(1)`-basis along `word`.
pub fn expand_character(
    rs: &RootSystem,
    word: &Word,
    lambda: &Weight,
) -> Result<ResidualExpansion> {
    rs.check_word(word)?;
    rs.check_weight(lambda)?;
    let mut sums = vec![0; rs.rank()];
    let mut m = vec![0; word.len()];
    expand_into(word.letters(), lambda.coords(), &mut sums, &mut m)?;
    let residual = Weight::new(residual_from_sums(lambda.coords(), &sums)?);
    Ok(ResidualExpansion { m, residual })
}

/// The table of `m_{jk}` obtained by expanding each `alpha_{i_j}` over its prefix.
pub fn m_table_alpha(rs: &RootSystem, word: &Word) -> Result<MTable> {
    rs.check_word(word)?;
    let mut rows = Vec::with_capacity(word.len());
    let mut residuals = Vec::with_capacity(word.len());
    for j in 1..=word.len() {
        let prefix = word.prefix(j)?;
        let alpha = rs.simple_root(word.letters()[j - 1])?;
        let e = expand_character(rs, &prefix, &alpha)?;
        debug_assert_eq!(e.m[j - 1], 2);
        rows.push(e.m);
        residuals.push(e.residual);
    }
    Ok(MTable { rows, residuals })
}

/// The anti-canonical class of `Z_w`: `n_j = sum_{l >= j} m_{lj}`, with `n_r = 2`.
/// The empty word gives the empty class of a point.
pub fn anticanonical_z(rs: &RootSystem, word: &Word) -> Result<ZLineBundle> {
    let table = m_table_alpha(rs, word)?;
    Ok(ZLineBundle::new(table.column_sums()?))
}

/// The anti-canonical class of `G x^B Z_w`: the same `n` as for `Z_w` together
/// with the character `2 rho + sum_j lambda_j`. The empty word gives `L(2 rho)`
/// on `G/B`.
pub fn anticanonical_gz(rs: &RootSystem, word: &Word) -> Result<GZLineBundle> {
    let table = m_table_alpha(rs, word)?;
    let mut character = rs.two_rho();
    for lambda in table.residuals() {
        character = character.checked_add(lambda)?;
    }
    Ok(GZLineBundle::new(table.column_sums()?, character))
}

fn add_vectors(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| error::add(x, y, "tensoring line bundles"))
        .collect()
}
