//! Slow reference implementations used to cross-check the fast paths.
//!
//! Only compiled for tests or with the `oracle` feature.

use crate::error::{Error, Result};
use crate::picard::ResidualExpansion;
use crate::rootsys::{RootSystem, Weight};
use crate::word::Word;

/// `<mu, alpha_k^vee>` computed as `sum_i mu_i <varpi_i, alpha_k^vee>` with the
/// pairing of each fundamental weight evaluated explicitly.
fn pair_with_coroot(rs: &RootSystem, mu: &Weight, k: usize) -> Result<i64> {
    let mut total = 0i64;
    for i in 1..=rs.rank() {
        let varpi = rs.fundamental_weight(i)?;
        let delta = varpi.coords()[k - 1];
        total = mu[i]
            .checked_mul(delta)
            .and_then(|x| total.checked_add(x))
            .ok_or(Error::Overflow("pairing in the oracle"))?;
    }
    Ok(total)
}

/// Expands `lambda` along `word` by rebuilding `lambda - sum_{l>k} m_l varpi_{i_l}`
/// as a full weight before every pairing.
pub fn expand_character_symbolic(
    rs: &RootSystem,
    word: &Word,
    lambda: &Weight,
) -> Result<ResidualExpansion> {
    rs.check_word(word)?;
    rs.check_weight(lambda)?;
    let letters = word.letters();
    let r = letters.len();
    let mut m = vec![0i64; r];
    for k in (0..r).rev() {
        let mut partial = lambda.clone();
        for l in k + 1..r {
            let term = rs.fundamental_weight(letters[l])?.checked_scale(m[l])?;
            partial = partial.checked_sub(&term)?;
        }
        m[k] = pair_with_coroot(rs, &partial, letters[k])?;
    }
    let mut residual = lambda.clone();
    for (l, &a) in letters.iter().enumerate() {
        residual = residual.checked_sub(&rs.fundamental_weight(a)?.checked_scale(m[l])?)?;
    }
    Ok(ResidualExpansion { m, residual })
}

/// Length of the permutation `s_{i_1} ... s_{i_r}` in `S_{n+1}`, where `s_i`
/// swaps `i` and `i + 1`, counted as inversions.
pub fn permutation_length(rs: &RootSystem, word: &Word) -> Result<usize> {
    if !rs.is_type_a() {
        return Err(Error::NotTypeA(rs.to_string()));
    }
    rs.check_word(word)?;
    let size = rs.rank() + 1;
    let mut perm: Vec<usize> = (0..size).collect();
    for &a in word.letters() {
        perm.swap(a - 1, a);
    }
    let mut inversions = 0;
    for i in 0..size {
        for j in i + 1..size {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    Ok(inversions)
}
