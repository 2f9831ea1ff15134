//! Root-system data for the finite simple types and weight-lattice arithmetic.
//!
//! Simple roots are numbered as in Bourbaki's tables. All weights are written
//! in the basis of fundamental weights, so the `i`-th coordinate of a weight
//! is its pairing with the `i`-th simple coroot. Indices are 1-based at every
//! public entry point.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            other => return Err(Error::UnknownFamily(other)),
        })
    }

    /// Whether a simple root system of this family with the given rank exists.
    /// C2 is accepted alongside B2; D2 and D3 are not.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

/// A simple root system, identified by family and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid simple type of rank at most `max_rank`, ordered by family then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<RootSystemSpec> {
        Family::ALL
            .iter()
            .flat_map(|&family| {
                (1..=max_rank).filter_map(move |rank| RootSystemSpec::new(family, rank).ok())
            })
            .collect()
    }

    /// Cartan pairing of this simple type.
    pub fn cartan_pairing(&self) -> CartanPairing {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        // `bond(short, long, mult)` records <alpha_long, alpha_short^vee> = -mult and
        // <alpha_short, alpha_long^vee> = -1. Nodes are 1-based.
        let mut bond = |short: usize, long: usize, mult: i64| {
            c[short - 1][long - 1] = -mult;
            c[long - 1][short - 1] = -1;
        };
        match self.family {
            Family::A => {
                for i in 1..n {
                    bond(i, i + 1, 1);
                }
            }
            Family::B => {
                for i in 1..n - 1 {
                    bond(i, i + 1, 1);
                }
                bond(n, n - 1, 2);
            }
            Family::C => {
                for i in 1..n - 1 {
                    bond(i, i + 1, 1);
                }
                bond(n - 1, n, 2);
            }
            Family::D => {
                for i in 1..n - 1 {
                    bond(i, i + 1, 1);
                }
                bond(n - 2, n, 1);
            }
            Family::E => {
                bond(1, 3, 1);
                bond(2, 4, 1);
                for i in 3..n {
                    bond(i, i + 1, 1);
                }
            }
            Family::F => {
                bond(1, 2, 1);
                bond(3, 2, 2);
                bond(3, 4, 1);
            }
            Family::G => bond(1, 2, 3),
        }
        CartanPairing { c }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::SpecSyntax(s.to_owned()))?;
        let family = Family::from_letter(family)?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::SpecSyntax(s.to_owned()))?;
        RootSystemSpec::new(family, rank)
    }
}

/// The table `c[k][j] = <alpha_j, alpha_k^vee>` (0-based storage).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanPairing {
    c: Vec<Vec<i64>>,
}

impl CartanPairing {
    pub fn rank(&self) -> usize {
        self.c.len()
    }

    /// `<alpha_j, alpha_k^vee>` for 1-based `k`, `j`.
    pub fn pairing(&self, k: usize, j: usize) -> i64 {
        self.c[k - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.c
    }

    /// Checks the defining sign and product conditions of a Cartan matrix.
    pub fn satisfies_invariants(&self) -> bool {
        let n = self.rank();
        (0..n).all(|j| {
            self.c[j].len() == n
                && self.c[j][j] == 2
                && (0..n).filter(|&k| k != j).all(|k| {
                    let (a, b) = (self.c[k][j], self.c[j][k]);
                    a <= 0 && ((a == 0) == (b == 0)) && (0..=3).contains(&(a * b))
                })
        })
    }

    fn block_diagonal(blocks: &[CartanPairing]) -> CartanPairing {
        let n: usize = blocks.iter().map(CartanPairing::rank).sum();
        let mut c = vec![vec![0; n]; n];
        let mut offset = 0;
        for block in blocks {
            for (k, row) in block.c.iter().enumerate() {
                c[offset + k][offset..offset + row.len()].copy_from_slice(row);
            }
            offset += block.rank();
        }
        CartanPairing { c }
    }
}

/// A character of the maximal torus in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| error::add(a, b, "adding weights"))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| error::sub(a, b, "subtracting weights"))
    }

    pub fn checked_scale(&self, k: i64) -> Result<Weight> {
        self.0
            .iter()
            .map(|&a| error::mul(a, k, "scaling a weight"))
            .collect::<Result<_>>()
            .map(Weight)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> Result<i64>) -> Result<Weight> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| f(a, b))
            .collect::<Result<_>>()
            .map(Weight)
    }
}

impl Index<usize> for Weight {
    type Output = i64;

    /// 1-based coordinate access.
    fn index(&self, i: usize) -> &i64 {
        &self.0[i - 1]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInSimpleBasis(Vec<i64>);

impl RootInSimpleBasis {
    pub fn simple(n: usize, j: usize) -> Self {
        let mut coords = vec![0; n];
        coords[j - 1] = 1;
        RootInSimpleBasis(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&x| x <= 0) && self.0.iter().any(|&x| x < 0)
    }
}

/// A semisimple root system: a product of simple types with a block-diagonal
/// Cartan pairing. Simple roots of later factors are numbered after those of
/// earlier ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<RootSystemSpec>,
    cartan: CartanPairing,
}

impl RootSystem {
    pub fn simple(spec: RootSystemSpec) -> Self {
        Self::product(vec![spec])
    }

    pub fn product(components: Vec<RootSystemSpec>) -> Self {
        let blocks: Vec<_> = components
            .iter()
            .map(RootSystemSpec::cartan_pairing)
            .collect();
        let cartan = CartanPairing::block_diagonal(&blocks);
        RootSystem { components, cartan }
    }

    pub fn components(&self) -> &[RootSystemSpec] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanPairing {
        &self.cartan
    }

    pub fn is_type_a(&self) -> bool {
        self.components.len() == 1 && self.components[0].family == Family::A
    }

    pub fn is_simply_laced(&self) -> bool {
        self.components.iter().all(|s| s.family.is_simply_laced())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: lambda.len(),
            });
        }
        Ok(())
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        let rank = self.rank();
        match word.letters().iter().position(|&a| a == 0 || a > rank) {
            Some(p) => Err(Error::LetterOutOfRange {
                position: p + 1,
                letter: word.letters()[p],
                rank,
            }),
            None => Ok(()),
        }
    }

    /// The simple root `alpha_j` in fundamental-weight coordinates: column `j`
    /// of the Cartan pairing.
    pub fn simple_root(&self, j: usize) -> Result<Weight> {
        self.check_index(j)?;
        Ok(Weight(self.cartan.c.iter().map(|row| row[j - 1]).collect()))
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut coords = vec![0; self.rank()];
        coords[i - 1] = 1;
        Ok(Weight(coords))
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn two_rho(&self) -> Weight {
        Weight(vec![2; self.rank()])
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn reflect_weight(&self, lambda: &Weight, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        let p = lambda[i];
        lambda
            .0
            .iter()
            .zip(&self.cartan.c)
            .map(|(&x, row)| {
                error::mul(p, row[i - 1], "reflecting a weight")
                    .and_then(|d| error::sub(x, d, "reflecting a weight"))
            })
            .collect::<Result<_>>()
            .map(Weight)
    }

    /// `s_i(beta)` in simple-root coordinates.
    pub fn reflect_root(&self, beta: &RootInSimpleBasis, i: usize) -> Result<RootInSimpleBasis> {
        self.check_index(i)?;
        let mut p = 0i64;
        for (&b, &c) in beta.0.iter().zip(&self.cartan.c[i - 1]) {
            p = error::add(
                p,
                error::mul(b, c, "reflecting a root")?,
                "reflecting a root",
            )?;
        }
        let mut out = beta.0.clone();
        out[i - 1] = error::sub(out[i - 1], p, "reflecting a root")?;
        Ok(RootInSimpleBasis(out))
    }

    /// A word `(i_1, ..., i_r)` is reduced iff `s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`
    /// is a positive root for every `k`.
    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        self.check_word(word)?;
        let n = self.rank();
        let letters = word.letters();
        for (k, &a) in letters.iter().enumerate() {
            let mut beta = RootInSimpleBasis::simple(n, a);
            for &b in letters[..k].iter().rev() {
                beta = self.reflect_root(&beta, b)?;
            }
            debug_assert!(beta.is_positive() || beta.is_negative());
            if !beta.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl From<RootSystemSpec> for RootSystem {
    fn from(spec: RootSystemSpec) -> Self {
        RootSystem::simple(spec)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses `"A2"`, `"G2"`, or a product such as `"A1xB3"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::SpecSyntax(s.to_owned()));
        }
        let components = trimmed
            .split(['x', 'X', '*'])
            .map(str::parse)
            .collect::<Result<Vec<RootSystemSpec>>>()?;
        Ok(RootSystem::product(components))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn small_cartan_tables() {
        assert_eq!(rs("A1").cartan().rows(), &[vec![2]]);
        assert_eq!(rs("A2").cartan().rows(), &[vec![2, -1], vec![-1, 2]]);
        let g2 = rs("G2");
        assert_eq!(g2.cartan().pairing(1, 2), -3);
        assert_eq!(g2.cartan().pairing(2, 1), -1);
    }

    #[test]
    fn bourbaki_double_bonds() {
        // B3: alpha_3 short, so <alpha_2, alpha_3^vee> = -2.
        let b3 = rs("B3").cartan().clone();
        assert_eq!((b3.pairing(3, 2), b3.pairing(2, 3)), (-2, -1));
        // C3: alpha_3 long, so <alpha_3, alpha_2^vee> = -2.
        let c3 = rs("C3").cartan().clone();
        assert_eq!((c3.pairing(2, 3), c3.pairing(3, 2)), (-2, -1));
        let f4 = rs("F4").cartan().clone();
        assert_eq!((f4.pairing(3, 2), f4.pairing(2, 3)), (-2, -1));
        assert_eq!(f4.pairing(1, 3), 0);
    }

    #[test]
    fn branch_nodes() {
        let d5 = rs("D5").cartan().clone();
        assert_eq!(d5.pairing(3, 4), -1);
        assert_eq!(d5.pairing(3, 5), -1);
        assert_eq!(d5.pairing(4, 5), 0);
        let e6 = rs("E6").cartan().clone();
        assert_eq!(e6.pairing(4, 2), -1);
        assert_eq!(e6.pairing(1, 3), -1);
        assert_eq!(e6.pairing(2, 3), 0);
        let neighbours = |k: usize| (1..=6).filter(|&j| j != k && e6.pairing(k, j) != 0).count();
        assert_eq!(neighbours(4), 3);
    }

    #[test]
    fn invariants_for_every_type() {
        for spec in RootSystemSpec::all_up_to_rank(9) {
            let c = spec.cartan_pairing();
            assert!(c.satisfies_invariants(), "{spec}");
            // A connected Dynkin diagram is a tree: rank - 1 edges.
            let edges = (0..spec.rank())
                .flat_map(|k| (0..k).map(move |j| (k, j)))
                .filter(|&(k, j)| c.rows()[k][j] != 0)
                .count();
            assert_eq!(edges, spec.rank() - 1, "{spec}");
        }
    }

    #[test]
    fn rank_constraints() {
        for bad in [
            "D3", "E5", "E9", "F3", "G3", "B1", "C1", "A0", "H3", "A", "", "A-1",
        ] {
            assert!(bad.parse::<RootSystemSpec>().is_err(), "{bad}");
        }
        for good in ["A1", "B2", "C2", "D4", "E6", "E8", "F4", "G2", "a3"] {
            assert!(good.parse::<RootSystemSpec>().is_ok(), "{good}");
        }
    }

    #[test]
    fn products_are_block_diagonal() {
        let p = rs("A1xG2");
        assert_eq!(p.rank(), 3);
        assert_eq!(p.to_string(), "A1xG2");
        assert_eq!(p.cartan().pairing(2, 3), -3);
        assert_eq!(p.cartan().pairing(1, 2), 0);
        assert!(p.cartan().satisfies_invariants());
    }

    #[test]
    fn simple_roots_read_cartan_columns() {
        assert_eq!(rs("A2").simple_root(1).unwrap(), w(&[2, -1]));
        assert_eq!(rs("G2").simple_root(2).unwrap(), w(&[-3, 2]));
        assert_eq!(rs("A1").simple_root(1).unwrap(), w(&[2]));
        assert!(rs("A2").simple_root(3).is_err());
        assert!(rs("A2").simple_root(0).is_err());
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::from(spec);
            for j in 1..=r.rank() {
                assert_eq!(r.simple_root(j).unwrap()[j], 2);
            }
        }
    }

    #[test]
    fn rho_and_dominance() {
        assert_eq!(rs("A2").rho(), w(&[1, 1]));
        assert_eq!(rs("G2").rho(), w(&[1, 1]));
        assert_eq!(rs("A2").two_rho(), w(&[2, 2]));
        assert!(w(&[2, 1]).is_dominant() && w(&[2, 1]).is_regular_dominant());
        assert!(!w(&[-1, 2]).is_dominant());
        assert!(w(&[0, 0]).is_dominant() && !w(&[0, 0]).is_regular_dominant());
    }

    #[test]
    fn reflections() {
        let a2 = rs("A2");
        assert_eq!(a2.reflect_weight(&w(&[1, 0]), 1).unwrap(), w(&[-1, 1]));
        assert_eq!(a2.reflect_weight(&w(&[0, 5]), 1).unwrap(), w(&[0, 5]));
        assert_eq!(rs("A1").reflect_weight(&w(&[1]), 1).unwrap(), w(&[-1]));
        assert!(a2.reflect_weight(&w(&[1]), 1).is_err());
        assert!(a2
            .reflect_weight(&w(&[i64::MAX, 0]), 1)
            .unwrap_err()
            .is_overflow());
    }

    #[test]
    fn reducedness() {
        let a2 = rs("A2");
        let word = |v: &[usize]| Word::new(v.to_vec()).unwrap();
        assert!(a2.is_reduced(&word(&[1, 2, 1])).unwrap());
        assert!(a2.is_reduced(&word(&[2, 1, 2])).unwrap());
        assert!(!a2.is_reduced(&word(&[1, 2, 1, 2])).unwrap());
        assert!(!rs("A1").is_reduced(&word(&[1, 1])).unwrap());
        assert!(a2.is_reduced(&Word::empty()).unwrap());
        assert!(a2.is_reduced(&word(&[3])).is_err());
        // Longest elements: B2 has length 4, G2 has length 6.
        assert!(rs("B2").is_reduced(&word(&[1, 2, 1, 2])).unwrap());
        assert!(!rs("B2").is_reduced(&word(&[1, 2, 1, 2, 1])).unwrap());
        assert!(rs("G2").is_reduced(&word(&[1, 2, 1, 2, 1, 2])).unwrap());
        assert!(!rs("G2").is_reduced(&word(&[1, 2, 1, 2, 1, 2, 1])).unwrap());
    }
}
