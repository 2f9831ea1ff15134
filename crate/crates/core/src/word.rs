//! Words in the simple reflections and their enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// A finite sequence `(i_1, ..., i_r)` of 1-based simple-reflection indices.
/// The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if let Some(p) = letters.iter().position(|&a| a == 0) {
            return Err(Error::WordSyntax {
                token: p + 1,
                reason: "letters must be positive".into(),
            });
        }
        Ok(Word(letters))
    }

    /// Builds a word and checks every letter against the rank of `rs`.
    pub fn for_root_system(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        let word = Word::new(letters)?;
        rs.check_word(&word)?;
        Ok(word)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w[j]`: drop the last `j` letters.
    pub fn truncate(&self, j: usize) -> Result<Word> {
        if j > self.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                min: 0,
                max: self.len(),
            });
        }
        Ok(Word(self.0[..self.len() - j].to_vec()))
    }

    /// `w(j)`: remove the `j`-th letter (1-based).
    pub fn omit(&self, j: usize) -> Result<Word> {
        if j == 0 || j > self.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                min: 1,
                max: self.len(),
            });
        }
        let mut letters = self.0.clone();
        letters.remove(j - 1);
        Ok(Word(letters))
    }

    /// The prefix `(i_1, ..., i_j)`.
    pub fn prefix(&self, j: usize) -> Result<Word> {
        if j > self.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                min: 0,
                max: self.len(),
            });
        }
        Ok(Word(self.0[..j].to_vec()))
    }

    /// Letters joined by `-`, as used in census rows.
    pub fn dashed(&self) -> String {
        self.join("-")
    }

    fn join(&self, sep: &str) -> String {
        self.0
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.join(","))
    }
}

/// Parses `"1,2,1"`, `"1 2 1"` or `"s1 s2 s1"`. Blank text is the empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    if text.trim().is_empty() {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    let mut token = 0;
    for piece in text.split(',') {
        let mut parts = piece.split_whitespace().peekable();
        if parts.peek().is_none() {
            return Err(Error::WordSyntax {
                token: token + 1,
                reason: "empty token".into(),
            });
        }
        for part in parts {
            token += 1;
            letters.push(parse_letter(part, token)?);
        }
    }
    Ok(Word(letters))
}

fn parse_letter(part: &str, token: usize) -> Result<usize> {
    let digits = part.strip_prefix(['s', 'S']).unwrap_or(part);
    let err = |reason: String| Error::WordSyntax { token, reason };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("`{part}` is not a simple-reflection index")));
    }
    match digits.parse::<usize>() {
        Ok(0) => Err(err("indices start at 1".into())),
        Ok(a) => Ok(a),
        Err(_) => Err(err(format!("`{part}` is too large"))),
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// State carried along the current prefix of a depth-first word walk.
pub trait PrefixState {
    type Error;

    /// Extends the prefix by `letter`. `Ok(false)` prunes the extension and
    /// must leave the state untouched.
    fn push(&mut self, letter: usize) -> std::result::Result<bool, Self::Error>;

    fn pop(&mut self);
}

/// Tracks `v = w^{-1}(rho)` along the prefix `w`. Extending `w` by `s_a`
/// increases the length exactly when `<v, alpha_a^vee> > 0`.
#[derive(Debug, Clone)]
pub struct ReducedTracker {
    rs: RootSystem,
    prune_nonreduced: bool,
    inverse_rho: Vec<Weight>,
    reduced: Vec<bool>,
}

impl ReducedTracker {
    pub fn new(rs: &RootSystem, prune_nonreduced: bool) -> Self {
        ReducedTracker {
            rs: rs.clone(),
            prune_nonreduced,
            inverse_rho: vec![rs.rho()],
            reduced: vec![true],
        }
    }

    /// Whether the current prefix is a reduced word.
    pub fn is_reduced(&self) -> bool {
        *self.reduced.last().expect("root entry is never popped")
    }

    /// Whether appending `letter` to the current prefix keeps it reduced.
    pub fn extends_reduced(&self, letter: usize) -> bool {
        self.is_reduced() && self.top()[letter] > 0
    }

    fn top(&self) -> &Weight {
        self.inverse_rho.last().expect("root entry is never popped")
    }
}

impl PrefixState for ReducedTracker {
    type Error = Error;

    fn push(&mut self, letter: usize) -> Result<bool> {
        let reduced = self.extends_reduced(letter);
        if self.prune_nonreduced && !reduced {
            return Ok(false);
        }
        let next = self.rs.reflect_weight(self.top(), letter)?;
        self.inverse_rho.push(next);
        self.reduced.push(reduced);
        Ok(true)
    }

    fn pop(&mut self) {
        if self.inverse_rho.len() > 1 {
            self.inverse_rho.pop();
            self.reduced.pop();
        }
    }
}

/// Depth-first walk over words of length `1..=max_length`, visiting them in
/// length-then-lexicographic order. Each length is a separate pass over the
/// prefix tree, so the state only ever sees push/pop pairs.
#[derive(Debug)]
pub struct WordWalker<S> {
    rank: usize,
    max_length: usize,
    first_letter: Option<usize>,
    target: usize,
    letters: Vec<usize>,
    next_choice: Vec<usize>,
    state: S,
}

impl<S: PrefixState> WordWalker<S> {
    pub fn new(rank: usize, max_length: usize, state: S) -> Self {
        WordWalker {
            rank,
            max_length,
            first_letter: None,
            target: 1,
            letters: Vec::with_capacity(max_length),
            next_choice: vec![1; max_length + 1],
            state,
        }
    }

    /// Restrict the walk to words beginning with `letter`.
    pub fn with_first_letter(mut self, letter: usize) -> Self {
        self.first_letter = Some(letter);
        self.next_choice[0] = letter;
        self
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn state(&self) -> &S {
        &self.state
    }

    pub fn into_state(self) -> S {
        self.state
    }

    /// Moves to the next word. Returns `Ok(false)` once the walk is exhausted.
    pub fn advance(&mut self) -> std::result::Result<bool, S::Error> {
        let last_first = self.first_letter.unwrap_or(self.rank);
        loop {
            if self.target > self.max_length {
                return Ok(false);
            }
            let depth = self.letters.len();
            if depth == self.target {
                self.retreat();
                continue;
            }
            let letter = self.next_choice[depth];
            let limit = if depth == 0 { last_first } else { self.rank };
            if letter > limit {
                if depth == 0 {
                    self.target += 1;
                    self.next_choice[0] = self.first_letter.unwrap_or(1);
                } else {
                    self.retreat();
                }
                continue;
            }
            self.next_choice[depth] = letter + 1;
            if !self.state.push(letter)? {
                continue;
            }
            self.letters.push(letter);
            self.next_choice[depth + 1] = 1;
            if self.letters.len() == self.target {
                return Ok(true);
            }
        }
    }

    fn retreat(&mut self) {
        self.letters.pop();
        self.state.pop();
    }
}

/// Stream of words produced by [`enumerate_words`].
#[derive(Debug)]
pub struct WordStream {
    walker: WordWalker<ReducedTracker>,
}

impl Iterator for WordStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        // w^{-1}(rho) stays in the finite Weyl orbit of rho, so the tracker cannot overflow.
        match self.walker.advance() {
            Ok(true) => Some(Word(self.walker.letters().to_vec())),
            Ok(false) | Err(_) => None,
        }
    }
}

/// Every word over `1..=rank` of length `1..=max_length`, ordered by length
/// and then lexicographically. With `reduced_only`, subtrees below the first
/// non-reduced prefix are skipped.
pub fn enumerate_words(rs: &RootSystem, max_length: usize, reduced_only: bool) -> WordStream {
    WordStream {
        walker: WordWalker::new(rs.rank(), max_length, ReducedTracker::new(rs, reduced_only)),
    }
}
