//! Exhaustive classification of all words up to a length bound.
//!
//! The walk keeps the anti-canonical data of the current prefix up to date:
//! appending a letter computes one new m-table row (right to left, with one
//! running sum per simple root), adds it into the column sums `n`, and adds
//! the row's residual into `2 rho + mu`. Removing the letter subtracts the
//! same row again. Each step costs `O(r + n)` integer operations.

use std::io;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{self, FanoStatus, FanoVerdict};
use crate::error::{self, Error};
use crate::picard;
use crate::rootsys::{RootSystem, Weight};
use crate::word::{PrefixState, ReducedTracker, Word, WordWalker};

/// One classified word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub word: Word,
    pub reduced: bool,
    /// Anti-canonical class of `Z_w` in the `O(1)`-basis.
    pub n: Vec<i64>,
    /// `2 rho + mu`, the character part of the anti-canonical class of `G x^B Z_w`.
    pub character: Weight,
    pub z_status: FanoStatus,
    pub gz_status: FanoStatus,
}

impl CensusRow {
    /// Recomputes every field of the row for `word` without incremental state.
    pub fn from_scratch(rs: &RootSystem, word: &Word) -> Result<CensusRow, Error> {
        let reduced = rs.is_reduced(word)?;
        let gz = picard::anticanonical_gz(rs, word)?;
        Ok(CensusRow {
            word: word.clone(),
            reduced,
            z_status: classify::fano_status_z(rs, word)?,
            gz_status: classify::fano_status_gz(rs, word)?,
            n: gz.m,
            character: gz.lambda,
        })
    }
}

/// Per-length tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthCounts {
    pub length: usize,
    pub examined: u64,
    pub reduced: u64,
    pub z_fano: u64,
    pub z_weak_fano_only: u64,
    pub z_not_weak_fano: u64,
    pub gz_fano: u64,
    pub gz_weak_fano_only: u64,
    pub gz_not_weak_fano: u64,
}

impl LengthCounts {
    fn record(&mut self, row: &CensusRow) {
        self.examined += 1;
        self.reduced += u64::from(row.reduced);
        match row.z_status.verdict {
            FanoVerdict::Fano => self.z_fano += 1,
            FanoVerdict::WeakFanoOnly => self.z_weak_fano_only += 1,
            FanoVerdict::NotWeakFano => self.z_not_weak_fano += 1,
        }
        match row.gz_status.verdict {
            FanoVerdict::Fano => self.gz_fano += 1,
            FanoVerdict::WeakFanoOnly => self.gz_weak_fano_only += 1,
            FanoVerdict::NotWeakFano => self.gz_not_weak_fano += 1,
        }
    }

    fn merge(&mut self, other: &LengthCounts) {
        self.examined += other.examined;
        self.reduced += other.reduced;
        self.z_fano += other.z_fano;
        self.z_weak_fano_only += other.z_weak_fano_only;
        self.z_not_weak_fano += other.z_not_weak_fano;
        self.gz_fano += other.gz_fano;
        self.gz_weak_fano_only += other.gz_weak_fano_only;
        self.gz_not_weak_fano += other.gz_not_weak_fano;
    }

    /// Fano counts never exceed weak-Fano counts, which never exceed the number examined.
    pub fn is_consistent(&self) -> bool {
        let z_weak = self.z_fano + self.z_weak_fano_only;
        let gz_weak = self.gz_fano + self.gz_weak_fano_only;
        z_weak <= self.examined
            && gz_weak <= self.examined
            && z_weak + self.z_not_weak_fano == self.examined
            && gz_weak + self.gz_not_weak_fano == self.examined
            && self.reduced <= self.examined
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    #[serde(rename = "type")]
    pub spec: String,
    pub max_length: usize,
    pub reduced_only: bool,
    pub per_length: Vec<LengthCounts>,
}

impl CensusSummary {
    pub fn new(rs: &RootSystem, max_length: usize, reduced_only: bool) -> Self {
        CensusSummary {
            spec: rs.to_string(),
            max_length,
            reduced_only,
            per_length: (1..=max_length)
                .map(|length| LengthCounts {
                    length,
                    ..LengthCounts::default()
                })
                .collect(),
        }
    }

    pub fn record(&mut self, row: &CensusRow) {
        self.per_length[row.word.len() - 1].record(row);
    }

    /// Adds another summary over the same parameters into this one.
    pub fn merge(&mut self, other: &CensusSummary) {
        for (mine, theirs) in self.per_length.iter_mut().zip(&other.per_length) {
            mine.merge(theirs);
        }
    }

    pub fn totals(&self) -> LengthCounts {
        let mut total = LengthCounts::default();
        for counts in &self.per_length {
            total.merge(counts);
        }
        total
    }
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Input(Error),
    #[error("{source} at word {word}")]
    Arithmetic { word: Word, source: Error },
    #[error("writing census rows: {0}")]
    Io(#[from] io::Error),
}

impl CensusError {
    pub fn is_arithmetic(&self) -> bool {
        matches!(self, CensusError::Arithmetic { .. })
    }
}

/// Receives census rows as they are produced.
pub trait RowSink {
    fn accept(&mut self, row: &CensusRow) -> io::Result<()>;
}

impl RowSink for Vec<CensusRow> {
    fn accept(&mut self, row: &CensusRow) -> io::Result<()> {
        self.push(row.clone());
        Ok(())
    }
}

impl<F: FnMut(&CensusRow) -> io::Result<()>> RowSink for F {
    fn accept(&mut self, row: &CensusRow) -> io::Result<()> {
        self(row)
    }
}

/// Discards rows; useful when only the summary is wanted.
#[derive(Debug, Default, Clone, Copy)]
pub struct Discard;

impl RowSink for Discard {
    fn accept(&mut self, _row: &CensusRow) -> io::Result<()> {
        Ok(())
    }
}

/// Anti-canonical data of the current prefix, maintained under push/pop.
#[derive(Debug, Clone)]
pub struct IncrementalState {
    tracker: ReducedTracker,
    simple_roots: Vec<Weight>,
    letters: Vec<usize>,
    rows: Vec<Vec<i64>>,
    residuals: Vec<Vec<i64>>,
    n: Vec<i64>,
    character: Vec<i64>,
    sums: Vec<i64>,
    failure: Option<(Word, Error)>,
}

impl IncrementalState {
    pub fn new(rs: &RootSystem, reduced_only: bool) -> Self {
        IncrementalState {
            tracker: ReducedTracker::new(rs, reduced_only),
            simple_roots: (1..=rs.rank())
                .map(|j| rs.simple_root(j).expect("index in range"))
                .collect(),
            letters: Vec::new(),
            rows: Vec::new(),
            residuals: Vec::new(),
            n: Vec::new(),
            character: rs.two_rho().into_inner(),
            sums: vec![0; rs.rank()],
            failure: None,
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> &[i64] {
        &self.n
    }

    pub fn character(&self) -> &[i64] {
        &self.character
    }

    pub fn is_reduced(&self) -> bool {
        self.tracker.is_reduced()
    }

    pub fn row(&self) -> CensusRow {
        let character = Weight::new(self.character.clone());
        CensusRow {
            word: Word::new(self.letters.clone()).expect("letters are positive"),
            reduced: self.tracker.is_reduced(),
            z_status: classify::z_status_from_class(&self.n),
            gz_status: classify::gz_status_from_class(&self.n, &character),
            n: self.n.clone(),
            character,
        }
    }

    fn extend(&mut self, letter: usize) -> Result<(), Error> {
        let alpha = self.simple_roots[letter - 1].coords();
        let mut row = vec![0; self.letters.len()];
        picard::expand_into(&self.letters, alpha, &mut self.sums, &mut row)?;
        let residual = picard::residual_from_sums(alpha, &self.sums)?;
        let r = row.len();
        let mut n = self.n.clone();
        for (acc, &x) in n.iter_mut().zip(&row[..r - 1]) {
            *acc = error::add(*acc, x, "updating the anti-canonical class")?;
        }
        n.push(row[r - 1]);
        let mut character = self.character.clone();
        for (acc, &x) in character.iter_mut().zip(&residual) {
            *acc = error::add(*acc, x, "updating the anti-canonical character")?;
        }
        self.n = n;
        self.character = character;
        self.rows.push(row);
        self.residuals.push(residual);
        Ok(())
    }
}

impl PrefixState for IncrementalState {
    type Error = Error;

    fn push(&mut self, letter: usize) -> Result<bool, Error> {
        if !self.tracker.push(letter)? {
            return Ok(false);
        }
        self.letters.push(letter);
        if let Err(e) = self.extend(letter) {
            let word = Word::new(self.letters.clone()).expect("letters are positive");
            self.failure = Some((word, e.clone()));
            self.letters.pop();
            self.tracker.pop();
            return Err(e);
        }
        Ok(true)
    }

    fn pop(&mut self) {
        let Some(row) = self.rows.pop() else {
            return;
        };
        let residual = self.residuals.pop().expect("one residual per row");
        self.n.pop();
        // Every value restored here was held before the matching push.
        for (acc, &x) in self.n.iter_mut().zip(&row) {
            *acc -= x;
        }
        for (acc, &x) in self.character.iter_mut().zip(&residual) {
            *acc -= x;
        }
        self.letters.pop();
        self.tracker.pop();
    }
}

fn validate(rs: &RootSystem, max_length: usize, threads: usize) -> Result<(), CensusError> {
    if max_length == 0 {
        return Err(CensusError::Input(Error::InvalidArgument(
            "census length bound must be at least 1".into(),
        )));
    }
    if threads == 0 {
        return Err(CensusError::Input(Error::InvalidArgument(
            "thread count must be at least 1".into(),
        )));
    }
    if rs.rank() == 0 {
        return Err(CensusError::Input(Error::InvalidArgument(
            "empty root system".into(),
        )));
    }
    Ok(())
}

fn walk_branch(
    rs: &RootSystem,
    max_length: usize,
    reduced_only: bool,
    first_letter: Option<usize>,
    mut emit: impl FnMut(&CensusRow) -> Result<(), CensusError>,
) -> Result<CensusSummary, CensusError> {
    let mut summary = CensusSummary::new(rs, max_length, reduced_only);
    let mut walker = WordWalker::new(
        rs.rank(),
        max_length,
        IncrementalState::new(rs, reduced_only),
    );
    if let Some(a) = first_letter {
        walker = walker.with_first_letter(a);
    }
    loop {
        match walker.advance() {
            Ok(true) => {}
            Ok(false) => return Ok(summary),
            Err(source) => {
                let word = walker
                    .state()
                    .failure
                    .as_ref()
                    .map(|(w, _)| w.clone())
                    .unwrap_or_default();
                return Err(CensusError::Arithmetic { word, source });
            }
        }
        let row = walker.state().row();
        summary.record(&row);
        emit(&row)?;
    }
}

/// Classifies every word (or every reduced word) of length `1..=max_length`,
/// streaming rows to `sink` in length-then-lexicographic order.
pub fn run_census(
    rs: &RootSystem,
    max_length: usize,
    reduced_only: bool,
    sink: &mut impl RowSink,
) -> Result<CensusSummary, CensusError> {
    validate(rs, max_length, 1)?;
    walk_branch(rs, max_length, reduced_only, None, |row| {
        sink.accept(row).map_err(CensusError::from)
    })
}

/// Like [`run_census`], with the search split by first letter across
/// `threads` workers. Row order is then unspecified, but the summary is the
/// same as in a sequential run. With one thread this is [`run_census`].
pub fn run_census_parallel(
    rs: &RootSystem,
    max_length: usize,
    reduced_only: bool,
    threads: usize,
    sink: &mut impl RowSink,
) -> Result<CensusSummary, CensusError> {
    validate(rs, max_length, threads)?;
    if threads == 1 {
        return run_census(rs, max_length, reduced_only, sink);
    }
    let next_letter = AtomicUsize::new(1);
    let (tx, rx) = mpsc::sync_channel::<CensusRow>(1024);
    thread::scope(|scope| {
        let workers: Vec<_> = (0..threads.min(rs.rank()))
            .map(|_| {
                let tx = tx.clone();
                let next_letter = &next_letter;
                scope.spawn(move || {
                    let mut summary = CensusSummary::new(rs, max_length, reduced_only);
                    loop {
                        let a = next_letter.fetch_add(1, Ordering::Relaxed);
                        if a > rs.rank() {
                            return Ok(summary);
                        }
                        let branch = walk_branch(rs, max_length, reduced_only, Some(a), |row| {
                            tx.send(row.clone()).map_err(|_| {
                                CensusError::Io(io::Error::new(
                                    io::ErrorKind::BrokenPipe,
                                    "row consumer stopped",
                                ))
                            })
                        })?;
                        summary.merge(&branch);
                    }
                })
            })
            .collect();
        drop(tx);

        let mut sink_error = None;
        for row in rx {
            if let Err(e) = sink.accept(&row) {
                sink_error = Some(e);
                break;
            }
        }

        let mut summary = CensusSummary::new(rs, max_length, reduced_only);
        let mut first_error = sink_error.map(CensusError::Io);
        for worker in workers {
            match worker.join().expect("census worker panicked") {
                Ok(part) => summary.merge(&part),
                Err(e) => {
                    if first_error.is_none() {
                        first_error = Some(e);
                    }
                }
            }
        }
        match first_error {
            Some(e) => Err(e),
            None => Ok(summary),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    fn collect(spec: &str, max: usize, reduced_only: bool) -> (Vec<CensusRow>, CensusSummary) {
        let mut rows = Vec::new();
        let summary = run_census(&rs(spec), max, reduced_only, &mut rows).unwrap();
        (rows, summary)
    }

    #[test]
    fn a1_rows() {
        let (rows, summary) = collect("A1", 3, false);
        assert_eq!(rows.len(), 3);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.n, vec![2; i + 1]);
            assert_eq!(row.z_status.verdict, FanoVerdict::Fano);
        }
        assert!(rows[0].reduced && !rows[1].reduced);
        assert_eq!(summary.totals().z_fano, 3);
    }

    #[test]
    fn g2_length_one() {
        let (rows, summary) = collect("G2", 1, false);
        assert_eq!(rows.len(), 2);
        let t = summary.totals();
        assert_eq!((t.z_fano, t.gz_fano, t.gz_not_weak_fano), (2, 1, 1));
        assert_eq!(rows[1].character, Weight::new(vec![-1, 2]));
    }

    #[test]
    fn a2_reduced() {
        let (rows, summary) = collect("A2", 3, true);
        assert_eq!(rows.len(), 6);
        assert!(rows
            .iter()
            .all(|r| r.reduced && r.z_status.verdict == FanoVerdict::Fano));
        assert_eq!(summary.per_length[2].examined, 2);
    }

    #[test]
    fn incremental_matches_scratch() {
        for spec in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA2"] {
            let r = rs(spec);
            let max = if r.rank() == 3 { 5 } else { 6 };
            for reduced_only in [false, true] {
                let (rows, summary) = collect(spec, max, reduced_only);
                for row in &rows {
                    assert_eq!(
                        *row,
                        CensusRow::from_scratch(&r, &row.word).unwrap(),
                        "{spec}"
                    );
                }
                assert!(summary.per_length.iter().all(LengthCounts::is_consistent));
            }
        }
    }

    #[test]
    fn state_returns_to_root_after_pops() {
        let r = rs("B3");
        let mut state = IncrementalState::new(&r, false);
        for a in [1, 3, 2, 3, 1] {
            assert!(state.push(a).unwrap());
        }
        for _ in 0..5 {
            state.pop();
        }
        assert!(state.n().is_empty());
        assert_eq!(state.character(), r.two_rho().coords());
        state.pop();
        assert!(state.letters().is_empty());
    }

    #[test]
    fn parallel_summary_matches_sequential() {
        let r = rs("B3");
        let mut seq = Vec::new();
        let s1 = run_census(&r, 5, false, &mut seq).unwrap();
        let mut par = Vec::new();
        let s2 = run_census_parallel(&r, 5, false, 3, &mut par).unwrap();
        assert_eq!(s1, s2);
        let key = |row: &CensusRow| (row.word.len(), row.word.clone());
        seq.sort_by_key(key);
        par.sort_by_key(key);
        assert_eq!(seq, par);
    }

    #[test]
    fn rejects_zero_bound() {
        assert!(matches!(
            run_census(&rs("A2"), 0, false, &mut Discard),
            Err(CensusError::Input(_))
        ));
        assert!(run_census_parallel(&rs("A2"), 2, false, 0, &mut Discard).is_err());
    }

    #[test]
    fn arithmetic_errors_name_the_word() {
        let e = CensusError::Arithmetic {
            word: "1,2,1".parse().unwrap(),
            source: Error::Overflow("updating the anti-canonical class"),
        };
        assert!(e.is_arithmetic());
        assert!(e.to_string().ends_with("at word 1,2,1"));
    }

    #[test]
    fn sink_errors_abort() {
        let mut failing = |_: &CensusRow| -> io::Result<()> { Err(io::Error::other("full")) };
        assert!(matches!(
            run_census(&rs("A2"), 2, false, &mut failing),
            Err(CensusError::Io(_))
        ));
        assert!(run_census_parallel(&rs("A3"), 3, false, 2, &mut failing).is_err());
    }
}
