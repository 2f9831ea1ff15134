//! Command outputs. Each report serializes to JSON with fixed key names and
//! renders to plain ASCII `key=value` lines.

use std::io::{self, Write};

use bsdh_core::{FanoStatus, PositivityReport, Witness};
use serde::{Deserialize, Serialize};

use crate::{OutputFormat, Variety};

pub fn vector<T: ToString>(v: &[T]) -> String {
    let items: Vec<_> = v.iter().map(T::to_string).collect();
    format!("[{}]", items.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandReport {
    #[serde(rename = "type")]
    pub spec: String,
    pub word: Vec<usize>,
    pub lambda: Vec<i64>,
    pub m: Vec<i64>,
    pub residual: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnticanonicalReport {
    #[serde(rename = "type")]
    pub spec: String,
    pub word: Vec<usize>,
    pub variety: String,
    pub n: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    pub word: Vec<usize>,
    pub variety: String,
    pub m: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    pub nef: bool,
    pub globally_generated: bool,
    pub ample: bool,
    pub very_ample: bool,
}

impl ClassifyReport {
    pub fn fill(&mut self, r: &PositivityReport) {
        self.nef = r.nef;
        self.globally_generated = r.globally_generated;
        self.ample = r.ample;
        self.very_ample = r.very_ample;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoReport {
    #[serde(rename = "type")]
    pub spec: String,
    pub word: Vec<usize>,
    pub variety: String,
    pub status: String,
    pub witness: Option<Witness>,
    pub n: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<i64>>,
}

impl FanoReport {
    pub fn set_status(&mut self, s: &FanoStatus) {
        self.status = s.verdict.as_str().to_owned();
        self.witness = s.witness;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedReport {
    #[serde(rename = "type")]
    pub spec: String,
    pub word: Vec<usize>,
    pub reduced: bool,
}

pub fn variety_name(v: Variety) -> String {
    match v {
        Variety::Z => "z".into(),
        Variety::Gz => "gz".into(),
    }
}

/// Plain-text rendering as `key=value` lines.
pub trait Table {
    fn lines(&self) -> Vec<(&'static str, String)>;
}

impl Table for ExpandReport {
    fn lines(&self) -> Vec<(&'static str, String)> {
        vec![
            ("type", self.spec.clone()),
            ("word", vector(&self.word)),
            ("lambda", vector(&self.lambda)),
            ("m", vector(&self.m)),
            ("residual", vector(&self.residual)),
        ]
    }
}

impl Table for AnticanonicalReport {
    fn lines(&self) -> Vec<(&'static str, String)> {
        let mut lines = vec![
            ("type", self.spec.clone()),
            ("word", vector(&self.word)),
            ("variety", self.variety.clone()),
            ("n", vector(&self.n)),
        ];
        if let Some(c) = &self.character {
            lines.push(("character", vector(c)));
        }
        lines
    }
}

impl Table for ClassifyReport {
    fn lines(&self) -> Vec<(&'static str, String)> {
        let mut lines = Vec::new();
        if let Some(s) = &self.spec {
            lines.push(("type", s.clone()));
        }
        lines.push(("word", vector(&self.word)));
        lines.push(("variety", self.variety.clone()));
        lines.push(("m", vector(&self.m)));
        if let Some(l) = &self.lambda {
            lines.push(("lambda", vector(l)));
        }
        lines.push(("nef", self.nef.to_string()));
        lines.push(("globally_generated", self.globally_generated.to_string()));
        lines.push(("ample", self.ample.to_string()));
        lines.push(("very_ample", self.very_ample.to_string()));
        lines
    }
}

impl Table for FanoReport {
    fn lines(&self) -> Vec<(&'static str, String)> {
        let mut lines = vec![
            ("type", self.spec.clone()),
            ("word", vector(&self.word)),
            ("variety", self.variety.clone()),
            ("n", vector(&self.n)),
        ];
        if let Some(c) = &self.character {
            lines.push(("character", vector(c)));
        }
        lines.push(("status", self.status.clone()));
        lines.push((
            "witness",
            self.witness
                .map_or_else(|| "none".to_owned(), |w| w.to_string()),
        ));
        lines
    }
}

impl Table for ReducedReport {
    fn lines(&self) -> Vec<(&'static str, String)> {
        vec![
            ("type", self.spec.clone()),
            ("word", vector(&self.word)),
            ("reduced", self.reduced.to_string()),
        ]
    }
}

/// Writes a single-record report in table or JSON form. CSV is only offered
/// for census rows.
pub fn emit<R: Table + Serialize>(
    report: &R,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<(), crate::CliError> {
    match format {
        OutputFormat::Table => {
            for (key, value) in report.lines() {
                writeln!(out, "{key}={value}")?;
            }
        }
        OutputFormat::Json => {
            let text = serde_json::to_string_pretty(report).map_err(io::Error::from)?;
            writeln!(out, "{text}")?;
        }
        OutputFormat::Csv => {
            return Err(crate::CliError::Usage(
                "--format: csv output is only available for census".into(),
            ))
        }
    }
    Ok(())
}
