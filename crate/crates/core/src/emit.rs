//! Row encodings for census output.
//!
//! CSV columns, in order: `type,word,length,reduced,n,character,z_status,gz_status`.
//! The word is written with `-` between letters and the two integer vectors
//! with `;`. The JSON form is a single document
//! `{"type":..,"max_length":..,"reduced_only":..,"rows":[..],"summary":{..}}`
//! written one row per line so it can be streamed.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::census::{CensusRow, CensusSummary, RowSink};
use crate::rootsys::RootSystem;

pub const CSV_HEADER: [&str; 8] = [
    "type",
    "word",
    "length",
    "reduced",
    "n",
    "character",
    "z_status",
    "gz_status",
];

pub fn join_semicolon(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// A census row as it appears in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRow {
    #[serde(rename = "type")]
    pub spec: String,
    pub word: Vec<usize>,
    pub length: usize,
    pub reduced: bool,
    pub n: Vec<i64>,
    pub character: Vec<i64>,
    pub z_status: String,
    pub gz_status: String,
}

impl JsonRow {
    pub fn new(spec: &str, row: &CensusRow) -> Self {
        JsonRow {
            spec: spec.to_owned(),
            word: row.word.letters().to_vec(),
            length: row.word.len(),
            reduced: row.reduced,
            n: row.n.clone(),
            character: row.character.coords().to_vec(),
            z_status: row.z_status.verdict.as_str().to_owned(),
            gz_status: row.gz_status.verdict.as_str().to_owned(),
        }
    }

    fn csv_record(&self) -> [String; 8] {
        [
            self.spec.clone(),
            self.word
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join("-"),
            self.length.to_string(),
            self.reduced.to_string(),
            join_semicolon(&self.n),
            join_semicolon(&self.character),
            self.z_status.clone(),
            self.gz_status.clone(),
        ]
    }
}

pub struct CsvSink<W: Write> {
    spec: String,
    writer: csv::Writer<W>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(rs: &RootSystem, out: W) -> io::Result<Self> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(CSV_HEADER).map_err(io::Error::from)?;
        Ok(CsvSink {
            spec: rs.to_string(),
            writer,
        })
    }

    pub fn finish(self) -> io::Result<W> {
        self.writer
            .into_inner()
            .map_err(|e| io::Error::other(e.to_string()))
    }
}

impl<W: Write> RowSink for CsvSink<W> {
    fn accept(&mut self, row: &CensusRow) -> io::Result<()> {
        let record = JsonRow::new(&self.spec, row).csv_record();
        self.writer.write_record(&record).map_err(io::Error::from)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDocument {
    #[serde(rename = "type")]
    pub spec: String,
    pub max_length: usize,
    pub reduced_only: bool,
    pub rows: Vec<JsonRow>,
    pub summary: CensusSummary,
}

impl CensusDocument {
    /// Renders the document in the same layout as [`JsonSink`].
    pub fn render(&self, out: &mut impl Write) -> io::Result<()> {
        write_json_head(out, &self.spec, self.max_length, self.reduced_only)?;
        for (i, row) in self.rows.iter().enumerate() {
            write_json_row(out, i == 0, row)?;
        }
        write_json_tail(out, &self.summary)
    }
}

fn write_json_head(
    out: &mut impl Write,
    spec: &str,
    max_length: usize,
    reduced_only: bool,
) -> io::Result<()> {
    write!(
        out,
        "{{\"type\":{},\"max_length\":{max_length},\"reduced_only\":{reduced_only},\"rows\":[",
        serde_json::to_string(spec)?
    )
}

fn write_json_row(out: &mut impl Write, first: bool, row: &JsonRow) -> io::Result<()> {
    out.write_all(if first { b"\n" } else { b",\n" })?;
    serde_json::to_writer(&mut *out, row)?;
    Ok(())
}

fn write_json_tail(out: &mut impl Write, summary: &CensusSummary) -> io::Result<()> {
    out.write_all(b"\n],\"summary\":")?;
    serde_json::to_writer(&mut *out, summary)?;
    out.write_all(b"}\n")
}

/// Streams rows into a JSON document; [`JsonSink::finish`] appends the summary.
pub struct JsonSink<W: Write> {
    spec: String,
    out: W,
    first: bool,
}

impl<W: Write> JsonSink<W> {
    pub fn new(
        rs: &RootSystem,
        max_length: usize,
        reduced_only: bool,
        mut out: W,
    ) -> io::Result<Self> {
        let spec = rs.to_string();
        write_json_head(&mut out, &spec, max_length, reduced_only)?;
        Ok(JsonSink {
            spec,
            out,
            first: true,
        })
    }

    pub fn finish(mut self, summary: &CensusSummary) -> io::Result<W> {
        write_json_tail(&mut self.out, summary)?;
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> RowSink for JsonSink<W> {
    fn accept(&mut self, row: &CensusRow) -> io::Result<()> {
        write_json_row(&mut self.out, self.first, &JsonRow::new(&self.spec, row))?;
        self.first = false;
        Ok(())
    }
}

/// Plain ASCII columns.
pub struct TableSink<W: Write> {
    out: W,
    word_width: usize,
    vec_width: usize,
}

impl<W: Write> TableSink<W> {
    pub fn new(rs: &RootSystem, max_length: usize, mut out: W) -> io::Result<Self> {
        let digits = rs.rank().to_string().len();
        let word_width = (max_length * (digits + 1)).max(5);
        let vec_width = (max_length * 3).max(rs.rank() * 3).max(10);
        writeln!(
            out,
            "{:<word_width$}  {:>6}  {:<7}  {:<vec_width$}  {:<vec_width$}  {:<12}  gz_status",
            "word", "length", "reduced", "n", "character", "z_status"
        )?;
        Ok(TableSink {
            out,
            word_width,
            vec_width,
        })
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> RowSink for TableSink<W> {
    fn accept(&mut self, row: &CensusRow) -> io::Result<()> {
        let (ww, vw) = (self.word_width, self.vec_width);
        writeln!(
            self.out,
            "{:<ww$}  {:>6}  {:<7}  {:<vw$}  {:<vw$}  {:<12}  {}",
            row.word.dashed(),
            row.word.len(),
            row.reduced,
            format!("({})", join_semicolon(&row.n).replace(';', ",")),
            row.character.to_string(),
            row.z_status.verdict.as_str(),
            row.gz_status.verdict.as_str(),
        )
    }
}

/// Human-readable summary table.
pub fn write_summary_table(out: &mut impl Write, summary: &CensusSummary) -> io::Result<()> {
    writeln!(
        out,
        "census {} max_length={} reduced_only={}",
        summary.spec, summary.max_length, summary.reduced_only
    )?;
    writeln!(
        out,
        "{:>6} {:>10} {:>10} {:>10} {:>16} {:>15} {:>10} {:>17} {:>16}",
        "length",
        "examined",
        "reduced",
        "z_fano",
        "z_weak_fano_only",
        "z_not_weak_fano",
        "gz_fano",
        "gz_weak_fano_only",
        "gz_not_weak_fano"
    )?;
    let line = |out: &mut dyn Write, label: &str, c: &crate::census::LengthCounts| {
        writeln!(
            out,
            "{:>6} {:>10} {:>10} {:>10} {:>16} {:>15} {:>10} {:>17} {:>16}",
            label,
            c.examined,
            c.reduced,
            c.z_fano,
            c.z_weak_fano_only,
            c.z_not_weak_fano,
            c.gz_fano,
            c.gz_weak_fano_only,
            c.gz_not_weak_fano
        )
    };
    for c in &summary.per_length {
        line(out, &c.length.to_string(), c)?;
    }
    line(out, "total", &summary.totals())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::run_census;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn csv_layout() {
        let r = rs("G2");
        let mut sink = CsvSink::new(&r, Vec::new()).unwrap();
        run_census(&r, 1, false, &mut sink).unwrap();
        let text = String::from_utf8(sink.finish().unwrap()).unwrap();
        assert_eq!(
            text,
            "type,word,length,reduced,n,character,z_status,gz_status\n\
             G2,1,1,true,2,2;1,Fano,Fano\n\
             G2,2,1,true,2,-1;2,Fano,NotWeakFano\n"
        );
    }

    #[test]
    fn multi_letter_csv_fields() {
        let r = rs("A2");
        let mut sink = CsvSink::new(&r, Vec::new()).unwrap();
        run_census(&r, 3, true, &mut sink).unwrap();
        let text = String::from_utf8(sink.finish().unwrap()).unwrap();
        assert!(text.contains("\nA2,1-2-1,3,true,1;1;2,"), "{text}");
    }

    #[test]
    fn json_document_round_trips() {
        let r = rs("B2");
        let mut sink = JsonSink::new(&r, 3, false, Vec::new()).unwrap();
        let summary = run_census(&r, 3, false, &mut sink).unwrap();
        let bytes = sink.finish(&summary).unwrap();
        let doc: CensusDocument = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(doc.rows.len(), 2 + 4 + 8);
        assert_eq!(doc.summary, summary);
        let mut again = Vec::new();
        doc.render(&mut again).unwrap();
        assert_eq!(again, bytes);
    }

    #[test]
    fn empty_json_rows() {
        let r = rs("A1");
        let sink = JsonSink::new(&r, 1, true, Vec::new()).unwrap();
        let summary = CensusSummary::new(&r, 1, true);
        let bytes = sink.finish(&summary).unwrap();
        let doc: CensusDocument = serde_json::from_slice(&bytes).unwrap();
        assert!(doc.rows.is_empty());
    }

    #[test]
    fn table_output_is_ascii() {
        let r = rs("A2");
        let mut sink = TableSink::new(&r, 2, Vec::new()).unwrap();
        let summary = run_census(&r, 2, false, &mut sink).unwrap();
        let mut out = sink.finish().unwrap();
        write_summary_table(&mut out, &summary).unwrap();
        assert!(out.is_ascii());
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 1 + 6 + 2 + 2 + 1);
    }
}
