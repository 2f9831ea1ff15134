use std::fs::File;
use std::io::{self, BufWriter, Write};

use bsdh_core::census::{self, CensusError, RowSink};
use bsdh_core::emit::{write_summary_table, CsvSink, JsonSink, TableSink};
use bsdh_core::{
    anticanonical_gz, anticanonical_z, classify_gz_bundle, classify_z_bundle, expand_character,
    fano_status_gz, fano_status_z, parse_word, Family, GZLineBundle, RootSystem, RootSystemSpec,
    Weight, Word, ZLineBundle,
};

use crate::report::{
    emit, variety_name, AnticanonicalReport, ClassifyReport, ExpandReport, FanoReport,
    ReducedReport,
};
use crate::{
    CensusArgs, ClassifyArgs, CliError, ExpandArgs, OutputFormat, Variety, VarietyArgs, WordArgs,
};

fn parse_spec(text: &str) -> Result<RootSystem, CliError> {
    text.parse().map_err(|e| CliError::from_core("--type", e))
}

fn parse_word_for(rs: &RootSystem, text: &str) -> Result<Word, CliError> {
    let word = parse_word(text).map_err(|e| CliError::from_core("--word", e))?;
    rs.check_word(&word)
        .map_err(|e| CliError::from_core("--word", e))?;
    Ok(word)
}

fn parse_integers(flag: &str, text: &str) -> Result<Vec<i64>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<i64>().map_err(|_| {
                CliError::Usage(format!(
                    "{flag}: entry {} (`{}`) is not an integer",
                    i + 1,
                    tok.trim()
                ))
            })
        })
        .collect()
}

fn check_len(flag: &str, expected: usize, found: usize) -> Result<(), CliError> {
    if expected != found {
        return Err(CliError::Usage(format!(
            "{flag}: expected {expected} entries, got {found}"
        )));
    }
    Ok(())
}

fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight, CliError> {
    let coords = parse_integers("--lambda", text)?;
    check_len("--lambda", rs.rank(), coords.len())?;
    Ok(Weight::new(coords))
}

fn setup(args: &WordArgs) -> Result<(RootSystem, Word), CliError> {
    let rs = parse_spec(&args.spec)?;
    let word = parse_word_for(&rs, &args.word)?;
    Ok((rs, word))
}

fn compute<T>(r: bsdh_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::from_core("computation", e))
}

pub fn expand(args: &ExpandArgs, out: &mut impl Write) -> Result<(), CliError> {
    let (rs, word) = setup(&args.common)?;
    let lambda = parse_weight(&rs, &args.lambda)?;
    let e = compute(expand_character(&rs, &word, &lambda))?;
    let report = ExpandReport {
        spec: rs.to_string(),
        word: word.letters().to_vec(),
        lambda: lambda.into_inner(),
        m: e.m,
        residual: e.residual.into_inner(),
    };
    emit(&report, args.common.format, out)
}

pub fn anticanonical(args: &VarietyArgs, out: &mut impl Write) -> Result<(), CliError> {
    let (rs, word) = setup(&args.common)?;
    let (n, character) = match args.variety {
        Variety::Z => (compute(anticanonical_z(&rs, &word))?.m, None),
        Variety::Gz => {
            let class = compute(anticanonical_gz(&rs, &word))?;
            (class.m, Some(class.lambda.into_inner()))
        }
    };
    let report = AnticanonicalReport {
        spec: rs.to_string(),
        word: word.letters().to_vec(),
        variety: variety_name(args.variety),
        n,
        character,
    };
    emit(&report, args.common.format, out)
}

pub fn classify(args: &ClassifyArgs, out: &mut impl Write) -> Result<(), CliError> {
    let word = parse_word(&args.word).map_err(|e| CliError::from_core("--word", e))?;
    let rs = match (&args.spec, args.variety) {
        (Some(spec), _) => parse_spec(spec)?,
        (None, Variety::Z) => {
            // Positivity on Z_w only looks at m; any type with enough simple roots will do.
            let rank = word.letters().iter().copied().max().unwrap_or(1);
            RootSystem::simple(
                RootSystemSpec::new(Family::A, rank)
                    .map_err(|e| CliError::from_core("--word", e))?,
            )
        }
        (None, Variety::Gz) => {
            return Err(CliError::Usage("--type: required for --variety gz".into()))
        }
    };
    rs.check_word(&word)
        .map_err(|e| CliError::from_core("--word", e))?;
    let m = parse_integers("--m", &args.m)?;
    check_len("--m", word.len(), m.len())?;

    let mut report = ClassifyReport {
        spec: args.spec.as_ref().map(|_| rs.to_string()),
        word: word.letters().to_vec(),
        variety: variety_name(args.variety),
        m: m.clone(),
        lambda: None,
        nef: false,
        globally_generated: false,
        ample: false,
        very_ample: false,
    };
    let positivity = match args.variety {
        Variety::Z => {
            if args.lambda.is_some() {
                return Err(CliError::Usage(
                    "--lambda: only meaningful for --variety gz".into(),
                ));
            }
            compute(classify_z_bundle(&rs, &word, &ZLineBundle::new(m)))?
        }
        Variety::Gz => {
            let text = args
                .lambda
                .as_deref()
                .ok_or_else(|| CliError::Usage("--lambda: required for --variety gz".into()))?;
            let lambda = parse_weight(&rs, text)?;
            report.lambda = Some(lambda.coords().to_vec());
            compute(classify_gz_bundle(
                &rs,
                &word,
                &GZLineBundle::new(m, lambda),
            ))?
        }
    };
    report.fill(&positivity);
    emit(&report, args.format, out)
}

pub fn fano(args: &VarietyArgs, out: &mut impl Write) -> Result<(), CliError> {
    let (rs, word) = setup(&args.common)?;
    let mut report = FanoReport {
        spec: rs.to_string(),
        word: word.letters().to_vec(),
        variety: variety_name(args.variety),
        status: String::new(),
        witness: None,
        n: Vec::new(),
        character: None,
    };
    match args.variety {
        Variety::Z => {
            report.n = compute(anticanonical_z(&rs, &word))?.m;
            report.set_status(&compute(fano_status_z(&rs, &word))?);
        }
        Variety::Gz => {
            let class = compute(anticanonical_gz(&rs, &word))?;
            report.n = class.m;
            report.character = Some(class.lambda.into_inner());
            report.set_status(&compute(fano_status_gz(&rs, &word))?);
        }
    }
    emit(&report, args.common.format, out)
}

pub fn reduced(args: &WordArgs, out: &mut impl Write) -> Result<(), CliError> {
    let (rs, word) = setup(args)?;
    let report = ReducedReport {
        spec: rs.to_string(),
        reduced: compute(rs.is_reduced(&word))?,
        word: word.letters().to_vec(),
    };
    emit(&report, args.format, out)
}

fn census_error(e: CensusError) -> CliError {
    match e {
        CensusError::Input(e) => CliError::Usage(format!("--max-length/--threads: {e}")),
        e @ CensusError::Arithmetic { .. } => CliError::Arithmetic(format!("census aborted: {e}")),
        CensusError::Io(e) => CliError::Io(e),
    }
}

fn drive(
    args: &CensusArgs,
    rs: &RootSystem,
    sink: &mut impl RowSink,
) -> Result<census::CensusSummary, CliError> {
    census::run_census_parallel(rs, args.max_length, args.reduced_only, args.threads, sink)
        .map_err(census_error)
}

pub fn census(args: &CensusArgs, stdout: &mut impl Write) -> Result<(), CliError> {
    let rs = parse_spec(&args.spec)?;
    if args.max_length == 0 {
        return Err(CliError::Usage("--max-length: must be at least 1".into()));
    }
    if args.threads == 0 {
        return Err(CliError::Usage("--threads: must be at least 1".into()));
    }
    let mut file;
    let out: &mut dyn Write = match &args.out {
        Some(path) => {
            file = BufWriter::new(File::create(path).map_err(|e| {
                CliError::Usage(format!("--out: cannot create {}: {e}", path.display()))
            })?);
            &mut file
        }
        None => stdout,
    };
    match args.format {
        OutputFormat::Csv => {
            let mut sink = CsvSink::new(&rs, out)?;
            let summary = drive(args, &rs, &mut sink)?;
            sink.finish()?.flush()?;
            write_summary_table(&mut io::stderr().lock(), &summary)?;
        }
        OutputFormat::Json => {
            let mut sink = JsonSink::new(&rs, args.max_length, args.reduced_only, out)?;
            let summary = drive(args, &rs, &mut sink)?;
            sink.finish(&summary)?;
        }
        OutputFormat::Table => {
            let mut sink = TableSink::new(&rs, args.max_length, out)?;
            let summary = drive(args, &rs, &mut sink)?;
            sink.finish()?;
            write_summary_table(&mut io::stderr().lock(), &summary)?;
        }
    }
    Ok(())
}
