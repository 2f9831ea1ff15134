use std::process::{Command, Output};

use bsdh_cli::report::{
    AnticanonicalReport, ClassifyReport, ExpandReport, FanoReport, ReducedReport,
};
use bsdh_core::emit::CensusDocument;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn bsdh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsdh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = bsdh(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    bsdh(args).status.code().expect("exited normally")
}

/// Parses `text` as `T` and checks that rendering it again gives the same bytes.
fn round_trip<T: DeserializeOwned + Serialize>(text: &str) -> T {
    let parsed: T = serde_json::from_str(text).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, text);
    parsed
}

#[test]
fn expand_examples() {
    let out = ok(&["expand", "--type", "G2", "--word", "2", "--lambda", "-3,2"]);
    assert!(
        out.contains("m=[2]\n") && out.contains("residual=[-3,0]\n"),
        "{out}"
    );
    let out = ok(&["expand", "--type", "A2", "--word", "1,2", "--lambda", "1,0"]);
    assert!(
        out.contains("m=[1,0]\n") && out.contains("residual=[0,0]\n"),
        "{out}"
    );
    let json = ok(&[
        "expand", "--type", "A2", "--word", "1,2", "--lambda", "0,0", "--format", "json",
    ]);
    let r: ExpandReport = round_trip(&json);
    assert_eq!((r.m, r.residual), (vec![0, 0], vec![0, 0]));
}

#[test]
fn anticanonical_examples() {
    let out = ok(&[
        "anticanonical",
        "--type",
        "A2",
        "--word",
        "1,2",
        "--variety",
        "z",
    ]);
    assert!(out.contains("n=[1,2]\n"), "{out}");
    let json = ok(&[
        "anticanonical",
        "--type",
        "G2",
        "--word",
        "2",
        "--variety",
        "gz",
        "--format",
        "json",
    ]);
    let r: AnticanonicalReport = round_trip(&json);
    assert_eq!((r.n, r.character), (vec![2], Some(vec![-1, 2])));
    let out = ok(&[
        "anticanonical",
        "--type",
        "A1",
        "--word",
        "1",
        "--variety",
        "z",
    ]);
    assert!(out.contains("n=[2]\n"), "{out}");
}

#[test]
fn classify_examples() {
    let json = ok(&[
        "classify",
        "--variety",
        "z",
        "--word",
        "1,2",
        "--m",
        "1,1",
        "--format",
        "json",
    ]);
    let r: ClassifyReport = round_trip(&json);
    assert!(r.nef && r.globally_generated && r.ample && r.very_ample);

    let json = ok(&[
        "classify",
        "--variety",
        "gz",
        "--word",
        "2",
        "--m",
        "2",
        "--lambda",
        "-1,2",
        "--type",
        "G2",
        "--format",
        "json",
    ]);
    let r: ClassifyReport = round_trip(&json);
    assert!(!r.nef && !r.globally_generated && !r.ample && !r.very_ample);
    assert_eq!(r.lambda, Some(vec![-1, 2]));

    let out = ok(&["classify", "--variety", "z", "--word", "1", "--m", "0"]);
    assert!(
        out.contains("nef=true\n") && out.contains("ample=false\n"),
        "{out}"
    );
}

#[test]
fn classify_validation() {
    assert_eq!(
        exit_code(&[
            "classify",
            "--variety",
            "gz",
            "--word",
            "2",
            "--m",
            "2",
            "--type",
            "G2"
        ]),
        2
    );
    assert_eq!(
        exit_code(&[
            "classify",
            "--variety",
            "gz",
            "--word",
            "2",
            "--m",
            "2",
            "--lambda",
            "1,1"
        ]),
        2
    );
    assert_eq!(
        exit_code(&["classify", "--variety", "z", "--word", "1,2", "--m", "1"]),
        2
    );
    assert_eq!(
        exit_code(&["classify", "--variety", "z", "--word", "1", "--m", "x"]),
        2
    );
    assert_eq!(
        exit_code(&[
            "classify",
            "--variety",
            "gz",
            "--type",
            "A2",
            "--word",
            "1",
            "--m",
            "1",
            "--lambda",
            "1"
        ]),
        2
    );
}

#[test]
fn fano_examples() {
    let json = ok(&[
        "fano",
        "--type",
        "G2",
        "--word",
        "2",
        "--variety",
        "gz",
        "--format",
        "json",
    ]);
    let r: FanoReport = round_trip(&json);
    assert_eq!(r.status, "NotWeakFano");
    assert!(
        json.contains("\"kind\": \"character_coordinate\""),
        "{json}"
    );
    assert!(json.contains("\"value\": -1"), "{json}");

    let out = ok(&["fano", "--type", "A2", "--word", "1,2,2", "--variety", "z"]);
    assert!(
        out.contains("status=WeakFanoOnly\n") && out.contains("witness=j=1, n_1=0\n"),
        "{out}"
    );

    let out = ok(&["fano", "--type", "A2", "--word", "1", "--variety", "z"]);
    assert!(
        out.contains("status=Fano\n") && out.contains("witness=none\n"),
        "{out}"
    );
}

#[test]
fn reduced_examples() {
    for (spec, w, expected) in [
        ("A2", "1,2,1", true),
        ("A1", "1,1", false),
        ("A2", "2,1,2", true),
    ] {
        let json = ok(&["reduced", "--type", spec, "--word", w, "--format", "json"]);
        let r: ReducedReport = round_trip(&json);
        assert_eq!(r.reduced, expected, "{spec} {w}");
    }
    let out = ok(&["reduced", "--type", "A2", "--word", "s1 s2 s1"]);
    assert!(out.contains("reduced=true\n"));
}

#[test]
fn census_examples() {
    let out = bsdh(&["census", "--type", "G2", "--max-length", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let summary = String::from_utf8(out.stderr).unwrap();
    let total = summary
        .lines()
        .find(|l| l.trim_start().starts_with("total"))
        .unwrap();
    let cols: Vec<&str> = total.split_whitespace().collect();
    // total examined reduced z_fano z_weak z_not gz_fano gz_weak gz_not
    assert_eq!(cols[1..], ["2", "2", "2", "0", "0", "1", "0", "1"]);

    let csv = ok(&[
        "census",
        "--type",
        "A1",
        "--max-length",
        "3",
        "--format",
        "csv",
    ]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.split(',').nth(6) == Some("Fano")));
    // alpha_1 = 2 varpi_1 in A1, so every residual vanishes and the character stays 2 rho.
    assert_eq!(rows[2], "A1,1-1-1,3,false,2;2;2,2,Fano,Fano");

    let csv = ok(&[
        "census",
        "--type",
        "A2",
        "--max-length",
        "3",
        "--reduced-only",
        "--format",
        "csv",
    ]);
    assert_eq!(csv.lines().count(), 1 + 6);
    assert_eq!(
        csv.lines().next().unwrap(),
        "type,word,length,reduced,n,character,z_status,gz_status"
    );
}

#[test]
fn census_json_embeds_summary_and_round_trips() {
    let json = ok(&[
        "census",
        "--type",
        "G2",
        "--max-length",
        "1",
        "--format",
        "json",
    ]);
    let doc: CensusDocument = serde_json::from_str(&json).unwrap();
    let t = doc.summary.totals();
    assert_eq!((t.gz_fano, t.gz_not_weak_fano), (1, 1));
    let mut again = Vec::new();
    doc.render(&mut again).unwrap();
    assert_eq!(String::from_utf8(again).unwrap(), json);
}

#[test]
fn census_to_file_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let path_str = path.to_str().unwrap();
    let stdout = ok(&[
        "census",
        "--type",
        "B3",
        "--max-length",
        "4",
        "--format",
        "csv",
        "--out",
        path_str,
    ]);
    assert!(stdout.is_empty());
    let sequential = std::fs::read_to_string(&path).unwrap();
    assert_eq!(sequential.lines().count(), 1 + 3 + 9 + 27 + 81);

    ok(&[
        "census",
        "--type",
        "B3",
        "--max-length",
        "4",
        "--format",
        "csv",
        "--out",
        path_str,
        "--threads",
        "3",
    ]);
    let parallel = std::fs::read_to_string(&path).unwrap();
    let sorted = |s: &str| {
        let mut v: Vec<String> = s.lines().map(str::to_owned).collect();
        v.sort();
        v
    };
    assert_eq!(sorted(&sequential), sorted(&parallel));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["expand", "--type", "Q3", "--word", "1", "--lambda", "0,0,0"],
        &["expand", "--type", "D3", "--word", "1", "--lambda", "0,0,0"],
        &[
            "expand", "--type", "A2", "--word", "1,,2", "--lambda", "0,0",
        ],
        &["expand", "--type", "A2", "--word", "3", "--lambda", "0,0"],
        &["expand", "--type", "A2", "--word", "1", "--lambda", "0"],
        &[
            "expand", "--type", "A2", "--word", "1", "--lambda", "0,0", "--format", "csv",
        ],
        &["expand", "--type", "A2", "--word", "1"],
        &["census", "--type", "A2", "--max-length", "0"],
        &[
            "census",
            "--type",
            "A2",
            "--max-length",
            "2",
            "--threads",
            "0",
        ],
        &[
            "census",
            "--type",
            "A2",
            "--max-length",
            "2",
            "--out",
            "/nonexistent-dir/x.csv",
        ],
        &["fano", "--type", "A2", "--word", "1", "--variety", "x"],
        &["bogus"],
        &[],
    ];
    for args in cases {
        let out = bsdh(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn empty_word_is_accepted() {
    let out = ok(&[
        "anticanonical",
        "--type",
        "A2",
        "--word",
        "",
        "--variety",
        "gz",
    ]);
    assert!(
        out.contains("n=[]\n") && out.contains("character=[2,2]\n"),
        "{out}"
    );
    let out = ok(&["fano", "--type", "G2", "--word", "", "--variety", "gz"]);
    assert!(out.contains("status=Fano\n"), "{out}");
}

#[test]
fn help_exits_zero() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["census", "--help"]), 0);
}
