//! End-to-end checks of the binary: exact output lines, exit codes, table
//! loading, and the record round trip.

use std::io::Write;
use std::process::{Command, Output};

use uch_cli::records::{parse_records, render_record};

fn uch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uch"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn query_prints_exact_record_lines() {
    let cases = [
        (
            vec!["query", "--series", "2A", "--n", "3", "--q", "5", "--label", "[2,1]"],
            "series=2A n=3 label=[2,1] omega=-1*q^3 sigma_inv=true rho_field=Q hc=[2,1] fs=-1 ext_field=Q(sqrt(-5)) rule=Thm1",
        ),
        (
            vec!["query", "--series", "F4x", "--q", "8", "--label", "F4[-1]"],
            "series=F4x n=4 label=F4[-1] omega=-1*q^0 sigma_inv=true rho_field=Q hc=cuspidal fs=+1 ext_field=Q(sqrt(-2)) rule=Prop4.2",
        ),
        (
            vec!["query", "--series", "E6", "--q", "4", "--label", "phi(64,4)"],
            "series=E6 n=6 label=phi(64,4) omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=unknown ext_field=Q rule=Thm3.2",
        ),
    ];
    for (args, expected) in cases {
        let out = uch(&args);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        assert_eq!(stdout(&out), format!("{expected}\n"), "{args:?}");
    }
}

#[test]
fn text_format_is_aligned_key_value() {
    let out = uch(&[
        "query", "--series", "2A", "--n", "3", "--q", "5", "--label", "[2,1]", "--format", "text",
    ]);
    assert!(out.status.success());
    let expected = "\
series:      2A
rank:        3
label:       [2,1]
omega:       -1*q^3
sigma_inv:   true
rho_field:   Q
hc:          [2,1]
fs:          -1
ext_field:   Q(sqrt(-5))
rule:        Thm1
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn exit_codes_by_failure_class() {
    // 0: well-formed query.
    assert_eq!(
        uch(&["query", "--series", "A", "--n", "3", "--label", "[3]"])
            .status
            .code(),
        Some(0)
    );
    // 2: unknown series tag.
    let out = uch(&["query", "--series", "Z9", "--n", "3", "--label", "[3]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"));
    // 2: q violates the series constraint.
    assert_eq!(
        uch(&["query", "--series", "G2x", "--q", "9", "--label", "G2[1]"])
            .status
            .code(),
        Some(2)
    );
    // 2: the label is moved by the automorphism, so no extension exists.
    assert_eq!(
        uch(&["query", "--series", "B2x", "--label", "phi(1,2)'"])
            .status
            .code(),
        Some(2)
    );
    // 2: unknown verify suite.
    assert_eq!(uch(&["verify", "bogus-suite"]).status.code(), Some(2));
    // 2: unknown flag rejected by the parser.
    assert_eq!(
        uch(&[
            "query",
            "--series",
            "A",
            "--n",
            "3",
            "--label",
            "[3]",
            "--frobenius"
        ])
        .status
        .code(),
        Some(2)
    );
    // 3: series without a built-in table.
    let out = uch(&["enumerate", "--series", "D", "--n", "4"]);
    assert_eq!(out.status.code(), Some(3));
    // 3: label beyond an incomplete table.
    assert_eq!(
        uch(&["query", "--series", "D4S3", "--label", "phi(2,2)"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_suites_pass_with_caps() {
    let out = uch(&["verify", "staircase", "--max-t", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suite staircase: 3 checks, ok"), "{text}");
    assert!(text.contains("t=2: value -1 on class [3]"), "{text}");
    let out = uch(&["verify", "parity", "--max-n", "200"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn loaded_tables_extend_the_classifier() {
    // Without extra rows the label is beyond the built-in table.
    let before = uch(&["query", "--series", "D4S3", "--label", "phi(2,2)"]);
    assert_eq!(before.status.code(), Some(3));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# local additions").unwrap();
    writeln!(
        file,
        "series=D4S3 n=4 label=phi(2,2) omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=unknown"
    )
    .unwrap();
    file.flush().unwrap();
    let path = file.path().to_str().unwrap();

    let after = uch(&[
        "query", "--series", "D4S3", "--label", "phi(2,2)", "--tables", path,
    ]);
    assert_eq!(after.status.code(), Some(0), "{}", stderr(&after));
    assert_eq!(
        stdout(&after),
        "series=D4S3 n=4 label=phi(2,2) omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=unknown ext_field=Q rule=D4Gamma\n"
    );

    // The loaded row also substitutes for a built-in one on label collision.
    let text = stdout(&uch(&["enumerate", "--series", "D4S3", "--tables", path]));
    assert!(text.contains("label=phi(2,2)"), "{text}");
}

#[test]
fn malformed_tables_cite_the_line() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "series=A n=3 label=[2,1]").unwrap();
    writeln!(file, "series=A n=3 label=[2,1] bogus=x").unwrap();
    file.flush().unwrap();
    let path = file.path().to_str().unwrap();
    let out = uch(&[
        "query", "--series", "A", "--n", "3", "--label", "[2,1]", "--tables", path,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("bogus"), "{err}");
}

#[test]
fn enumerate_marks_incomplete_tables() {
    let text = stdout(&uch(&["enumerate", "--series", "E6", "--q", "4"]));
    assert!(
        text.trim_end()
            .ends_with("# table incomplete: entries beyond the built-in rows exist"),
        "{text}"
    );
    let text = stdout(&uch(&["enumerate", "--series", "A", "--n", "3"]));
    assert!(!text.contains('#'), "{text}");
}

#[test]
fn tables_output_round_trips() {
    for args in [
        vec!["tables", "--series", "G2x"],
        vec!["tables", "--series", "2A", "--n", "6"],
        vec!["tables"],
    ] {
        let out = uch(&args);
        assert!(out.status.success());
        let text = stdout(&out);
        let records = parse_records(&text).unwrap();
        assert!(!records.is_empty());
        let rendered: Vec<String> = records.iter().map(render_record).collect();
        let data_lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rendered, data_lines, "{args:?}");
    }
}

#[test]
fn enumerate_skips_moved_labels() {
    let text = stdout(&uch(&["enumerate", "--series", "B2x", "--q", "2"]));
    assert!(!text.contains("phi(1,2)'"), "{text}");
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4);
}
