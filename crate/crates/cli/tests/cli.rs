use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn schur(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn setup() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("s2.txt"), "4 2\n1 4\n2 3\n").unwrap();
    fs::write(
        dir.path().join("schur3.tpl"),
        "# template colour = 2\n3 2\n1\n2 3\n",
    )
    .unwrap();
    dir
}

#[test]
fn verify_exit_codes() {
    let dir = setup();
    let d = dir.path();
    let ok = schur(d, &["verify", "s2.txt"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "valid Schur partition, n=4 k=2\n");

    fs::write(d.join("bad.txt"), "3 2\n1 2\n3\n").unwrap();
    let bad = schur(d, &["verify", "bad.txt"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("1 + 1 = 2"));

    for text in ["3 2\n1 x\n3\n", "3 2\n1 2\n", "3 2\n1 2\n2 3\n", ""] {
        fs::write(d.join("mal.txt"), text).unwrap();
        assert_eq!(
            schur(d, &["verify", "mal.txt"]).status.code(),
            Some(2),
            "{text:?}"
        );
    }
    assert_eq!(schur(d, &["verify", "missing.txt"]).status.code(), Some(2));
    assert_eq!(
        schur(d, &["verify", "s2.txt", "--symmetric"]).status.code(),
        Some(0)
    );
}

#[test]
fn compose_writes_a_readable_partition() {
    let dir = setup();
    let d = dir.path();
    let out = schur(
        d,
        &[
            "compose",
            "--template",
            "schur3.tpl",
            "--inner",
            "s2.txt",
            "-o",
            "out.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let cert = stdout(&out);
    assert!(cert.contains("n=13 k=3") && cert.contains("verification: valid"));
    let text = fs::read_to_string(d.join("out.txt")).unwrap();
    assert!(text.contains("13 3\n1 4 7 10 13\n2 3 11 12\n5 6 8 9\n"));
    assert_eq!(
        stdout(&schur(d, &["verify", "out.txt"])),
        "valid Schur partition, n=13 k=3\n"
    );

    fs::write(d.join("bad.tpl"), "# template colour = 2\n4 2\n1 4\n2 3\n").unwrap();
    assert_eq!(
        schur(
            d,
            &["compose", "--template", "bad.tpl", "--inner", "s2.txt"]
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        schur(d, &["template-validate", "bad.tpl"]).status.code(),
        Some(1)
    );
    assert_eq!(
        schur(d, &["template-validate", "schur3.tpl"]).status.code(),
        Some(0)
    );
}

#[test]
fn template_search_output_validates() {
    let dir = setup();
    let d = dir.path();
    let out = schur(
        d,
        &[
            "template-search",
            "--colours",
            "3",
            "--max-order",
            "10",
            "-o",
            "best.tpl",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("best template: m=9 t=3 phi=4"));
    assert_eq!(
        stdout(&schur(d, &["template-validate", "best.tpl"])),
        "valid template: m=9 t=3 phi=4\n"
    );
    let none = schur(
        d,
        &["template-search", "--colours", "2", "--max-order", "2"],
    );
    assert_eq!(none.status.code(), Some(0));
}

#[test]
fn bounds_table_and_registry_round_trip() {
    let dir = setup();
    let d = dir.path();
    let out = schur(d, &["bounds", "--max-k", "8", "--export", "default.reg"]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout(&out);
    let row7 = table
        .lines()
        .find(|l| l.trim_start().starts_with("7 "))
        .unwrap();
    assert!(row7.contains("1696") && row7.contains("1698"), "{row7}");
    assert!(table.contains("growth constant: 3.273690"));
    let again = schur(d, &["bounds", "--max-k", "8", "--registry", "default.reg"]);
    assert_eq!(stdout(&again), table);

    fs::write(d.join("broken.reg"), "rule 3 2\n").unwrap();
    assert_eq!(
        schur(d, &["bounds", "--registry", "broken.reg"])
            .status
            .code(),
        Some(2)
    );

    // a template file registers as a rule
    let with_tpl = schur(
        d,
        &[
            "bounds",
            "--max-k",
            "4",
            "--registry",
            "broken.reg",
            "--template",
            "schur3.tpl",
        ],
    );
    assert_eq!(with_tpl.status.code(), Some(2));
    fs::write(d.join("empty.reg"), "").unwrap();
    let with_tpl = stdout(&schur(
        d,
        &[
            "bounds",
            "--max-k",
            "4",
            "--registry",
            "empty.reg",
            "--template",
            "schur3.tpl",
        ],
    ));
    assert!(with_tpl.contains("40"), "{with_tpl}");
}

#[test]
fn search_warns_before_searching_on_divisible_targets() {
    let dir = setup();
    let d = dir.path();
    let out = schur(
        d,
        &[
            "search",
            "--seed",
            "s2.txt",
            "--target",
            "17",
            "--symmetric",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    let warn = err
        .find("warning: 18 is divisible by 3")
        .expect("warning printed");
    assert!(warn < err.find("search:").unwrap());

    let quiet = schur(
        d,
        &[
            "search",
            "--seed",
            "s2.txt",
            "--target",
            "17",
            "--symmetric",
            "--exception",
            "6",
        ],
    );
    assert!(!String::from_utf8_lossy(&quiet.stderr).contains("warning"));

    let found = schur(
        d,
        &[
            "search",
            "--seed",
            "s2.txt",
            "--target",
            "13",
            "--symmetric",
            "-o",
            "w.txt",
        ],
    );
    assert_eq!(found.status.code(), Some(0));
    assert_eq!(
        stdout(&schur(d, &["verify", "--symmetric", "w.txt"])),
        "valid symmetric Schur partition, n=13 k=3\n"
    );
}

#[test]
fn budget_writes_a_resumable_checkpoint() {
    let dir = setup();
    let d = dir.path();
    fs::write(d.join("b12.txt"), "12 3\n1 4 9 12\n2 3 10 11\n5 6 7 8\n").unwrap();
    let out = schur(
        d,
        &[
            "search",
            "--seed",
            "b12.txt",
            "--target",
            "44",
            "--max-nodes",
            "5",
            "--checkpoint",
            "c.ckpt",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
    let ckpt = fs::read_to_string(d.join("c.ckpt")).unwrap();
    assert!(ckpt.contains("44 4 partial"));
    let resumed = schur(d, &["search", "--resume", "c.ckpt", "-o", "r.txt"]);
    assert!(matches!(resumed.status.code(), Some(0) | Some(1)));
    if resumed.status.code() == Some(0) {
        assert_eq!(schur(d, &["verify", "r.txt"]).status.code(), Some(0));
    }
    assert_eq!(
        schur(d, &["search", "--resume", "s2.txt"]).status.code(),
        Some(2)
    );
}

#[test]
fn exhaustive_search_and_profile() {
    let dir = setup();
    let d = dir.path();
    let out = schur(
        d,
        &["search", "--exhaustive", "2", "--cap", "10", "-o", "s.txt"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "S(2) = 4\n");
    let profile = stdout(&schur(d, &["profile", "s.txt"]));
    assert!(profile.contains("order: 4") && profile.contains("symmetric: true"));
    let budget = schur(
        d,
        &[
            "search",
            "--exhaustive",
            "4",
            "--cap",
            "50",
            "--max-nodes",
            "100",
        ],
    );
    assert_eq!(budget.status.code(), Some(3));
}

#[test]
fn bad_arguments_exit_2() {
    let dir = setup();
    let d = dir.path();
    assert_eq!(
        schur(d, &["search", "--target", "10"]).status.code(),
        Some(2)
    );
    assert_eq!(
        schur(d, &["search", "--seed", "s2.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(
        schur(
            d,
            &[
                "search",
                "--seed",
                "s2.txt",
                "--target",
                "20",
                "--threads",
                "0"
            ]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(schur(d, &["frobnicate"]).status.code(), Some(2));
}
