use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalattice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_catalattice"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn enumerate_listings() {
    let perms = stdout(&["enumerate", "--n", "3", "--kind", "perm"]);
    assert_eq!(perms, "123\n132\n213\n231\n321\n");
    assert_eq!(stdout(&["enumerate", "--n", "1", "--kind", "tree"]), "()\n");
    assert_eq!(stdout(&["enumerate", "--n", "0", "--kind", "path"]), "\n");
    let json = stdout(&[
        "enumerate",
        "--n",
        "4",
        "--kind",
        "spio",
        "--format",
        "json",
    ]);
    assert!(json.contains("\"count\": 14"));
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["items"].as_array().unwrap().len(), 14);
    assert_eq!(doc["kind"], "spio");
    for kind in ["spio", "tree", "perm", "path"] {
        let lines = stdout(&["enumerate", "--n", "5", "--kind", kind]);
        let lines: Vec<&str> = lines.lines().collect();
        assert_eq!(lines.len(), 42);
        assert!(lines.windows(2).all(|w| w[0] < w[1]), "{kind} not sorted");
    }
}

#[test]
fn convert_examples() {
    let spio = stdout(&["convert", "--to", "spio", "2146753"]);
    let doc: serde_json::Value = serde_json::from_str(&spio).unwrap();
    assert_eq!(doc["n"], 7);
    let pairs: Vec<[usize; 2]> = serde_json::from_value(doc["pairs"].clone()).unwrap();
    let mut expected = Vec::new();
    for x in [1, 2] {
        for y in 3..=7 {
            expected.push([x, y]);
        }
    }
    expected.extend([[4, 5], [4, 6], [4, 7], [6, 7]]);
    assert_eq!(pairs, expected);
    assert_eq!(stdout(&["convert", "--to", "perm", "()()()"]), "123\n");
    assert_eq!(stdout(&["convert", "--to", "perm", "((()))"]), "321\n");
    assert_eq!(
        stdout(&["convert", "--from", "tree", "--to", "path", "(())()"]),
        "UUDDUD\n"
    );
    assert_eq!(
        stdout(&["convert", "--to", "tree", spio.trim()]),
        "(())(()(()()))\n"
    );
}

#[test]
fn convert_reads_stdin() {
    let out = run_stdin(&["convert", "--to", "tree"], "123\n\n321\n");
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "()()()\n((()))\n");
}

#[test]
fn convert_round_trips() {
    let kinds = ["spio", "tree", "perm", "path"];
    for n in 0..=4 {
        for from in kinds {
            let listing = stdout(&["enumerate", "--n", &n.to_string(), "--kind", from]);
            for to in kinds {
                let there = run_stdin(&["convert", "--from", from, "--to", to], &listing);
                let there = String::from_utf8(there.stdout).unwrap();
                let back = run_stdin(&["convert", "--from", to, "--to", from], &there);
                let mut back: Vec<String> = String::from_utf8(back.stdout)
                    .unwrap()
                    .lines()
                    .map(String::from)
                    .collect();
                back.sort();
                let original: Vec<String> = listing.lines().map(String::from).collect();
                // Empty trees and paths print as blank lines, which stdin skips.
                if n > 0 {
                    assert_eq!(back, original, "{from} -> {to} -> {from}, n={n}");
                }
            }
        }
    }
}

#[test]
fn cmp_verdicts() {
    let cmp = |order: &str, a: &str, b: &str| stdout(&["cmp", "--order", order, a, b]);
    assert_eq!(cmp("strong", "468753921", "768543921"), "LT\n");
    assert_eq!(cmp("strong", "768543921", "468753921"), "GT\n");
    assert_eq!(cmp("dyck", "(()())", "(()())"), "EQ\n");
    assert_eq!(cmp("tamari", "()(())", "(()())"), "INCOMPARABLE\n");
    assert_eq!(cmp("tamari", "132", "213"), "INCOMPARABLE\n");
    assert_eq!(cmp("weak", "132", "213"), "INCOMPARABLE\n");
    assert_eq!(cmp("dyck", "UDUDUD", "UUUDDD"), "LT\n");
    assert_eq!(cmp("dyck", "()(())", "(())()"), "INCOMPARABLE\n");
    // Outside Av(312) the strong order is searched over all of S_n.
    assert_eq!(cmp("strong", "312", "321"), "LT\n");
}

#[test]
fn lattice_meet_join() {
    assert_eq!(
        stdout(&["lattice", "--order", "dyck", "()(())", "(())()"]),
        "meet: ()()()\njoin: (()())\n"
    );
    assert_eq!(
        stdout(&["lattice", "--order", "tamari", "()(())", "(()())"]),
        "meet: ()()()\njoin: ((()))\n"
    );
    assert_eq!(
        stdout(&["lattice", "--order", "weak", "132", "213"]),
        "meet: 123\njoin: 321\n"
    );
}

#[test]
fn hasse_documents() {
    let dot = stdout(&["hasse", "--order", "dyck", "--n", "3"]);
    assert_eq!(dot.matches("[label=").count(), 5);
    assert_eq!(dot.matches("->").count(), 5);
    let single = stdout(&["hasse", "--order", "tamari", "--n", "1", "--format", "dot"]);
    assert_eq!(
        single,
        "digraph Tamari {\n  rankdir=BT;\n  v0 [label=\"()\"];\n}\n"
    );
    let json = stdout(&["hasse", "--order", "tamari", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["elements"].as_array().unwrap().len(), 5);
    let tamari_edges = doc["covers"].as_array().unwrap().len();
    assert!(
        tamari_edges <= 9,
        "Dyck has 9 strict comparabilities at n=3"
    );
}

#[test]
fn output_is_byte_stable() {
    let cases: [&[&str]; 3] = [
        &["hasse", "--order", "strong", "--n", "4"],
        &[
            "enumerate",
            "--n",
            "5",
            "--kind",
            "spio",
            "--format",
            "json",
        ],
        &["verify", "--max-n", "3"],
    ];
    for args in cases {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_small() {
    let report = stdout(&["verify", "--max-n", "3"]);
    assert!(report.contains("catalan-count n=3: 5"));
    assert!(!report.contains("FAIL"));
    assert!(report.lines().count() > 20);
    let trivial = stdout(&["verify", "--max-n", "1"]);
    assert!(!trivial.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["enumerate", "--n", "3"]), 1);
    assert_eq!(
        code(&["enumerate", "--n", "3", "--kind", "perm", "--bogus"]),
        1
    );
    assert_eq!(code(&["enumerate", "--n", "9", "--kind", "perm"]), 1);
    assert_eq!(code(&["verify", "--max-n", "0"]), 1);
    assert_eq!(code(&["verify", "--max-n", "8"]), 1);
    assert_eq!(code(&["hasse", "--order", "weak", "--n", "7"]), 1);
    assert_eq!(code(&["cmp", "--order", "dyck", "123"]), 1);
    // Domain errors: malformed or unsupported objects.
    assert_eq!(code(&["convert", "--to", "tree", "312"]), 2);
    assert_eq!(code(&["convert", "--to", "tree", "1134"]), 2);
    assert_eq!(code(&["convert", "--to", "perm", "(()"]), 2);
    assert_eq!(
        code(&[
            "convert",
            "--to",
            "perm",
            r#"{"n":4,"pairs":[[1,2],[3,4]]}"#
        ]),
        2
    );
    assert_eq!(code(&["cmp", "--order", "dyck", "123", "()()()"]), 2);
    assert_eq!(code(&["cmp", "--order", "dyck", "12", "123"]), 2);
    let out = run(&["convert", "--to", "tree", "312"]);
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());
}
