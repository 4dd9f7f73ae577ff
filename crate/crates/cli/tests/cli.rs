//! End-to-end tests driving the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pancyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pancyc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn pancyc_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pancyc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn toughness_of_complete_bipartite() {
    // K_{2,3} is D]o in graph6.
    let output = pancyc(&["toughness", "--g6", "D]o"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "toughness = 2/3");

    let check = pancyc(&["toughness", "--g6", "D]o", "--check", "2/3"]);
    assert_eq!(stdout(&check).trim(), "2/3-tough: true");
    let check = pancyc(&["toughness", "--g6", "D]o", "--check", "1"]);
    assert_eq!(stdout(&check).trim(), "1-tough: false");

    // The canonical realization of the same degree sequence is a different
    // graph; it still carries the sequence.
    let construct = pancyc(&["construct", "--degseq", "2,2,2,3,3"]);
    assert!(construct.status.success());
    assert_eq!(stdout(&construct).trim(), "DU[");
}

#[test]
fn construct_formats_and_check() {
    let output = pancyc(&["construct", "--id", "1.1.2", "--format", "edgelist"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("9 24\n"));

    let output = pancyc(&["construct", "--id", "2.2.1", "--check"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("entry 2.2.1"));
    assert!(text.contains("verified"));
    assert!(!text.contains("REFUTED"));

    let output = pancyc(&["construct", "--id", "2.2.1", "--cycle-type", "5,6"]);
    assert!(output.status.success());

    let bad = pancyc(&["construct", "--id", "nope"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn closure_prints_added_edges_in_order() {
    // C_4 is "Cr" in graph6? Build it from the edge list to be safe.
    let c4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";
    let output = pancyc_with_stdin(&["closure", "--format", "edgelist", "--k", "4"], c4);
    assert!(output.status.success());
    let text = stdout(&output);
    let plus_lines: Vec<&str> = text
        .lines()
        .filter(|l| l.trim_start().starts_with('+'))
        .collect();
    assert_eq!(plus_lines, vec!["  + 0 2", "  + 1 3"]);
    assert!(text.contains("complete: true"));
}

#[test]
fn verify_exit_codes_and_json() {
    // K_7 meets the edge hypothesis and is pancyclic.
    let output = pancyc(&["verify", "--g6", "F~~~w", "--theorem", "edges", "--t", "1"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("confirmed"));

    let output = pancyc(&[
        "verify",
        "--g6",
        "F~~~w",
        "--theorem",
        "q",
        "--q-mode",
        "printed",
        "--json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["theorem"], "SignlessPrinted");
    assert_eq!(value["verdict"], "HypothesisFails");

    // Malformed input is a usage error.
    let output = pancyc(&["verify", "--g6", "!!", "--theorem", "edges"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_small_order_reports_zero_admissible() {
    let output = pancyc(&[
        "sweep",
        "--n",
        "5",
        "--t",
        "1",
        "--theorem",
        "edges",
        "--json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["counts"]["examined"], 1024);
    assert_eq!(value["counts"]["hypothesis_met"], 0);
    assert_eq!(value["counts"]["counterexamples"], 0);
}

#[test]
fn scan_stream_with_diagnostics() {
    let stream = "not-a-graph\nF~~~w\n\n";
    let output = pancyc_with_stdin(
        &[
            "scan",
            "--t",
            "1",
            "--theorem",
            "edges",
            "--workers",
            "2",
            "--json",
        ],
        stream,
    );
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["counts"]["examined"], 1);
    assert_eq!(value["counts"]["confirmed"], 1);
    assert_eq!(value["diagnostics"][0]["line"], 1);
    assert_eq!(value["params"]["workers"], 2);
}

#[test]
fn spectrum_and_threshold_table() {
    let output = pancyc(&["spectrum", "--g6", "F~~~w"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("cycle spectrum: {3,4,5,6,7}"));
    assert!(text.contains("rho = 6.0000000000"));
    assert!(text.contains("q   = 12.0000000000"));

    let output = pancyc(&["spectrum", "--thresholds-csv", "17"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("n,t,edge_threshold,rho_threshold,q_printed,q_corrected"));
    assert!(text.contains("\n7,1,13,"));
    assert!(text.contains("\n17,2,90,"));
}

#[test]
fn classify_json_round_trips() {
    let output = pancyc(&["classify", "--g6", "F~~~w", "--t", "1", "--json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["n"], 7);
    assert_eq!(value["m"], 21);
    assert_eq!(value["toughness"]["finite"], false);
    assert_eq!(value["pancyclic"], true);
    assert_eq!(value["theorems"].as_array().unwrap().len(), 5);
}

#[test]
fn edgelist_input_from_file() {
    let dir = std::env::temp_dir().join("pancyc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let output = pancyc(&[
        "toughness",
        "--file",
        path.to_str().unwrap(),
        "--format",
        "edgelist",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "toughness = 1");
}
