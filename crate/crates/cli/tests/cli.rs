use std::process::{Command, Output};

use qaffine_core::labeled::QuiverDoc;
use serde_json::Value;

fn qaffine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaffine"))
        .args(args)
        .output()
        .expect("spawn qaffine")
}

fn json(args: &[&str]) -> Value {
    let out = qaffine(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

const A2: &[&str] = &[
    "ar-quiver",
    "--type",
    "A",
    "--rank",
    "2",
    "--arrows",
    "1>2",
    "--base",
    "2=0",
];

#[test]
fn ar_quiver_a2_json_has_three_vertices() {
    let v = json(&[A2, &["--format", "json"]].concat());
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 2);
}

#[test]
fn ar_quiver_a2_dot_has_three_nodes() {
    let out = qaffine(&[A2, &["--format", "dot"]].concat());
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (3, 2));
}

#[test]
fn dot_repeats_edges_by_multiplicity() {
    // D4^(1) has d_{2,2} with a double zero at q^4, so (2,1) -> (2,q^4) is a double arrow.
    let out = qaffine(&["se-quiver", "--g", "D1", "--N", "4", "--bound", "4", "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    let v = json(&["se-quiver", "--g", "D1", "--N", "4", "--bound", "4"]);
    let total: u64 = v["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["mult"].as_u64().unwrap())
        .sum();
    assert!(v["arrows"].as_array().unwrap().iter().any(|a| a["mult"] == 2));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count() as u64, total);
}

#[test]
fn quiver_json_round_trips() {
    let cases: &[&[&str]] = &[
        A2,
        &["ar-quiver", "--type", "D", "--rank", "5", "--arrows", "1>2,3>2,3>4,5>3"],
        &["se-quiver", "--g", "A2", "--N", "4", "--bound", "6"],
        &[
            "schur-weyl",
            "--type",
            "A",
            "--rank",
            "4",
            "--arrows",
            "1>2,3>2,3>4",
            "--t",
            "2",
        ],
    ];
    for args in cases {
        let v = json(args);
        let doc: QuiverDoc = serde_json::from_value(v.clone()).expect("quiver doc");
        let quiver = doc.to_quiver().expect("consistent doc");
        let label = |id: usize| doc.vertices.iter().find(|v| v.id == id).unwrap().label.clone();
        let mut from_doc: Vec<_> = doc
            .arrows
            .iter()
            .map(|a| (label(a.src), label(a.dst), a.mult))
            .collect();
        let mut from_quiver = quiver.labeled_arrows();
        from_doc.sort();
        from_quiver.sort();
        assert_eq!(from_doc, from_quiver, "{args:?}");
        assert_eq!(quiver.vertices().len(), doc.vertices.len());
        let again = serde_json::to_value(&doc).unwrap();
        assert_eq!(again["vertices"], v["vertices"]);
        assert_eq!(again["arrows"], v["arrows"]);
    }
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &[
            "ar-quiver",
            "--type",
            "D",
            "--rank",
            "6",
            "--arrows",
            "2>1,2>3,4>3,4>5,6>4",
            "--format",
            "dot",
        ],
        &["se-quiver", "--g", "D2", "--N", "5", "--bound", "6"],
        &["minimal-pairs", "--type", "D", "--rank", "4", "--arrows", "1>2,3>2,4>2"],
        &["verify", "--check", "pi_duality", "--max-rank", "4"],
    ];
    for args in cases {
        let a = qaffine(args);
        let b = qaffine(args);
        assert!(a.status.success());
        let strip = |o: &Output| -> Value {
            let mut v: Value = serde_json::from_slice(&o.stdout).unwrap_or(Value::Null);
            // Timing is the only field allowed to differ between runs.
            if let Some(reports) = v.as_array_mut() {
                for r in reports {
                    r.as_object_mut().unwrap().remove("elapsed_ms");
                }
            }
            v
        };
        if args[0] == "verify" {
            assert_eq!(strip(&a), strip(&b));
        } else {
            assert_eq!(a.stdout, b.stdout, "{args:?}");
        }
    }
}

#[test]
fn usage_errors_exit_2() {
    let bad: &[&[&str]] = &[
        &["ar-quiver", "--type", "A", "--rank", "1", "--arrows", ""],
        &["ar-quiver", "--type", "A", "--rank", "3", "--arrows", "1>2"],
        &["ar-quiver", "--type", "A", "--rank", "3", "--arrows", "1>3,2>3"],
        &["denominator", "--g", "D1", "--N", "4", "--k", "9", "--l", "1"],
        &[
            "dorey", "--g", "A1", "--N", "3", "--i", "1", "--x", "qq", "--j", "1", "--y", "q^1", "--k", "2", "--z",
            "q^0",
        ],
        &["verify", "--check", "no_such_check"],
        &["no-such-subcommand"],
    ];
    for args in bad {
        assert_eq!(qaffine(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dorey_verdicts() {
    let run = |g: &str, n: &str, t: [(&str, &str); 3]| {
        let out = qaffine(&[
            "dorey", "--g", g, "--N", n, "--i", t[0].0, "--x", t[0].1, "--j", t[1].0, "--y", t[1].1, "--k", t[2].0,
            "--z", t[2].1,
        ]);
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap().trim_end().to_string()
    };
    assert_eq!(
        run("A1", "3", [("1", "(-q)^-1"), ("1", "(-q)^1"), ("2", "q^0")]),
        r#"{"holds":true,"condition":"A-i","pole":"simple"}"#
    );
    assert_eq!(
        run("A1", "3", [("3", "(-q)^-1"), ("3", "(-q)^1"), ("2", "q^0")]),
        r#"{"holds":true,"condition":"A-ii","pole":"simple"}"#
    );
    assert_eq!(
        run("D1", "4", [("2", "(-q)^-2"), ("2", "(-q)^2"), ("2", "q^0")]),
        r#"{"holds":true,"condition":"D-ii","pole":"double"}"#
    );
    assert_eq!(
        run("A1", "3", [("1", "q^0"), ("1", "q^0"), ("2", "q^0")]),
        r#"{"holds":false}"#
    );

    // Twisted verdicts carry the untwisted lift that witnesses them.
    let v: Value = serde_json::from_str(&run("A2", "3", [("1", "(-q)^-1"), ("1", "(-q)^1"), ("2", "q^0")])).unwrap();
    assert_eq!(v["holds"], true);
    assert!(v["witness"]["triple"].is_array());
}

#[test]
fn embed_pair_signals() {
    let v = json(&[
        "embed-pair",
        "--g",
        "A1",
        "--N",
        "3",
        "--i",
        "1",
        "--x",
        "q^0",
        "--j",
        "3",
        "--y",
        "(-q)^4",
    ]);
    assert_eq!(v["found"], false);
    assert_eq!(v["reason"], "dual_pair");
    let v = json(&[
        "embed-pair",
        "--g",
        "A1",
        "--N",
        "3",
        "--i",
        "1",
        "--x",
        "q^0",
        "--j",
        "2",
        "--y",
        "(-q)^1",
    ]);
    assert_eq!(v["reason"], "not_adjacent");
    let v = json(&[
        "embed-pair",
        "--g",
        "D1",
        "--N",
        "4",
        "--i",
        "1",
        "--x",
        "q^0",
        "--j",
        "2",
        "--y",
        "(-q)^3",
    ]);
    assert_eq!(v["found"], true);
    assert_eq!(v["validated"], true);
}

#[test]
fn verify_reports_pass_and_omit_counterexample() {
    let out = qaffine(&["verify", "--check", "all", "--max-rank", "4", "--sequential"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 12);
    for r in reports {
        assert_eq!(r["passed"], true, "{r}");
        assert!(r.get("counterexample").is_none());
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qaffine-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.json");
    let out = qaffine(&[
        "--out",
        path.to_str().unwrap(),
        "denominator",
        "--g",
        "A1",
        "--N",
        "3",
        "--k",
        "1",
        "--l",
        "1",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains(r#""roots":[{"root":"q^2","mult":1}]"#));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn minimal_pairs_accepts_both_root_syntaxes() {
    let base = [
        "minimal-pairs",
        "--type",
        "A",
        "--rank",
        "3",
        "--arrows",
        "1>2,2>3",
        "--alpha",
    ];
    let a = qaffine(&[&base[..], &["a1+a2+a3"]].concat());
    let b = qaffine(&[&base[..], &["1,1,1"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["pairs"].as_array().unwrap().iter().all(|p| p["condition"] == "A-i"));
}
