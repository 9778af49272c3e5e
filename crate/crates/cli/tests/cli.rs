use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tcluster::oracle::{counterexample_five, gen_planted, gen_random};
use tcluster::Params;
use tcluster_cli::{parse_tg, run, serialise_tg};

fn write(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["tcluster"];
    argv.extend_from_slice(args);
    let out = run(argv);
    let doc = if out.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&out.stdout).unwrap()
    };
    (out.code, doc)
}

fn ce5_file() -> PathBuf {
    write("ce5.tg", &serialise_tg(&counterexample_five(3)))
}

#[test]
fn recognize_reports_the_violating_subset() {
    let f = ce5_file();
    let (code, doc) = call(&["recognize", "--d1", "2", "--d2", "3", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(
        doc,
        serde_json::json!({"answer": "no", "violating_subset": ["a", "b", "c", "d", "e"]})
    );

    let f = write("clique.tg", "tgraph 1\nedge a b 1 2\nedge b c 1 2\nedge a c 2\n");
    let (code, doc) = call(&["recognize", "--d1", "2", "--d2", "3", f.to_str().unwrap()]);
    assert_eq!((code, doc["answer"].as_str()), (0, Some("yes")));
}

#[test]
fn complete_places_the_canonical_addition() {
    let f = write("twogap.tg", "tgraph 1\nedge u v 1 4\n");
    let (code, doc) = call(&["complete", "--d1", "2", "--d2", "4", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        doc,
        serde_json::json!({"min_additions": 1, "modifications": [{"op": "add", "u": "u", "v": "v", "t": 3}]})
    );
    let (code, doc) = call(&[
        "complete",
        "--d1",
        "2",
        "--d2",
        "4",
        "--budget",
        "0",
        f.to_str().unwrap(),
    ]);
    assert_eq!((code, doc["answer"].as_str()), (1, Some("no")));
}

#[test]
fn fpt_edit_finds_a_size_two_witness() {
    let f = ce5_file();
    let (code, doc) = call(&[
        "edit",
        "--algo",
        "fpt",
        "--d1",
        "2",
        "--d2",
        "3",
        "--budget",
        "2",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["answer"], "yes");
    assert_eq!(doc["min_cost"], 2);
    assert_eq!(doc["modifications"].as_array().unwrap().len(), 2);
    let (code, doc) = call(&[
        "edit",
        "--algo",
        "fpt",
        "--d1",
        "2",
        "--d2",
        "3",
        "--budget",
        "1",
        f.to_str().unwrap(),
    ]);
    assert_eq!((code, &doc["answer"]), (1, &Value::from("no")));
}

#[test]
fn path_dp_edit_and_its_errors() {
    let f = write("path.tg", "tgraph 1\nedge v1 v2 1 2\nedge v2 v3 2\n");
    let (code, doc) = call(&[
        "edit",
        "--algo",
        "path-dp",
        "--d1",
        "1",
        "--d2",
        "2",
        f.to_str().unwrap(),
    ]);
    assert_eq!((code, &doc["min_cost"]), (0, &Value::from(1)));
    assert!(doc.get("answer").is_none());
    let (code, _) = call(&[
        "edit",
        "--algo",
        "path-dp",
        "--d1",
        "1",
        "--d2",
        "2",
        "--budget",
        "0",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let (code, _) = call(&[
        "edit",
        "--algo",
        "path-dp",
        "--d1",
        "2",
        "--d2",
        "3",
        ce5_file().to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
}

#[test]
fn usage_parse_and_scale_errors_exit_two() {
    let ok = write("ok.tg", "tgraph 1\nedge a b 1\n");
    let bad = write("bad.tg", "tgraph 1\nedge a a 1\n");
    let big = write("big.tg", "tgraph 1\nedge a b 9\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["recognize", "--d1", "2", ok.to_str().unwrap()],
        vec!["recognize", "--d1", "3", "--d2", "3", ok.to_str().unwrap()],
        vec!["recognize", "--d1", "1", "--d2", "2", bad.to_str().unwrap()],
        vec!["recognize", "--d1", "1", "--d2", "2", "/nonexistent/file.tg"],
        vec!["edit", "--algo", "fpt", "--d1", "1", "--d2", "2", ok.to_str().unwrap()],
        vec![
            "edit",
            "--algo",
            "oracle",
            "--d1",
            "1",
            "--d2",
            "2",
            "--budget",
            "1",
            big.to_str().unwrap(),
        ],
        vec![
            "edit",
            "--algo",
            "oracle",
            "--d1",
            "1",
            "--d2",
            "2",
            "--budget",
            "1",
            "--caps",
            "7,6",
            ok.to_str().unwrap(),
        ],
        vec!["frobnicate"],
    ];
    for args in cases {
        let mut argv = vec!["tcluster"];
        argv.extend(&args);
        let out = run(argv);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    // raising the caps lets the oracle run
    let (code, _) = call(&[
        "edit",
        "--algo",
        "oracle",
        "--d1",
        "1",
        "--d2",
        "2",
        "--budget",
        "0",
        "--caps",
        "7,9,3",
        big.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
}

#[test]
fn oracle_and_fpt_agree() {
    for seed in 0..40u64 {
        let p = Params::new(1 + (seed % 2) as u32, 3).unwrap();
        let g = if seed % 2 == 0 {
            gen_random(5, 4, 0.6, 0.4, seed).unwrap()
        } else {
            gen_planted(5, 5, p, seed, 2).unwrap()
        };
        let f = write(&format!("agree{seed}.tg"), &serialise_tg(&g));
        let (d1, d2) = (p.delta1().to_string(), p.delta2().to_string());
        for k in ["0", "1", "2"] {
            let common = [
                "--d1",
                d1.as_str(),
                "--d2",
                d2.as_str(),
                "--budget",
                k,
                f.to_str().unwrap(),
            ];
            let (c1, fpt) = call(&[&["edit", "--algo", "fpt"][..], &common].concat());
            let (c2, oracle) = call(&[&["edit", "--algo", "oracle", "--threads", "2"][..], &common].concat());
            assert_eq!(c1, c2, "seed {seed} k {k}");
            assert_eq!(fpt["answer"], oracle["answer"]);
            assert_eq!(fpt["min_cost"], oracle["min_cost"]);
        }
    }
}

#[test]
fn partition_lists_blocks() {
    let f = write("blocks.tg", "tgraph 1\nedge a b 1\nedge b c 2\nedge c d 9\n");
    let (code, doc) = call(&["partition", "--d2", "3", "--d1", "1", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    let blocks = doc["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0]["vertices"], serde_json::json!(["a", "b", "c"]));
    assert_eq!(blocks[0]["interval"], serde_json::json!([1, 2]));
    assert_eq!(blocks[0]["clique"], false);
    assert_eq!(
        blocks[1]["time_edges"],
        serde_json::json!([{"u": "c", "v": "d", "t": 9}])
    );
}

#[test]
fn reduce_tm_spreads_times() {
    let f = write("tm.tg", "tgraph 1\nedge v1 v2 1\nedge v2 v3 2\n");
    let (code, doc) = call(&["reduce-tm", "--k", "1", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        (doc["d1"].as_u64(), doc["d2"].as_u64(), doc["budget"].as_u64()),
        (Some(1), Some(5), Some(1))
    );
    let g = parse_tg(doc["graph"].as_str().unwrap()).unwrap();
    let id = |l| g.vertex_id(l).unwrap();
    assert_eq!(g.times(id("v1"), id("v2")), &[1]);
    assert_eq!(g.times(id("v2"), id("v3")), &[5]);
    assert!(doc.get("warning").is_none());
    let (_, doc) = call(&["reduce-tm", "--k", "1", "--delta", "3", f.to_str().unwrap()]);
    assert!(doc["warning"].is_string());
    let (code, _) = call(&["reduce-tm", "--k", "3", f.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn gen_is_deterministic_and_writes_files() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gen.tg");
    let args = [
        "gen",
        "--model",
        "planted",
        "--n",
        "6",
        "--lifetime",
        "7",
        "--seed",
        "5",
        "--d1",
        "2",
        "--d2",
        "3",
    ];
    let (code, a) = call(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
    let (_, b) = call(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a["model"], "planted");
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(a["graph"].as_str().unwrap(), text);
    let (code, doc) = call(&["recognize", "--d1", "2", "--d2", "3", out.to_str().unwrap()]);
    assert_eq!((code, &doc["answer"]), (0, &Value::from("yes")));
    let (code, doc) = call(&[
        "gen",
        "--model",
        "random",
        "--n",
        "3",
        "--lifetime",
        "2",
        "--edge-prob",
        "0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["graph"], "tgraph 1\nvertex 0 1 2\n");
}

#[test]
fn binary_prints_one_document_and_sets_the_exit_code() {
    let f = ce5_file();
    let out = Command::new(env!("CARGO_BIN_EXE_tcluster"))
        .args(["recognize", "--d1", "2", "--d2", "3", f.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["answer"], "no");
    assert!(out.stderr.is_empty());
}
