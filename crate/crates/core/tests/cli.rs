use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn stirling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirling")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn write_temp(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const P3: [&str; 4] = ["--graph", "P3", "--colors", "2,2,1"];

#[test]
fn count_json_and_tsv_agree() {
    let args = ["count", "--graph", "K5", "--colors", "2,1,1,1,1"];
    let j = stirling(&args);
    assert_eq!(j.status.code(), Some(0));
    let report = json(&j);
    assert_eq!(report["f_vector"], serde_json::json!(["840", "3120"]));
    assert_eq!(report["formula"]["agrees"], true);
    assert_eq!(report["formula"]["wedge_count"], "2281");

    let t = stirling(&[&args[..], &["--format", "tsv"]].concat());
    let lines: Vec<(String, String)> = stdout(&t)
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('\t').unwrap();
            (k.to_string(), v.to_string())
        })
        .collect();
    let get = |k: &str| lines.iter().find(|(key, _)| key == k).map(|(_, v)| v.clone()).unwrap();
    assert_eq!(get("f_vector"), "840,3120");
    assert_eq!(get("euler_characteristic"), report["euler_characteristic"].as_str().unwrap());
    assert_eq!(get("formula.family"), "two-one");
    assert_eq!(get("vertices"), "5");
}

#[test]
fn count_without_formula_family() {
    let o = stirling(&["count", "--graph", "P3", "--colors", "2,2,1"]);
    let report = json(&o);
    assert_eq!(report["f_vector"], serde_json::json!(["21", "32", "10"]));
    assert!(report["formula"].is_null());
}

#[test]
fn empty_complex_exits_three() {
    let o = stirling(&["count", "--graph", "P4", "--colors", "1,1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["empty"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(stirling(&["count", "--colors", "1,1"]).status.code(), Some(2));
    assert_eq!(stirling(&["count", "--graph", "Q3", "--colors", "1,1"]).status.code(), Some(2));
    assert_eq!(stirling(&["count", "--graph", "P3", "--colors", "0,1"]).status.code(), Some(2));
    let bad = write_temp("3 2\n0 1\n1 1\n");
    let o = stirling(&["count", "--graph-file", bad.path().to_str().unwrap(), "--colors", "2,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn graph_file_matches_named_graph() {
    let f = write_temp("# star\n4 3\n0 1\n0 2\n0 3\n");
    let from_file = stirling(&["count", "--graph-file", f.path().to_str().unwrap(), "--colors", "3,3,3"]);
    let named = stirling(&["count", "--graph", "T4", "--colors", "3,3,3"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(json(&from_file)["f_vector"], json(&named)["f_vector"]);
    assert_eq!(json(&from_file)["formula"]["family"], "uniform");
}

#[test]
fn enumerate_lists_each_dimension() {
    for (dim, count) in [("0", 21), ("1", 32), ("2", 10)] {
        let o = stirling(&[&["enumerate", "--dim", dim][..], &P3].concat());
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().count(), count);
    }
    let o = stirling(&[&["enumerate", "--format", "json"][..], &P3].concat());
    let report = json(&o);
    assert_eq!(report["count"], 63);
    assert_eq!(report["cells"].as_array().unwrap().len(), 63);
}

#[test]
fn components_and_skeleton() {
    let o = stirling(&["components", "--graph", "T4", "--colors", "3,2"]);
    let report = json(&o);
    assert_eq!(report["components"], 3);
    assert_eq!(report["sizes"], serde_json::json!([4, 4, 4]));

    let o = stirling(&[&["skeleton"][..], &P3].concat());
    let report = json(&o);
    assert_eq!((report["nodes"].as_u64(), report["arcs"].as_u64()), (Some(21), Some(32)));

    let o = stirling(&[&["skeleton", "--export", "edges"][..], &P3].concat());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("21 32"));
    assert_eq!(lines.count(), 32);
    let o = stirling(&[&["skeleton", "--export", "nodes"][..], &P3].concat());
    assert_eq!(stdout(&o).lines().count(), 21);
}

#[test]
fn plan_round_trips_through_verify() {
    let from = "{0,1}|{0,2}|{0}";
    let to = "{1,2}|{0,2}|{2}";
    for mode in ["constructive", "bfs"] {
        let o = stirling(&[&["plan", "--from", from, "--to", to, "--mode", mode][..], &P3].concat());
        assert_eq!(o.status.code(), Some(0), "{mode}");
        let file = write_temp(&stdout(&o));
        let v = stirling(&[&["verify", file.path().to_str().unwrap()][..], &P3].concat());
        assert_eq!(v.status.code(), Some(0));
        assert_eq!(json(&v)["valid"], true);
    }

    let o = stirling(&[&["plan", "--from", from, "--to", to, "--format", "json"][..], &P3].concat());
    let report = json(&o);
    assert_eq!(report["end"], to);
    assert_eq!(report["length"].as_u64().unwrap() as usize, report["moves"].as_array().unwrap().len());
}

#[test]
fn verify_reports_the_failing_step() {
    let start = "{0,1}|{0,2}|{0}";
    let end = "{0,1}|{0,2}|{1}";
    let tampered = write_temp(&format!("{start}\n2 0 1\n2 0 1\n# end: {end}\n"));
    let v = stirling(&[&["verify", tampered.path().to_str().unwrap()][..], &P3].concat());
    assert_eq!(v.status.code(), Some(1));
    let report = json(&v);
    assert_eq!(report["valid"], false);
    assert_eq!(report["step"], 2);

    let bad_start = write_temp(&format!("{{0}}|{{0,2}}|{{0}}\n# end: {end}\n"));
    let v = stirling(&[&["verify", bad_start.path().to_str().unwrap()][..], &P3].concat());
    assert_eq!(json(&v)["step"], 0);

    let short = write_temp(&format!("{start}\n# end: {end}\n"));
    let v = stirling(&[&["verify", short.path().to_str().unwrap(), "--format", "tsv"][..], &P3].concat());
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).starts_with("valid\tfalse\nstep\t1\n"));

    let ok = stirling(&[&["verify", short.path().to_str().unwrap(), "--end", start][..], &P3].concat());
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn unreachable_and_unmet_hypotheses() {
    let y = ["--graph", "T4", "--colors", "3,2"];
    let a = "{0,1,2}|{0,3}";
    let b = "{0,1,3}|{0,2}";
    let o = stirling(&[&["components", "--format", "json"][..], &y].concat());
    assert_eq!(json(&o)["components"], 3);
    let bfs = stirling(&[&["plan", "--from", a, "--to", b, "--mode", "bfs"][..], &y].concat());
    let constructive = stirling(&[&["plan", "--from", a, "--to", b][..], &y].concat());
    assert_eq!(constructive.status.code(), Some(4));
    assert_eq!(bfs.status.code(), Some(3));
    let near = stirling(&[&["plan", "--from", a, "--to", "{1,2,3}|{0,3}", "--mode", "bfs"][..], &y].concat());
    assert_eq!(near.status.code(), Some(0));
    assert_eq!(stdout(&near).lines().count(), 3);
}

#[test]
fn thread_count_does_not_change_counts() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_stirling"))
            .args(["count", "--graph", "K5", "--colors", "4,4,4"])
            .env("STIRLING_THREADS", threads)
            .output()
            .unwrap();
        json(&o)["f_vector"].clone()
    };
    assert_eq!(run("1"), run("4"));
}
