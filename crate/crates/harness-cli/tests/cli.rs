//! End-to-end exercises of the `isokit` binary: exit codes and JSON shapes.

use std::io::Write;
use std::process::Command;

fn isokit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isokit"))
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn verify_pass_fail_and_parse_error_exit_codes() {
    // Rainbow C_4 against the cycle target: exit 0.
    let graph = write_temp("Cr\n"); // a labeled 4-cycle: 0-1-3-2-0
    let coloring = write_temp(r#"{"m":4,"colors":[1,2,3,4]}"#);
    let out = isokit()
        .args(["verify", "--input"])
        .arg(graph.path())
        .arg("--coloring")
        .arg(coloring.path())
        .args(["--target", "cycle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("\"verdict\":\"PASS\""));

    // C_3 with an empty fourth class: exit 1, witness is the triangle.
    let graph = write_temp("Bw\n");
    let coloring = write_temp(r#"{"m":4,"colors":[1,2,3]}"#);
    let out = isokit()
        .args(["verify", "--input"])
        .arg(graph.path())
        .arg("--coloring")
        .arg(coloring.path())
        .args(["--target", "cycle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("\"verdict\":\"FAIL\""));
    assert!(stdout.contains("\"class\":4"));
    assert!(stdout.contains("\"witness\":[0,1,2]"));

    // Malformed graph6: exit 2.
    let graph = write_temp("C\n");
    let coloring = write_temp("1 2 3 4");
    let out = isokit()
        .args(["verify", "--input"])
        .arg(graph.path())
        .arg("--coloring")
        .arg(coloring.path())
        .args(["--target", "cycle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn partition_emits_verified_coloring() {
    // K_4 plus a pendant vertex, clique mode with k = 4: all five colors.
    let graph = write_temp("5\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n");
    let out = isokit()
        .args(["partition", "--input"])
        .arg(graph.path())
        .args(["--mode", "clique", "--k", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let payload: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap().trim()).unwrap();
    assert_eq!(payload["certificate"]["verdict"], "PASS");
    let mut colors: Vec<u64> = payload["colors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    colors.sort();
    assert_eq!(colors, vec![1, 2, 3, 4, 5]);

    // K_4 in cycle mode: rainbow pass.
    let graph = write_temp("C~\n");
    let out = isokit()
        .args(["partition", "--input"])
        .arg(graph.path())
        .args(["--mode", "cycle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // C_3 in cycle mode is excluded: exit 2 naming the hypothesis.
    let graph = write_temp("Bw\n");
    let out = isokit()
        .args(["partition", "--input"])
        .arg(graph.path())
        .args(["--mode", "cycle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("triangle"), "stderr: {stderr}");
}

#[test]
fn iota_and_isomatic_values() {
    let graph = write_temp("DUW\n"); // a labeled 5-cycle
    let out = isokit()
        .args(["iota", "--input"])
        .arg(graph.path())
        .args(["--target", "kclique:2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap().trim()).unwrap();
    assert_eq!(payload["value"], 2);
    assert_eq!(payload["aborted"], false);

    let graph = write_temp("Bw\n"); // C_3
    let out = isokit()
        .args(["isomatic", "--input"])
        .arg(graph.path())
        .args(["--target", "cycle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap().trim()).unwrap();
    assert_eq!(payload["value"], 3);

    // dom(K_5) = 5.
    let graph = write_temp("D~{\n"); // K_5
    let out = isokit()
        .args(["isomatic", "--input"])
        .arg(graph.path())
        .args(["--target", "dominate"])
        .output()
        .unwrap();
    let payload: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap().trim()).unwrap();
    assert_eq!(payload["value"], 5);
}

#[test]
fn sweep_writes_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    for out in [&out_a, &out_b] {
        let status = isokit()
            .args(["sweep", "--gen-n", "4", "--gen-connected", "--checks", "all"])
            .args(["--jobs", "2", "--out"])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let a = std::fs::read_to_string(&out_a).unwrap();
    let b = std::fs::read_to_string(&out_b).unwrap();
    assert_eq!(a, b);
    let report: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(report["graphs"], 38);
    assert_eq!(report["aggregate"]["fail"], 0);

    // TSV format renders too.
    let out = isokit()
        .args(["sweep", "--gen-n", "3", "--checks", "bounds", "--format", "tsv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph6\tcheck"));
    assert!(text.contains("PASS") || text.contains("VACUOUS"));
}
