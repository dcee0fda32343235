//! End-to-end tests of the `zcosmo` binary: table acquisition, cache
//! lifecycle, exit codes, and report stability.

use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_zcosmo");
const FIXTURE: &str =
    concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/zeros_first_100.txt");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawning the zcosmo binary")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr is UTF-8")
}

fn json_summary(out: &Output) -> serde_json::Value {
    let doc: serde_json::Value = serde_json::from_str(stdout_of(out)).expect("stdout is JSON");
    doc["summary"].clone()
}

#[test]
fn zeros_on_a_supplied_table_lists_the_covered_ordinates() {
    let out = run(&["zeros", "--range", "0", "100", "--zeros", FIXTURE]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines[0], "gamma");
    assert_eq!(lines.len(), 1 + 29, "one header row plus the 29 ordinates below 100");
    assert!(lines[1].starts_with("14.134725141735"));
    assert!(lines[29].starts_with("98.831194218194"));
    let summary = stderr_of(&out)
        .lines()
        .find(|l| l.starts_with("# summary:"))
        .expect("csv mode reports its summary on stderr");
    assert!(summary.contains("\"count\":29"), "summary line: {summary}");
}

#[test]
fn usage_errors_exit_two_and_module_errors_exit_one() {
    let bad_flag = run(&["eval", "--t", "not-a-number"]);
    assert_eq!(bad_flag.status.code(), Some(2));

    let uncovered = run(&["cosmo-scan", "--range", "20", "1000", "--zeros", FIXTURE]);
    assert_eq!(uncovered.status.code(), Some(1));
    assert!(
        stderr_of(&uncovered).contains("insufficient table"),
        "stderr: {}",
        stderr_of(&uncovered)
    );

    let reversed = run(&["zeros", "--range", "50", "10", "--zeros", FIXTURE]);
    assert_eq!(reversed.status.code(), Some(1));
}

#[test]
fn cache_is_written_reused_and_downgraded_on_config_change() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cache = dir.path().to_str().unwrap();

    let first = run(&["zeros", "--range", "0", "40", "--cache", cache, "--format", "json"]);
    assert!(first.status.success(), "stderr: {}", stderr_of(&first));
    assert_eq!(json_summary(&first)["source"], "computed");
    assert!(dir.path().join("zeros.txt").exists());
    assert!(dir.path().join("zeros.txt.meta").exists());

    let second = run(&["zeros", "--range", "0", "40", "--cache", cache, "--format", "json"]);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "a cache hit must not change the report");
    assert!(stderr_of(&second).contains("cache"), "second run should hit the cache");

    // A different evaluation config invalidates the stored hash; the data
    // is still usable but loses its computed provenance.
    let stale =
        run(&["zeros", "--range", "0", "40", "--cache", cache, "--format", "json", "--abs-err", "1e-8"]);
    assert!(stale.status.success(), "stderr: {}", stderr_of(&stale));
    assert_eq!(json_summary(&stale)["source"], "ingested");
    assert!(stderr_of(&stale).contains("stale config"));
}

#[test]
fn corrupt_cache_is_recomputed_and_overwritten() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cache = dir.path().to_str().unwrap();
    std::fs::write(dir.path().join("zeros.txt"), "garbage\nmore garbage\n").unwrap();
    std::fs::write(dir.path().join("zeros.txt.meta"), "h_max=banana\n").unwrap();

    let out = run(&["zeros", "--range", "0", "40", "--cache", cache, "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(stderr_of(&out).contains("cache unreadable"));
    assert_eq!(json_summary(&out)["source"], "computed");
    assert_eq!(json_summary(&out)["count"], 6, "six ordinates below 40");

    // The rewritten cache must be valid again.
    let again = run(&["zeros", "--range", "0", "40", "--cache", cache, "--format", "json"]);
    assert!(again.status.success());
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn export_writes_a_reingestable_table() {
    let dir = tempfile::tempdir().expect("tempdir");
    let exported = dir.path().join("table.txt");
    let out = run(&[
        "export",
        "--range",
        "0",
        "100",
        "--zeros",
        FIXTURE,
        "--out",
        exported.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));

    let sidecar = std::fs::read_to_string(exported.with_extension("txt.meta")).unwrap();
    for key in ["h_max=", "abs_error=", "source=", "config_hash="] {
        assert!(sidecar.contains(key), "sidecar missing {key}: {sidecar}");
    }

    let reread = run(&["zeros", "--range", "0", "100", "--zeros", exported.to_str().unwrap()]);
    assert!(reread.status.success(), "stderr: {}", stderr_of(&reread));
    let direct = run(&["zeros", "--range", "0", "100", "--zeros", FIXTURE]);
    assert_eq!(reread.stdout, direct.stdout, "an export round-trip must preserve the report");
}

#[test]
fn export_requires_an_output_path() {
    let out = run(&["export", "--range", "0", "100", "--zeros", FIXTURE]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("--out"), "stderr: {}", stderr_of(&out));
}

#[test]
fn eval_reports_are_byte_identical_across_formats_and_reruns() {
    for format in ["csv", "json"] {
        let a = run(&["eval", "--t", "1000.2", "--format", format]);
        let b = run(&["eval", "--t", "1000.2", "--format", format]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format} rerun changed bytes");
    }
}

#[test]
fn output_path_receives_the_report_instead_of_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.csv");
    let out = run(&["eval", "--t", "25.0", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty(), "report should go to the file, not stdout");
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.starts_with("t,z,dz,d2z,theta,dtheta\n"));
    assert!(contents.contains("25.000000000000,-0.014872483898"));
}

#[test]
fn threads_flag_does_not_change_the_report() {
    let one = run(&["cosmo-scan", "--range", "20", "60", "--zeros", FIXTURE, "--threads", "1"]);
    let two = run(&["cosmo-scan", "--range", "20", "60", "--zeros", FIXTURE, "--threads", "2"]);
    assert!(one.status.success(), "stderr: {}", stderr_of(&one));
    assert!(two.status.success());
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn verify_sums_accepts_a_single_point_or_a_range() {
    let single = run(&["verify-sums", "--t", "60.2", "--zeros", FIXTURE]);
    assert!(single.status.success(), "stderr: {}", stderr_of(&single));
    let lines: Vec<&str> = stdout_of(&single).lines().collect();
    assert_eq!(lines.len(), 2, "header plus one row");
    assert!(lines[1].ends_with(",plus,0.166112956811"), "row: {}", lines[1]);

    let both = run(&["verify-sums", "--t", "60.2", "--range", "50", "60", "--zeros", FIXTURE]);
    assert_eq!(both.status.code(), Some(2), "--t and --range are mutually exclusive");
}

#[test]
fn fixture_path_is_present() {
    // Guard against the fixture moving: every test above depends on it.
    assert!(Path::new(FIXTURE).exists(), "missing fixture {FIXTURE}");
}
