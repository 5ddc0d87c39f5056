//! End-to-end checks of the command-line surface: subcommands, formats,
//! exit codes, and report determinism.

use std::process::Command;

fn weilrep() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weilrep"))
}

#[test]
fn fourier_text_output_and_exit_code() {
    let out = weilrep()
        .args(["fourier", "--n", "1"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS fourier/lattice-transform-formula hat(phi_m) = 2^-m phi_(-m)"));
    assert!(text.contains("PASS fourier/inversion"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn self_test_fails_with_exit_one() {
    let out = weilrep()
        .args(["fourier", "--n", "1", "--self-test"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL fourier/self-test-corrupted-transform"));
}

#[test]
fn json_report_schema() {
    let out = weilrep()
        .args(["finite-indices", "--format", "json", "--n", "2"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &parsed[0];
    assert_eq!(report["suite"], "finite-indices");
    assert_eq!(report["config"]["n"], 2);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for check in checks {
        assert_eq!(check["status"], "pass");
        assert!(!check["anchor"].as_str().unwrap().is_empty());
    }
    assert_eq!(report["summary"]["fail"], 0);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let run = || {
        weilrep()
            .args(["hecke", "--n", "1", "--max-len", "3", "--seed", "7", "--format", "json"])
            .output()
            .expect("binary runs")
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn out_file_is_written() {
    let dir = std::env::temp_dir().join(format!("weilrep-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = weilrep()
        .args([
            "minimal-type",
            "--n",
            "1",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let contents = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(parsed[0]["suite"], "minimal-type");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_arguments_exit_with_two() {
    let out = weilrep()
        .args(["hecke", "--n", "9"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = weilrep()
        .args(["fourier", "--format", "yaml"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}
