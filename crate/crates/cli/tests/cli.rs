//! End-to-end command tests over the checked-in fixtures. Exit codes:
//! 0 = all checks pass, 1 = verified mathematical failure, 2 = input error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfact"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn validate_passes_on_the_sweedler_fixture() {
    let out = run(&["validate", fixture("sweedler_action.hft").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("hopf H4: PASS"));
    assert!(text.contains("action sw: PASS"));
}

#[test]
fn validate_flags_corrupted_tensors_with_witnesses() {
    let out = run(&["validate", fixture("corrupted.hft").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    assert!(text.contains("witnesses"));
}

#[test]
fn validate_reports_missing_files_as_usage_errors() {
    let out = run(&["validate", "/no/such/file.hft"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_accepts_rank_one_datum_files() {
    let out = run(&["validate", fixture("radford22.hft").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("rankone R22: PASS"));
}

#[test]
fn extend_reports_all_three_regimes() {
    let path = fixture("sweedler_action.hft");
    let path = path.to_str().unwrap();

    // valid w (anticommutes with Omega up to a central element)
    let out = run(&["extend", path, "--w", "0,1,0,0", "--symmetric"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("summation and pointwise conditions hold"));

    // central-but-nonzero anticommutator: still a valid extension, but the
    // pointwise condition separates
    let out = run(&["extend", path, "--w", "0,0,1,0", "--symmetric"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("summation holds but the pointwise condition fails"));

    // non-central anticommutator: failing report with witness
    let out = run(&["extend", path, "--w", "1,0,0,0", "--symmetric"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("summation condition fails"));
    assert!(text.contains("witness"));
    assert!(text.contains("PA.3 FAIL"));

    // cap 0 degenerates to the base action
    let out = run(&["extend", path, "--w", "0,1,0,0", "--cap", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("base action"));

    // malformed w is a usage error
    let out = run(&["extend", path, "--w", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_matches_on_taft_and_radford() {
    let target = fixture("targets.hft");
    let target = target.to_str().unwrap();
    for family in ["taft(2,2,q2)", "radford(2,2,q2)"] {
        let out = run(&["classify", "--family", family, "--target", target]);
        assert_eq!(out.status.code(), Some(0), "{family}: {}", stdout(&out));
        assert!(stdout(&out).contains("match: true"));
    }
    // datum read from a rankone fixture file
    let radford = format!("rankone({})", fixture("radford22.hft").display());
    let out = run(&["classify", "--family", &radford, "--target", target]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // unknown family: usage error
    let out = run(&["classify", "--family", "unknown", "--target", target]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_writes_deterministic_certificates() {
    let target = fixture("targets.hft");
    let dir = std::env::temp_dir();
    let p1 = dir.join("hopfact-cert-1.txt");
    let p2 = dir.join("hopfact-cert-2.txt");
    for p in [&p1, &p2] {
        let out = run(&[
            "classify",
            "--family",
            "sweedler",
            "--target",
            target.to_str().unwrap(),
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let c1 = std::fs::read_to_string(&p1).unwrap();
    let c2 = std::fs::read_to_string(&p2).unwrap();
    assert_eq!(c1, c2, "certificates must be byte-deterministic");
    assert!(c1.contains("certificate-schema: 1"));
    let _ = std::fs::remove_file(&p1);
    let _ = std::fs::remove_file(&p2);
}

#[test]
fn family_round_trips_through_validate() {
    let dir = std::env::temp_dir();
    let path = dir.join("hopfact-family-taft.hft");
    let out = run(&["family", "taft(4,2,q2)", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let _ = std::fs::remove_file(&path);

    let out = run(&["family", "nichols(3)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim: 8"));
}

#[test]
fn selftest_filters_and_detects_mutations() {
    let out = run(&["selftest", "--filter", "panov"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    // a mutated identity must fail and name the criterion
    let out = run(&["selftest", "--filter", "qcomb", "--mutate", "qcomb-idq"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("q-combinatorics suite"));
    assert!(stdout(&out).contains("FAIL"));

    // filter with no match is a usage error
    let out = run(&["selftest", "--filter", "zzz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cyclotomic_scalars_flow_through_fixtures() {
    // conductor-3 entries (cyclo(3)[...]) parse from the file, the Ore
    // datum resolves with chi(g) = zeta_3, and the extension verifies
    let path = fixture("cyclic3_action.hft");
    let path = path.to_str().unwrap();
    let out = run(&["validate", path]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("order Some(3)"));
    let out = run(&["extend", path, "--w", "1,2", "--symmetric"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("summation and pointwise conditions hold"));
}
