//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line. Every comparison is exact; run `cargo test --test acceptance --
//! --nocapture` to see the summary lines.

use hopfact::acceptance::{
    criterion_classification, criterion_derived_examples, criterion_factorization,
    criterion_formula_necessity, criterion_hopf_validation, criterion_nichols_paths,
    criterion_panov, criterion_qcomb, criterion_sweedler_equivalence, criterion_truncation,
    CriterionOutcome, SelftestConfig,
};

fn check(outcome: CriterionOutcome) {
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_01_qcomb_suite() {
    check(criterion_qcomb(&SelftestConfig::default()));
}

#[test]
fn criterion_02_hopf_validation() {
    check(criterion_hopf_validation(&SelftestConfig::default()));
}

#[test]
fn criterion_03_panov() {
    check(criterion_panov(&SelftestConfig::default()));
}

#[test]
fn criterion_04_formula_necessity() {
    check(criterion_formula_necessity(&SelftestConfig::default()));
}

#[test]
fn criterion_05_sweedler_equivalence() {
    check(criterion_sweedler_equivalence(&SelftestConfig::default()));
}

#[test]
fn criterion_06_truncation_lemma() {
    check(criterion_truncation(&SelftestConfig::default()));
}

#[test]
fn criterion_07_quotient_factorization() {
    check(criterion_factorization(&SelftestConfig::default()));
}

#[test]
fn criterion_08_rank_one_classification() {
    check(criterion_classification(&SelftestConfig::default()));
}

#[test]
fn criterion_09_nichols_path_equality() {
    check(criterion_nichols_paths(&SelftestConfig::default()));
}

#[test]
fn criterion_10_derived_examples() {
    check(criterion_derived_examples(&SelftestConfig::default()));
}

#[test]
fn mutated_identity_is_detected() {
    // Fault injection: flipping the id_q comparison must fail criterion 1
    // and name it.
    let outcome = criterion_qcomb(&SelftestConfig {
        mutate: Some("qcomb-idq"),
    });
    assert!(!outcome.passed);
    assert!(outcome.detail.contains("id_q"));
}
