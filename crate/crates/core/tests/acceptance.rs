//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use gl1_core::acceptance::*;

fn check(report: CriterionReport) {
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_1_mellin_round_trip() {
    check(criterion_1_roundtrip());
}

#[test]
fn criterion_2_basic_function_suite() {
    check(criterion_2_basic_suite());
}

#[test]
fn criterion_3_local_functional_equation() {
    check(criterion_3_functional_equation());
}

#[test]
fn criterion_4_psf_cuspidal_case() {
    check(criterion_4_psf_cuspidal());
}

#[test]
fn criterion_5_psf_s_circ_circ_case() {
    check(criterion_5_psf_s_circ_circ());
}

#[test]
fn criterion_6_theta_convergence_and_decay() {
    check(criterion_6_theta_tails());
}

#[test]
fn criterion_7_critical_zeros() {
    check(criterion_7_zeros());
}

#[test]
fn criterion_8_transfer_probe() {
    check(criterion_8_transfer_probe());
}
