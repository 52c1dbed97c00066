//! Acceptance suite: every numbered verification criterion runs at full
//! size with exact (zero-tolerance) comparisons and prints one pass/fail
//! line. Stated runtime ceilings are asserted as well; they are generous,
//! the suite is expected to finish orders of magnitude below them.

use hypgraph::verify::{
    criterion_1, criterion_10, criterion_11, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, CriterionReport, VerifyOptions,
};

fn run(report: CriterionReport, limit_seconds: f64) {
    println!("{report}");
    assert!(report.passed, "{report}");
    assert!(
        report.seconds < limit_seconds,
        "criterion {} took {:.1}s, limit {:.0}s",
        report.id,
        report.seconds,
        limit_seconds
    );
}

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

#[test]
fn criterion_01_delta_oracle_equivalence() {
    run(criterion_1(&opts()), 60.0);
}

#[test]
fn criterion_02_a_witness_suite() {
    run(criterion_2(&opts()), 15.0 * 60.0);
}

#[test]
fn criterion_03_exhaustive_minimality() {
    run(criterion_3(&opts()), 30.0 * 60.0);
}

#[test]
fn criterion_04_closed_form_landmarks() {
    run(criterion_4(&opts()), 5.0 * 60.0);
}

#[test]
fn criterion_05_gap_theorem_sweep() {
    run(criterion_5(&opts()), 60.0);
}

#[test]
fn criterion_06_block_identity() {
    run(criterion_6(&opts()), 10.0 * 60.0);
}

#[test]
fn criterion_07_sub_one_classification() {
    run(criterion_7(&opts()), 30.0 * 60.0);
}

#[test]
fn criterion_08_clique_removal_suite() {
    run(criterion_8(&opts()), 10.0 * 60.0);
}

#[test]
fn criterion_09_deficit_partitions() {
    run(criterion_9(&opts()), 1.0);
}

#[test]
fn criterion_10_random_model_suite() {
    run(criterion_10(&opts()), 20.0 * 60.0);
}

#[test]
fn criterion_11_refinement_stability() {
    run(criterion_11(&opts()), 30.0 * 60.0);
}
