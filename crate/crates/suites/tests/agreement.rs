//! Optimized kernels agree with the brute-force evaluator entry by entry.

use alia_suites::{agreement, Tally};

fn check(tallies: Vec<Tally>) {
    for t in &tallies {
        assert!(t.ok(), "{t}");
        assert!(t.cases == 1 || t.cases as u64 == agreement::CASES, "{t}");
    }
}

#[test]
fn algebra_laws() {
    check(agreement::algebra_laws());
}

#[test]
fn coalgebra_laws() {
    check(agreement::coalgebra_laws());
}

#[test]
fn nijenhuis_maps() {
    check(agreement::nijenhuis_maps());
}

#[test]
fn representations() {
    check(agreement::representations());
}

#[test]
fn admissibility_pairs() {
    check(agreement::admissibility_pairs());
}

#[test]
fn bialgebras() {
    check(agreement::bialgebras());
}

#[test]
fn forms() {
    check(agreement::forms());
}

#[test]
fn d_bialgebras() {
    check(agreement::d_bialgebras());
}

#[test]
fn yang_baxter() {
    check(agreement::yang_baxter());
}

#[test]
fn coboundary_conditions() {
    check(agreement::coboundary_conditions());
}

#[test]
fn rota_baxter_and_semidirect() {
    check(agreement::rota_baxter_and_semidirect());
}

#[test]
fn co_yang_baxter() {
    check(agreement::co_yang_baxter());
}

#[test]
fn constructions() {
    check(agreement::constructions());
}
