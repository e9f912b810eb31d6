//! Each equivalence agrees in both directions, with both verdicts observed.

use alia_suites::{equivalence, Tally};

fn check(tallies: Vec<Tally>) {
    for t in &tallies {
        assert!(t.ok(), "{t}");
    }
}

#[test]
fn ybe_coproduct_reformulation() {
    check(equivalence::ybe_coproduct());
}

#[test]
fn coboundary_conditions_match_coalgebra_laws() {
    check(equivalence::coboundary());
}

#[test]
fn co_ybe_bracket_reformulation() {
    check(equivalence::co_ybe_bracket());
}

#[test]
fn ybe_iff_sharp_is_relative_rota_baxter() {
    check(equivalence::sharp_rota_baxter());
}

#[test]
fn s_admissibility_iff_sharp_intertwines() {
    check(equivalence::s_admissibility());
}

#[test]
fn admissible_solution_iff_weak_relative_rota_baxter() {
    check(equivalence::weak_rota_baxter());
}

#[test]
fn semidirect_admissibility_conditions() {
    check(equivalence::semidirect());
}

#[test]
fn lifted_tensor_equivalences() {
    check(equivalence::lift());
}
