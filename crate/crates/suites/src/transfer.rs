//! Nijenhuis transfer to special algebras, coalgebra duality, and the three
//! descriptions of a Nijenhuis bialgebra.

use alia_core::constructions::{drinfeld_double, matched_pair_sum, special_left_alia};
use alia_core::fixtures::*;
use alia_core::generate::*;
use alia_core::laws::*;
use alia_core::yang_baxter::delta_r;
use alia_core::{
    dual_map, dualize_algebra, dualize_coalgebra, Algebra, Coalgebra, LinearMap, Result,
};
use rand::Rng;

use crate::{equivalent, sweep, Tally};

/// Instances per transfer and duality suite.
pub const CASES: u64 = 100;

/// `f` and `g` stay Nijenhuis on the special bracket built from them.
pub fn nijenhuis_transfer() -> Tally {
    sweep(
        "special bracket keeps f and g Nijenhuis",
        6,
        CASES,
        false,
        |g, k| {
            let c = comm_assoc_algebra(g, 4);
            let (f, gm) = nijenhuis_commuting_pair(g, &c);
            let ok = |k: &mut crate::Case, a: &Algebra, m: &LinearMap| {
                k.take(check_nijenhuis_algebra(a, m))
                    .is_some_and(|r| r.passed())
            };
            let hypotheses = ok(k, &c, &f) && ok(k, &c, &gm);
            k.require(hypotheses);
            k.require(f.compose(&gm) == gm.compose(&f));
            let Some(special) = k.take(special_left_alia(&c, &f, &gm)) else {
                return false;
            };
            let verdict = ok(k, &special, &f) & ok(k, &special, &gm);
            k.require(verdict);
            verdict
        },
    )
}

/// The special bialgebra condition vanishes for `(F, G) = (g, f)`.
pub fn swapped_maps() -> Tally {
    sweep(
        "special bialgebra condition with swapped maps",
        7,
        CASES,
        false,
        |g, k| {
            let (a, c) = d_bialgebra(g, 3);
            let n = a.dim();
            let (f, gm) = (random_map(g, n), random_map(g, n));
            let verdict = k
                .take(check_special_bialgebra_condition(&a, &c, &f, &gm, &gm, &f))
                .is_some_and(|r| r.passed());
            k.require(verdict);
            verdict
        },
    )
}

/// Nijenhuis coalgebra verdicts against the dual algebra with the dual map.
pub fn coalgebra_duality() -> Tally {
    equivalent(
        "nijenhuis coalgebra iff dual nijenhuis algebra",
        8,
        CASES,
        |g, k| {
            let (c, s) = match g.random_range(0..3) {
                0 => {
                    let a = comm_assoc_algebra(g, 3);
                    let (f, _) = nijenhuis_commuting_pair(g, &a);
                    (dualize_algebra(&a), dual_map(&f))
                }
                1 => {
                    let c = left_alia_coalgebra(g, 3);
                    let n = c.dim();
                    (c, candidate_map(g, n))
                }
                _ => {
                    let n = g.random_range(1..=3);
                    (random_coalgebra(g, n), random_map(g, n))
                }
            };
            let co = k
                .take(check_nijenhuis_coalgebra(&c, &s))
                .is_some_and(|r| r.passed());
            let alg = k
                .take(check_nijenhuis_algebra(
                    &dualize_coalgebra(&c),
                    &dual_map(&s),
                ))
                .is_some_and(|r| r.passed());
            (co, alg)
        },
    )
}

/// Verdicts of the matched pair, the double as a Manin triple with a
/// Nijenhuis operator, and the bialgebra laws, in that order.
pub fn triangle(a: &Algebra, c: &Coalgebra, nmap: &LinearMap, s: &LinearMap) -> Result<[bool; 3]> {
    let double = drinfeld_double(a, c, Some((nmap, s)))?;
    let matched = matched_pair_sum(&double.pair)?.matched();
    let manin = match double.nij.as_ref() {
        Some(nij) => {
            check_left_alia(&double.big).passed()
                && check_quadratic(&double.big, &double.form)?.passed()
                && check_nijenhuis_algebra(&double.big, nij)?.passed()
        }
        None => false,
    };
    let bialgebra = check_nijenhuis_left_alia_bialgebra(a, c, nmap, s)?.passed();
    Ok([matched, manin, bialgebra])
}

fn hypotheses_hold(a: &Algebra, c: &Coalgebra, nmap: &LinearMap, s: &LinearMap) -> bool {
    let nij = |r: Result<alia_core::Residual>| r.is_ok_and(|r| r.passed());
    check_left_alia(a).passed()
        && check_left_alia_coalgebra(c).passed()
        && nij(check_nijenhuis_algebra(a, nmap))
        && nij(check_nijenhuis_coalgebra(c, s))
}

/// Triangle agreement on random bialgebra candidates whose algebra and
/// coalgebra are Nijenhuis; candidates failing that are skipped.
pub fn triangle_agreement() -> Tally {
    let mut tally = Tally::new("matched pair, double and bialgebra verdicts", true);
    for seed in 0..60 {
        let mut g = rng(10_000 + seed);
        let (a, c, nmap, s) = match g.random_range(0..3) {
            0 => {
                let p = invertible(&mut g, 4);
                let s = if g.random_bool(0.5) {
                    conjugate_map(&fix_s4(), &p)
                } else {
                    LinearMap::scalar(4, &small_scalar(&mut g))
                };
                (
                    fix_a4().change_basis(&p).unwrap(),
                    conjugate_coalgebra(&fix_d4(), &p),
                    conjugate_map(&fix_n4(), &p),
                    s,
                )
            }
            1 => {
                let a = left_alia_algebra(&mut g, 3);
                let n = a.dim();
                let r = antisymmetric_tensor(&mut g, n);
                let l = LinearMap::scalar(n, &small_scalar(&mut g));
                (a.clone(), delta_r(&a, &r).unwrap(), l.clone(), l)
            }
            _ => {
                let a = left_alia_algebra(&mut g, 3);
                let n = a.dim();
                let c = left_alia_coalgebra(&mut g, n);
                let l = LinearMap::scalar(n, &small_scalar(&mut g));
                if c.dim() == n {
                    (a, c, l.clone(), l)
                } else {
                    (a, Coalgebra::zero(n), l.clone(), l)
                }
            }
        };
        if !hypotheses_hold(&a, &c, &nmap, &s) {
            continue;
        }
        match triangle(&a, &c, &nmap, &s) {
            Ok([m, q, b]) => tally.record(m == b && q == b, b),
            Err(_) => tally.record(false, false),
        }
    }
    tally
}
