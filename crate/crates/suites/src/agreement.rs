//! Every optimized law kernel against the brute-force evaluator, entry by
//! entry, on seeded random instances (passing and failing) and fixtures.

use alia_core::constructions::{
    dual_representation, matched_pair_sum, semidirect_product, special_left_alia,
    special_left_alia_coalgebra, MatchedPairData,
};
use alia_core::dual_triangular::{bracket_omega_raw, check_co_ybe_bracket, co_ybe_residual};
use alia_core::fixtures::*;
use alia_core::generate::*;
use alia_core::laws::*;
use alia_core::yang_baxter::*;
use alia_core::{
    dualize_algebra, dualize_coalgebra, left_right_operators, Algebra, BilinearForm, Coalgebra,
    LinearMap, Matrix, Representation, Scalar,
};
use alia_oracle as oracle;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::{fixed, sweep, Tally};

/// Random instances per law.
pub const CASES: u64 = 50;

fn algebra(g: &mut ChaCha8Rng) -> Algebra {
    if g.random_bool(0.6) {
        left_alia_algebra(g, 3)
    } else {
        let n = g.random_range(1..=3);
        dualize_coalgebra(&random_coalgebra(g, n))
    }
}

fn coalgebra(g: &mut ChaCha8Rng) -> Coalgebra {
    if g.random_bool(0.6) {
        left_alia_coalgebra(g, 3)
    } else {
        let n = g.random_range(1..=3);
        random_coalgebra(g, n)
    }
}

fn rect(g: &mut ChaCha8Rng, rows: usize, cols: usize) -> LinearMap {
    LinearMap::new(sparse_matrix(g, rows, cols, 0.5))
}

fn random_rep(g: &mut ChaCha8Rng, n: usize, m: usize) -> Representation {
    let mats = |g: &mut ChaCha8Rng| (0..n).map(|_| sparse_matrix(g, m, m, 0.3)).collect();
    let ell = mats(g);
    let arr = mats(g);
    Representation::new(m, ell, arr).unwrap()
}

/// A valid module: the regular one or its dual.
fn module(g: &mut ChaCha8Rng, a: &Algebra) -> Representation {
    let adj = left_right_operators(a);
    if g.random_bool(0.5) {
        adj
    } else {
        dual_representation(&adj)
    }
}

pub fn algebra_laws() -> Vec<Tally> {
    vec![
        sweep("left-alia", 1, CASES, true, |g, k| {
            let a = algebra(g);
            k.agree(Ok(check_left_alia(&a)), oracle::left_alia(&a))
        }),
        sweep("associative", 25, CASES, true, |g, k| {
            let a = algebra(g);
            k.agree(Ok(check_associative(&a)), oracle::associative(&a))
        }),
        sweep("commutative", 26, CASES, true, |g, k| {
            let a = algebra(g);
            k.agree(Ok(check_commutative(&a)), oracle::commutative(&a))
        }),
        fixed("left-alia on fixtures", |k| {
            k.agree(Ok(check_left_alia(&fix_a4())), oracle::left_alia(&fix_a4()))
                & k.agree(
                    Ok(check_left_alia(&fix_sl2())),
                    oracle::left_alia(&fix_sl2()),
                )
        }),
    ]
}

pub fn coalgebra_laws() -> Vec<Tally> {
    vec![
        sweep("left-alia-coalgebra", 2, CASES, true, |g, k| {
            let c = coalgebra(g);
            k.agree(
                Ok(check_left_alia_coalgebra(&c)),
                oracle::left_alia_coalgebra(&c),
            )
        }),
        sweep("coassociative", 27, CASES, true, |g, k| {
            let c = coalgebra(g);
            k.agree(Ok(check_coassociative(&c)), oracle::coassociative(&c))
        }),
        sweep("cocommutative", 28, CASES, true, |g, k| {
            let c = coalgebra(g);
            k.agree(Ok(check_cocommutative(&c)), oracle::cocommutative(&c))
        }),
        fixed("left-alia-coalgebra on fixtures", |k| {
            [fix_d4(), fix_d5()].iter().all(|c| {
                k.agree(
                    Ok(check_left_alia_coalgebra(c)),
                    oracle::left_alia_coalgebra(c),
                )
            })
        }),
    ]
}

pub fn nijenhuis_maps() -> Vec<Tally> {
    vec![
        sweep("nijenhuis-algebra", 3, CASES, true, |g, k| {
            let a = algebra(g);
            let nmap = candidate_map(g, a.dim());
            k.agree(
                check_nijenhuis_algebra(&a, &nmap),
                oracle::nijenhuis_algebra(&a, &nmap),
            )
        }),
        sweep("nijenhuis-coalgebra", 4, CASES, true, |g, k| {
            let c = coalgebra(g);
            let s = candidate_map(g, c.dim());
            k.agree(
                check_nijenhuis_coalgebra(&c, &s),
                oracle::nijenhuis_coalgebra(&c, &s),
            )
        }),
        fixed("nijenhuis maps on fixtures", |k| {
            k.agree(
                check_nijenhuis_algebra(&fix_a4(), &fix_n4()),
                oracle::nijenhuis_algebra(&fix_a4(), &fix_n4()),
            ) & k.agree(
                check_nijenhuis_coalgebra(&fix_d4(), &fix_s4()),
                oracle::nijenhuis_coalgebra(&fix_d4(), &fix_s4()),
            )
        }),
    ]
}

pub fn representations() -> Vec<Tally> {
    vec![
        sweep("representation", 5, CASES, true, |g, k| {
            let a = algebra(g);
            let rep = if g.random_bool(0.5) {
                module(g, &a)
            } else {
                let m = g.random_range(1..=3);
                random_rep(g, a.dim(), m)
            };
            k.agree(
                check_representation(&a, &rep),
                oracle::representation(&a, &rep),
            )
        }),
        sweep("nijenhuis-representation", 6, CASES, true, |g, k| {
            let a = left_alia_algebra(g, 3);
            let rep = module(g, &a);
            let nmap = candidate_map(g, a.dim());
            let alpha = candidate_map(g, rep.rep_dim());
            k.agree(
                check_nijenhuis_representation(&a, &nmap, &rep, &alpha),
                oracle::nijenhuis_representation(&a, &nmap, &rep, &alpha),
            )
        }),
        sweep("admissible", 7, CASES, true, |g, k| {
            let a = left_alia_algebra(g, 3);
            let rep = module(g, &a);
            let nmap = candidate_map(g, a.dim());
            let beta = candidate_map(g, rep.rep_dim());
            k.agree(
                check_admissible(&a, &nmap, &rep, &beta),
                oracle::admissible(&a, &nmap, &rep, &beta),
            )
        }),
    ]
}

pub fn admissibility_pairs() -> Vec<Tally> {
    vec![
        sweep("adjoint-admissible", 8, CASES, true, |g, k| {
            let a = algebra(g);
            let n = a.dim();
            let (nmap, s) = (candidate_map(g, n), candidate_map(g, n));
            k.agree(
                check_adjoint_admissible(&a, &nmap, &s),
                oracle::adjoint_admissible(&a, &nmap, &s),
            )
        }),
        sweep("coadjoint-admissible", 9, CASES, true, |g, k| {
            let c = coalgebra(g);
            let n = c.dim();
            let (s, nmap) = (candidate_map(g, n), candidate_map(g, n));
            k.agree(
                check_coadjoint_admissible(&c, &s, &nmap),
                oracle::coadjoint_admissible(&c, &s, &nmap),
            )
        }),
    ]
}

fn bialgebra_instance(g: &mut ChaCha8Rng) -> (Algebra, Coalgebra, LinearMap, LinearMap) {
    let a = algebra(g);
    let n = a.dim();
    let c = if g.random_bool(0.5) {
        delta_r(&a, &random_tensor(g, n)).unwrap()
    } else {
        random_coalgebra(g, n)
    };
    let (nmap, s) = (candidate_map(g, n), candidate_map(g, n));
    (a, c, nmap, s)
}

pub fn bialgebras() -> Vec<Tally> {
    vec![
        sweep("bialgebra-compat", 10, CASES, false, |g, k| {
            let (a, c, _, _) = bialgebra_instance(g);
            k.agree(
                check_bialgebra_compat(&a, &c),
                oracle::bialgebra_compat(&a, &c),
            )
        }),
        sweep("nijenhuis-bialgebra", 10, CASES, false, |g, k| {
            let (a, c, nmap, s) = bialgebra_instance(g);
            k.agree(
                check_nijenhuis_left_alia_bialgebra(&a, &c, &nmap, &s),
                oracle::nijenhuis_bialgebra(&a, &c, &nmap, &s),
            )
        }),
        fixed("nijenhuis-bialgebra on fixtures", |k| {
            k.agree(
                check_nijenhuis_left_alia_bialgebra(&fix_a4(), &fix_d4(), &fix_n4(), &fix_s4()),
                oracle::nijenhuis_bialgebra(&fix_a4(), &fix_d4(), &fix_n4(), &fix_s4()),
            )
        }),
    ]
}

pub fn forms() -> Vec<Tally> {
    vec![
        sweep("quadratic", 11, CASES, false, |g, k| {
            let a = algebra(g);
            let n = a.dim();
            let b = BilinearForm::new(sparse_matrix(g, n, n, 0.5));
            k.agree(check_quadratic(&a, &b), oracle::quadratic(&a, &b))
        }),
        sweep("symplectic", 29, CASES, false, |g, k| {
            let a = algebra(g);
            let n = a.dim();
            let w = if g.random_bool(0.5) {
                skew_form(g, n)
            } else {
                BilinearForm::new(sparse_matrix(g, n, n, 0.5))
            };
            k.agree(check_symplectic(&a, &w), oracle::symplectic(&a, &w))
        }),
        fixed("symplectic on fixtures", |k| {
            [0, 1, 2, 3, 5].iter().all(|&l| {
                let w = fix_w4(&Scalar::from_int(l));
                k.agree(
                    check_symplectic(&fix_a4(), &w),
                    oracle::symplectic(&fix_a4(), &w),
                )
            })
        }),
        sweep("cosymplectic", 12, CASES, true, |g, k| {
            let c = coalgebra(g);
            let r = antisymmetric_tensor(g, c.dim());
            k.agree(check_cosymplectic(&c, &r), oracle::cosymplectic(&c, &r))
        }),
    ]
}

pub fn d_bialgebras() -> Vec<Tally> {
    vec![
        sweep("d-bialgebra", 13, CASES, true, |g, k| {
            let (a, c) = if g.random_bool(0.7) {
                d_bialgebra(g, 3)
            } else {
                let n = g.random_range(1..=3);
                (
                    dualize_coalgebra(&random_coalgebra(g, n)),
                    random_coalgebra(g, n),
                )
            };
            k.agree(check_d_bialgebra(&a, &c), oracle::d_bialgebra(&a, &c))
        }),
        sweep("nijenhuis-d-compat", 14, CASES, true, |g, k| {
            let (a, c) = d_bialgebra(g, 3);
            let n = a.dim();
            let (f, ff) = (candidate_map(g, n), candidate_map(g, n));
            k.agree(
                check_nijenhuis_d_compat(&a, &c, &f, &ff),
                oracle::nijenhuis_d_compat(&a, &c, &f, &ff),
            )
        }),
        sweep("special-bialgebra", 15, CASES, false, |g, k| {
            let (a, c) = d_bialgebra(g, 3);
            let n = a.dim();
            let maps: Vec<LinearMap> = (0..4).map(|_| candidate_map(g, n)).collect();
            k.agree(
                check_special_bialgebra_condition(&a, &c, &maps[0], &maps[1], &maps[2], &maps[3]),
                oracle::special_bialgebra(&a, &c, &maps[0], &maps[1], &maps[2], &maps[3]),
            )
        }),
    ]
}

fn ybe_instance(g: &mut ChaCha8Rng) -> (Algebra, alia_core::TwoTensor) {
    let a = algebra(g);
    let n = a.dim();
    let r = if g.random_bool(0.5) {
        antisymmetric_tensor(g, n)
    } else {
        random_tensor(g, n)
    };
    (a, r)
}

pub fn yang_baxter() -> Vec<Tally> {
    vec![
        sweep("ybe", 16, CASES, true, |g, k| {
            let (a, r) = ybe_instance(g);
            k.agree(alia_ybe_residual(&a, &r), oracle::ybe(&a, &r))
        }),
        sweep("ybe-coproduct", 16, CASES, true, |g, k| {
            let (a, r) = ybe_instance(g);
            k.same(delta_r(&a, &r).ok(), Some(oracle::delta_r(&a, &r)));
            k.agree(check_ybe_coproduct(&a, &r), oracle::ybe_coproduct(&a, &r))
        }),
        fixed("ybe on fixtures", |k| {
            [fix_r12(), fix_r23()]
                .iter()
                .all(|r| k.agree(alia_ybe_residual(&fix_a4(), r), oracle::ybe(&fix_a4(), r)))
        }),
        sweep("s-admissibility", 17, CASES, true, |g, k| {
            let n = g.random_range(1..=3);
            let r = random_tensor(g, n);
            let (nmap, s) = (candidate_map(g, n), candidate_map(g, n));
            k.agree(
                s_admissibility_residual(&r, &nmap, &s),
                oracle::s_admissibility(&r, &nmap, &s),
            )
        }),
    ]
}

pub fn coboundary_conditions() -> Vec<Tally> {
    vec![
        sweep("coboundary-nijenhuis", 18, CASES, false, |g, k| {
            let a = algebra(g);
            let n = a.dim();
            let nmap = LinearMap::scalar(n, &small_scalar(g));
            let s = LinearMap::scalar(n, &small_scalar(g));
            let r = random_tensor(g, n);
            k.agree(
                check_coboundary_conditions(&a, &nmap, &s, &r),
                oracle::coboundary_conditions(&a, &nmap, &s, &r),
            )
        }),
        sweep(
            "coboundary-nijenhuis, transformed fixture",
            19,
            CASES,
            false,
            |g, k| {
                let p = invertible(g, 4);
                let a = fix_a4().change_basis(&p).unwrap();
                let nmap = conjugate_map(&fix_n4(), &p);
                let s = conjugate_map(&fix_s4(), &p);
                let r = random_tensor(g, 4);
                k.agree(
                    check_coboundary_conditions(&a, &nmap, &s, &r),
                    oracle::coboundary_conditions(&a, &nmap, &s, &r),
                )
            },
        ),
    ]
}

pub fn rota_baxter_and_semidirect() -> Vec<Tally> {
    vec![
        sweep("relative-rota-baxter", 20, CASES, true, |g, k| {
            let a = left_alia_algebra(g, 3);
            let rep = module(g, &a);
            let tm = rect(g, a.dim(), rep.rep_dim());
            k.agree(
                check_relative_rota_baxter(&a, &rep, &tm),
                oracle::relative_rota_baxter(&a, &rep, &tm),
            )
        }),
        sweep("weak-relative-rota-baxter", 21, CASES, true, |g, k| {
            let a = left_alia_algebra(g, 3);
            let rep = module(g, &a);
            let (n, m) = (a.dim(), rep.rep_dim());
            let tm = if g.random_bool(0.3) {
                LinearMap::new(Matrix::zeros(n, m))
            } else {
                rect(g, n, m)
            };
            let (nmap, alpha) = (candidate_map(g, n), candidate_map(g, m));
            k.agree(
                check_weak_rrb(&a, &nmap, &rep, &alpha, &tm),
                oracle::weak_rrb(&a, &nmap, &rep, &alpha, &tm),
            )
        }),
        sweep("semidirect-admissibility", 22, CASES, true, |g, k| {
            let a = left_alia_algebra(g, 3);
            let rep = module(g, &a);
            let (n, m) = (a.dim(), rep.rep_dim());
            let nmap = candidate_map(g, n);
            let s = candidate_map(g, n);
            let (alpha, beta) = (candidate_map(g, m), candidate_map(g, m));
            k.agree(
                check_semidirect_admissibility(&a, &nmap, &rep, &s, &alpha, &beta),
                oracle::semidirect_admissibility(&a, &rep, &s, &alpha, &beta),
            )
        }),
    ]
}

fn co_ybe_instance(g: &mut ChaCha8Rng) -> (Coalgebra, BilinearForm) {
    let c = coalgebra(g);
    let n = c.dim();
    let w = if g.random_bool(0.5) {
        skew_form(g, n)
    } else {
        BilinearForm::new(sparse_matrix(g, n, n, 0.4))
    };
    (c, w)
}

pub fn co_yang_baxter() -> Vec<Tally> {
    vec![
        sweep("co-ybe", 23, CASES, true, |g, k| {
            let (c, w) = co_ybe_instance(g);
            k.agree(co_ybe_residual(&c, &w), oracle::co_ybe(&c, &w))
        }),
        sweep("co-ybe-bracket", 23, CASES, true, |g, k| {
            let (c, w) = co_ybe_instance(g);
            k.same(
                bracket_omega_raw(&c, &w).ok(),
                Some(oracle::bracket_omega(&c, &w)),
            );
            k.agree(check_co_ybe_bracket(&c, &w), oracle::co_ybe_bracket(&c, &w))
        }),
        fixed("co-ybe on fixtures", |k| {
            [0, 1, 2, 3, 5].iter().all(|&l| {
                let w = fix_w4(&Scalar::from_int(l));
                k.agree(
                    co_ybe_residual(&fix_d5(), &w),
                    oracle::co_ybe(&fix_d5(), &w),
                )
            })
        }),
    ]
}

pub fn constructions() -> Vec<Tally> {
    vec![
        sweep(
            "special and semidirect constructions",
            24,
            CASES,
            false,
            |g, k| {
                let c = comm_assoc_algebra(g, 3);
                let n = c.dim();
                let (f, gm) = (random_map(g, n), random_map(g, n));
                k.same(
                    special_left_alia(&c, &f, &gm).ok(),
                    Some(oracle::special_left_alia(&c, &f, &gm)),
                );
                let co = dualize_algebra(&c);
                k.same(
                    special_left_alia_coalgebra(&co, &f, &gm).ok(),
                    Some(oracle::special_left_alia_coalgebra(&co, &f, &gm)),
                );
                let a = left_alia_algebra(g, 3);
                let adj = left_right_operators(&a);
                k.same(dual_representation(&adj), oracle::dual_representation(&adj));
                let rep = module(g, &a);
                k.same(
                    semidirect_product(&a, &rep).ok(),
                    Some(oracle::semidirect(&a, &rep)),
                );
                k.same(oracle::dual_of_coalgebra(&dualize_algebra(&a)), a);
                true
            },
        ),
        fixed("matched sum of the four-dimensional double", |k| {
            let a = fix_a4();
            let b = dualize_coalgebra(&fix_d4());
            let md = MatchedPairData {
                rep_ab: dual_representation(&left_right_operators(&a)),
                rep_ba: dual_representation(&left_right_operators(&b)),
                alg_a: a.clone(),
                alg_b: b.clone(),
                nij_a: None,
                nij_b: None,
            };
            let sum = k.take(matched_pair_sum(&md));
            let expected = oracle::matched_sum(&a, &b, &md.rep_ab, &md.rep_ba);
            k.same(sum.map(|s| s.algebra), Some(expected));
            true
        }),
    ]
}

/// Every agreement suite, in a fixed order.
pub fn all() -> Vec<Tally> {
    [
        algebra_laws(),
        coalgebra_laws(),
        nijenhuis_maps(),
        representations(),
        admissibility_pairs(),
        bialgebras(),
        forms(),
        d_bialgebras(),
        yang_baxter(),
        coboundary_conditions(),
        rota_baxter_and_semidirect(),
        co_yang_baxter(),
        constructions(),
    ]
    .into_iter()
    .flatten()
    .collect()
}
