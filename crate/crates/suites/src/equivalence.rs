//! Bidirectional verdict agreement for the stated equivalences, on seeded
//! random instances that include both passing and failing cases.

use alia_core::constructions::{dual_representation, semidirect_product};
use alia_core::dual_triangular::{check_co_ybe_bracket, co_ybe_residual};
use alia_core::fixtures::*;
use alia_core::generate::*;
use alia_core::laws::*;
use alia_core::yang_baxter::*;
use alia_core::{
    dual_map, left_right_operators, Algebra, BilinearForm, LinearMap, Matrix, Representation,
    Scalar, TwoTensor,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::{equivalent, fixed, Case, Tally};

/// Random instances per equivalence.
pub const CASES: u64 = 40;

fn scale_tensor(r: &TwoTensor, s: &Scalar) -> TwoTensor {
    TwoTensor::new(r.t.scale(s))
}

/// An algebra with an antisymmetric tensor, solving the Yang–Baxter
/// equation about half the time.
fn antisymmetric_ybe_instance(g: &mut ChaCha8Rng) -> (Algebra, TwoTensor) {
    match g.random_range(0..4) {
        0 => {
            let p = invertible(g, 4);
            let r = if g.random_bool(0.5) {
                fix_r12()
            } else {
                fix_r23()
            };
            let r = scale_tensor(&r, &small_scalar(g));
            (fix_a4().change_basis(&p).unwrap(), transform_tensor(&r, &p))
        }
        1 => {
            let n = g.random_range(1..=3);
            (Algebra::zero(n), antisymmetric_tensor(g, n))
        }
        _ => {
            let a = left_alia_algebra(g, 3);
            let n = a.dim();
            (a, antisymmetric_tensor(g, n))
        }
    }
}

fn ok(k: &mut Case, r: alia_core::Result<alia_core::Residual>) -> bool {
    k.take(r).is_some_and(|r| r.passed())
}

pub fn ybe_coproduct() -> Vec<Tally> {
    vec![
        equivalent("ybe-coproduct reformulation", 1, CASES, |g, k| {
            let (a, r) = if g.random_bool(0.3) {
                let a = left_alia_algebra(g, 3);
                let n = a.dim();
                (a, random_tensor(g, n))
            } else {
                antisymmetric_ybe_instance(g)
            };
            let ybe = ok(k, alia_ybe_residual(&a, &r));
            let Some(res) = k.take(check_ybe_coproduct(&a, &r)) else {
                return (false, ybe);
            };
            if r.is_antisymmetric() {
                k.same(res.part_passed("dr"), ybe);
            }
            (res.part_passed("dra"), ybe)
        }),
        fixed("ybe-coproduct on fixtures", |k| {
            let symmetric =
                TwoTensor::from_entries(4, &[(0, 1, Scalar::one()), (1, 0, Scalar::one())]);
            let res = k.take(check_ybe_coproduct(&fix_a4(), &symmetric));
            let ybe = ok(k, alia_ybe_residual(&fix_a4(), &symmetric));
            k.same(res.map(|r| r.part_passed("dra")), Some(ybe));
            ok(k, check_ybe_coproduct(&fix_a4(), &fix_r12()))
                && ok(k, check_ybe_coproduct(&fix_a4(), &fix_r23()))
        }),
    ]
}

/// An `S`-adjoint-admissible Nijenhuis algebra with a tensor.
fn admissible_instance(g: &mut ChaCha8Rng) -> (Algebra, LinearMap, LinearMap, TwoTensor) {
    if g.random_bool(0.6) {
        let p = invertible(g, 4);
        let r = match g.random_range(0..3) {
            0 => fix_r12(),
            1 => fix_r23(),
            _ => random_tensor(g, 4),
        };
        (
            fix_a4().change_basis(&p).unwrap(),
            conjugate_map(&fix_n4(), &p),
            conjugate_map(&fix_s4(), &p),
            transform_tensor(&r, &p),
        )
    } else {
        let a = left_alia_algebra(g, 3);
        let n = a.dim();
        let nmap = LinearMap::scalar(n, &small_scalar(g));
        let s = LinearMap::scalar(n, &small_scalar(g));
        (a, nmap, s, random_tensor(g, n))
    }
}

/// One coboundary part against the matching law on `Δ_r`.
fn coboundary_part(name: &str, part: &'static str) -> Tally {
    equivalent(name, 2, CASES, |g, k| {
        let (a, nmap, s, r) = admissible_instance(g);
        let Some(res) = k.take(check_coboundary_conditions(&a, &nmap, &s, &r)) else {
            return (false, true);
        };
        let Some(d) = k.take(delta_r(&a, &r)) else {
            return (false, true);
        };
        let rhs = match part {
            "nijenhuis" => ok(k, check_nijenhuis_coalgebra(&d, &s)),
            "coadjoint-left" => k
                .take(check_coadjoint_admissible(&d, &s, &nmap))
                .is_some_and(|c| c.part_passed("left")),
            _ => k
                .take(check_coadjoint_admissible(&d, &s, &nmap))
                .is_some_and(|c| c.part_passed("right")),
        };
        (res.part_passed(part), rhs)
    })
}

pub fn coboundary() -> Vec<Tally> {
    vec![
        coboundary_part("coboundary nijenhuis part", "nijenhuis"),
        coboundary_part("coboundary coadjoint-left part", "coadjoint-left"),
        coboundary_part("coboundary coadjoint-right part", "coadjoint-right"),
        fixed("coboundary conditions on fixtures", |k| {
            ok(
                k,
                check_coboundary_conditions(&fix_a4(), &fix_n4(), &fix_s4(), &fix_r12()),
            )
        }),
    ]
}

pub fn co_ybe_bracket() -> Vec<Tally> {
    vec![
        equivalent("co-ybe bracket reformulation", 3, CASES, |g, k| {
            let (c, w) = match g.random_range(0..4) {
                0 => {
                    let p = invertible(g, 4);
                    let lam = small_scalar(g);
                    (
                        conjugate_coalgebra(&fix_d5(), &p),
                        transform_form(&fix_w4(&lam), &p),
                    )
                }
                1 => {
                    let c = left_alia_coalgebra(g, 3);
                    let n = c.dim();
                    (c, BilinearForm::zero(n))
                }
                _ => {
                    let c = left_alia_coalgebra(g, 3);
                    let n = c.dim();
                    (c, skew_form(g, n))
                }
            };
            let co = ok(k, co_ybe_residual(&c, &w));
            let Some(res) = k.take(check_co_ybe_bracket(&c, &w)) else {
                return (false, co);
            };
            k.same(res.part_passed("mwr"), co);
            (res.part_passed("mw"), co)
        }),
        // forms that are not skew only have the first reformulation
        equivalent("co-ybe bracket, general forms", 4, CASES, |g, k| {
            let c = left_alia_coalgebra(g, 3);
            let n = c.dim();
            let w = if g.random_bool(0.3) {
                BilinearForm::zero(n)
            } else {
                BilinearForm::new(sparse_matrix(g, n, n, 0.3))
            };
            let co = ok(k, co_ybe_residual(&c, &w));
            let Some(res) = k.take(check_co_ybe_bracket(&c, &w)) else {
                return (false, co);
            };
            if !w.is_skew() {
                k.require(!res.parts().contains(&"mwr"));
            }
            (res.part_passed("mw"), co)
        }),
    ]
}

fn dual_adjoint(a: &Algebra) -> Representation {
    dual_representation(&left_right_operators(a))
}

pub fn sharp_rota_baxter() -> Vec<Tally> {
    vec![
        equivalent("ybe iff sharp is relative rota-baxter", 5, CASES, |g, k| {
            let (a, r) = antisymmetric_ybe_instance(g);
            let ybe = ok(k, alia_ybe_residual(&a, &r));
            let rrb = ok(
                k,
                check_relative_rota_baxter(&a, &dual_adjoint(&a), &r_sharp(&r)),
            );
            (ybe, rrb)
        }),
        fixed("sharp of fixture tensors is relative rota-baxter", |k| {
            [fix_r12(), fix_r23()].iter().all(|r| {
                ok(
                    k,
                    check_relative_rota_baxter(&fix_a4(), &dual_adjoint(&fix_a4()), &r_sharp(r)),
                )
            })
        }),
    ]
}

pub fn s_admissibility() -> Vec<Tally> {
    vec![
        equivalent("s-admissibility iff sharp intertwines", 6, CASES, |g, k| {
            let n = g.random_range(1..=3);
            let r = random_tensor(g, n);
            let (nmap, s) = if g.random_bool(0.4) {
                let l = small_scalar(g);
                (LinearMap::scalar(n, &l), LinearMap::scalar(n, &l))
            } else {
                (candidate_map(g, n), candidate_map(g, n))
            };
            let lhs = ok(k, s_admissibility_residual(&r, &nmap, &s));
            let sharp = r_sharp(&r);
            let rhs = nmap.compose(&sharp) == sharp.compose(&dual_map(&s));
            (lhs, rhs)
        }),
        fixed("s-admissibility on fixtures", |k| {
            ok(
                k,
                s_admissibility_residual(&fix_r12(), &fix_n4(), &fix_s4()),
            )
        }),
    ]
}

pub fn weak_rota_baxter() -> Vec<Tally> {
    vec![equivalent(
        "admissible solution iff weak relative rota-baxter",
        7,
        CASES,
        |g, k| {
            let (a, nmap, s, r) = if g.random_bool(0.5) {
                let (a, nmap, s, _) = admissible_instance(g);
                let (b, r) = antisymmetric_ybe_instance(g);
                if b.dim() == a.dim() && g.random_bool(0.5) {
                    (a, nmap, s, r)
                } else {
                    let n = a.dim();
                    (a, nmap, s, antisymmetric_tensor(g, n))
                }
            } else {
                let p = invertible(g, 4);
                (
                    fix_a4().change_basis(&p).unwrap(),
                    conjugate_map(&fix_n4(), &p),
                    conjugate_map(&fix_s4(), &p),
                    transform_tensor(&fix_r12(), &p),
                )
            };
            let lhs = k
                .take(ybe_report(&a, &r, &nmap, &s))
                .is_some_and(|rep| rep.s_admissible_solution());
            let weak = ok(
                k,
                check_weak_rrb(&a, &nmap, &dual_adjoint(&a), &dual_map(&s), &r_sharp(&r)),
            );
            (lhs, weak)
        },
    )]
}

fn block(x: &LinearMap, y: &LinearMap) -> LinearMap {
    LinearMap::new(Matrix::block_diag(&x.m, &y.m))
}

/// A Nijenhuis algebra with a module and three maps; the regular module
/// with the algebra's own maps satisfies every condition.
struct SemidirectCase {
    a: Algebra,
    nmap: LinearMap,
    rep: Representation,
    s: LinearMap,
    alpha: LinearMap,
    beta: LinearMap,
}

fn semidirect_case(g: &mut ChaCha8Rng) -> SemidirectCase {
    let perturb = |g: &mut ChaCha8Rng, m: LinearMap| {
        if g.random_bool(0.3) {
            candidate_map(g, m.dim())
        } else {
            m
        }
    };
    if g.random_bool(0.6) {
        let p = invertible(g, 4);
        let a = fix_a4().change_basis(&p).unwrap();
        let nmap = conjugate_map(&fix_n4(), &p);
        let s = conjugate_map(&fix_s4(), &p);
        let rep = left_right_operators(&a);
        let alpha = perturb(g, nmap.clone());
        let beta = perturb(g, s.clone());
        SemidirectCase {
            a,
            nmap,
            rep,
            s,
            alpha,
            beta,
        }
    } else {
        let a = left_alia_algebra(g, 3);
        let n = a.dim();
        let nmap = LinearMap::scalar(n, &small_scalar(g));
        let s = LinearMap::scalar(n, &small_scalar(g));
        let m = g.random_range(1..=2);
        let rep = if g.random_bool(0.5) {
            Representation::zero(n, m)
        } else {
            left_right_operators(&a)
        };
        let m = rep.rep_dim();
        SemidirectCase {
            a,
            nmap,
            rep,
            alpha: candidate_map(g, m),
            beta: candidate_map(g, m),
            s,
        }
    }
}

/// Verdicts of the two semidirect products and of the four conditions.
fn semidirect_verdicts(k: &mut Case, c: &SemidirectCase) -> (bool, bool, bool) {
    let cond_a = ok(
        k,
        check_nijenhuis_representation(&c.a, &c.nmap, &c.rep, &c.alpha),
    );
    let cond_b = ok(k, check_adjoint_admissible(&c.a, &c.nmap, &c.s));
    let cond_c = ok(k, check_admissible(&c.a, &c.nmap, &c.rep, &c.beta));
    let cond_d = ok(
        k,
        check_semidirect_admissibility(&c.a, &c.nmap, &c.rep, &c.s, &c.alpha, &c.beta),
    );
    let conditions = cond_a && cond_b && cond_c && cond_d;

    let first = match k.take(semidirect_product(&c.a, &c.rep)) {
        Some(big) => {
            let (bn, bs) = (block(&c.nmap, &c.alpha), block(&c.s, &c.beta));
            ok(k, check_nijenhuis_algebra(&big, &bn))
                && ok(k, check_adjoint_admissible(&big, &bn, &bs))
        }
        None => false,
    };
    let second = match k.take(semidirect_product(&c.a, &dual_representation(&c.rep))) {
        Some(dual) => {
            let dn = block(&c.nmap, &dual_map(&c.beta));
            let ds = block(&c.s, &dual_map(&c.alpha));
            ok(k, check_nijenhuis_algebra(&dual, &dn))
                && ok(k, check_adjoint_admissible(&dual, &dn, &ds))
        }
        None => false,
    };
    (first, second, conditions)
}

pub fn semidirect() -> Vec<Tally> {
    vec![
        equivalent("semidirect product with module maps", 8, CASES, |g, k| {
            let (first, _, conditions) = semidirect_verdicts(k, &semidirect_case(g));
            (first, conditions)
        }),
        equivalent(
            "semidirect product with dual module maps",
            8,
            CASES,
            |g, k| {
                let (_, second, conditions) = semidirect_verdicts(k, &semidirect_case(g));
                (second, conditions)
            },
        ),
    ]
}

/// A module, a map into the algebra, and the maps for the lift.
struct LiftCase {
    a: Algebra,
    rep: Representation,
    t: LinearMap,
    nmap: LinearMap,
    s: LinearMap,
    alpha: LinearMap,
    beta: LinearMap,
}

fn lift_case(g: &mut ChaCha8Rng) -> LiftCase {
    if g.random_bool(0.5) {
        let p = invertible(g, 4);
        let a = fix_a4().change_basis(&p).unwrap();
        let r = transform_tensor(&fix_r12(), &p);
        let nmap = conjugate_map(&fix_n4(), &p);
        let s = conjugate_map(&fix_s4(), &p);
        let t = if g.random_bool(0.8) {
            r_sharp(&r)
        } else {
            LinearMap::new(sparse_matrix(g, 4, 4, 0.3))
        };
        let alpha = if g.random_bool(0.8) {
            dual_map(&s)
        } else {
            candidate_map(g, 4)
        };
        let beta = if g.random_bool(0.8) {
            dual_map(&nmap)
        } else {
            candidate_map(g, 4)
        };
        LiftCase {
            rep: dual_adjoint(&a),
            a,
            t,
            nmap,
            s,
            alpha,
            beta,
        }
    } else {
        let a = left_alia_algebra(g, 3);
        let n = a.dim();
        let rep = if g.random_bool(0.5) {
            left_right_operators(&a)
        } else {
            dual_adjoint(&a)
        };
        let t = if g.random_bool(0.3) {
            LinearMap::new(Matrix::zeros(n, n))
        } else {
            LinearMap::new(sparse_matrix(g, n, n, 0.3))
        };
        LiftCase {
            a,
            rep,
            t,
            nmap: candidate_map(g, n),
            s: candidate_map(g, n),
            alpha: candidate_map(g, n),
            beta: candidate_map(g, n),
        }
    }
}

pub fn lift() -> Vec<Tally> {
    vec![
        equivalent(
            "lifted tensor solves iff relative rota-baxter",
            9,
            CASES,
            |g, k| {
                let c = lift_case(g);
                let Some(lift) = k.take(t_sharp_lift(&c.a, &c.rep, &c.t, LiftMaps::default()))
                else {
                    return (false, true);
                };
                k.require(lift.r.is_antisymmetric());
                let ybe = ok(k, alia_ybe_residual(&lift.big, &lift.r));
                let rrb = ok(k, check_relative_rota_baxter(&c.a, &c.rep, &c.t));
                (ybe, rrb)
            },
        ),
        equivalent(
            "lifted tensor admissible iff weak operator",
            10,
            CASES,
            |g, k| {
                let c = lift_case(g);
                let maps = LiftMaps {
                    nmap: Some(&c.nmap),
                    s: Some(&c.s),
                    alpha: Some(&c.alpha),
                    beta: Some(&c.beta),
                };
                let Some(lift) = k.take(t_sharp_lift(&c.a, &c.rep, &c.t, maps)) else {
                    return (false, true);
                };
                let (Some(nij), Some(adm)) = (lift.nij, lift.adm) else {
                    k.require(false);
                    return (false, true);
                };
                let lhs = k
                    .take(ybe_report(&lift.big, &lift.r, &nij, &adm))
                    .is_some_and(|r| r.s_admissible_solution());
                let weak = ok(k, check_weak_rrb(&c.a, &c.nmap, &c.rep, &c.alpha, &c.t));
                let rhs = weak && c.t.compose(&c.beta) == c.s.compose(&c.t);
                (lhs, rhs)
            },
        ),
        fixed("fixture lift matches both ways", |k| {
            let a = fix_a4();
            let rep = dual_adjoint(&a);
            let mut agree = true;
            for (t, expect) in [(r_sharp(&fix_r12()), true), (LinearMap::identity(4), false)] {
                let Some(lift) = k.take(t_sharp_lift(&a, &rep, &t, LiftMaps::default())) else {
                    return false;
                };
                agree &= lift.big.dim() == 8;
                agree &= ok(k, alia_ybe_residual(&lift.big, &lift.r)) == expect;
                agree &= ok(k, check_relative_rota_baxter(&a, &rep, &t)) == expect;
            }
            let adj = left_right_operators(&a);
            let t = LinearMap::identity(4);
            if let Some(lift) = k.take(t_sharp_lift(&a, &adj, &t, LiftMaps::default())) {
                let lhs = ok(k, alia_ybe_residual(&lift.big, &lift.r));
                agree &= lhs == ok(k, check_relative_rota_baxter(&a, &adj, &t));
            }
            agree
        }),
    ]
}

/// Every equivalence suite, in a fixed order.
pub fn all() -> Vec<Tally> {
    [
        ybe_coproduct(),
        coboundary(),
        co_ybe_bracket(),
        sharp_rota_baxter(),
        s_admissibility(),
        weak_rota_baxter(),
        semidirect(),
        lift(),
    ]
    .into_iter()
    .flatten()
    .collect()
}
