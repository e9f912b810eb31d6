//! Pinned verdicts and values on the fixtures. Derived values are checked
//! against the brute-force oracle as well as frozen.

use alia_core::constructions::*;
use alia_core::dual_triangular::*;
use alia_core::fixtures::*;
use alia_core::laws::*;
use alia_core::yang_baxter::*;
use alia_core::*;
use alia_oracle as oracle;

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

fn lambdas() -> impl Iterator<Item = Scalar> {
    [0, 1, 2, 3, 5].into_iter().map(s)
}

fn values(r: &Residual) -> Vec<(Vec<usize>, Scalar)> {
    r.entries
        .iter()
        .map(|e| (e.index.clone(), e.value.clone()))
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { s(1) } else { s(0) }).collect()
}

#[test]
fn four_dim_bracket_table() {
    let a = fix_a4();
    let br = |i, j| bracket_eval(&a, &unit(4, i), &unit(4, j)).unwrap();
    assert_eq!(br(2, 0), unit(4, 0));
    assert_eq!(br(0, 2), vec![s(0); 4]);
    assert_eq!(br(3, 0), unit(4, 2));
}

#[test]
fn flip_negates_antisymmetric_tensors() {
    let r = fix_r12();
    assert_eq!(flip(&r).t, -&r.t);
    assert_eq!(flip(&flip(&r)), r);
    assert_eq!(dual_map(&fix_n4()).m, fix_n4().m.transpose());
}

#[test]
fn structural_laws_on_fixtures() {
    assert!(check_left_alia(&fix_a4()).passed());
    assert!(check_left_alia(&fix_sl2()).passed());
    assert!(check_left_alia(&Algebra::zero(3)).passed());
    assert!(check_associative(&fix_dual2()).passed());
    assert!(check_commutative(&fix_dual2()).passed());
    assert!(check_left_alia_coalgebra(&fix_d4()).passed());
    assert!(check_left_alia_coalgebra(&fix_d5()).passed());
    assert!(check_bialgebra_compat(&fix_a4(), &fix_d5())
        .unwrap()
        .passed());
    assert!(check_cosymplectic(&fix_d5(), &fix_r23()).unwrap().passed());
    for l in lambdas() {
        assert!(check_nijenhuis_algebra(&fix_a4(), &fix_nl(&l))
            .unwrap()
            .passed());
        assert!(check_symplectic(&fix_a4(), &fix_w4(&l)).unwrap().passed());
        assert!(co_ybe_residual(&fix_d5(), &fix_w4(&l)).unwrap().passed());
    }
}

#[test]
fn lie_module_with_scaled_right_action() {
    let a = fix_sl2();
    let ad = left_right_operators(&a).ell;
    for k in [-1, 2] {
        let arr = ad.iter().map(|m| m.scale(&s(k))).collect();
        let rep = Representation::new(3, ad.clone(), arr).unwrap();
        let res = check_representation(&a, &rep).unwrap();
        assert!(res.passed(), "k = {k}");
        assert!(oracle::representation(&a, &rep).is_empty());
    }
}

#[test]
fn nijenhuis_representation_and_admissibility_on_adjoint() {
    let a = fix_a4();
    let adj = left_right_operators(&a);
    assert!(check_representation(&a, &adj).unwrap().passed());
    assert!(
        check_nijenhuis_representation(&a, &fix_n4(), &adj, &fix_n4())
            .unwrap()
            .passed()
    );
    let zero = LinearMap::zero(4);
    assert!(check_nijenhuis_representation(&a, &fix_n4(), &adj, &zero)
        .unwrap()
        .passed());
    assert!(
        check_admissible(&a, &fix_n4(), &adj, &LinearMap::identity(4))
            .unwrap()
            .passed()
    );
    let adjoint = check_admissible(&a, &fix_n4(), &adj, &fix_s4()).unwrap();
    assert_eq!(
        adjoint.passed(),
        check_adjoint_admissible(&a, &fix_n4(), &fix_s4())
            .unwrap()
            .passed()
    );
}

#[test]
fn identity_for_s_keeps_the_four_dim_bialgebra() {
    let id = LinearMap::identity(4);
    let res = check_nijenhuis_left_alia_bialgebra(&fix_a4(), &fix_d4(), &fix_n4(), &id).unwrap();
    assert!(res.passed());
    assert!(oracle::nijenhuis_bialgebra(&fix_a4(), &fix_d4(), &fix_n4(), &id).is_empty());
    let two = LinearMap::scalar(4, &s(2));
    let res = check_nijenhuis_left_alia_bialgebra(&fix_a4(), &fix_d4(), &fix_n4(), &two).unwrap();
    assert!(!res.sub_law_passed(LawId::CoadjointAdmissible));
    assert!(res.sub_law_passed(LawId::AdjointAdmissible));
}

#[test]
fn d_bialgebra_on_dual_numbers() {
    let a = fix_dual2();
    let zero = Coalgebra::zero(2);
    assert!(check_d_bialgebra(&a, &zero).unwrap().passed());

    let grouplike_t = Coalgebra::from_entries(2, &[(1, 1, 1, s(1))]);
    assert!(check_d_bialgebra(&a, &grouplike_t).unwrap().passed());
    assert!(oracle::d_bialgebra(&a, &grouplike_t).is_empty());

    let grouplike_one = Coalgebra::from_entries(2, &[(0, 0, 0, s(1))]);
    let res = check_d_bialgebra(&a, &grouplike_one).unwrap();
    assert_eq!(res.entries, oracle::d_bialgebra(&a, &grouplike_one));
    assert_eq!(
        values(&res),
        vec![
            (vec![0, 0, 0, 0], s(-1)),
            (vec![0, 1, 1, 0], s(-1)),
            (vec![1, 0, 0, 1], s(-1)),
        ]
    );
}

#[test]
fn nijenhuis_d_compat_and_special_condition() {
    let a = fix_dual2();
    let zero = Coalgebra::zero(2);
    let t = LinearMap::from_entries(2, &[(1, 0, s(1))]);
    let id = LinearMap::identity(2);
    assert!(check_nijenhuis_d_compat(&a, &zero, &t, &t)
        .unwrap()
        .passed());
    assert!(check_nijenhuis_d_compat(&a, &zero, &id, &id)
        .unwrap()
        .passed());
    assert!(
        check_special_bialgebra_condition(&a, &zero, &id, &id, &id, &id)
            .unwrap()
            .passed()
    );
    let z = LinearMap::zero(2);
    assert!(check_special_bialgebra_condition(&a, &zero, &z, &z, &z, &z)
        .unwrap()
        .passed());
}

#[test]
fn special_bracket_from_multiplication_by_t() {
    let a = fix_dual2();
    let t = LinearMap::from_entries(2, &[(1, 0, s(1))]);
    let out = special_left_alia(&a, &t, &LinearMap::zero(2)).unwrap();
    assert_eq!(out, Algebra::from_entries(2, &[(0, 0, 1, s(1))]));
    assert_eq!(out, oracle::special_left_alia(&a, &t, &LinearMap::zero(2)));
    let same = special_left_alia(&a, &LinearMap::identity(2), &LinearMap::zero(2)).unwrap();
    assert_eq!(same, a);
}

#[test]
fn semidirect_products_of_the_four_dim_algebra() {
    let a = fix_a4();
    let adj = left_right_operators(&a);
    let big = semidirect_product(&a, &adj).unwrap();
    assert!(check_left_alia(&big).passed());
    let (big, nij) = semidirect_product_with_maps(&a, &adj, &fix_n4(), &fix_n4()).unwrap();
    assert!(check_nijenhuis_algebra(&big, &nij).unwrap().passed());
    let double = drinfeld_double(&a, &Coalgebra::zero(4), None).unwrap();
    assert!(check_left_alia(&double.big).passed());
    assert!(check_quadratic(&double.big, &double.form).unwrap().passed());
}

#[test]
fn adjoint_with_respect_to_forms() {
    let id = BilinearForm::new(Matrix::identity(4));
    assert_eq!(
        adjoint_wrt_form(&fix_n4(), &id).unwrap(),
        dual_map(&fix_n4())
    );
    let b = BilinearForm::from_entries(2, &[(0, 1, s(1)), (1, 0, s(1)), (1, 1, s(3))]);
    assert_eq!(
        adjoint_wrt_form(&LinearMap::identity(2), &b).unwrap(),
        LinearMap::identity(2)
    );
}

#[test]
fn symmetric_tensor_equivalence_is_unconditional() {
    let a = fix_a4();
    let r = TwoTensor::from_entries(4, &[(0, 1, s(1)), (1, 0, s(1))]);
    let ybe = alia_ybe_residual(&a, &r).unwrap().passed();
    let coproduct = check_ybe_coproduct(&a, &r).unwrap().passed();
    assert_eq!(ybe, coproduct);
    assert_eq!(ybe, oracle::ybe(&a, &r).is_empty());
}

#[test]
fn s_admissibility_values() {
    assert!(s_admissibility_residual(&fix_r12(), &fix_n4(), &fix_s4())
        .unwrap()
        .passed());
    let res =
        s_admissibility_residual(&fix_r23(), &fix_nl(&s(1)), &LinearMap::identity(4)).unwrap();
    assert_eq!(
        res.entries,
        oracle::s_admissibility(&fix_r23(), &fix_nl(&s(1)), &LinearMap::identity(4))
    );
    assert_eq!(values(&res), vec![(vec![1, 2], s(1)), (vec![2, 1], s(-1))]);
}

#[test]
fn sharp_of_r12_is_a_rota_baxter_operator() {
    let a = fix_a4();
    let dual_adj = dual_representation(&left_right_operators(&a));
    let t = r_sharp(&fix_r12());
    assert!(check_relative_rota_baxter(&a, &dual_adj, &t)
        .unwrap()
        .passed());
    assert!(
        check_relative_rota_baxter(&a, &dual_adj, &LinearMap::zero(4))
            .unwrap()
            .passed()
    );
    let weak = check_weak_rrb(&a, &fix_n4(), &dual_adj, &dual_map(&fix_s4()), &t).unwrap();
    assert!(weak.passed());
    assert_eq!(r_sharp(&fix_ab2().1).m.rank(), 2);
}

#[test]
fn lift_of_identity_matches_rota_baxter_verdict() {
    let a = fix_a4();
    let adj = left_right_operators(&a);
    let id = LinearMap::identity(4);
    let none = LiftMaps {
        nmap: None,
        s: None,
        alpha: None,
        beta: None,
    };
    let lift = t_sharp_lift(&a, &adj, &id, none).unwrap();
    assert_eq!(lift.big.dim(), 8);
    assert_eq!(
        alia_ybe_residual(&lift.big, &lift.r).unwrap().passed(),
        check_relative_rota_baxter(&a, &adj, &id).unwrap().passed()
    );
    let zero = t_sharp_lift(&a, &adj, &LinearMap::zero(4), none).unwrap();
    assert!(zero.r.t.is_zero());
}

#[test]
fn semidirect_admissibility_trivial_maps() {
    let a = fix_a4();
    let adj = left_right_operators(&a);
    let id = LinearMap::identity(4);
    let z = LinearMap::zero(4);
    assert!(
        check_semidirect_admissibility(&a, &fix_n4(), &adj, &fix_s4(), &id, &id)
            .unwrap()
            .passed()
    );
    assert!(
        check_semidirect_admissibility(&a, &fix_n4(), &adj, &z, &z, &z)
            .unwrap()
            .passed()
    );
}

#[test]
fn induced_bracket_and_form_maps() {
    let w = fix_w4(&s(1));
    assert!(check_co_ybe_bracket(&fix_d5(), &w).unwrap().passed());
    assert!(bracket_omega(&fix_d5(), &BilinearForm::zero(4))
        .unwrap()
        .is_zero());
    assert!(bracket_omega(&Coalgebra::zero(4), &w).unwrap().is_zero());
    let (_, r) = fix_ab2();
    assert_eq!(omega_from_r(&r).unwrap().w.get(0, 1), &s(-1));
    assert_eq!(
        nijenhuis_map_from_form(&BilinearForm::zero(4), &fix_r23()),
        LinearMap::zero(4)
    );
    assert_eq!(
        coalgebra_map_from_form(&fix_r23(), &BilinearForm::zero(4)),
        LinearMap::zero(4)
    );
    assert_eq!(
        coalgebra_map_from_form(&TwoTensor::zero(4), &w),
        LinearMap::zero(4)
    );
}
