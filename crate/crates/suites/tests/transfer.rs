//! Special-structure transfer, coalgebra duality and the bialgebra triangle.

use alia_core::constructions::{adjoint_wrt_form, drinfeld_double};
use alia_core::fixtures::*;
use alia_core::laws::check_adjoint_admissible;
use alia_core::{dual_map, dualize_coalgebra, LinearMap, Scalar};
use alia_suites::transfer::{self, triangle};

#[test]
fn nijenhuis_transfer_to_special_algebra() {
    let t = transfer::nijenhuis_transfer();
    assert!(t.ok() && t.passes == 100, "{t}");
}

#[test]
fn swapped_maps_give_special_bialgebras() {
    let t = transfer::swapped_maps();
    assert!(t.ok() && t.passes == 100, "{t}");
}

#[test]
fn nijenhuis_coalgebra_duality() {
    let t = transfer::coalgebra_duality();
    assert!(t.ok() && t.cases == 100, "{t}");
}

#[test]
fn double_matched_pair_and_bialgebra_agree() {
    let t = transfer::triangle_agreement();
    assert!(t.ok() && t.cases >= 20, "{t}");
}

#[test]
fn double_of_the_four_dimensional_bialgebra() {
    let (a, c, nmap, s) = (fix_a4(), fix_d4(), fix_n4(), fix_s4());
    assert_eq!(triangle(&a, &c, &nmap, &s).unwrap(), [true; 3]);
    let double = drinfeld_double(&a, &c, Some((&nmap, &s))).unwrap();
    let nij = double.nij.unwrap();
    let adj = adjoint_wrt_form(&nij, &double.form).unwrap();
    assert_eq!(Some(adj.clone()), double.adm);
    assert!(check_adjoint_admissible(&double.big, &nij, &adj)
        .unwrap()
        .passed());
    assert!(check_adjoint_admissible(&a, &nmap, &s).unwrap().passed());
    let dual_alg = dualize_coalgebra(&c);
    assert!(
        check_adjoint_admissible(&dual_alg, &dual_map(&s), &dual_map(&nmap))
            .unwrap()
            .passed()
    );
    // a doubled scalar for S breaks all three descriptions together
    let two = LinearMap::scalar(4, &Scalar::from_int(2));
    assert_eq!(triangle(&a, &c, &nmap, &two).unwrap(), [false; 3]);
}
