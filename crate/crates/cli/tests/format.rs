use std::collections::BTreeMap;

use alia_cli::corpus;
use alia_cli::dispatch::{construct, Kind, RepChoice};
use alia_cli::{emit, parse_structure, CliError};
use alia_core::fixtures::{fix_a4, fix_d4, fix_n4, fix_nl, fix_s4, fix_w4};
use alia_core::{Algebra, BilinearForm, Bundle, Coalgebra, LinearMap, Scalar, TwoTensor};
use proptest::prelude::*;

fn corpus_text(name: &str) -> &'static str {
    corpus::find(name).unwrap().text
}

fn bind(name: &str, v: i64) -> BTreeMap<String, Scalar> {
    BTreeMap::from([(name.to_string(), Scalar::from_int(v))])
}

#[test]
fn bialgebra_file_matches_fixture_tables() {
    let b = parse_structure(corpus_text("nijenhuis_bialgebra"), &BTreeMap::new()).unwrap();
    assert_eq!(b.dim, 4);
    assert_eq!(b.algebra, Some(fix_a4()));
    assert_eq!(b.coalgebra, Some(fix_d4()));
    assert_eq!(b.maps["N"], fix_n4());
    assert_eq!(b.maps["S"], fix_s4());
}

#[test]
fn symplectic_family_at_two() {
    let two = Scalar::from_int(2);
    let b = parse_structure(corpus_text("symplectic_family"), &bind("lambda", 2)).unwrap();
    assert_eq!(b.forms["w"], fix_w4(&two));
    assert_eq!(b.maps["N"], fix_nl(&two));
}

#[test]
fn out_of_range_index() {
    let err = parse_structure("dim 4\nbracket 5 1 = 1*1\n", &BTreeMap::new()).unwrap_err();
    assert!(
        matches!(err, CliError::IndexOutOfRange { line: 2, .. }),
        "{err}"
    );
    assert!(err.to_string().starts_with("INDEX_OUT_OF_RANGE"));
}

#[test]
fn syntax_errors_carry_position() {
    let err = parse_structure("dim 2\nbracket 1 2 = 1*2 $\n", &BTreeMap::new()).unwrap_err();
    assert!(
        matches!(
            err,
            CliError::Syntax {
                line: 2,
                col: 19,
                ..
            }
        ),
        "{err}"
    );
    assert!(err.to_string().starts_with("SYNTAX(2, 19)"));

    let err = parse_structure("dim 2\nwidget 1 = 3\n", &BTreeMap::new()).unwrap_err();
    assert!(
        matches!(
            err,
            CliError::Syntax {
                line: 2,
                col: 1,
                ..
            }
        ),
        "{err}"
    );
}

#[test]
fn parameters_must_be_declared_and_bound() {
    let err = parse_structure("dim 2\nbracket 1 1 = mu*2\n", &BTreeMap::new()).unwrap_err();
    assert_eq!(err.to_string(), "UNBOUND_PARAM(mu)");
    let err =
        parse_structure("dim 2\nparam mu\nbracket 1 1 = mu*2\n", &BTreeMap::new()).unwrap_err();
    assert_eq!(err.to_string(), "UNBOUND_PARAM(mu)");
    let b = parse_structure(
        "dim 2\nparam mu\nbracket 1 1 = 3/2*mu*mu*2\n",
        &bind("mu", 2),
    )
    .unwrap();
    assert_eq!(b.algebra.unwrap().c(0, 0, 1), &Scalar::from_int(6));
}

#[test]
fn coefficients_are_canonical_rationals() {
    let b = parse_structure("dim 1\nmap N = 4/6*(1<-1) - 1/3*(1<-1)\n", &BTreeMap::new()).unwrap();
    assert_eq!(emit(&b), "dim 1\nmap N = 1/3*(1<-1)\n");
}

#[test]
fn corpus_files_are_canonical() {
    for e in corpus::CORPUS {
        if e.text.contains("param ") {
            continue;
        }
        let b = parse_structure(e.text, &BTreeMap::new()).unwrap();
        let text = emit(&b);
        assert_eq!(
            parse_structure(&text, &BTreeMap::new()).unwrap(),
            b,
            "{}",
            e.name
        );
        assert_eq!(
            emit(&parse_structure(&text, &BTreeMap::new()).unwrap()),
            text
        );
    }
}

#[test]
fn construction_outputs_round_trip() {
    let cases: &[(Kind, &str)] = &[
        (Kind::Double, "nijenhuis_bialgebra"),
        (Kind::DeltaR, "triangular"),
        (Kind::NijenhuisFromSymplectic, "symplectic_family"),
        (Kind::NijenhuisFromSymplectic, "abelian_plane"),
        (Kind::Special, "dual_numbers"),
        (Kind::Semidirect, "sl2"),
        (Kind::TSharpLift, "triangular"),
    ];
    for &(kind, name) in cases {
        let mut input = parse_structure(corpus_text(name), &bind("lambda", 3))
            .or_else(|_| parse_structure(corpus_text(name), &BTreeMap::new()))
            .unwrap();
        if kind == Kind::TSharpLift {
            input.maps.insert("T".into(), LinearMap::zero(input.dim));
        }
        let out = construct(kind, &input, RepChoice::Adjoint).unwrap();
        let back = parse_structure(&emit(&out), &BTreeMap::new()).unwrap();
        assert_eq!(back, out, "{} on {name}", kind.name());
    }
}

fn coefficient() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        4 => Just(Scalar::zero()),
        1 => (-5i64..=5, 1i64..=4).prop_map(|(p, q)| Scalar::ratio(p, q)),
    ]
}

fn cube(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(coefficient(), n * n * n)
}

fn square(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(coefficient(), n * n)
}

fn pairs(n: usize, v: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
    (0..n * n).map(|k| (k / n, k % n, v[k].clone())).collect()
}

fn triples(n: usize, v: &[Scalar]) -> Vec<(usize, usize, usize, Scalar)> {
    (0..n * n * n)
        .map(|k| (k / (n * n), (k / n) % n, k % n, v[k].clone()))
        .collect()
}

fn bundle() -> impl Strategy<Value = Bundle> {
    (1usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::option::of(cube(n)),
            prop::option::of(cube(n)),
            prop::collection::btree_map(
                prop::sample::select(vec!["N", "S", "f", "T"]),
                square(n),
                0..3,
            ),
            prop::option::of(square(n)),
            prop::option::of(square(n)),
        )
            .prop_map(|(n, alg, coalg, maps, r, w)| Bundle {
                dim: n,
                algebra: alg.map(|v| Algebra::from_entries(n, &triples(n, &v))),
                coalgebra: coalg.map(|v| Coalgebra::from_entries(n, &triples(n, &v))),
                maps: maps
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), LinearMap::from_entries(n, &pairs(n, &v))))
                    .collect(),
                tensors: r
                    .map(|v| ("r".to_string(), TwoTensor::from_entries(n, &pairs(n, &v))))
                    .into_iter()
                    .collect(),
                forms: w
                    .map(|v| {
                        (
                            "w".to_string(),
                            BilinearForm::from_entries(n, &pairs(n, &v)),
                        )
                    })
                    .into_iter()
                    .collect(),
            })
    })
}

proptest! {
    #[test]
    fn emitted_text_parses_back(b in bundle()) {
        let text = emit(&b);
        let back = parse_structure(&text, &BTreeMap::new()).unwrap();
        prop_assert_eq!(&back, &b);
        prop_assert_eq!(emit(&back), text);
    }
}
