use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

use alia_cli::parse_structure;
use alia_core::fixtures::fix_d4;
use alia_core::LinearMap;

fn alia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alia"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const BIALG: &str = "corpus/nijenhuis_bialgebra.alia";

#[test]
fn bialgebra_file_passes() {
    let o = alia(&["check", BIALG, "--law", "nijenhuis-bialgebra"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict   PASS"));
}

#[test]
fn identity_for_s_still_passes() {
    let o = alia(&[
        "check",
        BIALG,
        "--law",
        "nijenhuis-bialgebra",
        "--override",
        "S=identity",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn doubled_s_is_localized() {
    let o = alia(&[
        "check",
        BIALG,
        "--law",
        "nijenhuis-bialgebra",
        "--override",
        "S=2",
    ]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(
        out.contains("failing   coadjoint-admissible/left: 2 nonzero"),
        "{out}"
    );
    assert!(
        out.contains("residual  coadjoint-admissible/left (3,1,1) = 1"),
        "{out}"
    );
}

#[test]
fn input_errors_exit_two() {
    let o = alia(&["check", "missing.alia", "--law", "left-alia"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("missing.alia"));

    let o = alia(&["check", "tests/data/bad_index.alia", "--law", "left-alia"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("INDEX_OUT_OF_RANGE"));

    let o = alia(&["check", BIALG, "--law", "no-such-law"]);
    assert_eq!(code(&o), 2);

    let o = alia(&["check", BIALG, "--law", "left-alia", "--set", "mu=1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("mu"));

    let o = alia(&[
        "check",
        BIALG,
        "--law",
        "nijenhuis-algebra",
        "--override",
        "N=Q",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn merged_inputs_must_agree() {
    let o = alia(&[
        "check",
        BIALG,
        "corpus/triangular.alia",
        "--law",
        "left-alia",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("CONFLICT"));
}

#[test]
fn thread_count_must_be_positive() {
    let o = Command::new(env!("CARGO_BIN_EXE_alia"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("ALIA_THREADS", "0")
        .args(["check", BIALG, "--law", "left-alia"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn delta_r_output_is_a_coalgebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.alia");
    let o = alia(&[
        "construct",
        "delta-r",
        "corpus/triangular.alia",
        "-o",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let b = parse_structure(&std::fs::read_to_string(&out).unwrap(), &BTreeMap::new()).unwrap();
    assert_eq!(b.coalgebra, Some(fix_d4()));
    let o = alia(&["check", path_str(&out), "--law", "left-alia-coalgebra"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn nijenhuis_from_symplectic_at_three() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.alia");
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/symplectic_family.alia"),
    )
    .unwrap();
    let without_map: String = text
        .lines()
        .filter(|l| !l.starts_with("map "))
        .map(|l| format!("{l}\n"))
        .collect();
    std::fs::write(&input, without_map).unwrap();
    let out = dir.path().join("n.alia");
    let o = alia(&[
        "construct",
        "nijenhuis-from-symplectic",
        path_str(&input),
        "--set",
        "lambda=3",
        "-o",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let emitted = std::fs::read_to_string(&out).unwrap();
    let maps: Vec<&str> = emitted.lines().filter(|l| l.starts_with("map ")).collect();
    assert_eq!(maps, ["map N = -3*(3<-4)"]);
}

#[test]
fn double_is_quadratic_with_nijenhuis_map() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.alia");
    let o = alia(&["construct", "double", BIALG, "-o", path_str(&out)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("dim 8\n"));
    for law in ["quadratic", "nijenhuis-algebra", "left-alia"] {
        let o = alia(&["check", path_str(&out), "--law", law]);
        assert_eq!(code(&o), 0, "{law}: {}", stdout(&o));
    }
}

#[test]
fn abelian_plane_gives_identity() {
    let o = alia(&[
        "construct",
        "nijenhuis-from-symplectic",
        "corpus/abelian_plane.alia",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let b = parse_structure(&stdout(&o), &BTreeMap::new()).unwrap();
    assert_eq!(b.maps["N"], LinearMap::identity(2));
}

#[test]
fn failed_hypothesis_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("r.alia");
    std::fs::write(&input, "dim 2\nbracket 1 1 = 0\ntensor r = 1*(1,2)\n").unwrap();
    let o = alia(&["construct", "delta-r", path_str(&input)]);
    assert_eq!(code(&o), 1);
    assert!(
        stderr(&o).contains("HYPOTHESIS_FAILED: r-antisymmetric"),
        "{}",
        stderr(&o)
    );

    let o = alia(&[
        "construct",
        "special",
        "corpus/sl2.alia",
        "--override",
        "f=identity",
        "--override",
        "g=zero",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("HYPOTHESIS_FAILED"), "{}", stderr(&o));
}

#[test]
fn certify_parameter_family() {
    for law in ["nijenhuis-algebra", "symplectic"] {
        let o = alia(&["certify", "corpus/symplectic_family.alia", "--law", law]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        let out = stdout(&o);
        assert!(out.contains("degree bound 4"));
        assert!(out.contains("verdict   CERTIFIED"));
    }
}

#[test]
fn certify_names_witness() {
    let o = alia(&[
        "certify",
        "tests/data/grid_witness.alia",
        "--law",
        "commutative",
    ]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("witness   lambda=2"), "{out}");
    assert!(out.contains("point     lambda=3 PASS"));
    assert!(out.contains("verdict   NOT CERTIFIED"));
}

#[test]
fn certify_without_parameters_is_check() {
    for extra in [&[][..], &["--override", "S=2"][..]] {
        let mut check = vec!["check", BIALG, "--law", "nijenhuis-bialgebra"];
        check.extend_from_slice(extra);
        let mut certify = check.clone();
        certify[0] = "certify";
        let (a, b) = (alia(&check), alia(&certify));
        assert_eq!(code(&a), code(&b));
        assert_eq!(a.stdout, b.stdout);
    }
    let o = alia(&[
        "certify",
        "corpus/symplectic_family.alia",
        "--law",
        "symplectic",
        "--set",
        "lambda=1",
    ]);
    assert!(stdout(&o).starts_with("check symplectic\n"));
}

#[test]
fn json_report() {
    let o = alia(&[
        "check",
        BIALG,
        "--law",
        "nijenhuis-bialgebra",
        "--override",
        "S=2",
        "--json",
    ]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "FAIL");
    assert_eq!(v["outcome"]["entries"][0]["value"], "1");
    assert_eq!(
        v["outcome"]["entries"][0]["index"],
        serde_json::json!([3, 1, 1])
    );
}

#[test]
fn examples_are_listed_and_printed() {
    let o = alia(&["examples"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.starts_with("triangular ")));
    let o = alia(&["examples", "triangular"]);
    let on_disk = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/triangular.alia"),
    )
    .unwrap();
    assert_eq!(stdout(&o), on_disk);
    assert_eq!(code(&alia(&["examples", "nothing"])), 2);
}
