//! Built-in worked examples.
//!
//! Basis vectors are written `e1, e2, …` in comments and are 0-based in code.

use crate::error::{AliaError, Result};
use crate::residual::LawId;
use crate::scalar::Scalar;
use crate::structures::{Algebra, BilinearForm, Bundle, Coalgebra, LinearMap, TwoTensor};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// 4-dim left Alia algebra: `[e3, e1] = e1`, `[e4, e1] = e3`.
pub fn fix_a4() -> Algebra {
    Algebra::from_entries(4, &[(2, 0, 0, s(1)), (3, 0, 2, s(1))])
}

/// `N(e1) = e1`, `N(e2) = e1 + e2`, `N(e3) = e3`, `N(e4) = e4`.
pub fn fix_n4() -> LinearMap {
    LinearMap::from_entries(
        4,
        &[
            (0, 0, s(1)),
            (0, 1, s(1)),
            (1, 1, s(1)),
            (2, 2, s(1)),
            (3, 3, s(1)),
        ],
    )
}

/// `Δ(e3) = −e1⊗e2`, `Δ(e4) = −e3⊗e2`.
pub fn fix_d4() -> Coalgebra {
    Coalgebra::from_entries(4, &[(2, 0, 1, s(-1)), (3, 2, 1, s(-1))])
}

/// `S(e1) = e1`, `S(e2) = e2 − e1`, `S(e3) = e3`, `S(e4) = e4 − e1`.
pub fn fix_s4() -> LinearMap {
    LinearMap::from_entries(
        4,
        &[
            (0, 0, s(1)),
            (1, 1, s(1)),
            (0, 1, s(-1)),
            (2, 2, s(1)),
            (3, 3, s(1)),
            (0, 3, s(-1)),
        ],
    )
}

/// `e1⊗e2 − e2⊗e1` in dimension 4.
pub fn fix_r12() -> TwoTensor {
    TwoTensor::from_entries(4, &[(0, 1, s(1)), (1, 0, s(-1))])
}

/// `e2⊗e3 − e3⊗e2` in dimension 4.
pub fn fix_r23() -> TwoTensor {
    TwoTensor::from_entries(4, &[(1, 2, s(1)), (2, 1, s(-1))])
}

/// `Δ(e1) = −e1⊗e2 − e2⊗e1`, zero elsewhere.
pub fn fix_d5() -> Coalgebra {
    Coalgebra::from_entries(4, &[(0, 0, 1, s(-1)), (0, 1, 0, s(-1))])
}

/// `ω(e2, e4) = λ = −ω(e4, e2)`.
pub fn fix_w4(lambda: &Scalar) -> BilinearForm {
    BilinearForm::from_entries(4, &[(1, 3, lambda.clone()), (3, 1, -lambda)])
}

/// `N(e4) = −λ e3`, zero elsewhere.
pub fn fix_nl(lambda: &Scalar) -> LinearMap {
    LinearMap::from_entries(4, &[(2, 3, -lambda)])
}

/// `K[t]/(t²)` with `e1 = 1`, `e2 = t`.
pub fn fix_dual2() -> Algebra {
    Algebra::from_entries(2, &[(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1))])
}

/// Zero bracket on a 2-dim space with `r = e1⊗e2 − e2⊗e1`.
pub fn fix_ab2() -> (Algebra, TwoTensor) {
    (
        Algebra::zero(2),
        TwoTensor::from_entries(2, &[(0, 1, s(1)), (1, 0, s(-1))]),
    )
}

/// `sl2` in the basis `h, e, f`.
pub fn fix_sl2() -> Algebra {
    Algebra::from_entries(
        3,
        &[
            (0, 1, 1, s(2)),
            (1, 0, 1, s(-2)),
            (0, 2, 2, s(-2)),
            (2, 0, 2, s(2)),
            (1, 2, 0, s(1)),
            (2, 1, 0, s(-1)),
        ],
    )
}

/// A catalog entry: the bundle layout and the laws it is claimed to satisfy.
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameterized: bool,
    pub claims: &'static [LawId],
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "A4",
        parameterized: false,
        claims: &[LawId::LeftAlia],
    },
    CatalogEntry {
        name: "N4",
        parameterized: false,
        claims: &[LawId::NijenhuisAlgebra],
    },
    CatalogEntry {
        name: "D4",
        parameterized: false,
        claims: &[LawId::LeftAliaCoalgebra, LawId::BialgebraCompat],
    },
    CatalogEntry {
        name: "S4",
        parameterized: false,
        claims: &[LawId::NijenhuisCoalgebra],
    },
    CatalogEntry {
        name: "r12",
        parameterized: false,
        claims: &[LawId::AliaYbe],
    },
    CatalogEntry {
        name: "r23",
        parameterized: false,
        claims: &[LawId::AliaYbe],
    },
    CatalogEntry {
        name: "D5",
        parameterized: false,
        claims: &[LawId::LeftAliaCoalgebra, LawId::BialgebraCompat],
    },
    CatalogEntry {
        name: "W4",
        parameterized: true,
        claims: &[LawId::Symplectic, LawId::CoYbe],
    },
    CatalogEntry {
        name: "NL",
        parameterized: true,
        claims: &[LawId::NijenhuisAlgebra],
    },
    CatalogEntry {
        name: "DUAL2",
        parameterized: false,
        claims: &[LawId::Associative, LawId::Commutative],
    },
    CatalogEntry {
        name: "AB2",
        parameterized: false,
        claims: &[LawId::AliaYbe],
    },
    CatalogEntry {
        name: "SL2",
        parameterized: false,
        claims: &[LawId::LeftAlia],
    },
    CatalogEntry {
        name: "BIALG4",
        parameterized: false,
        claims: &[LawId::NijLeftAliaBialgebra, LawId::SAdmissibility],
    },
];

/// Splits `FIX_W4(3/2)` / `W4(3/2)` / `W4` into a name and optional λ.
fn split_name(raw: &str) -> Result<(&str, Option<Scalar>)> {
    let unknown = || AliaError::UnknownFixture(raw.to_string());
    let body = raw.strip_prefix("FIX_").unwrap_or(raw);
    match body.split_once('(') {
        None => Ok((body, None)),
        Some((name, rest)) => {
            let arg = rest.strip_suffix(')').ok_or_else(unknown)?;
            let lambda = arg.parse::<Scalar>().map_err(|_| unknown())?;
            Ok((name, Some(lambda)))
        }
    }
}

/// Loads a named fixture as a bundle. Parameterized fixtures take `λ` in
/// parentheses, e.g. `W4(2)`; without it `λ = 1`.
///
/// Bundles use the standard names: map `N`, map `S`, tensor `r`, form `w`.
pub fn fixture(name: &str) -> Result<Bundle> {
    let (base, lambda) = split_name(name)?;
    let entry = CATALOG
        .iter()
        .find(|e| e.name == base)
        .ok_or_else(|| AliaError::UnknownFixture(name.to_string()))?;
    if lambda.is_some() && !entry.parameterized {
        return Err(AliaError::UnknownFixture(name.to_string()));
    }
    let lambda = lambda.unwrap_or_else(Scalar::one);
    let mut b = Bundle::new(4);
    match base {
        "A4" => b.algebra = Some(fix_a4()),
        "N4" => {
            b.algebra = Some(fix_a4());
            b.maps.insert("N".into(), fix_n4());
        }
        "D4" => {
            b.algebra = Some(fix_a4());
            b.coalgebra = Some(fix_d4());
        }
        "S4" => {
            b.coalgebra = Some(fix_d4());
            b.maps.insert("S".into(), fix_s4());
        }
        "r12" => {
            b.algebra = Some(fix_a4());
            b.tensors.insert("r".into(), fix_r12());
        }
        "r23" => {
            b.algebra = Some(fix_a4());
            b.tensors.insert("r".into(), fix_r23());
        }
        "D5" => {
            b.algebra = Some(fix_a4());
            b.coalgebra = Some(fix_d5());
        }
        "W4" => {
            b.algebra = Some(fix_a4());
            b.coalgebra = Some(fix_d5());
            b.forms.insert("w".into(), fix_w4(&lambda));
        }
        "NL" => {
            b.algebra = Some(fix_a4());
            b.maps.insert("N".into(), fix_nl(&lambda));
        }
        "DUAL2" => {
            b = Bundle::new(2);
            b.algebra = Some(fix_dual2());
        }
        "AB2" => {
            let (a, r) = fix_ab2();
            b = Bundle::new(2);
            b.algebra = Some(a);
            b.tensors.insert("r".into(), r);
        }
        "SL2" => {
            b = Bundle::new(3);
            b.algebra = Some(fix_sl2());
        }
        "BIALG4" => {
            b.algebra = Some(fix_a4());
            b.coalgebra = Some(fix_d4());
            b.maps.insert("N".into(), fix_n4());
            b.maps.insert("S".into(), fix_s4());
            b.tensors.insert("r".into(), fix_r12());
        }
        _ => unreachable!("catalog and loader disagree"),
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_loads() {
        for e in CATALOG {
            let b = fixture(e.name).unwrap();
            assert!(b.algebra.is_some() || b.coalgebra.is_some(), "{}", e.name);
        }
    }

    #[test]
    fn parameter_parsing() {
        let b = fixture("FIX_W4(3/2)").unwrap();
        assert_eq!(b.forms["w"].w.get(1, 3), &Scalar::ratio(3, 2));
        assert!(fixture("A4(2)").is_err());
        assert!(fixture("W4(x)").is_err());
        assert!(matches!(fixture("nope"), Err(AliaError::UnknownFixture(_))));
    }
}
