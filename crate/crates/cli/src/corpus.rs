//! Structure files shipped inside the binary.

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

macro_rules! example {
    ($name:literal, $summary:literal) => {
        Example {
            name: $name,
            summary: $summary,
            text: include_str!(concat!("../corpus/", $name, ".alia")),
        }
    };
}

pub const CORPUS: &[Example] = &[
    example!(
        "nijenhuis_bialgebra",
        "4-dim Nijenhuis left Alia bialgebra with N and S"
    ),
    example!(
        "triangular",
        "antisymmetric Yang-Baxter solution r on the same algebra"
    ),
    example!(
        "symplectic_family",
        "symplectic form w(lambda) with tensor r and map N"
    ),
    example!(
        "abelian_plane",
        "zero bracket, nondegenerate r and its inverse form w"
    ),
    example!(
        "dual_numbers",
        "dual numbers with maps f and g for the special bracket"
    ),
    example!("sl2", "sl2 as a left Alia algebra"),
];

/// Looks up an example by name, with or without the `.alia` suffix.
pub fn find(name: &str) -> Option<&'static Example> {
    let base = name.strip_suffix(".alia").unwrap_or(name);
    CORPUS.iter().find(|e| e.name == base)
}
