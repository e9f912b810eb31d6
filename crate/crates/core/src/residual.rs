//! Coordinate-wise residuals of identities.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LawId {
    LeftAlia,
    Associative,
    Commutative,
    Coassociative,
    Cocommutative,
    NijenhuisAlgebra,
    LeftAliaCoalgebra,
    NijenhuisCoalgebra,
    Representation,
    NijenhuisRepresentation,
    Admissible,
    AdjointAdmissible,
    CoadjointAdmissible,
    BialgebraCompat,
    NijLeftAliaBialgebra,
    Quadratic,
    Symplectic,
    Cosymplectic,
    DBialgebra,
    NijenhuisDCompat,
    SpecialBialgebra,
    AliaYbe,
    YbeCoproduct,
    SAdmissibility,
    CoboundaryNijenhuis,
    RelativeRotaBaxter,
    WeakRelativeRotaBaxter,
    SemidirectAdmissibility,
    CoYbe,
    CoYbeBracket,
}

impl LawId {
    pub const ALL: [LawId; 30] = [
        LawId::LeftAlia,
        LawId::Associative,
        LawId::Commutative,
        LawId::Coassociative,
        LawId::Cocommutative,
        LawId::NijenhuisAlgebra,
        LawId::LeftAliaCoalgebra,
        LawId::NijenhuisCoalgebra,
        LawId::Representation,
        LawId::NijenhuisRepresentation,
        LawId::Admissible,
        LawId::AdjointAdmissible,
        LawId::CoadjointAdmissible,
        LawId::BialgebraCompat,
        LawId::NijLeftAliaBialgebra,
        LawId::Quadratic,
        LawId::Symplectic,
        LawId::Cosymplectic,
        LawId::DBialgebra,
        LawId::NijenhuisDCompat,
        LawId::SpecialBialgebra,
        LawId::AliaYbe,
        LawId::YbeCoproduct,
        LawId::SAdmissibility,
        LawId::CoboundaryNijenhuis,
        LawId::RelativeRotaBaxter,
        LawId::WeakRelativeRotaBaxter,
        LawId::SemidirectAdmissibility,
        LawId::CoYbe,
        LawId::CoYbeBracket,
    ];

    /// Kebab-case name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            LawId::LeftAlia => "left-alia",
            LawId::Associative => "associative",
            LawId::Commutative => "commutative",
            LawId::Coassociative => "coassociative",
            LawId::Cocommutative => "cocommutative",
            LawId::NijenhuisAlgebra => "nijenhuis-algebra",
            LawId::LeftAliaCoalgebra => "left-alia-coalgebra",
            LawId::NijenhuisCoalgebra => "nijenhuis-coalgebra",
            LawId::Representation => "representation",
            LawId::NijenhuisRepresentation => "nijenhuis-representation",
            LawId::Admissible => "admissible",
            LawId::AdjointAdmissible => "adjoint-admissible",
            LawId::CoadjointAdmissible => "coadjoint-admissible",
            LawId::BialgebraCompat => "bialgebra-compat",
            LawId::NijLeftAliaBialgebra => "nijenhuis-bialgebra",
            LawId::Quadratic => "quadratic",
            LawId::Symplectic => "symplectic",
            LawId::Cosymplectic => "cosymplectic",
            LawId::DBialgebra => "d-bialgebra",
            LawId::NijenhuisDCompat => "nijenhuis-d-compat",
            LawId::SpecialBialgebra => "special-bialgebra",
            LawId::AliaYbe => "ybe",
            LawId::YbeCoproduct => "ybe-coproduct",
            LawId::SAdmissibility => "s-admissibility",
            LawId::CoboundaryNijenhuis => "coboundary-nijenhuis",
            LawId::RelativeRotaBaxter => "relative-rota-baxter",
            LawId::WeakRelativeRotaBaxter => "weak-relative-rota-baxter",
            LawId::SemidirectAdmissibility => "semidirect-admissibility",
            LawId::CoYbe => "co-ybe",
            LawId::CoYbeBracket => "co-ybe-bracket",
        }
    }

    pub fn from_name(s: &str) -> Option<LawId> {
        LawId::ALL.into_iter().find(|l| l.name() == s)
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One nonzero coordinate of a residual.
///
/// `law` is the sub-law that produced the entry (it differs from the owning
/// residual's law only for composite checks), `part` names the equation
/// within that law, and `index` is the 0-based multi-index: the basis tuple
/// the identity was instantiated at, followed by output coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Entry {
    pub law: LawId,
    pub part: &'static str,
    pub index: Vec<usize>,
    pub value: Scalar,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Residual {
    pub law: LawId,
    pub entries: Vec<Entry>,
}

impl Residual {
    pub fn empty(law: LawId) -> Self {
        Residual {
            law,
            entries: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.is_empty()
    }

    /// Appends entries of another residual, keeping their sub-law tags.
    pub fn absorb(&mut self, other: Residual) {
        self.entries.extend(other.entries);
    }

    pub fn parts(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.part) {
                out.push(e.part);
            }
        }
        out
    }

    /// Entries belonging to one sub-law.
    pub fn sub_law(&self, law: LawId) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(move |e| e.law == law)
    }

    pub fn sub_law_passed(&self, law: LawId) -> bool {
        self.sub_law(law).next().is_none()
    }

    pub fn part_passed(&self, part: &str) -> bool {
        !self.entries.iter().any(|e| e.part == part)
    }
}

/// Collects nonzero values into entries, in the order produced.
pub(crate) struct EntrySink {
    law: LawId,
    part: &'static str,
    pub(crate) out: Vec<Entry>,
}

impl EntrySink {
    pub(crate) fn new(law: LawId, part: &'static str) -> Self {
        EntrySink {
            law,
            part,
            out: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, index: &[usize], value: Scalar) {
        if !value.is_zero() {
            self.out.push(Entry {
                law: self.law,
                part: self.part,
                index: index.to_vec(),
                value,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for law in LawId::ALL {
            assert_eq!(LawId::from_name(law.name()), Some(law));
        }
        assert_eq!(LawId::from_name("nope"), None);
    }

    #[test]
    fn sink_drops_zeros() {
        let mut s = EntrySink::new(LawId::LeftAlia, "main");
        s.push(&[0], Scalar::zero());
        s.push(&[1], Scalar::one());
        assert_eq!(s.out.len(), 1);
        assert_eq!(s.out[0].index, vec![1]);
    }
}
