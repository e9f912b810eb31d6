//! Maps law names and construction kinds onto bundle components.
//!
//! Component names: the `bracket` and `comul` sections, maps `N`, `S`, `f`,
//! `g`, `F`, `G`, `alpha`, `beta`, `T`, tensor `r`, forms `w` and `B`.

use alia_core::constructions::{
    drinfeld_double, dual_representation, semidirect_product, semidirect_product_with_maps,
    special_left_alia, special_left_alia_coalgebra,
};
use alia_core::dual_triangular::{
    bracket_omega, check_co_ybe_bracket, co_ybe_residual, nijenhuis_from_symplectic,
};
use alia_core::laws::*;
use alia_core::yang_baxter::*;
use alia_core::{
    left_right_operators, Algebra, AliaError, BilinearForm, Bundle, Coalgebra, LawId, LinearMap,
    Representation, Residual, Scalar, TwoTensor,
};
use clap::ValueEnum;

use crate::error::CliError;

/// Module used by laws and constructions that take a representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum RepChoice {
    /// `ℒ` and `ℛ` acting on the algebra itself.
    #[default]
    Adjoint,
    /// The dual of the adjoint module.
    DualAdjoint,
}

impl RepChoice {
    pub fn name(self) -> &'static str {
        match self {
            RepChoice::Adjoint => "adjoint",
            RepChoice::DualAdjoint => "dual-adjoint",
        }
    }

    fn build(self, a: &Algebra) -> Representation {
        let adj = left_right_operators(a);
        match self {
            RepChoice::Adjoint => adj,
            RepChoice::DualAdjoint => dual_representation(&adj),
        }
    }
}

/// A bundle viewed as inputs to one law or construction.
pub struct Inputs<'a> {
    bundle: &'a Bundle,
    rep: RepChoice,
    context: String,
}

impl<'a> Inputs<'a> {
    pub fn new(bundle: &'a Bundle, rep: RepChoice, context: impl Into<String>) -> Self {
        Inputs {
            bundle,
            rep,
            context: context.into(),
        }
    }

    fn missing(&self, what: &str) -> CliError {
        CliError::Missing(format!("{} needs {what}", self.context))
    }

    fn algebra(&self) -> Result<&'a Algebra, CliError> {
        self.bundle
            .algebra
            .as_ref()
            .ok_or_else(|| self.missing("a `bracket` section"))
    }

    fn coalgebra(&self) -> Result<&'a Coalgebra, CliError> {
        self.bundle
            .coalgebra
            .as_ref()
            .ok_or_else(|| self.missing("a `comul` section"))
    }

    fn map(&self, name: &str) -> Result<&'a LinearMap, CliError> {
        self.bundle
            .maps
            .get(name)
            .ok_or_else(|| self.missing(&format!("map `{name}`")))
    }

    fn tensor(&self, name: &str) -> Result<&'a TwoTensor, CliError> {
        self.bundle
            .tensors
            .get(name)
            .ok_or_else(|| self.missing(&format!("tensor `{name}`")))
    }

    fn form(&self, name: &str) -> Result<&'a BilinearForm, CliError> {
        self.bundle
            .forms
            .get(name)
            .ok_or_else(|| self.missing(&format!("form `{name}`")))
    }

    fn rep(&self) -> Result<Representation, CliError> {
        Ok(self.rep.build(self.algebra()?))
    }
}

/// The components each law reads, as shown in `--help` and error messages.
pub fn requirements(law: LawId) -> &'static str {
    use LawId::*;
    match law {
        LeftAlia | Associative | Commutative => "bracket",
        Coassociative | Cocommutative | LeftAliaCoalgebra => "comul",
        NijenhuisAlgebra => "bracket, N",
        NijenhuisCoalgebra => "comul, S",
        Representation => "bracket",
        NijenhuisRepresentation => "bracket, N, alpha",
        Admissible => "bracket, N, beta",
        AdjointAdmissible => "bracket, N, S",
        CoadjointAdmissible => "comul, S, N",
        BialgebraCompat => "bracket, comul",
        NijLeftAliaBialgebra => "bracket, comul, N, S",
        Quadratic => "bracket, B",
        Symplectic => "bracket, w",
        Cosymplectic => "comul, r",
        DBialgebra => "bracket, comul",
        NijenhuisDCompat => "bracket, comul, f, F",
        SpecialBialgebra => "bracket, comul, f, g, F, G",
        AliaYbe | YbeCoproduct => "bracket, r",
        SAdmissibility => "r, N, S",
        CoboundaryNijenhuis => "bracket, N, S, r",
        RelativeRotaBaxter => "bracket, T",
        WeakRelativeRotaBaxter => "bracket, N, alpha, T",
        SemidirectAdmissibility => "bracket, N, S, alpha, beta",
        CoYbe | CoYbeBracket => "comul, w",
    }
}

/// Evaluates one law on the bundle.
pub fn evaluate(law: LawId, bundle: &Bundle, rep: RepChoice) -> Result<Residual, CliError> {
    let x = Inputs::new(bundle, rep, format!("law `{law}`"));
    use LawId::*;
    let res = match law {
        LeftAlia => check_left_alia(x.algebra()?),
        Associative => check_associative(x.algebra()?),
        Commutative => check_commutative(x.algebra()?),
        Coassociative => check_coassociative(x.coalgebra()?),
        Cocommutative => check_cocommutative(x.coalgebra()?),
        LeftAliaCoalgebra => check_left_alia_coalgebra(x.coalgebra()?),
        NijenhuisAlgebra => check_nijenhuis_algebra(x.algebra()?, x.map("N")?)?,
        NijenhuisCoalgebra => check_nijenhuis_coalgebra(x.coalgebra()?, x.map("S")?)?,
        Representation => check_representation(x.algebra()?, &x.rep()?)?,
        NijenhuisRepresentation => {
            check_nijenhuis_representation(x.algebra()?, x.map("N")?, &x.rep()?, x.map("alpha")?)?
        }
        Admissible => check_admissible(x.algebra()?, x.map("N")?, &x.rep()?, x.map("beta")?)?,
        AdjointAdmissible => check_adjoint_admissible(x.algebra()?, x.map("N")?, x.map("S")?)?,
        CoadjointAdmissible => {
            check_coadjoint_admissible(x.coalgebra()?, x.map("S")?, x.map("N")?)?
        }
        BialgebraCompat => check_bialgebra_compat(x.algebra()?, x.coalgebra()?)?,
        NijLeftAliaBialgebra => check_nijenhuis_left_alia_bialgebra(
            x.algebra()?,
            x.coalgebra()?,
            x.map("N")?,
            x.map("S")?,
        )?,
        Quadratic => check_quadratic(x.algebra()?, x.form("B")?)?,
        Symplectic => check_symplectic(x.algebra()?, x.form("w")?)?,
        Cosymplectic => check_cosymplectic(x.coalgebra()?, x.tensor("r")?)?,
        DBialgebra => check_d_bialgebra(x.algebra()?, x.coalgebra()?)?,
        NijenhuisDCompat => {
            check_nijenhuis_d_compat(x.algebra()?, x.coalgebra()?, x.map("f")?, x.map("F")?)?
        }
        SpecialBialgebra => check_special_bialgebra_condition(
            x.algebra()?,
            x.coalgebra()?,
            x.map("f")?,
            x.map("g")?,
            x.map("F")?,
            x.map("G")?,
        )?,
        AliaYbe => alia_ybe_residual(x.algebra()?, x.tensor("r")?)?,
        YbeCoproduct => check_ybe_coproduct(x.algebra()?, x.tensor("r")?)?,
        SAdmissibility => s_admissibility_residual(x.tensor("r")?, x.map("N")?, x.map("S")?)?,
        CoboundaryNijenhuis => {
            check_coboundary_conditions(x.algebra()?, x.map("N")?, x.map("S")?, x.tensor("r")?)?
        }
        RelativeRotaBaxter => check_relative_rota_baxter(x.algebra()?, &x.rep()?, x.map("T")?)?,
        WeakRelativeRotaBaxter => check_weak_rrb(
            x.algebra()?,
            x.map("N")?,
            &x.rep()?,
            x.map("alpha")?,
            x.map("T")?,
        )?,
        SemidirectAdmissibility => check_semidirect_admissibility(
            x.algebra()?,
            x.map("N")?,
            &x.rep()?,
            x.map("S")?,
            x.map("alpha")?,
            x.map("beta")?,
        )?,
        CoYbe => co_ybe_residual(x.coalgebra()?, x.form("w")?)?,
        CoYbeBracket => check_co_ybe_bracket(x.coalgebra()?, x.form("w")?)?,
    };
    Ok(res)
}

/// Replaces or creates map `name` from `spec`: `identity`, `zero`, a
/// rational `c` for `c·id`, or the name of another map in the bundle.
pub fn apply_override(bundle: &mut Bundle, name: &str, spec: &str) -> Result<(), CliError> {
    let n = bundle.dim;
    let map = match spec {
        "identity" => LinearMap::identity(n),
        "zero" => LinearMap::zero(n),
        other => {
            if let Ok(c) = other.parse::<Scalar>() {
                LinearMap::scalar(n, &c)
            } else if let Some(m) = bundle.maps.get(other) {
                m.clone()
            } else {
                return Err(CliError::Usage(format!(
                    "--override {name}={spec}: expected identity, zero, a rational, or a map name"
                )));
            }
        }
    };
    bundle.maps.insert(name.to_string(), map);
    Ok(())
}

/// Construction kinds available on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Special bracket from a commutative associative product and maps `f`,
    /// `g`; with a cocommutative coassociative `comul` and maps `F`, `G`,
    /// also the special coproduct.
    Special,
    /// Semidirect product with the chosen module; carries `N ⊕ alpha`.
    Semidirect,
    /// The double on `A ⊕ A*` with form `B`; carries `N + S*` and `S + N*`.
    Double,
    /// The coboundary coproduct of an antisymmetric Yang–Baxter solution `r`.
    DeltaR,
    /// The bracket induced on a coalgebra by a skew co-Yang–Baxter form `w`.
    BracketOmega,
    /// Nijenhuis operator `N` from a symplectic form `w` and a tensor `r`.
    NijenhuisFromSymplectic,
    /// Lift of `T` to an antisymmetric tensor on `A ⊕ V*`.
    TSharpLift,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Special => "special",
            Kind::Semidirect => "semidirect",
            Kind::Double => "double",
            Kind::DeltaR => "delta-r",
            Kind::BracketOmega => "bracket-omega",
            Kind::NijenhuisFromSymplectic => "nijenhuis-from-symplectic",
            Kind::TSharpLift => "t-sharp-lift",
        }
    }
}

fn hypothesis_error(e: AliaError) -> CliError {
    match e {
        AliaError::HypothesisFailed { which } => CliError::hypothesis(which),
        AliaError::ConclusionViolated(which) => CliError::hypothesis(which),
        AliaError::NotAntisymmetric => CliError::hypothesis("r-antisymmetric"),
        AliaError::NotSkew => CliError::hypothesis("omega-skew"),
        AliaError::NotCoYbeSolution => CliError::hypothesis("co-ybe"),
        AliaError::RepInvalid => CliError::hypothesis("representation"),
        AliaError::NotCommAssoc => CliError::hypothesis("commutative-associative"),
        AliaError::NotCocommCoassoc => CliError::hypothesis("cocommutative-coassociative"),
        AliaError::DegenerateForm | AliaError::DegenerateR => CliError::hypothesis("nondegenerate"),
        AliaError::NotAdjointAdmissible => CliError::hypothesis("adjoint-admissible"),
        AliaError::DBialgebraInvalid => CliError::hypothesis("d-bialgebra"),
        other => CliError::Core(other),
    }
}

fn require(res: Residual) -> Result<(), CliError> {
    if res.passed() {
        Ok(())
    } else {
        Err(CliError::hypothesis(res.law.name()))
    }
}

fn pair<'a>(
    x: &Inputs<'a>,
    first: &str,
    second: &str,
) -> Result<Option<(&'a LinearMap, &'a LinearMap)>, CliError> {
    match (x.bundle.maps.get(first), x.bundle.maps.get(second)) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        (None, None) => Ok(None),
        (Some(_), None) => Err(x.missing(&format!("map `{second}` alongside `{first}`"))),
        (None, Some(_)) => Err(x.missing(&format!("map `{first}` alongside `{second}`"))),
    }
}

/// Runs a construction, checking its hypotheses first. A failed hypothesis
/// is reported as [`CliError::Hypothesis`] naming the law.
pub fn construct(kind: Kind, bundle: &Bundle, rep: RepChoice) -> Result<Bundle, CliError> {
    let x = Inputs::new(bundle, rep, format!("construction `{}`", kind.name()));
    let n = bundle.dim;
    match kind {
        Kind::Special => {
            let a = x.algebra()?;
            let (f, g) = (x.map("f")?, x.map("g")?);
            require(check_commutative(a))?;
            require(check_associative(a))?;
            let mut out = bundle.clone();
            out.algebra = Some(special_left_alia(a, f, g).map_err(hypothesis_error)?);
            if let (Some(c), Some((ff, gg))) = (bundle.coalgebra.as_ref(), pair(&x, "F", "G")?) {
                require(check_cocommutative(c))?;
                require(check_coassociative(c))?;
                out.coalgebra =
                    Some(special_left_alia_coalgebra(c, ff, gg).map_err(hypothesis_error)?);
            }
            Ok(out)
        }
        Kind::Semidirect => {
            let a = x.algebra()?;
            let module = x.rep()?;
            require(check_representation(a, &module)?)?;
            let mut out = Bundle::new(2 * n);
            match pair(&x, "N", "alpha")? {
                Some((nmap, alpha)) => {
                    let (big, nij) = semidirect_product_with_maps(a, &module, nmap, alpha)
                        .map_err(hypothesis_error)?;
                    out.algebra = Some(big);
                    out.maps.insert("N".into(), nij);
                }
                None => {
                    out.algebra = Some(semidirect_product(a, &module).map_err(hypothesis_error)?);
                }
            }
            Ok(out)
        }
        Kind::Double => {
            let (a, c) = (x.algebra()?, x.coalgebra()?);
            require(check_left_alia(a))?;
            require(check_left_alia_coalgebra(c))?;
            let double = drinfeld_double(a, c, pair(&x, "N", "S")?).map_err(hypothesis_error)?;
            let mut out = Bundle::new(2 * n);
            out.algebra = Some(double.big);
            out.forms.insert("B".into(), double.form);
            if let (Some(nij), Some(adm)) = (double.nij, double.adm) {
                out.maps.insert("N".into(), nij);
                out.maps.insert("S".into(), adm);
            }
            Ok(out)
        }
        Kind::DeltaR => {
            let (a, r) = (x.algebra()?, x.tensor("r")?);
            if !r.is_antisymmetric() {
                return Err(CliError::hypothesis("r-antisymmetric"));
            }
            require(alia_ybe_residual(a, r)?)?;
            let mut out = bundle.clone();
            out.coalgebra = Some(delta_r(a, r)?);
            Ok(out)
        }
        Kind::BracketOmega => {
            let (c, w) = (x.coalgebra()?, x.form("w")?);
            let mut out = bundle.clone();
            out.algebra = Some(bracket_omega(c, w).map_err(hypothesis_error)?);
            Ok(out)
        }
        Kind::NijenhuisFromSymplectic => {
            let (a, w, r) = (x.algebra()?, x.form("w")?, x.tensor("r")?);
            let nmap = nijenhuis_from_symplectic(a, w, r).map_err(hypothesis_error)?;
            let mut out = bundle.clone();
            out.maps.insert("N".into(), nmap);
            Ok(out)
        }
        Kind::TSharpLift => {
            let a = x.algebra()?;
            let module = x.rep()?;
            require(check_representation(a, &module)?)?;
            let tmap = x.map("T")?;
            let (ns, ab) = (pair(&x, "N", "S")?, pair(&x, "alpha", "beta")?);
            let maps = LiftMaps {
                nmap: ns.map(|p| p.0),
                s: ns.map(|p| p.1),
                alpha: ab.map(|p| p.0),
                beta: ab.map(|p| p.1),
            };
            let lift = t_sharp_lift(a, &module, tmap, maps).map_err(hypothesis_error)?;
            let mut out = Bundle::new(lift.big.dim());
            out.algebra = Some(lift.big);
            out.tensors.insert("r".into(), lift.r);
            if let Some(nij) = lift.nij {
                out.maps.insert("N".into(), nij);
            }
            if let Some(adm) = lift.adm {
                out.maps.insert("S".into(), adm);
            }
            Ok(out)
        }
    }
}
