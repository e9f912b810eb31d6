use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AliaError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("REP_INVALID: representation identity fails")]
    RepInvalid,
    #[error("NOT_COMM_ASSOC: product is not commutative and associative")]
    NotCommAssoc,
    #[error("NOT_COCOMM_COASSOC: coproduct is not cocommutative and coassociative")]
    NotCocommCoassoc,
    #[error("NOT_ANTISYMMETRIC: two-tensor is not antisymmetric")]
    NotAntisymmetric,
    #[error("DEGENERATE_FORM: bilinear form is degenerate")]
    DegenerateForm,
    #[error("DEGENERATE_R: two-tensor is degenerate")]
    DegenerateR,
    #[error("NOT_SKEW: bilinear form is not skew-symmetric")]
    NotSkew,
    #[error("NOT_CO_YBE_SOLUTION: form does not solve the co-Yang-Baxter equation")]
    NotCoYbeSolution,
    #[error("NOT_ADJOINT_ADMISSIBLE: S is not adjoint-admissible to (A, N)")]
    NotAdjointAdmissible,
    #[error("D_BIALGEBRA_INVALID: not a commutative cocommutative D-bialgebra")]
    DBialgebraInvalid,
    #[error("HYPOTHESIS_FAILED: {which}")]
    HypothesisFailed { which: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("conclusion violated: {0}")]
    ConclusionViolated(String),
}

impl AliaError {
    pub fn hypothesis(which: impl Into<String>) -> Self {
        AliaError::HypothesisFailed {
            which: which.into(),
        }
    }

    /// Stable upper-case code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            AliaError::DimensionMismatch(_) => "DIMENSION_MISMATCH",
            AliaError::RepInvalid => "REP_INVALID",
            AliaError::NotCommAssoc => "NOT_COMM_ASSOC",
            AliaError::NotCocommCoassoc => "NOT_COCOMM_COASSOC",
            AliaError::NotAntisymmetric => "NOT_ANTISYMMETRIC",
            AliaError::DegenerateForm => "DEGENERATE_FORM",
            AliaError::DegenerateR => "DEGENERATE_R",
            AliaError::NotSkew => "NOT_SKEW",
            AliaError::NotCoYbeSolution => "NOT_CO_YBE_SOLUTION",
            AliaError::NotAdjointAdmissible => "NOT_ADJOINT_ADMISSIBLE",
            AliaError::DBialgebraInvalid => "D_BIALGEBRA_INVALID",
            AliaError::HypothesisFailed { .. } => "HYPOTHESIS_FAILED",
            AliaError::UnknownFixture(_) => "UNKNOWN_FIXTURE",
            AliaError::ConclusionViolated(_) => "CONCLUSION_VIOLATED",
        }
    }
}

pub type Result<T> = std::result::Result<T, AliaError>;

pub(crate) fn ensure_dim(what: &str, got: usize, want: usize) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(AliaError::DimensionMismatch(format!(
            "{what}: expected {want}, got {got}"
        )))
    }
}
