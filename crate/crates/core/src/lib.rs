//! Exact structure-constant arithmetic for left Alia algebras, coalgebras,
//! bialgebras and their Nijenhuis operators.

#![allow(clippy::needless_range_loop)]

pub mod constructions;
pub mod dual_triangular;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod generate;
pub mod laws;
pub mod matrix;
pub mod residual;
pub mod scalar;
pub mod structures;
pub mod yang_baxter;

pub use error::{AliaError, Result};
pub use matrix::Matrix;
pub use residual::{Entry, LawId, Residual};
pub use scalar::Scalar;
pub use structures::{
    bracket_eval, dual_map, dualize_algebra, dualize_coalgebra, flip, left_right_operators,
    Algebra, BilinearForm, Bundle, Coalgebra, LinearMap, Representation, TwoTensor,
};
