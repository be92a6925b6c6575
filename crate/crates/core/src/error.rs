use thiserror::Error;

use crate::jsj::JsjDiagnostic;
use crate::model::{Diagnostic, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("slope (0, 0) has no direction")]
    ZeroSlope,
    #[error("slope entry out of range")]
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have determinant {expected}, found {found}")]
    BadDeterminant { expected: &'static str, found: i128 },

    #[error("integer overflow in matrix arithmetic")]
    Overflow,

    #[error("base orbifold has {boundary_count} boundary component(s); a closed base is required")]
    NotClosed { boundary_count: u32 },

    #[error("base orbifold is closed; a base with boundary is required")]
    NotBounded,

    #[error("base orbifold interior has positive Euler characteristic {chi}; it bounds a fibered solid torus, not a JSJ piece")]
    InvalidPiece { chi: Rational },

    #[error("summand {index}: spherical geometry requires pi1_order")]
    MissingOrder { index: usize },

    #[error("summand {index}: not a minimal JSJ decomposition ({} violation(s))", diagnostics.len())]
    InvalidJsj { index: usize, diagnostics: Vec<JsjDiagnostic> },

    #[error("description failed structural validation ({} diagnostic(s))", .0.len())]
    Structural(Vec<Diagnostic>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
