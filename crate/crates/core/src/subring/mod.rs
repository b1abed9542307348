//! Subrings of a graded ring cut out degree by degree by linear conditions:
//! their graded pieces, minimal generators and minimal relations up to a
//! degree bound.

mod predicate;
mod presentation;

pub use predicate::{Condition, GradedSubspace, MembershipPredicate, Sign};
pub use presentation::{GenerationFailure, GeneratorCheck, GeneratorListReport, SubringPresentation};

use thiserror::Error;

use crate::poly::PolyError;
use crate::quotient::QuotientError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubringError {
    #[error("condition {index}: {message}")]
    InvalidCondition { index: usize, message: String },
    #[error("claimed generator {0} is not bi-homogeneous")]
    InhomogeneousGenerator(usize),
    #[error("claimed generator {0} has degree 0")]
    ConstantGenerator(usize),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
