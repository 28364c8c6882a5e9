use crate::hierarchy::HierarchyError;
use crate::syntax::ParseError;
use crate::types::{Name, TypeExpr};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown nominal type `{0}`")]
    UnknownName(Name),
    #[error("`{0}` is not a value type")]
    NotAValueType(TypeExpr),
    /// An abstract name without concrete descendants has no union form.
    #[error("abstract type `{0}` has no concrete descendants")]
    EmptyAbstract(Name),
    #[error("no methods defined for function `{0}`")]
    UnknownFunction(String),
    #[error("invalid reductive trace: {0}")]
    InvalidTrace(String),
    #[error(transparent)]
    Hierarchy(#[from] HierarchyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
