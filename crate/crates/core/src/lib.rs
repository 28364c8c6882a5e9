//! Tag-based semantic subtyping for a small type language of nominal types,
//! binary pairs and untagged unions.
//!
//! Three characterizations of subtyping live side by side:
//!
//! * [`semantics`]: types are interpreted as finite sets of run-time tags and
//!   subtyping is set inclusion. This is the reference oracle.
//! * [`derivation`]: the declarative rule system, as explicit derivation trees
//!   with an independent checker.
//! * [`subtyping`]: the reductive, syntax-directed rule system that yields the
//!   decision procedure, producing checkable traces.
//!
//! On top of these, [`dispatch`] implements tuple-type multiple dispatch and
//! [`syntax`]/[`files`] provide the concrete syntax and file formats used by the
//! `tagsub` command-line tool.

pub mod derivation;
pub mod dispatch;
mod error;
pub mod files;
pub mod hierarchy;
pub mod normalize;
pub mod semantics;
pub mod subtyping;
pub mod syntax;
pub mod types;

pub use error::{Error, Result};
pub use hierarchy::{Decl, HierarchyError, NameKind, NominalHierarchy};
pub use semantics::Mode;
pub use subtyping::Strategy;
pub use types::{Name, TypeExpr};
