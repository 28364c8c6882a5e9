//! The type language: nominal names, covariant pairs and untagged unions.

use std::fmt;
use std::sync::Arc;

/// Identifier of a nominal type. Whether it is concrete or abstract is a
/// property of the [`NominalHierarchy`](crate::NominalHierarchy) it is
/// resolved against.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Name(Arc<str>);

impl Name {
    pub fn new(text: &str) -> Self {
        Name(Arc::from(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `[A-Za-z][A-Za-z0-9_]*`
    pub fn is_valid_identifier(text: &str) -> bool {
        let mut chars = text.chars();
        matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

impl From<&str> for Name {
    fn from(text: &str) -> Self {
        Name::new(text)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A type expression.
///
/// Unions and pairs are kept exactly as built: no flattening, sorting or
/// deduplication happens anywhere, since normalization and the rule systems
/// are defined on raw syntax.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeExpr {
    Name(Name),
    Pair(Box<TypeExpr>, Box<TypeExpr>),
    Union(Box<TypeExpr>, Box<TypeExpr>),
}

impl TypeExpr {
    pub fn name(text: &str) -> Self {
        TypeExpr::Name(Name::new(text))
    }

    pub fn pair(left: TypeExpr, right: TypeExpr) -> Self {
        TypeExpr::Pair(Box::new(left), Box::new(right))
    }

    pub fn union(left: TypeExpr, right: TypeExpr) -> Self {
        TypeExpr::Union(Box::new(left), Box::new(right))
    }

    /// Left-nested union `((t1 | t2) | t3) | ...`; `None` for an empty input.
    pub fn union_of<I: IntoIterator<Item = TypeExpr>>(members: I) -> Option<Self> {
        members.into_iter().reduce(TypeExpr::union)
    }

    /// Right-nested pair encoding of a tuple: `(t1, t2, t3)` becomes
    /// `t1 * (t2 * t3)`. A one-element tuple is the element itself.
    pub fn tuple<I>(elements: I) -> Option<Self>
    where
        I: IntoIterator<Item = TypeExpr>,
        I::IntoIter: DoubleEndedIterator,
    {
        elements
            .into_iter()
            .rev()
            .reduce(|acc, elem| TypeExpr::pair(elem, acc))
    }

    pub fn as_name(&self) -> Option<&Name> {
        match self {
            TypeExpr::Name(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_union(&self) -> bool {
        matches!(self, TypeExpr::Union(..))
    }

    /// Names have depth 1; each constructor adds one level.
    pub fn depth(&self) -> usize {
        match self {
            TypeExpr::Name(_) => 1,
            TypeExpr::Pair(l, r) | TypeExpr::Union(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Number of nodes in the expression tree.
    pub fn size(&self) -> usize {
        match self {
            TypeExpr::Name(_) => 1,
            TypeExpr::Pair(l, r) | TypeExpr::Union(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// All name occurrences, left to right.
    pub fn names(&self) -> Vec<&Name> {
        fn walk<'a>(t: &'a TypeExpr, out: &mut Vec<&'a Name>) {
            match t {
                TypeExpr::Name(n) => out.push(n),
                TypeExpr::Pair(l, r) | TypeExpr::Union(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// The members of a (possibly nested) union, left to right. A non-union
    /// type is its own single member.
    pub fn union_members(&self) -> Vec<&TypeExpr> {
        fn walk<'a>(t: &'a TypeExpr, out: &mut Vec<&'a TypeExpr>) {
            match t {
                TypeExpr::Union(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                other => out.push(other),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Debug for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
