//! Tag-based interpretation of types and the semantic subtyping oracles.
//!
//! A type denotes the finite set of run-time tags that inhabit it. In
//! [`Mode::Semantic`] an abstract name denotes exactly its concrete
//! descendants. In [`Mode::Atomic`] it additionally contains a sentinel tag
//! `E(a)` for itself and every abstract name below it, standing for a future
//! subtype not yet declared. Sentinels make an abstract name impossible to
//! exhaust with a union of its current subtypes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hierarchy::NominalHierarchy;
use crate::types::{Name, TypeExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Semantic,
    Atomic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Semantic => "semantic",
            Mode::Atomic => "atomic",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "semantic" => Ok(Mode::Semantic),
            "atomic" => Ok(Mode::Atomic),
            other => Err(format!(
                "unknown mode `{other}` (expected `semantic` or `atomic`)"
            )),
        }
    }
}

/// A run-time type tag. Variant order gives the canonical ordering:
/// concrete tags first, then pairs, then sentinels, each lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Concrete(Name),
    Pair(Box<Tag>, Box<Tag>),
    /// A not-yet-declared subtype of the named abstract type.
    Sentinel(Name),
}

impl Tag {
    pub fn pair(left: Tag, right: Tag) -> Self {
        Tag::Pair(Box::new(left), Box::new(right))
    }

    /// The value type this tag stands for; `None` if it contains a sentinel.
    pub fn to_value_type(&self) -> Option<TypeExpr> {
        match self {
            Tag::Concrete(n) => Some(TypeExpr::Name(n.clone())),
            Tag::Pair(l, r) => Some(TypeExpr::pair(l.to_value_type()?, r.to_value_type()?)),
            Tag::Sentinel(_) => None,
        }
    }

    /// Inverse of [`Tag::to_value_type`]. Does not check concreteness.
    pub fn from_value_type(t: &TypeExpr) -> Option<Tag> {
        match t {
            TypeExpr::Name(n) => Some(Tag::Concrete(n.clone())),
            TypeExpr::Pair(l, r) => Some(Tag::pair(
                Tag::from_value_type(l)?,
                Tag::from_value_type(r)?,
            )),
            TypeExpr::Union(..) => None,
        }
    }

    pub fn has_sentinel(&self) -> bool {
        match self {
            Tag::Concrete(_) => false,
            Tag::Pair(l, r) => l.has_sentinel() || r.has_sentinel(),
            Tag::Sentinel(_) => true,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, right_of_pair: bool) -> fmt::Result {
        match self {
            Tag::Concrete(n) => write!(f, "{n}"),
            Tag::Sentinel(n) => write!(f, "E({n})"),
            Tag::Pair(l, r) => {
                if right_of_pair {
                    f.write_str("(")?;
                }
                l.write(f, false)?;
                f.write_str("*")?;
                r.write(f, true)?;
                if right_of_pair {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

impl fmt::Debug for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

/// A finite set of tags iterated in canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TagSet(BTreeSet<Tag>);

impl TagSet {
    pub fn new() -> Self {
        TagSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, tag: &Tag) -> bool {
        self.0.contains(tag)
    }

    pub fn insert(&mut self, tag: Tag) -> bool {
        self.0.insert(tag)
    }

    pub fn is_subset(&self, other: &TagSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Tag> {
        self.0.iter()
    }

    fn product(&self, other: &TagSet) -> TagSet {
        let mut out = BTreeSet::new();
        for l in &self.0 {
            for r in &other.0 {
                out.insert(Tag::pair(l.clone(), r.clone()));
            }
        }
        TagSet(out)
    }

    fn union_with(mut self, other: TagSet) -> TagSet {
        if self.0.len() < other.0.len() {
            return other.union_with(self);
        }
        self.0.extend(other.0);
        self
    }
}

impl FromIterator<Tag> for TagSet {
    fn from_iter<I: IntoIterator<Item = Tag>>(iter: I) -> Self {
        TagSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a TagSet {
    type Item = &'a Tag;
    type IntoIter = std::collections::btree_set::Iter<'a, Tag>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for TagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, tag) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{tag}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for TagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The set of tags inhabiting `t`.
pub fn interp(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> Result<TagSet> {
    match t {
        TypeExpr::Name(n) => {
            let mut set: TagSet = h
                .concrete_descendants(n)?
                .into_iter()
                .map(Tag::Concrete)
                .collect();
            if mode == Mode::Atomic {
                for a in h.abstract_descendants(n)? {
                    set.insert(Tag::Sentinel(a));
                }
            }
            Ok(set)
        }
        TypeExpr::Pair(l, r) => Ok(interp(h, l, mode)?.product(&interp(h, r, mode)?)),
        TypeExpr::Union(l, r) => Ok(interp(h, l, mode)?.union_with(interp(h, r, mode)?)),
    }
}

/// The matching relation `v <$ t`: value type `v` inhabits `t`.
///
/// A concrete name matches itself and each of its abstract ancestors; pairs
/// match componentwise; a union is matched through either branch.
pub fn matches(h: &NominalHierarchy, v: &TypeExpr, t: &TypeExpr) -> Result<bool> {
    h.check_type(v)?;
    h.check_type(t)?;
    if !h.is_value_type(v) {
        return Err(Error::NotAValueType(v.clone()));
    }
    Ok(matches_unchecked(h, v, t))
}

fn matches_unchecked(h: &NominalHierarchy, v: &TypeExpr, t: &TypeExpr) -> bool {
    match (v, t) {
        (_, TypeExpr::Union(t1, t2)) => matches_unchecked(h, v, t1) || matches_unchecked(h, v, t2),
        (TypeExpr::Name(c), TypeExpr::Name(n)) => h.extends(c, n),
        (TypeExpr::Pair(v1, v2), TypeExpr::Pair(t1, t2)) => {
            matches_unchecked(h, v1, t1) && matches_unchecked(h, v2, t2)
        }
        _ => false,
    }
}

/// Tag-based semantic subtyping: `interp(t1) ⊆ interp(t2)`.
pub fn semantic_sub(
    h: &NominalHierarchy,
    t1: &TypeExpr,
    t2: &TypeExpr,
    mode: Mode,
) -> Result<bool> {
    Ok(interp(h, t1, mode)?.is_subset(&interp(h, t2, mode)?))
}

/// Matching-based semantic subtyping: every value type matching `t1` also
/// matches `t2`. Only the members of `interp(t1)` can match `t1`, so the
/// quantifier ranges over those.
pub fn matching_sub(h: &NominalHierarchy, t1: &TypeExpr, t2: &TypeExpr) -> Result<bool> {
    h.check_type(t2)?;
    for tag in &interp(h, t1, Mode::Semantic)? {
        let v = tag
            .to_value_type()
            .expect("semantic interpretations are sentinel-free");
        if !matches_unchecked(h, &v, t2) {
            return Ok(false);
        }
    }
    Ok(true)
}
