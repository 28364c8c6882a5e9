//! Nominal hierarchies: a validated forest of concrete and abstract names.
//!
//! Concrete names are always leaves. Declaration order is significant: it
//! fixes the order in which an abstract name's concrete descendants appear,
//! and thereby the canonical shape of normal forms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::types::{Name, TypeExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NameKind {
    Concrete,
    Abstract,
}

impl fmt::Display for NameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NameKind::Concrete => "concrete",
            NameKind::Abstract => "abstract",
        })
    }
}

/// One `child <: parent` declaration (or a root, when `parent` is `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decl {
    pub name: Name,
    pub kind: NameKind,
    pub parent: Option<Name>,
}

impl Decl {
    pub fn new(kind: NameKind, name: &str) -> Self {
        Decl {
            name: Name::new(name),
            kind,
            parent: None,
        }
    }

    pub fn concrete(name: &str) -> Self {
        Decl::new(NameKind::Concrete, name)
    }

    pub fn abstract_type(name: &str) -> Self {
        Decl::new(NameKind::Abstract, name)
    }

    pub fn extends(mut self, parent: &str) -> Self {
        self.parent = Some(Name::new(parent));
        self
    }
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.name)?;
        if let Some(parent) = &self.parent {
            write!(f, " <: {parent}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HierarchyError {
    #[error("invalid type name `{0}`")]
    InvalidName(String),
    #[error("`{0}` is declared more than once")]
    DuplicateName(Name),
    #[error("`{name}` declared with two parents, `{first}` and `{second}`")]
    MultipleParents {
        name: Name,
        first: Name,
        second: Name,
    },
    #[error("`{child}` extends undeclared type `{parent}`")]
    UnknownParent { child: Name, parent: Name },
    #[error("`{child}` extends concrete type `{parent}`; concrete types must be leaves")]
    ConcreteParent { child: Name, parent: Name },
    #[error("cyclic hierarchy: {}", fmt_cycle(.0))]
    CycleDetected(Vec<Name>),
}

fn fmt_cycle(names: &[Name]) -> String {
    let mut parts: Vec<&str> = names.iter().map(Name::as_str).collect();
    if let Some(first) = names.first() {
        parts.push(first.as_str());
    }
    parts.join(" <: ")
}

/// A validated nominal hierarchy. Immutable once built.
#[derive(Debug, Clone)]
pub struct NominalHierarchy {
    decls: Vec<Decl>,
    index: HashMap<Name, usize>,
    parents: Vec<Option<usize>>,
    /// Per name, concrete names `c` with `c ⊑ name`, in declaration order.
    concrete_desc: Vec<Vec<usize>>,
    /// Per name, abstract names `a` with `a ⊑ name` (reflexive), in declaration order.
    abstract_desc: Vec<Vec<usize>>,
}

/// Everything else is derived from the declarations.
impl PartialEq for NominalHierarchy {
    fn eq(&self, other: &Self) -> bool {
        self.decls == other.decls
    }
}

impl Eq for NominalHierarchy {}

/// Checks `decls` and builds the hierarchy, preserving declaration order.
pub fn validate_hierarchy(decls: Vec<Decl>) -> Result<NominalHierarchy, HierarchyError> {
    NominalHierarchy::new(decls)
}

impl NominalHierarchy {
    pub fn new(decls: Vec<Decl>) -> Result<Self, HierarchyError> {
        let mut index: HashMap<Name, usize> = HashMap::with_capacity(decls.len());
        for (i, decl) in decls.iter().enumerate() {
            if !Name::is_valid_identifier(decl.name.as_str()) {
                return Err(HierarchyError::InvalidName(decl.name.to_string()));
            }
            if let Some(&prev) = index.get(&decl.name) {
                return Err(match (&decls[prev].parent, &decl.parent) {
                    (Some(first), Some(second)) if first != second => {
                        HierarchyError::MultipleParents {
                            name: decl.name.clone(),
                            first: first.clone(),
                            second: second.clone(),
                        }
                    }
                    _ => HierarchyError::DuplicateName(decl.name.clone()),
                });
            }
            index.insert(decl.name.clone(), i);
        }

        let mut parents = Vec::with_capacity(decls.len());
        for decl in &decls {
            let parent = match &decl.parent {
                None => None,
                Some(p) => {
                    let &pi = index.get(p).ok_or_else(|| HierarchyError::UnknownParent {
                        child: decl.name.clone(),
                        parent: p.clone(),
                    })?;
                    if decls[pi].kind == NameKind::Concrete {
                        return Err(HierarchyError::ConcreteParent {
                            child: decl.name.clone(),
                            parent: p.clone(),
                        });
                    }
                    Some(pi)
                }
            };
            parents.push(parent);
        }

        // Each name has at most one parent, so a cycle shows up as a parent
        // chain longer than the number of names.
        for start in 0..decls.len() {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = parents[cur] {
                cur = p;
                steps += 1;
                if cur == start || steps > decls.len() {
                    return Err(HierarchyError::CycleDetected(cycle_through(
                        &decls, &parents, cur,
                    )));
                }
            }
        }

        let mut concrete_desc = vec![Vec::new(); decls.len()];
        let mut abstract_desc = vec![Vec::new(); decls.len()];
        for (i, decl) in decls.iter().enumerate() {
            let bucket = match decl.kind {
                NameKind::Concrete => &mut concrete_desc,
                NameKind::Abstract => &mut abstract_desc,
            };
            let mut cur = Some(i);
            while let Some(anc) = cur {
                bucket[anc].push(i);
                cur = parents[anc];
            }
        }

        Ok(NominalHierarchy {
            decls,
            index,
            parents,
            concrete_desc,
            abstract_desc,
        })
    }

    /// The example numeric hierarchy: `Real <: Num`, `Int <: Real`,
    /// `Flt <: Real`, `Cmplx <: Num`, plus the root `Str`.
    pub fn builtin() -> Self {
        NominalHierarchy::new(vec![
            Decl::abstract_type("Num"),
            Decl::abstract_type("Real").extends("Num"),
            Decl::concrete("Int").extends("Real"),
            Decl::concrete("Flt").extends("Real"),
            Decl::concrete("Cmplx").extends("Num"),
            Decl::concrete("Str"),
        ])
        .expect("builtin hierarchy is valid")
    }

    /// A new hierarchy with `decl` appended.
    pub fn extended(&self, decl: Decl) -> Result<Self, HierarchyError> {
        let mut decls = self.decls.clone();
        decls.push(decl);
        NominalHierarchy::new(decls)
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    pub fn len(&self) -> usize {
        self.decls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &Name> {
        self.decls.iter().map(|d| &d.name)
    }

    pub fn contains(&self, name: &Name) -> bool {
        self.index.contains_key(name)
    }

    pub fn kind(&self, name: &Name) -> Option<NameKind> {
        self.index.get(name).map(|&i| self.decls[i].kind)
    }

    pub fn parent(&self, name: &Name) -> Option<&Name> {
        let i = *self.index.get(name)?;
        self.parents[i].map(|p| &self.decls[p].name)
    }

    pub(crate) fn is_concrete(&self, name: &Name) -> bool {
        self.kind(name) == Some(NameKind::Concrete)
    }

    pub(crate) fn is_abstract(&self, name: &Name) -> bool {
        self.kind(name) == Some(NameKind::Abstract)
    }

    fn lookup(&self, name: &Name) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownName(name.clone()))
    }

    /// Reflexive-transitive closure of the declared `extends` edges. Callers
    /// that need the strict relation also compare the names for inequality.
    pub fn nominal_subtype(&self, sub: &Name, sup: &Name) -> Result<bool> {
        let (i, j) = (self.lookup(sub)?, self.lookup(sup)?);
        Ok(self.reaches(i, j))
    }

    /// Unknown names are simply unrelated.
    pub(crate) fn extends(&self, sub: &Name, sup: &Name) -> bool {
        match (self.index.get(sub), self.index.get(sup)) {
            (Some(&i), Some(&j)) => self.reaches(i, j),
            _ => false,
        }
    }

    fn reaches(&self, mut from: usize, to: usize) -> bool {
        loop {
            if from == to {
                return true;
            }
            match self.parents[from] {
                Some(p) => from = p,
                None => return false,
            }
        }
    }

    /// Concrete names below `name` in declaration order; `[name]` itself for a
    /// concrete name.
    pub fn concrete_descendants(&self, name: &Name) -> Result<Vec<Name>> {
        let i = self.lookup(name)?;
        Ok(self.concrete_desc[i]
            .iter()
            .map(|&c| self.decls[c].name.clone())
            .collect())
    }

    /// Abstract names `a` with `a ⊑ name`, including `name` itself when it is
    /// abstract, in declaration order.
    pub fn abstract_descendants(&self, name: &Name) -> Result<Vec<Name>> {
        let i = self.lookup(name)?;
        Ok(self.abstract_desc[i]
            .iter()
            .map(|&a| self.decls[a].name.clone())
            .collect())
    }

    /// A concrete name, or a pair of value types.
    pub fn is_value_type(&self, t: &TypeExpr) -> bool {
        match t {
            TypeExpr::Name(n) => self.is_concrete(n),
            TypeExpr::Pair(l, r) => self.is_value_type(l) && self.is_value_type(r),
            TypeExpr::Union(..) => false,
        }
    }

    /// Fails with [`Error::UnknownName`] on the first undeclared name.
    pub fn check_type(&self, t: &TypeExpr) -> Result<()> {
        match t {
            TypeExpr::Name(n) => self.lookup(n).map(drop),
            TypeExpr::Pair(l, r) | TypeExpr::Union(l, r) => {
                self.check_type(l)?;
                self.check_type(r)
            }
        }
    }

    /// The first abstract name in `t` that has no concrete descendants.
    pub fn find_empty_abstract<'t>(&self, t: &'t TypeExpr) -> Option<&'t Name> {
        t.names().into_iter().find(|n| {
            self.index.get(*n).is_some_and(|&i| {
                self.decls[i].kind == NameKind::Abstract && self.concrete_desc[i].is_empty()
            })
        })
    }
}

fn cycle_through(decls: &[Decl], parents: &[Option<usize>], on_cycle: usize) -> Vec<Name> {
    // `on_cycle` is reachable from itself; walk once around.
    let mut cur = on_cycle;
    let mut out = Vec::new();
    loop {
        out.push(decls[cur].name.clone());
        cur = parents[cur].expect("node on a cycle has a parent");
        if cur == on_cycle {
            return out;
        }
    }
}
