//! Disjunctive normal forms.
//!
//! [`nf`] rewrites a type into a union of value types: abstract names become
//! the left-nested union of their concrete descendants and pairs are
//! distributed over unions by [`un_prs`]. [`nf_atomic`] is the same except that
//! abstract names are left alone, producing a union of atoms and pairs of atoms.
//!
//! Nothing is sorted, flattened or deduplicated.

use crate::error::{Error, Result};
use crate::hierarchy::NominalHierarchy;
use crate::semantics::Mode;
use crate::types::{Name, TypeExpr};

pub fn nf(h: &NominalHierarchy, t: &TypeExpr) -> Result<TypeExpr> {
    match t {
        TypeExpr::Name(n) => abstract_union(h, n),
        TypeExpr::Pair(l, r) => Ok(un_prs(nf(h, l)?, nf(h, r)?)),
        TypeExpr::Union(l, r) => Ok(TypeExpr::union(nf(h, l)?, nf(h, r)?)),
    }
}

/// Left-nested union of the concrete descendants of `n` (just `n` when it is
/// concrete).
pub(crate) fn abstract_union(h: &NominalHierarchy, n: &Name) -> Result<TypeExpr> {
    TypeExpr::union_of(h.concrete_descendants(n)?.into_iter().map(TypeExpr::Name))
        .ok_or_else(|| Error::EmptyAbstract(n.clone()))
}

pub fn nf_atomic(t: &TypeExpr) -> TypeExpr {
    match t {
        TypeExpr::Name(_) => t.clone(),
        TypeExpr::Pair(l, r) => un_prs(nf_atomic(l), nf_atomic(r)),
        TypeExpr::Union(l, r) => TypeExpr::union(nf_atomic(l), nf_atomic(r)),
    }
}

/// [`nf`] or [`nf_atomic`] depending on `mode`.
pub fn normalize(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> Result<TypeExpr> {
    match mode {
        Mode::Semantic => nf(h, t),
        Mode::Atomic => {
            h.check_type(t)?;
            Ok(nf_atomic(t))
        }
    }
}

/// Distributes a pair over unions in either component. A union on the left is
/// split before a union on the right.
pub fn un_prs(left: TypeExpr, right: TypeExpr) -> TypeExpr {
    match (left, right) {
        (TypeExpr::Union(l1, l2), right) => {
            TypeExpr::union(un_prs(*l1, right.clone()), un_prs(*l2, right))
        }
        (left, TypeExpr::Union(r1, r2)) => {
            TypeExpr::union(un_prs(left.clone(), *r1), un_prs(left, *r2))
        }
        (left, right) => TypeExpr::pair(left, right),
    }
}

/// A value type, or a union of types in normal form.
pub fn in_nf(h: &NominalHierarchy, t: &TypeExpr) -> bool {
    match t {
        TypeExpr::Union(l, r) => in_nf(h, l) && in_nf(h, r),
        other => h.is_value_type(other),
    }
}

/// A nominal name of either kind, or a pair of atoms.
pub fn is_atom(t: &TypeExpr) -> bool {
    match t {
        TypeExpr::Name(_) => true,
        TypeExpr::Pair(l, r) => is_atom(l) && is_atom(r),
        TypeExpr::Union(..) => false,
    }
}

/// An atom, or a union of types in atomic normal form.
pub fn in_nf_atomic(t: &TypeExpr) -> bool {
    match t {
        TypeExpr::Union(l, r) => in_nf_atomic(l) && in_nf_atomic(r),
        other => is_atom(other),
    }
}

/// [`in_nf`] or [`in_nf_atomic`] depending on `mode`.
pub fn is_normal(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> bool {
    match mode {
        Mode::Semantic => in_nf(h, t),
        Mode::Atomic => in_nf_atomic(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hierarchy::Decl;
    use crate::syntax::parse_type;

    fn h() -> NominalHierarchy {
        NominalHierarchy::builtin()
    }

    fn ty(src: &str) -> TypeExpr {
        parse_type(src, &h()).unwrap()
    }

    #[test]
    fn nf_examples() {
        let h = h();
        assert_eq!(
            nf(&h, &ty("Str*(Int|Flt)")).unwrap(),
            ty("(Str*Int)|(Str*Flt)")
        );
        assert_eq!(nf(&h, &ty("Num")).unwrap(), ty("(Int|Flt)|Cmplx"));
        assert_eq!(nf(&h, &ty("Real")).unwrap(), ty("Int|Flt"));
        assert_eq!(nf(&h, &ty("Int")).unwrap(), ty("Int"));
    }

    #[test]
    fn un_prs_examples() {
        assert_eq!(un_prs(ty("Int|Flt"), ty("Str")), ty("(Int*Str)|(Flt*Str)"));
        assert_eq!(un_prs(ty("Str"), ty("Int|Flt")), ty("(Str*Int)|(Str*Flt)"));
        assert_eq!(un_prs(ty("Int"), ty("Str")), ty("Int*Str"));
    }

    #[test]
    fn un_prs_splits_left_before_right() {
        // Left-first gives (I*S | I*C) | (F*S | F*C); right-first would give
        // (I*S | F*S) | (I*C | F*C).
        assert_eq!(
            un_prs(ty("Int|Flt"), ty("Str|Cmplx")),
            ty("(Int*Str|Int*Cmplx)|(Flt*Str|Flt*Cmplx)")
        );
    }

    #[test]
    fn nf_keeps_duplicates() {
        assert_eq!(nf(&h(), &ty("Int|Int")).unwrap(), ty("Int|Int"));
        assert_eq!(nf(&h(), &ty("Real|Int")).unwrap(), ty("(Int|Flt)|Int"));
    }

    #[test]
    fn in_nf_examples() {
        let h = h();
        assert!(in_nf(&h, &ty("(Str*Int)|(Str*Flt)")));
        assert!(!in_nf(&h, &ty("Str*(Int|Flt)")));
        assert!(in_nf(&h, &ty("Flt")));
        assert!(!in_nf(&h, &ty("Real")));
        assert!(!in_nf(&h, &ty("Int|Real")));
    }

    #[test]
    fn nf_atomic_examples() {
        assert_eq!(nf_atomic(&ty("Real")), ty("Real"));
        assert_eq!(nf_atomic(&ty("Str*(Int|Flt)")), ty("(Str*Int)|(Str*Flt)"));
        assert_eq!(
            nf_atomic(&ty("Real*(Int|Str)")),
            ty("(Real*Int)|(Real*Str)")
        );
    }

    #[test]
    fn in_nf_atomic_examples() {
        assert!(in_nf_atomic(&ty("Real")));
        assert!(in_nf_atomic(&ty("(Real*Int)|Str")));
        assert!(!in_nf_atomic(&ty("Str*(Int|Flt)")));
    }

    #[test]
    fn empty_abstract_has_no_normal_form() {
        let h = h().extended(Decl::abstract_type("Void")).unwrap();
        let t = parse_type("Int*Void", &h).unwrap();
        assert_eq!(nf(&h, &t), Err(Error::EmptyAbstract(Name::new("Void"))));
        assert_eq!(normalize(&h, &t, Mode::Atomic).unwrap(), t);
    }

    #[test]
    fn normalize_checks_names_in_atomic_mode() {
        let t = TypeExpr::name("Foo");
        assert_eq!(
            normalize(&h(), &t, Mode::Atomic),
            Err(Error::UnknownName(Name::new("Foo")))
        );
    }
}
