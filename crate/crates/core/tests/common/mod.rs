//! Enumerators and random generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tagsub::{Decl, NameKind, NominalHierarchy, TypeExpr};

pub fn names(h: &NominalHierarchy) -> Vec<TypeExpr> {
    h.names().cloned().map(TypeExpr::Name).collect()
}

pub fn concrete_names(h: &NominalHierarchy) -> Vec<TypeExpr> {
    h.names()
        .filter(|n| h.kind(n) == Some(NameKind::Concrete))
        .cloned()
        .map(TypeExpr::Name)
        .collect()
}

/// All types of depth at most `depth` (a name has depth 1).
pub fn types_up_to(h: &NominalHierarchy, depth: usize) -> Vec<TypeExpr> {
    grow(names(h), depth, true)
}

/// All value types of depth at most `depth`.
pub fn value_types_up_to(h: &NominalHierarchy, depth: usize) -> Vec<TypeExpr> {
    grow(concrete_names(h), depth, false)
}

fn grow(atoms: Vec<TypeExpr>, depth: usize, unions: bool) -> Vec<TypeExpr> {
    assert!(depth >= 1);
    let mut all = atoms.clone();
    for _ in 1..depth {
        let mut next = atoms.clone();
        for a in &all {
            for b in &all {
                next.push(TypeExpr::pair(a.clone(), b.clone()));
                if unions {
                    next.push(TypeExpr::union(a.clone(), b.clone()));
                }
            }
        }
        all = next;
    }
    all
}

/// A random type of depth at most `depth`.
pub fn random_type<R: Rng>(rng: &mut R, h: &NominalHierarchy, depth: usize) -> TypeExpr {
    let names = names(h);
    random_from(rng, &names, depth, true)
}

pub fn random_value_type<R: Rng>(rng: &mut R, h: &NominalHierarchy, depth: usize) -> TypeExpr {
    let names = concrete_names(h);
    random_from(rng, &names, depth, false)
}

fn random_from<R: Rng>(rng: &mut R, atoms: &[TypeExpr], depth: usize, unions: bool) -> TypeExpr {
    if depth <= 1 || rng.gen_bool(0.3) {
        return atoms.choose(rng).expect("nonempty hierarchy").clone();
    }
    let l = random_from(rng, atoms, depth - 1, unions);
    let r = random_from(rng, atoms, depth - 1, unions);
    if unions && rng.gen_bool(0.5) {
        TypeExpr::union(l, r)
    } else {
        TypeExpr::pair(l, r)
    }
}

/// A random supertype candidate of `t`: names move up the hierarchy and
/// unions with random types are mixed in. Often, but not always, a real
/// supertype.
pub fn widen<R: Rng>(rng: &mut R, h: &NominalHierarchy, t: &TypeExpr) -> TypeExpr {
    let widened = match t {
        TypeExpr::Name(n) => match h.parent(n) {
            Some(p) if rng.gen_bool(0.5) => TypeExpr::Name(p.clone()),
            _ => t.clone(),
        },
        TypeExpr::Pair(a, b) => TypeExpr::pair(widen(rng, h, a), widen(rng, h, b)),
        TypeExpr::Union(a, b) => {
            let (a, b) = (widen(rng, h, a), widen(rng, h, b));
            if rng.gen_bool(0.5) {
                TypeExpr::union(a, b)
            } else {
                TypeExpr::union(b, a)
            }
        }
    };
    if rng.gen_bool(0.15) {
        let other = random_type(rng, h, 2);
        if rng.gen_bool(0.5) {
            TypeExpr::union(widened, other)
        } else {
            TypeExpr::union(other, widened)
        }
    } else {
        widened
    }
}

/// [`widen`], retried until the result is no deeper than `depth`.
pub fn widen_within<R: Rng>(
    rng: &mut R,
    h: &NominalHierarchy,
    t: &TypeExpr,
    depth: usize,
) -> TypeExpr {
    loop {
        let w = widen(rng, h, t);
        if w.depth() <= depth {
            return w;
        }
    }
}

/// A random pair of types of depth at most `depth`, where the second is
/// about as often derived from the first as unrelated.
pub fn random_pair<R: Rng>(
    rng: &mut R,
    h: &NominalHierarchy,
    depth: usize,
) -> (TypeExpr, TypeExpr) {
    let t1 = random_type(rng, h, depth);
    let t2 = if rng.gen_bool(0.5) {
        widen_within(rng, h, &t1, depth)
    } else {
        random_type(rng, h, depth)
    };
    (t1, t2)
}

/// A random valid hierarchy of `1..=max` names in which every abstract name
/// has a concrete descendant.
pub fn random_hierarchy<R: Rng>(rng: &mut R, max: usize) -> NominalHierarchy {
    let n = rng.gen_range(1..=max);
    let mut kinds = Vec::with_capacity(n);
    let mut parents: Vec<Option<usize>> = Vec::with_capacity(n);
    for i in 0..n {
        let abstracts: Vec<usize> = (0..i).filter(|&j| kinds[j] == NameKind::Abstract).collect();
        let parent = if !abstracts.is_empty() && rng.gen_bool(0.7) {
            abstracts.choose(rng).copied()
        } else {
            None
        };
        kinds.push(if rng.gen_bool(0.45) {
            NameKind::Abstract
        } else {
            NameKind::Concrete
        });
        parents.push(parent);
    }
    // Children come after parents, so a reverse pass settles each child
    // before its parent is looked at.
    for i in (0..n).rev() {
        if kinds[i] == NameKind::Abstract && !parents.contains(&Some(i)) {
            kinds[i] = NameKind::Concrete;
        }
    }
    let name = |i: usize| format!("T{i}");
    let decls = (0..n)
        .map(|i| {
            let d = Decl::new(kinds[i], &name(i));
            match parents[i] {
                Some(p) => d.extends(&name(p)),
                None => d,
            }
        })
        .collect();
    NominalHierarchy::new(decls).expect("generated hierarchy is valid")
}

/// Number of members of the semantic normal form of `t`.
pub fn nf_width(h: &NominalHierarchy, t: &TypeExpr) -> usize {
    match t {
        TypeExpr::Name(n) => h.concrete_descendants(n).map_or(0, |d| d.len()),
        TypeExpr::Pair(a, b) => nf_width(h, a) * nf_width(h, b),
        TypeExpr::Union(a, b) => nf_width(h, a) + nf_width(h, b),
    }
}

/// Like [`random_type`], but rejects types whose normal form would have more
/// than `max_width` members.
pub fn random_bounded_type<R: Rng>(
    rng: &mut R,
    h: &NominalHierarchy,
    depth: usize,
    max_width: usize,
) -> TypeExpr {
    loop {
        let t = random_type(rng, h, depth);
        if nf_width(h, &t) <= max_width {
            return t;
        }
    }
}
