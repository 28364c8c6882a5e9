//! Declarative subtyping derivations.
//!
//! A [`Derivation`] is an explicit proof tree over the declarative rules:
//!
//! | rule          | conclusion                          | premises            |
//! |---------------|-------------------------------------|---------------------|
//! | `SD-Refl`     | `t <: t`                            |                     |
//! | `SD-Trans`    | `t1 <: t3`                          | `t1 <: t2`, `t2 <: t3` (`t2` is the witness) |
//! | `SD-Nom`      | `n1 <: n2`                          | `n1` strictly below `n2` |
//! | `SD-AbsUnion` | `a <: c1|...|cn`                    | the concrete descendants of abstract `a`, in declaration order, left-nested |
//! | `SD-Pair`     | `l1*l2 <: r1*r2`                    | `l1 <: r1`, `l2 <: r2` |
//! | `SD-UnionL`   | `a|b <: r`                          | `a <: r`, `b <: r`  |
//! | `SD-UnionR1`  | `a <: a|b`                          |                     |
//! | `SD-UnionR2`  | `b <: a|b`                          |                     |
//! | `SD-Distr1`   | `(a|b)*c <: a*c|b*c`                |                     |
//! | `SD-Distr2`   | `a*(b|c) <: a*b|a*c`                |                     |
//!
//! In atomic mode `SD-AbsUnion` is not a rule.
//!
//! Searching for declarative derivations directly is hopeless because of the
//! transitivity witness; instead [`synthesize`] translates a reductive trace.

use std::fmt;

use crate::error::{Error, Result};
use crate::hierarchy::NominalHierarchy;
use crate::normalize::{abstract_union, un_prs};
use crate::semantics::Mode;
use crate::subtyping::{check_reductive_trace, ReductiveRule, ReductiveTrace};
use crate::types::TypeExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeclarativeRule {
    Refl,
    Trans,
    Nom,
    AbsUnion,
    Pair,
    UnionL,
    UnionR1,
    UnionR2,
    Distr1,
    Distr2,
}

impl DeclarativeRule {
    pub fn as_str(self) -> &'static str {
        match self {
            DeclarativeRule::Refl => "SD-Refl",
            DeclarativeRule::Trans => "SD-Trans",
            DeclarativeRule::Nom => "SD-Nom",
            DeclarativeRule::AbsUnion => "SD-AbsUnion",
            DeclarativeRule::Pair => "SD-Pair",
            DeclarativeRule::UnionL => "SD-UnionL",
            DeclarativeRule::UnionR1 => "SD-UnionR1",
            DeclarativeRule::UnionR2 => "SD-UnionR2",
            DeclarativeRule::Distr1 => "SD-Distr1",
            DeclarativeRule::Distr2 => "SD-Distr2",
        }
    }
}

impl fmt::Display for DeclarativeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    pub rule: DeclarativeRule,
    pub lhs: TypeExpr,
    pub rhs: TypeExpr,
    pub premises: Vec<Derivation>,
    /// The intermediate type of an `SD-Trans` node.
    pub witness: Option<TypeExpr>,
}

impl Derivation {
    /// A node without premises.
    pub fn axiom(rule: DeclarativeRule, lhs: TypeExpr, rhs: TypeExpr) -> Self {
        Derivation {
            rule,
            lhs,
            rhs,
            premises: Vec::new(),
            witness: None,
        }
    }

    pub fn refl(t: TypeExpr) -> Self {
        Derivation::axiom(DeclarativeRule::Refl, t.clone(), t)
    }

    pub fn node(
        rule: DeclarativeRule,
        lhs: TypeExpr,
        rhs: TypeExpr,
        premises: Vec<Derivation>,
    ) -> Self {
        Derivation {
            rule,
            lhs,
            rhs,
            premises,
            witness: None,
        }
    }

    /// `SD-Trans` over `d1: a <: b` and `d2: b <: c`. Does not check that the
    /// middle types agree.
    pub fn trans_node(d1: Derivation, d2: Derivation) -> Self {
        Derivation {
            rule: DeclarativeRule::Trans,
            lhs: d1.lhs.clone(),
            rhs: d2.rhs.clone(),
            witness: Some(d1.rhs.clone()),
            premises: vec![d1, d2],
        }
    }

    /// Like [`Derivation::trans_node`] but drops a reflexive side.
    pub fn trans(d1: Derivation, d2: Derivation) -> Self {
        if d1.rule == DeclarativeRule::Refl {
            d2
        } else if d2.rule == DeclarativeRule::Refl {
            d1
        } else {
            Derivation::trans_node(d1, d2)
        }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    pub fn uses_rule(&self, rule: DeclarativeRule) -> bool {
        self.rule == rule || self.premises.iter().any(|p| p.uses_rule(rule))
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, indent: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}{}: {} <: {}",
            "",
            self.rule,
            self.lhs,
            self.rhs,
            indent = indent
        )?;
        if let Some(w) = &self.witness {
            writeln!(f, "{:indent$}witness: {}", "", w, indent = indent + 2)?;
        }
        for p in &self.premises {
            p.write(f, indent + 2)?;
        }
        Ok(())
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// True iff every node of `d` is an instance of its rule.
pub fn check_declarative(h: &NominalHierarchy, d: &Derivation, mode: Mode) -> bool {
    h.check_type(&d.lhs).is_ok() && h.check_type(&d.rhs).is_ok() && check_node(h, d, mode)
}

fn concludes(d: &Derivation, lhs: &TypeExpr, rhs: &TypeExpr) -> bool {
    &d.lhs == lhs && &d.rhs == rhs
}

fn check_node(h: &NominalHierarchy, d: &Derivation, mode: Mode) -> bool {
    use DeclarativeRule as R;
    use TypeExpr::{Name, Pair, Union};
    let (l, r, ps) = (&d.lhs, &d.rhs, d.premises.as_slice());
    if d.rule != R::Trans && d.witness.is_some() {
        return false;
    }
    let instance = match (d.rule, ps) {
        (R::Refl, []) => l == r,
        (R::Trans, [p1, p2]) => match &d.witness {
            Some(w) => h.check_type(w).is_ok() && concludes(p1, l, w) && concludes(p2, w, r),
            None => false,
        },
        (R::Nom, []) => match (l, r) {
            (Name(n1), Name(n2)) => n1 != n2 && h.extends(n1, n2),
            _ => false,
        },
        (R::AbsUnion, []) => match l {
            Name(a) if mode == Mode::Semantic && h.is_abstract(a) => {
                abstract_union(h, a).is_ok_and(|u| &u == r)
            }
            _ => false,
        },
        (R::Pair, [p1, p2]) => match (l, r) {
            (Pair(l1, l2), Pair(r1, r2)) => concludes(p1, l1, r1) && concludes(p2, l2, r2),
            _ => false,
        },
        (R::UnionL, [p1, p2]) => match l {
            Union(a, b) => concludes(p1, a, r) && concludes(p2, b, r),
            _ => false,
        },
        (R::UnionR1, []) => matches!(r, Union(a, _) if **a == *l),
        (R::UnionR2, []) => matches!(r, Union(_, b) if **b == *l),
        (R::Distr1, []) => match (l, r) {
            (Pair(u, t2), Union(x, y)) => match &**u {
                Union(t11, t12) => {
                    **x == TypeExpr::pair((**t11).clone(), (**t2).clone())
                        && **y == TypeExpr::pair((**t12).clone(), (**t2).clone())
                }
                _ => false,
            },
            _ => false,
        },
        (R::Distr2, []) => match (l, r) {
            (Pair(t1, u), Union(x, y)) => match &**u {
                Union(t21, t22) => {
                    **x == TypeExpr::pair((**t1).clone(), (**t21).clone())
                        && **y == TypeExpr::pair((**t1).clone(), (**t22).clone())
                }
                _ => false,
            },
            _ => false,
        },
        _ => false,
    };
    instance && ps.iter().all(|p| check_node(h, p, mode))
}

/// Translates a valid reductive trace into a declarative derivation with the
/// same conclusion.
pub fn synthesize(h: &NominalHierarchy, trace: &ReductiveTrace, mode: Mode) -> Result<Derivation> {
    if !check_reductive_trace(h, trace, mode) {
        return Err(Error::InvalidTrace(format!(
            "not a valid {mode} derivation of {} <: {}",
            trace.lhs, trace.rhs
        )));
    }
    translate(h, trace, mode)
}

fn translate(h: &NominalHierarchy, tr: &ReductiveTrace, mode: Mode) -> Result<Derivation> {
    use DeclarativeRule as D;
    let (l, r) = (tr.lhs.clone(), tr.rhs.clone());
    let premises = tr
        .premises
        .iter()
        .map(|p| translate(h, p, mode))
        .collect::<Result<Vec<_>>>()?;
    let mut premises = premises.into_iter();
    let mut next = || premises.next().expect("premise count was checked");
    Ok(match tr.rule {
        ReductiveRule::BaseRefl => Derivation::refl(l),
        ReductiveRule::Nom => Derivation::axiom(D::Nom, l, r),
        ReductiveRule::Pair => {
            let (p1, p2) = (next(), next());
            Derivation::node(D::Pair, l, r, vec![p1, p2])
        }
        ReductiveRule::UnionL => {
            let (p1, p2) = (next(), next());
            Derivation::node(D::UnionL, l, r, vec![p1, p2])
        }
        // l <: c, and c <: c|d
        ReductiveRule::UnionR1 => {
            let p = next();
            let step = Derivation::axiom(D::UnionR1, p.rhs.clone(), r);
            Derivation::trans(p, step)
        }
        ReductiveRule::UnionR2 => {
            let p = next();
            let step = Derivation::axiom(D::UnionR2, p.rhs.clone(), r);
            Derivation::trans(p, step)
        }
        // l <: NF(l), and NF(l) <: r
        ReductiveRule::Nf => Derivation::trans(derive_sub_nf(h, &l, mode)?, next()),
    })
}

/// A derivation of `t <: NF(t)` for the mode's normal form.
pub fn derive_sub_nf(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> Result<Derivation> {
    h.check_type(t)?;
    sub_nf(h, t, mode)
}

fn sub_nf(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> Result<Derivation> {
    Ok(match t {
        TypeExpr::Name(n) => {
            if mode == Mode::Semantic && h.is_abstract(n) {
                Derivation::axiom(DeclarativeRule::AbsUnion, t.clone(), abstract_union(h, n)?)
            } else {
                Derivation::refl(t.clone())
            }
        }
        TypeExpr::Union(a, b) => union_mono(sub_nf(h, a, mode)?, sub_nf(h, b, mode)?),
        TypeExpr::Pair(a, b) => {
            let (da, db) = (sub_nf(h, a, mode)?, sub_nf(h, b, mode)?);
            let (na, nb) = (da.rhs.clone(), db.rhs.clone());
            let pair = pair_mono(da, db);
            Derivation::trans(pair, pair_to_un_prs(&na, &nb))
        }
    })
}

/// A derivation of `NF(t) <: t` for the mode's normal form.
pub fn derive_nf_sub(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> Result<Derivation> {
    h.check_type(t)?;
    nf_sub(h, t, mode)
}

fn nf_sub(h: &NominalHierarchy, t: &TypeExpr, mode: Mode) -> Result<Derivation> {
    Ok(match t {
        TypeExpr::Name(n) => {
            if mode == Mode::Semantic && h.is_abstract(n) {
                members_below(&abstract_union(h, n)?, t)
            } else {
                Derivation::refl(t.clone())
            }
        }
        TypeExpr::Union(a, b) => union_mono(nf_sub(h, a, mode)?, nf_sub(h, b, mode)?),
        TypeExpr::Pair(a, b) => {
            let (da, db) = (nf_sub(h, a, mode)?, nf_sub(h, b, mode)?);
            let lowered = un_prs_to_pair(&da.lhs, &db.lhs);
            Derivation::trans(lowered, pair_mono(da, db))
        }
    })
}

/// `u <: target` for a union `u` of names strictly below `target`.
fn members_below(u: &TypeExpr, target: &TypeExpr) -> Derivation {
    match u {
        TypeExpr::Union(a, b) => Derivation::node(
            DeclarativeRule::UnionL,
            u.clone(),
            target.clone(),
            vec![members_below(a, target), members_below(b, target)],
        ),
        _ => Derivation::axiom(DeclarativeRule::Nom, u.clone(), target.clone()),
    }
}

/// From `a <: a'` and `b <: b'` derive `a|b <: a'|b'`.
fn union_mono(da: Derivation, db: Derivation) -> Derivation {
    let lhs = TypeExpr::union(da.lhs.clone(), db.lhs.clone());
    let rhs = TypeExpr::union(da.rhs.clone(), db.rhs.clone());
    let left = Derivation::trans(
        da.clone(),
        Derivation::axiom(DeclarativeRule::UnionR1, da.rhs.clone(), rhs.clone()),
    );
    let right = Derivation::trans(
        db.clone(),
        Derivation::axiom(DeclarativeRule::UnionR2, db.rhs.clone(), rhs.clone()),
    );
    Derivation::node(DeclarativeRule::UnionL, lhs, rhs, vec![left, right])
}

/// From `a <: a'` and `b <: b'` derive `a*b <: a'*b'`, or reflexivity when
/// both sides are reflexive.
fn pair_mono(da: Derivation, db: Derivation) -> Derivation {
    let lhs = TypeExpr::pair(da.lhs.clone(), db.lhs.clone());
    if da.rule == DeclarativeRule::Refl && db.rule == DeclarativeRule::Refl {
        return Derivation::refl(lhs);
    }
    let rhs = TypeExpr::pair(da.rhs.clone(), db.rhs.clone());
    Derivation::node(DeclarativeRule::Pair, lhs, rhs, vec![da, db])
}

/// `l*r <: un_prs(l, r)`.
fn pair_to_un_prs(l: &TypeExpr, r: &TypeExpr) -> Derivation {
    let pair = TypeExpr::pair(l.clone(), r.clone());
    match (l, r) {
        (TypeExpr::Union(l1, l2), _) => {
            let distributed = TypeExpr::union(
                TypeExpr::pair((**l1).clone(), r.clone()),
                TypeExpr::pair((**l2).clone(), r.clone()),
            );
            let distr = Derivation::axiom(DeclarativeRule::Distr1, pair, distributed);
            Derivation::trans(
                distr,
                union_mono(pair_to_un_prs(l1, r), pair_to_un_prs(l2, r)),
            )
        }
        (_, TypeExpr::Union(r1, r2)) => {
            let distributed = TypeExpr::union(
                TypeExpr::pair(l.clone(), (**r1).clone()),
                TypeExpr::pair(l.clone(), (**r2).clone()),
            );
            let distr = Derivation::axiom(DeclarativeRule::Distr2, pair, distributed);
            Derivation::trans(
                distr,
                union_mono(pair_to_un_prs(l, r1), pair_to_un_prs(l, r2)),
            )
        }
        _ => Derivation::refl(pair),
    }
}

/// `un_prs(l, r) <: l*r`.
fn un_prs_to_pair(l: &TypeExpr, r: &TypeExpr) -> Derivation {
    let pair = TypeExpr::pair(l.clone(), r.clone());
    match (l, r) {
        (TypeExpr::Union(l1, l2), _) => {
            let widen = |side: &TypeExpr, rule| {
                let to_pair = un_prs_to_pair(side, r);
                let step = Derivation::node(
                    DeclarativeRule::Pair,
                    TypeExpr::pair(side.clone(), r.clone()),
                    pair.clone(),
                    vec![
                        Derivation::axiom(rule, side.clone(), l.clone()),
                        Derivation::refl(r.clone()),
                    ],
                );
                Derivation::trans(to_pair, step)
            };
            Derivation::node(
                DeclarativeRule::UnionL,
                un_prs(l.clone(), r.clone()),
                pair.clone(),
                vec![
                    widen(l1, DeclarativeRule::UnionR1),
                    widen(l2, DeclarativeRule::UnionR2),
                ],
            )
        }
        (_, TypeExpr::Union(r1, r2)) => {
            let widen = |side: &TypeExpr, rule| {
                let to_pair = un_prs_to_pair(l, side);
                let step = Derivation::node(
                    DeclarativeRule::Pair,
                    TypeExpr::pair(l.clone(), side.clone()),
                    pair.clone(),
                    vec![
                        Derivation::refl(l.clone()),
                        Derivation::axiom(rule, side.clone(), r.clone()),
                    ],
                );
                Derivation::trans(to_pair, step)
            };
            Derivation::node(
                DeclarativeRule::UnionL,
                un_prs(l.clone(), r.clone()),
                pair.clone(),
                vec![
                    widen(r1, DeclarativeRule::UnionR1),
                    widen(r2, DeclarativeRule::UnionR2),
                ],
            )
        }
        _ => Derivation::refl(pair),
    }
}
