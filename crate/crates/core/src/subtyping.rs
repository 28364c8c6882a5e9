//! Reductive subtyping: the syntax-directed decision procedure.
//!
//! The rules are
//!
//! | rule         | conclusion            | premises                      |
//! |--------------|-----------------------|-------------------------------|
//! | `SR-BaseRefl`| `n <: n`              |                               |
//! | `SR-Nom`     | `n1 <: n2`            | `n1` transitively extends `n2`|
//! | `SR-Pair`    | `l1*l2 <: r1*r2`      | `l1 <: r1`, `l2 <: r2`        |
//! | `SR-UnionL`  | `a|b <: r`            | `a <: r`, `b <: r`            |
//! | `SR-UnionR1` | `l <: c|d`            | `l <: c`                      |
//! | `SR-UnionR2` | `l <: c|d`            | `l <: d`                      |
//! | `SR-NF`      | `l <: r`              | `NF(l) <: r`                  |
//!
//! where `NF` is [`nf`](crate::normalize::nf) in semantic mode and
//! [`nf_atomic`](crate::normalize::nf_atomic) in atomic mode.
//!
//! [`Strategy::NormalizeFirst`] applies `SR-NF` once at the root and then
//! proceeds syntax-directedly, backtracking only between `SR-UnionR1` and
//! `SR-UnionR2`. [`Strategy::ShortPathFirst`] first searches without
//! normalizing, applying `SR-NF` locally at a node only once the plain rules
//! have failed there, and falls back to `NormalizeFirst` if that fails too.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hierarchy::NominalHierarchy;
use crate::normalize::{is_normal, normalize};
use crate::semantics::Mode;
use crate::types::TypeExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductiveRule {
    BaseRefl,
    Nom,
    Pair,
    UnionL,
    UnionR1,
    UnionR2,
    Nf,
}

impl ReductiveRule {
    pub const ALL: [ReductiveRule; 7] = [
        ReductiveRule::BaseRefl,
        ReductiveRule::Nom,
        ReductiveRule::Pair,
        ReductiveRule::UnionL,
        ReductiveRule::UnionR1,
        ReductiveRule::UnionR2,
        ReductiveRule::Nf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReductiveRule::BaseRefl => "SR-BaseRefl",
            ReductiveRule::Nom => "SR-Nom",
            ReductiveRule::Pair => "SR-Pair",
            ReductiveRule::UnionL => "SR-UnionL",
            ReductiveRule::UnionR1 => "SR-UnionR1",
            ReductiveRule::UnionR2 => "SR-UnionR2",
            ReductiveRule::Nf => "SR-NF",
        }
    }
}

impl fmt::Display for ReductiveRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A reductive derivation tree.
#[derive(Clone, PartialEq, Eq)]
pub struct ReductiveTrace {
    pub rule: ReductiveRule,
    pub lhs: TypeExpr,
    pub rhs: TypeExpr,
    pub premises: Vec<ReductiveTrace>,
}

impl ReductiveTrace {
    pub fn new(
        rule: ReductiveRule,
        lhs: TypeExpr,
        rhs: TypeExpr,
        premises: Vec<ReductiveTrace>,
    ) -> Self {
        ReductiveTrace {
            rule,
            lhs,
            rhs,
            premises,
        }
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(ReductiveTrace::size)
            .sum::<usize>()
    }

    pub fn count_rule(&self, rule: ReductiveRule) -> usize {
        usize::from(self.rule == rule)
            + self
                .premises
                .iter()
                .map(|p| p.count_rule(rule))
                .sum::<usize>()
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
        for p in &self.premises {
            p.write(f, indent + 2)?;
        }
        Ok(())
    }
}

/// One rule per line, `RULE: lhs <: rhs`, premises indented by two spaces.
impl fmt::Display for ReductiveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl fmt::Debug for ReductiveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    #[default]
    NormalizeFirst,
    ShortPathFirst,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::NormalizeFirst => "normalize-first",
            Strategy::ShortPathFirst => "short-path-first",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "normalize-first" => Ok(Strategy::NormalizeFirst),
            "short-path-first" => Ok(Strategy::ShortPathFirst),
            other => Err(format!(
                "unknown strategy `{other}` (expected `normalize-first` or `short-path-first`)"
            )),
        }
    }
}

/// Decides `t1 <: t2`, returning a trace when it holds.
pub fn reductive_sub(
    h: &NominalHierarchy,
    t1: &TypeExpr,
    t2: &TypeExpr,
    mode: Mode,
    strategy: Strategy,
) -> Result<(bool, Option<ReductiveTrace>)> {
    let trace = derive(h, t1, t2, mode, strategy)?;
    Ok((trace.is_some(), trace))
}

/// Like [`reductive_sub`] but only returns the trace.
pub fn derive(
    h: &NominalHierarchy,
    t1: &TypeExpr,
    t2: &TypeExpr,
    mode: Mode,
    strategy: Strategy,
) -> Result<Option<ReductiveTrace>> {
    run(h, t1, t2, mode, strategy, Tracing)
}

/// The verdict alone; no trace is built.
pub fn is_subtype(
    h: &NominalHierarchy,
    t1: &TypeExpr,
    t2: &TypeExpr,
    mode: Mode,
    strategy: Strategy,
) -> Result<bool> {
    Ok(run(h, t1, t2, mode, strategy, VerdictOnly)?.is_some())
}

/// Mutual subtyping.
pub fn equivalent(h: &NominalHierarchy, t1: &TypeExpr, t2: &TypeExpr, mode: Mode) -> Result<bool> {
    Ok(is_subtype(h, t1, t2, mode, Strategy::NormalizeFirst)?
        && is_subtype(h, t2, t1, mode, Strategy::NormalizeFirst)?)
}

fn run<P: Proof>(
    h: &NominalHierarchy,
    t1: &TypeExpr,
    t2: &TypeExpr,
    mode: Mode,
    strategy: Strategy,
    proof: P,
) -> Result<Option<P::Out>> {
    h.check_type(t1)?;
    h.check_type(t2)?;
    // Both strategies must agree on errors too, so this is checked before
    // the short path gets a chance to avoid normalizing.
    if mode == Mode::Semantic {
        if let Some(n) = h.find_empty_abstract(t1) {
            return Err(Error::EmptyAbstract(n.clone()));
        }
    }
    let mut search = Search {
        h,
        mode,
        proof,
        nf_cache: HashMap::new(),
        failed: HashSet::new(),
    };
    Ok(match strategy {
        Strategy::NormalizeFirst => search.normalize_first(t1, t2),
        Strategy::ShortPathFirst => search
            .short(t1, t2)
            .or_else(|| search.normalize_first(t1, t2)),
    })
}

/// What a successful search produces: `()` for a bare verdict, or a trace.
trait Proof {
    type Out;
    fn node(
        &self,
        rule: ReductiveRule,
        lhs: &TypeExpr,
        rhs: &TypeExpr,
        premises: Vec<Self::Out>,
    ) -> Self::Out;
}

struct VerdictOnly;

impl Proof for VerdictOnly {
    type Out = ();
    fn node(&self, _: ReductiveRule, _: &TypeExpr, _: &TypeExpr, _: Vec<()>) {}
}

struct Tracing;

impl Proof for Tracing {
    type Out = ReductiveTrace;
    fn node(
        &self,
        rule: ReductiveRule,
        lhs: &TypeExpr,
        rhs: &TypeExpr,
        premises: Vec<ReductiveTrace>,
    ) -> ReductiveTrace {
        ReductiveTrace::new(rule, lhs.clone(), rhs.clone(), premises)
    }
}

type NodeKey = (usize, usize);

fn key(l: &TypeExpr, r: &TypeExpr) -> NodeKey {
    (l as *const TypeExpr as usize, r as *const TypeExpr as usize)
}

struct Search<'h, P> {
    h: &'h NominalHierarchy,
    mode: Mode,
    proof: P,
    /// Normal forms of left-hand subterms, keyed by node address.
    nf_cache: HashMap<usize, Rc<TypeExpr>>,
    /// Short-path subgoals already known to fail, keyed by node addresses of
    /// subterms of the original query.
    failed: HashSet<NodeKey>,
}

impl<P: Proof> Search<'_, P> {
    fn normal_form(&mut self, l: &TypeExpr) -> Rc<TypeExpr> {
        let (h, mode) = (self.h, self.mode);
        self.nf_cache
            .entry(l as *const TypeExpr as usize)
            .or_insert_with(|| {
                // Names were checked and empty abstracts excluded up front.
                Rc::new(normalize(h, l, mode).expect("normal form of a checked type"))
            })
            .clone()
    }

    fn normalize_first(&mut self, l: &TypeExpr, r: &TypeExpr) -> Option<P::Out> {
        let n = self.normal_form(l);
        let premise = self.normal(&n, r)?;
        Some(self.proof.node(ReductiveRule::Nf, l, r, vec![premise]))
    }

    /// Syntax-directed search for a left-hand side in normal form.
    fn normal(&self, l: &TypeExpr, r: &TypeExpr) -> Option<P::Out> {
        if let TypeExpr::Union(a, b) = l {
            let pa = self.normal(a, r)?;
            let pb = self.normal(b, r)?;
            return Some(self.proof.node(ReductiveRule::UnionL, l, r, vec![pa, pb]));
        }
        match r {
            TypeExpr::Union(c, d) => {
                if let Some(p) = self.normal(l, c) {
                    return Some(self.proof.node(ReductiveRule::UnionR1, l, r, vec![p]));
                }
                let p = self.normal(l, d)?;
                Some(self.proof.node(ReductiveRule::UnionR2, l, r, vec![p]))
            }
            TypeExpr::Name(_) => self.nominal(l, r),
            TypeExpr::Pair(r1, r2) => {
                let TypeExpr::Pair(l1, l2) = l else {
                    return None;
                };
                let p1 = self.normal(l1, r1)?;
                let p2 = self.normal(l2, r2)?;
                Some(self.proof.node(ReductiveRule::Pair, l, r, vec![p1, p2]))
            }
        }
    }

    fn nominal(&self, l: &TypeExpr, r: &TypeExpr) -> Option<P::Out> {
        let (TypeExpr::Name(n1), TypeExpr::Name(n2)) = (l, r) else {
            return None;
        };
        if n1 == n2 {
            Some(self.proof.node(ReductiveRule::BaseRefl, l, r, Vec::new()))
        } else if self.h.extends(n1, n2) {
            Some(self.proof.node(ReductiveRule::Nom, l, r, Vec::new()))
        } else {
            None
        }
    }

    /// Search on arbitrary left-hand sides. Plain rules are tried first; a
    /// non-union left-hand side that is not in normal form is normalized
    /// locally only when they fail.
    fn short(&mut self, l: &TypeExpr, r: &TypeExpr) -> Option<P::Out> {
        let k = key(l, r);
        if self.failed.contains(&k) {
            return None;
        }
        let found = self.short_uncached(l, r);
        if found.is_none() {
            self.failed.insert(k);
        }
        found
    }

    fn short_uncached(&mut self, l: &TypeExpr, r: &TypeExpr) -> Option<P::Out> {
        if let TypeExpr::Union(a, b) = l {
            let pa = self.short(a, r)?;
            let pb = self.short(b, r)?;
            return Some(self.proof.node(ReductiveRule::UnionL, l, r, vec![pa, pb]));
        }
        let plain = match r {
            TypeExpr::Union(c, d) => match self.short(l, c) {
                Some(p) => Some(self.proof.node(ReductiveRule::UnionR1, l, r, vec![p])),
                None => self
                    .short(l, d)
                    .map(|p| self.proof.node(ReductiveRule::UnionR2, l, r, vec![p])),
            },
            TypeExpr::Name(_) => self.nominal(l, r),
            TypeExpr::Pair(r1, r2) => match l {
                TypeExpr::Pair(l1, l2) => self.short(l1, r1).and_then(|p1| {
                    self.short(l2, r2)
                        .map(|p2| self.proof.node(ReductiveRule::Pair, l, r, vec![p1, p2]))
                }),
                _ => None,
            },
        };
        if plain.is_some() || is_normal(self.h, l, self.mode) {
            return plain;
        }
        let n = self.normal_form(l);
        let premise = self.normal(&n, r)?;
        Some(self.proof.node(ReductiveRule::Nf, l, r, vec![premise]))
    }
}

/// Checks that every node of `trace` is an instance of its rule in `mode`.
pub fn check_reductive_trace(h: &NominalHierarchy, trace: &ReductiveTrace, mode: Mode) -> bool {
    h.check_type(&trace.lhs).is_ok()
        && h.check_type(&trace.rhs).is_ok()
        && check_node(h, trace, mode)
}

fn concludes(p: &ReductiveTrace, lhs: &TypeExpr, rhs: &TypeExpr) -> bool {
    &p.lhs == lhs && &p.rhs == rhs
}

fn check_node(h: &NominalHierarchy, tr: &ReductiveTrace, mode: Mode) -> bool {
    use ReductiveRule as R;
    let (l, r, ps) = (&tr.lhs, &tr.rhs, tr.premises.as_slice());
    let instance = match (tr.rule, ps) {
        (R::BaseRefl, []) => matches!(l, TypeExpr::Name(_)) && l == r,
        (R::Nom, []) => match (l, r) {
            (TypeExpr::Name(n1), TypeExpr::Name(n2)) => n1 != n2 && h.extends(n1, n2),
            _ => false,
        },
        (R::Pair, [p1, p2]) => match (l, r) {
            (TypeExpr::Pair(l1, l2), TypeExpr::Pair(r1, r2)) => {
                concludes(p1, l1, r1) && concludes(p2, l2, r2)
            }
            _ => false,
        },
        (R::UnionL, [p1, p2]) => match l {
            TypeExpr::Union(a, b) => concludes(p1, a, r) && concludes(p2, b, r),
            _ => false,
        },
        (R::UnionR1, [p]) => match r {
            TypeExpr::Union(c, _) => concludes(p, l, c),
            _ => false,
        },
        (R::UnionR2, [p]) => match r {
            TypeExpr::Union(_, d) => concludes(p, l, d),
            _ => false,
        },
        (R::Nf, [p]) => normalize(h, l, mode).is_ok_and(|n| concludes(p, &n, r)),
        _ => false,
    };
    instance && ps.iter().all(|p| check_node(h, p, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hierarchy::Decl;
    use crate::syntax::parse_type;

    const MODES: [Mode; 2] = [Mode::Semantic, Mode::Atomic];
    const STRATEGIES: [Strategy; 2] = [Strategy::NormalizeFirst, Strategy::ShortPathFirst];

    fn h() -> NominalHierarchy {
        NominalHierarchy::builtin()
    }

    fn ty(src: &str) -> TypeExpr {
        parse_type(src, &h()).unwrap()
    }

    fn sub(l: &str, r: &str, mode: Mode, strategy: Strategy) -> (bool, Option<ReductiveTrace>) {
        reductive_sub(&h(), &ty(l), &ty(r), mode, strategy).unwrap()
    }

    fn leaf(rule: ReductiveRule, l: &str, r: &str) -> ReductiveTrace {
        ReductiveTrace::new(rule, ty(l), ty(r), Vec::new())
    }

    #[test]
    fn normalization_based_trace_has_eight_rules() {
        let (holds, trace) = sub(
            "Str*(Int|Flt)",
            "Str*Real",
            Mode::Semantic,
            Strategy::NormalizeFirst,
        );
        assert!(holds);
        let trace = trace.unwrap();
        assert_eq!(trace.size(), 8);
        assert_eq!(trace.rule, ReductiveRule::Nf);
        assert_eq!(
            trace.to_string(),
            "SR-NF: Str*(Int|Flt) <: Str*Real\n\
             \x20 SR-UnionL: Str*Int|Str*Flt <: Str*Real\n\
             \x20   SR-Pair: Str*Int <: Str*Real\n\
             \x20     SR-BaseRefl: Str <: Str\n\
             \x20     SR-Nom: Int <: Real\n\
             \x20   SR-Pair: Str*Flt <: Str*Real\n\
             \x20     SR-BaseRefl: Str <: Str\n\
             \x20     SR-Nom: Flt <: Real\n"
        );
        assert!(check_reductive_trace(&h(), &trace, Mode::Semantic));
    }

    #[test]
    fn short_path_trace_has_five_rules() {
        let (holds, trace) = sub(
            "Str*(Int|Flt)",
            "Str*Real",
            Mode::Semantic,
            Strategy::ShortPathFirst,
        );
        assert!(holds);
        let trace = trace.unwrap();
        let expected = ReductiveTrace::new(
            ReductiveRule::Pair,
            ty("Str*(Int|Flt)"),
            ty("Str*Real"),
            vec![
                leaf(ReductiveRule::BaseRefl, "Str", "Str"),
                ReductiveTrace::new(
                    ReductiveRule::UnionL,
                    ty("Int|Flt"),
                    ty("Real"),
                    vec![
                        leaf(ReductiveRule::Nom, "Int", "Real"),
                        leaf(ReductiveRule::Nom, "Flt", "Real"),
                    ],
                ),
            ],
        );
        assert_eq!(trace, expected);
        assert_eq!(trace.size(), 5);
        assert!(check_reductive_trace(&h(), &trace, Mode::Semantic));
    }

    #[test]
    fn decides_without_explicit_transitivity() {
        for s in STRATEGIES {
            assert!(
                sub(
                    "Str*Real",
                    "(Str*Int)|(Str*Str)|(Str*Flt)",
                    Mode::Semantic,
                    s
                )
                .0
            );
        }
    }

    #[test]
    fn abstract_equals_union_only_in_semantic_mode() {
        for s in STRATEGIES {
            assert!(sub("Real", "Int|Flt", Mode::Semantic, s).0);
            assert!(!sub("Real", "Int|Flt", Mode::Atomic, s).0);
            assert!(sub("Int|Flt", "Real", Mode::Atomic, s).0);
            assert!(sub("Num", "Real|Cmplx", Mode::Semantic, s).0);
            assert!(!sub("Num", "Real|Cmplx", Mode::Atomic, s).0);
            assert!(sub("Real", "Num", Mode::Atomic, s).0);
        }
    }

    #[test]
    fn reflexivity() {
        for src in [
            "Int",
            "Real",
            "Num*Str",
            "Str*(Int|Flt)",
            "(Real|Str)*(Num|Int)",
        ] {
            for mode in MODES {
                for s in STRATEGIES {
                    let (holds, trace) = sub(src, src, mode, s);
                    assert!(holds, "{src} in {mode}/{s}");
                    assert!(check_reductive_trace(&h(), &trace.unwrap(), mode));
                }
            }
        }
    }

    #[test]
    fn negative_cases() {
        for (l, r) in [
            ("Real", "Int"),
            ("Str", "Num"),
            ("Int*Int", "Int"),
            ("Num", "Real"),
            ("Int", "Int*Int"),
        ] {
            for mode in MODES {
                for s in STRATEGIES {
                    assert_eq!(sub(l, r, mode, s), (false, None), "{l} <: {r}");
                }
            }
        }
    }

    #[test]
    fn local_normalization_in_short_path() {
        let (holds, trace) = sub("Real", "Int|Flt", Mode::Semantic, Strategy::ShortPathFirst);
        assert!(holds);
        let trace = trace.unwrap();
        assert_eq!(trace.rule, ReductiveRule::Nf);
        assert!(check_reductive_trace(&h(), &trace, Mode::Semantic));

        // Normalization is needed only on the second component.
        let (holds, trace) = sub(
            "Str*Real",
            "Str*(Int|Flt)",
            Mode::Semantic,
            Strategy::ShortPathFirst,
        );
        assert!(holds);
        let trace = trace.unwrap();
        assert_eq!(trace.rule, ReductiveRule::Pair);
        assert_eq!(trace.count_rule(ReductiveRule::Nf), 1);
        assert!(check_reductive_trace(&h(), &trace, Mode::Semantic));
    }

    #[test]
    fn abstract_chain_needs_normalization_between_names() {
        // `A` and `B` both denote {C}, but neither name extends the other
        // in the direction A <: B... only via normalization.
        let h = NominalHierarchy::new(vec![
            Decl::abstract_type("A"),
            Decl::abstract_type("B").extends("A"),
            Decl::concrete("C").extends("B"),
        ])
        .unwrap();
        let (a, c) = (TypeExpr::name("A"), TypeExpr::name("C"));
        let b = TypeExpr::name("B");
        for s in STRATEGIES {
            assert!(is_subtype(&h, &a, &b, Mode::Semantic, s).unwrap());
            assert!(is_subtype(&h, &a, &c, Mode::Semantic, s).unwrap());
            assert!(!is_subtype(&h, &a, &b, Mode::Atomic, s).unwrap());
            assert!(is_subtype(&h, &b, &a, Mode::Atomic, s).unwrap());
        }
    }

    #[test]
    fn errors() {
        let h = h().extended(Decl::abstract_type("Void")).unwrap();
        let void = TypeExpr::name("Void");
        let int = TypeExpr::name("Int");
        for s in STRATEGIES {
            assert_eq!(
                is_subtype(&h, &void, &void, Mode::Semantic, s),
                Err(Error::EmptyAbstract(crate::Name::new("Void")))
            );
            assert!(is_subtype(&h, &void, &void, Mode::Atomic, s).unwrap());
            assert!(is_subtype(
                &h,
                &int,
                &TypeExpr::union(void.clone(), int.clone()),
                Mode::Semantic,
                s
            )
            .unwrap());
            assert!(matches!(
                is_subtype(&h, &int, &TypeExpr::name("Nope"), Mode::Semantic, s),
                Err(Error::UnknownName(_))
            ));
        }
    }

    #[test]
    fn verdict_only_matches_tracing() {
        for (l, r) in [
            ("Real*Real", "(Int|Flt)*Num"),
            ("Num", "Int|Str"),
            ("Str*Num", "Str*Real|Str*Cmplx"),
        ] {
            for mode in MODES {
                for s in STRATEGIES {
                    let verdict = is_subtype(&h(), &ty(l), &ty(r), mode, s).unwrap();
                    assert_eq!(verdict, sub(l, r, mode, s).0);
                }
            }
        }
    }

    #[test]
    fn checker_rejects_bad_traces() {
        let h = h();
        assert!(!check_reductive_trace(
            &h,
            &leaf(ReductiveRule::BaseRefl, "Int", "Flt"),
            Mode::Semantic
        ));
        assert!(!check_reductive_trace(
            &h,
            &leaf(ReductiveRule::Nom, "Real", "Int"),
            Mode::Semantic
        ));
        assert!(!check_reductive_trace(
            &h,
            &leaf(ReductiveRule::Nom, "Int", "Int"),
            Mode::Semantic
        ));
        assert!(check_reductive_trace(
            &h,
            &leaf(ReductiveRule::Nom, "Real", "Num"),
            Mode::Atomic
        ));
        assert!(!check_reductive_trace(
            &h,
            &leaf(ReductiveRule::Pair, "Int*Int", "Int*Int"),
            Mode::Semantic
        ));
        // Wrong premise for SR-UnionR1.
        let bad = ReductiveTrace::new(
            ReductiveRule::UnionR1,
            ty("Int"),
            ty("Flt|Int"),
            vec![leaf(ReductiveRule::BaseRefl, "Int", "Int")],
        );
        assert!(!check_reductive_trace(&h, &bad, Mode::Semantic));
        let good = ReductiveTrace::new(
            ReductiveRule::UnionR2,
            ty("Int"),
            ty("Flt|Int"),
            bad.premises.clone(),
        );
        assert!(check_reductive_trace(&h, &good, Mode::Semantic));
        // SR-NF premise must be the mode's normal form.
        let (_, atomic) = sub(
            "Real*(Int|Str)",
            "Real*Int|Real*Str",
            Mode::Atomic,
            Strategy::NormalizeFirst,
        );
        let atomic = atomic.unwrap();
        assert!(check_reductive_trace(&h, &atomic, Mode::Atomic));
        assert!(!check_reductive_trace(&h, &atomic, Mode::Semantic));
        // Unknown names.
        let unknown = ReductiveTrace::new(
            ReductiveRule::BaseRefl,
            TypeExpr::name("Foo"),
            TypeExpr::name("Foo"),
            Vec::new(),
        );
        assert!(!check_reductive_trace(&h, &unknown, Mode::Semantic));
    }
}
