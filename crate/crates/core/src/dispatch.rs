//! Tuple-type multiple dispatch.
//!
//! A method's signature and a call are both types; an n-ary tuple is written
//! as right-nested pairs, `A*(B*C)`. Dispatch finds the methods whose
//! signature is a supertype of the call and picks the one whose signature is
//! a subtype of all the others.
//!
//! Defining a method whose signature is equivalent to an existing one (each
//! a subtype of the other) replaces it, like reassigning a variable. Which
//! signatures are equivalent depends on the mode: in semantic mode `Real*Real`
//! and `(Int|Flt)*(Int|Flt)` are, so adding a new concrete subtype of `Real`
//! later changes which method a program ends up with.

use std::fmt;

use crate::error::{Error, Result};
use crate::hierarchy::NominalHierarchy;
use crate::semantics::Mode;
use crate::subtyping::{equivalent, is_subtype, Strategy};
use crate::types::TypeExpr;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MethodDef {
    pub function: String,
    pub signature: TypeExpr,
    pub body: String,
}

impl MethodDef {
    pub fn new(function: impl Into<String>, signature: TypeExpr, body: impl Into<String>) -> Self {
        MethodDef {
            function: function.into(),
            signature,
            body: body.into(),
        }
    }
}

impl fmt::Display for MethodDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "method {} {} => {}",
            self.function, self.signature, self.body
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DispatchOutcome {
    Selected(MethodDef),
    NoApplicableMethod,
    /// The applicable methods no other applicable method is more specific
    /// than.
    Ambiguous(Vec<MethodDef>),
}

#[derive(Debug, Clone)]
pub struct MethodTable {
    hierarchy: NominalHierarchy,
    mode: Mode,
    methods: Vec<MethodDef>,
    /// Every definition ever added, for [`MethodTable::rebuild`].
    program: Vec<MethodDef>,
}

impl MethodTable {
    pub fn new(hierarchy: NominalHierarchy, mode: Mode) -> Self {
        MethodTable {
            hierarchy,
            mode,
            methods: Vec::new(),
            program: Vec::new(),
        }
    }

    /// Adds the methods one after another.
    pub fn from_program(
        hierarchy: NominalHierarchy,
        mode: Mode,
        program: impl IntoIterator<Item = MethodDef>,
    ) -> Result<Self> {
        let mut table = MethodTable::new(hierarchy, mode);
        for m in program {
            table.add_method(m)?;
        }
        Ok(table)
    }

    /// Re-runs every definition made so far against another hierarchy.
    pub fn rebuild(&self, hierarchy: NominalHierarchy) -> Result<Self> {
        MethodTable::from_program(hierarchy, self.mode, self.program.iter().cloned())
    }

    pub fn hierarchy(&self) -> &NominalHierarchy {
        &self.hierarchy
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn methods(&self) -> &[MethodDef] {
        &self.methods
    }

    pub fn methods_of<'a>(&'a self, function: &'a str) -> impl Iterator<Item = &'a MethodDef> + 'a {
        self.methods.iter().filter(move |m| m.function == function)
    }

    fn sub(&self, t1: &TypeExpr, t2: &TypeExpr) -> Result<bool> {
        is_subtype(&self.hierarchy, t1, t2, self.mode, Strategy::NormalizeFirst)
    }

    /// Replaces a method of the same function with an equivalent signature,
    /// or appends. Returns the replaced method.
    pub fn add_method(&mut self, m: MethodDef) -> Result<Option<MethodDef>> {
        self.hierarchy.check_type(&m.signature)?;
        let mut existing = None;
        for (i, old) in self.methods.iter().enumerate() {
            if old.function == m.function
                && equivalent(&self.hierarchy, &old.signature, &m.signature, self.mode)?
            {
                existing = Some(i);
                break;
            }
        }
        self.program.push(m.clone());
        Ok(match existing {
            Some(i) => Some(std::mem::replace(&mut self.methods[i], m)),
            None => {
                self.methods.push(m);
                None
            }
        })
    }

    /// Methods of `function` whose signature is a supertype of `call`, in
    /// table order.
    pub fn applicable(&self, function: &str, call: &TypeExpr) -> Result<Vec<&MethodDef>> {
        self.hierarchy.check_type(call)?;
        if self.methods_of(function).next().is_none() {
            return Err(Error::UnknownFunction(function.to_string()));
        }
        let mut found = Vec::new();
        for m in self.methods.iter().filter(|m| m.function == function) {
            if self.sub(call, &m.signature)? {
                found.push(m);
            }
        }
        Ok(found)
    }

    pub fn resolve(&self, function: &str, call: &TypeExpr) -> Result<DispatchOutcome> {
        let candidates = self.applicable(function, call)?;
        if candidates.is_empty() {
            return Ok(DispatchOutcome::NoApplicableMethod);
        }
        let n = candidates.len();
        // below[i][j]: signature i is a subtype of signature j
        let mut below = vec![vec![true; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    below[i][j] = self.sub(&candidates[i].signature, &candidates[j].signature)?;
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| below[i].iter().all(|&b| b)) {
            return Ok(DispatchOutcome::Selected(candidates[i].clone()));
        }
        let minimal = (0..n)
            .filter(|&i| !(0..n).any(|j| below[j][i] && !below[i][j]))
            .map(|i| candidates[i].clone())
            .collect();
        Ok(DispatchOutcome::Ambiguous(minimal))
    }
}
