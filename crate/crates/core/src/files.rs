//! Line-based file formats.
//!
//! Hierarchy files declare one name per line, parents before children:
//!
//! ```text
//! # the numeric tower
//! abstract Num
//! abstract Real <: Num
//! concrete Int <: Real
//! ```
//!
//! Declaration order is significant: it is the order in which an abstract
//! name's concrete descendants appear in its normal form.
//!
//! Method files hold an optional mode line and method definitions, in program
//! order. Tuples are written as right-nested pairs.
//!
//! ```text
//! mode semantic
//! method add Int*Int => mII
//! method add Real*(Real*Real) => add3
//! ```
//!
//! In both formats `#` starts a comment and blank lines are ignored.

use crate::dispatch::MethodDef;
use crate::hierarchy::{Decl, HierarchyError, NameKind, NominalHierarchy};
use crate::semantics::Mode;
use crate::syntax::{parse_type, ParseError};
use crate::types::Name;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Type { line: usize, source: ParseError },
    #[error("invalid hierarchy: {0}")]
    Hierarchy(#[from] HierarchyError),
}

/// Non-blank lines with comments stripped, numbered from 1.
fn lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> FileError {
    FileError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_decls(src: &str) -> Result<Vec<Decl>, FileError> {
    lines(src)
        .map(|(line, text)| {
            let words: Vec<&str> = text.split_whitespace().collect();
            let kind = match words[0] {
                "abstract" => NameKind::Abstract,
                "concrete" => NameKind::Concrete,
                other => {
                    return Err(syntax(
                        line,
                        format!("expected `abstract` or `concrete`, found `{other}`"),
                    ))
                }
            };
            let (name, parent) = match words[1..] {
                [name] => (name, None),
                [name, "<:", parent] => (name, Some(parent)),
                _ => {
                    return Err(syntax(
                        line,
                        format!("expected `{kind} <Name>` or `{kind} <Name> <: <Parent>`"),
                    ))
                }
            };
            Ok(Decl {
                name: Name::new(name),
                kind,
                parent: parent.map(Name::new),
            })
        })
        .collect()
}

pub fn parse_hierarchy(src: &str) -> Result<NominalHierarchy, FileError> {
    Ok(NominalHierarchy::new(parse_decls(src)?)?)
}

/// A parsed method file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodFile {
    /// `None` when the file has no `mode` line.
    pub mode: Option<Mode>,
    pub methods: Vec<MethodDef>,
}

pub fn parse_methods(src: &str, h: &NominalHierarchy) -> Result<MethodFile, FileError> {
    let mut file = MethodFile {
        mode: None,
        methods: Vec::new(),
    };
    for (line, text) in lines(src) {
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match keyword {
            "mode" => {
                if file.mode.is_some() {
                    return Err(syntax(line, "duplicate `mode` line"));
                }
                file.mode = Some(rest.parse().map_err(|e: String| syntax(line, e))?);
            }
            "method" => file.methods.push(parse_method(line, rest, h)?),
            other => {
                return Err(syntax(
                    line,
                    format!("expected `mode` or `method`, found `{other}`"),
                ))
            }
        }
    }
    Ok(file)
}

fn parse_method(line: usize, text: &str, h: &NominalHierarchy) -> Result<MethodDef, FileError> {
    let usage = || syntax(line, "expected `method <fn> <type> => <body>`");
    let (function, rest) = text.split_once(char::is_whitespace).ok_or_else(usage)?;
    let (sig, body) = rest.rsplit_once("=>").ok_or_else(usage)?;
    let body = body.trim();
    if !Name::is_valid_identifier(function) {
        return Err(syntax(line, format!("invalid function name `{function}`")));
    }
    if !Name::is_valid_identifier(body) {
        return Err(syntax(line, format!("invalid method label `{body}`")));
    }
    let signature = parse_type(sig.trim(), h).map_err(|source| FileError::Type { line, source })?;
    Ok(MethodDef::new(function, signature, body))
}

/// Parses a call written `<fn> <type>`.
pub fn parse_call(src: &str, h: &NominalHierarchy) -> Result<(String, crate::TypeExpr), FileError> {
    let src = src.trim();
    let (function, ty) = src
        .split_once(char::is_whitespace)
        .ok_or_else(|| syntax(1, "expected `<fn> <type>`"))?;
    let ty = parse_type(ty.trim(), h).map_err(|source| FileError::Type { line: 1, source })?;
    Ok((function.to_string(), ty))
}
