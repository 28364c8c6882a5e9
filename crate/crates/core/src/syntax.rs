//! Concrete syntax for type expressions.
//!
//! ```text
//! type    := union
//! union   := prod ('|' prod)*
//! prod    := primary ('*' primary)*
//! primary := NAME | '(' type ')'
//! ```
//!
//! Both operators are left-associative and `*` binds tighter than `|`.
//! `×` and `∪` are accepted as aliases of `*` and `|`.

use std::fmt;

use crate::hierarchy::NominalHierarchy;
use crate::types::{Name, TypeExpr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown type name `{name}` at position {position}")]
    UnknownName { name: Name, position: usize },
}

/// Parses `src` and resolves every name against `hierarchy`.
pub fn parse_type(src: &str, hierarchy: &NominalHierarchy) -> Result<TypeExpr, ParseError> {
    Parser::new(src, Some(hierarchy)).parse()
}

/// Parses `src` without checking names against a hierarchy.
pub fn parse_type_unchecked(src: &str) -> Result<TypeExpr, ParseError> {
    Parser::new(src, None).parse()
}

/// Renders `t` with the fewest parentheses that still parse back to `t`.
pub fn print_type(t: &TypeExpr) -> String {
    t.to_string()
}

/// Renders `t` parenthesizing every nested operand of the same operator, so
/// the nesting of unions and pairs is visible: `(Int|Flt)|Cmplx`.
pub fn print_type_grouped(t: &TypeExpr) -> String {
    let mut out = String::new();
    write_type(&mut out, t, Prec::Top, true).expect("writing to a String cannot fail");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Top,
    UnionRight,
    Pair,
    PairRight,
}

fn write_type<W: fmt::Write>(out: &mut W, t: &TypeExpr, ctx: Prec, grouped: bool) -> fmt::Result {
    match t {
        TypeExpr::Name(n) => out.write_str(n.as_str()),
        TypeExpr::Union(l, r) => {
            let parens = ctx > Prec::Top;
            if parens {
                out.write_char('(')?;
            }
            let left_ctx = if grouped { Prec::UnionRight } else { Prec::Top };
            write_type(out, l, left_ctx, grouped)?;
            out.write_char('|')?;
            write_type(out, r, Prec::UnionRight, grouped)?;
            if parens {
                out.write_char(')')?;
            }
            Ok(())
        }
        TypeExpr::Pair(l, r) => {
            let parens = ctx > Prec::Pair;
            if parens {
                out.write_char('(')?;
            }
            let left_ctx = if grouped { Prec::PairRight } else { Prec::Pair };
            write_type(out, l, left_ctx, grouped)?;
            out.write_char('*')?;
            write_type(out, r, Prec::PairRight, grouped)?;
            if parens {
                out.write_char(')')?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_type(f, self, Prec::Top, false)
    }
}

impl std::str::FromStr for TypeExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_type_unchecked(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Star,
    Bar,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(n) => write!(f, "name `{n}`"),
            Token::Star => f.write_str("`*`"),
            Token::Bar => f.write_str("`|`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    peeked: Option<(usize, Token)>,
    hierarchy: Option<&'a NominalHierarchy>,
}

impl<'a> Parser<'a> {
    fn new(src: &str, hierarchy: Option<&'a NominalHierarchy>) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            peeked: None,
            hierarchy,
        }
    }

    fn parse(mut self) -> Result<TypeExpr, ParseError> {
        let t = self.union()?;
        match self.next()? {
            (_, Token::End) => Ok(t),
            (position, tok) => Err(ParseError::Syntax {
                position,
                message: format!("unexpected {tok}"),
            }),
        }
    }

    fn union(&mut self) -> Result<TypeExpr, ParseError> {
        let mut t = self.prod()?;
        while self.peek()? == &Token::Bar {
            self.next()?;
            t = TypeExpr::union(t, self.prod()?);
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<TypeExpr, ParseError> {
        let mut t = self.primary()?;
        while self.peek()? == &Token::Star {
            self.next()?;
            t = TypeExpr::pair(t, self.primary()?);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<TypeExpr, ParseError> {
        match self.next()? {
            (position, Token::Name(text)) => {
                let name = Name::new(&text);
                if let Some(h) = self.hierarchy {
                    if !h.contains(&name) {
                        return Err(ParseError::UnknownName { name, position });
                    }
                }
                Ok(TypeExpr::Name(name))
            }
            (_, Token::LParen) => {
                let t = self.union()?;
                match self.next()? {
                    (_, Token::RParen) => Ok(t),
                    (position, tok) => Err(ParseError::Syntax {
                        position,
                        message: format!("expected `)`, found {tok}"),
                    }),
                }
            }
            (position, tok) => Err(ParseError::Syntax {
                position,
                message: format!("expected a type, found {tok}"),
            }),
        }
    }

    fn peek(&mut self) -> Result<&Token, ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(&self.peeked.as_ref().expect("just filled").1)
    }

    fn next(&mut self) -> Result<(usize, Token), ParseError> {
        match self.peeked.take() {
            Some(tok) => Ok(tok),
            None => self.lex(),
        }
    }

    fn lex(&mut self) -> Result<(usize, Token), ParseError> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = self.chars.get(self.pos) else {
            return Ok((start, Token::End));
        };
        self.pos += 1;
        let tok = match c {
            '*' | '×' => Token::Star,
            '|' | '∪' => Token::Bar,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_alphabetic() => {
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                Token::Name(self.chars[start..self.pos].iter().collect())
            }
            other => {
                return Err(ParseError::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        Ok((start, tok))
    }
}
