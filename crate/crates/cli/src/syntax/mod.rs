//! Text syntax for field elements, truth-value sets, neutrosophic values,
//! formulas and environment files.
//!
//! ```text
//! elem    := sum
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := atom ("^" "-"? INT)?
//! atom    := INT | "X" | "(" sum ")"
//!
//! set     := piece ("u" piece)*
//! piece   := "{" (elem ("," elem)*)? "}" | "unit" | "mon(" elem ")"
//!          | "left(" elem ")" | "right(" elem ")"
//!          | "iv(" kind ":" elem "," elem ":" kind ")"
//! kind    := "closed" | "open" | "rough" | "rough(" "-"? INT ")"
//!
//! nvalue  := "(" set "," set "," set ")"
//!
//! formula := disj ("->" formula)?
//! disj    := conj (("or" | "|") conj)*
//! conj    := neg (("and" | "&") neg)*
//! neg     := ("not" | "!") neg | NAME | "(" formula ")"
//! ```

mod env;
mod lexer;

use std::fmt;

use nsl_core::nlogic::{Formula, NValue};
use nsl_core::nsets::{left_monad, monad, right_monad, unit_interval, BoundKind, GenInterval, NSet};
use nsl_core::ordfield::{Rational, RationalFunction};

pub use env::{parse_env, EnvFile};
use lexer::{lex, Tok, Token};

pub const KEYWORDS: [&str; 3] = ["not", "and", "or"];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    /// 1-based character column.
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(col: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&s)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn col(&self) -> usize {
        self.toks[self.pos].col
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == w)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        let hit = self.is_sym(s);
        if hit {
            self.bump();
        }
        hit
    }

    fn eat_word(&mut self, w: &str) -> bool {
        let hit = self.is_word(w);
        if hit {
            self.bump();
        }
        hit
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(self.col(), format!("expected {wanted}, found {}", self.peek()))
    }

    fn expect_sym(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{s}`")))
        }
    }

    fn finish<T>(&mut self, v: T) -> Result<T, ParseError> {
        match self.peek() {
            Tok::End => Ok(v),
            _ => Err(self.unexpected("end of input")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let col = self.col();
        let neg = self.eat_sym("-");
        match self.bump().tok {
            Tok::Int(s) => {
                let n: i64 = s.parse().map_err(|_| ParseError::new(col, "integer out of range"))?;
                Ok(if neg { -n } else { n })
            }
            _ => Err(ParseError::new(col, "expected an integer")),
        }
    }

    // Field elements.

    fn elem(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.eat_sym("+") {
                acc = &acc + &self.product()?;
            } else if self.is_sym("-") {
                self.bump();
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_sym("*") {
                acc = &acc * &self.unary()?;
            } else if self.is_sym("/") {
                let col = self.bump().col;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| ParseError::new(col, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if self.eat_sym("-") {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if self.is_sym("^") {
            let col = self.bump().col;
            let n = self.int()?;
            return base.pow(n).map_err(|_| ParseError::new(col, "zero raised to a negative power"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let col = self.col();
        match self.bump().tok {
            Tok::Int(s) => {
                let q: Rational = s.parse().map_err(|_| ParseError::new(col, "bad integer"))?;
                Ok(RationalFunction::embed(q))
            }
            Tok::Ident(s) if s == "X" => Ok(RationalFunction::x()),
            Tok::Sym("(") => {
                let v = self.elem()?;
                self.expect_sym(")")?;
                Ok(v)
            }
            t => Err(ParseError::new(col, format!("expected a number, `X` or `(`, found {t}"))),
        }
    }

    // Sets.

    fn set(&mut self) -> Result<NSet, ParseError> {
        let mut acc = self.piece()?;
        while self.eat_word("u") {
            acc = acc.union(&self.piece()?);
        }
        Ok(acc)
    }

    fn paren_elem(&mut self) -> Result<RationalFunction, ParseError> {
        self.expect_sym("(")?;
        let v = self.elem()?;
        self.expect_sym(")")?;
        Ok(v)
    }

    fn piece(&mut self) -> Result<NSet, ParseError> {
        let col = self.col();
        if self.eat_sym("{") {
            let mut pts = Vec::new();
            if !self.eat_sym("}") {
                loop {
                    pts.push(self.elem()?);
                    if self.eat_sym("}") {
                        break;
                    }
                    self.expect_sym(",")?;
                }
            }
            return Ok(NSet::finite(pts));
        }
        let Tok::Ident(word) = self.peek().clone() else {
            return Err(self.unexpected("a set"));
        };
        self.bump();
        match word.as_str() {
            "unit" => Ok(unit_interval()),
            "mon" => Ok(monad(&self.paren_elem()?)),
            "left" => Ok(left_monad(&self.paren_elem()?)),
            "right" => Ok(right_monad(&self.paren_elem()?)),
            "iv" => {
                self.expect_sym("(")?;
                let lk = self.kind()?;
                self.expect_sym(":")?;
                let lo = self.elem()?;
                self.expect_sym(",")?;
                let hi = self.elem()?;
                self.expect_sym(":")?;
                let hk = self.kind()?;
                self.expect_sym(")")?;
                GenInterval::new(lo, lk, hi, hk)
                    .map(NSet::interval)
                    .map_err(|e| ParseError::new(col, e.to_string()))
            }
            _ => Err(ParseError::new(col, format!("expected a set, found `{word}`"))),
        }
    }

    fn kind(&mut self) -> Result<BoundKind, ParseError> {
        let col = self.col();
        if self.eat_word("closed") {
            Ok(BoundKind::Closed)
        } else if self.eat_word("open") {
            Ok(BoundKind::Open)
        } else if self.eat_word("rough") {
            if self.eat_sym("(") {
                let k = self.int()?;
                self.expect_sym(")")?;
                Ok(BoundKind::Rough(k))
            } else {
                Ok(BoundKind::ROUGH)
            }
        } else {
            Err(ParseError::new(col, format!("expected closed, open or rough, found {}", self.peek())))
        }
    }

    fn nvalue(&mut self) -> Result<NValue, ParseError> {
        self.expect_sym("(")?;
        let t = self.set()?;
        self.expect_sym(",")?;
        let i = self.set()?;
        self.expect_sym(",")?;
        let f = self.set()?;
        self.expect_sym(")")?;
        Ok(NValue::new(t, i, f))
    }

    // Formulas.

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disj()?;
        if self.eat_sym("->") {
            return Ok(Formula::implies(lhs, self.formula()?));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conj()?;
        while self.eat_word("or") || self.eat_sym("|") {
            acc = Formula::or(acc, self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.neg()?;
        while self.eat_word("and") || self.eat_sym("&") {
            acc = Formula::and(acc, self.neg()?);
        }
        Ok(acc)
    }

    fn neg(&mut self) -> Result<Formula, ParseError> {
        if self.eat_word("not") || self.eat_sym("!") {
            return Ok(Formula::not(self.neg()?));
        }
        let col = self.col();
        match self.bump().tok {
            Tok::Ident(name) if is_atom_name(&name) => Ok(Formula::Atom(name)),
            Tok::Sym("(") => {
                let f = self.formula()?;
                self.expect_sym(")")?;
                Ok(f)
            }
            t => Err(ParseError::new(col, format!("expected an atom, `not` or `(`, found {t}"))),
        }
    }
}

pub fn parse_field_elem(text: &str) -> Result<RationalFunction, ParseError> {
    let mut p = Parser::new(text)?;
    let v = p.elem()?;
    p.finish(v)
}

pub fn parse_nset(text: &str) -> Result<NSet, ParseError> {
    let mut p = Parser::new(text)?;
    let v = p.set()?;
    p.finish(v)
}

pub fn parse_nvalue(text: &str) -> Result<NValue, ParseError> {
    let mut p = Parser::new(text)?;
    let v = p.nvalue()?;
    p.finish(v)
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let v = p.formula()?;
    p.finish(v)
}
