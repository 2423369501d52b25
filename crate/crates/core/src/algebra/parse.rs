//! Text syntax for elements of the quantum space.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' ['-'] integer]
//! atom   := 'th' index | 'd' index | integer | symbol | '(' expr ')'
//! ```
//!
//! Division and negative powers are only allowed for scalar operands.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::ring::{Rational, RingElem, Symbol};

use super::context::{AlgebraContext, Params};
use super::normal::NormalElement;
use super::rewrite::normal_form;
use super::word::{Letter, Word, WordSum};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(v) => format!("`{v}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn err(position: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("nonempty");
                return Err(err(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ctx: Option<&'a AlgebraContext>,
}

type Value = WordSum<RingElem>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Value, AlgebraError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(&RingElem::int(-1));
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.add(&self.term()?.scale(&RingElem::int(-1)));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let d = self.factor()?;
                    let s = d
                        .as_scalar()
                        .ok_or_else(|| err(at, "division by a non-scalar"))?;
                    let inv = s.inv().map_err(|_| err(at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Value, AlgebraError> {
        let base_at = self.offset();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (at, tok) = self.bump();
        let k: u32 = match tok {
            Tok::Int(v) => u32::try_from(&v)
                .ok()
                .filter(|k| *k <= 1024)
                .ok_or_else(|| err(at, "exponent too large"))?,
            other => return Err(err(at, format!("expected an exponent, found {}", describe(&other)))),
        };
        if negative {
            let s = base
                .as_scalar()
                .ok_or_else(|| err(base_at, "negative power of a non-scalar"))?;
            let v = s
                .powi(-(k as i32))
                .map_err(|_| err(base_at, "negative power of zero"))?;
            return Ok(WordSum::scalar(v));
        }
        let mut acc = WordSum::scalar(RingElem::int(1));
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Value, AlgebraError> {
        let (at, tok) = self.bump();
        match tok {
            Tok::Int(v) => Ok(WordSum::scalar(RingElem::rational(Rational::from_integer(v)))),
            Tok::LParen => {
                let v = self.expr()?;
                let (at2, close) = self.bump();
                if close != Tok::RParen {
                    return Err(err(at2, format!("expected `)`, found {}", describe(&close))));
                }
                Ok(v)
            }
            Tok::Ident(name) => self.ident(at, &name),
            other => Err(err(at, format!("unexpected {}", describe(&other)))),
        }
    }

    fn ident(&self, at: usize, name: &str) -> Result<Value, AlgebraError> {
        if let Some(sym) = Symbol::from_name(name) {
            return Ok(WordSum::scalar(RingElem::symbol(sym)));
        }
        let letter = if let Some(rest) = name.strip_prefix("th") {
            rest.parse::<usize>().ok().map(Letter::Theta)
        } else if let Some(rest) = name.strip_prefix('d') {
            rest.parse::<usize>().ok().map(Letter::Del)
        } else {
            None
        };
        let Some(letter) = letter else {
            return Err(err(at, format!("unknown identifier `{name}`")));
        };
        match self.ctx {
            None => Err(err(at, format!("`{name}` is not a scalar"))),
            Some(ctx) => {
                let i = letter.index();
                if i == 0 || i > ctx.n() {
                    return Err(err(
                        at,
                        format!("index {i} of `{name}` outside 1..={}", ctx.n()),
                    ));
                }
                Ok(WordSum::word(Word(vec![letter])))
            }
        }
    }
}

fn run(text: &str, ctx: Option<&AlgebraContext>) -> Result<Value, AlgebraError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        ctx,
    };
    if *p.peek() == Tok::End {
        return Err(err(0, "empty expression"));
    }
    let v = p.expr()?;
    let (at, t) = p.bump();
    if t != Tok::End {
        return Err(err(at, format!("unexpected {}", describe(&t))));
    }
    Ok(v)
}

/// Parses text into a combination of words, without reordering.
pub fn parse_words(text: &str, ctx: &AlgebraContext) -> Result<WordSum<RingElem>, AlgebraError> {
    run(text, Some(ctx))
}

/// Parses text and reduces it to normal form with symbolic parameters.
pub fn parse(text: &str, ctx: &AlgebraContext) -> Result<NormalElement<RingElem>, AlgebraError> {
    let words = parse_words(text, ctx)?;
    Ok(normal_form(&words, &Params::symbolic(*ctx)))
}

/// Parses a coefficient expression (no letters).
pub fn parse_scalar(text: &str) -> Result<RingElem, AlgebraError> {
    let v = run(text, None)?;
    Ok(v.as_scalar().expect("letters are rejected"))
}

impl FromStr for RingElem {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> AlgebraContext {
        AlgebraContext::one_param(n).unwrap()
    }

    #[test]
    fn square_of_letter_is_zero() {
        assert!(parse("th1^2", &ctx(2)).unwrap().is_zero());
        assert!(parse("d2*d2", &ctx(2)).unwrap().is_zero());
    }

    #[test]
    fn diagonal_rule_from_text() {
        let e = parse("d1*th1", &ctx(2)).unwrap();
        assert_eq!(e.to_string(), "1 - th1*d1 + (r^-2 - 1)*th2*d2");
    }

    #[test]
    fn printed_form_reparses() {
        let c = ctx(2);
        let e = parse("d1*th1", &c).unwrap();
        assert_eq!(parse(&e.to_string(), &c).unwrap(), e);
    }

    #[test]
    fn coefficients() {
        assert_eq!("3/2".parse::<RingElem>().unwrap().to_string(), "3/2");
        assert_eq!("r^-2 - 1".parse::<RingElem>().unwrap().to_string(), "r^-2 - 1");
        assert_eq!("-(r^2 - 1)/(r - 1)".parse::<RingElem>().unwrap().to_string(), "-r - 1");
    }

    #[test]
    fn errors_carry_positions() {
        let c = ctx(2);
        match parse("th1 + th3", &c) {
            Err(AlgebraError::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse("th1 + % ", &c) {
            Err(AlgebraError::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("th1 / th2", &c).is_err());
        assert!(parse("(th1", &c).is_err());
        assert!(parse("", &c).is_err());
        assert!(parse("1/0", &c).is_err());
        assert!("th1".parse::<RingElem>().is_err());
        assert!("foo".parse::<RingElem>().is_err());
    }
}
