//! Expressions over the generators, evaluated to normal form.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" ["-"] INT)?
//! atom   := GEN | INT | "q" | "qint(" ["-"] INT ")" | "qfac(" INT ")"
//!         | "qbinom(" INT "," INT ")" | "(" expr ")"
//! ```
//!
//! Division is by scalars only, and negative exponents need an invertible
//! group-like base (a `K` generator, `q`, or a nonzero scalar).

use std::sync::Arc;

use hopf_forge::pbw::{Algebra, Element, Letter, Monomial};
use hopf_forge::qfield::{q_binomial, q_factorial, q_int, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CliError;

/// Largest absolute exponent accepted by the parser.
pub const MAX_EXPONENT: i64 = 4096;

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
    Comma,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (sl, sc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Spanned { tok: Tok::Int(s.parse().expect("digits")), line: sl, col: sc });
            continue;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Spanned { tok: Tok::Ident(s), line: sl, col: sc });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                _ => return Err(CliError::syntax(format!("unexpected character {c:?}"), sl, sc)),
            }
        };
        out.push(Spanned { tok, line: sl, col: sc });
        col += 1;
        i += 1;
    }
    out.push(Spanned { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    alg: &'a Arc<Algebra>,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err_at(&self, t: &Spanned, msg: impl Into<String>) -> CliError {
        CliError::syntax(msg, t.line, t.col)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), CliError> {
        let t = self.next();
        if t.tok == want {
            Ok(())
        } else {
            Err(self.err_at(&t, format!("expected {what}, found {}", describe(&t.tok))))
        }
    }

    fn expr(&mut self) -> Result<Element, CliError> {
        let negate = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, CliError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    let at = self.next();
                    let d = self.unary()?;
                    let s = scalar_value(&d).ok_or_else(|| self.err_at(&at, "division is only by scalars"))?;
                    let inv = s.inv().ok_or_else(|| CliError::math("division by zero").at(at.line, at.col))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Element, CliError> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Element, CliError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let neg = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        let Tok::Int(n) = &t.tok else {
            return Err(self.err_at(&t, format!("expected an integer exponent, found {}", describe(&t.tok))));
        };
        let n: i64 = i64::try_from(n.clone())
            .ok()
            .filter(|n| *n <= MAX_EXPONENT)
            .ok_or_else(|| CliError::new("exponent-overflow", format!("exponent exceeds {MAX_EXPONENT}")).at(t.line, t.col))?;
        if !neg {
            return Ok(base.pow(n as u32));
        }
        let inv = invert_grouplike(&base).ok_or_else(|| {
            self.err_at(&caret, "negative exponents need an invertible group-like base such as K1 or q")
        })?;
        Ok(inv.pow(n as u32))
    }

    fn int_arg(&mut self) -> Result<i64, CliError> {
        let neg = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => {
                let v = i64::try_from(n.clone())
                    .ok()
                    .filter(|v| *v <= MAX_EXPONENT)
                    .ok_or_else(|| CliError::new("exponent-overflow", "integer argument too large").at(t.line, t.col))?;
                Ok(if neg { -v } else { v })
            }
            other => Err(self.err_at(&t, format!("expected an integer, found {}", describe(other)))),
        }
    }

    fn atom(&mut self) -> Result<Element, CliError> {
        let t = self.next();
        let field = self.alg.field().clone();
        match &t.tok {
            Tok::Int(n) => Ok(Element::scalar(self.alg, field.from_rational(&BigRational::from_integer(n.clone())))),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let call = |p: &mut Self, f: &dyn Fn(&mut Self) -> Result<Scalar, CliError>| -> Result<Element, CliError> {
                    p.expect(Tok::LParen, "'('")?;
                    let v = f(p)?;
                    p.expect(Tok::RParen, "')'")?;
                    Ok(Element::scalar(p.alg, v))
                };
                let math = |e: hopf_forge::Error| CliError::from(e).at(t.line, t.col);
                match name.as_str() {
                    "q" => Ok(Element::scalar(self.alg, field.q())),
                    "qint" => call(self, &|p| Ok(q_int(&field, p.int_arg()?))),
                    "qfac" => call(self, &|p| q_factorial(&field, p.int_arg()?).map_err(math)),
                    "qbinom" => call(self, &|p| {
                        let n = p.int_arg()?;
                        p.expect(Tok::Comma, "','")?;
                        let j = p.int_arg()?;
                        q_binomial(&field, n, j).map_err(math)
                    }),
                    _ => {
                        let g = generator(name).ok_or_else(|| self.err_at(&t, format!("unknown symbol {name:?}")))?;
                        Element::letter(self.alg, g).map_err(|e| CliError::from(e).at(t.line, t.col))
                    }
                }
            }
            other => Err(self.err_at(&t, format!("expected an operand, found {}", describe(other)))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("{s:?}"),
        Tok::Int(n) => format!("{n}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::End => "end of input".into(),
    }
}

fn generator(name: &str) -> Option<Letter> {
    use Letter::*;
    Some(match name {
        "E1" => E1,
        "E2" => E2,
        "E12" => E12,
        "F1" => F1,
        "F2" => F2,
        "F12" => F12,
        "K1" => K1,
        "K2" => K2,
        "Kt1" => Kt1,
        "Kt2" => Kt2,
        _ => return None,
    })
}

/// The coefficient of an element supported on the unit.
pub fn scalar_value(x: &Element) -> Option<Scalar> {
    match x.terms().iter().next() {
        None => Some(x.field().zero()),
        Some((m, c)) if x.len() == 1 && m.is_one() => Some(c.clone()),
        _ => None,
    }
}

fn invert_grouplike(x: &Element) -> Option<Element> {
    let (m, c) = x.terms().iter().next()?;
    if x.len() != 1 || !m.is_group() {
        return None;
    }
    let inv = Monomial::from_parts([0; 3], [-m.k[0], -m.k[1]], [-m.kt[0], -m.kt[1]], [0; 3]);
    Some(Element::monomial(x.algebra(), inv).scale(&c.inv()?))
}

/// Parses `text` and returns its normal form in `alg`.
pub fn parse(text: &str, alg: &Arc<Algebra>) -> Result<Element, CliError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, alg };
    let e = p.expr()?;
    let t = p.next();
    if t.tok != Tok::End {
        return Err(p.err_at(&t, format!("unexpected {} after expression", describe(&t.tok))));
    }
    Ok(e)
}

/// Parses a scalar expression (no generators other than the unit).
pub fn parse_scalar(text: &str, alg: &Arc<Algebra>) -> Result<Scalar, CliError> {
    let e = parse(text, alg)?;
    scalar_value(&e).ok_or_else(|| CliError::new("syntax", format!("{text:?} is not a scalar")))
}
