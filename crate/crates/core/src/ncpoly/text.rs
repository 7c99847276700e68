//! Textual syntax for polynomials.
//!
//! Terms look like `(3/2+1/2i)*t1*w1*t2`, `w2`, `u^-2`, `1`. Whitespace is
//! insignificant. The printer emits graded-lex term order, lowest first, and
//! the parser round-trips everything the printer produces. Letter exponents
//! are accepted on input (`w1^2` normalizes to `1 - t1`).

use super::{Config, Letter, Poly, PolyError, Syllable, Word};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }
}

impl From<(usize, PolyError)> for ParseError {
    fn from((pos, e): (usize, PolyError)) -> Self {
        ParseError::new(pos, e.to_string())
    }
}

/// Canonical text for one word: `1`, `t1^2*w1*t2`, `u^-2`, ...
pub fn word_string(w: &Word) -> String {
    if w.is_unit() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for s in w.syllables() {
        match *s {
            Syllable::Var { copy, t_pow, w_pow } => {
                if t_pow == 1 {
                    parts.push(format!("t{copy}"));
                } else if t_pow > 1 {
                    parts.push(format!("t{copy}^{t_pow}"));
                }
                if w_pow == 1 {
                    parts.push(format!("w{copy}"));
                }
            }
            Syllable::Unitary { z } => {
                if z == 1 {
                    parts.push("u".to_string());
                } else {
                    parts.push(format!("u^{z}"));
                }
            }
        }
    }
    parts.join("*")
}

/// Canonical text for a polynomial: terms lowest-first, real signs folded
/// into `+`/`-` separators, mixed complex coefficients parenthesized.
pub fn poly_string<S: Scalar>(p: &Poly<S>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (w, c)) in p.terms().enumerate() {
        let (lead_sign, body) = signed_body(c, w);
        if idx == 0 {
            if lead_sign < 0 {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if lead_sign < 0 { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

/// Splits a coefficient into a printable sign and body for term `w`.
/// Mixed complex coefficients keep their sign inside the parentheses.
fn signed_body<S: Scalar>(c: &S, w: &Word) -> (i8, String) {
    let minus_one = -S::one();
    let ws = word_string(w);
    if !w.is_unit() {
        if *c == S::one() {
            return (1, ws);
        }
        if *c == minus_one {
            return (-1, ws);
        }
    }
    let s = c.coeff_string();
    let (sign, cs) = if s.starts_with('-') {
        (-1, (-c.clone()).coeff_string())
    } else {
        (1, s)
    };
    if w.is_unit() {
        (sign, cs)
    } else {
        (sign, format!("{cs}*{ws}"))
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_string(self))
    }
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Imag,
    LetterT(u8),
    LetterW(u8),
    LetterU,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer { input: input.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn next_tok(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.input.len() {
            return Ok((start, Tok::End));
        }
        let b = self.input[self.pos];
        let simple = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'/' => Some(Tok::Slash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok((start, t));
        }
        if b.is_ascii_digit() {
            let mut end = self.pos;
            while end < self.input.len() && self.input[end].is_ascii_digit() {
                end += 1;
            }
            let text = std::str::from_utf8(&self.input[self.pos..end]).unwrap();
            self.pos = end;
            return Ok((start, Tok::Int(text.parse().unwrap())));
        }
        if b == b'i' {
            self.pos += 1;
            return Ok((start, Tok::Imag));
        }
        if b == b'u' {
            self.pos += 1;
            return Ok((start, Tok::LetterU));
        }
        if b == b't' || b == b'w' {
            let mut end = self.pos + 1;
            while end < self.input.len() && self.input[end].is_ascii_digit() {
                end += 1;
            }
            if end == self.pos + 1 {
                return Err(ParseError::new(start, "letter needs a copy index, e.g. t1"));
            }
            let idx: u32 = std::str::from_utf8(&self.input[self.pos + 1..end])
                .unwrap()
                .parse()
                .map_err(|_| ParseError::new(start, "copy index out of range"))?;
            if idx == 0 || idx > u32::from(u8::MAX) {
                return Err(ParseError::new(start, "copy index out of range"));
            }
            let tok = if b == b't' {
                Tok::LetterT(idx as u8)
            } else {
                Tok::LetterW(idx as u8)
            };
            self.pos = end;
            return Ok((start, tok));
        }
        Err(ParseError::new(start, format!("unexpected character {:?}", b as char)))
    }
}

struct Parser<'a, S: Scalar> {
    lex: Lexer<'a>,
    cfg: Config,
    peeked: Option<(usize, Tok)>,
    _marker: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn peek(&mut self) -> Result<&(usize, Tok), ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex.next_tok()?);
        }
        Ok(self.peeked.as_ref().unwrap())
    }

    fn bump(&mut self) -> Result<(usize, Tok), ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex.next_tok(),
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<usize, ParseError> {
        let (pos, tok) = self.bump()?;
        if tok == want {
            Ok(pos)
        } else {
            Err(ParseError::new(pos, format!("expected {what}")))
        }
    }

    /// poly := ['-'] term (('+'|'-') term)*
    fn poly(&mut self) -> Result<Poly<S>, ParseError> {
        let mut negate = false;
        if self.peek()?.1 == Tok::Minus {
            self.bump()?;
            negate = true;
        }
        let mut acc = self.term(negate)?;
        loop {
            match self.peek()?.1 {
                Tok::Plus => {
                    self.bump()?;
                    let t = self.term(false)?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.bump()?;
                    let t = self.term(true)?;
                    acc = acc.add(&t);
                }
                Tok::End => break,
                _ => {
                    let pos = self.peek()?.0;
                    return Err(ParseError::new(pos, "expected '+', '-' or end of input"));
                }
            }
        }
        Ok(acc)
    }

    /// term := factor ('*' factor)*
    fn term(&mut self, negate: bool) -> Result<Poly<S>, ParseError> {
        let mut coeff = if negate { -S::one() } else { S::one() };
        let mut letters: Vec<Letter> = Vec::new();
        loop {
            self.factor(&mut coeff, &mut letters)?;
            if self.peek()?.1 == Tok::Star {
                self.bump()?;
            } else {
                break;
            }
        }
        let pos = self.lex.peek_pos();
        Poly::normalize(self.cfg, coeff, &letters).map_err(|e| (pos, e).into())
    }

    fn factor(&mut self, coeff: &mut S, letters: &mut Vec<Letter>) -> Result<(), ParseError> {
        let (pos, tok) = self.bump()?;
        match tok {
            Tok::Int(n) => {
                let re = self.rational_tail(n)?;
                if self.peek()?.1 == Tok::Imag {
                    self.bump()?;
                    *coeff = coeff.clone() * S::from_rational_parts(BigRational::zero(), re);
                } else {
                    *coeff = coeff.clone() * S::from_rational_parts(re, BigRational::zero());
                }
                Ok(())
            }
            Tok::Imag => {
                *coeff = coeff.clone() * S::imaginary_unit();
                Ok(())
            }
            Tok::LParen => {
                let c = self.complex_body()?;
                self.expect(Tok::RParen, "')'")?;
                *coeff = coeff.clone() * c;
                Ok(())
            }
            Tok::LetterT(i) => {
                let e = self.letter_exponent(pos)?;
                letters.extend(std::iter::repeat(Letter::T(i)).take(e));
                Ok(())
            }
            Tok::LetterW(i) => {
                let e = self.letter_exponent(pos)?;
                letters.extend(std::iter::repeat(Letter::W(i)).take(e));
                Ok(())
            }
            Tok::LetterU => {
                let z = if self.peek()?.1 == Tok::Caret {
                    self.bump()?;
                    self.signed_int()?
                } else {
                    1
                };
                if z == 0 {
                    return Err(ParseError::new(pos, "u^0 is not a letter"));
                }
                letters.push(Letter::U(z));
                Ok(())
            }
            _ => Err(ParseError::new(pos, "expected a coefficient or letter")),
        }
    }

    /// Nonnegative exponent suffix for t/w letters; defaults to 1.
    fn letter_exponent(&mut self, at: usize) -> Result<usize, ParseError> {
        if self.peek()?.1 != Tok::Caret {
            return Ok(1);
        }
        self.bump()?;
        let z = self.signed_int()?;
        if z <= 0 {
            return Err(ParseError::new(at, "t/w exponents must be positive"));
        }
        Ok(z as usize)
    }

    fn signed_int(&mut self) -> Result<i32, ParseError> {
        let mut sign = 1i64;
        if self.peek()?.1 == Tok::Minus {
            self.bump()?;
            sign = -1;
        }
        let (pos, tok) = self.bump()?;
        match tok {
            Tok::Int(n) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| ParseError::new(pos, "exponent out of range"))?;
                let v = sign * v;
                i32::try_from(v).map_err(|_| ParseError::new(pos, "exponent out of range"))
            }
            _ => Err(ParseError::new(pos, "expected an integer")),
        }
    }

    /// `a`, `a+bi`, `a-bi`, `bi`, `i`, `-...` inside parentheses.
    fn complex_body(&mut self) -> Result<S, ParseError> {
        let mut total = S::zero();
        loop {
            let mut sign = BigRational::one();
            loop {
                match self.peek()?.1 {
                    Tok::Minus => {
                        self.bump()?;
                        sign = -sign;
                    }
                    Tok::Plus => {
                        self.bump()?;
                    }
                    _ => break,
                }
            }
            let (pos, tok) = self.bump()?;
            let part = match tok {
                Tok::Int(n) => {
                    let r = self.rational_tail(n)? * sign;
                    if self.peek()?.1 == Tok::Imag {
                        self.bump()?;
                        S::from_rational_parts(BigRational::zero(), r)
                    } else {
                        S::from_rational_parts(r, BigRational::zero())
                    }
                }
                Tok::Imag => S::from_rational_parts(BigRational::zero(), sign),
                _ => return Err(ParseError::new(pos, "expected a number")),
            };
            total = total + part;
            if !matches!(self.peek()?.1, Tok::Plus | Tok::Minus) {
                break;
            }
        }
        Ok(total)
    }

    /// Optional `/ INT` suffix turning an integer into a rational.
    fn rational_tail(&mut self, numer: BigInt) -> Result<BigRational, ParseError> {
        if self.peek()?.1 == Tok::Slash {
            self.bump()?;
            let (pos, tok) = self.bump()?;
            match tok {
                Tok::Int(d) if !d.is_zero() => Ok(BigRational::new(numer, d)),
                Tok::Int(_) => Err(ParseError::new(pos, "zero denominator")),
                _ => Err(ParseError::new(pos, "expected a denominator")),
            }
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }
}

/// Parses the textual syntax into a normal-form polynomial.
pub fn parse_poly<S: Scalar>(cfg: Config, input: &str) -> Result<Poly<S>, ParseError> {
    let trimmed = input.trim();
    if trimmed == "0" {
        return Ok(Poly::zero(cfg));
    }
    let mut p = Parser::<S> {
        lex: Lexer::new(input),
        cfg,
        peeked: None,
        _marker: std::marker::PhantomData,
    };
    p.poly()
}
