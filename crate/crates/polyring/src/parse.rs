//! Recursive-descent parser for the shared polynomial grammar.
//!
//! Grammar: identifiers for variables, integer and `p/q` rational literals,
//! operators `+ - * ^`, parentheses; whitespace insignificant. Errors carry
//! the byte offset of the offending token.

use crate::error::ParseError;
use crate::monomial::Monomial;
use crate::poly::{Coef, Polynomial};
use crate::ring::Ring;
use num::{BigInt, One, Zero};

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Rational(Coef),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_byte(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn lex_uint(&mut self) -> BigInt {
        let start = self.pos;
        while self
            .peek_byte()
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        s.parse::<BigInt>().unwrap()
    }

    /// Next token plus its start offset.
    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let b = match self.peek_byte() {
            None => return Ok((Tok::End, start)),
            Some(b) => b,
        };
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b if b.is_ascii_digit() => {
                let numer = self.lex_uint();
                // A '/' directly after an integer literal introduces the
                // denominator of a rational literal.
                self.skip_ws();
                if self.peek_byte() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let dstart = self.pos;
                    if !self
                        .peek_byte()
                        .map(|b| b.is_ascii_digit())
                        .unwrap_or(false)
                    {
                        return Err(ParseError::new(dstart, "expected denominator digits after '/'"));
                    }
                    let denom = self.lex_uint();
                    if denom.is_zero() {
                        return Err(ParseError::new(dstart, "zero denominator"));
                    }
                    Tok::Rational(Coef::new(numer, denom))
                } else {
                    Tok::Rational(Coef::from_integer(numer))
                }
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while self
                    .peek_byte()
                    .map(|b| b.is_ascii_alphanumeric() || b == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                Tok::Ident(s.to_string())
            }
            other => {
                return Err(ParseError::new(
                    start,
                    format!("unexpected character '{}'", other as char),
                ))
            }
        };
        Ok((tok, start))
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    lexer: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, input: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(input);
        let (tok, tok_pos) = lexer.next()?;
        Ok(Parser {
            ring,
            lexer,
            tok,
            tok_pos,
        })
    }

    fn advance(&mut self) -> Result<(), ParseError> {
        let (tok, pos) = self.lexer.next()?;
        self.tok = tok;
        self.tok_pos = pos;
        Ok(())
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if self.tok == Tok::Minus {
            negate = true;
            self.advance()?;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.advance()?;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    // factor := atom ['^' uint]
    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let pos = self.tok_pos;
            match std::mem::replace(&mut self.tok, Tok::End) {
                Tok::Rational(c) => {
                    self.advance()?;
                    if !c.is_integer() || c < Coef::zero() {
                        return Err(ParseError::new(pos, "exponent must be a nonnegative integer"));
                    }
                    let e: u32 = c.to_integer().try_into().map_err(|_| {
                        ParseError::new(pos, "exponent too large")
                    })?;
                    Ok(base.pow(e))
                }
                other => {
                    self.tok = other;
                    Err(ParseError::new(pos, "expected integer exponent after '^'"))
                }
            }
        } else {
            Ok(base)
        }
    }

    // atom := ident | rational | '(' expr ')'
    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.tok_pos;
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Ident(name) => {
                self.advance()?;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::monomial(Monomial::var(i, self.ring.nvars()))),
                    None => Err(ParseError::new(pos, format!("unknown variable '{name}'"))),
                }
            }
            Tok::Rational(c) => {
                self.advance()?;
                Ok(Polynomial::constant(self.ring.nvars(), c))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(ParseError::new(self.tok_pos, "expected ')'"));
                }
                self.advance()?;
                Ok(inner)
            }
            other => {
                self.tok = other;
                Err(ParseError::new(pos, "expected variable, number or '('"))
            }
        }
    }
}

pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(ring, input)?;
    let poly = p.expr()?;
    if p.tok != Tok::End {
        return Err(ParseError::new(p.tok_pos, "trailing input"));
    }
    debug_assert!(poly.num_terms() == 0 || poly.nvars() == ring.nvars());
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plucker_relation() {
        let ring = Ring::numbered("x", 6);
        let p = ring.parse_poly("x1*x6 - x2*x5 + x3*x4").unwrap();
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn parses_parens_and_powers() {
        let ring = Ring::numbered("x", 2);
        let p = ring.parse_poly("(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn rational_literal() {
        let ring = Ring::numbered("x", 1);
        let p = ring.parse_poly("1/2*x1 + 1/2*x1").unwrap();
        assert_eq!(ring.fmt_poly(&p), "x1");
    }

    #[test]
    fn error_is_position_annotated() {
        let ring = Ring::numbered("x", 2);
        let err = ring.parse_poly("x1 + %").unwrap_err();
        assert_eq!(err.pos, 5);
        let err = ring.parse_poly("x1 + zz").unwrap_err();
        assert_eq!(err.pos, 5);
    }

    #[test]
    fn whitespace_insignificant() {
        let ring = Ring::numbered("x", 2);
        let a = ring.parse_poly("x1*x2-x1").unwrap();
        let b = ring.parse_poly(" x1 * x2  -  x1 ").unwrap();
        assert_eq!(a, b);
    }
}
