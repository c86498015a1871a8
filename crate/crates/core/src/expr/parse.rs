//! Expression grammar shared by the CLI and test fixtures.
//!
//! ```text
//! poly    := ['+'|'-'] term (('+'|'-') term)*
//! term    := [rational] mono | rational
//! mono    := factor ['*' factor]
//! factor  := '(' mono ')' | 'A' ['^' k] '(' mono ')' | op '(' mono {',' mono} ')'
//!          | name | '1'
//! ```
//!
//! Products need parentheses except for one top-level `*`; `A^k(m)` pushes
//! the twisting map onto the leaves of `m`.

use crate::error::{Error, Result};
use crate::rational::{parse_q, Q};

use super::{Monomial, Poly};

pub fn parse_poly(src: &str) -> Result<Poly> {
    let mut p = Parser { src, pos: 0 };
    let out = p.poly()?;
    p.ws();
    if p.pos != src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_monomial(src: &str) -> Result<Monomial> {
    let mut p = Parser { src, pos: 0 };
    p.ws();
    let m = p.mono()?;
    p.ws();
    if p.pos != src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(m)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero();
        self.ws();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let (c, m) = self.term()?;
            out.add_term(m, if sign < 0 { -c } else { c });
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn number(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn term(&mut self) -> Result<(Q, Monomial)> {
        self.ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let text = self.number().to_string();
            self.ws();
            let next = self.peek();
            if next.is_some_and(|c| c.is_alphabetic() || c == '(' || c == '_') {
                let c = parse_q(&text)?;
                return Ok((c, self.mono()?));
            }
            if text == "1" {
                self.pos = start;
                return Ok((Q::from_integer(1.into()), self.mono()?));
            }
            return Ok((parse_q(&text)?, Monomial::Unit));
        }
        Ok((Q::from_integer(1.into()), self.mono()?))
    }

    fn mono(&mut self) -> Result<Monomial> {
        let a = self.factor()?;
        if self.eat('*') {
            let b = self.factor()?;
            return Ok(Monomial::mul(a, b));
        }
        Ok(a)
    }

    fn ident(&mut self) -> Option<&str> {
        let start = self.pos;
        let mut first = true;
        while let Some(c) = self.peek() {
            let ok = if first {
                c.is_alphabetic() || c == '_'
            } else {
                c.is_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            first = false;
            self.pos += c.len_utf8();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn factor(&mut self) -> Result<Monomial> {
        self.ws();
        if self.eat('(') {
            let m = self.mono()?;
            self.expect(')')?;
            return Ok(m);
        }
        if self.peek() == Some('1') {
            self.pos += 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.err("numbers are only allowed as coefficients"));
            }
            return Ok(Monomial::Unit);
        }
        let start = self.pos;
        let name = match self.ident() {
            Some(n) => n.to_string(),
            None => return Err(self.err("expected a generator, operation, `A^k(...)` or `1`")),
        };
        if name == "A" && matches!(self.peek(), Some('^') | Some('(')) {
            let k = if self.peek() == Some('^') {
                self.pos += 1;
                let digits = self.number().to_string();
                digits
                    .parse::<u32>()
                    .map_err(|_| self.err("expected exponent after `A^`"))?
            } else {
                1
            };
            self.expect('(')?;
            let m = self.mono()?;
            self.expect(')')?;
            return Ok(m.shifted(k));
        }
        if self.peek() == Some('(') {
            self.pos += 1;
            let mut args = vec![self.mono()?];
            while self.eat(',') {
                args.push(self.mono()?);
            }
            self.expect(')')?;
            if args.len() < 2 {
                self.pos = start;
                return Err(self.err("operations need at least two arguments"));
            }
            return Ok(Monomial::node(name, args));
        }
        Ok(Monomial::var(name))
    }
}
