//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := number | number '/' number | ident | '(' expr ')' | '-' factor
//! ```
//! Multiplication must be written explicitly.

use super::{Polynomial, Rat, Ring, RingError};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

fn syntax(pos: usize, msg: impl Into<String>) -> RingError {
    RingError::Syntax { pos, msg: msg.into() }
}

pub(super) fn parse(text: &str, ring: &Ring) -> Result<Polynomial, RingError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(syntax(0, "empty input"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(syntax(p.pos, format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(out)
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, RingError> {
        let mut acc = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, RingError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        // juxtaposition is not multiplication
        if let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'(' {
                return Err(syntax(self.pos, "missing `*` between factors"));
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, RingError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(syntax(start, "exponent must be a nonnegative integer"));
            }
            let e: u32 = digits.parse().map_err(|_| syntax(start, "exponent too large"))?;
            if self.peek() == Some(b'^') {
                return Err(syntax(self.pos, "chained `^` is ambiguous; use parentheses"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial, RingError> {
        match self.peek() {
            None => Err(syntax(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(syntax(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.digits();
                let mut text = num;
                // `3/2` is a single literal; whitespace is allowed around `/`
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        self.pos = save;
                        return Err(syntax(self.pos, "expected denominator after `/`"));
                    }
                    text = format!("{text}/{den}");
                }
                let r: Rat = text.parse().map_err(|_| syntax(start, format!("bad number `{text}`")))?;
                Ok(Polynomial::constant(self.ring, r))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(RingError::UnknownVariable { name, pos: start }),
                }
            }
            Some(c) => Err(syntax(self.pos, format!("unexpected `{}`", c as char))),
        }
    }
}
