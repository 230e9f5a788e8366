//! Text form of polynomials: sums of terms with explicit `*` and `^`,
//! rational literals `p/q`, and parentheses, e.g. `x*y^2 - 3/2*(z - t)^2`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{PolyError, Polynomial, Rational, Ring};

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    parse_polynomial_with(ring, text, &HashMap::new())
}

/// Parses with named polynomial bindings (e.g. `q`) usable as atoms.
pub fn parse_polynomial_with(
    ring: &Ring,
    text: &str,
    bindings: &HashMap<String, Polynomial>,
) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        bindings,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses a parenthesised generator list such as `(x*y, z)`; `()` and `(0)`
/// both denote the zero ideal.
pub fn parse_ideal_list(
    ring: &Ring,
    text: &str,
    bindings: &HashMap<String, Polynomial>,
) -> Result<Vec<Polynomial>, PolyError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or(PolyError::Parse {
            pos: 0,
            msg: "generator list must be enclosed in parentheses".into(),
        })?;
    let mut gens = Vec::new();
    for piece in split_top_level(inner) {
        if piece.trim().is_empty() {
            if inner.trim().is_empty() {
                continue;
            }
            return Err(PolyError::Parse {
                pos: 0,
                msg: "empty generator".into(),
            });
        }
        let g = parse_polynomial_with(ring, piece, bindings)?;
        if !g.is_zero() {
            gens.push(g);
        }
    }
    Ok(gens)
}

/// Splits on commas that are not nested inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    bindings: &'a HashMap<String, Polynomial>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as integer"))
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                // `p/q` is a literal only between integers
                let save = self.pos;
                if self.eat(b'/') {
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        value /= Rational::from_integer(den);
                    } else {
                        self.pos = save;
                        return Err(self.error("division is only allowed between integer literals"));
                    }
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                if let Some(p) = self.bindings.get(name) {
                    return Ok(p.clone());
                }
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(PolyError::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
