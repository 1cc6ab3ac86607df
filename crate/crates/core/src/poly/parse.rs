use num_bigint::BigInt;
use num_traits::Zero;

use super::{PolyError, Polynomial, Rational, Ring};

/// Parses `x^4 + x^2*y^2 - 1` style text over `ring`.
///
/// Accepts the usual term grammar plus parentheses and `^` on any
/// parenthesized factor. Rational literals `p/q` are single tokens.
pub fn parse_polynomial(ring: &Ring, s: &str) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        ring,
        src: s,
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_raw()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn sign(c: char) -> Option<bool> {
        match c {
            '+' => Some(false),
            '-' | '\u{2212}' => Some(true),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut neg = false;
        if let Some(c) = self.peek() {
            if let Some(n) = Self::sign(c) {
                self.bump();
                neg = n;
            }
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        while let Some(c) = self.peek() {
            let Some(n) = Self::sign(c) else { break };
            self.bump();
            let t = self.term()?;
            acc = if n { acc - t } else { acc + t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                self.pos = start;
                return Err(self.err("expected exponent after `^`"));
            }
            let k: u32 = digits.parse().map_err(|_| PolyError::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digit run");
                let save = self.pos;
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        self.pos = save;
                        return Err(self.err("expected denominator after `/`"));
                    }
                    let den: BigInt = den.parse().expect("digit run");
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(Polynomial::constant(self.ring, Rational::new(num, den)));
                }
                Ok(Polynomial::constant(self.ring, Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek_raw(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match self.ring.index_of(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(PolyError::Parse {
                        pos: start,
                        msg: format!("unknown variable `{name}`"),
                    }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x^4 + x^2*y^2 - 1").unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(r.parse("-3/4*x*y").unwrap().to_string(), "-3/4*x*y");
        assert_eq!(r.parse("(x - y)^2").unwrap(), r.parse("x^2 - 2*x*y + y^2").unwrap());
        assert_eq!(r.parse("0").unwrap(), Polynomial::zero(&r));
    }

    #[test]
    fn reports_positions() {
        let r = Ring::new(&["x", "y"]).unwrap();
        match r.parse("x + z") {
            Err(PolyError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(r.parse("x +").is_err());
        assert!(r.parse("x^").is_err());
        assert!(r.parse("1/0").is_err());
        assert!(r.parse("(x").is_err());
        assert!(r.parse("x y").is_err());
    }
}
