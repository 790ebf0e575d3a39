//! Text grammar for polynomials:
//!
//! ```text
//! expression := ('-')? term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := coeff | var ('^' uint)? | '(' expression ')' ('^' uint)?
//! coeff      := int | int '/' uint
//! ```
//!
//! Whitespace is insignificant. Printing a [`Poly`] always produces text in
//! this grammar.

use num_bigint::BigInt;

use super::poly::{Poly, Ring};
use super::PolyError;

impl Poly {
    pub fn parse(text: &str, ring: &Ring) -> Result<Poly, PolyError> {
        let mut p = Parser { src: text, pos: 0, ring };
        let poly = p.expression()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.syntax("unexpected trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, message: &str) -> PolyError {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        PolyError::Syntax { line, column, message: message.to_string() }
    }

    fn expression(&mut self) -> Result<Poly, PolyError> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let den = if self.eat('/') {
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.syntax("expected an unsigned denominator after '/'"));
                    }
                    d.parse().expect("digits")
                } else {
                    BigInt::from(1)
                };
                if self.peek() == Some('.') {
                    return Err(self.syntax("decimal coefficients are not supported"));
                }
                let c = self.ring.field().from_fraction(&num, &den)?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                let i = self.ring.var_index(name)?;
                let e = self.exponent()?;
                Ok(Poly::var_power(self.ring, i, e))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if !self.eat(')') {
                    return Err(self.syntax("expected ')'"));
                }
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(_) => Err(self.syntax("expected a coefficient, variable, or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        if !self.eat('^') {
            return Ok(1);
        }
        self.skip_ws();
        let start = self.pos;
        let d = self.digits();
        let rest = self.src[self.pos..].chars().next();
        if d.is_empty() || matches!(rest, Some('.') | Some('/')) {
            let end = self.src[start..]
                .find(|c: char| c.is_whitespace() || "+*)".contains(c))
                .map_or(self.src.len(), |i| start + i);
            return Err(PolyError::MalformedExponent(self.src[start..end].to_string()));
        }
        d.parse().map_err(|_| PolyError::MalformedExponent(d.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::Field;
    use super::super::poly::RingContext;
    use super::*;

    fn q(vars: &[&str]) -> Ring {
        RingContext::new(Field::Rational, vars).unwrap().build()
    }

    #[test]
    fn single_monomial() {
        let r = q(&["z"]);
        assert_eq!(Poly::parse("z^2", &r).unwrap(), Poly::var_power(&r, 0, 2));
    }

    #[test]
    fn parenthesised_product() {
        let r = q(&["z"]);
        assert_eq!(Poly::parse("(z-1)*(z+1)", &r).unwrap().to_string(), "z^2 - 1");
    }

    #[test]
    fn fractions_over_prime_field() {
        let f7 = RingContext::new(Field::prime(7).unwrap(), &["z", "x"]).unwrap().build();
        assert_eq!(Poly::parse("3/2*z*x - 1", &f7).unwrap().to_string(), "5*z*x + 6");
        let f2 = RingContext::new(Field::prime(2).unwrap(), &["z", "x"]).unwrap().build();
        assert!(matches!(Poly::parse("3/2*z*x - 1", &f2), Err(PolyError::NonInvertibleDenominator(_))));
    }

    #[test]
    fn error_cases() {
        let r = q(&["z"]);
        assert_eq!(Poly::parse("w + 1", &r), Err(PolyError::UnknownVariable("w".into())));
        assert!(matches!(Poly::parse("z^-1", &r), Err(PolyError::MalformedExponent(_))));
        assert!(matches!(Poly::parse("z^1.5", &r), Err(PolyError::MalformedExponent(_))));
        assert!(matches!(Poly::parse("z +", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(Poly::parse("(z", &r), Err(PolyError::Syntax { .. })));
        match Poly::parse("z\n  * )", &r) {
            Err(PolyError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn whitespace_and_leading_minus() {
        let r = q(&["z", "x"]);
        let a = Poly::parse(" - z ^ 2 +  3 * x ", &r).unwrap();
        assert_eq!(a.to_string(), "-z^2 + 3*x");
        assert_eq!(Poly::parse("0", &r).unwrap().to_string(), "0");
    }
}
