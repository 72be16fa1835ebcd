//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | 'i' | name | '(' expr ')'
//! ```
//!
//! `i` is the imaginary unit unless it is declared as a variable. Division
//! is only allowed by nonzero constants, which is how rational and
//! Gaussian-rational literals such as `3/4` or `(1+2*i)/5` are written.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Monomial, Poly};
use crate::coeff::Coeff;
use crate::error::ParseError;

/// Parses `text` as a polynomial in the variables `vars` (in that order).
pub fn parse_poly<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Poly, ParseError> {
    let vars: Vec<&str> = vars.iter().map(AsRef::as_ref).collect();
    let mut parser = Parser { src: text.as_bytes(), pos: 0, vars: &vars };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.syntax("empty expression"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(p)
}

/// Collects the identifiers used in the given expressions, sorted and
/// deduplicated. The imaginary unit `i` is not treated as a variable.
pub fn infer_vars<S: AsRef<str>>(texts: &[S]) -> Vec<String> {
    let mut names = BTreeSet::new();
    for t in texts {
        let bytes = t.as_ref().as_bytes();
        let mut k = 0;
        while k < bytes.len() {
            let b = bytes[k];
            if b.is_ascii_alphabetic() || b == b'_' {
                let start = k;
                while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                    k += 1;
                }
                let name = &t.as_ref()[start..k];
                if name != "i" {
                    names.insert(name.to_string());
                }
            } else if b.is_ascii_digit() {
                while k < bytes.len() && bytes[k].is_ascii_alphanumeric() {
                    k += 1;
                }
            } else {
                k += 1;
            }
        }
    }
    names.into_iter().collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos, message: message.to_string() }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                let is_const = d.terms().all(|(m, _)| m.is_one());
                if !is_const {
                    return Err(ParseError::Syntax { pos: at, message: "division by a non-constant".into() });
                }
                let inv = d
                    .constant_term()
                    .inv()
                    .ok_or(ParseError::Syntax { pos: at, message: "division by zero".into() })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return Err(ParseError::NegativeExponent { pos: self.pos });
        }
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a non-negative integer exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let e: u32 =
            digits.parse().map_err(|_| ParseError::Syntax { pos: start, message: "exponent too large".into() })?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let n = self.nvars();
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                    self.pos += 1;
                }
                if matches!(self.peek(), Some(b) if b.is_ascii_alphabetic() || b == b'.') {
                    return Err(self.syntax("malformed number"));
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let value: BigInt = digits.parse().expect("digit run parses");
                Ok(Poly::constant(n, Coeff::real(BigRational::from_integer(value))))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(idx) = self.vars.iter().position(|v| *v == name) {
                    Ok(Poly::monomial(Monomial::var(n, idx), Coeff::from_int(1)))
                } else if name == "i" {
                    Ok(Poly::constant(n, Coeff::i()))
                } else {
                    Err(ParseError::UnknownVariable { pos: start, name: name.to_string() })
                }
            }
            Some(_) => Err(self.syntax("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transcription() {
        let f = parse_poly("x^2 + 3*y^3", &["x", "y"]).unwrap();
        let terms: Vec<(Vec<u32>, Coeff)> = f.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect();
        assert_eq!(terms, vec![(vec![2, 0], Coeff::from_int(1)), (vec![0, 3], Coeff::from_int(3))]);
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(parse_poly("0", &["x", "y"]).unwrap().is_zero());
        assert!(parse_poly("x^2 - x^2", &["x"]).unwrap().is_zero());
    }

    #[test]
    fn gaussian_literals() {
        let f = parse_poly("(1+2*i)/5*x", &["x"]).unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![1])), Coeff::gaussian(1, 2).scaled_by_ratio(1, 5));
        let g = parse_poly("i^2", &["x"]).unwrap();
        assert_eq!(g, Poly::constant(1, Coeff::from_int(-1)));
    }

    #[test]
    fn declared_i_is_a_variable() {
        let f = parse_poly("i^2", &["i"]).unwrap();
        assert_eq!(f.order().unwrap(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("x + w", &["x"]), Err(ParseError::UnknownVariable { pos: 4, name: "w".into() }));
        assert_eq!(parse_poly("x^-2", &["x"]), Err(ParseError::NegativeExponent { pos: 2 }));
        assert!(matches!(parse_poly("x +", &["x"]), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("(x", &["x"]), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x/y", &["x", "y"]), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x/0", &["x"]), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("", &["x"]), Err(ParseError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let f = parse_poly("-x^2", &["x"]).unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![2])), Coeff::from_int(-1));
    }

    #[test]
    fn infers_sorted_names() {
        assert_eq!(infer_vars(&["y^2 + x*i", "z1 + 3x"]), vec!["x", "y", "z1"]);
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let term = (0u32..4, 0u32..4, -5i64..6, -3i64..4, 1i64..4);
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            Poly::from_terms(
                2,
                ts.into_iter().map(|(a, b, re, im, den)| (vec![a, b], Coeff::gaussian(re, im).scaled_by_ratio(1, den))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(f in arb_poly()) {
            let text = f.to_string();
            prop_assert_eq!(parse_poly(&text, &["x", "y"]).unwrap(), f);
        }
    }
}
