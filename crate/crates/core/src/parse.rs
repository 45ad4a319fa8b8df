//! Recursive-descent parser for the term and polynomial text grammar.
//!
//! ```text
//! term ::= gen | "(" term "*" term ")" | "[" term "," term "]" | "{" term "," term "}"
//! gen  ::= "x" nonzero-digit digit*
//! poly ::= [sign] [coef] term ( sign [coef] term )*
//! coef ::= digit+ [ "/" digit+ ]
//! ```
//!
//! Whitespace between tokens is ignored. Identity files use the same grammar
//! with the formal letters `a`..`h` in place of `x1`..`x8`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Polynomial};
use crate::term::{OpSymbol, Signature, Term};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Generators {
    Indexed,
    Letters,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: Generators,
    signature: Option<Signature>,
    required: Option<Signature>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, gens: Generators, required: Option<Signature>) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            gens,
            signature: None,
            required,
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

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(Error::syntax(
                self.pos,
                format!("expected `{}`, found `{}`", byte as char, b as char),
            )),
            None => Err(Error::syntax(self.pos, format!("expected `{}`, found end of input", byte as char))),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn note_op(&mut self, op: OpSymbol, offset: usize) -> Result<()> {
        let sig = op.signature();
        match self.signature {
            None => {
                if let Some(req) = self.required {
                    if req != sig {
                        return Err(Error::MixedSignature { offset });
                    }
                }
                self.signature = Some(sig);
                Ok(())
            }
            Some(s) if s == sig => Ok(()),
            Some(_) => Err(Error::MixedSignature { offset }),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let l = self.term()?;
                self.skip_ws();
                let op_at = self.pos;
                self.expect(b'*')?;
                self.note_op(OpSymbol::Star, op_at)?;
                let r = self.term()?;
                self.expect(b')')?;
                Ok(Term::star(l, r))
            }
            Some(open @ (b'[' | b'{')) => {
                let op = if open == b'[' {
                    OpSymbol::Bracket
                } else {
                    OpSymbol::Brace
                };
                self.note_op(op, start)?;
                self.pos += 1;
                let l = self.term()?;
                self.expect(b',')?;
                let r = self.term()?;
                self.expect(if open == b'[' { b']' } else { b'}' })?;
                Ok(Term::node(op, l, r))
            }
            Some(_) => self.generator(),
            None => Err(Error::syntax(self.pos, "expected a term, found end of input")),
        }
    }

    fn generator(&mut self) -> Result<Term> {
        let start = self.pos;
        match (self.gens, self.src[self.pos]) {
            (Generators::Indexed, b'x') => {
                self.pos += 1;
                let digits_at = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = &self.src[digits_at..self.pos];
                if digits.is_empty() {
                    return Err(Error::syntax(digits_at, "expected generator index after `x`"));
                }
                if digits.iter().all(|&d| d == b'0') {
                    return Err(Error::ZeroGenerator { offset: start });
                }
                if digits[0] == b'0' {
                    return Err(Error::syntax(digits_at, "generator index has a leading zero"));
                }
                let index: u32 = std::str::from_utf8(digits)
                    .ok()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::syntax(digits_at, "generator index too large"))?;
                Ok(Term::var(index))
            }
            (Generators::Letters, b @ b'a'..=b'h') => {
                self.pos += 1;
                Ok(Term::var((b - b'a' + 1) as u32))
            }
            (Generators::Indexed, b) => Err(Error::syntax(start, format!("unexpected `{}`", b as char))),
            (Generators::Letters, b) => Err(Error::syntax(
                start,
                format!("unexpected `{}`; identity slots are the letters a..h", b as char),
            )),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn coefficient(&mut self) -> Result<Option<Coefficient>> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.digits().expect("peeked a digit");
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self
                        .digits()
                        .ok_or_else(|| Error::syntax(at, "expected denominator after `/`"))?;
                    if den.is_zero() {
                        return Err(Error::syntax(at, "zero denominator"));
                    }
                    Ok(Some(BigRational::new(num, den)))
                } else {
                    Ok(Some(BigRational::from_integer(num)))
                }
            }
            _ => Ok(None),
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(b) => {
                    return Err(Error::syntax(self.pos, format!("expected `+` or `-`, found `{}`", b as char)))
                }
                None if first => return Err(Error::syntax(self.pos, "empty polynomial")),
                None => break,
            };
            let c = self.coefficient()?;
            // a lone `0` is the zero polynomial
            if first && !negative && self.at_end() {
                if let Some(c) = &c {
                    if c.is_zero() {
                        return Ok(out);
                    }
                }
            }
            let t = self.term()?;
            let mut c = c.unwrap_or_else(BigRational::one);
            if negative {
                c = -c;
            }
            out.add_term(t, c);
            first = false;
            if self.at_end() {
                break;
            }
        }
        Ok(out)
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(Error::syntax(self.pos, format!("unexpected trailing `{}`", b as char))),
        }
    }
}

/// Parse a single term in the given signature.
pub fn parse_term(text: &str, signature: Signature) -> Result<Term> {
    let mut p = Parser::new(text, Generators::Indexed, Some(signature));
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parse a single term, inferring its signature.
pub fn parse_term_any(text: &str) -> Result<Term> {
    let mut p = Parser::new(text, Generators::Indexed, None);
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parse a polynomial; with `signature = None` the signature is inferred
/// from the first operation symbol.
pub fn parse_poly(text: &str, signature: Option<Signature>) -> Result<Polynomial> {
    let mut p = Parser::new(text, Generators::Indexed, signature);
    let poly = p.poly()?;
    p.finish()?;
    Ok(poly)
}

/// Parse an identity body over the formal letters `a..h`; letters become
/// `x1..x8`. Returns the polynomial and the inferred signature.
pub(crate) fn parse_slot_poly(text: &str) -> Result<(Polynomial, Option<Signature>)> {
    let mut p = Parser::new(text, Generators::Letters, None);
    let poly = p.poly()?;
    p.finish()?;
    Ok((poly, p.signature))
}
