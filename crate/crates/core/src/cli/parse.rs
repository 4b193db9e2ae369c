//! Group expressions.
//!
//! ```text
//! expr := term ('+' term)*
//! term := 'Z' ('^' count)?          free of the given rank
//!       | 'Z' ('/' | '_') uint ('^' '(' count ')')?
//!       | '0'                       trivial group
//! count := uint | '(' uint ')'
//! ```
//!
//! Whitespace between tokens is ignored. Ranks and multiplicities are at
//! least 1; moduli are at least 1 (`Z/1` is trivial, `Z/0` is rejected).

use num_bigint::BigUint;
use num_traits::Zero;

use crate::abelian::FgAbelianGroup;
use crate::arith::BigCount;
use crate::error::ParseError;

pub fn parse_group(text: &str) -> Result<FgAbelianGroup, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let summands = p.expr()?;
    Ok(FgAbelianGroup::from_cyclic_multiset(summands))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn expect(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
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

    fn error(&self, message: String, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.pos,
            message,
            expected: expect(expected),
            hint: None,
        }
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        let message = match self.src.get(self.pos) {
            None => "unexpected end of input".to_string(),
            Some(_) => {
                let ch = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .map(|c| format!("{c:?}"))
                    .unwrap_or_else(|| format!("byte 0x{:02x}", self.src[self.pos]));
                format!("unexpected {ch}")
            }
        };
        self.error(message, expected)
    }

    fn expr(&mut self) -> Result<Vec<(BigUint, BigCount)>, ParseError> {
        let mut out = vec![self.term()?];
        loop {
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    out.push(self.term()?);
                }
                Some(_) => return Err(self.unexpected(&["'+'", "end of input"])),
            }
        }
    }

    fn term(&mut self) -> Result<(BigUint, BigCount), ParseError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok((BigUint::from(1u32), BigCount::from(1u64)))
            }
            Some(b'Z') => {
                self.pos += 1;
                match self.peek() {
                    Some(b'^') => {
                        self.pos += 1;
                        let rank = self.count()?;
                        Ok((BigUint::zero(), rank))
                    }
                    Some(b'/') | Some(b'_') => {
                        self.pos += 1;
                        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
                        let modulus = self.uint()?;
                        if modulus.is_zero() {
                            return Err(ParseError {
                                offset: start,
                                message: "modulus 0 is not allowed (write Z for the infinite cyclic group)".to_string(),
                                expected: expect(&["positive integer"]),
                                hint: Some("write Z for the infinite cyclic group".to_string()),
                            });
                        }
                        let mult = if self.peek() == Some(b'^') {
                            self.pos += 1;
                            if self.peek() != Some(b'(') {
                                return Err(self.unexpected(&["'('"]));
                            }
                            self.count()?
                        } else {
                            BigCount::from(1u64)
                        };
                        Ok((modulus, mult))
                    }
                    _ => Ok((BigUint::zero(), BigCount::from(1u64))),
                }
            }
            _ => Err(self.unexpected(&["'Z'", "'0'"])),
        }
    }

    /// A positive count, optionally parenthesized.
    fn count(&mut self) -> Result<BigCount, ParseError> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        let v = self.uint()?;
        if v.is_zero() {
            return Err(ParseError {
                offset: start,
                message: "exponent must be at least 1".to_string(),
                expected: expect(&["positive integer"]),
                hint: None,
            });
        }
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.unexpected(&["')'"]));
            }
            self.pos += 1;
        }
        Ok(BigCount::from(v))
    }

    fn uint(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected(&["digit"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit string"))
    }
}
