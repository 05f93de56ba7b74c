//! Text-to-polynomial parsing for the command line.
//!
//! Accepted grammar, informally: a polynomial is a signed sum of terms,
//! where each term is an integer, a power of `x`, or both (with an
//! optional `*` between them). Whitespace is insignificant. Examples:
//!
//! ```text
//! x^5 + x^3 + 8
//! -2*x^7+3x-27
//! 5 x - 125
//! ```
//!
//! Coefficients may be arbitrarily large; exponents must fit in 64 bits.
//! Terms with equal exponents are summed, so `x^2 + x^2` parses to the
//! same polynomial as `2x^2`. Errors report the byte offset at which
//! parsing failed.

use lacunary::{BigInt, SparsePoly};

/// A parse failure with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input at which the problem was detected.
    pub position: usize,
    /// Human-readable description of the problem.
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses a polynomial in the variable `x` from plain text.
pub fn parse_poly(input: &str) -> Result<SparsePoly, ParseError> {
    Parser { bytes: input.as_bytes(), pos: 0 }.parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<SparsePoly, ParseError> {
        let mut terms: Vec<(u64, BigInt)> = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty input; expected a polynomial in x"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.error("expected '+' or '-' between terms")),
            };
            first = false;
            self.skip_ws();
            let (exponent, coeff) = self.term()?;
            terms.push((exponent, if negative { -coeff } else { coeff }));
        }
        Ok(SparsePoly::new(terms))
    }

    /// One term: `123`, `x`, `x^4`, `123x^4`, or `123*x^4`.
    fn term(&mut self) -> Result<(u64, BigInt), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek() != Some(b'x') {
                        return Err(self.error("expected 'x' after '*'"));
                    }
                }
                if self.peek() == Some(b'x') {
                    Ok((self.variable()?, coeff))
                } else {
                    Ok((0, coeff))
                }
            }
            Some(b'x') => Ok((self.variable()?, BigInt::from(1))),
            _ => Err(self.error("expected a coefficient or 'x'")),
        }
    }

    /// The variable part: `x` with an optional caret exponent.
    fn variable(&mut self) -> Result<u64, ParseError> {
        debug_assert_eq!(self.peek(), Some(b'x'));
        self.pos += 1;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits("expected digits after '^'")?;
        digits.parse::<u64>().map_err(|_| ParseError {
            position: start,
            message: "exponent does not fit in 64 bits".to_string(),
        })
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let digits = self.digits("expected digits")?;
        Ok(digits.parse::<BigInt>().expect("digit strings always parse"))
    }

    fn digits(&mut self, expectation: &str) -> Result<&str, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(expectation));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ASCII digits"))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: message.to_string() }
    }
}
