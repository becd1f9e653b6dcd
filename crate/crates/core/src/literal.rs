//! Whitespace-free text grammar for elements and multisets.
//!
//! Integers are `-?[0-9]+`, rationals `p/q`, residues mod p plain integers,
//! lunar values digit strings, and the quadratic rings use a suffix letter on
//! the irrational coefficient: `i`, `w`, and `r` for the Gaussian, Eisenstein,
//! and sqrt(2) rings (`1+2i`, `2-1w`, `-1+r`). A multiset literal is a
//! comma-separated list of element literals, each optionally followed by a
//! `*k` repetition suffix (`-1*14`).

use crate::error::Error;
use crate::lunar;
use crate::multiset::Multiset;
use crate::ring::{RingElement, RingId};

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, base: usize) -> Self {
        Cursor {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            base,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn done(&self) -> bool {
        self.pos == self.bytes.len()
    }

    /// `-?[0-9]+` as a checked i64.
    fn integer(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.bump();
        }
        let digits_from = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        if self.pos == digits_from {
            return Err(err(self.at(), "expected a digit"));
        }
        self.text[start..self.pos]
            .parse::<i64>()
            .map_err(|_| err(self.base + start, "integer out of range"))
    }

    /// Signed digit run where the digits may be empty (coefficient 1), for
    /// quadratic terms like `+i` or `-r`.
    fn signed_coefficient(&mut self) -> Result<(i64, bool), Error> {
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            sign = -1;
            self.bump();
        }
        let digits_from = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        if self.pos == digits_from {
            return Ok((sign, false));
        }
        let v = self.text[digits_from..self.pos]
            .parse::<i64>()
            .map_err(|_| err(self.base + digits_from, "integer out of range"))?;
        Ok((sign * v, true))
    }
}

/// Parse one element literal in the given ring's grammar.
pub fn parse_element(ring: RingId, text: &str) -> Result<RingElement, Error> {
    parse_element_at(ring, text, 0)
}

fn parse_element_at(ring: RingId, text: &str, base: usize) -> Result<RingElement, Error> {
    if text.is_empty() {
        return Err(err(base, "empty element literal"));
    }
    let mut c = Cursor::new(text, base);
    let value = match ring {
        RingId::Nat => {
            if c.peek() == Some(b'-') {
                return Err(err(c.at(), "negative literal over the naturals"));
            }
            RingElement::nat(c.integer()?).map_err(|e| err(base, e.to_string()))?
        }
        RingId::Int => RingElement::int(c.integer()?),
        RingId::Rational => {
            let num = c.integer()?;
            let den = if c.peek() == Some(b'/') {
                c.bump();
                let at = c.at();
                let d = c.integer()?;
                if d <= 0 {
                    return Err(err(at, "denominator must be a positive integer"));
                }
                d
            } else {
                1
            };
            RingElement::rational(num, den).map_err(|e| err(base, e.to_string()))?
        }
        RingId::PrimeField(p) => {
            let v = c.integer()?;
            RingElement::fp(v, p).map_err(|e| err(base, e.to_string()))?
        }
        RingId::Lunar => {
            if !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(base, "lunar literals are plain digit strings"));
            }
            c.pos = text.len();
            RingElement::Lunar(lunar::parse(text).expect("all digits"))
        }
        RingId::Gaussian => parse_quadratic(&mut c, b'i', RingElement::gaussian)?,
        RingId::Eisenstein => parse_quadratic(&mut c, b'w', RingElement::eisenstein)?,
        RingId::Sqrt2 => parse_quadratic(&mut c, b'r', RingElement::sqrt2)?,
    };
    if !c.done() {
        return Err(err(c.at(), "unexpected trailing input"));
    }
    Ok(value)
}

/// `a`, `bS`, `a+bS`, `a-bS` with an optional coefficient on the suffixed
/// term (`i` means `1i`).
fn parse_quadratic(
    c: &mut Cursor<'_>,
    suffix: u8,
    build: fn(i64, i64) -> RingElement,
) -> Result<RingElement, Error> {
    let (first, had_digits) = c.signed_coefficient()?;
    if c.peek() == Some(suffix) {
        // Pure irrational term: `bS`, `S`, `-S`.
        c.bump();
        return Ok(build(0, first));
    }
    if !had_digits {
        return Err(err(
            c.at(),
            format!("expected a digit or '{}'", suffix as char),
        ));
    }
    match c.peek() {
        None => Ok(build(first, 0)),
        Some(b'+') | Some(b'-') => {
            let neg = c.bump() == Some(b'-');
            let digits_from = c.pos;
            while matches!(c.peek(), Some(b'0'..=b'9')) {
                c.bump();
            }
            let magnitude = if c.pos == digits_from {
                1
            } else {
                c.text[digits_from..c.pos]
                    .parse::<i64>()
                    .map_err(|_| err(c.base + digits_from, "integer out of range"))?
            };
            if c.peek() != Some(suffix) {
                return Err(err(c.at(), format!("expected '{}'", suffix as char)));
            }
            c.bump();
            Ok(build(first, if neg { -magnitude } else { magnitude }))
        }
        _ => Err(err(c.at(), "unexpected character")),
    }
}

/// Canonical text for one element; parses back to the same value.
pub fn render_element(e: &RingElement) -> String {
    match e {
        RingElement::Nat(n) | RingElement::Int(n) => n.to_string(),
        RingElement::Rational { num, den } => {
            if *den == 1 {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
        RingElement::PrimeField { residue, .. } => residue.to_string(),
        RingElement::Lunar(d) => lunar::render(d),
        RingElement::Gaussian { re, im } => render_quadratic(*re, *im, 'i'),
        RingElement::Eisenstein { a, b } => render_quadratic(*a, *b, 'w'),
        RingElement::Sqrt2 { a, b } => render_quadratic(*a, *b, 'r'),
    }
}

fn render_quadratic(a: i64, b: i64, suffix: char) -> String {
    let coeff = |b: i64| match b {
        1 => String::new(),
        -1 => "-".into(),
        _ => b.to_string(),
    };
    match (a, b) {
        (a, 0) => a.to_string(),
        (0, b) => format!("{}{}", coeff(b), suffix),
        (a, b) if b > 0 => format!("{a}+{}{}", coeff(b), suffix),
        (a, b) => format!("{a}{}{}", coeff(b), suffix),
    }
}

/// Parse a multiset literal: comma-separated element literals with optional
/// `*k` repetition suffixes.
pub fn parse_multiset(ring: RingId, text: &str) -> Result<Multiset, Error> {
    if text.is_empty() {
        return Err(err(0, "empty multiset literal"));
    }
    let mut out = Multiset::empty(ring);
    let mut offset = 0usize;
    for token in text.split(',') {
        if token.is_empty() {
            return Err(err(offset, "empty element literal"));
        }
        let (elem_text, count) = match token.find('*') {
            None => (token, 1u64),
            Some(star) => {
                let count_text = &token[star + 1..];
                let count: u64 = count_text
                    .parse()
                    .map_err(|_| err(offset + star + 1, "expected a repetition count"))?;
                if count == 0 {
                    return Err(err(
                        offset + star + 1,
                        "repetition count must be at least 1",
                    ));
                }
                (&token[..star], count)
            }
        };
        let elem = parse_element_at(ring, elem_text, offset)?;
        out.insert(elem, count).map_err(|e| match e {
            Error::RingMismatch { .. } => e,
            other => err(offset, other.to_string()),
        })?;
        offset += token.len() + 1;
    }
    Ok(out)
}

/// Canonical multiset literal: entries in canonical order, `*k` for
/// multiplicities above 1. Round-trips through [`parse_multiset`].
pub fn render_multiset(s: &Multiset) -> String {
    let mut parts = Vec::with_capacity(s.distinct_count());
    for (elem, mult) in s.entries() {
        if *mult == 1 {
            parts.push(render_element(elem));
        } else {
            parts.push(format!("{}*{}", render_element(elem), mult));
        }
    }
    parts.join(",")
}
