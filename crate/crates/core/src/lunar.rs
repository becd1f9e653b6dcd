//! Base-10 carry-free digit arithmetic: addition takes the digitwise maximum,
//! multiplication is long multiplication with digitwise minimum and max-based
//! column accumulation. A commutative semiring; 0 is the additive and 9 the
//! multiplicative identity.
//!
//! Digits are stored most-significant-first as values 0..=9, canonical form
//! has no leading zeros except for "0" itself.

/// Strip leading zeros; the empty string canonicalizes to "0".
pub(crate) fn canonicalize(digits: &mut Vec<u8>) {
    let lead = digits.iter().take_while(|&&d| d == 0).count();
    if lead == digits.len() {
        digits.clear();
        digits.push(0);
    } else if lead > 0 {
        digits.drain(..lead);
    }
}

pub(crate) fn is_canonical(digits: &[u8]) -> bool {
    !digits.is_empty() && digits.iter().all(|&d| d <= 9) && (digits.len() == 1 || digits[0] != 0)
}

/// Digitwise max, aligned at the units place.
pub(crate) fn add(a: &[u8], b: &[u8]) -> Vec<u8> {
    debug_assert!(is_canonical(a) && is_canonical(b));
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let offset = long.len() - short.len();
    let mut out = long.to_vec();
    for (i, &d) in short.iter().enumerate() {
        let slot = &mut out[offset + i];
        *slot = (*slot).max(d);
    }
    // The longer operand has a nonzero lead digit unless it is "0", so no
    // canonicalization is needed beyond the zero-zero case.
    canonicalize(&mut out);
    out
}

/// Carry-free long multiplication: each digit pair contributes its minimum,
/// columns combine by maximum.
pub(crate) fn mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    debug_assert!(is_canonical(a) && is_canonical(b));
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &da) in a.iter().enumerate() {
        for (j, &db) in b.iter().enumerate() {
            let slot = &mut out[i + j];
            *slot = (*slot).max(da.min(db));
        }
    }
    canonicalize(&mut out);
    out
}

pub(crate) fn parse(text: &str) -> Option<Vec<u8>> {
    if text.is_empty() {
        return None;
    }
    let mut digits = Vec::with_capacity(text.len());
    for ch in text.chars() {
        digits.push(ch.to_digit(10)? as u8);
    }
    canonicalize(&mut digits);
    Some(digits)
}

pub(crate) fn render(digits: &[u8]) -> String {
    digits.iter().map(|d| (b'0' + d) as char).collect()
}
