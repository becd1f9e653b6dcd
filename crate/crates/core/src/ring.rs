//! Exact element arithmetic for the eight supported structures, plus the
//! divisibility tests and parity maps the construction theorems rely on.
//!
//! All integer components are checked 64-bit values; overflow raises
//! [`Error::Overflow`] instead of wrapping.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;
use crate::lunar;

/// Identifies one of the supported arithmetic structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingId {
    /// Non-negative integers.
    Nat,
    /// Integers.
    Int,
    /// Rationals in lowest terms.
    Rational,
    /// Integers modulo the carried prime.
    PrimeField(i64),
    /// Base-10 lunar (dismal) integers; a commutative semiring.
    Lunar,
    /// Gaussian integers a+bi.
    Gaussian,
    /// Eisenstein integers a+bw with w^2 = -1-w.
    Eisenstein,
    /// The real quadratic ring a+b*sqrt(2).
    Sqrt2,
}

impl RingId {
    /// Build the prime field F_p, verifying primality by trial division.
    /// Moduli are restricted below 2^31 so products of residues fit in i64.
    pub fn prime_field(p: i64) -> Result<RingId, Error> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(RingId::PrimeField(p))
    }

    pub fn zero(&self) -> RingElement {
        match *self {
            RingId::Nat => RingElement::Nat(0),
            RingId::Int => RingElement::Int(0),
            RingId::Rational => RingElement::Rational { num: 0, den: 1 },
            RingId::PrimeField(p) => RingElement::PrimeField {
                residue: 0,
                modulus: p,
            },
            RingId::Lunar => RingElement::Lunar(vec![0]),
            RingId::Gaussian => RingElement::Gaussian { re: 0, im: 0 },
            RingId::Eisenstein => RingElement::Eisenstein { a: 0, b: 0 },
            RingId::Sqrt2 => RingElement::Sqrt2 { a: 0, b: 0 },
        }
    }

    pub fn one(&self) -> RingElement {
        match *self {
            RingId::Nat => RingElement::Nat(1),
            RingId::Int => RingElement::Int(1),
            RingId::Rational => RingElement::Rational { num: 1, den: 1 },
            RingId::PrimeField(p) => RingElement::PrimeField {
                residue: 1 % p,
                modulus: p,
            },
            // 9 is the multiplicative identity of base-10 lunar arithmetic.
            RingId::Lunar => RingElement::Lunar(vec![9]),
            RingId::Gaussian => RingElement::Gaussian { re: 1, im: 0 },
            RingId::Eisenstein => RingElement::Eisenstein { a: 1, b: 0 },
            RingId::Sqrt2 => RingElement::Sqrt2 { a: 1, b: 0 },
        }
    }

    /// Everything implemented here is an integral domain except the lunar
    /// semiring (which lacks additive inverses, not zero-divisor freedom).
    pub fn is_integral_domain(&self) -> bool {
        !matches!(self, RingId::Lunar)
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingId::Rational | RingId::PrimeField(_))
    }

    pub fn name(&self) -> String {
        match self {
            RingId::Nat => "nat".into(),
            RingId::Int => "int".into(),
            RingId::Rational => "rational".into(),
            RingId::PrimeField(p) => format!("fp:{p}"),
            RingId::Lunar => "lunar".into(),
            RingId::Gaussian => "gaussian".into(),
            RingId::Eisenstein => "eisenstein".into(),
            RingId::Sqrt2 => "sqrt2".into(),
        }
    }

    /// Parse an element literal in this ring's grammar (see [`crate::literal`]).
    pub fn parse_element(&self, text: &str) -> Result<RingElement, Error> {
        crate::literal::parse_element(*self, text)
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An exact value tagged with its structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Nat(i64),
    Int(i64),
    /// Always in lowest terms with a positive denominator.
    Rational {
        num: i64,
        den: i64,
    },
    /// Residue in [0, modulus).
    PrimeField {
        residue: i64,
        modulus: i64,
    },
    /// Canonical digit string, most significant first.
    Lunar(Vec<u8>),
    Gaussian {
        re: i64,
        im: i64,
    },
    /// a + b*w with w^2 = -1-w.
    Eisenstein {
        a: i64,
        b: i64,
    },
    /// a + b*sqrt(2).
    Sqrt2 {
        a: i64,
        b: i64,
    },
}

fn cadd(x: i64, y: i64) -> Result<i64, Error> {
    x.checked_add(y).ok_or(Error::Overflow)
}

fn csub(x: i64, y: i64) -> Result<i64, Error> {
    x.checked_sub(y).ok_or(Error::Overflow)
}

fn cmul(x: i64, y: i64) -> Result<i64, Error> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

fn cneg(x: i64) -> Result<i64, Error> {
    x.checked_neg().ok_or(Error::Overflow)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3i64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_reduce(v: i64, p: i64) -> i64 {
    v.rem_euclid(p)
}

/// Extended-Euclid inverse of `x` modulo the prime `p`; `x` must be nonzero.
fn mod_inverse(x: i64, p: i64) -> Result<i64, Error> {
    let x = mod_reduce(x, p);
    if x == 0 {
        return Err(Error::ZeroDivision);
    }
    let (mut r0, mut r1) = (p, x);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(mod_reduce(t0, p))
}

impl RingElement {
    pub fn nat(n: i64) -> Result<RingElement, Error> {
        if n < 0 {
            return Err(Error::InvalidElement(format!("{n} is negative")));
        }
        Ok(RingElement::Nat(n))
    }

    pub fn int(n: i64) -> RingElement {
        RingElement::Int(n)
    }

    /// Reduced rational with positive denominator.
    pub fn rational(num: i64, den: i64) -> Result<RingElement, Error> {
        if den == 0 {
            return Err(Error::ZeroDivision);
        }
        let sign = if (num < 0) ^ (den < 0) { -1 } else { 1 };
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd(n, d).max(1);
        let num = i64::try_from(n / g).map_err(|_| Error::Overflow)?;
        let den = i64::try_from(d / g).map_err(|_| Error::Overflow)?;
        Ok(RingElement::Rational {
            num: if num == 0 { 0 } else { sign * num },
            den,
        })
    }

    /// Residue of `value` in F_p; validates the modulus.
    pub fn fp(value: i64, p: i64) -> Result<RingElement, Error> {
        RingId::prime_field(p)?;
        Ok(RingElement::PrimeField {
            residue: mod_reduce(value, p),
            modulus: p,
        })
    }

    pub fn lunar(text: &str) -> Result<RingElement, Error> {
        lunar::parse(text)
            .map(RingElement::Lunar)
            .ok_or_else(|| Error::InvalidElement(format!("{text:?} is not a lunar digit string")))
    }

    pub fn gaussian(re: i64, im: i64) -> RingElement {
        RingElement::Gaussian { re, im }
    }

    pub fn eisenstein(a: i64, b: i64) -> RingElement {
        RingElement::Eisenstein { a, b }
    }

    pub fn sqrt2(a: i64, b: i64) -> RingElement {
        RingElement::Sqrt2 { a, b }
    }

    pub fn ring(&self) -> RingId {
        match self {
            RingElement::Nat(_) => RingId::Nat,
            RingElement::Int(_) => RingId::Int,
            RingElement::Rational { .. } => RingId::Rational,
            RingElement::PrimeField { modulus, .. } => RingId::PrimeField(*modulus),
            RingElement::Lunar(_) => RingId::Lunar,
            RingElement::Gaussian { .. } => RingId::Gaussian,
            RingElement::Eisenstein { .. } => RingId::Eisenstein,
            RingElement::Sqrt2 { .. } => RingId::Sqrt2,
        }
    }

    fn check_same_ring(&self, other: &RingElement) -> Result<(), Error> {
        let (a, b) = (self.ring(), other.ring());
        if a != b {
            return Err(Error::RingMismatch {
                expected: a,
                found: b,
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        *self == self.ring().zero()
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    /// Exact sum.
    pub fn ring_add(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (RingElement::Nat(x), RingElement::Nat(y)) => RingElement::Nat(cadd(*x, *y)?),
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(cadd(*x, *y)?),
            (
                RingElement::Rational { num: a, den: b },
                RingElement::Rational { num: c, den: d },
            ) => RingElement::rational(cadd(cmul(*a, *d)?, cmul(*c, *b)?)?, cmul(*b, *d)?)?,
            (
                RingElement::PrimeField {
                    residue: x,
                    modulus: p,
                },
                RingElement::PrimeField { residue: y, .. },
            ) => RingElement::PrimeField {
                residue: mod_reduce(x + y, *p),
                modulus: *p,
            },
            (RingElement::Lunar(x), RingElement::Lunar(y)) => RingElement::Lunar(lunar::add(x, y)),
            (RingElement::Gaussian { re: a, im: b }, RingElement::Gaussian { re: c, im: d }) => {
                RingElement::Gaussian {
                    re: cadd(*a, *c)?,
                    im: cadd(*b, *d)?,
                }
            }
            (RingElement::Eisenstein { a, b }, RingElement::Eisenstein { a: c, b: d }) => {
                RingElement::Eisenstein {
                    a: cadd(*a, *c)?,
                    b: cadd(*b, *d)?,
                }
            }
            (RingElement::Sqrt2 { a, b }, RingElement::Sqrt2 { a: c, b: d }) => {
                RingElement::Sqrt2 {
                    a: cadd(*a, *c)?,
                    b: cadd(*b, *d)?,
                }
            }
            _ => unreachable!("ring checked above"),
        })
    }

    /// Exact product.
    pub fn ring_mul(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (RingElement::Nat(x), RingElement::Nat(y)) => RingElement::Nat(cmul(*x, *y)?),
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(cmul(*x, *y)?),
            (
                RingElement::Rational { num: a, den: b },
                RingElement::Rational { num: c, den: d },
            ) => RingElement::rational(cmul(*a, *c)?, cmul(*b, *d)?)?,
            (
                RingElement::PrimeField {
                    residue: x,
                    modulus: p,
                },
                RingElement::PrimeField { residue: y, .. },
            ) => RingElement::PrimeField {
                residue: mod_reduce(x * y, *p),
                modulus: *p,
            },
            (RingElement::Lunar(x), RingElement::Lunar(y)) => RingElement::Lunar(lunar::mul(x, y)),
            // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
            (RingElement::Gaussian { re: a, im: b }, RingElement::Gaussian { re: c, im: d }) => {
                RingElement::Gaussian {
                    re: csub(cmul(*a, *c)?, cmul(*b, *d)?)?,
                    im: cadd(cmul(*a, *d)?, cmul(*b, *c)?)?,
                }
            }
            // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2, reduced by w^2 = -1-w.
            (RingElement::Eisenstein { a, b }, RingElement::Eisenstein { a: c, b: d }) => {
                let bd = cmul(*b, *d)?;
                RingElement::Eisenstein {
                    a: csub(cmul(*a, *c)?, bd)?,
                    b: csub(cadd(cmul(*a, *d)?, cmul(*b, *c)?)?, bd)?,
                }
            }
            // (a+br)(c+dr) = (ac+2bd) + (ad+bc)r with r = sqrt(2).
            (RingElement::Sqrt2 { a, b }, RingElement::Sqrt2 { a: c, b: d }) => {
                RingElement::Sqrt2 {
                    a: cadd(cmul(*a, *c)?, cmul(2, cmul(*b, *d)?)?)?,
                    b: cadd(cmul(*a, *d)?, cmul(*b, *c)?)?,
                }
            }
            _ => unreachable!("ring checked above"),
        })
    }

    /// Exact difference. Undefined over the lunar semiring, and over the
    /// naturals when the result would be negative.
    pub fn ring_sub(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.check_same_ring(other)?;
        match (self, other) {
            (RingElement::Nat(x), RingElement::Nat(y)) => {
                if x < y {
                    Err(Error::InvalidElement(format!(
                        "{x} - {y} is negative over the naturals"
                    )))
                } else {
                    Ok(RingElement::Nat(x - y))
                }
            }
            (RingElement::Lunar(_), _) => Err(Error::UnsupportedRing {
                ring: RingId::Lunar,
                operation: "subtraction",
            }),
            _ => self.ring_add(&other.ring_neg()?),
        }
    }

    pub fn ring_neg(&self) -> Result<RingElement, Error> {
        Ok(match self {
            RingElement::Nat(0) => RingElement::Nat(0),
            RingElement::Nat(n) => {
                return Err(Error::InvalidElement(format!(
                    "-{n} does not exist over the naturals"
                )))
            }
            RingElement::Int(x) => RingElement::Int(cneg(*x)?),
            RingElement::Rational { num, den } => RingElement::Rational {
                num: cneg(*num)?,
                den: *den,
            },
            RingElement::PrimeField { residue, modulus } => RingElement::PrimeField {
                residue: mod_reduce(-residue, *modulus),
                modulus: *modulus,
            },
            RingElement::Lunar(_) => {
                return Err(Error::UnsupportedRing {
                    ring: RingId::Lunar,
                    operation: "negation",
                })
            }
            RingElement::Gaussian { re, im } => RingElement::Gaussian {
                re: cneg(*re)?,
                im: cneg(*im)?,
            },
            RingElement::Eisenstein { a, b } => RingElement::Eisenstein {
                a: cneg(*a)?,
                b: cneg(*b)?,
            },
            RingElement::Sqrt2 { a, b } => RingElement::Sqrt2 {
                a: cneg(*a)?,
                b: cneg(*b)?,
            },
        })
    }

    /// k-th power by binary exponentiation; `x^0` is the ring one.
    pub fn ring_pow(&self, k: u64) -> Result<RingElement, Error> {
        let mut acc = self.ring().one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.ring_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.ring_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The k-fold sum of `self` (additive scaling by a plain count). Over the
    /// lunar semiring addition is idempotent, so any positive count returns
    /// the element itself.
    pub fn mul_scalar(&self, k: u64) -> Result<RingElement, Error> {
        if k == 0 {
            return Ok(self.ring().zero());
        }
        let ki = i64::try_from(k).map_err(|_| Error::Overflow)?;
        Ok(match self {
            RingElement::Nat(x) => RingElement::Nat(cmul(*x, ki)?),
            RingElement::Int(x) => RingElement::Int(cmul(*x, ki)?),
            RingElement::Rational { num, den } => RingElement::rational(cmul(*num, ki)?, *den)?,
            RingElement::PrimeField { residue, modulus } => RingElement::PrimeField {
                residue: mod_reduce(residue * mod_reduce(ki, *modulus), *modulus),
                modulus: *modulus,
            },
            RingElement::Lunar(d) => RingElement::Lunar(d.clone()),
            RingElement::Gaussian { re, im } => RingElement::Gaussian {
                re: cmul(*re, ki)?,
                im: cmul(*im, ki)?,
            },
            RingElement::Eisenstein { a, b } => RingElement::Eisenstein {
                a: cmul(*a, ki)?,
                b: cmul(*b, ki)?,
            },
            RingElement::Sqrt2 { a, b } => RingElement::Sqrt2 {
                a: cmul(*a, ki)?,
                b: cmul(*b, ki)?,
            },
        })
    }

    /// True when the element has a multiplicative inverse in its own ring.
    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Nat(n) => *n == 1,
            RingElement::Int(n) => *n == 1 || *n == -1,
            RingElement::Rational { num, .. } => *num != 0,
            RingElement::PrimeField { residue, .. } => *residue != 0,
            // 9 is the lunar multiplicative identity and the only unit.
            RingElement::Lunar(d) => d.as_slice() == [9],
            RingElement::Gaussian { re, im } => {
                re.checked_mul(*re)
                    .zip(im.checked_mul(*im))
                    .and_then(|(a, b)| a.checked_add(b))
                    == Some(1)
            }
            // Norm a^2 - ab + b^2 = 1 picks out the six units.
            RingElement::Eisenstein { a, b } => eisenstein_norm(*a, *b) == Some(1),
            // |a^2 - 2b^2| = 1.
            RingElement::Sqrt2 { a, b } => sqrt2_norm(*a, *b).map(i64::abs) == Some(1),
        }
    }

    /// Divisibility by 1+i, equivalently: re and im share a parity.
    pub fn divisible_by_one_plus_i(&self) -> Result<bool, Error> {
        match self {
            RingElement::Gaussian { re, im } => Ok((re & 1) == (im & 1)),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                operation: "divisibility by 1+i",
            }),
        }
    }

    /// Divisibility by sqrt(2), equivalently: the integer part is even.
    pub fn divisible_by_sqrt2(&self) -> Result<bool, Error> {
        match self {
            RingElement::Sqrt2 { a, .. } => Ok(a % 2 == 0),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                operation: "divisibility by sqrt(2)",
            }),
        }
    }

    /// The parity map b mod 2 on a+bi and a+b*sqrt(2). Additive always;
    /// multiplicative on elements outside the ramified prime's ideal.
    pub fn phi_parity(&self) -> Result<u8, Error> {
        match self {
            RingElement::Gaussian { im, .. } => Ok((im & 1).unsigned_abs() as u8),
            RingElement::Sqrt2 { b, .. } => Ok((b & 1).unsigned_abs() as u8),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                operation: "the parity homomorphism",
            }),
        }
    }

    /// Number of digits of a lunar integer.
    pub fn lunar_digit_count(&self) -> Result<u32, Error> {
        match self {
            RingElement::Lunar(d) => Ok(d.len() as u32),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                operation: "digit count",
            }),
        }
    }

    /// Units-place digit of a lunar integer.
    pub fn lunar_last_digit(&self) -> Result<u8, Error> {
        match self {
            RingElement::Lunar(d) => Ok(*d.last().expect("canonical digits are non-empty")),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                operation: "last digit",
            }),
        }
    }

    /// Multiplicative inverse in a field.
    pub fn field_inverse(&self) -> Result<RingElement, Error> {
        match self {
            RingElement::Rational { num, den } => {
                if *num == 0 {
                    Err(Error::ZeroDivision)
                } else {
                    RingElement::rational(*den, *num)
                }
            }
            RingElement::PrimeField { residue, modulus } => Ok(RingElement::PrimeField {
                residue: mod_inverse(*residue, *modulus)?,
                modulus: *modulus,
            }),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                operation: "field inversion",
            }),
        }
    }

    /// Total order used for canonical multiset storage and serialization.
    /// Within a ring: integers by value, rationals by (numerator, denominator),
    /// residues by value, lunar by digit count then lexicographically, and the
    /// quadratic rings lexicographically on (a, b).
    pub fn canonical_cmp(&self, other: &RingElement) -> Ordering {
        fn rank(e: &RingElement) -> u8 {
            match e {
                RingElement::Nat(_) => 0,
                RingElement::Int(_) => 1,
                RingElement::Rational { .. } => 2,
                RingElement::PrimeField { .. } => 3,
                RingElement::Lunar(_) => 4,
                RingElement::Gaussian { .. } => 5,
                RingElement::Eisenstein { .. } => 6,
                RingElement::Sqrt2 { .. } => 7,
            }
        }
        match (self, other) {
            (RingElement::Nat(x), RingElement::Nat(y)) => x.cmp(y),
            (RingElement::Int(x), RingElement::Int(y)) => x.cmp(y),
            (
                RingElement::Rational { num: a, den: b },
                RingElement::Rational { num: c, den: d },
            ) => (a, b).cmp(&(c, d)),
            (
                RingElement::PrimeField {
                    residue: x,
                    modulus: p,
                },
                RingElement::PrimeField {
                    residue: y,
                    modulus: q,
                },
            ) => (p, x).cmp(&(q, y)),
            (RingElement::Lunar(x), RingElement::Lunar(y)) => {
                x.len().cmp(&y.len()).then_with(|| x.cmp(y))
            }
            (RingElement::Gaussian { re: a, im: b }, RingElement::Gaussian { re: c, im: d }) => {
                (a, b).cmp(&(c, d))
            }
            (RingElement::Eisenstein { a, b }, RingElement::Eisenstein { a: c, b: d }) => {
                (a, b).cmp(&(c, d))
            }
            (RingElement::Sqrt2 { a, b }, RingElement::Sqrt2 { a: c, b: d }) => (a, b).cmp(&(c, d)),
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::literal::render_element(self))
    }
}

fn eisenstein_norm(a: i64, b: i64) -> Option<i64> {
    // a^2 - ab + b^2
    let aa = a.checked_mul(a)?;
    let bb = b.checked_mul(b)?;
    let ab = a.checked_mul(b)?;
    aa.checked_sub(ab)?.checked_add(bb)
}

fn sqrt2_norm(a: i64, b: i64) -> Option<i64> {
    // a^2 - 2b^2
    let aa = a.checked_mul(a)?;
    let bb = b.checked_mul(b)?.checked_mul(2)?;
    aa.checked_sub(bb)
}

/// Exact sign of the real number a + b*sqrt(2).
fn sqrt2_sign(a: i64, b: i64) -> i64 {
    if a == 0 && b == 0 {
        return 0;
    }
    if a >= 0 && b >= 0 {
        return 1;
    }
    if a <= 0 && b <= 0 {
        return -1;
    }
    let aa = (a as i128) * (a as i128);
    let bb = 2 * (b as i128) * (b as i128);
    if aa > bb {
        a.signum()
    } else {
        b.signum()
    }
}

/// Write a unit of the sqrt(2) ring as `(-1)^neg * (1+sqrt2)^exp`. Returns
/// `None` for non-units. The unit group is {+-1} x <1+sqrt2>, so this is
/// exact; coefficients only shrink along the ladder, so no overflow.
pub(crate) fn sqrt2_unit_decompose(a: i64, b: i64) -> Option<(bool, i64)> {
    if sqrt2_norm(a, b).map(i64::abs) != Some(1) {
        return None;
    }
    let neg = sqrt2_sign(a, b) < 0;
    let (mut a, mut b) = if neg { (-a, -b) } else { (a, b) };
    let mut exp = 0i64;
    while (a, b) != (1, 0) {
        if sqrt2_sign(a - 1, b) > 0 {
            // value above 1: multiply by (1+sqrt2)^-1 = -1+sqrt2
            (a, b) = (2 * b - a, a - b);
            exp += 1;
        } else {
            // value in (0,1): multiply by 1+sqrt2
            (a, b) = (a + 2 * b, a + b);
            exp -= 1;
        }
    }
    Some((neg, exp))
}
