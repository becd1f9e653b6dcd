//! Ring-generic multiset algebra: element sum and product, multiset sum,
//! difference and scaling, and the classifying predicates.

use std::cmp::Ordering;
use std::fmt;

use crate::budget::{Budget, DEFAULT_SUBSET_BUDGET};
use crate::error::Error;
use crate::minimal::{self, Minimality};
use crate::ring::{RingElement, RingId};

/// A multiset over a single ring, stored as `(element, multiplicity)` entries
/// in the ring's canonical element order. Two equal multisets therefore
/// compare and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiset {
    ring: RingId,
    entries: Vec<(RingElement, u64)>,
}

/// Sum, product, and the three classifying predicates of one multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProductReport {
    pub sum: RingElement,
    pub product: RingElement,
    pub is_bioperational: bool,
    pub is_trivial: bool,
    pub is_vanishing: bool,
}

impl Multiset {
    pub fn empty(ring: RingId) -> Multiset {
        Multiset {
            ring,
            entries: Vec::new(),
        }
    }

    pub fn singleton(elem: RingElement) -> Multiset {
        Multiset {
            ring: elem.ring(),
            entries: vec![(elem, 1)],
        }
    }

    pub fn from_elements<I>(ring: RingId, elems: I) -> Result<Multiset, Error>
    where
        I: IntoIterator<Item = RingElement>,
    {
        let mut s = Multiset::empty(ring);
        for e in elems {
            s.insert(e, 1)?;
        }
        Ok(s)
    }

    pub fn from_entries<I>(ring: RingId, entries: I) -> Result<Multiset, Error>
    where
        I: IntoIterator<Item = (RingElement, u64)>,
    {
        let mut s = Multiset::empty(ring);
        for (e, k) in entries {
            s.insert(e, k)?;
        }
        Ok(s)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical element order, multiplicities always at least 1.
    pub fn entries(&self) -> &[(RingElement, u64)] {
        &self.entries
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, k)| k).sum()
    }

    pub fn multiplicity(&self, elem: &RingElement) -> u64 {
        match self
            .entries
            .binary_search_by(|(e, _)| e.canonical_cmp(elem))
        {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    /// Add `count` copies of `elem`; `count` 0 is a no-op.
    pub fn insert(&mut self, elem: RingElement, count: u64) -> Result<(), Error> {
        if elem.ring() != self.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: elem.ring(),
            });
        }
        if count == 0 {
            return Ok(());
        }
        match self
            .entries
            .binary_search_by(|(e, _)| e.canonical_cmp(&elem))
        {
            Ok(i) => {
                self.entries[i].1 = self.entries[i]
                    .1
                    .checked_add(count)
                    .ok_or(Error::Overflow)?;
            }
            Err(i) => self.entries.insert(i, (elem, count)),
        }
        Ok(())
    }

    /// Sum of all elements counted with multiplicity.
    pub fn sigma(&self) -> Result<RingElement, Error> {
        let mut it = self.entries.iter();
        let (first, k) = it.next().ok_or(Error::EmptyMultiset)?;
        let mut acc = first.mul_scalar(*k)?;
        for (e, k) in it {
            acc = acc.ring_add(&e.mul_scalar(*k)?)?;
        }
        Ok(acc)
    }

    /// Product of all elements counted with multiplicity.
    pub fn pi(&self) -> Result<RingElement, Error> {
        if self.entries.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        if self.ring == RingId::Sqrt2 {
            return self.pi_sqrt2();
        }
        let mut acc = self.ring.one();
        for (e, k) in &self.entries {
            acc = acc.ring_mul(&e.ring_pow(*k)?)?;
        }
        Ok(acc)
    }

    /// The sqrt(2) ring is the one structure here with units of infinite
    /// order, so naive per-entry powers like `(1+sqrt2)^k` overflow even when
    /// the full product is tiny. Units are folded into an exact
    /// `(-1)^p (1+sqrt2)^e` factor instead; only the true result can
    /// overflow.
    fn pi_sqrt2(&self) -> Result<RingElement, Error> {
        let mut acc = self.ring.one();
        let mut negative = false;
        let mut exponent: i128 = 0;
        for (e, k) in &self.entries {
            let (a, b) = match e {
                RingElement::Sqrt2 { a, b } => (*a, *b),
                _ => unreachable!("ring-checked entries"),
            };
            match crate::ring::sqrt2_unit_decompose(a, b) {
                Some((neg, m)) => {
                    if neg && k % 2 == 1 {
                        negative = !negative;
                    }
                    exponent += m as i128 * *k as i128;
                }
                None => acc = acc.ring_mul(&e.ring_pow(*k)?)?,
            }
        }
        let magnitude: u64 = exponent
            .unsigned_abs()
            .try_into()
            .map_err(|_| Error::Overflow)?;
        let base = if exponent >= 0 {
            RingElement::sqrt2(1, 1)
        } else {
            RingElement::sqrt2(-1, 1)
        };
        acc = acc.ring_mul(&base.ring_pow(magnitude)?)?;
        if negative {
            acc = acc.ring_neg()?;
        }
        Ok(acc)
    }

    /// Multiset sum: multiplicities add. The empty multiset is permitted.
    pub fn msum(&self, other: &Multiset) -> Result<Multiset, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        let mut out = self.clone();
        for (e, k) in &other.entries {
            out.insert(e.clone(), *k)?;
        }
        Ok(out)
    }

    /// Multiset difference: multiplicities subtract; `other` must be a
    /// sub-multiset of `self`.
    pub fn mdiff(&self, other: &Multiset) -> Result<Multiset, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        let mut out = self.clone();
        for (e, k) in &other.entries {
            match out.entries.binary_search_by(|(x, _)| x.canonical_cmp(e)) {
                Ok(i) if out.entries[i].1 >= *k => {
                    out.entries[i].1 -= k;
                    if out.entries[i].1 == 0 {
                        out.entries.remove(i);
                    }
                }
                _ => return Err(Error::NotSubmultiset),
            }
        }
        Ok(out)
    }

    /// Scale every multiplicity by `k`; zero yields the empty multiset.
    pub fn mscale(&self, k: u64) -> Multiset {
        if k == 0 {
            return Multiset::empty(self.ring);
        }
        Multiset {
            ring: self.ring,
            entries: self
                .entries
                .iter()
                .map(|(e, m)| (e.clone(), m * k))
                .collect(),
        }
    }

    /// True when every multiplicity of `other` fits inside `self`.
    pub fn contains_submultiset(&self, other: &Multiset) -> bool {
        other
            .entries
            .iter()
            .all(|(e, k)| self.multiplicity(e) >= *k)
    }

    /// Sum, product, and the trivial/vanishing/bioperational predicates.
    pub fn classify(&self) -> Result<SumProductReport, Error> {
        let sum = self.sigma()?;
        let product = self.pi()?;
        let is_bioperational = sum == product;
        Ok(SumProductReport {
            is_trivial: self.total_multiplicity() == 1,
            is_vanishing: is_bioperational && sum == self.ring.zero(),
            sum,
            product,
            is_bioperational,
        })
    }

    /// Decide minimality of a bioperational multiset, returning a removable
    /// witness (product one, sum zero) when it is not minimal. See
    /// [`crate::minimal`] for the search strategy.
    pub fn minimality_with(&self, budget: &Budget) -> Result<Minimality, Error> {
        minimal::minimality(self, budget)
    }

    /// [`Multiset::minimality_with`] under the default subset budget.
    pub fn minimality(&self) -> Result<Minimality, Error> {
        self.minimality_with(&Budget::new(DEFAULT_SUBSET_BUDGET))
    }

    pub fn is_minimal(&self) -> Result<bool, Error> {
        Ok(matches!(self.minimality()?, Minimality::Minimal))
    }

    /// Canonical multiset literal (see [`crate::literal`]).
    pub fn to_literal(&self) -> String {
        crate::literal::render_multiset(self)
    }

    /// Total order on same-ring multisets: lexicographic on the expanded
    /// canonical element sequence, shorter prefixes first. Used for
    /// deterministic solution lists and witness tie-breaking.
    pub fn canonical_cmp(&self, other: &Multiset) -> Ordering {
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let (mut ea, mut eb) = (a.next(), b.next());
        loop {
            match (ea, eb) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((xa, ka)), Some((xb, kb))) => match xa.canonical_cmp(xb) {
                    Ordering::Equal => match ka.cmp(kb) {
                        Ordering::Equal => {
                            ea = a.next();
                            eb = b.next();
                        }
                        // The side with the shorter run either ends (it is a
                        // proper prefix) or continues with a strictly larger
                        // element while the other side repeats this one.
                        Ordering::Less => {
                            return if a.next().is_none() {
                                Ordering::Less
                            } else {
                                Ordering::Greater
                            }
                        }
                        Ordering::Greater => {
                            return if b.next().is_none() {
                                Ordering::Greater
                            } else {
                                Ordering::Less
                            }
                        }
                    },
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::literal::parse_multiset;

    fn nat(text: &str) -> Multiset {
        parse_multiset(RingId::Nat, text).unwrap()
    }

    fn int(text: &str) -> Multiset {
        parse_multiset(RingId::Int, text).unwrap()
    }

    #[test]
    fn sigma_and_pi_basic() {
        let s = nat("1,2,3");
        assert_eq!(s.sigma().unwrap(), RingElement::nat(6).unwrap());
        assert_eq!(s.pi().unwrap(), RingElement::nat(6).unwrap());
        let t = nat("1,1,2,4");
        assert_eq!(t.pi().unwrap(), RingElement::nat(8).unwrap());
        assert_eq!(t.sigma().unwrap(), RingElement::nat(8).unwrap());
    }

    #[test]
    fn sigma_pi_singleton_and_empty() {
        let s = Multiset::singleton(RingElement::int(-7));
        assert_eq!(s.sigma().unwrap(), RingElement::int(-7));
        assert_eq!(s.pi().unwrap(), RingElement::int(-7));
        let e = Multiset::empty(RingId::Int);
        assert_eq!(e.sigma(), Err(Error::EmptyMultiset));
        assert_eq!(e.pi(), Err(Error::EmptyMultiset));
        assert_eq!(e.classify(), Err(Error::EmptyMultiset));
    }

    #[test]
    fn gaussian_sigma_pi() {
        let s = parse_multiset(RingId::Gaussian, "1+2i,2+3i").unwrap();
        assert_eq!(s.sigma().unwrap(), RingElement::gaussian(3, 5));
        assert_eq!(s.pi().unwrap(), RingElement::gaussian(-4, 7));
    }

    #[test]
    fn msum_mdiff_worked_examples() {
        let a = nat("2,7,2,2,3");
        let b = nat("1,2,7,7");
        assert_eq!(a.msum(&b).unwrap(), nat("1,2,2,2,2,3,7,7,7"));
        assert_eq!(a.mdiff(&nat("2,2,3")).unwrap(), nat("2,7"));
        assert_eq!(a.mdiff(&a).unwrap(), Multiset::empty(RingId::Nat));
        assert_eq!(a.msum(&Multiset::empty(RingId::Nat)).unwrap(), a);
        assert_eq!(a.mdiff(&Multiset::empty(RingId::Nat)).unwrap(), a);
        assert_eq!(a.mdiff(&nat("4")), Err(Error::NotSubmultiset));
        assert_eq!(a.mdiff(&nat("2,2,2,2")), Err(Error::NotSubmultiset));
    }

    #[test]
    fn msum_adds_multiplicities_across_rings() {
        let a = parse_multiset(RingId::Gaussian, "i").unwrap();
        let b = parse_multiset(RingId::Gaussian, "i,-1,1").unwrap();
        assert_eq!(
            a.msum(&b).unwrap(),
            parse_multiset(RingId::Gaussian, "i,i,-1,1").unwrap()
        );
    }

    #[test]
    fn mscale_worked_example() {
        let s = nat("2,5,5");
        assert_eq!(s.mscale(3), nat("2,2,2,5,5,5,5,5,5"));
        assert_eq!(s.mscale(1), s);
        assert!(s.mscale(0).is_empty());
    }

    #[test]
    fn classify_examples() {
        let r = nat("2,2").classify().unwrap();
        assert!(r.is_bioperational && !r.is_trivial && !r.is_vanishing);
        assert_eq!(r.sum, RingElement::nat(4).unwrap());

        let r = Multiset::singleton(RingElement::int(0)).classify().unwrap();
        assert!(r.is_bioperational && r.is_trivial && r.is_vanishing);

        let r = int("3,-5").classify().unwrap();
        assert!(!r.is_bioperational);
        assert_eq!(r.sum, RingElement::int(-2));
        assert_eq!(r.product, RingElement::int(-15));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let mut s = Multiset::empty(RingId::Int);
        assert!(matches!(
            s.insert(RingElement::nat(1).unwrap(), 1),
            Err(Error::RingMismatch { .. })
        ));
        assert!(matches!(
            int("1").msum(&nat("1")),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn canonical_order_of_multisets() {
        // Expanded sequences: [1,1,1,2,5] < [1,1,1,3,3] < [1,1,2,2,2].
        let a = nat("1,1,1,2,5");
        let b = nat("1,1,1,3,3");
        let c = nat("1,1,2,2,2");
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(b.canonical_cmp(&c), Ordering::Less);
        assert_eq!(a.canonical_cmp(&a), Ordering::Equal);
        // Prefixes come first.
        assert_eq!(nat("1,1").canonical_cmp(&nat("1,1,1")), Ordering::Less);
        assert_eq!(nat("1,1,1").canonical_cmp(&nat("1,1")), Ordering::Greater);
        assert_eq!(nat("1,2").canonical_cmp(&nat("1,1,5")), Ordering::Greater);
    }

    #[test]
    fn balanced_sqrt2_unit_powers_do_not_overflow() {
        // (1+r)^k (-1+r)^k = 1 however large k is; the product evaluation
        // must not materialize the individual powers.
        let s = parse_multiset(RingId::Sqrt2, "r,r,1+1r*100000,-1+1r*100000").unwrap();
        assert_eq!(s.pi().unwrap(), RingElement::sqrt2(2, 0));
        let t = parse_multiset(RingId::Sqrt2, "2,-1-1r*11,1-1r*11").unwrap();
        // (-1-r)(1-r) = 1, folded exactly.
        assert_eq!(t.pi().unwrap(), RingElement::sqrt2(2, 0));
        // A lone unbalanced unit power overflows honestly.
        let u = parse_multiset(RingId::Sqrt2, "1+1r*100000").unwrap();
        assert_eq!(u.pi(), Err(Error::Overflow));
        // Small unbalanced powers still evaluate exactly.
        let v = parse_multiset(RingId::Sqrt2, "1+1r*2,2").unwrap();
        assert_eq!(v.pi().unwrap(), RingElement::sqrt2(6, 4));
    }

    #[test]
    fn entries_are_canonically_sorted_and_merged() {
        let s = int("5,-1,5,3,-1,-1");
        let rendered: Vec<_> = s
            .entries()
            .iter()
            .map(|(e, k)| (e.to_string(), *k))
            .collect();
        assert_eq!(
            rendered,
            vec![("-1".into(), 3u64), ("3".into(), 1), ("5".into(), 2)]
        );
    }
}
