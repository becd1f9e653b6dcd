//! Turning factorizations into bioperational multisets.
//!
//! An appendage is a fixed multiset with product one and a known sum, so
//! appending it shifts a multiset's sum without touching its product.
//! Each construction closes the gap `pi - sigma` with appendages (after a
//! product-preserving element transform when a parity obstruction blocks the
//! direct route), then trims the result to minimality. Every step is recorded
//! in a replayable trace.

use serde_json::{json, Value};

use crate::budget::{Budget, DEFAULT_SUBSET_BUDGET};
use crate::error::Error;
use crate::minimal::Minimality;
use crate::multiset::Multiset;
use crate::ring::{RingElement, RingId};

/// A named product-one multiset with its sum delta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Appendage {
    pub label: String,
    pub elements: Multiset,
    pub sum_delta: RingElement,
}

impl Appendage {
    fn new(label: &str, ring: RingId, literal: &str) -> Appendage {
        let elements =
            crate::literal::parse_multiset(ring, literal).expect("catalog literals are valid");
        let sum_delta = elements.sigma().expect("catalog entries are non-empty");
        debug_assert_eq!(elements.pi().unwrap(), ring.one());
        Appendage {
            label: label.to_string(),
            elements,
            sum_delta,
        }
    }

    fn compound(label: &str, parts: &[&Appendage]) -> Appendage {
        let mut elements = parts[0].elements.clone();
        for p in &parts[1..] {
            elements = elements.msum(&p.elements).expect("same ring");
        }
        let sum_delta = elements.sigma().expect("non-empty");
        Appendage {
            label: label.to_string(),
            elements,
            sum_delta,
        }
    }
}

/// The product-fixing appendages available in a ring.
///
/// The naturals only have `T1 = {1}` (handled directly by the construction)
/// and fields need no catalog at all, so both are rejected here.
pub fn appendage_catalog(ring: RingId) -> Result<Vec<Appendage>, Error> {
    match ring {
        RingId::Int => Ok(vec![
            Appendage::new("T1", ring, "1"),
            Appendage::new("T0", ring, "1,1,-1,-1"),
            Appendage::new("T-1", ring, "1,-1,-1"),
        ]),
        RingId::Gaussian => Ok(vec![
            Appendage::new("T1", ring, "1"),
            Appendage::new("T0", ring, "1,1,-1,-1"),
            Appendage::new("T-1", ring, "1,-1,-1"),
            Appendage::new("T+2i", ring, "i,i,-1,1"),
            Appendage::new("T-2i", ring, "-i,-i,-1,1"),
        ]),
        RingId::Eisenstein => {
            let t3w = Appendage::new("T3w", ring, "w,w,w");
            let tm2w = Appendage::new("T-2w", ring, "-w,-1-1w,-1,1,1");
            let tw = Appendage::compound("Tw", &[&t3w, &tm2w]);
            let tmw = Appendage::compound("T-w", &[&t3w, &tm2w, &tm2w]);
            Ok(vec![
                Appendage::new("T1", ring, "1"),
                Appendage::new("T0", ring, "1,1,-1,-1"),
                Appendage::new("T-1", ring, "1,-1,-1"),
                t3w,
                tm2w,
                tw,
                tmw,
            ])
        }
        RingId::Sqrt2 => Ok(vec![
            Appendage::new("T1", ring, "1"),
            Appendage::new("T0", ring, "1,1,-1,-1"),
            Appendage::new("T-1", ring, "1,-1,-1"),
            Appendage::new("T+2r", ring, "1+1r,-1+1r"),
            Appendage::new("T-2r", ring, "-1-1r,1-1r"),
        ]),
        other => Err(Error::UnsupportedRing {
            ring: other,
            operation: "appendage catalog",
        }),
    }
}

/// Resolve an appendage label during trace replay. Includes `T1` over the
/// naturals, which the public catalog omits.
fn appendage_by_label(ring: RingId, label: &str) -> Result<Appendage, Error> {
    if ring == RingId::Nat && label == "T1" {
        return Ok(Appendage::new("T1", ring, "1"));
    }
    appendage_catalog(ring)?
        .into_iter()
        .find(|a| a.label == label)
        .ok_or_else(|| {
            Error::InternalInvariantViolation(format!("unknown appendage label {label}"))
        })
}

/// One product-preserving element replacement performed to repair a parity
/// obstruction before appending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case2Transform {
    pub removed: RingElement,
    pub inserted: Multiset,
}

/// Full audit trail of one construction: replaying the steps from
/// `input_factors` reproduces `result` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub input_factors: Multiset,
    /// The sum-product of the result, equal to the product of the factors.
    pub target: RingElement,
    pub case2_transforms: Vec<Case2Transform>,
    pub appendages_applied: Vec<(String, u64)>,
    /// Removed during trimming; each entry may bundle several copies of the
    /// same removable group.
    pub trimmed: Vec<Multiset>,
    pub result: Multiset,
}

impl ConstructionTrace {
    /// Re-run the recorded steps from the input factors.
    pub fn replay(&self) -> Result<Multiset, Error> {
        let ring = self.input_factors.ring();
        let mut current = self.input_factors.clone();
        for t in &self.case2_transforms {
            current = current.mdiff(&Multiset::singleton(t.removed.clone()))?;
            current = current.msum(&t.inserted)?;
        }
        for (label, count) in &self.appendages_applied {
            let appendage = appendage_by_label(ring, label)?;
            current = current.msum(&appendage.elements.mscale(*count))?;
        }
        for removed in &self.trimmed {
            current = current.mdiff(removed)?;
        }
        Ok(current)
    }

    /// JSON form with multisets rendered in the literal grammar.
    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input_factors.to_literal(),
            "target": self.target.to_string(),
            "transforms": self
                .case2_transforms
                .iter()
                .map(|t| {
                    json!({
                        "removed": t.removed.to_string(),
                        "inserted": t.inserted.to_literal(),
                    })
                })
                .collect::<Vec<_>>(),
            "appendages": self
                .appendages_applied
                .iter()
                .map(|(label, count)| json!({ "label": label, "count": count }))
                .collect::<Vec<_>>(),
            "trimmed": self
                .trimmed
                .iter()
                .map(|m| Value::String(m.to_literal()))
                .collect::<Vec<_>>(),
            "result": self.result.to_literal(),
        })
    }
}

/// Extend a multiset of naturals, all at least 2, into a bioperational
/// multiset by padding with ones. The deficit `pi - sigma` is non-negative
/// for such multisets, and the output is already minimal because groups of
/// ones can never have sum zero.
pub fn bioperate_nat(factors: &Multiset) -> Result<ConstructionTrace, Error> {
    expect_ring(factors, RingId::Nat)?;
    if factors.total_multiplicity() < 2 {
        return Err(Error::PreconditionViolation(
            "need at least two factors".into(),
        ));
    }
    for (e, _) in factors.entries() {
        match e {
            RingElement::Nat(n) if *n >= 2 => {}
            _ => {
                return Err(Error::PreconditionViolation(format!(
                    "factor {e} is below 2"
                )))
            }
        }
    }
    let target = factors.pi()?;
    let deficit = target.ring_sub(&factors.sigma()?).map_err(|_| {
        Error::InternalInvariantViolation("product below sum for factors >= 2".into())
    })?;
    let d = match deficit {
        RingElement::Nat(d) => d as u64,
        _ => unreachable!(),
    };
    let mut result = factors.clone();
    result.insert(RingElement::Nat(1), d)?;
    Ok(ConstructionTrace {
        input_factors: factors.clone(),
        target,
        case2_transforms: Vec::new(),
        appendages_applied: if d > 0 {
            vec![("T1".to_string(), d)]
        } else {
            Vec::new()
        },
        trimmed: Vec::new(),
        result,
    })
}

/// Bioperate a multiset of integers, each of magnitude at least 2, by
/// appending signed unit groups and trimming to minimality.
pub fn bioperate_int(factors: &Multiset) -> Result<ConstructionTrace, Error> {
    expect_ring(factors, RingId::Int)?;
    if factors.total_multiplicity() < 2 {
        return Err(Error::PreconditionViolation(
            "need at least two factors".into(),
        ));
    }
    for (e, _) in factors.entries() {
        match e {
            RingElement::Int(n) if n.unsigned_abs() >= 2 => {}
            _ => {
                return Err(Error::PreconditionViolation(format!(
                    "factor {e} has magnitude below 2"
                )))
            }
        }
    }
    let target = factors.pi()?;
    let delta = target.ring_sub(&factors.sigma()?)?;
    let d = match delta {
        RingElement::Int(d) => d,
        _ => unreachable!(),
    };
    let mut appendages = Vec::new();
    let mut current = factors.clone();
    if d != 0 {
        let label = if d > 0 { "T1" } else { "T-1" };
        let count = d.unsigned_abs();
        current = current.msum(
            &appendage_by_label(RingId::Int, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    finish_with_trim(factors, target, Vec::new(), appendages, current)
}

/// Bioperate Gaussian factors (at least two non-units). When the imaginary
/// parts of sum and product disagree mod 2, some factor is divisible by 1+i;
/// replacing it with `{i*a, i, -1}` preserves the product and flips the
/// parity, after which `T+-2i` and `T+-1` close the gap.
pub fn bioperate_gaussian(factors: &Multiset) -> Result<ConstructionTrace, Error> {
    expect_ring(factors, RingId::Gaussian)?;
    check_nonunit_factors(factors)?;
    let target = factors.pi()?;
    let mut current = factors.clone();
    let mut transforms = Vec::new();

    let delta = target.ring_sub(&current.sigma()?)?;
    if delta.phi_parity()? == 1 {
        let chosen = current
            .entries()
            .iter()
            .map(|(e, _)| e.clone())
            .find(|e| e.divisible_by_one_plus_i().unwrap_or(false))
            .ok_or_else(|| {
                Error::InternalInvariantViolation(
                    "odd imaginary gap but no factor divisible by 1+i".into(),
                )
            })?;
        let i = RingElement::gaussian(0, 1);
        let inserted = Multiset::from_elements(
            RingId::Gaussian,
            [chosen.ring_mul(&i)?, i, RingElement::gaussian(-1, 0)],
        )?;
        current = current.mdiff(&Multiset::singleton(chosen.clone()))?;
        current = current.msum(&inserted)?;
        transforms.push(Case2Transform {
            removed: chosen,
            inserted,
        });
    }

    let mut appendages = Vec::new();
    let delta = target.ring_sub(&current.sigma()?)?;
    let (dre, dim) = match delta {
        RingElement::Gaussian { re, im } => (re, im),
        _ => unreachable!(),
    };
    debug_assert_eq!(dim.rem_euclid(2), 0, "parity was just repaired");
    if dim != 0 {
        let label = if dim > 0 { "T+2i" } else { "T-2i" };
        let count = dim.unsigned_abs() / 2;
        current = current.msum(
            &appendage_by_label(RingId::Gaussian, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    if dre != 0 {
        let label = if dre > 0 { "T1" } else { "T-1" };
        let count = dre.unsigned_abs();
        current = current.msum(
            &appendage_by_label(RingId::Gaussian, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    finish_with_trim(factors, target, transforms, appendages, current)
}

/// Bioperate Eisenstein factors (at least two non-units) with `Tw`/`T-w`
/// along the omega axis and `T+-1` along the integer axis; no parity
/// obstruction exists in this ring.
pub fn bioperate_eisenstein(factors: &Multiset) -> Result<ConstructionTrace, Error> {
    expect_ring(factors, RingId::Eisenstein)?;
    check_nonunit_factors(factors)?;
    let target = factors.pi()?;
    let mut current = factors.clone();
    let delta = target.ring_sub(&current.sigma()?)?;
    let (dx, dy) = match delta {
        RingElement::Eisenstein { a, b } => (a, b),
        _ => unreachable!(),
    };
    let mut appendages = Vec::new();
    if dy != 0 {
        let label = if dy > 0 { "Tw" } else { "T-w" };
        let count = dy.unsigned_abs();
        current = current.msum(
            &appendage_by_label(RingId::Eisenstein, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    if dx != 0 {
        let label = if dx > 0 { "T1" } else { "T-1" };
        let count = dx.unsigned_abs();
        current = current.msum(
            &appendage_by_label(RingId::Eisenstein, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    finish_with_trim(factors, target, Vec::new(), appendages, current)
}

/// Bioperate sqrt(2)-ring factors (at least two non-units). When the sqrt(2)
/// coefficients of sum and product disagree mod 2, some factor is divisible
/// by sqrt(2); replacing `a` with `{(1+r)a, -1+r}` multiplies the product by
/// `(1+r)(-1+r) = 1` and repairs the parity.
pub fn bioperate_sqrt2(factors: &Multiset) -> Result<ConstructionTrace, Error> {
    expect_ring(factors, RingId::Sqrt2)?;
    check_nonunit_factors(factors)?;
    let target = factors.pi()?;
    let mut current = factors.clone();
    let mut transforms = Vec::new();

    let delta = target.ring_sub(&current.sigma()?)?;
    if delta.phi_parity()? == 1 {
        let chosen = current
            .entries()
            .iter()
            .map(|(e, _)| e.clone())
            .find(|e| e.divisible_by_sqrt2().unwrap_or(false))
            .ok_or_else(|| {
                Error::InternalInvariantViolation(
                    "odd sqrt(2) gap but no factor divisible by sqrt(2)".into(),
                )
            })?;
        let fundamental = RingElement::sqrt2(1, 1);
        let inserted = Multiset::from_elements(
            RingId::Sqrt2,
            [chosen.ring_mul(&fundamental)?, RingElement::sqrt2(-1, 1)],
        )?;
        current = current.mdiff(&Multiset::singleton(chosen.clone()))?;
        current = current.msum(&inserted)?;
        transforms.push(Case2Transform {
            removed: chosen,
            inserted,
        });
    }

    let mut appendages = Vec::new();
    let delta = target.ring_sub(&current.sigma()?)?;
    let (da, db) = match delta {
        RingElement::Sqrt2 { a, b } => (a, b),
        _ => unreachable!(),
    };
    debug_assert_eq!(db.rem_euclid(2), 0, "parity was just repaired");
    if db != 0 {
        let label = if db > 0 { "T+2r" } else { "T-2r" };
        let count = db.unsigned_abs() / 2;
        current = current.msum(
            &appendage_by_label(RingId::Sqrt2, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    if da != 0 {
        let label = if da > 0 { "T1" } else { "T-1" };
        let count = da.unsigned_abs();
        current = current.msum(
            &appendage_by_label(RingId::Sqrt2, label)?
                .elements
                .mscale(count),
        )?;
        appendages.push((label.to_string(), count));
    }
    finish_with_trim(factors, target, transforms, appendages, current)
}

/// Dispatch to the ring-appropriate construction.
pub fn bioperate(factors: &Multiset) -> Result<ConstructionTrace, Error> {
    match factors.ring() {
        RingId::Nat => bioperate_nat(factors),
        RingId::Int => bioperate_int(factors),
        RingId::Gaussian => bioperate_gaussian(factors),
        RingId::Eisenstein => bioperate_eisenstein(factors),
        RingId::Sqrt2 => bioperate_sqrt2(factors),
        other => Err(Error::UnsupportedRing {
            ring: other,
            operation: "bioperation",
        }),
    }
}

/// The unique element completing a field multiset with product not one:
/// `sigma / (pi - 1)`.
pub fn field_completion_element(s: &Multiset) -> Result<RingElement, Error> {
    if !s.ring().is_field() {
        return Err(Error::UnsupportedRing {
            ring: s.ring(),
            operation: "field completion",
        });
    }
    let sigma = s.sigma()?;
    let pi = s.pi()?;
    let denom = pi.ring_sub(&s.ring().one())?;
    if denom.is_zero() {
        return Err(Error::ProductIsOne);
    }
    sigma.ring_mul(&denom.field_inverse()?)
}

/// Append the completing element, producing a bioperational field multiset.
pub fn field_complete(s: &Multiset) -> Result<Multiset, Error> {
    let elem = field_completion_element(s)?;
    let mut out = s.clone();
    out.insert(elem, 1)?;
    Ok(out)
}

/// Repeatedly remove the smallest removable witness until the multiset is
/// minimal. Consecutive copies of the same witness are removed in one batch;
/// the result is identical to one-at-a-time removal because removing units
/// can only shrink the witness pool.
pub fn trim_to_minimal(s: &Multiset) -> Result<Multiset, Error> {
    Ok(trim_with_steps(s)?.0)
}

/// [`trim_to_minimal`] also returning each removed batch in order.
pub fn trim_with_steps(s: &Multiset) -> Result<(Multiset, Vec<Multiset>), Error> {
    if !s.ring().is_integral_domain() {
        return Err(Error::UnsupportedRing {
            ring: s.ring(),
            operation: "trimming",
        });
    }
    let ring = s.ring();
    let mut current = s.clone();
    let mut steps = Vec::new();
    loop {
        match current.minimality_with(&Budget::new(DEFAULT_SUBSET_BUDGET))? {
            Minimality::Minimal => return Ok((current, steps)),
            Minimality::NonMinimal { removable } => {
                // Only product-one, sum-zero witnesses may be removed in
                // batches; a vanishing multiset's witness (say a spare zero)
                // is removable once but not repeatedly.
                let batchable = removable.sigma()? == ring.zero() && removable.pi()? == ring.one();
                let fit = if batchable {
                    removable
                        .entries()
                        .iter()
                        .map(|(e, k)| current.multiplicity(e) / k)
                        .min()
                        .unwrap_or(1)
                        .max(1)
                } else {
                    1
                };
                let batch = removable.mscale(fit);
                current = current.mdiff(&batch)?;
                steps.push(batch);
            }
        }
    }
}

fn expect_ring(s: &Multiset, ring: RingId) -> Result<(), Error> {
    if s.ring() != ring {
        return Err(Error::RingMismatch {
            expected: ring,
            found: s.ring(),
        });
    }
    Ok(())
}

/// At least two non-unit, nonzero elements; unit factors are tolerated.
fn check_nonunit_factors(factors: &Multiset) -> Result<(), Error> {
    if factors.entries().iter().any(|(e, _)| e.is_zero()) {
        return Err(Error::PreconditionViolation("zero factor".into()));
    }
    let nonunits: u64 = factors
        .entries()
        .iter()
        .filter(|(e, _)| !e.is_unit())
        .map(|(_, k)| k)
        .sum();
    if nonunits < 2 {
        return Err(Error::PreconditionViolation(
            "need at least two non-unit factors".into(),
        ));
    }
    Ok(())
}

fn finish_with_trim(
    factors: &Multiset,
    target: RingElement,
    transforms: Vec<Case2Transform>,
    appendages: Vec<(String, u64)>,
    bioperated: Multiset,
) -> Result<ConstructionTrace, Error> {
    debug_assert_eq!(bioperated.sigma()?, target);
    debug_assert_eq!(bioperated.pi()?, target);
    let (result, trimmed) = trim_with_steps(&bioperated)?;
    Ok(ConstructionTrace {
        input_factors: factors.clone(),
        target,
        case2_transforms: transforms,
        appendages_applied: appendages,
        trimmed,
        result,
    })
}
