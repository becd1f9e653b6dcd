//! Oracles shared by the property and acceptance suites. These are written
//! independently of the library's search paths: plain enumerations with no
//! pruning and no units-only shortcuts.

use biop_core::multiset::Multiset;
use biop_core::ring::{RingElement, RingId};

/// Exhaustive minimality oracle: a bioperational multiset is minimal iff no
/// proper non-empty sub-multiset is bioperational with the same sum-product.
/// Walks every count vector; ignores the library's units-only optimization.
pub fn minimality_oracle(s: &Multiset) -> bool {
    let target = s.sigma().unwrap();
    assert_eq!(
        target,
        s.pi().unwrap(),
        "oracle input must be bioperational"
    );
    let entries = s.entries();
    let mut counts = vec![0u64; entries.len()];
    !any_witness(s, entries, &target, &mut counts, 0)
}

fn any_witness(
    s: &Multiset,
    entries: &[(RingElement, u64)],
    target: &RingElement,
    counts: &mut Vec<u64>,
    idx: usize,
) -> bool {
    if idx == entries.len() {
        let total: u64 = counts.iter().sum();
        if total == 0 || total == s.total_multiplicity() {
            return false;
        }
        let sub = Multiset::from_entries(
            s.ring(),
            entries
                .iter()
                .zip(counts.iter())
                .filter(|(_, &c)| c > 0)
                .map(|((e, _), &c)| (e.clone(), c)),
        )
        .unwrap();
        return match (sub.sigma(), sub.pi()) {
            (Ok(sigma), Ok(pi)) => sigma == *target && pi == *target,
            _ => false,
        };
    }
    for c in 0..=entries[idx].1 {
        counts[idx] = c;
        if any_witness(s, entries, target, counts, idx + 1) {
            return true;
        }
    }
    counts[idx] = 0;
    false
}

/// Naive length-n oracle: enumerate every non-increasing tuple over
/// `{1..=2n}` of length exactly `n` and keep those with equal sum and
/// product (excluding zero, which never appears in the value range).
pub fn naive_nat_by_length(n: u64) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(n as usize);
    naive_rec(n, 2 * n, 0, 1, &mut tuple, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn naive_rec(
    n: u64,
    max_value: u64,
    sum: u64,
    prod: u64,
    tuple: &mut Vec<u64>,
    out: &mut Vec<Multiset>,
) {
    if tuple.len() as u64 == n {
        if sum == prod {
            out.push(
                Multiset::from_elements(
                    RingId::Nat,
                    tuple.iter().map(|&v| RingElement::Nat(v as i64)),
                )
                .unwrap(),
            );
        }
        return;
    }
    for v in 1..=max_value {
        tuple.push(v);
        naive_rec(n, v, sum + v, prod * v, tuple, out);
        tuple.pop();
    }
}
