//! Pruned and brute-force searches: bioperational multisets over the
//! naturals by length or sum-product, the record positions of the length
//! counts, and exhaustive desk-scale verifiers for the field and lunar
//! structure theorems.
//!
//! The length search walks non-increasing element stacks `a1 >= ... >= ak >= 2`
//! carrying the deficit `d = pi - sigma`; a stack is a solution exactly when
//! `d + k` equals the requested length (pad with `d` ones). Appending any
//! element to a stack with product at least 2 raises `d + k` by at least one,
//! and a solution's sum-product never exceeds `2n`, so branches are cut as
//! soon as `d + k` overshoots or the product passes `2n`. Both facts are
//! cross-checked against a naive filter oracle in the tests.
//!
//! With the `parallel` feature (default), the searches split their outermost
//! choice across threads; results are merged and re-sorted, so parallel and
//! sequential runs produce identical reports.

use serde_json::{json, Value};

use crate::bioperate;
use crate::budget::{Budget, DEFAULT_NODE_BUDGET};
use crate::error::Error;
use crate::minimal::Minimality;
use crate::multiset::Multiset;
use crate::ring::{RingElement, RingId};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Knobs shared by the search entry points.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Maximum visited search nodes before failing loudly.
    pub node_budget: u64,
    /// Split the outermost search level across threads. Ignored (always
    /// sequential) when the `parallel` feature is disabled.
    pub parallel: bool,
    /// Also report zero-containing (vanishing) solutions where the query
    /// admits them; the length query then gains the all-zero multiset.
    pub include_vanishing: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            parallel: cfg!(feature = "parallel"),
            include_vanishing: false,
        }
    }
}

impl SearchConfig {
    pub fn sequential() -> Self {
        SearchConfig {
            parallel: false,
            ..SearchConfig::default()
        }
    }
}

/// What a report enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    ByLength(u64),
    BySumProduct(u64),
}

/// Canonically sorted, duplicate-free solution list for one query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub ring: RingId,
    pub query: Query,
    pub solutions: Vec<Multiset>,
    pub count: usize,
}

impl EnumerationReport {
    fn new(ring: RingId, query: Query, mut solutions: Vec<Multiset>) -> Self {
        solutions.sort_by(|a, b| a.canonical_cmp(b));
        solutions.dedup();
        EnumerationReport {
            ring,
            query,
            count: solutions.len(),
            solutions,
        }
    }

    pub fn to_json(&self) -> Value {
        let query = match self.query {
            Query::ByLength(n) => json!({ "by_length": n }),
            Query::BySumProduct(m) => json!({ "by_sum_product": m }),
        };
        json!({
            "ring": self.ring.name(),
            "query": query,
            "count": self.count,
            "solutions": self
                .solutions
                .iter()
                .map(|s| Value::String(s.to_literal()))
                .collect::<Vec<_>>(),
        })
    }
}

/// Lengths at which the per-length solution count sets a new record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordReport {
    pub positions: Vec<u64>,
}

impl RecordReport {
    pub fn to_json(&self) -> Value {
        json!({ "positions": self.positions })
    }
}

/// All non-vanishing bioperational multisets over the naturals of length
/// exactly `n`, under the default search configuration.
pub fn enumerate_nat_by_length(n: u64) -> Result<EnumerationReport, Error> {
    enumerate_nat_by_length_with(n, &SearchConfig::default())
}

pub fn enumerate_nat_by_length_with(
    n: u64,
    config: &SearchConfig,
) -> Result<EnumerationReport, Error> {
    if n < 2 {
        return Err(Error::PreconditionViolation(
            "length must be at least 2".into(),
        ));
    }
    let budget = Budget::new(config.node_budget);
    let branch = |first: u64| {
        let mut stack = vec![first];
        let mut found = Vec::new();
        length_dfs(n, &mut stack, first, first, &budget, &mut found)?;
        Ok(found)
    };
    let mut solutions = run_range_branches(2..=n, config, branch)?;
    if config.include_vanishing {
        let zeros = Multiset::from_entries(RingId::Nat, [(RingElement::Nat(0), n)])?;
        solutions.push(zeros);
    }
    Ok(EnumerationReport::new(
        RingId::Nat,
        Query::ByLength(n),
        solutions,
    ))
}

fn length_dfs(
    n: u64,
    stack: &mut Vec<u64>,
    sigma: u64,
    pi: u64,
    budget: &Budget,
    out: &mut Vec<Multiset>,
) -> Result<(), Error> {
    budget.tick(1)?;
    let k = stack.len() as u64;
    let deficit = pi - sigma;
    if deficit + k == n {
        out.push(nat_solution(stack, n - k)?);
        return Ok(());
    }
    if deficit + k > n || pi > n.saturating_mul(2) {
        return Ok(());
    }
    let last = *stack.last().expect("stack is never empty");
    for e in 2..=last {
        // Overflowing products are far beyond the 2n bound.
        let Some(next_pi) = pi.checked_mul(e) else {
            continue;
        };
        stack.push(e);
        length_dfs(n, stack, sigma + e, next_pi, budget, out)?;
        stack.pop();
    }
    Ok(())
}

fn nat_solution(factors: &[u64], ones: u64) -> Result<Multiset, Error> {
    let mut s = Multiset::empty(RingId::Nat);
    for &f in factors {
        s.insert(nat_element(f)?, 1)?;
    }
    s.insert(RingElement::Nat(1), ones)?;
    Ok(s)
}

fn nat_element(v: u64) -> Result<RingElement, Error> {
    Ok(RingElement::Nat(
        i64::try_from(v).map_err(|_| Error::Overflow)?,
    ))
}

/// All non-trivial bioperational multisets over the naturals with sum-product
/// `m`: one per factorization of `m` into at least two parts of size at least
/// 2, padded with ones. Prime `m` yields the empty list.
pub fn enumerate_nat_by_sum_product(m: u64) -> Result<EnumerationReport, Error> {
    enumerate_nat_by_sum_product_with(m, &SearchConfig::default())
}

pub fn enumerate_nat_by_sum_product_with(
    m: u64,
    config: &SearchConfig,
) -> Result<EnumerationReport, Error> {
    if m < 2 {
        return Err(Error::PreconditionViolation(
            "sum-product must be at least 2".into(),
        ));
    }
    let budget = Budget::new(config.node_budget);
    let mut parts = Vec::new();
    let mut factorizations = Vec::new();
    collect_factorizations(m, m, &mut parts, &budget, &mut factorizations)?;
    let mut solutions = Vec::with_capacity(factorizations.len());
    for factors in factorizations {
        let mut s = Multiset::empty(RingId::Nat);
        for &f in &factors {
            s.insert(nat_element(f)?, 1)?;
        }
        solutions.push(bioperate::bioperate_nat(&s)?.result);
    }
    Ok(EnumerationReport::new(
        RingId::Nat,
        Query::BySumProduct(m),
        solutions,
    ))
}

fn collect_factorizations(
    m: u64,
    cap: u64,
    parts: &mut Vec<u64>,
    budget: &Budget,
    out: &mut Vec<Vec<u64>>,
) -> Result<(), Error> {
    if m == 1 {
        if parts.len() >= 2 {
            out.push(parts.clone());
        }
        return Ok(());
    }
    for d in 2..=cap.min(m) {
        budget.tick(1)?;
        if m.is_multiple_of(d) {
            parts.push(d);
            collect_factorizations(m / d, d, parts, budget, out)?;
            parts.pop();
        }
    }
    Ok(())
}

/// Record positions of the per-length counts over lengths `2..=max_n`.
pub fn records_nat(max_n: u64) -> Result<RecordReport, Error> {
    records_nat_with(max_n, &SearchConfig::default())
}

pub fn records_nat_with(max_n: u64, config: &SearchConfig) -> Result<RecordReport, Error> {
    if max_n < 2 {
        return Err(Error::PreconditionViolation(
            "max length must be at least 2".into(),
        ));
    }
    let inner = SearchConfig {
        parallel: false,
        include_vanishing: false,
        ..config.clone()
    };
    let mut counts = run_range_branches(2..=max_n, config, |n| {
        Ok(vec![(n, enumerate_nat_by_length_with(n, &inner)?.count)])
    })?;
    counts.sort_unstable();
    let mut positions = Vec::new();
    let mut best: Option<usize> = None;
    for (n, count) in counts {
        if best.is_none_or(|b| count > b) {
            positions.push(n);
            best = Some(count);
        }
    }
    Ok(RecordReport { positions })
}

/// Every bioperational multiset (trivial and vanishing included) whose
/// elements come from `pool`, with total multiplicity between 1 and
/// `max_len`. The pool is deduplicated; results are canonically sorted.
pub fn brute_force_biop_search(
    ring: RingId,
    pool: &[RingElement],
    max_len: u64,
    config: &SearchConfig,
) -> Result<Vec<Multiset>, Error> {
    if max_len == 0 || max_len > 8 {
        return Err(Error::PreconditionViolation(
            "brute-force depth must be between 1 and 8".into(),
        ));
    }
    let mut pool: Vec<RingElement> = pool.to_vec();
    for e in &pool {
        if e.ring() != ring {
            return Err(Error::RingMismatch {
                expected: ring,
                found: e.ring(),
            });
        }
    }
    pool.sort_by(|a, b| a.canonical_cmp(b));
    pool.dedup();

    let budget = Budget::new(config.node_budget);
    let starts: Vec<usize> = (0..pool.len()).collect();
    let mut solutions = run_branches(&starts, config, |&start| {
        let first = &pool[start];
        let mut found = Vec::new();
        let mut stack = vec![start];
        pool_dfs(
            &pool,
            max_len,
            &mut stack,
            first.clone(),
            first.clone(),
            &budget,
            &mut found,
        )?;
        Ok(found)
    })?;
    solutions.sort_by(|a, b| a.canonical_cmp(b));
    solutions.dedup();
    Ok(solutions)
}

fn pool_dfs(
    pool: &[RingElement],
    max_len: u64,
    stack: &mut Vec<usize>,
    sigma: RingElement,
    pi: RingElement,
    budget: &Budget,
    out: &mut Vec<Multiset>,
) -> Result<(), Error> {
    budget.tick(1)?;
    if sigma == pi {
        out.push(Multiset::from_elements(
            sigma.ring(),
            stack.iter().map(|&i| pool[i].clone()),
        )?);
    }
    if (stack.len() as u64) == max_len {
        return Ok(());
    }
    let from = *stack.last().expect("stack is never empty");
    for idx in from..pool.len() {
        let e = &pool[idx];
        stack.push(idx);
        pool_dfs(
            pool,
            max_len,
            stack,
            sigma.ring_add(e)?,
            pi.ring_mul(e)?,
            budget,
            out,
        )?;
        stack.pop();
    }
    Ok(())
}

/// Solutions of `a^(n-1) = n` in F_p for `2 <= n <= n_max`; each pair yields
/// the single-value bioperational multiset of `n` copies of `a`.
pub fn uniform_field_solutions(p: i64, n_max: u64) -> Result<Vec<(RingElement, u64)>, Error> {
    let ring = RingId::prime_field(p)?;
    if n_max < 2 {
        return Err(Error::PreconditionViolation(
            "n_max must be at least 2".into(),
        ));
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        let target = (n % p as u64) as i64;
        for a in 0..p {
            if mod_pow(a, n - 1, p) == target {
                debug_assert_eq!(ring, RingId::PrimeField(p));
                out.push((
                    RingElement::PrimeField {
                        residue: a,
                        modulus: p,
                    },
                    n,
                ));
            }
        }
    }
    Ok(out)
}

fn mod_pow(base: i64, mut exp: u64, p: i64) -> i64 {
    let mut base = base.rem_euclid(p);
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Exhaustively confirm that every non-trivial bioperational multiset over
/// F_p with total multiplicity up to `max_len` arises by appending the
/// completion element `sigma / (pi - 1)` to its remainder.
pub fn verify_field_exhaustiveness(
    p: i64,
    max_len: u64,
    config: &SearchConfig,
) -> Result<bool, Error> {
    if p > 13 || max_len > 5 {
        return Err(Error::PreconditionViolation(
            "exhaustive field check is limited to p <= 13, max_len <= 5".into(),
        ));
    }
    let ring = RingId::prime_field(p)?;
    let pool: Vec<RingElement> = (0..p)
        .map(|residue| RingElement::PrimeField {
            residue,
            modulus: p,
        })
        .collect();
    let one = ring.one();
    for s in brute_force_biop_search(ring, &pool, max_len, config)? {
        if s.total_multiplicity() < 2 {
            continue;
        }
        let mut producible = false;
        for (e, _) in s.entries() {
            let rest = s.mdiff(&Multiset::singleton(e.clone()))?;
            if rest.pi()? == one {
                continue;
            }
            if bioperate::field_completion_element(&rest)? == *e {
                producible = true;
                break;
            }
        }
        if !producible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustively confirm, over all lunar multisets built from values with up
/// to `max_digits` digits and total multiplicity up to `max_len`, that every
/// non-trivial bioperational multiset has at most one element of two or more
/// digits and is non-minimal.
pub fn verify_lunar_triviality(
    max_digits: u32,
    max_len: u64,
    config: &SearchConfig,
) -> Result<bool, Error> {
    if max_digits == 0 || max_digits > 3 || max_len > 5 {
        return Err(Error::PreconditionViolation(
            "exhaustive lunar check is limited to max_digits <= 3, max_len <= 5".into(),
        ));
    }
    let pool = lunar_pool(max_digits);
    for s in brute_force_biop_search(RingId::Lunar, &pool, max_len, config)? {
        if s.total_multiplicity() < 2 {
            continue;
        }
        let wide = s
            .entries()
            .iter()
            .filter(|(e, _)| e.lunar_digit_count().expect("lunar pool") >= 2)
            .map(|(_, k)| k)
            .sum::<u64>();
        if wide > 1 {
            return Ok(false);
        }
        let budget = Budget::new(config.node_budget);
        if matches!(s.minimality_with(&budget)?, Minimality::Minimal) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All lunar values with up to `max_digits` digits.
pub fn lunar_pool(max_digits: u32) -> Vec<RingElement> {
    let top = 10u64.pow(max_digits);
    (0..top)
        .map(|v| RingElement::lunar(&v.to_string()).expect("decimal digits"))
        .collect()
}

/// Run one closure per branch seed, in parallel when requested and compiled
/// in, concatenating the per-branch results.
fn run_branches<S, T, F>(seeds: &[S], config: &SearchConfig, branch: F) -> Result<Vec<T>, Error>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> Result<Vec<T>, Error> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if config.parallel {
            let nested: Vec<Vec<T>> = seeds
                .par_iter()
                .map(&branch)
                .collect::<Result<Vec<_>, Error>>()?;
            return Ok(nested.into_iter().flatten().collect());
        }
    }
    let _ = config;
    let mut out = Vec::new();
    for seed in seeds {
        out.extend(branch(seed)?);
    }
    Ok(out)
}

/// [`run_branches`] over an integer range, without materializing the seeds
/// (lengths can be large; the budget is the real bound).
fn run_range_branches<T, F>(
    seeds: std::ops::RangeInclusive<u64>,
    config: &SearchConfig,
    branch: F,
) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(u64) -> Result<Vec<T>, Error> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if config.parallel {
            let nested: Vec<Vec<T>> = seeds
                .into_par_iter()
                .map(&branch)
                .collect::<Result<Vec<_>, Error>>()?;
            return Ok(nested.into_iter().flatten().collect());
        }
    }
    let _ = config;
    let mut out = Vec::new();
    for seed in seeds {
        out.extend(branch(seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::literal::parse_multiset;

    fn nat(text: &str) -> Multiset {
        parse_multiset(RingId::Nat, text).unwrap()
    }

    #[test]
    fn small_lengths_match_the_catalogued_solutions() {
        let r = enumerate_nat_by_length(2).unwrap();
        assert_eq!(r.solutions, vec![nat("2,2")]);
        let r = enumerate_nat_by_length(3).unwrap();
        assert_eq!(r.solutions, vec![nat("1,2,3")]);
        let r = enumerate_nat_by_length(4).unwrap();
        assert_eq!(r.solutions, vec![nat("1,1,2,4")]);
        let r = enumerate_nat_by_length(5).unwrap();
        assert_eq!(
            r.solutions,
            vec![nat("1,1,1,2,5"), nat("1,1,1,3,3"), nat("1,1,2,2,2")]
        );
        assert_eq!(r.count, 3);
    }

    #[test]
    fn length_query_rejects_degenerate_input() {
        assert!(enumerate_nat_by_length(1).is_err());
        assert!(enumerate_nat_by_length(0).is_err());
    }

    #[test]
    fn sequential_and_parallel_reports_agree() {
        for n in [6, 9, 13] {
            let seq = enumerate_nat_by_length_with(n, &SearchConfig::sequential()).unwrap();
            let par = enumerate_nat_by_length_with(n, &SearchConfig::default()).unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn include_vanishing_adds_the_zero_multiset() {
        let cfg = SearchConfig {
            include_vanishing: true,
            ..SearchConfig::default()
        };
        let r = enumerate_nat_by_length_with(3, &cfg).unwrap();
        assert_eq!(r.solutions, vec![nat("0,0,0"), nat("1,2,3")]);
    }

    #[test]
    fn sum_product_enumeration() {
        let r = enumerate_nat_by_sum_product(6).unwrap();
        assert_eq!(r.solutions, vec![nat("1,2,3")]);
        let r = enumerate_nat_by_sum_product(8).unwrap();
        assert_eq!(r.solutions, vec![nat("1,1,2,2,2"), nat("1,1,2,4")]);
        let r = enumerate_nat_by_sum_product(7).unwrap();
        assert!(r.solutions.is_empty());
        let r = enumerate_nat_by_sum_product(4).unwrap();
        assert_eq!(r.solutions, vec![nat("2,2")]);
    }

    #[test]
    fn sum_product_solutions_satisfy_the_length_formula() {
        for m in 2..=40u64 {
            for s in enumerate_nat_by_sum_product(m).unwrap().solutions {
                let report = s.classify().unwrap();
                assert_eq!(report.sum, RingElement::Nat(m as i64));
                assert_eq!(report.product, RingElement::Nat(m as i64));
                // length = m + k - sum(factors) for the generating factors.
                let factors: Vec<i64> = s
                    .entries()
                    .iter()
                    .filter(|(e, _)| !matches!(e, RingElement::Nat(1)))
                    .flat_map(|(e, k)| {
                        let v = match e {
                            RingElement::Nat(v) => *v,
                            _ => unreachable!(),
                        };
                        std::iter::repeat_n(v, *k as usize)
                    })
                    .collect();
                let k = factors.len() as i64;
                let sum: i64 = factors.iter().sum();
                assert_eq!(
                    s.total_multiplicity() as i64,
                    m as i64 + k - sum,
                    "length formula for {s}"
                );
            }
        }
    }

    /// Over the naturals every non-vanishing bioperational multiset is
    /// minimal: the only unit is 1, and no non-empty group of ones sums to
    /// zero.
    #[test]
    fn nat_solutions_are_always_minimal() {
        for n in 2..=10 {
            for s in enumerate_nat_by_length(n).unwrap().solutions {
                assert!(s.is_minimal().unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn record_positions_prefix() {
        let r = records_nat(14).unwrap();
        assert_eq!(r.positions, vec![2, 5, 13]);
        let r = records_nat(2).unwrap();
        assert_eq!(r.positions, vec![2]);
    }

    #[test]
    fn budget_exhaustion_is_loud() {
        let cfg = SearchConfig {
            node_budget: 10,
            ..SearchConfig::sequential()
        };
        assert!(matches!(
            enumerate_nat_by_length_with(30, &cfg),
            Err(Error::SearchBudgetExceeded { .. })
        ));
    }

    #[test]
    fn brute_force_finds_the_textbook_examples() {
        let pool = [
            RingElement::int(1),
            RingElement::int(2),
            RingElement::int(3),
            RingElement::int(-1),
        ];
        let found =
            brute_force_biop_search(RingId::Int, &pool, 3, &SearchConfig::default()).unwrap();
        let target = parse_multiset(RingId::Int, "1,2,3").unwrap();
        assert!(found.contains(&target));
        for s in &found {
            let r = s.classify().unwrap();
            assert!(r.is_bioperational);
        }
    }

    #[test]
    fn brute_force_includes_trivial_and_vanishing() {
        let pool = [RingElement::nat(0).unwrap(), RingElement::nat(5).unwrap()];
        let found =
            brute_force_biop_search(RingId::Nat, &pool, 2, &SearchConfig::default()).unwrap();
        let literals: Vec<String> = found.iter().map(|s| s.to_literal()).collect();
        assert_eq!(literals, vec!["0", "0*2", "5"]);
    }

    #[test]
    fn brute_force_depth_guard() {
        assert!(brute_force_biop_search(
            RingId::Nat,
            &[RingElement::nat(2).unwrap()],
            9,
            &SearchConfig::default()
        )
        .is_err());
    }

    #[test]
    fn uniform_solutions_examples() {
        let sols = uniform_field_solutions(11, 5).unwrap();
        assert!(sols.contains(&(RingElement::fp(2, 11).unwrap(), 5)));
        // Every reported pair is genuinely bioperational as {a * n}.
        for (a, n) in &sols {
            let s = Multiset::from_entries(a.ring(), [(a.clone(), *n)]).unwrap();
            assert!(s.classify().unwrap().is_bioperational);
        }

        let sols = uniform_field_solutions(2, 2).unwrap();
        assert_eq!(sols, vec![(RingElement::fp(0, 2).unwrap(), 2)]);

        let sols = uniform_field_solutions(3, 3).unwrap();
        assert!(sols.contains(&(RingElement::fp(0, 3).unwrap(), 3)));
        assert!(sols.contains(&(RingElement::fp(2, 3).unwrap(), 2)));
    }

    #[test]
    fn field_exhaustiveness_small_primes() {
        for p in [5, 7, 11] {
            assert!(
                verify_field_exhaustiveness(p, 4, &SearchConfig::default()).unwrap(),
                "p = {p}"
            );
        }
        assert!(verify_field_exhaustiveness(2, 2, &SearchConfig::default()).unwrap());
        assert!(verify_field_exhaustiveness(11, 3, &SearchConfig::default()).unwrap());
        assert!(verify_field_exhaustiveness(17, 4, &SearchConfig::default()).is_err());
    }

    /// In characteristic p the completion lemma misses the all-ones multiset
    /// of length p+1: sigma = p+1 = 1 = pi, yet every removal leaves product
    /// one. The exhaustive check honestly reports that gap.
    #[test]
    fn field_exhaustiveness_fails_at_length_p_plus_1() {
        assert!(!verify_field_exhaustiveness(2, 4, &SearchConfig::default()).unwrap());
        assert!(!verify_field_exhaustiveness(3, 4, &SearchConfig::default()).unwrap());
        // Below that length the producibility claim holds.
        assert!(verify_field_exhaustiveness(3, 3, &SearchConfig::default()).unwrap());
    }

    #[test]
    fn lunar_triviality_small_bounds() {
        assert!(verify_lunar_triviality(2, 3, &SearchConfig::default()).unwrap());
        assert!(verify_lunar_triviality(1, 3, &SearchConfig::default()).unwrap());
        assert!(verify_lunar_triviality(1, 1, &SearchConfig::default()).unwrap());
        assert!(verify_lunar_triviality(4, 3, &SearchConfig::default()).is_err());
    }

    #[test]
    fn lunar_brute_force_finds_the_classic_pairs() {
        let pool = lunar_pool(2);
        let found =
            brute_force_biop_search(RingId::Lunar, &pool, 3, &SearchConfig::default()).unwrap();
        let a = parse_multiset(RingId::Lunar, "17,7").unwrap();
        let b = parse_multiset(RingId::Lunar, "2,2,2").unwrap();
        assert!(found.contains(&a));
        assert!(found.contains(&b));
    }
}
