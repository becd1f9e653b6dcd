//! Seeded randomized oracles behind `biop verify`, mirroring the library's
//! property suites so the claims are reproducible from the shell.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use biop_core::multiset::Multiset;
use biop_core::ring::RingElement;

/// Products of multisets of values >= 2 dominate their sums.
pub fn lemma_product_dominates_sum(cases: u64, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let size = rng.gen_range(1..=8);
        let values: Vec<u64> = (0..size).map(|_| rng.gen_range(2..=50)).collect();
        let sigma: u64 = values.iter().sum();
        let pi: u64 = values.iter().product();
        if pi < sigma {
            return false;
        }
        if size >= 2 && values.iter().any(|&v| v > 2) && pi <= sigma {
            return false;
        }
    }
    true
}

/// Parity of the irrational coefficient agrees between product and sum for
/// multisets avoiding the ramified prime (1+i, respectively sqrt(2)).
pub fn lemma_parity_congruence(sqrt2_ring: bool, cases: u64, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let len = rng.gen_range(1..=6);
        let elems: Vec<RingElement> = (0..len)
            .map(|_| {
                let b = rng.gen_range(-30i64..=30);
                let a = rng.gen_range(-30i64..=30);
                if sqrt2_ring {
                    RingElement::sqrt2(if a % 2 == 0 { a + 1 } else { a }, b)
                } else {
                    let fixed = if (a & 1) == (b & 1) { a + 1 } else { a };
                    RingElement::gaussian(fixed, b)
                }
            })
            .collect();
        let s = Multiset::from_elements(elems[0].ring(), elems).expect("same ring");
        let pi = s.pi().unwrap().phi_parity().unwrap();
        let sigma = s.sigma().unwrap().phi_parity().unwrap();
        if pi != sigma {
            return false;
        }
    }
    true
}
