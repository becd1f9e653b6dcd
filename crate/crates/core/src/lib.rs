//! Exact arithmetic, construction, and enumeration for multisets whose
//! element sum equals their element product ("bioperational" multisets),
//! over the naturals, integers, rationals, prime fields, base-10 lunar
//! integers, and the Gaussian, Eisenstein, and sqrt(2) quadratic rings.
//!
//! The crate has four layers:
//!
//! * [`ring`] / [`literal`] — exact checked element arithmetic and the text
//!   grammar for elements and multisets;
//! * [`multiset`] / [`minimal`] — multiset algebra, classification, and
//!   minimality decisions;
//! * [`bioperate`] — product-preserving appendage catalogs and the
//!   constructions that extend a factorization into a minimal bioperational
//!   multiset, with replayable traces;
//! * [`enumerate`] — pruned and brute-force searches, sequence reproduction,
//!   and exhaustive desk-scale verifiers.
//!
//! Searches are data-parallel when the `parallel` feature (default) is
//! enabled and fall back to sequential scans otherwise.
//!
//! ```
//! use biop_core::bioperate::bioperate_gaussian;
//! use biop_core::literal::parse_multiset;
//! use biop_core::ring::{RingElement, RingId};
//!
//! let factors = parse_multiset(RingId::Gaussian, "1+2i,2+3i")?;
//! let trace = bioperate_gaussian(&factors)?;
//! assert_eq!(trace.target, RingElement::gaussian(-4, 7));
//! assert_eq!(trace.result.to_literal(), "-1*7,i*2,1+2i,2+3i");
//! assert!(trace.result.is_minimal()?);
//! # Ok::<(), biop_core::Error>(())
//! ```

pub mod bioperate;
pub mod budget;
pub mod enumerate;
pub mod error;
pub mod literal;
pub mod minimal;
pub mod multiset;
pub mod ring;

mod lunar;

pub use budget::Budget;
pub use error::Error;
pub use minimal::Minimality;
pub use multiset::{Multiset, SumProductReport};
pub use ring::{RingElement, RingId};

pub type Result<T> = std::result::Result<T, Error>;
