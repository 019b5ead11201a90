//! Linear complexity and minimal polynomials of periodic sequences over
//! GF(q) whose period is N = qⁿpᵐ, with q prime and a primitive root
//! modulo p².
//!
//! The fast path ([`fastlc`]) runs in O(N) field additions per level of
//! block recursion. The [`oracle`] module holds the slow reference
//! computations (gcd with xᴺ − 1, Berlekamp-Massey, LFSR regeneration)
//! used to cross-check it.
//!
//! ```
//! use lincomp_core::{lc_general, PeriodicSequence};
//!
//! let s = PeriodicSequence::new(2, &[0, 1, 1, 0, 1, 1]).unwrap();
//! let r = lc_general(&s).unwrap();
//! assert_eq!(r.complexity, 2);
//! assert_eq!(r.expanded.to_string(), "1 + x + x^2");
//! ```

pub mod error;
pub mod fastlc;
pub mod field;
pub mod numtheory;
pub mod oracle;
pub mod polynomial;
pub mod sequence;

pub use error::{Error, Result};
pub use fastlc::{
    lc_general, lc_period_pm, lc_period_qn, phi_part, AlgorithmTrace, LinearComplexityResult,
};
pub use field::{FieldElement, PrimeField};
pub use numtheory::{factor_period, PeriodShape};
pub use oracle::{berlekamp_massey, lfsr_regenerate, naive_minpoly, LfsrSpec};
pub use polynomial::{FactorLabel, FactoredPolynomial, Polynomial};
pub use sequence::PeriodicSequence;
