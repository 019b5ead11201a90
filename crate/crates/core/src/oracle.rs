//! Reference implementations the fast algorithms are checked against.
//!
//! Connection polynomials here use one orientation throughout: a polynomial
//! f(x) = f₀ + f₁x + … + f_L x^L with f₀ ≠ 0 generates s when
//!
//! ```text
//! f₀·s_j + f₁·s_{j−1} + … + f_L·s_{j−L} = 0    for every j ≥ L.
//! ```
//!
//! This is the orientation in which s(x)·f(x) is a polynomial, so the
//! minimal polynomial (1 − x^N)/gcd(s^N(x), 1 − x^N) is itself a connection
//! polynomial. Results are compared as monic polynomials.

use crate::error::{Error, Result};
use crate::fastlc::{AlgorithmTrace, LinearComplexityResult};
use crate::field::PrimeField;
use crate::polynomial::Polynomial;
use crate::sequence::PeriodicSequence;

/// f = (x^N − 1) / gcd(s^N(x), x^N − 1), monic. Works for any period; no
/// shape condition is needed.
pub fn naive_minpoly_of(field: PrimeField, period: &[u32]) -> LinearComplexityResult {
    let modulus = Polynomial::x_pow_minus_one(field, period.len());
    let generating = Polynomial::from_residues(field, period.to_vec());
    let g = generating.gcd(&modulus).expect("modulus is nonzero");
    let (f, rem) = modulus.divmod(&g).expect("gcd is nonzero");
    debug_assert!(rem.is_zero());
    let expanded = f.monic();
    LinearComplexityResult {
        complexity: expanded.degree().expect("nonzero"),
        factored: None,
        expanded,
        trace: AlgorithmTrace::default(),
    }
}

pub fn naive_minpoly(s: &PeriodicSequence) -> LinearComplexityResult {
    naive_minpoly_of(s.field(), s.symbols())
}

/// Shortest LFSR for a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftRegisterSynthesis {
    /// Register length L.
    pub length: usize,
    /// Monic connection polynomial.
    pub connection: Polynomial,
}

/// Massey's shift-register synthesis over GF(q).
pub fn berlekamp_massey(field: PrimeField, prefix: &[u32]) -> ShiftRegisterSynthesis {
    // current and previous connection polynomials, both with c[0] = 1
    let mut c: Vec<u32> = vec![1];
    let mut b: Vec<u32> = vec![1];
    let mut length = 0usize;
    let mut shift = 1usize;
    let mut prev_discrepancy = 1u32;

    for i in 0..prefix.len() {
        let mut d = prefix[i];
        for j in 1..c.len().min(i + 1) {
            d = field.add(d, field.mul(c[j], prefix[i - j]));
        }
        if d == 0 {
            shift += 1;
            continue;
        }
        let scale = field.mul(d, field.inv(prev_discrepancy).expect("nonzero"));
        let grow = 2 * length <= i;
        let saved = if grow { Some(c.clone()) } else { None };
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, 0);
        }
        for (j, &bj) in b.iter().enumerate() {
            c[j + shift] = field.sub(c[j + shift], field.mul(scale, bj));
        }
        match saved {
            Some(old) => {
                length = i + 1 - length;
                b = old;
                prev_discrepancy = d;
                shift = 1;
            }
            None => shift += 1,
        }
    }
    ShiftRegisterSynthesis {
        length,
        connection: Polynomial::from_residues(field, c).monic(),
    }
}

/// Linear complexity of a periodic sequence via Berlekamp-Massey on two
/// full periods.
pub fn berlekamp_massey_periodic(s: &PeriodicSequence) -> ShiftRegisterSynthesis {
    berlekamp_massey(s.field(), &s.prefix(2 * s.len()))
}

/// A linear feedback shift register: connection polynomial of degree L and
/// the first L outputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrSpec {
    connection: Polynomial,
    initial_state: Vec<u32>,
}

impl LfsrSpec {
    pub fn new(connection: Polynomial, initial_state: Vec<u32>) -> Result<Self> {
        let degree = connection
            .degree()
            .ok_or_else(|| Error::Usage("connection polynomial is zero".into()))?;
        if degree != initial_state.len() {
            return Err(Error::Usage(format!(
                "connection degree {degree} does not match state length {}",
                initial_state.len()
            )));
        }
        if connection.coeffs()[0] == 0 {
            return Err(Error::Usage(
                "connection polynomial must have a nonzero constant term".into(),
            ));
        }
        let q = connection.field().modulus();
        if initial_state.iter().any(|&s| s >= q) {
            return Err(Error::Usage("initial state is not canonical".into()));
        }
        Ok(Self {
            connection,
            initial_state,
        })
    }

    pub fn connection(&self) -> &Polynomial {
        &self.connection
    }

    pub fn initial_state(&self) -> &[u32] {
        &self.initial_state
    }
}

/// The first `count` outputs of the register.
pub fn lfsr_regenerate(spec: &LfsrSpec, count: usize) -> Vec<u32> {
    let field = spec.connection.field();
    let f = spec.connection.coeffs();
    let len = spec.initial_state.len();
    // s_j = −f₀⁻¹ · Σ_{i=1..L} f_i s_{j−i}
    let lead = field.neg(field.inv(f[0]).expect("nonzero constant term"));
    let mut out: Vec<u32> = spec.initial_state.iter().copied().take(count).collect();
    while out.len() < count {
        let j = out.len();
        let mut acc = 0u32;
        for i in 1..=len {
            acc = field.add(acc, field.mul(f[i], out[j - i]));
        }
        out.push(field.mul(lead, acc));
    }
    out
}
