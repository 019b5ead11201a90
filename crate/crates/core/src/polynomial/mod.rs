//! Dense univariate polynomials over GF(q).
//!
//! Coefficients are stored in ascending degree order and trimmed so the last
//! stored coefficient is nonzero; the zero polynomial has no coefficients and
//! degree `None`.

mod cyclotomic;
mod factored;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

pub use cyclotomic::{cyclotomic_prime_power, phi_frobenius_power};
pub use factored::{FactorLabel, FactoredPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: vec![1],
        }
    }

    /// Builds a polynomial from integer coefficients (ascending), reducing
    /// each mod q.
    pub fn from_ints(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_residues(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    /// Builds a polynomial from canonical residues (ascending).
    pub fn from_residues(field: PrimeField, coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.modulus()));
        let mut p = Self { field, coeffs };
        p.trim();
        p
    }

    pub fn from_elements(field: PrimeField, coeffs: &[FieldElement]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field() != field {
                return Err(Error::MixedFields(
                    field.modulus().into(),
                    c.field().modulus().into(),
                ));
            }
            raw.push(c.value());
        }
        Ok(Self::from_residues(field, raw))
    }

    /// xⁿ − 1.
    pub fn x_pow_minus_one(field: PrimeField, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = field.add(coeffs[n], 1);
        Self::from_residues(field, coeffs)
    }

    /// 1 − xⁿ.
    pub fn one_minus_x_pow(field: PrimeField, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 1;
        coeffs[n] = field.sub(coeffs[n], 1);
        Self::from_residues(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Ascending canonical residues, without trailing zeros.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of xⁱ (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field
            .element(i64::from(self.coeffs.get(i).copied().unwrap_or(0)))
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields(
                self.field.modulus().into(),
                other.field.modulus().into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        Ok(Self::from_residues(f, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self {
            field: f,
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn scale(&self, k: u32) -> Self {
        let f = self.field;
        Self::from_residues(f, self.coeffs.iter().map(|&c| f.mul(c, k)).collect())
    }

    /// Schoolbook product. Only oracles and tests multiply large
    /// polynomials; the fast path never does.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let f = self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_residues(f, out))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `self = quotient·divisor + remainder` and `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let f = self.field;
        let (dlen, lead) = match divisor.coeffs.last() {
            Some(&lead) => (divisor.coeffs.len(), lead),
            None => return Err(Error::DivisionByZero),
        };
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f.inv(lead).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u32; rem.len() - dlen + 1];
        for shift in (0..quo.len()).rev() {
            let top = rem[shift + dlen - 1];
            if top == 0 {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quo[shift] = factor;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = f.sub(rem[shift + j], f.mul(factor, d));
            }
        }
        rem.truncate(dlen - 1);
        Ok((Self::from_residues(f, quo), Self::from_residues(f, rem)))
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(lead) => self.scale(self.field.inv(lead).expect("nonzero")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::Usage("gcd(0, 0) is undefined".into()));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Substitutes x ↦ x^factor.
    pub fn dilate(&self, factor: usize) -> Self {
        assert!(factor >= 1, "dilation factor must be positive");
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u32; (self.coeffs.len() - 1) * factor + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * factor] = c;
        }
        Self {
            field: self.field,
            coeffs,
        }
    }

    /// Compact coefficient list, e.g. `[1,0,1]`.
    pub fn coefficient_list(&self) -> String {
        if self.is_zero() {
            return "[0]".to_string();
        }
        let items: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for Polynomial {
    /// Ascending form, e.g. `1 + 2*x + x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Multiplies a dense coefficient vector by (1 − x^d) in place.
pub(crate) fn mul_one_minus_x_pow(field: PrimeField, coeffs: &mut Vec<u32>, d: usize) {
    let len = coeffs.len();
    coeffs.resize(len + d, 0);
    for i in (d..len + d).rev() {
        coeffs[i] = field.sub(coeffs[i], coeffs[i - d]);
    }
}

/// Divides a dense coefficient vector by (1 − x^d) in place. The division
/// must be exact.
pub(crate) fn div_one_minus_x_pow(field: PrimeField, coeffs: &mut Vec<u32>, d: usize) {
    let len = coeffs.len();
    assert!(len > d, "inexact division by 1 - x^{d}");
    for i in d..len {
        coeffs[i] = field.add(coeffs[i], coeffs[i - d]);
    }
    debug_assert!(coeffs[len - d..].iter().all(|&c| c == 0));
    coeffs.truncate(len - d);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn poly(q: u64, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(gf(q), c)
    }

    #[test]
    fn zero_has_no_degree() {
        let z = Polynomial::zero(gf(2));
        assert_eq!(z.degree(), None);
        assert_eq!(Polynomial::one(gf(2)).degree(), Some(0));
        assert_eq!(poly(3, &[0, 0, 3]).degree(), None);
    }

    #[test]
    fn add_examples() {
        assert!(poly(2, &[1, 1]).add(&poly(2, &[1, 1])).unwrap().is_zero());
        let p = poly(5, &[1, 2, 3]);
        assert_eq!(p.add(&Polynomial::zero(gf(5))).unwrap(), p);
        assert_eq!(
            poly(3, &[1, 1]).add(&poly(3, &[0, 1, 1])).unwrap(),
            poly(3, &[1, 2, 1])
        );
        assert!(matches!(
            poly(3, &[1]).add(&poly(2, &[1])),
            Err(Error::MixedFields(3, 2))
        ));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            poly(2, &[1, 1]).mul(&poly(2, &[1, 1])).unwrap(),
            poly(2, &[1, 0, 1])
        );
        let p = poly(7, &[3, 0, 5]);
        assert_eq!(p.mul(&Polynomial::one(gf(7))).unwrap(), p);
        assert_eq!(
            poly(2, &[1, 1]).mul(&poly(2, &[1, 1, 1])).unwrap(),
            poly(2, &[1, 0, 0, 1])
        );
    }

    #[test]
    fn divmod_examples() {
        // (x^6 + 1) / (x^2 + x + 1) over GF(2)
        let a = poly(2, &[1, 0, 0, 0, 0, 0, 1]);
        let b = poly(2, &[1, 1, 1]);
        let (quo, rem) = a.divmod(&b).unwrap();
        assert_eq!(quo, poly(2, &[1, 1, 0, 1, 1]));
        assert!(rem.is_zero());
        assert_eq!(quo.mul(&b).unwrap(), a);

        let a = poly(5, &[4, 3, 2, 1]);
        let (quo, rem) = a.divmod(&Polynomial::one(gf(5))).unwrap();
        assert_eq!((quo, rem.is_zero()), (a.clone(), true));

        let (quo, rem) = poly(3, &[0, 1]).divmod(&poly(3, &[1, 0, 1])).unwrap();
        assert!(quo.is_zero());
        assert_eq!(rem, poly(3, &[0, 1]));

        assert_eq!(
            a.divmod(&Polynomial::zero(gf(5))),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn gcd_examples() {
        let g = poly(2, &[1, 1, 0, 1])
            .gcd(&poly(2, &[1, 0, 0, 0, 0, 0, 1]))
            .unwrap();
        assert_eq!(g, Polynomial::one(gf(2)));

        let a = poly(7, &[2, 0, 4]);
        assert_eq!(a.gcd(&Polynomial::zero(gf(7))).unwrap(), a.monic());
        assert_eq!(a.monic().leading_coeff(), Some(1));

        let phi3 = poly(2, &[1, 1, 1]);
        let prod = phi3.mul(&poly(2, &[1, 1])).unwrap();
        assert_eq!(prod.gcd(&phi3).unwrap(), phi3);

        let z = Polynomial::zero(gf(2));
        assert!(matches!(z.gcd(&z), Err(Error::Usage(_))));
    }

    #[test]
    fn freshmans_dream() {
        for q in [2u64, 3, 5, 7] {
            let f = gf(q);
            let one_minus_x = Polynomial::one_minus_x_pow(f, 1);
            assert_eq!(
                one_minus_x.pow(q),
                Polynomial::one_minus_x_pow(f, q as usize),
                "q={q}"
            );
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(3, &[1, 2, 0, 1]).to_string(), "1 + 2*x + x^3");
        assert_eq!(poly(5, &[0, 1, 3]).to_string(), "x + 3*x^2");
        assert_eq!(Polynomial::one(gf(2)).to_string(), "1");
        assert_eq!(Polynomial::zero(gf(2)).to_string(), "0");
        assert_eq!(poly(2, &[1, 0, 1]).coefficient_list(), "[1,0,1]");
    }

    #[test]
    fn one_minus_x_pow_in_place_ops() {
        let f = gf(5);
        let p = poly(5, &[1, 2, 3, 4]);
        let mut c = p.coeffs().to_vec();
        mul_one_minus_x_pow(f, &mut c, 3);
        let expected = p.mul(&Polynomial::one_minus_x_pow(f, 3)).unwrap();
        assert_eq!(Polynomial::from_residues(f, c.clone()), expected);
        div_one_minus_x_pow(f, &mut c, 3);
        assert_eq!(Polynomial::from_residues(f, c), p);
    }

    fn arb_poly(q: u64, max_len: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(0..q as i64, 0..max_len)
            .prop_map(move |c| Polynomial::from_ints(PrimeField::new(q).unwrap(), &c))
    }

    fn arb_field_and_pair() -> impl Strategy<Value = (Polynomial, Polynomial)> {
        prop::sample::select(vec![2u64, 3, 5, 7, 13])
            .prop_flat_map(|q| (arb_poly(q, 24), arb_poly(q, 12)))
    }

    proptest! {
        #[test]
        fn divmod_round_trip((a, b) in arb_field_and_pair()) {
            prop_assume!(!b.is_zero());
            let (quo, rem) = a.divmod(&b).unwrap();
            prop_assert_eq!(quo.mul(&b).unwrap().add(&rem).unwrap(), a);
            prop_assert!(rem.degree() < b.degree());
        }

        #[test]
        fn gcd_divides_both((a, b) in arb_field_and_pair()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert_eq!(g.leading_coeff(), Some(1));
            prop_assert!(a.divmod(&g).unwrap().1.is_zero());
            prop_assert!(b.divmod(&g).unwrap().1.is_zero());
            prop_assert_eq!(g, b.gcd(&a).unwrap());
        }
    }
}
