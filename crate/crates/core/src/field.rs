//! Prime field GF(q).
//!
//! Elements are stored as the least non-negative residue, so equality of
//! elements (and of whole blocks of symbols) is a plain comparison. The hot
//! loops of the fast algorithms work directly on `u32` residues through the
//! raw arithmetic methods on [`PrimeField`]; [`FieldElement`] is the checked
//! value type used at API boundaries.

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// The prime field GF(q). The modulus is verified prime at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q > u64::from(u32::MAX) {
            return Err(Error::Usage(format!(
                "field modulus {q} exceeds the supported range (< 2^32)"
            )));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q: q as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.q
    }

    /// Reduces an arbitrary integer into the field.
    pub fn element(&self, value: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(value),
            q: self.q,
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            value: 0,
            q: self.q,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            value: 1,
            q: self.q,
        }
    }

    /// Least non-negative residue of `value` modulo q.
    #[inline]
    pub fn reduce(&self, value: i64) -> u32 {
        value.rem_euclid(i64::from(self.q)) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = u64::from(a) + u64::from(b);
        let q = u64::from(self.q);
        (if s >= q { s - q } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (u64::from(a) + u64::from(self.q) - u64::from(b)) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.q)) as u32
    }

    /// Multiplicative inverse of a residue, `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // extended Euclid on (a, q)
        let (mut r0, mut r1) = (i64::from(self.q), i64::from(a));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce(t0))
    }

    /// `(x + y) mod q` over whole slices, accumulating into `acc`.
    #[inline]
    pub(crate) fn add_assign_slice(&self, acc: &mut [u32], other: &[u32]) {
        debug_assert_eq!(acc.len(), other.len());
        if self.q == 2 {
            for (a, b) in acc.iter_mut().zip(other) {
                *a ^= *b;
            }
        } else {
            for (a, b) in acc.iter_mut().zip(other) {
                *a = self.add(*a, *b);
            }
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// An element of GF(q) carrying its modulus, so that mixing fields is
/// detected instead of silently producing garbage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    q: u32,
}

impl FieldElement {
    /// Canonical residue in `[0, q)`.
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { q: self.q }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<PrimeField> {
        if self.q != other.q {
            return Err(Error::MixedFields(self.q.into(), other.q.into()));
        }
        Ok(self.field())
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self {
            value: f.add(self.value, other.value),
            q: self.q,
        })
    }

    pub fn try_sub(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self {
            value: f.sub(self.value, other.value),
            q: self.q,
        })
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self {
            value: f.mul(self.value, other.value),
            q: self.q,
        })
    }

    pub fn inv(self) -> Result<Self> {
        let value = self.field().inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(Self { value, q: self.q })
    }
}

impl std::ops::Neg for FieldElement {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            value: self.field().neg(self.value),
            q: self.q,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn construction_rejects_composites() {
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn add_examples() {
        let f2 = gf(2);
        assert_eq!(f2.element(1).try_add(f2.element(1)).unwrap().value(), 0);
        let f7 = gf(7);
        assert_eq!(f7.element(3).try_add(f7.element(5)).unwrap().value(), 1);
        let f3 = gf(3);
        assert_eq!(f3.element(0).try_add(f3.element(2)).unwrap().value(), 2);
    }

    #[test]
    fn neg_examples() {
        assert_eq!((-gf(2).element(1)).value(), 1);
        assert_eq!((-gf(7).element(3)).value(), 4);
        for q in [2, 3, 5, 101] {
            assert_eq!((-gf(q).zero()).value(), 0);
        }
    }

    #[test]
    fn mul_examples() {
        let f7 = gf(7);
        assert_eq!(f7.element(3).try_mul(f7.element(5)).unwrap().value(), 1);
        for a in 0..7 {
            assert_eq!(f7.element(a).try_mul(f7.one()).unwrap().value(), a as u32);
        }
        let f3 = gf(3);
        assert_eq!(f3.element(2).try_mul(f3.element(2)).unwrap().value(), 1);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(gf(7).element(3).inv().unwrap().value(), 5);
        assert_eq!(gf(2).element(1).inv().unwrap().value(), 1);
        assert_eq!(gf(5).element(4).inv().unwrap().value(), 4);
        assert_eq!(gf(5).zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = gf(3).element(1);
        let b = gf(5).element(1);
        assert_eq!(a.try_add(b), Err(Error::MixedFields(3, 5)));
        assert_eq!(a.try_mul(b), Err(Error::MixedFields(3, 5)));
    }

    #[test]
    fn reduce_handles_negatives() {
        assert_eq!(gf(7).element(-1).value(), 6);
        assert_eq!(gf(7).element(-14).value(), 0);
        assert_eq!(gf(2).element(2).value(), 0);
    }

    #[test]
    fn field_axioms_exhaustive_small_q() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let f = gf(q);
            let q = q as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    let ia = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, ia), 1);
                    assert_eq!(f.inv(ia), Some(a));
                }
                // characteristic: a added to itself q times vanishes
                assert_eq!((0..q).fold(0, |acc, _| f.add(acc, a)), 0);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_prime_arithmetic_does_not_overflow() {
        let f = gf(4_294_967_291); // largest prime below 2^32
        let a = f.modulus() - 1;
        assert_eq!(f.mul(a, a), 1);
        assert_eq!(f.add(a, a), a - 1);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }
}
