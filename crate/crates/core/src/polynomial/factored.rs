use std::fmt;

use crate::field::PrimeField;

use super::{div_one_minus_x_pow, mul_one_minus_x_pow, Polynomial};

/// A factor of a minimal polynomial as produced by the fast algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorLabel {
    /// 1 − x
    Linear,
    /// 1 − x^M with M ≥ 2
    OneMinusXPow(usize),
    /// Φ_{p^k}(x)
    CyclotomicPrimePower { p: u64, k: u32 },
}

impl FactorLabel {
    /// 1 − x^M, folding M = 1 into [`FactorLabel::Linear`].
    pub fn one_minus_x_pow(m: usize) -> Self {
        assert!(m >= 1);
        if m == 1 {
            Self::Linear
        } else {
            Self::OneMinusXPow(m)
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            Self::Linear => 1,
            Self::OneMinusXPow(m) => m,
            Self::CyclotomicPrimePower { p, k } => ((p - 1) * p.pow(k - 1)) as usize,
        }
    }

    /// Multiplies `coeffs` by this factor evaluated at x^dilation.
    fn apply_dilated(&self, field: PrimeField, coeffs: &mut Vec<u32>, dilation: usize) {
        match *self {
            Self::Linear => mul_one_minus_x_pow(field, coeffs, dilation),
            Self::OneMinusXPow(m) => mul_one_minus_x_pow(field, coeffs, m * dilation),
            Self::CyclotomicPrimePower { p, k } => {
                // Φ_{p^k}(y) = (1 − y^{p^k}) / (1 − y^{p^{k−1}})
                let inner = p.pow(k - 1) as usize * dilation;
                mul_one_minus_x_pow(field, coeffs, inner * p as usize);
                div_one_minus_x_pow(field, coeffs, inner);
            }
        }
    }
}

impl fmt::Display for FactorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Linear => write!(f, "(1 - x)"),
            Self::OneMinusXPow(m) => write!(f, "(1 - x^{m})"),
            Self::CyclotomicPrimePower { p, k } if *k == 1 => write!(f, "Phi_{p}(x)"),
            Self::CyclotomicPrimePower { p, k } => write!(f, "Phi_{{{p}^{k}}}(x)"),
        }
    }
}

/// Product of labeled factors with positive exponents. Each label occurs at
/// most once; multiplying by a label already present adds to its exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactoredPolynomial {
    factors: Vec<(FactorLabel, u64)>,
}

impl FactoredPolynomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Multiplies in `label^exponent`. A zero exponent is a no-op.
    pub fn multiply(&mut self, label: FactorLabel, exponent: u64) {
        if exponent == 0 {
            return;
        }
        match self.factors.iter_mut().find(|(l, _)| *l == label) {
            Some((_, e)) => *e += exponent,
            None => self.factors.push((label, exponent)),
        }
    }

    pub fn factors(&self) -> &[(FactorLabel, u64)] {
        &self.factors
    }

    pub fn exponent_of(&self, label: FactorLabel) -> u64 {
        self.factors
            .iter()
            .find(|(l, _)| *l == label)
            .map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(l, e)| l.degree() * *e as usize)
            .sum()
    }

    /// Merges another product into this one.
    pub fn absorb(&mut self, other: &FactoredPolynomial) {
        for &(label, e) in &other.factors {
            self.multiply(label, e);
        }
    }

    /// Multiplies everything out over `field`.
    ///
    /// Each exponent is written in base q and every digit position j uses
    /// g(x)^{q^j} = g(x^{q^j}); each factor application is a strided pass of
    /// length O(degree), so no general polynomial product is ever formed.
    pub fn expand(&self, field: PrimeField) -> Polynomial {
        let q = u64::from(field.modulus());
        let mut coeffs = Vec::with_capacity(self.degree() + 1);
        coeffs.push(1u32);
        for &(label, exponent) in &self.factors {
            let mut rest = exponent;
            let mut dilation = 1usize;
            while rest > 0 {
                for _ in 0..rest % q {
                    label.apply_dilated(field, &mut coeffs, dilation);
                }
                rest /= q;
                if rest > 0 {
                    dilation *= q as usize;
                }
            }
        }
        Polynomial::from_residues(field, coeffs)
    }
}

impl fmt::Display for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (label, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{label}^{e}")?;
            }
        }
        Ok(())
    }
}
