use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::numtheory::{factor_period, PeriodShape};
use crate::polynomial::Polynomial;

/// One period a = (a₀, …, a_{N−1}) of a periodic sequence over GF(q),
/// together with the certified factorization N = qⁿpᵐ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSequence {
    field: PrimeField,
    shape: PeriodShape,
    symbols: Vec<u32>,
}

impl PeriodicSequence {
    /// Reduces integer symbols mod q and certifies the period's shape.
    pub fn new(q: u64, symbols: &[i64]) -> Result<Self> {
        let field = PrimeField::new(q)?;
        let residues = symbols.iter().map(|&s| field.reduce(s)).collect();
        Self::from_residues(field, residues)
    }

    /// Takes canonical residues and certifies the period's shape.
    pub fn from_residues(field: PrimeField, symbols: Vec<u32>) -> Result<Self> {
        let shape = factor_period(symbols.len(), field.modulus().into())?;
        Self::with_shape(shape, symbols)
    }

    /// Pairs residues with an already certified shape.
    pub fn with_shape(shape: PeriodShape, symbols: Vec<u32>) -> Result<Self> {
        let field = PrimeField::new(shape.q())?;
        if symbols.len() != shape.len() {
            return Err(Error::Usage(format!(
                "sequence has {} symbols but the shape says {}",
                symbols.len(),
                shape.len()
            )));
        }
        if let Some(bad) = symbols.iter().find(|&&s| s >= field.modulus()) {
            return Err(Error::Usage(format!(
                "symbol {bad} is not a residue of {field}"
            )));
        }
        Ok(Self {
            field,
            shape,
            symbols,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn shape(&self) -> PeriodShape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> FieldElement {
        self.field.element(i64::from(self.symbols[i]))
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    /// s^N(x) = a₀ + a₁x + … + a_{N−1}x^{N−1}.
    pub fn generating_polynomial(&self) -> Polynomial {
        Polynomial::from_residues(self.field, self.symbols.clone())
    }

    /// The same periodic sequence read from offset `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut symbols = self.symbols.clone();
        let len = symbols.len();
        if len > 0 {
            symbols.rotate_left(k % len);
        }
        Self {
            symbols,
            ..self.clone()
        }
    }

    /// The first `count` symbols of the infinite sequence.
    pub fn prefix(&self, count: usize) -> Vec<u32> {
        self.symbols.iter().copied().cycle().take(count).collect()
    }
}
