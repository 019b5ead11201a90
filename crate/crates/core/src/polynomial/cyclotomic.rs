use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::numtheory::is_prime;

use super::Polynomial;

fn check_prime_power_args(p: u64, k: u32, field: PrimeField) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::Usage(format!(
            "cyclotomic index base {p} is not prime"
        )));
    }
    if p == u64::from(field.modulus()) {
        return Err(Error::Usage(format!(
            "cyclotomic index {p}^{k} is a power of the characteristic"
        )));
    }
    if k == 0 {
        return Err(Error::Usage(
            "cyclotomic exponent k must be positive".into(),
        ));
    }
    p.checked_pow(k - 1)
        .and_then(|s| usize::try_from(s).ok())
        .ok_or_else(|| Error::Usage(format!("{p}^{} overflows", k - 1)))
}

/// Φ_{p^k}(x) = 1 + x^{p^{k−1}} + x^{2p^{k−1}} + … + x^{(p−1)p^{k−1}}.
pub fn cyclotomic_prime_power(p: u64, k: u32, field: PrimeField) -> Result<Polynomial> {
    let stride = check_prime_power_args(p, k, field)?;
    let p = p as usize;
    let mut coeffs = vec![0u32; (p - 1) * stride + 1];
    for i in 0..p {
        coeffs[i * stride] = 1;
    }
    Ok(Polynomial::from_residues(field, coeffs))
}

/// Φ_{p^k}(x)^e for e a power of q, computed as Φ_{p^k}(x^e). Over GF(q)
/// raising to the q-th power is the Frobenius map, so the two agree
/// coefficient for coefficient.
pub fn phi_frobenius_power(p: u64, k: u32, e: u64, field: PrimeField) -> Result<Polynomial> {
    let q = u64::from(field.modulus());
    let mut rest = e;
    while rest > 1 && rest.is_multiple_of(q) {
        rest /= q;
    }
    if rest != 1 {
        return Err(Error::Usage(format!("exponent {e} is not a power of {q}")));
    }
    let e = usize::try_from(e).map_err(|_| Error::Usage(format!("exponent {e} too large")))?;
    Ok(cyclotomic_prime_power(p, k, field)?.dilate(e))
}
