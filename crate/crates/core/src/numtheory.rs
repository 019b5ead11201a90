//! Integer predicates behind the algorithms' standing assumptions.
//!
//! Everything here runs at setup time on small moduli, so plain trial
//! division is used throughout.

use std::fmt;

use crate::error::{Error, Result};

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// φ(pⁿ) = pⁿ − pⁿ⁻¹ for a prime p and n ≥ 1.
pub fn euler_phi_prime_power(p: u64, n: u32) -> u64 {
    assert!(n >= 1, "exponent must be positive");
    p.pow(n - 1) * (p - 1)
}

/// Euler's totient of an arbitrary modulus.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| euler_phi_prime_power(p, e))
        .product()
}

/// Smallest t ≥ 1 with aᵗ ≡ 1 (mod n).
///
/// Starts from φ(n) and strips prime factors while the power stays 1, so
/// the cost is a handful of modular exponentiations.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Usage(format!("modulus must be at least 2, got {n}")));
    }
    if gcd(a % n, n) != 1 {
        return Err(Error::Usage(format!("{a} is not a unit modulo {n}")));
    }
    let mut t = euler_phi(n);
    for (r, _) in factorize(t) {
        while t.is_multiple_of(r) && pow_mod(a, t / r, n) == 1 {
            t /= r;
        }
    }
    Ok(t)
}

/// True iff q generates the unit group modulo p².
pub fn is_primitive_root_mod_p2(q: u64, p: u64) -> Result<bool> {
    if p == q {
        return Err(Error::Usage(format!("p and q must differ, both are {p}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let p2 = p
        .checked_mul(p)
        .ok_or_else(|| Error::Usage(format!("{p}^2 overflows 64 bits")))?;
    Ok(multiplicative_order(q, p2)? == p2 - p)
}

/// Certified factorization N = qⁿ·pᵐ of a period.
///
/// Only [`PeriodShape::new`] and [`factor_period`] build one, and both check
/// that q is prime and, when m ≥ 1, that p is an odd prime with q a primitive
/// root modulo p². That condition is what makes every Φ_{p^k}(x) irreducible
/// over GF(q); the fast algorithms are wrong without it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeriodShape {
    q: u64,
    p: Option<u64>,
    n: u32,
    m: u32,
    len: usize,
}

impl PeriodShape {
    pub fn new(q: u64, p: u64, n: u32, m: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let p = if m == 0 {
            None
        } else {
            check_cofactor_prime(q, p)?;
            Some(p)
        };
        let overflow = || Error::Usage(format!("period {q}^{n}·{}^{m} overflows", p.unwrap_or(1)));
        let mut len = q.checked_pow(n).ok_or_else(overflow)?;
        if let Some(p) = p {
            len = len
                .checked_mul(p.checked_pow(m).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        let len = usize::try_from(len).map_err(|_| overflow())?;
        Ok(Self { q, p, n, m, len })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The second prime, present iff m ≥ 1.
    pub fn p(&self) -> Option<u64> {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The period N.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Shape with m lowered by one (period divided by p).
    pub(crate) fn reduce_m(&self) -> Self {
        debug_assert!(self.m >= 1);
        let p = self.p.expect("m >= 1 implies p");
        let m = self.m - 1;
        Self {
            q: self.q,
            p: if m == 0 { None } else { Some(p) },
            n: self.n,
            m,
            len: self.len / p as usize,
        }
    }
}

impl fmt::Display for PeriodShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            Some(p) => write!(f, "{} = {}^{}·{}^{}", self.len, self.q, self.n, p, self.m),
            None => write!(f, "{} = {}^{}", self.len, self.q, self.n),
        }
    }
}

fn check_cofactor_prime(q: u64, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Shape(format!("{p} is not prime")));
    }
    if p == q {
        return Err(Error::Shape(format!("p and q must differ, both are {p}")));
    }
    if p == 2 {
        // (Z/2^k)* is not cyclic for k >= 3, so Φ_{2^k} eventually splits
        return Err(Error::Precondition(format!(
            "p must be an odd prime: {q} is not a primitive root modulo every power of 2"
        )));
    }
    if !is_primitive_root_mod_p2(q, p)? {
        return Err(Error::Precondition(format!(
            "{q} is not a primitive root modulo {}",
            p * p
        )));
    }
    Ok(())
}

/// Splits `len` as qⁿ·pᵐ and certifies the primitive-root condition.
pub fn factor_period(len: usize, q: u64) -> Result<PeriodShape> {
    if len == 0 {
        return Err(Error::Usage("period must be positive".into()));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut rest = len as u64;
    let mut n = 0u32;
    while rest.is_multiple_of(q) {
        rest /= q;
        n += 1;
    }
    if rest == 1 {
        return PeriodShape::new(q, 0, n, 0);
    }
    match factorize(rest).as_slice() {
        [(p, m)] => PeriodShape::new(q, *p, n, *m),
        _ => Err(Error::Shape(format!(
            "period {len} is not of the form {q}^n·p^m: cofactor {rest} is not a prime power"
        ))),
    }
}
