//! Block-recursive linear complexity for periods N = qⁿpᵐ.
//!
//! The first period is cut into equal blocks A₁, A₂, …; each level either
//! detects that a factor (1 − x^M) or Φ_{p^m}(x)^{q^j} divides the block
//! polynomial and divides it out in place, or folds the blocks into a
//! shorter working sequence and records how much of that factor belongs to
//! the minimal polynomial. Every level costs O(length of the working
//! sequence) field additions and the length shrinks by a factor q or p from
//! level to level.
//!
//! Four entry points:
//!
//! * [`lc_period_qn`] for N = qⁿ (generalized Games-Chan),
//! * [`lc_period_pm`] for N = pᵐ,
//! * [`phi_part`] for the Φ_{p^m}-power part of the minimal polynomial,
//! * [`lc_general`] for any certified shape: the Φ_{p^m} part, then recursion
//!   on the folded sequence b of period N/p, down to m = 0.
//!
//! A loop (as counted by [`AlgorithmTrace::loop_count`]) is one pass through
//! a block level: one halving of the working length by q or p, or the
//! terminal check on the shortest blocks. Repeated in-place divisions within
//! a level are counted separately in [`AlgorithmTrace::update_passes`].

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::polynomial::{FactorLabel, FactoredPolynomial, Polynomial};
use crate::sequence::PeriodicSequence;

/// Which procedure produced a trace entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    /// N = qⁿ levels, factors (1 − x^M).
    QPower,
    /// N = pᵐ levels, factors Φ_{p^k}.
    PPower,
    /// Φ_{p^m}-power extraction at the given m.
    PhiPart { m: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Divided `count` times, then the fold was not divisible.
    Reduced { count: u32 },
    /// Divisibility held q times; nothing more to extract at this phase.
    Exhausted,
    /// p blocks all equal (Φ divides), keep the first block.
    BlocksEqual,
    /// p blocks differ, fold them and record one Φ factor.
    BlocksDiffer,
    /// Shortest-block check; `factor` tells whether a factor was recorded.
    Terminal { factor: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    pub phase: Phase,
    /// Block length M at this level.
    pub block_len: usize,
    pub branch: Branch,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub loop_count: usize,
    pub update_passes: usize,
    pub branch_log: Vec<TraceEntry>,
}

impl AlgorithmTrace {
    fn record(&mut self, phase: Phase, block_len: usize, branch: Branch) {
        self.loop_count += 1;
        self.branch_log.push(TraceEntry {
            phase,
            block_len,
            branch,
        });
    }
}

/// Linear complexity, minimal polynomial and how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearComplexityResult {
    pub complexity: usize,
    /// Factored minimal polynomial; `None` for oracles that only have the
    /// expanded form.
    pub factored: Option<FactoredPolynomial>,
    /// Monic minimal polynomial, degree = complexity.
    pub expanded: Polynomial,
    pub trace: AlgorithmTrace,
}

impl LinearComplexityResult {
    fn from_factored(
        field: PrimeField,
        complexity: usize,
        factored: FactoredPolynomial,
        trace: AlgorithmTrace,
    ) -> Self {
        let expanded = factored.expand(field).monic();
        debug_assert_eq!(expanded.degree(), Some(complexity));
        Self {
            complexity,
            factored: Some(factored),
            expanded,
            trace,
        }
    }
}

// ---------------------------------------------------------------------------
// slice kernels

fn is_all_zero(data: &[u32]) -> bool {
    data.iter().all(|&x| x == 0)
}

/// Sum of the consecutive chunks of length `width`.
fn fold(field: PrimeField, data: &[u32], width: usize) -> Vec<u32> {
    debug_assert!(width > 0 && data.len().is_multiple_of(width));
    let mut out = data[..width].to_vec();
    for chunk in data[width..].chunks_exact(width) {
        field.add_assign_slice(&mut out, chunk);
    }
    out
}

fn chunks_all_equal(data: &[u32], width: usize) -> bool {
    let (first, rest) = data.split_at(width);
    rest.chunks_exact(width).all(|c| c == first)
}

/// Divides the block polynomial by (1 − x^M): A_i ← A_i + A_{i−1},
/// sequentially for i = 2, …, q.
fn prefix_update(field: PrimeField, data: &mut [u32], m: usize) {
    for i in m..data.len() {
        data[i] = field.add(data[i], data[i - m]);
    }
}

/// Divides the block polynomial by 1 + x^M + … + x^{(p−1)M}, i.e. multiplies
/// by (1 − x^M) and divides by (1 − x^{pM}) blockwise:
/// A′_r = A_r − A_{r−1} + A′_{r−p}.
fn prime_update_in_place(field: PrimeField, data: &mut [u32], m: usize, p: usize) {
    // descending pass: differences of neighbouring blocks
    for i in (m..data.len()).rev() {
        data[i] = field.sub(data[i], data[i - m]);
    }
    // ascending pass: running sums with stride pM
    let stride = p * m;
    for i in stride..data.len() {
        data[i] = field.add(data[i], data[i - stride]);
    }
}

// ---------------------------------------------------------------------------
// block decomposition surface

/// Working sequence viewed as consecutive blocks of length `block_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    field: PrimeField,
    block_len: usize,
    data: Vec<u32>,
}

impl BlockDecomposition {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn num_blocks(&self) -> usize {
        self.data.len() / self.block_len
    }

    /// Block A_{i+1} (zero-based index).
    pub fn block(&self, i: usize) -> &[u32] {
        &self.data[i * self.block_len..(i + 1) * self.block_len]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks_exact(self.block_len)
    }

    /// The blocks concatenated back into one symbol list.
    pub fn symbols(&self) -> &[u32] {
        &self.data
    }

    /// Block polynomial a(x) = Σ A_i(x)·x^{(i−1)M}.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_residues(self.field, self.data.clone())
    }

    fn expect_blocks(&self, count: usize) -> Result<()> {
        if self.num_blocks() != count {
            return Err(Error::Internal(format!(
                "expected {count} blocks, found {}",
                self.num_blocks()
            )));
        }
        Ok(())
    }
}

/// Cuts `working` into blocks of length `block_len`.
pub fn split_blocks(
    field: PrimeField,
    working: &[u32],
    block_len: usize,
) -> Result<BlockDecomposition> {
    if block_len == 0 || !working.len().is_multiple_of(block_len) || working.is_empty() {
        return Err(Error::Internal(format!(
            "cannot split {} symbols into blocks of {block_len}",
            working.len()
        )));
    }
    Ok(BlockDecomposition {
        field,
        block_len,
        data: working.to_vec(),
    })
}

/// The p column sums A_i + A_{p+i} + … + A_{(q−1)p+i} of q·p blocks.
pub fn column_sums(d: &BlockDecomposition, p: usize, q: usize) -> Result<Vec<Vec<u32>>> {
    d.expect_blocks(q * p)?;
    let folded = fold(d.field, &d.data, p * d.block_len);
    Ok(folded
        .chunks_exact(d.block_len)
        .map(<[u32]>::to_vec)
        .collect())
}

/// True iff all p column sums coincide, which holds exactly when
/// Φ_{p^m}(x)^{q^{n−1}} = 1 + x^M + … + x^{(p−1)M} divides a(x).
pub fn phi_divisibility_holds(d: &BlockDecomposition, p: usize, q: usize) -> Result<bool> {
    d.expect_blocks(q * p)?;
    let folded = fold(d.field, &d.data, p * d.block_len);
    Ok(chunks_all_equal(&folded, d.block_len))
}

/// Replaces A₁…A_{qp} by A′₁…A′_{qp}, the blocks of the exact quotient
/// a(x) / (1 + x^M + … + x^{(p−1)M}).
pub fn prime_update(d: &BlockDecomposition, p: usize, q: usize) -> Result<BlockDecomposition> {
    if !phi_divisibility_holds(d, p, q)? {
        return Err(Error::Internal(
            "block update requires the column sums to be equal".into(),
        ));
    }
    let mut out = d.clone();
    prime_update_in_place(d.field, &mut out.data, d.block_len, p);
    Ok(out)
}

/// The period-N/p sequence b = (A₁ + A_{q+1} + …, …, A_q + A_{2q} + …) whose
/// minimal polynomial is the part of f_s coprime to Φ_{p^m}.
pub fn b_sequence(s: &PeriodicSequence) -> Result<PeriodicSequence> {
    let shape = s.shape();
    let p = shape
        .p()
        .ok_or_else(|| Error::Usage("b sequence needs m >= 1".into()))?;
    let b = fold(s.field(), s.symbols(), s.len() / p as usize);
    PeriodicSequence::with_shape(shape.reduce_m(), b)
}

// ---------------------------------------------------------------------------
// the algorithms

struct Accumulator {
    complexity: usize,
    factored: FactoredPolynomial,
    trace: AlgorithmTrace,
}

impl Accumulator {
    fn new() -> Self {
        Self {
            complexity: 0,
            factored: FactoredPolynomial::one(),
            trace: AlgorithmTrace::default(),
        }
    }

    fn finish(self, field: PrimeField) -> LinearComplexityResult {
        LinearComplexityResult::from_factored(field, self.complexity, self.factored, self.trace)
    }
}

/// Period qⁿ: repeated reduction by a factor q using the (1 − x^M) divisibility test.
fn run_qpower(field: PrimeField, mut a: Vec<u32>, acc: &mut Accumulator) {
    let q = field.modulus() as usize;
    loop {
        if is_all_zero(&a) {
            return;
        }
        if a.len() == 1 {
            acc.complexity += 1;
            acc.factored.multiply(FactorLabel::Linear, 1);
            acc.trace
                .record(Phase::QPower, 1, Branch::Terminal { factor: true });
            return;
        }
        let m = a.len() / q;
        let mut count = 0usize;
        loop {
            let sum = fold(field, &a, m);
            if !is_all_zero(&sum) {
                let e = q - count - 1;
                acc.complexity += e * m;
                acc.factored
                    .multiply(FactorLabel::one_minus_x_pow(m), e as u64);
                acc.trace.record(
                    Phase::QPower,
                    m,
                    Branch::Reduced {
                        count: count as u32,
                    },
                );
                a = sum;
                break;
            }
            count += 1;
            if count == q {
                // (1 − x^M)^q = 1 − x^{qM} divides a, so a was zero
                acc.trace.record(Phase::QPower, m, Branch::Exhausted);
                return;
            }
            prefix_update(field, &mut a, m);
            acc.trace.update_passes += 1;
        }
    }
}

/// Period pᵐ: p-way block equality test at each level.
fn run_ppower(field: PrimeField, p: usize, mut a: Vec<u32>, acc: &mut Accumulator) {
    // a.len() == p^level
    let mut level = a.len().ilog(p);
    loop {
        if is_all_zero(&a) {
            return;
        }
        if a.len() == 1 {
            acc.complexity += 1;
            acc.factored.multiply(FactorLabel::Linear, 1);
            acc.trace
                .record(Phase::PPower, 1, Branch::Terminal { factor: true });
            return;
        }
        let k = a.len() / p;
        if chunks_all_equal(&a, k) {
            a.truncate(k);
            acc.trace.record(Phase::PPower, k, Branch::BlocksEqual);
        } else {
            a = fold(field, &a, k);
            acc.complexity += (p - 1) * k;
            acc.factored.multiply(
                FactorLabel::CyclotomicPrimePower {
                    p: p as u64,
                    k: level,
                },
                1,
            );
            acc.trace.record(Phase::PPower, k, Branch::BlocksDiffer);
        }
        level -= 1;
    }
}

/// Exponent z of Φ_{p^m}(x) in the minimal polynomial of a sequence with
/// period qⁿpᵐ, m ≥ 1. Consumes the working buffer.
fn run_phi_part(
    field: PrimeField,
    p: usize,
    n: u32,
    m: u32,
    mut a: Vec<u32>,
    trace: &mut AlgorithmTrace,
) -> u64 {
    let q = field.modulus() as usize;
    let k = p.pow(m - 1);
    let phase = Phase::PhiPart { m };
    let mut z = 0u64;
    if is_all_zero(&a) {
        return 0;
    }
    // l = q^levels_left
    let mut levels_left = n;
    loop {
        if levels_left == 0 {
            let factor = !chunks_all_equal(&a, k);
            if factor {
                z += 1;
            }
            trace.record(phase, k, Branch::Terminal { factor });
            return z;
        }
        levels_left -= 1;
        let l = q.pow(levels_left);
        let block = l * k;
        let mut count = 0usize;
        loop {
            let columns = fold(field, &a, p * block);
            if chunks_all_equal(&columns, block) {
                count += 1;
                if count == q {
                    trace.record(phase, block, Branch::Exhausted);
                    return z;
                }
                prime_update_in_place(field, &mut a, block, p);
                trace.update_passes += 1;
            } else {
                z += ((q - count - 1) * l) as u64;
                trace.record(
                    phase,
                    block,
                    Branch::Reduced {
                        count: count as u32,
                    },
                );
                a = columns;
                break;
            }
        }
    }
}

fn require_q_matches(s: &PeriodicSequence) -> Result<()> {
    if u64::from(s.field().modulus()) != s.shape().q() {
        return Err(Error::Usage("sequence field and shape disagree".into()));
    }
    Ok(())
}

/// Linear complexity of a sequence with period qⁿ.
pub fn lc_period_qn(s: &PeriodicSequence) -> Result<LinearComplexityResult> {
    require_q_matches(s)?;
    if s.shape().m() != 0 {
        return Err(Error::Usage(format!(
            "period {} is not a power of {}",
            s.len(),
            s.shape().q()
        )));
    }
    let mut acc = Accumulator::new();
    run_qpower(s.field(), s.symbols().to_vec(), &mut acc);
    Ok(acc.finish(s.field()))
}

/// Linear complexity of a sequence with period pᵐ, q a primitive root
/// modulo p².
pub fn lc_period_pm(s: &PeriodicSequence) -> Result<LinearComplexityResult> {
    require_q_matches(s)?;
    let shape = s.shape();
    if shape.n() != 0 {
        return Err(Error::Usage(format!(
            "period {} is divisible by the characteristic {}",
            s.len(),
            shape.q()
        )));
    }
    let mut acc = Accumulator::new();
    match shape.p() {
        Some(p) => run_ppower(s.field(), p as usize, s.symbols().to_vec(), &mut acc),
        // N = 1
        None => run_qpower(s.field(), s.symbols().to_vec(), &mut acc),
    }
    Ok(acc.finish(s.field()))
}

/// The Φ_{p^m}-power part of a minimal polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiPart {
    /// Exponent z of Φ_{p^m}(x) in f_s(x).
    pub z: u64,
    /// Φ_{p^m}(x)^z in factored form (empty product when z = 0).
    pub contribution: FactoredPolynomial,
    /// (p − 1)·p^{m−1}·z.
    pub complexity: usize,
    pub trace: AlgorithmTrace,
}

pub fn phi_part(s: &PeriodicSequence) -> Result<PhiPart> {
    require_q_matches(s)?;
    let shape = s.shape();
    let p = shape
        .p()
        .ok_or_else(|| Error::Usage("the Φ part needs m >= 1".into()))?;
    let mut trace = AlgorithmTrace::default();
    let z = run_phi_part(
        s.field(),
        p as usize,
        shape.n(),
        shape.m(),
        s.symbols().to_vec(),
        &mut trace,
    );
    let label = FactorLabel::CyclotomicPrimePower { p, k: shape.m() };
    let mut contribution = FactoredPolynomial::one();
    contribution.multiply(label, z);
    Ok(PhiPart {
        z,
        complexity: label.degree() * z as usize,
        contribution,
        trace,
    })
}

/// Linear complexity and minimal polynomial for any certified period qⁿpᵐ.
///
/// For m ≥ 1 and n ≥ 1, f_s(x) = f_b(x)·Φ_{p^m}(x)^z where b folds the
/// period down to N/p; this peels one Φ level at a time and finishes with
/// the qⁿ procedure.
pub fn lc_general(s: &PeriodicSequence) -> Result<LinearComplexityResult> {
    require_q_matches(s)?;
    let shape = s.shape();
    let field = s.field();
    if shape.m() == 0 {
        return lc_period_qn(s);
    }
    if shape.n() == 0 {
        return lc_period_pm(s);
    }
    let p = shape.p().expect("m >= 1") as usize;
    let mut acc = Accumulator::new();
    let mut a = s.symbols().to_vec();
    for m in (1..=shape.m()).rev() {
        if is_all_zero(&a) {
            return Ok(acc.finish(field));
        }
        // b must be taken before the Φ pass rewrites the blocks
        let b = fold(field, &a, a.len() / p);
        let z = run_phi_part(field, p, shape.n(), m, a, &mut acc.trace);
        let label = FactorLabel::CyclotomicPrimePower { p: p as u64, k: m };
        acc.complexity += label.degree() * z as usize;
        acc.factored.multiply(label, z);
        a = b;
    }
    run_qpower(field, a, &mut acc);
    Ok(acc.finish(field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::cyclotomic_prime_power;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn seq(q: u64, s: &[i64]) -> PeriodicSequence {
        PeriodicSequence::new(q, s).unwrap()
    }

    fn poly(q: u64, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(gf(q), c)
    }

    const SIX: [u32; 6] = [0, 1, 1, 0, 1, 1];

    #[test]
    fn split_blocks_examples() {
        let d = split_blocks(gf(2), &SIX, 1).unwrap();
        assert_eq!(d.num_blocks(), 6);
        assert_eq!(
            d.blocks().collect::<Vec<_>>(),
            vec![&[0], &[1], &[1], &[0], &[1], &[1]]
        );
        let d = split_blocks(gf(2), &SIX, 3).unwrap();
        assert_eq!(d.blocks().collect::<Vec<_>>(), vec![&[0, 1, 1], &[0, 1, 1]]);
        assert!(matches!(
            split_blocks(gf(2), &[0; 12], 5),
            Err(Error::Internal(_))
        ));
        assert!(split_blocks(gf(2), &[0; 12], 0).is_err());
    }

    #[test]
    fn column_sums_examples() {
        let d = split_blocks(gf(2), &SIX, 1).unwrap();
        assert_eq!(
            column_sums(&d, 3, 2).unwrap(),
            vec![vec![0], vec![0], vec![0]]
        );
        let z = split_blocks(gf(3), &[0; 12], 2).unwrap();
        assert_eq!(column_sums(&z, 3, 2).unwrap(), vec![vec![0, 0]; 3]);
        // one row: the blocks themselves
        let d = split_blocks(gf(5), &[1, 2, 3], 1).unwrap();
        assert_eq!(
            column_sums(&d, 3, 1).unwrap(),
            vec![vec![1], vec![2], vec![3]]
        );
        assert!(matches!(column_sums(&d, 2, 2), Err(Error::Internal(_))));
    }

    #[test]
    fn phi_divisibility_examples() {
        let d = split_blocks(gf(2), &SIX, 1).unwrap();
        assert!(phi_divisibility_holds(&d, 3, 2).unwrap());
        let z = split_blocks(gf(2), &[0; 6], 1).unwrap();
        assert!(phi_divisibility_holds(&z, 3, 2).unwrap());
        let d = split_blocks(gf(2), &[1, 0, 0, 0, 0, 0], 1).unwrap();
        assert!(!phi_divisibility_holds(&d, 3, 2).unwrap());
    }

    #[test]
    fn prime_update_examples() {
        let z = split_blocks(gf(2), &[0; 6], 1).unwrap();
        assert_eq!(prime_update(&z, 3, 2).unwrap().symbols(), &[0; 6]);

        // (x + x² + x⁴ + x⁵) / (1 + x + x²) = x + x³
        let d = split_blocks(gf(2), &SIX, 1).unwrap();
        let updated = prime_update(&d, 3, 2).unwrap();
        assert_eq!(updated.symbols(), &[0, 1, 0, 1, 0, 0]);
        let (quo, rem) = d.to_polynomial().divmod(&poly(2, &[1, 1, 1])).unwrap();
        assert!(rem.is_zero());
        assert_eq!(updated.to_polynomial(), quo);

        let bad = split_blocks(gf(2), &[1, 0, 0, 0, 0, 0], 1).unwrap();
        assert!(matches!(prime_update(&bad, 3, 2), Err(Error::Internal(_))));
    }

    #[test]
    fn prime_update_matches_term_by_term_schedule() {
        // A′ written out term by term for q = 3, p = 3 against the blockwise
        // recurrence
        let f = gf(3);
        let blocks: Vec<u32> = vec![1, 2, 0, 2, 1, 1, 0, 0, 2];
        let a = |i: usize| blocks[i - 1] as i64;
        let expected: Vec<i64> = vec![
            a(1),
            -a(1) + a(2),
            -a(2) + a(3),
            -a(3) + a(1) + a(4),
            -a(1) - a(4) + a(2) + a(5),
            -a(2) - a(5) + a(3) + a(6),
            -a(3) - a(6) + a(1) + a(4) + a(7),
            -a(1) - a(4) - a(7) + a(2) + a(5) + a(8),
            -a(2) - a(5) - a(8) + a(3) + a(6) + a(9),
        ];
        let mut data = blocks.clone();
        prime_update_in_place(f, &mut data, 1, 3);
        let expected: Vec<u32> = expected.iter().map(|&v| f.reduce(v)).collect();
        assert_eq!(data, expected);
    }

    #[test]
    fn b_sequence_examples() {
        let b = b_sequence(&seq(2, &[0, 1, 1, 0, 1, 1])).unwrap();
        assert_eq!(b.symbols(), &[0, 0]);
        assert_eq!((b.shape().n(), b.shape().m()), (1, 0));
        let b = b_sequence(&seq(3, &[0; 45])).unwrap();
        assert!(b.is_zero());
        assert_eq!(b.len(), 9);
        assert!(matches!(
            b_sequence(&seq(2, &[1, 0, 1, 1])),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn lc_period_pm_examples() {
        let r = lc_period_pm(&seq(2, &[0; 9])).unwrap();
        assert_eq!(
            (r.complexity, r.expanded.clone()),
            (0, Polynomial::one(gf(2)))
        );
        let r = lc_period_pm(&seq(2, &[1; 9])).unwrap();
        assert_eq!((r.complexity, r.expanded), (1, poly(2, &[1, 1])));
        let r = lc_period_pm(&seq(2, &[1, 0, 0, 1, 0, 0, 1, 0, 0])).unwrap();
        assert_eq!(r.complexity, 3);
        assert_eq!(r.expanded, poly(2, &[1, 0, 0, 1]));
        assert!(matches!(
            lc_period_pm(&seq(2, &[1, 0])),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn lc_period_qn_examples() {
        let r = lc_period_qn(&seq(2, &[1, 1])).unwrap();
        assert_eq!((r.complexity, r.expanded), (1, poly(2, &[1, 1])));
        let r = lc_period_qn(&seq(3, &[1; 9])).unwrap();
        assert_eq!((r.complexity, r.expanded), (1, poly(3, &[2, 1])));
        let r = lc_period_qn(&seq(2, &[1, 0, 0, 0])).unwrap();
        assert_eq!((r.complexity, r.expanded), (4, poly(2, &[1, 0, 0, 0, 1])));
        assert!(matches!(
            lc_period_qn(&seq(2, &[1; 6])),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn phi_part_examples() {
        let r = phi_part(&seq(2, &[0; 6])).unwrap();
        assert_eq!((r.z, r.complexity), (0, 0));
        assert!(r.contribution.is_one());

        let r = phi_part(&seq(2, &[0, 1, 1, 0, 1, 1])).unwrap();
        assert_eq!((r.z, r.complexity), (1, 2));
        assert_eq!(
            r.contribution.expand(gf(2)),
            cyclotomic_prime_power(3, 1, gf(2)).unwrap()
        );

        let r = phi_part(&seq(2, &[1; 6])).unwrap();
        assert_eq!((r.z, r.complexity), (0, 0));

        assert!(matches!(phi_part(&seq(2, &[1; 8])), Err(Error::Usage(_))));
    }

    #[test]
    fn lc_general_examples() {
        let r = lc_general(&seq(2, &[0; 6])).unwrap();
        assert_eq!((r.complexity, r.expanded), (0, Polynomial::one(gf(2))));
        let r = lc_general(&seq(2, &[0, 1, 1, 0, 1, 1])).unwrap();
        assert_eq!((r.complexity, r.expanded), (2, poly(2, &[1, 1, 1])));
    }

    #[test]
    fn dispatch_covers_degenerate_shapes() {
        // N = 1
        let r = lc_general(&seq(5, &[3])).unwrap();
        assert_eq!((r.complexity, r.expanded), (1, poly(5, &[4, 1])));
        let r = lc_general(&seq(5, &[0])).unwrap();
        assert_eq!(r.complexity, 0);
        // pure q-power and pure p-power
        assert_eq!(lc_general(&seq(2, &[1, 0, 0, 0])).unwrap().complexity, 4);
        assert_eq!(lc_general(&seq(2, &[1, 0, 0])).unwrap().complexity, 3);
    }

    #[test]
    fn factored_and_expanded_agree() {
        let s = seq(2, &[1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0]);
        let r = lc_general(&s).unwrap();
        let fp = r.factored.as_ref().unwrap();
        assert_eq!(fp.degree(), r.complexity);
        assert_eq!(fp.expand(gf(2)).monic(), r.expanded);
        let modulus = Polynomial::x_pow_minus_one(gf(2), 12);
        assert!(modulus.divmod(&r.expanded).unwrap().1.is_zero());
    }
}
