//! The `analyze` subcommand: run the fast algorithm, optionally cross-check
//! it, and render the result.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use lincomp_core::oracle::berlekamp_massey_periodic;
use lincomp_core::{
    lc_general, lfsr_regenerate, naive_minpoly, FactorLabel, LfsrSpec, LinearComplexityResult,
    PeriodicSequence, Polynomial,
};

use crate::error::{CliError, CliResult};

/// Machine-readable analysis result. Field names are part of the CLI's
/// stable output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub q: u64,
    /// `null` when the period is a pure power of q.
    pub p: Option<u64>,
    pub n: u32,
    pub m: u32,
    #[serde(rename = "N")]
    pub len: usize,
    pub linear_complexity: usize,
    pub minimal_polynomial: MinimalPolynomial,
    pub loop_count: usize,
    pub oracle_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPolynomial {
    /// Ascending coefficients of the monic minimal polynomial.
    pub coefficients: Vec<u32>,
    pub text: String,
    /// Factors as found by the algorithm. Their product is the minimal
    /// polynomial up to a sign, since (1 − x^M) is not monic.
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub label: String,
    pub exponent: u64,
}

impl AnalysisReport {
    pub fn new(
        s: &PeriodicSequence,
        result: &LinearComplexityResult,
        oracle_checked: bool,
    ) -> Self {
        let shape = s.shape();
        let factors = result
            .factored
            .as_ref()
            .map(|f| {
                f.factors()
                    .iter()
                    .map(|(label, exponent)| Factor {
                        label: label.to_string(),
                        exponent: *exponent,
                    })
                    .collect()
            })
            .unwrap_or_default();
        Self {
            q: shape.q(),
            p: shape.p(),
            n: shape.n(),
            m: shape.m(),
            len: shape.len(),
            linear_complexity: result.complexity,
            minimal_polynomial: MinimalPolynomial {
                coefficients: result.expanded.coeffs().to_vec(),
                text: result.expanded.to_string(),
                factors,
            },
            loop_count: result.trace.loop_count,
            oracle_checked,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned `key  value` lines for humans.
    pub fn to_text(&self) -> String {
        let period = match self.p {
            Some(p) => format!("{} = {}^{} * {}^{}", self.len, self.q, self.n, p, self.m),
            None => format!("{} = {}^{}", self.len, self.q, self.n),
        };
        let factors = if self.minimal_polynomial.factors.is_empty() {
            "1".to_string()
        } else {
            self.minimal_polynomial
                .factors
                .iter()
                .map(|f| match f.exponent {
                    1 => f.label.clone(),
                    e => format!("{}^{e}", f.label),
                })
                .collect::<Vec<_>>()
                .join(" * ")
        };
        let coefficients: Vec<String> = self
            .minimal_polynomial
            .coefficients
            .iter()
            .map(u32::to_string)
            .collect();
        let rows = [
            ("field", format!("GF({})", self.q)),
            ("period", period),
            ("linear complexity", self.linear_complexity.to_string()),
            ("minimal polynomial", self.minimal_polynomial.text.clone()),
            ("coefficients", format!("[{}]", coefficients.join(","))),
            ("factors", factors),
            ("loop count", self.loop_count.to_string()),
            (
                "oracle check",
                if self.oracle_checked {
                    "passed"
                } else {
                    "not run"
                }
                .to_string(),
            ),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in rows {
            writeln!(out, "{key:<width$}  {value}").unwrap();
        }
        out
    }
}

/// Deliberate corruption of the fast result, used to prove that `--verify`
/// notices when the algorithm is wrong. One spurious factor (1 − x) is
/// multiplied in, so the complexity is always off by one.
pub fn inject_fault(result: &mut LinearComplexityResult) {
    let field = result.expanded.field();
    let extra = Polynomial::from_ints(field, &[-1, 1]);
    result.expanded = result.expanded.mul(&extra).expect("same field");
    result.complexity += 1;
    if let Some(f) = result.factored.as_mut() {
        f.multiply(FactorLabel::Linear, 1);
    }
}

/// Compares a fast result against the gcd oracle, Berlekamp-Massey on two
/// periods, and LFSR regeneration of the period.
pub fn verify(s: &PeriodicSequence, fast: &LinearComplexityResult) -> CliResult<()> {
    let naive = naive_minpoly(s);
    if fast.complexity != naive.complexity || fast.expanded != naive.expanded {
        return Err(CliError::Mismatch(format!(
            "fast algorithm gives c = {} with {}, gcd oracle gives c = {} with {}",
            fast.complexity, fast.expanded, naive.complexity, naive.expanded
        )));
    }
    let bm = berlekamp_massey_periodic(s);
    if bm.length != fast.complexity || bm.connection != fast.expanded {
        return Err(CliError::Mismatch(format!(
            "fast algorithm gives c = {}, Berlekamp-Massey gives L = {} with {}",
            fast.complexity, bm.length, bm.connection
        )));
    }
    if fast.complexity > 0 {
        let spec = LfsrSpec::new(
            fast.expanded.clone(),
            s.symbols()[..fast.complexity].to_vec(),
        )?;
        if lfsr_regenerate(&spec, s.len()) != s.symbols() {
            return Err(CliError::Mismatch(
                "minimal polynomial does not regenerate the input".into(),
            ));
        }
    } else if !s.is_zero() {
        return Err(CliError::Mismatch(
            "complexity 0 for a nonzero sequence".into(),
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub verify: bool,
    pub inject_fault: bool,
}

/// Outcome of `analyze`. A failed verification still yields a report (with
/// `oracle_checked = false`) alongside the error, so callers can print both.
pub struct Analysis {
    pub report: AnalysisReport,
    pub verification: CliResult<()>,
}

pub fn analyze(s: &PeriodicSequence, opts: AnalyzeOptions) -> CliResult<Analysis> {
    let mut result = lc_general(s)?;
    if opts.inject_fault {
        inject_fault(&mut result);
    }
    let verification = if opts.verify {
        verify(s, &result)
    } else {
        Ok(())
    };
    let checked = opts.verify && verification.is_ok();
    Ok(Analysis {
        report: AnalysisReport::new(s, &result, checked),
        verification,
    })
}
