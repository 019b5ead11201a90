//! The `bench` subcommand: time the fast algorithm (and optionally
//! Berlekamp-Massey) over a grid of period shapes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use lincomp_core::numtheory::PeriodShape;
use lincomp_core::oracle::berlekamp_massey_periodic;
use lincomp_core::{lc_general, Error, PeriodicSequence};

use crate::error::{CliError, CliResult};

pub const CSV_HEADER: &str = "q,p,n,m,N,algo,mean_seconds,loop_count_max";

/// Berlekamp-Massey is quadratic; by default rows above this period are
/// skipped.
pub const BM_MAX_LEN: usize = 10_000;

/// Parses an inclusive range written `a..b`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("`{text}` is not a range of the form a..b"))?;
    let a: u32 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in `{text}`"))?;
    let b: u32 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end in `{text}`"))?;
    if a > b {
        return Err(format!("empty range `{text}`"));
    }
    Ok(a..=b)
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub q: u64,
    pub p: u64,
    pub n_range: RangeInclusive<u32>,
    pub m_range: RangeInclusive<u32>,
    pub trials: usize,
    pub with_bm: bool,
    pub seed: u64,
    /// Largest period the grid may contain.
    pub max_len: usize,
    /// Largest period Berlekamp-Massey is run on.
    pub bm_max_len: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub shape: PeriodShape,
    pub algo: &'static str,
    pub mean_seconds: f64,
    /// Absent for Berlekamp-Massey, which has no block loop.
    pub loop_count_max: Option<usize>,
}

impl BenchRow {
    fn csv_line(&self) -> String {
        let s = &self.shape;
        let loops = self
            .loop_count_max
            .map(|l| l.to_string())
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{:.6e},{}",
            s.q(),
            // empty for m = 0, where the period has no p part
            s.p().map(|p| p.to_string()).unwrap_or_default(),
            s.n(),
            s.m(),
            s.len(),
            self.algo,
            self.mean_seconds,
            loops
        )
    }
}

/// [n(q−1)+1](m+1), the most block levels the fast algorithm may visit.
pub fn loop_bound(shape: &PeriodShape) -> usize {
    (shape.n() as usize * (shape.q() as usize - 1) + 1) * (shape.m() as usize + 1)
}

/// Validates the grid and returns its shapes in output order (n outer,
/// m inner).
pub fn grid(cfg: &BenchConfig) -> CliResult<Vec<PeriodShape>> {
    if cfg.trials == 0 {
        return Err(Error::Usage("--trials must be at least 1".into()).into());
    }
    let mut shapes = Vec::new();
    for n in cfg.n_range.clone() {
        for m in cfg.m_range.clone() {
            let shape = PeriodShape::new(cfg.q, cfg.p, n, m)?;
            if shape.len() > cfg.max_len {
                return Err(Error::Usage(format!(
                    "period {shape} exceeds the cap of {} (raise --max-len to allow it)",
                    cfg.max_len
                ))
                .into());
            }
            shapes.push(shape);
        }
    }
    Ok(shapes)
}

fn random_sequence(shape: PeriodShape, rng: &mut ChaCha8Rng) -> PeriodicSequence {
    let q = shape.q() as u32;
    let symbols = (0..shape.len()).map(|_| rng.gen_range(0..q)).collect();
    PeriodicSequence::with_shape(shape, symbols).expect("shape was certified")
}

fn bench_shape(cfg: &BenchConfig, index: usize, shape: PeriodShape) -> CliResult<Vec<BenchRow>> {
    // one generator per shape, so results do not depend on scheduling
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
    let run_bm = cfg.with_bm && shape.len() <= cfg.bm_max_len;
    let mut fast_time = 0.0;
    let mut bm_time = 0.0;
    let mut loop_max = 0;
    for _ in 0..cfg.trials {
        let s = random_sequence(shape, &mut rng);
        let start = Instant::now();
        let r = lc_general(&s)?;
        fast_time += start.elapsed().as_secs_f64();
        loop_max = loop_max.max(r.trace.loop_count);
        if run_bm {
            let start = Instant::now();
            let bm = berlekamp_massey_periodic(&s);
            bm_time += start.elapsed().as_secs_f64();
            if bm.length != r.complexity {
                return Err(CliError::Mismatch(format!(
                    "period {shape}: fast c = {}, Berlekamp-Massey L = {}",
                    r.complexity, bm.length
                )));
            }
        }
    }
    if loop_max > loop_bound(&shape) {
        return Err(CliError::Mismatch(format!(
            "period {shape}: loop count {loop_max} exceeds the bound {}",
            loop_bound(&shape)
        )));
    }
    let trials = cfg.trials as f64;
    let mut rows = vec![BenchRow {
        shape,
        algo: "fast",
        mean_seconds: fast_time / trials,
        loop_count_max: Some(loop_max),
    }];
    if run_bm {
        rows.push(BenchRow {
            shape,
            algo: "bm",
            mean_seconds: bm_time / trials,
            loop_count_max: None,
        });
    }
    Ok(rows)
}

/// Runs the whole grid. Shapes are timed in parallel; rows come back in
/// grid order.
pub fn run(cfg: &BenchConfig) -> CliResult<Vec<BenchRow>> {
    let shapes = grid(cfg)?;
    let per_shape: Vec<CliResult<Vec<BenchRow>>> = shapes
        .into_par_iter()
        .enumerate()
        .map(|(i, shape)| bench_shape(cfg, i, shape))
        .collect();
    let mut rows = Vec::new();
    for r in per_shape {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn to_csv(cfg: &BenchConfig, rows: &[BenchRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# seed={} q={} p={} trials={} generator=ChaCha8",
        cfg.seed, cfg.q, cfg.p, cfg.trials
    )
    .unwrap();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for row in rows {
        writeln!(out, "{}", row.csv_line()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: &str, m: &str) -> BenchConfig {
        BenchConfig {
            q: 2,
            p: 3,
            n_range: parse_range(n).unwrap(),
            m_range: parse_range(m).unwrap(),
            trials: 2,
            with_bm: false,
            seed: 7,
            max_len: 1 << 20,
            bm_max_len: BM_MAX_LEN,
        }
    }

    fn data_lines(csv: &str) -> Vec<&str> {
        csv.lines()
            .filter(|l| !l.starts_with('#'))
            .skip(1)
            .collect()
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("1..3").unwrap(), 1..=3);
        assert_eq!(parse_range("0..0").unwrap(), 0..=0);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("1-3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn grid_size_and_order() {
        let shapes = grid(&config("1..3", "1..6")).unwrap();
        assert_eq!(shapes.len(), 18);
        assert_eq!((shapes[0].n(), shapes[0].m()), (1, 1));
        assert_eq!((shapes[1].n(), shapes[1].m()), (1, 2));
        assert_eq!((shapes[17].n(), shapes[17].m()), (3, 6));
    }

    #[test]
    fn cap_is_enforced() {
        let mut cfg = config("1..3", "1..6");
        cfg.max_len = 1000;
        let err = grid(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("exceeds the cap"));
    }

    #[test]
    fn invalid_shape_is_rejected() {
        let mut cfg = config("1..1", "1..1");
        cfg.p = 7;
        assert!(matches!(
            grid(&cfg),
            Err(CliError::Core(Error::Precondition(_)))
        ));
        cfg.trials = 0;
        assert!(grid(&cfg).is_err());
    }

    #[test]
    fn csv_layout() {
        let cfg = config("1..2", "0..2");
        let rows = run(&cfg).unwrap();
        let csv = to_csv(&cfg, &rows);
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("# seed=7"));
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let data = data_lines(&csv);
        assert_eq!(data.len(), 6);
        assert!(data[0].starts_with("2,,1,0,2,fast,"));
        assert!(data[1].starts_with("2,3,1,1,6,fast,"));
        for line in data {
            assert_eq!(line.split(',').count(), 8);
        }
    }

    #[test]
    fn loop_counts_respect_bound() {
        let cfg = config("0..3", "0..4");
        for row in run(&cfg).unwrap() {
            assert!(row.loop_count_max.unwrap() <= loop_bound(&row.shape));
        }
    }

    #[test]
    fn bm_rows_only_below_limit() {
        let mut cfg = config("1..2", "1..2");
        cfg.with_bm = true;
        cfg.bm_max_len = 12;
        let rows = run(&cfg).unwrap();
        let algos: Vec<(usize, &str)> = rows.iter().map(|r| (r.shape.len(), r.algo)).collect();
        assert_eq!(
            algos,
            vec![
                (6, "fast"),
                (6, "bm"),
                (18, "fast"),
                (12, "fast"),
                (12, "bm"),
                (36, "fast")
            ]
        );
    }

    #[test]
    fn loop_counts_are_reproducible() {
        let cfg = config("1..2", "1..3");
        let a: Vec<_> = run(&cfg)
            .unwrap()
            .into_iter()
            .map(|r| r.loop_count_max)
            .collect();
        let b: Vec<_> = run(&cfg)
            .unwrap()
            .into_iter()
            .map(|r| r.loop_count_max)
            .collect();
        assert_eq!(a, b);
    }
}
