//! Timing of the closed-form denominator formulas against the direct
//! Bernoulli-number route.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::bernoulli::BernoulliCache;
use crate::denom::{d_direct, d_formula, db_direct, db_formula, dd_direct, dd_formula};
use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::seq::SequenceId;

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub sequence: SequenceId,
    pub from: u64,
    pub to: u64,
    pub reps: u32,
    pub formula_time: Duration,
    pub oracle_time: Duration,
    /// `oracle_time / formula_time`.
    pub speedup: Rational,
}

impl BenchRecord {
    pub const CSV_HEADER: &'static str = "sequence,from,to,reps,formula_ns,oracle_ns,speedup";

    pub fn csv_row(&self) -> String {
        let approx = self.speedup.to_f64().unwrap_or(f64::NAN);
        format!(
            "{},{},{},{},{},{},{:.3}",
            self.sequence,
            self.from,
            self.to,
            self.reps,
            self.formula_time.as_nanos(),
            self.oracle_time.as_nanos(),
            approx
        )
    }
}

fn formula_terms(id: SequenceId, from: u64, to: u64) -> Result<Vec<BigInt>> {
    (from..=to)
        .map(|n| {
            Ok(match id {
                SequenceId::D => d_formula(n)?.into_value(),
                SequenceId::Dd => dd_formula(n)?.into_value(),
                SequenceId::Db => db_formula(n)?.into_value(),
                _ => unreachable!(),
            })
        })
        .collect()
}

// A fresh cache each call, so Bernoulli numbers are part of the oracle cost.
fn oracle_terms(id: SequenceId, from: u64, to: u64) -> Result<Vec<BigInt>> {
    let mut cache = BernoulliCache::new();
    (from..=to)
        .map(|n| match id {
            SequenceId::D => d_direct(&mut cache, n),
            SequenceId::Dd => dd_direct(&mut cache, n),
            SequenceId::Db => db_direct(&mut cache, n),
            _ => unreachable!(),
        })
        .collect()
}

/// Checks both routes agree on `from..=to`, then times `reps` runs of each.
pub fn run_bench(id: SequenceId, from: u64, to: u64, reps: u32) -> Result<BenchRecord> {
    if !matches!(id, SequenceId::D | SequenceId::Dd | SequenceId::Db) {
        return Err(Error::domain(format!("no oracle route for sequence {id}; use D, DD or DB")));
    }
    if from == 0 || from > to {
        return Err(Error::domain(format!("invalid range {from}..={to}")));
    }
    if reps == 0 {
        return Err(Error::domain("repetitions must be at least 1"));
    }
    let fast = formula_terms(id, from, to)?;
    let slow = oracle_terms(id, from, to)?;
    if let Some(i) = fast.iter().zip(&slow).position(|(a, b)| a != b) {
        return Err(Error::violation(format!(
            "{id}_{}: formula gives {}, direct computation gives {}",
            from + i as u64,
            fast[i],
            slow[i]
        )));
    }

    let time = |f: &dyn Fn() -> Result<Vec<BigInt>>| -> Result<Duration> {
        let start = Instant::now();
        for _ in 0..reps {
            std::hint::black_box(f()?);
        }
        Ok(start.elapsed())
    };
    let formula_time = time(&|| formula_terms(id, from, to))?;
    let oracle_time = time(&|| oracle_terms(id, from, to))?;
    let speedup = Rational::new(
        BigInt::from(oracle_time.as_nanos()),
        BigInt::from(formula_time.as_nanos().max(1)),
    );
    Ok(BenchRecord {
        sequence: id,
        from,
        to,
        reps,
        formula_time,
        oracle_time,
        speedup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_small_range() {
        for id in [SequenceId::D, SequenceId::Dd, SequenceId::Db] {
            let rec = run_bench(id, 1, 40, 1).unwrap();
            assert_eq!(rec.csv_row().split(',').count(), 7);
        }
    }

    #[test]
    fn bench_rejects_bad_input() {
        assert!(run_bench(SequenceId::Ddq, 1, 10, 1).is_err());
        assert!(run_bench(SequenceId::D, 5, 1, 1).is_err());
        assert!(run_bench(SequenceId::D, 1, 5, 0).is_err());
    }
}
