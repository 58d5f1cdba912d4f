//! Range sweeps that check the denominator and integrality theorems against
//! direct computation.
//!
//! Each sweep partitions its outer index range over a rayon pool. Every
//! worker clones its own [`BernoulliCache`]; failures are merged in index
//! order so reports are deterministic regardless of the job count.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use crate::bernoulli::{binomial, BernoulliCache};
use crate::denom::{
    d_direct, d_formula, db_direct, db_formula, db_from_dd_and_d, db_from_next_radical,
    db_product_form, db_quotient, dd_direct, dd_formula, dd_formula_unbounded, dd_quotient,
};
use crate::digits::{is_prime, p_valuation_u64, primes_up_to, radical};
use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::powersum::{
    am_integer, c_coeff, congruence_holds, is_integral, power_sum_denominator,
    power_sum_naive_prefix, ProgressionFamily,
};

/// Which identity a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `DD_n` odd exactly at powers of two.
    T1Parity,
    /// Closed-form power-sum denominator vs. the polynomial.
    T2Denominator,
    /// Integrality of `SP` vs. `DB_n | m`.
    T3Integrality,
    /// Recurrences and divisibilities between consecutive `DD`, `DB`.
    C2Relations,
    /// Structure of `DD_n / DD_{n+1}`.
    T4Quotients,
    /// Structure of `DB_n / DB_{n+1}`.
    T5Quotients,
    /// `p^e | m^n(B_n(r/m) − B_n)` for `p ∤ m`, `e ≤ v_p(n)`.
    L1Congruence,
    /// Integrality of `m^n(B_n(r/m) − B_n)` and related sums.
    AmIntegrality,
    /// Closed forms for `D`, `DD`, `DB` vs. exact Bernoulli numbers.
    Oracle,
    /// Power-sum polynomial evaluated vs. naive summation.
    Evaluation,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T1Parity,
        TheoremId::T2Denominator,
        TheoremId::T3Integrality,
        TheoremId::C2Relations,
        TheoremId::T4Quotients,
        TheoremId::T5Quotients,
        TheoremId::L1Congruence,
        TheoremId::AmIntegrality,
        TheoremId::Oracle,
        TheoremId::Evaluation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1Parity => "T1-parity",
            TheoremId::T2Denominator => "T2-denominator",
            TheoremId::T3Integrality => "T3-integrality",
            TheoremId::C2Relations => "C2-relations",
            TheoremId::T4Quotients => "T4-quotients",
            TheoremId::T5Quotients => "T5-quotients",
            TheoremId::L1Congruence => "L1-congruence",
            TheoremId::AmIntegrality => "AM-integrality",
            TheoremId::Oracle => "oracle",
            TheoremId::Evaluation => "evaluation",
        }
    }

    /// Default bounds.
    pub fn default_config(self) -> SweepConfig {
        let (max_n, m_max, r_max) = match self {
            TheoremId::T1Parity => (4096, 0, 0),
            TheoremId::T2Denominator => (60, 30, 3),
            TheoremId::T3Integrality => (60, 60, 3),
            TheoremId::C2Relations => (2000, 0, 0),
            TheoremId::T4Quotients => (2047, 0, 0),
            TheoremId::T5Quotients => (2048, 0, 0),
            TheoremId::L1Congruence => (60, 20, 20),
            TheoremId::AmIntegrality => (80, 40, 40),
            TheoremId::Oracle => (300, 0, 0),
            TheoremId::Evaluation => (40, 12, 12),
        };
        SweepConfig {
            max_n,
            m_max,
            r_max,
            jobs: None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let known: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                Error::domain(format!("unknown theorem id {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

/// Sweep bounds. Fields a sweep does not use are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: u64,
    pub m_max: u64,
    pub r_max: u64,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

/// One counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(input: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Failure {
            input: input.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub theorem: TheoremId,
    pub range: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}]: {} checked, {} failures, {:.3}s",
            self.theorem,
            self.range,
            self.checked,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for fail in &self.failures {
            writeln!(f, "  FAIL {}: expected {}, got {}", fail.input, fail.expected, fail.actual)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, fail: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok {
            self.failures.push(fail());
        }
    }

    fn merge(parts: Vec<Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.checked += t.checked;
            acc.failures.extend(t.failures);
            acc
        })
    }
}

/// Runs `body` for every item of `items` in parallel with one Bernoulli
/// cache per worker, merging results in input order.
fn par_sweep<T, F>(items: Vec<T>, seed: &BernoulliCache, body: F) -> Result<Tally>
where
    T: Send + Sync,
    F: Fn(&mut BernoulliCache, &T, &mut Tally) -> Result<()> + Send + Sync,
{
    let parts: Result<Vec<Tally>> = items
        .par_iter()
        .map_init(
            || seed.clone(),
            |cache, item| {
                let mut t = Tally::default();
                body(cache, item, &mut t)?;
                Ok(t)
            },
        )
        .collect();
    Ok(Tally::merge(parts?))
}

/// Runs one sweep.
pub fn run(theorem: TheoremId, config: &SweepConfig) -> Result<SweepReport> {
    if config.max_n == 0 {
        return Err(Error::domain("max n must be at least 1"));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
    let start = Instant::now();
    let (range, tally) = pool.install(|| dispatch(theorem, config))?;
    Ok(SweepReport {
        theorem,
        range,
        checked: tally.checked,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

fn dispatch(theorem: TheoremId, c: &SweepConfig) -> Result<(String, Tally)> {
    let n = c.max_n;
    let range = match theorem {
        TheoremId::T1Parity
        | TheoremId::C2Relations
        | TheoremId::T4Quotients
        | TheoremId::T5Quotients
        | TheoremId::Oracle => format!("n<={n}"),
        TheoremId::AmIntegrality => format!("n<={n}, m<={}, |r|<={}", c.m_max, c.r_max),
        _ => format!("n<={n}, m<={}, r<={}", c.m_max, c.r_max),
    };
    let tally = match theorem {
        TheoremId::T1Parity => parity(n)?,
        TheoremId::T2Denominator => denominator_grid(n, c.m_max, c.r_max)?,
        TheoremId::T3Integrality => integrality_grid(n, c.m_max, c.r_max)?,
        TheoremId::C2Relations => consecutive_relations(n)?,
        TheoremId::T4Quotients => dd_quotients(n)?,
        TheoremId::T5Quotients => db_quotients(n)?,
        TheoremId::L1Congruence => congruences(n, c.m_max, c.r_max)?,
        TheoremId::AmIntegrality => am_sweep(n, c.m_max, c.r_max)?,
        TheoremId::Oracle => oracle_equivalence(n)?,
        TheoremId::Evaluation => evaluation(n, c.m_max, c.r_max)?,
    };
    Ok((range, tally))
}

fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

fn parity(max_n: u64) -> Result<Tally> {
    let ns: Vec<u64> = (1..=max_n).collect();
    par_sweep(ns, &BernoulliCache::new(), |_, &n, t| {
        let dd = dd_formula(n)?;
        let odd = dd.value().is_odd();
        t.check(odd == is_power_of_two(n), || {
            Failure::new(
                format!("n={n}"),
                format!("odd={}", is_power_of_two(n)),
                format!("DD_n={dd}"),
            )
        });
        Ok(())
    })
}

fn oracle_equivalence(max_n: u64) -> Result<Tally> {
    let seed = BernoulliCache::filled(max_n + 1);
    let ns: Vec<u64> = (1..=max_n).collect();
    par_sweep(ns, &seed, |cache, &n, t| {
        let input = || format!("n={n}");
        let dd = dd_formula(n)?;
        let dd_unbounded = dd_formula_unbounded(n)?;
        let dd_dir = dd_direct(cache, n)?;
        t.check(dd.value() == &dd_dir, || Failure::new(input(), &dd_dir, &dd));
        t.check(dd == dd_unbounded, || Failure::new(input(), &dd, &dd_unbounded));
        let db_dir = db_direct(cache, n)?;
        for form in [db_from_dd_and_d(n)?, db_from_next_radical(n)?, db_product_form(n)?] {
            t.check(form.value() == &db_dir, || Failure::new(input(), &db_dir, &form));
        }
        let d = d_formula(n)?;
        let d_dir = d_direct(cache, n)?;
        t.check(d.value() == &d_dir, || Failure::new(input(), &d_dir, &d));
        Ok(())
    })
}

fn grid(m_max: u64, r_lo: i64, r_hi: u64) -> Vec<(BigInt, BigInt)> {
    (1..=m_max)
        .flat_map(|m| (r_lo..=r_hi as i64).map(move |r| (BigInt::from(m), BigInt::from(r))))
        .collect()
}

fn denominator_grid(max_n: u64, m_max: u64, r_max: u64) -> Result<Tally> {
    let seed = BernoulliCache::filled(max_n + 1);
    let ms: Vec<BigInt> = (1..=m_max).map(BigInt::from).collect();
    par_sweep(ms, &seed, |cache, m, t| {
        let families = (0..=r_max)
            .map(|r| ProgressionFamily::new(cache, m, &BigInt::from(r), max_n))
            .collect::<Result<Vec<_>>>()?;
        for n in 1..=max_n {
            let bound = BigInt::from(n + 1) * dd_formula(n + 1)?.value();
            let mut first: Option<BigInt> = None;
            for (r, fam) in families.iter().enumerate() {
                let spec = fam.spec(n)?;
                let input = || format!("m={m}, r={r}, n={n}");
                let direct = fam.poly(n).denominator();
                let formula = power_sum_denominator(&spec)?;
                t.check(direct == formula, || Failure::new(input(), &direct, &formula));
                t.check((&bound % &formula).is_zero(), || {
                    Failure::new(input(), format!("divisor of {bound}"), &formula)
                });
                match &first {
                    None => first = Some(direct),
                    Some(d0) => t.check(*d0 == direct, || {
                        Failure::new(input(), format!("r-independent {d0}"), &direct)
                    }),
                }
            }
        }
        Ok(())
    })
}

fn integrality_grid(max_n: u64, m_max: u64, r_max: u64) -> Result<Tally> {
    let seed = BernoulliCache::filled(max_n + 1);
    let dbs = (1..=max_n)
        .map(|n| db_formula(n).map(|d| d.into_value()))
        .collect::<Result<Vec<_>>>()?;
    par_sweep(grid(m_max, 0, r_max), &seed, |cache, (m, r), t| {
        let fam = ProgressionFamily::new(cache, m, r, max_n)?;
        for n in 1..=max_n {
            let spec = fam.spec(n)?;
            let input = || format!("m={m}, r={r}, n={n}");
            let coeffs_integral = fam.poly(n).is_integral();
            let verdict = is_integral(&spec)?;
            let divides = (m % &dbs[n as usize - 1]).is_zero();
            let denom_one = power_sum_denominator(&spec)?.is_one();
            t.check(verdict == coeffs_integral, || {
                Failure::new(input(), format!("integral={coeffs_integral}"), format!("is_integral={verdict}"))
            });
            t.check(divides == coeffs_integral, || {
                Failure::new(input(), format!("integral={coeffs_integral}"), format!("DB_n|m={divides}"))
            });
            t.check(denom_one == coeffs_integral, || {
                Failure::new(input(), format!("integral={coeffs_integral}"), format!("denominator==1: {denom_one}"))
            });
        }
        Ok(())
    })
}

fn evaluation(max_n: u64, m_max: u64, r_max: u64) -> Result<Tally> {
    const X_MAX: u64 = 20;
    let seed = BernoulliCache::filled(max_n + 1);
    par_sweep(grid(m_max, 0, r_max), &seed, |cache, (m, r), t| {
        let fam = ProgressionFamily::new(cache, m, r, max_n)?;
        for n in 1..=max_n {
            let spec = fam.spec(n)?;
            let poly = fam.poly(n);
            let naive = power_sum_naive_prefix(&spec, X_MAX);
            for (x, expected) in naive.iter().enumerate() {
                let got = poly.eval_integer(&BigInt::from(x));
                t.check(got == Rational::from_integer(expected.clone()), || {
                    Failure::new(format!("m={m}, r={r}, n={n}, x={x}"), expected, &got)
                });
            }
        }
        Ok(())
    })
}

fn consecutive_relations(max_n: u64) -> Result<Tally> {
    let ns: Vec<u64> = (1..=max_n).collect();
    par_sweep(ns, &BernoulliCache::new(), |_, &n, t| {
        let input = || format!("n={n}");
        let rad = radical(n + 1)?;
        let dd = dd_formula(n)?;
        if n + 1 > 3 && !is_prime(n + 1) {
            t.check(dd.checked_div(&rad).is_some(), || {
                Failure::new(input(), format!("rad(n+1)={rad} | DD_n"), &dd)
            });
        }
        let db = db_formula(n)?;
        t.check(db.is_even(), || Failure::new(input(), "DB_n even", &db));
        if n % 2 == 1 {
            let next = dd_formula(n + 1)?;
            if n >= 3 {
                let rel = next.lcm(&rad);
                t.check(rel == dd, || Failure::new(input(), &dd, format!("lcm(DD_(n+1), rad(n+1))={rel}")));
            }
            t.check(dd.checked_div(&next).is_some(), || {
                Failure::new(input(), format!("DD_(n+1)={next} | DD_n"), &dd)
            });
        } else {
            let next = db_formula(n + 1)?;
            let rel = next.lcm(&rad);
            t.check(rel == db, || Failure::new(input(), &db, format!("lcm(DB_(n+1), rad(n+1))={rel}")));
            t.check(db.checked_div(&next).is_some(), || {
                Failure::new(input(), format!("DB_(n+1)={next} | DB_n"), &db)
            });
        }
        Ok(())
    })
}

/// `(p, k, p^k)` for odd primes `p` and `k ≥ 1` with `p^k ≤ limit`.
fn odd_prime_powers(limit: u64) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for p in primes_up_to(limit).into_iter().skip(1) {
        let mut pk = p;
        let mut k = 1;
        while pk <= limit {
            out.push((p, k, pk));
            pk *= p;
            k += 1;
        }
    }
    out
}

fn dd_quotients(max_n: u64) -> Result<Tally> {
    let ns: Vec<u64> = (1..=max_n).step_by(2).collect();
    let mut t = par_sweep(ns, &BernoulliCache::new(), |_, &n, t| {
        let q = dd_quotient(n)?;
        let special = n >= 3 && is_power_of_two(n + 1);
        if special {
            t.check(q == BigInt::from(2), || Failure::new(format!("n={n}"), 2, &q));
        } else {
            t.check(q.is_odd(), || Failure::new(format!("n={n}"), "odd quotient", &q));
        }
        Ok(())
    })?;
    // n = 2^l p^k - 1
    for (p, _, pk) in odd_prime_powers(max_n + 1) {
        let mut l = 1u32;
        while pk << l <= max_n + 1 {
            let n = (pk << l) - 1;
            let q = dd_quotient(n)?;
            let input = format!("n=2^{l}*{pk}-1={n}");
            let pb = BigInt::from(p);
            t.check(q.is_one() || q == pb, || Failure::new(input.clone(), format!("1 or {p}"), &q));
            if (1u64 << l) < p {
                t.check(q == pb, || Failure::new(input.clone(), p, &q));
            }
            l += 1;
        }
    }
    Ok(t)
}

fn db_quotients(max_n: u64) -> Result<Tally> {
    let ns: Vec<u64> = (2..=max_n).step_by(2).collect();
    let mut t = par_sweep(ns, &BernoulliCache::new(), |_, &n, t| {
        let q = db_quotient(n)?;
        t.check(q.is_odd(), || Failure::new(format!("n={n}"), "odd quotient", &q));
        Ok(())
    })?;
    let powers = odd_prime_powers(max_n + 1);
    for &(p, k, pk) in &powers {
        let n = pk - 1;
        let q = db_quotient(n)?;
        t.check(q == BigInt::from(p), || Failure::new(format!("n={p}^{k}-1"), p, &q));
    }
    // n = p^k q^l - 1
    for &(p, k, pk) in &powers {
        for &(q, l, ql) in &powers {
            if p >= q || pk.saturating_mul(ql) > max_n + 1 {
                continue;
            }
            let n = pk * ql - 1;
            let quot = db_quotient(n)?;
            let input = format!("n={p}^{k}*{q}^{l}-1={n}");
            let allowed = [1, p, q, p * q].map(BigInt::from);
            t.check(allowed.contains(&quot), || Failure::new(input.clone(), format!("one of 1, {p}, {q}, {}", p * q), &quot));
            // s_p(q^l) < p when q^l < p, so p stays out of DB_{n+1}
            if ql < p {
                t.check((&quot % p).is_zero(), || Failure::new(input.clone(), format!("multiple of {p}"), &quot));
            }
            if pk < q {
                t.check((&quot % q).is_zero(), || Failure::new(input.clone(), format!("multiple of {q}"), &quot));
            }
        }
    }
    Ok(t)
}

fn congruences(max_n: u64, m_max: u64, r_max: u64) -> Result<Tally> {
    const P_MAX: u64 = 13;
    let seed = BernoulliCache::filled(max_n);
    let primes = primes_up_to(P_MAX);
    par_sweep(grid(m_max, 0, r_max), &seed, |cache, (m, r), t| {
        for n in 1..=max_n {
            let value = am_integer(cache, m, r, n)?.value;
            for &p in &primes {
                if (m % p).is_zero() {
                    continue;
                }
                for e in 0..=p_valuation_u64(p, n) {
                    let ok = congruence_holds(&value, m, n, p, e)?;
                    t.check(ok, || {
                        Failure::new(format!("m={m}, r={r}, n={n}, p={p}, e={e}"), "divisible", &value)
                    });
                }
            }
        }
        Ok(())
    })
}

fn am_sweep(max_n: u64, m_max: u64, r_max: u64) -> Result<Tally> {
    let seed = BernoulliCache::filled(max_n);
    let mut t = par_sweep(grid(m_max, -(r_max as i64), r_max), &seed, |cache, (m, r), t| {
        for n in 1..=max_n {
            match am_integer(cache, m, r, n) {
                Ok(_) => t.check(true, || unreachable!()),
                Err(Error::TheoremViolation(msg)) => {
                    t.check(false, || Failure::new(format!("m={m}, r={r}, n={n}"), "integer", msg))
                }
                Err(e) => return Err(e),
            }
        }
        Ok(())
    })?;
    let additive = additive_analog(max_n.min(25), m_max.min(8), r_max.min(6), &seed)?;
    let triple = coefficient_triples(max_n.min(30), m_max.min(12), r_max.min(12), &seed)?;
    t = Tally::merge(vec![t, additive, triple]);
    Ok(t)
}

/// `BP_{m,r1+r2}^n = Σ_{k=0}^{n} C(n,k)·BP_{m,r1}^k·r2^{n−k} + BP_{m,r2}^n`.
fn additive_analog(max_n: u64, m_max: u64, r_max: u64, seed: &BernoulliCache) -> Result<Tally> {
    let triples: Vec<(BigInt, BigInt, BigInt)> = grid(m_max, 0, r_max)
        .into_iter()
        .flat_map(|(m, r1)| (0..=r_max).map(move |r2| (m.clone(), r1.clone(), BigInt::from(r2))))
        .collect();
    par_sweep(triples, seed, |cache, (m, r1, r2), t| {
        let bp1 = (0..=max_n)
            .map(|k| am_integer(cache, m, r1, k).map(|a| a.value))
            .collect::<Result<Vec<_>>>()?;
        for n in 1..=max_n {
            let lhs = am_integer(cache, m, &(r1 + r2), n)?.value;
            let sum: BigInt = (0..=n)
                .map(|k| binomial(n, k) * &bp1[k as usize] * Pow::pow(r2, (n - k) as u32))
                .sum();
            let rhs = sum + am_integer(cache, m, r2, n)?.value;
            t.check(lhs == rhs, || Failure::new(format!("m={m}, r1={r1}, r2={r2}, n={n}"), &lhs, &rhs));
        }
        Ok(())
    })
}

/// `(m^n/(n+1))·C(n+1,k)·(B_k(r/m) − B_k)` is an integer and equals
/// `c_{n,k}·m^{n−k}·BP_{m,r}^k`.
fn coefficient_triples(max_n: u64, m_max: u64, r_max: u64, seed: &BernoulliCache) -> Result<Tally> {
    par_sweep(grid(m_max, 0, r_max), seed, |cache, (m, r), t| {
        let fam = ProgressionFamily::new(cache, m, r, max_n)?;
        for n in 1..=max_n {
            for k in 0..=n {
                let diff = fam.shifted_bernoulli(k) - cache.get(k).clone();
                let direct = Rational::new(Pow::pow(m, n as u32) * binomial(n + 1, k), BigInt::from(n + 1)) * diff;
                let input = || format!("m={m}, r={r}, n={n}, k={k}");
                t.check(direct.is_integer(), || Failure::new(input(), "integer", &direct));
                if k >= 1 {
                    let bp = am_integer(cache, m, r, k)?.value;
                    let triple = c_coeff(n, k)? * Rational::from_integer(Pow::pow(m, (n - k) as u32) * bp);
                    t.check(triple == direct, || Failure::new(input(), &direct, &triple));
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(theorem: TheoremId, max_n: u64, m_max: u64, r_max: u64) -> SweepReport {
        let cfg = SweepConfig {
            max_n,
            m_max,
            r_max,
            jobs: Some(2),
        };
        run(theorem, &cfg).unwrap()
    }

    #[test]
    fn small_sweeps_pass() {
        for (t, n, m, r) in [
            (TheoremId::T1Parity, 300, 0, 0),
            (TheoremId::T2Denominator, 12, 6, 2),
            (TheoremId::T3Integrality, 10, 12, 1),
            (TheoremId::C2Relations, 200, 0, 0),
            (TheoremId::T4Quotients, 255, 0, 0),
            (TheoremId::T5Quotients, 256, 0, 0),
            (TheoremId::L1Congruence, 16, 5, 5),
            (TheoremId::AmIntegrality, 12, 5, 5),
            (TheoremId::Oracle, 40, 0, 0),
            (TheoremId::Evaluation, 8, 4, 3),
        ] {
            let report = small(t, n, m, r);
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0, "{t}");
        }
    }

    #[test]
    fn job_count_does_not_change_report() {
        let a = small(TheoremId::T2Denominator, 10, 5, 2);
        let b = run(
            TheoremId::T2Denominator,
            &SweepConfig { max_n: 10, m_max: 5, r_max: 2, jobs: Some(1) },
        )
        .unwrap();
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn parse_ids() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T9-nothing".parse::<TheoremId>().is_err());
    }

    #[test]
    fn zero_max_rejected() {
        let cfg = SweepConfig { max_n: 0, m_max: 1, r_max: 1, jobs: None };
        assert!(run(TheoremId::T1Parity, &cfg).is_err());
    }
}
