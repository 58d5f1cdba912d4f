//! Power sums of arithmetic progressions
//! `SP(x) = Σ_{k=0}^{x-1} (k·m + r)^n` as exact polynomials in `x`, their
//! closed-form denominators and integrality criterion, and the
//! Almkvist–Meurman integers `m^n·(B_n(r/m) − B_n)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::bernoulli::{binomial, binomial_row, bernoulli_values_at, BernoulliCache};
use crate::denom::{db_formula, dd_formula};
use crate::digits::p_valuation;
use crate::error::{Error, Result};
use crate::poly::{Rational, RationalPoly};

/// Identifies `SP_{m,r}^n`: common difference `m ≥ 1`, initial term `r ≥ 0`,
/// exponent `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProgressionSpec {
    m: BigInt,
    r: BigInt,
    n: u64,
}

impl ProgressionSpec {
    pub fn new(m: impl Into<BigInt>, r: impl Into<BigInt>, n: u64) -> Result<Self> {
        let (m, r) = (m.into(), r.into());
        if m < BigInt::one() {
            return Err(Error::domain(format!("common difference m must be >= 1, got {m}")));
        }
        if r.is_negative() {
            return Err(Error::domain(format!("initial term r must be >= 0, got {r}")));
        }
        if n == 0 {
            return Err(Error::domain("exponent n must be >= 1"));
        }
        Ok(ProgressionSpec { m, r, n })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

impl fmt::Display for ProgressionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SP(m={}, r={}, n={})", self.m, self.r, self.n)
    }
}

/// `Σ_{k=0}^{x-1} (k·m + r)^n` by direct summation.
pub fn power_sum_naive(spec: &ProgressionSpec, x: u64) -> BigInt {
    let n = spec.n as u32;
    (0..x)
        .map(|k| Pow::pow(&(&spec.m * k + &spec.r), n))
        .sum()
}

/// `SP(0), SP(1), …, SP(x_max)` by running summation.
pub fn power_sum_naive_prefix(spec: &ProgressionSpec, x_max: u64) -> Vec<BigInt> {
    let n = spec.n as u32;
    let mut out = Vec::with_capacity(x_max as usize + 1);
    let mut acc = BigInt::zero();
    out.push(acc.clone());
    for k in 0..x_max {
        acc += Pow::pow(&(&spec.m * k + &spec.r), n);
        out.push(acc.clone());
    }
    out
}

/// All `SP_{m,r}^n` for a fixed `(m, r)` and `n ≤ n_max`.
///
/// Holds `B_k(r/m)` for `k ≤ n_max`, so each polynomial costs `O(n)`.
#[derive(Debug, Clone)]
pub struct ProgressionFamily {
    m: BigInt,
    r: BigInt,
    shifted: Vec<Rational>,
}

impl ProgressionFamily {
    pub fn new(cache: &mut BernoulliCache, m: &BigInt, r: &BigInt, n_max: u64) -> Result<Self> {
        // validates m and r
        ProgressionSpec::new(m.clone(), r.clone(), 1)?;
        let y = Rational::new(r.clone(), m.clone());
        Ok(ProgressionFamily {
            m: m.clone(),
            r: r.clone(),
            shifted: bernoulli_values_at(cache, n_max, &y),
        })
    }

    pub fn n_max(&self) -> u64 {
        self.shifted.len() as u64 - 1
    }

    /// `B_k(r/m)`.
    pub fn shifted_bernoulli(&self, k: u64) -> &Rational {
        &self.shifted[k as usize]
    }

    /// `(m^n / (n+1))·(B_{n+1}(x + r/m) − B_{n+1}(r/m))`, expanded with the
    /// Appell relation: the coefficient of `x^{n+1-k}` is
    /// `m^n/(n+1)·C(n+1, k)·B_k(r/m)` for `0 ≤ k ≤ n`.
    pub fn poly(&self, n: u64) -> RationalPoly {
        assert!(n >= 1 && n <= self.n_max(), "n={n} outside family range");
        let scale = Rational::new(Pow::pow(&self.m, n as u32), BigInt::from(n + 1));
        let row = binomial_row(n + 1);
        let deg = n as usize + 1;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for k in 0..=n as usize {
            coeffs[deg - k] = &scale * &row[k] * &self.shifted[k];
        }
        RationalPoly::new(coeffs)
    }

    pub fn spec(&self, n: u64) -> Result<ProgressionSpec> {
        ProgressionSpec::new(self.m.clone(), self.r.clone(), n)
    }
}

/// `SP_{m,r}^n(x)` as an exact polynomial of degree `n+1`.
pub fn power_sum_poly(cache: &mut BernoulliCache, spec: &ProgressionSpec) -> RationalPoly {
    ProgressionFamily::new(cache, &spec.m, &spec.r, spec.n)
        .expect("spec already validated")
        .poly(spec.n)
}

/// `gcd(a, m^e)` for `e ≥ v_p(a)` at every prime `p`, by repeatedly
/// stripping `gcd(rest, m)` from `a`. Never forms `m^e`.
fn gcd_with_high_power(a: &BigInt, m: &BigInt) -> BigInt {
    let mut result = BigInt::one();
    let mut rest = a.clone();
    loop {
        let g = rest.gcd(m);
        if g.is_one() {
            return result;
        }
        rest /= &g;
        result *= g;
    }
}

/// `(n+1)/gcd(n+1, m^n) · DD_{n+1}/gcd(DD_{n+1}, m)`. Independent of `r`.
pub fn power_sum_denominator(spec: &ProgressionSpec) -> Result<BigInt> {
    let n1 = BigInt::from(spec.n + 1);
    // every prime power p^e exactly dividing n+1 has e < n+1, so stripping
    // gcds reaches gcd(n+1, m^n)
    let g = gcd_with_high_power(&n1, &spec.m);
    let dd = dd_formula(spec.n + 1)?.into_value();
    let h = dd.gcd(&spec.m);
    Ok((n1 / g) * (dd / h))
}

/// Whether `SP_{m,r}^n(x) ∈ ℤ[x]`, decided by `DB_n | m`.
pub fn is_integral(spec: &ProgressionSpec) -> Result<bool> {
    let db = db_formula(spec.n)?;
    Ok((&spec.m % db.value()).is_zero())
}

/// `SP_{m,r1}^n(x) − SP_{m,r2}^n(x)`, which always has integer coefficients.
pub fn power_sum_difference(
    cache: &mut BernoulliCache,
    m: &BigInt,
    r1: &BigInt,
    r2: &BigInt,
    n: u64,
) -> Result<RationalPoly> {
    let a = power_sum_poly(cache, &ProgressionSpec::new(m.clone(), r1.clone(), n)?);
    let b = power_sum_poly(cache, &ProgressionSpec::new(m.clone(), r2.clone(), n)?);
    let diff = &a - &b;
    if !diff.is_integral() {
        return Err(Error::violation(format!(
            "SP(m={m}, r={r1}, n={n}) - SP(m={m}, r={r2}, n={n}) = {diff} is not integral"
        )));
    }
    Ok(diff)
}

/// The Almkvist–Meurman integer `m^n·(B_n(r/m) − B_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmInteger {
    pub m: BigInt,
    pub r: BigInt,
    pub n: u64,
    pub value: BigInt,
}

/// Computes `Σ_{k=0}^{n-1} C(n,k)·B_k·m^k·r^{n-k}` and checks it is an
/// integer. `r` may be any integer. `n = 0` gives the empty sum `0`.
pub fn am_integer(cache: &mut BernoulliCache, m: &BigInt, r: &BigInt, n: u64) -> Result<AmInteger> {
    if *m < BigInt::one() {
        return Err(Error::domain(format!("m must be >= 1, got {m}")));
    }
    let row = binomial_row(n);
    let numbers = &cache.prefix(n)[..n as usize];
    // sum over the common denominator of B_0..B_{n-1}
    let common = numbers
        .iter()
        .fold(BigInt::one(), |acc, b| acc.lcm(b.denom()));
    let mut sum = BigInt::zero();
    let mut m_pow = BigInt::one();
    for (k, b) in numbers.iter().enumerate() {
        if !b.is_zero() {
            let scaled = b.numer() * (&common / b.denom());
            sum += scaled * &row[k] * &m_pow * Pow::pow(r, n as usize - k);
        }
        m_pow *= m;
    }
    let (value, rem) = sum.div_rem(&common);
    if !rem.is_zero() {
        return Err(Error::violation(format!(
            "m^n(B_n(r/m) - B_n) = {} is not an integer for m={m}, r={r}, n={n}",
            Rational::new(sum, common)
        )));
    }
    Ok(AmInteger {
        m: m.clone(),
        r: r.clone(),
        n,
        value,
    })
}

/// Tests `p^e | m^n·(B_n(r/m) − B_n)`. Requires `p ∤ m` and
/// `0 ≤ e ≤ v_p(n)`; under those conditions the answer is always `true`.
pub fn am_congruence_check(
    cache: &mut BernoulliCache,
    m: &BigInt,
    r: &BigInt,
    n: u64,
    p: u64,
    e: u64,
) -> Result<bool> {
    let value = am_integer(cache, m, r, n)?.value;
    congruence_holds(&value, m, n, p, e)
}

pub(crate) fn congruence_holds(value: &BigInt, m: &BigInt, n: u64, p: u64, e: u64) -> Result<bool> {
    if !crate::digits::is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    if (m % p).is_zero() {
        return Err(Error::domain(format!("p={p} must not divide m={m}")));
    }
    let vn = p_valuation(&BigInt::from(p), &BigInt::from(n))?;
    if e > vn {
        return Err(Error::domain(format!("e={e} exceeds v_{p}(n)={vn}")));
    }
    Ok((value % Pow::pow(&BigInt::from(p), e as u32)).is_zero())
}

/// `c_{n,k} = C(n, k−1)/k` for `1 ≤ k ≤ n`.
pub fn c_coeff(n: u64, k: u64) -> Result<Rational> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(Rational::new(binomial(n, k - 1), BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn spec(m: i64, r: i64, n: u64) -> ProgressionSpec {
        ProgressionSpec::new(m, r, n).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(ProgressionSpec::new(0, 0, 1).is_err());
        assert!(ProgressionSpec::new(1, -1, 1).is_err());
        assert!(ProgressionSpec::new(1, 0, 0).is_err());
    }

    #[test]
    fn naive_examples() {
        assert_eq!(power_sum_naive(&spec(3, 2, 5), 0), big(0));
        assert_eq!(power_sum_naive(&spec(1, 0, 2), 4), big(14));
        assert_eq!(power_sum_naive(&spec(2, 1, 1), 3), big(9));
        let prefix = power_sum_naive_prefix(&spec(6, 1, 2), 5);
        for (x, v) in prefix.iter().enumerate() {
            assert_eq!(v, &power_sum_naive(&spec(6, 1, 2), x as u64));
        }
    }

    #[test]
    fn poly_examples() {
        let mut c = BernoulliCache::new();
        assert_eq!(
            power_sum_poly(&mut c, &spec(2, 0, 1)),
            RationalPoly::from_integers([0, -1, 1])
        );
        assert_eq!(
            power_sum_poly(&mut c, &spec(6, 1, 2)),
            RationalPoly::from_integers([0, 1, -12, 12])
        );
        assert_eq!(
            power_sum_poly(&mut c, &spec(30, 1, 4)),
            RationalPoly::from_integers([0i64, -26159, 24360, 217800, -378000, 162000])
        );
    }

    #[test]
    fn poly_has_zero_constant_and_right_degree() {
        let mut c = BernoulliCache::new();
        for n in 1..=15 {
            let p = power_sum_poly(&mut c, &spec(7, 3, n));
            assert_eq!(p.degree(), Some(n as usize + 1));
            assert!(p.coeff(0).is_zero());
        }
    }

    #[test]
    fn denominator_examples() {
        for r in 0..5 {
            assert_eq!(power_sum_denominator(&spec(1, r, 4)).unwrap(), big(30));
        }
        assert_eq!(power_sum_denominator(&spec(2, 0, 2)).unwrap(), big(3));
        assert_eq!(power_sum_denominator(&spec(30, 1, 4)).unwrap(), big(1));
    }

    #[test]
    fn gcd_stripping_matches_power() {
        for a in 1..200i64 {
            for m in 1..40i64 {
                let direct = big(a).gcd(&Pow::pow(&big(m), 10u32));
                assert_eq!(gcd_with_high_power(&big(a), &big(m)), direct, "a={a} m={m}");
            }
        }
    }

    #[test]
    fn integrality_examples() {
        assert!(is_integral(&spec(6, 1, 5)).unwrap());
        assert!(!is_integral(&spec(2, 0, 2)).unwrap());
        for (n, m) in [(1, 2), (2, 6), (3, 2), (4, 30), (5, 6)] {
            for r in 0..4 {
                assert!(is_integral(&spec(m, r, n)).unwrap());
            }
        }
    }

    #[test]
    fn difference_examples() {
        let mut c = BernoulliCache::new();
        assert!(power_sum_difference(&mut c, &big(5), &big(3), &big(3), 4).unwrap().is_zero());
        assert_eq!(
            power_sum_difference(&mut c, &big(2), &big(1), &big(0), 1).unwrap(),
            RationalPoly::from_integers([0, 1])
        );
        assert_eq!(
            power_sum_difference(&mut c, &big(6), &big(1), &big(0), 2).unwrap(),
            RationalPoly::from_integers([0, -5, 6])
        );
    }

    #[test]
    fn am_examples() {
        let mut c = BernoulliCache::new();
        for n in 1..10 {
            assert_eq!(am_integer(&mut c, &big(4), &big(0), n).unwrap().value, big(0));
        }
        for n in 2..10 {
            assert_eq!(am_integer(&mut c, &big(1), &big(1), n).unwrap().value, big(0));
        }
        assert_eq!(am_integer(&mut c, &big(2), &big(1), 2).unwrap().value, big(-1));
        assert!(am_integer(&mut c, &big(0), &big(1), 2).is_err());
    }

    #[test]
    fn am_matches_definition() {
        let mut c = BernoulliCache::new();
        for m in 1..6i64 {
            for r in -5..6i64 {
                for n in 1..12u64 {
                    let y = Rational::new(big(r), big(m));
                    let bn = c.get(n).clone();
                    let direct = (crate::bernoulli::bernoulli_poly_at(&mut c, n, &y) - bn)
                        * Pow::pow(&big(m), n as u32);
                    let got = am_integer(&mut c, &big(m), &big(r), n).unwrap().value;
                    assert_eq!(Rational::from_integer(got), direct);
                }
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let mut c = BernoulliCache::new();
        assert!(am_congruence_check(&mut c, &big(3), &big(1), 4, 2, 2).unwrap());
        assert!(am_congruence_check(&mut c, &big(3), &big(1), 4, 2, 0).unwrap());
        assert!(am_congruence_check(&mut c, &big(2), &big(1), 12, 3, 1).unwrap());
        // p | m
        assert!(matches!(
            am_congruence_check(&mut c, &big(6), &big(1), 4, 2, 1),
            Err(Error::Domain(_))
        ));
        // e > v_p(n)
        assert!(matches!(
            am_congruence_check(&mut c, &big(3), &big(1), 4, 2, 3),
            Err(Error::Domain(_))
        ));
        assert!(am_congruence_check(&mut c, &big(3), &big(1), 4, 4, 1).is_err());
    }

    #[test]
    fn c_coeff_examples() {
        for n in 1..30 {
            assert_eq!(c_coeff(n, 1).unwrap(), Rational::one());
            assert_eq!(c_coeff(n, n).unwrap(), Rational::one());
        }
        assert_eq!(c_coeff(5, 3).unwrap(), Rational::new(big(10), big(3)));
        assert!(c_coeff(5, 0).is_err());
        assert!(c_coeff(5, 6).is_err());
    }

    #[test]
    fn c_coeff_properties() {
        for n in 1..=200u64 {
            for k in 1..=n {
                let c = c_coeff(n, k).unwrap();
                assert_eq!(c, Rational::new(binomial(n + 1, k), big(n as i64 + 1)));
                assert_eq!(c, c_coeff(n, n + 1 - k).unwrap());
                let bound = big(n as i64 + 1).gcd(&big(k as i64));
                assert!((&bound % c.denom()).is_zero());
                assert!(c.denom() * 2 <= big(n as i64 + 1));
            }
        }
    }
}
