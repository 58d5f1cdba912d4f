//! The three denominator sequences attached to Bernoulli polynomials.
//!
//! * `D_n`  = denom(B_n)
//! * `DD_n` = denom(B_n(x) − B_n)
//! * `DB_n` = denom(B_n(x))
//!
//! Each has a direct route through exact Bernoulli numbers and a closed form
//! in terms of base-`p` digit sums. The closed forms are the production path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial, BernoulliCache};
use crate::digits::{digit_sum, digit_sum_u64, is_prime, primes_up_to, radical, SquarefreeProduct};
use crate::error::{Error, Result};
use crate::poly::RationalPoly;

/// Exponent cap used by [`first_index_digit_sum_reaches`] when none is given.
pub const DEFAULT_SEARCH_CAP: u64 = 10_000;

fn check_index(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("index n must be at least 1"));
    }
    Ok(())
}

/// Smallest `d ≥ 1` with `d·f ∈ ℤ[x]`.
pub fn denom_poly(f: &RationalPoly) -> BigInt {
    f.denominator()
}

/// `denom(B_n)` read off the exact Bernoulli number.
pub fn d_direct(cache: &mut BernoulliCache, n: u64) -> Result<BigInt> {
    check_index(n)?;
    Ok(bernoulli_number(cache, n).denom().clone())
}

/// von Staudt–Clausen: product of the primes `p` with `p − 1 | n` for even
/// `n`; `2` for `n = 1`; `1` for odd `n ≥ 3`.
pub fn d_formula(n: u64) -> Result<SquarefreeProduct> {
    check_index(n)?;
    if n == 1 {
        return Ok(SquarefreeProduct::from_sorted_unchecked(vec![2]));
    }
    if n % 2 == 1 {
        return Ok(SquarefreeProduct::one());
    }
    let mut primes = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            for divisor in [d, n / d] {
                if is_prime(divisor + 1) {
                    primes.push(divisor + 1);
                }
            }
        }
        d += 1;
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(SquarefreeProduct::from_sorted_unchecked(primes))
}

/// `denom(B_n(x) − B_n)` computed from the polynomial.
pub fn dd_direct(cache: &mut BernoulliCache, n: u64) -> Result<BigInt> {
    check_index(n)?;
    Ok(denom_poly(&bernoulli_polynomial(cache, n).without_constant()))
}

/// `floor(M_n)` with `M_n = (n+1)/2` for odd `n` and `(n+1)/3` for even `n`.
pub fn prime_bound(n: u64) -> u64 {
    if n % 2 == 1 {
        n.div_ceil(2)
    } else {
        (n + 1) / 3
    }
}

fn primes_with_large_digit_sum(n: u64, bound: u64) -> SquarefreeProduct {
    let primes = primes_up_to(bound)
        .into_iter()
        .filter(|&p| digit_sum_u64(p, n) >= p)
        .collect();
    SquarefreeProduct::from_sorted_unchecked(primes)
}

/// `DD_n` as the product of primes `p ≤ M_n` with `s_p(n) ≥ p`.
pub fn dd_formula(n: u64) -> Result<SquarefreeProduct> {
    check_index(n)?;
    Ok(primes_with_large_digit_sum(n, prime_bound(n)))
}

/// `DD_n` as the product over all primes with `s_p(n) ≥ p`. Any such prime
/// satisfies `p ≤ n`, so scanning to `n` is exhaustive.
pub fn dd_formula_unbounded(n: u64) -> Result<SquarefreeProduct> {
    check_index(n)?;
    Ok(primes_with_large_digit_sum(n, n))
}

/// `denom(B_n(x))` computed from the polynomial.
pub fn db_direct(cache: &mut BernoulliCache, n: u64) -> Result<BigInt> {
    check_index(n)?;
    Ok(denom_poly(&bernoulli_polynomial(cache, n)))
}

/// `DB_n = lcm(DD_n, D_n)`.
pub fn db_from_dd_and_d(n: u64) -> Result<SquarefreeProduct> {
    Ok(dd_formula(n)?.lcm(&d_formula(n)?))
}

/// `DB_n = lcm(DD_{n+1}, rad(n+1))`.
pub fn db_from_next_radical(n: u64) -> Result<SquarefreeProduct> {
    check_index(n)?;
    Ok(dd_formula(n + 1)?.lcm(&radical(n + 1)?))
}

/// `DB_n` as primes dividing `n+1` times primes `p ∤ n+1`, `p ≤ M_{n+1}`,
/// `s_p(n+1) ≥ p`.
pub fn db_product_form(n: u64) -> Result<SquarefreeProduct> {
    check_index(n)?;
    let next = n + 1;
    let dividing = radical(next)?;
    let rest = primes_up_to(prime_bound(next))
        .into_iter()
        .filter(|&p| !next.is_multiple_of(p) && digit_sum_u64(p, next) >= p);
    Ok(dividing.lcm(&SquarefreeProduct::from_sorted_unchecked(rest.collect())))
}

/// `DB_n` by the closed forms, all three of which must agree.
pub fn db_formula(n: u64) -> Result<SquarefreeProduct> {
    let a = db_from_dd_and_d(n)?;
    let b = db_from_next_radical(n)?;
    let c = db_product_form(n)?;
    if a != b || a != c {
        return Err(Error::violation(format!(
            "closed forms for DB_{n} disagree: lcm(DD,D)={a}, lcm(DD_next,rad)={b}, product={c}"
        )));
    }
    Ok(a)
}

/// `D_n`, `DD_n` and `DB_n` for one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenomTriple {
    pub n: u64,
    pub d: SquarefreeProduct,
    pub dd: SquarefreeProduct,
    pub db: SquarefreeProduct,
}

impl DenomTriple {
    pub fn compute(n: u64) -> Result<Self> {
        let d = d_formula(n)?;
        let dd = dd_formula(n)?;
        let db = db_formula(n)?;
        if db != dd.lcm(&d) || !db.is_even() {
            return Err(Error::violation(format!("DB_{n} = {db} is not lcm(DD_n, D_n) or not even")));
        }
        Ok(DenomTriple { n, d, dd, db })
    }
}

fn exact_quotient(num: &SquarefreeProduct, den: &SquarefreeProduct, what: &str) -> Result<BigInt> {
    let (q, r) = num.value().div_rem(den.value());
    if !r.is_zero() {
        return Err(Error::violation(format!("{what}: {den} does not divide {num}")));
    }
    Ok(q)
}

/// `DD_n / DD_{n+1}` for odd `n`.
pub fn dd_quotient(n: u64) -> Result<BigInt> {
    check_index(n)?;
    if n.is_multiple_of(2) {
        return Err(Error::domain(format!("DD quotient needs odd n, got {n}")));
    }
    exact_quotient(&dd_formula(n)?, &dd_formula(n + 1)?, &format!("DD_{n}/DD_{}", n + 1))
}

/// `DB_n / DB_{n+1}` for even `n ≥ 2`.
pub fn db_quotient(n: u64) -> Result<BigInt> {
    check_index(n)?;
    if n % 2 == 1 {
        return Err(Error::domain(format!("DB quotient needs even n, got {n}")));
    }
    exact_quotient(&db_formula(n)?, &db_formula(n + 1)?, &format!("DB_{n}/DB_{}", n + 1))
}

/// Smallest `k ≥ 1` with `s_p(q^k) ≥ p`, scanning `k ≤ cap`.
///
/// This is only the first such exponent. Larger exponents may dip below `p`
/// again; the threshold past which the inequality holds for good is not
/// computed here.
pub fn first_index_digit_sum_reaches(p: u64, q: u64, cap: u64) -> Result<u64> {
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::domain(format!("p={p} and q={q} must both be prime")));
    }
    if p == q {
        return Err(Error::domain("p and q must differ"));
    }
    let base = BigInt::from(p);
    let target = BigInt::from(p);
    let mut power = BigInt::from(1u32);
    for k in 1..=cap {
        power *= q;
        if digit_sum(&base, &power)? >= target {
            return Ok(k);
        }
    }
    Err(Error::SearchCapExhausted { p, q, cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rational;

    fn values(v: impl IntoIterator<Item = SquarefreeProduct>) -> Vec<u64> {
        v.into_iter()
            .map(|s| u64::try_from(s.value()).unwrap())
            .collect()
    }

    #[test]
    fn denom_poly_examples() {
        assert_eq!(denom_poly(&RationalPoly::from_integers([1])), BigInt::from(1));
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let b2 = RationalPoly::new(vec![q(1, 6), q(-1, 1), q(1, 1)]);
        assert_eq!(denom_poly(&b2), BigInt::from(6));
        let s2 = RationalPoly::new(vec![q(0, 1), q(1, 6), q(-3, 6), q(2, 6)]);
        assert_eq!(denom_poly(&s2), BigInt::from(6));
    }

    #[test]
    fn d_examples() {
        let got = values((1..=14).map(|n| d_formula(n).unwrap()));
        assert_eq!(got, vec![2, 6, 1, 30, 1, 42, 1, 30, 1, 66, 1, 2730, 1, 6]);
        for n in (3..200).step_by(2) {
            assert_eq!(d_formula(n).unwrap().value(), &BigInt::from(1));
        }
        let mut c = BernoulliCache::new();
        assert_eq!(d_direct(&mut c, 12).unwrap(), BigInt::from(2730));
        assert!(d_formula(0).is_err());
        assert!(d_direct(&mut c, 0).is_err());
    }

    #[test]
    fn dd_examples() {
        let mut c = BernoulliCache::new();
        for (n, v) in [(1, 1), (3, 2), (5, 6), (9, 10), (13, 210)] {
            assert_eq!(dd_direct(&mut c, n).unwrap(), BigInt::from(v));
            assert_eq!(dd_formula(n).unwrap().value(), &BigInt::from(v));
        }
        assert_eq!(dd_formula(21).unwrap().value(), &BigInt::from(330));
        assert_eq!(dd_formula(2).unwrap().value(), &BigInt::from(1));
        assert_eq!(dd_formula(12).unwrap().value(), &BigInt::from(2));
        for k in 0..=6 {
            assert!(dd_direct(&mut c, 1 << k).unwrap().is_odd());
        }
        assert!(dd_formula(0).is_err());
    }

    #[test]
    fn bounded_and_unbounded_scans_agree() {
        for n in 1..=3000 {
            assert_eq!(dd_formula(n).unwrap(), dd_formula_unbounded(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn db_examples() {
        for (n, v) in [(1, 2), (2, 6), (4, 30), (10, 66), (12, 2730), (18, 3990)] {
            assert_eq!(db_formula(n).unwrap().value(), &BigInt::from(v));
        }
        let mut c = BernoulliCache::new();
        assert_eq!(db_direct(&mut c, 18).unwrap(), BigInt::from(3990));
    }

    #[test]
    fn triple_is_consistent() {
        for n in 1..=500 {
            let t = DenomTriple::compute(n).unwrap();
            assert!(t.db.is_even());
            assert_eq!(t.db, t.dd.lcm(&t.d));
        }
    }

    #[test]
    fn quotient_examples() {
        let dd: Vec<_> = (1..=15).step_by(2).map(|n| dd_quotient(n).unwrap()).collect();
        assert_eq!(dd, [1, 2, 3, 2, 5, 3, 7, 2].map(BigInt::from));
        let db: Vec<_> = (2..=14).step_by(2).map(|n| db_quotient(n).unwrap()).collect();
        assert_eq!(db, [3, 5, 7, 3, 11, 13, 5].map(BigInt::from));
        for k in 2..=4 {
            assert_eq!(dd_quotient((1 << k) - 1).unwrap(), BigInt::from(2));
        }
    }

    #[test]
    fn quotients_reject_wrong_parity() {
        assert!(matches!(dd_quotient(2), Err(Error::Domain(_))));
        assert!(matches!(db_quotient(3), Err(Error::Domain(_))));
        assert!(matches!(dd_quotient(0), Err(Error::Domain(_))));
    }

    /// Linear scan with an independent digit-sum loop.
    fn first_index_oracle(p: u64, q: u64) -> u64 {
        let mut power = BigInt::from(1);
        for k in 1.. {
            power *= q;
            let mut s = BigInt::zero();
            let mut rest = power.clone();
            while !rest.is_zero() {
                s += &rest % p;
                rest /= p;
            }
            if s >= BigInt::from(p) {
                return k;
            }
        }
        unreachable!()
    }

    #[test]
    fn first_index_examples() {
        assert_eq!(first_index_digit_sum_reaches(3, 2, 100).unwrap(), 3);
        for q in [3, 5, 7, 11, 13, 47] {
            assert_eq!(first_index_digit_sum_reaches(2, q, 100).unwrap(), 1);
        }
        // 2^k in base 5: 2, 4, 13, 31, 112, 224, 1003, ... ; 2^6 = 224_5 has digit sum 8.
        assert_eq!(first_index_digit_sum_reaches(5, 2, 100).unwrap(), 6);
        for p in primes_up_to(50) {
            for q in primes_up_to(50) {
                if p != q {
                    let got = first_index_digit_sum_reaches(p, q, DEFAULT_SEARCH_CAP).unwrap();
                    assert_eq!(got, first_index_oracle(p, q), "p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn first_index_errors() {
        assert!(matches!(first_index_digit_sum_reaches(3, 3, 10), Err(Error::Domain(_))));
        assert!(matches!(first_index_digit_sum_reaches(4, 3, 10), Err(Error::Domain(_))));
        assert_eq!(
            first_index_digit_sum_reaches(47, 2, 3),
            Err(Error::SearchCapExhausted { p: 47, q: 2, cap: 3 })
        );
    }
}
