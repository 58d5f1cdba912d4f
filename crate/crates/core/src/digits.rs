//! Base-`b` digit arithmetic, `p`-adic valuations, radicals and a prime sieve.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Digits of a non-negative integer in a fixed base, least significant first.
///
/// Zero has the empty expansion; otherwise the last digit is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitExpansion {
    base: BigInt,
    digits: Vec<BigInt>,
}

impl DigitExpansion {
    pub fn base(&self) -> &BigInt {
        &self.base
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Sum of all digits.
    pub fn digit_sum(&self) -> BigInt {
        self.digits.iter().sum()
    }

    /// Reconstructs `Σ digits[i]·base^i`.
    pub fn value(&self) -> BigInt {
        self.digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, d| acc * &self.base + d)
    }
}

fn check_base(base: &BigInt) -> Result<()> {
    if *base < BigInt::from(2) {
        return Err(Error::domain(format!("base must be at least 2, got {base}")));
    }
    Ok(())
}

fn check_non_negative(n: &BigInt) -> Result<()> {
    if n.is_negative() {
        return Err(Error::domain(format!("expected a non-negative integer, got {n}")));
    }
    Ok(())
}

/// Expands `n ≥ 0` in base `base ≥ 2`.
pub fn expand(n: &BigInt, base: &BigInt) -> Result<DigitExpansion> {
    check_base(base)?;
    check_non_negative(n)?;
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, d) = rest.div_rem(base);
        digits.push(d);
        rest = q;
    }
    Ok(DigitExpansion {
        base: base.clone(),
        digits,
    })
}

/// Sum of the base-`p` digits of `n`. Works for any base `p ≥ 2`.
pub fn digit_sum(p: &BigInt, n: &BigInt) -> Result<BigInt> {
    check_base(p)?;
    check_non_negative(n)?;
    if let (Some(p), Some(n)) = (p.to_u64(), n.to_u64()) {
        return Ok(BigInt::from(digit_sum_u64(p, n)));
    }
    let mut sum = BigInt::zero();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, d) = rest.div_rem(p);
        sum += d;
        rest = q;
    }
    Ok(sum)
}

/// Machine-word digit sum. Panics if `base < 2`.
pub fn digit_sum_u64(base: u64, mut n: u64) -> u64 {
    assert!(base >= 2, "base must be at least 2");
    let mut sum = 0;
    while n != 0 {
        sum += n % base;
        n /= base;
    }
    sum
}

/// Largest `e` with `p^e | n`.
pub fn p_valuation(p: &BigInt, n: &BigInt) -> Result<u64> {
    check_base(p)?;
    if n.is_zero() {
        return Err(Error::domain("valuation of zero is infinite"));
    }
    let mut e = 0;
    let mut rest = n.abs();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        e += 1;
        rest = q;
    }
}

/// Machine-word valuation. Panics if `p < 2` or `n == 0`.
pub fn p_valuation_u64(p: u64, mut n: u64) -> u64 {
    assert!(p >= 2 && n != 0);
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// A squarefree positive integer stored together with its prime factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeProduct {
    primes: Vec<u64>,
    value: BigInt,
}

impl SquarefreeProduct {
    /// The empty product.
    pub fn one() -> Self {
        SquarefreeProduct {
            primes: Vec::new(),
            value: BigInt::one(),
        }
    }

    /// Builds the product from primes given in any order; duplicates are merged.
    /// Panics if a factor is not prime.
    pub fn from_primes(primes: impl IntoIterator<Item = u64>) -> Self {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        primes.sort_unstable();
        primes.dedup();
        for &p in &primes {
            assert!(is_prime(p), "{p} is not prime");
        }
        Self::from_sorted_unchecked(primes)
    }

    // Caller guarantees strictly increasing primes.
    pub(crate) fn from_sorted_unchecked(primes: Vec<u64>) -> Self {
        let value = primes.iter().fold(BigInt::one(), |acc, &p| acc * p);
        SquarefreeProduct { primes, value }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn into_value(self) -> BigInt {
        self.value
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn is_even(&self) -> bool {
        self.primes.first() == Some(&2)
    }

    /// Least common multiple, i.e. the union of prime sets.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut merged = Vec::with_capacity(self.primes.len() + other.primes.len());
        let (mut i, mut j) = (0, 0);
        while i < self.primes.len() && j < other.primes.len() {
            let (a, b) = (self.primes[i], other.primes[j]);
            if a <= b {
                merged.push(a);
                i += 1;
                if a == b {
                    j += 1;
                }
            } else {
                merged.push(b);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.primes[i..]);
        merged.extend_from_slice(&other.primes[j..]);
        Self::from_sorted_unchecked(merged)
    }

    /// Quotient `self / other` when `other`'s primes are a subset of `self`'s.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.primes.iter().all(|&p| self.contains(p)) {
            return None;
        }
        let rest = self
            .primes
            .iter()
            .copied()
            .filter(|&p| !other.contains(p))
            .collect();
        Some(Self::from_sorted_unchecked(rest))
    }
}

impl fmt::Display for SquarefreeProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Product of the distinct primes dividing `k ≥ 1`, by trial division.
pub fn radical(k: u64) -> Result<SquarefreeProduct> {
    if k == 0 {
        return Err(Error::domain("radical is only defined for k >= 1"));
    }
    let mut primes = Vec::new();
    let mut rest = k;
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            primes.push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
    }
    Ok(SquarefreeProduct::from_sorted_unchecked(primes))
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `≤ bound` in ascending order (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let bound = usize::try_from(bound).expect("sieve bound exceeds address space");
    let mut composite = vec![false; bound + 1];
    let mut primes = Vec::new();
    for i in 2..=bound {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= bound {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// `gcd(a, b)` with `gcd(0, x) = |x|`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// `lcm(a, b)`; rejects a zero argument.
pub fn lcm(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::domain("lcm with a zero argument is undefined"));
    }
    Ok(a.lcm(b))
}
