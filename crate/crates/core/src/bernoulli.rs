//! Exact Bernoulli numbers and polynomials.
//!
//! Numbers follow the convention `B_1 = -1/2` and are produced by the
//! recurrence `Σ_{k=0}^{n} C(n+1, k)·B_k = 0`. This is the slow, obviously
//! correct path; the closed-form denominator formulas are tested against it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{Rational, RationalPoly};

/// `C(n, k)` by the running product `Π (n-k+i)/i`, exact at every step.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Row `C(n, 0), …, C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 1..=n {
        c = c * (n - k + 1) / k;
        row.push(c.clone());
    }
    row
}

/// Growable memo table of Bernoulli numbers.
///
/// Populated entries are never modified, so a filled cache can be shared
/// read-only. Filling needs `&mut self`; parallel sweeps clone one cache per
/// worker.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    numbers: Vec<Rational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            numbers: vec![Rational::one()],
        }
    }

    /// Cache already holding `B_0, …, B_n`.
    pub fn filled(n: u64) -> Self {
        let mut cache = Self::new();
        cache.ensure(n);
        cache
    }

    /// Number of populated entries.
    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Fills every index `≤ n`.
    pub fn ensure(&mut self, n: u64) {
        let n = usize::try_from(n).expect("index too large");
        while self.numbers.len() <= n {
            let m = self.numbers.len() as u64;
            let row = binomial_row(m + 1);
            let sum = self
                .numbers
                .iter()
                .zip(&row)
                .filter(|(b, _)| !b.is_zero())
                .fold(Rational::zero(), |acc, (b, c)| acc + b * c);
            let next = -sum / BigInt::from(m + 1);
            self.numbers.push(next);
        }
    }

    pub fn get(&mut self, n: u64) -> &Rational {
        self.ensure(n);
        &self.numbers[n as usize]
    }

    /// Read-only lookup of an already populated entry.
    pub fn try_get(&self, n: u64) -> Option<&Rational> {
        self.numbers.get(usize::try_from(n).ok()?)
    }

    /// `B_0, …, B_n`.
    pub fn prefix(&mut self, n: u64) -> &[Rational] {
        self.ensure(n);
        &self.numbers[..=n as usize]
    }
}

/// Exact `B_n`.
pub fn bernoulli_number(cache: &mut BernoulliCache, n: u64) -> Rational {
    cache.get(n).clone()
}

/// `B_n(x) = Σ_{k=0}^{n} C(n,k)·B_k·x^{n-k}`.
pub fn bernoulli_polynomial(cache: &mut BernoulliCache, n: u64) -> RationalPoly {
    let row = binomial_row(n);
    let numbers = cache.prefix(n);
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for (k, (b, c)) in numbers.iter().zip(&row).enumerate() {
        coeffs[n as usize - k] = b * c;
    }
    RationalPoly::new(coeffs)
}

/// `B_n(q)` by Horner evaluation of the polynomial.
pub fn bernoulli_poly_at(cache: &mut BernoulliCache, n: u64, q: &Rational) -> Rational {
    bernoulli_polynomial(cache, n).eval(q)
}

/// `B_0(y), …, B_n(y)` in one pass.
pub fn bernoulli_values_at(cache: &mut BernoulliCache, n: u64, y: &Rational) -> Vec<Rational> {
    let numbers = cache.prefix(n).to_vec();
    let mut powers = Vec::with_capacity(n as usize + 1);
    let mut pw = Rational::one();
    for _ in 0..=n {
        powers.push(pw.clone());
        pw *= y;
    }
    (0..=n)
        .map(|k| {
            let row = binomial_row(k);
            (0..=k as usize)
                .filter(|&j| !numbers[j].is_zero())
                .fold(Rational::zero(), |acc, j| {
                    acc + &numbers[j] * &row[j] * &powers[k as usize - j]
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::{is_prime, p_valuation};
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_matches_row_and_pascal() {
        for n in 0..60u64 {
            let row = binomial_row(n);
            for k in 0..=n {
                assert_eq!(row[k as usize], binomial(n, k));
                if n > 0 && k > 0 && k < n {
                    assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                }
            }
        }
        assert_eq!(binomial(5, 7), BigInt::zero());
    }

    #[test]
    fn first_numbers() {
        let mut c = BernoulliCache::new();
        assert_eq!(bernoulli_number(&mut c, 0), q(1, 1));
        assert_eq!(bernoulli_number(&mut c, 1), q(-1, 2));
        assert_eq!(bernoulli_number(&mut c, 2), q(1, 6));
        assert_eq!(bernoulli_number(&mut c, 4), q(-1, 30));
        assert_eq!(bernoulli_number(&mut c, 6), q(1, 42));
        assert_eq!(bernoulli_number(&mut c, 3), q(0, 1));
        assert_eq!(bernoulli_number(&mut c, 12), q(-691, 2730));
    }

    #[test]
    fn odd_numbers_vanish() {
        let mut c = BernoulliCache::filled(201);
        for n in (3..=201).step_by(2) {
            assert!(c.get(n).is_zero(), "B_{n}");
        }
    }

    #[test]
    fn cache_is_monotone() {
        let mut c = BernoulliCache::new();
        c.ensure(10);
        let before: Vec<_> = (0..=10).map(|i| c.try_get(i).unwrap().clone()).collect();
        c.ensure(30);
        assert_eq!(c.len(), 31);
        for (i, b) in before.iter().enumerate() {
            assert_eq!(c.try_get(i as u64).unwrap(), b);
        }
        assert!(c.try_get(31).is_none());
    }

    #[test]
    fn defining_recurrence_holds() {
        let mut c = BernoulliCache::filled(120);
        for n in 2..=120u64 {
            let row = binomial_row(n);
            let s = (0..n).fold(Rational::zero(), |acc, k| {
                acc + c.get(k).clone() * &row[k as usize]
            });
            assert!(s.is_zero(), "n={n}");
        }
    }

    #[test]
    fn von_staudt_clausen() {
        let mut c = BernoulliCache::filled(400);
        for n in (2..=400u64).step_by(2) {
            let expected = (2..=n + 1)
                .filter(|&p| is_prime(p) && n % (p - 1) == 0)
                .fold(BigInt::one(), |acc, p| acc * p);
            assert_eq!(c.get(n).denom(), &expected, "n={n}");
        }
    }

    fn rational_valuation(p: u64, x: &Rational) -> i64 {
        let p = BigInt::from(p);
        p_valuation(&p, x.numer()).unwrap() as i64 - p_valuation(&p, x.denom()).unwrap() as i64
    }

    #[test]
    fn divided_bernoulli_valuation() {
        let mut c = BernoulliCache::filled(200);
        for n in (2..=200u64).step_by(2) {
            let divided = c.get(n).clone() / BigInt::from(n);
            for p in (2..=50u64).filter(|&p| is_prime(p)) {
                let v = rational_valuation(p, &divided);
                if n % (p - 1) == 0 {
                    let vn = p_valuation(&BigInt::from(p), &BigInt::from(n)).unwrap() as i64;
                    assert_eq!(v, -(vn + 1), "n={n} p={p}");
                } else {
                    assert!(v >= 0, "n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        let mut c = BernoulliCache::new();
        assert_eq!(bernoulli_polynomial(&mut c, 0), RationalPoly::from_integers([1]));
        assert_eq!(
            bernoulli_polynomial(&mut c, 1),
            RationalPoly::new(vec![q(-1, 2), q(1, 1)])
        );
        assert_eq!(
            bernoulli_polynomial(&mut c, 2),
            RationalPoly::new(vec![q(1, 6), q(-1, 1), q(1, 1)])
        );
        for n in 0..40 {
            let p = bernoulli_polynomial(&mut c, n);
            assert_eq!(p.degree(), Some(n as usize));
            assert_eq!(p.leading(), Some(&q(1, 1)));
            assert_eq!(p.coeff(0), bernoulli_number(&mut c, n));
        }
    }

    #[test]
    fn evaluation_examples() {
        let mut c = BernoulliCache::new();
        assert_eq!(bernoulli_poly_at(&mut c, 2, &q(1, 2)), q(-1, 12));
        for n in 0..40 {
            let bn = bernoulli_number(&mut c, n);
            assert_eq!(bernoulli_poly_at(&mut c, n, &q(0, 1)), bn);
            if n != 1 {
                assert_eq!(bernoulli_poly_at(&mut c, n, &q(1, 1)), bn);
            }
        }
        assert_eq!(bernoulli_poly_at(&mut c, 1, &q(1, 1)), q(1, 2));
    }

    #[test]
    fn values_at_matches_horner() {
        let mut c = BernoulliCache::new();
        for y in [q(1, 3), q(-7, 5), q(2, 1)] {
            let vals = bernoulli_values_at(&mut c, 25, &y);
            for (k, v) in vals.iter().enumerate() {
                assert_eq!(v, &bernoulli_poly_at(&mut c, k as u64, &y));
            }
        }
    }

    #[test]
    fn appell_relation() {
        let mut c = BernoulliCache::filled(30);
        for y in [q(1, 1), q(1, 2), q(-2, 1)] {
            let vals = bernoulli_values_at(&mut c, 30, &y);
            for n in 0..=30u64 {
                let lhs = bernoulli_polynomial(&mut c, n).shift(&y);
                let row = binomial_row(n);
                let mut coeffs = vec![Rational::zero(); n as usize + 1];
                for k in 0..=n as usize {
                    coeffs[n as usize - k] = &vals[k] * &row[k];
                }
                assert_eq!(lhs, RationalPoly::new(coeffs), "n={n} y={y}");
            }
        }
    }

    #[test]
    fn reflection_formula() {
        let mut c = BernoulliCache::filled(50);
        // 1 - x
        let one_minus_x = RationalPoly::from_integers([1, -1]);
        for n in 0..=50u64 {
            let b = bernoulli_polynomial(&mut c, n);
            let mut reflected = RationalPoly::zero();
            for coeff in b.coeffs().iter().rev() {
                reflected = &(&reflected * &one_minus_x) + &RationalPoly::constant(coeff.clone());
            }
            let expected = if n % 2 == 0 { b.clone() } else { -&b };
            assert_eq!(reflected, expected, "n={n}");
        }
    }

    #[test]
    fn forward_difference() {
        let mut c = BernoulliCache::filled(50);
        for n in 1..=50u64 {
            let b = bernoulli_polynomial(&mut c, n);
            let diff = &b.shift(&q(1, 1)) - &b;
            assert_eq!(diff, RationalPoly::monomial(q(n as i64, 1), n as usize - 1));
        }
    }

    #[test]
    fn signs_alternate_for_even_indices() {
        let mut c = BernoulliCache::filled(100);
        for n in (2..=100u64).step_by(2) {
            let b = c.get(n);
            assert_eq!(b.is_positive(), n % 4 == 2, "n={n}");
        }
    }
}
