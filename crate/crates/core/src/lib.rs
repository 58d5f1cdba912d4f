//! Exact denominators of power sums of arithmetic progressions and of
//! Bernoulli polynomials.
//!
//! Every denominator sequence is available two ways: from exact Bernoulli
//! numbers ([`bernoulli`]) and from closed forms built on base-`p` digit sums
//! ([`denom`], [`powersum`]). The [`verify`] sweeps check one against the
//! other over whole ranges.
//!
//! ```
//! use apdenom::{dd_formula, power_sum_denominator, ProgressionSpec};
//!
//! assert_eq!(dd_formula(21).unwrap().value(), &330.into());
//! let spec = ProgressionSpec::new(2, 0, 2).unwrap();
//! assert_eq!(power_sum_denominator(&spec).unwrap(), 3.into());
//! ```

pub mod bench;
pub mod bernoulli;
pub mod denom;
pub mod digits;
pub mod error;
pub mod poly;
pub mod powersum;
pub mod seq;
pub mod verify;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly_at, bernoulli_polynomial, binomial, BernoulliCache,
};
pub use denom::{
    d_direct, d_formula, db_direct, db_formula, db_quotient, dd_direct, dd_formula,
    dd_formula_unbounded, dd_quotient, denom_poly, first_index_digit_sum_reaches, DenomTriple,
};
pub use digits::{
    digit_sum, expand, p_valuation, primes_up_to, radical, DigitExpansion, SquarefreeProduct,
};
pub use error::{Error, Result};
pub use poly::{Rational, RationalPoly};
pub use powersum::{
    am_congruence_check, am_integer, c_coeff, is_integral, power_sum_denominator,
    power_sum_difference, power_sum_naive, power_sum_poly, AmInteger, ProgressionFamily,
    ProgressionSpec,
};
pub use seq::{SeqFormat, SequenceId};
pub use verify::{SweepConfig, SweepReport, TheoremId};
