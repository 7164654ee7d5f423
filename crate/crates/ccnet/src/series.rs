//! Truncated formal power series with exact unsigned big-integer
//! coefficients.
//!
//! The counting formulas need one family of series: products of factors
//! `(1 - z^m)^(-e)`, whose expansion has `binomial(e + t - 1, t)` at
//! `z^(m t)` and zero elsewhere. Everything here is exact; there is no
//! floating point anywhere.

use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A polynomial truncation of a power series: exactly `order + 1`
/// coefficients for `z^0 ..= z^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigUint>,
}

impl TruncatedSeries {
    /// The constant series 1, truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); order + 1];
        coeffs[0] = BigUint::one();
        TruncatedSeries { coeffs }
    }

    /// Wraps an explicit coefficient vector; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "series: coefficient vector must be nonempty".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64s(coeffs: &[u64]) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series must have at least one coefficient"
        );
        TruncatedSeries {
            coeffs: coeffs.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// Truncation order; the series carries coefficients for
    /// `z^0 ..= z^order()`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^i`. Panics if `i` exceeds the order.
    pub fn coeff(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }

    /// All coefficients, constant term first.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }
}

/// Binomial coefficient `C(n, k)` with an arbitrarily large top argument;
/// zero when `n < k`. Computed multiplicatively, dividing at each step
/// (the running product of `j` consecutive integers is divisible by `j!`).
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    if *n < BigUint::from(k) {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - BigUint::from(i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// The expansion of `(1 - z^m)^(-e)` truncated at `order`: coefficient
/// `binomial(e + t - 1, t)` at every multiple `m t` of `m`, zero
/// elsewhere. Requires `m >= 1` and `e >= 1`.
pub fn geometric_power_factor(m: usize, e: usize, order: usize) -> Result<TruncatedSeries> {
    if m == 0 {
        return Err(Error::Domain(
            "geometric factor: exponent step m must be at least 1".into(),
        ));
    }
    if e == 0 {
        return Err(Error::Domain(
            "geometric factor: power e must be at least 1".into(),
        ));
    }
    let mut coeffs = vec![BigUint::zero(); order + 1];
    let mut t = 0usize;
    while m * t <= order {
        coeffs[m * t] = binomial(&BigUint::from(e + t - 1), t as u64);
        t += 1;
    }
    Ok(TruncatedSeries { coeffs })
}

/// Product of two truncations of the same order (Cauchy convolution,
/// discarding terms beyond the order). Mixing orders is an error.
pub fn multiply(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let order = a.order();
    let mut coeffs = vec![BigUint::zero(); order + 1];
    for i in 0..=order {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=order - i {
            if b.coeffs[j].is_zero() {
                continue;
            }
            coeffs[i + j] += &a.coeffs[i] * &b.coeffs[j];
        }
    }
    Ok(TruncatedSeries { coeffs })
}

/// The arc-count generating series attached to a cycle length `s` and a
/// cycle type `rho`: the product over part sizes `k` present in `rho` of
/// `(1 - z^(k/h))^(-alpha_k * h)` with `h = gcd(s, k)`, truncated at
/// `order`. `s` must lie in `1 ..= rho.n()`.
pub fn phi_series(s: usize, rho: &Partition, order: usize) -> Result<TruncatedSeries> {
    if s == 0 || s > rho.n() {
        return Err(Error::Domain(format!(
            "phi series: cycle length {s} outside 1..={}",
            rho.n()
        )));
    }
    let mut acc = TruncatedSeries::one(order);
    for k in 1..=rho.n() {
        let a_k = rho.multiplicity(k);
        if a_k == 0 {
            continue;
        }
        let h = gcd(s, k);
        let factor = geometric_power_factor(k / h, a_k * h, order)?;
        acc = multiply(&acc, &factor)?;
    }
    Ok(acc)
}

/// Coefficient of `z^r` in [`phi_series`]; the number of arc assignments
/// along an orbit structure that a permutation with cycle type `rho`
/// leaves fixed. `r = 0` yields 1 (the constant term).
pub fn phi_coeff(r: usize, s: usize, rho: &Partition) -> Result<BigUint> {
    Ok(phi_series(s, rho, r)?.coeff(r).clone())
}
