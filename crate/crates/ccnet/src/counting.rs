//! Exact closed-form counts of identical-edge homogeneous networks.
//!
//! Three families, all exact big integers:
//!
//! * `H(n, r)` — networks with `n` cells of uniform in-degree `r`, up to
//!   isomorphism, via a Burnside sum over cycle types of the cell
//!   permutations.
//! * `K(n, r)` — the connected ones, by subtracting the ways to assemble a
//!   disconnected network from smaller connected components.
//! * `M(n, r)` — the connected ones that are minimal for ODE equivalence
//!   (no loops to strip, no common arc multiplicity to divide out), by
//!   peeling off the classes that arise from lower-degree minimal
//!   networks: each minimal network of degree `s < r` accounts for
//!   `floor(r/s)` connected classes of degree `r`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions};
use crate::series::{binomial, phi_coeff};

/// The three counting families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// All networks up to isomorphism.
    H,
    /// Connected networks up to isomorphism.
    K,
    /// Minimal connected networks (one per ODE-equivalence class).
    M,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::H => "H",
            Family::K => "K",
            Family::M => "M",
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(Family::H),
            "K" => Ok(Family::K),
            "M" => Ok(Family::M),
            other => Err(Error::Domain(format!(
                "unknown counting family {other:?}; expected H, K or M"
            ))),
        }
    }
}

/// Number of multisets of size `a` drawn from `k` kinds:
/// `C(k + a - 1, a)`. An empty selection always counts once.
pub fn multiset_coefficient(k: &BigUint, a: usize) -> BigUint {
    if a == 0 {
        return BigUint::one();
    }
    if k.is_zero() {
        return BigUint::zero();
    }
    binomial(&(k + BigUint::from(a - 1)), a as u64)
}

/// Euler's totient: how many of `1..=r` are coprime to `r`.
pub fn euler_totient(r: u64) -> u64 {
    assert!(r >= 1, "totient is defined for positive arguments");
    let mut remaining = r;
    let mut result = r;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if remaining > 1 {
        result -= result / remaining;
    }
    result
}

/// Evaluates the three families with shared memoization; reuse one
/// counter across calls to avoid recomputing the recursions from scratch.
#[derive(Debug, Default)]
pub struct Counter {
    all: HashMap<(usize, usize), BigUint>,
    connected: HashMap<(usize, usize), BigUint>,
    minimal: HashMap<(usize, usize), BigUint>,
}

impl Counter {
    pub fn new() -> Self {
        Counter::default()
    }

    pub fn count(&mut self, family: Family, n: usize, r: usize) -> Result<BigUint> {
        match family {
            Family::H => self.count_all(n, r),
            Family::K => self.count_connected(n, r),
            Family::M => self.count_minimal(n, r),
        }
    }

    /// `H(n, r)`: the Burnside sum
    /// `sum_rho class_size(rho) * prod_k phi_r(k, rho)^alpha_k`, divided
    /// exactly by `n!`.
    pub fn count_all(&mut self, n: usize, r: usize) -> Result<BigUint> {
        validate(n, r)?;
        if let Some(v) = self.all.get(&(n, r)) {
            return Ok(v.clone());
        }
        let mut total = BigUint::zero();
        for rho in partitions(n)? {
            let mut fixed = rho.class_size();
            for k in 1..=n {
                let a_k = rho.multiplicity(k);
                if a_k == 0 {
                    continue;
                }
                fixed *= phi_coeff(r, k, &rho)?.pow(a_k as u32);
            }
            total += fixed;
        }
        let (count, rem) = total.div_rem(&factorial(n));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "orbit-count sum for n={n}, r={r} is not divisible by n!"
            )));
        }
        self.all.insert((n, r), count.clone());
        Ok(count)
    }

    /// `K(n, r)`: connected networks, by removing from `H(n, r)` every way
    /// of partitioning the cells into smaller connected components. A
    /// component profile is a partition of `n` with no part of size `n`,
    /// choosing a multiset of `alpha_m` connected networks for each
    /// component size `m`.
    pub fn count_connected(&mut self, n: usize, r: usize) -> Result<BigUint> {
        validate(n, r)?;
        if let Some(v) = self.connected.get(&(n, r)) {
            return Ok(v.clone());
        }
        if n == 1 {
            self.connected.insert((n, r), BigUint::one());
            return Ok(BigUint::one());
        }
        let h = self.count_all(n, r)?;
        for m in 1..n {
            self.count_connected(m, r)?;
        }
        let mut disconnected = BigUint::zero();
        for rho in partitions(n)? {
            if rho.multiplicity(n) > 0 {
                continue;
            }
            let mut ways = BigUint::one();
            for m in 1..n {
                let a_m = rho.multiplicity(m);
                if a_m == 0 {
                    continue;
                }
                let k_m = self.connected[&(m, r)].clone();
                ways *= multiset_coefficient(&k_m, a_m);
            }
            disconnected += ways;
        }
        if disconnected > h {
            return Err(Error::Internal(format!(
                "disconnected count exceeds total at n={n}, r={r}"
            )));
        }
        let count = h - disconnected;
        self.connected.insert((n, r), count.clone());
        Ok(count)
    }

    /// `M(n, r)`: minimal connected networks. Every connected class of
    /// degree `r` reduces to a unique minimal network of some degree
    /// `s <= r`, and a minimal network of degree `s` lifts to exactly
    /// `floor(r/s)` classes, so
    /// `M(n, r) = K(n, r) - sum_{s<r} floor(r/s) M(n, s)`.
    pub fn count_minimal(&mut self, n: usize, r: usize) -> Result<BigUint> {
        validate(n, r)?;
        if let Some(v) = self.minimal.get(&(n, r)) {
            return Ok(v.clone());
        }
        if n == 1 {
            // The single one-cell network of any positive degree is all
            // loops; it reduces to degree 0 and is never minimal.
            self.minimal.insert((n, r), BigUint::zero());
            return Ok(BigUint::zero());
        }
        let k = self.count_connected(n, r)?;
        if r == 1 {
            self.minimal.insert((n, r), k.clone());
            return Ok(k);
        }
        for s in 1..r {
            self.count_minimal(n, s)?;
        }
        let mut lifted = BigUint::zero();
        for s in 1..r {
            lifted += BigUint::from(r / s) * &self.minimal[&(n, s)];
        }
        if lifted > k {
            return Err(Error::Internal(format!(
                "minimal-count recursion went negative at n={n}, r={r}"
            )));
        }
        let count = k - lifted;
        self.minimal.insert((n, r), count.clone());
        Ok(count)
    }
}

/// `H(n, r)` with a fresh memo table; see [`Counter::count_all`].
pub fn count_all(n: usize, r: usize) -> Result<BigUint> {
    Counter::new().count_all(n, r)
}

/// `K(n, r)` with a fresh memo table; see [`Counter::count_connected`].
pub fn count_connected(n: usize, r: usize) -> Result<BigUint> {
    Counter::new().count_connected(n, r)
}

/// `M(n, r)` with a fresh memo table; see [`Counter::count_minimal`].
pub fn count_minimal(n: usize, r: usize) -> Result<BigUint> {
    Counter::new().count_minimal(n, r)
}

fn validate(n: usize, r: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("count: n must be at least 1".into()));
    }
    if r == 0 {
        return Err(Error::Domain("count: degree r must be at least 1".into()));
    }
    Ok(())
}

/// A rectangular table of one family, rows `n = 1..=max_n` by columns
/// `r = 1..=max_r`, filled in increasing `n` then increasing `r`.
#[derive(Debug, Clone)]
pub struct CountTable {
    family: Family,
    max_n: usize,
    max_r: usize,
    values: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn compute(family: Family, max_n: usize, max_r: usize) -> Result<Self> {
        validate(max_n, max_r)?;
        let mut counter = Counter::new();
        let mut values = Vec::with_capacity(max_n);
        for n in 1..=max_n {
            let mut row = Vec::with_capacity(max_r);
            for r in 1..=max_r {
                row.push(counter.count(family, n, r)?);
            }
            values.push(row);
        }
        Ok(CountTable {
            family,
            max_n,
            max_r,
            values,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_r(&self) -> usize {
        self.max_r
    }

    /// The entry at 1-based coordinates `(n, r)`.
    pub fn get(&self, n: usize, r: usize) -> &BigUint {
        &self.values[n - 1][r - 1]
    }
}
