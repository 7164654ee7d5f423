//! Integer partitions in multiplicity notation, and the sizes of the
//! symmetric-group conjugacy classes they label.
//!
//! A partition of `n` is stored as a dense multiplicity vector `alpha`,
//! where `alpha[k - 1]` counts the parts equal to `k`. Permutations of
//! `n` objects with cycle type `rho` form a conjugacy class of size
//! `n! / (prod_k k^alpha_k * alpha_k!)`, which is what the Burnside sums
//! upstream consume.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`partitions`]. The dense multiplicity vectors
/// have length `n`, so this bounds memory per partition; it is far above
/// anything the exact counts are evaluated at in practice.
pub const MAX_PARTITION_N: usize = 64;

/// An integer partition of `n` in multiplicity notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    alpha: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its multiplicity vector; `alpha[k - 1]` is
    /// the number of parts equal to `k` and must satisfy
    /// `sum_k k * alpha[k - 1] == n`.
    pub fn from_alpha(n: usize, alpha: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("partition: n must be at least 1".into()));
        }
        if n > MAX_PARTITION_N {
            return Err(Error::Domain(format!(
                "partition: n = {n} exceeds the supported limit of {MAX_PARTITION_N}"
            )));
        }
        if alpha.len() != n {
            return Err(Error::Domain(format!(
                "partition: multiplicity vector has length {}, expected {n}",
                alpha.len()
            )));
        }
        let weight: usize = alpha.iter().enumerate().map(|(i, &a)| (i + 1) * a).sum();
        if weight != n {
            return Err(Error::Domain(format!(
                "partition: parts sum to {weight}, expected {n}"
            )));
        }
        Ok(Partition { n, alpha })
    }

    /// Builds a partition from an explicit list of parts (any order).
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition: parts must be positive".into()));
        }
        let n: usize = parts.iter().sum();
        if n == 0 {
            return Err(Error::Domain("partition: n must be at least 1".into()));
        }
        if n > MAX_PARTITION_N {
            return Err(Error::Domain(format!(
                "partition: n = {n} exceeds the supported limit of {MAX_PARTITION_N}"
            )));
        }
        let mut alpha = vec![0usize; n];
        for &p in parts {
            alpha[p - 1] += 1;
        }
        Ok(Partition { n, alpha })
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The multiplicity vector; entry `k - 1` counts parts equal to `k`.
    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// Number of parts equal to `k` (zero for `k` out of range).
    pub fn multiplicity(&self, k: usize) -> usize {
        if k >= 1 && k <= self.n {
            self.alpha[k - 1]
        } else {
            0
        }
    }

    /// The parts in nonincreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::new();
        for k in (1..=self.n).rev() {
            for _ in 0..self.alpha[k - 1] {
                parts.push(k);
            }
        }
        parts
    }

    /// Size of the conjugacy class of permutations with this cycle type:
    /// `n! / (prod_k k^alpha_k * alpha_k!)`. The division is always exact.
    pub fn class_size(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (i, &a) in self.alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let k = i + 1;
            denom *= BigUint::from(k).pow(a as u32);
            denom *= factorial(a);
        }
        let (q, rem) = factorial(self.n).div_rem(&denom);
        assert!(rem.is_zero(), "conjugacy class size must divide n! exactly");
        q
    }
}

impl fmt::Display for Partition {
    /// Renders bracket notation such as `[1^3 2^1]`, omitting absent part
    /// sizes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (i, &a) in self.alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}^{}", i + 1, a)?;
            first = false;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, each exactly once, in a fixed deterministic
/// order: part lists are nonincreasing and enumerated in ascending
/// lexicographic order, so `[1^n]` comes first and `[n^1]` last.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::Domain("partitions: n must be at least 1".into()));
    }
    if n > MAX_PARTITION_N {
        return Err(Error::Domain(format!(
            "partitions: n = {n} exceeds the supported limit of {MAX_PARTITION_N}"
        )));
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    collect(n, n, &mut parts, &mut out);
    Ok(out)
}

fn collect(remaining: usize, cap: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(parts).expect("generated parts are valid"));
        return;
    }
    for part in 1..=remaining.min(cap) {
        parts.push(part);
        collect(remaining - part, part, parts, out);
        parts.pop();
    }
}

/// `n!` as an exact integer.
pub(crate) fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_match_recurrence() {
        // Independent oracle: p(n, k) = number of partitions of n into
        // parts of size at most k, via the classic two-way recurrence.
        fn p(n: isize, k: usize) -> u64 {
            if n < 0 {
                return 0;
            }
            if n == 0 {
                return 1;
            }
            if k == 0 {
                return 0;
            }
            p(n - k as isize, k) + p(n, k - 1)
        }
        for n in 1..=12 {
            assert_eq!(partitions(n).unwrap().len() as u64, p(n as isize, n));
        }
    }

    #[test]
    fn five_has_seven_partitions() {
        let parts: Vec<Vec<usize>> = partitions(5).unwrap().iter().map(|p| p.parts()).collect();
        assert_eq!(parts.len(), 7);
        let mut expected = vec![
            vec![1, 1, 1, 1, 1],
            vec![2, 1, 1, 1],
            vec![3, 1, 1],
            vec![4, 1],
            vec![2, 2, 1],
            vec![3, 2],
            vec![5],
        ];
        let mut got = parts.clone();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
        // Deterministic order: all-ones first, the single part last.
        assert_eq!(parts[0], vec![1, 1, 1, 1, 1]);
        assert_eq!(parts[6], vec![5]);
    }

    #[test]
    fn six_has_eleven_partitions() {
        assert_eq!(partitions(6).unwrap().len(), 11);
    }

    #[test]
    fn partitions_are_distinct_and_ordered() {
        for n in 1..=10 {
            let ps = partitions(n).unwrap();
            let lists: Vec<Vec<usize>> = ps.iter().map(|p| p.parts()).collect();
            let mut sorted = lists.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), lists.len(), "duplicate partition at n={n}");
            assert_eq!(sorted, lists, "ascending lexicographic order at n={n}");
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(partitions(0).is_err());
        assert!(Partition::from_parts(&[]).is_err());
        assert!(Partition::from_parts(&[2, 0]).is_err());
    }

    #[test]
    fn rejects_oversized() {
        assert!(partitions(MAX_PARTITION_N + 1).is_err());
        assert!(partitions(MAX_PARTITION_N).is_ok());
    }

    #[test]
    fn rejects_inconsistent_alpha() {
        assert!(Partition::from_alpha(4, vec![1, 0, 1, 0]).is_ok());
        assert!(Partition::from_alpha(4, vec![1, 1, 1, 0]).is_err());
        assert!(Partition::from_alpha(4, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn renders_bracket_notation() {
        let p = Partition::from_parts(&[2, 1, 1, 1]).unwrap();
        assert_eq!(p.to_string(), "[1^3 2^1]");
        let q = Partition::from_parts(&[5]).unwrap();
        assert_eq!(q.to_string(), "[5^1]");
    }

    /// Enumerates all of S_5 and tallies cycle types, then checks the
    /// closed-form class sizes against the tally.
    #[test]
    fn class_sizes_match_symmetric_group_enumeration() {
        fn cycle_type(perm: &[usize]) -> Vec<usize> {
            let n = perm.len();
            let mut seen = vec![false; n];
            let mut alpha = vec![0usize; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                    len += 1;
                }
                alpha[len - 1] += 1;
            }
            alpha
        }

        fn permutations(n: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut items: Vec<usize> = (0..n).collect();
            heap(&mut items, n, &mut out);
            out
        }

        fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == 1 {
                out.push(items.clone());
                return;
            }
            for i in 0..k {
                heap(items, k - 1, out);
                if k % 2 == 0 {
                    items.swap(i, k - 1);
                } else {
                    items.swap(0, k - 1);
                }
            }
        }

        let perms = permutations(5);
        assert_eq!(perms.len(), 120);
        for rho in partitions(5).unwrap() {
            let tally = perms
                .iter()
                .filter(|p| cycle_type(p) == rho.alpha())
                .count();
            assert_eq!(
                rho.class_size(),
                BigUint::from(tally),
                "class size of {rho}"
            );
        }
        // Two fixed points the downstream sums lean on.
        let double_transposition = Partition::from_parts(&[2, 2, 1]).unwrap();
        assert_eq!(double_transposition.class_size(), BigUint::from(15u32));
        let five_cycle = Partition::from_parts(&[5]).unwrap();
        assert_eq!(five_cycle.class_size(), BigUint::from(24u32));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=12 {
            let total: BigUint = partitions(n).unwrap().iter().map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n), "sum of class sizes at n={n}");
        }
    }
}
