//! Concrete networks: square in-adjacency matrices with constant row sum,
//! the loop/split/reduce rewrites, canonical forms under cell relabeling,
//! and the ODE-equivalence deciders.
//!
//! Entry `(i, j)` counts the arcs from cell `j` into cell `i`, so every
//! row sums to the common in-degree. Two networks are ODE-equivalent when
//! they admit the same admissible vector fields after identifying cells;
//! for these identical-edge networks that holds exactly when both reduce
//! to the same minimal network up to relabeling, which is what
//! [`are_ode_equivalent`] decides. [`linear_equiv_oracle`] independently
//! checks the matrix-pencil formulation and exists to cross-examine the
//! reduction path in tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::gcd;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cell-count limit for the exhaustive permutation searches
/// ([`Network::canonical_form`], [`are_isomorphic`], [`are_ode_equivalent`],
/// [`linear_equiv_oracle`]); 8! = 40320 relabelings is the most they will
/// scan per call.
pub const MAX_SEARCH_CELLS: usize = 8;

/// A homogeneous network with identical edges: an `n x n` matrix of arc
/// multiplicities with constant row sum. Ordering and equality are by
/// cell count, then row-major entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Network {
    n: usize,
    adj: Vec<u64>,
}

/// What a reduction removed: `loops_removed` self-arcs were stripped from
/// every cell, then every multiplicity was divided by `divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub loops_removed: u64,
    pub divisor: u64,
}

impl ReductionTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct NetworkDoc {
    cells: usize,
    in_adjacency: Vec<Vec<u64>>,
}

impl Network {
    /// Builds a network from its rows, validating shape and the constant
    /// row sum. Degree 0 (the all-zero matrix) is accepted here; callers
    /// that must refuse it gate at the parsing boundary.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedNetwork(
                "a network needs at least one cell".into(),
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedNetwork(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        let degree: u64 = rows[0].iter().sum();
        for (i, row) in rows.iter().enumerate().skip(1) {
            let sum: u64 = row.iter().sum();
            if sum != degree {
                return Err(Error::MalformedNetwork(format!(
                    "row {i} sums to {sum} but row 0 sums to {degree}"
                )));
            }
        }
        let mut adj = Vec::with_capacity(n * n);
        for row in rows {
            adj.extend(row);
        }
        Ok(Network { n, adj })
    }

    /// Internal constructor for callers that guarantee the invariants.
    pub(crate) fn from_flat_unchecked(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        Network { n, adj }
    }

    /// Number of cells.
    pub fn cells(&self) -> usize {
        self.n
    }

    /// The common in-degree (row sum).
    pub fn degree(&self) -> u64 {
        self.adj[..self.n].iter().sum()
    }

    /// Multiplicity of arcs from cell `j` into cell `i`.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.adj[i * self.n + j]
    }

    /// The matrix as rows.
    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.adj.chunks(self.n).map(|row| row.to_vec()).collect()
    }

    /// Adds `s` loops to every cell: the matrix gains `s` on the diagonal
    /// and the degree rises by `s`. ODE equivalence is preserved.
    pub fn add_loops(&self, s: u64) -> Network {
        let mut adj = self.adj.clone();
        for i in 0..self.n {
            adj[i * self.n + i] += s;
        }
        Network { n: self.n, adj }
    }

    /// Replaces every arc by `k` parallel copies, multiplying the degree
    /// by `k`. ODE equivalence is preserved; `k = 0` would collapse the
    /// network and is rejected.
    pub fn split_edges(&self, k: u64) -> Result<Network> {
        if k == 0 {
            return Err(Error::Domain(
                "split: multiplicity k must be at least 1".into(),
            ));
        }
        let adj = self.adj.iter().map(|&e| e * k).collect();
        Ok(Network { n: self.n, adj })
    }

    /// Undoes all the loop-adding and edge-splitting at once: strips the
    /// largest common number of loops `s` (the minimum diagonal entry),
    /// then divides by the gcd `d` of the remaining entries (1 if they
    /// are all zero). The result is reduced, and
    /// `add_loops(split_edges(result, d), s)` rebuilds the input.
    pub fn reduce(&self) -> (Network, ReductionTrace) {
        let n = self.n;
        let s = (0..n).map(|i| self.entry(i, i)).min().expect("n >= 1");
        let mut adj = self.adj.clone();
        for i in 0..n {
            adj[i * n + i] -= s;
        }
        let mut d = adj.iter().fold(0u64, |acc, &e| gcd(acc, e));
        if d == 0 {
            d = 1;
        }
        for e in adj.iter_mut() {
            *e /= d;
        }
        (
            Network { n, adj },
            ReductionTrace {
                loops_removed: s,
                divisor: d,
            },
        )
    }

    /// Whether no further reduction applies: some cell has no loop, and
    /// the positive multiplicities have gcd 1 (degree-0 networks are
    /// reduced by convention).
    pub fn is_reduced(&self) -> bool {
        let n = self.n;
        if (0..n).all(|i| self.entry(i, i) > 0) {
            return false;
        }
        let d = self.adj.iter().fold(0u64, |acc, &e| gcd(acc, e));
        d <= 1
    }

    /// Weak connectivity: ignoring arc directions and loops, every cell
    /// can reach every other. Single-cell networks are connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (self.entry(i, j) > 0 || self.entry(j, i) > 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|v| v)
    }

    /// The matrix relabeled by `perm`: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Network {
        let n = self.n;
        debug_assert_eq!(perm.len(), n);
        let mut adj = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                adj.push(self.entry(perm[i], perm[j]));
            }
        }
        Network { n, adj }
    }

    /// The lexicographically least row-major matrix over all simultaneous
    /// row/column permutations — a canonical representative of the
    /// isomorphism class. Exhaustive search with prefix pruning; networks
    /// beyond [`MAX_SEARCH_CELLS`] cells are rejected.
    pub fn canonical_form(&self) -> Result<Network> {
        if self.n > MAX_SEARCH_CELLS {
            return Err(Error::UnsupportedSize {
                cells: self.n,
                limit: MAX_SEARCH_CELLS,
            });
        }
        let n = self.n;
        let mut best = self.adj.clone();
        let mut perm = vec![0usize; n];
        let mut used = vec![false; n];
        let mut scratch = vec![0u64; n * n];
        self.search_min(0, false, &mut perm, &mut used, &mut scratch, &mut best);
        Ok(Network { n, adj: best })
    }

    /// Depth-first over images `perm[0..depth]`. Once the first `depth`
    /// entries of row 0 are fixed they can be compared against the best
    /// known reading: a greater prefix can never recover, a smaller one
    /// (`ahead`) disables further pruning until the leaf.
    fn search_min(
        &self,
        depth: usize,
        ahead: bool,
        perm: &mut [usize],
        used: &mut [bool],
        scratch: &mut [u64],
        best: &mut [u64],
    ) {
        let n = self.n;
        if depth == n {
            for i in 0..n {
                for j in 0..n {
                    scratch[i * n + j] = self.entry(perm[i], perm[j]);
                }
            }
            if scratch < best {
                best.copy_from_slice(scratch);
            }
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            perm[depth] = v;
            let mut child_ahead = ahead;
            if !ahead {
                let e = self.entry(perm[0], v);
                if e > best[depth] {
                    continue;
                }
                child_ahead = e < best[depth];
            }
            used[v] = true;
            self.search_min(depth + 1, child_ahead, perm, used, scratch, best);
            used[v] = false;
        }
    }

    /// Parses the JSON document `{"cells": n, "in_adjacency": [[..], ..]}`.
    /// Rejects ragged rows, negative entries, inconsistent row sums and —
    /// unless `allow_zero_degree` is set — the all-zero matrix.
    pub fn from_json(text: &str, allow_zero_degree: bool) -> Result<Network> {
        let doc: NetworkDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.in_adjacency.len() != doc.cells {
            return Err(Error::MalformedNetwork(format!(
                "document declares {} cells but has {} rows",
                doc.cells,
                doc.in_adjacency.len()
            )));
        }
        let network = Network::from_rows(doc.in_adjacency)?;
        if network.degree() == 0 && !allow_zero_degree {
            return Err(Error::MalformedNetwork(
                "degree-0 network rejected (it only arises as a reduction result); \
                 pass the zero-degree flag to accept it"
                    .into(),
            ));
        }
        Ok(network)
    }

    /// Serializes to the compact JSON document accepted by [`from_json`].
    pub fn to_json(&self) -> String {
        let doc = NetworkDoc {
            cells: self.n,
            in_adjacency: self.rows(),
        };
        serde_json::to_string(&doc).expect("network serialization cannot fail")
    }
}

impl fmt::Display for Network {
    /// Compact row-major rendering such as `[[0,1],[1,0]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Network({self})")
    }
}

fn check_search_size(g: &Network) -> Result<()> {
    if g.cells() > MAX_SEARCH_CELLS {
        return Err(Error::UnsupportedSize {
            cells: g.cells(),
            limit: MAX_SEARCH_CELLS,
        });
    }
    Ok(())
}

/// Whether two networks differ only by a relabeling of cells.
pub fn are_isomorphic(a: &Network, b: &Network) -> Result<bool> {
    check_search_size(a)?;
    check_search_size(b)?;
    if a.cells() != b.cells() {
        return Ok(false);
    }
    Ok(a.canonical_form()? == b.canonical_form()?)
}

/// Whether two networks are ODE-equivalent: both reduce to the same
/// minimal network up to relabeling. Degrees may differ; cell counts may
/// differ (then the answer is no).
pub fn are_ode_equivalent(a: &Network, b: &Network) -> Result<bool> {
    check_search_size(a)?;
    check_search_size(b)?;
    let (ra, _) = a.reduce();
    let (rb, _) = b.reduce();
    are_isomorphic(&ra, &rb)
}

/// Independent ODE-equivalence decision via the linear formulation: some
/// relabeling `B'` of `b` must satisfy `B' = u1*I + v1*A` and
/// `A = u2*I + v2*B'` over the rationals. Exact rational arithmetic
/// throughout; requires equal cell counts.
pub fn linear_equiv_oracle(a: &Network, b: &Network) -> Result<bool> {
    if a.cells() != b.cells() {
        return Err(Error::DimensionMismatch {
            left: a.cells(),
            right: b.cells(),
        });
    }
    check_search_size(a)?;
    check_search_size(b)?;
    let n = a.cells();
    let mut found = false;
    for_each_permutation(n, &mut |perm| {
        if found {
            return;
        }
        let relabeled = b.relabel(perm);
        if in_identity_pencil(&relabeled, a) && in_identity_pencil(a, &relabeled) {
            found = true;
        }
    });
    Ok(found)
}

/// Whether `t = u*I + v*s` has a rational solution `(u, v)`.
fn in_identity_pencil(t: &Network, s: &Network) -> bool {
    let n = t.cells();
    let rat = |x: u64| BigRational::from_integer(BigInt::from(x));
    // Off-diagonal entries see only v*s.
    let mut v: Option<BigRational> = None;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let sv = s.entry(i, j);
            let tv = t.entry(i, j);
            if sv == 0 {
                if tv != 0 {
                    return false;
                }
            } else {
                let candidate = rat(tv) / rat(sv);
                match &v {
                    None => v = Some(candidate),
                    Some(prev) => {
                        if *prev != candidate {
                            return false;
                        }
                    }
                }
            }
        }
    }
    let diagonal_fits = |u: &BigRational, v: &BigRational| {
        (0..n).all(|i| rat(t.entry(i, i)) == u + v * rat(s.entry(i, i)))
    };
    match v {
        Some(v) => {
            let u = rat(t.entry(0, 0)) - &v * rat(s.entry(0, 0));
            diagonal_fits(&u, &v)
        }
        None => {
            // s has no off-diagonal arcs, and neither does t; fit the
            // diagonals with a line u + v*x.
            if n == 1 {
                return true;
            }
            if let Some(i) = (1..n).find(|&i| s.entry(i, i) != s.entry(0, 0)) {
                let v = (rat(t.entry(i, i)) - rat(t.entry(0, 0)))
                    / (rat(s.entry(i, i)) - rat(s.entry(0, 0)));
                let u = rat(t.entry(0, 0)) - &v * rat(s.entry(0, 0));
                diagonal_fits(&u, &v)
            } else {
                // s is a multiple of the identity; t must be one too.
                (1..n).all(|i| t.entry(i, i) == t.entry(0, 0))
            }
        }
    }
}

/// Calls `visit` with every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, visit: &mut impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, visit);
}

fn heap_permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
