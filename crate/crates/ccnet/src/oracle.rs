//! Brute-force ground truth: exhaustive enumeration of all labeled
//! networks at a given size, a census of their isomorphism classes, and
//! reports that cross-examine the closed-form counts and the reduction
//! structure against that ground truth.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::counting::Counter;
use crate::error::{Error, Result};
use crate::network::Network;
use crate::series::binomial;

/// Default ceiling on how many labeled matrices an exhaustive run may
/// visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// Number of labeled `n`-cell networks of degree `r`:
/// `binomial(n + r - 1, r)^n` (each row is a weak composition of `r`).
pub fn omega_size(n: usize, r: u64) -> BigUint {
    assert!(n >= 1, "a network needs at least one cell");
    let rows = binomial(&BigUint::from(n as u64 + r - 1), r);
    let mut size = BigUint::one();
    for _ in 0..n {
        size *= &rows;
    }
    size
}

/// Streams every labeled `n`-cell network of degree `r` exactly once, in
/// ascending row-major lexicographic order. Refuses to start if the space
/// exceeds `budget`.
pub fn enumerate_omega(n: usize, r: u64, budget: u64) -> Result<OmegaIter> {
    if n == 0 {
        return Err(Error::Domain("enumeration: n must be at least 1".into()));
    }
    if r == 0 {
        return Err(Error::Domain(
            "enumeration: degree r must be at least 1".into(),
        ));
    }
    let size = omega_size(n, r);
    if size > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            cells: n,
            degree: r,
            size,
            budget,
        });
    }
    Ok(OmegaIter {
        rows: compositions(n, r),
        indices: vec![0; n],
        n,
        exhausted: false,
    })
}

/// Iterator over the full labeled space; see [`enumerate_omega`].
#[derive(Debug)]
pub struct OmegaIter {
    rows: Vec<Vec<u64>>,
    indices: Vec<usize>,
    n: usize,
    exhausted: bool,
}

impl Iterator for OmegaIter {
    type Item = Network;

    fn next(&mut self) -> Option<Network> {
        if self.exhausted {
            return None;
        }
        let mut adj = Vec::with_capacity(self.n * self.n);
        for &i in &self.indices {
            adj.extend_from_slice(&self.rows[i]);
        }
        let item = Network::from_flat_unchecked(self.n, adj);
        // Odometer increment, last row fastest, so matrices come out in
        // row-major lexicographic order.
        let mut pos = self.n;
        loop {
            if pos == 0 {
                self.exhausted = true;
                break;
            }
            pos -= 1;
            self.indices[pos] += 1;
            if self.indices[pos] < self.rows.len() {
                break;
            }
            self.indices[pos] = 0;
        }
        Some(item)
    }
}

/// All weak compositions of `r` into `n` parts, ascending lexicographic.
fn compositions(n: usize, r: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    fill(0, r, &mut current, &mut out);
    out
}

fn fill(pos: usize, remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill(pos + 1, remaining - v, current, out);
    }
}

/// One canonical representative per isomorphism class of the labeled
/// space, sorted by their row-major matrices.
pub fn isomorphism_classes(n: usize, r: u64, budget: u64) -> Result<Vec<Network>> {
    let mut classes = BTreeSet::new();
    for network in enumerate_omega(n, r, budget)? {
        classes.insert(network.canonical_form()?);
    }
    Ok(classes.into_iter().collect())
}

/// Aggregate statistics of one exhaustive run.
#[derive(Debug, Clone)]
pub struct OrbitCensus {
    pub n: usize,
    pub r: u64,
    /// Isomorphism classes in the labeled space.
    pub total_orbits: u64,
    /// ... of which weakly connected.
    pub connected_orbits: u64,
    /// ... of which both connected and reduced.
    pub minimal_connected_orbits: u64,
    /// Connected classes grouped by the canonical form of their
    /// reduction; values sum to `connected_orbits`.
    pub class_breakdown: BTreeMap<Network, u64>,
}

/// Enumerates the labeled space and tallies its isomorphism classes.
pub fn census(n: usize, r: u64, budget: u64) -> Result<OrbitCensus> {
    let classes = isomorphism_classes(n, r, budget)?;
    let mut connected = 0u64;
    let mut minimal_connected = 0u64;
    let mut class_breakdown: BTreeMap<Network, u64> = BTreeMap::new();
    for class in &classes {
        if !class.is_connected() {
            continue;
        }
        connected += 1;
        if class.is_reduced() {
            minimal_connected += 1;
        }
        let (reduced, _) = class.reduce();
        let key = reduced.canonical_form()?;
        *class_breakdown.entry(key).or_insert(0) += 1;
    }
    Ok(OrbitCensus {
        n,
        r,
        total_orbits: classes.len() as u64,
        connected_orbits: connected,
        minimal_connected_orbits: minimal_connected,
        class_breakdown,
    })
}

/// One expected-vs-actual comparison inside a report. Values are exact
/// decimal strings.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn compare(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Check {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        Check {
            name: name.into(),
            expected,
            actual,
            pass,
        }
    }
}

/// Outcome of cross-examining brute force against the closed forms at one
/// `(n, r)`. A failing check is report content, not an error.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n: usize,
    pub r: u64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// One line per check plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = format!("verification report for n={}, r={}\n", self.n, self.r);
        for check in &self.checks {
            let verdict = if check.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{verdict} {}: expected {}, actual {}\n",
                check.name, check.expected, check.actual
            ));
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }

    /// Machine-readable form; check values are exact JSON integers.
    pub fn render_json(&self) -> String {
        let mut out = format!("{{\"n\":{},\"r\":{},\"checks\":[", self.n, self.r);
        for (i, check) in self.checks.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!(
                "{{\"name\":\"{}\",\"expected\":{},\"actual\":{},\"pass\":{}}}",
                json_escape(&check.name),
                check.expected,
                check.actual,
                check.pass
            ));
        }
        out.push_str("]}");
        out
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Compares the census of `(n, r)` against the closed-form counts of all
/// three families.
pub fn verify_counts(n: usize, r: u64, budget: u64) -> Result<VerificationReport> {
    let census = census(n, r, budget)?;
    let mut counter = Counter::new();
    let checks = vec![
        Check::compare(
            "isomorphism classes",
            counter.count_all(n, r as usize)?,
            census.total_orbits,
        ),
        Check::compare(
            "connected classes",
            counter.count_connected(n, r as usize)?,
            census.connected_orbits,
        ),
        Check::compare(
            "minimal connected classes",
            counter.count_minimal(n, r as usize)?,
            census.minimal_connected_orbits,
        ),
    ];
    Ok(VerificationReport { n, r, checks })
}

/// Cross-examines the reduction structure of the connected classes at
/// `(n, r)`: every minimal network of degree `s < r` must be the
/// reduction of exactly `floor(r/s)` classes, every minimal network of
/// degree `r` only of itself, and the totals must match the counting
/// recursion. Runs censuses at every degree `1..=r`.
pub fn verify_class_structure(n: usize, r: u64, budget: u64) -> Result<VerificationReport> {
    let target = census(n, r, budget)?;
    let mut counter = Counter::new();
    let mut checks = Vec::new();
    let mut expected_lifted = BigUint::zero();
    for s in 1..r {
        let lower = census(n, s, budget)?;
        for (form, _) in lower
            .class_breakdown
            .iter()
            .filter(|(form, _)| form.degree() == s)
        {
            let actual = target.class_breakdown.get(form).copied().unwrap_or(0);
            checks.push(Check::compare(
                format!("classes of degree {r} reducing to the degree-{s} minimal network {form}"),
                r / s,
                actual,
            ));
        }
        expected_lifted += BigUint::from(r / s) * counter.count_minimal(n, s as usize)?;
    }
    for (form, count) in target
        .class_breakdown
        .iter()
        .filter(|(form, _)| form.degree() == r)
    {
        checks.push(Check::compare(
            format!("classes of degree {r} reducing to the degree-{r} minimal network {form}"),
            1u64,
            *count,
        ));
    }
    let lifted_total: u64 = target
        .class_breakdown
        .iter()
        .filter(|(form, _)| form.degree() >= 1 && form.degree() < r)
        .map(|(_, count)| count)
        .sum();
    checks.push(Check::compare(
        "connected classes reducing to a lower positive degree",
        expected_lifted,
        lifted_total,
    ));
    // Only the single-cell network reduces all the way to degree 0.
    let zero_total: u64 = target
        .class_breakdown
        .iter()
        .filter(|(form, _)| form.degree() == 0)
        .map(|(_, count)| count)
        .sum();
    checks.push(Check::compare(
        "connected classes reducing to degree 0",
        if n == 1 { 1u64 } else { 0 },
        zero_total,
    ));
    Ok(VerificationReport { n, r, checks })
}
