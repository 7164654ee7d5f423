//! Acceptance suite: one test per shipping criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`; a FAIL also panics with the
//! same text so plain `cargo test` reports it).

use std::process::Command;
use std::time::{Duration, Instant};

use ccnet::counting::{euler_totient, Counter, Family};
use ccnet::network::{are_ode_equivalent, linear_equiv_oracle, Network};
use ccnet::oracle::{census, enumerate_omega, DEFAULT_ENUMERATION_BUDGET};
use ccnet::partitions::{partitions, Partition};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PUBLISHED_H: [[u64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [3, 6, 10, 15, 21, 28],
    [7, 44, 180, 590, 1582, 3724],
    [19, 475, 6915, 63420, 412230, 2080827],
    [47, 6874, 444722, 14072268, 265076184, 3405665412],
    [
        130,
        126750,
        43242604,
        5569677210,
        355906501686,
        13508534834704,
    ],
];

const PUBLISHED_K: [[u64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [2, 5, 9, 14, 20, 27],
    [4, 38, 170, 575, 1561, 3696],
    [9, 416, 6690, 62725, 410438, 2076725],
    [20, 6209, 436277, 14000798, 264632734, 3403484793],
    [
        51,
        117020,
        42722972,
        5554560632,
        355631996061,
        13505066262007,
    ],
];

const PUBLISHED_M: [[u64; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [2, 1, 2, 2, 4, 2],
    [4, 30, 128, 371, 982, 1973],
    [9, 398, 6265, 55628, 347704, 1659615],
    [20, 6169, 430048, 13558332, 250631916, 3138415822],
    [
        51,
        116918,
        42605901,
        5511720691,
        350077435378,
        13149391543076,
    ],
];

fn report(line: &str, pass: bool) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("{verdict}: {line}");
    assert!(pass, "FAIL: {line}");
}

fn csv_for(table: &[[u64; 6]; 6]) -> String {
    let mut out = String::from("n/r,1,2,3,4,5,6\n");
    for (i, row) in table.iter().enumerate() {
        out.push_str(&(i + 1).to_string());
        for value in row {
            out.push(',');
            out.push_str(&value.to_string());
        }
        out.push('\n');
    }
    out
}

fn timed_table(family: &str) -> (String, Duration) {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_ccnet"))
        .args(["table", family, "6", "6"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(output.status.success(), "table {family} 6 6 failed");
    (String::from_utf8(output.stdout).expect("UTF-8"), elapsed)
}

fn table_criterion(family: &str, published: &[[u64; 6]; 6]) {
    let (csv, elapsed) = timed_table(family);
    let pass = csv == csv_for(published) && elapsed < Duration::from_secs(1);
    report(
        &format!(
            "table {family} 6 6 reproduces all 36 published values in {:?} (< 1 s)",
            elapsed
        ),
        pass,
    );
}

#[test]
fn table_h_matches_published_values_quickly() {
    table_criterion("H", &PUBLISHED_H);
}

#[test]
fn table_k_matches_published_values_quickly() {
    table_criterion("K", &PUBLISHED_K);
}

#[test]
fn table_m_matches_published_values_quickly() {
    table_criterion("M", &PUBLISHED_M);
}

#[test]
fn two_cell_minimal_counts_are_the_totient() {
    let mut counter = Counter::new();
    let mut pass = true;
    for r in 2..=100usize {
        let closed = counter.count(Family::M, 2, r).expect("count");
        if closed != BigUint::from(euler_totient(r as u64)) {
            pass = false;
            break;
        }
    }
    report(
        "minimal two-cell counts equal Euler's totient for every degree from 2 to 100",
        pass,
    );
}

#[test]
fn census_agrees_with_closed_forms_on_the_small_envelope() {
    let mut envelope: Vec<(usize, u64)> = Vec::new();
    for n in 1..=4usize {
        for r in 1..=3u64 {
            envelope.push((n, r));
        }
    }
    envelope.push((5, 1));
    envelope.push((5, 2));

    let start = Instant::now();
    let mut counter = Counter::new();
    let mut pass = true;
    for &(n, r) in &envelope {
        let c = census(n, r, DEFAULT_ENUMERATION_BUDGET).expect("census");
        let all = counter.count(Family::H, n, r as usize).expect("H");
        let connected = counter.count(Family::K, n, r as usize).expect("K");
        let minimal = counter.count(Family::M, n, r as usize).expect("M");
        if BigUint::from(c.total_orbits) != all
            || BigUint::from(c.connected_orbits) != connected
            || BigUint::from(c.minimal_connected_orbits) != minimal
        {
            eprintln!("census mismatch at n={n}, r={r}");
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    pass = pass && elapsed < Duration::from_secs(600);
    report(
        &format!(
            "brute-force census matches all three closed-form counts on 14 (n, r) \
             pairs through 5 cells in {:?} (< 10 min)",
            elapsed
        ),
        pass,
    );
}

#[test]
fn three_cell_degree_two_classes_split_two_to_one_over_degree_one_minimals() {
    let c = census(3, 2, DEFAULT_ENUMERATION_BUDGET).expect("census");
    let degree_one_minimals: Vec<_> = c
        .class_breakdown
        .iter()
        .filter(|(form, _)| form.degree() == 1)
        .collect();
    let pass = c.connected_orbits == 38
        && c.connected_orbits - c.minimal_connected_orbits == 8
        && degree_one_minimals.len() == 4
        && degree_one_minimals.iter().all(|&(_, &count)| count == 2);
    report(
        "at 3 cells, degree 2: 38 connected classes, 8 non-minimal, and each of the \
         4 minimal degree-1 networks absorbs exactly 2 of them",
        pass,
    );
}

fn connected_three_cell_networks() -> Vec<Network> {
    let mut all = Vec::new();
    for r in 1..=2u64 {
        for g in enumerate_omega(3, r, DEFAULT_ENUMERATION_BUDGET).expect("enumerate") {
            if g.is_connected() {
                all.push(g);
            }
        }
    }
    all
}

fn random_network(rng: &mut ChaCha8Rng, n: usize, r: u64) -> Network {
    let mut rows = vec![vec![0u64; n]; n];
    for row in &mut rows {
        for _ in 0..r {
            row[rng.random_range(0..n)] += 1;
        }
    }
    Network::from_rows(rows).expect("constant row sums by construction")
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

#[test]
fn reduction_decider_and_linear_oracle_agree() {
    let pool = connected_three_cell_networks();
    let mut pass = true;
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i..] {
            let by_reduction = are_ode_equivalent(a, b).expect("decider");
            let by_oracle = linear_equiv_oracle(a, b).expect("oracle");
            if by_reduction != by_oracle {
                eprintln!("disagreement on {a} vs {b}");
                pass = false;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x0ddba11);
    for trial in 0..1000 {
        let (a, b) = if trial % 2 == 0 {
            let ra = rng.random_range(1..=3);
            let rb = rng.random_range(1..=3);
            let a = random_network(&mut rng, 4, ra);
            let b = random_network(&mut rng, 4, rb);
            (a, b)
        } else {
            // A pair built by class-preserving rewrites of one base network,
            // so both verdicts should come back positive.
            let base = random_network(&mut rng, 4, 1);
            let ka = rng.random_range(1..=3);
            let kb = rng.random_range(1..=3);
            let a = base
                .split_edges(ka)
                .expect("positive factor")
                .relabel(&random_permutation(&mut rng, 4));
            let b = base
                .split_edges(kb)
                .expect("positive factor")
                .relabel(&random_permutation(&mut rng, 4));
            (a, b)
        };
        let by_reduction = are_ode_equivalent(&a, &b).expect("decider");
        let by_oracle = linear_equiv_oracle(&a, &b).expect("oracle");
        if by_reduction != by_oracle {
            eprintln!("disagreement on random pair {a} vs {b}");
            pass = false;
        }
    }
    report(
        "reduction decider and linear-algebra oracle agree on every pair of connected \
         3-cell networks of degree <= 2 and on 1000 random 4-cell pairs",
        pass,
    );
}

fn rewrite_algebra_holds(g: &Network, k: u64) -> bool {
    let (reduced, trace) = g.reduce();
    let (again, idle) = reduced.reduce();
    if again != reduced || idle.loops_removed != 0 || idle.divisor != 1 {
        return false;
    }
    let rebuilt = reduced
        .split_edges(trace.divisor)
        .expect("divisor is positive")
        .add_loops(trace.loops_removed);
    if &rebuilt != g {
        return false;
    }
    let left = g.add_loops(1).split_edges(k).expect("positive factor");
    let right = g.split_edges(k).expect("positive factor").add_loops(k);
    left == right
}

#[test]
fn reduction_and_rewrites_satisfy_their_algebra() {
    let mut pass = true;
    for n in 1..=3usize {
        for r in 1..=3u64 {
            for g in enumerate_omega(n, r, DEFAULT_ENUMERATION_BUDGET).expect("enumerate") {
                for k in 1..=5u64 {
                    if !rewrite_algebra_holds(&g, k) {
                        eprintln!("algebra fails on {g} with factor {k}");
                        pass = false;
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xa15e);
    for _ in 0..1000 {
        let n = rng.random_range(4..=8);
        let r = rng.random_range(1..=12);
        let g = random_network(&mut rng, n, r);
        let k = rng.random_range(1..=5);
        if !rewrite_algebra_holds(&g, k) {
            eprintln!("algebra fails on random {g} with factor {k}");
            pass = false;
        }
    }
    report(
        "reduce is idempotent, its trace rebuilds the input, and edge-splitting \
         commutes with loop shifts on all small networks and 1000 random larger ones",
        pass,
    );
}

#[test]
fn five_cell_partitions_and_conjugacy_class_sizes() {
    let expected: Vec<Partition> = [
        vec![1, 1, 1, 1, 1],
        vec![2, 1, 1, 1],
        vec![2, 2, 1],
        vec![3, 1, 1],
        vec![3, 2],
        vec![4, 1],
        vec![5],
    ]
    .iter()
    .map(|parts| Partition::from_parts(parts).expect("valid partition"))
    .collect();
    let mut got = partitions(5).expect("partitions");
    let mut sorted_expected = expected.clone();
    got.sort_by_key(|p| p.parts());
    sorted_expected.sort_by_key(|p| p.parts());
    let mut pass = got == sorted_expected;

    for n in 1..=12usize {
        let total: BigUint = partitions(n)
            .expect("partitions")
            .iter()
            .map(Partition::class_size)
            .sum();
        let factorial: BigUint = (1..=n as u64).map(BigUint::from).product();
        if total != factorial {
            eprintln!("class sizes for n={n} sum to {total}, want {factorial}");
            pass = false;
        }
    }
    report(
        "the 7 partitions of 5 come out exactly once each and conjugacy class sizes \
         sum to n! for n up to 12",
        pass,
    );
}
