//! Named lattice families.
//!
//! Every generator emits covers that are already a transitive reduction, so
//! the output goes through [`Poset::new`] unchanged.

use crate::error::{Error, Result};
use crate::poset::Poset;

pub const MAX_BOOLEAN_RANK: usize = 20;
pub const MAX_PARTITION_SIZE: usize = 7;

fn build(names: Vec<String>, covers: Vec<(usize, usize)>) -> Poset {
    Poset::new(names, covers).expect("generator emits a valid Hasse diagram")
}

fn named(names: &[&str], covers: &[(&str, &str)]) -> Poset {
    let id = |s: &str| names.iter().position(|n| *n == s).unwrap();
    build(
        names.iter().map(|s| s.to_string()).collect(),
        covers.iter().map(|&(a, b)| (id(a), id(b))).collect(),
    )
}

/// Total order `0 < 1 < … < v−1`.
pub fn chain(v: usize) -> Result<Poset> {
    if v == 0 {
        return Err(Error::InvalidParameter("chain needs at least one element".into()));
    }
    let names = (0..v).map(|i| i.to_string()).collect();
    let covers = (1..v).map(|i| (i - 1, i)).collect();
    Ok(build(names, covers))
}

/// Subsets of an `n`-set; element id is the bitmask, named `b` followed by
/// the characteristic string (most significant bit first).
pub fn boolean(n: usize) -> Result<Poset> {
    if n > MAX_BOOLEAN_RANK {
        return Err(Error::InvalidParameter(format!(
            "boolean rank {n} exceeds the limit of {MAX_BOOLEAN_RANK}"
        )));
    }
    let v = 1usize << n;
    let names = (0..v)
        .map(|m| {
            let mut name = String::with_capacity(n + 1);
            name.push('b');
            for bit in (0..n).rev() {
                name.push(if m >> bit & 1 == 1 { '1' } else { '0' });
            }
            name
        })
        .collect();
    let mut covers = Vec::with_capacity(n << n.saturating_sub(1));
    for m in 0..v {
        for bit in 0..n {
            if m >> bit & 1 == 0 {
                covers.push((m, m | 1 << bit));
            }
        }
    }
    Ok(build(names, covers))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// Divisors of `n` under divisibility; covers are prime quotients.
pub fn divisor(n: u64) -> Result<Poset> {
    if n == 0 {
        return Err(Error::InvalidParameter("divisor lattice needs N ≥ 1".into()));
    }
    let primes = prime_factors(n);
    let mut divisors = vec![1u64];
    for &p in &primes {
        let mut power = n;
        let mut exponent = 0;
        while power.is_multiple_of(p) {
            power /= p;
            exponent += 1;
        }
        let current = divisors.clone();
        let mut factor = 1;
        for _ in 0..exponent {
            factor *= p;
            divisors.extend(current.iter().map(|d| d * factor));
        }
    }
    divisors.sort_unstable();
    let id = |d: u64| divisors.binary_search(&d).unwrap();
    let mut covers = Vec::new();
    for &d in &divisors {
        for &p in &primes {
            if (n / d).is_multiple_of(p) {
                covers.push((id(d), id(d * p)));
            }
        }
    }
    let names = divisors.iter().map(u64::to_string).collect();
    Ok(build(names, covers))
}

/// Restricted growth strings of length `m`, i.e. all set partitions of `{1..m}`.
fn set_partitions(m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut rgs = vec![0u8; m];
    fn extend(pos: usize, max: u8, rgs: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for b in 0..=max + 1 {
            rgs[pos] = b;
            extend(pos + 1, max.max(b), rgs, out);
        }
    }
    if m > 0 {
        // element 1 always opens block 0
        extend(1, 0, &mut rgs, &mut out);
    }
    out
}

fn block_count(rgs: &[u8]) -> usize {
    rgs.iter().copied().max().map_or(0, |b| b as usize + 1)
}

/// Renumbers blocks so that the result is a restricted growth string again.
fn normalize(labels: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 16];
    let mut next = 0;
    labels
        .iter()
        .map(|&b| {
            if map[b as usize] == u8::MAX {
                map[b as usize] = next;
                next += 1;
            }
            map[b as usize]
        })
        .collect()
}

fn partition_name(rgs: &[u8]) -> String {
    let blocks = block_count(rgs);
    let mut parts = vec![String::new(); blocks];
    for (i, &b) in rgs.iter().enumerate() {
        parts[b as usize].push(char::from_digit(i as u32 + 1, 10).unwrap());
    }
    parts.join("|")
}

/// Partitions of `{1..m}` ordered by refinement, finest at the bottom.
///
/// Names list blocks by their smallest member, e.g. `13|2`.
pub fn partition(m: usize) -> Result<Poset> {
    if m == 0 || m > MAX_PARTITION_SIZE {
        return Err(Error::InvalidParameter(format!(
            "partition lattice size must be in 1..={MAX_PARTITION_SIZE}, got {m}"
        )));
    }
    let mut parts = set_partitions(m);
    // finest first: more blocks come earlier
    parts.sort_by(|a, b| block_count(b).cmp(&block_count(a)).then(a.cmp(b)));
    let index: std::collections::HashMap<Vec<u8>, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let mut covers = Vec::new();
    for (id, rgs) in parts.iter().enumerate() {
        let blocks = block_count(rgs) as u8;
        for a in 0..blocks {
            for b in a + 1..blocks {
                let merged: Vec<u8> = rgs.iter().map(|&x| if x == b { a } else { x }).collect();
                covers.push((id, index[&normalize(&merged)]));
            }
        }
    }
    let names = parts.iter().map(|p| partition_name(p)).collect();
    Ok(build(names, covers))
}

/// The non-graded lattice N5: `p ⋖ q ⋖ r ⋖ s` and `p ⋖ t ⋖ s`.
pub fn pentagon() -> Poset {
    named(
        &["p", "q", "r", "s", "t"],
        &[("p", "q"), ("q", "r"), ("r", "s"), ("p", "t"), ("t", "s")],
    )
}

/// Two chains of length three between `p` and `s`.
pub fn hexagon() -> Poset {
    named(
        &["p", "q", "r", "s", "t", "u"],
        &[
            ("p", "q"),
            ("q", "r"),
            ("r", "s"),
            ("p", "t"),
            ("t", "u"),
            ("u", "s"),
        ],
    )
}

/// `k` disjoint `k`-element chains with a common bottom and top.
pub fn parallel_chains(k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::InvalidParameter("parallel-chains needs k ≥ 1".into()));
    }
    let mut names = vec!["bot".to_string()];
    for c in 1..=k {
        for j in 1..=k {
            names.push(format!("c{c}.{j}"));
        }
    }
    names.push("top".to_string());
    let top = names.len() - 1;
    let at = |c: usize, j: usize| 1 + c * k + j;
    let mut covers = Vec::with_capacity(k * (k + 1));
    for c in 0..k {
        covers.push((0, at(c, 0)));
        for j in 1..k {
            covers.push((at(c, j - 1), at(c, j)));
        }
        covers.push((at(c, k - 1), top));
    }
    Ok(build(names, covers))
}

/// The seven-element semimodular lattice with nine edges used as the
/// running example for both Björklund-style compilers.
pub fn figure1() -> Poset {
    named(
        &["0", "1", "2", "3", "4", "5", "6"],
        &[
            ("0", "1"),
            ("0", "2"),
            ("1", "3"),
            ("1", "5"),
            ("2", "4"),
            ("2", "5"),
            ("3", "6"),
            ("4", "6"),
            ("5", "6"),
        ],
    )
}

/// Four-element diamond `a ⋖ b, a ⋖ c, b ⋖ d, c ⋖ d` (the Boolean lattice B₂ with letter names).
pub fn diamond() -> Poset {
    named(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
}
