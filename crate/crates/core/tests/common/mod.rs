//! Independent oracles shared by the integration targets. Nothing here calls
//! the library code it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

pub fn disjoint(x: u64, y: u64) -> bool {
    x & y == 0
}

/// Subset-enumeration counts for one ordered pair of supports `(D, E)`.
#[derive(Debug, PartialEq, Eq)]
pub struct PairCounts {
    pub nonempty_disjoint: u64,
    pub meets: u64,
    pub nonempty_disjoint_both: u64,
    pub meets_either: u64,
    /// `t[i]`: pairs `x ≠ y`, both nonzero, `y` disjoint from `E`, with
    /// exactly `i` of `x`, `x + y` disjoint from `D`.
    pub t: [u64; 3],
    /// `pattern[a][b]`: vectors with `[x ∩ D = ∅] = a` and `[x ∩ E = ∅] = b`.
    pub pattern: [[u64; 2]; 2],
    /// Pairs `x ≠ y`, both nonzero, `y` meeting `E`.
    pub tprime: u64,
}

pub fn pair_counts(m: u32, d: u64, e: u64) -> PairCounts {
    let n = 1u64 << m;
    let mut c = PairCounts {
        nonempty_disjoint: 0,
        meets: 0,
        nonempty_disjoint_both: 0,
        meets_either: 0,
        t: [0; 3],
        pattern: [[0; 2]; 2],
        tprime: 0,
    };
    for x in 0..n {
        let (xd, xe) = (disjoint(x, d), disjoint(x, e));
        c.pattern[xd as usize][xe as usize] += 1;
        if xd {
            c.nonempty_disjoint += (x != 0) as u64;
        } else {
            c.meets += 1;
        }
        if xd && xe {
            c.nonempty_disjoint_both += (x != 0) as u64;
        } else {
            c.meets_either += 1;
        }
    }
    for x in 1..n {
        for y in 1..n {
            if x == y {
                continue;
            }
            if disjoint(y, e) {
                c.t[disjoint(x, d) as usize + disjoint(x ^ y, d) as usize] += 1;
            } else {
                c.tprime += 1;
            }
        }
    }
    c
}

fn complement(m: u32, s: u64) -> Vec<u64> {
    (0..1u64 << m).filter(|t| t & !s != 0).collect()
}

fn parity(x: u64) -> u32 {
    x.count_ones() & 1
}

/// Lee weight of the message `(p, q + u r)` computed symbol by symbol.
pub fn naive_lee_weight(m: u32, masks: (u64, u64, u64), p: u64, q: u64, r: u64) -> u64 {
    let (c1, c2, c3) = (
        complement(m, masks.0),
        complement(m, masks.1),
        complement(m, masks.2),
    );
    let mut weight = 0u64;
    for &t1 in &c1 {
        for &t2 in &c2 {
            for &t3 in &c3 {
                let y = parity(q & t2);
                let z = parity(p & t1) ^ parity(q & t3) ^ parity(r & t2);
                weight += (z + (y ^ z)) as u64;
            }
        }
    }
    weight
}

/// Distribution over distinct codewords, found by encoding every message
/// symbol by symbol and hashing the words.
pub fn naive_codeword_distribution(m: u32, masks: (u64, u64, u64)) -> BTreeMap<u64, u64> {
    let (c1, c2, c3) = (
        complement(m, masks.0),
        complement(m, masks.1),
        complement(m, masks.2),
    );
    let mask = (1u64 << m) - 1;
    let mut seen = HashSet::new();
    let mut dist = BTreeMap::new();
    for idx in 0..1u64 << (3 * m) {
        let (p, q, r) = (idx & mask, idx >> m & mask, idx >> (2 * m) & mask);
        let mut word = Vec::with_capacity(c1.len() * c2.len() * c3.len());
        let mut weight = 0u64;
        for &t1 in &c1 {
            for &t2 in &c2 {
                for &t3 in &c3 {
                    let y = parity(q & t2);
                    let z = parity(p & t1) ^ parity(q & t3) ^ parity(r & t2);
                    weight += (z + (y ^ z)) as u64;
                    word.push((y as u8) << 1 | z as u8);
                }
            }
        }
        if seen.insert(word) {
            *dist.entry(weight).or_insert(0) += 1;
        }
    }
    dist
}
