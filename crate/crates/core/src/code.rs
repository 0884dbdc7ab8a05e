//! Defining sets, the encoding map `a ↦ ((a·l))_{l∈L}`, and exhaustive
//! (brute-force) weight distributions and kernels.
//!
//! The exhaustive sweep walks the message space in reflected Gray-code
//! order. Because encoding is additive, consecutive codewords differ by the
//! image of a single unit message, so each step is one word-parallel XOR of
//! the packed `(Q, R)` pair followed by two popcounts.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{check_dim, inner_product_raw, BitVec, CodewordZ2u, MixedWord};
use crate::simplicial::{complement_members, SupportSet};

/// Above this `m` the distinct-codeword self-check is skipped.
pub const DEDUP_CHECK_MAX_M: u32 = 3;

/// One `(m, D, E, F)` construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Instance {
    m: u32,
    d: SupportSet,
    e: SupportSet,
    f: SupportSet,
}

impl Instance {
    pub fn new(m: u32, d: SupportSet, e: SupportSet, f: SupportSet) -> Result<Self> {
        check_dim(m)?;
        for s in [d, e, f] {
            if s.dim() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: s.dim(),
                });
            }
        }
        Ok(Self { m, d, e, f })
    }

    /// Supports given as 1-based coordinate lists.
    pub fn from_coords(m: u32, d: &[u32], e: &[u32], f: &[u32]) -> Result<Self> {
        Self::new(
            m,
            SupportSet::from_coords(d, m)?,
            SupportSet::from_coords(e, m)?,
            SupportSet::from_coords(f, m)?,
        )
    }

    pub fn from_masks(m: u32, d: u64, e: u64, f: u64) -> Result<Self> {
        Self::new(
            m,
            SupportSet::from_bits(d, m)?,
            SupportSet::from_bits(e, m)?,
            SupportSet::from_bits(f, m)?,
        )
    }

    /// Every triple of proper supports over `[m]`, lexicographic by masks.
    pub fn all(m: u32) -> Result<Vec<Self>> {
        let supports = SupportSet::all_proper(m)?;
        let mut out = Vec::with_capacity(supports.len().pow(3));
        for &d in &supports {
            for &e in &supports {
                for &f in &supports {
                    out.push(Self { m, d, e, f });
                }
            }
        }
        Ok(out)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn d(&self) -> SupportSet {
        self.d
    }

    pub fn e(&self) -> SupportSet {
        self.e
    }

    pub fn f(&self) -> SupportSet {
        self.f
    }

    /// `|L| = (2^m − 2^{|D|})(2^m − 2^{|E|})(2^m − 2^{|F|})`.
    pub fn length(&self) -> u64 {
        let side = |s: SupportSet| (1u64 << self.m) - (1u64 << s.size());
        side(self.d) * side(self.e) * side(self.f)
    }

    pub fn gray_length(&self) -> u64 {
        2 * self.length()
    }

    /// `|R^m| = 2^{3m}`.
    pub fn message_count(&self) -> u64 {
        1u64 << (3 * self.m)
    }

    /// `Some(n)` when `|D| = |E| = |F| = n`.
    pub fn equal_size(&self) -> Option<u32> {
        let n = self.d.size();
        (self.e.size() == n && self.f.size() == n).then_some(n)
    }
}

/// The ordered defining set `L`: the Cartesian product of three coordinate
/// lists, lexicographic in `(t1, t2, t3)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DefiningSet {
    m: u32,
    t1: Vec<BitVec>,
    t2: Vec<BitVec>,
    t3: Vec<BitVec>,
}

impl DefiningSet {
    /// `L = Δ_D^c × Δ_E^c × Δ_F^c`, each factor ascending.
    pub fn new(inst: &Instance) -> Self {
        Self {
            m: inst.m,
            t1: complement_members(inst.d),
            t2: complement_members(inst.e),
            t3: complement_members(inst.f),
        }
    }

    /// Product of three arbitrary lists of vectors. No closed form is
    /// claimed for sets built this way; the exhaustive engine accepts them.
    pub fn from_factors(m: u32, t1: Vec<BitVec>, t2: Vec<BitVec>, t3: Vec<BitVec>) -> Result<Self> {
        check_dim(m)?;
        for v in t1.iter().chain(&t2).chain(&t3) {
            if v.dim() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: v.dim(),
                });
            }
        }
        Ok(Self { m, t1, t2, t3 })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.t1.len() * self.t2.len() * self.t3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn factors(&self) -> (&[BitVec], &[BitVec], &[BitVec]) {
        (&self.t1, &self.t2, &self.t3)
    }

    pub fn triple(&self, i: usize) -> (BitVec, BitVec, BitVec) {
        let n3 = self.t3.len();
        let n2 = self.t2.len();
        (
            self.t1[i / (n2 * n3)],
            self.t2[i / n3 % n2],
            self.t3[i % n3],
        )
    }

    pub fn triples(&self) -> impl Iterator<Item = (BitVec, BitVec, BitVec)> + '_ {
        self.t1.iter().flat_map(move |&a| {
            self.t2
                .iter()
                .flat_map(move |&b| self.t3.iter().map(move |&c| (a, b, c)))
        })
    }
}

pub fn build_defining_set(
    m: u32,
    d: SupportSet,
    e: SupportSet,
    f: SupportSet,
) -> Result<DefiningSet> {
    Ok(DefiningSet::new(&Instance::new(m, d, e, f)?))
}

/// `c_a = ((a·l))_{l∈L}`, evaluated entry by entry.
pub fn encode(a: &MixedWord, set: &DefiningSet) -> Result<CodewordZ2u> {
    if a.dim() != set.m {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: set.m,
        });
    }
    let mut out = CodewordZ2u::zeros(set.len());
    for (i, (t1, t2, t3)) in set.triples().enumerate() {
        out.set_symbol(i, inner_product_raw(a, t1.bits(), t2.bits(), t3.bits()));
    }
    Ok(out)
}

/// Images of the `3m` unit messages (bit `j` of the message index), which
/// span the code over `Z2`.
pub fn unit_images(set: &DefiningSet) -> Vec<CodewordZ2u> {
    (0..3 * set.m)
        .map(|j| {
            let a = MixedWord::from_index_raw(1 << j, set.m);
            encode(&a, set).expect("unit message has the set's dimension")
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Message,
    Codeword,
}

/// Exact Lee weight → frequency map. Zero frequencies are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    level: Level,
    entries: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new(level: Level) -> Self {
        Self {
            level,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(level: Level, entries: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut d = Self::new(level);
        for (w, c) in entries {
            d.add(w, c);
        }
        d
    }

    pub fn add(&mut self, weight: u64, count: u64) {
        if count > 0 {
            *self.entries.entry(weight).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &Self) {
        for (&w, &c) in &other.entries {
            self.add(w, c);
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// `(weight, frequency)` ascending by weight.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&w, &c)| (w, c))
    }

    pub fn frequency(&self, weight: u64) -> u64 {
        self.entries.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn nonzero_weights(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.entries.keys().copied().filter(|&w| w != 0)
    }

    pub fn min_nonzero(&self) -> Option<u64> {
        self.nonzero_weights().next()
    }

    pub fn max_nonzero(&self) -> Option<u64> {
        self.nonzero_weights().next_back()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.entries.keys().next_back().copied()
    }

    /// Message-level to codeword-level: every frequency divided by the
    /// kernel size. Kernel cosets share a codeword, so each frequency must
    /// divide evenly and the zero weight must carry exactly the kernel.
    pub fn to_codeword_level(&self, kernel_size: u64) -> Result<Self> {
        if self.level != Level::Message {
            return Err(Error::Inconsistent(
                "distribution is already codeword-level".into(),
            ));
        }
        if kernel_size == 0 || self.frequency(0) != kernel_size {
            return Err(Error::Inconsistent(format!(
                "weight-0 mass {} differs from kernel size {kernel_size}",
                self.frequency(0)
            )));
        }
        let mut out = Self::new(Level::Codeword);
        for (w, c) in self.iter() {
            if c % kernel_size != 0 {
                return Err(Error::Inconsistent(format!(
                    "frequency {c} at weight {w} not divisible by kernel size {kernel_size}"
                )));
            }
            out.add(w, c / kernel_size);
        }
        Ok(out)
    }

    /// Per-weight `(weight, self, other)` where the two disagree.
    pub fn diff(&self, other: &Self) -> Vec<(u64, u64, u64)> {
        let weights: std::collections::BTreeSet<u64> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        weights
            .into_iter()
            .filter_map(|w| {
                let (a, b) = (self.frequency(w), other.frequency(w));
                (a != b).then_some((w, a, b))
            })
            .collect()
    }
}

/// Result of one exhaustive pass over `R^m`.
#[derive(Clone, Debug)]
pub struct BruteForce {
    pub message: WeightDistribution,
    pub codeword: WeightDistribution,
    pub kernel: Vec<MixedWord>,
}

impl BruteForce {
    pub fn run(set: &DefiningSet) -> Result<Self> {
        let m = set.m;
        let basis = unit_images(set);
        let (message, kernel_idx) = sweep(&basis, 3 * m);

        let kernel: Vec<MixedWord> = kernel_idx
            .iter()
            .map(|&i| MixedWord::from_index_raw(i, m))
            .collect();
        for a in &kernel {
            if !encode(a, set)?.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "kernel element {a:?} encodes nonzero"
                )));
            }
        }
        let codeword = message.to_codeword_level(kernel.len() as u64)?;

        if m <= DEDUP_CHECK_MAX_M {
            let distinct = distinct_codeword_distribution(set)?;
            if distinct != codeword {
                return Err(Error::Inconsistent(
                    "distinct-codeword distribution differs from kernel-quotient distribution"
                        .into(),
                ));
            }
        }

        Ok(Self {
            message,
            codeword,
            kernel,
        })
    }
}

fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Walks all `2^bits` messages; returns the message-level distribution and
/// the (ascending) indices of messages with zero image.
fn sweep(basis: &[CodewordZ2u], bits: u32) -> (WeightDistribution, Vec<u64>) {
    let total = 1u64 << bits;
    let len = basis.first().map_or(0, CodewordZ2u::len);
    let chunk_bits = bits.min(10);
    let chunks = total >> chunk_bits;

    let partials: Vec<(BTreeMap<u64, u64>, Vec<u64>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c << chunk_bits;
            let end = start + (1 << chunk_bits);
            let mut freq = BTreeMap::new();
            let mut kernel = Vec::new();

            let mut word = CodewordZ2u::zeros(len);
            let g0 = gray(start);
            for (j, b) in basis.iter().enumerate() {
                if g0 >> j & 1 == 1 {
                    word.xor_assign(b);
                }
            }
            for i in start..end {
                if i != start {
                    word.xor_assign(&basis[i.trailing_zeros() as usize]);
                }
                let w = word.lee_weight();
                *freq.entry(w).or_insert(0u64) += 1;
                if w == 0 {
                    kernel.push(gray(i));
                }
            }
            (freq, kernel)
        })
        .collect();

    let mut dist = WeightDistribution::new(Level::Message);
    let mut kernel = Vec::new();
    for (freq, k) in partials {
        for (w, c) in freq {
            dist.add(w, c);
        }
        kernel.extend(k);
    }
    kernel.sort_unstable();
    (dist, kernel)
}

/// Codeword-level distribution by hashing every codeword. Used as an
/// independent check of the kernel-quotient route at small `m`.
pub fn distinct_codeword_distribution(set: &DefiningSet) -> Result<WeightDistribution> {
    let mut seen = HashSet::new();
    let mut dist = WeightDistribution::new(Level::Codeword);
    for idx in 0..1u64 << (3 * set.m) {
        let c = encode(&MixedWord::from_index_raw(idx, set.m), set)?;
        let w = c.lee_weight();
        if seen.insert(c) {
            dist.add(w, 1);
        }
    }
    Ok(dist)
}

/// `(message-level, codeword-level)` distributions by exhaustive enumeration.
pub fn brute_force_distribution(
    inst: &Instance,
) -> Result<(WeightDistribution, WeightDistribution)> {
    let bf = BruteForce::run(&DefiningSet::new(inst))?;
    Ok((bf.message, bf.codeword))
}

/// All messages with zero image, ascending by message index.
pub fn kernel(inst: &Instance) -> Result<Vec<MixedWord>> {
    Ok(BruteForce::run(&DefiningSet::new(inst))?.kernel)
}
