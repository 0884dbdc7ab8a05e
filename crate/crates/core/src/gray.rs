//! Binary Gray images `Φ(C_L)`: parameters, self-orthogonality and
//! minimality.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::code::{unit_images, DefiningSet, Instance, WeightDistribution};
use crate::error::{Error, Result};
use crate::ring::BinaryWord;

/// Default cap on materialized codeword storage, in bytes.
pub const DEFAULT_BUDGET_BYTES: u64 = 64 << 20;

/// Full pairwise Gram audit runs only up to this many codewords.
pub const GRAM_AUDIT_MAX_WORDS: usize = 512;

/// A binary linear code given by a basis, optionally with every codeword.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    length: usize,
    basis: Vec<BinaryWord>,
    min_distance: Option<u64>,
    words: Option<Vec<BinaryWord>>,
}

impl BinaryCode {
    /// Span of `generators`. Codewords are stored when `2^k` words of
    /// `length` bits fit in `budget_bytes`.
    pub fn from_generators(
        length: usize,
        generators: &[BinaryWord],
        budget_bytes: u64,
    ) -> Result<Self> {
        for g in generators {
            if g.len() != length {
                return Err(Error::LengthMismatch {
                    left: g.len(),
                    right: length,
                });
            }
        }
        let basis = row_reduce(generators);
        let k = basis.len() as u32;
        let bytes = (1u128 << k) * (length.div_ceil(64) as u128) * 8;
        let keep = bytes <= budget_bytes as u128;

        let mut words = keep.then(|| Vec::with_capacity(1 << k));
        let mut current = BinaryWord::zeros(length);
        let mut min_distance: Option<u64> = None;
        for i in 0u64..1 << k {
            if i != 0 {
                current.xor_assign(&basis[i.trailing_zeros() as usize]);
                let w = current.weight();
                min_distance = Some(min_distance.map_or(w, |d| d.min(w)));
            }
            if let Some(ws) = words.as_mut() {
                ws.push(current.clone());
            }
        }
        Ok(Self {
            length,
            basis,
            min_distance,
            words,
        })
    }

    /// Span of `generators` with only the basis kept; the minimum distance
    /// is left unknown.
    pub fn basis_only(length: usize, generators: &[BinaryWord]) -> Result<Self> {
        for g in generators {
            if g.len() != length {
                return Err(Error::LengthMismatch {
                    left: g.len(),
                    right: length,
                });
            }
        }
        Ok(Self {
            length,
            basis: row_reduce(generators),
            min_distance: None,
            words: None,
        })
    }

    /// A code from an explicit list of codewords, which must form a linear
    /// space (duplicates are ignored).
    pub fn from_words(length: usize, words: Vec<BinaryWord>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut unique = Vec::new();
        for w in words {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: length,
                });
            }
            if seen.insert(w.clone()) {
                unique.push(w);
            }
        }
        if !seen.contains(&BinaryWord::zeros(length)) {
            return Err(Error::Inconsistent("word list lacks the zero word".into()));
        }
        let basis = row_reduce(&unique);
        if unique.len() != 1 << basis.len() {
            return Err(Error::Inconsistent(
                "word list is not a linear space".into(),
            ));
        }
        for w in &unique {
            for b in &basis {
                if !seen.contains(&w.xor(b)?) {
                    return Err(Error::Inconsistent(
                        "word list is not closed under addition".into(),
                    ));
                }
            }
        }
        let min_distance = unique
            .iter()
            .map(BinaryWord::weight)
            .filter(|&w| w > 0)
            .min();
        Ok(Self {
            length,
            basis,
            min_distance,
            words: Some(unique),
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn size(&self) -> u64 {
        1 << self.basis.len()
    }

    /// Minimum nonzero weight; `None` for the zero code or when built with
    /// [`BinaryCode::basis_only`].
    pub fn min_distance(&self) -> Option<u64> {
        self.min_distance
    }

    pub fn basis(&self) -> &[BinaryWord] {
        &self.basis
    }

    pub fn words(&self) -> Option<&[BinaryWord]> {
        self.words.as_deref()
    }

    pub fn is_materialized(&self) -> bool {
        self.words.is_some()
    }
}

/// Independent rows spanning the same space, in echelon form by lowest set
/// bit.
fn row_reduce(rows: &[BinaryWord]) -> Vec<BinaryWord> {
    let mut pivots: Vec<(usize, BinaryWord)> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for (p, b) in &pivots {
            if v.get(*p) {
                v.xor_assign(b);
            }
        }
        if let Some(p) = lowest_set_bit(&v) {
            for (_, b) in pivots.iter_mut() {
                if b.get(p) {
                    b.xor_assign(&v);
                }
            }
            pivots.push((p, v));
        }
    }
    pivots.into_iter().map(|(_, b)| b).collect()
}

fn lowest_set_bit(w: &BinaryWord) -> Option<usize> {
    w.words()
        .iter()
        .enumerate()
        .find(|(_, &x)| x != 0)
        .map(|(i, x)| i * 64 + x.trailing_zeros() as usize)
}

/// `Φ(C_L)` spanned by the Gray images of the `3m` unit messages.
pub fn gray_image(inst: &Instance, budget_bytes: u64) -> Result<BinaryCode> {
    let set = DefiningSet::new(inst);
    let generators: Vec<BinaryWord> = unit_images(&set).iter().map(|c| c.gray_image()).collect();
    BinaryCode::from_generators(2 * set.len(), &generators, budget_bytes)
}

/// Basis of `Φ(C_L)` only, without walking the span.
pub fn gray_basis(inst: &Instance) -> Result<BinaryCode> {
    let set = DefiningSet::new(inst);
    let generators: Vec<BinaryWord> = unit_images(&set).iter().map(|c| c.gray_image()).collect();
    BinaryCode::basis_only(2 * set.len(), &generators)
}

/// Self-orthogonality via the Gram matrix of a basis; by bilinearity this
/// decides it for the whole code.
pub fn is_self_orthogonal_exact(code: &BinaryCode) -> Result<bool> {
    let b = &code.basis;
    Ok((0..b.len()).all(|i| (i..b.len()).all(|j| !b[i].dot_unchecked(&b[j]))))
}

/// Pairwise check over every materialized codeword.
pub fn self_orthogonality_audit(code: &BinaryCode) -> Result<bool> {
    let words = code.words().ok_or(Error::NotMaterialized)?;
    Ok(words
        .par_iter()
        .enumerate()
        .all(|(i, a)| words[i..].iter().all(|b| !a.dot_unchecked(b))))
}

/// True iff every nonzero weight is `≡ 0 (mod 4)`.
pub fn all_weights_divisible_by_4(dist: &WeightDistribution) -> bool {
    dist.nonzero_weights().all(|w| w % 4 == 0)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AbCheck {
    /// Minimum nonzero weight.
    pub w0: u64,
    /// Maximum weight.
    pub w_inf: u64,
    /// `w0 / w_inf > 1/2`.
    pub minimal: bool,
}

/// Ashikhmin–Barg sufficient condition for minimality, `2·w0 > w∞`.
pub fn ashikhmin_barg_check(dist: &WeightDistribution) -> Result<AbCheck> {
    let w0 = dist.min_nonzero().ok_or(Error::ZeroCode)?;
    let w_inf = dist.max_nonzero().ok_or(Error::ZeroCode)?;
    Ok(AbCheck {
        w0,
        w_inf,
        minimal: 2 * w0 > w_inf,
    })
}

/// True iff no nonzero codeword's support strictly contains another's.
pub fn is_minimal_exact(code: &BinaryCode) -> Result<bool> {
    let words = code.words().ok_or(Error::NotMaterialized)?;
    let mut nonzero: Vec<(u64, &BinaryWord)> = words
        .iter()
        .map(|w| (w.weight(), w))
        .filter(|(wt, _)| *wt > 0)
        .collect();
    nonzero.sort_by_key(|(wt, _)| *wt);
    // supp(a) ⊆ supp(b) with a ≠ b forces wt(a) < wt(b)
    let contained = nonzero.par_iter().enumerate().any(|(i, (wa, a))| {
        nonzero[i + 1..]
            .iter()
            .any(|(wb, b)| wb > wa && a.support_within(b))
    });
    Ok(!contained)
}

/// Equal supports of size `n`: minimality is guaranteed when `n ≤ m − 2`.
pub fn theorem42_predicate(m: u32, n: u32) -> bool {
    n + 2 <= m
}

/// What the construction's known results say about minimality of `Φ(C_L)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PaperClaim {
    /// Equal supports with `n ≤ m − 2`.
    Minimal,
    /// Equal supports with `n = m − 1`: the ratio test fails and nothing is
    /// claimed.
    Open,
    /// Unequal supports: outside the minimality result.
    NoClaim,
}

pub fn paper_claim(inst: &Instance) -> PaperClaim {
    match inst.equal_size() {
        Some(n) if theorem42_predicate(inst.m(), n) => PaperClaim::Minimal,
        Some(_) => PaperClaim::Open,
        None => PaperClaim::NoClaim,
    }
}
