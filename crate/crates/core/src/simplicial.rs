//! Simplicial complexes generated by one maximal element, their complements,
//! the disjointness indicator `χ`, and the subset-counting formulas used by
//! the closed-form weight distribution.

use crate::error::{Error, Result};
use crate::ring::{check_dim, BitVec};

/// Support `S ⊊ [m]` of the single maximal element of `Δ_S`.
///
/// The empty support is allowed (`Δ_∅ = {0}`); the full support is not.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SupportSet {
    mask: BitVec,
}

impl SupportSet {
    pub fn new(mask: BitVec) -> Result<Self> {
        let m = mask.dim();
        if mask.bits() == full_mask(m) {
            return Err(Error::FullSupport(m));
        }
        Ok(Self { mask })
    }

    pub fn from_bits(bits: u64, dim: u32) -> Result<Self> {
        Self::new(BitVec::new(bits, dim)?)
    }

    pub fn from_coords(coords: &[u32], dim: u32) -> Result<Self> {
        Self::new(BitVec::from_coords(coords, dim)?)
    }

    pub fn empty(dim: u32) -> Result<Self> {
        Self::new(BitVec::zero(dim)?)
    }

    /// Every proper support over `[m]`, ascending by mask.
    pub fn all_proper(dim: u32) -> Result<Vec<Self>> {
        check_dim(dim)?;
        Ok((0..full_mask(dim))
            .map(|b| Self {
                mask: BitVec::from_raw(b, dim),
            })
            .collect())
    }

    pub fn mask(self) -> BitVec {
        self.mask
    }

    pub fn bits(self) -> u64 {
        self.mask.bits()
    }

    pub fn dim(self) -> u32 {
        self.mask.dim()
    }

    /// `|S|`.
    pub fn size(self) -> u32 {
        self.mask.weight()
    }

    pub fn coords(self) -> Vec<u32> {
        self.mask.coords()
    }

    pub fn contains(self, t: BitVec) -> bool {
        t.bits() & !self.bits() == 0
    }
}

pub(crate) fn full_mask(dim: u32) -> u64 {
    (1u64 << dim) - 1
}

/// All `t ⊆ S`, ascending.
pub fn complex_members(s: SupportSet) -> Vec<BitVec> {
    let m = s.dim();
    (0..1u64 << m)
        .filter(|t| t & !s.bits() == 0)
        .map(|t| BitVec::from_raw(t, m))
        .collect()
}

/// All `t ⊄ S`, ascending. This is `Z2^m \ Δ_S`.
pub fn complement_members(s: SupportSet) -> Vec<BitVec> {
    let m = s.dim();
    (0..1u64 << m)
        .filter(|t| t & !s.bits() != 0)
        .map(|t| BitVec::from_raw(t, m))
        .collect()
}

/// `χ(X|Y) = 1` iff `X ∩ Y = ∅`.
pub fn chi(x: BitVec, y: BitVec) -> bool {
    x.bits() & y.bits() == 0
}

/// `H_{Δ_S}` at `x_i = (−1)^{p_i}`, i.e. `2^{|S|}·χ(supp(p)|S)`.
pub fn eval_h_at_signs(s: SupportSet, p: BitVec) -> i64 {
    if chi(p, s.mask) {
        1i64 << s.size()
    } else {
        0
    }
}

/// `Σ_{t ∈ Δ_S^c} (−1)^{p·t} = 2^m·[p = 0] − 2^{|S|}·χ(supp(p)|S)`.
pub fn eval_complement_at_signs(s: SupportSet, p: BitVec) -> i64 {
    let whole = if p.is_zero() { 1i64 << s.dim() } else { 0 };
    whole - eval_h_at_signs(s, p)
}

/// The generating function of an arbitrary set of vectors evaluated at
/// `x_i = (−1)^{p_i}`, summed literally.
pub fn generating_sum_at_signs(members: &[BitVec], p: BitVec) -> i64 {
    members
        .iter()
        .map(|t| {
            if (t.bits() & p.bits()).count_ones().is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .sum()
}

/// Counts of subsets `X ⊆ [m]` and ordered pairs `(X, Y)` by disjointness
/// from `D` and `E`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DisjointCounts {
    /// `#{X ≠ ∅ : χ(X|D) = 1}`
    pub nonempty_disjoint: u64,
    /// `#{X : χ(X|D) = 0}`
    pub meets: u64,
    /// `#{X ≠ ∅ : χ(X|D)χ(X|E) = 1}`
    pub nonempty_disjoint_both: u64,
    /// `#{X : χ(X|D)χ(X|E) = 0}`
    pub meets_either: u64,
    /// `T_i = #{(X, Y) : X, Y ≠ ∅, X ≠ Y, χ(Y|E) = 1, χ(X|D) + χ(X⊕Y|D) = i}`
    pub t0: u64,
    pub t1: u64,
    pub t2: u64,
}

/// Counts of `X ⊆ [m]` by the pattern `(χ(X|D), χ(X|E))`, plus the total
/// of the `T'_i` pair counts (pairs with `χ(Y|E) = 0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PatternCounts {
    /// `χ(X|D) = 0, χ(X|E) = 0`
    pub meets_both: u64,
    /// `χ(X|D) = 0, χ(X|E) = 1`
    pub meets_first_only: u64,
    /// `χ(X|D) = 1, χ(X|E) = 0`
    pub meets_second_only: u64,
    pub tprime_total: u64,
}

/// Both families of counts for one ordered pair `(D, E)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LemmaCounts {
    pub disjoint: DisjointCounts,
    pub pattern: PatternCounts,
}

impl LemmaCounts {
    pub fn new(d: SupportSet, e: SupportSet) -> Result<Self> {
        Ok(Self {
            disjoint: lemma22_counts(d, e)?,
            pattern: lemma31_counts(d, e)?,
        })
    }
}

fn same_space(d: SupportSet, e: SupportSet) -> Result<u32> {
    if d.dim() == e.dim() {
        Ok(d.dim())
    } else {
        Err(Error::DimensionMismatch {
            left: d.dim(),
            right: e.dim(),
        })
    }
}

fn pow2(e: u32) -> i64 {
    1i64 << e
}

fn nonneg(v: i64, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Inconsistent(format!("{what} evaluated to {v}")))
}

pub fn lemma22_counts(d: SupportSet, e: SupportSet) -> Result<DisjointCounts> {
    let m = same_space(d, e)?;
    let dd = d.size();
    let ee = e.size();
    let union = (d.bits() | e.bits()).count_ones();

    let t0 = pow2(m) * (pow2(m - ee) - 1) + pow2(m - dd) * (1 + pow2(m - union) - pow2(m + 1 - ee));
    let t1 = 2 * (pow2(m - dd) - 1) * (pow2(m - ee) - pow2(m - union));
    let t2 = (pow2(m - dd) - 2) * (pow2(m - union) - 1);

    Ok(DisjointCounts {
        nonempty_disjoint: nonneg(pow2(m - dd) - 1, "2^(m-|D|) - 1")?,
        meets: nonneg(pow2(m) - pow2(m - dd), "2^m - 2^(m-|D|)")?,
        nonempty_disjoint_both: nonneg(pow2(m - union) - 1, "2^(m-|D∪E|) - 1")?,
        meets_either: nonneg(pow2(m) - pow2(m - union), "2^m - 2^(m-|D∪E|)")?,
        t0: nonneg(t0, "T0")?,
        t1: nonneg(t1, "T1")?,
        t2: nonneg(t2, "T2")?,
    })
}

pub fn lemma31_counts(d: SupportSet, e: SupportSet) -> Result<PatternCounts> {
    let m = same_space(d, e)?;
    let dd = d.size();
    let ee = e.size();
    let union = (d.bits() | e.bits()).count_ones();
    let inter = (d.bits() & e.bits()).count_ones();

    let both = pow2(m) - pow2(m - union) * (pow2(dd - inter) + pow2(ee - inter) - 1);
    let first = pow2(m - union) * (pow2(dd - inter) - 1);
    let second = pow2(m - union) * (pow2(ee - inter) - 1);
    let tprime = (pow2(m) - pow2(m - ee)) * (pow2(m) - 2);

    Ok(PatternCounts {
        meets_both: nonneg(both, "pattern (0,0)")?,
        meets_first_only: nonneg(first, "pattern (0,1)")?,
        meets_second_only: nonneg(second, "pattern (1,0)")?,
        tprime_total: nonneg(tprime, "T' total")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coords: &[u32], m: u32) -> SupportSet {
        SupportSet::from_coords(coords, m).unwrap()
    }

    fn bits(v: &[BitVec]) -> Vec<u64> {
        v.iter().map(|b| b.bits()).collect()
    }

    #[test]
    fn complex_members_examples() {
        assert_eq!(
            bits(&complex_members(s(&[1, 2], 3))),
            vec![0b000, 0b001, 0b010, 0b011]
        );
        assert_eq!(bits(&complex_members(s(&[], 3))), vec![0]);
        assert_eq!(
            bits(&complex_members(s(&[1, 3], 4))),
            vec![0b0000, 0b0001, 0b0100, 0b0101]
        );
    }

    #[test]
    fn full_support_rejected() {
        assert_eq!(
            SupportSet::from_coords(&[1, 2, 3], 3),
            Err(Error::FullSupport(3))
        );
        assert_eq!(SupportSet::from_bits(0b11, 2), Err(Error::FullSupport(2)));
    }

    #[test]
    fn complement_members_examples() {
        assert_eq!(
            bits(&complement_members(s(&[1, 2], 3))),
            vec![0b100, 0b101, 0b110, 0b111]
        );
        assert_eq!(bits(&complement_members(s(&[], 2))), vec![0b01, 0b10, 0b11]);
        assert_eq!(complement_members(s(&[1], 3)).len(), 6);
    }

    #[test]
    fn chi_examples() {
        let v = |c: &[u32]| BitVec::from_coords(c, 3).unwrap();
        assert!(chi(v(&[1]), v(&[2, 3])));
        assert!(!chi(v(&[1, 2]), v(&[2])));
        for y in 0..8 {
            assert!(chi(v(&[]), BitVec::new(y, 3).unwrap()));
        }
    }

    #[test]
    fn eval_h_examples() {
        let d = s(&[1, 2], 3);
        let p = |b| BitVec::new(b, 3).unwrap();
        assert_eq!(eval_h_at_signs(d, p(0)), 4);
        assert_eq!(eval_h_at_signs(d, p(0b001)), 0);
        assert_eq!(eval_h_at_signs(d, p(0b100)), 4);
        assert_eq!(generating_sum_at_signs(&complex_members(d), p(0b100)), 4);
    }

    #[test]
    fn lemma22_examples() {
        let c = lemma22_counts(s(&[1, 2], 3), s(&[], 3)).unwrap();
        assert_eq!(c.nonempty_disjoint, 1);
        assert_eq!(c.meets, 6);
        let c = lemma22_counts(s(&[1], 3), s(&[2], 3)).unwrap();
        assert_eq!(c.t2, 2);
    }

    #[test]
    fn lemma31_examples() {
        let c = lemma31_counts(s(&[1], 3), s(&[2], 3)).unwrap();
        assert_eq!(c.meets_first_only, 2);
        assert_eq!(c.tprime_total, 24);
    }

    #[test]
    fn pattern_counts_partition_space() {
        for m in 2..=5 {
            let all = SupportSet::all_proper(m).unwrap();
            for &d in &all {
                for &e in &all {
                    let p = lemma31_counts(d, e).unwrap();
                    let both_disjoint = 1u64 << (m - (d.bits() | e.bits()).count_ones());
                    assert_eq!(
                        p.meets_both + p.meets_first_only + p.meets_second_only + both_disjoint,
                        1 << m
                    );
                    let q = lemma22_counts(d, e).unwrap();
                    assert_eq!(
                        q.t0 + q.t1 + q.t2,
                        ((1 << (m - e.size())) - 1) * ((1 << m) - 2)
                    );
                }
            }
        }
    }

    #[test]
    fn mismatched_dims() {
        assert!(lemma22_counts(s(&[1], 3), s(&[1], 4)).is_err());
    }
}
