//! Arithmetic over `Z2`, `Z2[u]`, `Z2^m` and the mixed alphabet `R^m`, plus
//! the Gray map and the Lee/Hamming weights.
//!
//! Coordinate `j ∈ [m]` of a vector in `Z2^m` is bit `j − 1` of its mask.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Largest supported `m`. Counts of order `2^{3m}` must fit in a `u64`.
pub const MAX_DIM: u32 = 20;

#[inline]
pub(crate) fn dot_bits(x: u64, y: u64) -> bool {
    (x & y).count_ones() & 1 == 1
}

/// A vector of `Z2^m` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    bits: u64,
    dim: u32,
}

impl BitVec {
    pub fn new(bits: u64, dim: u32) -> Result<Self> {
        check_dim(dim)?;
        if bits >> dim != 0 {
            return Err(Error::BitsOutOfRange { bits, dim });
        }
        Ok(Self { bits, dim })
    }

    pub fn zero(dim: u32) -> Result<Self> {
        Self::new(0, dim)
    }

    /// Builds the vector whose support is the given 1-based coordinates.
    pub fn from_coords(coords: &[u32], dim: u32) -> Result<Self> {
        check_dim(dim)?;
        let mut bits = 0u64;
        for &c in coords {
            if c == 0 || c > dim {
                return Err(Error::CoordinateOutOfRange { coord: c, dim });
            }
            bits |= 1 << (c - 1);
        }
        Ok(Self { bits, dim })
    }

    pub(crate) fn from_raw(bits: u64, dim: u32) -> Self {
        debug_assert!(bits >> dim == 0);
        Self { bits, dim }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn dim(self) -> u32 {
        self.dim
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// 1-based coordinates of the support, ascending.
    pub fn coords(self) -> Vec<u32> {
        (0..self.dim)
            .filter(|j| self.bits >> j & 1 == 1)
            .map(|j| j + 1)
            .collect()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Result<Self> {
        same_dim(self, other)?;
        Ok(Self::from_raw(self.bits ^ other.bits, self.dim))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.dim as usize)
    }
}

pub(crate) fn check_dim(dim: u32) -> Result<()> {
    if (2..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(dim))
    }
}

fn same_dim(x: BitVec, y: BitVec) -> Result<()> {
    if x.dim == y.dim {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: x.dim,
            right: y.dim,
        })
    }
}

/// Euclidean inner product over `Z2`.
pub fn parity_dot(x: BitVec, y: BitVec) -> Result<bool> {
    same_dim(x, y)?;
    Ok(dot_bits(x.bits, y.bits))
}

/// An element `y + u·z` of `Z2[u]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Z2uElement {
    pub y: bool,
    pub z: bool,
}

impl Z2uElement {
    pub const ZERO: Self = Self { y: false, z: false };
    pub const ONE: Self = Self { y: true, z: false };
    pub const U: Self = Self { y: false, z: true };
    pub const ONE_PLUS_U: Self = Self { y: true, z: true };
    pub const ALL: [Self; 4] = [Self::ZERO, Self::ONE, Self::U, Self::ONE_PLUS_U];

    pub fn new(y: bool, z: bool) -> Self {
        Self { y, z }
    }

    /// `y + uz ↦ (z, y + z)`.
    pub fn gray_map(self) -> (bool, bool) {
        (self.z, self.y ^ self.z)
    }

    pub fn lee_weight(self) -> u32 {
        let (a, b) = self.gray_map();
        a as u32 + b as u32
    }
}

impl Add for Z2uElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            y: self.y ^ rhs.y,
            z: self.z ^ rhs.z,
        }
    }
}

impl Mul for Z2uElement {
    type Output = Self;

    // u² = 0
    fn mul(self, rhs: Self) -> Self {
        Self {
            y: self.y & rhs.y,
            z: (self.y & rhs.z) ^ (self.z & rhs.y),
        }
    }
}

impl fmt::Display for Z2uElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.y, self.z) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "u",
            (true, true) => "1+u",
        };
        f.write_str(s)
    }
}

/// An element `a = (p, q + u·r)` of `R^m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MixedWord {
    pub p: BitVec,
    pub q: BitVec,
    pub r: BitVec,
}

impl MixedWord {
    pub fn new(p: BitVec, q: BitVec, r: BitVec) -> Result<Self> {
        same_dim(p, q)?;
        same_dim(p, r)?;
        Ok(Self { p, q, r })
    }

    pub fn zero(dim: u32) -> Result<Self> {
        let z = BitVec::zero(dim)?;
        Ok(Self { p: z, q: z, r: z })
    }

    pub fn dim(&self) -> u32 {
        self.p.dim
    }

    /// Message with index `p | q << m | r << 2m`.
    pub fn from_index(index: u64, dim: u32) -> Result<Self> {
        check_dim(dim)?;
        if index >> (3 * dim) != 0 {
            return Err(Error::BitsOutOfRange {
                bits: index,
                dim: 3 * dim,
            });
        }
        Ok(Self::from_index_raw(index, dim))
    }

    pub(crate) fn from_index_raw(index: u64, dim: u32) -> Self {
        let mask = (1u64 << dim) - 1;
        Self {
            p: BitVec::from_raw(index & mask, dim),
            q: BitVec::from_raw(index >> dim & mask, dim),
            r: BitVec::from_raw(index >> (2 * dim) & mask, dim),
        }
    }

    pub fn index(&self) -> u64 {
        let m = self.dim();
        self.p.bits | self.q.bits << m | self.r.bits << (2 * m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            p: self.p.add(other.p)?,
            q: self.q.add(other.q)?,
            r: self.r.add(other.r)?,
        })
    }

    /// `(y + uz)(p, q + ur) = (yp, yq + u(yr + zq))`.
    pub fn scale(&self, alpha: Z2uElement) -> Self {
        let m = self.dim();
        let keep = |v: BitVec, on: bool| if on { v.bits } else { 0 };
        Self {
            p: BitVec::from_raw(keep(self.p, alpha.y), m),
            q: BitVec::from_raw(keep(self.q, alpha.y), m),
            r: BitVec::from_raw(keep(self.r, alpha.y) ^ keep(self.q, alpha.z), m),
        }
    }
}

/// `a · (t1, t2 + u·t3) = ⟨q,t2⟩ + u(⟨p,t1⟩ + ⟨q,t3⟩ + ⟨r,t2⟩)`.
pub fn inner_product_mixed(
    a: &MixedWord,
    t1: BitVec,
    t2: BitVec,
    t3: BitVec,
) -> Result<Z2uElement> {
    same_dim(a.p, t1)?;
    same_dim(a.p, t2)?;
    same_dim(a.p, t3)?;
    Ok(inner_product_raw(a, t1.bits, t2.bits, t3.bits))
}

#[inline]
pub(crate) fn inner_product_raw(a: &MixedWord, t1: u64, t2: u64, t3: u64) -> Z2uElement {
    Z2uElement {
        y: dot_bits(a.q.bits, t2),
        z: dot_bits(a.p.bits, t1) ^ dot_bits(a.q.bits, t3) ^ dot_bits(a.r.bits, t2),
    }
}

/// A bit-packed binary word. Bits at positions `>= len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryWord {
    words: Vec<u64>,
    len: usize,
}

impl BinaryWord {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut w = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            w.set(i, b);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let m = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Hamming weight.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    pub fn distance(&self, other: &Self) -> Result<u64> {
        self.check_len(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as u64)
            .sum())
    }

    /// Euclidean inner product over `Z2`.
    pub fn dot(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.dot_unchecked(other))
    }

    pub(crate) fn dot_unchecked(&self, other: &Self) -> bool {
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// `supp(self) ⊆ supp(other)`.
    pub fn support_within(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        let base = self.len / 64;
        let shift = self.len % 64;
        for (i, &w) in other.words.iter().enumerate() {
            if shift == 0 {
                out.words[base + i] |= w;
            } else {
                out.words[base + i] |= w << shift;
                let hi = w >> (64 - shift);
                if hi != 0 {
                    out.words[base + i + 1] |= hi;
                }
            }
        }
        out
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }
}

/// A word of `Z2[u]^n` held as two parallel binary words: entry `i` is
/// `Q_i + u·R_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CodewordZ2u {
    q: BinaryWord,
    r: BinaryWord,
}

impl CodewordZ2u {
    pub fn zeros(len: usize) -> Self {
        Self {
            q: BinaryWord::zeros(len),
            r: BinaryWord::zeros(len),
        }
    }

    pub fn from_parts(q: BinaryWord, r: BinaryWord) -> Result<Self> {
        q.check_len(&r)?;
        Ok(Self { q, r })
    }

    pub fn from_symbols(symbols: &[Z2uElement]) -> Self {
        let mut w = Self::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            w.set_symbol(i, s);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.q.len
    }

    pub fn is_empty(&self) -> bool {
        self.q.len == 0
    }

    pub fn q(&self) -> &BinaryWord {
        &self.q
    }

    pub fn r(&self) -> &BinaryWord {
        &self.r
    }

    pub fn symbol(&self, i: usize) -> Z2uElement {
        Z2uElement {
            y: self.q.get(i),
            z: self.r.get(i),
        }
    }

    pub fn set_symbol(&mut self, i: usize, s: Z2uElement) {
        self.q.set(i, s.y);
        self.r.set(i, s.z);
    }

    pub fn symbols(&self) -> Vec<Z2uElement> {
        (0..self.len()).map(|i| self.symbol(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.r.is_zero()
    }

    pub(crate) fn xor_assign(&mut self, other: &Self) {
        self.q.xor_assign(&other.q);
        self.r.xor_assign(&other.r);
    }

    /// Entrywise sum (equivalently difference) over `Z2[u]`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            q: self.q.xor(&other.q)?,
            r: self.r.xor(&other.r)?,
        })
    }

    /// `(y + uz)(Q + uR) = yQ + u(yR + zQ)`.
    pub fn scale(&self, alpha: Z2uElement) -> Self {
        let n = self.len();
        let pick = |w: &BinaryWord, on: bool| if on { w.clone() } else { BinaryWord::zeros(n) };
        let q = pick(&self.q, alpha.y);
        let mut r = pick(&self.r, alpha.y);
        r.xor_assign(&pick(&self.q, alpha.z));
        Self { q, r }
    }

    /// `wt_H(R) + wt_H(Q + R)`.
    pub fn lee_weight(&self) -> u64 {
        self.q
            .words
            .iter()
            .zip(&self.r.words)
            .map(|(q, r)| (r.count_ones() + (q ^ r).count_ones()) as u64)
            .sum()
    }

    /// `Φ(Q + uR) = (R, Q + R)`, of length `2n`.
    pub fn gray_image(&self) -> BinaryWord {
        let mut qr = self.q.clone();
        qr.xor_assign(&self.r);
        self.r.concat(&qr)
    }
}

pub fn gray_map_elem(e: Z2uElement) -> (bool, bool) {
    e.gray_map()
}

pub fn gray_map_word(w: &CodewordZ2u) -> BinaryWord {
    w.gray_image()
}

pub fn lee_weight(w: &CodewordZ2u) -> u64 {
    w.lee_weight()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: u64, dim: u32) -> BitVec {
        BitVec::new(bits, dim).unwrap()
    }

    #[test]
    fn parity_dot_examples() {
        assert!(parity_dot(bv(0b101, 3), bv(0b100, 3)).unwrap());
        assert!(!parity_dot(bv(0b110, 3), bv(0b000, 3)).unwrap());
        assert!(parity_dot(bv(0b110, 3), bv(0b011, 3)).unwrap());
    }

    #[test]
    fn parity_dot_rejects_mismatched_dims() {
        assert_eq!(
            parity_dot(bv(1, 3), bv(1, 4)),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn bitvec_validation() {
        assert!(matches!(
            BitVec::new(0b1000, 3),
            Err(Error::BitsOutOfRange { .. })
        ));
        assert_eq!(BitVec::new(0, 1), Err(Error::InvalidDimension(1)));
        assert_eq!(BitVec::from_coords(&[1, 3], 4).unwrap().bits(), 0b0101);
        assert!(matches!(
            BitVec::from_coords(&[4], 3),
            Err(Error::CoordinateOutOfRange { coord: 4, dim: 3 })
        ));
        assert_eq!(bv(0b1010, 4).coords(), vec![2, 4]);
    }

    #[test]
    fn gray_map_elem_examples() {
        assert_eq!(gray_map_elem(Z2uElement::ZERO), (false, false));
        assert_eq!(gray_map_elem(Z2uElement::ONE_PLUS_U), (true, false));
        assert_eq!(gray_map_elem(Z2uElement::U), (true, true));
        assert_eq!(gray_map_elem(Z2uElement::ONE), (false, true));
    }

    #[test]
    fn ring_laws() {
        for a in Z2uElement::ALL {
            for b in Z2uElement::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in Z2uElement::ALL {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
        assert_eq!(Z2uElement::U * Z2uElement::U, Z2uElement::ZERO);
        assert_eq!(
            Z2uElement::ONE_PLUS_U * Z2uElement::ONE_PLUS_U,
            Z2uElement::ONE
        );
    }

    #[test]
    fn gray_map_word_examples() {
        let zero = CodewordZ2u::zeros(3);
        assert_eq!(gray_map_word(&zero), BinaryWord::zeros(6));

        let w = CodewordZ2u::from_parts(
            BinaryWord::from_bits(&[true, false]),
            BinaryWord::from_bits(&[false, true]),
        )
        .unwrap();
        assert_eq!(gray_map_word(&w).to_bits(), vec![false, true, true, true]);
    }

    #[test]
    fn lee_weight_examples() {
        assert_eq!(lee_weight(&CodewordZ2u::from_symbols(&[Z2uElement::U])), 2);
        assert_eq!(
            lee_weight(&CodewordZ2u::from_symbols(&[Z2uElement::ONE])),
            1
        );
        let w = CodewordZ2u::from_parts(
            BinaryWord::from_bits(&[true, true, false]),
            BinaryWord::from_bits(&[false, true, true]),
        )
        .unwrap();
        assert_eq!(lee_weight(&w), 4);
        assert_eq!(gray_map_word(&w).weight(), 4);
    }

    #[test]
    fn concat_across_word_boundaries() {
        for (la, lb) in [(0, 5), (63, 2), (64, 64), (70, 130), (1, 127)] {
            let a: Vec<bool> = (0..la).map(|i| i % 3 == 0).collect();
            let b: Vec<bool> = (0..lb).map(|i| i % 5 != 1).collect();
            let joined = BinaryWord::from_bits(&a).concat(&BinaryWord::from_bits(&b));
            let expected: Vec<bool> = a.iter().chain(&b).copied().collect();
            assert_eq!(joined, BinaryWord::from_bits(&expected));
        }
    }

    #[test]
    fn inner_product_examples() {
        let m = 3;
        let zero = MixedWord::zero(m).unwrap();
        for t in 0..8 {
            let t = bv(t, m);
            assert_eq!(
                inner_product_mixed(&zero, t, t, t).unwrap(),
                Z2uElement::ZERO
            );
        }

        let a = MixedWord::new(bv(0b001, m), bv(0b001, m), bv(0, m)).unwrap();
        let one = bv(0b001, m);
        assert_eq!(
            inner_product_mixed(&a, one, one, one).unwrap(),
            Z2uElement::ONE
        );

        let a = MixedWord::new(bv(0b100, m), bv(0, m), bv(0b010, m)).unwrap();
        let got = inner_product_mixed(&a, bv(0b001, m), bv(0b010, m), bv(0b111, m)).unwrap();
        assert_eq!(got, Z2uElement::U);
    }

    #[test]
    fn message_index_roundtrip() {
        for idx in 0..(1u64 << 9) {
            assert_eq!(MixedWord::from_index(idx, 3).unwrap().index(), idx);
        }
        assert!(MixedWord::from_index(1 << 9, 3).is_err());
    }

    #[test]
    fn scalar_law_exhaustive_small() {
        let m = 2;
        for idx in 0..(1u64 << 6) {
            let a = MixedWord::from_index(idx, m).unwrap();
            for alpha in Z2uElement::ALL {
                for t in 0..(1u64 << 6) {
                    let (t1, t2, t3) = (t & 3, t >> 2 & 3, t >> 4 & 3);
                    let lhs = inner_product_raw(&a.scale(alpha), t1, t2, t3);
                    let rhs = alpha * inner_product_raw(&a, t1, t2, t3);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
