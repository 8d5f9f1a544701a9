//! Bit-packed GF(2) linear algebra: vectors, matrices, row reduction, duals.
//!
//! Bit `i` of a [`BitVector`] is coordinate `i + 1` in the usual coding
//! theory convention; parsing and printing use '0'/'1' strings with the
//! leftmost character as coordinate 1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond `len` are kept zero so that equality, hashing and popcounts
/// can work directly on the words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; words_for(len)] }
    }

    /// All-ones vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Build from the low `len` bits of `val`, bit `i` of `val` becoming
    /// coordinate `i + 1`.
    pub fn from_u64(val: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            v.words[0] = val & mask;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let w = i / WORD_BITS;
        let m = 1u64 << (i % WORD_BITS);
        if bit {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of coordinates where both vectors are 1.
    pub fn overlap(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &Self) -> bool {
        self.overlap(other) % 2 == 1
    }

    /// Cyclic shift moving every coordinate one step to the right
    /// (the last coordinate wraps around to the front).
    pub fn rotate_right(&self) -> Self {
        let n = self.len;
        let mut out = Self::zeros(n);
        if n == 0 {
            return out;
        }
        for i in 0..n {
            out.set((i + 1) % n, self.get(i));
        }
        out
    }

    /// Compare in the order of the printed '0'/'1' string (leftmost
    /// coordinate most significant).
    pub fn string_cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // Lowest differing bit decides: it is the leftmost
                // differing character of the printed string.
                let bit = (a ^ b).trailing_zeros();
                let a_bit = (a >> bit) & 1;
                return if a_bit == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }

    /// Raw packed words (tail bits beyond `len` are zero).
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Concatenate `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(v)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// A dense GF(2) matrix stored as a list of equal-length rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols, data: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>) -> Self {
        let cols = rows.first().map_or(0, BitVector::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        BitMatrix { rows: rows.len(), cols, data: rows }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_slice(&self) -> &[BitVector] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.data[r].set(c, bit);
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hstack(&self, right: &Self) -> Self {
        assert_eq!(self.rows, right.rows);
        let data = self.data.iter().zip(&right.data).map(|(a, b)| a.concat(b)).collect();
        BitMatrix { rows: self.rows, cols: self.cols + right.cols, data }
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.data[r].iter_ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// Row-vector times matrix.
    pub fn vec_mul(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.rows);
        let mut out = BitVector::zeros(self.cols);
        for k in v.iter_ones() {
            out.xor_assign(&self.data[k]);
        }
        out
    }

    /// In-place reduction to reduced row echelon form with deterministic
    /// lowest-index pivot selection. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.data.swap(r, p);
            let pivot_row = self.data[r].clone();
            for (i, row) in self.data.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref().len()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// A binary linear [n, k] code given by a rank-k generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    k: usize,
    gen: BitMatrix,
}

impl LinearCode {
    /// Wrap a generator matrix, checking it has full row rank.
    pub fn new(gen: BitMatrix) -> Result<Self> {
        let k = gen.rows();
        let rank = gen.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, expected: k });
        }
        Ok(LinearCode { n: gen.cols(), k, gen })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    /// True when the generator is `[I_k | A]`.
    pub fn is_systematic(&self) -> bool {
        if self.n < self.k {
            return false;
        }
        (0..self.k).all(|r| {
            (0..self.k).all(|c| self.gen.get(r, c) == (r == c))
        })
    }

    /// msg * G over GF(2).
    pub fn encode(&self, msg: &BitVector) -> Result<BitVector> {
        if msg.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, got: msg.len() });
        }
        Ok(self.gen.vec_mul(msg))
    }

    /// The dual code: the [n, n-k] code of all vectors orthogonal to
    /// every codeword.
    pub fn dual(&self) -> LinearCode {
        let mut g = self.gen.clone();
        let pivots = g.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.n];
            for &c in &pivots {
                s[c] = true;
            }
            s
        };
        let mut rows = Vec::with_capacity(self.n - self.k);
        for c in 0..self.n {
            if pivot_set[c] {
                continue;
            }
            // Dual basis vector supported on the free column c plus the
            // pivot columns whose RREF rows have a 1 in column c.
            let mut v = BitVector::zeros(self.n);
            v.set(c, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if g.get(r, c) {
                    v.set(pc, true);
                }
            }
            rows.push(v);
        }
        let gen = BitMatrix::from_rows(rows);
        debug_assert_eq!(gen.rank(), self.n - self.k);
        LinearCode { n: self.n, k: self.n - self.k, gen }
    }

    /// True iff n = 2k and G * G^T = 0.
    pub fn is_self_dual(&self) -> bool {
        if self.n != 2 * self.k {
            return false;
        }
        (0..self.k).all(|i| {
            !self.gen.row(i).dot(self.gen.row(i))
                && (i + 1..self.k).all(|j| !self.gen.row(i).dot(self.gen.row(j)))
        })
    }

    /// True iff every codeword has even weight, equivalently every
    /// generator row does.
    pub fn is_even(&self) -> bool {
        self.gen.row_slice().iter().all(|r| r.weight() % 2 == 0)
    }

    /// Membership test via rank.
    pub fn contains(&self, word: &BitVector) -> bool {
        if word.len() != self.n {
            return false;
        }
        let mut rows = self.gen.row_slice().to_vec();
        rows.push(word.clone());
        BitMatrix::from_rows(rows).rank() == self.k
    }

    /// All 2^k codewords, for small codes.
    pub fn all_codewords(&self) -> Vec<BitVector> {
        assert!(self.k <= 24, "codeword enumeration only for small codes");
        let mut out = Vec::with_capacity(1 << self.k);
        for m in 0u64..(1 << self.k) {
            let msg = BitVector::from_u64(m, self.k);
            out.push(self.gen.vec_mul(&msg));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(BitVector::zeros(8).weight(), 0);
        assert_eq!(bv("1100101100110101").weight(), 9);
        assert_eq!(BitVector::ones(16).weight(), 16);
    }

    #[test]
    fn string_roundtrip_and_order() {
        let v = bv("10110");
        assert_eq!(v.to_string(), "10110");
        assert_eq!(v.len(), 5);
        assert!(bv("0101").string_cmp(&bv("1010")) == Ordering::Less);
        assert!(bv("1000").string_cmp(&bv("0111")) == Ordering::Greater);
        assert!(bv("110").string_cmp(&bv("110")) == Ordering::Equal);
        // Order must agree with plain string comparison on long vectors too.
        let a = bv("00000000000000000000000000000000000000000000000000000000000000000001000000");
        let b = bv("00000000000000000000000000000000000000000000000000000000000000000000100000");
        assert_eq!(a.string_cmp(&b), Ordering::Greater);
    }

    #[test]
    fn rotate_right_wraps_last_bit() {
        assert_eq!(bv("1000").rotate_right().to_string(), "0100");
        assert_eq!(bv("0011").rotate_right().to_string(), "1001");
    }

    fn identity_pair_code(n: usize) -> LinearCode {
        let i = BitMatrix::identity(n);
        LinearCode::new(i.hstack(&BitMatrix::identity(n))).unwrap()
    }

    #[test]
    fn encode_examples() {
        let code = identity_pair_code(4);
        let zero = code.encode(&BitVector::zeros(4)).unwrap();
        assert!(zero.is_zero());
        for i in 0..4 {
            let mut e = BitVector::zeros(4);
            e.set(i, true);
            assert_eq!(&code.encode(&e).unwrap(), code.generator().row(i));
        }
        let all = code.encode(&BitVector::ones(4)).unwrap();
        assert_eq!(all, BitVector::ones(8));
        assert!(code.encode(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn dual_of_full_space_is_zero_code() {
        let full = LinearCode::new(BitMatrix::identity(5)).unwrap();
        let dual = full.dual();
        assert_eq!(dual.dimension(), 0);
    }

    #[test]
    fn identity_pair_is_self_dual() {
        let code = identity_pair_code(6);
        assert!(code.is_self_dual());
        assert!(code.is_even());
        let dual = code.dual();
        // Same codeword set.
        for w in dual.all_codewords() {
            assert!(code.contains(&w));
        }
    }

    #[test]
    fn rank_check_rejects_dependent_rows() {
        let rows = vec![bv("1100"), bv("0110"), bv("1010")];
        assert!(LinearCode::new(BitMatrix::from_rows(rows)).is_err());
    }

    #[test]
    fn even_detection() {
        let rows = vec![bv("1110"), bv("0011")];
        let code = LinearCode::new(BitMatrix::from_rows(rows)).unwrap();
        assert!(!code.is_even());
    }

    #[test]
    fn weight_overlap_identity() {
        let u = bv("1101001");
        let v = bv("1011010");
        let mut sum = u.clone();
        sum.xor_assign(&v);
        assert_eq!(sum.weight(), u.weight() + v.weight() - 2 * u.overlap(&v));
    }

    #[test]
    fn double_dual_is_original() {
        let rows = vec![bv("110101"), bv("011010"), bv("000111")];
        let code = LinearCode::new(BitMatrix::from_rows(rows)).unwrap();
        let dd = code.dual().dual();
        assert_eq!(dd.dimension(), code.dimension());
        for w in code.all_codewords() {
            assert!(dd.contains(&w));
        }
    }
}
