//! Dense vectors and matrices over GF(2).
//!
//! Bit `i` of a [`BitVector`] is the `i`-th printed symbol counting from the
//! left. Internally bits are packed little-endian into `u64` words, so for
//! vectors of up to 64 symbols [`BitVector::as_u64`] is the integer whose
//! least significant bit is the leftmost symbol.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest generator that [`BitMatrix::enumerate_codebook`] will expand.
pub const MAX_ENUM_ROWS: usize = 20;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// All-zero vector. Panics if `len == 0`.
    pub fn zeros(len: usize) -> Self {
        assert!(len > 0, "BitVector length must be positive");
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.clear_tail();
        v
    }

    /// Builds a vector of `len <= 64` symbols from an integer whose bit `i`
    /// is symbol `i`. Bits at or above `len` are discarded.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= WORD, "from_u64 supports at most 64 symbols");
        let mut v = Self::zeros(len);
        v.words[0] = value;
        v.clear_tail();
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let bits: Vec<bool> = bits.into_iter().collect();
        if bits.is_empty() {
            return Err(Error::ZeroLength);
        }
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        Ok(v)
    }

    /// Concatenates vectors left to right.
    pub fn concat(parts: &[&BitVector]) -> Result<Self> {
        Self::from_bits(parts.iter().flat_map(|p| p.iter()))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD);
        if bit {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        let b = self.get(i);
        self.set(i, !b);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> Self {
        let mut v = self.clone();
        for w in v.words.iter_mut() {
            *w = !*w;
        }
        v.clear_tail();
        v
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn distance(&self, other: &Self) -> usize {
        (self + other).weight()
    }

    /// Positions of nonzero symbols.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Symbols `start..end` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start < end && end <= self.len, "bad slice {start}..{end}");
        let mut v = Self::zeros(end - start);
        for i in start..end {
            if self.get(i) {
                v.set(i - start, true);
            }
        }
        v
    }

    /// Integer value with symbol 0 as the least significant bit.
    /// Panics for vectors longer than 64 symbols.
    pub fn as_u64(&self) -> u64 {
        assert!(self.len <= WORD, "as_u64 on a {}-symbol vector", self.len);
        self.words[0]
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
    }
}

/// Shorter vectors sort first; equal-length vectors sort by integer value
/// with the leftmost symbol least significant.
impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&BitVector> for BitVector {
    fn add_assign(&mut self, rhs: &BitVector) {
        assert_eq!(self.len, rhs.len, "adding vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl Add for &BitVector {
    type Output = BitVector;

    fn add(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

fn parse_symbols(s: &str, line: usize) -> Result<BitVector> {
    let err = |msg: String| Error::Parse { line, msg };
    let mut bits = Vec::with_capacity(s.len());
    let mut prev_space = true;
    for c in s.chars() {
        match c {
            '0' | '1' => {
                bits.push(c == '1');
                prev_space = false;
            }
            ' ' if !prev_space => prev_space = true,
            ' ' => return Err(err("unexpected space".into())),
            other => return Err(err(format!("unexpected character {other:?}"))),
        }
    }
    if prev_space && !bits.is_empty() {
        return Err(err("trailing space".into()));
    }
    if bits.is_empty() {
        return Err(err("empty vector".into()));
    }
    BitVector::from_bits(bits)
}

/// Accepts `0`/`1` symbols with optional single spaces between them.
impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_symbols(s.trim_end_matches(['\n', '\r']), 1)
    }
}

/// A rectangular, nonempty stack of equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n_cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn new(rows: Vec<BitVector>) -> Result<Self> {
        let n_cols = rows.first().ok_or(Error::EmptyMatrix)?.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n_cols) {
            return Err(Error::Ragged {
                row,
                expected: n_cols,
                found: r.len(),
            });
        }
        Ok(Self { n_cols, rows })
    }

    /// Parses each string as one row.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, r)| parse_symbols(r.as_ref(), i + 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        assert!(n_rows > 0, "matrix must have at least one row");
        Self {
            n_cols,
            rows: vec![BitVector::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row.set(i, true);
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    /// Block matrix whose block `(i, j)` is `self[i][j] * other`.
    pub fn kronecker(&self, other: &BitMatrix) -> BitMatrix {
        let mut rows = Vec::with_capacity(self.n_rows() * other.n_rows());
        for a_row in &self.rows {
            for b_row in &other.rows {
                let mut out = BitVector::zeros(self.n_cols * other.n_cols);
                for j in a_row.support() {
                    for k in b_row.support() {
                        out.set(j * other.n_cols + k, true);
                    }
                }
                rows.push(out);
            }
        }
        BitMatrix {
            n_cols: self.n_cols * other.n_cols,
            rows,
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != other.n_cols {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: other.n_cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            n_cols: self.n_cols,
            rows,
        })
    }

    pub fn transpose(&self) -> BitMatrix {
        let rows = (0..self.n_cols)
            .map(|j| {
                let mut col = BitVector::zeros(self.n_rows());
                for (i, r) in self.rows.iter().enumerate() {
                    if r.get(j) {
                        col.set(i, true);
                    }
                }
                col
            })
            .collect();
        BitMatrix {
            n_cols: self.n_rows(),
            rows,
        }
    }

    /// Matrix product `self * other` over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != other.n_rows() {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: other.n_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.combine_unchecked(r))
            .collect();
        Ok(BitMatrix {
            n_cols: other.n_cols,
            rows,
        })
    }

    /// The linear combination `message * self`.
    pub fn combine(&self, message: &BitVector) -> Result<BitVector> {
        if message.len() != self.n_rows() {
            return Err(Error::LengthMismatch {
                expected: self.n_rows(),
                found: message.len(),
            });
        }
        Ok(self.combine_unchecked(message))
    }

    fn combine_unchecked(&self, message: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.n_cols);
        for i in message.support() {
            out += &self.rows[i];
        }
        out
    }

    /// Nonzero rows of the reduced row echelon form, with their pivot columns.
    pub fn rref(&self) -> (Vec<BitVector>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.n_cols {
            let Some(p) = (top..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(top, p);
            let pivot = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != top && row.get(col) {
                    *row += &pivot;
                }
            }
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// True iff both matrices span the same subspace.
    pub fn row_space_equal(&self, other: &BitMatrix) -> Result<bool> {
        if self.n_cols != other.n_cols {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: other.n_cols,
            });
        }
        Ok(self.rref().0 == other.rref().0)
    }

    pub fn spans(&self, v: &BitVector) -> bool {
        if v.len() != self.n_cols {
            return false;
        }
        let (basis, pivots) = self.rref();
        let mut rest = v.clone();
        for (row, &p) in basis.iter().zip(&pivots) {
            if rest.get(p) {
                rest += row;
            }
        }
        rest.is_zero()
    }

    /// Every codeword of the row space, in ascending order.
    pub fn enumerate_codebook(&self) -> Result<BTreeSet<BitVector>> {
        if self.n_rows() > MAX_ENUM_ROWS {
            return Err(Error::TooManyRows(self.n_rows()));
        }
        let mut words = BTreeSet::new();
        let mut current = BitVector::zeros(self.n_cols);
        words.insert(current.clone());
        // Gray-code walk: step i flips the row at the lowest set bit of i.
        for i in 1u64..(1u64 << self.n_rows()) {
            current += &self.rows[i.trailing_zeros() as usize];
            words.insert(current.clone());
        }
        Ok(words)
    }

    pub fn weight_distribution(&self) -> Result<BTreeMap<usize, usize>> {
        let mut dist = BTreeMap::new();
        for w in self.enumerate_codebook()? {
            *dist.entry(w.weight()).or_insert(0) += 1;
        }
        Ok(dist)
    }

    /// Minimum nonzero codeword weight.
    pub fn min_distance(&self) -> Result<usize> {
        self.weight_distribution()?
            .into_keys()
            .find(|&w| w > 0)
            .ok_or(Error::ZeroGenerator)
    }

    /// One row per line in the shared `0`/`1` text format.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n_rows() * (self.n_cols + 1));
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

/// Parses the matrix text format: one row per line, `#` comment lines and
/// blank lines skipped.
impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            rows.push(parse_symbols(line, i + 1)?);
        }
        BitMatrix::new(rows)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows.iter().map(|r| r.to_string()))
            .finish()
    }
}
