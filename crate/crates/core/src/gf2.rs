//! Bit-packed vectors and matrices over GF(2).
//!
//! Rows are stored LSB-first: bit `j` of a row is column `j`, so column 0 is
//! the leftmost character in the text rendering. Matrices with at most 64
//! columns occupy one machine word per row, which is the hot case everywhere
//! in this crate; wider matrices fall back to multiple words per row with the
//! same API.
//!
//! All functions are pure: they never mutate their inputs and carry no hidden
//! state, so values can be shared freely across threads.

use crate::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Mask selecting bits `[0, n)` of the final word of an `n`-bit row.
#[inline]
fn tail_mask(bits: usize) -> u64 {
    let r = bits % WORD_BITS;
    if r == 0 {
        u64::MAX
    } else {
        (1u64 << r) - 1
    }
}

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinVector {
    len: usize,
    words: Vec<u64>,
}

impl BinVector {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from booleans.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b {
                v.set(j, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` from the low bits of `word`.
    ///
    /// Bit `j` of `word` becomes coordinate `j`. Requires `len <= 64`.
    pub fn from_word(word: u64, len: usize) -> Self {
        assert!(len <= WORD_BITS, "from_word supports at most 64 bits");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = word & tail_mask(len);
        }
        v
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the vector has no coordinates.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinate `j`.
    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.len);
        (self.words[j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    /// Sets coordinate `j`.
    pub fn set(&mut self, j: usize, value: bool) {
        assert!(j < self.len);
        let w = &mut self.words[j / WORD_BITS];
        let bit = 1u64 << (j % WORD_BITS);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// True when every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// XORs `other` into `self`. Lengths must match.
    pub fn xor_assign(&mut self, other: &BinVector) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the first set coordinate, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Index of the last set coordinate, if any.
    pub fn last_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * WORD_BITS + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// The underlying words, LSB-first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low word; convenient for vectors of at most 64 bits.
    pub fn as_word(&self) -> u64 {
        assert!(self.len <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    /// Restriction to coordinates `[x, y)`.
    pub fn window(&self, x: usize, y: usize) -> BinVector {
        assert!(x <= y && y <= self.len);
        let mut out = BinVector::zeros(y - x);
        for j in x..y {
            if self.get(j) {
                out.set(j - x, true);
            }
        }
        out
    }

    /// Renders as a string of `'0'`/`'1'` with coordinate 0 leftmost.
    pub fn to_text(&self) -> String {
        (0..self.len)
            .map(|j| if self.get(j) { '1' } else { '0' })
            .collect()
    }

    /// Parses a string of `'0'`/`'1'`, leftmost character as coordinate 0.
    pub fn from_text(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.chars().count());
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(j, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid character {other:?} in row {s:?}"
                    )))
                }
            }
        }
        Ok(v)
    }
}

impl fmt::Debug for BinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinVector({})", self.to_text())
    }
}

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BinMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols).max(1);
        Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks row vectors; all must share one length.
    pub fn from_rows(rows: &[BinVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, BinVector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(
                "rows of unequal length".to_string(),
            ));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.words[i * m.stride..i * m.stride + r.words.len()].copy_from_slice(&r.words);
        }
        Ok(m)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.words[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    /// Sets entry `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.stride + c / WORD_BITS];
        let bit = 1u64 << (c % WORD_BITS);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    /// Words of row `r`, LSB-first.
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    /// Row `r` as an owned vector.
    pub fn row(&self, r: usize) -> BinVector {
        BinVector {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    /// Replaces row `r`.
    pub fn set_row(&mut self, r: usize, v: &BinVector) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.words[r * self.stride..(r + 1) * self.stride].copy_from_slice(&v.words);
    }

    /// XORs row `src` into row `dst`.
    pub fn xor_rows(&mut self, dst: usize, src: usize) {
        assert!(dst != src && dst < self.rows && src < self.rows);
        let (d, s) = (dst * self.stride, src * self.stride);
        for k in 0..self.stride {
            let w = self.words[s + k];
            self.words[d + k] ^= w;
        }
    }

    /// Hamming weight of row `r`.
    pub fn row_weight(&self, r: usize) -> u32 {
        self.row_words(r).iter().map(|w| w.count_ones()).sum()
    }

    /// First set column of row `r`.
    pub fn row_start(&self, r: usize) -> Option<usize> {
        for (i, &w) in self.row_words(r).iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Last set column of row `r`.
    pub fn row_end(&self, r: usize) -> Option<usize> {
        for (i, &w) in self.row_words(r).iter().enumerate().rev() {
            if w != 0 {
                return Some(i * WORD_BITS + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// Sub-matrix keeping all rows restricted to columns `[x, y)`.
    pub fn column_window(&self, x: usize, y: usize) -> BinMatrix {
        assert!(x <= y && y <= self.cols);
        let mut out = BinMatrix::zeros(self.rows, y - x);
        for r in 0..self.rows {
            for c in x..y {
                if self.get(r, c) {
                    out.set(r, c - x, true);
                }
            }
        }
        out
    }

    /// Matrix product over GF(2); `self.cols` must equal `rhs.rows`.
    pub fn mul(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = BinMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    let (d, s) = (r * out.stride, c * rhs.stride);
                    for k in 0..rhs.stride {
                        out.words[d + k] ^= rhs.words[s + k];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row-vector times matrix: `v * self`.
    pub fn mul_vec_left(&self, v: &BinVector) -> Result<BinVector> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = BinVector::zeros(self.cols);
        for r in 0..self.rows {
            if v.get(r) {
                for k in 0..self.stride {
                    out.words[k] ^= self.words[r * self.stride + k];
                }
            }
        }
        Ok(out)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut basis = RowBasis::new(self.cols);
        for r in 0..self.rows {
            basis.insert(&self.row(r), 0);
        }
        basis.len()
    }

    /// Inverse of a square matrix, or `Error::Singular`.
    pub fn invert_square(&self) -> Result<BinMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "invert of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut basis = RowBasis::new(n);
        for r in 0..n {
            if !basis.insert(&self.row(r), 1u64 << r) {
                return Err(Error::Singular);
            }
        }
        // Row j of the inverse solves x * self = e_j.
        let mut inv = BinMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = BinVector::zeros(n);
            e.set(j, true);
            let mask = basis.membership(&e).ok_or(Error::Singular)?;
            for r in 0..n {
                if (mask >> r) & 1 == 1 {
                    inv.set(j, r, true);
                }
            }
        }
        Ok(inv)
    }

    /// Minimum-span (trellis-oriented) form of a full-row-rank matrix.
    ///
    /// Every row of the result has a distinct first set column and a distinct
    /// last set column; rows are ordered by first set column. Returns
    /// `Error::RankDeficient` when the rows are linearly dependent.
    pub fn to_trellis_oriented(&self) -> Result<BinMatrix> {
        Ok(self.to_trellis_oriented_tracked()?.0)
    }

    /// Minimum-span form plus, per output row, the set of input rows (as a
    /// bit mask) whose XOR produced it. Requires at most 64 input rows.
    pub fn to_trellis_oriented_tracked(&self) -> Result<(BinMatrix, Vec<u64>)> {
        assert!(self.rows <= WORD_BITS, "row provenance mask is one word");
        let mut rows: Vec<BinVector> = (0..self.rows).map(|r| self.row(r)).collect();
        let mut masks: Vec<u64> = (0..self.rows).map(|r| 1u64 << r).collect();

        // Forward pass: make first set columns distinct. For each column in
        // order, the topmost unpivoted row starting there becomes the pivot
        // and clears that column from every other unpivoted row.
        let mut pivoted = vec![false; self.rows];
        for col in 0..self.cols {
            let Some(p) = (0..self.rows)
                .find(|&r| !pivoted[r] && rows[r].first_one() == Some(col))
            else {
                continue;
            };
            pivoted[p] = true;
            for r in 0..self.rows {
                if r != p && !pivoted[r] && rows[r].first_one() == Some(col) {
                    let (pv, pm) = (rows[p].clone(), masks[p]);
                    rows[r].xor_assign(&pv);
                    masks[r] ^= pm;
                }
            }
        }
        if rows.iter().any(BinVector::is_zero) {
            return Err(Error::RankDeficient);
        }

        // Backward pass: make last set columns distinct. When several rows
        // share an end, the one starting latest keeps it and is XORed into
        // the earlier-starting rows, which preserves their starts.
        for col in (0..self.cols).rev() {
            loop {
                let sharing: Vec<usize> = (0..self.rows)
                    .filter(|&r| rows[r].last_one() == Some(col))
                    .collect();
                if sharing.len() <= 1 {
                    break;
                }
                let keeper = *sharing
                    .iter()
                    .max_by_key(|&&r| rows[r].first_one())
                    .expect("nonempty");
                let (kv, km) = (rows[keeper].clone(), masks[keeper]);
                for &r in &sharing {
                    if r != keeper {
                        rows[r].xor_assign(&kv);
                        masks[r] ^= km;
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..self.rows).collect();
        order.sort_by_key(|&r| rows[r].first_one());
        let sorted_rows: Vec<BinVector> = order.iter().map(|&r| rows[r].clone()).collect();
        let sorted_masks: Vec<u64> = order.iter().map(|&r| masks[r]).collect();
        Ok((BinMatrix::from_rows(&sorted_rows)?, sorted_masks))
    }

    /// Iterates over all distinct codewords of the row space, starting with
    /// the zero vector. Fails when the matrix has more than 32 rows.
    pub fn enumerate_codewords(&self) -> Result<Codewords> {
        if self.rows > 32 {
            return Err(Error::TooManyRows {
                max: 32,
                got: self.rows,
            });
        }
        let mut basis = RowBasis::new(self.cols);
        for r in 0..self.rows {
            basis.insert(&self.row(r), 0);
        }
        let rows: Vec<BinVector> = basis.rows().map(|(v, _)| v.clone()).collect();
        Ok(Codewords {
            current: BinVector::zeros(self.cols),
            index: 0,
            total: 1u64 << rows.len(),
            basis: rows,
        })
    }

    /// Renders in the kernel text format: one `'0'`/`'1'` row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            s.push_str(&self.row(r).to_text());
            s.push('\n');
        }
        s
    }

    /// Parses the kernel text format: one row of `'0'`/`'1'` per line, no
    /// separators, terminated by a blank line or end of input. Column 0 is
    /// the leftmost character; all rows must have equal length.
    pub fn from_text(s: &str) -> Result<BinMatrix> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                break;
            }
            rows.push(BinVector::from_text(line)?);
        }
        if rows.is_empty() {
            return Err(Error::Parse("no rows found".to_string()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("rows of unequal length".to_string()));
        }
        BinMatrix::from_rows(&rows)
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r).to_text())?;
        }
        write!(f, "]")
    }
}

/// Iterator over the codewords of a row space in Gray-code order.
pub struct Codewords {
    basis: Vec<BinVector>,
    current: BinVector,
    index: u64,
    total: u64,
}

impl Iterator for Codewords {
    type Item = BinVector;

    fn next(&mut self) -> Option<BinVector> {
        if self.index == self.total {
            return None;
        }
        let out = self.current.clone();
        self.index += 1;
        if self.index < self.total {
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords {}

/// Incremental row-echelon basis with provenance tags.
///
/// Each stored row keeps a caller-supplied bit mask; reductions XOR the masks
/// alongside the vectors, so membership queries report which inserted rows
/// combine to a target. This is the workhorse for solving `x * M = t`.
pub struct RowBasis {
    cols: usize,
    rows: Vec<(BinVector, u64)>,
}

impl RowBasis {
    /// Empty basis for vectors with `cols` coordinates.
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    /// Basis built from the rows of `m`, tagged with `1 << row_index`.
    pub fn from_matrix(m: &BinMatrix) -> Self {
        let mut b = Self::new(m.cols());
        for r in 0..m.rows() {
            b.insert(&m.row(r), 1u64 << r);
        }
        b
    }

    /// Number of independent rows stored.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// True when no rows are stored.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Stored rows with their accumulated tags.
    pub fn rows(&self) -> impl Iterator<Item = (&BinVector, u64)> {
        self.rows.iter().map(|(v, m)| (v, *m))
    }

    /// Reduces `v` against the basis and inserts the residual when nonzero.
    ///
    /// Returns true when `v` was independent of the basis.
    pub fn insert(&mut self, v: &BinVector, tag: u64) -> bool {
        assert_eq!(v.len(), self.cols, "basis column mismatch");
        let (residual, mask) = self.reduce(v);
        if residual.is_zero() {
            return false;
        }
        self.rows.push((residual, mask ^ tag));
        // Keep rows sorted by pivot so reduce stays a single sweep.
        self.rows
            .sort_by_key(|(r, _)| r.first_one().unwrap_or(usize::MAX));
        true
    }

    /// Reduces `v` by the basis; returns the residual and the XOR of the tags
    /// of every basis row applied.
    pub fn reduce(&self, v: &BinVector) -> (BinVector, u64) {
        let mut cur = v.clone();
        let mut mask = 0u64;
        // Rows are kept sorted by pivot; a single ascending sweep suffices
        // because no later row can have a 1 at an earlier pivot.
        for (row, tag) in &self.rows {
            let pivot = row.first_one().expect("basis rows are nonzero");
            if cur.get(pivot) {
                cur.xor_assign(row);
                mask ^= tag;
            }
        }
        (cur, mask)
    }

    /// When `v` lies in the span, the XOR of tags expressing it; else `None`.
    pub fn membership(&self, v: &BinVector) -> Option<u64> {
        let (residual, mask) = self.reduce(v);
        residual.is_zero().then_some(mask)
    }

    /// True when `v` lies in the span of the stored rows.
    pub fn contains(&self, v: &BinVector) -> bool {
        self.membership(v).is_some()
    }

    /// True when both bases span the same row space.
    pub fn same_span(&self, other: &RowBasis) -> bool {
        self.len() == other.len() && self.rows.iter().all(|(v, _)| other.contains(v))
    }
}

/// Exact minimum Hamming distance from `g` to the row space of `rows`.
///
/// Depth-first search over a minimum-span basis of the row space with
/// branch-and-bound pruning: once the rows deciding a column prefix are
/// fixed, the weight already accumulated on that prefix cannot decrease, so
/// branches whose prefix weight reaches the best known distance are cut.
pub fn min_coset_distance(g: &BinVector, rows: &BinMatrix) -> Result<u32> {
    min_coset_distance_bounded(g, rows, 0)
}

/// Like [`min_coset_distance`] but abandons the search as soon as any coset
/// word of weight below `cutoff` is found, returning that weight. Useful when
/// the caller only needs to know whether the minimum reaches `cutoff`.
pub fn min_coset_distance_bounded(
    g: &BinVector,
    rows: &BinMatrix,
    cutoff: u32,
) -> Result<u32> {
    if rows.rows() > 0 && rows.cols() != g.len() {
        return Err(Error::DimensionMismatch(format!(
            "coset vector of length {} against rows of length {}",
            g.len(),
            rows.cols()
        )));
    }
    // Reduce to an independent basis first so dependent or zero rows are
    // harmless, then put it in minimum-span form for the prefix bound.
    let mut basis = RowBasis::new(g.len());
    for r in 0..rows.rows() {
        basis.insert(&rows.row(r), 0);
    }
    if basis.is_empty() {
        return Ok(g.weight());
    }
    let independent: Vec<BinVector> = basis.rows().map(|(v, _)| v.clone()).collect();
    let span = BinMatrix::from_rows(&independent)?.to_trellis_oriented()?;

    let k = span.rows();
    // next_start[d] = first column still undecidable after choosing rows 0..d.
    let mut next_start = vec![g.len(); k];
    for d in 0..k {
        next_start[d] = if d + 1 < k {
            span.row_start(d + 1).unwrap_or(g.len())
        } else {
            g.len()
        };
    }
    let mut acc: Vec<u64> = g.words().to_vec();
    if acc.is_empty() {
        acc.push(0);
    }
    let mut best = g.weight();

    fn prefix_weight(acc: &[u64], upto: usize) -> u32 {
        let full = upto / WORD_BITS;
        let mut w = 0;
        for &x in &acc[..full.min(acc.len())] {
            w += x.count_ones();
        }
        if full < acc.len() && upto % WORD_BITS != 0 {
            w += (acc[full] & ((1u64 << (upto % WORD_BITS)) - 1)).count_ones();
        }
        w
    }

    fn dfs(
        depth: usize,
        acc: &mut [u64],
        span: &BinMatrix,
        next_start: &[usize],
        best: &mut u32,
        cutoff: u32,
    ) {
        if cutoff > 0 && *best < cutoff {
            return;
        }
        if depth == span.rows() {
            let w: u32 = acc.iter().map(|x| x.count_ones()).sum();
            if w < *best {
                *best = w;
            }
            return;
        }
        let bound_col = next_start[depth];
        for take in [false, true] {
            if take {
                for (a, b) in acc.iter_mut().zip(span.row_words(depth)) {
                    *a ^= b;
                }
            }
            if prefix_weight(acc, bound_col) < *best {
                dfs(depth + 1, acc, span, next_start, best, cutoff);
            }
            if take {
                for (a, b) in acc.iter_mut().zip(span.row_words(depth)) {
                    *a ^= b;
                }
            }
        }
    }

    dfs(0, &mut acc, &span, &next_start, &mut best, cutoff);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_rank(m: &BinMatrix) -> usize {
        // Textbook elimination over Vec<Vec<u8>>, independent of the packed path.
        let mut a: Vec<Vec<u8>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c) as u8).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            if let Some(p) = (rank..a.len()).find(|&r| a[r][col] == 1) {
                a.swap(rank, p);
                for r in 0..a.len() {
                    if r != rank && a[r][col] == 1 {
                        for c in 0..m.cols() {
                            a[r][c] ^= a[rank][c];
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn naive_min_coset_distance(g: &BinVector, rows: &BinMatrix) -> u32 {
        let mut best = g.weight();
        for r in 1u64..(1 << rows.rows()) {
            let mut c = g.clone();
            for i in 0..rows.rows() {
                if (r >> i) & 1 == 1 {
                    c.xor_assign(&rows.row(i));
                }
            }
            best = best.min(c.weight());
        }
        best
    }

    fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinMatrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(
                |rows| {
                    let rows: Vec<BinVector> =
                        rows.iter().map(|b| BinVector::from_bits(b)).collect();
                    BinMatrix::from_rows(&rows).unwrap()
                },
            )
        })
    }

    #[test]
    fn text_round_trip() {
        let m = BinMatrix::from_text("10\n11\n").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 2);
        assert!(m.get(0, 0) && !m.get(0, 1));
        assert_eq!(m.to_text(), "10\n11\n");
        // Blank line terminates.
        let m2 = BinMatrix::from_text("10\n11\n\n01\n").unwrap();
        assert_eq!(m2.rows(), 2);
        assert!(BinMatrix::from_text("1x\n").is_err());
        assert!(BinMatrix::from_text("10\n1\n").is_err());
        assert!(BinMatrix::from_text("\n").is_err());
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = BinMatrix::identity(5);
        assert_eq!(id.invert_square().unwrap(), id);
    }

    #[test]
    fn singular_matrix_reports_error() {
        let m = BinMatrix::from_text("11\n11\n").unwrap();
        assert!(matches!(m.invert_square(), Err(Error::Singular)));
    }

    #[test]
    fn lower_triangular_inverse_is_involution() {
        // [[1,0],[1,1]] is its own inverse.
        let f = BinMatrix::from_text("10\n11\n").unwrap();
        assert_eq!(f.invert_square().unwrap(), f);
    }

    #[test]
    fn enumerate_codewords_guard_and_zero_first() {
        let m = BinMatrix::zeros(33, 4);
        assert!(matches!(
            m.enumerate_codewords(),
            Err(Error::TooManyRows { max: 32, got: 33 })
        ));
        let m = BinMatrix::from_text("10\n11\n").unwrap();
        let words: Vec<BinVector> = m.enumerate_codewords().unwrap().collect();
        assert_eq!(words.len(), 4);
        assert!(words[0].is_zero());
        let texts: std::collections::BTreeSet<String> =
            words.iter().map(BinVector::to_text).collect();
        assert_eq!(
            texts,
            ["00", "10", "11", "01"].iter().map(|s| s.to_string()).collect()
        );
    }

    #[test]
    fn trellis_oriented_has_distinct_spans() {
        let m = BinMatrix::from_text("10001\n11000\n10100\n11110\n").unwrap();
        let t = m.to_trellis_oriented().unwrap();
        assert_eq!(t.to_text(), "11000\n01100\n00110\n00011\n");
        let dependent = BinMatrix::from_text("101\n101\n").unwrap();
        assert!(matches!(
            dependent.to_trellis_oriented(),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn trellis_tracking_recombines_original_rows() {
        let m = BinMatrix::from_text("10001\n11000\n10100\n11110\n").unwrap();
        let (t, masks) = m.to_trellis_oriented_tracked().unwrap();
        for (r, &mask) in masks.iter().enumerate() {
            let mut expect = BinVector::zeros(m.cols());
            for i in 0..m.rows() {
                if (mask >> i) & 1 == 1 {
                    expect.xor_assign(&m.row(i));
                }
            }
            assert_eq!(t.row(r), expect, "row {r} provenance mask");
        }
    }

    #[test]
    fn coset_distance_of_empty_span_is_weight() {
        let g = BinVector::from_text("1011").unwrap();
        let empty = BinMatrix::zeros(0, 4);
        assert_eq!(min_coset_distance(&g, &empty).unwrap(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_matches_naive(m in arb_matrix(8, 12)) {
            prop_assert_eq!(m.rank(), naive_rank(&m));
        }

        #[test]
        fn min_coset_distance_matches_enumeration(
            m in arb_matrix(7, 14),
            bits in proptest::collection::vec(any::<bool>(), 14),
        ) {
            let g = BinVector::from_bits(&bits[..m.cols()]);
            let fast = min_coset_distance(&g, &m).unwrap();
            prop_assert_eq!(fast, naive_min_coset_distance(&g, &m));
        }

        #[test]
        fn trellis_oriented_preserves_row_space(m in arb_matrix(6, 10)) {
            prop_assume!(m.rank() == m.rows());
            let t = m.to_trellis_oriented().unwrap();
            let a = RowBasis::from_matrix(&m);
            let b = RowBasis::from_matrix(&t);
            prop_assert!(a.same_span(&b));
            // Distinct starts and ends.
            let starts: std::collections::BTreeSet<_> =
                (0..t.rows()).map(|r| t.row_start(r)).collect();
            let ends: std::collections::BTreeSet<_> =
                (0..t.rows()).map(|r| t.row_end(r)).collect();
            prop_assert_eq!(starts.len(), t.rows());
            prop_assert_eq!(ends.len(), t.rows());
        }

        #[test]
        fn inverse_multiplies_to_identity(m in arb_matrix(6, 6)) {
            prop_assume!(m.rows() == m.cols());
            match m.invert_square() {
                Ok(inv) => {
                    let prod = m.mul(&inv).unwrap();
                    prop_assert_eq!(prod, BinMatrix::identity(m.rows()));
                }
                Err(Error::Singular) => prop_assert!(m.rank() < m.rows()),
                Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
            }
        }
    }
}
