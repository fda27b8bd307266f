use std::fmt;

use super::field::{assert_supported, GFScalar};
use super::FflaError;
use crate::par::Exec;

/// Dense matrix over GF(p).
///
/// For p = 2 rows are packed 64 entries per `u64` word, with unused high bits
/// of the last word kept zero. Every other prime stores one byte per entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GFMatrix {
    rows: usize,
    cols: usize,
    p: u32,
    pub(super) store: Store,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(super) enum Store {
    Bits { stride: usize, words: Vec<u64> },
    Bytes(Vec<u8>),
}

pub(super) fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

/// `table[x] = factor * x mod p` for x < p.
pub(super) fn mul_table(factor: u32, p: u32) -> [u8; 256] {
    let mut t = [0u8; 256];
    for (x, slot) in t.iter_mut().enumerate().take(p as usize) {
        *slot = ((factor as usize * x) % p as usize) as u8;
    }
    t
}

/// `dst += factor * src` over GF(p), via a precomputed multiplication table.
#[inline]
pub(super) fn axpy_bytes(dst: &mut [u8], src: &[u8], table: &[u8; 256], p: u8) {
    for (d, &s) in dst.iter_mut().zip(src) {
        let v = *d as u16 + table[s as usize] as u16;
        *d = if v >= p as u16 { (v - p as u16) as u8 } else { v as u8 };
    }
}

impl GFMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        assert_supported(p);
        let store = if p == 2 {
            let stride = words_for(cols);
            Store::Bits { stride, words: vec![0; rows * stride] }
        } else {
            Store::Bytes(vec![0; rows * cols])
        };
        GFMatrix { rows, cols, p, store }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// `value * I`.
    pub fn scalar(n: usize, value: u32, p: u32) -> Self {
        let mut m = Self::zeros(n, n, p);
        let v = value % p;
        if v != 0 {
            for i in 0..n {
                m.set(i, i, v);
            }
        }
        m
    }

    /// Build from explicit rows; entries are reduced mod p.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize, p: u32) -> Self {
        let mut m = Self::zeros(rows.len(), cols, p);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has {} entries, expected {cols}", row.len());
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v.rem_euclid(p as i64) as u32);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, p: u32, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(rows, cols, p);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j) % p;
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Build row by row: `f(r, buf)` accumulates row `r` into a zeroed buffer
    /// of length `cols`, which is then reduced mod p. Rows are independent and
    /// distributed by `exec`.
    pub(crate) fn from_row_fn<F>(rows: usize, cols: usize, p: u32, exec: Exec, f: F) -> Self
    where
        F: Fn(usize, &mut [u32]) + Sync + Send,
    {
        let mut out = Self::zeros(rows, cols, p);
        match &mut out.store {
            Store::Bits { stride, words } => exec.rows_mut(words, *stride, |r, row| {
                let mut buf = vec![0u32; cols];
                f(r, &mut buf);
                for (c, &v) in buf.iter().enumerate() {
                    if v & 1 == 1 {
                        row[c / 64] |= 1 << (c % 64);
                    }
                }
            }),
            Store::Bytes(data) => exec.rows_mut(data, cols, |r, row| {
                let mut buf = vec![0u32; cols];
                f(r, &mut buf);
                for (d, &v) in row.iter_mut().zip(&buf) {
                    *d = (v % p) as u8;
                }
            }),
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.store {
            Store::Bits { stride, words } => ((words[r * stride + c / 64] >> (c % 64)) & 1) as u32,
            Store::Bytes(b) => b[r * self.cols + c] as u32,
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(r < self.rows && c < self.cols);
        let v = v % self.p;
        match &mut self.store {
            Store::Bits { stride, words } => {
                let w = &mut words[r * *stride + c / 64];
                let mask = 1u64 << (c % 64);
                if v == 1 {
                    *w |= mask;
                } else {
                    *w &= !mask;
                }
            }
            Store::Bytes(b) => b[r * self.cols + c] = v as u8,
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> GFScalar {
        GFScalar::new(self.get(r, c) as i64, self.p)
    }

    /// Add `v` to entry (r, c).
    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u32) {
        let cur = self.get(r, c);
        self.set(r, c, (cur + v % self.p) % self.p);
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        match &self.store {
            Store::Bits { stride, words } => words[r * stride..(r + 1) * stride].iter().all(|&w| w == 0),
            Store::Bytes(b) => b[r * self.cols..(r + 1) * self.cols].iter().all(|&x| x == 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Store::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows, self.p)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        match &self.store {
            Store::Bits { words, .. } => words.iter().map(|w| w.count_ones() as usize).sum(),
            Store::Bytes(b) => b.iter().filter(|&&x| x != 0).count(),
        }
    }

    /// Nonzero entries of row `r` as `(column, value)`.
    pub fn row_entries(&self, r: usize) -> Vec<(usize, u32)> {
        match &self.store {
            Store::Bits { stride, words } => {
                let mut out = Vec::new();
                for (wi, &w) in words[r * stride..(r + 1) * stride].iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        let b = w.trailing_zeros() as usize;
                        out.push((wi * 64 + b, 1));
                        w &= w - 1;
                    }
                }
                out
            }
            Store::Bytes(b) => b[r * self.cols..(r + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(c, &x)| (c, x as u32))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for (c, v) in self.row_entries(r) {
                t.set(c, r, v);
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), FflaError> {
        if self.p != other.p {
            return Err(FflaError::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(FflaError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, FflaError> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FflaError> {
        self.combine(other, self.p - 1)
    }

    /// `self + factor * other`.
    pub fn combine(&self, other: &Self, factor: u32) -> Result<Self, FflaError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, factor);
        Ok(out)
    }

    /// In-place `self += factor * other`; shapes must agree.
    pub fn add_assign_scaled(&mut self, other: &Self, factor: u32) {
        assert!(self.p == other.p && self.rows == other.rows && self.cols == other.cols);
        let factor = factor % self.p;
        if factor == 0 {
            return;
        }
        match (&mut self.store, &other.store) {
            (Store::Bits { words: a, .. }, Store::Bits { words: b, .. }) => {
                a.iter_mut().zip(b).for_each(|(x, y)| *x ^= y);
            }
            (Store::Bytes(a), Store::Bytes(b)) => {
                let t = mul_table(factor, self.p);
                axpy_bytes(a, b, &t, self.p as u8);
            }
            _ => unreachable!("storage follows the modulus"),
        }
    }

    pub fn scale(&self, factor: u32) -> Self {
        let factor = factor % self.p;
        if factor == 0 {
            return Self::zeros(self.rows, self.cols, self.p);
        }
        let mut out = self.clone();
        if let Store::Bytes(b) = &mut out.store {
            let t = mul_table(factor, self.p);
            b.iter_mut().for_each(|x| *x = t[*x as usize]);
        }
        out
    }

    /// `self - value * I`.
    pub fn minus_scalar(&self, value: u32) -> Result<Self, FflaError> {
        if !self.is_square() {
            return Err(FflaError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut out = self.clone();
        let neg = (self.p - value % self.p) % self.p;
        for i in 0..self.rows {
            out.add_at(i, i, neg);
        }
        Ok(out)
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, FflaError> {
        self.mat_mul_with(other, Exec::default())
    }

    /// Exact product over GF(p), with an explicit execution strategy.
    pub fn mat_mul_with(&self, other: &Self, exec: Exec) -> Result<Self, FflaError> {
        if self.p != other.p {
            return Err(FflaError::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.cols != other.rows {
            return Err(FflaError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.p);
        match (&self.store, &other.store, &mut out.store) {
            (
                Store::Bits { stride: sa, words: a },
                Store::Bits { stride: sb, words: b },
                Store::Bits { words: c, .. },
            ) => mul_bits(a, *sa, b, *sb, c, self.cols, exec),
            (Store::Bytes(a), Store::Bytes(b), Store::Bytes(c)) => {
                mul_bytes(a, b, c, self.cols, other.cols, self.p, exec)
            }
            _ => unreachable!("storage follows the modulus"),
        }
        Ok(out)
    }

    /// Product with a column vector.
    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>, FflaError> {
        if v.len() != self.cols {
            return Err(FflaError::LengthMismatch { expected: self.cols, found: v.len() });
        }
        let p = self.p as u64;
        Ok((0..self.rows)
            .map(|r| {
                (self.row_entries(r).into_iter().map(|(c, x)| x as u64 * v[c] as u64).sum::<u64>() % p) as u32
            })
            .collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Result<Vec<u32>, FflaError> {
        if v.len() != self.rows {
            return Err(FflaError::LengthMismatch { expected: self.rows, found: v.len() });
        }
        let mut acc = vec![0u64; self.cols];
        for (r, &x) in v.iter().enumerate() {
            if x % self.p == 0 {
                continue;
            }
            for (c, y) in self.row_entries(r) {
                acc[c] = (acc[c] + x as u64 * y as u64) % self.p as u64;
            }
        }
        Ok(acc.into_iter().map(|x| x as u32).collect())
    }

    /// Keep the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len(), self.p);
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, j, v);
                }
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), self.cols, self.p);
        for (i, &r) in rows.iter().enumerate() {
            out.copy_row_from(i, self, r);
        }
        out
    }

    /// First `n` rows.
    pub fn top_rows(&self, n: usize) -> Self {
        let idx: Vec<usize> = (0..n.min(self.rows)).collect();
        self.select_rows(&idx)
    }

    pub(crate) fn copy_row_from(&mut self, dst: usize, src: &Self, src_row: usize) {
        assert_eq!(self.cols, src.cols);
        match (&mut self.store, &src.store) {
            (Store::Bits { stride, words }, Store::Bits { words: sw, .. }) => {
                let s = *stride;
                words[dst * s..(dst + 1) * s].copy_from_slice(&sw[src_row * s..(src_row + 1) * s]);
            }
            (Store::Bytes(b), Store::Bytes(sb)) => {
                let c = self.cols;
                b[dst * c..(dst + 1) * c].copy_from_slice(&sb[src_row * c..(src_row + 1) * c]);
            }
            _ => unreachable!("storage follows the modulus"),
        }
    }

    /// Stack matrices with equal column counts vertically.
    pub fn vstack(parts: &[&Self]) -> Result<Self, FflaError> {
        let first = parts.first().expect("vstack of nothing");
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Self::zeros(rows, first.cols, first.p);
        let mut at = 0;
        for m in parts {
            if m.p != first.p {
                return Err(FflaError::ModulusMismatch { left: first.p, right: m.p });
            }
            if m.cols != first.cols {
                return Err(FflaError::DimensionMismatch {
                    left: (first.rows, first.cols),
                    right: (m.rows, m.cols),
                });
            }
            for r in 0..m.rows {
                out.copy_row_from(at, m, r);
                at += 1;
            }
        }
        Ok(out)
    }

    /// Place matrices with equal row counts side by side.
    pub fn hstack(parts: &[&Self]) -> Result<Self, FflaError> {
        let first = parts.first().expect("hstack of nothing");
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(first.rows, cols, first.p);
        let mut offset = 0;
        for m in parts {
            if m.p != first.p {
                return Err(FflaError::ModulusMismatch { left: first.p, right: m.p });
            }
            if m.rows != first.rows {
                return Err(FflaError::DimensionMismatch {
                    left: (first.rows, first.cols),
                    right: (m.rows, m.cols),
                });
            }
            for r in 0..m.rows {
                for (c, v) in m.row_entries(r) {
                    out.set(r, offset + c, v);
                }
            }
            offset += m.cols;
        }
        Ok(out)
    }

    /// Raw access for serialization: entries row-major as integers.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }
}

impl fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GFMatrix {}x{} over GF({})", self.rows, self.cols, self.p)?;
        if self.rows <= 16 && self.cols <= 32 {
            for r in 0..self.rows {
                let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
                writeln!(f, "  [{}]", row.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Bit-packed product with 8-row lookup tables (method of four Russians, k = 8).
fn mul_bits(a: &[u64], sa: usize, b: &[u64], sb: usize, c: &mut [u64], inner: usize, exec: Exec) {
    if sb == 0 || inner == 0 {
        return;
    }
    let groups = inner.div_ceil(8);
    let mut table = vec![0u64; 256 * sb];
    for g in 0..groups {
        let base = g * 8;
        let width = (inner - base).min(8);
        table[..sb].iter_mut().for_each(|w| *w = 0);
        for m in 1usize..(1 << width) {
            let low = m.trailing_zeros() as usize;
            let prev = m & (m - 1);
            let src = (base + low) * sb;
            let (head, tail) = table.split_at_mut(m * sb);
            let dst = &mut tail[..sb];
            dst.copy_from_slice(&head[prev * sb..prev * sb + sb]);
            dst.iter_mut().zip(&b[src..src + sb]).for_each(|(x, y)| *x ^= y);
        }
        let word = base / 64;
        let shift = base % 64;
        let table = &table;
        exec.rows_mut(c, sb, |i, crow| {
            let byte = ((a[i * sa + word] >> shift) & 0xff) as usize;
            if byte != 0 {
                let t = &table[byte * sb..byte * sb + sb];
                crow.iter_mut().zip(t).for_each(|(x, y)| *x ^= y);
            }
        });
    }
}

fn mul_bytes(a: &[u8], b: &[u8], c: &mut [u8], inner: usize, cols: usize, p: u32, exec: Exec) {
    if cols == 0 {
        return;
    }
    // Each term is < p^2 <= 255^2; reduce before the u32 accumulator can overflow.
    let max_terms = (u32::MAX / ((p - 1) * (p - 1)).max(1)) as usize - 1;
    exec.rows_mut(c, cols, |i, crow| {
        let arow = &a[i * inner..(i + 1) * inner];
        let mut acc = vec![0u32; cols];
        let mut pending = 0usize;
        for (k, &x) in arow.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u32;
            let brow = &b[k * cols..(k + 1) * cols];
            acc.iter_mut().zip(brow).for_each(|(s, &y)| *s += x * y as u32);
            pending += 1;
            if pending == max_terms {
                acc.iter_mut().for_each(|s| *s %= p);
                pending = 0;
            }
        }
        crow.iter_mut().zip(&acc).for_each(|(d, &s)| *d = (s % p) as u8);
    });
}
