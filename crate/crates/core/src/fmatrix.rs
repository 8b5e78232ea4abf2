//! Dense matrices over GF(q): canonical row reduction, kernels, and span
//! intersection.
//!
//! Over GF(2) the elimination runs on rows packed into `u64` words; other
//! fields use the table-driven scalar arithmetic of [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of [`FqMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FqMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FqMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        FqMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows, checking every entry lies in `[0, q)`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            if let Some(&bad) = r.iter().find(|&&x| x as usize >= field.q()) {
                return Err(Error::BadRange(format!("entry {bad} not in {field}")));
            }
            data.extend_from_slice(r);
        }
        Ok(FqMatrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn push_row(&mut self, row: &[u8]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// Keeps only the first `n` rows.
    pub fn truncate_rows(&mut self, n: usize) {
        self.rows = self.rows.min(n);
        self.data.truncate(self.rows * self.cols);
    }

    pub fn vstack(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.check_compatible(other)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FqMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = FqMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(u8) -> u8) -> FqMatrix {
        FqMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> FqMatrix {
        let mut out = FqMatrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, rhs: &FqMatrix) -> Result<FqMatrix> {
        if self.field != rhs.field || self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = FqMatrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, rhs.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// `M v^T` for a single vector.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        self.iter_rows().map(|r| self.field.dot(r, v)).collect()
    }

    fn check_compatible(&self, other: &FqMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "fields differ: {} vs {}",
                self.field, other.field
            )));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "column counts differ: {} vs {}",
                self.cols, other.cols
            )));
        }
        Ok(())
    }

    /// Canonical reduced row echelon form: pivots equal 1, pivot columns
    /// strictly increase, zero rows trail.
    pub fn rref(&self) -> Rref {
        if self.field.q() == 2 {
            self.rref_binary()
        } else {
            self.rref_generic()
        }
    }

    /// The scalar elimination, usable for every field (tests compare it with
    /// the packed GF(2) path).
    pub fn rref_generic(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(piv, r);
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    fn rref_binary(&self) -> Rref {
        let mut bits = BitRows::pack(self);
        let (rank, pivots) = bits.eliminate();
        Rref { matrix: bits.unpack(&self.field), rank, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : M v^T = 0}`, one row per free column.
    pub fn kernel(&self) -> FqMatrix {
        let f = &self.field;
        let Rref { matrix: r, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FqMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(k, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Basis of the intersection of the row spans of `self` and `other`
    /// (Zassenhaus).
    pub fn intersect(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.check_compatible(other)?;
        let n = self.cols;
        let mut big = FqMatrix::zeros(&self.field, self.rows + other.rows, 2 * n);
        for r in 0..self.rows {
            for c in 0..n {
                big.set(r, c, self.get(r, c));
                big.set(r, n + c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..n {
                big.set(self.rows + r, c, other.get(r, c));
            }
        }
        let Rref { matrix, rank, .. } = big.rref();
        let mut out = FqMatrix::zeros(&self.field, 0, n);
        for r in 0..rank {
            let row = matrix.row(r);
            if row[..n].iter().all(|&x| x == 0) {
                out.push_row(&row[n..]);
            }
        }
        Ok(out)
    }

    /// Whether `v` lies in the row span.
    pub fn spans(&self, v: &[u8]) -> bool {
        let mut m = self.clone();
        m.push_row(v);
        m.rank() == self.rank()
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in self.iter_rows() {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// GF(2) rows packed into 64-bit words.
pub(crate) struct BitRows {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    pub(crate) fn pack(m: &FqMatrix) -> BitRows {
        let words = m.cols.div_ceil(64).max(1);
        let mut data = vec![0u64; m.rows * words];
        for r in 0..m.rows {
            for c in 0..m.cols {
                if m.get(r, c) != 0 {
                    data[r * words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        BitRows { rows: m.rows, cols: m.cols, words, data }
    }

    fn bit(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn xor_into(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for k in 0..w {
            let s = self.data[src * w + k];
            self.data[dst * w + k] ^= s;
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    fn eliminate(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.bit(i, c)) else { continue };
            self.swap(piv, r);
            for i in 0..self.rows {
                if i != r && self.bit(i, c) {
                    self.xor_into(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }

    fn unpack(&self, field: &Field) -> FqMatrix {
        let mut m = FqMatrix::zeros(field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.bit(r, c) {
                    m.set(r, c, 1);
                }
            }
        }
        m
    }
}
