//! Dense matrices over a prime field.
//!
//! Over GF(2) each row is packed into 64-bit words and row operations are
//! word-parallel XORs; over odd `p` entries are stored as residues. Both
//! layouts sit behind the same API.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{Element, Field};

const WORD: usize = 64;

#[derive(Clone, Debug)]
enum Storage {
    /// `words` words per row, row-major; bits past `cols` are always zero.
    Packed {
        words: usize,
        data: Vec<u64>,
    },
    Residues(Vec<u32>),
}

#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    storage: Storage,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Invertible matrix with `transform * input == reduced`.
    pub transform: Matrix,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let storage = if field.is_binary() {
            let words = cols.div_ceil(WORD);
            Storage::Packed {
                words,
                data: vec![0; rows * words],
            }
        } else {
            Storage::Residues(vec![0; rows * cols])
        };
        Matrix {
            field,
            rows,
            cols,
            storage,
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Element::ONE);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.elem(v));
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Element,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_element_rows(field: Field, cols: usize, rows: &[Vec<Element>]) -> Self {
        Self::from_fn(field, rows.len(), cols, |i, j| rows[i][j])
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Element {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.storage {
            Storage::Packed { words, data } => {
                let w = data[i * words + j / WORD];
                Element::from_bit((w >> (j % WORD)) & 1 == 1)
            }
            Storage::Residues(data) => self.field.elem_unchecked(data[i * self.cols + j]),
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Element) {
        debug_assert!(i < self.rows && j < self.cols);
        let cols = self.cols;
        match &mut self.storage {
            Storage::Packed { words, data } => {
                let w = &mut data[i * *words + j / WORD];
                let bit = 1u64 << (j % WORD);
                if v.value() & 1 == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
            Storage::Residues(data) => data[i * cols + j] = v.value(),
        }
    }

    pub fn row(&self, i: usize) -> Vec<Element> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// Number of nonzero entries in row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        match &self.storage {
            Storage::Packed { words, data } => data[i * words..(i + 1) * words]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum(),
            Storage::Residues(data) => data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .filter(|&&v| v != 0)
                .count(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Packed { data, .. } => data.iter().all(|&w| w == 0),
            Storage::Residues(data) => data.iter().all(|&v| v == 0),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field.p(), other.field.p()))
        } else {
            Ok(())
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Dot product of row `i` of `self` with row `j` of `other`.
    pub fn row_dot(&self, i: usize, other: &Matrix, j: usize) -> Element {
        debug_assert_eq!(self.cols, other.cols);
        match (&self.storage, &other.storage) {
            (Storage::Packed { words, data: a }, Storage::Packed { data: b, .. }) => {
                let ra = &a[i * words..(i + 1) * words];
                let rb = &b[j * words..(j + 1) * words];
                let ones: u32 = ra.iter().zip(rb).map(|(x, y)| (x & y).count_ones()).sum();
                Element::from_bit(ones & 1 == 1)
            }
            (Storage::Residues(a), Storage::Residues(b)) => {
                let p = self.field.p() as u64;
                let ra = &a[i * self.cols..(i + 1) * self.cols];
                let rb = &b[j * other.cols..(j + 1) * other.cols];
                let mut acc = 0u64;
                for (&x, &y) in ra.iter().zip(rb) {
                    acc = (acc + x as u64 * y as u64) % p;
                }
                self.field.elem_unchecked(acc as u32)
            }
            _ => unreachable!("field equality implies matching storage"),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        match (&other.storage, &mut out.storage) {
            (Storage::Packed { words, data: b }, Storage::Packed { data: c, .. }) => {
                let words = *words;
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        if !self.get(i, k).is_zero() {
                            for w in 0..words {
                                c[i * words + w] ^= b[k * words + w];
                            }
                        }
                    }
                }
            }
            (Storage::Residues(b), Storage::Residues(c)) => {
                let p = self.field.p() as u64;
                let n = other.cols;
                for i in 0..self.rows {
                    let mut acc = vec![0u64; n];
                    for k in 0..self.cols {
                        let a = self.get(i, k).value() as u64;
                        if a == 0 {
                            continue;
                        }
                        for (j, slot) in acc.iter_mut().enumerate() {
                            *slot = (*slot + a * b[k * n + j] as u64) % p;
                        }
                    }
                    for (j, v) in acc.into_iter().enumerate() {
                        c[i * n + j] = v as u32;
                    }
                }
            }
            _ => unreachable!("field equality implies matching storage"),
        }
        Ok(out)
    }

    /// `self * self^T`.
    pub fn gram(&self) -> Matrix {
        let mut g = Matrix::zeros(self.field, self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = self.row_dot(i, self, j);
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        g
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.storage {
            Storage::Packed { words, data } => {
                let w = *words;
                for t in 0..w {
                    data.swap(a * w + t, b * w + t);
                }
            }
            Storage::Residues(data) => {
                for t in 0..self.cols {
                    data.swap(a * self.cols + t, b * self.cols + t);
                }
            }
        }
    }

    /// `row[dst] += c * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: Element) {
        if c.is_zero() {
            return;
        }
        debug_assert_ne!(dst, src);
        let p = self.field.p() as u64;
        let cols = self.cols;
        match &mut self.storage {
            Storage::Packed { words, data } => {
                let w = *words;
                for t in 0..w {
                    let s = data[src * w + t];
                    data[dst * w + t] ^= s;
                }
            }
            Storage::Residues(data) => {
                let c = c.value() as u64;
                for t in 0..cols {
                    let s = data[src * cols + t] as u64;
                    let d = &mut data[dst * cols + t];
                    *d = ((*d as u64 + c * s) % p) as u32;
                }
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, c: Element) {
        if let Storage::Residues(data) = &mut self.storage {
            let p = self.field.p() as u64;
            for v in &mut data[i * self.cols..(i + 1) * self.cols] {
                *v = (*v as u64 * c.value() as u64 % p) as u32;
            }
        } else if c.is_zero() {
            for j in 0..self.cols {
                self.set(i, j, Element::ZERO);
            }
        }
    }

    /// `col[dst] += c * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: Element) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self
                .field
                .add(self.get(i, dst), self.field.mul(c, self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let (x, y) = (self.get(i, a), self.get(i, b));
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: Element) {
        for i in 0..self.rows {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// Reduced row-echelon form together with the row transform producing it.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut r = self.clone();
        let mut t = Matrix::identity(f, self.rows);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(src) = (row..self.rows).find(|&i| !r.get(i, col).is_zero()) else {
                continue;
            };
            r.swap_rows(row, src);
            t.swap_rows(row, src);
            let inv = f.inv(r.get(row, col)).expect("pivot is nonzero");
            r.scale_row(row, inv);
            t.scale_row(row, inv);
            for i in 0..self.rows {
                if i != row {
                    let c = f.neg(r.get(i, col));
                    r.add_row_multiple(i, row, c);
                    t.add_row_multiple(i, row, c);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            reduced: r,
            rank: row,
            pivots,
            transform: t,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon_only().1
    }

    /// RREF without tracking the transform.
    fn echelon_only(&self) -> (Matrix, usize, Vec<usize>) {
        let f = self.field;
        let mut r = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(src) = (row..self.rows).find(|&i| !r.get(i, col).is_zero()) else {
                continue;
            };
            r.swap_rows(row, src);
            let inv = f.inv(r.get(row, col)).expect("pivot is nonzero");
            r.scale_row(row, inv);
            for i in 0..self.rows {
                if i != row {
                    let c = f.neg(r.get(i, col));
                    r.add_row_multiple(i, row, c);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (r, row, pivots)
    }

    /// The nonzero rows of the RREF: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, rank, _) = self.echelon_only();
        r.select_rows(0..rank)
    }

    pub fn det(&self) -> Result<Element> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let f = self.field;
        let n = self.rows;
        let mut r = self.clone();
        let mut det = Element::ONE;
        for col in 0..n {
            let Some(src) = (col..n).find(|&i| !r.get(i, col).is_zero()) else {
                return Ok(Element::ZERO);
            };
            if src != col {
                r.swap_rows(col, src);
                det = f.neg(det);
            }
            let pivot = r.get(col, col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            for i in col + 1..n {
                let c = f.neg(f.mul(r.get(i, col), inv));
                r.add_row_multiple(i, col, c);
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rr = self.rref();
        if rr.rank < self.rows {
            return Err(Error::Singular);
        }
        Ok(rr.transform)
    }

    /// Basis (in RREF) of `{x : self * x^T = 0}`.
    pub fn right_kernel(&self) -> Matrix {
        let f = self.field;
        let (r, rank, pivots) = self.echelon_only();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            k.set(row, fc, Element::ONE);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                k.set(row, pc, f.neg(r.get(i, fc)));
            }
        }
        // vectors built this way are already independent; RREF fixes the order
        k.row_space_basis()
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> Matrix {
        let idx: Vec<usize> = idx.into_iter().collect();
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let cols = self.cols.max(other.cols);
        Ok(Matrix::from_fn(
            self.field,
            self.rows + other.rows,
            cols,
            |i, j| {
                if i < self.rows {
                    self.get(i, j)
                } else {
                    other.get(i - self.rows, j)
                }
            },
        ))
    }

    /// `diag[self, other]`.
    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        let (r, c) = (self.rows, self.cols);
        Ok(Matrix::from_fn(
            self.field,
            r + other.rows,
            c + other.cols,
            |i, j| {
                if i < r && j < c {
                    self.get(i, j)
                } else if i >= r && j >= c {
                    other.get(i - r, j - c)
                } else {
                    Element::ZERO
                }
            },
        ))
    }

    /// Column `perm[j]` of `self` becomes column `j` of the result.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, perm[j])
        })
    }

    /// Parses the shared text format: rows separated by `;` or newlines,
    /// entries as single digits when `p < 10`, otherwise comma-separated.
    pub fn parse(field: Field, text: &str) -> Result<Matrix> {
        let mut rows: Vec<Vec<Element>> = Vec::new();
        for raw in text.split([';', '\n']) {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<String> = if field.p() < 10 && !line.contains(',') {
                line.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_string())
                    .collect()
            } else {
                line.split(',').map(|s| s.trim().to_string()).collect()
            };
            let mut row = Vec::with_capacity(tokens.len());
            for tok in tokens {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid entry {tok:?}")))?;
                if v >= field.p() as u64 {
                    return Err(Error::Parse(format!(
                        "entry {v} is not a residue mod {}",
                        field.p()
                    )));
                }
                row.push(field.elem_unchecked(v as u32));
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse(format!(
                        "ragged rows: {} entries vs {}",
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        Ok(Matrix::from_element_rows(field, cols, &rows))
    }

    /// Inverse of [`Matrix::parse`], using `;` between rows.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let entries = self.row(i).into_iter().map(|e| e.to_string());
                if self.field.p() < 10 {
                    entries.collect::<String>()
                } else {
                    entries.collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        rows.join(";")
    }
}

impl Element {
    #[inline]
    pub(crate) fn from_bit(b: bool) -> Element {
        if b {
            Element::ONE
        } else {
            Element::ZERO
        }
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && match (&self.storage, &other.storage) {
                (Storage::Packed { data: a, .. }, Storage::Packed { data: b, .. }) => a == b,
                (Storage::Residues(a), Storage::Residues(b)) => a == b,
                _ => false,
            }
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.p().hash(state);
        self.rows.hash(state);
        self.cols.hash(state);
        match &self.storage {
            Storage::Packed { data, .. } => data.hash(state),
            Storage::Residues(data) => data.hash(state),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let entries: Vec<String> = self.row(i).into_iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", entries.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    fn m(p: u64, text: &str) -> Matrix {
        Matrix::parse(gf(p), text).unwrap()
    }

    fn j2(p: u64) -> Matrix {
        m(p, "01;10")
    }

    #[test]
    fn mul_examples() {
        let a = m(7, "35;21");
        assert_eq!(Matrix::identity(gf(7), 2).mul(&a).unwrap(), a);
        assert_eq!(m(2, "10;11").mul(&m(2, "11;10")).unwrap(), m(2, "11;01"));
        assert_eq!(m(3, "2").mul(&m(3, "2")).unwrap(), m(3, "1"));
    }

    #[test]
    fn mul_rejects_mismatch() {
        assert!(matches!(
            m(2, "10;11").mul(&m(2, "111")),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            m(2, "1").mul(&m(3, "1")),
            Err(Error::FieldMismatch(2, 3))
        ));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(
            Matrix::identity(gf(5), 3).gram(),
            Matrix::identity(gf(5), 3)
        );
        assert_eq!(m(2, "110;011").gram(), j2(2));
        assert_eq!(m(3, "111").gram(), m(3, "0"));
    }

    #[test]
    fn rref_examples() {
        let z = Matrix::zeros(gf(3), 2, 3).rref();
        assert_eq!(z.rank, 0);
        let r = m(2, "11;10").rref();
        assert_eq!((r.rank, r.pivots.clone()), (2, vec![0, 1]));
        assert_eq!(r.reduced, Matrix::identity(gf(2), 2));
        let r = m(5, "12;24").rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced.select_rows(0..1), m(5, "12"));
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(gf(2), 3).det(), Ok(Element::ONE));
        assert_eq!(j2(2).det(), Ok(Element::ONE));
        assert_eq!(m(3, "10;02").det().unwrap().value(), 2);
        assert!(matches!(m(3, "10").det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            Matrix::identity(gf(3), 4).inverse().unwrap(),
            Matrix::identity(gf(3), 4)
        );
        assert_eq!(j2(2).inverse().unwrap(), j2(2));
        assert_eq!(m(5, "2").inverse().unwrap(), m(5, "3"));
        assert_eq!(m(2, "11;11").inverse(), Err(Error::Singular));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(gf(2), 3).right_kernel().rows(), 0);
        assert_eq!(m(2, "11").right_kernel(), m(2, "11"));
        assert_eq!(m(3, "111").right_kernel(), m(3, "102;012"));
    }

    #[test]
    fn text_format_round_trip() {
        let a = m(2, "110;011");
        assert_eq!((a.rows(), a.cols()), (2, 3));
        assert_eq!(a.to_text(), "110;011");
        let b = Matrix::parse(gf(11), "1,10\n3,4").unwrap();
        assert_eq!(b.to_text(), "1,10;3,4");
        assert!(Matrix::parse(gf(2), "12").is_err());
        assert!(Matrix::parse(gf(2), "11;1").is_err());
        assert!(Matrix::parse(gf(3), "1x").is_err());
    }

    #[test]
    fn wide_binary_rows() {
        // crosses a word boundary
        let f = gf(2);
        let a = Matrix::from_fn(f, 3, 130, |i, j| Element::from_bit((i + j) % 3 == 0));
        let b = Matrix::from_fn(f, 130, 2, |i, j| Element::from_bit((i * j + i) % 5 == 1));
        let c = a.mul(&b).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                let s = (0..130)
                    .filter(|&t| a.get(i, t).value() * b.get(t, j).value() == 1)
                    .count();
                assert_eq!(c.get(i, j).value() as usize, s % 2);
            }
        }
        assert_eq!(a.rank() + a.right_kernel().rows(), 130);
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        (
            0usize..3,
            proptest::collection::vec(0i64..1000, rows * cols),
        )
            .prop_map(move |(pi, v)| {
                let f = gf([2, 3, 5][pi]);
                Matrix::from_fn(f, rows, cols, |i, j| f.elem(v[i * cols + j]))
            })
    }

    fn arb_pair(n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
        (0usize..3, proptest::collection::vec(0i64..1000, 2 * n * n)).prop_map(move |(pi, v)| {
            let f = gf([2, 3, 5][pi]);
            let a = Matrix::from_fn(f, n, n, |i, j| f.elem(v[i * n + j]));
            let b = Matrix::from_fn(f, n, n, |i, j| f.elem(v[n * n + i * n + j]));
            (a, b)
        })
    }

    proptest! {
        #[test]
        fn rref_transform_invariant(a in (1usize..7, 1usize..9).prop_flat_map(|(r, c)| arb_matrix(r, c))) {
            let rr = a.rref();
            prop_assert_eq!(rr.transform.mul(&a).unwrap(), rr.reduced.clone());
            prop_assert!(!rr.transform.det().unwrap().is_zero());
            prop_assert!(rr.pivots.windows(2).all(|w| w[0] < w[1]));
            // canonical: a row-mixed copy reduces to the same thing
            let mixed = rr.transform.mul(&a).unwrap();
            prop_assert_eq!(mixed.row_space_basis(), a.row_space_basis());
        }

        #[test]
        fn kernel_invariant(a in (1usize..7, 1usize..9).prop_flat_map(|(r, c)| arb_matrix(r, c))) {
            let k = a.right_kernel();
            prop_assert_eq!(a.rank() + k.rows(), a.cols());
            if k.rows() > 0 {
                prop_assert!(a.mul(&k.transpose()).unwrap().is_zero());
            }
        }

        #[test]
        fn det_multiplicative((a, b) in (1usize..6).prop_flat_map(arb_pair)) {
            let f = a.field();
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.det().unwrap(), f.mul(a.det().unwrap(), b.det().unwrap()));
            if !a.det().unwrap().is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(f, a.rows()));
            }
        }

        #[test]
        fn gram_symmetric(a in (0usize..6, 1usize..9).prop_flat_map(|(r, c)| arb_matrix(r, c))) {
            prop_assert!(a.gram().is_symmetric());
        }
    }
}
