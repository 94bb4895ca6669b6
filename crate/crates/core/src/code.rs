//! Linear codes stored by their canonical generator matrix.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::matrix::Matrix;

/// Default cap on the number of messages `min_distance` will enumerate.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 24;

/// Type of an LCD code: parity of the code and its dual over GF(2), or the
/// square class of the Gram determinant in odd characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LcdType {
    /// Odd-like code, odd-like dual.
    OO,
    /// Odd-like code, even-like dual.
    OE,
    /// Even-like code, odd-like dual.
    EO,
    /// Gram determinant is a nonzero square.
    Plus,
    /// Gram determinant is a nonsquare.
    Minus,
}

impl LcdType {
    pub const BINARY: [LcdType; 3] = [LcdType::OO, LcdType::OE, LcdType::EO];
    pub const ODD: [LcdType; 2] = [LcdType::Plus, LcdType::Minus];

    pub fn is_binary(self) -> bool {
        matches!(self, LcdType::OO | LcdType::OE | LcdType::EO)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LcdType::OO => "OO",
            LcdType::OE => "OE",
            LcdType::EO => "EO",
            LcdType::Plus => "Plus",
            LcdType::Minus => "Minus",
        }
    }
}

impl fmt::Display for LcdType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LcdType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "oo" => Ok(LcdType::OO),
            "oe" => Ok(LcdType::OE),
            "eo" => Ok(LcdType::EO),
            "plus" | "+" => Ok(LcdType::Plus),
            "minus" | "-" => Ok(LcdType::Minus),
            _ => Err(Error::Parse(format!(
                "unknown LCD type {s:?} (expected OO, OE, EO, Plus, Minus)"
            ))),
        }
    }
}

/// An `[n, k]` linear code; `gen` is always the reduced row-echelon basis,
/// so two codes are equal exactly when their generators are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode {
    gen: Matrix,
    n: usize,
}

impl LinearCode {
    /// The row space of `generator`; dependent rows are dropped.
    pub fn from_generator(generator: &Matrix) -> Self {
        LinearCode {
            gen: generator.row_space_basis(),
            n: generator.cols(),
        }
    }

    /// Wraps a matrix the caller guarantees is already in canonical form.
    pub(crate) fn from_canonical(gen: Matrix) -> Self {
        debug_assert_eq!(gen.row_space_basis(), gen);
        let n = gen.cols();
        LinearCode { gen, n }
    }

    pub fn parse(field: Field, text: &str) -> Result<Self> {
        Ok(Self::from_generator(&Matrix::parse(field, text)?))
    }

    pub fn zero(field: Field, n: usize) -> Self {
        LinearCode {
            gen: Matrix::zeros(field, 0, n),
            n,
        }
    }

    pub fn full(field: Field, n: usize) -> Self {
        LinearCode::from_canonical(Matrix::identity(field, n))
    }

    pub fn field(&self) -> Field {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn gram(&self) -> Matrix {
        self.gen.gram()
    }

    pub fn dual(&self) -> LinearCode {
        let h = if self.k() == 0 {
            Matrix::identity(self.field(), self.n)
        } else {
            self.gen.right_kernel()
        };
        LinearCode { gen: h, n: self.n }
    }

    /// `det(G G^T) != 0`. The zero and full codes count as LCD.
    pub fn is_lcd(&self) -> bool {
        self.k() == 0 || !self.gram().det().expect("gram is square").is_zero()
    }

    /// Dimension of `C ∩ C^⊥`; zero exactly for LCD codes.
    pub fn hull_dimension(&self) -> usize {
        self.k() - self.gram().rank()
    }

    pub fn contains(&self, word: &[Element]) -> bool {
        if self.k() == 0 {
            return word.iter().all(|e| e.is_zero());
        }
        let w = Matrix::from_element_rows(self.field(), self.n, &[word.to_vec()]);
        self.gen.vstack(&w).expect("same width").rank() == self.k()
    }

    /// Binary only: every codeword has even weight.
    pub fn is_even_like(&self) -> Result<bool> {
        self.field().require_binary()?;
        Ok((0..self.k()).all(|i| self.gen.row_weight(i).is_multiple_of(2)))
    }

    pub fn classify(&self) -> Result<LcdType> {
        let (n, k) = (self.n, self.k());
        if k == 0 || k == n {
            return Err(Error::DegenerateDimension { n, k });
        }
        if !self.is_lcd() {
            return Err(Error::NotLcd);
        }
        let f = self.field();
        if f.is_binary() {
            let code_even = self.is_even_like()?;
            let dual_even = self.dual().is_even_like()?;
            Ok(match (code_even, dual_even) {
                (false, false) => LcdType::OO,
                (false, true) => LcdType::OE,
                (true, false) => LcdType::EO,
                (true, true) => unreachable!("an LCD code and its dual cannot both be even-like"),
            })
        } else {
            let det = self.gram().det()?;
            Ok(if f.legendre(det)? == 1 {
                LcdType::Plus
            } else {
                LcdType::Minus
            })
        }
    }

    /// The code `{c Q : c in C}`.
    pub fn transform(&self, q: &Matrix) -> Result<LinearCode> {
        if q.rows() != self.n || q.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "transform must be {}x{}, got {}x{}",
                self.n,
                self.n,
                q.rows(),
                q.cols()
            )));
        }
        if self.k() == 0 {
            return Ok(self.clone());
        }
        Ok(LinearCode::from_generator(&self.gen.mul(q)?))
    }

    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        LinearCode::from_generator(&self.gen.permute_columns(perm))
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_budget(DEFAULT_DISTANCE_BUDGET)
    }

    /// Minimum weight over all nonzero codewords, by enumerating every message.
    pub fn min_distance_with_budget(&self, budget: u64) -> Result<usize> {
        let k = self.k();
        if k == 0 {
            return Err(Error::InvalidArgument(
                "minimum distance of the zero code is undefined".into(),
            ));
        }
        let p = self.field().p() as u64;
        let total = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if total > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: format!("{p}^{k}"),
                budget,
            });
        }
        let total = total as u64;
        if self.field().is_binary() {
            Ok(self.min_distance_binary())
        } else {
            Ok(self.min_distance_prime(total))
        }
    }

    fn min_distance_binary(&self) -> usize {
        let k = self.k();
        let words = self.n.div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|i| {
                let mut r = vec![0u64; words];
                for j in 0..self.n {
                    if !self.gen.get(i, j).is_zero() {
                        r[j / 64] |= 1 << (j % 64);
                    }
                }
                r
            })
            .collect();
        let weight = |msg: u64| {
            let mut word = vec![0u64; words];
            for (i, r) in rows.iter().enumerate() {
                if msg >> i & 1 == 1 {
                    for (w, x) in word.iter_mut().zip(r) {
                        *w ^= x;
                    }
                }
            }
            word.iter().map(|w| w.count_ones() as usize).sum::<usize>()
        };
        let total = 1u64 << k;
        if k <= 12 {
            (1..total).map(weight).min().expect("k >= 1")
        } else {
            (1..total)
                .into_par_iter()
                .map(weight)
                .min()
                .expect("k >= 1")
        }
    }

    fn min_distance_prime(&self, total: u64) -> usize {
        let f = self.field();
        let p = f.p() as u64;
        let (k, n) = (self.k(), self.n);
        let weight = |mut msg: u64| {
            let mut word = vec![0u64; n];
            for i in 0..k {
                let c = msg % p;
                msg /= p;
                if c != 0 {
                    for (j, w) in word.iter_mut().enumerate() {
                        *w = (*w + c * self.gen.get(i, j).value() as u64) % p;
                    }
                }
            }
            word.iter().filter(|&&v| v != 0).count()
        };
        if total < 1 << 12 {
            (1..total).map(weight).min().unwrap_or(0)
        } else {
            (1..total).into_par_iter().map(weight).min().unwrap_or(0)
        }
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] code over {}: {}",
            self.n,
            self.k(),
            self.field(),
            self.gen.to_text()
        )
    }
}
