//! Congruence normal forms of symmetric matrices and the basis constructions
//! built on them: orthonormal, symplectic and `diag[1, .., 1, δ]` bases of LCD
//! codes, LCD-preserving shortening, canonical orbit representatives,
//! transporters between codes of equal type, and stabilizer elements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{LcdType, LinearCode};
use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CongruenceShape {
    /// `diag[J2, .., J2, 0, .., 0]` (binary, zero diagonal).
    AlternatingJBlocks,
    /// `diag[1, .., 1, 0, .., 0]` (binary, some nonzero diagonal entry).
    IdentityBlock,
    /// `diag[1, .., 1, δ, 0, .., 0]` (odd characteristic).
    DiagOneDelta,
}

impl fmt::Display for CongruenceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CongruenceShape::AlternatingJBlocks => "AlternatingJBlocks",
            CongruenceShape::IdentityBlock => "IdentityBlock",
            CongruenceShape::DiagOneDelta => "DiagOneDelta",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceResult {
    /// Invertible `Q` with `Q M Q^T == normal`.
    pub q_transform: Matrix,
    pub normal: Matrix,
    pub rank: usize,
    pub shape: CongruenceShape,
    /// `1` or the canonical nonsquare; odd characteristic only.
    pub delta: Option<Element>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKind {
    Orthonormal,
    Symplectic,
    DiagOneDelta,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::Orthonormal => "Orthonormal",
            BasisKind::Symplectic => "Symplectic",
            BasisKind::DiagOneDelta => "DiagOneDelta",
        })
    }
}

/// A basis of an LCD code whose Gram matrix is in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcdBasis {
    pub rows: Matrix,
    pub kind: BasisKind,
    pub delta: Option<Element>,
}

impl LcdBasis {
    /// The Gram matrix `rows * rows^T` promised by `kind`.
    pub fn expected_gram(&self) -> Matrix {
        let f = self.rows.field();
        let k = self.rows.rows();
        match self.kind {
            BasisKind::Orthonormal => Matrix::identity(f, k),
            BasisKind::Symplectic => j_block_form(f, k / 2, k),
            BasisKind::DiagOneDelta => diag_one_delta(f, k, k, self.delta.unwrap_or(Element::ONE)),
        }
    }

    pub fn satisfies_gram_identity(&self) -> bool {
        self.rows.gram() == self.expected_gram()
    }
}

/// `diag[J2 × blocks, 0, ..]` of size `size`.
pub fn j_block_form(field: Field, blocks: usize, size: usize) -> Matrix {
    let mut m = Matrix::zeros(field, size, size);
    for b in 0..blocks {
        m.set(2 * b, 2 * b + 1, Element::ONE);
        m.set(2 * b + 1, 2 * b, Element::ONE);
    }
    m
}

/// `diag[1 × (rank - 1), δ, 0, ..]` of size `size`; `rank = 0` gives zero.
pub fn diag_one_delta(field: Field, rank: usize, size: usize, delta: Element) -> Matrix {
    let mut m = Matrix::zeros(field, size, size);
    for i in 0..rank {
        m.set(i, i, if i + 1 == rank { delta } else { Element::ONE });
    }
    m
}

fn identity_block(field: Field, rank: usize, size: usize) -> Matrix {
    diag_one_delta(field, rank, size, Element::ONE)
}

/// Tracks a working matrix `W = Q M Q^T` under simultaneous row/column moves.
struct Congruence {
    w: Matrix,
    q: Matrix,
}

impl Congruence {
    fn swap(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        self.w.swap_cols(a, b);
        self.q.swap_rows(a, b);
    }

    /// Replace basis vector `dst` by `dst + c * src`.
    fn add(&mut self, dst: usize, src: usize, c: Element) {
        self.w.add_row_multiple(dst, src, c);
        self.w.add_col_multiple(dst, src, c);
        self.q.add_row_multiple(dst, src, c);
    }

    fn scale(&mut self, i: usize, c: Element) {
        self.w.scale_row(i, c);
        self.w.scale_col(i, c);
        self.q.scale_row(i, c);
    }
}

/// Reduces a symmetric matrix to its congruence normal form.
pub fn congruence_normalize(m: &Matrix) -> Result<CongruenceResult> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.field().is_binary() {
        Ok(normalize_binary(m))
    } else {
        normalize_odd(m)
    }
}

fn normalize_binary(m: &Matrix) -> CongruenceResult {
    let f = m.field();
    let k = m.rows();
    let mut st = Congruence {
        w: m.clone(),
        q: Matrix::identity(f, k),
    };
    let one = Element::ONE;
    let (mut t, mut ones, mut blocks) = (0, 0, 0);
    while t < k {
        if let Some(i) = (t..k).find(|&i| !st.w.get(i, i).is_zero()) {
            st.swap(t, i);
            for r in t + 1..k {
                if !st.w.get(r, t).is_zero() {
                    st.add(r, t, one);
                }
            }
            t += 1;
            ones += 1;
            continue;
        }
        let pair = (t..k).find_map(|i| {
            (i + 1..k)
                .find(|&j| !st.w.get(i, j).is_zero())
                .map(|j| (i, j))
        });
        let Some((i, j)) = pair else { break };
        // i < j, so moving i into slot t leaves j where it is
        st.swap(t, i);
        st.swap(t + 1, j);
        for r in t + 2..k {
            if !st.w.get(r, t).is_zero() {
                st.add(r, t + 1, one);
            }
            if !st.w.get(r, t + 1).is_zero() {
                st.add(r, t, one);
            }
        }
        t += 2;
        blocks += 1;
    }
    let rank = ones + 2 * blocks;
    let mut q = st.q;
    let shape = if ones > 0 {
        // [1] ⊕ J2 is congruent to I3 via rows (1,1,0), (1,0,1), (1,1,1)
        let mut a = ones;
        for _ in 0..blocks {
            let (x, y, z) = (q.row(a - 1), q.row(a), q.row(a + 1));
            let sum = |u: &[Element], v: &[Element]| -> Vec<Element> {
                u.iter().zip(v).map(|(&s, &t)| f.add(s, t)).collect()
            };
            let r0 = sum(&x, &y);
            let r1 = sum(&x, &z);
            let r2 = sum(&r0, &z);
            for (row, vals) in [(a - 1, r0), (a, r1), (a + 1, r2)] {
                for (col, v) in vals.into_iter().enumerate() {
                    q.set(row, col, v);
                }
            }
            a += 2;
        }
        CongruenceShape::IdentityBlock
    } else {
        CongruenceShape::AlternatingJBlocks
    };
    let normal = q
        .mul(m)
        .and_then(|qm| qm.mul(&q.transpose()))
        .expect("square");
    let expected = match shape {
        CongruenceShape::IdentityBlock => identity_block(f, rank, k),
        _ => j_block_form(f, blocks, k),
    };
    assert_eq!(normal, expected, "binary congruence normalization failed");
    CongruenceResult {
        q_transform: q,
        normal,
        rank,
        shape,
        delta: None,
    }
}

fn normalize_odd(m: &Matrix) -> Result<CongruenceResult> {
    let f = m.field();
    let gamma = f.nonsquare()?;
    let k = m.rows();
    let mut st = Congruence {
        w: m.clone(),
        q: Matrix::identity(f, k),
    };
    let mut t = 0;
    while t < k {
        if (t..k).all(|i| st.w.get(i, i).is_zero()) {
            let pair = (t..k).find_map(|i| {
                (t..k)
                    .find(|&j| j != i && !st.w.get(i, j).is_zero())
                    .map(|j| (i, j))
            });
            let Some((i, j)) = pair else { break };
            // new diagonal entry is 2 W_ij, nonzero outside characteristic 2
            st.add(i, j, Element::ONE);
        }
        let i = (t..k)
            .find(|&i| !st.w.get(i, i).is_zero())
            .expect("pivot exists");
        st.swap(t, i);
        let inv = f.inv(st.w.get(t, t)).expect("nonzero pivot");
        for r in t + 1..k {
            let c = st.w.get(r, t);
            if !c.is_zero() {
                st.add(r, t, f.neg(f.mul(c, inv)));
            }
        }
        t += 1;
    }
    let rank = t;
    let gamma_inv = f.inv(gamma).expect("nonzero");
    let mut nonsquares = Vec::new();
    for i in 0..rank {
        let d = st.w.get(i, i);
        let root = match f.sqrt(d)? {
            Some(s) => s,
            None => {
                nonsquares.push(i);
                f.sqrt(f.mul(d, gamma_inv))?.expect("d / γ is a square")
            }
        };
        st.scale(i, f.inv(root).expect("nonzero"));
    }
    // γ ⊕ γ ≅ 1 ⊕ 1: with a² + b² = 1/γ, rows (a, b) and (-b, a) are orthonormal
    let mut q = st.q;
    let (a, b) = f.two_squares(gamma_inv)?;
    for pair in nonsquares.chunks(2) {
        if let [i, j] = *pair {
            let (ri, rj) = (q.row(i), q.row(j));
            for col in 0..k {
                let vi = f.add(f.mul(a, ri[col]), f.mul(b, rj[col]));
                let vj = f.add(f.mul(f.neg(b), ri[col]), f.mul(a, rj[col]));
                q.set(i, col, vi);
                q.set(j, col, vj);
            }
        }
    }
    let delta = if nonsquares.len() % 2 == 1 {
        let last = *nonsquares.last().expect("odd length");
        q.swap_rows(last, rank - 1);
        gamma
    } else {
        Element::ONE
    };
    let normal = q.mul(m)?.mul(&q.transpose())?;
    assert_eq!(
        normal,
        diag_one_delta(f, rank, k, delta),
        "odd congruence normalization failed"
    );
    Ok(CongruenceResult {
        q_transform: q,
        normal,
        rank,
        shape: CongruenceShape::DiagOneDelta,
        delta: Some(delta),
    })
}

/// A basis of `c` whose Gram matrix is in normal form.
pub fn lcd_basis(c: &LinearCode) -> Result<LcdBasis> {
    if c.k() == 0 {
        return Err(Error::InvalidArgument("the zero code has no basis".into()));
    }
    if !c.is_lcd() {
        return Err(Error::NotLcd);
    }
    let cr = congruence_normalize(&c.gram())?;
    let rows = cr.q_transform.mul(c.generator())?;
    let kind = match cr.shape {
        CongruenceShape::IdentityBlock => BasisKind::Orthonormal,
        CongruenceShape::AlternatingJBlocks => BasisKind::Symplectic,
        CongruenceShape::DiagOneDelta => BasisKind::DiagOneDelta,
    };
    Ok(LcdBasis {
        rows,
        kind,
        delta: cr.delta,
    })
}

fn require_coord(c: &LinearCode, coord: usize) -> Result<()> {
    if coord >= c.n() {
        Err(Error::CoordinateOutOfRange { coord, n: c.n() })
    } else {
        Ok(())
    }
}

/// Symplectic basis of a binary even-like LCD code in which each pair
/// `(c_i, c_i')` agrees at `coord`.
pub fn adjusted_symplectic_basis(c: &LinearCode, coord: usize) -> Result<LcdBasis> {
    c.field().require_binary()?;
    require_coord(c, coord)?;
    if !c.is_even_like()? {
        return Err(Error::InvalidArgument(
            "symplectic bases exist only for even-like codes".into(),
        ));
    }
    let mut basis = lcd_basis(c)?;
    debug_assert_eq!(basis.kind, BasisKind::Symplectic);
    let rows = &mut basis.rows;
    for pair in 0..rows.rows() / 2 {
        let (u, v) = (2 * pair, 2 * pair + 1);
        let (cu, cv) = (rows.get(u, coord), rows.get(v, coord));
        if cu == cv {
            continue;
        }
        // J2 is symmetric in the pair, so put the vector with a 1 first
        if cu.is_zero() {
            rows.swap_rows(u, v);
        }
        rows.add_row_multiple(v, u, Element::ONE);
    }
    Ok(basis)
}

/// An `[n, k-1]` binary LCD code whose minimum distance is at least that of `c`.
pub fn shorten_lcd(c: &LinearCode, coord: usize) -> Result<LinearCode> {
    let f = c.field();
    f.require_binary()?;
    require_coord(c, coord)?;
    if !c.is_lcd() {
        return Err(Error::NotLcd);
    }
    let k = c.k();
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "shortening needs k >= 2, got k = {k}"
        )));
    }
    let n = c.n();
    let unit = |row: &mut Vec<Element>| row[coord] = f.add(row[coord], Element::ONE);
    let add = |x: &[Element], y: &[Element]| -> Vec<Element> {
        x.iter().zip(y).map(|(&s, &t)| f.add(s, t)).collect()
    };

    if !c.is_even_like()? {
        // drop one vector of an orthonormal basis
        let basis = lcd_basis(c)?;
        return Ok(LinearCode::from_generator(
            &basis.rows.select_rows(0..k - 1),
        ));
    }

    let column_zero = (0..k).all(|i| c.generator().get(i, coord).is_zero());
    let new_rows: Vec<Vec<Element>> = if column_zero {
        let basis = lcd_basis(c)?;
        let mut rows: Vec<Vec<Element>> = (0..k).map(|i| basis.rows.row(i)).collect();
        // pairs (c_1, c_1'), .., (c_{k/2}, c_{k/2}'); replace c_{k/2} by c_{k/2} + e_coord
        let mut last = rows[k - 2].clone();
        unit(&mut last);
        rows.truncate(k - 2);
        rows.push(last);
        rows
    } else {
        let basis = adjusted_symplectic_basis(c, coord)?;
        let pairs: Vec<(Vec<Element>, Vec<Element>)> = (0..k / 2)
            .map(|i| (basis.rows.row(2 * i), basis.rows.row(2 * i + 1)))
            .collect();
        let (hot, cold): (Vec<_>, Vec<_>) =
            pairs.into_iter().partition(|(u, _)| !u[coord].is_zero());
        let (c1, c1p) = hot.first().cloned().expect("some pair is nonzero at coord");
        let mut first = add(&c1p, &c1);
        unit(&mut first);
        let mut rows = vec![first];
        for (u, v) in hot.iter().skip(1) {
            rows.push(add(u, &c1));
            rows.push(add(v, &c1));
        }
        for (u, v) in cold {
            rows.push(u);
            rows.push(v);
        }
        rows
    };
    let g = Matrix::from_element_rows(f, n, &new_rows);
    let out = LinearCode::from_generator(&g);
    debug_assert_eq!(out.k(), k - 1);
    Ok(out)
}

/// The canonical orbit representative of type `t` together with a parity-check matrix.
pub fn canonical_code(t: LcdType, n: usize, k: usize, field: Field) -> Result<(Matrix, Matrix)> {
    if k == 0 || k >= n {
        return Err(Error::DegenerateDimension { n, k });
    }
    if t.is_binary() != field.is_binary() {
        return Err(Error::InvalidArgument(format!(
            "type {t} does not apply to {field}"
        )));
    }
    let unavailable = |reason| Error::TypeUnavailable {
        ty: t.to_string(),
        n,
        k,
        reason,
    };
    let one = Element::ONE;
    let unit_rows = |from: usize, to: usize| -> Vec<Vec<Element>> {
        (from..to)
            .map(|i| {
                let mut r = vec![Element::ZERO; n];
                r[i] = one;
                r
            })
            .collect()
    };
    // rows 2j-1 = e_1 + .. + e_{2j-1} + e_{2j}, 2j = e_{2j} + e_{2j+1} (1-based), `count` rows
    let staircase = |count: usize| -> Vec<Vec<Element>> {
        (0..count)
            .map(|r| {
                let mut row = vec![Element::ZERO; n];
                if r % 2 == 0 {
                    for x in row.iter_mut().take(r + 2) {
                        *x = one;
                    }
                } else {
                    row[r] = one;
                    row[r + 1] = one;
                }
                row
            })
            .collect()
    };
    let (g, h) = match t {
        LcdType::OO | LcdType::Plus => (unit_rows(0, k), unit_rows(k, n)),
        LcdType::OE => {
            if (n - k) % 2 == 1 {
                return Err(unavailable(
                    "an odd-like code with even-like dual needs n - k even",
                ));
            }
            let mut first = vec![Element::ZERO; n];
            for x in first.iter_mut().take(n - k + 1) {
                *x = one;
            }
            let mut g = vec![first];
            g.extend(unit_rows(n - k + 1, n));
            (g, staircase(n - k))
        }
        LcdType::EO => {
            if k % 2 == 1 {
                return Err(unavailable("an even-like LCD code needs k even"));
            }
            let mut first = vec![Element::ZERO; n];
            for x in first.iter_mut().take(k + 1) {
                *x = one;
            }
            let mut h = vec![first];
            h.extend(unit_rows(k + 1, n));
            (staircase(k), h)
        }
        LcdType::Minus => {
            let gamma = field.nonsquare()?;
            let (a, b) = field.two_squares(gamma)?;
            let mut g = unit_rows(0, k - 1);
            let mut last = vec![Element::ZERO; n];
            last[k - 1] = a;
            last[k] = b;
            g.push(last);
            let mut h = unit_rows(k + 1, n);
            let mut tail = vec![Element::ZERO; n];
            tail[k - 1] = field.neg(b);
            tail[k] = a;
            h.push(tail);
            (g, h)
        }
    };
    Ok((
        Matrix::from_element_rows(field, n, &g),
        Matrix::from_element_rows(field, n, &h),
    ))
}

pub fn is_orthogonal(q: &Matrix) -> bool {
    q.is_square() && q.gram() == Matrix::identity(q.field(), q.rows())
}

/// Basis of `c` stacked on a basis of its dual, each in normal form.
fn orthogonal_frame(c: &LinearCode) -> Result<Matrix> {
    let top = lcd_basis(c)?;
    let bottom = lcd_basis(&c.dual())?;
    top.rows.vstack(&bottom.rows)
}

/// An orthogonal `Q` with `c1 Q = c2`, for LCD codes of the same type.
pub fn transporter(c1: &LinearCode, c2: &LinearCode) -> Result<Matrix> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch(c1.field().p(), c2.field().p()));
    }
    if c1.n() != c2.n() || c1.k() != c2.k() {
        return Err(Error::DimensionMismatch(format!(
            "[{}, {}] vs [{}, {}]",
            c1.n(),
            c1.k(),
            c2.n(),
            c2.k()
        )));
    }
    let (t1, t2) = (c1.classify()?, c2.classify()?);
    if t1 != t2 {
        return Err(Error::TypeMismatch(t1.to_string(), t2.to_string()));
    }
    let q1 = orthogonal_frame(c1)?;
    let q2 = orthogonal_frame(c2)?;
    debug_assert_eq!(q1.gram(), q2.gram());
    let q = q1.inverse()?.mul(&q2)?;
    debug_assert!(is_orthogonal(&q));
    Ok(q)
}

/// `[G; H]^{-1} diag[q1, q2] [G; H]` for the canonical generators `G` of `c`
/// and `H` of its dual.
pub fn stabilizer_element(c: &LinearCode, q1: &Matrix, q2: &Matrix) -> Result<Matrix> {
    if !c.is_lcd() {
        return Err(Error::NotLcd);
    }
    let (n, k) = (c.n(), c.k());
    if !(q1.is_square() && q1.rows() == k && q2.is_square() && q2.rows() == n - k) {
        return Err(Error::DimensionMismatch(format!(
            "need {k}x{k} and {m}x{m} blocks, got {}x{} and {}x{}",
            q1.rows(),
            q1.cols(),
            q2.rows(),
            q2.cols(),
            m = n - k
        )));
    }
    let dual = c.dual();
    let (g, h) = (c.generator(), dual.generator());
    let preserves = |q: &Matrix, form: &Matrix| -> Result<bool> {
        Ok(q.rows() == 0 || q.mul(form)?.mul(&q.transpose())? == *form)
    };
    if !preserves(q1, &g.gram())? {
        return Err(Error::FormNotPreserved("code"));
    }
    if !preserves(q2, &h.gram())? {
        return Err(Error::FormNotPreserved("dual code"));
    }
    let frame = g.vstack(h)?;
    let q = frame.inverse()?.mul(&q1.block_diag(q2)?)?.mul(&frame)?;
    Ok(q)
}

pub fn in_stabilizer(c: &LinearCode, q: &Matrix) -> Result<bool> {
    if q.field() != c.field() {
        return Err(Error::FieldMismatch(c.field().p(), q.field().p()));
    }
    if !q.is_square() || q.rows() != c.n() {
        return Err(Error::DimensionMismatch(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            q.rows(),
            q.cols(),
            n = c.n()
        )));
    }
    Ok(is_orthogonal(q) && c.transform(q)? == *c)
}
