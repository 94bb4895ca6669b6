//! Exhaustive ground truth: every `[n, k]` code over a small prime field,
//! brute-force group orders, and the permutation mass formula.

use std::collections::{HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{LcdType, LinearCode};
use crate::counting;
use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::matrix::Matrix;

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 25;
pub const DEFAULT_GROUP_BUDGET: u64 = 1 << 30;
/// Version tag written into serialized census reports.
pub const CENSUS_VERSION: u32 = 1;
/// Largest length accepted by [`mass_formula_check`].
pub const MASS_FORMULA_MAX_N: usize = 6;

/// All `k`-subsets of `0..n` in lexicographic order.
fn pivot_patterns(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Codes whose RREF generator has the given pivot columns.
fn codes_with_pivots(f: Field, n: usize, pivots: Vec<usize>) -> impl Iterator<Item = LinearCode> {
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(i, &pc)| {
            (pc + 1..n)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (i, c))
        })
        .collect();
    let p = f.p() as u64;
    let count = p.pow(free.len() as u32);
    (0..count).map(move |mut idx| {
        let mut rows = vec![vec![Element::ZERO; n]; pivots.len()];
        for (i, &pc) in pivots.iter().enumerate() {
            rows[i][pc] = Element::ONE;
        }
        // last free entry varies fastest
        for &(i, c) in free.iter().rev() {
            rows[i][c] = f.elem_unchecked((idx % p) as u32);
            idx /= p;
        }
        LinearCode::from_canonical(Matrix::from_element_rows(f, n, &rows))
    })
}

fn check_enumeration_budget(n: usize, k: usize, f: Field, budget: u64) -> Result<()> {
    let total = counting::gaussian_binomial(n as u64, k as u64, f.p() as u64)?;
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: total.to_string(),
            budget,
        });
    }
    Ok(())
}

/// Every `k`-dimensional subspace of GF(p)^n exactly once, in lexicographic
/// pivot order, then by free entries.
pub fn enumerate_codes(n: usize, k: usize, f: Field) -> Result<impl Iterator<Item = LinearCode>> {
    enumerate_codes_with_budget(n, k, f, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_codes_with_budget(
    n: usize,
    k: usize,
    f: Field,
    budget: u64,
) -> Result<impl Iterator<Item = LinearCode>> {
    if k > n {
        return Err(Error::DegenerateDimension { n, k });
    }
    check_enumeration_budget(n, k, f, budget)?;
    Ok(pivot_patterns(n, k)
        .into_iter()
        .flat_map(move |piv| codes_with_pivots(f, n, piv)))
}

/// Serde helpers writing big integers as decimal strings.
mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| serde::de::Error::custom(format!("not a decimal integer: {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeCount {
    #[serde(rename = "type")]
    pub ty: LcdType,
    #[serde(with = "decimal")]
    pub count: BigUint,
    pub formula_match: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub k: usize,
    #[serde(with = "decimal")]
    pub total: BigUint,
    pub total_match: bool,
    #[serde(with = "decimal")]
    pub lcd: BigUint,
    pub lcd_match: bool,
    pub types: Vec<TypeCount>,
    /// Largest minimum distance among LCD codes of this dimension.
    pub d_lcd: Option<usize>,
    /// First enumerated LCD code attaining `d_lcd`, in matrix text format.
    pub witness: Option<String>,
}

impl CensusRow {
    pub fn count(&self, t: LcdType) -> Option<&BigUint> {
        self.types.iter().find(|c| c.ty == t).map(|c| &c.count)
    }

    pub fn formula_match(&self) -> bool {
        self.total_match && self.lcd_match && self.types.iter().all(|t| t.formula_match)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub version: u32,
    pub p: u32,
    pub n: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn row(&self, k: usize) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    pub fn formula_match(&self) -> bool {
        self.rows.iter().all(CensusRow::formula_match)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    fn type_order(&self) -> &'static [LcdType] {
        if self.p == 2 {
            &LcdType::BINARY
        } else {
            &LcdType::ODD
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "p".to_string(),
            "n".into(),
            "k".into(),
            "total".into(),
            "lcd".into(),
        ];
        header.extend(
            self.type_order()
                .iter()
                .map(|t| t.as_str().to_ascii_lowercase()),
        );
        header.extend(["d_lcd".to_string(), "formula_match".into()]);
        w.write_record(&header).expect("in-memory write");
        for row in &self.rows {
            let mut rec = vec![
                self.p.to_string(),
                self.n.to_string(),
                row.k.to_string(),
                row.total.to_string(),
                row.lcd.to_string(),
            ];
            for &t in self.type_order() {
                rec.push(row.count(t).map(ToString::to_string).unwrap_or_default());
            }
            rec.push(row.d_lcd.map(|d| d.to_string()).unwrap_or_default());
            rec.push(row.formula_match().to_string());
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Per-pattern tallies, merged in enumeration order.
#[derive(Clone, Default)]
struct Tally {
    total: u64,
    lcd: u64,
    types: [u64; 5],
    best: Option<(usize, LinearCode)>,
}

fn type_index(t: LcdType) -> usize {
    match t {
        LcdType::OO => 0,
        LcdType::OE => 1,
        LcdType::EO => 2,
        LcdType::Plus => 3,
        LcdType::Minus => 4,
    }
}

impl Tally {
    fn add(mut self, c: LinearCode) -> Self {
        self.total += 1;
        if !c.is_lcd() {
            return self;
        }
        self.lcd += 1;
        let t = c.classify().expect("LCD with 0 < k < n");
        self.types[type_index(t)] += 1;
        let d = c
            .min_distance()
            .expect("census sizes are within the distance budget");
        if self.best.as_ref().is_none_or(|(bd, _)| d > *bd) {
            self.best = Some((d, c));
        }
        self
    }

    fn merge(mut self, other: Tally) -> Self {
        self.total += other.total;
        self.lcd += other.lcd;
        for (a, b) in self.types.iter_mut().zip(other.types) {
            *a += b;
        }
        // ties keep the earlier code
        if let Some((d, c)) = other.best {
            if self.best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                self.best = Some((d, c));
            }
        }
        self
    }
}

fn census_row(n: usize, k: usize, f: Field, budget: u64) -> Result<CensusRow> {
    check_enumeration_budget(n, k, f, budget)?;
    let tally = pivot_patterns(n, k)
        .into_par_iter()
        .map(|piv| codes_with_pivots(f, n, piv).fold(Tally::default(), Tally::add))
        .reduce(Tally::default, Tally::merge);
    let (nn, kk) = (n as u64, k as u64);
    let total = BigUint::from(tally.total);
    let lcd = BigUint::from(tally.lcd);
    let types_for = if f.is_binary() {
        &LcdType::BINARY[..]
    } else {
        &LcdType::ODD[..]
    };
    let types = types_for
        .iter()
        .map(|&t| {
            let count = BigUint::from(tally.types[type_index(t)]);
            let expected = counting::count_lcd(f, nn, kk, Some(t))?;
            Ok(TypeCount {
                ty: t,
                formula_match: count == expected,
                count,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusRow {
        k,
        total_match: total == counting::gaussian_binomial(nn, kk, f.p() as u64)?,
        total,
        lcd_match: lcd == counting::count_lcd(f, nn, kk, None)?,
        lcd,
        types,
        d_lcd: tally.best.as_ref().map(|(d, _)| *d),
        witness: tally.best.map(|(_, c)| c.generator().to_text()),
    })
}

/// Classifies every `[n, k]` code for `0 < k < n` and compares with the closed formulas.
pub fn census(n: usize, f: Field) -> Result<CensusReport> {
    census_with_budget(n, f, DEFAULT_ENUMERATION_BUDGET)
}

pub fn census_with_budget(n: usize, f: Field, budget: u64) -> Result<CensusReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "census needs n >= 2, got {n}"
        )));
    }
    // fail fast before any enumeration
    for k in 1..n {
        check_enumeration_budget(n, k, f, budget)?;
    }
    let rows = (1..n)
        .map(|k| census_row(n, k, f, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport {
        version: CENSUS_VERSION,
        p: f.p(),
        n,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DlcdEntry {
    pub n: usize,
    pub k: usize,
    pub d_lcd: Option<usize>,
    pub witness: Option<String>,
    /// `d_lcd(n, k) <= d_lcd(n, k - 1)`; vacuous for `k = 1`.
    pub monotone: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DlcdTable {
    pub version: u32,
    pub p: u32,
    pub entries: Vec<DlcdEntry>,
}

impl DlcdTable {
    pub fn get(&self, n: usize, k: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.n == n && e.k == k)
            .and_then(|e| e.d_lcd)
    }

    pub fn monotone(&self) -> bool {
        self.entries.iter().all(|e| e.monotone)
    }
}

pub fn dlcd_table(n_max: usize, f: Field) -> Result<DlcdTable> {
    dlcd_table_from(2..=n_max, f, DEFAULT_ENUMERATION_BUDGET)
}

pub fn dlcd_table_with_budget(n_max: usize, f: Field, budget: u64) -> Result<DlcdTable> {
    dlcd_table_from(2..=n_max, f, budget)
}

fn dlcd_table_from(
    lengths: impl Iterator<Item = usize>,
    f: Field,
    budget: u64,
) -> Result<DlcdTable> {
    let mut entries = Vec::new();
    for n in lengths {
        let report = census_with_budget(n, f, budget)?;
        entries.extend(dlcd_entries(&report));
    }
    Ok(DlcdTable {
        version: CENSUS_VERSION,
        p: f.p(),
        entries,
    })
}

/// The d_LCD rows of a census, with monotonicity flags.
pub fn dlcd_entries(report: &CensusReport) -> Vec<DlcdEntry> {
    let mut prev: Option<usize> = None;
    report
        .rows
        .iter()
        .map(|row| {
            let monotone = match (row.k, prev, row.d_lcd) {
                (1, _, _) => true,
                (_, Some(a), Some(b)) => b <= a,
                (_, _, None) => true,
                (_, None, Some(_)) => false,
            };
            prev = row.d_lcd;
            DlcdEntry {
                n: report.n,
                k: row.k,
                d_lcd: row.d_lcd,
                witness: row.witness.clone(),
                monotone,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    OrthogonalGF2,
    SymplecticGF2,
    /// Isometries of `diag[1, .., 1, δ]` with `η(δ)` equal to the given class.
    OrthogonalQ(i8),
}

fn group_form(kind: GroupKind, size: usize, f: Field) -> Result<Matrix> {
    match kind {
        GroupKind::OrthogonalGF2 => {
            f.require_binary()?;
            Ok(Matrix::identity(f, size))
        }
        GroupKind::SymplecticGF2 => {
            f.require_binary()?;
            if size % 2 == 1 {
                return Err(Error::InvalidArgument(format!(
                    "symplectic form needs even size, got {size}"
                )));
            }
            let mut m = Matrix::zeros(f, size, size);
            for b in 0..size / 2 {
                m.set(2 * b, 2 * b + 1, Element::ONE);
                m.set(2 * b + 1, 2 * b, Element::ONE);
            }
            Ok(m)
        }
        GroupKind::OrthogonalQ(class) => {
            let delta = match class {
                1 => Element::ONE,
                -1 => f.nonsquare()?,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "delta class must be +1 or -1, got {class}"
                    )))
                }
            };
            let mut m = Matrix::identity(f, size);
            m.set(size - 1, size - 1, delta);
            Ok(m)
        }
    }
}

/// Counts `Q` with `Q B Q^T = B` for the form `B` of `kind`, choosing rows one at
/// a time and pruning on the pairings fixed so far.
pub fn brute_force_group_order(kind: GroupKind, size: usize, f: Field) -> Result<BigUint> {
    brute_force_group_order_with_budget(kind, size, f, DEFAULT_GROUP_BUDGET)
}

pub fn brute_force_group_order_with_budget(
    kind: GroupKind,
    size: usize,
    f: Field,
    budget: u64,
) -> Result<BigUint> {
    if size == 0 {
        return Err(Error::InvalidArgument("group order needs size >= 1".into()));
    }
    let p = f.p() as u64;
    let needed = (p as u128).checked_pow((size * size) as u32);
    if needed.is_none_or(|v| v > budget as u128) {
        return Err(Error::BudgetExceeded {
            needed: format!("{p}^{}", size * size),
            budget,
        });
    }
    let form = group_form(kind, size, f)?;
    let vcount = p.pow(size as u32) as usize;
    let vectors: Vec<Vec<Element>> = (0..vcount)
        .map(|mut idx| {
            (0..size)
                .map(|_| {
                    let e = f.elem_unchecked((idx as u64 % p) as u32);
                    idx /= p as usize;
                    e
                })
                .collect()
        })
        .collect();
    // pairing[u][v] = u B v^T
    let bv: Vec<Vec<Element>> = vectors
        .iter()
        .map(|v| {
            (0..size)
                .map(|j| {
                    (0..size).fold(Element::ZERO, |acc, i| {
                        f.add(acc, f.mul(v[i], form.get(i, j)))
                    })
                })
                .collect()
        })
        .collect();
    let pairing: Vec<Vec<Element>> = bv
        .iter()
        .map(|ub| {
            vectors
                .iter()
                .map(|v| {
                    ub.iter()
                        .zip(v)
                        .fold(Element::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
                })
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(size);
    Ok(BigUint::from(count_rows(&pairing, &form, &mut chosen)))
}

fn count_rows(pairing: &[Vec<Element>], form: &Matrix, chosen: &mut Vec<usize>) -> u64 {
    let i = chosen.len();
    if i == form.rows() {
        return 1;
    }
    let mut total = 0;
    for v in 0..pairing.len() {
        if pairing[v][v] != form.get(i, i) {
            continue;
        }
        if chosen
            .iter()
            .enumerate()
            .all(|(j, &u)| pairing[u][v] == form.get(j, i))
        {
            chosen.push(v);
            total += count_rows(pairing, form, chosen);
            chosen.pop();
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassFormulaReport {
    pub n: usize,
    pub k: usize,
    /// Permutation-equivalence classes of `LCD_oo[n, k]`.
    pub class_count: usize,
    /// `Σ 1/|Aut(C)|` over class representatives.
    pub sum_inverse_aut: BigRational,
    /// `|O_n| / (|O_k| |O_{n-k}| n!)`.
    pub rhs: BigRational,
    pub matches: bool,
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len())
        .rev()
        .find(|&j| a[j] > a[i - 1])
        .expect("exists");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn automorphism_count(c: &LinearCode) -> u64 {
    let mut perm: Vec<usize> = (0..c.n()).collect();
    let mut count = 0;
    loop {
        if c.permute(&perm) == *c {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

/// Splits the binary `LCD_oo[n, k]` codes into permutation classes and compares
/// `Σ 1/|Aut(C)|` with the group-order ratio.
pub fn mass_formula_check(n: usize, k: usize) -> Result<MassFormulaReport> {
    if k == 0 || k >= n {
        return Err(Error::DegenerateDimension { n, k });
    }
    if n > MASS_FORMULA_MAX_N {
        return Err(Error::BudgetExceeded {
            needed: format!("{n}! permutations per code"),
            budget: (1..=MASS_FORMULA_MAX_N as u64).product(),
        });
    }
    let f = Field::binary();
    let oo: Vec<LinearCode> = enumerate_codes(n, k, f)?
        .filter(|c| c.is_lcd() && c.classify() == Ok(LcdType::OO))
        .collect();
    let mut seen: HashSet<LinearCode> = HashSet::new();
    let mut reps = Vec::new();
    for c in &oo {
        if seen.contains(c) {
            continue;
        }
        let mut orbit = 0usize;
        let mut queue = VecDeque::from([c.clone()]);
        seen.insert(c.clone());
        while let Some(cur) = queue.pop_front() {
            orbit += 1;
            for i in 0..n - 1 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, i + 1);
                let next = cur.permute(&perm);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        reps.push((c.clone(), orbit));
    }
    let factorial: u64 = (1..=n as u64).product();
    let auts: Vec<u64> = reps
        .par_iter()
        .map(|(c, _)| automorphism_count(c))
        .collect();
    for ((_, orbit), aut) in reps.iter().zip(&auts) {
        assert_eq!(*orbit as u64 * aut, factorial, "orbit-stabilizer violated");
    }
    let sum_inverse_aut = auts.iter().fold(BigRational::zero(), |acc, &a| {
        acc + BigRational::new(BigInt::one(), BigInt::from(a))
    });
    let (nn, kk) = (n as u64, k as u64);
    let denom = counting::order_orthogonal_gf2(kk)?
        * counting::order_orthogonal_gf2(nn - kk)?
        * BigUint::from(factorial);
    let rhs = BigRational::new(
        BigInt::from(counting::order_orthogonal_gf2(nn)?),
        BigInt::from(denom),
    );
    Ok(MassFormulaReport {
        n,
        k,
        class_count: reps.len(),
        matches: sum_inverse_aut == rhs,
        sum_inverse_aut,
        rhs,
    })
}

/// Reads a budget override such as `33554432` or `2^25`.
pub fn parse_budget(text: &str) -> Result<u64> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid budget {t:?}"));
    if let Some((b, e)) = t.split_once('^') {
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        let e: u32 = e.trim().parse().map_err(|_| bad())?;
        return b.checked_pow(e).ok_or_else(bad);
    }
    t.parse().map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn enumerate_examples() {
        let lines: Vec<String> = enumerate_codes(2, 1, gf(2))
            .unwrap()
            .map(|c| c.generator().to_text())
            .collect();
        assert_eq!(lines, ["10", "11", "01"]);
        assert_eq!(enumerate_codes(4, 4, gf(3)).unwrap().count(), 1);
        assert_eq!(enumerate_codes(4, 0, gf(3)).unwrap().count(), 1);
        let all: HashSet<LinearCode> = enumerate_codes(4, 2, gf(2)).unwrap().collect();
        assert_eq!(all.len(), 35);
        assert!(matches!(
            enumerate_codes_with_budget(8, 4, gf(2), 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        for (p, n) in [(2u64, 6usize), (3, 4), (5, 3)] {
            for k in 0..=n {
                let codes: Vec<LinearCode> = enumerate_codes(n, k, gf(p)).unwrap().collect();
                let distinct: HashSet<&LinearCode> = codes.iter().collect();
                let expected = counting::gaussian_binomial(n as u64, k as u64, p).unwrap();
                assert_eq!(big(codes.len() as u64), expected);
                assert_eq!(distinct.len(), codes.len());
                assert!(codes.iter().all(|c| c.k() == k));
            }
        }
    }

    #[test]
    fn census_examples() {
        let r = census(3, gf(2)).unwrap();
        let k1 = r.row(1).unwrap();
        assert_eq!(k1.lcd, big(4));
        assert_eq!(k1.count(LcdType::OO), Some(&big(3)));
        assert_eq!(k1.count(LcdType::OE), Some(&big(1)));
        assert_eq!(k1.count(LcdType::EO), Some(&big(0)));
        assert_eq!(k1.d_lcd, Some(3));
        assert_eq!(k1.witness.as_deref(), Some("111"));
        let k2 = r.row(2).unwrap();
        assert_eq!(k2.lcd, big(4));
        assert_eq!(k2.count(LcdType::EO), Some(&big(1)));
        assert_eq!(k2.d_lcd, Some(2));
        assert!(r.formula_match());

        let r = census(3, gf(3)).unwrap();
        let k1 = r.row(1).unwrap();
        assert_eq!(
            (
                k1.lcd.clone(),
                k1.count(LcdType::Plus),
                k1.count(LcdType::Minus)
            ),
            (big(9), Some(&big(3)), Some(&big(6)))
        );

        let r = census(2, gf(2)).unwrap();
        assert_eq!(r.row(1).unwrap().lcd, big(2));
    }

    #[test]
    fn census_serialization() {
        let r = census(4, gf(2)).unwrap();
        let json = r.to_json();
        assert_eq!(CensusReport::from_json(&json).unwrap(), r);
        assert!(json.contains("\"version\": 1"));
        assert!(json.contains("\"lcd\": \"20\""));
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("p,n,k,total,lcd,oo,oe,eo,d_lcd,formula_match")
        );
        assert_eq!(lines.next(), Some("2,4,1,15,8,8,0,0,3,true"));
        let odd = census(3, gf(5)).unwrap().to_csv();
        assert!(odd.starts_with("p,n,k,total,lcd,plus,minus,d_lcd,formula_match\n"));
    }

    #[test]
    fn dlcd_examples() {
        let t = dlcd_table(5, gf(2)).unwrap();
        assert_eq!(t.get(3, 1), Some(3));
        assert_eq!(t.get(4, 1), Some(3));
        assert!(t.monotone());
    }

    #[test]
    fn group_order_examples() {
        assert_eq!(
            brute_force_group_order(GroupKind::OrthogonalGF2, 3, gf(2)),
            Ok(big(6))
        );
        assert_eq!(
            brute_force_group_order(GroupKind::SymplecticGF2, 4, gf(2)),
            Ok(big(720))
        );
        assert_eq!(
            brute_force_group_order(GroupKind::OrthogonalQ(1), 2, gf(3)),
            Ok(big(8))
        );
        assert_eq!(
            brute_force_group_order(GroupKind::OrthogonalQ(-1), 2, gf(3)),
            counting::order_orthogonal_q(2, -1, 3)
        );
        assert!(matches!(
            brute_force_group_order_with_budget(GroupKind::OrthogonalGF2, 4, gf(2), 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(brute_force_group_order(GroupKind::SymplecticGF2, 3, gf(2)).is_err());
    }

    #[test]
    fn mass_formula_examples() {
        let r = mass_formula_check(3, 1).unwrap();
        assert_eq!(
            r.sum_inverse_aut,
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
        assert_eq!(r.class_count, 1);
        assert!(r.matches);
        let r = mass_formula_check(2, 1).unwrap();
        assert_eq!(r.sum_inverse_aut, BigRational::one());
        assert!(r.matches);
        assert!(mass_formula_check(4, 2).unwrap().matches);
        assert!(mass_formula_check(7, 2).is_err());
    }

    #[test]
    fn budget_parsing() {
        assert_eq!(parse_budget("2^25"), Ok(1 << 25));
        assert_eq!(parse_budget(" 1000 "), Ok(1000));
        assert!(parse_budget("lots").is_err());
    }
}
