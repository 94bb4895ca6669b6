//! Exact group orders, Gaussian binomials and LCD orbit sizes, plus the
//! limiting densities of LCD codes among all subspaces.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::code::LcdType;
use crate::error::{Error, Result};
use crate::field::Field;

/// Decimal digits used for limit constants unless the caller asks otherwise.
pub const DEFAULT_PRECISION_DIGITS: u32 = 12;

fn pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `∏_{i=from}^{to} (base^{step·i} - 1)`; empty products are 1.
fn prod_minus_one(base: u64, step: u64, from: u64, to: u64) -> BigUint {
    (from..=to).fold(BigUint::one(), |acc, i| acc * (pow(base, step * i) - 1u32))
}

/// Number of `k`-dimensional subspaces of GF(q)^n.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "gaussian binomial needs k <= n, got n = {n}, k = {k}"
        )));
    }
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "gaussian binomial needs q >= 2, got {q}"
        )));
    }
    let k = k.min(n - k);
    let num = (0..k).fold(BigUint::one(), |acc, i| acc * (pow(q, n - i) - 1u32));
    let den = prod_minus_one(q, 1, 1, k);
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "gaussian binomial is integral");
    Ok(quot)
}

/// `|O_k|` over GF(2).
pub fn order_orthogonal_gf2(k: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "orthogonal group order needs k >= 1".into(),
        ));
    }
    Ok(if k.is_multiple_of(2) {
        pow(2, k * k / 4) * prod_minus_one(2, 2, 1, k / 2 - 1)
    } else {
        pow(2, (k - 1) * (k - 1) / 4) * prod_minus_one(2, 2, 1, (k - 1) / 2)
    })
}

/// `|Sp_k|` over GF(2), `k` even.
pub fn order_symplectic_gf2(k: u64) -> Result<BigUint> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "symplectic group order needs even k >= 2, got {k}"
        )));
    }
    Ok(pow(2, k * k / 4) * prod_minus_one(2, 2, 1, k / 2))
}

fn odd_field(q: u64) -> Result<Field> {
    let f = Field::new(q)?;
    f.require_odd()?;
    Ok(f)
}

/// `η((-1)^m)`, evaluated on the residue.
fn eta_minus_one_pow(f: Field, m: u64) -> i64 {
    let x = if m.is_multiple_of(2) { 1 } else { -1 };
    f.legendre(f.elem(x)).expect("odd field") as i64
}

fn check_class(delta_class: i8) -> Result<i64> {
    match delta_class {
        1 | -1 => Ok(delta_class as i64),
        _ => Err(Error::InvalidArgument(format!(
            "delta class must be +1 or -1, got {delta_class}"
        ))),
    }
}

/// `|O_n^δ(q)|`, the isometry group of `diag[1, .., 1, δ]` where `η(δ) = delta_class`.
pub fn order_orthogonal_q(n: u64, delta_class: i8, q: u64) -> Result<BigUint> {
    let f = odd_field(q)?;
    let class = check_class(delta_class)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "orthogonal group order needs n >= 1".into(),
        ));
    }
    Ok(if n % 2 == 1 {
        BigUint::from(2u32) * pow(q, (n - 1) * (n - 1) / 4) * prod_minus_one(q, 2, 1, (n - 1) / 2)
    } else {
        let eta = eta_minus_one_pow(f, n / 2) * class;
        let middle = signed_add(pow(q, n / 2), -eta);
        BigUint::from(2u32) * pow(q, n * (n - 2) / 4) * middle * prod_minus_one(q, 2, 1, n / 2 - 1)
    })
}

fn signed_add(a: BigUint, b: i64) -> BigUint {
    let v = BigInt::from(a) + b;
    v.to_biguint().expect("nonnegative")
}

fn check_nk(n: u64, k: u64) -> Result<()> {
    if k == 0 || k >= n {
        Err(Error::DegenerateDimension {
            n: n as usize,
            k: k as usize,
        })
    } else {
        Ok(())
    }
}

/// Number of binary `[n, k]` LCD codes, optionally restricted to one type.
pub fn count_lcd_binary(n: u64, k: u64, filter: Option<LcdType>) -> Result<BigUint> {
    check_nk(n, k)?;
    let g4 = |a: u64, b: u64| gaussian_binomial(a, b, 4).expect("valid arguments");
    let (k_odd, n_odd) = (k % 2 == 1, n % 2 == 1);
    let Some(t) = filter else {
        return Ok(match (k_odd, n_odd) {
            (true, false) => pow(2, (n * k - k * k + n - 1) / 2) * g4(n / 2 - 1, (k - 1) / 2),
            (true, true) => pow(2, (n - k) * (k + 1) / 2) * g4((n - 1) / 2, (k - 1) / 2),
            (false, true) => pow(2, k * (n - k + 1) / 2) * g4((n - 1) / 2, k / 2),
            (false, false) => {
                pow(2, k * (n - k) / 2)
                    * (pow(2, n - k) * g4(n / 2 - 1, k / 2 - 1) + g4(n / 2 - 1, k / 2))
            }
        });
    };
    Ok(match t {
        LcdType::OO => match (k_odd, n_odd) {
            (true, false) => pow(2, (n * k - k * k + n - 1) / 2) * g4(n / 2 - 1, (k - 1) / 2),
            (true, true) => {
                pow(2, (n - k) * (k - 1) / 2)
                    * (pow(2, n - k) - 1u32)
                    * g4((n - 1) / 2, (k - 1) / 2)
            }
            (false, true) => {
                pow(2, k * (n - k - 1) / 2) * (pow(2, k) - 1u32) * g4((n - 1) / 2, k / 2)
            }
            (false, false) => pow(2, k * (n - k) / 2) * (pow(2, k) - 1u32) * g4(n / 2 - 1, k / 2),
        },
        LcdType::OE => match (k_odd, n_odd) {
            (true, true) => pow(2, (k - 1) * (n - k) / 2) * g4((n - 1) / 2, (k - 1) / 2),
            (false, false) => pow(2, k * (n - k) / 2) * g4(n / 2 - 1, k / 2 - 1),
            _ => BigUint::zero(),
        },
        LcdType::EO => match (k_odd, n_odd) {
            (false, true) => pow(2, k * (n - k - 1) / 2) * g4((n - 1) / 2, k / 2),
            (false, false) => pow(2, k * (n - k) / 2) * g4(n / 2 - 1, k / 2),
            _ => BigUint::zero(),
        },
        LcdType::Plus | LcdType::Minus => {
            return Err(Error::InvalidArgument(format!(
                "type {t} applies to odd characteristic only"
            )))
        }
    })
}

fn halve(v: BigUint) -> BigUint {
    let (h, r) = v.div_rem(&BigUint::from(2u32));
    assert!(r.is_zero(), "orbit size numerator must be even");
    h
}

/// Number of `[n, k]` LCD codes over GF(q), q an odd prime, optionally restricted
/// to `Plus` or `Minus`.
pub fn count_lcd_q(n: u64, k: u64, q: u64, filter: Option<LcdType>) -> Result<BigUint> {
    let f = odd_field(q)?;
    check_nk(n, k)?;
    let gq2 = |a: u64, b: u64| gaussian_binomial(a, b, q * q).expect("valid arguments");
    let eta = |m: u64| eta_minus_one_pow(f, m);
    let (k_odd, n_odd) = (k % 2 == 1, n % 2 == 1);
    let Some(t) = filter else {
        return Ok(match (k_odd, n_odd) {
            (true, false) => {
                pow(q, (k * (n - k) - 1) / 2)
                    * signed_add(pow(q, n / 2), -eta(n / 2))
                    * gq2(n / 2 - 1, (k - 1) / 2)
            }
            (true, true) => pow(q, (k + 1) * (n - k) / 2) * gq2((n - 1) / 2, (k - 1) / 2),
            (false, true) => pow(q, k * (n - k + 1) / 2) * gq2((n - 1) / 2, k / 2),
            (false, false) => pow(q, k * (n - k) / 2) * gq2(n / 2, k / 2),
        });
    };
    let s: i64 = match t {
        LcdType::Plus => 1,
        LcdType::Minus => -1,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "type {t} applies to GF(2) only"
            )))
        }
    };
    let numerator = match (k_odd, n_odd) {
        (true, false) => {
            pow(q, (k * (n - k) - 1) / 2)
                * signed_add(pow(q, n / 2), -eta(n / 2))
                * gq2(n / 2 - 1, (k - 1) / 2)
        }
        (true, true) => {
            pow(q, k * (n - k) / 2)
                * signed_add(pow(q, (n - k) / 2), s * eta((n - k) / 2))
                * gq2((n - 1) / 2, (k - 1) / 2)
        }
        (false, true) => {
            pow(q, k * (n - k) / 2)
                * signed_add(pow(q, k / 2), s * eta(k / 2))
                * gq2((n - 1) / 2, k / 2)
        }
        (false, false) => {
            let top = pow(q, k * (n - k) / 2)
                * signed_add(pow(q, k / 2), s * eta(k / 2))
                * signed_add(pow(q, (n - k) / 2), s * eta((n - k) / 2))
                * gq2(n / 2, k / 2);
            let bottom = signed_add(pow(q, n / 2), eta(n / 2));
            let (quot, rem) = top.div_rem(&bottom);
            assert!(rem.is_zero(), "orbit size quotient must be integral");
            quot
        }
    };
    Ok(halve(numerator))
}

/// Dispatches on the field: binary types for GF(2), `Plus`/`Minus` otherwise.
pub fn count_lcd(field: Field, n: u64, k: u64, filter: Option<LcdType>) -> Result<BigUint> {
    if field.is_binary() {
        count_lcd_binary(n, k, filter)
    } else {
        count_lcd_q(n, k, field.p() as u64, filter)
    }
}

/// `g_{q,m} = ∏_{i=1}^{m} (1 - q^{-i})` as an exact rational.
pub fn g_partial(q: u64, m: u64) -> BigRational {
    let q = BigInt::from(q);
    let mut acc = BigRational::one();
    let mut power = BigInt::one();
    for _ in 0..m {
        power *= &q;
        acc *= BigRational::new(&power - 1, power.clone());
    }
    acc
}

/// Rigorous enclosure of `1 / ∏_{i>=1} (1 + q^{-i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitBounds {
    pub q: u64,
    /// Number of factors in the truncated product.
    pub terms: u64,
    /// `∏_{i=1}^{terms} (1 + q^{-i})`.
    pub partial_product: BigRational,
    pub lower: BigRational,
    pub upper: BigRational,
}

impl LimitBounds {
    pub fn estimate(&self) -> f64 {
        to_f64(&((&self.lower + &self.upper) / BigInt::from(2)))
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// With `x = 1/q` and `t = x^{m+1} / (1 - x)`, the tail `∏_{i>m} (1 + x^i)` lies in
/// `[1, e^t] ⊂ [1, 1/(1 - t)]`, so the constant lies in `[(1 - t)/P_m, 1/P_m]`.
/// `m` is the least value with `t <= 10^{-digits}`.
pub fn limit_constant(q: u64, digits: u32) -> Result<LimitBounds> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "limit constant needs q >= 2, got {q}"
        )));
    }
    let qb = BigInt::from(q);
    let target = BigRational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(10), digits as usize),
    );
    let one_minus_x = BigRational::new(&qb - 1, qb.clone());
    let mut product = BigRational::one();
    let mut power = BigInt::one();
    let mut m = 0u64;
    loop {
        // power = q^m here
        let tail = BigRational::new(BigInt::one(), &power * &qb) / &one_minus_x;
        if tail <= target {
            let upper = product.recip();
            let lower = (BigRational::one() - tail) * &upper;
            return Ok(LimitBounds {
                q,
                terms: m,
                partial_product: product,
                lower,
                upper,
            });
        }
        m += 1;
        power *= &qb;
        product *= BigRational::new(&power + 1, power.clone());
    }
}

/// Which density to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RatioSelector {
    /// `|LCD[n,k]_q| / [n k]_q`.
    LcdTotal,
    /// `|LCD_oo| / [n k]_2`.
    OO,
    /// `2^{n-k} |LCD_oe| / [n k]_2`, `n - k` even.
    OE,
    /// `2^k |LCD_eo| / [n k]_2`, `k` even.
    EO,
    /// `|LCD_+| / [n k]_q`.
    Plus,
    /// `|LCD_-| / [n k]_q`.
    Minus,
}

impl fmt::Display for RatioSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RatioSelector::LcdTotal => "total",
            RatioSelector::OO => "OO",
            RatioSelector::OE => "OE",
            RatioSelector::EO => "EO",
            RatioSelector::Plus => "Plus",
            RatioSelector::Minus => "Minus",
        })
    }
}

impl FromStr for RatioSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("total") || s.eq_ignore_ascii_case("lcd") {
            return Ok(RatioSelector::LcdTotal);
        }
        Ok(match s.parse::<LcdType>()? {
            LcdType::OO => RatioSelector::OO,
            LcdType::OE => RatioSelector::OE,
            LcdType::EO => RatioSelector::EO,
            LcdType::Plus => RatioSelector::Plus,
            LcdType::Minus => RatioSelector::Minus,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticReport {
    pub n: u64,
    pub k: u64,
    pub q: u64,
    pub selector: RatioSelector,
    /// Exact finite ratio.
    pub ratio: BigRational,
    /// Limit of the ratio as `k, n - k → ∞`, enclosed by rational bounds.
    pub limit_lower: BigRational,
    pub limit_upper: BigRational,
    pub limit: LimitBounds,
}

impl AsymptoticReport {
    pub fn ratio_f64(&self) -> f64 {
        to_f64(&self.ratio)
    }

    pub fn limit_estimate(&self) -> f64 {
        to_f64(&((&self.limit_lower + &self.limit_upper) / BigInt::from(2)))
    }

    /// An upper bound on `|ratio - limit|`.
    pub fn error_bound(&self) -> BigRational {
        let a = (&self.ratio - &self.limit_lower).abs();
        let b = (&self.ratio - &self.limit_upper).abs();
        a.max(b)
    }

    /// A lower bound on `|ratio - limit|` (zero when the ratio lies inside the enclosure).
    pub fn error_lower_bound(&self) -> BigRational {
        if self.ratio < self.limit_lower {
            &self.limit_lower - &self.ratio
        } else if self.ratio > self.limit_upper {
            &self.ratio - &self.limit_upper
        } else {
            BigRational::zero()
        }
    }
}

fn ratio_of(a: BigUint, b: BigUint) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub fn asymptotic_ratio(
    n: u64,
    k: u64,
    q: u64,
    which: RatioSelector,
    digits: u32,
) -> Result<AsymptoticReport> {
    check_nk(n, k)?;
    let field = Field::new(q)?;
    let binary_only = matches!(
        which,
        RatioSelector::OO | RatioSelector::OE | RatioSelector::EO
    );
    let odd_only = matches!(which, RatioSelector::Plus | RatioSelector::Minus);
    if binary_only && !field.is_binary() || odd_only && field.is_binary() {
        return Err(Error::InvalidArgument(format!(
            "selector {which} does not apply to GF({q})"
        )));
    }
    let subspaces = gaussian_binomial(n, k, q)?;
    let ratio = match which {
        RatioSelector::LcdTotal => ratio_of(count_lcd(field, n, k, None)?, subspaces),
        RatioSelector::OO => ratio_of(count_lcd_binary(n, k, Some(LcdType::OO))?, subspaces),
        RatioSelector::OE => {
            if (n - k) % 2 == 1 {
                return Err(Error::InvalidArgument(
                    "the OE density needs n - k even".into(),
                ));
            }
            ratio_of(
                pow(2, n - k) * count_lcd_binary(n, k, Some(LcdType::OE))?,
                subspaces,
            )
        }
        RatioSelector::EO => {
            if k % 2 == 1 {
                return Err(Error::InvalidArgument("the EO density needs k even".into()));
            }
            ratio_of(
                pow(2, k) * count_lcd_binary(n, k, Some(LcdType::EO))?,
                subspaces,
            )
        }
        RatioSelector::Plus => ratio_of(count_lcd_q(n, k, q, Some(LcdType::Plus))?, subspaces),
        RatioSelector::Minus => ratio_of(count_lcd_q(n, k, q, Some(LcdType::Minus))?, subspaces),
    };
    let limit = limit_constant(q, digits)?;
    let scale = if odd_only {
        BigRational::new(BigInt::one(), BigInt::from(2))
    } else {
        BigRational::one()
    };
    Ok(AsymptoticReport {
        n,
        k,
        q,
        selector: which,
        ratio,
        limit_lower: &limit.lower * &scale,
        limit_upper: &limit.upper * &scale,
        limit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(5, 0, 3), Ok(big(1)));
        assert_eq!(gaussian_binomial(2, 1, 2), Ok(big(3)));
        assert_eq!(gaussian_binomial(4, 2, 2), Ok(big(35)));
        assert_eq!(gaussian_binomial(8, 4, 2), Ok(big(200_787)));
        assert!(gaussian_binomial(2, 3, 2).is_err());
        for n in 0..12 {
            for k in 0..=n {
                assert_eq!(gaussian_binomial(n, k, 3), gaussian_binomial(n, n - k, 3));
            }
        }
    }

    #[test]
    fn group_order_examples() {
        assert_eq!(order_orthogonal_gf2(2), Ok(big(2)));
        assert_eq!(order_orthogonal_gf2(3), Ok(big(6)));
        assert_eq!(order_orthogonal_gf2(4), Ok(big(48)));
        assert_eq!(order_symplectic_gf2(2), Ok(big(6)));
        assert_eq!(order_symplectic_gf2(4), Ok(big(720)));
        assert_eq!(order_symplectic_gf2(6), Ok(big(512 * 3 * 15 * 63)));
        assert!(order_symplectic_gf2(3).is_err());
        assert_eq!(order_orthogonal_q(2, 1, 3), Ok(big(8)));
        assert_eq!(order_orthogonal_q(3, 1, 3), Ok(big(48)));
        assert_eq!(order_orthogonal_q(1, 1, 5), Ok(big(2)));
        assert!(order_orthogonal_q(2, 1, 2).is_err());
        assert!(order_orthogonal_q(2, 0, 3).is_err());
    }

    #[test]
    fn binary_count_examples() {
        let c = |n, k, t| count_lcd_binary(n, k, t).unwrap();
        assert_eq!(c(3, 1, Some(LcdType::OO)), big(3));
        assert_eq!(c(3, 1, Some(LcdType::OE)), big(1));
        assert_eq!(c(3, 1, Some(LcdType::EO)), big(0));
        assert_eq!(c(3, 1, None), big(4));
        assert_eq!(c(4, 2, None), big(20));
        assert_eq!(c(4, 2, Some(LcdType::OO)), big(12));
        assert_eq!(c(4, 2, Some(LcdType::OE)), big(4));
        assert_eq!(c(4, 2, Some(LcdType::EO)), big(4));
        assert!(count_lcd_binary(3, 0, None).is_err());
        assert!(count_lcd_binary(3, 3, None).is_err());
        assert!(count_lcd_binary(3, 1, Some(LcdType::Plus)).is_err());
    }

    #[test]
    fn odd_count_examples() {
        assert_eq!(count_lcd_q(3, 1, 3, None), Ok(big(9)));
        assert_eq!(count_lcd_q(3, 1, 3, Some(LcdType::Plus)), Ok(big(3)));
        assert_eq!(count_lcd_q(3, 1, 3, Some(LcdType::Minus)), Ok(big(6)));
        assert!(count_lcd_q(3, 1, 2, None).is_err());
        assert!(count_lcd_q(3, 1, 3, Some(LcdType::OO)).is_err());
    }

    #[test]
    fn binary_partition_and_duality() {
        for n in 2..=32u64 {
            for k in 1..n {
                let parts: BigUint = LcdType::BINARY
                    .iter()
                    .map(|&t| count_lcd_binary(n, k, Some(t)).unwrap())
                    .sum();
                assert_eq!(parts, count_lcd_binary(n, k, None).unwrap(), "n={n} k={k}");
                assert_eq!(
                    count_lcd_binary(n, k, Some(LcdType::OE)).unwrap(),
                    count_lcd_binary(n, n - k, Some(LcdType::EO)).unwrap()
                );
            }
        }
    }

    #[test]
    fn binary_orbit_stabilizer() {
        for n in 2..=24u64 {
            let on = order_orthogonal_gf2(n).unwrap();
            for k in 1..n {
                let ok = order_orthogonal_gf2(k).unwrap();
                let onk = order_orthogonal_gf2(n - k).unwrap();
                assert_eq!(
                    count_lcd_binary(n, k, Some(LcdType::OO)).unwrap() * &ok * &onk,
                    on
                );
                if (n - k) % 2 == 0 {
                    let sp = order_symplectic_gf2(n - k).unwrap();
                    assert_eq!(
                        count_lcd_binary(n, k, Some(LcdType::OE)).unwrap() * &ok * sp,
                        on
                    );
                }
                if k % 2 == 0 {
                    let sp = order_symplectic_gf2(k).unwrap();
                    assert_eq!(
                        count_lcd_binary(n, k, Some(LcdType::EO)).unwrap() * sp * &onk,
                        on
                    );
                }
            }
        }
    }

    #[test]
    fn odd_sign_split_and_orbit_stabilizer() {
        for q in [3u64, 5, 7] {
            for n in 2..=20u64 {
                let on = order_orthogonal_q(n, 1, q).unwrap();
                for k in 1..n {
                    let plus = count_lcd_q(n, k, q, Some(LcdType::Plus)).unwrap();
                    let minus = count_lcd_q(n, k, q, Some(LcdType::Minus)).unwrap();
                    assert_eq!(
                        &plus + &minus,
                        count_lcd_q(n, k, q, None).unwrap(),
                        "q={q} n={n} k={k}"
                    );
                    let stab_plus = order_orthogonal_q(k, 1, q).unwrap()
                        * order_orthogonal_q(n - k, 1, q).unwrap();
                    let stab_minus = order_orthogonal_q(k, -1, q).unwrap()
                        * order_orthogonal_q(n - k, -1, q).unwrap();
                    assert_eq!(plus * stab_plus, on);
                    assert_eq!(minus * stab_minus, on);
                }
            }
        }
    }

    #[test]
    fn g_partial_decreasing() {
        for q in [2u64, 3, 4] {
            for m in 0..=50 {
                assert!(g_partial(q, m + 1) < g_partial(q, m));
            }
        }
    }

    #[test]
    fn g_identity_for_gaussian_binomial() {
        // [n k]_q = q^{k(n-k)} g_{q,n} / (g_{q,k} g_{q,n-k})
        for n in 1..12u64 {
            for k in 0..=n {
                let lhs =
                    BigRational::from_integer(BigInt::from(gaussian_binomial(n, k, 2).unwrap()));
                let rhs = BigRational::from_integer(BigInt::from(pow(2, k * (n - k))))
                    * g_partial(2, n)
                    / (g_partial(2, k) * g_partial(2, n - k));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn limit_constant_binary() {
        let b = limit_constant(2, DEFAULT_PRECISION_DIGITS).unwrap();
        assert!(b.lower < b.upper);
        assert!(b.width() <= BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12))));
        assert!((b.estimate() - 0.419_422_441_795_1).abs() < 1e-11);
        // g_{2,∞} / g_{4,∞} is the same constant
        let ratio = to_f64(&(g_partial(2, 80) / g_partial(4, 80)));
        assert!((ratio - b.estimate()).abs() < 1e-11);
    }

    #[test]
    fn asymptotic_examples() {
        let r = asymptotic_ratio(16, 8, 2, RatioSelector::LcdTotal, 12).unwrap();
        assert!(to_f64(&r.error_bound()) < 1e-2);
        assert!(asymptotic_ratio(16, 7, 2, RatioSelector::EO, 12).is_err());
        assert!(asymptotic_ratio(16, 8, 2, RatioSelector::Plus, 12).is_err());
        assert!(asymptotic_ratio(16, 8, 3, RatioSelector::OO, 12).is_err());
        let r = asymptotic_ratio(16, 8, 3, RatioSelector::Plus, 12).unwrap();
        assert!(
            (r.limit_estimate() - 0.5 * limit_constant(3, 12).unwrap().estimate()).abs() < 1e-12
        );
    }

    #[test]
    fn selector_parsing() {
        assert_eq!("total".parse(), Ok(RatioSelector::LcdTotal));
        assert_eq!("eo".parse(), Ok(RatioSelector::EO));
        assert_eq!("Minus".parse(), Ok(RatioSelector::Minus));
        assert!("EE".parse::<RatioSelector>().is_err());
    }
}
