//! Prime fields GF(p).
//!
//! Elements are residues in `[0, p)`. The binary field shares the same type;
//! operations that only make sense in odd characteristic (the quadratic
//! character, square roots, sum-of-two-squares) reject `p = 2`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported modulus; keeps every product of two residues inside `u64`.
pub const MAX_MODULUS: u32 = (1 << 31) - 1;

/// A residue modulo the characteristic of some [`Field`].
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
    nonsquare: Option<Element>,
}

impl Field {
    /// Builds GF(p), verifying primality. For odd `p` the smallest nonsquare
    /// residue is located and stored.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_MODULUS as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p = p as u32;
        let mut field = Field { p, nonsquare: None };
        if p != 2 {
            let gamma = (2..p)
                .map(Element)
                .find(|&x| field.euler_criterion(x) == -1)
                .expect("every odd prime field has a nonsquare");
            field.nonsquare = Some(gamma);
        }
        Ok(field)
    }

    /// GF(2).
    pub fn binary() -> Self {
        Field {
            p: 2,
            nonsquare: None,
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    pub fn require_odd(&self) -> Result<()> {
        if self.is_binary() {
            Err(Error::CharacteristicTwo)
        } else {
            Ok(())
        }
    }

    pub fn require_binary(&self) -> Result<()> {
        if self.is_binary() {
            Ok(())
        } else {
            Err(Error::NotBinary(self.p))
        }
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn elem(&self, v: i64) -> Element {
        Element(v.rem_euclid(self.p as i64) as u32)
    }

    /// Wraps a value already known to be in range.
    #[inline]
    pub fn elem_unchecked(&self, v: u32) -> Element {
        debug_assert!(v < self.p);
        Element(v)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.p).map(Element)
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        let s = a.0 as u64 + b.0 as u64;
        Element((s % self.p as u64) as u32)
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        let s = a.0 as u64 + (self.p - b.0) as u64;
        Element((s % self.p as u64) as u32)
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        if a.0 == 0 {
            a
        } else {
            Element(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: Element, mut e: u64) -> Element {
        let p = self.p as u64;
        let mut base = a.0 as u64 % p;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Element(acc as u32)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Element) -> Option<Element> {
        if a.0 == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    fn euler_criterion(&self, x: Element) -> i8 {
        let r = self.pow(x, (self.p as u64 - 1) / 2);
        if r.0 == 0 {
            0
        } else if r.0 == 1 {
            1
        } else {
            -1
        }
    }

    /// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
    pub fn legendre(&self, x: Element) -> Result<i8> {
        self.require_odd()?;
        Ok(self.euler_criterion(x))
    }

    /// The canonical nonsquare: smallest residue with character -1.
    pub fn nonsquare(&self) -> Result<Element> {
        self.nonsquare.ok_or(Error::CharacteristicTwo)
    }

    pub fn is_square(&self, x: Element) -> Result<bool> {
        Ok(self.legendre(x)? >= 0)
    }

    /// The smaller of the two square roots of `x`, or `None` for a nonsquare.
    /// Tonelli-Shanks.
    pub fn sqrt(&self, x: Element) -> Result<Option<Element>> {
        match self.legendre(x)? {
            -1 => return Ok(None),
            0 => return Ok(Some(Element::ZERO)),
            _ => {}
        }
        let p = self.p as u64;
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = self.nonsquare.expect("odd field");
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(x, q);
        let mut r = self.pow(x, q.div_ceil(2));
        while t.0 != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt.0 != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        let other = self.neg(r);
        Ok(Some(r.min(other)))
    }

    /// Writes `z = x^2 + y^2`, taking the smallest `x` for which `z - x^2` is a
    /// square and then the smallest `y`.
    pub fn two_squares(&self, z: Element) -> Result<(Element, Element)> {
        self.require_odd()?;
        for x in self.elements() {
            let rest = self.sub(z, self.mul(x, x));
            if let Some(y) = self.sqrt(rest)? {
                return Ok((x, y));
            }
        }
        unreachable!("every element of an odd prime field is a sum of two squares")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn rejects_composites() {
        for bad in [0, 1, 4, 9, 15, 21] {
            assert_eq!(Field::new(bad), Err(Error::NotPrime(bad)));
        }
    }

    #[test]
    fn legendre_small() {
        assert_eq!(gf(3).legendre(Element(1)), Ok(1));
        assert_eq!(gf(3).legendre(Element(2)), Ok(-1));
        assert_eq!(gf(7).legendre(Element(2)), Ok(1));
        assert_eq!(gf(7).legendre(Element(0)), Ok(0));
        assert_eq!(
            Field::binary().legendre(Element(1)),
            Err(Error::CharacteristicTwo)
        );
    }

    #[test]
    fn canonical_nonsquares() {
        assert_eq!(gf(3).nonsquare(), Ok(Element(2)));
        assert_eq!(gf(5).nonsquare(), Ok(Element(2)));
        assert_eq!(gf(7).nonsquare(), Ok(Element(3)));
        assert_eq!(gf(17).nonsquare(), Ok(Element(3)));
        assert!(Field::binary().nonsquare().is_err());
    }

    #[test]
    fn two_squares_examples() {
        assert_eq!(gf(3).two_squares(Element(0)), Ok((Element(0), Element(0))));
        assert_eq!(gf(3).two_squares(Element(2)), Ok((Element(1), Element(1))));
        assert_eq!(gf(7).two_squares(Element(3)), Ok((Element(1), Element(3))));
        assert!(Field::binary().two_squares(Element(1)).is_err());
    }

    #[test]
    fn two_squares_exhaustive() {
        for p in [3, 5, 7, 11, 13] {
            let f = gf(p);
            for z in f.elements() {
                let (x, y) = f.two_squares(z).unwrap();
                assert_eq!(f.add(f.mul(x, x), f.mul(y, y)), z, "p={p} z={z}");
                // smallest-x rule, checked against a brute-force scan
                let bx = f
                    .elements()
                    .find(|&a| f.elements().any(|b| f.add(f.mul(a, a), f.mul(b, b)) == z))
                    .unwrap();
                assert_eq!(x, bx);
            }
        }
    }

    #[test]
    fn sqrt_matches_table() {
        for p in [3, 5, 7, 11, 13, 17, 97] {
            let f = gf(p);
            for x in f.elements() {
                let brute = f.elements().find(|&y| f.mul(y, y) == x);
                assert_eq!(f.sqrt(x).unwrap(), brute, "p={p} x={x}");
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms(pi in 0usize..5, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
            let f = gf([2, 3, 5, 7, 101][pi]);
            let (a, b, c) = (f.elem(a as i64), f.elem(b as i64), f.elem(c as i64));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), Element::ZERO);
            prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Element::ONE);
            }
        }

        #[test]
        fn legendre_multiplicative(pi in 0usize..5, x in 1u32..1000, y in 1u32..1000) {
            let f = gf([3, 5, 7, 11, 13][pi]);
            let (x, y) = (f.elem(x as i64), f.elem(y as i64));
            prop_assume!(!x.is_zero() && !y.is_zero());
            prop_assert_eq!(f.legendre(f.mul(x, x)).unwrap(), 1);
            prop_assert_eq!(
                f.legendre(x).unwrap() * f.legendre(y).unwrap(),
                f.legendre(f.mul(x, y)).unwrap()
            );
        }
    }
}
