//! The graded ring `Z/2[t, x, y] / (t^2, x^4, y^2)` with `deg t = 1`,
//! `deg x = 4`, `deg y = 3`, and the total Stiefel–Whitney class of the
//! virtual bundle pulled back along `lambda^2: Sp(3) -> SO(15)`.
//!
//! The ring has 16 monomials, so an element is a 16-bit mask.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CharClassError {
    #[error("element has zero constant term and is not a unit")]
    NotUnit,
    #[error("monomial t^{t} x^{x} y^{y} exceeds the truncation")]
    OutOfRange { t: u8, x: u8, y: u8 },
}

/// Exponent triple `(t, x, y)` with `t <= 1`, `x <= 3`, `y <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub t: u8,
    pub x: u8,
    pub y: u8,
}

impl Monomial {
    pub fn new(t: u8, x: u8, y: u8) -> Result<Self, CharClassError> {
        if t > 1 || x > 3 || y > 1 {
            return Err(CharClassError::OutOfRange { t, x, y });
        }
        Ok(Self { t, x, y })
    }

    fn index(self) -> u32 {
        u32::from(self.t) * 8 + u32::from(self.x) * 2 + u32::from(self.y)
    }

    fn from_index(i: u32) -> Self {
        Self { t: (i / 8) as u8, x: ((i / 2) % 4) as u8, y: (i % 2) as u8 }
    }

    pub fn degree(self) -> u32 {
        u32::from(self.t) + 4 * u32::from(self.x) + 3 * u32::from(self.y)
    }

    fn times(self, other: Monomial) -> Option<Monomial> {
        Monomial::new(self.t + other.t, self.x + other.x, self.y + other.y).ok()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TruncatedPoly {
    bits: u16,
}

impl TruncatedPoly {
    pub const ZERO: Self = Self { bits: 0 };
    pub const ONE: Self = Self { bits: 1 };

    pub fn monomial(m: Monomial) -> Self {
        Self { bits: 1 << m.index() }
    }

    pub fn t() -> Self {
        Self::monomial(Monomial { t: 1, x: 0, y: 0 })
    }

    pub fn x() -> Self {
        Self::monomial(Monomial { t: 0, x: 1, y: 0 })
    }

    pub fn y() -> Self {
        Self::monomial(Monomial { t: 0, x: 0, y: 1 })
    }

    pub fn from_bits(bits: u16) -> Self {
        Self { bits }
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn coeff(self, m: Monomial) -> bool {
        self.bits >> m.index() & 1 == 1
    }

    pub fn constant_term(self) -> bool {
        self.bits & 1 == 1
    }

    /// Monomials with coefficient 1, ordered by index.
    pub fn monomials(self) -> impl Iterator<Item = Monomial> {
        (0..16).filter(move |i| self.bits >> i & 1 == 1).map(Monomial::from_index)
    }

    /// The homogeneous component of degree `deg`.
    pub fn component(self, deg: u32) -> Self {
        self.monomials()
            .filter(|m| m.degree() == deg)
            .fold(Self::ZERO, |acc, m| acc + Self::monomial(m))
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(Self::ONE, |acc, _| acc * self)
    }

    /// Inverse of a unit `1 + a`: `a` is nilpotent, so the geometric series
    /// `1 + a + a^2 + ...` terminates.
    pub fn inverse(self) -> Result<Self, CharClassError> {
        if !self.constant_term() {
            return Err(CharClassError::NotUnit);
        }
        let a = self + Self::ONE;
        let mut sum = Self::ONE;
        let mut term = Self::ONE;
        loop {
            term = term * a;
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum + term;
        }
    }

    /// `self^e` for any integer `e`; negative powers require a unit.
    pub fn pow_signed(self, e: i32) -> Result<Self, CharClassError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }
}

impl Add for TruncatedPoly {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self { bits: self.bits ^ rhs.bits }
    }
}

impl Mul for TruncatedPoly {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut bits = 0u16;
        for a in self.monomials() {
            for b in rhs.monomials() {
                if let Some(c) = a.times(b) {
                    bits ^= 1 << c.index();
                }
            }
        }
        Self { bits }
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<Monomial> = self.monomials().collect();
        terms.sort_by_key(|m| (m.degree(), m.x, m.t, m.y));
        for (i, m) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 {
                f.write_str("1")?;
                continue;
            }
            match m.x {
                0 => {}
                1 => f.write_str("x")?,
                e => write!(f, "x^{e}")?,
            }
            if m.t == 1 {
                f.write_str("t")?;
            }
            if m.y == 1 {
                f.write_str("y")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedPoly({self})")
    }
}

/// `prod w_i^{e_i}` over `(class, exponent)` pairs.
pub fn total_class(factors: &[(TruncatedPoly, i32)]) -> Result<TruncatedPoly, CharClassError> {
    factors
        .iter()
        .try_fold(TruncatedPoly::ONE, |acc, &(w, e)| Ok(acc * w.pow_signed(e)?))
}

/// Constituent total classes and the exponents with which they enter the
/// virtual bundle `(eta - H) (x)_C H^3 + (H - eta) (x)_C H`:
/// `w(eta (x) H) = 1 + x + ty` to the `+3`, `w(H (x) H) = 1 + x` to the
/// `-3`, `w(H (x) H_taut) = 1` to the `+1`, `w(eta (x) H_taut) = 1 + ty` to
/// the `-1`.
pub fn sp3_constituents() -> [(TruncatedPoly, i32); 4] {
    let (t, x, y) = (TruncatedPoly::t(), TruncatedPoly::x(), TruncatedPoly::y());
    let one = TruncatedPoly::ONE;
    [(one + x + t * y, 3), (one + x, -3), (one, 1), (one + t * y, -1)]
}

/// The expected total class `1 + (x + x^2 + x^3) t y`.
pub fn sp3_expected() -> TruncatedPoly {
    let (t, x, y) = (TruncatedPoly::t(), TruncatedPoly::x(), TruncatedPoly::y());
    TruncatedPoly::ONE + (x + x.pow(2) + x.pow(3)) * t * y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Sp3Mismatch {
    #[error("total class is {got}, expected {expected}")]
    Total { got: TruncatedPoly, expected: TruncatedPoly },
    #[error("degree-16 component is {got}, expected x^3ty")]
    TopClass { got: TruncatedPoly },
}

/// Computes the total Stiefel–Whitney class and checks it is
/// `1 + (x + x^2 + x^3) t y` with non-zero `w_16 = x^3 t y`.
pub fn verify_lemma_sp3() -> Result<TruncatedPoly, Sp3Mismatch> {
    let w = total_class(&sp3_constituents()).expect("constituents are units");
    let expected = sp3_expected();
    if w != expected {
        return Err(Sp3Mismatch::Total { got: w, expected });
    }
    let top = w.component(16);
    let x3ty = TruncatedPoly::monomial(Monomial { t: 1, x: 3, y: 1 });
    if top != x3ty {
        return Err(Sp3Mismatch::TopClass { got: top });
    }
    Ok(w)
}
