//! Hurwitz–Radon and James numbers.
//!
//! All three families of numbers grow far beyond machine words
//! (`nu_2(c(r)) >= 2r - 1`), so they are returned as [`FactoredInteger`]s.
//! Only the exponents are ever computed; expansion to a [`BigUint`] is left
//! to callers that need a decimal value.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum JamesError {
    #[error("argument must be a positive integer")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("n = {n} is not of the form {d}m - 1")]
    WrongResidue { n: u64, d: u64 },
}

/// A positive integer stored as its prime factorization.
///
/// Every key is prime and every stored exponent is at least one; the empty
/// map is `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    /// `p^e`. Panics if `p` is not prime.
    pub fn prime_power(p: u64, e: u32) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        let mut out = Self::one();
        out.set_exponent(p, e);
        out
    }

    /// Factors a machine integer by trial division.
    pub fn from_u64(n: u64) -> Result<Self, JamesError> {
        if n == 0 {
            return Err(JamesError::Zero);
        }
        let mut out = Self::one();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            out.set_exponent(p, e);
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            out.set_exponent(rest, 1);
        }
        Ok(out)
    }

    fn set_exponent(&mut self, p: u64, e: u32) {
        if e == 0 {
            self.factors.remove(&p);
        } else {
            self.factors.insert(p, e);
        }
    }

    /// Exponent of `p`; zero when `p` does not divide the value.
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// `(prime, exponent)` pairs with primes ascending.
    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The 2-primary part `2^{nu_2(self)}`.
    pub fn two_part(&self) -> Self {
        let mut out = Self::one();
        out.set_exponent(2, self.exponent(2));
        out
    }

    pub fn to_biguint(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (&p, &e)| acc * BigUint::from(p).pow(e))
    }

    /// `Some(value)` when the value fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for (&p, &e) in &self.factors {
            acc = acc.checked_mul(p.checked_pow(e)?)?;
        }
        Some(acc)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &FactoredInteger) -> bool {
        self.factors.iter().all(|(&p, &e)| other.exponent(p) >= e)
    }

    /// Whether `self` divides the machine integer `m`, decided from
    /// valuations without expanding `self`.
    pub fn divides_u64(&self, m: u64) -> bool {
        if m == 0 {
            return true;
        }
        self.factors.iter().all(|(&p, &e)| nu(p, m) >= e)
    }

    /// Renders `2^3 · 3`; the empty product renders as `1`.
    pub fn factor_string(&self) -> String {
        if self.factors.is_empty() {
            return String::from("1");
        }
        let mut s = String::new();
        for (i, (&p, &e)) in self.factors.iter().enumerate() {
            if i > 0 {
                s.push_str(" · ");
            }
            if e == 1 {
                let _ = write!(s, "{p}");
            } else {
                let _ = write!(s, "{p}^{e}");
            }
        }
        s
    }
}

impl core::ops::Mul for &FactoredInteger {
    type Output = FactoredInteger;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &FactoredInteger) -> FactoredInteger {
        let mut out = self.clone();
        for (&p, &e) in &rhs.factors {
            let cur = out.exponent(p);
            out.set_exponent(p, cur + e);
        }
        out
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.factor_string())
    }
}

/// Which of `R`, `C`, `H` the sphere bundle lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SphereFamily {
    Real,
    Complex,
    Quaternionic,
}

impl SphereFamily {
    /// Real dimension `d` of the field.
    pub fn d(self) -> u64 {
        match self {
            SphereFamily::Real => 1,
            SphereFamily::Complex => 2,
            SphereFamily::Quaternionic => 4,
        }
    }

    /// The order `t(r)` of `H - F` in `J(P_r)`: `a`, `b` or `c`.
    pub fn t(self, r: u64) -> Result<FactoredInteger, JamesError> {
        match self {
            SphereFamily::Real => hurwitz_radon_a(r),
            SphereFamily::Complex => james_b(r),
            SphereFamily::Quaternionic => james_c(r),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &is_p)| is_p)
        .map(|(p, _)| p as u64)
        .collect()
}

// Unchecked valuation; callers guarantee p >= 2 and n >= 1.
fn nu(p: u64, mut n: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// The p-adic valuation of `n`.
pub fn nu_p(p: u64, n: u64) -> Result<u32, JamesError> {
    if n == 0 {
        return Err(JamesError::Zero);
    }
    if !is_prime(p) {
        return Err(JamesError::NotPrime(p));
    }
    Ok(nu(p, n))
}

/// `max { i + nu_p(i) : 1 <= i <= limit }`, zero for `limit == 0`.
///
/// The maximum is attained at the largest multiple of some `p^e` not
/// exceeding `limit`, so only `log_p(limit) + 1` candidates are examined.
fn max_shifted_valuation(p: u64, limit: u64, weight: u64) -> u64 {
    if limit == 0 {
        return 0;
    }
    let mut best = 0;
    let mut pe = 1u64;
    loop {
        let i = (limit / pe) * pe;
        best = best.max(weight * i + u64::from(nu(p, i)));
        match pe.checked_mul(p) {
            Some(next) if next <= limit => pe = next,
            _ => break,
        }
    }
    best
}

/// Hurwitz–Radon number `a(r)`: `2^e` with
/// `e = #{1 <= i <= r-1 : i = 0, 1, 2, 4 mod 8}`.
pub fn hurwitz_radon_a(r: u64) -> Result<FactoredInteger, JamesError> {
    if r == 0 {
        return Err(JamesError::Zero);
    }
    let below = r - 1;
    // Four qualifying residues in every full block of eight.
    let full = below / 8;
    let partial = match below % 8 {
        0 => 0,
        1 => 1,
        2 | 3 => 2,
        _ => 3,
    };
    let e = 4 * full + partial;
    Ok(FactoredInteger::prime_power(2, e as u32))
}

/// Complex James number `b(r)`.
pub fn james_b(r: u64) -> Result<FactoredInteger, JamesError> {
    if r == 0 {
        return Err(JamesError::Zero);
    }
    let mut out = FactoredInteger::one();
    for p in primes_up_to(r) {
        let e = max_shifted_valuation(p, (r - 1) / (p - 1), 1);
        out.set_exponent(p, e as u32);
    }
    Ok(out)
}

/// Quaternionic James number `c(r)`.
pub fn james_c(r: u64) -> Result<FactoredInteger, JamesError> {
    if r == 0 {
        return Err(JamesError::Zero);
    }
    let mut out = james_b(2 * r)?;
    let two = (2 * r - 1).max(max_shifted_valuation(2, r - 1, 2));
    out.set_exponent(2, two as u32);
    Ok(out)
}

/// Adams' gap `j(n) = 2^beta + 8 gamma` where `n + 1 = odd · 2^{beta + 4 gamma}`.
pub fn j_real(n: u64) -> Result<u64, JamesError> {
    if n == 0 {
        return Err(JamesError::Zero);
    }
    let s = (n + 1).trailing_zeros() as u64;
    Ok((1u64 << (s % 4)) + 8 * (s / 4))
}

/// `j2(n)` for odd `n = 2m - 1` or `j4(n)` for `n = 4m - 1`: `n + 1 - d k`
/// where `k` is the least integer `>= 1` with `m = 0 mod 2^{nu_2(t(m - k))}`.
///
/// `k = m` is admitted with `t(0) = 1`; it is only reached for `j4` with `m`
/// odd, where every `c(r)` is even and the gap is `0`.
pub fn j_gap(n: u64, family: SphereFamily) -> Result<u64, JamesError> {
    let d = family.d();
    if n == 0 {
        return Err(JamesError::Zero);
    }
    if family == SphereFamily::Real || !(n + 1).is_multiple_of(d) {
        return Err(JamesError::WrongResidue { n, d });
    }
    let m = (n + 1) / d;
    let m_nu2 = nu(2, m);
    let k = (1..m)
        .find(|&k| {
            let t = family.t(m - k).expect("m - k >= 1");
            t.exponent(2) <= m_nu2
        })
        .unwrap_or(m);
    Ok(n + 1 - d * k)
}
