//! Connective `KO` of stunted real projective spaces and the `psi^3`
//! fixed-generator criterion.
//!
//! For odd `n` and `1 <= k <= n`, the 2-local group
//! `kO_n(P^inf / P^k)` and the action of `psi^3` on it are known in three
//! residue classes of `n + 1`:
//!
//! * `n + 1 = 0 mod 8`: cyclic of order `2 a(n+1-k)`, `psi^3` acting as
//!   `3^{(n+1)/2}`. A generator is fixed iff that order divides
//!   `3^{(n+1)/2} - 1`.
//! * `n + 1 = 4 mod 8`, `k = n - 4`: `Z/16`, `psi^3 = 3^{(n+1)/2}`; no fixed
//!   generator, so `k > n - 4` is needed.
//! * `n + 1 = 2 mod 4`, `k = n - 2`: `Z/2` with zero projection to the top
//!   cell, so `k > n - 2` is needed.
//!
//! Other `(n, k)` are reported as [`KoGroup::NotComputed`].

use num_bigint::BigUint;

use crate::james::hurwitz_radon_a;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum KoError {
    #[error("n = {0} must be odd")]
    EvenN(u64),
    #[error("k = {k} must satisfy 1 <= k <= n = {n}")]
    KOutOfRange { n: u64, k: u64 },
    #[error("exponent s = {0} must be even and positive")]
    OddExponent(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KoGroup {
    /// Cyclic of `order`, `psi^3` acting as `3^psi3_exponent`.
    Cyclic { order: BigUint, psi3_exponent: u64 },
    /// `Z/2` whose projection to the top cell is zero.
    ZeroProjection,
    NotComputed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoGroupInfo {
    pub n: u64,
    pub k: u64,
    pub group: KoGroup,
}

impl KoGroupInfo {
    /// `3^{(n+1)/2}` when the group is cyclic.
    pub fn psi3_multiplier(&self) -> Option<BigUint> {
        match &self.group {
            KoGroup::Cyclic { psi3_exponent, .. } => Some(BigUint::from(3u32).pow(*psi3_exponent as u32)),
            _ => None,
        }
    }
}

fn check(n: u64, k: u64) -> Result<(), KoError> {
    if n.is_multiple_of(2) {
        return Err(KoError::EvenN(n));
    }
    if k == 0 || k > n {
        return Err(KoError::KOutOfRange { n, k });
    }
    Ok(())
}

pub fn ko_group(n: u64, k: u64) -> Result<KoGroupInfo, KoError> {
    check(n, k)?;
    let psi3_exponent = n.div_ceil(2);
    let group = if (n + 1).is_multiple_of(8) {
        let a = hurwitz_radon_a(n + 1 - k).expect("n + 1 - k >= 1");
        KoGroup::Cyclic { order: a.to_biguint() * 2u32, psi3_exponent }
    } else if (n + 1) % 8 == 4 && k + 4 == n {
        KoGroup::Cyclic { order: BigUint::from(16u32), psi3_exponent }
    } else if (n + 1) % 4 == 2 && k + 2 == n {
        KoGroup::ZeroProjection
    } else {
        KoGroup::NotComputed
    };
    Ok(KoGroupInfo { n, k, group })
}

/// `nu_2(3^s - 1)` for even `s`, by the identity `nu_2(s) + 2`.
pub fn nu2_power3_minus1(s: u64) -> Result<u32, KoError> {
    if s == 0 || s % 2 == 1 {
        return Err(KoError::OddExponent(s));
    }
    Ok(s.trailing_zeros() + 2)
}

/// Whether some element maps to the generator of the top cell and is
/// fixed by `psi^3`.
pub fn fixed_generator_exists(n: u64, k: u64) -> Result<bool, KoError> {
    check(n, k)?;
    if (n + 1).is_multiple_of(8) {
        let a = hurwitz_radon_a(n + 1 - k).expect("n + 1 - k >= 1");
        // 2 a(n+1-k) | 3^{(n+1)/2} - 1, compared on 2-adic valuations.
        let needed = 1 + a.exponent(2);
        let available = nu2_power3_minus1(n.div_ceil(2))?;
        Ok(needed <= available)
    } else if (n + 1) % 8 == 4 {
        Ok(k + 4 > n)
    } else {
        Ok(k + 2 > n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        let g = ko_group(15, 7).unwrap();
        assert_eq!(g.group, KoGroup::Cyclic { order: 32u32.into(), psi3_exponent: 8 });
        assert_eq!(g.psi3_multiplier(), Some(6561u32.into()));
        assert_eq!(ko_group(11, 7).unwrap().group, KoGroup::Cyclic { order: 16u32.into(), psi3_exponent: 6 });
        assert_eq!(ko_group(9, 7).unwrap().group, KoGroup::ZeroProjection);
        assert_eq!(ko_group(9, 3).unwrap().group, KoGroup::NotComputed);
        assert_eq!(ko_group(9, 3).unwrap().psi3_multiplier(), None);
        assert_eq!(ko_group(10, 3), Err(KoError::EvenN(10)));
        assert_eq!(ko_group(9, 0), Err(KoError::KOutOfRange { n: 9, k: 0 }));
        assert_eq!(ko_group(9, 10), Err(KoError::KOutOfRange { n: 9, k: 10 }));
    }

    #[test]
    fn fixed_generators() {
        assert_eq!(fixed_generator_exists(15, 7), Ok(true));
        assert_eq!(fixed_generator_exists(15, 6), Ok(false));
        assert_eq!(fixed_generator_exists(11, 7), Ok(false));
        assert_eq!(fixed_generator_exists(11, 8), Ok(true));
        assert_eq!(fixed_generator_exists(9, 7), Ok(false));
        assert_eq!(fixed_generator_exists(9, 8), Ok(true));
    }

    #[test]
    fn valuation_identity() {
        assert_eq!(nu2_power3_minus1(8), Ok(5));
        assert_eq!(nu2_power3_minus1(4), Ok(4));
        assert_eq!(nu2_power3_minus1(2), Ok(3));
        assert_eq!(nu2_power3_minus1(3), Err(KoError::OddExponent(3)));
        assert_eq!(nu2_power3_minus1(0), Err(KoError::OddExponent(0)));
    }
}
