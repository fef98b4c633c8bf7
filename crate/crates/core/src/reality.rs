//! Reality types and real dimensions of irreducible representations of
//! `SO(k)`, `SU(k)` and `Sp(k)`.
//!
//! A complex irreducible `V(omega)` either is the complexification of a real
//! irreducible representation (real type) or, together with its conjugate,
//! complexifies one of twice its dimension (complex or quaternionic type).
//! The type is read off the dominant weight:
//!
//! * `SO(2l+1)`: the weight descends iff `m_l` is even, and is then real.
//! * `SO(2l)`: the weight descends iff `m_{l-1} + m_l` is even. For `l`
//!   even it is real. For `l` odd, self-conjugate weights
//!   (`m_{l-1} = m_l`) are real; the others are reported as
//!   [`RealityType::Undetermined`] with the lower bound `dim_C`.
//! * `SU(k)`: real iff `m_i = m_{k-i}` for all `i`, except that
//!   `k = 2 mod 4` with `m_{k/2}` odd is quaternionic; otherwise complex.
//! * `Sp(k)`: real iff `m_1 + m_3 + m_5 + ...` is even, else quaternionic.

use num_bigint::BigUint;

pub use crate::group::{GroupDescriptor, GroupFamily};
use crate::weyl::{self, binomial, DominantWeight, LieFamily, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealityError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("weight {weight} is not a weight of {group}")]
    AlgebraMismatch { group: GroupDescriptor, weight: DominantWeight },
    #[error("{weight} is a representation of Spin, not of {group}")]
    SpinOnly { group: GroupDescriptor, weight: DominantWeight },
    #[error("{op} is not defined for {group}")]
    OutOfHypothesis { op: &'static str, group: GroupDescriptor },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealityType {
    Real,
    ComplexType,
    QuaternionicType,
    /// Real dimension is `dim_C` or `2 dim_C`; not decided by the weight
    /// criteria implemented here.
    Undetermined,
}

impl RealityType {
    pub fn as_str(self) -> &'static str {
        match self {
            RealityType::Real => "REAL",
            RealityType::ComplexType => "COMPLEX_TYPE",
            RealityType::QuaternionicType => "QUATERNIONIC_TYPE",
            RealityType::Undetermined => "UNDETERMINED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealIrrepInfo {
    pub weight: DominantWeight,
    pub reality: RealityType,
    pub complex_dim: BigUint,
    pub real_dim: BigUint,
    /// Set only for [`RealityType::Undetermined`], where `real_dim` is
    /// `complex_dim`, a lower bound.
    pub real_dim_is_lower_bound: bool,
}

fn check_algebra(g: &GroupDescriptor, w: &DominantWeight) -> Result<(), RealityError> {
    let alg = g.algebra()?;
    if alg != w.algebra() {
        return Err(RealityError::AlgebraMismatch { group: *g, weight: w.clone() });
    }
    Ok(())
}

/// Whether `w` is a representation of the group itself rather than only of
/// its universal cover. Always true for `SU` and `Sp`.
pub fn descends(g: &GroupDescriptor, w: &DominantWeight) -> bool {
    let l = w.algebra().rank();
    match (g.family, w.algebra().family()) {
        (GroupFamily::SO, LieFamily::B) => w.m(l).is_multiple_of(2),
        (GroupFamily::SO, LieFamily::D) => (w.m(l - 1) + w.m(l)).is_multiple_of(2),
        _ => true,
    }
}

pub fn reality_type(g: &GroupDescriptor, w: &DominantWeight) -> Result<RealityType, RealityError> {
    check_algebra(g, w)?;
    if !descends(g, w) {
        return Err(RealityError::SpinOnly { group: *g, weight: w.clone() });
    }
    let l = w.algebra().rank();
    let ty = match g.family {
        GroupFamily::SO if g.size % 2 == 1 => RealityType::Real,
        GroupFamily::SO if l.is_multiple_of(2) || w.m(l - 1) == w.m(l) => RealityType::Real,
        GroupFamily::SO => RealityType::Undetermined,
        GroupFamily::SU => {
            let k = g.size as usize;
            let self_conjugate = (1..k).all(|i| w.m(i) == w.m(k - i));
            if !self_conjugate {
                RealityType::ComplexType
            } else if k % 4 == 2 && w.m(k / 2) % 2 == 1 {
                RealityType::QuaternionicType
            } else {
                RealityType::Real
            }
        }
        GroupFamily::Sp => {
            let odd_sum: u64 = (1..=l).step_by(2).map(|i| u64::from(w.m(i))).sum();
            if odd_sum.is_multiple_of(2) {
                RealityType::Real
            } else {
                RealityType::QuaternionicType
            }
        }
    };
    Ok(ty)
}

pub fn real_dim(g: &GroupDescriptor, w: &DominantWeight) -> Result<RealIrrepInfo, RealityError> {
    let reality = reality_type(g, w)?;
    let complex_dim = weyl::dim_generic(w)?;
    let real_dim = match reality {
        RealityType::Real | RealityType::Undetermined => complex_dim.clone(),
        RealityType::ComplexType | RealityType::QuaternionicType => &complex_dim * 2u32,
    };
    Ok(RealIrrepInfo {
        weight: w.clone(),
        reality,
        complex_dim,
        real_dim,
        real_dim_is_lower_bound: reality == RealityType::Undetermined,
    })
}

/// Whether `w` is the defining representation (or, for `SU`, its
/// conjugate, which gives the same real representation).
pub fn is_standard(g: &GroupDescriptor, w: &DominantWeight) -> bool {
    let r = w.algebra().rank();
    let first = w.m(1) == 1 && w.coeffs()[1..].iter().all(|&c| c == 0);
    let last = g.family == GroupFamily::SU && w.m(r) == 1 && w.coeffs()[..r - 1].iter().all(|&c| c == 0);
    first || last
}

/// Lower bound on the real dimension of a non-trivial, non-standard real
/// irreducible representation: `k(k-1)/2` for `SO(k)`, `k >= 7`;
/// `k(k-1)` for `SU(k)`, `k >= 5`; `k(2k-1) - 1` for `Sp(k)`, `k >= 3`.
pub fn min_dim_nonstandard(g: &GroupDescriptor) -> Result<BigUint, RealityError> {
    let k = g.size;
    let v = match g.family {
        GroupFamily::SO if k >= 7 => k * (k - 1) / 2,
        GroupFamily::SU if k >= 5 => k * (k - 1),
        GroupFamily::Sp if k >= 3 => k * (2 * k - 1) - 1,
        _ => return Err(RealityError::OutOfHypothesis { op: "min_dim_nonstandard", group: *g }),
    };
    Ok(v.into())
}

/// The weight attaining [`min_dim_nonstandard`]: `omega_2` in every family
/// (realified for `SU`, and for `Sp` the exterior square minus the trivial
/// line of the symplectic form).
pub fn nonstandard_minimizer(g: &GroupDescriptor) -> Result<DominantWeight, RealityError> {
    min_dim_nonstandard(g)?;
    Ok(DominantWeight::fundamental(g.algebra()?, 2, 1))
}

/// Lower bound on the real dimension of a representation whose class is
/// not a polynomial in exterior powers (for `SU`, not of the symmetric
/// form in `lambda^i` and their conjugates).
///
/// `SO(k)`: only `k = 0 mod 4` admits such representations, bounded by
/// `dim lambda^{k/2}_+ = C(k, k/2) / 2`. `SU(k)`: defined for `k` even,
/// `C(k, k/2)`. `None` means every representation is expressible.
pub fn min_dim_nonexterior(g: &GroupDescriptor) -> Result<Option<BigUint>, RealityError> {
    let k = g.size;
    match g.family {
        GroupFamily::SO if k.is_multiple_of(4) => Ok(Some(binomial(k, k / 2) / 2u32)),
        GroupFamily::SO => Ok(None),
        GroupFamily::SU if k.is_multiple_of(2) => Ok(Some(binomial(k, k / 2))),
        GroupFamily::SU => Ok(None),
        GroupFamily::Sp => Err(RealityError::OutOfHypothesis { op: "min_dim_nonexterior", group: *g }),
    }
}

/// The competing literal reading `C(k/2, k/4) / 2` of the `SO` bound.
/// It is a valid but far from tight lower bound; kept so reports can show
/// which reading the enumeration supports.
pub fn min_dim_nonexterior_literal_so(k: u64) -> Option<BigUint> {
    k.is_multiple_of(4).then(|| binomial(k / 2, k / 4) / 2u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpressibleReason {
    /// Complex or quaternionic type: the real representation complexifies
    /// to `V + conj(V)`, which is symmetric in the conjugation swap.
    ConjugatePair,
    /// `SO(2l+1)`: every real representation is a polynomial in `lambda^j`.
    OddOrthogonal,
    /// `SO(4j+2)`: the real representation ring is polynomial in exterior
    /// powers. `SU(k)` with `k` not divisible by 4 behaves likewise.
    NoRealMiddlePower,
    /// The coefficients on the middle (half-spin) weights are too small.
    SmallMiddleCoefficient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExteriorCertificate {
    Expressible(ExpressibleReason),
    /// The weight matches the only pattern that can fail: coefficient
    /// `coeff` on `omega_index`. The converse is not established; the
    /// dimension of any such weight is still bounded below by
    /// [`min_dim_nonexterior`].
    PossibleFailure { index: usize, coeff: u32 },
}

impl ExteriorCertificate {
    pub fn is_failure(&self) -> bool {
        matches!(self, ExteriorCertificate::PossibleFailure { .. })
    }
}

/// Exterior-power expressibility of the real representation determined by
/// `w`, for `SO(k)` and `SU(k)`.
pub fn exterior_certificate(g: &GroupDescriptor, w: &DominantWeight) -> Result<ExteriorCertificate, RealityError> {
    use ExpressibleReason::*;
    let ty = reality_type(g, w)?;
    let k = g.size as usize;
    let l = w.algebra().rank();
    let cert = match g.family {
        GroupFamily::Sp => {
            return Err(RealityError::OutOfHypothesis { op: "exterior_certificate", group: *g });
        }
        GroupFamily::SO if k % 2 == 1 => ExteriorCertificate::Expressible(OddOrthogonal),
        GroupFamily::SO if k % 4 == 2 => ExteriorCertificate::Expressible(NoRealMiddlePower),
        GroupFamily::SO => {
            if w.m(l) >= 2 {
                ExteriorCertificate::PossibleFailure { index: l, coeff: w.m(l) }
            } else if w.m(l - 1) >= 2 {
                ExteriorCertificate::PossibleFailure { index: l - 1, coeff: w.m(l - 1) }
            } else {
                ExteriorCertificate::Expressible(SmallMiddleCoefficient)
            }
        }
        GroupFamily::SU => {
            if ty != RealityType::Real {
                ExteriorCertificate::Expressible(ConjugatePair)
            } else if !k.is_multiple_of(4) {
                ExteriorCertificate::Expressible(NoRealMiddlePower)
            } else if w.m(k / 2) >= 1 {
                ExteriorCertificate::PossibleFailure { index: k / 2, coeff: w.m(k / 2) }
            } else {
                ExteriorCertificate::Expressible(SmallMiddleCoefficient)
            }
        }
    };
    Ok(cert)
}

/// [`exterior_certificate`] restricted to `SU(k)`: whether the class is of
/// the conjugation-symmetric polynomial form.
pub fn is_form_43(g: &GroupDescriptor, w: &DominantWeight) -> Result<ExteriorCertificate, RealityError> {
    if g.family != GroupFamily::SU {
        return Err(RealityError::OutOfHypothesis { op: "is_form_43", group: *g });
    }
    exterior_certificate(g, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &GroupDescriptor, coeffs: &[u32]) -> DominantWeight {
        DominantWeight::new(g.algebra().unwrap(), coeffs.to_vec()).unwrap()
    }

    #[test]
    fn family_rules() {
        let so7 = GroupDescriptor::so(7);
        assert_eq!(reality_type(&so7, &w(&so7, &[0, 1, 0])), Ok(RealityType::Real));
        assert!(matches!(reality_type(&so7, &w(&so7, &[0, 0, 1])), Err(RealityError::SpinOnly { .. })));

        let su4 = GroupDescriptor::su(4);
        assert_eq!(reality_type(&su4, &w(&su4, &[1, 0, 0])), Ok(RealityType::ComplexType));
        assert_eq!(reality_type(&su4, &w(&su4, &[0, 1, 0])), Ok(RealityType::Real));
        let su6 = GroupDescriptor::su(6);
        assert_eq!(reality_type(&su6, &w(&su6, &[0, 0, 1, 0, 0])), Ok(RealityType::QuaternionicType));
        assert_eq!(reality_type(&su6, &w(&su6, &[0, 0, 2, 0, 0])), Ok(RealityType::Real));

        let sp3 = GroupDescriptor::sp(3);
        assert_eq!(reality_type(&sp3, &w(&sp3, &[1, 0, 0])), Ok(RealityType::QuaternionicType));
        assert_eq!(reality_type(&sp3, &w(&sp3, &[0, 1, 0])), Ok(RealityType::Real));
        assert_eq!(reality_type(&sp3, &w(&sp3, &[1, 0, 1])), Ok(RealityType::Real));

        let so10 = GroupDescriptor::so(10);
        assert_eq!(reality_type(&so10, &w(&so10, &[0, 0, 0, 2, 0])), Ok(RealityType::Undetermined));
        assert_eq!(reality_type(&so10, &w(&so10, &[0, 0, 0, 1, 1])), Ok(RealityType::Real));
        assert!(matches!(
            reality_type(&so10, &w(&so10, &[0, 0, 0, 1, 0])),
            Err(RealityError::SpinOnly { .. })
        ));
        let so8 = GroupDescriptor::so(8);
        assert_eq!(reality_type(&so8, &w(&so8, &[0, 0, 2, 0])), Ok(RealityType::Real));
    }

    #[test]
    fn mismatched_algebra() {
        let so7 = GroupDescriptor::so(7);
        let su4 = GroupDescriptor::su(4);
        assert!(matches!(
            reality_type(&so7, &w(&su4, &[1, 0, 0])),
            Err(RealityError::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn real_dimensions() {
        let su4 = GroupDescriptor::su(4);
        let info = real_dim(&su4, &w(&su4, &[0, 1, 0])).unwrap();
        assert_eq!((info.real_dim, info.reality), (6u32.into(), RealityType::Real));
        let su5 = GroupDescriptor::su(5);
        let info = real_dim(&su5, &w(&su5, &[0, 1, 0, 0])).unwrap();
        assert_eq!((info.real_dim, info.reality), (20u32.into(), RealityType::ComplexType));
        let sp3 = GroupDescriptor::sp(3);
        let info = real_dim(&sp3, &w(&sp3, &[0, 1, 0])).unwrap();
        assert_eq!((info.real_dim, info.reality), (14u32.into(), RealityType::Real));
        let so10 = GroupDescriptor::so(10);
        let info = real_dim(&so10, &w(&so10, &[0, 0, 0, 2, 0])).unwrap();
        assert!(info.real_dim_is_lower_bound);
        assert_eq!(info.real_dim, info.complex_dim);
    }

    #[test]
    fn minima() {
        assert_eq!(min_dim_nonstandard(&GroupDescriptor::so(7)), Ok(21u32.into()));
        assert_eq!(min_dim_nonstandard(&GroupDescriptor::su(5)), Ok(20u32.into()));
        assert_eq!(min_dim_nonstandard(&GroupDescriptor::sp(3)), Ok(14u32.into()));
        assert!(min_dim_nonstandard(&GroupDescriptor::so(6)).is_err());
        assert!(min_dim_nonstandard(&GroupDescriptor::su(4)).is_err());
        assert!(min_dim_nonstandard(&GroupDescriptor::sp(2)).is_err());

        assert_eq!(min_dim_nonexterior(&GroupDescriptor::so(8)), Ok(Some(35u32.into())));
        assert_eq!(min_dim_nonexterior_literal_so(8), Some(3u32.into()));
        assert_eq!(min_dim_nonexterior(&GroupDescriptor::su(8)), Ok(Some(70u32.into())));
        assert_eq!(min_dim_nonexterior(&GroupDescriptor::so(6)), Ok(None));
        assert!(min_dim_nonexterior(&GroupDescriptor::sp(4)).is_err());
    }

    #[test]
    fn form_43_certificates() {
        let su4 = GroupDescriptor::su(4);
        assert_eq!(
            is_form_43(&su4, &w(&su4, &[0, 1, 0])),
            Ok(ExteriorCertificate::PossibleFailure { index: 2, coeff: 1 })
        );
        assert_eq!(
            is_form_43(&su4, &w(&su4, &[1, 0, 0])),
            Ok(ExteriorCertificate::Expressible(ExpressibleReason::ConjugatePair))
        );
        let su8 = GroupDescriptor::su(8);
        assert!(is_form_43(&su8, &w(&su8, &[0, 0, 0, 1, 0, 0, 0])).unwrap().is_failure());
        assert!(!is_form_43(&su8, &w(&su8, &[1, 0, 0, 0, 0, 0, 1])).unwrap().is_failure());
        assert!(is_form_43(&GroupDescriptor::so(8), &w(&GroupDescriptor::so(8), &[1, 0, 0, 0])).is_err());
    }
}
