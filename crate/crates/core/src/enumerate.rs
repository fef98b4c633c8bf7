//! Exhaustive enumeration of dominant weights below a dimension bound.
//!
//! The complex dimension is monotone in each coefficient, so the set
//! `{ w : dim V(w) <= bound }` is closed under lowering coefficients. The
//! search fixes coefficients from the highest index down and stops raising
//! a coefficient as soon as the dimension (with all lower coefficients at
//! zero) passes the bound; nothing below the bound is skipped.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::group::{GroupDescriptor, GroupFamily};
use crate::reality::{
    self, descends, exterior_certificate, min_dim_nonexterior, min_dim_nonexterior_literal_so, min_dim_nonstandard,
    nonstandard_minimizer, RealIrrepInfo, RealityError,
};
use crate::weyl::{self, AlgebraType, DominantWeight, LieFamily, WeylError};

pub const DEFAULT_CAP: usize = 1_000_000;

/// Largest algebra rank the verification batteries accept.
pub const DESK_SCALE_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("more than {cap} weights below the bound; raise the cap or lower the bound")]
    Overflow { cap: usize },
    #[error("descent filter {filter} does not apply to {algebra}")]
    FilterMismatch { filter: GroupFamily, algebra: AlgebraType },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub algebra: AlgebraType,
    pub max_complex_dim: BigUint,
    /// Keep only weights that are representations of this family's group
    /// (parity conditions for `SO`; no restriction for `SU`, `Sp`).
    pub filter: Option<GroupFamily>,
    pub cap: usize,
}

impl EnumerationRequest {
    pub fn new(algebra: AlgebraType, max_complex_dim: impl Into<BigUint>) -> Self {
        Self { algebra, max_complex_dim: max_complex_dim.into(), filter: None, cap: DEFAULT_CAP }
    }

    pub fn with_filter(mut self, filter: GroupFamily) -> Self {
        self.filter = Some(filter);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// The group whose representations `filter` selects among the weights of
/// `algebra`.
pub fn filter_group(filter: GroupFamily, algebra: AlgebraType) -> Result<GroupDescriptor, EnumerateError> {
    let r = algebra.rank() as u64;
    let g = match (filter, algebra.family()) {
        (GroupFamily::SO, LieFamily::B) => GroupDescriptor::so(2 * r + 1),
        (GroupFamily::SO, LieFamily::D) => GroupDescriptor::so(2 * r),
        (GroupFamily::SU, LieFamily::A) => GroupDescriptor::su(r + 1),
        (GroupFamily::Sp, LieFamily::C) => GroupDescriptor::sp(r),
        _ => return Err(EnumerateError::FilterMismatch { filter, algebra }),
    };
    Ok(g)
}

struct Search<'a> {
    algebra: AlgebraType,
    bound: &'a BigUint,
    group: Option<GroupDescriptor>,
    cap: usize,
    coeffs: Vec<u32>,
    out: Vec<(DominantWeight, BigUint)>,
}

impl Search<'_> {
    fn weight(&self) -> DominantWeight {
        DominantWeight::new(self.algebra, self.coeffs.clone()).expect("length matches rank")
    }

    /// Fills positions `0..open` given that positions `open..` are fixed and
    /// the current vector (zeros below) has dimension `dim`.
    fn fill(&mut self, open: usize, dim: BigUint) -> Result<(), EnumerateError> {
        if open == 0 {
            let w = self.weight();
            if self.group.is_none_or(|g| descends(&g, &w)) {
                if self.out.len() == self.cap {
                    return Err(EnumerateError::Overflow { cap: self.cap });
                }
                self.out.push((w, dim));
            }
            return Ok(());
        }
        let idx = open - 1;
        let mut dim = dim;
        loop {
            self.fill(idx, dim)?;
            self.coeffs[idx] += 1;
            dim = weyl::dim(&self.weight());
            if &dim > self.bound {
                break;
            }
        }
        self.coeffs[idx] = 0;
        Ok(())
    }
}

/// Every dominant weight with `dim_C <= max_complex_dim` passing the
/// descent filter, sorted by `(dim, coefficients)`.
pub fn enumerate_weights(req: &EnumerationRequest) -> Result<Vec<(DominantWeight, BigUint)>, EnumerateError> {
    let group = req.filter.map(|f| filter_group(f, req.algebra)).transpose()?;
    let zero = DominantWeight::zero(req.algebra);
    let base = weyl::dim(&zero);
    if base > req.max_complex_dim {
        return Ok(Vec::new());
    }
    let mut search = Search {
        algebra: req.algebra,
        bound: &req.max_complex_dim,
        group,
        cap: req.cap,
        coeffs: zero.coeffs().to_vec(),
        out: Vec::new(),
    };
    search.fill(req.algebra.rank(), base)?;
    let mut out = search.out;
    out.sort_by(|(wa, da), (wb, db)| da.cmp(db).then_with(|| wa.coeffs().cmp(wb.coeffs())));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Reality(#[from] RealityError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("{group} has rank above the verification limit {DESK_SCALE_RANK}")]
    TooLarge { group: GroupDescriptor },
    #[error("{weight} has real dimension {real_dim} below the bound {bound}")]
    BelowBound { weight: DominantWeight, real_dim: BigUint, bound: BigUint },
    #[error("bound {bound} is not attained by {weight} (real dimension {real_dim})")]
    NotAttained { weight: DominantWeight, real_dim: BigUint, bound: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonstandardReport {
    pub group: GroupDescriptor,
    pub bound: BigUint,
    pub minimizer: RealIrrepInfo,
    /// Non-trivial real irreducibles strictly below the bound; only the
    /// standard representation may appear.
    pub below_bound: Vec<RealIrrepInfo>,
    /// Non-standard real irreducibles with real dimension equal to the bound.
    pub attaining: Vec<RealIrrepInfo>,
}

impl NonstandardReport {
    /// Minimum real dimension over non-trivial non-standard irreducibles.
    pub fn observed_min(&self) -> Option<&BigUint> {
        self.attaining.first().map(|i| &i.real_dim)
    }
}

fn real_irreps_up_to(g: &GroupDescriptor, bound: &BigUint) -> Result<Vec<RealIrrepInfo>, VerifyError> {
    let alg = g.algebra()?;
    if alg.rank() > DESK_SCALE_RANK {
        return Err(VerifyError::TooLarge { group: *g });
    }
    let req = EnumerationRequest::new(alg, bound.clone()).with_filter(g.family);
    let mut infos = Vec::new();
    for (w, _) in enumerate_weights(&req)? {
        let info = reality::real_dim(g, &w)?;
        if &info.real_dim <= bound {
            infos.push(info);
        }
    }
    infos.sort_by(|a, b| a.real_dim.cmp(&b.real_dim).then_with(|| a.weight.cmp(&b.weight)));
    Ok(infos)
}

/// Checks by enumeration that every non-trivial real irreducible of `g`
/// other than the standard one has real dimension at least
/// [`min_dim_nonstandard`], and that `omega_2` attains it.
pub fn verify_min_nonstandard(g: &GroupDescriptor) -> Result<NonstandardReport, VerifyError> {
    let bound = min_dim_nonstandard(g)?;
    let minimizer = reality::real_dim(g, &nonstandard_minimizer(g)?)?;
    let mut below_bound = Vec::new();
    let mut attaining = Vec::new();
    for info in real_irreps_up_to(g, &bound)? {
        if info.weight.is_zero() {
            continue;
        }
        let standard = reality::is_standard(g, &info.weight);
        if info.real_dim < bound {
            if !standard {
                return Err(VerifyError::BelowBound { weight: info.weight, real_dim: info.real_dim, bound });
            }
            below_bound.push(info);
        } else if !standard {
            attaining.push(info);
        }
    }
    if minimizer.real_dim != bound || !attaining.contains(&minimizer) {
        return Err(VerifyError::NotAttained { weight: minimizer.weight, real_dim: minimizer.real_dim, bound });
    }
    Ok(NonstandardReport { group: *g, bound, minimizer, below_bound, attaining })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexteriorReport {
    pub group: GroupDescriptor,
    /// `C(k, k/2)/2` for `SO(k)`, `C(k, k/2)` for `SU(k)`.
    pub bound: BigUint,
    /// `C(k/2, k/4)/2`, reported for `SO(k)` only.
    pub literal_bound: Option<BigUint>,
    /// Weights flagged as possibly non-expressible with real dimension at
    /// most `bound`, ascending.
    pub witnesses: Vec<RealIrrepInfo>,
}

impl NonexteriorReport {
    pub fn observed_min(&self) -> Option<&BigUint> {
        self.witnesses.first().map(|i| &i.real_dim)
    }

    pub fn attained(&self) -> bool {
        self.observed_min() == Some(&self.bound)
    }

    pub fn literal_bound_attained(&self) -> bool {
        self.literal_bound.is_some() && self.observed_min() == self.literal_bound.as_ref()
    }
}

/// Enumerates the weights of `g` that fail the exterior-power sufficient
/// conditions and checks none has real dimension below
/// [`min_dim_nonexterior`].
///
/// Whether the bound is attained is reported, not asserted: for
/// `SU(k)` with `k = 2 mod 4` no weight is flagged at all.
pub fn verify_min_nonexterior(g: &GroupDescriptor) -> Result<NonexteriorReport, VerifyError> {
    let bound = min_dim_nonexterior(g)?
        .ok_or(RealityError::OutOfHypothesis { op: "verify_min_nonexterior", group: *g })?;
    let literal_bound = match g.family {
        GroupFamily::SO => min_dim_nonexterior_literal_so(g.size),
        _ => None,
    };
    let mut witnesses = Vec::new();
    for info in real_irreps_up_to(g, &bound)? {
        if !exterior_certificate(g, &info.weight)?.is_failure() {
            continue;
        }
        if info.real_dim < bound {
            return Err(VerifyError::BelowBound { weight: info.weight, real_dim: info.real_dim, bound });
        }
        witnesses.push(info);
    }
    Ok(NonexteriorReport { group: *g, bound, literal_bound, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(f: LieFamily, r: usize) -> AlgebraType {
        AlgebraType::new(f, r).unwrap()
    }

    fn coeff_table(v: &[(DominantWeight, BigUint)]) -> Vec<(Vec<u32>, u64)> {
        v.iter()
            .map(|(w, d)| (w.coeffs().to_vec(), u64::try_from(d).unwrap()))
            .collect()
    }

    #[test]
    fn b3_below_seven() {
        let req = EnumerationRequest::new(alg(LieFamily::B, 3), 7u32).with_filter(GroupFamily::SO);
        let got = coeff_table(&enumerate_weights(&req).unwrap());
        assert_eq!(got, [(alloc::vec![0, 0, 0], 1), (alloc::vec![1, 0, 0], 7)]);
    }

    #[test]
    fn a3_below_six() {
        let req = EnumerationRequest::new(alg(LieFamily::A, 3), 6u32);
        let got = coeff_table(&enumerate_weights(&req).unwrap());
        assert_eq!(
            got,
            [
                (alloc::vec![0, 0, 0], 1),
                (alloc::vec![0, 0, 1], 4),
                (alloc::vec![1, 0, 0], 4),
                (alloc::vec![0, 1, 0], 6),
            ]
        );
    }

    #[test]
    fn zero_bound_is_empty() {
        for f in LieFamily::ALL {
            let req = EnumerationRequest::new(alg(f, 4), 0u32);
            assert!(enumerate_weights(&req).unwrap().is_empty());
        }
    }

    #[test]
    fn cap_is_an_error_not_a_truncation() {
        let req = EnumerationRequest::new(alg(LieFamily::A, 2), 1000u32).with_cap(10);
        assert_eq!(enumerate_weights(&req), Err(EnumerateError::Overflow { cap: 10 }));
    }

    #[test]
    fn filter_must_match() {
        let req = EnumerationRequest::new(alg(LieFamily::A, 3), 10u32).with_filter(GroupFamily::SO);
        assert!(matches!(enumerate_weights(&req), Err(EnumerateError::FilterMismatch { .. })));
    }

    #[test]
    fn sp3_nonstandard() {
        let report = verify_min_nonstandard(&GroupDescriptor::sp(3)).unwrap();
        assert_eq!(report.bound, 14u32.into());
        let below: Vec<_> = report.below_bound.iter().map(|i| (i.weight.coeffs().to_vec(), i.real_dim.clone())).collect();
        assert_eq!(below, [(alloc::vec![1, 0, 0], 12u32.into())]);
    }

    #[test]
    fn nonexterior_reports() {
        let so8 = verify_min_nonexterior(&GroupDescriptor::so(8)).unwrap();
        assert!(so8.attained());
        assert!(!so8.literal_bound_attained());
        let su6 = verify_min_nonexterior(&GroupDescriptor::su(6)).unwrap();
        assert!(su6.witnesses.is_empty());
        assert!(verify_min_nonexterior(&GroupDescriptor::so(10)).is_err());
    }
}
