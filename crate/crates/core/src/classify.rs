//! Which homomorphisms `rho: G -> G(n)` reduce the structure group of
//! `G(n) -> G(n+1) -> S^{d(n+1)-1}`, for `G` and `G(n)` among `SO`, `SU`,
//! `Sp`.
//!
//! Under the standing hypotheses (sphere of dimension at least 8,
//! `dim G < dim G(n)`, `k >= 4` for `SO(k)` and `k >= 2` otherwise) a
//! reduction exists exactly in six family pairs, each governed by a
//! divisibility condition on `m` where `n = d m - 1`:
//!
//! | case | target | source | `d` | modulus |
//! |------|--------|--------|-----|---------|
//! | A | `SO(n)` | `SO(k)` | 1 | `a(m-k)` |
//! | B | `SO(n)` | `SU(k)` | 2 | `2^{nu_2(b(m-k))}` |
//! | C | `SO(n)` | `Sp(k)` | 4 | `2^{nu_2(c(m-k))}` |
//! | D | `SU(n)` | `SU(k)` | 1 | `b(m-k)` |
//! | E | `SU(n)` | `Sp(k)` | 2 | `c(m-k)` |
//! | F | `Sp(n)` | `Sp(k)` | 1 | `c(m-k)` |
//!
//! The homomorphism is then the standard inclusion, plus two exceptional
//! ones into `SO(15)`: `SU(4) -> SO(8) x SO(6) -> SO(15)` and the exterior
//! square of `Sp(3)`. Even `n` admits no reduction for `SO` and `SU`
//! targets.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::group::{GroupDescriptor, GroupFamily};
use crate::james::{self, FactoredInteger};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("sphere dimension {sphere_dim} of {target} is below 8")]
    SphereTooSmall { target: GroupDescriptor, sphere_dim: u64 },
    #[error("dim {group} = {source_dim} is not below dim {target} = {target_dim}")]
    SourceNotSmaller { group: GroupDescriptor, source_dim: u128, target: GroupDescriptor, target_dim: u128 },
    #[error("{group} is below the rank floor k >= {floor}")]
    SourceBelowFloor { group: GroupDescriptor, floor: u64 },
}

impl ClassifyError {
    /// Short name of the violated hypothesis.
    pub fn hypothesis(&self) -> &'static str {
        match self {
            ClassifyError::SphereTooSmall { .. } => "sphere-dimension>=8",
            ClassifyError::SourceNotSmaller { .. } => "dim-G<dim-Gn",
            ClassifyError::SourceBelowFloor { .. } => "source-rank-floor",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Case {
    pub fn for_pair(target: GroupFamily, source: GroupFamily) -> Option<Case> {
        use GroupFamily::*;
        match (target, source) {
            (SO, SO) => Some(Case::A),
            (SO, SU) => Some(Case::B),
            (SO, Sp) => Some(Case::C),
            (SU, SU) => Some(Case::D),
            (SU, Sp) => Some(Case::E),
            (Sp, Sp) => Some(Case::F),
            _ => None,
        }
    }

    /// `n = d m - 1`.
    pub fn d(self) -> u64 {
        match self {
            Case::A | Case::D | Case::F => 1,
            Case::B | Case::E => 2,
            Case::C => 4,
        }
    }

    /// The number `m` must be divisible by, given `r = m - k >= 1`.
    pub fn modulus(self, r: u64) -> FactoredInteger {
        let t = match self {
            Case::A => james::hurwitz_radon_a(r),
            Case::B | Case::D => james::james_b(r),
            Case::C | Case::E | Case::F => james::james_c(r),
        }
        .expect("r >= 1");
        match self {
            Case::B | Case::C => t.two_part(),
            _ => t,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::D => "D",
            Case::E => "E",
            Case::F => "F",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReductionQuery {
    pub target: GroupDescriptor,
    pub source: GroupDescriptor,
}

impl ReductionQuery {
    pub fn new(target: GroupDescriptor, source: GroupDescriptor) -> Self {
        Self { target, source }
    }

    pub fn check_hypotheses(&self) -> Result<(), ClassifyError> {
        check_target(&self.target)?;
        let floor = match self.source.family {
            GroupFamily::SO => 4,
            GroupFamily::SU | GroupFamily::Sp => 2,
        };
        if self.source.size < floor {
            return Err(ClassifyError::SourceBelowFloor { group: self.source, floor });
        }
        let (source_dim, target_dim) = (self.source.dim(), self.target.dim());
        if source_dim >= target_dim {
            return Err(ClassifyError::SourceNotSmaller {
                group: self.source,
                source_dim,
                target: self.target,
                target_dim,
            });
        }
        Ok(())
    }
}

fn check_target(target: &GroupDescriptor) -> Result<(), ClassifyError> {
    let sphere_dim = target.sphere_dim();
    if sphere_dim < 8 {
        return Err(ClassifyError::SphereTooSmall { target: *target, sphere_dim });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomKind {
    StandardInclusion,
    /// `SU(4) -> SO(8) x SO(6) -> SO(15)`: standard inclusion on the first
    /// factor, `SU(4) = Spin(6) -> SO(6)` on the second.
    Su4SplitSo15,
    /// `lambda^2: Sp(3) -> SO(15)`.
    Sp3ExteriorSquareSo15,
}

impl HomKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HomKind::StandardInclusion => "STANDARD_INCLUSION",
            HomKind::Su4SplitSo15 => "SU4_SPLIT_SO15",
            HomKind::Sp3ExteriorSquareSo15 => "SP3_EXTERIOR_SQUARE_SO15",
        }
    }
}

/// How a summand sits in the target's defining representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SummandForm {
    /// A real representation (complexification irreducible).
    Real,
    /// The underlying real representation of a complex or quaternionic one.
    Realified,
    Complex,
    Quaternionic,
}

impl SummandForm {
    pub fn as_str(self) -> &'static str {
        match self {
            SummandForm::Real => "real",
            SummandForm::Realified => "realified",
            SummandForm::Complex => "complex",
            SummandForm::Quaternionic => "quaternionic",
        }
    }
}

/// `multiplicity` copies of the irreducible `irrep`, each of dimension
/// `dim` over the target's field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Summand {
    pub irrep: String,
    pub form: SummandForm,
    pub dim: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomDescriptor {
    pub kind: HomKind,
    pub summands: Vec<Summand>,
}

impl HomDescriptor {
    /// Dimension of the target's defining representation covered by the
    /// summands, over the target's field.
    pub fn total_dim(&self) -> u64 {
        self.summands.iter().map(|s| s.dim * s.multiplicity).sum()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn summand_count(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictReason {
    DivisibilityHolds,
    DivisibilityFails,
    /// `n` even with an `SO` or `SU` target.
    EvenDimension,
    /// `n + 1` is not a multiple of `d`.
    ResidueMismatch,
    /// `k >= m`: the standard inclusion does not fit.
    SourceTooLarge,
    /// The family pair is none of the six cases.
    NoCase,
}

impl VerdictReason {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictReason::DivisibilityHolds => "divisibility-holds",
            VerdictReason::DivisibilityFails => "divisibility-fails",
            VerdictReason::EvenDimension => "even-dimension",
            VerdictReason::ResidueMismatch => "residue-mismatch",
            VerdictReason::SourceTooLarge => "source-too-large",
            VerdictReason::NoCase => "no-case",
        }
    }
}

/// The divisibility check `m = 0 mod modulus` that decided the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityTrace {
    pub m: u64,
    pub d: u64,
    pub modulus: FactoredInteger,
    pub remainder: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub query: ReductionQuery,
    pub reducible: bool,
    pub case: Option<Case>,
    pub m: Option<u64>,
    pub d: Option<u64>,
    pub reason: VerdictReason,
    pub trace: Option<DivisibilityTrace>,
    /// Standard inclusion first, exceptional homomorphisms after.
    pub homs: Vec<HomDescriptor>,
}

impl ReductionVerdict {
    fn no(query: ReductionQuery, case: Option<Case>, reason: VerdictReason) -> Self {
        Self { query, reducible: false, case, m: None, d: None, reason, trace: None, homs: Vec::new() }
    }
}

fn summand(irrep: String, form: SummandForm, dim: u64, multiplicity: u64) -> Summand {
    Summand { irrep, form, dim, multiplicity }
}

fn first_fundamental(source: &GroupDescriptor) -> String {
    let rank = match source.family {
        GroupFamily::SO => source.size / 2,
        GroupFamily::SU => source.size - 1,
        GroupFamily::Sp => source.size,
    };
    let mut coeffs = vec!["0"; rank as usize];
    coeffs[0] = "1";
    format!("{}:V({})", source, coeffs.join(","))
}

fn trivial(n: u64) -> Summand {
    summand(String::from("trivial"), SummandForm::Real, 1, n)
}

fn standard_inclusion(case: Case, q: &ReductionQuery) -> HomDescriptor {
    let n = q.target.size;
    let k = q.source.size;
    let std = first_fundamental(&q.source);
    let (form, dim) = match case {
        Case::A => (SummandForm::Real, k),
        Case::B => (SummandForm::Realified, 2 * k),
        Case::C => (SummandForm::Realified, 4 * k),
        Case::D => (SummandForm::Complex, k),
        Case::E => (SummandForm::Complex, 2 * k),
        Case::F => (SummandForm::Quaternionic, k),
    };
    let mut filler = trivial(n - dim);
    filler.form = match case {
        Case::A | Case::B | Case::C => SummandForm::Real,
        Case::D | Case::E => SummandForm::Complex,
        Case::F => SummandForm::Quaternionic,
    };
    HomDescriptor { kind: HomKind::StandardInclusion, summands: vec![summand(std, form, dim, 1), filler] }
}

fn exceptional(q: &ReductionQuery) -> Option<HomDescriptor> {
    match (q.target, q.source) {
        (t, s) if t == GroupDescriptor::so(15) && s == GroupDescriptor::su(4) => Some(HomDescriptor {
            kind: HomKind::Su4SplitSo15,
            summands: vec![
                summand("SU(4):V(1,0,0)".into(), SummandForm::Realified, 8, 1),
                summand("SU(4):V(0,1,0)".into(), SummandForm::Real, 6, 1),
                trivial(1),
            ],
        }),
        (t, s) if t == GroupDescriptor::so(15) && s == GroupDescriptor::sp(3) => Some(HomDescriptor {
            kind: HomKind::Sp3ExteriorSquareSo15,
            summands: vec![summand("Sp(3):V(0,1,0)".into(), SummandForm::Real, 14, 1), trivial(1)],
        }),
        _ => None,
    }
}

/// Decides whether the structure group of the bundle over the sphere of
/// `q.target` reduces to `q.source`, and through which homomorphisms.
pub fn classify(q: &ReductionQuery) -> Result<ReductionVerdict, ClassifyError> {
    q.check_hypotheses()?;
    let Some(case) = Case::for_pair(q.target.family, q.source.family) else {
        return Ok(ReductionVerdict::no(*q, None, VerdictReason::NoCase));
    };
    let n = q.target.size;
    if q.target.family != GroupFamily::Sp && n.is_multiple_of(2) {
        return Ok(ReductionVerdict::no(*q, Some(case), VerdictReason::EvenDimension));
    }
    let d = case.d();
    if !(n + 1).is_multiple_of(d) {
        return Ok(ReductionVerdict::no(*q, Some(case), VerdictReason::ResidueMismatch));
    }
    let m = (n + 1) / d;
    let k = q.source.size;
    if k >= m {
        let mut v = ReductionVerdict::no(*q, Some(case), VerdictReason::SourceTooLarge);
        v.m = Some(m);
        v.d = Some(d);
        return Ok(v);
    }
    let modulus = case.modulus(m - k);
    let remainder = BigUint::from(m) % modulus.to_biguint();
    let reducible = remainder.is_zero();
    let mut homs = Vec::new();
    if reducible {
        homs.push(standard_inclusion(case, q));
        homs.extend(exceptional(q));
    }
    Ok(ReductionVerdict {
        query: *q,
        reducible,
        case: Some(case),
        m: Some(m),
        d: Some(d),
        reason: if reducible { VerdictReason::DivisibilityHolds } else { VerdictReason::DivisibilityFails },
        trace: Some(DivisibilityTrace { m, d, modulus, remainder }),
        homs,
    })
}

/// Least `k` for which the divisibility condition of the matching case
/// holds, over `k` from the family floor up to `m - 1`.
///
/// For a same-family pair the top of the range is `k = n`, the identity,
/// which is outside the `dim G < dim G(n)` hypothesis but is returned when
/// nothing smaller works. `None` when the pair has no case, `n` has the
/// wrong parity or residue, or no `k` qualifies.
pub fn min_source_rank(target: &GroupDescriptor, source: GroupFamily) -> Result<Option<u64>, ClassifyError> {
    check_target(target)?;
    let Some(case) = Case::for_pair(target.family, source) else {
        return Ok(None);
    };
    let n = target.size;
    if target.family != GroupFamily::Sp && n.is_multiple_of(2) {
        return Ok(None);
    }
    let d = case.d();
    if !(n + 1).is_multiple_of(d) {
        return Ok(None);
    }
    let m = (n + 1) / d;
    let floor = if source == GroupFamily::SO { 4 } else { 2 };
    Ok((floor..m).find(|&k| case.modulus(m - k).divides_u64(m)))
}

/// Whether some returned homomorphism is irreducible. Never true under the
/// hypotheses: every descriptor carries at least two summands.
pub fn irreducible_reduction_exists(q: &ReductionQuery) -> Result<bool, ClassifyError> {
    let verdict = classify(q)?;
    Ok(verdict.homs.iter().any(|h| h.summand_count() < 2))
}
