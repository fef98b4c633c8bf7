//! JSON records emitted by the command-line tool. Field order is fixed by
//! declaration order, so serialized output is byte-stable.

use gstruct_core::classify::{DivisibilityTrace, HomDescriptor, Summand};
use gstruct_core::kocheck::{KoGroup, KoGroupInfo};
use gstruct_core::reality::RealIrrepInfo;
use gstruct_core::{DominantWeight, FactoredInteger, GroupDescriptor, ReductionVerdict};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// A factored integer with its full decimal expansion as a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factored {
    pub decimal: String,
    pub factors: Vec<PrimePower>,
}

impl From<&FactoredInteger> for Factored {
    fn from(f: &FactoredInteger) -> Self {
        Self {
            decimal: f.to_biguint().to_str_radix(10),
            factors: f.factors().map(|(prime, exponent)| PrimePower { prime, exponent }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub family: String,
    pub size: u64,
}

impl From<&GroupDescriptor> for Group {
    fn from(g: &GroupDescriptor) -> Self {
        Self { family: g.family.as_str().into(), size: g.size }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRecord {
    pub irrep: String,
    pub form: String,
    pub dim: u64,
    pub multiplicity: u64,
}

impl From<&Summand> for SummandRecord {
    fn from(s: &Summand) -> Self {
        Self { irrep: s.irrep.clone(), form: s.form.as_str().into(), dim: s.dim, multiplicity: s.multiplicity }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomRecord {
    pub kind: String,
    pub summands: Vec<SummandRecord>,
}

impl From<&HomDescriptor> for HomRecord {
    fn from(h: &HomDescriptor) -> Self {
        Self { kind: h.kind.as_str().into(), summands: h.summands.iter().map(Into::into).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub m: u64,
    pub d: u64,
    pub modulus: Factored,
    pub remainder: String,
}

impl From<&DivisibilityTrace> for TraceRecord {
    fn from(t: &DivisibilityTrace) -> Self {
        Self { m: t.m, d: t.d, modulus: (&t.modulus).into(), remainder: t.remainder.to_str_radix(10) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub target: Group,
    pub source: Group,
    pub reducible: bool,
    pub reason: String,
    pub case: Option<String>,
    pub m: Option<u64>,
    pub d: Option<u64>,
    pub modulus: Option<Factored>,
    pub homs: Vec<HomRecord>,
    pub trace: Option<TraceRecord>,
}

impl From<&ReductionVerdict> for VerdictRecord {
    fn from(v: &ReductionVerdict) -> Self {
        Self {
            target: (&v.query.target).into(),
            source: (&v.query.source).into(),
            reducible: v.reducible,
            reason: v.reason.as_str().into(),
            case: v.case.map(|c| c.as_str().into()),
            m: v.m,
            d: v.d,
            modulus: v.trace.as_ref().map(|t| (&t.modulus).into()),
            homs: v.homs.iter().map(Into::into).collect(),
            trace: v.trace.as_ref().map(Into::into),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoRecord {
    pub n: u64,
    pub k: u64,
    /// `cyclic`, `zero-projection` or `not-computed`.
    pub group: String,
    pub order: Option<String>,
    pub psi3_exponent: Option<u64>,
    pub psi3_multiplier: Option<String>,
    pub fixed_generator: bool,
}

impl KoRecord {
    pub fn new(info: &KoGroupInfo, fixed_generator: bool) -> Self {
        let (group, order, psi3_exponent) = match &info.group {
            KoGroup::Cyclic { order, psi3_exponent } => ("cyclic", Some(order.to_str_radix(10)), Some(*psi3_exponent)),
            KoGroup::ZeroProjection => ("zero-projection", None, None),
            KoGroup::NotComputed => ("not-computed", None, None),
        };
        Self {
            n: info.n,
            k: info.k,
            group: group.into(),
            order,
            psi3_exponent,
            psi3_multiplier: info.psi3_multiplier().map(|m| m.to_str_radix(10)),
            fixed_generator,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealDimRecord {
    pub group: Group,
    pub weight: Vec<u32>,
    pub reality: String,
    pub complex_dim: String,
    pub real_dim: String,
    pub real_dim_is_lower_bound: bool,
}

impl RealDimRecord {
    pub fn new(g: &GroupDescriptor, info: &RealIrrepInfo) -> Self {
        Self {
            group: g.into(),
            weight: info.weight.coeffs().to_vec(),
            reality: info.reality.as_str().into(),
            complex_dim: info.complex_dim.to_str_radix(10),
            real_dim: info.real_dim.to_str_radix(10),
            real_dim_is_lower_bound: info.real_dim_is_lower_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub weight: Vec<u32>,
    pub label: String,
    pub dim: String,
}

impl WeightRecord {
    pub fn new(w: &DominantWeight, dim: &BigUint) -> Self {
        Self { weight: w.coeffs().to_vec(), label: w.label(), dim: dim.to_str_radix(10) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JamesRecord {
    pub function: String,
    pub r: u64,
    pub value: Factored,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    pub function: String,
    pub n: u64,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylDimRecord {
    pub algebra: String,
    pub weight: Vec<u32>,
    pub generic: Option<String>,
    pub specialized: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinKRecord {
    pub target: Group,
    pub source_family: String,
    pub min_k: Option<u64>,
}
