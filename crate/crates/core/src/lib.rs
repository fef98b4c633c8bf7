//! Exact arithmetic for structure-group reductions of the bundles
//! `G(n) -> G(n+1) -> S^{d(n+1)-1}` with `G` one of `SO`, `SU`, `Sp`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure
//! function of its arguments:
//!
//! * [`james`]: p-adic valuations, Hurwitz–Radon numbers, the complex and
//!   quaternionic James numbers, and the gap functions `j`, `j2`, `j4`.
//! * [`weyl`]: classical root systems and the Weyl dimension formula,
//!   evaluated twice (generic product over positive roots and the
//!   family-specific closed products).
//! * [`reality`]: reality types, real dimensions and the dimension minima
//!   of non-standard and non-exterior representations.
//! * [`enumerate`]: exhaustive enumeration of dominant weights below a
//!   dimension bound, pruned by monotonicity of the dimension.
//! * [`classify`]: the reduction decision procedure.
//! * [`kocheck`]: the connective `KO` group orders and the `psi^3`
//!   fixed-generator criterion for stunted real projective spaces.
//! * [`charclass`]: the ring `Z/2[t,x,y]/(t^2,x^4,y^2)` and the
//!   Stiefel–Whitney class identity for the exterior square of `Sp(3)`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod charclass;
pub mod classify;
pub mod enumerate;
pub mod group;
pub mod james;
pub mod kocheck;
pub mod reality;
pub mod weyl;

pub use charclass::TruncatedPoly;
pub use classify::{classify, min_source_rank, ReductionQuery, ReductionVerdict};
pub use group::{GroupDescriptor, GroupFamily};
pub use james::{FactoredInteger, SphereFamily};
pub use weyl::{AlgebraType, DominantWeight, LieFamily};
