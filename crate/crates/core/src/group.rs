use core::fmt;
use core::str::FromStr;

use crate::james::SphereFamily;
use crate::weyl::{AlgebraType, LieFamily, WeylError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamily {
    SO,
    SU,
    Sp,
}

impl GroupFamily {
    pub fn sphere_family(self) -> SphereFamily {
        match self {
            GroupFamily::SO => SphereFamily::Real,
            GroupFamily::SU => SphereFamily::Complex,
            GroupFamily::Sp => SphereFamily::Quaternionic,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GroupFamily::SO => "SO",
            GroupFamily::SU => "SU",
            GroupFamily::Sp => "Sp",
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown group family {0:?} (expected SO, SU or Sp)")]
pub struct ParseFamilyError(pub alloc::string::String);

impl FromStr for GroupFamily {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "SO" | "so" => Ok(GroupFamily::SO),
            "SU" | "su" => Ok(GroupFamily::SU),
            "Sp" | "SP" | "sp" => Ok(GroupFamily::Sp),
            _ => Err(ParseFamilyError(s.into())),
        }
    }
}

/// One of `SO(k)`, `SU(k)`, `Sp(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDescriptor {
    pub family: GroupFamily,
    pub size: u64,
}

impl GroupDescriptor {
    pub const fn new(family: GroupFamily, size: u64) -> Self {
        Self { family, size }
    }

    pub const fn so(size: u64) -> Self {
        Self::new(GroupFamily::SO, size)
    }

    pub const fn su(size: u64) -> Self {
        Self::new(GroupFamily::SU, size)
    }

    pub const fn sp(size: u64) -> Self {
        Self::new(GroupFamily::Sp, size)
    }

    /// Dimension of the group as a manifold.
    pub fn dim(&self) -> u128 {
        let k = u128::from(self.size);
        match self.family {
            GroupFamily::SO => k * k.saturating_sub(1) / 2,
            GroupFamily::SU => (k * k).saturating_sub(1),
            GroupFamily::Sp => k * (2 * k + 1),
        }
    }

    /// Real dimension of the defining representation.
    pub fn defining_real_dim(&self) -> u64 {
        self.size * self.family.sphere_family().d()
    }

    /// Dimension of the sphere `G(n+1)/G(n)` for `G(n) = self`.
    pub fn sphere_dim(&self) -> u64 {
        self.family.sphere_family().d() * (self.size + 1) - 1
    }

    /// The simple Lie algebra whose dominant weights index the complex
    /// irreducible representations of this group.
    pub fn algebra(&self) -> Result<AlgebraType, WeylError> {
        let k = self.size;
        match self.family {
            GroupFamily::SO if k % 2 == 1 => AlgebraType::new(LieFamily::B, (k / 2) as usize),
            GroupFamily::SO => AlgebraType::new(LieFamily::D, (k / 2) as usize),
            GroupFamily::SU => AlgebraType::new(LieFamily::A, k.saturating_sub(1) as usize),
            GroupFamily::Sp => AlgebraType::new(LieFamily::C, k as usize),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.size)
    }
}
