//! Classical root systems and the Weyl dimension formula.
//!
//! Weights live in the usual orthonormal `epsilon` coordinates. Spinor
//! weights have half-integral coordinates, so every coordinate vector here
//! is stored doubled; the dimension formula is a ratio of inner products and
//! is unaffected by the scaling.
//!
//! Dimensions are computed two ways. [`dim_generic`] takes the product
//! over an explicit list of positive roots; [`dim_specialized`] evaluates
//! the closed product in the `g_i` for each family, whose denominators are
//! written out directly instead of being derived from `delta`. Both
//! accumulate an exact numerator and denominator and divide once.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("{family}{rank} is outside the supported range (A>=1, B>=2, C>=2, D>=4)")]
    RankOutOfRange { family: LieFamily, rank: usize },
    #[error("weight has {got} coefficients, algebra has rank {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("Weyl quotient {numerator}/{denominator} is not an integer")]
    NonIntegral { numerator: BigUint, denominator: BigUint },
    #[error("unknown closed-form case {0:?}")]
    UnknownCase(String),
    #[error("closed-form case {case} is not defined at rank {rank}")]
    CaseOutOfRange { case: ClosedFormCase, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
}

impl LieFamily {
    pub const ALL: [LieFamily; 4] = [LieFamily::A, LieFamily::B, LieFamily::C, LieFamily::D];

    pub fn min_rank(self) -> usize {
        match self {
            LieFamily::A => 1,
            LieFamily::B | LieFamily::C => 2,
            LieFamily::D => 4,
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for LieFamily {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(LieFamily::A),
            "B" | "b" => Ok(LieFamily::B),
            "C" | "c" => Ok(LieFamily::C),
            "D" | "d" => Ok(LieFamily::D),
            _ => Err(WeylError::UnknownCase(s.into())),
        }
    }
}

/// A classical simple Lie algebra `A_{k-1}`, `B_l`, `C_k` or `D_l`.
///
/// Low-rank coincidences (`D3 = A3`, `B1 = C1 = A1`, ...) are rejected
/// rather than aliased.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraType {
    family: LieFamily,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self, WeylError> {
        if rank < family.min_rank() {
            return Err(WeylError::RankOutOfRange { family, rank });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of epsilon coordinates: `k = rank + 1` for type A.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            LieFamily::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Doubled epsilon coordinates of the fundamental weight `omega_i`
    /// (1-based).
    pub fn fundamental_weight(&self, i: usize) -> Vec<i64> {
        assert!((1..=self.rank).contains(&i), "fundamental weight index {i} out of range");
        let n = self.ambient_dim();
        let l = self.rank;
        let mut v = alloc::vec![0i64; n];
        match self.family {
            LieFamily::B if i == l => v.iter_mut().for_each(|x| *x = 1),
            LieFamily::D if i == l - 1 => {
                v.iter_mut().for_each(|x| *x = 1);
                v[l - 1] = -1;
            }
            LieFamily::D if i == l => v.iter_mut().for_each(|x| *x = 1),
            _ => v[..i].iter_mut().for_each(|x| *x = 2),
        }
        v
    }

    /// Positive roots in epsilon coordinates (not doubled).
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.ambient_dim();
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                roots.push(Root::Difference(i, j));
                if self.family != LieFamily::A {
                    roots.push(Root::Sum(i, j));
                }
            }
            match self.family {
                LieFamily::B => roots.push(Root::Short(i)),
                LieFamily::C => roots.push(Root::Long(i)),
                _ => {}
            }
        }
        roots
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root, indices 0-based into the epsilon coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Root {
    /// `e_i - e_j`, `i < j`
    Difference(usize, usize),
    /// `e_i + e_j`, `i < j`
    Sum(usize, usize),
    /// `e_i`
    Short(usize),
    /// `2 e_i`
    Long(usize),
}

impl Root {
    pub fn pair(&self, v: &[i64]) -> i64 {
        match *self {
            Root::Difference(i, j) => v[i] - v[j],
            Root::Sum(i, j) => v[i] + v[j],
            Root::Short(i) => v[i],
            Root::Long(i) => 2 * v[i],
        }
    }
}

/// `omega = sum m_i omega_i` with every `m_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    algebra: AlgebraType,
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(algebra: AlgebraType, coeffs: Vec<u32>) -> Result<Self, WeylError> {
        if coeffs.len() != algebra.rank {
            return Err(WeylError::WrongLength { expected: algebra.rank, got: coeffs.len() });
        }
        Ok(Self { algebra, coeffs })
    }

    pub fn zero(algebra: AlgebraType) -> Self {
        Self { algebra, coeffs: alloc::vec![0; algebra.rank] }
    }

    /// `mult * omega_i` (1-based `i`).
    pub fn fundamental(algebra: AlgebraType, i: usize, mult: u32) -> Self {
        let mut w = Self::zero(algebra);
        w.coeffs[i - 1] = mult;
        w
    }

    /// Adds `mult * omega_i` (1-based `i`).
    pub fn plus(mut self, i: usize, mult: u32) -> Self {
        self.coeffs[i - 1] += mult;
        self
    }

    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// 1-based coefficient `m_i`.
    pub fn m(&self, i: usize) -> u32 {
        self.coeffs[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient-wise `self <= other`.
    pub fn le_coefficientwise(&self, other: &DominantWeight) -> bool {
        self.algebra == other.algebra && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    /// Label such as `V(1,0,2)`.
    pub fn label(&self) -> String {
        let mut s = String::from("V(");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s.push(')');
        s
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algebra, self.label())
    }
}

/// Doubled epsilon coordinates `2 g_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EpsilonVector {
    pub doubled: Vec<i64>,
}

/// `delta`, the sum of the fundamental weights.
pub fn delta_vector(algebra: AlgebraType) -> EpsilonVector {
    let mut doubled = alloc::vec![0i64; algebra.ambient_dim()];
    for i in 1..=algebra.rank {
        for (d, w) in doubled.iter_mut().zip(algebra.fundamental_weight(i)) {
            *d += w;
        }
    }
    EpsilonVector { doubled }
}

/// `omega + delta` in doubled epsilon coordinates.
pub fn weight_to_epsilon(w: &DominantWeight) -> EpsilonVector {
    let mut out = delta_vector(w.algebra);
    for (i, &m) in w.coeffs.iter().enumerate() {
        if m == 0 {
            continue;
        }
        for (d, f) in out.doubled.iter_mut().zip(w.algebra.fundamental_weight(i + 1)) {
            *d += i64::from(m) * f;
        }
    }
    out
}

#[derive(Default)]
struct Quotient {
    num: BigUint,
    den: BigUint,
}

impl Quotient {
    fn new() -> Self {
        Self { num: BigUint::one(), den: BigUint::one() }
    }

    fn mul(&mut self, num: i64, den: i64) {
        assert!(num > 0 && den > 0, "non-positive Weyl factor {num}/{den}");
        self.num *= num as u64;
        self.den *= den as u64;
    }

    fn finish(self) -> Result<BigUint, WeylError> {
        let (q, r) = (&self.num / &self.den, &self.num % &self.den);
        if !r.is_zero() {
            return Err(WeylError::NonIntegral { numerator: self.num, denominator: self.den });
        }
        Ok(q)
    }
}

/// `prod_{beta > 0} <beta, omega + delta> / <beta, delta>`.
pub fn dim_generic(w: &DominantWeight) -> Result<BigUint, WeylError> {
    let shifted = weight_to_epsilon(w).doubled;
    let delta = delta_vector(w.algebra).doubled;
    let mut q = Quotient::new();
    for root in w.algebra.positive_roots() {
        q.mul(root.pair(&shifted), root.pair(&delta));
    }
    q.finish()
}

/// The family-specific product over the `g_i`, with the denominators in
/// closed form.
pub fn dim_specialized(w: &DominantWeight) -> Result<BigUint, WeylError> {
    let g = weight_to_epsilon(w).doubled;
    let alg = w.algebra;
    let mut q = Quotient::new();
    // 1-based indices to mirror the closed products.
    let at = |i: usize| g[i - 1];
    match alg.family {
        LieFamily::A => {
            let k = alg.rank as i64 + 1;
            let top = alg.rank;
            for i in 1..=top {
                for j in i + 1..=top {
                    q.mul(at(i) - at(j), 2 * (j - i) as i64);
                }
                q.mul(at(i), 2 * (k - i as i64));
            }
        }
        LieFamily::B => {
            let l = alg.rank as i64;
            for i in 1..=alg.rank {
                for j in i + 1..=alg.rank {
                    let (ii, jj) = (i as i64, j as i64);
                    q.mul((at(i) - at(j)) * (at(i) + at(j)), 4 * (jj - ii) * (2 * l + 1 - ii - jj));
                }
                q.mul(at(i), 2 * l - 2 * i as i64 + 1);
            }
        }
        LieFamily::C => {
            let k = alg.rank as i64;
            for i in 1..=alg.rank {
                for j in i + 1..=alg.rank {
                    let (ii, jj) = (i as i64, j as i64);
                    q.mul((at(i) - at(j)) * (at(i) + at(j)), 4 * (jj - ii) * (2 * k + 2 - ii - jj));
                }
                q.mul(at(i), 2 * (k - i as i64 + 1));
            }
        }
        LieFamily::D => {
            let l = alg.rank as i64;
            for i in 1..=alg.rank {
                for j in i + 1..=alg.rank {
                    let (ii, jj) = (i as i64, j as i64);
                    q.mul((at(i) - at(j)) * (at(i) + at(j)), 4 * (jj - ii) * (2 * l - ii - jj));
                }
            }
        }
    }
    q.finish()
}

/// Complex dimension of `V(omega)`.
pub fn dim(w: &DominantWeight) -> BigUint {
    dim_generic(w).expect("positive root tables are consistent")
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The tabulated dimensions of specific representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormCase {
    /// `B_l`, `omega_j`, `j <= l - 1`: `C(2l+1, j)`
    BOmega(usize),
    /// `B_l`, `2 omega_l`: `C(2l+1, l)`
    BTwiceLast,
    /// `B_l`, `2 omega_1`: `(2l+3) l`
    BTwiceFirst,
    /// `D_l`, `omega_j`, `j <= l - 2`: `C(2l, j)`
    DOmega(usize),
    /// `D_l`, `omega_{l-1} + omega_l`: `C(2l, l-1)`
    DHalfSpinSum,
    /// `D_l`, `2 omega_{l-1}`: `C(2l, l) / 2`
    DTwicePenultimate,
    /// `D_l`, `2 omega_l`: `C(2l, l) / 2`
    DTwiceLast,
    /// `D_l`, `2 omega_1`: `(2l-1)(l+1)`
    DTwiceFirst,
    /// `A_{k-1}`, `omega_j`: `C(k, j)`
    AOmega(usize),
    /// `A_{k-1}`, `2 omega_1`: `k(k+1)/2`
    ATwiceFirst,
    /// `A_{k-1}`, `omega_1 + omega_{k-1}`: `k^2 - 1`
    AAdjoint,
    /// `A_{k-1}`, `omega_2 + omega_{k-2}`, `k >= 5`: `k^2 (k+1) (k-3) / 4`
    ASecondPair,
    /// `C_k`, `omega_j`: `C(2k+1, j) (2k-2j+2) / (2k-j+2)`
    COmega(usize),
    /// `C_k`, `2 omega_1`: `(2k+1) k`
    CTwiceFirst,
}

impl ClosedFormCase {
    pub fn family(&self) -> LieFamily {
        use ClosedFormCase::*;
        match self {
            BOmega(_) | BTwiceLast | BTwiceFirst => LieFamily::B,
            DOmega(_) | DHalfSpinSum | DTwicePenultimate | DTwiceLast | DTwiceFirst => LieFamily::D,
            AOmega(_) | ATwiceFirst | AAdjoint | ASecondPair => LieFamily::A,
            COmega(_) | CTwiceFirst => LieFamily::C,
        }
    }

    /// Every case that is defined at `rank` in its family, one per
    /// admissible index `j`.
    pub fn all_at(family: LieFamily, rank: usize) -> Vec<ClosedFormCase> {
        use ClosedFormCase::*;
        let candidates: Vec<ClosedFormCase> = match family {
            LieFamily::A => (1..=rank)
                .map(AOmega)
                .chain([ATwiceFirst, AAdjoint, ASecondPair])
                .collect(),
            LieFamily::B => (1..=rank).map(BOmega).chain([BTwiceLast, BTwiceFirst]).collect(),
            LieFamily::C => (1..=rank).map(COmega).chain([CTwiceFirst]).collect(),
            LieFamily::D => (1..=rank)
                .map(DOmega)
                .chain([DHalfSpinSum, DTwicePenultimate, DTwiceLast, DTwiceFirst])
                .collect(),
        };
        candidates.into_iter().filter(|c| closed_form_dim(*c, rank).is_ok()).collect()
    }
}

impl fmt::Display for ClosedFormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ClosedFormCase::*;
        match self {
            BOmega(j) => write!(f, "B:w{j}"),
            BTwiceLast => f.write_str("B:2wl"),
            BTwiceFirst => f.write_str("B:2w1"),
            DOmega(j) => write!(f, "D:w{j}"),
            DHalfSpinSum => f.write_str("D:wl-1+wl"),
            DTwicePenultimate => f.write_str("D:2wl-1"),
            DTwiceLast => f.write_str("D:2wl"),
            DTwiceFirst => f.write_str("D:2w1"),
            AOmega(j) => write!(f, "A:w{j}"),
            ATwiceFirst => f.write_str("A:2w1"),
            AAdjoint => f.write_str("A:w1+wk-1"),
            ASecondPair => f.write_str("A:w2+wk-2"),
            COmega(j) => write!(f, "C:w{j}"),
            CTwiceFirst => f.write_str("C:2w1"),
        }
    }
}

impl FromStr for ClosedFormCase {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use ClosedFormCase::*;
        let unknown = || WeylError::UnknownCase(s.into());
        let (fam, rest) = s.split_once(':').ok_or_else(unknown)?;
        let fam: LieFamily = fam.parse().map_err(|_| unknown())?;
        let indexed = |r: &str| r.strip_prefix('w').and_then(|j| j.parse::<usize>().ok());
        let case = match (fam, rest) {
            (LieFamily::B, "2wl") => BTwiceLast,
            (LieFamily::B, "2w1") => BTwiceFirst,
            (LieFamily::D, "wl-1+wl") => DHalfSpinSum,
            (LieFamily::D, "2wl-1") => DTwicePenultimate,
            (LieFamily::D, "2wl") => DTwiceLast,
            (LieFamily::D, "2w1") => DTwiceFirst,
            (LieFamily::A, "2w1") => ATwiceFirst,
            (LieFamily::A, "w1+wk-1") => AAdjoint,
            (LieFamily::A, "w2+wk-2") => ASecondPair,
            (LieFamily::C, "2w1") => CTwiceFirst,
            (fam, r) => {
                let j = indexed(r).filter(|&j| j >= 1).ok_or_else(unknown)?;
                match fam {
                    LieFamily::A => AOmega(j),
                    LieFamily::B => BOmega(j),
                    LieFamily::C => COmega(j),
                    LieFamily::D => DOmega(j),
                }
            }
        };
        Ok(case)
    }
}

/// The weight a closed-form case refers to, and its tabulated dimension.
///
/// `rank` is the rank of the Lie algebra (`k - 1` for `SU(k)`).
pub fn closed_form_dim(case: ClosedFormCase, rank: usize) -> Result<(DominantWeight, BigUint), WeylError> {
    use ClosedFormCase::*;
    let out_of_range = || WeylError::CaseOutOfRange { case, rank };
    let alg = AlgebraType::new(case.family(), rank).map_err(|_| out_of_range())?;
    let r = rank as u64;
    let w = |i: usize, m: u32| DominantWeight::fundamental(alg, i, m);
    let (weight, value) = match case {
        BOmega(j) if (1..rank).contains(&j) => (w(j, 1), binomial(2 * r + 1, j as u64)),
        BTwiceLast => (w(rank, 2), binomial(2 * r + 1, r)),
        BTwiceFirst => (w(1, 2), BigUint::from((2 * r + 3) * r)),
        DOmega(j) if (1..=rank - 2).contains(&j) => (w(j, 1), binomial(2 * r, j as u64)),
        DHalfSpinSum => (w(rank - 1, 1).plus(rank, 1), binomial(2 * r, r - 1)),
        DTwicePenultimate => (w(rank - 1, 2), binomial(2 * r, r) / 2u32),
        DTwiceLast => (w(rank, 2), binomial(2 * r, r) / 2u32),
        DTwiceFirst => (w(1, 2), BigUint::from((2 * r - 1) * (r + 1))),
        AOmega(j) if (1..=rank).contains(&j) => (w(j, 1), binomial(r + 1, j as u64)),
        ATwiceFirst => (w(1, 2), BigUint::from((r + 1) * (r + 2) / 2)),
        // For k = 2 the adjoint is 2 omega_1.
        AAdjoint => (w(1, 1).plus(rank, 1), BigUint::from((r + 1) * (r + 1) - 1)),
        ASecondPair if rank >= 4 => {
            let k = r + 1;
            (w(2, 1).plus(rank - 1, 1), BigUint::from(k * k * (k + 1) * (k - 3) / 4))
        }
        COmega(j) if (1..=rank).contains(&j) => {
            let j = j as u64;
            let v = binomial(2 * r + 1, j) * (2 * r - 2 * j + 2) / (2 * r - j + 2);
            (w(j as usize, 1), v)
        }
        CTwiceFirst => (w(1, 2), BigUint::from((2 * r + 1) * r)),
        _ => return Err(out_of_range()),
    };
    Ok((weight, value))
}
