//! Reference computations shared by the integration tests. Nothing here
//! calls into the library's arithmetic; each function evaluates its
//! definition directly.

#![allow(dead_code)]

use gstruct_core::LieFamily;
use num_bigint::BigUint;

pub fn valuation(p: u64, mut n: u64) -> u64 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Exponent of 2 in `a(r)`, counting term by term.
pub fn a_exponent(r: u64) -> u64 {
    (1..r).filter(|i| matches!(i % 8, 0 | 1 | 2 | 4)).count() as u64
}

/// Exponent of `p` in `b(r)`, as the maximum over every admissible `i`.
pub fn b_exponent(p: u64, r: u64) -> u64 {
    if r < p {
        return 0;
    }
    (1..=(r - 1) / (p - 1)).map(|i| i + valuation(p, i)).max().unwrap_or(0)
}

/// Exponent of `p` in `c(r)`.
pub fn c_exponent(p: u64, r: u64) -> u64 {
    if p == 2 {
        (1..r).map(|i| 2 * i + valuation(2, i)).fold(2 * r - 1, u64::max)
    } else {
        b_exponent(p, 2 * r)
    }
}

/// `2^beta + 8 gamma` from `n + 1 = odd * 2^{beta + 4 gamma}`, by repeated halving.
pub fn j_of(n: u64) -> u64 {
    let mut s = 0;
    let mut m = n + 1;
    while m.is_multiple_of(2) {
        m /= 2;
        s += 1;
    }
    let (gamma, beta) = (s / 4, s % 4);
    (1 << beta) + 8 * gamma
}

/// Cartan matrix `A[i][j] = <alpha_i^vee, alpha_j>` with the usual numbering:
/// `B_l` has `alpha_l` short, `C_l` has `alpha_l` long, `D_l` forks at
/// `alpha_{l-2}`.
pub fn cartan(family: LieFamily, rank: usize) -> Vec<Vec<i64>> {
    let l = rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = match family {
        LieFamily::D => l - 1,
        _ => l,
    };
    for i in 0..chain.saturating_sub(1) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    match family {
        LieFamily::A => {}
        LieFamily::B => a[l - 1][l - 2] = -2,
        LieFamily::C => a[l - 2][l - 1] = -2,
        LieFamily::D => {
            a[l - 1][l - 3] = -1;
            a[l - 3][l - 1] = -1;
        }
    }
    a
}

/// Positive roots in simple-root coordinates, generated by root strings.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut roots = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                // p: how far the alpha_i-string extends below beta.
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

/// Positive coroots in simple-coroot coordinates: the positive roots of the
/// transposed Cartan matrix.
pub fn positive_coroots(family: LieFamily, rank: usize) -> Vec<Vec<i64>> {
    let a = cartan(family, rank);
    let l = a.len();
    let t: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| a[j][i]).collect()).collect();
    positive_roots(&t)
}

/// Weyl's formula in fundamental-weight coordinates:
/// `prod <lambda + rho, a^vee> / <rho, a^vee>` over positive coroots.
pub fn weyl_dim(coroots: &[Vec<i64>], m: &[u32]) -> BigUint {
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for c in coroots {
        let top: i64 = c.iter().zip(m).map(|(ci, mi)| ci * (i64::from(*mi) + 1)).sum();
        let bottom: i64 = c.iter().sum();
        num *= top as u64;
        den *= bottom as u64;
    }
    assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

pub fn weyl_dim_f64(coroots: &[Vec<i64>], m: &[u32]) -> f64 {
    coroots
        .iter()
        .map(|c| {
            let top: i64 = c.iter().zip(m).map(|(ci, mi)| ci * (i64::from(*mi) + 1)).sum();
            let bottom: i64 = c.iter().sum();
            top as f64 / bottom as f64
        })
        .product()
}

/// Every coefficient vector with entries in `0..=max`, in lexicographic order.
pub fn all_coeffs(rank: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// All weights with `dim <= bound`, by scanning the full box of side
/// `bound`: a non-zero weight with `m_i > bound` has dimension above
/// `bound` because its `alpha_i`-string alone has `m_i + 1` weights.
pub fn naive_enumeration(family: LieFamily, rank: usize, bound: u32) -> Vec<(Vec<u32>, u64)> {
    let coroots = positive_coroots(family, rank);
    let mut out = Vec::new();
    let mut m = vec![0u32; rank];
    loop {
        let d = weyl_dim_f64(&coroots, &m);
        if d < f64::from(bound) + 0.5 {
            out.push((m.clone(), d.round() as u64));
        }
        let mut i = rank;
        loop {
            if i == 0 {
                out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
                return out;
            }
            i -= 1;
            if m[i] < bound {
                m[i] += 1;
                break;
            }
            m[i] = 0;
        }
    }
}
