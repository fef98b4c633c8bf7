mod common;

use gstruct_core::classify::{classify, min_source_rank, Case, VerdictReason};
use gstruct_core::enumerate::{enumerate_weights, verify_min_nonexterior, EnumerationRequest};
use gstruct_core::james::{j_gap, j_real, SphereFamily};
use gstruct_core::kocheck::{ko_group, KoGroup};
use gstruct_core::reality::{min_dim_nonexterior, min_dim_nonexterior_literal_so};
use gstruct_core::weyl::{self, binomial};
use gstruct_core::{AlgebraType, GroupDescriptor, GroupFamily, LieFamily, ReductionQuery};
use num_bigint::BigUint;

#[test]
fn real_gap_matches_reference() {
    for n in 1..5000 {
        assert_eq!(j_real(n).unwrap(), common::j_of(n), "n = {n}");
    }
}

#[test]
fn so_min_rank_is_adams_gap() {
    for n in (9..=199u64).step_by(2) {
        let expected = (n + 1 - common::j_of(n)).max(4);
        assert_eq!(min_source_rank(&GroupDescriptor::so(n), GroupFamily::SO).unwrap(), Some(expected), "n = {n}");
    }
}

#[test]
fn complex_and_quaternionic_gaps_match_classifier() {
    for n in (9..=199u64).step_by(2) {
        let m = n.div_ceil(2);
        let k_star = (n + 1 - j_gap(n, SphereFamily::Complex).unwrap()) / 2;
        for k in 2..m {
            let v = classify(&ReductionQuery::new(GroupDescriptor::so(n), GroupDescriptor::su(k))).unwrap();
            assert_eq!(v.reducible, k >= k_star, "SO({n}) <- SU({k})");
        }
        if (n + 1) % 4 == 0 {
            let m = (n + 1) / 4;
            let k_star = (n + 1 - j_gap(n, SphereFamily::Quaternionic).unwrap()) / 4;
            for k in 2..m {
                let v = classify(&ReductionQuery::new(GroupDescriptor::so(n), GroupDescriptor::sp(k))).unwrap();
                assert_eq!(v.reducible, k >= k_star, "SO({n}) <- Sp({k})");
            }
        }
    }
}

#[test]
fn gaps_are_ordered() {
    for n in (3..=999u64).step_by(2) {
        let j = j_real(n).unwrap();
        let j2 = j_gap(n, SphereFamily::Complex).unwrap();
        assert!(j2 <= j, "j2({n}) = {j2} > j = {j}");
        if (n + 1) % 4 == 0 {
            let j4 = j_gap(n, SphereFamily::Quaternionic).unwrap();
            assert!(j4 <= j2, "j4({n}) = {j4} > j2 = {j2}");
        }
    }
}

#[test]
fn reducibility_is_monotone_in_source_rank() {
    for n in 8..=120u64 {
        for target in [GroupDescriptor::so(n), GroupDescriptor::su(n), GroupDescriptor::sp(n)] {
            for family in [GroupFamily::SO, GroupFamily::SU, GroupFamily::Sp] {
                let mut seen_yes = false;
                for k in 2..n {
                    let Ok(v) = classify(&ReductionQuery::new(target, GroupDescriptor { family, size: k })) else {
                        continue;
                    };
                    if v.reason == VerdictReason::SourceTooLarge {
                        break;
                    }
                    assert!(!seen_yes || v.reducible, "{target} <- {family}({k}) after a smaller YES");
                    seen_yes |= v.reducible;
                }
            }
        }
    }
}

#[test]
fn min_rank_agrees_with_classifier() {
    for n in 8..=150u64 {
        for target in [GroupDescriptor::so(n), GroupDescriptor::su(n), GroupDescriptor::sp(n)] {
            for family in [GroupFamily::SO, GroupFamily::SU, GroupFamily::Sp] {
                let Ok(min) = min_source_rank(&target, family) else { continue };
                let Some(k) = min else { continue };
                let source = GroupDescriptor { family, size: k };
                if let Ok(v) = classify(&ReductionQuery::new(target, source)) {
                    assert!(v.reducible, "{target} <- {source}");
                }
                if k > 2 {
                    let below = GroupDescriptor { family, size: k - 1 };
                    if let Ok(v) = classify(&ReductionQuery::new(target, below)) {
                        assert!(!v.reducible, "{target} <- {below}");
                    }
                }
            }
        }
    }
}

#[test]
fn cross_family_consistency() {
    // Sp(k) sits inside SU(2k), so a reduction to Sp(k) yields one to SU(2k).
    for n in (9..=199u64).step_by(2) {
        for k in 2..(n + 1) / 4 {
            let via_sp = classify(&ReductionQuery::new(GroupDescriptor::so(n), GroupDescriptor::sp(k))).unwrap();
            let via_su = classify(&ReductionQuery::new(GroupDescriptor::so(n), GroupDescriptor::su(2 * k)));
            if via_sp.reducible {
                if let Ok(v) = via_su {
                    assert!(v.reducible, "SO({n}) <- Sp({k}) but not SU({})", 2 * k);
                }
            }
        }
    }
}

#[test]
fn real_targets_use_two_parts() {
    for r in 1..60 {
        assert!(Case::B.modulus(r).factors().all(|(p, _)| p == 2));
        assert!(Case::C.modulus(r).factors().all(|(p, _)| p == 2));
    }
}

#[test]
fn ko_groups_in_computed_classes() {
    for n in (7..=399u64).step_by(2) {
        for k in 1..=n {
            let info = ko_group(n, k).unwrap();
            match (n + 1) % 8 {
                0 => assert!(matches!(info.group, KoGroup::Cyclic { .. })),
                4 if k + 4 == n => assert_eq!(info.group, KoGroup::Cyclic { order: 16u32.into(), psi3_exponent: n.div_ceil(2) }),
                2 | 6 if k + 2 == n => assert_eq!(info.group, KoGroup::ZeroProjection),
                _ => assert_eq!(info.group, KoGroup::NotComputed),
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic_and_exact() {
    for (family, rank, bound) in [(LieFamily::A, 5, 400u32), (LieFamily::B, 4, 600), (LieFamily::C, 4, 600), (LieFamily::D, 5, 600)] {
        let req = EnumerationRequest::new(AlgebraType::new(family, rank).unwrap(), bound);
        let first = enumerate_weights(&req).unwrap();
        assert_eq!(first, enumerate_weights(&req).unwrap());
        for pair in first.windows(2) {
            assert!((&pair[0].1, pair[0].0.coeffs()) < (&pair[1].1, pair[1].0.coeffs()));
        }
        for (w, d) in &first {
            assert_eq!(&weyl::dim_generic(w).unwrap(), d);
            assert!(d <= &BigUint::from(bound));
        }
    }
}

#[test]
fn nonexterior_bounds() {
    let so8 = verify_min_nonexterior(&GroupDescriptor::so(8)).unwrap();
    assert_eq!(so8.bound, BigUint::from(35u32));
    assert!(so8.attained());
    assert_eq!(so8.literal_bound, Some(BigUint::from(3u32)));
    assert!(!so8.literal_bound_attained());

    let so12 = verify_min_nonexterior(&GroupDescriptor::so(12)).unwrap();
    assert_eq!(so12.bound, binomial(12, 6) / 2u32);
    assert!(so12.attained());

    for (k, value) in [(4u64, 6u32), (8, 70)] {
        let r = verify_min_nonexterior(&GroupDescriptor::su(k)).unwrap();
        assert_eq!(r.bound, BigUint::from(value));
        assert!(r.attained(), "SU({k})");
    }
    let su6 = verify_min_nonexterior(&GroupDescriptor::su(6)).unwrap();
    assert_eq!(su6.bound, BigUint::from(20u32));
    assert!(su6.witnesses.is_empty());

    assert_eq!(min_dim_nonexterior(&GroupDescriptor::so(6)).unwrap(), None);
    assert_eq!(min_dim_nonexterior_literal_so(8), Some(BigUint::from(3u32)));
    assert!(min_dim_nonexterior(&GroupDescriptor::sp(4)).is_err());
}

#[test]
fn quaternionic_targets_embed_in_real_ones() {
    // Sp(n+1)/Sp(n) and SO(4n+4)/SO(4n+3) are the same sphere, and Sp(n) sits in SO(4n+3).
    for n in 2..=120u64 {
        for k in 2..n {
            let Ok(sp) = classify(&ReductionQuery::new(GroupDescriptor::sp(n), GroupDescriptor::sp(k))) else { continue };
            if !sp.reducible {
                continue;
            }
            let so = classify(&ReductionQuery::new(GroupDescriptor::so(4 * (n + 1) - 1), GroupDescriptor::sp(k))).unwrap();
            assert!(so.reducible, "Sp({n}) <- Sp({k}) but not SO({})", 4 * (n + 1) - 1);
        }
    }
}
