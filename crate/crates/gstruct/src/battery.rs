//! Verification batteries behind `gstruct verify`.

use gstruct_core::charclass::verify_lemma_sp3;
use gstruct_core::classify::classify;
use gstruct_core::enumerate::{verify_min_nonexterior, verify_min_nonstandard};
use gstruct_core::james::j_real;
use gstruct_core::kocheck::fixed_generator_exists;
use gstruct_core::{GroupDescriptor, ReductionQuery};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub failures: usize,
}

impl Report {
    fn pass(&mut self, line: String) {
        self.lines.push(format!("ok    {line}"));
    }

    fn fail(&mut self, line: String) {
        self.failures += 1;
        self.lines.push(format!("FAIL  {line}"));
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub const NONSTANDARD_GROUPS: [GroupDescriptor; 7] = [
    GroupDescriptor::so(7),
    GroupDescriptor::so(8),
    GroupDescriptor::so(9),
    GroupDescriptor::su(5),
    GroupDescriptor::su(6),
    GroupDescriptor::sp(3),
    GroupDescriptor::sp(4),
];

pub const NONEXTERIOR_GROUPS: [GroupDescriptor; 5] = [
    GroupDescriptor::so(8),
    GroupDescriptor::so(12),
    GroupDescriptor::su(4),
    GroupDescriptor::su(6),
    GroupDescriptor::su(8),
];

/// Minimum real dimension of non-standard irreducibles.
pub fn nonstandard() -> Report {
    let mut r = Report::default();
    for g in NONSTANDARD_GROUPS {
        match verify_min_nonstandard(&g) {
            Ok(rep) => {
                let below: Vec<String> =
                    rep.below_bound.iter().map(|i| format!("{} ({})", i.weight.label(), i.real_dim)).collect();
                r.pass(format!(
                    "{g}: minimum {} attained by {}; below: {}",
                    rep.bound,
                    rep.minimizer.weight.label(),
                    below.join(", ")
                ));
            }
            Err(e) => r.fail(format!("{g}: {e}")),
        }
    }
    r
}

/// Minimum real dimension of irreducibles not expressible through exterior
/// powers. A bound with no flagged weight up to it is reported, not failed.
pub fn nonexterior() -> Report {
    let mut r = Report::default();
    for g in NONEXTERIOR_GROUPS {
        match verify_min_nonexterior(&g) {
            Ok(rep) => {
                let observed = match rep.witnesses.first() {
                    Some(w) => format!("attained by {} ({})", w.weight.label(), w.real_dim),
                    None => "no flagged weight up to the bound".into(),
                };
                let literal = match &rep.literal_bound {
                    Some(l) if rep.literal_bound_attained() => format!("; C(k/2,k/4)/2 = {l} attained"),
                    Some(l) => format!("; C(k/2,k/4)/2 = {l} not attained"),
                    None => String::new(),
                };
                r.pass(format!("{g}: bound {}, {observed}{literal}", rep.bound));
            }
            Err(e) => r.fail(format!("{g}: {e}")),
        }
    }
    r
}

pub fn lemma_sp3() -> Report {
    let mut r = Report::default();
    match verify_lemma_sp3() {
        Ok(w) => r.pass(format!("w = {w}; w_16 = {}", w.component(16))),
        Err(e) => r.fail(e.to_string()),
    }
    r
}

/// The `psi^3` criterion and the `SO` classifier against `k >= n - j(n) + 1`.
pub fn equivalence_sweep() -> Report {
    let mut r = Report::default();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for n in (7..=399u64).step_by(8) {
        let threshold = (n + 1).saturating_sub(j_real(n).expect("n >= 1"));
        for k in 1..=n {
            pairs += 1;
            if fixed_generator_exists(n, k).expect("n odd, 1 <= k <= n") != (k >= threshold) {
                bad.push(format!("({n},{k})"));
            }
        }
    }
    if bad.is_empty() {
        r.pass(format!("psi^3 fixed generator: {pairs} pairs with n + 1 = 0 mod 8, n <= 399"));
    } else {
        r.fail(format!("psi^3 fixed generator disagrees at {}", bad.join(" ")));
    }
    bad.clear();
    let mut queries = 0;
    for n in (9..=199u64).step_by(2) {
        let threshold = n + 1 - j_real(n).expect("n >= 1");
        for k in 4..n {
            let q = ReductionQuery::new(GroupDescriptor::so(n), GroupDescriptor::so(k));
            let Ok(v) = classify(&q) else { continue };
            queries += 1;
            if v.reducible != (k >= threshold) {
                bad.push(format!("SO({n})<-SO({k})"));
            }
        }
    }
    if bad.is_empty() {
        r.pass(format!("SO classifier: {queries} queries, odd n in 9..=199"));
    } else {
        r.fail(format!("SO classifier disagrees at {}", bad.join(" ")));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batteries_pass() {
        for report in [nonstandard(), nonexterior(), lemma_sp3(), equivalence_sweep()] {
            assert!(report.passed(), "{:?}", report.lines);
            assert!(!report.lines.is_empty());
        }
    }
}
