//! Brute-force ground truth used to validate the structured algorithms.
//!
//! Nothing here calls into the quotient, intersection, doubles or tree code:
//! semigroups are found by exhaustive gap-subset search over bitmasks and all
//! comparisons go through plain membership tests.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::varieties::VarietySet;

/// Largest Frobenius bound accepted by [`all_semigroups_up_to`].
pub const MAX_ORACLE_BOUND: u64 = 20;

/// Largest genus accepted by [`extension_oracle`].
pub const MAX_ORACLE_GENUS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub bound: u64,
    pub semigroups: Vec<NumericalSemigroup>,
    pub counts_by_frobenius: BTreeMap<i64, usize>,
}

/// On-disk form: `{"bound":F, "counts":{...}, "semigroups":[[gens],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFixture {
    pub bound: u64,
    pub counts: BTreeMap<i64, usize>,
    pub semigroups: Vec<Vec<u64>>,
}

impl EnumerationReport {
    pub fn to_fixture(&self) -> ReportFixture {
        ReportFixture {
            bound: self.bound,
            counts: self.counts_by_frobenius.clone(),
            semigroups: self
                .semigroups
                .iter()
                .map(|s| s.min_generators().to_vec())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_fixture()).expect("report serialisation cannot fail")
    }

    /// Keeps only the semigroups accepted by `keep`, recomputing the counts.
    pub fn filtered<F: Fn(&NumericalSemigroup) -> bool>(&self, keep: F) -> EnumerationReport {
        let semigroups: Vec<NumericalSemigroup> =
            self.semigroups.iter().filter(|s| keep(s)).cloned().collect();
        EnumerationReport {
            bound: self.bound,
            counts_by_frobenius: count(&semigroups),
            semigroups,
        }
    }
}

fn count(list: &[NumericalSemigroup]) -> BTreeMap<i64, usize> {
    let mut counts = BTreeMap::new();
    for s in list {
        *counts.entry(s.frobenius()).or_insert(0) += 1;
    }
    counts
}

/// Bit `i` of `gaps` set means `i` is a gap, for `1 ≤ i ≤ bound`. The
/// complement is closed iff no member shifted by a nonzero member lands on a
/// gap.
fn closed_complement(gaps: u32, bound: u64) -> bool {
    let full: u32 = ((1u64 << (bound + 1)) - 1) as u32;
    let members = !gaps & full;
    let mut rest = members & !1;
    while rest != 0 {
        let a = rest.trailing_zeros();
        if (members << a) & gaps & full != 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// Every numerical semigroup with Frobenius number at most `bound`, found by
/// testing all `2^bound` gap sets in `{1, …, bound}`.
pub fn all_semigroups_up_to(bound: u64) -> Result<EnumerationReport> {
    if bound > MAX_ORACLE_BOUND {
        return Err(Error::BoundTooLarge {
            bound,
            cap: MAX_ORACLE_BOUND,
        });
    }
    let mut semigroups: Vec<NumericalSemigroup> = (0u32..1 << bound)
        .into_par_iter()
        .map(|bits| bits << 1)
        .filter(|&gaps| closed_complement(gaps, bound))
        .map(|gaps| {
            let list = (1..=bound).filter(|i| gaps >> i & 1 == 1);
            NumericalSemigroup::from_gaps(list).expect("complement is closed")
        })
        .collect();
    semigroups.sort();
    Ok(EnumerationReport {
        bound,
        counts_by_frobenius: count(&semigroups),
        semigroups,
    })
}

/// Whether `t/2 = s`, compared elementwise.
fn halves_to(t: &NumericalSemigroup, s: &NumericalSemigroup) -> bool {
    let limit = t.frobenius().max(2 * s.frobenius()) + 2;
    (0..=limit).all(|x| t.contains(2 * x) == s.contains(x))
}

/// The semigroups `T ≠ N` of `report` with `T/2 = s`.
pub fn doubles_in(report: &EnumerationReport, s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    report
        .semigroups
        .iter()
        .filter(|t| !t.is_naturals() && halves_to(t, s))
        .cloned()
        .collect()
}

/// All `T` with `T/2 = s` and `F(T) ≤ bound`, by filtering the exhaustive
/// enumeration.
pub fn doubles_oracle(s: &NumericalSemigroup, bound: u64) -> Result<Vec<NumericalSemigroup>> {
    Ok(doubles_in(&all_semigroups_up_to(bound)?, s))
}

/// All arithmetic extensions of `s`, recomputed without the intersection
/// closure: every oversemigroup `T ⊇ S` is tested for
/// `T = ⋂ {S/d : 1 ≤ d ≤ F(S), d·T ⊆ S}`.
pub fn extension_oracle(s: &NumericalSemigroup) -> Result<VarietySet> {
    let gaps = s.gaps();
    if gaps.len() > MAX_ORACLE_GENUS {
        return Err(Error::BoundTooLarge {
            bound: gaps.len() as u64,
            cap: MAX_ORACLE_GENUS as u64,
        });
    }
    let frob = s.frobenius().max(0);
    let mut found = Vec::new();
    for mask in 0u32..1 << gaps.len() {
        let kept = gaps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &g)| g);
        let Ok(t) = NumericalSemigroup::from_gaps(kept) else {
            continue;
        };
        let divisors: Vec<i64> = (1..=frob)
            .filter(|&d| (0..=frob).filter(|&x| t.contains(x)).all(|x| s.contains(d * x)))
            .collect();
        let is_meet = (0..=frob + 1).all(|x| {
            let in_meet = divisors.iter().all(|&d| s.contains(d * x));
            in_meet == t.contains(x)
        });
        if is_meet {
            found.push(t);
        }
    }
    Ok(VarietySet::new(found))
}
