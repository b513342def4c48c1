//! Sweeps comparing the structured algorithms with the brute-force oracle.

use std::fmt;

use crate::doubles::doubles_bounded;
use crate::error::Result;
use crate::oracle::{all_semigroups_up_to, doubles_in, extension_oracle};
use crate::semigroup::NumericalSemigroup;
use crate::tree::{enumerate, AllSemigroups};
use crate::varieties::arithmetic_extensions;

/// Bases used for the doubles sweep have Frobenius number at most this.
pub const DOUBLES_BASE_FROBENIUS: i64 = 6;
/// Bases used for the extensions sweep have Frobenius number at most this.
pub const EXTENSIONS_BASE_FROBENIUS: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub name: &'static str,
    pub comparisons: usize,
    pub discrepancies: Vec<String>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} comparisons, {} discrepancies)",
            self.name,
            if self.passed() { "ok" } else { "FAILED" },
            self.comparisons,
            self.discrepancies.len()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementReport {
    pub bound: u64,
    pub sweeps: Vec<Sweep>,
}

impl AgreementReport {
    pub fn passed(&self) -> bool {
        self.sweeps.iter().all(Sweep::passed)
    }
}

/// Runs three sweeps up to `bound` (at most the oracle cap):
///
/// * the unrestricted tree equals the gap-subset enumeration for each bound;
/// * bounded doubles equal the oracle's halving filter for every base with
///   `F(S) ≤ 6`;
/// * arithmetic extensions equal the oracle's recomputation for every `S`
///   with `F(S) ≤ 8` (and `F(S) ≤ bound`).
pub fn check_agreement(bound: u64) -> Result<AgreementReport> {
    let full = all_semigroups_up_to(bound)?;

    let mut tree = Sweep {
        name: "tree vs gap-subset enumeration",
        comparisons: 0,
        discrepancies: Vec::new(),
    };
    for b in 1..=bound {
        let expected = full.filtered(|s| s.frobenius() <= b as i64);
        let got = enumerate(b, &AllSemigroups)?;
        tree.comparisons += 1;
        if got.nodes() != &expected.semigroups[..] {
            tree.discrepancies.push(format!(
                "bound {b}: tree has {} nodes, enumeration has {}",
                got.nodes().len(),
                expected.semigroups.len()
            ));
        }
    }

    let mut doubles = Sweep {
        name: "doubles vs halving filter",
        comparisons: 0,
        discrepancies: Vec::new(),
    };
    let bases: Vec<&NumericalSemigroup> = full
        .semigroups
        .iter()
        .filter(|s| s.frobenius() <= DOUBLES_BASE_FROBENIUS)
        .collect();
    for b in 1..=bound {
        let sub = full.filtered(|t| t.frobenius() <= b as i64);
        for s in &bases {
            let mut got: Vec<NumericalSemigroup> =
                doubles_bounded(s, b).into_iter().map(|d| d.semigroup).collect();
            got.sort();
            let want = doubles_in(&sub, s);
            doubles.comparisons += 1;
            if got != want {
                doubles
                    .discrepancies
                    .push(format!("{s} bound {b}: {} doubles, oracle {}", got.len(), want.len()));
            }
        }
    }

    let mut extensions = Sweep {
        name: "extensions vs oracle",
        comparisons: 0,
        discrepancies: Vec::new(),
    };
    for s in full
        .semigroups
        .iter()
        .filter(|s| s.frobenius() <= EXTENSIONS_BASE_FROBENIUS)
    {
        extensions.comparisons += 1;
        let got = arithmetic_extensions(s);
        let want = extension_oracle(s)?;
        if got != want {
            extensions
                .discrepancies
                .push(format!("{s}: {} extensions, oracle {}", got.len(), want.len()));
        }
    }

    Ok(AgreementReport {
        bound,
        sweeps: vec![tree, doubles, extensions],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bound_agrees() {
        let report = check_agreement(6).unwrap();
        assert!(report.passed(), "{:?}", report);
        assert_eq!(report.sweeps.len(), 3);
        assert!(report.sweeps.iter().all(|s| s.comparisons > 0));
    }
}
