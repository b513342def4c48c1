//! Semigroups `T` with `T/2 = S`, parametrised by pairs `(m, H)` where `m` is
//! an odd element of `S` and `H` an upper `m`-set of gaps.
//!
//! For `S ≠ N` every such `T` is
//! `S(m,H) = 2S ∪ (2S + m) ∪ (2H + m)`, generated by twice the minimal
//! generators of `S`, `m`, and `2h + m` for `h ∈ H`. Distinct labels give
//! distinct semigroups. The doubles of `N` are `<2, 2n+1>`; they are labelled
//! here as `(2n+1, ∅)`, which is the same construction with `msg(N) = {1}`.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// The pair `(m, H)` naming one double of a fixed base semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleLabel {
    pub m: u64,
    /// Sorted ascending.
    pub h: Vec<u64>,
}

impl DoubleLabel {
    pub fn new(m: u64, mut h: Vec<u64>) -> Self {
        h.sort_unstable();
        h.dedup();
        DoubleLabel { m, h }
    }
}

impl std::fmt::Display for DoubleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({};", self.m)?;
        for (i, h) in self.h.iter().enumerate() {
            write!(f, "{}{h}", if i == 0 { " " } else { "," })?;
        }
        f.write_str(")")
    }
}

/// A validated triple `(S, m, H)` with `H` an upper `m`-set of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperMSetCertificate {
    base: NumericalSemigroup,
    label: DoubleLabel,
}

impl UpperMSetCertificate {
    /// Validates the triple; anything that is not an upper `m`-set of a base
    /// other than `N` is reported as [`Error::InvalidCertificate`].
    pub fn new(base: &NumericalSemigroup, m: u64, h: &[u64]) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidCertificate { reason };
        match is_upper_m_set(base, m, h) {
            Ok(true) => Ok(UpperMSetCertificate {
                base: base.clone(),
                label: DoubleLabel::new(m, h.to_vec()),
            }),
            Ok(false) => Err(invalid(format!(
                "{:?} is not an upper {m}-set of {base}",
                h
            ))),
            Err(e) => Err(invalid(e.to_string())),
        }
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn label(&self) -> &DoubleLabel {
        &self.label
    }

    pub fn build(&self) -> NumericalSemigroup {
        construct(&self.base, &self.label)
    }

    pub fn frobenius(&self) -> i64 {
        frobenius_formula(&self.base, &self.label)
    }
}

/// One element of `D2(S)` together with its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Double {
    pub label: DoubleLabel,
    pub semigroup: NumericalSemigroup,
}

impl Serialize for Double {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Double", 3)?;
        st.serialize_field("m", &self.label.m)?;
        st.serialize_field("H", &self.label.h)?;
        st.serialize_field("semigroup", &self.semigroup)?;
        st.end()
    }
}

fn check_triple(s: &NumericalSemigroup, m: u64, h: &[u64]) -> Result<()> {
    if s.is_naturals() {
        return Err(Error::IsNaturals);
    }
    if m.is_multiple_of(2) || !s.contains(m as i64) {
        return Err(Error::bad_m(m, s));
    }
    if let Some(&x) = h.iter().find(|&&x| s.gaps().binary_search(&x).is_err()) {
        return Err(Error::NotGapSubset {
            element: x,
            semigroup: s.to_string(),
        });
    }
    Ok(())
}

/// Checks conditions C1–C3 for `H` relative to the odd member `m`:
///
/// * C1: `h + m ∈ S` for every `h ∈ H`;
/// * C2: `h1 + h2 + m ∈ S` for every `h1, h2 ∈ H`;
/// * C3: if `h ∈ H`, every gap `x` with `x − h ∈ S` is in `H`.
///
/// The empty set satisfies all three vacuously; `S(m, ∅) = 2S ∪ (2S + m)`
/// is a genuine double (for instance `<3,4> = S(3, ∅)` over `<2,3>`).
pub fn is_upper_m_set(s: &NumericalSemigroup, m: u64, h: &[u64]) -> Result<bool> {
    check_triple(s, m, h)?;
    let member = |x: u64| s.contains(x as i64);
    let c1 = h.iter().all(|&x| member(x + m));
    let c2 = h
        .iter()
        .all(|&a| h.iter().all(|&b| member(a + b + m)));
    let c3 = h.iter().all(|&a| {
        s.gaps()
            .iter()
            .filter(|&&x| x >= a && member(x - a))
            .all(|x| h.contains(x))
    });
    Ok(c1 && c2 && c3)
}

/// Backtracking over gaps in decreasing order. Including a gap `h` requires
/// every larger gap `x` with `x − h ∈ S` to be included already (C3 is
/// transitive, so this yields exactly the C3-closed sets), and C1/C2 are
/// checked against the gaps chosen so far. Gaps above `forced_above` may not
/// be excluded.
struct UpperSetSearch<'a> {
    s: &'a NumericalSemigroup,
    m: u64,
    gaps_desc: Vec<u64>,
    /// For each gap (by position in `gaps_desc`), positions of the larger
    /// gaps it forces through C3.
    forces: Vec<Vec<usize>>,
    forced_above: Option<u64>,
    included: Vec<bool>,
    chosen: Vec<u64>,
    out: Vec<Vec<u64>>,
}

impl<'a> UpperSetSearch<'a> {
    fn new(s: &'a NumericalSemigroup, m: u64, forced_above: Option<u64>) -> Self {
        let gaps_desc: Vec<u64> = s.gaps().iter().rev().copied().collect();
        let forces = gaps_desc
            .iter()
            .enumerate()
            .map(|(i, &h)| {
                (0..i)
                    .filter(|&j| s.contains((gaps_desc[j] - h) as i64))
                    .collect()
            })
            .collect();
        let n = gaps_desc.len();
        UpperSetSearch {
            s,
            m,
            gaps_desc,
            forces,
            forced_above,
            included: vec![false; n],
            chosen: Vec::new(),
            out: Vec::new(),
        }
    }

    fn can_include(&self, i: usize) -> bool {
        let h = self.gaps_desc[i];
        let member = |x: u64| self.s.contains(x as i64);
        self.forces[i].iter().all(|&j| self.included[j])
            && member(h + self.m)
            && member(2 * h + self.m)
            && self.chosen.iter().all(|&x| member(x + h + self.m))
    }

    fn run(&mut self, i: usize) {
        if i == self.gaps_desc.len() {
            let mut h = self.chosen.clone();
            h.reverse();
            self.out.push(h);
            return;
        }
        let h = self.gaps_desc[i];
        if self.can_include(i) {
            self.included[i] = true;
            self.chosen.push(h);
            self.run(i + 1);
            self.chosen.pop();
            self.included[i] = false;
        }
        if self.forced_above.is_none_or(|limit| h <= limit) {
            self.run(i + 1);
        }
    }
}

fn search_upper_sets(s: &NumericalSemigroup, m: u64, forced_above: Option<u64>) -> Vec<Vec<u64>> {
    let mut search = UpperSetSearch::new(s, m, forced_above);
    search.run(0);
    let mut out = search.out;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every nonempty upper `m`-set of `s`, ordered by size and then
/// lexicographically. The vacuous empty set is left out of the listing.
pub fn upper_m_sets(s: &NumericalSemigroup, m: u64) -> Result<Vec<Vec<u64>>> {
    check_triple(s, m, &[])?;
    let mut sets = search_upper_sets(s, m, None);
    sets.retain(|h| !h.is_empty());
    Ok(sets)
}

fn construct(s: &NumericalSemigroup, label: &DoubleLabel) -> NumericalSemigroup {
    let mut gens: Vec<u64> = s.min_generators().iter().map(|a| 2 * a).collect();
    gens.push(label.m);
    gens.extend(label.h.iter().map(|h| 2 * h + label.m));
    NumericalSemigroup::from_generators(&gens).expect("m is odd, so the generators are coprime")
}

/// `F(S(m,H))`: `max(2F(S), m − 2)` when `H` is every gap, otherwise
/// `max(2F(S), 2·max(gaps ∖ H) + m)`.
fn frobenius_formula(s: &NumericalSemigroup, label: &DoubleLabel) -> i64 {
    let twice = 2 * s.frobenius();
    let m = label.m as i64;
    match s.gaps().iter().rev().find(|g| label.h.binary_search(g).is_err()) {
        None => twice.max(m - 2),
        Some(&g) => twice.max(2 * g as i64 + m),
    }
}

fn naturals_label_ok(m: u64, h: &[u64]) -> Result<()> {
    if m.is_multiple_of(2) || !h.is_empty() {
        return Err(Error::InvalidCertificate {
            reason: format!("the doubles of <1> are labelled by an odd m and no gaps, got m = {m}, H = {h:?}"),
        });
    }
    Ok(())
}

/// `S(m,H)` for a valid triple. For `S = N` the label must be `(m, ∅)` with
/// `m` odd, giving `<2, m>`.
pub fn build_double(s: &NumericalSemigroup, m: u64, h: &[u64]) -> Result<NumericalSemigroup> {
    if s.is_naturals() {
        naturals_label_ok(m, h)?;
        return Ok(construct(s, &DoubleLabel::new(m, Vec::new())));
    }
    Ok(UpperMSetCertificate::new(s, m, h)?.build())
}

/// The Frobenius number of `S(m,H)` by the closed formula, without building it.
pub fn frobenius_of_double(s: &NumericalSemigroup, m: u64, h: &[u64]) -> Result<i64> {
    if s.is_naturals() {
        naturals_label_ok(m, h)?;
        return Ok(frobenius_formula(s, &DoubleLabel::new(m, Vec::new())));
    }
    Ok(UpperMSetCertificate::new(s, m, h)?.frobenius())
}

/// `S/2`.
pub fn halve(s: &NumericalSemigroup) -> NumericalSemigroup {
    s.quotient(2).expect("2 is a positive divisor")
}

/// All `T` with `T/2 = S` and `F(T) ≤ bound`, labelled and canonically
/// sorted. For `S = N` this is `<2, m>` for odd `3 ≤ m ≤ bound + 2`.
pub fn doubles_bounded(s: &NumericalSemigroup, bound: u64) -> Vec<Double> {
    let make = |label: DoubleLabel| Double {
        semigroup: construct(s, &label),
        label,
    };
    let mut out: Vec<Double> = if s.is_naturals() {
        (3..=bound + 2)
            .step_by(2)
            .map(|m| make(DoubleLabel::new(m, Vec::new())))
            .collect()
    } else {
        let frob = s.frobenius() as u64;
        if 2 * frob > bound {
            return Vec::new();
        }
        let gaps = s.gaps().to_vec();
        // H = every gap forces m > F(S)
        let first = (frob + 1..=bound + 2)
            .filter(|m| m % 2 == 1)
            .map(|m| make(DoubleLabel::new(m, gaps.clone())));
        // H ≠ every gap needs 2·max(gaps ∖ H) + m ≤ bound
        let small_m: Vec<u64> = (1..=bound.saturating_sub(2))
            .filter(|&m| m % 2 == 1 && s.contains(m as i64))
            .collect();
        let genus = gaps.len();
        let second: Vec<Double> = small_m
            .par_iter()
            .flat_map_iter(|&m| {
                let limit = (bound - m) / 2;
                search_upper_sets(s, m, Some(limit))
                    .into_iter()
                    .filter(move |h| h.len() < genus)
                    .map(move |h| make(DoubleLabel::new(m, h)))
            })
            .collect();
        first.chain(second).collect()
    };
    out.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Power-set filter over the gaps, the direct reading of the definition.
    fn upper_sets_by_filter(s: &NumericalSemigroup, m: u64) -> Vec<Vec<u64>> {
        let gaps = s.gaps();
        let mut out: Vec<Vec<u64>> = (1u64..1 << gaps.len())
            .map(|mask| {
                gaps.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &g)| g)
                    .collect::<Vec<u64>>()
            })
            .filter(|h| is_upper_m_set(s, m, h).unwrap())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn upper_5_sets_of_4_5_11() {
        let s = sg(&[4, 5, 11]);
        assert!(is_upper_m_set(&s, 5, &[6, 7]).unwrap());
        assert!(!is_upper_m_set(&s, 5, &[3]).unwrap());
        assert_eq!(
            upper_m_sets(&s, 5).unwrap(),
            vec![vec![6], vec![7], vec![3, 7], vec![6, 7], vec![3, 6, 7]]
        );
    }

    #[test]
    fn upper_sets_of_2_3() {
        let s = sg(&[2, 3]);
        for m in [3, 5, 7, 9] {
            assert_eq!(upper_m_sets(&s, m).unwrap(), vec![vec![1]]);
        }
    }

    #[test]
    fn all_gaps_for_large_m() {
        let s = sg(&[4, 5, 11]);
        assert!(is_upper_m_set(&s, 9, s.gaps()).unwrap());
        assert!(!is_upper_m_set(&s, 5, s.gaps()).unwrap());
        assert!(upper_m_sets(&s, 9).unwrap().contains(&s.gaps().to_vec()));
    }

    #[test]
    fn validation_errors() {
        let s = sg(&[4, 5, 11]);
        assert!(matches!(is_upper_m_set(&s, 4, &[6]), Err(Error::BadM { .. })));
        assert!(matches!(is_upper_m_set(&s, 3, &[6]), Err(Error::BadM { .. })));
        assert!(matches!(
            is_upper_m_set(&s, 5, &[4]),
            Err(Error::NotGapSubset { element: 4, .. })
        ));
        assert_eq!(is_upper_m_set(&sg(&[1]), 1, &[]), Err(Error::IsNaturals));
        assert!(is_upper_m_set(&s, 5, &[]).unwrap());
        assert!(matches!(
            build_double(&s, 5, &[3]),
            Err(Error::InvalidCertificate { .. })
        ));
        assert!(matches!(
            build_double(&s, 6, &[6]),
            Err(Error::InvalidCertificate { .. })
        ));
    }

    #[test]
    fn closure_search_matches_power_set_filter() {
        for gens in [
            &[4, 5, 11][..],
            &[2, 3],
            &[3, 5, 7],
            &[5, 6, 7, 8, 9],
            &[4, 6, 7, 9],
            &[3, 7, 8],
            &[5, 7, 9],
            &[4, 7, 9, 10],
        ] {
            let s = sg(gens);
            assert!(s.genus() <= 8);
            for m in (1..=2 * s.frobenius() as u64 + 3).filter(|m| m % 2 == 1 && s.contains(*m as i64)) {
                assert_eq!(upper_m_sets(&s, m).unwrap(), upper_sets_by_filter(&s, m), "{s} m={m}");
            }
        }
    }

    #[test]
    fn worked_doubles() {
        let s = sg(&[4, 5, 11]);
        assert_eq!(build_double(&s, 5, &[3, 6, 7]).unwrap(), sg(&[5, 8, 11, 17]));
        let t = build_double(&s, 9, &[6, 7]).unwrap();
        assert_eq!(t, sg(&[8, 9, 10, 21, 22, 23]));
        assert_eq!(t.frobenius(), 15);
        assert_eq!(halve(&t), s);
    }

    #[test]
    fn frobenius_formula_examples() {
        let s = sg(&[4, 5, 11]);
        let gaps = s.gaps().to_vec();
        assert_eq!(frobenius_of_double(&s, 17, &gaps).unwrap(), 15);
        assert_eq!(build_double(&s, 17, &gaps).unwrap(), sg(&[8, 10, 17, 19, 21, 22, 23]));
        assert_eq!(frobenius_of_double(&s, 9, &gaps).unwrap(), 14);
        assert_eq!(frobenius_of_double(&s, 13, &[2, 3, 6, 7]).unwrap(), 15);
        assert_eq!(build_double(&s, 13, &[2, 3, 6, 7]).unwrap().frobenius(), 15);
    }

    #[test]
    fn empty_upper_set_gives_a_double() {
        let s = sg(&[2, 3]);
        let t = build_double(&s, 3, &[]).unwrap();
        assert_eq!(t, sg(&[3, 4]));
        assert_eq!(frobenius_of_double(&s, 3, &[]).unwrap(), 5);
        assert_eq!(halve(&t), s);
        let labels: Vec<DoubleLabel> = doubles_bounded(&s, 5).into_iter().map(|d| d.label).collect();
        assert!(labels.contains(&DoubleLabel::new(3, vec![])));
    }

    #[test]
    fn doubles_of_naturals() {
        let n = NumericalSemigroup::naturals();
        let d: Vec<NumericalSemigroup> = doubles_bounded(&n, 5).into_iter().map(|d| d.semigroup).collect();
        assert_eq!(d, vec![sg(&[2, 3]), sg(&[2, 5]), sg(&[2, 7])]);
        assert_eq!(build_double(&n, 1, &[]).unwrap(), n);
        assert!(build_double(&n, 3, &[1]).is_err());
    }

    #[test]
    fn frobenius_bound_below_twice_base_gives_nothing() {
        assert!(doubles_bounded(&sg(&[4, 5, 11]), 13).is_empty());
    }

    #[test]
    fn halving() {
        assert!(halve(&sg(&[2, 3])).is_naturals());
        assert_eq!(halve(&sg(&[5, 8, 11, 17])), sg(&[4, 5, 11]));
        assert!(halve(&NumericalSemigroup::naturals()).is_naturals());
    }

    #[test]
    fn label_text_and_json() {
        let label = DoubleLabel::new(5, vec![7, 3, 6]);
        assert_eq!(label.to_string(), "S(5; 3,6,7)");
        assert_eq!(DoubleLabel::new(3, vec![]).to_string(), "S(3;)");
        let d = Double {
            label,
            semigroup: sg(&[5, 8, 11, 17]),
        };
        let v: serde_json::Value = serde_json::to_value(&d).unwrap();
        assert_eq!(v["m"], 5);
        assert_eq!(v["H"], serde_json::json!([3, 6, 7]));
        assert_eq!(v["semigroup"]["generators"], serde_json::json!([5, 8, 11, 17]));
    }
}
