//! Arithmetic extensions of a semigroup and the smallest arithmetic variety
//! containing a finite family.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A finite family of semigroups, duplicate-free and canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietySet {
    members: Vec<NumericalSemigroup>,
}

impl VarietySet {
    pub fn new<I: IntoIterator<Item = NumericalSemigroup>>(members: I) -> Self {
        let set: BTreeSet<NumericalSemigroup> = members.into_iter().collect();
        VarietySet {
            members: set.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &[NumericalSemigroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NumericalSemigroup> {
        self.members.iter()
    }

    pub fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.members.iter().enumerate().all(|(i, s)| {
            self.members[i + 1..]
                .iter()
                .all(|t| self.contains(&s.intersect(t)))
        })
    }

    /// Checks `S/d` for every member `S` and every `1 ≤ d ≤ max_divisor`.
    pub fn is_quotient_closed(&self, max_divisor: u64) -> bool {
        self.members.iter().all(|s| {
            (1..=max_divisor).all(|d| self.contains(&s.quotient(d).expect("d ≥ 1")))
        })
    }
}

impl<'a> IntoIterator for &'a VarietySet {
    type Item = &'a NumericalSemigroup;
    type IntoIter = std::slice::Iter<'a, NumericalSemigroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Closes `seed` under pairwise intersection with a worklist.
fn intersection_closure(seed: Vec<NumericalSemigroup>) -> HashSet<NumericalSemigroup> {
    let mut seen: HashSet<NumericalSemigroup> = HashSet::new();
    let mut members: Vec<NumericalSemigroup> = Vec::new();
    let mut work: Vec<NumericalSemigroup> = Vec::new();
    for s in seed {
        if seen.insert(s.clone()) {
            work.push(s);
        }
    }
    while let Some(s) = work.pop() {
        for t in &members {
            let meet = s.intersect(t);
            if seen.insert(meet.clone()) {
                work.push(meet);
            }
        }
        members.push(s);
    }
    seen
}

/// All arithmetic extensions of `s`: intersections of quotients `S/d` with
/// `d` a gap, together with `N`. Divisors that are members only yield `N`.
pub fn arithmetic_extensions(s: &NumericalSemigroup) -> VarietySet {
    let mut seed = vec![NumericalSemigroup::naturals()];
    seed.extend(s.gaps().iter().map(|&d| s.quotient(d).expect("gaps are positive")));
    VarietySet::new(intersection_closure(seed))
}

/// Whether `t` is an intersection of quotients of `s`.
///
/// `t ⊆ S/d` iff `d·g ∈ S` for each minimal generator `g` of `t`. The
/// intersection of all such quotients is the smallest arithmetic extension of
/// `s` containing `t`, so `t` is one exactly when it equals that intersection.
/// Only gap divisors need scanning since `S/d = N` for `d ∈ S`.
pub fn is_arithmetic_extension(s: &NumericalSemigroup, t: &NumericalSemigroup) -> bool {
    if t.is_naturals() {
        return true;
    }
    if !s.is_subset_of(t) {
        return false;
    }
    let mut hull = NumericalSemigroup::naturals();
    for &d in s.gaps() {
        let contained = t
            .min_generators()
            .iter()
            .all(|&g| s.contains((d * g) as i64));
        if contained {
            hull = hull.intersect(&s.quotient(d).expect("gaps are positive"));
        }
    }
    hull == *t
}

/// The smallest arithmetic variety containing `family`.
///
/// Intersections `T_1 ∩ … ∩ T_n` with `T_i ∈ A({S_i})` are folded one family
/// member at a time, keeping only distinct partial intersections, so the
/// cartesian product is never materialised.
pub fn smallest_variety(family: &[NumericalSemigroup]) -> VarietySet {
    let mut partial: HashSet<NumericalSemigroup> = HashSet::new();
    partial.insert(NumericalSemigroup::naturals());
    for s in family {
        let ext = arithmetic_extensions(s);
        partial = partial
            .iter()
            .flat_map(|p| ext.iter().map(move |t| p.intersect(t)))
            .collect();
    }
    partial.insert(NumericalSemigroup::naturals());
    VarietySet::new(partial)
}

/// Inclusion-extremal elements of `A({S})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalElements {
    pub max: NumericalSemigroup,
    pub min: NumericalSemigroup,
    /// Largest element other than `N`.
    pub max_proper: NumericalSemigroup,
    /// Smallest element other than `S`.
    pub min_proper: NumericalSemigroup,
}

fn greatest<'a, I>(candidates: I) -> Option<NumericalSemigroup>
where
    I: Iterator<Item = &'a NumericalSemigroup> + Clone,
{
    candidates
        .clone()
        .find(|c| candidates.clone().all(|o| o.is_subset_of(c)))
        .cloned()
}

fn least<'a, I>(candidates: I) -> Option<NumericalSemigroup>
where
    I: Iterator<Item = &'a NumericalSemigroup> + Clone,
{
    candidates
        .clone()
        .find(|c| candidates.clone().all(|o| c.is_subset_of(o)))
        .cloned()
}

/// Finds the four extremal elements of `A({S})` by inclusion search over the
/// computed extension set.
pub fn extremal_elements(s: &NumericalSemigroup) -> Result<ExtremalElements> {
    if s.is_naturals() {
        return Err(Error::IsNaturals);
    }
    let ext = arithmetic_extensions(s);
    let missing = |which| Error::MissingExtremum {
        which,
        semigroup: s.to_string(),
    };
    let max = greatest(ext.iter()).ok_or_else(|| missing("greatest"))?;
    let min = least(ext.iter()).ok_or_else(|| missing("least"))?;
    let max_proper =
        greatest(ext.iter().filter(|t| !t.is_naturals())).ok_or_else(|| missing("greatest proper"))?;
    let min_proper = least(ext.iter().filter(|t| *t != s)).ok_or_else(|| missing("least proper"))?;
    Ok(ExtremalElements {
        max,
        min,
        max_proper,
        min_proper,
    })
}

/// The smallest monoid of `variety` containing `elements`: the intersection of
/// every member containing all of them. `N` is always a member, so the
/// intersection is never empty, and a finite intersection is again a
/// numerical semigroup.
pub fn monoid_hull(variety: &VarietySet, elements: &[u64]) -> NumericalSemigroup {
    variety
        .iter()
        .filter(|t| elements.iter().all(|&x| t.contains(x as i64)))
        .fold(NumericalSemigroup::naturals(), |acc, t| acc.intersect(t))
}
