#![allow(dead_code)]

use std::collections::BTreeSet;

use numsgp::NumericalSemigroup;

pub fn sg(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

/// All sums of generators up to `limit`, by naive dynamic programming over
/// the integers. Independent of the library's closure routine.
pub fn brute_closure(gens: &[u64], limit: u64) -> BTreeSet<u64> {
    let mut members = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if y <= limit && members.insert(y) {
                frontier.push(y);
            }
        }
    }
    members
}

pub fn brute_gaps(gens: &[u64], limit: u64) -> Vec<u64> {
    let members = brute_closure(gens, limit);
    (1..=limit).filter(|x| !members.contains(x)).collect()
}

pub fn set_of(list: &[NumericalSemigroup]) -> BTreeSet<NumericalSemigroup> {
    list.iter().cloned().collect()
}
