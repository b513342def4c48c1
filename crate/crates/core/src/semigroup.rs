//! Canonical representation of a numerical semigroup.
//!
//! A semigroup is stored by its membership table on `0..=F+1`; everything
//! above the Frobenius number is a member. Gaps and the minimal system of
//! generators are derived once at construction and cached.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Constructions whose conductor would exceed this value fail with
/// [`Error::TooLarge`].
pub const DEFAULT_CONDUCTOR_LIMIT: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// Membership for `0..=F+1`; always ends with `true`.
    small: Vec<bool>,
    gaps: Vec<u64>,
    generators: Vec<u64>,
}

/// The four classical invariants of a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub frobenius: i64,
    pub multiplicity: u64,
    pub genus: usize,
    pub embedding_dimension: usize,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The semigroup `N` of all non-negative integers.
    pub fn naturals() -> Self {
        Self::from_table(vec![true])
    }

    /// The semigroup generated by `gens`, with the default size guard.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::from_generators_with_limit(gens, DEFAULT_CONDUCTOR_LIMIT)
    }

    /// Closure of `gens` under addition. Membership is computed incrementally
    /// until a run of `min(gens)` consecutive members appears, after which
    /// every integer is a member.
    pub fn from_generators_with_limit(gens: &[u64], limit: u64) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne {
                generators: gens.to_vec(),
                gcd: g,
            });
        }

        let smallest = sorted[0];
        let mut table = vec![true];
        let mut run = 1u64;
        let mut x = 0u64;
        while run < smallest {
            x += 1;
            if x > limit.saturating_add(smallest) {
                return Err(Error::TooLarge { limit });
            }
            let member = sorted
                .iter()
                .take_while(|&&g| g <= x)
                .any(|&g| table[(x - g) as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let s = Self::from_table(table);
        if s.conductor() > limit {
            return Err(Error::TooLarge { limit });
        }
        Ok(s)
    }

    /// The semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps<I: IntoIterator<Item = u64>>(gaps: I) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::NotASemigroup {
                reason: "0 cannot be a gap".into(),
            });
        }
        let frobenius = gaps.last().copied().unwrap_or(0);
        if frobenius > DEFAULT_CONDUCTOR_LIMIT {
            return Err(Error::TooLarge {
                limit: DEFAULT_CONDUCTOR_LIMIT,
            });
        }
        let mut table = vec![true; frobenius as usize + 1];
        for &g in &gaps {
            table[g as usize] = false;
        }
        let n = table.len();
        for a in 1..n {
            if !table[a] {
                continue;
            }
            for b in a..n - a {
                if table[b] && !table[a + b] {
                    return Err(Error::NotASemigroup {
                        reason: format!("{a} + {b} = {} is listed as a gap", a + b),
                    });
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// Builds a semigroup from a membership prefix; every index past the end
    /// of `table` is taken to be a member. The caller guarantees closure.
    pub(crate) fn from_table(mut table: Vec<bool>) -> Self {
        debug_assert!(table.first().copied().unwrap_or(true));
        while table.last() == Some(&true) {
            table.pop();
        }
        table.push(true);
        let gaps: Vec<u64> = table
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(i, _)| i as u64)
            .collect();
        let mut s = NumericalSemigroup {
            small: table,
            gaps,
            generators: Vec::new(),
        };
        s.generators = s.compute_generators();
        s
    }

    /// A nonzero member `s` is a minimal generator iff it is not a sum of two
    /// nonzero members. Candidates other than the multiplicity satisfy
    /// `s - m(S) ∉ S`, and any decomposition of such an `s` uses summands of
    /// the same kind, so only those are scanned.
    fn compute_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        if m == 1 {
            return vec![1];
        }
        let bound = (self.frobenius() + m as i64) as u64;
        let candidates: Vec<u64> = (m + 1..=bound)
            .filter(|&s| self.contains(s as i64) && !self.contains((s - m) as i64))
            .collect();
        let mut gens = vec![m];
        for &s in &candidates {
            let decomposable = candidates
                .iter()
                .take_while(|&&a| 2 * a <= s)
                .any(|&a| self.contains((s - a) as i64));
            if !decomposable {
                gens.push(s);
            }
        }
        gens
    }

    /// `{x ∈ N | (a·x mod b) ≤ c·x}`.
    ///
    /// Every `x ≥ ⌈(b−1)/c⌉` satisfies the inequality, so only the values
    /// below that bound are evaluated.
    pub fn proportionally_modular(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::NonPositiveParameter { a, b, c });
        }
        let bound = (b - 1).div_ceil(c);
        if bound > DEFAULT_CONDUCTOR_LIMIT {
            return Err(Error::TooLarge {
                limit: DEFAULT_CONDUCTOR_LIMIT,
            });
        }
        let table = (0..bound)
            .map(|x| ((a as u128 * x as u128) % b as u128) <= c as u128 * x as u128)
            .collect();
        Ok(Self::from_table(table))
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        match self.small.get(x as usize) {
            Some(&m) => m,
            None => true,
        }
    }

    /// `F(S)`; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.small.len() as i64 - 2
    }

    /// `F(S) + 1`, the smallest integer from which every integer is a member.
    pub fn conductor(&self) -> u64 {
        self.small.len() as u64 - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.small
            .iter()
            .skip(1)
            .position(|&m| m)
            .map_or(1, |i| i as u64 + 1)
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.generators
    }

    /// Members not exceeding the Frobenius number (always including 0).
    pub fn small_elements(&self) -> Vec<u64> {
        self.small[..self.small.len() - 1]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u64)
            .collect()
    }

    pub fn is_naturals(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            frobenius: self.frobenius(),
            multiplicity: self.multiplicity(),
            genus: self.genus(),
            embedding_dimension: self.embedding_dimension(),
        }
    }

    /// `⌈(F(S)+1)/m(S)⌉`, which is 0 for `N`.
    pub fn depth(&self) -> u64 {
        self.conductor().div_ceil(self.multiplicity())
    }

    /// `S ⊆ T` iff every gap of `T` is a gap of `S`.
    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        other.gaps.iter().all(|&g| !self.contains(g as i64))
    }

    pub fn intersect(&self, other: &NumericalSemigroup) -> NumericalSemigroup {
        let n = self.small.len().max(other.small.len());
        let table = (0..n as i64)
            .map(|x| self.contains(x) && other.contains(x))
            .collect();
        Self::from_table(table)
    }

    /// `S/d = {x ∈ N | d·x ∈ S}`.
    pub fn quotient(&self, d: u64) -> Result<NumericalSemigroup> {
        if d == 0 {
            return Err(Error::NonPositiveDivisor);
        }
        if d == 1 {
            return Ok(self.clone());
        }
        // d·x > F(S) as soon as x ≥ ⌈conductor/d⌉
        let bound = self.conductor().div_ceil(d);
        let table = (0..bound)
            .map(|x| self.contains((x * d) as i64))
            .collect();
        Ok(Self::from_table(table))
    }

    /// Gaps `x` with `k·x ∈ S` for every `k ≥ 2`. Checking `k = 2, 3` is
    /// enough: every `k ≥ 4` is a sum of 2s and 3s.
    pub fn fundamental_gaps(&self) -> Vec<u64> {
        self.gaps
            .iter()
            .copied()
            .filter(|&x| self.contains(2 * x as i64) && self.contains(3 * x as i64))
            .collect()
    }

    /// `S ∪ X` for a set `X` of gaps, when that union is again a semigroup.
    pub fn with_elements(&self, extra: &[u64]) -> Result<NumericalSemigroup> {
        Self::from_gaps(self.gaps.iter().copied().filter(|g| !extra.contains(g)))
    }
}

impl Ord for NumericalSemigroup {
    /// Lexicographic on minimal generators; two semigroups compare equal
    /// exactly when they are the same set.
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical ordering used for every listing produced by this crate.
pub fn canonical_compare(s: &NumericalSemigroup, t: &NumericalSemigroup) -> Ordering {
    s.cmp(t)
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupRecord {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    frobenius: i64,
    genus: usize,
    multiplicity: u64,
    depth: u64,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupRecord {
            generators: self.generators.clone(),
            gaps: self.gaps.clone(),
            frobenius: self.frobenius(),
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            depth: self.depth(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let record = SemigroupRecord::deserialize(deserializer)?;
        let s = NumericalSemigroup::from_generators(&record.generators).map_err(D::Error::custom)?;
        if s.gaps != record.gaps
            || s.frobenius() != record.frobenius
            || s.genus() != record.genus
            || s.multiplicity() != record.multiplicity
            || s.depth() != record.depth
        {
            return Err(D::Error::custom(format!(
                "record for {s} has inconsistent invariants"
            )));
        }
        Ok(s)
    }
}
