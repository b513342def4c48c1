//! Breadth-first construction of the rooted tree of a quotient-closed family,
//! restricted to semigroups with bounded Frobenius number.
//!
//! The root is `N`; the parent of every other node `T` is `T/2`. The children
//! of `S` are the bounded doubles of `S` accepted by the family's predicate.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::doubles::{doubles_bounded, halve};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Membership test for a family closed under quotients and containing `N`.
pub trait VarietyPredicate: Sync {
    fn name(&self) -> String;
    fn accepts(&self, s: &NumericalSemigroup) -> bool;
}

/// Every numerical semigroup.
#[derive(Debug, Clone, Copy, Default)]
pub struct AllSemigroups;

impl VarietyPredicate for AllSemigroups {
    fn name(&self) -> String {
        "all".into()
    }

    fn accepts(&self, _: &NumericalSemigroup) -> bool {
        true
    }
}

/// Semigroups of depth at most `q`.
#[derive(Debug, Clone, Copy)]
pub struct MaxDepth(pub u64);

impl VarietyPredicate for MaxDepth {
    fn name(&self) -> String {
        format!("depth<={}", self.0)
    }

    fn accepts(&self, s: &NumericalSemigroup) -> bool {
        s.depth() <= self.0
    }
}

pub fn depth_predicate(q: u64) -> MaxDepth {
    MaxDepth(q)
}

/// A predicate from a closure. Quotient closure is checked while the tree is
/// built, not assumed.
pub struct FnPredicate<F> {
    name: String,
    f: F,
}

impl<F> FnPredicate<F>
where
    F: Fn(&NumericalSemigroup) -> bool + Sync,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnPredicate { name: name.into(), f }
    }
}

impl<F> VarietyPredicate for FnPredicate<F>
where
    F: Fn(&NumericalSemigroup) -> bool + Sync,
{
    fn name(&self) -> String {
        self.name.clone()
    }

    fn accepts(&self, s: &NumericalSemigroup) -> bool {
        (self.f)(s)
    }
}

/// Children of `s`: accepted doubles with Frobenius number at most `bound`,
/// excluding `s` itself and `N`.
pub fn children<P: VarietyPredicate + ?Sized>(
    s: &NumericalSemigroup,
    bound: u64,
    predicate: &P,
) -> Vec<NumericalSemigroup> {
    doubles_bounded(s, bound)
        .into_iter()
        .map(|d| d.semigroup)
        .filter(|t| t != s && !t.is_naturals() && predicate.accepts(t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyTree {
    bound: u64,
    /// Canonically sorted; index 0 is `N`.
    nodes: Vec<NumericalSemigroup>,
    /// `(parent, child)` index pairs, sorted.
    edges: Vec<(usize, usize)>,
}

impl VarietyTree {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn root(&self) -> &NumericalSemigroup {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[NumericalSemigroup] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, s: &NumericalSemigroup) -> Option<usize> {
        self.nodes.binary_search(s).ok()
    }

    pub fn parent_of(&self, child: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.1 == child).map(|e| e.0)
    }

    pub fn children_of(&self, parent: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.0 == parent)
            .map(|e| e.1)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph variety_tree {\n");
        for n in &self.nodes {
            let _ = writeln!(out, "    \"{n}\";");
        }
        for &(p, c) in &self.edges {
            let _ = writeln!(out, "    \"{}\" -> \"{}\";", self.nodes[p], self.nodes[c]);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Adjacency<'a> {
            nodes: &'a [NumericalSemigroup],
            edges: Vec<[usize; 2]>,
        }
        let adj = Adjacency {
            nodes: &self.nodes,
            edges: self.edges.iter().map(|&(p, c)| [p, c]).collect(),
        };
        serde_json::to_string(&adj).expect("tree serialisation cannot fail")
    }

    /// One node per line, in canonical order.
    pub fn to_text(&self) -> String {
        self.nodes.iter().map(|n| format!("{n}\n")).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Text,
    Dot,
    Json,
}

impl FromStr for TreeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TreeFormat::Text),
            "dot" => Ok(TreeFormat::Dot),
            "json" => Ok(TreeFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_tree(tree: &VarietyTree, format: &str) -> Result<String> {
    Ok(match format.parse()? {
        TreeFormat::Text => tree.to_text(),
        TreeFormat::Dot => tree.to_dot(),
        TreeFormat::Json => tree.to_json(),
    })
}

fn check_closed<P: VarietyPredicate + ?Sized>(predicate: &P, s: &NumericalSemigroup) -> Result<()> {
    for &d in s.gaps() {
        if !predicate.accepts(&s.quotient(d).expect("gaps are positive")) {
            return Err(Error::PredicateNotClosed {
                predicate: predicate.name(),
                semigroup: s.to_string(),
                divisor: d,
            });
        }
    }
    Ok(())
}

/// All semigroups accepted by `predicate` with Frobenius number at most
/// `bound`, arranged as a tree rooted at `N`. Levels are expanded in
/// parallel and merged in canonical order, so the result does not depend on
/// scheduling.
pub fn enumerate<P: VarietyPredicate + ?Sized>(bound: u64, predicate: &P) -> Result<VarietyTree> {
    let root = NumericalSemigroup::naturals();
    if !predicate.accepts(&root) {
        return Err(Error::PredicateNotClosed {
            predicate: predicate.name(),
            semigroup: root.to_string(),
            divisor: 1,
        });
    }
    let mut seen: HashSet<NumericalSemigroup> = HashSet::from([root.clone()]);
    let mut parent: BTreeMap<NumericalSemigroup, NumericalSemigroup> = BTreeMap::new();
    let mut frontier = vec![root];
    while !frontier.is_empty() {
        let expanded: Vec<(NumericalSemigroup, Vec<NumericalSemigroup>)> = frontier
            .par_iter()
            .map(|s| (s.clone(), children(s, bound, predicate)))
            .collect();
        let mut next = Vec::new();
        for (s, kids) in expanded {
            for kid in kids {
                debug_assert_eq!(halve(&kid), s);
                check_closed(predicate, &kid)?;
                if seen.insert(kid.clone()) {
                    parent.insert(kid.clone(), s.clone());
                    next.push(kid);
                }
            }
        }
        next.sort();
        frontier = next;
    }

    let mut nodes: Vec<NumericalSemigroup> = seen.into_iter().collect();
    nodes.sort();
    let index = |s: &NumericalSemigroup| nodes.binary_search(s).expect("node was recorded");
    let mut edges: Vec<(usize, usize)> = parent.iter().map(|(c, p)| (index(p), index(c))).collect();
    edges.sort_unstable();
    Ok(VarietyTree {
        bound,
        nodes,
        edges,
    })
}
