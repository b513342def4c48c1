//! Numerical semigroups and their arithmetic varieties.
//!
//! A numerical semigroup is a co-finite additive submonoid of the
//! non-negative integers. This crate computes the usual invariants,
//! quotients `S/d` and intersections, the smallest family closed under both
//! that contains a given finite family, the semigroups `T` with `T/2 = S`
//! up to a Frobenius bound, and the tree obtained by repeatedly taking such
//! doubles from `N`. An exhaustive brute-force enumerator is included as an
//! independent oracle.

pub mod agreement;
pub mod doubles;
pub mod error;
pub mod oracle;
pub mod semigroup;
pub mod tree;
pub mod varieties;

pub use doubles::{
    build_double, doubles_bounded, frobenius_of_double, halve, is_upper_m_set, upper_m_sets, Double,
    DoubleLabel, UpperMSetCertificate,
};
pub use agreement::{check_agreement, AgreementReport};
pub use error::{Error, Result};
pub use oracle::{all_semigroups_up_to, doubles_in, doubles_oracle, extension_oracle, EnumerationReport};
pub use semigroup::{canonical_compare, Invariants, NumericalSemigroup, DEFAULT_CONDUCTOR_LIMIT};
pub use tree::{
    children, depth_predicate, enumerate, export_tree, AllSemigroups, FnPredicate, MaxDepth, TreeFormat,
    VarietyPredicate, VarietyTree,
};
pub use varieties::{
    arithmetic_extensions, extremal_elements, is_arithmetic_extension, monoid_hull, smallest_variety,
    ExtremalElements, VarietySet,
};
