//! Ideal theory of finite semigroups given by Cayley tables.
//!
//! The crate covers left, right, two-sided, quasi-, bi- and interior ideals,
//! the prime/semiprime/irreducible families of interior ideals, minimality,
//! Green's relations with the `IN(a)` relation 𝓘, exhaustive enumeration of
//! small semigroups, and a registry of theorems about interior ideals that can
//! be checked against every semigroup of a given order.

pub mod classify;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod green;
pub mod harness;
pub mod idealprops;
pub mod ideals;
pub mod semigroup;

pub use classify::{classify, ClassificationReport};
pub use elemset::{ElemSet, MAX_ORDER};
pub use enumerate::{canonical_form, enumerate_semigroups, ClassFilter, Dedup, EnumerationConfig};
pub use error::{
    AssociativityViolation, Error, NamedViolation, ParseError, ParseErrorKind, TableError,
};
pub use format::{parse_catalog, parse_semigroup, to_sg};
pub use green::{green_partition, refines, Relation, RelationPartition};
pub use harness::{
    find_counterexample, run_suite, verify, SuiteReport, TheoremId, TheoremVerdict, Verdict,
};
pub use idealprops::{profile, IdealProfile};
pub use ideals::{enumerate_ideals, is_ideal_of_kind, principal, IdealKind, PrincipalKind};
pub use semigroup::{check_associativity, sandwich, subset_product, Semigroup};
