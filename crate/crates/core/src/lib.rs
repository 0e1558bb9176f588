//! Matchings between finite subsets of groups.
//!
//! A *matching* from `A` to `B` is a bijection `φ: A → B` with `aφ(a) ∉ A`
//! for every `a ∈ A`. This crate computes matchings (or certifies that none
//! exist), and checks the classical results around them by exhaustive and
//! seeded random search over small groups:
//!
//! - an identity-free `A` always admits a matching to itself;
//! - a group has the matching property iff it is torsion-free or cyclic of
//!   prime order;
//! - Kemperman's and Olson's lower bounds on `|AB|` in arbitrary groups.
//!
//! Modules: [`group`] builds and validates groups, [`subset`] does product-set
//! arithmetic, [`matching`] is the bipartite matching engine, [`lab`] holds
//! the theorem checks and reports, [`io`] the text formats and [`cli`] the
//! command-line front end.

pub mod cli;
pub mod error;
pub mod group;
pub mod io;
pub mod lab;
pub mod matching;
pub mod subset;
mod util;

pub use error::{Error, NotAGroupReason, Result};
pub use group::{Group, GroupClassification, GroupTable, LatticeGroup, LatticePoint};
pub use matching::{
    brute_force_matching, build_graph, find_matching, verify_matching, HallViolator, MatchOutcome,
    MatchabilityGraph, Matching, MatchingDefect,
};
pub use subset::{
    candidate_set, product_set, stable_set, unique_products, GroupSubset, ProductWitness,
};
