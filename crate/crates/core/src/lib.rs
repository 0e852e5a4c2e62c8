//! Computational finite group theory over explicit permutation groups:
//! stabilizer chains, structural series, induced automorphism groups, and
//! Carter subgroup search, plus a verification harness over a group corpus.

pub mod carter;
pub mod config;
pub mod corpus;
pub mod cosets;
pub mod error;
pub mod group;
pub mod harness;
pub mod hom;
pub mod io;
pub mod induced;
pub mod perm;
pub mod recognize;
pub mod series;
pub mod structure;

pub use config::Config;
pub use error::{Error, Result};
pub use group::Group;
pub use perm::Perm;
