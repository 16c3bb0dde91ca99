//! Exact computations with monomial ideals, Stanley–Reisner rings, pullback
//! rings, (S₂)-ifications, trace ideals and numerical semigroups, together
//! with claim-by-claim verification reports for a registry of worked
//! examples.

pub mod error;
pub mod families;
pub mod field;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod pullback;
pub mod registry;
pub mod report;
pub mod s2;
pub mod semigroup;
pub mod simplicial;
pub mod suite;

pub use error::{Error, Result};
