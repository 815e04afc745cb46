//! Finite group computations centred on automizers `N_G(H)/C_G(H)`, and a
//! harness that checks structural statements about them over a catalog of
//! small groups.
//!
//! Groups are Cayley tables on `0..n` ([`group::Group`]); subgroups are
//! bitsets tied to their parent ([`subgroup::Subgroup`]).

pub mod caps;
pub mod catalog;
pub mod error;
pub mod exec;
pub mod group;
pub mod harness;
pub mod numth;
pub mod predicates;
pub mod subgroup;

pub use caps::Caps;
pub use error::{GroupError, Result};
pub use exec::Exec;
pub use group::Group;
pub use subgroup::Subgroup;
