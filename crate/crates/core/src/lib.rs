//! Patchworks: families of subsets closed under the union, intersection and
//! differences of overlapping pairs.
//!
//! Given a finite ground set Ω and a family of subsets, this crate computes
//! the generated patchwork, extracts its tree of autonomous sets, and decides
//! whether Ω can be totally ordered so that every set in the family is an
//! interval. Positive answers come with an ordering, negative answers with a
//! checkable certificate.
//!
//! ```
//! use patchwork::{decide, parse_family, DecideOptions};
//!
//! let f = parse_family(r#"{"omega":["x","y","z"],"sets":[["x","y"],["y","z"],["x","z"]]}"#)?;
//! let d = decide(&f, &DecideOptions::default())?;
//! assert!(!d.verdict.is_orderable());
//! # Ok::<(), patchwork::Error>(())
//! ```

pub mod cli;
pub mod closure;
mod error;
pub mod graph;
pub mod intervalgraph;
pub mod orderability;
pub mod setcore;
pub mod structure;
pub mod testkit;

pub use closure::{close, close_bounded, is_patchwork, ClosureOutcome, Patchwork};
pub use error::{Error, Result};
pub use orderability::{decide, verify_order, Certificate, DecideOptions, Decision, Verdict};
pub use setcore::{overlap, parse_family, serialize_family, GroundSet, SetFamily, SubsetMask};
pub use structure::{autonomy_tree, synthesize_patchwork, AutonomyTree, CaseLabel, TreeSpec};
