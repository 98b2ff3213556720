//! Exact Dodgson and Young election scores, their homogeneous (limit)
//! variants, and executable versions of the set-packing / Young-ranking
//! reduction chain.
//!
//! Everything numeric goes through [`lp`], an exact rational simplex with a
//! branch-and-bound layer on top. There are no floating-point tolerances
//! anywhere in the crate.
//!
//! ```
//! use yd_core::{Profile, scores};
//!
//! let p: Profile = "candidates: A B C\n\
//!                   voter: A > B > C\n\
//!                   voter: B > C > A\n\
//!                   voter: C > A > B\n".parse().unwrap();
//! assert_eq!(p.condorcet_winner(), None);
//! assert_eq!(scores::dodgson_score(&p, "A").unwrap(), 1);
//! assert_eq!(scores::young_score(&p, "A").unwrap(), 1);
//! ```

pub mod error;
pub mod homogeneous;
pub mod lp;
pub mod profile;
pub mod reductions;
pub mod report;
pub mod scores;

pub use error::{Error, Result};
pub use lp::{Rational, Status};
pub use profile::{CandidateId, PairwiseTally, PreferenceOrder, Profile};
pub use report::{Scheme, ScoreReport};
