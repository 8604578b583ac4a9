//! Construction planning for simply connected minimal symplectic 4-manifolds.
//!
//! The crate plans, for a pair (c1^2, chi_h) in the geography cone, a
//! construction recipe built from catalogued model manifolds, evaluates the
//! recipe's characteristic numbers exactly, and certifies simple connectivity
//! from fundamental-group presentation data by generator elimination.

pub mod blocks;
pub mod error;
pub mod fpgroup;
pub mod invariants;
pub mod planner;
pub mod surgery;

pub use error::{Error, Result};
pub use invariants::{char_from_c_chi, char_from_e_sigma, in_geography_cone, is_exception, CharNumbers};
