//! Exact computation of the multiplicities `r_{λ,(a|b)}` of the Specht
//! modules `V_λ` in the restriction of the hook Weyl modules `W_(a|b)(C^n)`
//! to `S_n`, by three independent routes:
//!
//! - the character inner product `⟨S_(a|b), χ_λ⟩_n` ([`restriction::r_oracle`]),
//! - the alternating sum of series coefficients `κ` ([`restriction::r_kappa`]),
//! - a count of supertableaux with a red entry at the foot of the first
//!   column ([`restriction::r_tableau`]),
//!
//! together with executable checks of the two sign-reversing involutions on
//! tableaux that connect the second route to the third.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod genfunc;
pub mod involutions;
pub mod report;
pub mod restriction;
pub mod series;
pub mod tableaux;

pub use error::{Error, Result};
