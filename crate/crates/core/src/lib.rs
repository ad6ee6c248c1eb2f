//! Exact evaluation of the Dirac inequality for highest weight modules of the
//! classical Hermitian symmetric families `sp(2n,ℝ)`, `so*(2n)`, `su(p,q)`,
//! `so(2,2n−2)` and `so(2,2n−1)`.
//!
//! Everything works at the level of weight vectors with exact rational
//! coordinates: dominant representatives under the compact Weyl group, the
//! margin `‖(λ−s)⁺+ρ‖² − ‖λ+ρ‖²` against Schmid modules `s`, the closed-form
//! thresholds for each family, and a level-ordered classifier built on them.

pub mod classify;
pub mod cli;
pub mod criteria;
pub mod dirac;
pub mod error;
pub mod family;
pub mod scalar;
pub mod suites;
pub mod schmid;
pub mod weight;
pub mod weyl;

pub use classify::{classify, crosscheck, verify_gen_prv, verify_red_sp, Verdict};
pub use criteria::{basic_threshold, full_condition, schmid_threshold, Guarantee, Threshold};
pub use dirac::{dirac_compare, dirac_margin, DiracContext, Margin, Sign};
pub use error::{Error, Result};
pub use family::Family;
pub use scalar::Scalar;
pub use schmid::{basic_schmid, enumerate_by_level, SchmidCoeffs};
pub use weight::{validate_weight, Weight};
pub use weyl::{dominant, norm_sq_shifted, rho, weyl_orbit};
