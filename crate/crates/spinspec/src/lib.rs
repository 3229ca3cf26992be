//! Exact-arithmetic spectra of the squared Dirac and Rarita-Schwinger
//! operators on spheres, odd complex projective spaces, and quaternionic
//! projective spaces.
//!
//! All computation is done over arbitrary-precision rationals: eigenvalues
//! are exact fractions and multiplicities exact integers. The crate layers
//! as follows:
//!
//! - [`weight`]: root data, dominant weights, invariant forms;
//! - [`rep`]: Casimir eigenvalues, Weyl dimensions, a Freudenthal character
//!   oracle, and branching by character restriction;
//! - [`branching`]: fast closed-form branching predicates cross-checked
//!   against the oracle;
//! - [`spaces`]: the three symmetric-space models and their eigenvalue
//!   family labels;
//! - [`engine`]: spectrum enumeration, validation, and the oracle sweep;
//! - [`cli`]: argument parsing and output rendering for the `spinspec` binary.

pub mod branching;
pub mod cli;
pub mod engine;
pub mod error;
pub mod rational;
pub mod rep;
pub mod spaces;
pub mod weight;

pub use error::{Error, Result};
pub use rational::{Integer, Rational};
pub use weight::{GroupDescriptor, Series, Weight};
