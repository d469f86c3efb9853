//! Exact multiplier Hopf algebras over computable groups, partial actions and
//! coactions on nonunital algebras, and their globalizations.
//!
//! Every structure is represented over exact rationals and every property is
//! verified by exhaustive or explicitly windowed checks that return a [`Report`].

pub mod algebra;
pub mod convolution;
pub mod error;
pub mod finsup;
pub mod group;
pub mod group_correspondence;
pub mod linalg;
pub mod mha;
pub mod partial_action;
pub mod partial_coaction;
pub mod report;
pub mod scalar;
pub mod token;

pub use error::{Error, Result};
pub use finsup::{tensor, FinSup, Tensor, Tensor3, Vector};
pub use group::GroupSpec;
pub use report::{Outcome, Report};
pub use scalar::Scalar;
pub use token::Tok;
