//! Phase-space integrals with a massive quark pair and a light third particle.

pub mod cli;
pub mod closed_forms;
pub mod dilog;
pub mod error;
pub mod integrand;
pub mod kinematics;
pub mod quadrature;
pub mod regularization;

pub use error::{Error, Result};
