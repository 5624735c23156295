//! Exact character degrees of the symmetric groups and executable
//! certificates for exponential lower bounds on them.
//!
//! The crate has three layers:
//!
//! * [`partition`], [`sampling`], [`families`]: Young diagrams, hooks,
//!   corner peeling, enumeration, exact-uniform sampling and the shape
//!   families used by sweeps;
//! * [`degree`], [`tableau`]: `f^λ` by the hook-length formula and the
//!   independent tableau oracles;
//! * [`certify`]: the lower-bound constructions, each producing a
//!   [`certify::BoundCertificate`] checked against the exact degree.

pub mod bigmath;
pub mod certify;
pub mod degree;
pub mod error;
pub mod families;
pub mod partition;
pub mod rational;
pub mod sampling;
pub mod tableau;

pub use degree::{degree, log_degree};
pub use error::{Error, Result};
pub use partition::{Cell, Partition};
pub use rational::Rational;
