//! Variability regions of close-to-convex functions.
//!
//! Computes the regions `U_r`, `V_r`, `W_r` and their logarithmic
//! counterparts `LU_r`, `LV_r`, `LW_r` from closed-form parametrizations
//! (envelope of a circle family, Krzyż curve, Möbius sweeps) and
//! cross-checks every closed form against independent brute-force oracles.

pub mod branch;
pub mod checks;
pub mod envelope;
pub mod error;
pub mod extremal;
pub mod output;
pub mod polyline;
pub mod predicates;
pub mod regions;
pub mod report;
pub mod roots;
pub mod solvers;

pub use error::Error;
pub use num_complex::Complex64;
pub use polyline::{Disk, Polyline};
pub use regions::{Family, RegionSpec, SampleCloud};

pub type Result<T> = std::result::Result<T, Error>;

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
