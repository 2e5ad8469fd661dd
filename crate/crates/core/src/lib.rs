//! Upper bounds for the Bartnik mass of constant-mean-curvature spheres.
//!
//! Given a conformal metric `g = e^{2w} g★` on the 2-sphere and a constant
//! mean curvature `H > 0`, this crate numerically constructs admissible
//! paths of metrics ending at a round metric, searches the feasibility
//! inequality that controls the path constant `D(g, H)`, builds the explicit
//! collar 3-metrics `γ = E(t) g(t) + Φ(t)² dt²` whose scalar curvature and
//! boundary Hawking mass certify the bound, and verifies every inequality
//! pointwise on a spectral grid.
//!
//! The crate is `no_std`-compatible (with `alloc`); all IO, file formats and
//! the command-line front end live in the companion `bartnik-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod admiss;
pub mod collar;
pub mod conformal;
pub mod error;
pub mod extend;
pub mod fd_oracle;
pub mod math;
pub mod mspath;
pub mod profile;
pub mod sphgrid;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
