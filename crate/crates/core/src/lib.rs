//! Casimir free energy of a wedge filled with a medium and closed by a
//! circular arc of radius `a`.
//!
//! The crate is organised bottom-up:
//!
//! * [`bessel`] evaluates `I_ν`, `K_ν`, `J_ν`, `Y_ν` for real order, the
//!   product derivative `λ_ν(x) = (I_ν K_ν)'`, and zeros of `J_ν`, `J'_ν`.
//! * [`quadrature`] provides adaptive Gauss–Kronrod integration on finite and
//!   semi-infinite intervals.
//! * [`energy`] assembles the regularised m-sums for the strong (perfectly
//!   conducting), weak diaphanous and dilute dielectric regimes.
//! * [`modes`] covers eigenfrequencies, fields and the dielectric-boundary
//!   dispersion relation.
//! * [`string_radiation`] computes Bogoliubov coefficients and radiation
//!   spectra for the sudden formation of a cosmic string on the wedge axis.
//! * [`zero_mode`] analyses the residual `m = 0` term.
//! * [`verify`] bundles the reproducibility checks run by `wedge verify`.
//!
//! Natural units `ħ = c = 1` are used throughout.

pub mod bessel;
pub mod energy;
mod error;
pub mod modes;
pub mod quadrature;
mod roots;
pub mod series;
pub mod string_radiation;
pub mod verify;
pub mod zero_mode;

pub use error::{Error, Result};
