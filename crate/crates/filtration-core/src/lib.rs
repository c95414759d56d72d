//! Closed-form model of aerosol capture in fibrous filter media.
//!
//! The model combines the single-fiber capture factors of diffusion,
//! interception and inertial impaction into a mechanism sum, and folds that
//! sum into the penetration and efficiency of a fiber mat of given thickness
//! and solidity. On top of the single-point evaluation, [`mod@sweep`]
//! provides one-parameter grid sweeps, fractional-efficiency curves over
//! particle diameter, and a most-penetrating-particle-size search.
//!
//! # Units
//!
//! Inputs follow a fixed unit convention; all conversions happen inside the
//! operations and callers never pre-scale:
//!
//! * filter thickness `L` in millimeters,
//! * particle diameter `d_p` and fiber diameter `d_f` in micrometers,
//! * element (pipeline) diameter `d_F` in meters,
//! * velocity `u` in m/s, viscosity `mu` in kg/(m s), temperature `T` in K,
//! * densities in kg/m^3.
//!
//! Penetration and efficiency are fractions in `[0, 1]`; rendering them as
//! percentages is left to presentation layers.
//!
//! The crate is `no_std`-compatible: disable default features and enable
//! `libm` instead (`alloc` is still required).

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("either the `std` or the `libm` feature must be enabled");

extern crate alloc;

pub mod error;
mod math;
pub mod model;
pub mod sweep;

pub use error::{DomainError, Requirement, Warning};
pub use model::{
    efficiency, equivalent_diameter, eta_diffusion, eta_impaction, eta_interception, evaluate,
    inertial_j, interception_ratio, kuwabara, peclet, penetration, reynolds, slip_correction,
    stokes, DimensionlessGroups, FilterMedium, FiltrationResult, FluidState, MechanismFactors,
    ModelConstants, Particle, Scenario,
};
pub use sweep::{
    find_mpps, sweep, CurvePoint, GridScale, MppsError, MppsResult, ParseSymbolError, SweepError,
    SweepParameter, SweepSpec,
};
