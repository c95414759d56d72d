//! One-parameter sweeps over the model and the most-penetrating-particle-size
//! search on the penetration curve P(d_p).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{require_below, require_positive, DomainError, Requirement};
use crate::math;
use crate::model::{FiltrationResult, Scenario};

/// Scenario field a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    /// Particle diameter d_p, micrometers.
    ParticleDiameter,
    /// Filter thickness L, millimeters.
    Thickness,
    /// Fiber diameter d_f, micrometers.
    FiberDiameter,
    /// Solidity alpha.
    Solidity,
    /// Face velocity u, m/s.
    Velocity,
    /// Temperature T, kelvin.
    Temperature,
    /// Viscosity mu, kg/(m s).
    Viscosity,
    /// Particle density rho_p, kg/m^3.
    ParticleDensity,
}

impl SweepParameter {
    pub const ALL: [SweepParameter; 8] = [
        SweepParameter::ParticleDiameter,
        SweepParameter::Thickness,
        SweepParameter::FiberDiameter,
        SweepParameter::Solidity,
        SweepParameter::Velocity,
        SweepParameter::Temperature,
        SweepParameter::Viscosity,
        SweepParameter::ParticleDensity,
    ];

    /// Short symbol used on the command line and in reports.
    pub fn symbol(&self) -> &'static str {
        match self {
            SweepParameter::ParticleDiameter => "dp",
            SweepParameter::Thickness => "L",
            SweepParameter::FiberDiameter => "df",
            SweepParameter::Solidity => "alpha",
            SweepParameter::Velocity => "u",
            SweepParameter::Temperature => "T",
            SweepParameter::Viscosity => "mu",
            SweepParameter::ParticleDensity => "rho_p",
        }
    }

    fn apply(&self, scenario: &mut Scenario, value: f64) {
        match self {
            SweepParameter::ParticleDiameter => scenario.particle.diameter_um = value,
            SweepParameter::Thickness => scenario.medium.thickness_mm = value,
            SweepParameter::FiberDiameter => scenario.medium.fiber_diameter_um = value,
            SweepParameter::Solidity => scenario.medium.solidity = value,
            SweepParameter::Velocity => scenario.fluid.velocity_m_s = value,
            SweepParameter::Temperature => scenario.fluid.temperature_k = value,
            SweepParameter::Viscosity => scenario.fluid.viscosity_pa_s = value,
            SweepParameter::ParticleDensity => scenario.particle.density_kg_m3 = value,
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Failure to parse a symbol into one of an enum's variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSymbolError {
    pub input: String,
    pub expected: &'static str,
}

impl fmt::Display for ParseSymbolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown symbol `{}`, expected one of: {}", self.input, self.expected)
    }
}

impl core::error::Error for ParseSymbolError {}

impl FromStr for SweepParameter {
    type Err = ParseSymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .find(|p| p.symbol() == s)
            .copied()
            .ok_or(ParseSymbolError {
                input: String::from(s),
                expected: "dp, L, df, alpha, u, T, mu, rho_p",
            })
    }
}

/// Grid spacing rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridScale {
    #[default]
    Linear,
    Logarithmic,
}

impl FromStr for GridScale {
    type Err = ParseSymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linear" => Ok(GridScale::Linear),
            "log" | "logarithmic" => Ok(GridScale::Logarithmic),
            other => Err(ParseSymbolError {
                input: String::from(other),
                expected: "linear, log, logarithmic",
            }),
        }
    }
}

/// A one-parameter grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    /// First grid value, in the parameter's own unit.
    pub start: f64,
    /// Last grid value.
    pub stop: f64,
    /// Number of grid points, at least 2.
    pub points: usize,
    pub scale: GridScale,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), DomainError> {
        if self.points < 2 {
            return Err(DomainError {
                symbol: "points",
                value: self.points as f64,
                requirement: Requirement::AtLeast(2.0),
            });
        }
        require_below("start", self.start, "stop", self.stop)?;
        if self.scale == GridScale::Logarithmic {
            require_positive("start", self.start)?;
        }
        Ok(())
    }

    /// The grid values in ascending order; endpoints are exact.
    pub fn grid(&self) -> Result<Vec<f64>, DomainError> {
        self.validate()?;
        let n = self.points;
        let steps = (n - 1) as f64;
        let mut values = Vec::with_capacity(n);
        match self.scale {
            GridScale::Linear => {
                let step = (self.stop - self.start) / steps;
                for i in 0..n {
                    values.push(self.start + step * i as f64);
                }
            }
            GridScale::Logarithmic => {
                let log_start = math::ln(self.start);
                let log_step = (math::ln(self.stop) - log_start) / steps;
                for i in 0..n {
                    values.push(math::exp(log_start + log_step * i as f64));
                }
            }
        }
        values[0] = self.start;
        values[n - 1] = self.stop;
        Ok(values)
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub parameter_value: f64,
    pub result: FiltrationResult,
}

/// Sweep failure.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepError {
    /// The sweep spec or the base scenario violates an invariant.
    Invalid(DomainError),
    /// A grid point produced a scenario outside the model domain.
    Point {
        index: usize,
        parameter_value: f64,
        source: DomainError,
    },
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::Invalid(e) => e.fmt(f),
            SweepError::Point {
                index,
                parameter_value,
                source,
            } => write!(f, "grid point {index} (value {parameter_value}): {source}"),
        }
    }
}

impl core::error::Error for SweepError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            SweepError::Invalid(e) => Some(e),
            SweepError::Point { source, .. } => Some(source),
        }
    }
}

/// Evaluate the scenario at every grid point of `spec`, in ascending order.
///
/// Each entry equals a standalone [`Scenario::evaluate`] call at that value,
/// bit for bit. The first grid point whose scenario violates a core invariant
/// aborts the sweep with its index.
pub fn sweep(base: &Scenario, spec: &SweepSpec) -> Result<Vec<CurvePoint>, SweepError> {
    base.validate().map_err(SweepError::Invalid)?;
    let grid = spec.grid().map_err(SweepError::Invalid)?;
    grid.into_iter()
        .enumerate()
        .map(|(index, parameter_value)| {
            let mut scenario = *base;
            spec.parameter.apply(&mut scenario, parameter_value);
            match scenario.evaluate() {
                Ok(result) => Ok(CurvePoint {
                    parameter_value,
                    result,
                }),
                Err(source) => Err(SweepError::Point {
                    index,
                    parameter_value,
                    source,
                }),
            }
        })
        .collect()
}

/// Outcome of the most-penetrating-particle-size search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MppsResult {
    /// The penetration-maximizing particle diameter, micrometers.
    pub dp_star_um: f64,
    /// Penetration at `dp_star_um`, as a fraction.
    pub p_max: f64,
    /// Final search interval containing `dp_star_um`, micrometers.
    pub bracket_um: (f64, f64),
    /// True when the coarse scan placed the maximum on an edge of the search
    /// range (P monotone over the interval); the bracket then spans the
    /// outermost grid cell.
    pub boundary: bool,
}

/// MPPS search failure.
#[derive(Debug, Clone, PartialEq)]
pub enum MppsError {
    /// Bracket, tolerance or base scenario violates an invariant.
    Invalid(DomainError),
    /// Evaluation failed at a probed diameter.
    Evaluation { dp_um: f64, source: DomainError },
}

impl fmt::Display for MppsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MppsError::Invalid(e) => e.fmt(f),
            MppsError::Evaluation { dp_um, source } => {
                write!(f, "evaluation at dp = {dp_um} um: {source}")
            }
        }
    }
}

impl core::error::Error for MppsError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            MppsError::Invalid(e) => Some(e),
            MppsError::Evaluation { source, .. } => Some(source),
        }
    }
}

const SCAN_POINTS: usize = 128;
const INV_PHI: f64 = 0.618_033_988_749_894_9;
const MAX_REFINE_ITERS: usize = 200;

/// Locate the particle diameter maximizing penetration on `[dp_lo, dp_hi]`.
///
/// A coarse logarithmic scan brackets the maximum, then golden-section
/// refinement shrinks the bracket to width `tol_um`. If the scan finds the
/// maximum at an edge of the range (P monotone), that edge is returned with
/// the `boundary` flag set instead of refining.
pub fn find_mpps(
    base: &Scenario,
    dp_lo_um: f64,
    dp_hi_um: f64,
    tol_um: f64,
) -> Result<MppsResult, MppsError> {
    base.validate().map_err(MppsError::Invalid)?;
    require_positive("dp_lo", dp_lo_um).map_err(MppsError::Invalid)?;
    require_below("dp_lo", dp_lo_um, "dp_hi", dp_hi_um).map_err(MppsError::Invalid)?;
    require_positive("tol", tol_um).map_err(MppsError::Invalid)?;

    let penetration_at = |dp_um: f64| -> Result<f64, MppsError> {
        let mut scenario = *base;
        scenario.particle.diameter_um = dp_um;
        scenario
            .evaluate()
            .map(|r| r.penetration)
            .map_err(|source| MppsError::Evaluation { dp_um, source })
    };

    // Coarse log-spaced scan.
    let log_lo = math::ln(dp_lo_um);
    let log_step = (math::ln(dp_hi_um) - log_lo) / (SCAN_POINTS - 1) as f64;
    let mut grid = [0.0; SCAN_POINTS];
    for (i, x) in grid.iter_mut().enumerate() {
        *x = math::exp(log_lo + log_step * i as f64);
    }
    grid[0] = dp_lo_um;
    grid[SCAN_POINTS - 1] = dp_hi_um;

    let mut best = 0usize;
    let mut best_p = f64::NEG_INFINITY;
    let mut penetrations = [0.0; SCAN_POINTS];
    for (i, &dp) in grid.iter().enumerate() {
        let p = penetration_at(dp)?;
        penetrations[i] = p;
        if p > best_p {
            best_p = p;
            best = i;
        }
    }

    if best == 0 || best == SCAN_POINTS - 1 {
        let bracket_um = if best == 0 {
            (grid[0], grid[1])
        } else {
            (grid[SCAN_POINTS - 2], grid[SCAN_POINTS - 1])
        };
        return Ok(MppsResult {
            dp_star_um: grid[best],
            p_max: penetrations[best],
            bracket_um,
            boundary: true,
        });
    }

    // Golden-section refinement inside the cell around the grid maximum.
    let mut lo = grid[best - 1];
    let mut hi = grid[best + 1];
    let mut inner_lo = hi - INV_PHI * (hi - lo);
    let mut inner_hi = lo + INV_PHI * (hi - lo);
    let mut p_inner_lo = penetration_at(inner_lo)?;
    let mut p_inner_hi = penetration_at(inner_hi)?;
    let mut iters = 0;
    while hi - lo > tol_um && iters < MAX_REFINE_ITERS {
        if p_inner_lo >= p_inner_hi {
            hi = inner_hi;
            inner_hi = inner_lo;
            p_inner_hi = p_inner_lo;
            inner_lo = hi - INV_PHI * (hi - lo);
            p_inner_lo = penetration_at(inner_lo)?;
        } else {
            lo = inner_lo;
            inner_lo = inner_hi;
            p_inner_lo = p_inner_hi;
            inner_hi = lo + INV_PHI * (hi - lo);
            p_inner_hi = penetration_at(inner_hi)?;
        }
        iters += 1;
    }

    let dp_star_um = 0.5 * (lo + hi);
    Ok(MppsResult {
        dp_star_um,
        p_max: penetration_at(dp_star_um)?,
        bracket_um: (lo, hi),
        boundary: false,
    })
}
