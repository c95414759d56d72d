//! The formula chain: dimensionless groups, single-fiber mechanism factors,
//! and the penetration/efficiency of the whole medium.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{
    require_closed_unit, require_non_negative, require_open_unit, require_positive, DomainError,
    Warning,
};
use crate::math;

/// Geometry and packing of the fibrous medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterMedium {
    /// Thickness `L` of the filter element, millimeters.
    pub thickness_mm: f64,
    /// Fiber diameter `d_f`, micrometers.
    pub fiber_diameter_um: f64,
    /// Solidity `alpha`: fiber volume over total volume, in (0, 1).
    pub solidity: f64,
    /// Element (pipeline) diameter `d_F` in meters, used only for Reynolds.
    pub element_diameter_m: Option<f64>,
}

impl FilterMedium {
    pub fn validate(&self) -> Result<(), DomainError> {
        require_non_negative("thickness_L", self.thickness_mm)?;
        require_positive("fiber_diameter_df", self.fiber_diameter_um)?;
        // Strict open interval: ln(alpha) is singular at 0 and Ku vanishes at 1.
        require_open_unit("solidity_alpha", self.solidity)?;
        if let Some(d) = self.element_diameter_m {
            require_positive("element_diameter_dF", d)?;
        }
        Ok(())
    }
}

/// Carrier-fluid properties and face velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluidState {
    /// Absolute viscosity `mu`, kg/(m s).
    pub viscosity_pa_s: f64,
    /// Absolute temperature `T`, kelvin.
    pub temperature_k: f64,
    /// Face velocity `u` through the medium, m/s.
    pub velocity_m_s: f64,
    /// Fluid density, kg/m^3; enters only the Reynolds number.
    pub density_kg_m3: f64,
}

impl FluidState {
    pub fn validate(&self) -> Result<(), DomainError> {
        require_positive("viscosity_mu", self.viscosity_pa_s)?;
        require_positive("temperature_T", self.temperature_k)?;
        require_positive("velocity_u", self.velocity_m_s)?;
        require_positive("fluid_density_rho_f", self.density_kg_m3)?;
        Ok(())
    }
}

/// The particle being captured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Particle {
    /// Particle diameter `d_p`, micrometers.
    pub diameter_um: f64,
    /// Particle density, kg/m^3; enters the Stokes number.
    pub density_kg_m3: f64,
}

impl Particle {
    pub fn validate(&self) -> Result<(), DomainError> {
        // The slip correction divides by d_p.
        require_positive("diameter_dp", self.diameter_um)?;
        require_positive("density_rho_p", self.density_kg_m3)?;
        Ok(())
    }
}

/// Model constants. Every field can be overridden; note the default
/// Boltzmann constant is the model's canonical 1.3708e-23 J/K, not the
/// CODATA 1.380649e-23.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelConstants {
    /// Boltzmann constant, J/K.
    pub boltzmann_k: f64,
    /// Slip-correction coefficient A1.
    pub slip_a1: f64,
    /// Slip-correction coefficient A2.
    pub slip_a2: f64,
    /// Slip-correction exponential coefficient A3, 1/um.
    pub slip_a3: f64,
    /// Mean-free-path factor appearing as `lambda / d_p`, micrometers.
    pub slip_lambda: f64,
    /// Drag coefficient C_D entering the Stokes number.
    pub drag_cd: f64,
    /// Interception-ratio threshold switching the J factor to its constant branch.
    pub nr_threshold: f64,
    /// Prefactor of the diffusion mechanism factor.
    pub diffusion_coeff: f64,
}

impl Default for ModelConstants {
    fn default() -> Self {
        ModelConstants {
            boltzmann_k: 1.3708e-23,
            slip_a1: 2.492,
            slip_a2: 0.84,
            slip_a3: 6.49,
            slip_lambda: 0.067,
            drag_cd: 0.44,
            nr_threshold: 0.4,
            diffusion_coeff: 1.61,
        }
    }
}

impl ModelConstants {
    pub fn validate(&self) -> Result<(), DomainError> {
        require_positive("boltzmann_k", self.boltzmann_k)?;
        require_positive("slip_A1", self.slip_a1)?;
        require_positive("slip_A2", self.slip_a2)?;
        require_positive("slip_A3", self.slip_a3)?;
        require_positive("slip_lambda", self.slip_lambda)?;
        require_positive("drag_CD", self.drag_cd)?;
        require_positive("nr_threshold", self.nr_threshold)?;
        require_positive("diffusion_coeff", self.diffusion_coeff)?;
        Ok(())
    }
}

/// Every dimensionless group of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessGroups {
    /// Kuwabara hydrodynamic factor Ku.
    pub kuwabara: f64,
    /// Peclet number Pe.
    pub peclet: f64,
    /// Stokes number Stk.
    pub stokes: f64,
    /// Interception ratio N_R = d_p / d_f.
    pub interception: f64,
    /// Reynolds number Re, present only when an element diameter is known.
    pub reynolds: Option<f64>,
    /// Slip correction Cc, always > 1.
    pub slip_correction: f64,
    /// Impaction factor J.
    pub impaction_j: f64,
}

/// Single-fiber capture factors and their sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MechanismFactors {
    /// Diffusion factor n_D.
    pub diffusion: f64,
    /// Interception factor n_R.
    pub interception: f64,
    /// Inertial impaction factor n_I.
    pub impaction: f64,
    /// n_D + n_R + n_I, exact by construction.
    pub total: f64,
}

/// Outcome of a single-scenario evaluation.
///
/// `efficiency` is computed as `1 - penetration`, so the identity holds
/// exactly in the arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationResult {
    /// Penetration P, fraction in (0, 1].
    pub penetration: f64,
    /// Efficiency E = 1 - P, fraction in [0, 1).
    pub efficiency: f64,
    pub groups: DimensionlessGroups,
    pub factors: MechanismFactors,
    /// Diagnostics raised along the chain (e.g. a negative J factor).
    pub warnings: Vec<Warning>,
}

/// A complete single-point scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub medium: FilterMedium,
    pub fluid: FluidState,
    pub particle: Particle,
    pub constants: ModelConstants,
}

impl Scenario {
    pub fn validate(&self) -> Result<(), DomainError> {
        self.medium.validate()?;
        self.fluid.validate()?;
        self.particle.validate()?;
        self.constants.validate()
    }

    pub fn evaluate(&self) -> Result<FiltrationResult, DomainError> {
        evaluate(&self.medium, &self.fluid, &self.particle, &self.constants)
    }
}

/// Kuwabara hydrodynamic factor of a packed fiber cell:
/// `Ku = (4a - a^2 - 3)/4 - ln(a)/2`, positive and strictly decreasing on (0, 1).
pub fn kuwabara(alpha: f64) -> Result<f64, DomainError> {
    require_open_unit("alpha", alpha)?;
    Ok((4.0 * alpha - alpha * alpha - 3.0) / 4.0 - math::ln(alpha) / 2.0)
}

/// Slip correction `Cc = 1 + (lambda/d_p) (A1 + A2 exp(-A3 d_p))` with `d_p`
/// in micrometers; always > 1 and decreasing towards 1 for large particles.
pub fn slip_correction(dp_um: f64, constants: &ModelConstants) -> Result<f64, DomainError> {
    constants.validate()?;
    require_positive("dp", dp_um)?;
    let bracket = constants.slip_a1 + constants.slip_a2 * math::exp(-constants.slip_a3 * dp_um);
    Ok(1.0 + constants.slip_lambda / dp_um * bracket)
}

/// Peclet number of convective vs. diffusive particle transport:
/// `Pe = 3e-12 pi mu u d_f d_p / (k T Cc)`. The `1e-12` converts the two
/// micrometer lengths to meters, making the result dimensionless.
pub fn peclet(
    fluid: &FluidState,
    df_um: f64,
    dp_um: f64,
    constants: &ModelConstants,
) -> Result<f64, DomainError> {
    fluid.validate()?;
    require_positive("df", df_um)?;
    let cc = slip_correction(dp_um, constants)?;
    Ok(
        3.0e-12 * PI * fluid.viscosity_pa_s * fluid.velocity_m_s * df_um * dp_um
            / (constants.boltzmann_k * fluid.temperature_k * cc),
    )
}

/// Diffusion capture factor `n_D = 1.61 ((1 - a)/Ku)^(1/3) Pe^(-2/3)`.
pub fn eta_diffusion(
    alpha: f64,
    ku: f64,
    pe: f64,
    constants: &ModelConstants,
) -> Result<f64, DomainError> {
    constants.validate()?;
    require_open_unit("alpha", alpha)?;
    require_positive("ku", ku)?;
    require_positive("pe", pe)?;
    Ok(constants.diffusion_coeff
        * math::powf((1.0 - alpha) / ku, 1.0 / 3.0)
        * math::powf(pe, -2.0 / 3.0))
}

/// Interception ratio `N_R = d_p / d_f` (both in micrometers).
pub fn interception_ratio(dp_um: f64, df_um: f64) -> Result<f64, DomainError> {
    require_positive("dp", dp_um)?;
    require_positive("df", df_um)?;
    Ok(dp_um / df_um)
}

/// Interception capture factor `n_R = (1 - a) N_R^2 / (Ku (1 + N_R))`;
/// zero exactly when `N_R` is zero.
pub fn eta_interception(alpha: f64, ku: f64, nr: f64) -> Result<f64, DomainError> {
    require_open_unit("alpha", alpha)?;
    require_positive("ku", ku)?;
    require_non_negative("nr", nr)?;
    Ok((1.0 - alpha) * nr * nr / (ku * (1.0 + nr)))
}

/// Stokes number `Stk = rho_p d_p^2 u C_D / (18 mu d_f)` with the unit
/// conversions of the micrometer convention applied (`rho` by 1e-18, `u` by
/// 1e6, `mu` by 1e-6), so the result is dimensionless.
pub fn stokes(
    particle: &Particle,
    fluid: &FluidState,
    df_um: f64,
    constants: &ModelConstants,
) -> Result<f64, DomainError> {
    particle.validate()?;
    fluid.validate()?;
    constants.validate()?;
    require_positive("df", df_um)?;
    let dp = particle.diameter_um;
    Ok(
        (particle.density_kg_m3 * 1.0e-18) * (fluid.velocity_m_s * 1.0e6) * dp * dp
            * constants.drag_cd
            / (18.0 * (fluid.viscosity_pa_s * 1.0e-6) * df_um),
    )
}

/// Empirical impaction factor:
/// `J = (29.6 - 28 a^0.62) N_R^2 - 27.5 N_R^2.8` below the threshold, and the
/// constant 2 at and above it. The polynomial can go negative for high
/// solidity; callers decide how to surface that (see [`evaluate`]).
pub fn inertial_j(nr: f64, alpha: f64, constants: &ModelConstants) -> Result<f64, DomainError> {
    constants.validate()?;
    require_non_negative("nr", nr)?;
    require_open_unit("alpha", alpha)?;
    if nr < constants.nr_threshold {
        Ok((29.6 - 28.0 * math::powf(alpha, 0.62)) * nr * nr - 27.5 * math::powf(nr, 2.8))
    } else {
        Ok(2.0)
    }
}

/// Inertial impaction capture factor `n_I = Stk J / (2 Ku^2)`; its sign
/// follows the sign of J.
pub fn eta_impaction(stk: f64, j: f64, ku: f64) -> Result<f64, DomainError> {
    require_non_negative("stk", stk)?;
    require_positive("ku", ku)?;
    Ok(stk * j / (2.0 * ku * ku))
}

/// Penetration of the whole medium:
/// `P = exp(-4 L a sum_n / (pi d_f))` with `L` converted mm -> um.
pub fn penetration(medium: &FilterMedium, sum_n: f64) -> Result<f64, DomainError> {
    medium.validate()?;
    require_non_negative("sum_n", sum_n)?;
    let thickness_um = medium.thickness_mm * 1.0e3;
    Ok(math::exp(
        -4.0 * thickness_um * medium.solidity * sum_n / (PI * medium.fiber_diameter_um),
    ))
}

/// Efficiency `E = 1 - P`.
pub fn efficiency(p: f64) -> Result<f64, DomainError> {
    require_closed_unit("p", p)?;
    Ok(1.0 - p)
}

/// Reynolds number `Re = u d_F rho / mu` of the flow through the element,
/// in SI units throughout. Reported for the operator's judgment; it does not
/// feed back into the model chain.
pub fn reynolds(fluid: &FluidState, element_diameter_m: f64) -> Result<f64, DomainError> {
    fluid.validate()?;
    require_positive("dF", element_diameter_m)?;
    Ok(fluid.velocity_m_s * element_diameter_m * fluid.density_kg_m3 / fluid.viscosity_pa_s)
}

/// Equivalent diameter `d_E = 4 A / Pi` of a non-circular element
/// cross-section, in the input length unit.
pub fn equivalent_diameter(area: f64, perimeter: f64) -> Result<f64, DomainError> {
    require_positive("area", area)?;
    require_positive("perimeter", perimeter)?;
    Ok(4.0 * area / perimeter)
}

/// Evaluate the full chain for one scenario.
///
/// Composition order: Ku -> Cc -> Pe -> n_D, N_R -> n_R, Stk -> J -> n_I,
/// then the mechanism sum, penetration and efficiency. The first domain
/// violation along the chain is reported with its symbol name. A negative J
/// is kept (the formula is reproduced as given) and flagged as a warning;
/// should the whole mechanism sum turn negative, the scenario leaves the
/// model's domain and evaluation fails naming `sum_n`.
pub fn evaluate(
    medium: &FilterMedium,
    fluid: &FluidState,
    particle: &Particle,
    constants: &ModelConstants,
) -> Result<FiltrationResult, DomainError> {
    medium.validate()?;
    fluid.validate()?;
    particle.validate()?;
    constants.validate()?;

    let ku = kuwabara(medium.solidity)?;
    let cc = slip_correction(particle.diameter_um, constants)?;
    let pe = peclet(fluid, medium.fiber_diameter_um, particle.diameter_um, constants)?;
    let n_diffusion = eta_diffusion(medium.solidity, ku, pe, constants)?;
    let nr = interception_ratio(particle.diameter_um, medium.fiber_diameter_um)?;
    let n_interception = eta_interception(medium.solidity, ku, nr)?;
    let stk = stokes(particle, fluid, medium.fiber_diameter_um, constants)?;
    let j = inertial_j(nr, medium.solidity, constants)?;
    let n_impaction = eta_impaction(stk, j, ku)?;

    let mut warnings = Vec::new();
    if j < 0.0 {
        warnings.push(Warning::NegativeImpactionJ { j });
    }

    let total = n_diffusion + n_interception + n_impaction;
    let p = penetration(medium, total)?;
    let e = efficiency(p)?;
    let re = match medium.element_diameter_m {
        Some(d) => Some(reynolds(fluid, d)?),
        None => None,
    };

    Ok(FiltrationResult {
        penetration: p,
        efficiency: e,
        groups: DimensionlessGroups {
            kuwabara: ku,
            peclet: pe,
            stokes: stk,
            interception: nr,
            reynolds: re,
            slip_correction: cc,
            impaction_j: j,
        },
        factors: MechanismFactors {
            diffusion: n_diffusion,
            interception: n_interception,
            impaction: n_impaction,
            total,
        },
        warnings,
    })
}
