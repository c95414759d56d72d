//! Scenario ingestion: JSON config files, flag overlays, and resolution into
//! a validated core scenario.

use std::fmt;
use std::fs;
use std::path::Path;

use filtration_core::{
    equivalent_diameter, DomainError, FilterMedium, FluidState, GridScale, ModelConstants,
    MppsError, Particle, Scenario, SweepError, SweepSpec,
};
use serde::Deserialize;

/// CLI failure with its process exit code: validation errors exit 2,
/// I/O failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<DomainError> for CliError {
    fn from(e: DomainError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<MppsError> for CliError {
    fn from(e: MppsError) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Scenario file contents. Field names are the model's symbol names; every
/// field is optional so flags can fill the gaps.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(rename = "thickness_L")]
    pub thickness_mm: Option<f64>,
    #[serde(rename = "diameter_dp")]
    pub particle_diameter_um: Option<f64>,
    #[serde(rename = "fiber_diameter_df")]
    pub fiber_diameter_um: Option<f64>,
    #[serde(rename = "solidity_alpha")]
    pub solidity: Option<f64>,
    #[serde(rename = "element_diameter_dF")]
    pub element_diameter_m: Option<f64>,
    #[serde(rename = "viscosity_mu")]
    pub viscosity_pa_s: Option<f64>,
    #[serde(rename = "temperature_T")]
    pub temperature_k: Option<f64>,
    #[serde(rename = "velocity_u")]
    pub velocity_m_s: Option<f64>,
    #[serde(rename = "fluid_density_rho_f")]
    pub fluid_density_kg_m3: Option<f64>,
    #[serde(rename = "density_rho_p")]
    pub particle_density_kg_m3: Option<f64>,
    /// Element cross-section area, m^2; together with `perimeter` it derives
    /// the element diameter.
    pub area: Option<f64>,
    /// Element cross-section perimeter, m.
    pub perimeter: Option<f64>,
    pub constants: Option<ConstantsConfig>,
    pub sweep: Option<SweepConfig>,
}

/// Optional overrides of the model constants.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConstantsConfig {
    pub boltzmann_k: Option<f64>,
    #[serde(rename = "slip_A1")]
    pub slip_a1: Option<f64>,
    #[serde(rename = "slip_A2")]
    pub slip_a2: Option<f64>,
    #[serde(rename = "slip_A3")]
    pub slip_a3: Option<f64>,
    pub slip_lambda: Option<f64>,
    #[serde(rename = "drag_CD")]
    pub drag_cd: Option<f64>,
    pub nr_threshold: Option<f64>,
    pub diffusion_coeff: Option<f64>,
}

impl ConstantsConfig {
    pub fn apply(&self, constants: &mut ModelConstants) {
        if let Some(v) = self.boltzmann_k {
            constants.boltzmann_k = v;
        }
        if let Some(v) = self.slip_a1 {
            constants.slip_a1 = v;
        }
        if let Some(v) = self.slip_a2 {
            constants.slip_a2 = v;
        }
        if let Some(v) = self.slip_a3 {
            constants.slip_a3 = v;
        }
        if let Some(v) = self.slip_lambda {
            constants.slip_lambda = v;
        }
        if let Some(v) = self.drag_cd {
            constants.drag_cd = v;
        }
        if let Some(v) = self.nr_threshold {
            constants.nr_threshold = v;
        }
        if let Some(v) = self.diffusion_coeff {
            constants.diffusion_coeff = v;
        }
    }
}

/// Sweep section of a config file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub parameter: Option<String>,
    pub start: Option<f64>,
    pub stop: Option<f64>,
    pub points: Option<usize>,
    /// "linear", "log" or "logarithmic".
    pub scale: Option<String>,
}

impl ScenarioConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Io(format!("cannot parse config {}: {e}", path.display())))
    }

    /// Turn the merged config into a validated scenario. Missing required
    /// inputs and invariant violations are validation errors naming the
    /// offending symbol.
    pub fn resolve(&self) -> Result<Scenario, CliError> {
        let geometry_given = self.area.is_some() || self.perimeter.is_some();
        let element_diameter_m = match (self.element_diameter_m, geometry_given) {
            (Some(_), true) => {
                return Err(CliError::Validation(
                    "element_diameter_dF conflicts with area/perimeter; supply only one of them"
                        .into(),
                ))
            }
            (Some(d), false) => Some(d),
            (None, true) => {
                let area = required("area", self.area)?;
                let perimeter = required("perimeter", self.perimeter)?;
                Some(equivalent_diameter(area, perimeter)?)
            }
            (None, false) => None,
        };

        let mut constants = ModelConstants::default();
        if let Some(overrides) = &self.constants {
            overrides.apply(&mut constants);
        }

        let scenario = Scenario {
            medium: FilterMedium {
                thickness_mm: required("thickness_L", self.thickness_mm)?,
                fiber_diameter_um: required("fiber_diameter_df", self.fiber_diameter_um)?,
                solidity: required("solidity_alpha", self.solidity)?,
                element_diameter_m,
            },
            fluid: FluidState {
                viscosity_pa_s: required("viscosity_mu", self.viscosity_pa_s)?,
                temperature_k: required("temperature_T", self.temperature_k)?,
                velocity_m_s: required("velocity_u", self.velocity_m_s)?,
                density_kg_m3: required("fluid_density_rho_f", self.fluid_density_kg_m3)?,
            },
            particle: Particle {
                diameter_um: required("diameter_dp", self.particle_diameter_um)?,
                density_kg_m3: required("density_rho_p", self.particle_density_kg_m3)?,
            },
            constants,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// Build the sweep grid spec from the config section plus flag overrides.
    pub fn resolve_sweep(
        &self,
        param_flag: Option<&str>,
        start_flag: Option<f64>,
        stop_flag: Option<f64>,
        points_flag: Option<usize>,
        log_flag: bool,
    ) -> Result<SweepSpec, CliError> {
        let section = self.sweep.clone().unwrap_or_default();
        let symbol = match (param_flag, &section.parameter) {
            (Some(s), _) => s.to_owned(),
            (None, Some(s)) => s.clone(),
            (None, None) => return Err(CliError::Validation("missing required input: param".into())),
        };
        let parameter = symbol
            .parse()
            .map_err(|e| CliError::Validation(format!("param: {e}")))?;
        let scale = if log_flag {
            GridScale::Logarithmic
        } else {
            match &section.scale {
                Some(s) => s
                    .parse()
                    .map_err(|e| CliError::Validation(format!("scale: {e}")))?,
                None => GridScale::Linear,
            }
        };
        let spec = SweepSpec {
            parameter,
            start: required("start", start_flag.or(section.start))?,
            stop: required("stop", stop_flag.or(section.stop))?,
            points: match points_flag.or(section.points) {
                Some(n) => n,
                None => return Err(CliError::Validation("missing required input: points".into())),
            },
            scale,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn required(symbol: &str, value: Option<f64>) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Validation(format!("missing required input: {symbol}")))
}
