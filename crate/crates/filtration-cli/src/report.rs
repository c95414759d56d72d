//! Report records and the three output formats: a human-readable report with
//! six significant digits, and JSON/CSV at full round-trip precision.

use filtration_core::{FiltrationResult, MppsResult, Scenario};
use serde::Serialize;

/// Echo of the resolved scenario inputs, keyed by symbol name.
#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    #[serde(rename = "thickness_L")]
    pub thickness_mm: f64,
    #[serde(rename = "diameter_dp")]
    pub particle_diameter_um: f64,
    #[serde(rename = "fiber_diameter_df")]
    pub fiber_diameter_um: f64,
    #[serde(rename = "solidity_alpha")]
    pub solidity: f64,
    #[serde(rename = "viscosity_mu")]
    pub viscosity_pa_s: f64,
    #[serde(rename = "temperature_T")]
    pub temperature_k: f64,
    #[serde(rename = "velocity_u")]
    pub velocity_m_s: f64,
    #[serde(rename = "fluid_density_rho_f")]
    pub fluid_density_kg_m3: f64,
    #[serde(rename = "density_rho_p")]
    pub particle_density_kg_m3: f64,
    #[serde(rename = "element_diameter_dF")]
    pub element_diameter_m: Option<f64>,
}

impl From<&Scenario> for InputEcho {
    fn from(s: &Scenario) -> Self {
        InputEcho {
            thickness_mm: s.medium.thickness_mm,
            particle_diameter_um: s.particle.diameter_um,
            fiber_diameter_um: s.medium.fiber_diameter_um,
            solidity: s.medium.solidity,
            viscosity_pa_s: s.fluid.viscosity_pa_s,
            temperature_k: s.fluid.temperature_k,
            velocity_m_s: s.fluid.velocity_m_s,
            fluid_density_kg_m3: s.fluid.density_kg_m3,
            particle_density_kg_m3: s.particle.density_kg_m3,
            element_diameter_m: s.medium.element_diameter_m,
        }
    }
}

/// One evaluated scenario, percent convention applied.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<InputEcho>,
    #[serde(rename = "P_percent")]
    pub p_percent: f64,
    #[serde(rename = "E_percent")]
    pub e_percent: f64,
    #[serde(rename = "nD")]
    pub n_diffusion: f64,
    #[serde(rename = "nR")]
    pub n_interception: f64,
    #[serde(rename = "nI")]
    pub n_impaction: f64,
    #[serde(rename = "Ku")]
    pub kuwabara: f64,
    #[serde(rename = "Pe")]
    pub peclet: f64,
    #[serde(rename = "NR")]
    pub interception_ratio: f64,
    #[serde(rename = "Stk")]
    pub stokes: f64,
    #[serde(rename = "J")]
    pub impaction_j: f64,
    #[serde(rename = "Cc")]
    pub slip_correction: f64,
    #[serde(rename = "Re")]
    pub reynolds: Option<f64>,
    pub warnings: Vec<String>,
}

impl ReportRecord {
    pub fn new(
        result: &FiltrationResult,
        inputs: Option<InputEcho>,
        parameter_value: Option<f64>,
    ) -> Self {
        ReportRecord {
            parameter_value,
            inputs,
            p_percent: 100.0 * result.penetration,
            e_percent: 100.0 * result.efficiency,
            n_diffusion: result.factors.diffusion,
            n_interception: result.factors.interception,
            n_impaction: result.factors.impaction,
            kuwabara: result.groups.kuwabara,
            peclet: result.groups.peclet,
            interception_ratio: result.groups.interception,
            stokes: result.groups.stokes,
            impaction_j: result.groups.impaction_j,
            slip_correction: result.groups.slip_correction,
            reynolds: result.groups.reynolds,
            warnings: result.warnings.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Sweep output as a whole: base inputs once, then one record per grid point.
#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub parameter: &'static str,
    pub scale: &'static str,
    pub inputs: InputEcho,
    pub points: Vec<ReportRecord>,
}

/// MPPS output.
#[derive(Debug, Serialize)]
pub struct MppsReport {
    pub inputs: InputEcho,
    pub dp_star_um: f64,
    pub p_max_percent: f64,
    pub bracket_um: (f64, f64),
    pub boundary: bool,
}

impl MppsReport {
    pub fn new(scenario: &Scenario, result: &MppsResult) -> Self {
        MppsReport {
            inputs: InputEcho::from(scenario),
            dp_star_um: result.dp_star_um,
            p_max_percent: 100.0 * result.p_max,
            bracket_um: result.bracket_um,
            boundary: result.boundary,
        }
    }
}

/// Format with six significant digits for the human report.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-4..=8).contains(&magnitude) {
        let decimals = (5 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

pub const CSV_HEADER: &str =
    "parameter_value,P_percent,E_percent,nD,nR,nI,Ku,Pe,NR,Stk,J,Cc,Re,warnings";

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One CSV row in the fixed column order; absent values are empty cells,
/// numbers use the shortest round-trip representation.
pub fn csv_row(record: &ReportRecord) -> String {
    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    let warnings = csv_escape(&record.warnings.join("; "));
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        opt(record.parameter_value),
        record.p_percent,
        record.e_percent,
        record.n_diffusion,
        record.n_interception,
        record.n_impaction,
        record.kuwabara,
        record.peclet,
        record.interception_ratio,
        record.stokes,
        record.impaction_j,
        record.slip_correction,
        opt(record.reynolds),
        warnings,
    )
}

fn push_input_lines(out: &mut String, inputs: &InputEcho) {
    out.push_str("inputs\n");
    let rows = [
        ("thickness_L", inputs.thickness_mm, "mm"),
        ("diameter_dp", inputs.particle_diameter_um, "um"),
        ("fiber_diameter_df", inputs.fiber_diameter_um, "um"),
        ("solidity_alpha", inputs.solidity, ""),
        ("viscosity_mu", inputs.viscosity_pa_s, "kg/(m s)"),
        ("temperature_T", inputs.temperature_k, "K"),
        ("velocity_u", inputs.velocity_m_s, "m/s"),
        ("fluid_density_rho_f", inputs.fluid_density_kg_m3, "kg/m^3"),
        ("density_rho_p", inputs.particle_density_kg_m3, "kg/m^3"),
    ];
    for (name, value, unit) in rows {
        out.push_str(&format!("  {name:<20} {:<12} {unit}\n", sig6(value)));
    }
    if let Some(d) = inputs.element_diameter_m {
        out.push_str(&format!("  {:<20} {:<12} m\n", "element_diameter_dF", sig6(d)));
    }
}

fn push_warning_lines(out: &mut String, warnings: &[String]) {
    if !warnings.is_empty() {
        out.push_str("warnings\n");
        for w in warnings {
            out.push_str("  ");
            out.push_str(w);
            out.push('\n');
        }
    }
}

/// Human-readable single-point report.
pub fn render_point_report(record: &ReportRecord) -> String {
    let mut out = String::new();
    if let Some(inputs) = &record.inputs {
        push_input_lines(&mut out, inputs);
    }
    out.push_str("results\n");
    out.push_str(&format!("  {:<20} {:<12} %\n", "penetration P", sig6(record.p_percent)));
    out.push_str(&format!("  {:<20} {:<12} %\n", "efficiency E", sig6(record.e_percent)));
    out.push_str("mechanism factors\n");
    out.push_str(&format!("  {:<20} {}\n", "nD (diffusion)", sig6(record.n_diffusion)));
    out.push_str(&format!("  {:<20} {}\n", "nR (interception)", sig6(record.n_interception)));
    out.push_str(&format!("  {:<20} {}\n", "nI (impaction)", sig6(record.n_impaction)));
    out.push_str("dimensionless groups\n");
    out.push_str(&format!("  {:<20} {}\n", "Ku", sig6(record.kuwabara)));
    out.push_str(&format!("  {:<20} {}\n", "Pe", sig6(record.peclet)));
    out.push_str(&format!("  {:<20} {}\n", "NR", sig6(record.interception_ratio)));
    out.push_str(&format!("  {:<20} {}\n", "Stk", sig6(record.stokes)));
    out.push_str(&format!("  {:<20} {}\n", "J", sig6(record.impaction_j)));
    out.push_str(&format!("  {:<20} {}\n", "Cc", sig6(record.slip_correction)));
    match record.reynolds {
        Some(re) => out.push_str(&format!("  {:<20} {}\n", "Re", sig6(re))),
        None => out.push_str(&format!("  {:<20} (not computed)\n", "Re")),
    }
    push_warning_lines(&mut out, &record.warnings);
    out
}

/// Human-readable sweep table.
pub fn render_sweep_report(report: &SweepReport) -> String {
    let mut out = String::new();
    push_input_lines(&mut out, &report.inputs);
    out.push_str(&format!(
        "sweep of {} ({} scale, {} points)\n",
        report.parameter,
        report.scale,
        report.points.len()
    ));
    out.push_str(&format!(
        "  {:<14} {:<12} {:<12} {:<12} {:<12} {:<12} warnings\n",
        report.parameter, "P_percent", "E_percent", "nD", "nR", "nI"
    ));
    for point in &report.points {
        out.push_str(&format!(
            "  {:<14} {:<12} {:<12} {:<12} {:<12} {:<12} {}\n",
            sig6(point.parameter_value.unwrap_or(f64::NAN)),
            sig6(point.p_percent),
            sig6(point.e_percent),
            sig6(point.n_diffusion),
            sig6(point.n_interception),
            sig6(point.n_impaction),
            point.warnings.join("; "),
        ));
    }
    out
}

/// Human-readable MPPS report.
pub fn render_mpps_report(report: &MppsReport) -> String {
    let mut out = String::new();
    push_input_lines(&mut out, &report.inputs);
    out.push_str("most-penetrating particle size\n");
    out.push_str(&format!("  {:<20} {:<12} um\n", "dp_star", sig6(report.dp_star_um)));
    out.push_str(&format!("  {:<20} {:<12} %\n", "p_max", sig6(report.p_max_percent)));
    out.push_str(&format!(
        "  {:<20} [{}, {}] um{}\n",
        "bracket",
        sig6(report.bracket_um.0),
        sig6(report.bracket_um.1),
        if report.boundary { " (boundary)" } else { "" }
    ));
    out
}
