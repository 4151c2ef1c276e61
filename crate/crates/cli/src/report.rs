//! Report schemas. JSON for the machine-readable run summary, CSV for the
//! wavelet coefficient dump and the refinement-study table.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use deep_ridgelet::C64;

#[derive(Debug, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub max_gap: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub pipeline: &'static str,
    pub group: String,
    pub order: usize,
    pub points: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub laws: Vec<LawCheck>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct SubspaceEntry {
    pub dim: usize,
    pub irreducible: bool,
    pub commutant_dim: usize,
    pub invariance_residual: f64,
}

#[derive(Debug, Serialize)]
pub struct DecomposeReport {
    pub pipeline: &'static str,
    pub group: String,
    pub order: usize,
    pub points: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub commutant_dim: usize,
    pub commutant_residual: f64,
    pub subspaces: Vec<SubspaceEntry>,
    pub dimension_total: usize,
    pub max_orthogonality_defect: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct ReconstructEntry {
    pub subspace_dim: usize,
    pub irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_psi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_error: Option<f64>,
    /// Norm of the reconstruction of a unit vector drawn from an
    /// inequivalent component; absent when no inequivalent component
    /// exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_control_norm: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct ReconstructReport {
    pub pipeline: &'static str,
    pub group: String,
    pub order: usize,
    pub points: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub subspaces: Vec<ReconstructEntry>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct RefinementRow {
    pub level: usize,
    pub n_a: usize,
    pub n_b: usize,
    pub relative_error: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct WaveletReport {
    pub pipeline: &'static str,
    pub admissible: bool,
    /// Converged admissibility estimate, or the last diverging partial sum.
    pub c_psi_estimate: f64,
    pub tolerance: f64,
    /// Relative L² round-trip error on the configured grid; `null` when the
    /// input signal is zero (0/0 is reported as not-applicable).
    pub relative_error: Option<f64>,
    pub refinement: Vec<RefinementRow>,
    pub pass: bool,
}

/// Serializes a report deterministically (struct field order, stable float
/// formatting) so identical runs produce byte-identical output.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serialization");
    out.push('\n');
    out
}

/// Coefficient dump, one `(b, a)` cell per row.
pub fn write_coeffs_csv(
    path: &Path,
    shifts: &[f64],
    scales: &[f64],
    coeffs: &deep_ridgelet::nalgebra::DMatrix<C64>,
) -> Result<()> {
    let mut file = std::fs::File::create(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    writeln!(file, "b,a,re,im")?;
    for (j, &a) in scales.iter().enumerate() {
        for (i, &b) in shifts.iter().enumerate() {
            let v = coeffs[(i, j)];
            writeln!(file, "{b},{a},{},{}", v.re, v.im)?;
        }
    }
    Ok(())
}

pub fn write_refinement_csv(path: &Path, rows: &[RefinementRow]) -> Result<()> {
    let mut file = std::fs::File::create(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    writeln!(file, "level,n_a,n_b,relative_error")?;
    for row in rows {
        match row.relative_error {
            Some(err) => writeln!(file, "{},{},{},{}", row.level, row.n_a, row.n_b, err)?,
            None => writeln!(file, "{},{},{},", row.level, row.n_a, row.n_b)?,
        }
    }
    Ok(())
}
