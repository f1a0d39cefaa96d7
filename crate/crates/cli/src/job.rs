//! Validated job description shared by all subcommands.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use harmonic_shear::{mesh_boundary, mesh_interior, DiskMesh64};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Shear,
    Validate,
    Surface,
    Rule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

/// `interior`, `boundary` or `custom:NR,NT,RMAX`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshChoice {
    Interior,
    Boundary,
    Custom { nr: usize, ntheta: usize, rmax: f64 },
}

impl FromStr for MeshChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "interior" => Ok(MeshChoice::Interior),
            "boundary" => Ok(MeshChoice::Boundary),
            _ => {
                let body = s
                    .strip_prefix("custom:")
                    .ok_or_else(|| format!("unknown mesh '{s}' (interior, boundary or custom:NR,NT,RMAX)"))?;
                let parts: Vec<&str> = body.split(',').collect();
                if parts.len() != 3 {
                    return Err(format!("custom mesh needs NR,NT,RMAX, got '{body}'"));
                }
                let nr = parts[0].trim().parse().map_err(|e| format!("NR: {e}"))?;
                let ntheta = parts[1].trim().parse().map_err(|e| format!("NT: {e}"))?;
                let rmax = parts[2].trim().parse().map_err(|e| format!("RMAX: {e}"))?;
                Ok(MeshChoice::Custom { nr, ntheta, rmax })
            }
        }
    }
}

impl fmt::Display for MeshChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeshChoice::Interior => write!(f, "interior"),
            MeshChoice::Boundary => write!(f, "boundary"),
            MeshChoice::Custom { nr, ntheta, rmax } => write!(f, "custom:{nr},{ntheta},{rmax}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobSpec {
    pub command: Command,
    pub n: u32,
    /// `m` in `ω = z^m`; 0 means `ω ≡ 0`.
    pub dilatation_power: u32,
    pub mesh: MeshChoice,
    /// Outermost radius the mesh is rescaled to, if any.
    pub rmax: Option<f64>,
    pub tol: f64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub allow_sentinels: bool,
}

impl JobSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n < 3 {
            return Err(CliError::Usage(format!("--n must be at least 3, got {}", self.n)));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", self.tol)));
        }
        if let Some(r) = self.rmax {
            if !(r > 0.0 && r <= 1.0) {
                return Err(CliError::Usage(format!("--rmax must be in (0, 1], got {r}")));
            }
        }
        if let MeshChoice::Custom { nr, ntheta, rmax } = self.mesh {
            if nr < 2 || ntheta < 2 || !(rmax > 0.0 && rmax <= 1.0) {
                return Err(CliError::Usage(format!(
                    "custom mesh needs NR >= 2, NT >= 2 and 0 < RMAX <= 1, got {}",
                    self.mesh
                )));
            }
        }
        Ok(())
    }

    /// The sample mesh, rescaled to `rmax` when one applies.
    pub fn build_mesh(&self) -> Result<DiskMesh64, CliError> {
        let mesh = match self.mesh {
            MeshChoice::Interior => mesh_interior(),
            MeshChoice::Boundary => mesh_boundary(),
            MeshChoice::Custom { nr, ntheta, rmax } => DiskMesh64::polar(nr, ntheta, rmax)?,
        };
        Ok(match self.rmax {
            Some(r) => mesh.with_outer_radius(r),
            None => mesh,
        })
    }
}
