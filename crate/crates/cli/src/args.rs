//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::job::{Command, JobSpec, MeshChoice, OutputFormat};
use crate::RuleChoice;

#[derive(Debug, Parser)]
#[command(name = "hshear", version, about = "Harmonic shears of regular polygon maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Evaluate h, g, f and φ over a mesh, or draw the image mesh.
    Shear {
        #[command(flatten)]
        common: CommonArgs,
        /// Outermost mesh radius [default: 0.99 for the interior mesh].
        #[arg(long)]
        rmax: Option<f64>,
    },
    /// Compare against the closed forms (ω = zⁿ or z²ⁿ).
    Validate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Lift the shear to a minimal surface (even powers only).
    Surface {
        #[command(flatten)]
        common: CommonArgs,
        /// Outermost mesh radius [default: 0.8 for the interior mesh].
        #[arg(long)]
        rmax: Option<f64>,
        /// Also write an OBJ triangulation of the grid.
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Print Gauss–Legendre or Kronrod nodes and weights.
    Rule {
        #[arg(long, conflicts_with = "kronrod", required_unless_present = "kronrod")]
        gauss: Option<usize>,
        #[arg(long)]
        kronrod: bool,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Number of polygon sides.
    #[arg(long)]
    pub n: u32,
    /// Power m of the dilatation ω = z^m; 0 means ω ≡ 0.
    #[arg(long, default_value_t = 0)]
    pub omega: u32,
    /// interior, boundary or custom:NR,NT,RMAX.
    #[arg(long, default_value = "interior")]
    pub mesh: MeshChoice,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exit 0 even if some points hit a pole or did not converge.
    #[arg(long)]
    pub allow_sentinels: bool,
}

impl CommonArgs {
    pub fn into_job(self, command: Command, rmax: Option<f64>) -> JobSpec {
        JobSpec {
            command,
            n: self.n,
            dilatation_power: self.omega,
            mesh: self.mesh,
            rmax,
            tol: self.tol,
            output_format: self.format,
            output_path: self.out,
            allow_sentinels: self.allow_sentinels,
        }
    }
}

impl Sub {
    pub fn rule_choice(gauss: Option<usize>, kronrod: bool) -> RuleChoice {
        match (gauss, kronrod) {
            (_, true) => RuleChoice::Kronrod,
            (Some(n), false) => RuleChoice::Gauss(n),
            (None, false) => unreachable!("clap requires one of --gauss/--kronrod"),
        }
    }
}
