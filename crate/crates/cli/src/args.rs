use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "workbench", version, about = "Exact Stickelberger, Hecke-lattice and Carlitz-module computations")]
#[command(arg_required_else_help = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct GlobalOpts {
    /// Characteristic of F_q.
    #[arg(long, global = true, default_value_t = 2)]
    pub p: u64,
    /// Extension degree, q = p^m.
    #[arg(long, global = true, default_value_t = 1)]
    pub m: u32,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    #[serde(skip)]
    pub json: Option<PathBuf>,
    /// Corrupt one computation on purpose to exercise failure reporting.
    #[arg(long, global = true, value_enum)]
    pub inject_fault: Option<FaultArg>,
    /// Record wall-clock timings (reports are then no longer reproducible byte for byte).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaultArg {
    Newton,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Evaluator series and Stickelberger elements.
    #[command(subcommand)]
    Stick(StickCmd),
    /// Lattice counts and Hecke operators.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Carlitz torsion.
    #[command(subcommand)]
    Carlitz(CarlitzCmd),
    /// The whole verification battery.
    VerifyAll(VerifyAllArgs),
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StickCmd {
    /// gamma_0..gamma_d and the tail law.
    Q {
        /// Monic modulus I, comma-separated little-endian coefficients.
        #[arg(long)]
        ideal: String,
        /// Number of tail coefficients to check.
        #[arg(long, default_value_t = 4)]
        extra: usize,
    },
    /// Theta_n and Theta'_n.
    Theta {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SeriesArg::Lattice)]
        method: SeriesArg,
    },
    /// Every group-ring identity for one modulus.
    Verify {
        #[arg(long)]
        ideal: String,
        /// Largest rank n.
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesArg {
    Lattice,
    Generating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiArg {
    Enumerate,
    Hermite,
    Closed,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeckeCmd {
    /// phi(g, n), the number of sublattices of A^n of index (g).
    Phi {
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PhiArg::Enumerate)]
        method: PhiArg,
    },
    /// d(J) for an invariant chain J, entries separated by ';'.
    Dcount {
        #[arg(long)]
        chain: String,
    },
    /// The Newton relation at a prime x.
    Newton {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Random test lattices besides A^n.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// T(J) T(J') = T(JJ') for coprime chains.
    Mult {
        #[arg(long)]
        j: String,
        #[arg(long)]
        jbar: String,
        #[arg(long, default_value_t = 1)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CarlitzCmd {
    /// The cyclotomic polynomial Psi_I with its checks.
    Psi {
        #[arg(long)]
        ideal: String,
    },
    /// The split-case tensor element for I = (t - a_1)...(t - a_k).
    Example39 {
        #[arg(long)]
        ideal: String,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyAllArgs {
    /// Restrict to these battery groups.
    #[arg(long = "group", value_name = "NAME")]
    pub groups: Vec<String>,
}
