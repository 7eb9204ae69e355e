use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lmbraid", version, about = "Exact Long-Moody, Gassner, Lawrence and reduced braid representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the matrix of a braid word under one of the built-in families.
    Gen(GenArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Build a new representation file from an existing one.
    Apply(ApplyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Specialization of the universal matrices at g_i ↦ t, σ_i ↦ s.
    Burau,
    /// The Gassner family of P_n from the trivial input (word must be pure).
    Gassner,
    /// The universal Lawrence matrices over Z[⟨q⟩ × B_m].
    Lawrence,
    /// The universal Long-Moody matrices over Z[F_n ⋊ B_n].
    Universal,
    /// The reduced universal matrices.
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    /// Number of strands.
    #[arg(long)]
    pub n: usize,
    /// Size of the subsets indexing the Lawrence basis.
    #[arg(long)]
    pub m: Option<usize>,
    /// Braid word such as "s1 s2^-1 s1"; empty means the identity.
    #[arg(long, default_value = "")]
    pub word: String,
    /// "symbolic", or assignments such as "s=1,t=q" or "t1=2,t2=-1/3".
    #[arg(long, default_value = "symbolic")]
    pub params: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Artin relations: universal (--n), universal Lawrence (--n --m), or a file (--rep).
    BraidRelations,
    /// The quadratic relation of the universal generators.
    Quadratic,
    /// Hecke preservation for a representation of B_m (--rep), or the built-in inputs.
    Hecke,
    /// Artin relations of the reduced universal matrices.
    Reduced,
    /// The Gassner family of P_n.
    Gassner,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: Option<usize>,
    /// Representation file.
    #[arg(long)]
    pub rep: Option<PathBuf>,
    /// Run checks one after another instead of in parallel.
    #[arg(long)]
    pub sequential: bool,
    /// Print only the summary line of each report.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Long-Moody on a representation of F_n ⋊ G; --params t rescales every g_i.
    Lm,
    /// Restrict a representation of G' ≤ B_{N+1} to F_N ⋊ G, then Long-Moody.
    Subgroup,
    /// Gassner family from a representation of P_{n+1}; --params t1,..,tn.
    Gassner,
    /// One Lawrence step from a representation of B_{n,m+1}.
    LawrenceStep,
    /// Iterate restrict, rescale and Long-Moody from B_N; --params lists one value per step.
    Tower,
    /// The Lawrence tower of B_n (--n) from a representation of B_m; --params q.
    Lawrence,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[arg(long)]
    pub rep: PathBuf,
    #[arg(long, value_enum)]
    pub construction: Construction,
    /// Comma-separated parameter expressions, e.g. "t" or "t1,t2".
    #[arg(long)]
    pub params: Option<String>,
    /// Number of tower steps; a single parameter is reused for every step.
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Target number of strands for the Lawrence tower.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
