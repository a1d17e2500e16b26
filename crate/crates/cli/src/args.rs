use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eicat_core::category::{Species, SpeciesKind};
use eicat_core::field::FieldSpec;
use eicat_core::group::FiniteGroup;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "eicat", version, about = "Global dimensions and resolutions for truncated FI, OI, VI and relatives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Objects, hom-set sizes, automorphism orders and algebra dimension.
    Enumerate(JobArgs),
    /// Predicted against computed global dimension of one category algebra.
    Gldim(JobArgs),
    /// The grid of predicted against computed global dimensions.
    Table(TableArgs),
    /// Minimal or free resolution of a module, as a Betti table.
    Resolve(ResolveArgs),
    /// Randomized property suite for one category and field.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct SpeciesArgs {
    /// fi, fi_g, fi_d, oi, oi_g, oi_d or vi.
    #[arg(long)]
    pub species: String,
    /// Built-in group for fi_g and oi_g: c1..c6, s3, klein.
    #[arg(long, conflicts_with = "group_file")]
    pub group: Option<String>,
    /// JSON multiplication table for fi_g and oi_g.
    #[arg(long)]
    pub group_file: Option<PathBuf>,
    /// Number of colours for fi_d and oi_d.
    #[arg(long)]
    pub d: Option<u32>,
    /// Prime q for vi.
    #[arg(long)]
    pub q: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct JobArgs {
    #[command(flatten)]
    pub species: SpeciesArgs,
    /// Largest object of the truncation C_n.
    #[arg(long)]
    pub n: usize,
    /// 0 for the rationals or a prime.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    /// Length bound B for resolutions (default n + 4).
    #[arg(long)]
    pub bound: Option<usize>,
    /// Headroom N for the restriction checks (default n + 2).
    #[arg(long)]
    pub headroom: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// Comma-separated species (default: all, with G in {c2, c3}, d in {1, 2}, q = 2).
    #[arg(long, value_delimiter = ',')]
    pub species: Vec<String>,
    #[arg(long, conflicts_with = "group_file")]
    pub group: Option<String>,
    #[arg(long)]
    pub group_file: Option<PathBuf>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Largest n in the grid (at most 4).
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Comma-separated characteristics.
    #[arg(long = "char", value_delimiter = ',', default_values_t = [0u64, 2, 3, 5])]
    pub characteristics: Vec<u64>,
    /// Length bound for every cell (default n + 4 per cell).
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Worker threads.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Projective covers; needs every |Aut(x)| invertible.
    Minimal,
    /// Covers by representables; any field.
    Free,
}

#[derive(Args, Debug, Clone)]
pub struct ResolveArgs {
    #[command(flatten)]
    pub job: JobArgs,
    #[arg(long, value_enum, default_value_t = Mode::Minimal)]
    pub mode: Mode,
    /// simple:X[:K], representable:X, top:X, quotient, regular, random or file:PATH.
    #[arg(long, default_value = "simple:0")]
    pub module: String,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub job: JobArgs,
    /// Random modules per property.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn group(name: Option<&str>, file: Option<&PathBuf>) -> Result<Option<FiniteGroup>, CliError> {
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(Some(FiniteGroup::from_json(&text)?));
    }
    name.map(FiniteGroup::builtin).transpose().map_err(Into::into)
}

impl SpeciesArgs {
    pub fn build(&self) -> Result<Species, CliError> {
        let kind: SpeciesKind = self.species.parse()?;
        let g = group(self.group.as_deref(), self.group_file.as_ref())?;
        Ok(Species::from_parts(kind, g, self.d, self.q)?)
    }
}

impl JobArgs {
    pub fn field(&self) -> Result<FieldSpec, CliError> {
        let c = self.characteristic.ok_or_else(|| usage("--char is required"))?;
        Ok(FieldSpec::from_characteristic(c)?)
    }
    pub fn bound(&self) -> Result<usize, CliError> {
        let b = self.bound.unwrap_or(self.n + 4);
        if b < self.n {
            return Err(usage(format!("--bound {b} is below n = {}", self.n)));
        }
        Ok(b)
    }
    pub fn headroom(&self) -> Result<usize, CliError> {
        let h = self.headroom.unwrap_or(self.n + 2);
        if h < self.n {
            return Err(usage(format!("--headroom {h} is below n = {}", self.n)));
        }
        Ok(h)
    }
}

impl TableArgs {
    /// The species rows: each named species, with every grid parameter
    /// unless one was given.
    pub fn species(&self) -> Result<Vec<Species>, CliError> {
        if self.species.is_empty() {
            return Ok(eicat_core::grid::grid_species());
        }
        let g = group(self.group.as_deref(), self.group_file.as_ref())?;
        let groups = match g {
            Some(g) => vec![g],
            None => vec![FiniteGroup::cyclic(2)?, FiniteGroup::cyclic(3)?],
        };
        let colours = self.d.map_or(vec![1, 2], |d| vec![d]);
        let mut out = Vec::new();
        for name in &self.species {
            let kind: SpeciesKind = name.parse()?;
            match kind {
                SpeciesKind::FiG | SpeciesKind::OiG => {
                    for g in &groups {
                        out.push(Species::from_parts(kind, Some(g.clone()), None, None)?);
                    }
                }
                SpeciesKind::FiD | SpeciesKind::OiD => {
                    for &d in &colours {
                        out.push(Species::from_parts(kind, None, Some(d), None)?);
                    }
                }
                _ => out.push(Species::from_parts(kind, None, None, Some(self.q.unwrap_or(2)))?),
            }
        }
        Ok(out)
    }
    pub fn fields(&self) -> Result<Vec<FieldSpec>, CliError> {
        self.characteristics.iter().map(|&c| Ok(FieldSpec::from_characteristic(c)?)).collect()
    }
}
