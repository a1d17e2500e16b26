mod args;
mod render;

use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;
use eicat_core::category::FiniteCategory;
use eicat_core::field::{Field, FieldVisitor};
use eicat_core::grid::{gldim_report, grid_cells, run_grid};
use eicat_core::module::{random_module_seeded, CModule, FreeModule, GroupModule, RandomModuleSpec};
use eicat_core::resolution::{free_resolution, minimal_resolution, RadicalData};
use eicat_core::verify::{verify, VerifyOptions};
use eicat_core::Error;
use serde_json::json;

use args::{Cli, Command, Format, JobArgs, Mode, ResolveArgs, TableArgs, VerifyArgs};

/// Exit codes: 0 pass, 1 other failure, 2 usage, 3 predicted/computed
/// mismatch, 4 property failure.
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::LengthExceeded(_) | Error::DimensionMismatch(_) | Error::NotComposable(_) => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

const MISMATCH: u8 = 3;
const PROPERTY_FAILURE: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate(job) => enumerate(job),
        Command::Gldim(job) => gldim(job),
        Command::Table(t) => table(t),
        Command::Resolve(r) => resolve(r),
        Command::Verify(v) => run_verify(v),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn print(mut text: String) {
    use std::io::Write;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn category(job: &JobArgs) -> Result<Arc<FiniteCategory>, CliError> {
    Ok(Arc::new(FiniteCategory::build(job.species.build()?, job.n)?))
}

fn enumerate(job: &JobArgs) -> Result<ExitCode, CliError> {
    let cat = category(job)?;
    print(match job.format.unwrap_or(Format::Md) {
        Format::Md => render::enumerate_md(&cat),
        Format::Json => render::json(&render::enumerate_json(&cat)),
        Format::Csv => render::enumerate_csv(&cat),
    });
    Ok(ExitCode::SUCCESS)
}

fn gldim(job: &JobArgs) -> Result<ExitCode, CliError> {
    let species = job.species.build()?;
    let report = gldim_report(&species, job.n, job.field()?, job.bound()?)?;
    print(match job.format.unwrap_or(Format::Md) {
        Format::Md => render::gldim_md(&species, &report),
        Format::Json => render::json(&report.to_json()),
        Format::Csv => render::grid_csv(&[(species.clone(), report.clone())]),
    });
    Ok(if report.agrees { ExitCode::SUCCESS } else { ExitCode::from(MISMATCH) })
}

fn table(t: &TableArgs) -> Result<ExitCode, CliError> {
    if t.n > 4 {
        return Err(CliError::Usage(format!("--n {} exceeds the table limit 4", t.n)));
    }
    let cells = grid_cells(&t.species()?, t.n, &t.fields()?);
    let threads = t.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get().min(4)));
    let reports = run_grid(&cells, |c| t.bound.unwrap_or(c.default_bound()), threads)?;
    let rows: Vec<_> = cells.iter().map(|c| c.species.clone()).zip(reports).collect();
    print(match t.format.unwrap_or(Format::Md) {
        Format::Md => render::grid_md(&rows),
        Format::Json => render::json(&json!(rows.iter().map(|(_, r)| r.to_json()).collect::<Vec<_>>())),
        Format::Csv => render::grid_csv(&rows),
    });
    Ok(if rows.iter().all(|(_, r)| r.agrees) { ExitCode::SUCCESS } else { ExitCode::from(MISMATCH) })
}

/// Which module `resolve` works on.
#[derive(Clone, Debug)]
enum Selector {
    Simple(usize, usize),
    Representable(usize),
    Top(usize),
    Quotient,
    Regular,
    Random,
    File(String),
}

impl Selector {
    fn parse(s: &str, n: usize) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("bad module selector {s:?}"));
        let parts: Vec<&str> = s.splitn(2, ':').collect();
        let object = |t: &str| -> Result<usize, CliError> {
            let x: usize = t.parse().map_err(|_| bad())?;
            if x > n {
                return Err(CliError::Usage(format!("object {x} is outside C_{n}")));
            }
            Ok(x)
        };
        Ok(match (parts[0], parts.get(1)) {
            ("simple", Some(rest)) => match rest.split_once(':') {
                Some((x, k)) => Selector::Simple(object(x)?, k.parse().map_err(|_| bad())?),
                None => Selector::Simple(object(rest)?, 0),
            },
            ("representable", Some(x)) => Selector::Representable(object(x)?),
            ("top", Some(x)) => Selector::Top(object(x)?),
            ("quotient", None) => Selector::Quotient,
            ("regular", None) => Selector::Regular,
            ("random", None) => Selector::Random,
            ("file", Some(path)) => Selector::File(path.to_string()),
            _ => return Err(bad()),
        })
    }

    /// The object whose simples must have linear resolutions.
    fn simple_object(&self) -> Option<usize> {
        match self {
            Selector::Simple(x, _) | Selector::Top(x) => Some(*x),
            _ => None,
        }
    }

    fn build<F: Field>(&self, cat: &Arc<FiniteCategory>, f: &F, seed: u64) -> Result<CModule<F>, CliError> {
        Ok(match self {
            Selector::Simple(x, k) => {
                let chars = GroupModule::one_dim_characters(f.clone(), cat.aut_group(*x));
                let w = chars.get(*k).ok_or_else(|| {
                    CliError::Usage(format!("object {x} has {} one-dimensional characters over {}", chars.len(), f.spec()))
                })?;
                CModule::simple(cat.clone(), f.clone(), *x, w)?
            }
            Selector::Representable(x) => CModule::representable(cat.clone(), f.clone(), *x),
            Selector::Top(x) => RadicalData::new(cat.clone(), f.clone()).top(*x).clone(),
            Selector::Quotient => RadicalData::new(cat.clone(), f.clone()).quotient_module(),
            Selector::Regular => CModule::materialize(&FreeModule::new(cat.clone(), f.clone(), (0..=cat.n()).collect())),
            Selector::Random => {
                let spec = RandomModuleSpec { max_total_dim: 60, ..RandomModuleSpec::default() };
                random_module_seeded(cat, f, &spec, seed)
            }
            Selector::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                CModule::from_json(cat.clone(), f.clone(), &value)?
            }
        })
    }
}

struct ResolveJob<'a> {
    args: &'a ResolveArgs,
    category: Arc<FiniteCategory>,
    selector: Selector,
}

impl FieldVisitor for ResolveJob<'_> {
    type Output = Result<ExitCode, CliError>;
    fn visit<F: Field>(self, f: F) -> Self::Output {
        let job = &self.args.job;
        let (cat, n) = (&self.category, self.category.n());
        let module = self.selector.build(cat, &f, job.seed)?;
        let bound = job.bound()?;
        let meta = render::ResolveMeta {
            category: cat.species().describe(),
            params: cat.species().params_json(),
            n,
            field: f.spec().to_string(),
            module: self.args.module.clone(),
        };
        match self.args.mode {
            Mode::Minimal => {
                let res = minimal_resolution(&module, bound).map_err(|e| match e {
                    Error::RegimeViolation { .. } => CliError::Usage(format!("{e} (--mode free)")),
                    e => e.into(),
                })?;
                let betti = res.betti();
                let linear = self.selector.simple_object().map(|x| {
                    let expected: Vec<(usize, usize)> = (0..=n - x).map(|s| (s, s + x)).collect();
                    betti.support() == expected
                });
                print(match job.format.unwrap_or(Format::Csv) {
                    Format::Csv => betti.to_csv(n + 1),
                    Format::Md => render::betti_md(&meta, "minimal", &betti.rows, Some(res.length()), linear),
                    Format::Json => render::json(&json!({
                        "category": meta.category, "params": meta.params, "n": n, "field": meta.field,
                        "module": meta.module, "mode": "minimal", "length": res.length(), "betti": betti.rows,
                        "linear": linear, "resolution": res.to_json(),
                    })),
                });
                Ok(if linear == Some(false) { ExitCode::from(PROPERTY_FAILURE) } else { ExitCode::SUCCESS })
            }
            Mode::Free => {
                let res = free_resolution(&module, bound)?;
                let rows = res.generator_counts();
                print(match job.format.unwrap_or(Format::Csv) {
                    Format::Csv => render::rows_csv(&rows, n + 1),
                    Format::Md => render::betti_md(&meta, "free", &rows, res.length(), None),
                    Format::Json => render::json(&json!({
                        "category": meta.category, "params": meta.params, "n": n, "field": meta.field,
                        "module": meta.module, "mode": "free", "length": res.length(), "generators": rows,
                        "resolution": res.to_json(),
                    })),
                });
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn resolve(r: &ResolveArgs) -> Result<ExitCode, CliError> {
    let category = category(&r.job)?;
    let selector = Selector::parse(&r.module, category.n())?;
    r.job.field()?.dispatch(ResolveJob { args: r, category, selector })
}

struct VerifyJob {
    category: Arc<FiniteCategory>,
    options: VerifyOptions,
}

impl FieldVisitor for VerifyJob {
    type Output = Result<eicat_core::verify::VerifyReport, CliError>;
    fn visit<F: Field>(self, f: F) -> Self::Output {
        Ok(verify(self.category, f, &self.options)?)
    }
}

fn run_verify(v: &VerifyArgs) -> Result<ExitCode, CliError> {
    let job = &v.job;
    let category = category(job)?;
    let options = VerifyOptions { samples: v.samples, headroom: job.headroom()?, seed: job.seed, bound: job.bound()?, max_total_dim: 60 };
    let report = job.field()?.dispatch(VerifyJob { category, options })?;
    print(match job.format.unwrap_or(Format::Json) {
        Format::Json => render::json(&report.to_json()),
        Format::Md => render::verify_md(&report),
        Format::Csv => render::verify_csv(&report),
    });
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(PROPERTY_FAILURE) })
}
