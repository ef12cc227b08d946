//! Front end for building, verifying and tabulating the catalog.

pub mod enumerate;
pub mod error;
pub mod expected;
pub mod report;
pub mod suites;

use std::path::PathBuf;
use std::str::FromStr;

use polyhopf::constructions::{catalog, CatalogEntry};
use polyhopf::hopf::{HopfAlg, HopfMap};
use polyhopf::scalar::{is_prime, Cyc};

pub use error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Md,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Format, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (json, csv, md)"))),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    pub command: String,
    pub names: Vec<String>,
    pub conductor: Option<u32>,
    pub prime: Option<u64>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(q) = self.prime {
            if q == 2 || !is_prime(q) {
                return Err(CliError::Usage(format!("--prime {q} is not an odd prime")));
            }
        }
        if self.conductor == Some(0) {
            return Err(CliError::Usage("--conductor must be positive".into()));
        }
        Ok(())
    }

    /// Writes to --out if given, else stdout.
    pub fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(p) => std::fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

/// An algebra to work on: a catalog entry, or an imported file.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub hopf: HopfAlg<Cyc>,
    pub entry: Option<CatalogEntry>,
}

fn lift_map(m: &HopfMap<Cyc>, n: u32) -> HopfMap<Cyc> {
    HopfMap { target: m.target.lift_conductor(n), images: m.images.iter().map(|v| v.iter().map(|c| c.lift_to(n)).collect()).collect() }
}

fn lift_entry(e: &CatalogEntry, n: u32) -> CatalogEntry {
    let lift = |v: &Vec<Cyc>| v.iter().map(|c| c.lift_to(n)).collect::<Vec<_>>();
    CatalogEntry {
        name: e.name.clone(),
        hopf: e.hopf.lift_conductor(n),
        alpha: e.alpha.as_ref().map(|a| [lift(&a[0]), lift(&a[1]), lift(&a[2]), lift(&a[3])]),
        iota: e.iota.as_ref().map(|(b, m)| (b.lift_conductor(n), lift_map(m, n))),
        projection: e.projection.as_ref().map(|p| lift_map(p, n)),
        family: e.family.clone(),
    }
}

fn with_conductor(h: HopfAlg<Cyc>, conductor: Option<u32>) -> Result<HopfAlg<Cyc>, CliError> {
    match conductor {
        Some(c) if c % h.conductor() != 0 => Err(CliError::Usage(format!("--conductor {c} is not a multiple of {}", h.conductor()))),
        Some(c) => Ok(h.lift_conductor(c)),
        None => Ok(h),
    }
}

/// A catalog name, or a path to a JSON file written by `build`.
pub fn load(name: &str, cfg: &RunConfig) -> Result<Instance, CliError> {
    if name.ends_with(".json") {
        let text = std::fs::read_to_string(name)?;
        let v: serde_json::Value = serde_json::from_str(&text)?;
        let h = with_conductor(HopfAlg::from_json(&v)?, cfg.conductor)?;
        let stem = std::path::Path::new(name).file_stem().and_then(|s| s.to_str()).unwrap_or(name);
        let inst = Instance { name: stem.to_string(), hopf: h, entry: None };
        check_prime(&inst, cfg)?;
        return Ok(inst);
    }
    let mut e = catalog(name, cfg.seed)?;
    if let Some(c) = cfg.conductor {
        with_conductor(e.hopf.clone(), Some(c))?;
        e = lift_entry(&e, c);
    }
    let inst = Instance { name: name.to_string(), hopf: e.hopf.clone(), entry: Some(e) };
    check_prime(&inst, cfg)?;
    Ok(inst)
}

/// --prime must be 1 mod the conductor and prime to the dimension.
fn check_prime(inst: &Instance, cfg: &RunConfig) -> Result<(), CliError> {
    let Some(q) = cfg.prime else { return Ok(()) };
    let n = inst.hopf.conductor() as u64;
    if (q - 1) % n != 0 || inst.hopf.dim() as u64 % q == 0 {
        return Err(CliError::Usage(format!("--prime {q} must be 1 mod {n} and prime to {} for {}", inst.hopf.dim(), inst.name)));
    }
    Ok(())
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
