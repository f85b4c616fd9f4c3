//! Loading and validating input files. Every failure here is a usage error.

use std::path::Path;

use pathdual::algebra::Monoid;
use pathdual::homdual::{named_duality, DualityFunction};
use pathdual::product::{LiftedDuality, SiteMap, SiteSpace};
use pathdual::{Elem, FunctionTable};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::CliError;

/// A duality given as a file instead of by name.
#[derive(Debug, Deserialize)]
pub struct DualityFile {
    pub s: Monoid,
    pub r: Monoid,
    pub t: Monoid,
    pub table: Vec<Vec<Elem>>,
    #[serde(default)]
    pub real_embedding: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
pub struct RatedMatrix {
    pub matrix: Vec<Vec<FunctionTable>>,
    pub rate: f64,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A catalog name such as `psi5`, or a path to a [`DualityFile`].
pub fn load_duality(source: &str) -> Result<DualityFunction, CliError> {
    if let Some(psi) = named_duality(source) {
        return Ok(psi);
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(CliError::Usage(format!("unknown duality '{source}' (neither a catalog name nor a file)")));
    }
    let file: DualityFile = read_json(path)?;
    let psi = DualityFunction::new(file.s, file.r, file.t, &file.table)
        .and_then(DualityFunction::verify)
        .map_err(|e| CliError::Usage(format!("{source}: {e}")))?;
    match file.real_embedding {
        Some(values) => psi.with_real_embedding(values).map_err(|e| CliError::Usage(format!("{source}: {e}"))),
        None => Ok(psi),
    }
}

pub fn site_map(local: &Monoid, sites: usize, matrix: Vec<Vec<FunctionTable>>) -> Result<SiteMap, CliError> {
    if matrix.len() != sites || matrix.iter().any(|row| row.len() != sites) {
        return Err(CliError::Usage(format!("map matrix must be {sites}×{sites}")));
    }
    SiteMap::new(local.clone(), matrix).map_err(CliError::usage)
}

pub fn load_map(path: &Path, local: &Monoid, sites: usize) -> Result<SiteMap, CliError> {
    let matrix: Vec<Vec<FunctionTable>> = read_json(path)?;
    site_map(local, sites, matrix).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn load_rates(path: &Path, local: &Monoid, sites: usize) -> Result<Vec<(SiteMap, f64)>, CliError> {
    let entries: Vec<RatedMatrix> = read_json(path)?;
    if entries.is_empty() {
        return Err(CliError::Usage(format!("{}: no maps", path.display())));
    }
    entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            if !e.rate.is_finite() || e.rate < 0.0 {
                return Err(CliError::Usage(format!("{}: map {i} has invalid rate {}", path.display(), e.rate)));
            }
            let map = site_map(local, sites, e.matrix).map_err(|err| CliError::Usage(format!("{}: map {i}: {err}", path.display())))?;
            Ok((map, e.rate))
        })
        .collect()
}

pub fn configuration(name: &str, values: Option<Vec<usize>>, space: &SiteSpace) -> Result<Vec<Elem>, CliError> {
    let values = values.ok_or_else(|| CliError::Usage(format!("--{name} is required for the expectation check")))?;
    if !space.contains(&values) {
        return Err(CliError::Usage(format!(
            "--{name} must list {} elements below {}",
            space.sites,
            space.local.order()
        )));
    }
    Ok(values)
}

pub fn require_embedding(lifted: &LiftedDuality) -> Result<(), CliError> {
    if lifted.local.real_embedding.is_none() {
        return Err(CliError::Usage("the expectation check needs a duality with a real embedding of T".into()));
    }
    Ok(())
}
