//! Run configuration and the curated data directory.

use std::path::{Path, PathBuf};

use weyl_strata_core::rootsys::CartanType;
use weyl_strata_core::strata::GroupSpec;
use weyl_strata_core::unipotent::SpringerData;
use weyl_strata_core::Caps;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Semisimple type such as `C2` or `A1xA1`.
    pub cartan_type: String,
    pub total_rank: Option<usize>,
    pub characteristic: u32,
    pub order_cap: Option<u64>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(cartan_type: &str) -> Self {
        RunConfig {
            cartan_type: cartan_type.into(),
            total_rank: None,
            characteristic: 0,
            order_cap: None,
            format: Format::Json,
            out: None,
        }
    }

    pub fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(order) = self.order_cap {
            caps.order = order;
        }
        caps
    }

    pub fn spec(&self) -> Result<GroupSpec, CliError> {
        if self.order_cap == Some(0) {
            return Err(CliError::Config("the order cap must be positive".into()));
        }
        let ct: CartanType = self.cartan_type.parse()?;
        if ct.rank() > self.caps().rank {
            return Err(CliError::Config(format!(
                "rank {} of {ct} exceeds the rank cap {}",
                ct.rank(),
                self.caps().rank
            )));
        }
        Ok(GroupSpec::new(ct, self.total_rank, self.characteristic)?)
    }
}

/// The embedded tables, with any `<TYPE>.json` found in `dir` taking the
/// place of the embedded copy.
pub fn load_data(dir: Option<&Path>) -> Result<SpringerData, CliError> {
    let mut data = SpringerData::embedded();
    let Some(dir) = dir else { return Ok(data) };
    if !dir.is_dir() {
        return Err(CliError::Config(format!("data directory {} does not exist", dir.display())));
    }
    for stem in SpringerData::file_stems() {
        let path = dir.join(format!("{stem}.json"));
        if !path.exists() {
            continue;
        }
        let text = std::fs::read_to_string(&path).map_err(|e| CliError::Integrity {
            message: format!("cannot read {}: {e}", path.display()),
            violations: Vec::new(),
        })?;
        data.insert(&path.display().to_string(), &text)?;
    }
    Ok(data)
}
