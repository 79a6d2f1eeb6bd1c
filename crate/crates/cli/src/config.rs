use std::fmt;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use dunkl_core::{Error, MuParams, Result};
use serde::{Deserialize, Serialize};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Structured,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Human => "human",
            Format::Structured => "structured",
        })
    }
}

/// Contents of a `--config` TOML file. Every key is optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub mu: Option<String>,
    pub mu_samples: Option<Vec<String>>,
    pub cap: Option<u32>,
    pub nmax: Option<u32>,
    pub tol: Option<f64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("reading {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

/// Values given on the command line.
#[derive(Clone, Debug, Default)]
pub struct FlagConfig {
    pub mu: Option<String>,
    pub cap: Option<u32>,
    pub nmax: Option<u32>,
    pub tol: Option<f64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

/// Effective configuration: flags, then the config file, then defaults.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    /// Explicit parameter choice; when absent, multi-sample commands use
    /// `mu_samples` and single-state commands use `0,0,0`.
    pub mu: Option<MuParams>,
    pub mu_samples: Vec<MuParams>,
    pub cap: Option<u32>,
    pub nmax: Option<u32>,
    pub tol: f64,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

pub const DEFAULT_TOL: f64 = 1e-9;

impl RunConfig {
    pub fn resolve(flags: FlagConfig, file: FileConfig) -> Result<Self> {
        let mu = flags.mu.or(file.mu).map(|m| MuParams::parse(&m)).transpose()?;
        let mu_samples = match file.mu_samples {
            Some(list) if list.is_empty() => return Err(Error::Config("mu_samples must not be empty".into())),
            Some(list) => list.iter().map(|m| MuParams::parse(m)).collect::<Result<_>>()?,
            None => MuParams::default_samples(),
        };
        let tol = flags.tol.or(file.tol).unwrap_or(DEFAULT_TOL);
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::Config(format!("tolerance must be positive and finite, got {tol}")));
        }
        Ok(RunConfig {
            mu,
            mu_samples,
            cap: flags.cap.or(file.cap),
            nmax: flags.nmax.or(file.nmax),
            tol,
            format: flags.format.or(file.format).unwrap_or(Format::Human),
            out: flags.out.or(file.out),
        })
    }

    /// The explicit parameters, or every sample.
    pub fn mu_set(&self) -> Vec<MuParams> {
        match &self.mu {
            Some(m) => vec![m.clone()],
            None => self.mu_samples.clone(),
        }
    }

    pub fn single_mu(&self) -> MuParams {
        self.mu.clone().unwrap_or_else(MuParams::zero)
    }

    /// One-line echo of the effective configuration. `single` selects the
    /// parameter choice of single-state commands.
    pub fn header(&self, single: bool) -> String {
        let opt = |v: Option<u32>| v.map_or("default".to_string(), |v| v.to_string());
        let mu = if single {
            self.single_mu().to_string()
        } else {
            self.mu_set().iter().map(|m| format!("({m})")).collect::<Vec<_>>().join(" ")
        };
        format!("# mu: {mu}; cap: {}; nmax: {}; tol: {:e}; format: {}", opt(self.cap), opt(self.nmax), self.tol, self.format)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file = FileConfig { mu: Some("1/2,1/2,1/2".into()), cap: Some(4), tol: Some(1e-6), ..Default::default() };
        let flags = FlagConfig { cap: Some(7), ..Default::default() };
        let cfg = RunConfig::resolve(flags, file).unwrap();
        assert_eq!(cfg.cap, Some(7));
        assert_eq!(cfg.tol, 1e-6);
        assert_eq!(cfg.mu_set(), vec![MuParams::from_ratios([(1, 2), (1, 2), (1, 2)]).unwrap()]);
        assert_eq!(cfg.format, Format::Human);
    }

    #[test]
    fn rejects_bad_values() {
        let flags = |mu: &str| FlagConfig { mu: Some(mu.into()), ..Default::default() };
        assert!(RunConfig::resolve(flags("-1/2,0,0"), FileConfig::default()).is_err());
        assert!(RunConfig::resolve(flags("0.5,0,0"), FileConfig::default()).is_err());
        let tol = FlagConfig { tol: Some(0.0), ..Default::default() };
        assert!(RunConfig::resolve(tol, FileConfig::default()).is_err());
        let empty = FileConfig { mu_samples: Some(vec![]), ..Default::default() };
        assert!(RunConfig::resolve(FlagConfig::default(), empty).is_err());
    }

    #[test]
    fn parses_toml() {
        let file: FileConfig = toml::from_str("mu_samples = [\"0,0,0\", \"1/3,1/4,1/5\"]\ncap = 2\nformat = \"structured\"").unwrap();
        let cfg = RunConfig::resolve(FlagConfig::default(), file).unwrap();
        assert_eq!(cfg.mu_set().len(), 2);
        assert_eq!(cfg.format, Format::Structured);
        assert!(toml::from_str::<FileConfig>("capp = 2").is_err());
    }
}
