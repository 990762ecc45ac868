//! Validated run configuration.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use qautcert::algebra::BlockSpec;
use qautcert::arith::Backend;
use serde::Serialize;
use thiserror::Error;

/// Largest `N` accepted without `--allow-large`, per backend.
pub const EXACT_LIMIT: usize = 16;
pub const FLOAT_LIMIT: usize = 36;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ueb,
    Twist,
    Conj,
    Tt,
    Pvm,
    Homs,
    Shuffle,
    Cov,
    Haar,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Ueb,
        Suite::Twist,
        Suite::Conj,
        Suite::Tt,
        Suite::Pvm,
        Suite::Homs,
        Suite::Shuffle,
        Suite::Cov,
        Suite::Haar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ueb => "ueb",
            Suite::Twist => "twist",
            Suite::Conj => "conj",
            Suite::Tt => "tt",
            Suite::Pvm => "pvm",
            Suite::Homs => "homs",
            Suite::Shuffle => "shuffle",
            Suite::Cov => "cov",
            Suite::Haar => "haar",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("unknown suite `{0}` (expected one of ueb,twist,conj,tt,pvm,homs,shuffle,cov,haar)")]
    UnknownSuite(String),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("tolerance must be a positive finite number, got {0}")]
    Tolerance(f64),
    #[error("no suites selected")]
    NoSuites,
    #[error(
        "N = {n} exceeds the {backend} backend limit of {limit}; pass --allow-large to run anyway"
    )]
    TooLarge {
        n: usize,
        backend: Backend,
        limit: usize,
    },
    #[error("worker count must be at least 1")]
    Workers,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub partition: BlockSpec,
    pub backend: Backend,
    pub tol: f64,
    pub seed: u64,
    /// Registry order, no duplicates.
    pub suites: Vec<Suite>,
    pub out: Option<PathBuf>,
    pub workers: usize,
    pub allow_large: bool,
}

impl SuiteConfig {
    pub fn new(partition: BlockSpec, backend: Backend) -> Self {
        SuiteConfig {
            partition,
            backend,
            tol: 1e-9,
            seed: 42,
            suites: Suite::ALL.to_vec(),
            out: None,
            workers: 1,
            allow_large: false,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(ConfigError::Tolerance(self.tol));
        }
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        if self.workers == 0 {
            return Err(ConfigError::Workers);
        }
        let limit = match self.backend {
            Backend::Exact => EXACT_LIMIT,
            Backend::Float => FLOAT_LIMIT,
        };
        let n = self.partition.big_n();
        if n > limit && !self.allow_large {
            return Err(ConfigError::TooLarge {
                n,
                backend: self.backend,
                limit,
            });
        }
        Ok(())
    }
}

pub fn parse_partition(s: &str) -> Result<BlockSpec, ConfigError> {
    s.parse()
        .map_err(|e| ConfigError::Partition(format!("`{s}`: {e}")))
}

/// Comma-separated suite names; `all` selects every suite. The result is
/// in registry order without duplicates.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, ConfigError> {
    if s.trim() == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let mut picked = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(Suite::from_str)
        .collect::<Result<Vec<_>, _>>()?;
    picked.sort();
    picked.dedup();
    Ok(picked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse_in_registry_order() {
        assert_eq!(
            parse_suites("haar,ueb,haar").unwrap(),
            vec![Suite::Ueb, Suite::Haar]
        );
        assert_eq!(parse_suites("all").unwrap().len(), 9);
        assert_eq!(
            parse_suites("ueb,nope"),
            Err(ConfigError::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn guardrails() {
        let mut c = SuiteConfig::new(parse_partition("4,1").unwrap(), Backend::Exact);
        assert!(matches!(
            c.validate(),
            Err(ConfigError::TooLarge { n: 17, .. })
        ));
        c.allow_large = true;
        assert!(c.validate().is_ok());
        let mut f = SuiteConfig::new(parse_partition("6,1").unwrap(), Backend::Float);
        assert!(matches!(
            f.validate(),
            Err(ConfigError::TooLarge {
                n: 37,
                limit: 36,
                ..
            })
        ));
        f.partition = parse_partition("6").unwrap();
        assert!(f.validate().is_ok());
    }

    #[test]
    fn bad_values() {
        let mut c = SuiteConfig::new(parse_partition("2").unwrap(), Backend::Exact);
        c.tol = 0.0;
        assert_eq!(c.validate(), Err(ConfigError::Tolerance(0.0)));
        c.tol = 1e-9;
        c.suites.clear();
        assert_eq!(c.validate(), Err(ConfigError::NoSuites));
        assert!(parse_partition("2,0").is_err());
    }
}
