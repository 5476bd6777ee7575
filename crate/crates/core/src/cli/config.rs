//! Run configuration: built-in defaults, then a `key = value` file, then
//! `LOGCOEFF_BITS`, then command-line flags.

use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::arith::DEFAULT_BITS;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 128;
pub const DEFAULT_SEED: u64 = 42;
pub const BITS_ENV: &str = "LOGCOEFF_BITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::Parse(format!("unknown format '{other}'"))),
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub bits: u32,
    pub order: usize,
    pub seed: u64,
    /// `None` leaves the choice to the subcommand.
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            bits: DEFAULT_BITS,
            order: DEFAULT_ORDER,
            seed: DEFAULT_SEED,
            format: None,
            out: None,
        }
    }
}

/// Values given on the command line; `None` means not given.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub bits: Option<u32>,
    pub order: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str, origin: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Parse(format!("{origin}: bad value '{value}' for '{key}'")))
}

/// `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config_text(text: &str, origin: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("{origin}:{}: expected key = value", i + 1)))?;
        out.push((k.trim().to_ascii_lowercase(), v.trim().to_string()));
    }
    Ok(out)
}

impl RunConfig {
    fn apply_file(&mut self, pairs: &[(String, String)], origin: &str) -> Result<()> {
        for (k, v) in pairs {
            match k.as_str() {
                "bits" => self.bits = parse_value(k, v, origin)?,
                "order" => self.order = parse_value(k, v, origin)?,
                "seed" => self.seed = parse_value(k, v, origin)?,
                "format" => self.format = Some(parse_value(k, v, origin)?),
                "out" => self.out = Some(PathBuf::from(v)),
                other => return Err(Error::Parse(format!("{origin}: unknown key '{other}'"))),
            }
        }
        Ok(())
    }

    /// Applies the layers in precedence order.
    pub fn resolve(config_file: Option<&Path>, env_bits: Option<&str>, flags: &Overrides) -> Result<Self> {
        let mut cfg = Self::default();
        if let Some(path) = config_file {
            let text = std::fs::read_to_string(path)?;
            let origin = path.display().to_string();
            cfg.apply_file(&parse_config_text(&text, &origin)?, &origin)?;
        }
        if let Some(b) = env_bits.map(str::trim).filter(|b| !b.is_empty()) {
            cfg.bits = parse_value("bits", b, BITS_ENV)?;
        }
        if let Some(b) = flags.bits {
            cfg.bits = b;
        }
        if let Some(o) = flags.order {
            cfg.order = o;
        }
        if let Some(s) = flags.seed {
            cfg.seed = s;
        }
        if flags.format.is_some() {
            cfg.format = flags.format;
        }
        if flags.out.is_some() {
            cfg.out = flags.out.clone();
        }
        Ok(cfg)
    }
}
