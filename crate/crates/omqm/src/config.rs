//! Run configuration: defaults, overridden by a `key = value` file, overridden
//! by command-line flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use omqm_core::dynamics::feigenbaum::MIN_PRECISION_DIGITS;
use omqm_core::omqm::{GravityMode, OMConstants, SpinSign, DEFAULT_DELTA, DEFAULT_DIMENSION};

use crate::error::{AppError, AppResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

pub fn parse_mode(s: &str) -> Result<GravityMode, String> {
    match s {
        "derived" => Ok(GravityMode::Derived),
        "paper-literal" => Ok(GravityMode::Literal),
        other => Err(format!("unknown mode {other:?} (expected derived or paper-literal)")),
    }
}

pub fn mode_name(mode: GravityMode) -> &'static str {
    match mode {
        GravityMode::Derived => "derived",
        GravityMode::Literal => "paper-literal",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ZeroSource {
    #[default]
    Compute,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub delta: f64,
    pub dimension: f64,
    pub s_sign: i8,
    pub zeros: ZeroSource,
    /// Zeros to compute; `None` means as many as the command needs.
    pub zero_count: Option<usize>,
    pub format: OutputFormat,
    pub precision_digits: u32,
    pub mode: GravityMode,
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            delta: DEFAULT_DELTA,
            dimension: DEFAULT_DIMENSION,
            s_sign: 1,
            zeros: ZeroSource::Compute,
            zero_count: None,
            format: OutputFormat::Csv,
            precision_digits: MIN_PRECISION_DIGITS,
            mode: GravityMode::Derived,
            threads: 1,
        }
    }
}

impl RunConfig {
    pub fn constants(&self) -> AppResult<OMConstants> {
        let sign = SpinSign::from_i8(self.s_sign)?;
        Ok(OMConstants::new(self.delta, self.dimension, sign)?)
    }

    /// Applies one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
            value.parse().map_err(|_| format!("bad value {value:?} for {key}"))
        }
        match key {
            "delta" => self.delta = num(key, value)?,
            "D" => self.dimension = num(key, value)?,
            "s_sign" => self.s_sign = num(key, value)?,
            "zeros" => {
                self.zeros = if value == "compute" {
                    ZeroSource::Compute
                } else {
                    ZeroSource::File(PathBuf::from(value))
                }
            }
            "zero_count" => self.zero_count = Some(num(key, value)?),
            "format" => self.format = value.parse()?,
            "precision" => self.precision_digits = num(key, value)?,
            "mode" => self.mode = parse_mode(value)?,
            "threads" => self.threads = num(key, value)?,
            other => return Err(format!("unknown key {other:?}")),
        }
        Ok(())
    }

    /// Applies every assignment in a config file. Blank lines and `#`
    /// comments are skipped; relative zero-file paths resolve against the
    /// config file's directory.
    pub fn apply_text(&mut self, text: &str, base: Option<&Path>) -> AppResult<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message| AppError::Config { line: i + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            self.set(key.trim(), value.trim()).map_err(err)?;
        }
        if let (ZeroSource::File(path), Some(base)) = (&mut self.zeros, base) {
            if path.is_relative() {
                *path = base.join(&*path);
            }
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> AppResult<()> {
        let text = std::fs::read_to_string(path).map_err(|source| AppError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        self.apply_text(&text, path.parent())
    }

    /// Echo of the configuration for report headers.
    pub fn describe(&self) -> Vec<(&'static str, String)> {
        vec![
            ("delta", format!("{}", self.delta)),
            ("D", format!("{}", self.dimension)),
            ("s_sign", format!("{}", self.s_sign)),
            (
                "zeros",
                match &self.zeros {
                    ZeroSource::Compute => "compute".to_string(),
                    ZeroSource::File(p) => p.display().to_string(),
                },
            ),
            (
                "zero_count",
                self.zero_count.map_or_else(|| "auto".to_string(), |n| n.to_string()),
            ),
            ("format", self.format.to_string()),
            ("precision", self.precision_digits.to_string()),
            ("mode", mode_name(self.mode).to_string()),
        ]
    }
}
