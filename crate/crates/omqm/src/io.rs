//! Reading and writing the on-disk formats.

use std::path::Path;

use omqm_core::moduli::{parse_path, PlanarPath};
use omqm_core::zeta::{format_zero_list, parse_zero_list, ZetaZero};

use crate::error::{AppError, AppResult};

fn read(path: &Path) -> AppResult<String> {
    std::fs::read_to_string(path).map_err(|source| AppError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write(path: &Path, contents: &str) -> AppResult<()> {
    std::fs::write(path, contents).map_err(|source| AppError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// One ordinate per line, ascending, `#` comments allowed.
pub fn read_zero_file(path: &Path) -> AppResult<Vec<ZetaZero>> {
    parse_zero_list(&read(path)?).map_err(|source| AppError::FileFormat {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_zero_file(path: &Path, zeros: &[ZetaZero]) -> AppResult<()> {
    write(path, &format_zero_list(zeros))
}

/// One `x y` vertex per line.
pub fn read_path_file(path: &Path) -> AppResult<PlanarPath> {
    parse_path(&read(path)?).map_err(|source| AppError::FileFormat {
        path: path.to_path_buf(),
        source,
    })
}
