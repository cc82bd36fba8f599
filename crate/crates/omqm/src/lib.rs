//! File formats, reports and the command-line front end built on
//! [`omqm_core`].

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod io;
pub mod spectrum;
pub mod svg;
pub mod table;

pub use error::{AppError, AppResult};
