//! Family files and report formats.

pub mod family;
pub mod report;

pub use family::{family_to_json, load_family, parse_family, save_family, Family};
pub use report::{estimate_csv, to_json, write_estimate_csv, ESTIMATE_COLUMNS};
