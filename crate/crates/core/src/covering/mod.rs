//! Direct covering queries: the ground truth that certificates are checked
//! against.

pub mod adversarial;
pub mod estimate;
pub mod search;

pub use adversarial::{adversarial_cubes, refute, AdversarialSpec, Refutation};
pub use estimate::{estimate_constant, random_cube, EstimateReport, ScaleReport};
pub use search::{containing_cube, smallest_comparable, CoverResult};
