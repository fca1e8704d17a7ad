//! General `n`-adic grids: digit streams, location functions, cube queries
//! and grid constructions.

pub mod construct;
pub mod digits;
pub mod rep;

pub use construct::{canonical, drop_generations, project_grid, rerepresent, shift_origin};
pub use digits::DigitStream;
pub use rep::{Cube, GridRep, Openness};
