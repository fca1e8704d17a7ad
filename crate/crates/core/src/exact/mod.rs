//! Exact arithmetic: rationals, integer logarithms, two-scale lattices,
//! factorization and `n`-adic expansions.

pub mod adic;
pub mod lattice;
pub mod numtheory;
pub mod rational;

pub use adic::{adic_digits, adic_value};
pub use lattice::{dist_to_lattice, lattice_mesh};
pub use numtheory::{factorize, phi, phi_sequence, primitive_root, PrimeFactorization};
pub use rational::{parse_rational, rat, Rational};
