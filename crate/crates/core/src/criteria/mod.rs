//! Decision procedures for adjacency: far numbers, far pairs, the combined
//! certificate, projection and base compatibility.

pub mod bases;
pub mod certificate;
pub mod far_number;
pub mod far_pair;
pub mod verdict;

pub use bases::{
    base_compatible, incompatibility_witness, IncompatibilityWitness, WitnessCase, WitnessSearch,
};
pub use certificate::{
    check_adjacency, project, Adjacency, AdjacencyCertificate, Comparability, Entry,
};
pub use far_number::{far_number, far_number_recheck, far_number_sample, far_number_with};
pub use far_pair::{far_pair, far_pair_recheck, far_pair_sample, far_pair_with};
pub use verdict::{Basis, CriteriaConfig, Verdict, VerdictKind, Witness};
