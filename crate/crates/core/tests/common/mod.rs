#![allow(dead_code)]

use std::path::PathBuf;

use dyadic_atlas::criteria::Adjacency;
use dyadic_atlas::io::{load_family, Family};

pub fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

pub fn load(name: &str) -> Family {
    load_family(catalog_dir().join(format!("{name}.json"))).unwrap()
}

/// Every catalog family with its known verdict.
pub const CATALOG: [(&str, Adjacency); 12] = [
    ("third-shift", Adjacency::Adjacent),
    ("duplicate", Adjacency::NotAdjacent),
    ("base2-base3", Adjacency::NotAdjacent),
    ("base2-base16", Adjacency::Adjacent),
    ("base4-base8", Adjacency::Adjacent),
    ("shared-tail", Adjacency::NotAdjacent),
    ("quarter-shift", Adjacency::NotAdjacent),
    ("base6-base36", Adjacency::Adjacent),
    ("plane-thirds", Adjacency::Adjacent),
    ("plane-collision", Adjacency::NotAdjacent),
    ("plane-2-4-8", Adjacency::Adjacent),
    ("plane-2-3-2", Adjacency::NotAdjacent),
];

pub fn catalog() -> Vec<(&'static str, Adjacency, Family)> {
    CATALOG
        .iter()
        .map(|&(name, v)| (name, v, load(name)))
        .collect()
}
