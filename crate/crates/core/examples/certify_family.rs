//! Certifies every catalog family and prints its verdict and constants.

use dyadic_atlas::criteria::{check_adjacency, CriteriaConfig};
use dyadic_atlas::io::load_family;

fn main() -> dyadic_atlas::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .expect("catalog directory")
        .flatten()
        .map(|e| e.path())
        .collect();
    paths.sort();
    for path in paths {
        let fam = load_family(&path)?;
        let cert = check_adjacency(&fam.grids, &CriteriaConfig::default())?;
        let name = path.file_stem().unwrap().to_string_lossy();
        match &cert.comparability {
            Some(c) => println!(
                "{name:<16} {:?}  C1 {}  C2 {}  cap {}",
                cert.overall, c.c1, c.c2, c.cap
            ),
            None => {
                let (cond, e) = cert
                    .first_failure()
                    .map(|(c, e)| (c.to_string(), e.key()))
                    .unwrap_or_default();
                println!(
                    "{name:<16} {:?}  condition {cond} fails at {e}",
                    cert.overall
                );
            }
        }
    }
    Ok(())
}
