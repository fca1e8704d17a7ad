//! Turns NOT_FAR witnesses into cubes that no grid covers comparably.

use dyadic_atlas::covering::{refute, smallest_comparable};
use dyadic_atlas::criteria::{check_adjacency, CriteriaConfig};
use dyadic_atlas::exact::rat;
use dyadic_atlas::io::load_family;

fn main() -> dyadic_atlas::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    let cap = rat(1000, 1);
    for name in ["duplicate", "quarter-shift", "shared-tail", "base2-base3"] {
        let fam = load_family(dir.join(format!("{name}.json")))?;
        let cert = check_adjacency(&fam.grids, &CriteriaConfig::default())?;
        let r = refute(&fam.grids, &cert, &cap, 64)?;
        let covered = smallest_comparable(&fam.grids, &r.cube, &cap)?.is_some();
        println!(
            "{name:<14} condition {} pair {:?} scale {:>3}: side {}, covered within 1000: {covered}",
            r.condition, r.spec.pair, r.spec.scale, r.cube.side
        );
    }
    Ok(())
}
