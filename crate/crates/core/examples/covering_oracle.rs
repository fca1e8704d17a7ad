//! Direct covering queries and a sampled comparability constant.

use dyadic_atlas::covering::{estimate_constant, smallest_comparable};
use dyadic_atlas::exact::rat;
use dyadic_atlas::grid::Cube;
use dyadic_atlas::io::load_family;

fn main() -> dyadic_atlas::Result<()> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog/third-shift.json");
    let fam = load_family(path)?;

    // straddles 0, a boundary of every standard generation, and 1/3
    let q = Cube::open(vec![rat(-1, 100)], rat(1, 3) + rat(1, 50))?;
    if let Some(r) = smallest_comparable(&fam.grids, &q, &rat(100, 1))? {
        println!(
            "{q} lies in {} of grid {} (ratio {})",
            r.cube,
            r.grid_index + 1,
            r.ratio
        );
    }

    let report = estimate_constant(&fam.grids, -6..=6, 100, 0, &rat(12, 1))?;
    for s in &report.scales {
        println!(
            "scale {:>3}: max ratio {}",
            s.scale,
            s.max_ratio
                .as_ref()
                .map(|x| x.to_string())
                .unwrap_or_default()
        );
    }
    println!(
        "overall {:?}, {} failures",
        report.max_ratio.map(|x| x.to_string()),
        report.failure_count
    );
    Ok(())
}
