//! A planar family against its one-dimensional projections.

use dyadic_atlas::criteria::{check_adjacency, project, CriteriaConfig};
use dyadic_atlas::io::load_family;

fn main() -> dyadic_atlas::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    for name in ["plane-thirds", "plane-collision"] {
        let fam = load_family(dir.join(format!("{name}.json")))?;
        let whole = check_adjacency(&fam.grids, &CriteriaConfig::default())?;
        println!("{name}: {:?}", whole.overall);
        for s in 0..fam.dimension {
            let lines = project(&fam.grids, s)?;
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    let pair = [lines[i].clone(), lines[j].clone()];
                    let v = check_adjacency(&pair, &CriteriaConfig::default())?;
                    println!(
                        "  coordinate {} grids {}-{}: {:?}",
                        s + 1,
                        i + 1,
                        j + 1,
                        v.overall
                    );
                }
            }
        }
    }
    Ok(())
}
