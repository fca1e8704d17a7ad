//! Cubes of a shifted grid at positive and negative generations.

use dyadic_atlas::exact::rat;
use dyadic_atlas::grid::{drop_generations, DigitStream, GridRep};

fn main() -> dyadic_atlas::Result<()> {
    let digits = DigitStream::new(2, vec![], vec![vec![0], vec![1]])?;
    let g = GridRep::new(2, vec![rat(1, 3)], digits, "third")?;
    let x = [rat(1, 10)];
    for m in -4..=3 {
        println!("generation {m:>2}: {}", g.cube_at(m, &x)?);
    }
    for j in 0..6 {
        println!("L({j}) = {:?}", g.location(j));
    }
    // every second generation: a base-4 grid with the same cubes
    let h = drop_generations(&g, 2)?;
    println!(
        "{} has base {}; generation -1 cube {}",
        h.label(),
        h.base(),
        h.cube_at(-1, &x)?
    );
    Ok(())
}
