//! Scale matching, two-scale lattices and n-adic expansions.

use dyadic_atlas::exact::{adic_digits, adic_value, dist_to_lattice, lattice_mesh, phi, rat};

fn main() -> dyadic_atlas::Result<()> {
    // generation j of a base-3 grid against base 2: 2^phi <= 3^j < 2^(phi+1)
    for j in [1, 2, 3, 10, 100] {
        println!("phi(3 -> 2, {j}) = {}", phi(3, 2, j)?);
    }

    // distance from 1/5 to {k1/2^4 + k2/3^2} = (1/144)Z
    let mesh = lattice_mesh(2, 4, 3, 2)?;
    println!(
        "mesh {mesh}, dist(1/5) = {}",
        dist_to_lattice(&rat(1, 5), &mesh)?
    );

    // 2-adic expansion of -1/3 is 1,0,1,0,...
    let (pre, per) = adic_digits(2, &rat(-1, 3))?;
    println!("-1/3 in base 2: preperiod {pre:?}, period {per:?}");
    println!("value of 0,1 repeating: {}", adic_value(2, &[], &[0, 1])?);
    Ok(())
}
