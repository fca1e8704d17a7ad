//! Common primitive roots and explicit incompatibility witnesses.

use dyadic_atlas::criteria::{base_compatible, incompatibility_witness, WitnessSearch};
use dyadic_atlas::exact::rat;

fn main() -> dyadic_atlas::Result<()> {
    for bases in [&[4u64, 8][..], &[6, 36], &[12, 18], &[2, 3], &[27, 9, 3]] {
        println!("{bases:?} -> {:?}", base_compatible(bases)?);
    }
    for (n1, n2, delta) in [(2, 3, rat(1, 5)), (12, 18, rat(3, 11)), (4, 8, rat(1, 3))] {
        match incompatibility_witness(n1, n2, &delta, &rat(1, 10), 40)? {
            WitnessSearch::Found(w) => println!(
                "({n1}, {n2}) delta {delta}: m = {}, k1 = {}, k2 = {}, distance {} < {}",
                w.m, w.k1, w.k2, w.distance, w.tolerance
            ),
            WitnessSearch::Exhausted { m_max, best } => {
                println!("({n1}, {n2}) delta {delta}: none up to m = {m_max}, best normalized gap {best}")
            }
        }
    }
    Ok(())
}
