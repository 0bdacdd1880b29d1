// Cell modules, their Gram pairing, and simple dimensions.

use periplectic::cells::{cell_summaries, CellModule};
use periplectic::field::{Fp, Rational};
use periplectic::partitions::Partition;

fn main() {
    for n in 1..=5 {
        println!("n = {n}");
        for c in cell_summaries::<Rational>(n).unwrap() {
            println!("  W{}: dim {:3}  dim L {:3}", c.shape, c.dim, c.gram_rank);
        }
    }

    // The same Gram rank over a prime field.
    let shape = Partition::of(&[2]);
    let q = CellModule::<Rational>::new(4, &shape).unwrap().gram().rank();
    let p = CellModule::<Fp<101>>::new(4, &shape).unwrap().gram().rank();
    println!("rank of the Gram matrix of W_4(2): {q} over Q, {p} over F_101");
}
