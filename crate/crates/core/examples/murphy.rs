// Bratteli paths and the Murphy basis, on which x_l acts triangularly.

use periplectic::cells::murphy::MurphyTower;
use periplectic::cells::{bratteli_row, content_vector, jm_triangularity_check};
use periplectic::field::Rational;
use periplectic::partitions::Partition;

fn main() {
    for k in 0..=4 {
        let row: Vec<String> = bratteli_row(k).iter().map(|p| p.to_string()).collect();
        println!("row {k}: {}", row.join(" "));
    }

    let mut tower = MurphyTower::<Rational>::new();
    let (n, shape) = (3, Partition::of(&[1]));
    let basis = tower.basis(n, &shape).unwrap().clone();
    for (k, t) in basis.paths.iter().enumerate() {
        let v: Vec<String> = (0..basis.vectors.rows()).map(|r| basis.vectors[(r, k)].to_string()).collect();
        println!("v_{t}  contents {:?}  = ({})", content_vector(t), v.join(", "));
    }
    for n in 1..=4 {
        for lam in periplectic::partitions::cell_labels(n) {
            let r = jm_triangularity_check(&mut tower, n, &lam).unwrap();
            assert!(r.holds(), "{lam}");
        }
    }
    println!("x_l is triangular on every Murphy basis for n ≤ 4");
}
