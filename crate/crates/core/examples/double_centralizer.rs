// Endomorphisms of the sum of induced trivial modules against the cover dimension.

use periplectic::field::Fp;
use periplectic::repthy::double_centralizer_check;

fn main() {
    for n in 2..=4 {
        let r = double_centralizer_check::<Fp<101>>(n);
        println!("n = {n}: dim X = {}, dim End(X) = {}, dim C_n = {}, equal: {}", r.module_dim, r.end_dim, r.cover_dim, r.equal());
    }
}
