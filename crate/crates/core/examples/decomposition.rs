// Decomposition numbers, Cartan matrix and blocks, checked against a quiver.

use periplectic::field::Rational;
use periplectic::repthy::{cartan_matrix, quiver_cartan_oracle, summary, QuiverPresentation};

fn main() {
    let n = 4;
    let s = summary::<Rational>(n, 0).unwrap();
    let d = &s.decomposition;
    for lam in &d.rows {
        let f: Vec<String> = d.factors(lam).iter().map(|(mu, k)| if *k == 1 { format!("L{mu}") } else { format!("{k}·L{mu}") }).collect();
        println!("[W{lam}] = {}", if f.is_empty() { "0".into() } else { f.join(" + ") });
    }

    println!("blocks: {:?}", s.blocks.classes);

    let quiver = quiver_cartan_oracle(&QuiverPresentation::a4()).unwrap();
    let cartan = cartan_matrix(d).reorder(&quiver.labels).unwrap();
    assert_eq!(cartan, quiver);
    println!("Cartan matrix (total {}) matches the quiver with relations", cartan.total());
}
