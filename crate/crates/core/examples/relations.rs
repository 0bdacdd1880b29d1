// Defining relations, Jucys-Murphy elements and Θ in A_n.

use periplectic::algebra::relations::{central_jm_dimension, relation_suite};
use periplectic::algebra::{jm, theta, Expression};
use periplectic::field::Rational;

type Q = Rational;

fn main() {
    for n in 2..=4 {
        let report = relation_suite::<Q>(n);
        let failed = report.failures().count();
        println!("n = {n}: {} checks, {failed} failed", report.checks.len());
        assert!(report.all_pass());
    }

    let n = 4;
    let x: Vec<Expression<Q>> = (2..=n).map(|i| jm::<Q>(i, n)).collect();
    for (i, xi) in x.iter().enumerate() {
        for xj in &x[i + 1..] {
            assert!(xi.commutator(xj).is_zero());
        }
    }
    println!("x_2..x_{n} pairwise commute; central span of dimension {}", central_jm_dimension::<Q>(n));

    let t = theta::<Q>(3);
    println!("Θ_3 has {} terms", t.len());
    println!("{}", serde_json::to_string(&jm::<Q>(2, 2)).unwrap());
}
