// Diagrams acting on V^{⊗n} for V = k^{m|m}.

use periplectic::algebra::jm;
use periplectic::diagrams::enumerate;
use periplectic::field::Rational;
use periplectic::schurweyl::{composition_oracle, faithfulness_rank, pi, sigma, sigma_from_basis, xi, PeBasis};

fn main() {
    let m = 2;
    let pe = PeBasis::new(m);
    println!("pe({m}) has dimension {}", pe.len());

    let n = 3;
    assert_eq!(sigma(1, n, m).unwrap(), sigma_from_basis(&pe, 1, n).unwrap());
    for k in 2..=n {
        assert_eq!(xi(&pe, k, n).unwrap(), pi(&jm::<Rational>(k, n), m).unwrap());
    }
    println!("swap and x_k agree with their basis-sum formulas on V^⊗{n}");

    for n in 1..=2 {
        println!("n = {n}: rank of π = {} of {}", faithfulness_rank(n, m).unwrap(), enumerate(n, n).len());
    }

    let (pairs, failures) = composition_oracle(m, 4);
    println!("composition is a functor on {pairs} pairs, {} failures", failures.len());
}
