//! Randomized invariants.

use periplectic::algebra::Expression;
use periplectic::diagrams::{canonical_word, compose, compose_with, enumerate, evaluate_word, flip, BrauerDiagram, CancelStrategy, Signed};
use periplectic::field::{Field, Rational};
use periplectic::partitions::{partitions_of, staircase};
use periplectic::schurweyl::{pi, SuperOperator, SuperSpace};
use proptest::prelude::*;

type Q = Rational;

fn pick(i: usize, j: usize, k: usize) -> BrauerDiagram {
    let all = enumerate(i, j);
    all[k % all.len()].clone()
}

/// Widths `(a, b, c, d)` of equal parity, each at most 4.
fn widths() -> impl Strategy<Value = [usize; 4]> {
    (0usize..2, prop::array::uniform4(0usize..3)).prop_map(|(par, w)| w.map(|x| 2 * x + par))
}

fn then(a: &Signed, b: &Signed) -> Signed {
    a.clone().then_under(b.clone()).unwrap()
}

fn term(d: &BrauerDiagram) -> Signed {
    Signed::Term { sign: 1, diagram: d.clone() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn composition_is_associative(w in widths(), k in prop::array::uniform3(0usize..10_000)) {
        let [a, b, c, d] = w;
        let (x, y, z) = (pick(c, d, k[0]), pick(b, c, k[1]), pick(a, b, k[2]));
        let left = then(&compose(&x, &y).unwrap(), &term(&z));
        let right = then(&term(&x), &compose(&y, &z).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cancellation_order_is_irrelevant(w in widths(), k in prop::array::uniform2(0usize..10_000), seed in any::<u64>()) {
        let [a, b, c, _] = w;
        let (x, y) = (pick(b, c, k[0]), pick(a, b, k[1]));
        let start = compose_with(&x, &y, CancelStrategy::FromStart).unwrap();
        prop_assert_eq!(&start, &compose_with(&x, &y, CancelStrategy::FromEnd).unwrap());
        prop_assert_eq!(&start, &compose_with(&x, &y, CancelStrategy::Seeded(seed)).unwrap());
    }

    #[test]
    fn canonical_word_evaluates_to_diagram(w in widths(), k in 0usize..10_000) {
        let d = pick(w[0], w[1], k);
        prop_assert_eq!(evaluate_word(d.source(), &canonical_word(&d)).unwrap(), term(&d));
    }

    #[test]
    fn flip_reverses_composition(w in widths(), k in prop::array::uniform2(0usize..10_000)) {
        let [a, b, c, _] = w;
        let (x, y) = (pick(b, c, k[0]), pick(a, b, k[1]));
        let lhs = match compose(&x, &y).unwrap() {
            Signed::Zero => Signed::Zero,
            Signed::Term { sign, diagram } => if sign < 0 { flip(&diagram).negate() } else { flip(&diagram) },
        };
        prop_assert_eq!(lhs, then(&flip(&y), &flip(&x)));
    }

    #[test]
    fn algebra_product_is_associative(n in 1usize..4, terms in prop::collection::vec((0usize..1000, -3i64..4), 1..5)) {
        let all = enumerate(n, n);
        let mut e = [Expression::<Q>::zero(n, n), Expression::zero(n, n), Expression::zero(n, n)];
        for (k, &(idx, c)) in terms.iter().enumerate() {
            e[k % 3].add_term(&all[idx % all.len()], Q::from_i64(c));
        }
        prop_assert_eq!(e[0].mul(&e[1]).mul(&e[2]), e[0].mul(&e[1].mul(&e[2])));
        prop_assert_eq!(e[0].mul(&e[1].add(&e[2])), e[0].mul(&e[1]).add(&e[0].mul(&e[2])));
    }

    #[test]
    fn representation_is_contravariant(n in 1usize..4, k in prop::array::uniform2(0usize..1000)) {
        let all = enumerate(n, n);
        let (a, b) = (&all[k[0] % all.len()], &all[k[1] % all.len()]);
        let space = SuperSpace::new(2);
        let product = pi(&Expression::<Q>::diagram(a).mul(&Expression::diagram(b)), 2).unwrap();
        let composite = SuperOperator::diagram(space, b).unwrap().compose(&SuperOperator::diagram(space, a).unwrap());
        prop_assert_eq!(product, composite);
    }

    #[test]
    fn partition_invariants(size in 0usize..12, k in 0usize..10_000) {
        let all = partitions_of(size);
        let lam = &all[k % all.len()];
        prop_assert_eq!(&lam.transpose().transpose(), lam);
        let core = lam.two_core();
        prop_assert_eq!((lam.size() - core.size()) % 2, 0);
        prop_assert!((0..6).any(|r| staircase(r) == core));
        prop_assert_eq!(lam.gamma(), core.gamma());
        prop_assert_eq!(core.two_core(), core);
    }
}
