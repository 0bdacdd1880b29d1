// Signed composition of diagrams: loops vanish, cup/cap sliding picks up signs.

use periplectic::diagrams::{cap, compose, cup, enumerate, epsilon, s, BrauerDiagram, Signed};

fn show(label: &str, r: &Signed) {
    match r {
        Signed::Zero => println!("{label} = 0"),
        Signed::Term { sign, diagram } => println!("{label} = {}{diagram}", if *sign < 0 { "-" } else { "" }),
    }
}

fn main() {
    for n in 0..=4 {
        println!("|Hom({n},{n})| = {}", enumerate(n, n).len());
    }

    // A closed loop.
    show("cap ∘ cup", &compose(&cap(), &cup()).unwrap());

    let n = 3;
    let (e1, e2, s1) = (epsilon(1, n), epsilon(2, n), s(1, n));
    show("ε1 ε1", &compose(&e1, &e1).unwrap());
    show("ε1 ε2 ε1", &compose(&e1, &compose(&e2, &e1).unwrap().diagram().unwrap().clone()).unwrap());
    show("s1 ε1", &compose(&s1, &e1).unwrap());
    show("ε1 s1", &compose(&e1, &s1).unwrap());

    let id = BrauerDiagram::identity(1);
    let zigzag = compose(&cap().tensor(&id), &id.tensor(&cup())).unwrap();
    show("(cap ⊗ 1)(1 ⊗ cup)", &zigzag);
}
