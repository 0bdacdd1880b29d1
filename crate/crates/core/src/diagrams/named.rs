//! Frequently used diagrams. Positions are 1-based.

use super::{compose, BrauerDiagram, Signed};

struct Builder {
    source: usize,
    target: usize,
    partner: Vec<u8>,
}

impl Builder {
    fn new(source: usize, target: usize) -> Self {
        Builder { source, target, partner: vec![u8::MAX; source + target] }
    }
    fn link(&mut self, a: usize, b: usize) {
        assert!(self.partner[a] == u8::MAX && self.partner[b] == u8::MAX, "dot reused");
        self.partner[a] = b as u8;
        self.partner[b] = a as u8;
    }
    /// bottom `b` to top `t`, 1-based
    fn line(&mut self, b: usize, t: usize) -> &mut Self {
        self.link(b - 1, self.source + t - 1);
        self
    }
    fn cap(&mut self, p: usize, q: usize) -> &mut Self {
        self.link(p - 1, q - 1);
        self
    }
    fn cup(&mut self, p: usize, q: usize) -> &mut Self {
        self.link(self.source + p - 1, self.source + q - 1);
        self
    }
    fn build(&self) -> BrauerDiagram {
        assert!(!self.partner.contains(&u8::MAX), "unmatched dot");
        BrauerDiagram::from_partner(self.source, self.target, self.partner.clone())
    }
}

/// `∪ : 0 -> 2`.
pub fn cup() -> BrauerDiagram {
    Builder::new(0, 2).cup(1, 2).build()
}

/// `∩ : 2 -> 0`.
pub fn cap() -> BrauerDiagram {
    Builder::new(2, 0).cap(1, 2).build()
}

/// The transposition of dots `i < j` in `S_n`.
pub fn transposition(j: usize, i: usize, n: usize) -> BrauerDiagram {
    let (i, j) = (i.min(j), i.max(j));
    let mut w: Vec<usize> = (0..n).collect();
    w.swap(i - 1, j - 1);
    BrauerDiagram::from_permutation(&w)
}

/// Cup and cap both joining dots `i` and `j`, all other lines vertical.
pub fn bar_transposition(j: usize, i: usize, n: usize) -> BrauerDiagram {
    let (i, j) = (i.min(j), i.max(j));
    let mut b = Builder::new(n, n);
    for k in (1..=n).filter(|&k| k != i && k != j) {
        b.line(k, k);
    }
    b.cap(i, j).cup(i, j).build()
}

/// `s_k`, crossing dots `k, k+1`.
pub fn s(k: usize, n: usize) -> BrauerDiagram {
    transposition(k + 1, k, n)
}

/// `ε_k`, cap and cup on dots `k, k+1`.
pub fn epsilon(k: usize, n: usize) -> BrauerDiagram {
    bar_transposition(k + 1, k, n)
}

/// `a_i : i -> n`, lines then cups `(i+1, i+2), ..., (n-1, n)`.
pub fn a_diagram(i: usize, n: usize) -> BrauerDiagram {
    assert!(i <= n && (n - i).is_multiple_of(2));
    let mut b = Builder::new(i, n);
    for k in 1..=i {
        b.line(k, k);
    }
    for k in (i + 1..n).step_by(2) {
        b.cup(k, k + 1);
    }
    b.build()
}

/// `b_i : n -> i`. For `i > 0`: lines `k -> k` for `k < i`, caps
/// `(i, i+1), ..., (n-2, n-1)` and bottom `n` to top `i`. `b_0` is all caps.
pub fn b_diagram(i: usize, n: usize) -> BrauerDiagram {
    assert!(i <= n && (n - i).is_multiple_of(2));
    let mut b = Builder::new(n, i);
    if i == 0 {
        for k in (1..n).step_by(2) {
            b.cap(k, k + 1);
        }
    } else {
        for k in 1..i {
            b.line(k, k);
        }
        for k in (i..n - 1).step_by(2) {
            b.cap(k, k + 1);
        }
        b.line(n, i);
    }
    b.build()
}

/// `c_i^* = a_i b_i` in `A_n`.
pub fn c_star(i: usize, n: usize) -> Signed {
    compose(&a_diagram(i, n), &b_diagram(i, n)).expect("composable")
}

/// The two diagrams whose sum is the generator `x` of the kernel of
/// right multiplication by `c_0^*` on `A_n c_2^*` (even `n >= 4`).
pub fn x_terms(n: usize) -> [BrauerDiagram; 2] {
    assert!(n >= 4 && n.is_multiple_of(2));
    let mut first = Builder::new(n, n);
    first.line(1, 1).line(n, 2);
    let mut second = Builder::new(n, n);
    second.line(1, 3).line(n, 4).cup(1, 2);
    for k in (2..n - 1).step_by(2) {
        first.cap(k, k + 1);
        second.cap(k, k + 1);
    }
    for k in (3..n).step_by(2) {
        first.cup(k, k + 1);
    }
    for k in (5..n).step_by(2) {
        second.cup(k, k + 1);
    }
    [first.build(), second.build()]
}

/// The diagrams `y_1`, `y_2` acting on `x` (even `n >= 6`).
pub fn y_terms(n: usize) -> [BrauerDiagram; 2] {
    assert!(n >= 6 && n.is_multiple_of(2));
    let mut y1 = Builder::new(n, n);
    y1.line(1, 1).line(2, 2).line(3, 5).line(n, 6).cup(3, 4);
    let mut y2 = Builder::new(n, n);
    y2.line(1, 3).line(2, 4).line(3, 5).line(n, 6).cup(1, 2);
    for k in (4..n - 1).step_by(2) {
        y1.cap(k, k + 1);
        y2.cap(k, k + 1);
    }
    for k in (7..n).step_by(2) {
        y1.cup(k, k + 1);
        y2.cup(k, k + 1);
    }
    [y1.build(), y2.build()]
}

/// Cup on top `(1, 2)`, bottom 1 to top 3, cap on bottom `(2, 3)`, other
/// lines vertical. Satisfies `w c_0^* = -c_0^*`.
pub fn w_diagram(n: usize) -> BrauerDiagram {
    assert!(n >= 3);
    let mut b = Builder::new(n, n);
    b.cup(1, 2).line(1, 3).cap(2, 3);
    for k in 4..=n {
        b.line(k, k);
    }
    b.build()
}

/// `n -> n-2`: vertical lines and a cap on the last two bottom dots.
pub fn cap_last(n: usize) -> BrauerDiagram {
    assert!(n >= 2);
    let mut b = Builder::new(n, n - 2);
    for k in 1..n - 1 {
        b.line(k, k);
    }
    b.cap(n - 1, n).build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Dot;

    #[test]
    fn shapes() {
        let b2 = b_diagram(2, 4);
        assert_eq!(b2.caps(), vec![(1, 2)]);
        assert_eq!(b2.propagating(), vec![(0, 0), (3, 1)]);
        assert_eq!(a_diagram(2, 4).cups(), vec![(2, 3)]);
        assert_eq!(b_diagram(0, 4).caps(), vec![(0, 1), (2, 3)]);
        let e = epsilon(2, 3);
        assert_eq!(e.pairs(), vec![(Dot::Bottom(1), Dot::Top(1)), (Dot::Bottom(2), Dot::Bottom(3)), (Dot::Top(2), Dot::Top(3))]);
        let [x1, x2] = x_terms(4);
        assert_eq!(x1.num_propagating(), 2);
        assert_eq!(x2.cups(), vec![(0, 1)]);
    }
}
