//! Tensor powers of `V = k^{m|m}` and the action of diagrams on them.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use crate::diagrams::{canonical_word, BrauerDiagram, Generator, GeneratorKind};

/// Coefficients usable in tensor computations.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Add<Output = Self> + Mul<Output = Self> {}
impl<T: Clone + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>> Coeff for T {}

/// Sparse vector in `V^{⊗w}`, keyed by the base-`2m` encoded multi-index
/// (slot 0 most significant).
pub type TVec<C> = BTreeMap<u64, C>;

/// `V = k^{m|m}` with basis `u_0..u_{m-1}` even, `u_m..u_{2m-1}` odd and
/// odd form `⟨u_i, u_{m+i}⟩ = ⟨u_{m+i}, u_i⟩ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    pub m: usize,
}

impl SuperSpace {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1);
        SuperSpace { m }
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    pub fn parity(&self, a: usize) -> usize {
        usize::from(a >= self.m)
    }

    /// Index of the dual basis vector `u_a^*`, with `⟨u_a, u_a^*⟩ = 1`.
    pub fn dual(&self, a: usize) -> usize {
        if a < self.m {
            a + self.m
        } else {
            a - self.m
        }
    }

    pub fn form(&self, a: usize, b: usize) -> i64 {
        i64::from(self.dual(a) == b)
    }

    pub fn tensor_dim(&self, w: usize) -> u64 {
        (self.dim() as u64).pow(w as u32)
    }

    pub fn digits(&self, mut idx: u64, w: usize) -> Vec<usize> {
        let b = self.dim() as u64;
        let mut d = vec![0; w];
        for slot in (0..w).rev() {
            d[slot] = (idx % b) as usize;
            idx /= b;
        }
        d
    }

    pub fn index(&self, d: &[usize]) -> u64 {
        let b = self.dim() as u64;
        d.iter().fold(0, |acc, &x| acc * b + x as u64)
    }

    fn parity_before(&self, d: &[usize], p: usize) -> usize {
        d[..p].iter().map(|&x| self.parity(x)).sum::<usize>() % 2
    }

    /// `F(g)` applied to a basis tensor of width `g.output_width()`.
    pub fn apply_generator_basis<C: Coeff>(&self, g: &Generator, d: &[usize], c: &C, out: &mut TVec<C>) {
        let p = g.pos;
        match g.kind {
            GeneratorKind::Cross => {
                let mut e = d.to_vec();
                e.swap(p, p + 1);
                let neg = self.parity(d[p]) * self.parity(d[p + 1]) == 1;
                push(out, self.index(&e), if neg { -c.clone() } else { c.clone() });
            }
            GeneratorKind::Cup => {
                if self.form(d[p], d[p + 1]) == 0 {
                    return;
                }
                let mut e = d.to_vec();
                e.drain(p..p + 2);
                let neg = self.parity_before(d, p) == 1;
                push(out, self.index(&e), if neg { -c.clone() } else { c.clone() });
            }
            GeneratorKind::Cap => {
                let before = self.parity_before(d, p);
                for a in 0..self.dim() {
                    let mut e = Vec::with_capacity(d.len() + 2);
                    e.extend_from_slice(&d[..p]);
                    e.push(a);
                    e.push(self.dual(a));
                    e.extend_from_slice(&d[p..]);
                    let neg = (before + self.parity(a)) % 2 == 1;
                    push(out, self.index(&e), if neg { -c.clone() } else { c.clone() });
                }
            }
        }
    }

    pub fn apply_generator<C: Coeff>(&self, g: &Generator, v: &TVec<C>) -> TVec<C> {
        let w = g.output_width();
        let mut out = TVec::new();
        for (&idx, c) in v {
            self.apply_generator_basis(g, &self.digits(idx, w), c, &mut out);
        }
        out
    }

    /// `π(d) v` for `v ∈ V^{⊗ target}`; the result lies in `V^{⊗ source}`.
    pub fn apply_word<C: Coeff>(&self, word: &[Generator], v: &TVec<C>) -> TVec<C> {
        let mut cur = v.clone();
        for g in word.iter().rev() {
            cur = self.apply_generator(g, &cur);
        }
        cur
    }

    pub fn apply_diagram<C: Coeff>(&self, d: &BrauerDiagram, v: &TVec<C>) -> TVec<C> {
        self.apply_word(&canonical_word(d), v)
    }

    /// Matrix of `π(d)` as a map column index -> sparse column.
    pub fn diagram_columns<C: Coeff>(&self, d: &BrauerDiagram) -> Vec<TVec<C>> {
        let word = canonical_word(d);
        (0..self.tensor_dim(d.target()))
            .map(|idx| {
                let mut v = TVec::new();
                v.insert(idx, C::one());
                self.apply_word(&word, &v)
            })
            .collect()
    }
}

pub(crate) fn push<C: Coeff>(out: &mut TVec<C>, idx: u64, c: C) {
    use std::collections::btree_map::Entry;
    match out.entry(idx) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let s = e.get().clone() + c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub(crate) fn scale<C: Coeff>(v: &TVec<C>, c: &C) -> TVec<C> {
    v.iter()
        .filter_map(|(&k, x)| {
            let y = x.clone() * c.clone();
            (!y.is_zero()).then_some((k, y))
        })
        .collect()
}

/// Check `π(d2) π(d1) = π(d1 ∘ d2)` on every basis tensor of `V^{⊗ d1.target()}`.
pub fn composition_agrees(space: &SuperSpace, d1: &BrauerDiagram, d2: &BrauerDiagram) -> bool {
    let w1 = canonical_word(d1);
    let w2 = canonical_word(d2);
    let prod = crate::diagrams::compose(d1, d2).expect("composable");
    let (sign, wd) = match &prod {
        crate::diagrams::Signed::Zero => (0i64, Vec::new()),
        crate::diagrams::Signed::Term { sign, diagram } => (*sign as i64, canonical_word(diagram)),
    };
    for idx in 0..space.tensor_dim(d1.target()) {
        let mut v: TVec<i64> = TVec::new();
        v.insert(idx, 1);
        let lhs = space.apply_word(&w2, &space.apply_word(&w1, &v));
        let rhs = if sign == 0 { TVec::new() } else { scale(&space.apply_word(&wd, &v), &sign) };
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::*;

    #[test]
    fn local_relations_in_tensor_space() {
        let v = SuperSpace::new(2);
        for (a, b) in [(epsilon(1, 2), s(1, 2)), (s(1, 2), epsilon(1, 2)), (epsilon(1, 2), epsilon(1, 2))] {
            assert!(composition_agrees(&v, &a, &b), "{a} ∘ {b}");
        }
    }

    #[test]
    fn small_composition_oracle() {
        let v = SuperSpace::new(2);
        for (i, j, k) in [(2, 2, 2), (0, 2, 2), (2, 2, 0), (1, 3, 1), (0, 4, 0), (4, 2, 0), (3, 3, 1), (0, 4, 2)] {
            for a in enumerate(j, k) {
                for b in enumerate(i, j) {
                    assert!(composition_agrees(&v, &a, &b), "{a} ∘ {b}");
                }
            }
        }
    }
}
