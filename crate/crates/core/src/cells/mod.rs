//! Cell modules `W_n(λ)`, their Gram pairing and simple quotients.

pub mod bratteli;
pub mod murphy;

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{self, Expression};
use crate::diagrams::{self, compose, BrauerDiagram, Signed};
use crate::error::Error;
use crate::field::Field;
use crate::linalg::{extend_to_basis, Matrix};
use crate::partitions::{j_set, Partition};
use crate::specht::{SpechtModule, StandardTableau};

pub use bratteli::{bratteli_dot, bratteli_edges, bratteli_row, content_vector, path_dominates, paths, BratteliPath};
pub use murphy::{jm_triangularity_check, murphy_basis, restriction_check, MurphyBasis, TriangularityReport};

/// Cap-free diagrams `i -> n` with non-crossing propagating lines.
pub fn half_diagrams(i: usize, n: usize) -> Vec<BrauerDiagram> {
    if i > n || (n - i) % 2 == 1 {
        return Vec::new();
    }
    diagrams::enumerate(i, n).into_iter().filter(BrauerDiagram::is_cup_half).collect()
}

/// `W_n(λ)`: basis `h ⊗ v_T` with `h` a half-diagram `|λ| -> n` and `T` a
/// standard tableau of shape `λ`; index `h * f^λ + T`.
#[derive(Clone, Debug)]
pub struct CellModule<F: Field> {
    n: usize,
    shape: Partition,
    specht: SpechtModule<F>,
    halves: Vec<BrauerDiagram>,
    half_index: HashMap<BrauerDiagram, usize>,
}

impl<F: Field> CellModule<F> {
    pub fn new(n: usize, shape: &Partition) -> Result<Self, Error> {
        let i = shape.size();
        if i > n || (n - i) % 2 == 1 {
            return Err(Error::Invalid(format!("{shape} is not a cell label for n = {n}")));
        }
        let p = F::characteristic();
        if p != 0 && p as usize <= n {
            return Err(Error::CharacteristicTooSmall { p, n });
        }
        let specht = SpechtModule::new(shape)?;
        let halves = half_diagrams(i, n);
        let half_index = halves.iter().cloned().enumerate().map(|(k, h)| (h, k)).collect();
        Ok(CellModule { n, shape: shape.clone(), specht, halves, half_index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn specht(&self) -> &SpechtModule<F> {
        &self.specht
    }

    pub fn halves(&self) -> &[BrauerDiagram] {
        &self.halves
    }

    pub fn half_index(&self, h: &BrauerDiagram) -> Option<usize> {
        self.half_index.get(h).copied()
    }

    pub fn dim(&self) -> usize {
        self.halves.len() * self.specht.dim()
    }

    pub fn index(&self, half: usize, tableau: usize) -> usize {
        half * self.specht.dim() + tableau
    }

    pub fn label(&self, idx: usize) -> (&BrauerDiagram, &StandardTableau) {
        let f = self.specht.dim();
        (&self.halves[idx / f], &self.specht.tableaux()[idx % f])
    }

    /// `s·(h ⊗ v)` for the signed diagram `s = ±h'∘w`, added into `out`.
    fn push_factored(&self, s: Signed, v: &[F], scale: &F, out: &mut [F]) {
        let Signed::Term { sign, diagram } = s else { return };
        if diagram.num_caps() > 0 {
            return;
        }
        let (h, w) = diagram.split_cup_half().expect("cap-free");
        let base = self.index(self.half_index[&h], 0);
        let wv = self.specht.act(&w, v);
        let c = if sign < 0 { -scale.clone() } else { scale.clone() };
        for (t, x) in wv.into_iter().enumerate() {
            if !x.is_zero() {
                out[base + t] += c.clone() * x;
            }
        }
    }

    /// Image of an arbitrary element of `Hom(i, n)` (`i = |λ|`) applied to
    /// `v ∈ W^0(λ)`, as a vector of `W_n(λ)`.
    pub fn embed(&self, e: &Expression<F>, v: &[F]) -> Vec<F> {
        assert_eq!((e.source(), e.target()), (self.shape.size(), self.n));
        let mut out = vec![F::zero(); self.dim()];
        for (d, c) in e.terms() {
            self.push_factored(Signed::Term { sign: 1, diagram: d.clone() }, v, c, &mut out);
        }
        out
    }

    /// Column of `a` acting on basis vector `idx`.
    pub fn act_on_basis(&self, a: &BrauerDiagram, idx: usize, out: &mut [F], scale: &F) {
        let f = self.specht.dim();
        let (h, t) = (idx / f, idx % f);
        let mut v = vec![F::zero(); f];
        v[t] = F::one();
        let s = compose(a, &self.halves[h]).expect("composable");
        self.push_factored(s, &v, scale, out);
    }

    pub fn diagram_matrix(&self, a: &BrauerDiagram) -> Matrix<F> {
        assert_eq!((a.source(), a.target()), (self.n, self.n));
        let cols: Vec<Vec<F>> = (0..self.dim())
            .map(|idx| {
                let mut col = vec![F::zero(); self.dim()];
                self.act_on_basis(a, idx, &mut col, &F::one());
                col
            })
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn expression_matrix(&self, e: &Expression<F>) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim())
            .map(|idx| {
                let mut col = vec![F::zero(); self.dim()];
                for (d, c) in e.terms() {
                    self.act_on_basis(d, idx, &mut col, c);
                }
                col
            })
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrices of `s_1..s_{n-1}, ε_1..ε_{n-1}`.
    pub fn generator_matrices(&self) -> Vec<Matrix<F>> {
        algebra::generators(self.n).iter().map(|g| self.diagram_matrix(g)).collect()
    }

    /// Pairing `⟨h'⊗v', h⊗v⟩ = ±⟨w v, v'⟩` for `mirror(h') ∘ h = ±w`,
    /// zero when fewer than `|λ|` lines propagate.
    pub fn gram(&self) -> Matrix<F> {
        let f = self.specht.dim();
        let form = self.specht.form();
        let mut g = Matrix::zeros(self.dim(), self.dim());
        for (a, ha) in self.halves.iter().enumerate() {
            let top = ha.mirror();
            for (b, hb) in self.halves.iter().enumerate() {
                let Signed::Term { sign, diagram } = compose(&top, hb).expect("composable") else { continue };
                let Some(w) = diagram.as_permutation() else { continue };
                let block = form.mul(&self.specht.permutation(&w));
                let block = if sign < 0 { block.scale(&-F::one()) } else { block };
                for r in 0..f {
                    for c in 0..f {
                        g[(a * f + r, b * f + c)] = block[(r, c)].clone();
                    }
                }
            }
        }
        g
    }

    /// Basis of the radical of the Gram pairing.
    pub fn radical(&self) -> Vec<Vec<F>> {
        self.gram().kernel()
    }

    pub fn simple(&self) -> SimpleModule<F> {
        SimpleModule::new(self)
    }
}

/// `L_n(λ) = W_n(λ) / rad`, with coordinates taken on a fixed complement.
#[derive(Clone, Debug)]
pub struct SimpleModule<F: Field> {
    n: usize,
    shape: Partition,
    rad_dim: usize,
    basis: Matrix<F>,
    basis_inv: Matrix<F>,
    gens: Vec<Matrix<F>>,
}

impl<F: Field> SimpleModule<F> {
    fn new(cell: &CellModule<F>) -> Self {
        let rad = cell.radical();
        let basis = extend_to_basis(cell.dim(), &rad);
        let basis_inv = basis.inverse().expect("basis");
        let mut s = SimpleModule { n: cell.n, shape: cell.shape.clone(), rad_dim: rad.len(), basis, basis_inv, gens: Vec::new() };
        s.gens = cell.generator_matrices().iter().map(|m| s.quotient(m)).collect();
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.rows() - self.rad_dim
    }

    /// Action induced on the quotient by a matrix on `W_n(λ)`.
    pub fn quotient(&self, m: &Matrix<F>) -> Matrix<F> {
        let full = self.basis_inv.mul(m).mul(&self.basis);
        let keep: Vec<usize> = (self.rad_dim..full.rows()).collect();
        full.select_rows(&keep).select_columns(&keep)
    }

    /// True if `m` maps the radical into itself.
    pub fn preserves_radical(&self, m: &Matrix<F>) -> bool {
        let full = self.basis_inv.mul(m).mul(&self.basis);
        (self.rad_dim..full.rows()).all(|r| (0..self.rad_dim).all(|c| full[(r, c)].is_zero()))
    }

    /// Matrices of `s_1..s_{n-1}, ε_1..ε_{n-1}` on the quotient.
    pub fn generators(&self) -> &[Matrix<F>] {
        &self.gens
    }
}

/// Dimension of `L_n(λ)`: rank of the Gram pairing.
pub fn simple_dimension<F: Field>(n: usize, shape: &Partition) -> Result<usize, Error> {
    Ok(CellModule::<F>::new(n, shape)?.gram().rank())
}

/// Labels of the cell modules of `A_n`.
pub fn cell_labels(n: usize) -> Vec<Partition> {
    crate::partitions::cell_labels(n)
}

#[derive(Clone, Debug, Serialize)]
pub struct CellSummary {
    pub shape: Partition,
    pub dim: usize,
    pub gram_rank: usize,
    pub paths: usize,
}

/// Dimensions and Gram ranks of every cell module of `A_n`.
pub fn cell_summaries<F: Field>(n: usize) -> Result<Vec<CellSummary>, Error> {
    let mut out = Vec::new();
    for i in j_set(n) {
        for shape in crate::partitions::partitions_of(i) {
            let m = CellModule::<F>::new(n, &shape)?;
            out.push(CellSummary { dim: m.dim(), gram_rank: m.gram().rank(), paths: paths(n, &shape).len(), shape });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::relations::identity_checks;
    use crate::field::Rational;
    use crate::partitions::num_standard_tableaux;

    type Q = Rational;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn dimensions() {
        for n in 1..=6 {
            for lam in cell_labels(n) {
                let m = CellModule::<Q>::new(n, &lam).unwrap();
                let i = lam.size() as u64;
                let expect = binom(n as u64, i) * diagrams::double_factorial_count(n - i as usize) * num_standard_tableaux(&lam);
                assert_eq!(m.dim() as u64, expect, "n={n} {lam}");
            }
        }
        assert_eq!(CellModule::<Q>::new(5, &Partition::of(&[1])).unwrap().dim(), 15);
        assert_eq!(CellModule::<Q>::new(4, &Partition::of(&[2])).unwrap().dim(), 6);
        assert_eq!(CellModule::<Q>::new(4, &Partition::empty()).unwrap().dim(), 3);
    }

    /// Products of generators act as products of matrices.
    #[test]
    fn action_is_a_representation() {
        for n in 2..=4 {
            let gens = algebra::generators(n);
            for lam in cell_labels(n) {
                let m = CellModule::<Q>::new(n, &lam).unwrap();
                let mats: Vec<_> = gens.iter().map(|g| m.diagram_matrix(g)).collect();
                for (a, ma) in gens.iter().zip(&mats) {
                    for (b, mb) in gens.iter().zip(&mats) {
                        let ab = Expression::<Q>::from_signed(&compose(a, b).unwrap(), n, n);
                        assert_eq!(m.expression_matrix(&ab), ma.mul(mb), "n={n} {lam} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn jm_relations_hold_on_cells() {
        // the identity checks compare expressions; here the same expressions act on modules
        for n in 2..=4 {
            assert!(identity_checks::<Q>(n).all_pass());
            let x = |i| algebra::jm::<Q>(i, n);
            for lam in cell_labels(n) {
                let m = CellModule::<Q>::new(n, &lam).unwrap();
                for i in 1..=n {
                    for j in i + 1..=n {
                        let (a, b) = (m.expression_matrix(&x(i)), m.expression_matrix(&x(j)));
                        assert_eq!(a.mul(&b), b.mul(&a));
                    }
                }
            }
        }
    }

    #[test]
    fn gram_examples() {
        let w = CellModule::<Q>::new(2, &Partition::empty()).unwrap();
        assert!(w.gram().is_zero());
        assert_eq!(simple_dimension::<Q>(4, &Partition::of(&[2])).unwrap(), 3);
        for n in 1..=5 {
            for lam in crate::partitions::partitions_of(n) {
                let m = CellModule::<Q>::new(n, &lam).unwrap();
                assert_eq!(m.gram().rank() as u64, num_standard_tableaux(&lam));
            }
        }
    }

    #[test]
    fn radical_is_a_submodule() {
        for n in 1..=5 {
            for lam in cell_labels(n) {
                let m = CellModule::<Q>::new(n, &lam).unwrap();
                let l = m.simple();
                for g in m.generator_matrices() {
                    assert!(l.preserves_radical(&g), "n={n} {lam}");
                }
                assert_eq!(l.dim() > 0, !lam.is_empty(), "n={n} {lam}");
            }
        }
    }
}
