//! Operators on `V^{⊗n}`: the `𝔭𝔢(m)` basis, its Killing duals, and the
//! basis-sum formulas for the images of `s_k`, `ε_k` and `x_k`.

use rayon::prelude::*;

use super::tensor::{push, SuperSpace, TVec};
use crate::algebra::Expression;
use crate::diagrams::{self, BrauerDiagram};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::linalg::{sparse_rank, Matrix};

type Q = Rational;

/// Largest `(2m)^n` accepted when building dense-by-column operators.
pub const TENSOR_BUDGET: u64 = 1 << 12;

/// A homogeneous element of `𝔤𝔩(m|m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlElement {
    pub matrix: Matrix<Q>,
    pub parity: usize,
}

impl GlElement {
    fn mul(&self, other: &GlElement) -> GlElement {
        GlElement { matrix: self.matrix.mul(&other.matrix), parity: (self.parity + other.parity) % 2 }
    }

    pub fn supertrace(&self, v: &SuperSpace) -> Q {
        (0..v.dim()).fold(Q::zero(), |acc, i| {
            let x = self.matrix[(i, i)].clone();
            if v.parity(i) == 0 {
                acc + x
            } else {
                acc - x
            }
        })
    }
}

/// Homogeneous solutions of `⟨Xv, w⟩ = ∓(-1)^{|v||X|} ⟨v, Xw⟩`: `sign = 1`
/// gives `𝔭𝔢(m)`, `sign = -1` the complementary eigenspace.
fn form_eigenspace(v: &SuperSpace, sign: i64) -> Vec<GlElement> {
    let d = v.dim();
    let mut out = Vec::new();
    for parity in 0..2 {
        let vars: Vec<(usize, usize)> =
            (0..d).flat_map(|r| (0..d).map(move |c| (r, c))).filter(|&(r, c)| (v.parity(r) + v.parity(c)) % 2 == parity).collect();
        let var = |r: usize, c: usize| vars.iter().position(|&x| x == (r, c));
        let mut rows = Vec::new();
        for c in 0..d {
            for e in 0..d {
                // ⟨X u_c, u_e⟩ = X[e*][c], ⟨u_c, X u_e⟩ = X[c*][e]
                let mut row = vec![Q::zero(); vars.len()];
                let s = if (v.parity(c) * parity) % 2 == 1 { -sign } else { sign };
                if let Some(i) = var(v.dual(e), c) {
                    row[i] += Q::one();
                }
                if let Some(i) = var(v.dual(c), e) {
                    row[i] += Q::from_i64(s);
                }
                rows.push(row);
            }
        }
        for k in Matrix::from_rows(&rows).kernel() {
            let mut m = Matrix::zeros(d, d);
            for (i, &(r, c)) in vars.iter().enumerate() {
                m[(r, c)] = k[i].clone();
            }
            out.push(GlElement { matrix: m, parity });
        }
    }
    out
}

/// A basis `{X_a}` of `𝔭𝔢(m)` with Killing duals `X_a^†` in the
/// complementary eigenspace: `STr(X_a X_b^†) = δ_ab`.
#[derive(Clone, Debug)]
pub struct PeBasis {
    pub space: SuperSpace,
    pub elements: Vec<GlElement>,
    pub duals: Vec<GlElement>,
}

impl PeBasis {
    pub fn new(m: usize) -> Self {
        let space = SuperSpace::new(m);
        let elements = form_eigenspace(&space, 1);
        let others = form_eigenspace(&space, -1);
        let g = Matrix::from_fn(elements.len(), others.len(), |a, b| elements[a].mul(&others[b]).supertrace(&space));
        let ginv = g.inverse().expect("Killing form pairs the two eigenspaces");
        let duals = (0..elements.len())
            .map(|a| {
                let parity = elements[a].parity;
                let mut m = Matrix::zeros(space.dim(), space.dim());
                for (b, y) in others.iter().enumerate() {
                    let c = ginv[(b, a)].clone();
                    if !c.is_zero() {
                        debug_assert_eq!(y.parity, parity);
                        m = m.add(&y.matrix.scale(&c));
                    }
                }
                GlElement { matrix: m, parity }
            })
            .collect();
        PeBasis { space, elements, duals }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A linear operator on `V^{⊗w}`, stored by sparse columns.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperOperator {
    pub space: SuperSpace,
    pub width: usize,
    columns: Vec<TVec<Q>>,
}

impl SuperOperator {
    fn check(space: &SuperSpace, width: usize) -> Result<()> {
        if space.tensor_dim(width) > TENSOR_BUDGET {
            return Err(Error::Budget(format!("(2m)^n = {} exceeds {TENSOR_BUDGET}", space.tensor_dim(width))));
        }
        Ok(())
    }

    pub fn zero(space: SuperSpace, width: usize) -> Result<Self> {
        Self::check(&space, width)?;
        Ok(SuperOperator { space, width, columns: vec![TVec::new(); space.tensor_dim(width) as usize] })
    }

    pub fn identity(space: SuperSpace, width: usize) -> Result<Self> {
        let mut z = Self::zero(space, width)?;
        for (i, c) in z.columns.iter_mut().enumerate() {
            c.insert(i as u64, Q::one());
        }
        Ok(z)
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn apply(&self, v: &TVec<Q>) -> TVec<Q> {
        let mut out = TVec::new();
        for (&i, c) in v {
            for (&r, x) in &self.columns[i as usize] {
                push(&mut out, r, x.clone() * c.clone());
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperOperator) -> SuperOperator {
        assert_eq!(self.width, other.width);
        let columns = other.columns.par_iter().map(|c| self.apply(c)).collect();
        SuperOperator { space: self.space, width: self.width, columns }
    }

    pub fn add(&self, other: &SuperOperator) -> SuperOperator {
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut s = a.clone();
                for (&k, x) in b {
                    push(&mut s, k, x.clone());
                }
                s
            })
            .collect();
        SuperOperator { space: self.space, width: self.width, columns }
    }

    pub fn scale(&self, c: &Q) -> SuperOperator {
        let columns = self.columns.iter().map(|col| super::tensor::scale(col, c)).collect();
        SuperOperator { space: self.space, width: self.width, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(TVec::is_empty)
    }

    /// Entries as a sparse vector of length `dim²`, column-major.
    pub fn flatten(&self) -> Vec<(usize, Q)> {
        let d = self.dim();
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(&r, x)| (c * d + r as usize, x.clone()))).collect()
    }

    /// `Id^{⊗l} ⊗ X ⊗ Id`, with the Koszul sign `(-1)^{|X|(|v_1|+…+|v_l|)}`.
    pub fn slot(space: SuperSpace, width: usize, l: usize, x: &GlElement) -> Result<Self> {
        let mut op = Self::zero(space, width)?;
        for (idx, col) in op.columns.iter_mut().enumerate() {
            let mut d = space.digits(idx as u64, width);
            let before: usize = d[..l].iter().map(|&a| space.parity(a)).sum();
            let neg = (before * x.parity) % 2 == 1;
            let a = d[l];
            for r in 0..space.dim() {
                let e = x.matrix[(r, a)].clone();
                if e.is_zero() {
                    continue;
                }
                d[l] = r;
                push(col, space.index(&d), if neg { -e } else { e });
            }
        }
        Ok(op)
    }

    /// `π(d)` for a diagram `d: w -> w`, through the generator images.
    pub fn diagram(space: SuperSpace, d: &BrauerDiagram) -> Result<Self> {
        assert_eq!(d.source(), d.target());
        Self::check(&space, d.source())?;
        Ok(SuperOperator { space, width: d.source(), columns: space.diagram_columns(d) })
    }
}

/// `π(e) = Σ c_d π(d)`.
pub fn pi<F: Field>(e: &Expression<F>, m: usize) -> Result<SuperOperator> {
    let space = SuperSpace::new(m);
    let n = e.source();
    let mut out = SuperOperator::zero(space, n)?;
    for (d, c) in e.terms() {
        let c = c.to_i64().map(Q::from_i64).ok_or_else(|| Error::Invalid("π needs integer coefficients".into()))?;
        out = out.add(&SuperOperator::diagram(space, d)?.scale(&c));
    }
    Ok(out)
}

fn check_k(k: usize, n: usize, lo: usize, hi: usize) -> Result<()> {
    if k < lo || k > hi || n == 0 {
        return Err(Error::Invalid(format!("index {k} out of range for n = {n}")));
    }
    Ok(())
}

/// `σ_k`: the signed swap at slots `k, k+1` (1-based), `π(s_k)`.
pub fn sigma(k: usize, n: usize, m: usize) -> Result<SuperOperator> {
    check_k(k, n, 1, n.saturating_sub(1))?;
    SuperOperator::diagram(SuperSpace::new(m), &diagrams::s(k, n))
}

/// `π(ε_k)`: contraction with the form followed by insertion of `T`.
pub fn c_op(k: usize, n: usize, m: usize) -> Result<SuperOperator> {
    check_k(k, n, 1, n.saturating_sub(1))?;
    SuperOperator::diagram(SuperSpace::new(m), &diagrams::epsilon(k, n))
}

fn pair(space: SuperSpace, n: usize, k: usize, x: &GlElement, y: &GlElement) -> Result<SuperOperator> {
    Ok(SuperOperator::slot(space, n, k - 1, x)?.compose(&SuperOperator::slot(space, n, k, y)?))
}

fn sign_of(p: usize) -> Q {
    if p % 2 == 1 {
        -Q::one()
    } else {
        Q::one()
    }
}

/// `Σ_i X_i^† ⊗ X_i` over the basis `{X_a} ∪ {X_a^†}` of `𝔤𝔩(m|m)`.
pub fn sigma_from_basis(pe: &PeBasis, k: usize, n: usize) -> Result<SuperOperator> {
    check_k(k, n, 1, n.saturating_sub(1))?;
    let mut out = SuperOperator::zero(pe.space, n)?;
    for (x, xd) in pe.elements.iter().zip(&pe.duals) {
        // (X_a)^† = X_a^†, (X_a^†)^† = (-1)^{|X_a|} X_a
        out = out.add(&pair(pe.space, n, k, xd, x)?);
        out = out.add(&pair(pe.space, n, k, x, xd)?.scale(&sign_of(x.parity)));
    }
    Ok(out)
}

/// `Σ_a ((-1)^{|X_a|} X_a ⊗ X_a^† - X_a^† ⊗ X_a)` at slots `k, k+1`, the sum
/// running over the whole `𝔭𝔢(m)` basis.
pub fn c_from_basis(pe: &PeBasis, k: usize, n: usize) -> Result<SuperOperator> {
    check_k(k, n, 1, n.saturating_sub(1))?;
    let mut out = SuperOperator::zero(pe.space, n)?;
    for (x, xd) in pe.elements.iter().zip(&pe.duals) {
        out = out.add(&pair(pe.space, n, k, x, xd)?.scale(&sign_of(x.parity)));
        out = out.add(&pair(pe.space, n, k, xd, x)?.scale(&-Q::one()));
    }
    Ok(out)
}

/// `ξ_k = 2 Σ_a (-1)^{|X_a|} Δ_{k-1}(X_a) ⊗ X_a^† ⊗ Id`.
pub fn xi(pe: &PeBasis, k: usize, n: usize) -> Result<SuperOperator> {
    check_k(k, n, 2, n)?;
    let space = pe.space;
    let mut out = SuperOperator::zero(space, n)?;
    for (x, xd) in pe.elements.iter().zip(&pe.duals) {
        let tail = SuperOperator::slot(space, n, k - 1, xd)?;
        for l in 0..k - 1 {
            let term = SuperOperator::slot(space, n, l, x)?.compose(&tail);
            out = out.add(&term.scale(&(sign_of(x.parity) * Q::from_i64(2))));
        }
    }
    Ok(out)
}

/// Diagonal action `Δ_n(X)` of an element of `𝔤𝔩(m|m)`.
pub fn diagonal(space: SuperSpace, n: usize, x: &GlElement) -> Result<SuperOperator> {
    let mut out = SuperOperator::zero(space, n)?;
    for l in 0..n {
        out = out.add(&SuperOperator::slot(space, n, l, x)?);
    }
    Ok(out)
}

/// Super commutator `[A, B]` of operators with parities `pa`, `pb`.
pub fn supercommutator(a: &SuperOperator, pa: usize, b: &SuperOperator, pb: usize) -> SuperOperator {
    let ab = a.compose(b);
    let ba = b.compose(a);
    ab.add(&ba.scale(&-sign_of(pa * pb)))
}

/// Dimension of the span of `{π(d) : d ∈ A_n}`.
pub fn faithfulness_rank(n: usize, m: usize) -> Result<usize> {
    let space = SuperSpace::new(m);
    let ops: Vec<Vec<(usize, Q)>> =
        crate::algebra::basis(n).par_iter().map(|d| SuperOperator::diagram(space, d).map(|o| o.flatten())).collect::<Result<_>>()?;
    let cols = (space.tensor_dim(n) * space.tensor_dim(n)) as usize;
    Ok(sparse_rank(cols, ops))
}

/// Pairs `(d1, d2)` with `d2: i -> j`, `d1: j -> k`, `i + j ≤ max` and
/// `j + k ≤ max`, on which diagram composition and the tensor model disagree.
/// Returns the number of pairs checked and the first few failures.
pub fn composition_oracle(m: usize, max: usize) -> (usize, Vec<String>) {
    let space = SuperSpace::new(m);
    let mut triples = Vec::new();
    for i in 0..=max {
        for j in (i % 2..=max - i).step_by(2) {
            for k in (j % 2..=max - j).step_by(2) {
                triples.push((i, j, k));
            }
        }
    }
    let results: Vec<(usize, Vec<String>)> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let lower = diagrams::enumerate(i, j);
            let upper = diagrams::enumerate(j, k);
            let pairs: Vec<(&BrauerDiagram, &BrauerDiagram)> = upper.iter().flat_map(|a| lower.iter().map(move |b| (a, b))).collect();
            let bad = pairs.par_iter().filter(|(a, b)| !super::tensor::composition_agrees(&space, a, b)).map(|(a, b)| format!("{a} ∘ {b}")).collect();
            (pairs.len(), bad)
        })
        .collect();
    let total = results.iter().map(|r| r.0).sum();
    let mut bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    bad.truncate(5);
    (total, bad)
}
