//! Murphy bases of cell modules, built through restriction to `A_{n-1}`.

use std::collections::HashMap;

use serde::Serialize;

use super::bratteli::{content_vector, path_dominates, paths, BratteliPath};
use super::CellModule;
use crate::algebra::{self, jm};
use crate::diagrams::{compose, cup, BrauerDiagram, Signed};
use crate::error::Error;
use crate::field::Field;
use crate::linalg::{intertwiner_space, Matrix};
use crate::partitions::Partition;
use crate::specht::SpechtModule;

/// `v_t` for `t ∈ St_n(λ)`, as columns in the half-diagram ⊗ tableau basis.
#[derive(Clone, Debug)]
pub struct MurphyBasis<F: Field> {
    pub n: usize,
    pub shape: Partition,
    pub paths: Vec<BratteliPath>,
    pub vectors: Matrix<F>,
}

impl<F: Field> MurphyBasis<F> {
    pub fn position(&self, t: &BratteliPath) -> Option<usize> {
        self.paths.iter().position(|p| p == t)
    }
}

/// The cycle `g_j = s_j s_{j+1} .. s_i` in `S_{i+1}`, sending `i+1` to `j`
/// (both 1-based); as `w[b] = image of b`.
fn coset_rep(j: usize, i: usize) -> Vec<usize> {
    (0..=i)
        .map(|b| {
            if b + 1 < j {
                b
            } else if b == i {
                j - 1
            } else {
                b + 1
            }
        })
        .collect()
}

fn compose_perm(u: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&x| u[x]).collect()
}

fn invert_perm(u: &[usize]) -> Vec<usize> {
    let mut out = vec![0; u.len()];
    for (b, &x) in u.iter().enumerate() {
        out[x] = b;
    }
    out
}

/// `Ind_{S_i}^{S_{i+1}} W^0(λ)` on the basis `g_j ⊗ v_T`; matrix of `σ ∈ S_{i+1}`.
fn induced_matrix<F: Field>(specht: &SpechtModule<F>, sigma: &[usize]) -> Matrix<F> {
    let i = specht.degree();
    let f = specht.dim();
    let mut m = Matrix::zeros((i + 1) * f, (i + 1) * f);
    for j in 1..=i + 1 {
        let g = coset_rep(j, i);
        let target = sigma[j - 1] + 1;
        let h = compose_perm(&invert_perm(&coset_rep(target, i)), &compose_perm(sigma, &g));
        debug_assert_eq!(h[i], i);
        let block = specht.permutation(&h[..i]);
        for r in 0..f {
            for c in 0..f {
                m[((target - 1) * f + r, (j - 1) * f + c)] = block[(r, c)].clone();
            }
        }
    }
    m
}

fn adjacent_transposition(k: usize, len: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (0..len).collect();
    w.swap(k - 1, k);
    w
}

/// Embedding `W_{n-1}(μ) → W_n(λ)` for `μ = λ` minus a box:
/// `h ⊗ v_T ↦ (h ⊗ I) ⊗ v_{T ∪ {i}}`.
pub fn removal_map<F: Field>(big: &CellModule<F>, small: &CellModule<F>) -> Matrix<F> {
    let sections = big.specht().branching_sections();
    let start = sections.iter().find(|(mu, _)| mu == small.shape()).expect("μ ∈ R(λ)").1.start;
    let id1 = BrauerDiagram::identity(1);
    let f = small.specht().dim();
    let mut m = Matrix::zeros(big.dim(), small.dim());
    for (hi, h) in small.halves().iter().enumerate() {
        let hb = big.half_index(&h.tensor(&id1)).expect("extended half-diagram");
        for t in 0..f {
            m[(big.index(hb, start + t), small.index(hi, t))] = F::one();
        }
    }
    m
}

/// Lift `W_{n-1}(ν) → W_n(λ)` for `ν = λ` plus a box: `d ⊗ u ↦ Σ_j (d⊗I)(g_j⊗I) a ⊗ ψ(u)_j`
/// with `ψ : W^0(ν) → Ind W^0(λ)` a nonzero intertwiner and `a = I_i ⊗ ∪`.
pub fn addition_map<F: Field>(big: &CellModule<F>, small: &CellModule<F>) -> Result<Matrix<F>, Error> {
    let i = big.shape().size();
    let spl = big.specht();
    let spn = small.specht();
    let (f, fnu) = (spl.dim(), spn.dim());
    let ind: Vec<Matrix<F>> = (1..=i).map(|k| induced_matrix(spl, &adjacent_transposition(k, i + 1))).collect();
    let src: Vec<Matrix<F>> = (1..=i).map(|k| spn.generator(k).clone()).collect();
    let psi = if i == 0 {
        Matrix::identity(1)
    } else {
        let sols = intertwiner_space(&src, &ind);
        if sols.len() != 1 {
            return Err(Error::Invalid(format!("Hom({}, Ind {}) has dimension {}", small.shape(), big.shape(), sols.len())));
        }
        sols.into_iter().next().unwrap()
    };
    let a = BrauerDiagram::identity(i).tensor(&cup());
    let id1 = BrauerDiagram::identity(1);
    let lower: Vec<Signed> =
        (1..=i + 1).map(|j| compose(&BrauerDiagram::from_permutation(&coset_rep(j, i)).tensor(&id1), &a)).collect::<Result<_, _>>()?;
    let mut m = Matrix::zeros(big.dim(), small.dim());
    for (di, d) in small.halves().iter().enumerate() {
        let upper = Signed::Term { sign: 1, diagram: d.tensor(&id1) };
        for (j, low) in lower.iter().enumerate() {
            let full = upper.clone().then_under(low.clone())?;
            for u in 0..fnu {
                let v: Vec<F> = (0..f).map(|t| psi[(j * f + t, u)].clone()).collect();
                if v.iter().all(F::is_zero) {
                    continue;
                }
                let mut col = vec![F::zero(); big.dim()];
                big.push_factored(full.clone(), &v, &F::one(), &mut col);
                let c = small.index(di, u);
                for (r, x) in col.into_iter().enumerate() {
                    if !x.is_zero() {
                        m[(r, c)] += x;
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Murphy bases for all cell modules up to some `n`, computed on demand.
#[derive(Default)]
pub struct MurphyTower<F: Field> {
    cells: HashMap<(usize, Partition), CellModule<F>>,
    bases: HashMap<(usize, Partition), MurphyBasis<F>>,
}

impl<F: Field> MurphyTower<F> {
    pub fn new() -> Self {
        MurphyTower { cells: HashMap::new(), bases: HashMap::new() }
    }

    pub fn cell(&mut self, n: usize, shape: &Partition) -> Result<&CellModule<F>, Error> {
        let key = (n, shape.clone());
        if !self.cells.contains_key(&key) {
            let c = CellModule::new(n, shape)?;
            self.cells.insert(key.clone(), c);
        }
        Ok(&self.cells[&key])
    }

    pub fn basis(&mut self, n: usize, shape: &Partition) -> Result<&MurphyBasis<F>, Error> {
        let key = (n, shape.clone());
        if !self.bases.contains_key(&key) {
            let b = self.build(n, shape)?;
            self.bases.insert(key.clone(), b);
        }
        Ok(&self.bases[&key])
    }

    fn build(&mut self, n: usize, shape: &Partition) -> Result<MurphyBasis<F>, Error> {
        let big = self.cell(n, shape)?.clone();
        let ps = paths(n, shape);
        if n == 1 {
            return Ok(MurphyBasis { n, shape: shape.clone(), paths: ps, vectors: Matrix::identity(1) });
        }
        let mut maps: HashMap<Partition, Matrix<F>> = HashMap::new();
        let mut cols = Vec::with_capacity(ps.len());
        for t in &ps {
            let mu = t.at(n - 1).clone();
            if !maps.contains_key(&mu) {
                let small = self.cell(n - 1, &mu)?.clone();
                let m = if mu.size() < shape.size() { removal_map(&big, &small) } else { addition_map(&big, &small)? };
                maps.insert(mu.clone(), m);
            }
            let sub = self.basis(n - 1, &mu)?;
            let k = sub.position(&t.prefix()).expect("prefix path");
            cols.push(maps[&mu].mul_vec(&sub.vectors.column(k)));
        }
        Ok(MurphyBasis { n, shape: shape.clone(), paths: ps, vectors: Matrix::from_columns(big.dim(), &cols) })
    }
}

pub fn murphy_basis<F: Field>(n: usize, shape: &Partition) -> Result<MurphyBasis<F>, Error> {
    Ok(MurphyTower::new().basis(n, shape)?.clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangularityReport {
    pub n: usize,
    pub shape: Partition,
    pub invertible: bool,
    /// `(path, l)` where `(x_l - c_t(l)) v_t` leaves the span of larger paths.
    pub violations: Vec<(String, usize)>,
}

impl TriangularityReport {
    pub fn holds(&self) -> bool {
        self.invertible && self.violations.is_empty()
    }
}

/// `x_l v_t - c_t(l) v_t ∈ span{v_s : s ▷ t}` for all `l` and `t`.
pub fn jm_triangularity_check<F: Field>(tower: &mut MurphyTower<F>, n: usize, shape: &Partition) -> Result<TriangularityReport, Error> {
    let cell = tower.cell(n, shape)?.clone();
    let mb = tower.basis(n, shape)?.clone();
    let mut report = TriangularityReport { n, shape: shape.clone(), invertible: false, violations: Vec::new() };
    let Some(inv) = mb.vectors.inverse() else { return Ok(report) };
    report.invertible = true;
    let contents: Vec<Vec<i64>> = mb.paths.iter().map(content_vector).collect();
    for l in 2..=n {
        let x = inv.mul(&cell.expression_matrix(&jm::<F>(l, n))).mul(&mb.vectors);
        for (c, t) in mb.paths.iter().enumerate() {
            let ok = (0..mb.paths.len()).all(|r| {
                if r == c {
                    x[(r, c)] == F::from_i64(contents[c][l - 2])
                } else {
                    x[(r, c)].is_zero() || path_dominates(&mb.paths[r], t)
                }
            });
            if !ok {
                report.violations.push((t.to_string(), l));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub n: usize,
    pub shape: Partition,
    /// `N_{n-1,i-1} ⊗ W^0(λ)` is stable under `A_{n-1}`.
    pub sub_stable: bool,
    /// The removal maps are injective intertwiners onto that subspace.
    pub sub_isomorphic: bool,
    /// The addition maps intertwine modulo the subspace and complete a basis.
    pub quotient_isomorphic: bool,
    pub dims_add_up: bool,
}

impl RestrictionReport {
    pub fn holds(&self) -> bool {
        self.sub_stable && self.sub_isomorphic && self.quotient_isomorphic && self.dims_add_up
    }
}

/// Restriction of `W_n(λ)` to `A_{n-1}` against the predicted sub and quotient.
pub fn restriction_check<F: Field>(n: usize, shape: &Partition) -> Result<RestrictionReport, Error> {
    assert!(n >= 2);
    let big = CellModule::<F>::new(n, shape)?;
    let id1 = BrauerDiagram::identity(1);
    let small_gens = algebra::generators(n - 1);
    let gens: Vec<BrauerDiagram> = small_gens.iter().map(|g| g.tensor(&id1)).collect();
    let big_mats: Vec<Matrix<F>> = gens.iter().map(|g| big.diagram_matrix(g)).collect();

    let f = big.specht().dim();
    let sub_rows: Vec<usize> =
        (0..big.dim()).filter(|&idx| big.halves()[idx / f].partner(big.halves()[idx / f].source() + n - 1) < shape.size()).collect();
    let in_sub = {
        let mut v = vec![false; big.dim()];
        for &r in &sub_rows {
            v[r] = true;
        }
        v
    };
    let sub_stable = big_mats.iter().all(|m| sub_rows.iter().all(|&c| (0..big.dim()).all(|r| in_sub[r] || m[(r, c)].is_zero())));

    let mut rem_cols = Vec::new();
    let mut add_cols = Vec::new();
    let mut sub_isomorphic = true;
    let mut quotient_isomorphic = true;
    let mut dim_sum = 0;
    for mu in shape.remove_one() {
        let small = CellModule::<F>::new(n - 1, &mu)?;
        dim_sum += small.dim();
        let phi = removal_map(&big, &small);
        for (g, bm) in small_gens.iter().zip(&big_mats) {
            let sm = small.diagram_matrix(g);
            sub_isomorphic &= bm.mul(&phi) == phi.mul(&sm);
        }
        rem_cols.extend((0..phi.cols()).map(|c| phi.column(c)));
    }
    for nu in shape.add_one().into_iter().filter(|nu| nu.size() < n) {
        let small = CellModule::<F>::new(n - 1, &nu)?;
        dim_sum += small.dim();
        let psi = addition_map(&big, &small)?;
        for (g, bm) in small_gens.iter().zip(&big_mats) {
            let sm = small.diagram_matrix(g);
            let diff = bm.mul(&psi).sub(&psi.mul(&sm));
            quotient_isomorphic &= (0..diff.rows()).all(|r| in_sub[r] || (0..diff.cols()).all(|c| diff[(r, c)].is_zero()));
        }
        add_cols.extend((0..psi.cols()).map(|c| psi.column(c)));
    }
    let rem = Matrix::from_columns(big.dim(), &rem_cols);
    sub_isomorphic &= rem.rank() == sub_rows.len() && rem_cols.len() == sub_rows.len();
    let mut all_cols = rem_cols;
    all_cols.extend(add_cols);
    quotient_isomorphic &= all_cols.len() == big.dim() && Matrix::from_columns(big.dim(), &all_cols).rank() == big.dim();
    Ok(RestrictionReport { n, shape: shape.clone(), sub_stable, sub_isomorphic, quotient_isomorphic, dims_add_up: dim_sum == big.dim() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::partitions::cell_labels;

    type Q = Rational;

    #[test]
    fn coset_reps() {
        assert_eq!(coset_rep(3, 2), vec![0, 1, 2]);
        assert_eq!(coset_rep(1, 2), vec![1, 2, 0]);
        assert_eq!(coset_rep(2, 3), vec![0, 2, 3, 1]);
    }

    #[test]
    fn induced_module_is_a_representation() {
        let sp = SpechtModule::<Q>::new(&Partition::of(&[2, 1])).unwrap();
        let mats: Vec<_> = (1..=3).map(|k| induced_matrix(&sp, &adjacent_transposition(k, 4))).collect();
        let id = Matrix::identity(8);
        for k in 0..3 {
            assert_eq!(mats[k].mul(&mats[k]), id);
            if k + 1 < 3 {
                let (a, b) = (&mats[k], &mats[k + 1]);
                assert_eq!(a.mul(b).mul(a), b.mul(a).mul(b));
            }
        }
    }

    #[test]
    fn restriction_small() {
        for n in 2..=5 {
            for lam in cell_labels(n) {
                let r = restriction_check::<Q>(n, &lam).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }

    #[test]
    fn triangularity_small() {
        let mut tower = MurphyTower::<Q>::new();
        for n in 1..=4 {
            for lam in cell_labels(n) {
                let r = jm_triangularity_check(&mut tower, n, &lam).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }
}
