//! Standard tableaux and Specht modules in seminormal form.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::partitions::{content, Partition};

/// Standard tableau; entries `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let t = StandardTableau { rows };
        let n = t.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in t.rows.iter().enumerate() {
            if row.is_empty() || (r > 0 && row.len() > t.rows[r - 1].len()) {
                return Err(Error::Invalid(format!("bad shape {:?}", t.rows)));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::Invalid(format!("bad filling {:?}", t.rows)));
                }
                seen[v] = true;
                if (c > 0 && row[c - 1] > v) || (r > 0 && t.rows[r - 1][c] > v) {
                    return Err(Error::Invalid(format!("not standard {:?}", t.rows)));
                }
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::of(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    /// `(row, column)` of entry `k`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == k) {
                return (r, c);
            }
        }
        panic!("entry {k} not in tableau");
    }

    pub fn content(&self, k: usize) -> i64 {
        content(self.position(k))
    }

    /// Contents of entries `1..=n` in order.
    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size()).map(|k| self.content(k)).collect()
    }

    /// Tableau with `k` and `k+1` exchanged, if still standard.
    pub fn swap(&self, k: usize) -> Option<StandardTableau> {
        let (a, b) = (self.position(k), self.position(k + 1));
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.0][a.1] = k + 1;
        rows[b.0][b.1] = k;
        Some(StandardTableau { rows })
    }

    /// Remove the largest entry.
    pub fn restrict(&self) -> StandardTableau {
        let n = self.size();
        let (r, _) = self.position(n);
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        StandardTableau { rows }
    }

    fn extend(&self, row: usize) -> StandardTableau {
        let n = self.size();
        let mut rows = self.rows.clone();
        if row == rows.len() {
            rows.push(Vec::new());
        }
        rows[row].push(n + 1);
        StandardTableau { rows }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// Shapes obtained by removing one box, most dominant first.
pub fn restrictions(shape: &Partition) -> Vec<Partition> {
    let mut out = shape.remove_one();
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    out
}

/// Standard tableaux of `shape`, grouped by the position of the largest
/// entry (sections ordered as in [`restrictions`]).
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    if shape.size() == 0 {
        return vec![StandardTableau { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    for mu in restrictions(shape) {
        let row = (0..shape.len()).find(|&r| mu.row(r) != shape.row(r)).unwrap();
        out.extend(standard_tableaux(&mu).into_iter().map(|t| t.extend(row)));
    }
    out
}

/// A word `[k_1, .., k_r]` (1-based) with `w = s_{k_1} ∘ .. ∘ s_{k_r}`,
/// for `w` given as `w[b] = image of b`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut right = Vec::new();
    while let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
        w.swap(k, k + 1);
        right.push(k + 1);
    }
    right.reverse();
    right
}

/// `W^0(λ)` over `F` with Young's seminormal basis.
#[derive(Clone, Debug)]
pub struct SpechtModule<F: Field> {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    index: HashMap<StandardTableau, usize>,
    gens: Vec<Matrix<F>>,
    form: Matrix<F>,
}

impl<F: Field> SpechtModule<F> {
    pub fn new(shape: &Partition) -> Result<Self, Error> {
        let n = shape.size();
        let p = F::characteristic();
        if p != 0 && p as usize <= n {
            return Err(Error::CharacteristicTooSmall { p, n });
        }
        let tableaux = standard_tableaux(shape);
        let index: HashMap<_, _> = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let dim = tableaux.len();
        let mut gens = Vec::new();
        for k in 1..n {
            let mut m = Matrix::zeros(dim, dim);
            for (j, t) in tableaux.iter().enumerate() {
                let (a, b) = (t.position(k), t.position(k + 1));
                if a.0 == b.0 {
                    m[(j, j)] = F::one();
                    continue;
                }
                if a.1 == b.1 {
                    m[(j, j)] = -F::one();
                    continue;
                }
                let r = F::from_i64(t.content(k + 1) - t.content(k)).inv().expect("nonzero axial distance");
                let i = index[&t.swap(k).unwrap()];
                m[(j, j)] = r.clone();
                // `k` in an earlier row than `k+1`
                m[(i, j)] = if a.0 < b.0 { F::one() } else { F::one() - r.clone() * r };
            }
            gens.push(m);
        }
        let form = invariant_form(&tableaux, &index);
        Ok(SpechtModule { shape: shape.clone(), tableaux, index, gens, form })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Matrix of `s_k`, `1 ≤ k < n`.
    pub fn generator(&self, k: usize) -> &Matrix<F> {
        &self.gens[k - 1]
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.gens
    }

    /// Matrix of the permutation `w` (`w[b] = image of b`).
    pub fn permutation(&self, w: &[usize]) -> Matrix<F> {
        assert_eq!(w.len(), self.degree());
        let mut m = Matrix::identity(self.dim());
        for k in reduced_word(w) {
            m = m.mul(self.generator(k));
        }
        m
    }

    /// Image of `v` under `w`, without forming the matrix.
    pub fn act(&self, w: &[usize], v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for k in reduced_word(w).into_iter().rev() {
            out = self.generator(k).mul_vec(&out);
        }
        out
    }

    /// Diagonal invariant symmetric form.
    pub fn form(&self) -> &Matrix<F> {
        &self.form
    }

    /// `x^0_i = Σ_{j<i} (j,i)`; diagonal with entries the contents of `i`.
    pub fn jm0(&self, i: usize) -> Matrix<F> {
        let n = self.degree();
        assert!((1..=n).contains(&i));
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for j in 1..i {
            let mut w: Vec<usize> = (0..n).collect();
            w.swap(j - 1, i - 1);
            m = m.add(&self.permutation(&w));
        }
        m
    }

    /// Basis ranges spanned by tableaux with `n` removed to give shape `μ`,
    /// most dominant `μ` first.
    pub fn branching_sections(&self) -> Vec<(Partition, Range<usize>)> {
        let mut out: Vec<(Partition, Range<usize>)> = Vec::new();
        for (i, t) in self.tableaux.iter().enumerate() {
            let mu = t.restrict().shape();
            match out.last_mut() {
                Some((m, r)) if *m == mu => r.end = i + 1,
                _ => out.push((mu, i..i + 1)),
            }
        }
        out
    }
}

fn invariant_form<F: Field>(tableaux: &[StandardTableau], index: &HashMap<StandardTableau, usize>) -> Matrix<F> {
    let dim = tableaux.len();
    let mut g: Vec<Option<F>> = vec![None; dim];
    if dim == 0 {
        return Matrix::zeros(0, 0);
    }
    let n = tableaux[0].size();
    g[0] = Some(F::one());
    let mut stack = vec![0];
    while let Some(j) = stack.pop() {
        let t = &tableaux[j];
        let gj = g[j].clone().unwrap();
        for k in 1..n {
            let Some(u) = t.swap(k) else { continue };
            let i = index[&u];
            if g[i].is_some() {
                continue;
            }
            let r = F::from_i64(t.content(k + 1) - t.content(k)).inv().unwrap();
            let factor = F::one() - r.clone() * r;
            let first = t.position(k).0 < t.position(k + 1).0;
            g[i] = Some(if first { gj.clone() * factor } else { gj.div(&factor).unwrap() });
            stack.push(i);
        }
    }
    let mut m = Matrix::zeros(dim, dim);
    for (i, v) in g.into_iter().enumerate() {
        m[(i, i)] = v.expect("tableau graph is connected");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::partitions::{num_standard_tableaux, partitions_of};

    type Q = Rational;

    fn coxeter<F: Field>(m: &SpechtModule<F>) {
        let n = m.degree();
        let id = Matrix::identity(m.dim());
        for k in 1..n {
            let s = m.generator(k);
            assert_eq!(s.mul(s), id);
            if k + 1 < n {
                let t = m.generator(k + 1);
                assert_eq!(s.mul(t).mul(s), t.mul(s).mul(t), "braid {k} for {}", m.shape());
            }
            for l in k + 2..n {
                let t = m.generator(l);
                assert_eq!(s.mul(t), t.mul(s));
            }
        }
    }

    #[test]
    fn coxeter_relations_and_form() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let m = SpechtModule::<Q>::new(&lam).unwrap();
                assert_eq!(m.dim() as u64, num_standard_tableaux(&lam));
                coxeter(&m);
                for s in m.generators() {
                    assert_eq!(&s.transpose().mul(m.form()).mul(s), m.form());
                }
                assert_eq!(m.form().rank(), m.dim());
            }
        }
    }

    #[test]
    fn trivial_and_sign() {
        let t = SpechtModule::<Q>::new(&Partition::of(&[4])).unwrap();
        let s = SpechtModule::<Q>::new(&Partition::of(&[1, 1, 1, 1])).unwrap();
        for k in 1..4 {
            assert_eq!(t.generator(k), &Matrix::identity(1));
            assert_eq!(s.generator(k), &Matrix::identity(1).scale(&Q::from_i64(-1)));
        }
    }

    #[test]
    fn jm0_is_diagonal_with_contents() {
        for n in 2..=5 {
            for lam in partitions_of(n) {
                let m = SpechtModule::<Q>::new(&lam).unwrap();
                let mut total = Matrix::zeros(m.dim(), m.dim());
                for i in 2..=n {
                    let x = m.jm0(i);
                    let expect = Matrix::from_fn(m.dim(), m.dim(), |r, c| if r == c { Q::from_i64(m.tableaux()[r].content(i)) } else { Q::zero() });
                    assert_eq!(x, expect);
                    total = total.add(&x);
                }
                assert_eq!(total, Matrix::identity(m.dim()).scale(&Q::from_i64(lam.content_sum())));
            }
        }
    }

    #[test]
    fn branching() {
        let m = SpechtModule::<Q>::new(&Partition::of(&[3, 1])).unwrap();
        let secs = m.branching_sections();
        assert_eq!(secs, vec![(Partition::of(&[3]), 0..1), (Partition::of(&[2, 1]), 1..3)]);
        for n in 2..=6 {
            for lam in partitions_of(n) {
                let m = SpechtModule::<Q>::new(&lam).unwrap();
                let secs = m.branching_sections();
                assert_eq!(secs.iter().map(|s| s.0.clone()).collect::<Vec<_>>(), restrictions(&lam));
                for (mu, r) in secs {
                    let sub = SpechtModule::<Q>::new(&mu).unwrap();
                    assert_eq!(sub.dim(), r.len());
                    let rows: Vec<usize> = r.clone().collect();
                    for k in 1..n - 1 {
                        let block = m.generator(k).select_rows(&rows).select_columns(&rows);
                        assert_eq!(&block, sub.generator(k));
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_matrices_compose() {
        let m = SpechtModule::<Q>::new(&Partition::of(&[2, 1, 1])).unwrap();
        let u = [2, 0, 3, 1];
        let v = [1, 3, 0, 2];
        let uv: Vec<usize> = (0..4).map(|b| u[v[b]]).collect();
        assert_eq!(m.permutation(&uv), m.permutation(&u).mul(&m.permutation(&v)));
        let vec: Vec<Q> = (0..m.dim()).map(|i| Q::from_i64(i as i64 + 1)).collect();
        assert_eq!(m.act(&uv, &vec), m.permutation(&uv).mul_vec(&vec));
    }

    #[test]
    fn small_characteristic_rejected() {
        assert!(SpechtModule::<Fp<7>>::new(&Partition::of(&[4, 3])).is_err());
        assert!(SpechtModule::<Fp<7>>::new(&Partition::of(&[3, 3])).is_ok());
    }
}
