//! Exact dense and sparse linear algebra over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(rows.len(), cols, |r, c| rows[r][c].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<F> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let v = a.clone() * b.clone();
                        out[(r, c)] += v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() && !self[(r, c)].is_zero() {
                        acc += self[(r, c)].clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for k in 0..self.rows.min(self.cols) {
            acc += self[(k, k)].clone();
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m[(row, c)].clone() * inv.clone();
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    if !m[(row, c)].is_zero() {
                        let v = m[(r, c)].clone() - f.clone() * m[(row, c)].clone();
                        m[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, in RREF order.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>, Error> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| if c < self.cols { self[(r, c)].clone() } else { b[r].clone() });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Matrix<F>]) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Columns `cols` of `self`.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix<F> {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }
}

/// Linear maps `X` with `targets[g] X = X sources[g]` for every generator `g`.
///
/// Returned as a basis of `dim(target) x dim(source)` matrices.
pub fn intertwiner_space<F: Field>(sources: &[Matrix<F>], targets: &[Matrix<F>]) -> Vec<Matrix<F>> {
    assert_eq!(sources.len(), targets.len());
    let (Some(s0), Some(t0)) = (sources.first(), targets.first()) else {
        return Vec::new();
    };
    let (ds, dt) = (s0.rows(), t0.rows());
    let unknowns = dt * ds;
    let var = |r: usize, s: usize| r * ds + s;
    let mut ech = SparseEchelon::new(unknowns);
    for (m, n) in sources.iter().zip(targets) {
        for r in 0..dt {
            for s in 0..ds {
                let mut row: BTreeMap<usize, F> = BTreeMap::new();
                for t in 0..dt {
                    if !n[(r, t)].is_zero() {
                        *row.entry(var(t, s)).or_insert_with(F::zero) += n[(r, t)].clone();
                    }
                }
                for t in 0..ds {
                    if !m[(t, s)].is_zero() {
                        *row.entry(var(r, t)).or_insert_with(F::zero) += -m[(t, s)].clone();
                    }
                }
                ech.insert(row.into_iter().filter(|(_, v)| !v.is_zero()).collect());
            }
        }
    }
    ech.kernel().into_iter().map(|v| Matrix::from_fn(dt, ds, |r, s| v[var(r, s)].clone())).collect()
}

/// Dimension of the space of intertwiners, via sparse elimination only.
pub fn intertwiner_dimension<F: Field>(sources: &[SparseMatrix<F>], targets: &[SparseMatrix<F>]) -> usize {
    assert_eq!(sources.len(), targets.len());
    let (Some(s0), Some(t0)) = (sources.first(), targets.first()) else {
        return 0;
    };
    let (ds, dt) = (s0.dim, t0.dim);
    let var = |r: usize, s: usize| r * ds + s;
    let mut ech = SparseEchelon::new(dt * ds);
    for (m, n) in sources.iter().zip(targets) {
        // n[r][t] X[t][s] - X[r][t] m[t][s]
        let n_rows = n.rows_view();
        for (r, n_row) in n_rows.iter().enumerate().take(dt) {
            for s in 0..ds {
                let mut row: BTreeMap<usize, F> = BTreeMap::new();
                for (t, v) in n_row {
                    *row.entry(var(*t, s)).or_insert_with(F::zero) += v.clone();
                }
                for (t, v) in &m.columns[s] {
                    *row.entry(var(r, *t)).or_insert_with(F::zero) += -v.clone();
                }
                ech.insert(row.into_iter().filter(|(_, v)| !v.is_zero()).collect());
            }
        }
    }
    dt * ds - ech.rank()
}

/// Square sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F> {
    pub dim: usize,
    /// `columns[c]` lists `(row, value)`.
    pub columns: Vec<Vec<(usize, F)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn rows_view(&self) -> Vec<Vec<(usize, F)>> {
        let mut rows = vec![Vec::new(); self.dim];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] += v.clone();
            }
        }
        m
    }
}

/// Incremental row echelon form of sparse rows.
pub struct SparseEchelon<F> {
    cols: usize,
    /// pivot column -> normalised row (leading entry 1)
    pivots: BTreeMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(cols: usize) -> Self {
        SparseEchelon { cols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row (sorted by column, no zeros). Returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<(usize, F)>) -> bool {
        row.sort_by_key(|e| e.0);
        loop {
            let Some((lead, lv)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    let inv = lv.inv().expect("nonzero");
                    let normalised: Vec<(usize, F)> = row.into_iter().map(|(c, v)| (c, v * inv.clone())).collect();
                    self.pivots.insert(lead, normalised);
                    return true;
                }
                Some(prow) => {
                    row = axpy(&row, prow, &(-lv));
                }
            }
        }
    }

    /// Basis of the solution space of the inserted homogeneous rows.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        // back-substitute into fully reduced form, highest pivot first
        let mut reduced: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let mut k = 1;
            while k < r.len() {
                let (c, v) = r[k].clone();
                if let Some(q) = reduced.get(&c) {
                    r = axpy(&r, q, &(-v));
                    continue;
                }
                k += 1;
            }
            reduced.insert(p, r);
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !reduced.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (&p, row) in &reduced {
                    if let Some((_, x)) = row.iter().find(|(c, _)| *c == f) {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// `a + s * b` for sparse sorted rows.
fn axpy<F: Field>(a: &[(usize, F)], b: &[(usize, F)], s: &F) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, b[j].1.clone() * s.clone()));
            j += 1;
        } else {
            let v = a[i].1.clone() + b[j].1.clone() * s.clone();
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<F: Field>(cols: usize, vectors: impl IntoIterator<Item = Vec<(usize, F)>>) -> usize {
    let mut ech = SparseEchelon::new(cols);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Extend the independent columns `sub` to a basis, adding standard vectors.
/// Returns the square change-of-basis matrix `[sub | complement]`.
pub fn extend_to_basis<F: Field>(dim: usize, sub: &[Vec<F>]) -> Matrix<F> {
    let mut cols: Vec<Vec<F>> = sub.to_vec();
    let mut ech = SparseEchelon::new(dim);
    for v in sub {
        ech.insert(dense_to_sparse(v));
    }
    for k in 0..dim {
        if ech.rank() == dim {
            break;
        }
        let mut e = vec![F::zero(); dim];
        e[k] = F::one();
        if ech.insert(vec![(k, F::one())]) {
            cols.push(e);
        }
    }
    Matrix::from_columns(dim, &cols)
}

pub fn dense_to_sparse<F: Field>(v: &[F]) -> Vec<(usize, F)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rank_kernel_solve() {
        let a = Matrix::from_rows(&[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
        let x = a.solve(&[q(4), q(8), q(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![q(4), q(8), q(2)]);
        assert!(a.solve(&[q(1), q(0), q(0)]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_rows(&[vec![q(2), q(1)], vec![q(1), q(1)]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let b = Matrix::from_rows(&[vec![Fp::<7>::new(3)]]);
        assert_eq!(b.inverse().unwrap()[(0, 0)], Fp::<7>::new(5));
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let a = Matrix::from_rows(&[vec![q(1), q(-1), q(0), q(0)], vec![q(0), q(1), q(-1), q(0)], vec![q(1), q(0), q(-1), q(0)]]);
        let mut ech = SparseEchelon::new(4);
        for r in 0..3 {
            ech.insert(dense_to_sparse(&a.row(r)));
        }
        assert_eq!(ech.rank(), a.rank());
        let k = ech.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn intertwiners_of_swap() {
        // C^2 with the swap: End is 2-dimensional
        let sw = Matrix::from_rows(&[vec![q(0), q(1)], vec![q(1), q(0)]]);
        let maps = intertwiner_space(std::slice::from_ref(&sw), std::slice::from_ref(&sw));
        assert_eq!(maps.len(), 2);
        for x in &maps {
            assert_eq!(sw.mul(x), x.mul(&sw));
        }
    }
}
