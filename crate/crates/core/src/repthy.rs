//! Decomposition numbers, blocks, Cartan matrices and related consistency checks.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::relations::{RelationCheck, RelationReport};
use crate::algebra::{self, jm, theta};
use crate::cells::{content_vector, paths, CellModule, SimpleModule};
use crate::diagrams::{self, compose, BrauerDiagram, Signed};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{intertwiner_dimension, Matrix, SparseMatrix};
use crate::partitions::{cell_labels, content, j_set, partitions_of, Partition};
use crate::specht::SpechtModule;

/// `[W(λ):L(μ)]` for `λ` a cell label and `μ` a simple label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
}

impl DecompositionMatrix {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> u64 {
        match (self.row_of(lambda), self.col_of(mu)) {
            (Some(r), Some(c)) => self.entries[r][c],
            _ => 0,
        }
    }

    fn row_of(&self, p: &Partition) -> Option<usize> {
        self.rows.iter().position(|x| x == p)
    }

    fn col_of(&self, p: &Partition) -> Option<usize> {
        self.cols.iter().position(|x| x == p)
    }

    /// Nonzero `(μ, [W(λ):L(μ)])`.
    pub fn factors(&self, lambda: &Partition) -> Vec<(Partition, u64)> {
        let Some(r) = self.row_of(lambda) else { return Vec::new() };
        self.cols.iter().zip(&self.entries[r]).filter(|(_, &m)| m > 0).map(|(p, &m)| (p.clone(), m)).collect()
    }

    /// `(P(λ):W(ν)) = [W(νᵗ):L(λᵗ)]`.
    pub fn projective_filtration(&self, lambda: &Partition) -> Vec<(Partition, u64)> {
        let lt = lambda.transpose();
        self.rows.iter().map(|nu| (nu.clone(), self.get(&nu.transpose(), &lt))).filter(|(_, m)| *m > 0).collect()
    }
}

/// Cell modules, their simple quotients, and the matrices of the letters
/// used to build test elements: `s_k`, `ε_k`, then `x_2..x_n`.
pub struct ModuleData<F: Field> {
    pub n: usize,
    pub cells: Vec<CellModule<F>>,
    pub simples: Vec<Option<SimpleModule<F>>>,
    cell_letters: Vec<Vec<Matrix<F>>>,
    simple_letters: Vec<Option<Vec<Matrix<F>>>>,
}

impl<F: Field> ModuleData<F> {
    pub fn new(n: usize) -> Result<Self> {
        let labels = cell_labels(n);
        let jms: Vec<_> = (2..=n).map(|i| jm::<F>(i, n)).collect();
        let built: Vec<Result<_>> = labels
            .par_iter()
            .map(|lam| {
                let cell = CellModule::<F>::new(n, lam)?;
                let mut letters = cell.generator_matrices();
                letters.extend(jms.iter().map(|x| cell.expression_matrix(x)));
                let simple = (!lam.is_empty()).then(|| cell.simple());
                let sl = simple.as_ref().map(|s| letters.iter().map(|m| s.quotient(m)).collect());
                Ok((cell, letters, simple, sl))
            })
            .collect();
        let mut data = ModuleData { n, cells: Vec::new(), simples: Vec::new(), cell_letters: Vec::new(), simple_letters: Vec::new() };
        for b in built {
            let (c, l, s, sl) = b?;
            data.cells.push(c);
            data.cell_letters.push(l);
            data.simples.push(s);
            data.simple_letters.push(sl);
        }
        Ok(data)
    }

    pub fn labels(&self) -> Vec<Partition> {
        self.cells.iter().map(|c| c.shape().clone()).collect()
    }

    fn letters(&self) -> usize {
        3 * (self.n.max(1) - 1)
    }

    fn index(&self, p: &Partition) -> usize {
        self.cells.iter().position(|c| c.shape() == p).expect("label")
    }

    pub fn simple(&self, p: &Partition) -> Option<&SimpleModule<F>> {
        self.simples[self.index(p)].as_ref()
    }

    pub fn cell(&self, p: &Partition) -> &CellModule<F> {
        &self.cells[self.index(p)]
    }
}

fn word_trace<F: Field>(letters: &[Matrix<F>], dim: usize, word: &[usize]) -> F {
    let mut m = Matrix::identity(dim);
    for &l in word {
        m = m.mul(&letters[l]);
    }
    m.trace()
}

/// The starting test words: `1`, JM elements, their degree-two products
/// and the generators.
fn base_words(n: usize) -> Vec<Vec<usize>> {
    let g = 2 * (n.max(1) - 1);
    let x = |i: usize| g + i - 2;
    let mut out = vec![Vec::new()];
    for a in 2..=n {
        out.push(vec![x(a)]);
        for b in a..=n {
            out.push(vec![x(a), x(b)]);
        }
    }
    out.extend((0..g).map(|k| vec![k]));
    out
}

/// Decomposition matrix of the cell modules by the trace method.
///
/// The traces of test elements on `W(λ)` are written as combinations of
/// their traces on all simples; words are added (seeded) until the simple
/// characters are independent on the chosen set.
pub fn decomposition_matrix<F: Field>(data: &ModuleData<F>, seed: u64) -> Result<DecompositionMatrix> {
    let n = data.n;
    let rows = data.labels();
    let cols: Vec<Partition> = rows.iter().filter(|p| !p.is_empty()).cloned().collect();
    let col_idx: Vec<usize> = cols.iter().map(|p| data.index(p)).collect();
    let mut words = base_words(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = data.letters();
    let budget = 400;
    let table = |words: &[Vec<usize>]| -> Matrix<F> {
        let entries: Vec<Vec<F>> = words
            .par_iter()
            .map(|w| {
                col_idx
                    .iter()
                    .map(|&c| {
                        let s = data.simples[c].as_ref().expect("simple");
                        word_trace(data.simple_letters[c].as_ref().expect("simple"), s.dim(), w)
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(&entries)
    };
    let mut t = table(&words);
    while t.rank() < cols.len() {
        if words.len() >= budget || letters == 0 {
            return Err(Error::Budget(format!("simple characters not separated by {} words", words.len())));
        }
        for _ in 0..8 {
            let len = rng.gen_range(2..=7);
            words.push((0..len).map(|_| rng.gen_range(0..letters)).collect());
        }
        t = table(&words);
    }
    let entries: Vec<Vec<u64>> = (0..rows.len())
        .into_par_iter()
        .map(|r| -> Result<Vec<u64>> {
            let cell = &data.cells[r];
            let b: Vec<F> = words.iter().map(|w| word_trace(&data.cell_letters[r], cell.dim(), w)).collect();
            let x = t.solve(&b).map_err(|_| Error::Undetermined(format!("traces of W{} are not a combination of simple traces", rows[r])))?;
            x.iter()
                .map(|v| match v.to_i64() {
                    Some(k) if k >= 0 => Ok(k as u64),
                    _ => Err(Error::Undetermined(format!("multiplicity {v:?} in W{}", rows[r]))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(DecompositionMatrix { n, rows, cols, entries })
}

/// `C_{λμ} = Σ_ν (P(λ):W(ν)) [W(ν):L(μ)]` over the simple labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
}

impl CartanMatrix {
    pub fn get(&self, a: &Partition, b: &Partition) -> u64 {
        let i = self.labels.iter().position(|x| x == a).expect("label");
        let j = self.labels.iter().position(|x| x == b).expect("label");
        self.entries[i][j]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    /// The same matrix with labels reordered to `order`.
    pub fn reorder(&self, order: &[Partition]) -> Option<CartanMatrix> {
        let set_a: BTreeSet<_> = self.labels.iter().collect();
        let set_b: BTreeSet<_> = order.iter().collect();
        if set_a != set_b || order.len() != self.labels.len() {
            return None;
        }
        let entries = order.iter().map(|a| order.iter().map(|b| self.get(a, b)).collect()).collect();
        Some(CartanMatrix { labels: order.to_vec(), entries })
    }
}

pub fn cartan_matrix(d: &DecompositionMatrix) -> CartanMatrix {
    let labels = d.cols.clone();
    let entries = labels
        .iter()
        .map(|lam| {
            let filt = d.projective_filtration(lam);
            labels.iter().map(|mu| filt.iter().map(|(nu, k)| k * d.get(nu, mu)).sum()).collect()
        })
        .collect();
    CartanMatrix { labels, entries }
}

/// Cartan matrix of the cover algebra `C_n`: the simple labelled `∅` only
/// occurs in its own standard module.
pub fn cover_cartan_matrix(d: &DecompositionMatrix) -> CartanMatrix {
    let labels = d.rows.clone();
    let dec = |nu: &Partition, mu: &Partition| if mu.is_empty() { u64::from(nu.is_empty()) } else { d.get(nu, mu) };
    let entries = labels
        .iter()
        .map(|lam| {
            let lt = lam.transpose();
            labels.iter().map(|mu| labels.iter().map(|nu| dec(&nu.transpose(), &lt) * dec(nu, mu)).sum()).collect()
        })
        .collect();
    CartanMatrix { labels, entries }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockPartition {
    pub classes: Vec<Vec<Partition>>,
}

impl BlockPartition {
    /// True if the classes are exactly the fibres of the 2-core map.
    pub fn matches_two_cores(&self) -> bool {
        let mut fibres: BTreeMap<Partition, BTreeSet<Partition>> = BTreeMap::new();
        for p in self.classes.iter().flatten() {
            fibres.entry(p.two_core()).or_default().insert(p.clone());
        }
        let mine: BTreeSet<BTreeSet<Partition>> = self.classes.iter().map(|c| c.iter().cloned().collect()).collect();
        mine == fibres.into_values().collect()
    }

    /// γ is constant on each class and separates the classes.
    pub fn gamma_separates(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.classes.iter().all(|c| {
            let g: BTreeSet<i64> = c.iter().map(Partition::gamma).collect();
            g.len() == 1 && seen.insert(*g.first().unwrap())
        })
    }
}

/// Linkage classes of the simple labels under nonzero Cartan entries.
pub fn block_partition(c: &CartanMatrix) -> BlockPartition {
    let k = c.labels.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..k {
        for j in 0..k {
            if c.entries[i][j] > 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
    let mut first: HashMap<usize, usize> = HashMap::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        let key = *first.entry(r).or_insert(i);
        classes.entry(key).or_default().push(c.labels[i].clone());
    }
    BlockPartition { classes: classes.into_values().collect() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: Partition,
    pub target: Partition,
}

/// A quiver with quadratic monomial relations `β∘α = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<Partition>,
    pub arrows: Vec<Arrow>,
    /// `(β, α)` for `β∘α = 0` (`α` first).
    pub relations: Vec<(String, String)>,
}

fn p(parts: &[usize]) -> Partition {
    Partition::of(parts)
}

impl QuiverPresentation {
    fn build(vertices: Vec<Partition>, arrows: &[(&str, Partition, Partition)], relations: &[(&str, &str)]) -> Self {
        QuiverPresentation {
            vertices,
            arrows: arrows.iter().map(|(n, s, t)| Arrow { name: n.to_string(), source: s.clone(), target: t.clone() }).collect(),
            relations: relations.iter().map(|(b, a)| (b.to_string(), a.to_string())).collect(),
        }
    }

    /// `(1,1) → (2)`.
    pub fn a2() -> Self {
        Self::build(vec![p(&[1, 1]), p(&[2])], &[("e", p(&[1, 1]), p(&[2]))], &[])
    }

    /// `(1,1) → ∅ → (2)`.
    pub fn c2() -> Self {
        Self::build(vec![p(&[1, 1]), p(&[]), p(&[2])], &[("a", p(&[1, 1]), p(&[])), ("b", p(&[]), p(&[2]))], &[])
    }

    /// `(1,1,1) → (1) → (3)` and the isolated vertex `(2,1)`.
    pub fn a3() -> Self {
        Self::build(vec![p(&[1, 1, 1]), p(&[1]), p(&[3]), p(&[2, 1])], &[("a", p(&[1, 1, 1]), p(&[1])), ("b", p(&[1]), p(&[3]))], &[])
    }

    pub fn a4() -> Self {
        Self::build(
            vec![p(&[2]), p(&[1, 1]), p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])],
            &[
                ("l1", p(&[1, 1]), p(&[2])),
                ("d2", p(&[2]), p(&[4])),
                ("d3", p(&[2]), p(&[2, 2])),
                ("d4", p(&[1, 1]), p(&[3, 1])),
                ("u2", p(&[1, 1, 1, 1]), p(&[1, 1])),
                ("u3", p(&[2, 2]), p(&[1, 1])),
                ("u4", p(&[2, 1, 1]), p(&[2])),
            ],
            &[("d2", "l1"), ("d3", "l1"), ("l1", "u2"), ("u3", "d3"), ("l1", "u3")],
        )
    }

    pub fn c4() -> Self {
        Self::build(
            vec![p(&[]), p(&[2]), p(&[1, 1]), p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])],
            &[
                ("d1", p(&[]), p(&[2])),
                ("u1", p(&[1, 1]), p(&[])),
                ("d2", p(&[2]), p(&[4])),
                ("d3", p(&[2]), p(&[2, 2])),
                ("d4", p(&[1, 1]), p(&[3, 1])),
                ("u2", p(&[1, 1, 1, 1]), p(&[1, 1])),
                ("u3", p(&[2, 2]), p(&[1, 1])),
                ("u4", p(&[2, 1, 1]), p(&[2])),
            ],
            &[("d2", "d1"), ("d3", "d1"), ("u1", "u2"), ("u3", "d3"), ("u1", "u3")],
        )
    }

    /// Every relation names two arrows that compose.
    pub fn is_well_formed(&self) -> bool {
        let find = |n: &str| self.arrows.iter().find(|a| a.name == n);
        self.arrows.iter().all(|a| self.vertices.contains(&a.source) && self.vertices.contains(&a.target))
            && self.relations.iter().all(|(b, a)| matches!((find(b), find(a)), (Some(b), Some(a)) if a.target == b.source))
    }
}

/// `C[i][j]` = number of nonzero paths from vertex `i` to vertex `j`, i.e.
/// `[P(i):L(j)]` for the path algebra modulo the relations.
pub fn quiver_cartan_oracle(q: &QuiverPresentation) -> Result<CartanMatrix> {
    if !q.is_well_formed() {
        return Err(Error::Invalid("relation refers to a missing or non-composable arrow".into()));
    }
    let vidx = |v: &Partition| q.vertices.iter().position(|x| x == v).unwrap();
    let zero: BTreeSet<(usize, usize)> = q
        .relations
        .iter()
        .map(|(b, a)| {
            let f = |n: &str| q.arrows.iter().position(|x| x.name == n).unwrap();
            (f(a), f(b))
        })
        .collect();
    let k = q.vertices.len();
    let mut entries = vec![vec![0u64; k]; k];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 1;
    }
    // paths as (start vertex, last arrow), extended one arrow at a time
    let mut frontier: Vec<(usize, usize)> = q.arrows.iter().enumerate().map(|(a, x)| (vidx(&x.source), a)).collect();
    let cutoff = 4 * (q.arrows.len() + 1);
    let mut len = 1;
    while !frontier.is_empty() {
        if len > cutoff {
            return Err(Error::Budget(format!("nonzero paths longer than {cutoff}: the quotient is infinite-dimensional")));
        }
        for &(s, a) in &frontier {
            entries[s][vidx(&q.arrows[a].target)] += 1;
        }
        frontier = frontier
            .iter()
            .flat_map(|&(s, a)| {
                let t = &q.arrows[a].target;
                q.arrows.iter().enumerate().filter(move |(_, b)| &b.source == t).map(move |(b, _)| (s, a, b))
            })
            .filter(|&(_, a, b)| !zero.contains(&(a, b)))
            .map(|(s, _, b)| (s, b))
            .collect();
        len += 1;
    }
    Ok(CartanMatrix { labels: q.vertices.clone(), entries })
}

/// `dim C_n = Σ_{i,j ∈ J(n)} (i+j-1)!!`.
pub fn cover_dimension(n: usize) -> u64 {
    let js = j_set(n);
    js.iter().flat_map(|&i| js.iter().map(move |&j| diagrams::double_factorial_count(i + j))).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCentralizerReport {
    pub n: usize,
    /// `dim X` for `X = ⊕_{i ∈ J(n)} Hom(i, n)`.
    pub module_dim: usize,
    pub end_dim: usize,
    pub cover_dim: u64,
}

impl DoubleCentralizerReport {
    pub fn equal(&self) -> bool {
        self.end_dim as u64 == self.cover_dim
    }
}

/// `dim End_{A_n}(X)` for `X = ⊕_{i ∈ J(n)} Hom(i, n)` with `A_n` acting by
/// composition on top.
pub fn double_centralizer_check<F: Field>(n: usize) -> DoubleCentralizerReport {
    let basis: Vec<BrauerDiagram> = j_set(n).into_iter().flat_map(|i| diagrams::enumerate(i, n)).collect();
    let index: HashMap<&BrauerDiagram, usize> = basis.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let gens: Vec<SparseMatrix<F>> = algebra::generators(n)
        .par_iter()
        .map(|g| {
            let columns = basis
                .iter()
                .map(|h| match compose(g, h).expect("composable") {
                    Signed::Zero => Vec::new(),
                    Signed::Term { sign, diagram } => vec![(index[&diagram], F::from_i64(sign as i64))],
                })
                .collect();
            SparseMatrix { dim: basis.len(), columns }
        })
        .collect();
    let end_dim = if gens.is_empty() { basis.len() * basis.len() } else { intertwiner_dimension(&gens, &gens) };
    DoubleCentralizerReport { n, module_dim: basis.len(), end_dim, cover_dim: cover_dimension(n) }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaOnSimple {
    pub shape: Partition,
    pub nonzero: bool,
}

/// Whether Θ acts nonzero on each simple module.
pub fn theta_on_simples<F: Field>(data: &ModuleData<F>) -> Vec<ThetaOnSimple> {
    let th = theta::<F>(data.n);
    data.cells
        .iter()
        .zip(&data.simples)
        .filter_map(|(c, s)| s.as_ref().map(|s| (c, s)))
        .map(|(c, s)| ThetaOnSimple { shape: c.shape().clone(), nonzero: !s.quotient(&c.expression_matrix(&th)).is_zero() })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BggReport {
    pub n: usize,
    /// `(λ, dim P(λ), dim L(λ))`.
    pub projectives: Vec<(Partition, u64, u64)>,
    pub sum: u64,
    pub algebra_dim: u64,
}

impl BggReport {
    pub fn holds(&self) -> bool {
        self.sum == self.algebra_dim
    }
}

/// `Σ_λ dim P(λ)·dim L(λ)` with `dim P(λ) = Σ_ν (P(λ):W(ν)) dim W(ν)`.
pub fn bgg_check<F: Field>(data: &ModuleData<F>, d: &DecompositionMatrix) -> BggReport {
    let projectives: Vec<(Partition, u64, u64)> = d
        .cols
        .iter()
        .map(|lam| {
            let dp = d.projective_filtration(lam).iter().map(|(nu, k)| k * data.cell(nu).dim() as u64).sum();
            (lam.clone(), dp, data.simple(lam).expect("simple").dim() as u64)
        })
        .collect();
    let sum = projectives.iter().map(|(_, a, b)| a * b).sum();
    BggReport { n: data.n, projectives, sum, algebra_dim: diagrams::double_factorial_count(2 * data.n) }
}

fn rc(name: String, holds: bool, witness: Option<String>) -> RelationCheck {
    RelationCheck { name, holds, witness }
}

/// The boxes of `big` minus `small` pair up into content-adjacent pairs.
fn pairable(small: &Partition, big: &Partition) -> bool {
    let inner: BTreeSet<_> = small.boxes().into_iter().collect();
    if !inner.iter().all(|&(r, c)| c < big.row(r)) {
        return false;
    }
    let mut cs: Vec<i64> = big.boxes().into_iter().filter(|b| !inner.contains(b)).map(content).collect();
    fn rec(cs: &mut Vec<i64>) -> bool {
        let Some(a) = cs.pop() else { return true };
        for k in 0..cs.len() {
            if (cs[k] - a).abs() == 1 {
                let b = cs.remove(k);
                if rec(cs) {
                    return true;
                }
                cs.insert(k, b);
            }
        }
        cs.push(a);
        false
    }
    rec(&mut cs)
}

/// Structural screens on a decomposition matrix: unitriangularity, the
/// content pairing and content-vector conditions, same-row multiplicities
/// and the multiplicities of `L(μ)` for `μ ⊢ j+2` in `W(j)`, `W(1^j)`.
pub fn decomposition_screens(d: &DecompositionMatrix) -> RelationReport {
    let n = d.n;
    let mut checks = Vec::new();
    let mut bad = Vec::new();
    for lam in &d.rows {
        for mu in &d.cols {
            let m = d.get(lam, mu);
            if (lam == mu && m != 1) || (m > 0 && !lam.dominates(mu)) {
                bad.push(format!("[W{lam}:L{mu}] = {m}"));
            }
        }
    }
    checks.push(rc("unitriangular".into(), bad.is_empty(), bad.first().cloned()));

    let nonzero: Vec<(&Partition, &Partition)> =
        d.rows.iter().flat_map(|l| d.cols.iter().map(move |m| (l, m))).filter(|(l, m)| d.get(l, m) > 0).collect();
    let bad: Vec<String> = nonzero.iter().filter(|(l, m)| !pairable(l, m)).map(|(l, m)| format!("{l} -> {m}")).collect();
    checks.push(rc("λ ⊂ μ with content-adjacent pairs".into(), bad.is_empty(), bad.first().cloned()));

    let vectors: HashMap<&Partition, BTreeSet<Vec<i64>>> = d.rows.iter().map(|l| (l, paths(n, l).iter().map(content_vector).collect())).collect();
    let bad: Vec<String> = nonzero.iter().filter(|(l, m)| vectors[l].is_disjoint(&vectors[m])).map(|(l, m)| format!("{l} -> {m}")).collect();
    checks.push(rc("shared content vector".into(), bad.is_empty(), bad.first().cloned()));

    let mut bad = Vec::new();
    let mut count = 0;
    for lam in &d.rows {
        if lam.size() + 2 > n {
            continue;
        }
        for r in 0..=lam.len() {
            let mut parts = lam.parts().to_vec();
            if r == parts.len() {
                parts.push(0);
            }
            parts[r] += 2;
            if let Ok(mu) = Partition::new(parts) {
                count += 1;
                if d.get(lam, &mu) != 1 {
                    bad.push(format!("[W{lam}:L{mu}] = {}", d.get(lam, &mu)));
                }
            }
        }
    }
    checks.push(rc(format!("two boxes in one row give multiplicity 1 ({count} cases)"), bad.is_empty(), bad.first().cloned()));

    let mut bad = Vec::new();
    for j in (n % 2..=n.saturating_sub(2)).step_by(2) {
        let row = p(&vec![1; j]);
        let single = if j == 0 { Partition::empty() } else { p(&[j]) };
        let mut expect: BTreeMap<Partition, BTreeSet<Partition>> = BTreeMap::new();
        expect.entry(single.clone()).or_default().insert(p(&[j + 2]));
        if j >= 2 {
            expect.entry(single.clone()).or_default().insert(p(&[j, 2]));
        }
        if j >= 1 {
            let mut hook = vec![3];
            hook.extend(std::iter::repeat_n(1, j - 1));
            expect.entry(row.clone()).or_default().insert(p(&hook));
        }
        for (lam, want) in expect {
            for mu in partitions_of(j + 2) {
                let m = d.get(&lam, &mu);
                if m != u64::from(want.contains(&mu)) {
                    bad.push(format!("[W{lam}:L{mu}] = {m}"));
                }
            }
        }
    }
    checks.push(rc("W(j), W(1^j) against partitions of j+2".into(), bad.is_empty(), bad.first().cloned()));
    RelationReport { n, checks }
}

/// Character of `Res_{S_n} W_n(λ)` compared with `Σ χ^ν`, on every permutation.
pub fn restriction_character_matches<F: Field>(n: usize, lambda: &Partition, constituents: &[Partition]) -> Result<bool> {
    let cell = CellModule::<F>::new(n, lambda)?;
    let spechts: Vec<SpechtModule<F>> = constituents.iter().map(SpechtModule::new).collect::<Result<_>>()?;
    let perms = permutations(n);
    Ok(perms.par_iter().all(|w| {
        let lhs = cell.diagram_matrix(&BrauerDiagram::from_permutation(w)).trace();
        let rhs = spechts.iter().fold(F::zero(), |acc, s| acc + s.permutation(w).trace());
        lhs == rhs
    }))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (0..=k).map(move |pos| {
                    let mut v = w.clone();
                    v.insert(pos, k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Symmetric-group restrictions of top-degree cell modules: for `λ ⊢ n-2`
/// the constituents are the `ν` obtained by adding a horizontal 2-strip;
/// for `n = 4, λ = ∅` it is `(3,1)`, for `n = 5, λ = (1)` it is
/// `(4,1) + (3,2) + (3,1,1)`.
pub fn restriction_screens<F: Field>(n: usize) -> Result<RelationReport> {
    let mut checks = Vec::new();
    if n >= 2 {
        for lam in partitions_of(n - 2) {
            let nus = lam.add_strip(2, false);
            let ok = restriction_character_matches::<F>(n, &lam, &nus)?;
            checks.push(rc(format!("Res W{lam} = Σ {nus:?}"), ok, None));
        }
    }
    let extra: Vec<(Partition, Vec<Partition>)> = match n {
        4 => vec![(Partition::empty(), vec![p(&[3, 1])])],
        5 => vec![(p(&[1]), vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1])])],
        _ => Vec::new(),
    };
    for (lam, nus) in extra {
        let ok = restriction_character_matches::<F>(n, &lam, &nus)?;
        checks.push(rc(format!("Res W{lam} = Σ {nus:?}"), ok, None));
    }
    Ok(RelationReport { n, checks })
}

/// Everything computed for one `n`, in serializable form.
#[derive(Clone, Debug, Serialize)]
pub struct RepresentationSummary {
    pub decomposition: DecompositionMatrix,
    pub cartan: CartanMatrix,
    pub blocks: BlockPartition,
}

pub fn summary<F: Field>(n: usize, seed: u64) -> Result<RepresentationSummary> {
    let data = ModuleData::<F>::new(n)?;
    let decomposition = decomposition_matrix(&data, seed)?;
    let cartan = cartan_matrix(&decomposition);
    let blocks = block_partition(&cartan);
    Ok(RepresentationSummary { decomposition, cartan, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn dec(n: usize) -> DecompositionMatrix {
        decomposition_matrix(&ModuleData::<Q>::new(n).unwrap(), 7).unwrap()
    }

    fn factors(d: &DecompositionMatrix, lam: &[usize]) -> Vec<(Partition, u64)> {
        d.factors(&p(lam))
    }

    fn ones(list: &[&[usize]]) -> Vec<(Partition, u64)> {
        let mut v: Vec<_> = list.iter().map(|x| (p(x), 1)).collect();
        v.sort_by_key(|(q, _)| crate::partitions::order_key(q));
        v
    }

    #[test]
    fn small_decompositions() {
        let d2 = dec(2);
        assert_eq!(factors(&d2, &[]), ones(&[&[2]]));
        assert_eq!(factors(&d2, &[2]), ones(&[&[2]]));
        assert_eq!(factors(&d2, &[1, 1]), ones(&[&[1, 1]]));
        let d4 = dec(4);
        assert_eq!(factors(&d4, &[]), ones(&[&[2]]));
        assert_eq!(factors(&d4, &[2]), ones(&[&[2], &[4], &[2, 2]]));
        assert_eq!(factors(&d4, &[1, 1]), ones(&[&[1, 1], &[3, 1]]));
    }

    #[test]
    fn five() {
        let d = dec(5);
        assert_eq!(factors(&d, &[1]), ones(&[&[1], &[3], &[3, 2]]));
        assert_eq!(factors(&d, &[2, 1]), ones(&[&[2, 1], &[4, 1]]));
        assert_eq!(factors(&d, &[3]), ones(&[&[3], &[5], &[3, 2]]));
        assert_eq!(factors(&d, &[1, 1, 1]), ones(&[&[1, 1, 1], &[3, 1, 1]]));
        for lam in partitions_of(5) {
            assert_eq!(d.factors(&lam), vec![(lam.clone(), 1)]);
        }
    }

    #[test]
    fn screens_pass() {
        for n in 1..=5 {
            let r = decomposition_screens(&dec(n));
            assert!(r.all_pass(), "n={n}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn finite_field_agrees() {
        for n in 2..=4 {
            let dp = decomposition_matrix(&ModuleData::<Fp<101>>::new(n).unwrap(), 3).unwrap();
            assert_eq!(dp, dec(n));
        }
    }

    #[test]
    fn sum_rule() {
        for n in 1..=5 {
            let data = ModuleData::<Q>::new(n).unwrap();
            let d = decomposition_matrix(&data, 1).unwrap();
            for lam in &d.rows {
                let total: u64 = d.factors(lam).iter().map(|(mu, k)| k * data.simple(mu).unwrap().dim() as u64).sum();
                assert_eq!(total, data.cell(lam).dim() as u64, "n={n} {lam}");
            }
        }
    }

    #[test]
    fn blocks_are_two_core_fibres() {
        for n in 1..=5 {
            let b = block_partition(&cartan_matrix(&dec(n)));
            assert!(b.matches_two_cores(), "n={n}: {:?}", b.classes);
            assert!(b.gamma_separates());
        }
    }

    #[test]
    fn quiver_oracles() {
        let a2 = quiver_cartan_oracle(&QuiverPresentation::a2()).unwrap();
        assert_eq!(a2.entries, vec![vec![1, 1], vec![0, 1]]);
        let c2 = quiver_cartan_oracle(&QuiverPresentation::c2()).unwrap();
        assert_eq!(c2.total(), 6);
        assert!(QuiverPresentation::a4().is_well_formed());
        let cyclic = QuiverPresentation::build(vec![p(&[1])], &[("a", p(&[1]), p(&[1]))], &[]);
        assert!(quiver_cartan_oracle(&cyclic).is_err());
        let nil = QuiverPresentation::build(vec![p(&[1])], &[("a", p(&[1]), p(&[1]))], &[("a", "a")]);
        assert_eq!(quiver_cartan_oracle(&nil).unwrap().entries, vec![vec![2]]);
    }

    #[test]
    fn cartan_matches_quivers() {
        for (n, q) in [(2, QuiverPresentation::a2()), (3, QuiverPresentation::a3()), (4, QuiverPresentation::a4())] {
            let oracle = quiver_cartan_oracle(&q).unwrap();
            let ours = cartan_matrix(&dec(n)).reorder(&oracle.labels).unwrap();
            assert_eq!(ours, oracle, "n={n}");
        }
        for (n, q) in [(2, QuiverPresentation::c2()), (4, QuiverPresentation::c4())] {
            let oracle = quiver_cartan_oracle(&q).unwrap();
            let ours = cover_cartan_matrix(&dec(n)).reorder(&oracle.labels).unwrap();
            assert_eq!(ours, oracle, "n={n}");
        }
    }

    #[test]
    fn cover_dimensions() {
        assert_eq!(cover_dimension(2), 6);
        assert_eq!(cover_dimension(3), 22);
        assert_eq!(cover_dimension(4), 147);
    }

    #[test]
    fn double_centralizer_small() {
        let r2 = double_centralizer_check::<Q>(2);
        assert_eq!(r2.module_dim, 4);
        assert!(!r2.equal());
        let r3 = double_centralizer_check::<Q>(3);
        assert_eq!(r3.end_dim as u64, cover_dimension(3));
    }

    #[test]
    fn theta_only_on_two_one() {
        for n in 1..=4 {
            let data = ModuleData::<Q>::new(n).unwrap();
            for t in theta_on_simples(&data) {
                assert_eq!(t.nonzero, n == 3 && t.shape == p(&[2, 1]), "n={n} {}", t.shape);
            }
        }
    }

    #[test]
    fn bgg_small() {
        for n in 1..=4 {
            let data = ModuleData::<Q>::new(n).unwrap();
            let d = decomposition_matrix(&data, 0).unwrap();
            let r = bgg_check(&data, &d);
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn symmetric_restrictions() {
        for n in 2..=5 {
            let r = restriction_screens::<Q>(n).unwrap();
            assert!(r.all_pass(), "n={n}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn pairing_helper() {
        assert!(pairable(&p(&[1]), &p(&[3])));
        assert!(pairable(&p(&[1]), &p(&[3, 2]))); // boxes with contents 1,2,-1,0
        assert!(pairable(&p(&[1]), &p(&[1, 1, 1])));
        assert!(!pairable(&p(&[2]), &p(&[1, 1, 1])));
    }
}
