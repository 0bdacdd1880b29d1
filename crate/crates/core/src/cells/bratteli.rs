//! The Bratteli diagram of the tower `A_1 ⊂ A_2 ⊂ ...` and its paths.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::partitions::{content, order_key, partitions_of, Partition};

/// Row `k`: partitions of `k, k-2, ...`; more dominant (in the extended
/// order) to the left.
pub fn bratteli_row(k: usize) -> Vec<Partition> {
    let mut row: Vec<Partition> = (0..=k).filter(|s| (k - s).is_multiple_of(2)).flat_map(partitions_of).collect();
    row.sort_by_key(order_key);
    row
}

/// True if `mu` is obtained from `lambda` by adding or removing one box.
pub fn adjacent(lambda: &Partition, mu: &Partition) -> bool {
    lambda.remove_one().contains(mu) || lambda.add_one().contains(mu)
}

/// Edges between row `k` and row `k + 1`, as `(index in row k, index in row k+1)`.
pub fn bratteli_edges(k: usize) -> Vec<(usize, usize)> {
    let (upper, lower) = (bratteli_row(k), bratteli_row(k + 1));
    let mut out = Vec::new();
    for (a, lam) in upper.iter().enumerate() {
        for (b, mu) in lower.iter().enumerate() {
            if adjacent(lam, mu) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Rows `1..=k` in Graphviz DOT format.
pub fn bratteli_dot(k: usize) -> String {
    let mut s = String::from("digraph bratteli {\n  rankdir=TB;\n");
    for r in 1..=k {
        let row = bratteli_row(r);
        let names: Vec<String> = (0..row.len()).map(|j| format!("\"r{r}_{j}\"")).collect();
        s += &format!("  {{ rank=same; {} }}\n", names.join("; "));
        for (j, p) in row.iter().enumerate() {
            s += &format!("  \"r{r}_{j}\" [label=\"{p}\"];\n");
        }
        if r < k {
            for (a, b) in bratteli_edges(r) {
                s += &format!("  \"r{r}_{a}\" -> \"r{}_{b}\" [arrowhead=none];\n", r + 1);
            }
        }
    }
    s.push_str("}\n");
    s
}

/// A path `(t^(1), ..., t^(n))` with `t^(1) = (1)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BratteliPath(pub Vec<Partition>);

impl fmt::Debug for BratteliPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BratteliPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl BratteliPath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `t^(l)`, 1-based.
    pub fn at(&self, l: usize) -> &Partition {
        &self.0[l - 1]
    }

    pub fn end(&self) -> &Partition {
        self.0.last().expect("nonempty path")
    }

    /// `t'`: the path with its last vertex removed.
    pub fn prefix(&self) -> BratteliPath {
        BratteliPath(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn is_valid(&self) -> bool {
        self.0.first() == Some(&Partition::of(&[1])) && self.0.windows(2).all(|w| adjacent(&w[0], &w[1]))
    }
}

/// Linear extension of the path order: at the last differing vertex, the
/// more dominant partition comes first.
pub fn path_cmp(s: &BratteliPath, t: &BratteliPath) -> Ordering {
    for (a, b) in s.0.iter().zip(&t.0).rev() {
        if a != b {
            return order_key(a).cmp(&order_key(b));
        }
    }
    Ordering::Equal
}

/// `s ▷ t`: at the last vertex where they differ, `s` strictly dominates `t`.
pub fn path_dominates(s: &BratteliPath, t: &BratteliPath) -> bool {
    for (a, b) in s.0.iter().zip(&t.0).rev() {
        if a != b {
            return a.strictly_dominates(b);
        }
    }
    false
}

/// `St_n(λ)`, sorted by [`path_cmp`].
pub fn paths(n: usize, lambda: &Partition) -> Vec<BratteliPath> {
    fn rec(n: usize, cur: &mut Vec<Partition>, target: &Partition, out: &mut Vec<BratteliPath>) {
        let l = cur.len();
        let last = cur.last().unwrap().clone();
        if l == n {
            if &last == target {
                out.push(BratteliPath(cur.clone()));
            }
            return;
        }
        // the target must stay reachable in the remaining steps
        let left = n - l;
        let mut next = last.remove_one();
        next.extend(last.add_one());
        for p in next {
            let d = p.size().abs_diff(target.size());
            if d < left && (left - 1 - d).is_multiple_of(2) {
                cur.push(p);
                rec(n, cur, target, out);
                cur.pop();
            }
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(n, &mut vec![Partition::of(&[1])], lambda, &mut out);
    out.sort_by(path_cmp);
    out
}

/// `(c_t(2), ..., c_t(n))`: the content of an added box, or the content plus
/// one of a removed box.
pub fn content_vector(t: &BratteliPath) -> Vec<i64> {
    t.0.windows(2)
        .map(|w| {
            let (a, b) = (&w[0], &w[1]);
            if b.size() > a.size() {
                content(added_box(a, b))
            } else {
                content(added_box(b, a)) + 1
            }
        })
        .collect()
}

/// The box of `big` not in `small`.
fn added_box(small: &Partition, big: &Partition) -> (usize, usize) {
    let r = (0..big.len()).find(|&r| big.row(r) != small.row(r)).expect("partitions differ");
    (r, small.row(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::CellModule;
    use crate::field::Rational;
    use crate::partitions::cell_labels;
    use crate::specht::standard_tableaux;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn rows() {
        assert_eq!(bratteli_row(1), vec![p(&[1])]);
        assert_eq!(bratteli_row(2), vec![p(&[]), p(&[2]), p(&[1, 1])]);
        assert_eq!(bratteli_row(4), vec![p(&[]), p(&[2]), p(&[1, 1]), p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(bratteli_edges(1), vec![(0, 0), (0, 1), (0, 2)]);
        // (2,1) on row 3 meets (2), (1,1), (3,1), (2,2), (2,1,1)
        let r3 = bratteli_row(3);
        let k = r3.iter().position(|x| *x == p(&[2, 1])).unwrap();
        assert_eq!(bratteli_edges(3).iter().filter(|e| e.0 == k).count(), 5);
    }

    #[test]
    fn rows_respect_dominance() {
        for k in 1..=6 {
            let row = bratteli_row(k);
            for (a, x) in row.iter().enumerate() {
                for y in &row[..a] {
                    assert!(!x.strictly_dominates(y), "{x} left of {y}");
                }
            }
        }
    }

    #[test]
    fn worked_content_vector() {
        let t = BratteliPath(vec![p(&[1]), p(&[2]), p(&[1]), p(&[1, 1])]);
        assert!(t.is_valid());
        assert_eq!(content_vector(&t), vec![1, 2, -1]);
        assert_eq!(content_vector(&BratteliPath(vec![p(&[1]), p(&[2]), p(&[3])])), vec![1, 2]);
    }

    #[test]
    fn path_counts_match_cell_dimensions() {
        for n in 1..=6 {
            for lam in cell_labels(n) {
                let ps = paths(n, &lam);
                assert!(ps.iter().all(BratteliPath::is_valid));
                assert_eq!(ps.len(), CellModule::<Rational>::new(n, &lam).unwrap().dim(), "n={n} {lam}");
            }
        }
    }

    #[test]
    fn growing_paths_are_tableaux() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                let mut from_paths: Vec<Vec<i64>> = paths(n, &lam).iter().map(content_vector).collect();
                let mut from_tableaux: Vec<Vec<i64>> = standard_tableaux(&lam).iter().map(|t| t.contents()[1..].to_vec()).collect();
                from_paths.sort();
                from_tableaux.sort();
                assert_eq!(from_paths, from_tableaux);
            }
        }
    }

    #[test]
    fn sorted_order_extends_dominance() {
        let ps = paths(5, &p(&[1]));
        for (a, s) in ps.iter().enumerate() {
            for t in &ps[..a] {
                assert!(!path_dominates(s, t));
            }
        }
    }
}
