//! Integer partitions, the extended dominance order and 2-cores.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition, stored as its nonincreasing list of nonzero parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// A box `(row, col)`, both 0-based.
pub type Cell = (usize, usize);

impl TryFrom<Vec<usize>> for Partition {
    type Error = String;
    fn try_from(parts: Vec<usize>) -> Result<Self, String> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Partition {
    /// Build from parts. Trailing zeros are dropped; the rest must be nonincreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, String> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("parts {parts:?} are not nonincreasing"));
        }
        if parts.contains(&0) {
            return Err(format!("parts {parts:?} contain an interior zero"));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length, 0 past the last row.
    pub fn row(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.row(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    pub fn boxes(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                out.push((r, c));
            }
        }
        out
    }

    /// Boxes whose removal leaves a partition.
    pub fn removable(&self) -> Vec<Cell> {
        (0..self.len()).filter(|&r| self.row(r) > self.row(r + 1)).map(|r| (r, self.row(r) - 1)).collect()
    }

    /// Boxes whose addition gives a partition.
    pub fn addable(&self) -> Vec<Cell> {
        (0..=self.len()).filter(|&r| r == 0 || self.row(r - 1) > self.row(r)).map(|r| (r, self.row(r))).collect()
    }

    pub fn remove_box(&self, cell: Cell) -> Partition {
        let mut parts = self.0.clone();
        assert_eq!(parts[cell.0], cell.1 + 1, "box {cell:?} is not removable");
        parts[cell.0] -= 1;
        Partition::new(parts).expect("box is not removable")
    }

    pub fn add_box(&self, cell: Cell) -> Partition {
        let mut parts = self.0.clone();
        if cell.0 == parts.len() {
            parts.push(0);
        }
        assert_eq!(parts[cell.0], cell.1, "box {cell:?} is not addable");
        parts[cell.0] += 1;
        Partition::new(parts).expect("box is not addable")
    }

    /// Partitions obtained by removing one box (the set ℛ(λ)).
    pub fn remove_one(&self) -> Vec<Partition> {
        self.removable().into_iter().map(|b| self.remove_box(b)).collect()
    }

    /// Partitions obtained by adding one box (the set 𝒜(λ)).
    pub fn add_one(&self) -> Vec<Partition> {
        self.addable().into_iter().map(|b| self.add_box(b)).collect()
    }

    /// Contents `col - row` of all boxes, as a sorted multiset.
    pub fn content_multiset(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.boxes().into_iter().map(content).collect();
        v.sort_unstable();
        v
    }

    /// Sum of all contents.
    pub fn content_sum(&self) -> i64 {
        self.boxes().into_iter().map(content).sum()
    }

    /// Number of even-content boxes minus the number of odd-content boxes.
    pub fn gamma(&self) -> i64 {
        self.boxes().into_iter().map(|b| if content(b).rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }

    /// The 2-core, obtained by stripping dominoes (always a staircase).
    pub fn two_core(&self) -> Partition {
        // two-runner abacus on beta numbers
        let n = self.len();
        let mut beta: Vec<usize> = (0..n).map(|k| self.row(k) + (n - 1 - k)).collect();
        loop {
            let mut moved = false;
            beta.sort_unstable();
            for idx in 0..beta.len() {
                let b = beta[idx];
                if b >= 2 && !beta.contains(&(b - 2)) {
                    beta[idx] = b - 2;
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = beta.iter().enumerate().map(|(k, &b)| b - (n - 1 - k)).collect();
        Partition::new(parts).expect("abacus produced a partition")
    }

    /// Partial sums, padded with the total to the requested length.
    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|k| {
                acc += self.row(k);
                acc
            })
            .collect()
    }

    /// Classical dominance between partitions of the same size.
    pub fn dominates_same_size(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let len = self.len().max(other.len());
        let a = self.partial_sums(len);
        let b = other.partial_sums(len);
        a.iter().zip(&b).all(|(x, y)| x >= y)
    }

    /// Extended order: `other ⊴ self`. Smaller partitions are higher.
    pub fn dominates(&self, other: &Partition) -> bool {
        match other.size().cmp(&self.size()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.dominates_same_size(other),
        }
    }

    /// `other ◁ self` in the extended order.
    pub fn strictly_dominates(&self, other: &Partition) -> bool {
        self != other && self.dominates(other)
    }

    /// Ways to add a horizontal (`vertical = false`) or vertical strip of `k` boxes.
    pub fn add_strip(&self, k: usize, vertical: bool) -> Vec<Partition> {
        let base = if vertical { self.transpose() } else { self.clone() };
        let mut out = Vec::new();
        let rows = base.len() + 1;
        let mut add = vec![0usize; rows];
        fn rec(base: &Partition, r: usize, left: usize, add: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if r == add.len() {
                if left == 0 {
                    let parts: Vec<usize> = (0..add.len()).map(|i| base.row(i) + add[i]).collect();
                    out.push(Partition::new(parts).expect("strip"));
                }
                return;
            }
            // a horizontal strip may add at most row(r-1) - row(r) boxes to row r
            let cap = if r == 0 { left } else { (base.row(r - 1) - base.row(r)).min(left) };
            for a in (0..=cap).rev() {
                add[r] = a;
                rec(base, r + 1, left - a, add, out);
            }
            add[r] = 0;
        }
        rec(&base, 0, k, &mut add, &mut out);
        if vertical {
            out = out.into_iter().map(|p| p.transpose()).collect();
        }
        out.sort_by_key(order_key);
        out
    }
}

/// `col - row` of a box.
pub fn content(cell: Cell) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// Key giving the display order used throughout: smaller size first, then
/// reverse lexicographic (more dominant first) within a size.
pub fn order_key(p: &Partition) -> (usize, std::cmp::Reverse<Vec<usize>>) {
    (p.size(), std::cmp::Reverse(p.0.clone()))
}

/// All partitions of `k`, most dominant first (reverse lexicographic).
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=left.min(max)).rev() {
            cur.push(part);
            rec(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Staircase partition `(k, k-1, ..., 1)`.
pub fn staircase(k: usize) -> Partition {
    Partition((1..=k).rev().collect())
}

/// Sizes `n, n-2, ...` down to 0 or 1.
pub fn j_set(n: usize) -> Vec<usize> {
    (0..=n).rev().filter(|i| (n - i).is_multiple_of(2)).collect()
}

/// Labels of cell modules of `A_n`: all partitions of `i` for `i` in `J(n)`.
pub fn cell_labels(n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = j_set(n).into_iter().flat_map(partitions_of).collect();
    out.sort_by_key(order_key);
    out
}

/// Labels of simple modules of `A_n`: [`cell_labels`] without `∅` when `n` is even.
pub fn simple_labels(n: usize) -> Vec<Partition> {
    cell_labels(n).into_iter().filter(|p| !p.is_empty()).collect()
}

/// Number of standard tableaux, by the hook length formula.
pub fn num_standard_tableaux(p: &Partition) -> u64 {
    let t = p.transpose();
    let mut hooks: u128 = 1;
    for (r, c) in p.boxes() {
        hooks *= (p.row(r) - c + t.row(c) - r - 1) as u128;
    }
    let mut fact: u128 = 1;
    for k in 2..=p.size() as u128 {
        fact *= k;
    }
    (fact / hooks) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_of_staircases() {
        for i in 1..6 {
            assert_eq!(staircase(2 * i - 1).gamma(), i as i64);
            assert_eq!(staircase(2 * i).gamma(), -(i as i64));
        }
        assert_eq!(Partition::empty().gamma(), 0);
    }

    #[test]
    fn two_cores() {
        assert_eq!(Partition::of(&[2]).two_core(), Partition::empty());
        assert_eq!(Partition::of(&[3]).two_core(), Partition::of(&[1]));
        assert_eq!(Partition::of(&[2, 1]).two_core(), Partition::of(&[2, 1]));
        assert_eq!(Partition::of(&[3, 2]).two_core(), Partition::of(&[1]));
        assert_eq!(Partition::of(&[3, 1, 1]).two_core(), Partition::of(&[1]));
        assert_eq!(Partition::of(&[3, 2, 1]).two_core(), Partition::of(&[3, 2, 1]));
    }

    #[test]
    fn extended_order() {
        let e = Partition::empty();
        let two = Partition::of(&[2]);
        let oneone = Partition::of(&[1, 1]);
        assert!(e.dominates(&two));
        assert!(two.dominates(&oneone));
        assert!(!oneone.dominates(&two));
        assert!(!Partition::of(&[3, 1, 1, 1]).dominates(&Partition::of(&[2, 2, 2])));
        assert!(!Partition::of(&[2, 2, 2]).dominates(&Partition::of(&[3, 1, 1, 1])));
    }

    #[test]
    fn pieri_strips() {
        let h = Partition::of(&[1]).add_strip(2, false);
        assert_eq!(h, vec![Partition::of(&[3]), Partition::of(&[2, 1])]);
        let v = Partition::of(&[1]).add_strip(2, true);
        assert_eq!(v, vec![Partition::of(&[2, 1]), Partition::of(&[1, 1, 1])]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(num_standard_tableaux(&Partition::of(&[3, 2])), 5);
        assert_eq!(num_standard_tableaux(&Partition::empty()), 1);
        let total: u64 = partitions_of(5).iter().map(|p| num_standard_tableaux(p).pow(2)).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn json_shape() {
        let p = Partition::of(&[3, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
        let e: Partition = serde_json::from_str("[]").unwrap();
        assert!(e.is_empty());
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
