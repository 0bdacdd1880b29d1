//! Brauer diagrams with their standard marking, signed composition, tensor
//! product and the flip anti-involution.

mod named;
mod sign;
mod word;

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use named::*;
pub use sign::{compose_with, gamma_by_simulation, CancelStrategy};
pub use word::{canonical_word, evaluate_word, flip, Generator, GeneratorKind};

use crate::error::Error;

/// A dot of a diagram: bottom (source) or top (target), 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dot {
    Bottom(usize),
    Top(usize),
}

impl fmt::Display for Dot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dot::Bottom(k) => write!(f, "B{k}"),
            Dot::Top(k) => write!(f, "T{k}"),
        }
    }
}

impl std::str::FromStr for Dot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad dot label {s:?}"));
        let (kind, num) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let k: usize = num.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match kind {
            "B" => Ok(Dot::Bottom(k)),
            "T" => Ok(Dot::Top(k)),
            _ => Err(bad()),
        }
    }
}

/// A Brauer diagram `source -> target`: a perfect matching of
/// `source + target` dots. Index `b < source` is bottom dot `b+1`; index
/// `source + t` is top dot `t+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    source: usize,
    target: usize,
    partner: Vec<u8>,
}

/// Outcome of composing two diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Signed {
    /// A closed loop appeared.
    Zero,
    Term {
        sign: i8,
        diagram: BrauerDiagram,
    },
}

impl Signed {
    pub fn is_zero(&self) -> bool {
        matches!(self, Signed::Zero)
    }

    pub fn sign(&self) -> i8 {
        match self {
            Signed::Zero => 0,
            Signed::Term { sign, .. } => *sign,
        }
    }

    pub fn diagram(&self) -> Option<&BrauerDiagram> {
        match self {
            Signed::Zero => None,
            Signed::Term { diagram, .. } => Some(diagram),
        }
    }

    pub fn negate(self) -> Signed {
        match self {
            Signed::Zero => Signed::Zero,
            Signed::Term { sign, diagram } => Signed::Term { sign: -sign, diagram },
        }
    }

    /// `self ∘ other`, multiplying the signs.
    pub fn then_under(self, lower: Signed) -> Result<Signed, Error> {
        match (self, lower) {
            (Signed::Term { sign: s1, diagram: d1 }, Signed::Term { sign: s2, diagram: d2 }) => Ok(match compose(&d1, &d2)? {
                Signed::Zero => Signed::Zero,
                Signed::Term { sign, diagram } => Signed::Term { sign: sign * s1 * s2, diagram },
            }),
            _ => Ok(Signed::Zero),
        }
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}[", self.source, self.target)?;
        for (k, (a, b)) in self.pairs().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "]")
    }
}

impl BrauerDiagram {
    /// Build from explicit pairs of dots.
    pub fn new(source: usize, target: usize, pairs: &[(Dot, Dot)]) -> Result<Self, Error> {
        let total = source + target;
        if total % 2 == 1 {
            return Err(Error::InvalidDiagram(format!("{source}+{target} dots cannot be perfectly matched")));
        }
        if total > u8::MAX as usize {
            return Err(Error::InvalidDiagram("too many dots".into()));
        }
        let idx = |d: Dot| -> Result<usize, Error> {
            match d {
                Dot::Bottom(k) if k >= 1 && k <= source => Ok(k - 1),
                Dot::Top(k) if k >= 1 && k <= target => Ok(source + k - 1),
                _ => Err(Error::InvalidDiagram(format!("dot {d} out of range for {source}->{target}"))),
            }
        };
        let mut partner = vec![u8::MAX; total];
        for &(a, b) in pairs {
            let (x, y) = (idx(a)?, idx(b)?);
            if x == y || partner[x] != u8::MAX || partner[y] != u8::MAX {
                return Err(Error::InvalidDiagram(format!("dot used twice in pair {a}-{b}")));
            }
            partner[x] = y as u8;
            partner[y] = x as u8;
        }
        if partner.contains(&u8::MAX) {
            return Err(Error::InvalidDiagram("not every dot is matched".into()));
        }
        Ok(BrauerDiagram { source, target, partner })
    }

    /// Build from 0-based dot indices.
    pub fn from_partner(source: usize, target: usize, partner: Vec<u8>) -> Self {
        debug_assert_eq!(partner.len(), source + target);
        debug_assert!(partner.iter().enumerate().all(|(x, &y)| partner[y as usize] as usize == x && y as usize != x));
        BrauerDiagram { source, target, partner }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Partner of dot index `x` (0-based, bottoms first).
    pub fn partner(&self, x: usize) -> usize {
        self.partner[x] as usize
    }

    pub fn partner_slice(&self) -> &[u8] {
        &self.partner
    }

    pub fn dot(&self, x: usize) -> Dot {
        if x < self.source {
            Dot::Bottom(x + 1)
        } else {
            Dot::Top(x - self.source + 1)
        }
    }

    /// Canonical sorted list of pairs.
    pub fn pairs(&self) -> Vec<(Dot, Dot)> {
        (0..self.partner.len()).filter(|&x| x < self.partner(x)).map(|x| (self.dot(x), self.dot(self.partner(x)))).collect()
    }

    /// Caps as 0-based bottom positions `(p, q)`, `p < q`, sorted by `p`.
    pub fn caps(&self) -> Vec<(usize, usize)> {
        (0..self.source).filter(|&x| x < self.partner(x) && self.partner(x) < self.source).map(|x| (x, self.partner(x))).collect()
    }

    /// Cups as 0-based top positions `(p, q)`, `p < q`, sorted by `p`.
    pub fn cups(&self) -> Vec<(usize, usize)> {
        let s = self.source;
        (s..s + self.target).filter(|&x| x < self.partner(x)).map(|x| (x - s, self.partner(x) - s)).collect()
    }

    /// Propagating lines as 0-based `(bottom, top)`, sorted by bottom.
    pub fn propagating(&self) -> Vec<(usize, usize)> {
        (0..self.source).filter(|&x| self.partner(x) >= self.source).map(|x| (x, self.partner(x) - self.source)).collect()
    }

    pub fn num_propagating(&self) -> usize {
        (0..self.source).filter(|&x| self.partner(x) >= self.source).count()
    }

    pub fn num_cups(&self) -> usize {
        (self.target - self.num_propagating()) / 2
    }

    pub fn num_caps(&self) -> usize {
        (self.source - self.num_propagating()) / 2
    }

    /// Parity as a morphism of the supercategory.
    pub fn parity(&self) -> usize {
        (self.num_cups() + self.num_caps()) % 2
    }

    /// The permutation `w` with bottom `b` joined to top `w[b]`, if the
    /// diagram has no cups or caps.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.source != self.target || self.num_propagating() != self.source {
            return None;
        }
        Some((0..self.source).map(|b| self.partner(b) - self.source).collect())
    }

    pub fn from_permutation(w: &[usize]) -> Self {
        let n = w.len();
        let mut partner = vec![0u8; 2 * n];
        for (b, &t) in w.iter().enumerate() {
            partner[b] = (n + t) as u8;
            partner[n + t] = b as u8;
        }
        BrauerDiagram::from_partner(n, n, partner)
    }

    pub fn identity(n: usize) -> Self {
        BrauerDiagram::from_permutation(&(0..n).collect::<Vec<_>>())
    }

    /// Place `other` to the right of `self`.
    pub fn tensor(&self, other: &BrauerDiagram) -> BrauerDiagram {
        let (s1, t1, s2, t2) = (self.source, self.target, other.source, other.target);
        let map1 = |x: usize| if x < s1 { x } else { s1 + s2 + (x - s1) };
        let map2 = |x: usize| if x < s2 { s1 + x } else { s1 + s2 + t1 + (x - s2) };
        let mut partner = vec![0u8; s1 + s2 + t1 + t2];
        for x in 0..s1 + t1 {
            partner[map1(x)] = map1(self.partner(x)) as u8;
        }
        for x in 0..s2 + t2 {
            partner[map2(x)] = map2(other.partner(x)) as u8;
        }
        BrauerDiagram::from_partner(s1 + s2, t1 + t2, partner)
    }

    /// Reflection in a horizontal line (no sign).
    pub fn mirror(&self) -> BrauerDiagram {
        let (s, t) = (self.source, self.target);
        let map = |x: usize| if x < s { t + x } else { x - s };
        let mut partner = vec![0u8; s + t];
        for x in 0..s + t {
            partner[map(x)] = map(self.partner(x)) as u8;
        }
        BrauerDiagram::from_partner(t, s, partner)
    }

    /// True if the diagram has no caps and its propagating lines do not cross.
    pub fn is_cup_half(&self) -> bool {
        self.num_caps() == 0 && self.propagating().windows(2).all(|w| w[0].1 < w[1].1)
    }

    /// Factor a cap-free diagram as `half ∘ w` with `half` a cup half-diagram
    /// and `w` a permutation (given as `w[b] = image`). The sign is always `+1`.
    pub fn split_cup_half(&self) -> Option<(BrauerDiagram, Vec<usize>)> {
        if self.num_caps() != 0 {
            return None;
        }
        let props = self.propagating();
        let mut tops: Vec<usize> = props.iter().map(|&(_, t)| t).collect();
        tops.sort_unstable();
        let w: Vec<usize> = props.iter().map(|&(_, t)| tops.binary_search(&t).unwrap()).collect();
        let s = self.source;
        let mut partner = self.partner.clone();
        for (k, &t) in tops.iter().enumerate() {
            partner[k] = (s + t) as u8;
            partner[s + t] = k as u8;
        }
        Some((BrauerDiagram::from_partner(s, self.target, partner), w))
    }
}

/// All diagrams `i -> j`, in a fixed deterministic order.
pub fn enumerate(i: usize, j: usize) -> Vec<BrauerDiagram> {
    let total = i + j;
    if total % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut partner = vec![u8::MAX; total];
    fn rec(i: usize, j: usize, partner: &mut Vec<u8>, out: &mut Vec<BrauerDiagram>) {
        let Some(x) = partner.iter().position(|&p| p == u8::MAX) else {
            out.push(BrauerDiagram::from_partner(i, j, partner.clone()));
            return;
        };
        for y in x + 1..partner.len() {
            if partner[y] == u8::MAX {
                partner[x] = y as u8;
                partner[y] = x as u8;
                rec(i, j, partner, out);
                partner[x] = u8::MAX;
                partner[y] = u8::MAX;
            }
        }
    }
    rec(i, j, &mut partner, &mut out);
    out
}

/// `(m-1)!!` for even `m`, the number of diagrams with `m` dots.
pub fn double_factorial_count(dots: usize) -> u64 {
    if dots % 2 == 1 {
        return 0;
    }
    (1..dots as u64).step_by(2).product::<u64>().max(1)
}

/// Compose `d1 ∘ d2` (`d2` below, `d1` on top).
pub fn compose(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<Signed, Error> {
    compose_with(d1, d2, CancelStrategy::FromStart)
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    source: usize,
    target: usize,
    pairs: Vec<(String, String)>,
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson {
            source: self.source,
            target: self.target,
            pairs: self.pairs().into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.pairs.len());
        for (a, b) in &raw.pairs {
            let a: Dot = a.parse().map_err(D::Error::custom)?;
            let b: Dot = b.parse().map_err(D::Error::custom)?;
            pairs.push((a, b));
        }
        BrauerDiagram::new(raw.source, raw.target, &pairs).map_err(D::Error::custom)
    }
}

impl Serialize for Signed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Signed::Zero => serde_json::json!({ "zero": true }).serialize(s),
            Signed::Term { sign, diagram } => {
                let mut v = serde_json::to_value(diagram).map_err(serde::ser::Error::custom)?;
                v["sign"] = serde_json::json!(sign);
                v.serialize(s)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_space_sizes() {
        for (i, j, n) in [(0, 2, 1), (2, 2, 3), (3, 3, 15), (0, 6, 15), (1, 5, 15), (5, 5, 945)] {
            assert_eq!(enumerate(i, j).len(), n);
            assert_eq!(double_factorial_count(i + j), n as u64);
        }
        assert!(enumerate(1, 2).is_empty());
    }

    #[test]
    fn json_roundtrip() {
        let d = BrauerDiagram::new(2, 4, &[(Dot::Bottom(1), Dot::Top(3)), (Dot::Bottom(2), Dot::Top(4)), (Dot::Top(1), Dot::Top(2))]).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"source":2,"target":4,"pairs":[["B1","T3"],["B2","T4"],["T1","T2"]]}"#);
        let back: BrauerDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<BrauerDiagram>(r#"{"source":1,"target":1,"pairs":[["B1","T2"]]}"#).is_err());
    }

    #[test]
    fn mirror_and_tensor() {
        let d = epsilon(1, 3);
        assert_eq!(d.mirror(), d);
        let t = BrauerDiagram::identity(1).tensor(&cup());
        assert_eq!(t.source(), 1);
        assert_eq!(t.cups(), vec![(1, 2)]);
    }

    #[test]
    fn cup_half_split() {
        for d in enumerate(2, 4) {
            if let Some((half, w)) = d.split_cup_half() {
                assert!(half.is_cup_half());
                let back = compose(&half, &BrauerDiagram::from_permutation(&w)).unwrap();
                assert_eq!(back, Signed::Term { sign: 1, diagram: d.clone() });
            }
        }
    }
}
