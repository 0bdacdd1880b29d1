//! Linear combinations of diagrams: the algebras `A_n` and the category `C`.

mod category;
pub mod relations;

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use category::CategoryElement;

use crate::diagrams::{self, bar_transposition, compose, flip, transposition, BrauerDiagram, Signed};
use crate::error::Error;
use crate::field::Field;

/// Element of `Hom(source, target)`: diagrams with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Expression<F> {
    source: usize,
    target: usize,
    terms: BTreeMap<BrauerDiagram, F>,
}

impl<F: Field> fmt::Debug for Expression<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c}) {d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> Expression<F> {
    pub fn zero(source: usize, target: usize) -> Self {
        Expression { source, target, terms: BTreeMap::new() }
    }

    pub fn diagram(d: &BrauerDiagram) -> Self {
        Expression::term(d, F::one())
    }

    pub fn term(d: &BrauerDiagram, c: F) -> Self {
        let mut e = Expression::zero(d.source(), d.target());
        e.add_term(d, c);
        e
    }

    pub fn from_signed(s: &Signed, source: usize, target: usize) -> Self {
        match s {
            Signed::Zero => Expression::zero(source, target),
            Signed::Term { sign, diagram } => Expression::term(diagram, F::from_i64(*sign as i64)),
        }
    }

    pub fn identity(n: usize) -> Self {
        Expression::diagram(&BrauerDiagram::identity(n))
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &BrauerDiagram) -> F {
        self.terms.get(d).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, d: &BrauerDiagram, c: F) {
        assert_eq!((d.source(), d.target()), (self.source, self.target), "term shape");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(d) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(d);
                }
            }
            None => {
                self.terms.insert(d.clone(), c);
            }
        }
    }

    pub fn add(&self, other: &Expression<F>) -> Expression<F> {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Expression<F>) -> Expression<F> {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Expression<F> {
        self.scale(&-F::one())
    }

    pub fn scale(&self, s: &F) -> Expression<F> {
        let mut out = Expression::zero(self.source, self.target);
        if s.is_zero() {
            return out;
        }
        for (d, c) in &self.terms {
            out.terms.insert(d.clone(), c.clone() * s.clone());
        }
        out
    }

    /// `self ∘ other` (`other` applied first).
    pub fn compose(&self, other: &Expression<F>) -> Result<Expression<F>, Error> {
        if self.source != other.target {
            return Err(Error::NotComposable(format!("{} -> {} after {} -> {}", self.source, self.target, other.source, other.target)));
        }
        let mut out = Expression::zero(other.source, self.target);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                if let Signed::Term { sign, diagram } = compose(d1, d2)? {
                    let c = c1.clone() * c2.clone();
                    out.add_term(&diagram, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Product in `A_n`; panics on shape mismatch.
    pub fn mul(&self, other: &Expression<F>) -> Expression<F> {
        self.compose(other).expect("composable expressions")
    }

    pub fn pow(&self, k: u32) -> Expression<F> {
        assert_eq!(self.source, self.target);
        let mut acc = Expression::identity(self.source);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `a ↦ a ⊗ I_k`, the embedding `A_n ⊂ A_{n+k}`.
    pub fn extend_right(&self, k: usize) -> Expression<F> {
        let id = BrauerDiagram::identity(k);
        let mut out = Expression::zero(self.source + k, self.target + k);
        for (d, c) in &self.terms {
            out.terms.insert(d.tensor(&id), c.clone());
        }
        out
    }

    pub fn flip(&self) -> Expression<F> {
        let mut out = Expression::zero(self.target, self.source);
        for (d, c) in &self.terms {
            if let Signed::Term { sign, diagram } = flip(d) {
                out.add_term(&diagram, if sign < 0 { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Commutator `self other - other self`.
    pub fn commutator(&self, other: &Expression<F>) -> Expression<F> {
        self.mul(other).sub(&other.mul(self))
    }
}

/// The Jucys–Murphy element `x_i = Σ_{j<i} ((j,i) + bar(j,i))` of `A_n`.
pub fn jm<F: Field>(i: usize, n: usize) -> Expression<F> {
    assert!(1 <= i && i <= n);
    let mut e = Expression::zero(n, n);
    for j in 1..i {
        e.add_term(&transposition(i, j, n), F::one());
        e.add_term(&bar_transposition(i, j, n), F::one());
    }
    e
}

/// `Θ = Π_{2≤i<j≤n} (1 - (x_i - x_j)^2)`, and `Θ = 0` for `n = 2`.
pub fn theta<F: Field>(n: usize) -> Expression<F> {
    if n <= 2 {
        return Expression::zero(n, n);
    }
    let one = Expression::<F>::identity(n);
    let xs: Vec<Expression<F>> = (1..=n).map(|i| jm(i, n)).collect();
    let mut acc = one.clone();
    for i in 2..=n {
        for j in i + 1..=n {
            let d = xs[i - 1].sub(&xs[j - 1]);
            acc = acc.mul(&one.sub(&d.mul(&d)));
        }
    }
    acc
}

/// Basis diagrams of `A_n`.
pub fn basis(n: usize) -> Vec<BrauerDiagram> {
    diagrams::enumerate(n, n)
}

/// Generators `s_1..s_{n-1}, ε_1..ε_{n-1}` of `A_n`.
pub fn generators(n: usize) -> Vec<BrauerDiagram> {
    let mut g: Vec<BrauerDiagram> = (1..n).map(|k| diagrams::s(k, n)).collect();
    g.extend((1..n).map(|k| diagrams::epsilon(k, n)));
    g
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    diagram: BrauerDiagram,
}

impl<F: Field> Serialize for Expression<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self.terms.iter().map(|(d, c)| TermJson { coeff: c.to_string(), diagram: d.clone() }).collect();
        terms.serialize(s)
    }
}

impl<F: Field> Expression<F> {
    /// Parse the JSON term list; `source`/`target` are needed for the empty sum.
    pub fn from_json(v: &serde_json::Value, source: usize, target: usize) -> Result<Self, Error> {
        let terms: Vec<TermJson> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Expression::zero(source, target);
        for t in terms {
            let c = F::parse(&t.coeff).ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if (t.diagram.source(), t.diagram.target()) != (source, target) {
                return Err(Error::Parse(format!("term {} is not in Hom({source},{target})", t.diagram)));
            }
            out.add_term(&t.diagram, c);
        }
        Ok(out)
    }
}

impl<'de, F: Field> Deserialize<'de> for Expression<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let first = v.as_array().and_then(|a| a.first()).ok_or_else(|| D::Error::custom("empty expression needs an explicit shape"))?;
        let dg: BrauerDiagram = serde_json::from_value(first["diagram"].clone()).map_err(D::Error::custom)?;
        Expression::from_json(&v, dg.source(), dg.target()).map_err(D::Error::custom)
    }
}
