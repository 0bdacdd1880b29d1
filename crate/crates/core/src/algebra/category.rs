use std::collections::BTreeMap;

use super::Expression;
use crate::field::Field;

/// Finite sum of morphisms of `C`, one [`Expression`] per `(source, target)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CategoryElement<F> {
    parts: BTreeMap<(usize, usize), Expression<F>>,
}

impl<F: Field> std::fmt::Debug for CategoryElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.parts.iter()).finish()
    }
}

impl<F: Field> Default for CategoryElement<F> {
    fn default() -> Self {
        CategoryElement { parts: BTreeMap::new() }
    }
}

impl<F: Field> CategoryElement<F> {
    pub fn from_expression(e: Expression<F>) -> Self {
        let mut c = CategoryElement::default();
        c.add(e);
        c
    }

    pub fn add(&mut self, e: Expression<F>) {
        let key = (e.source(), e.target());
        let sum = match self.parts.remove(&key) {
            Some(old) => old.add(&e),
            None => e,
        };
        if !sum.is_zero() {
            self.parts.insert(key, sum);
        }
    }

    pub fn component(&self, source: usize, target: usize) -> Option<&Expression<F>> {
        self.parts.get(&(source, target))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Product with non-composable pairs contributing zero.
    pub fn mul(&self, other: &CategoryElement<F>) -> CategoryElement<F> {
        let mut out = CategoryElement::default();
        for a in self.parts.values() {
            for b in other.parts.values() {
                if a.source() == b.target() {
                    out.add(a.mul(b));
                }
            }
        }
        out
    }
}
