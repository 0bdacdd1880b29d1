//! Generator words realising a diagram with its standard marking.

use super::{BrauerDiagram, Signed};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `∪`, two new top dots.
    Cup,
    /// `∩`, right-handed.
    Cap,
    /// Crossing `X`.
    Cross,
}

/// A generator acting on strands `pos, pos + 1` of a layer with `width`
/// strands at its bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub pos: usize,
    pub width: usize,
}

impl Generator {
    pub fn output_width(&self) -> usize {
        match self.kind {
            GeneratorKind::Cup => self.width + 2,
            GeneratorKind::Cap => self.width - 2,
            GeneratorKind::Cross => self.width,
        }
    }

    pub fn diagram(&self) -> BrauerDiagram {
        let (w, p) = (self.width, self.pos);
        let ow = self.output_width();
        let mut partner = vec![0u8; w + ow];
        let mut link = |a: usize, b: usize| {
            partner[a] = b as u8;
            partner[b] = a as u8;
        };
        match self.kind {
            GeneratorKind::Cup => {
                for k in 0..w {
                    link(k, w + if k < p { k } else { k + 2 });
                }
                link(w + p, w + p + 1);
            }
            GeneratorKind::Cap => {
                for k in 0..w {
                    if k < p {
                        link(k, w + k);
                    } else if k >= p + 2 {
                        link(k, w + k - 2);
                    }
                }
                link(p, p + 1);
            }
            GeneratorKind::Cross => {
                for k in 0..w {
                    let t = if k == p {
                        p + 1
                    } else if k == p + 1 {
                        p
                    } else {
                        k
                    };
                    link(k, w + t);
                }
            }
        }
        BrauerDiagram::from_partner(w, ow, partner)
    }
}

/// Word (bottom generator first) whose composite is `d` with sign `+1`.
///
/// Caps are closed lowest first, then the propagating lines are permuted,
/// then cups are opened lowest first.
pub fn canonical_word(d: &BrauerDiagram) -> Vec<Generator> {
    let mut word = Vec::new();
    let s = d.source();
    // strands labelled by their bottom dot
    let mut cur: Vec<usize> = (0..s).collect();
    for (p, q) in d.caps() {
        let mut pq = cur.iter().position(|&x| x == q).unwrap();
        let pp = cur.iter().position(|&x| x == p).unwrap();
        while pq > pp + 1 {
            word.push(Generator { kind: GeneratorKind::Cross, pos: pq - 1, width: cur.len() });
            cur.swap(pq - 1, pq);
            pq -= 1;
        }
        word.push(Generator { kind: GeneratorKind::Cap, pos: pp, width: cur.len() });
        cur.drain(pp..pp + 2);
    }
    // relabel by top dot, then bubble into increasing order
    let mut cur: Vec<usize> = cur.iter().map(|&b| d.partner(b) - s).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..cur.len().saturating_sub(1) {
            if cur[k] > cur[k + 1] {
                word.push(Generator { kind: GeneratorKind::Cross, pos: k, width: cur.len() });
                cur.swap(k, k + 1);
                changed = true;
            }
        }
    }
    let mut cups = d.cups();
    cups.reverse();
    for (l, r) in cups {
        let pos = cur.iter().filter(|&&x| x < l).count();
        word.push(Generator { kind: GeneratorKind::Cup, pos, width: cur.len() });
        cur.insert(pos, r);
        cur.insert(pos, l);
        let mut pr = pos + 1;
        while pr + 1 < cur.len() && cur[pr + 1] < r {
            word.push(Generator { kind: GeneratorKind::Cross, pos: pr, width: cur.len() });
            cur.swap(pr, pr + 1);
            pr += 1;
        }
    }
    debug_assert!(cur.windows(2).all(|w| w[0] < w[1]));
    word
}

/// Composite of a word (bottom first) starting from `width` strands.
pub fn evaluate_word(width: usize, word: &[Generator]) -> Result<Signed, Error> {
    let mut acc = Signed::Term { sign: 1, diagram: BrauerDiagram::identity(width) };
    for g in word {
        acc = Signed::Term { sign: 1, diagram: g.diagram() }.then_under(acc)?;
    }
    Ok(acc)
}

/// The anti-involution: `I ↦ I`, `X ↦ -X`, `∪ ↦ -∩`, `∩ ↦ ∪`, reversing
/// composition and preserving tensor products.
pub fn flip(d: &BrauerDiagram) -> Signed {
    let word = canonical_word(d);
    let mut sign: i8 = 1;
    let mirrored: Vec<Generator> = word
        .iter()
        .rev()
        .map(|g| {
            let ow = g.output_width();
            match g.kind {
                GeneratorKind::Cup => {
                    sign = -sign;
                    Generator { kind: GeneratorKind::Cap, pos: g.pos, width: ow }
                }
                GeneratorKind::Cap => Generator { kind: GeneratorKind::Cup, pos: g.pos, width: ow },
                GeneratorKind::Cross => {
                    sign = -sign;
                    Generator { kind: GeneratorKind::Cross, pos: g.pos, width: ow }
                }
            }
        })
        .collect();
    let out = evaluate_word(d.target(), &mirrored).expect("mirrored word is composable");
    if sign < 0 {
        out.negate()
    } else {
        out
    }
}
