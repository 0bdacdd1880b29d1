//! The sign of a composite diagram.
//!
//! Stack `d1` on `d2`. Each cap carries an arrow and each cup a diamond; the
//! latitudes start out as `d2`'s standard order followed by `d1`'s. Markings
//! on one strand are cancelled in diamond/arrow pairs, the survivors are
//! sorted into standard order, and the sign counts
//!
//! * adjacent latitude swaps,
//! * cancellations whose arrow points away from its diamond,
//! * surviving arrows that end up left-handed.
//!
//! The swap count only matters mod 2, so it is the parity of the permutation
//! taking the initial latitudes to `[cancelled (diamond, arrow) blocks..,
//! survivors in standard order]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BrauerDiagram, Signed};
use crate::error::Error;

/// Which consecutive pair on a strand to cancel next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CancelStrategy {
    FromStart,
    FromEnd,
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Diamond,
    Arrow,
}

#[derive(Clone, Copy, Debug)]
struct Mark {
    id: usize,
    kind: Kind,
    /// For arrows: +1 if it points along the traversal direction.
    dir: i8,
}

struct Strand {
    /// Composite dot indices of the two ends (start first).
    ends: (usize, usize),
    marks: Vec<Mark>,
}

struct Stacked {
    /// Number of markings in the initial latitude list.
    num_marks: usize,
    strands: Vec<Strand>,
    source: usize,
    target: usize,
}

type Arcs = Vec<(usize, usize)>;

/// Marking ids in initial latitude order, bottom first.
fn initial_ids(d: &BrauerDiagram, offset: usize) -> (Arcs, Arcs) {
    // caps: lowest has leftmost left end; cups: lowest has rightmost left end
    let caps = d.caps();
    let mut cups = d.cups();
    cups.reverse();
    let caps: Vec<(usize, usize)> = caps.into_iter().enumerate().map(|(k, c)| (c.0, offset + k)).collect();
    let base = offset + caps.len();
    let cups: Vec<(usize, usize)> = cups.into_iter().enumerate().map(|(k, c)| (c.0, base + k)).collect();
    (caps, cups)
}

fn id_of(list: &[(usize, usize)], left: usize) -> usize {
    list.iter().find(|&&(l, _)| l == left).expect("marking").1
}

fn stack(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<Option<Stacked>, Error> {
    if d1.source() != d2.target() {
        return Err(Error::NotComposable(format!("{} -> {} after {} -> {}", d1.source(), d1.target(), d2.source(), d2.target())));
    }
    let (i, j, k) = (d2.source(), d2.target(), d1.target());
    let (caps2, cups2) = initial_ids(d2, 0);
    let off = caps2.len() + cups2.len();
    let (caps1, cups1) = initial_ids(d1, off);
    let num_marks = off + caps1.len() + cups1.len();

    let mut seen_mid = vec![false; j];
    let mut seen_outer = vec![false; i + k];
    let mut strands = Vec::new();
    for start in 0..i + k {
        if seen_outer[start] {
            continue;
        }
        seen_outer[start] = true;
        let mut marks = Vec::new();
        // (upper, dot index within that diagram)
        let (mut upper, mut dot) = if start < i { (false, start) } else { (true, j + (start - i)) };
        let end = loop {
            if upper {
                let q = d1.partner(dot);
                if dot < j && q < j {
                    marks.push(Mark { id: id_of(&caps1, dot.min(q)), kind: Kind::Arrow, dir: if dot < q { 1 } else { -1 } });
                } else if dot >= j && q >= j {
                    marks.push(Mark { id: id_of(&cups1, dot.min(q) - j), kind: Kind::Diamond, dir: 0 });
                }
                if q >= j {
                    break i + (q - j);
                }
                seen_mid[q] = true;
                upper = false;
                dot = i + q;
            } else {
                let p = d2.partner(dot);
                if dot < i && p < i {
                    marks.push(Mark { id: id_of(&caps2, dot.min(p)), kind: Kind::Arrow, dir: if dot < p { 1 } else { -1 } });
                } else if dot >= i && p >= i {
                    marks.push(Mark { id: id_of(&cups2, dot.min(p) - i), kind: Kind::Diamond, dir: 0 });
                }
                if p < i {
                    break p;
                }
                seen_mid[p - i] = true;
                upper = true;
                dot = p - i;
            }
        };
        seen_outer[end] = true;
        strands.push(Strand { ends: (start, end), marks });
    }
    if seen_mid.iter().any(|s| !s) {
        return Ok(None);
    }
    Ok(Some(Stacked { num_marks, strands, source: i, target: k }))
}

/// Result diagram of the stacked strands.
fn underlying(st: &Stacked) -> BrauerDiagram {
    let mut partner = vec![0u8; st.source + st.target];
    for s in &st.strands {
        partner[s.ends.0] = s.ends.1 as u8;
        partner[s.ends.1] = s.ends.0 as u8;
    }
    BrauerDiagram::from_partner(st.source, st.target, partner)
}

/// Cost of cancelling the consecutive pair `(a, b)` (`a` first along the strand).
fn cancel_cost(a: Mark, b: Mark) -> usize {
    let away = match (a.kind, b.kind) {
        (Kind::Arrow, Kind::Diamond) => a.dir == -1,
        (Kind::Diamond, Kind::Arrow) => b.dir == 1,
        _ => unreachable!("markings alternate along a strand"),
    };
    usize::from(away)
}

/// Cancel markings on one strand. Returns (cost, cancelled (diamond, arrow)
/// pairs, survivor).
fn reduce_strand(marks: &[Mark], strategy: CancelStrategy, rng: &mut ChaCha8Rng) -> (usize, Vec<(usize, usize)>, Option<Mark>) {
    let mut cur: Vec<Mark> = marks.to_vec();
    let mut cost = 0;
    let mut pairs = Vec::new();
    while cur.len() >= 2 {
        let pos = match strategy {
            CancelStrategy::FromStart => 0,
            CancelStrategy::FromEnd => cur.len() - 2,
            CancelStrategy::Seeded(_) => rng.gen_range(0..cur.len() - 1),
        };
        let (a, b) = (cur[pos], cur[pos + 1]);
        cost += cancel_cost(a, b);
        let (dmd, arr) = if a.kind == Kind::Diamond { (a, b) } else { (b, a) };
        pairs.push((dmd.id, arr.id));
        cur.drain(pos..pos + 2);
    }
    (cost, pairs, cur.pop())
}

/// Survivors in standard order, bottom first: caps by increasing left end,
/// then cups by decreasing left end.
fn standard_survivor_order(st: &Stacked, survivors: &[(usize, Mark)]) -> Vec<usize> {
    let mut caps = Vec::new();
    let mut cups = Vec::new();
    for &(strand, m) in survivors {
        let (a, b) = st.strands[strand].ends;
        let left = a.min(b);
        if b < st.source && a < st.source {
            caps.push((left, m.id));
        } else {
            cups.push((left, m.id));
        }
    }
    caps.sort_unstable();
    cups.sort_unstable_by(|x, y| y.cmp(x));
    caps.into_iter().chain(cups).map(|(_, id)| id).collect()
}

fn parity_of(seq: &[usize]) -> usize {
    let mut inv = 0;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                inv += 1;
            }
        }
    }
    inv % 2
}

/// Compose `d1 ∘ d2` with a chosen cancellation order.
pub fn compose_with(d1: &BrauerDiagram, d2: &BrauerDiagram, strategy: CancelStrategy) -> Result<Signed, Error> {
    let Some(st) = stack(d1, d2)? else {
        return Ok(Signed::Zero);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(match strategy {
        CancelStrategy::Seeded(s) => s,
        _ => 0,
    });
    let mut gamma = 0usize;
    let mut target_order: Vec<usize> = Vec::with_capacity(st.num_marks);
    let mut survivors = Vec::new();
    for (idx, s) in st.strands.iter().enumerate() {
        let (cost, pairs, surv) = reduce_strand(&s.marks, strategy, &mut rng);
        gamma += cost;
        for (dmd, arr) in pairs {
            target_order.push(dmd);
            target_order.push(arr);
        }
        if let Some(m) = surv {
            // a composite cap is traversed from its left end
            if m.kind == Kind::Arrow && m.dir == -1 {
                gamma += 1;
            }
            survivors.push((idx, m));
        }
    }
    target_order.extend(standard_survivor_order(&st, &survivors));
    debug_assert_eq!(target_order.len(), st.num_marks);
    let mut position = vec![0usize; st.num_marks];
    for (pos, &id) in target_order.iter().enumerate() {
        position[id] = pos;
    }
    gamma += parity_of(&position);
    let sign = if gamma.is_multiple_of(2) { 1 } else { -1 };
    Ok(Signed::Term { sign, diagram: underlying(&st) })
}

/// Independent evaluation of the sign exponent by literally moving markings
/// through adjacent latitudes. Returns `None` when a loop closes.
pub fn gamma_by_simulation(d1: &BrauerDiagram, d2: &BrauerDiagram, seed: u64) -> Result<Option<usize>, Error> {
    let Some(st) = stack(d1, d2)? else {
        return Ok(None);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // latitude list, bottom first
    let mut lat: Vec<usize> = (0..st.num_marks).collect();
    let mut strands: Vec<Vec<Mark>> = st.strands.iter().map(|s| s.marks.clone()).collect();
    let mut gamma = 0usize;
    loop {
        let open: Vec<usize> = (0..strands.len()).filter(|&k| strands[k].len() >= 2).collect();
        if open.is_empty() {
            break;
        }
        let k = open[rng.gen_range(0..open.len())];
        let pos = rng.gen_range(0..strands[k].len() - 1);
        let (a, b) = (strands[k][pos], strands[k][pos + 1]);
        gamma += cancel_cost(a, b);
        let (dmd, arr) = if a.kind == Kind::Diamond { (a.id, b.id) } else { (b.id, a.id) };
        // bring the arrow next to the diamond, just above it
        let mut pa = lat.iter().position(|&x| x == arr).unwrap();
        let pd = lat.iter().position(|&x| x == dmd).unwrap();
        let goal = if pa > pd { pd + 1 } else { pd };
        while pa > goal {
            lat.swap(pa, pa - 1);
            pa -= 1;
            gamma += 1;
        }
        while pa < goal {
            lat.swap(pa, pa + 1);
            pa += 1;
            gamma += 1;
        }
        // now the arrow sits directly below the diamond when pa < pd; swap once more
        let pd = lat.iter().position(|&x| x == dmd).unwrap();
        if pd == pa + 1 {
            lat.swap(pa, pd);
            gamma += 1;
        }
        let pd = lat.iter().position(|&x| x == dmd).unwrap();
        debug_assert_eq!(lat[pd + 1], arr);
        lat.drain(pd..pd + 2);
        strands[k].drain(pos..pos + 2);
    }
    let mut survivors = Vec::new();
    for (idx, s) in strands.iter().enumerate() {
        if let Some(&m) = s.first() {
            if m.kind == Kind::Arrow && m.dir == -1 {
                gamma += 1;
            }
            survivors.push((idx, m));
        }
    }
    let order = standard_survivor_order(&st, &survivors);
    let rank = |id: usize| order.iter().position(|&x| x == id).unwrap();
    // bubble sort into standard order
    let mut changed = true;
    while changed {
        changed = false;
        for p in 0..lat.len().saturating_sub(1) {
            if rank(lat[p]) > rank(lat[p + 1]) {
                lat.swap(p, p + 1);
                gamma += 1;
                changed = true;
            }
        }
    }
    Ok(Some(gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::*;

    fn term(sign: i8, d: &BrauerDiagram) -> Signed {
        Signed::Term { sign, diagram: d.clone() }
    }

    #[test]
    fn small_relations() {
        for n in 2..6 {
            for k in 1..n {
                let (e, sk) = (epsilon(k, n), s(k, n));
                assert_eq!(compose(&e, &sk).unwrap(), term(-1, &e));
                assert_eq!(compose(&sk, &e).unwrap(), term(1, &e));
                assert!(compose(&e, &e).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn b_after_a_is_identity() {
        for n in 1..7 {
            for i in crate::partitions::j_set(n).into_iter().filter(|&i| i > 0) {
                let got = compose(&b_diagram(i, n), &a_diagram(i, n)).unwrap();
                assert_eq!(got, term(1, &BrauerDiagram::identity(i)), "b_{i} a_{i} in A_{n}");
            }
        }
    }

    #[test]
    fn c0_star_squares_to_zero() {
        for n in [2, 4, 6] {
            let c0 = c_star(0, n);
            assert!(c0.clone().then_under(c0).unwrap().is_zero());
        }
    }

    #[test]
    fn worked_composition() {
        let d1 = BrauerDiagram::new(
            4,
            4,
            &[(Dot::Bottom(1), Dot::Bottom(2)), (Dot::Top(3), Dot::Top(4)), (Dot::Bottom(3), Dot::Top(1)), (Dot::Bottom(4), Dot::Top(2))],
        )
        .unwrap();
        let d2 = BrauerDiagram::new(0, 4, &[(Dot::Top(1), Dot::Top(4)), (Dot::Top(2), Dot::Top(3))]).unwrap();
        let want = BrauerDiagram::new(0, 4, &[(Dot::Top(1), Dot::Top(2)), (Dot::Top(3), Dot::Top(4))]).unwrap();
        assert_eq!(compose(&d1, &d2).unwrap(), term(1, &want));
    }

    #[test]
    fn w_and_cap_last() {
        for n in [4, 6] {
            let c0 = c_star(0, n);
            let got = term(1, &w_diagram(n)).then_under(c0.clone()).unwrap();
            assert_eq!(got, c0.negate());
        }
        for n in 2..6 {
            let d = cap_last(n);
            assert_eq!(compose(&d, &s(n - 1, n)).unwrap(), term(-1, &d));
        }
    }

    #[test]
    fn cancellation_order_is_irrelevant() {
        for (i, j, k) in [(2, 2, 2), (3, 3, 3), (0, 4, 0), (0, 4, 4), (4, 4, 0), (2, 4, 2), (4, 4, 4), (1, 5, 1), (0, 6, 0), (3, 5, 3)] {
            let left = enumerate(j, k);
            let right = enumerate(i, j);
            for a in &left {
                for b in &right {
                    let base = compose(a, b).unwrap();
                    assert_eq!(compose_with(a, b, CancelStrategy::FromEnd).unwrap(), base);
                    for seed in 0..3 {
                        assert_eq!(compose_with(a, b, CancelStrategy::Seeded(seed)).unwrap(), base);
                        let sim = gamma_by_simulation(a, b, seed).unwrap();
                        match (&base, sim) {
                            (Signed::Zero, None) => {}
                            (Signed::Term { sign, .. }, Some(g)) => {
                                assert_eq!(*sign, if g % 2 == 0 { 1 } else { -1 }, "{a} ∘ {b}")
                            }
                            _ => panic!("loop detection disagrees"),
                        }
                    }
                }
            }
        }
    }
}
