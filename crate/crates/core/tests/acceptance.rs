//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Every comparison below is exact (rational or integer equality); there is
//! no floating-point tolerance anywhere in the suite.

use std::process::ExitCode;
use std::time::Instant;

use periplectic::algebra::relations::relation_suite;
use periplectic::cells::murphy::MurphyTower;
use periplectic::cells::{bratteli_edges, bratteli_row, content_vector, jm_triangularity_check, paths, restriction_check, BratteliPath};
use periplectic::diagrams::{double_factorial_count, enumerate};
use periplectic::field::Rational;
use periplectic::partitions::{cell_labels, j_set, partitions_of, Partition};
use periplectic::repthy::{
    bgg_check, block_partition, cartan_matrix, cover_cartan_matrix, decomposition_matrix, decomposition_screens, double_centralizer_check,
    quiver_cartan_oracle, theta_on_simples, DecompositionMatrix, ModuleData, QuiverPresentation,
};
use periplectic::schurweyl::{composition_oracle, faithfulness_rank, pi, xi, PeBasis};
use rayon::prelude::*;

type Q = Rational;

/// Seed for the trace method; any seed must give the same tables.
const SEED: u64 = 2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Expected<'a> = (&'a DecompositionMatrix, &'a [usize], Vec<(Partition, u64)>);

fn ensure(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::of(parts)
}

fn ones(list: &[&[usize]]) -> Vec<(Partition, u64)> {
    list.iter().map(|x| (p(x), 1)).collect()
}

fn dec(n: usize) -> Result<(ModuleData<Q>, DecompositionMatrix), String> {
    let data = ModuleData::<Q>::new(n).map_err(|e| e.to_string())?;
    let d = decomposition_matrix(&data, SEED).map_err(|e| e.to_string())?;
    Ok((data, d))
}

fn dimensions() -> Outcome {
    let want = [3u64, 15, 105, 945, 10395];
    for (n, &w) in (2..=6).zip(&want) {
        let got = enumerate(n, n).len() as u64;
        if got != w {
            return Err(format!("dim A_{n} = {got}, expected {w}"));
        }
    }
    for (n, w) in [(2usize, 6u64), (4, 147)] {
        let js = j_set(n);
        let got: u64 = js.iter().flat_map(|&i| js.iter().map(move |&j| enumerate(i, j).len() as u64)).sum();
        if got != w {
            return Err(format!("dim C_{n} = {got}, expected {w}"));
        }
    }
    Ok("dim A_2..A_6 = 3, 15, 105, 945, 10395; dim C_2 = 6, dim C_4 = 147".into())
}

fn sign_oracle() -> Outcome {
    let (pairs, failures) = composition_oracle(3, 6);
    ensure(
        failures.is_empty(),
        format!("{pairs} composable pairs agree with pe(3) on V^⊗k"),
        format!("{} failures, first {:?}", failures.len(), failures.first()),
    )
}

fn relations() -> Outcome {
    let mut total = 0;
    for n in 1..=5 {
        let r = relation_suite::<Q>(n);
        if let Some(bad) = r.failures().next() {
            return Err(format!("n = {n}: {} ({:?})", bad.name, bad.witness));
        }
        total += r.checks.len();
    }
    Ok(format!("{total} identities hold for n ≤ 5"))
}

fn theta() -> Outcome {
    // Centrality and the cup ideal at n = 5 are part of `relation_suite`; repeated here for the record.
    let r = periplectic::algebra::relations::theta_checks::<Q>(5);
    if let Some(bad) = r.failures().next() {
        return Err(format!("{} ({:?})", bad.name, bad.witness));
    }
    for n in 1..=5 {
        let data = ModuleData::<Q>::new(n).map_err(|e| e.to_string())?;
        for t in theta_on_simples(&data) {
            let expect = n == 3 && t.shape == p(&[2, 1]);
            if t.nonzero != expect {
                return Err(format!("n = {n}: Θ on L{} nonzero = {}", t.shape, t.nonzero));
            }
        }
    }
    Ok("Θ central in A_5 (945 diagrams), kills cups, nonzero only on L_3(2,1)".into())
}

fn murphy() -> Outcome {
    let mut tower = MurphyTower::<Q>::new();
    let mut count = 0;
    for n in 1..=5 {
        for lam in cell_labels(n) {
            let r = jm_triangularity_check(&mut tower, n, &lam).map_err(|e| e.to_string())?;
            if !r.holds() {
                return Err(format!("n = {n}, λ = {lam}: {:?}", r.violations.first()));
            }
            count += 1;
        }
    }
    let t = BratteliPath(vec![p(&[1]), p(&[2]), p(&[1]), p(&[1, 1])]);
    let ok = paths(4, &p(&[1, 1])).contains(&t) && content_vector(&t) == vec![1, 2, -1];
    ensure(
        ok,
        format!("triangular with content diagonals on {count} cell modules; c_t = (1,2,-1) for t = {t}"),
        format!("worked example {t} has c_t = {:?}", content_vector(&t)),
    )
}

fn restriction() -> Outcome {
    for n in 2..=5 {
        for lam in cell_labels(n) {
            let r = restriction_check::<Q>(n, &lam).map_err(|e| e.to_string())?;
            if !r.holds() {
                return Err(format!("n = {n}, λ = {lam}: {r:?}"));
            }
        }
    }
    let rows: [&[&[usize]]; 4] = [
        &[&[1]],
        &[&[], &[2], &[1, 1]],
        &[&[1], &[3], &[2, 1], &[1, 1, 1]],
        &[&[], &[2], &[1, 1], &[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]],
    ];
    for (k, row) in rows.iter().enumerate() {
        let want: Vec<Partition> = row.iter().map(|x| p(x)).collect();
        if bratteli_row(k + 1) != want {
            return Err(format!("Bratteli row {} is {:?}", k + 1, bratteli_row(k + 1)));
        }
    }
    // Edges of the figure, as (row k index, row k+1 index).
    let figure: [&[(usize, usize)]; 3] = [
        &[(0, 0), (0, 1), (0, 2)],
        &[(0, 0), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2), (2, 3)],
        &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 3), (1, 4), (2, 1), (2, 2), (2, 4), (2, 5), (2, 6), (3, 2), (3, 6), (3, 7)],
    ];
    for (k, want) in (1..4).zip(figure) {
        if bratteli_edges(k) != want {
            return Err(format!("Bratteli edges below row {k}: {:?}", bratteli_edges(k)));
        }
    }
    Ok("restriction holds for every cell module, n ≤ 5; Bratteli rows 1-4 and their edges match".into())
}

fn decompositions() -> Outcome {
    let (_, d2) = dec(2)?;
    let (_, d3) = dec(3)?;
    let (_, d4) = dec(4)?;
    let (_, d5) = dec(5)?;
    let expected: Vec<Expected> = vec![
        (&d2, &[], ones(&[&[2]])),
        (&d3, &[1], ones(&[&[1], &[3]])),
        (&d4, &[], ones(&[&[2]])),
        (&d4, &[2], ones(&[&[2], &[4], &[2, 2]])),
        (&d4, &[1, 1], ones(&[&[1, 1], &[3, 1]])),
        (&d5, &[1], ones(&[&[1], &[3], &[3, 2]])),
        (&d5, &[2, 1], ones(&[&[2, 1], &[4, 1]])),
        (&d5, &[3], ones(&[&[3], &[5], &[3, 2]])),
        (&d5, &[1, 1, 1], ones(&[&[1, 1, 1], &[3, 1, 1]])),
    ];
    for (d, lam, want) in expected {
        if d.factors(&p(lam)) != want {
            return Err(format!("n = {}: [W{}] = {:?}", d.n, p(lam), d.factors(&p(lam))));
        }
    }
    for (n, d) in [(2, &d2), (3, &d3), (4, &d4), (5, &d5)] {
        for lam in partitions_of(n) {
            if d.factors(&lam) != vec![(lam.clone(), 1)] {
                return Err(format!("n = {n}: W{lam} is not simple"));
            }
        }
    }
    for n in 1..=5 {
        let (_, d) = dec(n)?;
        if let Some(bad) = decomposition_screens(&d).failures().next() {
            return Err(format!("n = {n}: {} ({:?})", bad.name, bad.witness));
        }
    }
    Ok("tables for n = 2..5 and all screens for n ≤ 5".into())
}

fn blocks() -> Outcome {
    let mut sizes = Vec::new();
    for n in 1..=5 {
        let (_, d) = dec(n)?;
        let b = block_partition(&cartan_matrix(&d));
        if !b.matches_two_cores() || !b.gamma_separates() {
            return Err(format!("n = {n}: {:?}", b.classes));
        }
        sizes.push(b.classes.len());
    }
    Ok(format!("blocks are 2-core fibres with γ separating them; counts {sizes:?} for n = 1..5"))
}

fn cartan() -> Outcome {
    for n in 2..=4 {
        let (_, d) = dec(n)?;
        let cases: Vec<(&str, QuiverPresentation, _)> = match n {
            2 => vec![("A_2", QuiverPresentation::a2(), cartan_matrix(&d)), ("C_2", QuiverPresentation::c2(), cover_cartan_matrix(&d))],
            3 => vec![("A_3", QuiverPresentation::a3(), cartan_matrix(&d))],
            _ => vec![("A_4", QuiverPresentation::a4(), cartan_matrix(&d)), ("C_4", QuiverPresentation::c4(), cover_cartan_matrix(&d))],
        };
        for (name, q, c) in cases {
            let oracle = quiver_cartan_oracle(&q).map_err(|e| e.to_string())?;
            if c.reorder(&oracle.labels).as_ref() != Some(&oracle) {
                return Err(format!("{name}: computed {:?} vs quiver {:?}", c.entries, oracle.entries));
            }
        }
    }
    Ok("Cartan matrices of A_2, A_3, A_4 (and C_2, C_4) equal the quiver oracles".into())
}

fn double_centralizer() -> Outcome {
    let four = double_centralizer_check::<Q>(4);
    let two = double_centralizer_check::<Q>(2);
    ensure(
        four.end_dim == 147 && two.end_dim != 6,
        format!("dim End at n = 4 is {}; at n = 2 it is {} ≠ 6", four.end_dim, two.end_dim),
        format!("dim End: n = 4 gives {}, n = 2 gives {}", four.end_dim, two.end_dim),
    )
}

fn bgg() -> Outcome {
    for n in 1..=4 {
        let (data, d) = dec(n)?;
        let r = bgg_check(&data, &d);
        if !r.holds() {
            return Err(format!("n = {n}: {} vs {}", r.sum, r.algebra_dim));
        }
    }
    Ok("Σ dim P(λ)·dim L(λ) = dim A_n for n ≤ 4".into())
}

fn schur_weyl() -> Outcome {
    for n in 2..=3 {
        let r = faithfulness_rank(n, 3).map_err(|e| e.to_string())?;
        let want = double_factorial_count(2 * n) as usize;
        if r != want {
            return Err(format!("rank π_{n} = {r}, expected {want}"));
        }
    }
    for m in 1..=3 {
        let pe = PeBasis::new(m);
        for n in 2..=3 {
            for k in 2..=n {
                let lhs = xi(&pe, k, n).map_err(|e| e.to_string())?;
                let rhs = pi(&periplectic::algebra::jm::<Q>(k, n), m).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("ξ_{k} ≠ π(x_{k}) for n = {n}, m = {m}"));
                }
            }
        }
    }
    Ok("rank π_n = 3, 15 at m = 3; ξ_k = π(x_k) for n, m ≤ 3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("dimension counts", dimensions),
        ("sign rule against the tensor model", sign_oracle),
        ("relation suite", relations),
        ("Θ", theta),
        ("Murphy triangularity", murphy),
        ("restriction and Bratteli rows", restriction),
        ("decomposition matrices", decompositions),
        ("blocks", blocks),
        ("Cartan matrices", cartan),
        ("double centralizer", double_centralizer),
        ("BGG reciprocity", bgg),
        ("Schur-Weyl", schur_weyl),
    ];
    let results: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, f)| {
            let t = Instant::now();
            (f(), t.elapsed().as_secs_f64())
        })
        .collect();
    let mut failed = 0;
    for (k, ((name, _), (res, secs))) in criteria.iter().zip(&results).enumerate() {
        match res {
            Ok(msg) => println!("PASS [{:2}] {name}: {msg} ({secs:.1}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{:2}] {name}: {msg} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
