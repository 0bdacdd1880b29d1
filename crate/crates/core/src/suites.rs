//! Named verification suites, each producing a list of pass/fail checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::relations::{central_jm_dimension, identity_checks, special_checks, theta_checks, RelationCheck};
use crate::cells::murphy::MurphyTower;
use crate::cells::{jm_triangularity_check, restriction_check};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::partitions::{cell_labels, Partition};
use crate::repthy::{
    bgg_check, block_partition, cartan_matrix, decomposition_matrix, decomposition_screens, double_centralizer_check, restriction_screens,
    theta_on_simples, ModuleData,
};
use crate::schurweyl::{c_from_basis, c_op, faithfulness_rank, pi, sigma, sigma_from_basis, xi, PeBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Jm,
    Theta,
    Restriction,
    Murphy,
    Blocks,
    Dc,
    Schurweyl,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] =
        [Suite::Relations, Suite::Jm, Suite::Theta, Suite::Restriction, Suite::Murphy, Suite::Blocks, Suite::Dc, Suite::Schurweyl];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().expect("string"))
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_ascii_lowercase())).map_err(|_| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub pass: bool,
    pub checks: Vec<RelationCheck>,
}

fn check(name: impl Into<String>, holds: bool, witness: Option<String>) -> RelationCheck {
    RelationCheck { name: name.into(), holds, witness }
}

/// Options for [`run`].
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// `m` for the tensor-space suite.
    pub m: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, m: 3 }
    }
}

/// Run one suite for `A_n` over `F`.
pub fn run<F: Field>(suite: Suite, n: usize, opts: SuiteOptions) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                if (s == Suite::Dc && n > 4) || (s == Suite::Restriction && n < 2) {
                    continue;
                }
                if s == Suite::Schurweyl && F::characteristic() != 0 {
                    continue;
                }
                all.extend(run::<F>(s, n, opts)?.checks.into_iter().map(|mut c| {
                    c.name = format!("{s}: {}", c.name);
                    c
                }));
            }
            all
        }
        Suite::Relations => {
            let mut c = identity_checks::<F>(n).checks;
            c.extend(special_checks::<F>(n).checks);
            c
        }
        Suite::Jm => {
            let mut c: Vec<RelationCheck> = identity_checks::<F>(n).checks.into_iter().filter(|c| c.name.contains("x_")).collect();
            let central = central_jm_dimension::<F>(n);
            c.push(check("no nonzero central combination of x_2..x_n", central == 0, (central > 0).then(|| format!("dimension {central}"))));
            c
        }
        Suite::Theta => {
            let mut c = theta_checks::<F>(n).checks;
            let data = ModuleData::<F>::new(n)?;
            let bad: Vec<String> = theta_on_simples(&data)
                .into_iter()
                .filter(|t| t.nonzero != (n == 3 && t.shape == Partition::of(&[2, 1])))
                .map(|t| format!("{} nonzero={}", t.shape, t.nonzero))
                .collect();
            c.push(check("Θ vanishes on simples except L_3(2,1)", bad.is_empty(), bad.first().cloned()));
            c
        }
        Suite::Restriction => {
            if n < 2 {
                return Err(Error::Invalid("restriction needs n ≥ 2".into()));
            }
            let mut c = Vec::new();
            for lam in cell_labels(n) {
                let r = restriction_check::<F>(n, &lam)?;
                c.push(check(format!("restriction of W{lam}"), r.holds(), (!r.holds()).then(|| format!("{r:?}"))));
            }
            c.extend(restriction_screens::<F>(n)?.checks);
            c
        }
        Suite::Murphy => {
            let mut tower = MurphyTower::<F>::new();
            let mut c = Vec::new();
            for lam in cell_labels(n) {
                let r = jm_triangularity_check(&mut tower, n, &lam)?;
                c.push(check(format!("x_l triangular on the Murphy basis of W{lam}"), r.holds(), r.violations.first().map(|v| format!("{v:?}"))));
            }
            c
        }
        Suite::Blocks => {
            let data = ModuleData::<F>::new(n)?;
            let d = decomposition_matrix(&data, opts.seed)?;
            let mut c = decomposition_screens(&d).checks;
            let blocks = block_partition(&cartan_matrix(&d));
            let fibres = blocks.matches_two_cores();
            c.push(check("blocks are 2-core fibres", fibres, (!fibres).then(|| format!("{:?}", blocks.classes))));
            c.push(check("γ constant on blocks and distinct across them", blocks.gamma_separates(), None));
            let bgg = bgg_check(&data, &d);
            c.push(check("Σ dim P(λ) dim L(λ) = dim A_n", bgg.holds(), (!bgg.holds()).then(|| format!("{} vs {}", bgg.sum, bgg.algebra_dim))));
            c
        }
        Suite::Dc => {
            if n > 4 {
                return Err(Error::Budget("the double centralizer suite supports n ≤ 4".into()));
            }
            let r = double_centralizer_check::<F>(n);
            let expect_equal = n != 2;
            vec![check(
                format!("dim End(X) {} dim C_{n}", if expect_equal { "=" } else { "≠" }),
                r.equal() == expect_equal,
                Some(format!("dim End = {}, dim C = {}", r.end_dim, r.cover_dim)),
            )]
        }
        Suite::Schurweyl => schurweyl_checks(n, opts.m)?,
    };
    let pass = checks.iter().all(|c| c.holds);
    Ok(SuiteReport { suite, n, pass, checks })
}

/// Tensor-space checks: basis-sum formulas against `π`, and the rank of `π` when `n ≤ m`.
pub fn schurweyl_checks(n: usize, m: usize) -> Result<Vec<RelationCheck>> {
    type Q = crate::field::Rational;
    let pe = PeBasis::new(m);
    let mut c = Vec::new();
    for k in 1..n {
        c.push(check(format!("σ_{k} = Σ X_i^† ⊗ X_i"), sigma(k, n, m)? == sigma_from_basis(&pe, k, n)?, None));
        c.push(check(format!("π(ε_{k}) = c_{k}"), c_op(k, n, m)? == c_from_basis(&pe, k, n)?, None));
    }
    for k in 2..=n {
        c.push(check(format!("ξ_{k} = π(x_{k})"), xi(&pe, k, n)? == pi(&crate::algebra::jm::<Q>(k, n), m)?, None));
    }
    if n <= m {
        let r = faithfulness_rank(n, m)?;
        let want = crate::diagrams::double_factorial_count(2 * n) as usize;
        c.push(check(format!("rank π_{n} = {want} (m = {m})"), r == want, Some(format!("rank {r}"))));
    }
    Ok(c)
}
