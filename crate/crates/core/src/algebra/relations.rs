//! Exact verification of the identities among generators, JM elements and Θ.

use rayon::prelude::*;
use serde::Serialize;

use super::{basis, jm, theta, Expression};
use crate::diagrams::{self, c_star, epsilon, s, w_diagram, x_terms, y_terms};
use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// `lhs - rhs` when the identity fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    fn merge(&mut self, other: RelationReport) {
        self.checks.extend(other.checks);
    }
}

fn check<F: Field>(name: String, lhs: &Expression<F>, rhs: &Expression<F>) -> RelationCheck {
    let diff = lhs.sub(rhs);
    let holds = diff.is_zero();
    let witness = (!holds).then(|| {
        let s = format!("{diff:?}");
        if s.len() > 400 {
            format!("{}... ({} terms)", &s[..400], diff.len())
        } else {
            s
        }
    });
    RelationCheck { name, holds, witness }
}

fn d<F: Field>(dg: &diagrams::BrauerDiagram) -> Expression<F> {
    Expression::diagram(dg)
}

/// Local identities between `s_k`, `ε_k` and the JM elements, in `A_n`.
pub fn identity_checks<F: Field>(n: usize) -> RelationReport {
    let xs: Vec<Expression<F>> = (1..=n).map(|i| jm(i, n)).collect();
    let x = |i: usize| &xs[i - 1];
    let one = Expression::<F>::identity(n);
    let two = F::from_i64(2);
    let mut out = Vec::new();

    if n >= 2 {
        out.push(check("x_2^2 = 1".into(), &x(2).mul(x(2)), &one));
    }
    for k in 1..n {
        let sk = d::<F>(&s(k, n));
        let ek = d::<F>(&epsilon(k, n));
        let dx = x(k).sub(x(k + 1));
        let dx2 = dx.mul(&dx);
        let sum = x(k).add(x(k + 1));
        let prod = x(k).mul(x(k + 1));

        out.push(check(format!("e_{k}(x_{k}-x_{}) = e_{k}", k + 1), &ek.mul(&dx), &ek));
        out.push(check(format!("(x_{k}-x_{})e_{k} = -e_{k}", k + 1), &dx.mul(&ek), &ek.neg()));
        out.push(check(format!("s_{k} x_{k} s_{k} = x_{} - s_{k} - e_{k}", k + 1), &sk.mul(x(k)).mul(&sk), &x(k + 1).sub(&sk).sub(&ek)));
        out.push(check(
            format!("s_{k}(x_{k}-x_{})s_{k} = -2s_{k} - (x_{k}-x_{})", k + 1, k + 1),
            &sk.mul(&dx).mul(&sk),
            &sk.scale(&-two.clone()).sub(&dx),
        ));
        out.push(check(format!("s_{k}(x_{k}-x_{})^2 = (x_{k}-x_{})^2 s_{k}", k + 1, k + 1), &sk.mul(&dx2), &dx2.mul(&sk)));
        out.push(check(format!("e_{k}(x_{k}-x_{})^2 = e_{k}", k + 1), &ek.mul(&dx2), &ek));
        out.push(check(format!("(x_{k}-x_{})^2 e_{k} = e_{k}", k + 1), &dx2.mul(&ek), &ek));
        out.push(check(format!("s_{k}(x_{k}+x_{})s_{k} = x_{k}+x_{} - 2e_{k}", k + 1, k + 1), &sk.mul(&sum).mul(&sk), &sum.sub(&ek.scale(&two))));
        out.push(check(
            format!("s_{k}(x_{k}x_{}) = (x_{k}x_{})s_{k} + x_{k}e_{k} + e_{k}x_{k}", k + 1, k + 1),
            &sk.mul(&prod),
            &prod.mul(&sk).add(&x(k).mul(&ek)).add(&ek.mul(x(k))),
        ));
        for l in (1..=n).filter(|&l| l != k && l != k + 1) {
            out.push(check(format!("e_{k} x_{l} = x_{l} e_{k}"), &ek.mul(x(l)), &x(l).mul(&ek)));
            out.push(check(format!("s_{k} x_{l} = x_{l} s_{k}"), &sk.mul(x(l)), &x(l).mul(&sk)));
        }
        // ε_k f ε_k = 0 on the JM monomials of degree at most two
        let mut samples: Vec<(String, Expression<F>)> = vec![("1".into(), one.clone())];
        for a in 2..=n {
            samples.push((format!("x_{a}"), x(a).clone()));
            for b in a..=n {
                samples.push((format!("x_{a}x_{b}"), x(a).mul(x(b))));
            }
        }
        for (name, f) in samples {
            out.push(check(format!("e_{k} {name} e_{k} = 0"), &ek.mul(&f).mul(&ek), &Expression::zero(n, n)));
        }
    }
    if n >= 3 {
        let e1 = d::<F>(&epsilon(1, n));
        let zero = Expression::zero(n, n);
        out.push(check("e_1 x_3 = 0".into(), &e1.mul(x(3)), &zero));
        out.push(check("x_3 e_1 = 0".into(), &x(3).mul(&e1), &zero));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(check(format!("[x_{i}, x_{j}] = 0"), &x(i).commutator(x(j)), &Expression::zero(n, n)));
        }
    }
    // x_i centralizes A_{i-1}
    for i in 2..=n {
        let sub = basis(i - 1);
        let bad: Vec<String> = sub
            .par_iter()
            .filter_map(|b| {
                let e = d::<F>(b).extend_right(n - i + 1);
                (!x(i).commutator(&e).is_zero()).then(|| b.to_string())
            })
            .collect();
        out.push(RelationCheck { name: format!("x_{i} commutes with A_{}", i - 1), holds: bad.is_empty(), witness: bad.first().cloned() });
    }
    RelationReport { n, checks: out }
}

/// Θ is central in `A_n` and kills every diagram with a cup.
pub fn theta_checks<F: Field>(n: usize) -> RelationReport {
    let th = theta::<F>(n);
    let all = basis(n);
    let results: Vec<(String, bool, bool)> = all
        .par_iter()
        .map(|b| {
            let e = d::<F>(b);
            let left = th.mul(&e);
            let right = e.mul(&th);
            let central = left == right;
            let kills = b.num_cups() == 0 || (left.is_zero() && right.is_zero());
            (b.to_string(), central, kills)
        })
        .collect();
    let first_bad = |pick: fn(&(String, bool, bool)) -> bool| results.iter().find(|r| !pick(r)).map(|r| r.0.clone());
    let central = first_bad(|r| r.1);
    let kills = first_bad(|r| r.2);
    RelationReport {
        n,
        checks: vec![
            RelationCheck { name: format!("Θ central ({} basis diagrams)", all.len()), holds: central.is_none(), witness: central },
            RelationCheck { name: "Θ d = 0 = d Θ for d with a cup".into(), holds: kills.is_none(), witness: kills },
        ],
    }
}

/// Identities plus Θ checks.
pub fn relation_suite<F: Field>(n: usize) -> RelationReport {
    let mut r = identity_checks::<F>(n);
    r.merge(theta_checks::<F>(n));
    r
}

/// Dimension of the space of central elements `Σ c_i x_i` in `A_n`.
pub fn central_jm_dimension<F: Field>(n: usize) -> usize {
    let xs: Vec<Expression<F>> = (2..=n).map(|i| jm(i, n)).collect();
    let gens: Vec<Expression<F>> = super::generators(n).iter().map(d::<F>).collect();
    let index: std::collections::HashMap<_, _> = basis(n).into_iter().enumerate().map(|(i, b)| (b, i)).collect();
    let comms: Vec<Vec<Expression<F>>> = gens.iter().map(|g| xs.iter().map(|x| x.commutator(g)).collect()).collect();
    let rows = gens.len() * index.len();
    let mut m = Matrix::zeros(rows, xs.len());
    for (g, row) in comms.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            for (dg, v) in e.terms() {
                m[(g * index.len() + index[dg], c)] = v.clone();
            }
        }
    }
    m.kernel().len()
}

/// Identities among `c_i^*`, `w`, `x`, `y_1`, `y_2` in `A_n` (`n ≥ 6` even for `x`, `y`).
pub fn special_checks<F: Field>(n: usize) -> RelationReport {
    let mut out = Vec::new();
    let js: Vec<usize> = (n % 2..=n).step_by(2).collect();
    for &j in &js {
        for &i in js.iter().filter(|&&i| i <= j) {
            if (i, j) == (0, 0) {
                continue;
            }
            let cj = Expression::<F>::from_signed(&c_star(j, n), n, n);
            let ci = Expression::<F>::from_signed(&c_star(i, n), n, n);
            out.push(check(format!("c_{j}^* c_{i}^* = c_{i}^*"), &cj.mul(&ci), &ci));
        }
    }
    if n.is_multiple_of(2) && n >= 2 {
        let c0 = Expression::<F>::from_signed(&c_star(0, n), n, n);
        out.push(check("(c_0^*)^2 = 0".into(), &c0.mul(&c0), &Expression::zero(n, n)));
        if n >= 3 {
            out.push(check("w c_0^* = -c_0^*".into(), &d::<F>(&w_diagram(n)).mul(&c0), &c0.neg()));
        }
        if n >= 6 {
            let [xa, xb] = x_terms(n);
            let x = d::<F>(&xa).add(&d::<F>(&xb));
            let [y1, y2] = y_terms(n);
            let (y1, y2) = (d::<F>(&y1), d::<F>(&y2));
            let c4 = Expression::<F>::from_signed(&c_star(4, n), n, n);
            out.push(check("(y_1+y_2) x = -x".into(), &y1.add(&y2).mul(&x), &x.neg()));
            out.push(check("c_4^* x = x".into(), &c4.mul(&x), &x));
            out.push(check("y_2 c_0^* = c_0^*".into(), &y2.mul(&c0), &c0));
            out.push(check("y_1 c_0^* = -c_0^*".into(), &y1.mul(&c0), &c0.neg()));
        }
    }
    RelationReport { n, checks: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn assert_pass(r: &RelationReport) {
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn identities_small() {
        for n in 2..=4 {
            assert_pass(&identity_checks::<Rational>(n));
        }
    }

    #[test]
    fn theta_small() {
        for n in 2..=4 {
            assert_pass(&theta_checks::<Rational>(n));
        }
    }

    #[test]
    fn theta_three() {
        let th = theta::<Rational>(3);
        let x = jm::<Rational>(2, 3).sub(&jm(3, 3));
        assert_eq!(th, Expression::identity(3).sub(&x.mul(&x)));
    }

    #[test]
    fn special_identities() {
        for n in [2, 3, 4, 5, 6] {
            assert_pass(&special_checks::<Fp<101>>(n));
        }
    }

    #[test]
    fn no_central_jm_combination() {
        for n in 2..=4 {
            assert_eq!(central_jm_dimension::<Rational>(n), 0, "n = {n}");
        }
    }
}
