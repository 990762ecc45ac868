//! Concrete assignments of generators and evaluation of the defining
//! relations.

use std::collections::BTreeMap;

use serde::Serialize;

use super::symbols::{QGen, QautPresentation, SnPresentation};
use super::QautError;
use crate::arith::{Field, Mat, Rational, Tol};
use crate::CheckReport;

/// Generator values, all square of one size `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorAssignment<F> {
    size: usize,
    mats: Vec<Mat<F>>,
}

impl<F: Field> GeneratorAssignment<F> {
    /// `expected` is the number of generators of the target presentation.
    pub fn new(expected: usize, mats: Vec<Mat<F>>) -> Result<Self, QautError> {
        if mats.len() != expected {
            return Err(QautError::IncompleteAssignment {
                expected,
                got: mats.len(),
            });
        }
        let size = mats.first().map_or(1, Mat::rows);
        if mats.iter().any(|m| m.rows() != size || m.cols() != size) {
            return Err(QautError::SizeMismatch);
        }
        Ok(GeneratorAssignment { size, mats })
    }

    pub fn scalars(values: Vec<F>) -> Self {
        GeneratorAssignment {
            size: 1,
            mats: values
                .into_iter()
                .map(|v| Mat::from_rows(vec![vec![v]]))
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn get(&self, idx: usize) -> &Mat<F> {
        &self.mats[idx]
    }

    pub fn mats(&self) -> &[Mat<F>] {
        &self.mats
    }
}

/// Per-family results of a relation check.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub families: BTreeMap<String, CheckReport>,
    pub passed: bool,
    pub worst_residual: f64,
    pub failure: Option<String>,
}

impl RelationReport {
    fn from_families(families: BTreeMap<String, CheckReport>) -> Self {
        let passed = families.values().all(|r| r.passed);
        let worst_residual = families
            .values()
            .map(|r| r.worst_residual)
            .fold(0.0, f64::max);
        let failure = families
            .iter()
            .find_map(|(k, r)| r.failure.as_ref().map(|f| format!("relation {k}: {f}")));
        RelationReport {
            families,
            passed,
            worst_residual,
            failure,
        }
    }
}

fn record<F: Field>(
    rep: &mut CheckReport,
    lhs: &Mat<F>,
    rhs: &Mat<F>,
    tol: Tol,
    what: impl FnOnce() -> String,
) {
    let d = lhs.sub(rhs);
    rep.record(d.is_zero(tol), d.max_residual(), what);
}

fn ratio<F: Field>(num: usize, den: usize) -> F {
    F::from_rational(&Rational::new(num as i64, den as i64))
}

/// Relations (1)–(5):
///
/// 1. `Σ_v q^{(s,r)}_{(i,j),(k,v)} q^{(s′,r)}_{(i′,j′),(v,l)} = δ_{j i′} δ_{s s′} q^{(s,r)}_{(i,j′),(k,l)}`
/// 2. `Σ_v n_s⁻¹ q^{(s,r)}_{(i,v),(k,l)} q^{(s,r′)}_{(v,j),(k′,l′)} = δ_{l k′} δ_{r r′} n_r⁻¹ q^{(s,r)}_{(i,j),(k,l′)}`
/// 3. `(q^{(s,r)}_{(i,j),(k,l)})* = q^{(s,r)}_{(j,i),(l,k)}`
/// 4. `Σ_s Σ_i q^{(s,r)}_{(i,i),(k,l)} = δ_{kl}`
/// 5. `Σ_r Σ_k n_r q^{(s,r)}_{(i,j),(k,k)} = n_s δ_{ij}`
pub fn check_relations<F: Field>(
    pres: &QautPresentation,
    asg: &GeneratorAssignment<F>,
    tol: Tol,
) -> Result<RelationReport, QautError> {
    if asg.len() != pres.len() {
        return Err(QautError::IncompleteAssignment {
            expected: pres.len(),
            got: asg.len(),
        });
    }
    let spec = pres.spec();
    let m = spec.m();
    let n = |t: usize| spec.n(t);
    let q = |s, r, i, j, k, l| {
        asg.get(
            pres.index(&QGen::new(s, r, i, j, k, l))
                .expect("generator in range"),
        )
    };
    let size = asg.size();
    let zero = Mat::<F>::zeros(size, size);
    let one = Mat::<F>::identity(size);
    let mut fam = BTreeMap::new();

    let mut r1 = CheckReport::new();
    for s in 0..m {
        for s2 in 0..m {
            for r in 0..m {
                for i in 0..n(s) {
                    for j in 0..n(s) {
                        for i2 in 0..n(s2) {
                            for j2 in 0..n(s2) {
                                for k in 0..n(r) {
                                    for l in 0..n(r) {
                                        let lhs = (0..n(r)).fold(zero.clone(), |acc, v| {
                                            acc.add(
                                                &q(s, r, i, j, k, v).mul(q(s2, r, i2, j2, v, l)),
                                            )
                                        });
                                        let rhs = if s == s2 && j == i2 {
                                            q(s, r, i, j2, k, l).clone()
                                        } else {
                                            zero.clone()
                                        };
                                        record(&mut r1, &lhs, &rhs, tol, || {
                                            format!("(s,s′,r)=({s},{s2},{r}) (i,j,i′,j′)=({i},{j},{i2},{j2}) (k,l)=({k},{l})")
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    fam.insert("1".to_string(), r1);

    let mut r2 = CheckReport::new();
    for s in 0..m {
        for r in 0..m {
            for r2i in 0..m {
                let inv_ns: F = ratio(1, n(s));
                let inv_nr: F = ratio(1, n(r));
                for i in 0..n(s) {
                    for j in 0..n(s) {
                        for k in 0..n(r) {
                            for l in 0..n(r) {
                                for k2 in 0..n(r2i) {
                                    for l2 in 0..n(r2i) {
                                        let lhs = (0..n(s))
                                            .fold(zero.clone(), |acc, v| {
                                                acc.add(
                                                    &q(s, r, i, v, k, l)
                                                        .mul(q(s, r2i, v, j, k2, l2)),
                                                )
                                            })
                                            .scale(&inv_ns);
                                        let rhs = if r == r2i && l == k2 {
                                            q(s, r, i, j, k, l2).scale(&inv_nr)
                                        } else {
                                            zero.clone()
                                        };
                                        record(&mut r2, &lhs, &rhs, tol, || {
                                            format!("(s,r,r′)=({s},{r},{r2i}) (i,j)=({i},{j}) (k,l,k′,l′)=({k},{l},{k2},{l2})")
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    fam.insert("2".to_string(), r2);

    let mut r3 = CheckReport::new();
    for g in pres.gens() {
        let a = g.adjoint();
        record(
            &mut r3,
            &q(g.s, g.r, g.i, g.j, g.k, g.l).adjoint(),
            q(a.s, a.r, a.i, a.j, a.k, a.l),
            tol,
            || format!("{g}"),
        );
    }
    fam.insert("3".to_string(), r3);

    let mut r4 = CheckReport::new();
    for r in 0..m {
        for k in 0..n(r) {
            for l in 0..n(r) {
                let mut lhs = zero.clone();
                for s in 0..m {
                    for i in 0..n(s) {
                        lhs = lhs.add(q(s, r, i, i, k, l));
                    }
                }
                let rhs = if k == l { one.clone() } else { zero.clone() };
                record(&mut r4, &lhs, &rhs, tol, || {
                    format!("r={r} (k,l)=({k},{l})")
                });
            }
        }
    }
    fam.insert("4".to_string(), r4);

    let mut r5 = CheckReport::new();
    for s in 0..m {
        for i in 0..n(s) {
            for j in 0..n(s) {
                let mut lhs = zero.clone();
                for r in 0..m {
                    let w = F::from_integer(n(r) as i64);
                    for k in 0..n(r) {
                        lhs = lhs.add(&q(s, r, i, j, k, k).scale(&w));
                    }
                }
                let rhs = if i == j {
                    one.scale(&F::from_integer(n(s) as i64))
                } else {
                    zero.clone()
                };
                record(&mut r5, &lhs, &rhs, tol, || {
                    format!("s={s} (i,j)=({i},{j})")
                });
            }
        }
    }
    fam.insert("5".to_string(), r5);
    Ok(RelationReport::from_families(fam))
}

/// Magic-unitary relations: `u = u* = u²`, row and column sums `= 1`, and
/// (implied, checked anyway) orthogonality along rows and columns.
pub fn check_magic_unitary<F: Field>(
    pres: &SnPresentation,
    asg: &GeneratorAssignment<F>,
    tol: Tol,
) -> Result<RelationReport, QautError> {
    if asg.len() != pres.len() {
        return Err(QautError::IncompleteAssignment {
            expected: pres.len(),
            got: asg.len(),
        });
    }
    let big_n = pres.big_n();
    let u = |p: usize, q: usize| asg.get(p * big_n + q);
    let size = asg.size();
    let zero = Mat::<F>::zeros(size, size);
    let one = Mat::<F>::identity(size);
    let label = |p: usize, q: usize| format!("{}", pres.gen(p * big_n + q));
    let (mut proj, mut rows, mut cols, mut orth) = (
        CheckReport::new(),
        CheckReport::new(),
        CheckReport::new(),
        CheckReport::new(),
    );
    for p in 0..big_n {
        for q in 0..big_n {
            let x = u(p, q);
            record(&mut proj, &x.adjoint(), x, tol, || {
                format!("{} not self-adjoint", label(p, q))
            });
            record(&mut proj, &x.mul(x), x, tol, || {
                format!("{} not idempotent", label(p, q))
            });
            for q2 in 0..big_n {
                if q2 != q {
                    record(&mut orth, &x.mul(u(p, q2)), &zero, tol, || {
                        format!("{} {}", label(p, q), label(p, q2))
                    });
                    record(&mut orth, &u(q, p).mul(u(q2, p)), &zero, tol, || {
                        format!("{} {}", label(q, p), label(q2, p))
                    });
                }
            }
        }
        let row = (0..big_n).fold(zero.clone(), |acc, q| acc.add(u(p, q)));
        record(&mut rows, &row, &one, tol, || {
            format!("row {}", pres.points()[p])
        });
        let col = (0..big_n).fold(zero.clone(), |acc, q| acc.add(u(q, p)));
        record(&mut cols, &col, &one, tol, || {
            format!("column {}", pres.points()[p])
        });
    }
    let mut fam = BTreeMap::new();
    fam.insert("projection".to_string(), proj);
    fam.insert("row-sum".to_string(), rows);
    fam.insert("column-sum".to_string(), cols);
    fam.insert("orthogonality".to_string(), orth);
    Ok(RelationReport::from_families(fam))
}
