//! The projection-valued measure `e_{s,a,b} ↦ P_{s,a,b} ∈ B ⊗ M_d`.

use serde::Serialize;

use super::QautError;
use crate::algebra::BlockSpec;
use crate::arith::{Field, Mat, Rational, SparseMat, Tol};
use crate::pauli::{paren, weyl_basis};
use crate::CheckReport;

#[derive(Clone, Debug, Serialize)]
pub struct PvmCertificate {
    pub partition: String,
    pub outcomes: usize,
    /// `B ⊗ M_d` is stored block-diagonally with side `(Σ n_r)·d`.
    pub side: usize,
    pub projection: CheckReport,
    pub orthogonality: CheckReport,
    pub completeness: CheckReport,
    pub partial_trace: CheckReport,
    pub plancherel: CheckReport,
    /// Rank of each `P_{s,a,b}`, in point order.
    pub ranks: Vec<usize>,
    pub passed: bool,
}

/// Row of `(E^{(r)}_{i·}) ⊗ (row α of M_d)` in the block-diagonal layout.
fn row(spec: &BlockSpec, r: usize, i: usize, alpha: usize) -> usize {
    let before: usize = spec.sizes()[..r].iter().sum();
    (before + i) * spec.d() + alpha
}

/// `P_{s,a,b} = Σ_{i,j} E^{(s)}_{ij} ⊗ n_s⁻¹ (U*_{s,a,b} E_{ij} U_{s,a,b})^{(s)}`
/// with `U_{s,a,b} = T_{a,b}`, in point order `(s, a, b)`.
pub fn pvm_family<F: Field>(spec: &BlockSpec, tol: Tol) -> Result<Vec<SparseMat<F>>, QautError> {
    let side = spec.sizes().iter().sum::<usize>() * spec.d();
    let mut out = Vec::with_capacity(spec.big_n());
    for s in 0..spec.m() {
        let n = spec.n(s);
        let w = weyl_basis::<F>(n, tol)?;
        let inv = F::from_rational(&Rational::new(1, n as i64));
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let u = w.t(a, b);
                let mut p = SparseMat::zeros(side, side);
                for i in 0..n {
                    for j in 0..n {
                        let mut e = Mat::zeros(n, n);
                        e.set(i, j, F::one());
                        let leg = paren(spec, s, &u.adjoint().mul(&e).mul(u))?;
                        for (al, be, v) in leg.iter() {
                            p.add_at(row(spec, s, i, al), row(spec, s, j, be), &v.mul(&inv));
                        }
                    }
                }
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// `(n_s Tr_{n_s} ⊗ id)` and `(ψ ⊗ id)` restricted to block `s`.
fn block_partial_trace<F: Field>(
    spec: &BlockSpec,
    p: &SparseMat<F>,
    s: usize,
    weight: &F,
) -> SparseMat<F> {
    let d = spec.d();
    let mut out = SparseMat::zeros(d, d);
    for i in 0..spec.n(s) {
        for al in 0..d {
            for be in 0..d {
                out.add_at(
                    al,
                    be,
                    &p.get(row(spec, s, i, al), row(spec, s, i, be)).mul(weight),
                );
            }
        }
    }
    out
}

pub fn uet_pvm<F: Field>(spec: &BlockSpec, tol: Tol) -> Result<PvmCertificate, QautError> {
    let fam = pvm_family::<F>(spec, tol)?;
    let side = spec.sizes().iter().sum::<usize>() * spec.d();
    let d = spec.d();
    let big_n = spec.big_n();
    let label = |idx: usize| {
        let (s, a, b) = spec.unit_of_index(idx);
        format!("P({},{},{})", s + 1, a, b)
    };
    let mut projection = CheckReport::new();
    let mut orthogonality = CheckReport::new();
    let mut partial_trace = CheckReport::new();
    let mut plancherel = CheckReport::new();
    for (x, p) in fam.iter().enumerate() {
        let d1 = p.mul(p).sub(p);
        let d2 = p.adjoint().sub(p);
        projection.record(
            d1.is_zero(tol) && d2.is_zero(tol),
            d1.max_residual().max(d2.max_residual()),
            || format!("{} is not a projection", label(x)),
        );
        for (y, q) in fam.iter().enumerate().skip(x + 1) {
            let pq = p.mul(q);
            orthogonality.record(pq.is_zero(tol), pq.max_residual(), || {
                format!("{} {} not orthogonal", label(x), label(y))
            });
        }
        let (s, _, _) = spec.unit_of_index(x);
        let ns = F::from_integer(spec.n(s) as i64);
        let pt = block_partial_trace(spec, p, s, &ns).sub(&SparseMat::identity(d));
        partial_trace.record(pt.is_zero(tol), pt.max_residual(), || label(x).to_string());
        let psi_w = F::from_rational(&Rational::new(spec.n(s) as i64, big_n as i64));
        let want = SparseMat::identity(d).scale(&F::from_rational(&Rational::new(1, big_n as i64)));
        let pl = block_partial_trace(spec, p, s, &psi_w).sub(&want);
        plancherel.record(pl.is_zero(tol), pl.max_residual(), || label(x).to_string());
    }
    let mut completeness = CheckReport::new();
    let sum = fam
        .iter()
        .fold(SparseMat::zeros(side, side), |acc, p| acc.add(p));
    let dc = sum.sub(&SparseMat::identity(side));
    completeness.record(dc.is_zero(tol), dc.max_residual(), || {
        "Σ P ≠ 1 ⊗ I_d".into()
    });
    let ranks = fam.iter().map(|p| p.to_dense().rank(tol)).collect();
    let passed = [
        &projection,
        &orthogonality,
        &completeness,
        &partial_trace,
        &plancherel,
    ]
    .iter()
    .all(|r| r.passed);
    Ok(PvmCertificate {
        partition: spec.to_string(),
        outcomes: fam.len(),
        side,
        projection,
        orthogonality,
        completeness,
        partial_trace,
        plancherel,
        ranks,
        passed,
    })
}
