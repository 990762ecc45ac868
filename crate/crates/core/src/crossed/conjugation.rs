//! The conjugation `Φ = Ad V₁₂` intertwining `A ⋊ Λ` with `_σA ⋊ Λ` on
//! `ℓ²(Λ̂) ⊗ ℓ²(Λ̂) ⊗ A`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::action::GroupAction;
use super::CrossedError;
use crate::arith::{Field, Tol};
use crate::cocycle::{GradedAlgebra, GroupCocycle};
use crate::CheckReport;

/// Sparse vector on `ℓ²(Λ̂)⊗ℓ²(Λ̂)⊗A`, keyed by `(k, k′, basis index)`.
type Vector<F> = BTreeMap<(usize, usize, usize), F>;

fn push<F: Field>(v: &mut Vector<F>, key: (usize, usize, usize), c: F) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(key).or_insert_with(F::zero);
    *e = e.add(&c);
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationCertificate {
    pub group_order: usize,
    pub algebra_dim: usize,
    pub report: CheckReport,
}

/// For each basis element `x` of `A`, each `g ∈ Λ̂` and each `k′`, compares
/// `Φ(α′_σ(x)(χ_g)₁)` with `Σ_h σ(h,g) (λ_h⊗λ_h⊗α^{(h)}(x))(χ_g)₁` on all
/// vectors `δ_k⊗δ_{k′}⊗b_j`.
///
/// Here `α′_σ(x) = Σ_h λ_h ⊗ λ^{(σ)}_h ⊗ α^{(h)}(x)`, `V(δ_k⊗δ_{k′}) =
/// σ(k⁻¹,k′) δ_k⊗δ_{k′}`, and `α^{(h)}` comes from Fourier averaging over
/// the dual action rather than from the stored degrees.
pub fn conjugation_lemma_check<F: Field>(
    graded: &GradedAlgebra<F>,
    sigma: &GroupCocycle,
    tol: Tol,
) -> Result<ConjugationCertificate, CrossedError> {
    let grp = graded.group();
    if sigma.group() != grp {
        return Err(CrossedError::GroupMismatch);
    }
    if let Some(k) = (0..grp.order()).find(|&k| !sigma.value(k, grp.neg(k)).is_one()) {
        return Err(CrossedError::NormalizationMissing(grp.label(k)));
    }
    let action = GroupAction::from_grading(graded, tol)?;
    let a = graded.algebra();
    let (n, l) = (a.dim(), grp.order());
    let s = |g: usize, h: usize| -> F { sigma.value(g, h).to_field() };
    let basis: Vec<Vec<F>> = (0..n).map(|i| a.basis_vector(i)).collect();

    let mut report = CheckReport::new();
    for (xi, x) in basis.iter().enumerate() {
        // (h, α^{(h)}(x)) for the nonzero components
        let comps: Vec<(usize, Vec<F>)> = (0..l)
            .map(|h| (h, action.spectral_component(x, h)))
            .filter(|(_, c)| c.iter().any(|v| !v.is_zero()))
            .collect();
        for g in 0..l {
            for kp in 0..l {
                let mut worst = 0.0f64;
                let mut ok = true;
                for k in 0..l {
                    for bv in &basis {
                        let mut lhs = Vector::new();
                        let mut rhs = Vector::new();
                        if k == g {
                            let undo_v = s(grp.neg(k), kp).conj();
                            for (h, comp) in &comps {
                                let (nk, nkp) = (grp.add(*h, k), grp.add(*h, kp));
                                let cl = undo_v.mul(&s(*h, kp)).mul(&s(grp.neg(nk), nkp));
                                let cr = s(*h, g);
                                for (j, v) in a.mul(comp, bv).into_iter().enumerate() {
                                    push(&mut lhs, (nk, nkp, j), v.mul(&cl));
                                    push(&mut rhs, (nk, nkp, j), v.mul(&cr));
                                }
                            }
                        }
                        for key in lhs.keys().chain(rhs.keys()) {
                            let z = F::zero();
                            let d = lhs.get(key).unwrap_or(&z).sub(rhs.get(key).unwrap_or(&z));
                            worst = worst.max(d.residual());
                            ok &= d.near_zero(tol);
                        }
                    }
                }
                report.record(ok, worst, || {
                    format!(
                        "x = {}, g = {}, k′ = {}",
                        a.labels()[xi],
                        grp.label(g),
                        grp.label(kp)
                    )
                });
            }
        }
    }
    Ok(ConjugationCertificate {
        group_order: l,
        algebra_dim: n,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BlockSpec;
    use crate::arith::Cyclotomic;
    use crate::cocycle::{base_cocycle, fourier_function_algebra, sigma_zero};

    type Q = Cyclotomic;

    #[test]
    fn qubit_block_is_exact() {
        let tol = Tol::default();
        let s: BlockSpec = "2".parse().unwrap();
        let (sigma, _) = sigma_zero(&s);
        let c =
            conjugation_lemma_check(&fourier_function_algebra::<Q>(&s, tol), &sigma, tol).unwrap();
        assert!(c.report.passed, "{:?}", c.report);
        assert_eq!(c.report.cases, 64);
        assert_eq!(c.report.worst_residual, 0.0);
    }

    #[test]
    fn trivial_cocycle_degenerates() {
        let tol = Tol::default();
        let g = fourier_function_algebra::<Q>(&"2".parse().unwrap(), tol);
        let c =
            conjugation_lemma_check(&g, &GroupCocycle::trivial(g.group().clone()), tol).unwrap();
        assert!(c.report.passed);
    }

    #[test]
    fn unnormalized_cocycle_is_refused() {
        let tol = Tol::default();
        let g = fourier_function_algebra::<Q>(&"2".parse().unwrap(), tol);
        assert!(matches!(
            conjugation_lemma_check(&g, &base_cocycle(2), tol),
            Err(CrossedError::NormalizationMissing(_))
        ));
    }

    #[test]
    fn all_partitions_with_small_gamma() {
        let tol = Tol::default();
        for p in ["1", "3", "2,1", "2,2", "3,1", "2,1,1", "4"] {
            let s: BlockSpec = p.parse().unwrap();
            let (sigma, _) = sigma_zero(&s);
            let c = conjugation_lemma_check(&fourier_function_algebra::<Q>(&s, tol), &sigma, tol)
                .unwrap();
            assert!(c.report.passed, "{p}: {:?}", c.report.failure);
        }
    }
}
