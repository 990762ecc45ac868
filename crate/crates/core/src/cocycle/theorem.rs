//! Certificate that `_σ₀C(X) ≅ ⊕_r M_{n_r}`.

use serde::Serialize;

use super::cocycle::{base_cocycle, normalize_inverse_pairing, product_cocycle, GroupCocycle};
use super::graded::{dual_group, fourier_function_algebra, fourier_index, GradedAlgebra};
use super::group::Phase;
use super::CocycleError;
use crate::algebra::{recognize_blocks, BlockDecomposition, BlockSpec};
use crate::arith::{Backend, Field, Mat, Tol};
use crate::pauli::WeylBasis;
use crate::CheckReport;

pub const IDENTIFICATION: &str = "<[a,b],[j,k]> = zeta_n^(a j + b k)";
pub const BASE_POINT: &str = "(0,0) in each Y_r x Y_r";

#[derive(Clone, Debug, Serialize)]
pub struct PsiEntry {
    pub block: usize,
    pub element: String,
    pub psi: Phase,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistCertificate {
    pub partition: String,
    pub backend: Backend,
    pub identification: &'static str,
    pub base_point: &'static str,
    /// ψ per block, with `ω_t = ω′_t ∂ψ`.
    pub psi: Vec<PsiEntry>,
    pub cocycle_triples_checked: usize,
    pub inverse_pairing_trivial: bool,
    pub expected_blocks: Vec<usize>,
    pub blocks: BlockDecomposition,
    pub cross_block_orthogonal: bool,
    /// Basis elements whose ♯ differs from * by a nontrivial unit scalar.
    pub sharp_scalars_nontrivial: usize,
    /// Explicit `e_χ ↦ ψ(χ) ζ^{-ab} T_{a,b}` for a single block.
    pub isomorphism: Option<CheckReport>,
    pub passed: bool,
}

/// `σ₀ = ∏_t ω_t` with each `ω_t` the normalization of `ω′_t`.
pub fn sigma_zero(spec: &BlockSpec) -> (GroupCocycle, Vec<Vec<Phase>>) {
    let normalized: Vec<_> = spec
        .sizes()
        .iter()
        .map(|&n| normalize_inverse_pairing(&base_cocycle(n as u32)))
        .collect();
    let parts: Vec<GroupCocycle> = normalized.iter().map(|x| x.cocycle.clone()).collect();
    let sigma = product_cocycle(&parts).expect("product of normalized cocycles");
    (sigma, normalized.into_iter().map(|x| x.psi).collect())
}

/// Twists the Fourier-graded `C(X)` by `σ₀` and recognizes the result.
pub fn verify_twist_theorem<F: Field>(
    spec: &BlockSpec,
    tol: Tol,
    seed: u64,
) -> Result<TwistCertificate, CocycleError> {
    let (parts, _) = dual_group(spec);
    let (sigma, psis) = sigma_zero(spec);
    let algebra = fourier_function_algebra::<F>(spec, tol);
    let twisted = algebra.twist_left(&sigma, tol)?;
    let blocks =
        recognize_blocks(twisted.graded.algebra(), tol, seed).map_err(CocycleError::Algebra)?;
    let mut expected = spec.sizes().to_vec();
    expected.sort_unstable();

    let tw = twisted.graded.algebra();
    let mut orthogonal = true;
    for r in 0..spec.m() {
        for r2 in 0..spec.m() {
            if r == r2 {
                continue;
            }
            for a in 0..parts[r].order() {
                for b in 0..parts[r2].order() {
                    let i = fourier_index(spec, r, a);
                    let j = fourier_index(spec, r2, b);
                    orthogonal &= tw.basis_product(i, j).is_empty();
                }
            }
        }
    }

    let isomorphism = if spec.m() == 1 {
        Some(single_block_isomorphism(
            &twisted.graded,
            &psis[0],
            spec.n(0),
            tol,
        )?)
    } else {
        None
    };

    let psi = psis
        .iter()
        .enumerate()
        .flat_map(|(t, p)| {
            let g = &parts[t];
            p.iter().enumerate().map(move |(h, v)| PsiEntry {
                block: t + 1,
                element: g.label(h),
                psi: *v,
            })
        })
        .collect();

    let inverse_pairing_trivial = sigma.inverse_pairing_is_trivial();
    let passed = blocks.sizes == expected
        && orthogonal
        && inverse_pairing_trivial
        && isomorphism.as_ref().is_none_or(|r| r.passed);
    Ok(TwistCertificate {
        partition: spec.to_string(),
        backend: F::BACKEND,
        identification: IDENTIFICATION,
        base_point: BASE_POINT,
        psi,
        cocycle_triples_checked: sigma.triples_checked(),
        inverse_pairing_trivial,
        expected_blocks: expected,
        blocks,
        cross_block_orthogonal: orthogonal,
        sharp_scalars_nontrivial: twisted.nontrivial_sharp_count(),
        isomorphism,
        passed,
    })
}

/// Checks `Φ(e_χ) = ψ(χ) ζ_n^{-ab} T_{a,b}` for `χ = [a,b]` is a unital
/// trace-preserving *-homomorphism `_ωC(Z_n²) → M_n`; it is then an
/// isomorphism because the `T_{a,b}` are a basis.
fn single_block_isomorphism<F: Field>(
    twisted: &GradedAlgebra<F>,
    psi: &[Phase],
    n: usize,
    tol: Tol,
) -> Result<CheckReport, CocycleError> {
    let weyl = WeylBasis::<F>::new(n, tol).map_err(|e| CocycleError::Isomorphism(e.to_string()))?;
    let a = twisted.algebra();
    let g = twisted.group();
    let image: Vec<Mat<F>> = (0..a.dim())
        .map(|chi| {
            let c = g.coords(chi);
            let (x, y) = (c[0] as i64, c[1] as i64);
            let phase = psi[chi].mul(&Phase::new(-x * y, n as u32));
            weyl.t(x, y).scale(&phase.to_field())
        })
        .collect();
    let apply = |v: &[F]| -> Mat<F> {
        v.iter()
            .zip(&image)
            .filter(|(c, _)| !c.is_zero())
            .fold(Mat::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)))
    };
    let mut rep = CheckReport::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = apply(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
            let rhs = image[i].mul(&image[j]);
            let d = lhs.sub(&rhs);
            rep.record(d.is_zero(tol), d.max_residual(), || {
                format!("Φ({0}·{1}) ≠ Φ({0})Φ({1})", a.labels()[i], a.labels()[j])
            });
        }
        let d = apply(&a.star(&a.basis_vector(i))).sub(&image[i].adjoint());
        rep.record(d.is_zero(tol), d.max_residual(), || {
            format!("Φ({}♯) ≠ Φ(·)*", a.labels()[i])
        });
        let t = image[i].normalized_trace().sub(&a.tau(&a.basis_vector(i)));
        rep.record(t.near_zero(tol), t.residual(), || {
            format!("trace mismatch at {}", a.labels()[i])
        });
    }
    let d = apply(a.unit()).sub(&Mat::identity(n));
    rep.record(d.is_zero(tol), d.max_residual(), || "Φ(1) ≠ I".into());
    Ok(rep)
}
