//! The δ-form condition `m ∘ m* = δ² id` for GNS inner products.

use super::structalg::StructAlgebra;
use super::AlgebraError;
use crate::arith::{Field, Mat, Tol};

/// Returns `δ²` when `m m*` is scalar on `(A, ψ)`.
///
/// `m*` is the adjoint of multiplication `A ⊗ A → A` for the inner products
/// `⟨x,y⟩ = ψ(x* y)`, i.e. `m* = (G ⊗ G)⁻¹ M† G` with `G` the Gram matrix.
pub fn delta_form_check<F: Field>(
    a: &StructAlgebra<F>,
    psi: &[F],
    tol: Tol,
) -> Result<F, AlgebraError> {
    let n = a.dim();
    let g = a.gram(psi);
    if !g.is_hermitian_positive_definite(tol) {
        return Err(AlgebraError::NotFaithful);
    }
    let k = g.inverse(tol).ok_or(AlgebraError::NotFaithful)?;
    // W = M (K ⊗ K), with M[l, i n + j] = c^l_ij
    let mut w = Mat::<F>::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (l, c) in a.basis_product(i, j) {
                for ip in 0..n {
                    let ki = c.mul(k.get(i, ip));
                    if ki.is_zero() {
                        continue;
                    }
                    for jp in 0..n {
                        let kj = k.get(j, jp);
                        if kj.is_zero() {
                            continue;
                        }
                        let col = ip * n + jp;
                        let v = w.get(*l, col).add(&ki.mul(kj));
                        w.set(*l, col, v);
                    }
                }
            }
        }
    }
    // R = W M†
    let mut r = Mat::<F>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            for (l2, c) in a.basis_product(i, j) {
                let cc = c.conj();
                for l in 0..n {
                    let x = w.get(l, i * n + j);
                    if !x.is_zero() {
                        let v = r.get(l, *l2).add(&x.mul(&cc));
                        r.set(l, *l2, v);
                    }
                }
            }
        }
    }
    let mm = r.mul(&g);
    let delta2 = mm.get(0, 0).clone();
    let residual = mm.sub(&Mat::identity(n).scale(&delta2));
    if !residual.is_zero(tol) {
        return Err(AlgebraError::NotDeltaForm {
            residual: residual.max_residual(),
        });
    }
    Ok(delta2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{function_algebra, multimatrix, BlockSpec};
    use crate::arith::{Coeff, Cyclotomic};

    type Q = Cyclotomic;

    #[test]
    fn plancherel_delta_is_dimension() {
        let tol = Tol::default();
        for p in ["1", "2", "3", "2,1", "1,1,1", "2,2"] {
            let s: BlockSpec = p.parse().unwrap();
            let a = multimatrix::<Q>(&s, tol);
            let d2 = delta_form_check(&a, a.trace_vector(), tol).unwrap();
            assert_eq!(d2, Q::from_integer(s.big_n() as i64), "partition {p}");
        }
    }

    #[test]
    fn uniform_state_on_c3() {
        let tol = Tol::default();
        let a = function_algebra::<Q>(3, tol);
        assert_eq!(
            delta_form_check(&a, a.trace_vector(), tol).unwrap(),
            Q::from_integer(3)
        );
    }

    #[test]
    fn non_uniform_abelian_state_is_not_a_delta_form() {
        let tol = Tol::default();
        let a = function_algebra::<Q>(2, tol);
        let psi = vec![Q::from_ratio(3, 4), Q::from_ratio(1, 4)];
        assert!(matches!(
            delta_form_check(&a, &psi, tol),
            Err(AlgebraError::NotDeltaForm { .. })
        ));
    }

    #[test]
    fn every_faithful_state_on_m2_is_a_delta_form() {
        // ψ = Tr(Q ·) with Q = diag(3/4, 1/4) gives δ² = Tr(Q⁻¹) = 16/3
        let tol = Tol::default();
        let a = multimatrix::<Q>(&"2".parse().unwrap(), tol);
        let psi = vec![
            Q::from_ratio(3, 4),
            Q::zero(),
            Q::zero(),
            Q::from_ratio(1, 4),
        ];
        assert_eq!(
            delta_form_check(&a, &psi, tol).unwrap(),
            Q::from_ratio(16, 3)
        );
    }

    #[test]
    fn degenerate_state_is_not_faithful() {
        let tol = Tol::default();
        let a = function_algebra::<Q>(2, tol);
        let psi = vec![Q::one(), Q::zero()];
        assert!(matches!(
            delta_form_check(&a, &psi, tol),
            Err(AlgebraError::NotFaithful)
        ));
    }
}
