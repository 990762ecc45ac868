//! Actions of finite abelian groups on finite-dimensional *-algebras.

use super::CrossedError;
use crate::algebra::{function_algebra, BlockSpec, StructAlgebra};
use crate::arith::{Field, Mat, Tol};
use crate::cocycle::{dual_group, FinAbGroup, GradedAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct GroupAction<F> {
    group: FinAbGroup,
    alg: StructAlgebra<F>,
    /// Column `i` of `maps[g]` is `α_g(b_i)`.
    maps: Vec<Mat<F>>,
}

fn vec_eq<F: Field>(x: &[F], y: &[F], tol: Tol) -> bool {
    x.iter().zip(y).all(|(a, b)| a.approx_eq(b, tol))
}

impl<F: Field> GroupAction<F> {
    /// Verifies that every `α_g` is a trace-preserving unital
    /// *-automorphism and that `g ↦ α_g` is a homomorphism.
    pub fn new(
        group: FinAbGroup,
        alg: StructAlgebra<F>,
        maps: Vec<Mat<F>>,
        tol: Tol,
    ) -> Result<Self, CrossedError> {
        let act = GroupAction { group, alg, maps };
        act.verify(tol)?;
        Ok(act)
    }

    pub fn from_fn(
        group: FinAbGroup,
        alg: StructAlgebra<F>,
        f: impl Fn(usize, &[F]) -> Vec<F>,
        tol: Tol,
    ) -> Result<Self, CrossedError> {
        let n = alg.dim();
        let maps = (0..group.order())
            .map(|g| {
                let cols: Vec<Vec<F>> = (0..n).map(|i| f(g, &alg.basis_vector(i))).collect();
                Mat::from_fn(n, n, |r, c| cols[c][r].clone())
            })
            .collect();
        Self::new(group, alg, maps, tol)
    }

    pub fn trivial(group: FinAbGroup, alg: StructAlgebra<F>) -> Self {
        let maps = vec![Mat::identity(alg.dim()); group.order()];
        GroupAction { group, alg, maps }
    }

    /// `α_g(b) = ⟨deg b, g⟩ b`: the action dual to a grading by the same
    /// group, through the pairing of [`FinAbGroup::pairing`].
    pub fn from_grading(graded: &GradedAlgebra<F>, tol: Tol) -> Result<Self, CrossedError> {
        let group = graded.group().clone();
        let g2 = group.clone();
        let degrees = graded.degrees().to_vec();
        Self::from_fn(
            group,
            graded.algebra().clone(),
            move |g, x| {
                x.iter()
                    .zip(&degrees)
                    .map(|(c, &d)| c.mul(&g2.pairing(d, g).to_field()))
                    .collect()
            },
            tol,
        )
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn algebra(&self) -> &StructAlgebra<F> {
        &self.alg
    }

    pub fn apply(&self, g: usize, x: &[F]) -> Vec<F> {
        self.maps[g].mul_vec(x)
    }

    pub fn matrix(&self, g: usize) -> &Mat<F> {
        &self.maps[g]
    }

    pub fn verify(&self, tol: Tol) -> Result<(), CrossedError> {
        let a = &self.alg;
        let n = a.dim();
        let order = self.group.order();
        if self.maps.len() != order || self.maps.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(CrossedError::Shape);
        }
        let label = |g| self.group.label(g);
        let basis: Vec<Vec<F>> = (0..n).map(|i| a.basis_vector(i)).collect();
        for g in 0..order {
            let img: Vec<Vec<F>> = basis.iter().map(|b| self.apply(g, b)).collect();
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.apply(g, &a.mul(&basis[i], &basis[j]));
                    if !vec_eq(&lhs, &a.mul(&img[i], &img[j]), tol) {
                        return Err(CrossedError::NotAutomorphism(format!(
                            "{} not multiplicative",
                            label(g)
                        )));
                    }
                }
                if !vec_eq(&self.apply(g, &a.star(&basis[i])), &a.star(&img[i]), tol) {
                    return Err(CrossedError::NotAutomorphism(format!(
                        "{} breaks the involution",
                        label(g)
                    )));
                }
                if !a.tau(&img[i]).approx_eq(&a.tau(&basis[i]), tol) {
                    return Err(CrossedError::NotTracePreserving(label(g)));
                }
            }
            if !vec_eq(&self.apply(g, a.unit()), a.unit(), tol) {
                return Err(CrossedError::NotAutomorphism(format!(
                    "{} not unital",
                    label(g)
                )));
            }
            for h in 0..order {
                let composed = self.maps[g].mul(&self.maps[h]);
                if !composed.approx_eq(&self.maps[self.group.add(g, h)], tol) {
                    return Err(CrossedError::NotAction(format!(
                        "{} {}",
                        label(g),
                        label(h)
                    )));
                }
            }
        }
        if !self.maps[0].approx_eq(&Mat::identity(n), tol) {
            return Err(CrossedError::NotAction(
                "identity does not act trivially".into(),
            ));
        }
        Ok(())
    }

    /// `α^{(χ)}(x) = |Λ|⁻¹ Σ_g conj⟨χ, g⟩ α_g(x)`, the spectral projection
    /// for the character `χ`.
    pub fn spectral_component(&self, x: &[F], chi: usize) -> Vec<F> {
        let order = self.group.order();
        let mut acc = vec![F::zero(); x.len()];
        for g in 0..order {
            let c: F = self.group.pairing(chi, g).inv().to_field();
            for (a, v) in acc.iter_mut().zip(self.apply(g, x)) {
                *a = a.add(&v.mul(&c));
            }
        }
        let inv = F::from_ratio(1, order as i64);
        acc.iter().map(|a| a.mul(&inv)).collect()
    }
}

/// `Γ = ∏ Z_{n_r}²` acting on `C(X)`, `X = ∐ Y_r × Y_r`, with block `r` of
/// `Γ` translating `X_r`: `δ_x ↦ δ_{x+γ_r}`.
pub fn translation_action<F: Field>(spec: &BlockSpec, tol: Tol) -> GroupAction<F> {
    let (parts, prod) = dual_group(spec);
    let alg = function_algebra::<F>(spec.big_n(), tol);
    let split = |g: usize| -> Vec<usize> {
        let c = prod.coords(g);
        (0..parts.len())
            .map(|r| parts[r].index(&[c[2 * r] as i64, c[2 * r + 1] as i64]))
            .collect()
    };
    let n = spec.big_n();
    let maps = (0..prod.order())
        .map(|g| {
            let gs = split(g);
            let mut m = Mat::zeros(n, n);
            for (r, part) in parts.iter().enumerate() {
                for x in 0..part.order() {
                    let to = spec.offset(r) + part.add(x, gs[r]);
                    m.set(to, spec.offset(r) + x, F::one());
                }
            }
            m
        })
        .collect();
    GroupAction::new(prod, alg, maps, tol).expect("translations are trace-preserving automorphisms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multimatrix;
    use crate::arith::{Coeff, Cyclotomic};
    use crate::cocycle::fourier_function_algebra;

    type Q = Cyclotomic;

    #[test]
    fn translations_form_an_action() {
        let tol = Tol::default();
        for p in ["2", "2,1", "3"] {
            let t = translation_action::<Q>(&p.parse().unwrap(), tol);
            assert_eq!(
                t.group().order(),
                p.split(',')
                    .map(|n| n.parse::<usize>().unwrap().pow(2))
                    .product()
            );
        }
    }

    #[test]
    fn spectral_components_match_the_grading() {
        let tol = Tol::default();
        let g = fourier_function_algebra::<Q>(&"2,1".parse().unwrap(), tol);
        let act = GroupAction::from_grading(&g, tol).unwrap();
        let x: Vec<Q> = (0..g.algebra().dim())
            .map(|i| Q::from_integer(i as i64 + 1))
            .collect();
        for chi in 0..g.group().order() {
            assert_eq!(act.spectral_component(&x, chi), g.component(&x, chi));
        }
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let tol = Tol::default();
        let a = multimatrix::<Q>(&"2".parse().unwrap(), tol);
        let g = FinAbGroup::new(vec![2]);
        let scale2 = Mat::identity(4).scale(&Q::from_integer(2));
        let r = GroupAction::new(g.clone(), a.clone(), vec![Mat::identity(4), scale2], tol);
        assert!(matches!(r, Err(CrossedError::NotAutomorphism(_))));
        // transpose is an anti-automorphism
        let mut t = Mat::zeros(4, 4);
        for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            t.set(i, j, Q::one());
        }
        let r = GroupAction::new(g, a, vec![Mat::identity(4), t], tol);
        assert!(matches!(r, Err(CrossedError::NotAutomorphism(_))));
    }

    #[test]
    fn wrong_group_law_is_rejected() {
        let tol = Tol::default();
        let a = function_algebra::<Q>(3, tol);
        let g = FinAbGroup::new(vec![2]);
        // a 3-cycle does not square to the identity
        let mut c = Mat::zeros(3, 3);
        for x in 0..3 {
            c.set((x + 1) % 3, x, Q::one());
        }
        let r = GroupAction::new(g, a, vec![Mat::identity(3), c], tol);
        assert!(matches!(r, Err(CrossedError::NotAction(_))));
    }
}
