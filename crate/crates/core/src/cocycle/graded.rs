//! Group-graded *-algebras and their cocycle twists.

use super::cocycle::GroupCocycle;
use super::group::{FinAbGroup, Phase};
use super::CocycleError;
use crate::algebra::{AlgebraError, BlockSpec, Sparse, StructAlgebra};
use crate::arith::{Field, Rational, Tol};

#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra<F> {
    alg: StructAlgebra<F>,
    group: FinAbGroup,
    degrees: Vec<usize>,
}

impl<F: Field> GradedAlgebra<F> {
    /// Checks that every basis product lands in the product degree and
    /// that `b*` has the inverse degree.
    pub fn new(
        alg: StructAlgebra<F>,
        group: FinAbGroup,
        degrees: Vec<usize>,
    ) -> Result<Self, CocycleError> {
        let n = alg.dim();
        if degrees.len() != n || degrees.iter().any(|&d| d >= group.order()) {
            return Err(CocycleError::GradingMismatch("degree table".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let want = group.add(degrees[i], degrees[j]);
                if alg
                    .basis_product(i, j)
                    .iter()
                    .any(|(k, _)| degrees[*k] != want)
                {
                    return Err(CocycleError::NotGraded(format!(
                        "{} · {}",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
            let want = group.neg(degrees[i]);
            if alg.basis_star(i).iter().any(|(k, _)| degrees[*k] != want) {
                return Err(CocycleError::NotGraded(format!("{}*", alg.labels()[i])));
            }
        }
        Ok(GradedAlgebra {
            alg,
            group,
            degrees,
        })
    }

    pub fn algebra(&self) -> &StructAlgebra<F> {
        &self.alg
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `α^{(k)}(x)`: the degree-`k` component of `x`.
    pub fn component(&self, x: &[F], k: usize) -> Vec<F> {
        x.iter()
            .zip(&self.degrees)
            .map(|(c, &d)| if d == k { c.clone() } else { F::zero() })
            .collect()
    }

    /// `_σA`: `b_i ·_σ b_j = σ(deg i, deg j) b_i b_j` and
    /// `b^♯ = conj(σ(g⁻¹, g)) b*` for `b` of degree `g`.
    pub fn twist_left(&self, sigma: &GroupCocycle, tol: Tol) -> Result<Twisted<F>, CocycleError> {
        if sigma.group() != &self.group {
            return Err(CocycleError::GradingMismatch(format!(
                "algebra graded by {:?}, cocycle on {:?}",
                self.group.factors(),
                sigma.group().factors()
            )));
        }
        let a = &self.alg;
        let n = a.dim();
        let scale = |s: &Sparse<F>, p: Phase| -> Sparse<F> {
            let c: F = p.to_field();
            s.iter().map(|(k, v)| (*k, v.mul(&c))).collect()
        };
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mult.push(scale(
                    a.basis_product(i, j),
                    sigma.value(self.degrees[i], self.degrees[j]),
                ));
            }
        }
        let sharp: Vec<Phase> = self
            .degrees
            .iter()
            .map(|&g| sigma.value(self.group.neg(g), g).inv())
            .collect();
        let star: Vec<Sparse<F>> = (0..n).map(|i| scale(a.basis_star(i), sharp[i])).collect();
        let build = |tracial| {
            StructAlgebra::new(
                a.labels().to_vec(),
                mult.clone(),
                star.clone(),
                a.unit().to_vec(),
                a.trace_vector().to_vec(),
                tracial,
                tol,
            )
        };
        let alg = match build(a.is_tracial()) {
            Err(AlgebraError::NotTracial(..)) => build(false),
            r => r,
        }
        .map_err(CocycleError::Algebra)?;
        let graded = GradedAlgebra {
            alg,
            group: self.group.clone(),
            degrees: self.degrees.clone(),
        };
        Ok(Twisted { graded, sharp })
    }
}

/// Output of [`GradedAlgebra::twist_left`].
#[derive(Clone, Debug)]
pub struct Twisted<F> {
    pub graded: GradedAlgebra<F>,
    /// Per basis element, the unit scalar relating `b^♯` to `b*`.
    pub sharp: Vec<Phase>,
}

impl<F> Twisted<F> {
    pub fn nontrivial_sharp_count(&self) -> usize {
        self.sharp.iter().filter(|p| !p.is_one()).count()
    }
}

/// The group algebra `C[K]` on `λ_g`, graded by `K`, with `τ(λ_g) = δ_{g,e}`.
pub fn group_algebra<F: Field>(group: &FinAbGroup, tol: Tol) -> GradedAlgebra<F> {
    let n = group.order();
    let labels = (0..n).map(|g| format!("λ{}", group.label(g))).collect();
    let mut mult = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            mult.push(vec![(group.add(g, h), F::one())]);
        }
    }
    let star = (0..n).map(|g| vec![(group.neg(g), F::one())]).collect();
    let mut unit = vec![F::zero(); n];
    unit[0] = F::one();
    let trace = unit.clone();
    let alg = StructAlgebra::new(labels, mult, star, unit, trace, true, tol)
        .expect("group algebra satisfies the axioms");
    GradedAlgebra::new(alg, group.clone(), (0..n).collect())
        .expect("group algebra is graded by its group")
}

/// `Γ̂ = ∏_t Z_{n_t} × Z_{n_t}`, identified with `Γ` by the pairing
/// `⟨[a,b],[j,k]⟩ = ζ^{aj+bk}`.
pub fn dual_group(spec: &BlockSpec) -> (Vec<FinAbGroup>, FinAbGroup) {
    let parts: Vec<FinAbGroup> = spec
        .sizes()
        .iter()
        .map(|&n| FinAbGroup::square(n as u32))
        .collect();
    let prod = FinAbGroup::product(&parts);
    (parts, prod)
}

/// Index of `e_{r,χ}` in [`fourier_function_algebra`].
pub fn fourier_index(spec: &BlockSpec, r: usize, chi: usize) -> usize {
    spec.offset(r) + chi
}

/// `C(X)` for `X = ∐_r Y_r × Y_r` in the Fourier basis
/// `e_{r,χ}(x) = ⟨χ, x⟩` on `X_r` (base point `(0,0)`), zero elsewhere.
///
/// The translation action of `Γ` makes `e_{r,χ}` homogeneous of degree
/// `χ ∈ Γ̂_r ⊂ Γ̂`. The state is the uniform measure, so
/// `τ(e_{r,χ}) = δ_{χ,0} n_r²/N`.
pub fn fourier_function_algebra<F: Field>(spec: &BlockSpec, tol: Tol) -> GradedAlgebra<F> {
    let (parts, prod) = dual_group(spec);
    let dim = spec.big_n();
    let mut labels = Vec::with_capacity(dim);
    let mut mult = vec![Vec::new(); dim * dim];
    let mut star = Vec::with_capacity(dim);
    let mut unit = vec![F::zero(); dim];
    let mut trace = vec![F::zero(); dim];
    let mut degrees = Vec::with_capacity(dim);
    for (r, g) in parts.iter().enumerate() {
        let n = spec.n(r);
        for chi in 0..g.order() {
            let a = fourier_index(spec, r, chi);
            labels.push(format!("e{}{}", r + 1, g.label(chi)));
            star.push(vec![(fourier_index(spec, r, g.neg(chi)), F::one())]);
            degrees.push(FinAbGroup::embed(&parts, r, chi));
            if chi == 0 {
                unit[a] = F::one();
                trace[a] = F::from_rational(&Rational::new((n * n) as i64, dim as i64));
            }
            for chi2 in 0..g.order() {
                let b = fourier_index(spec, r, chi2);
                mult[a * dim + b] = vec![(fourier_index(spec, r, g.add(chi, chi2)), F::one())];
            }
        }
    }
    let alg = StructAlgebra::new(labels, mult, star, unit, trace, true, tol)
        .expect("function algebra in the Fourier basis satisfies the axioms");
    GradedAlgebra::new(alg, prod, degrees).expect("Fourier modes are homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{function_algebra, recognize_blocks};
    use crate::arith::Cyclotomic;
    use crate::cocycle::{base_cocycle, normalize_inverse_pairing, product_cocycle};

    type Q = Cyclotomic;

    fn sigma0(spec: &BlockSpec) -> GroupCocycle {
        let parts: Vec<GroupCocycle> = spec
            .sizes()
            .iter()
            .map(|&n| normalize_inverse_pairing(&base_cocycle(n as u32)).cocycle)
            .collect();
        product_cocycle(&parts).unwrap()
    }

    #[test]
    fn trivial_twist_is_identity() {
        let tol = Tol::default();
        let s: BlockSpec = "2,1".parse().unwrap();
        let a = fourier_function_algebra::<Q>(&s, tol);
        let t = a
            .twist_left(&GroupCocycle::trivial(a.group().clone()), tol)
            .unwrap();
        assert_eq!(t.graded, a);
        assert_eq!(t.nontrivial_sharp_count(), 0);
    }

    #[test]
    fn fourier_basis_is_a_basis_change_of_delta_functions() {
        // same abstract algebra: both are commutative with N minimal projections
        let tol = Tol::default();
        let s: BlockSpec = "2,1".parse().unwrap();
        let f = fourier_function_algebra::<Q>(&s, tol);
        let blocks = recognize_blocks(f.algebra(), tol, 0).unwrap();
        let d = recognize_blocks(&function_algebra::<Q>(5, tol), tol, 0).unwrap();
        assert_eq!(blocks.sizes, d.sizes);
    }

    #[test]
    fn twisted_klein_group_algebra_is_m2() {
        let tol = Tol::default();
        let w = normalize_inverse_pairing(&base_cocycle(2)).cocycle;
        let a = group_algebra::<Q>(w.group(), tol);
        let t = a.twist_left(&w, tol).unwrap();
        let b = recognize_blocks(t.graded.algebra(), tol, 0).unwrap();
        assert_eq!(b.sizes, vec![2]);
        assert_eq!(t.nontrivial_sharp_count(), 0);
    }

    #[test]
    fn unnormalized_twist_has_nontrivial_sharp_scalars() {
        let tol = Tol::default();
        let w = base_cocycle(2);
        let a = group_algebra::<Q>(w.group(), tol);
        let t = a.twist_left(&w, tol).unwrap();
        // σ′([1,1],[1,1]) = −1
        assert_eq!(t.nontrivial_sharp_count(), 1);
    }

    #[test]
    fn twist_then_untwist_restores_structure_constants() {
        let tol = Tol::default();
        for p in ["2", "3", "2,1", "2,2"] {
            let s: BlockSpec = p.parse().unwrap();
            let a = fourier_function_algebra::<Q>(&s, tol);
            let w = sigma0(&s);
            let t = a.twist_left(&w, tol).unwrap();
            let back = t.graded.twist_left(&w.pointwise_inverse(), tol).unwrap();
            assert_eq!(back.graded, a, "partition {p}");
        }
    }

    #[test]
    fn grading_group_must_match() {
        let tol = Tol::default();
        let a = fourier_function_algebra::<Q>(&"2".parse().unwrap(), tol);
        assert!(matches!(
            a.twist_left(&base_cocycle(3), tol),
            Err(CocycleError::GradingMismatch(_))
        ));
    }

    #[test]
    fn ungraded_assignment_is_rejected() {
        let tol = Tol::default();
        let a = function_algebra::<Q>(2, tol);
        let g = FinAbGroup::new(vec![2]);
        assert!(matches!(
            GradedAlgebra::new(a, g, vec![0, 1]),
            Err(CocycleError::NotGraded(_))
        ));
    }
}
