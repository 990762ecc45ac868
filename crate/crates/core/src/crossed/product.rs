//! Crossed products `A ⋊ Λ` and the finite Takesaki–Takai duality.

use serde::Serialize;

use super::action::GroupAction;
use super::CrossedError;
use crate::algebra::{multimatrix, recognize_blocks, BlockSpec, Sparse, StructAlgebra};
use crate::arith::{Field, Tol};
use crate::cocycle::FinAbGroup;

/// `A ⋊ Λ` on the basis `b_i z_g`, stored at index `i |Λ| + g`.
#[derive(Clone, Debug)]
pub struct CrossedProduct<F> {
    action: GroupAction<F>,
    alg: StructAlgebra<F>,
}

impl<F: Field> CrossedProduct<F> {
    pub fn base(&self) -> &GroupAction<F> {
        &self.action
    }

    pub fn algebra(&self) -> &StructAlgebra<F> {
        &self.alg
    }

    pub fn group(&self) -> &FinAbGroup {
        self.action.group()
    }

    pub fn index(&self, i: usize, g: usize) -> usize {
        i * self.group().order() + g
    }

    /// Coordinates of `b z_g` for `b ∈ A`.
    pub fn element(&self, b: &[F], g: usize) -> Vec<F> {
        let mut v = self.alg.zero_vector();
        for (i, c) in b.iter().enumerate() {
            v[self.index(i, g)] = c.clone();
        }
        v
    }

    pub fn z(&self, g: usize) -> Vec<F> {
        self.element(self.action.algebra().unit(), g)
    }

    pub fn embed(&self, b: &[F]) -> Vec<F> {
        self.element(b, 0)
    }

    /// Checks `z_g z_h = z_{gh}`, `z_g b z_g* = α_g(b)`, `z_e = 1` and the
    /// trace conditions on all basis data.
    pub fn check_relations(&self, tol: Tol) -> crate::CheckReport {
        let a = self.action.algebra();
        let c = &self.alg;
        let grp = self.group();
        let mut rep = crate::CheckReport::new();
        let eq = |x: &[F], y: &[F]| {
            let r = x
                .iter()
                .zip(y)
                .map(|(p, q)| p.sub(q).residual())
                .fold(0.0, f64::max);
            (x.iter().zip(y).all(|(p, q)| p.approx_eq(q, tol)), r)
        };
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                let (ok, r) = eq(&c.mul(&self.z(g), &self.z(h)), &self.z(grp.add(g, h)));
                rep.record(ok, r, || format!("z{} z{}", grp.label(g), grp.label(h)));
            }
            for i in 0..a.dim() {
                let b = a.basis_vector(i);
                let lhs = c.mul(&c.mul(&self.z(g), &self.embed(&b)), &c.star(&self.z(g)));
                let (ok, r) = eq(&lhs, &self.embed(&self.action.apply(g, &b)));
                rep.record(ok, r, || format!("z{} {} z*", grp.label(g), a.labels()[i]));
                let t = c.tau(&self.element(&b, g));
                let want = if g == 0 { a.tau(&b) } else { F::zero() };
                rep.record(t.approx_eq(&want, tol), t.sub(&want).residual(), || {
                    format!("τ({} z{})", a.labels()[i], grp.label(g))
                });
            }
        }
        let (ok, r) = eq(&self.z(0), c.unit());
        rep.record(ok, r, || "z_e ≠ 1".into());
        rep
    }
}

/// Materializes `A ⋊ Λ` with `(a z_g)(b z_h) = a α_g(b) z_{g+h}`,
/// `(a z_g)* = α_{-g}(a*) z_{-g}` and `τ(b z_g) = δ_{g,e} τ_A(b)`.
pub fn crossed_product<F: Field>(
    action: &GroupAction<F>,
    tol: Tol,
) -> Result<CrossedProduct<F>, CrossedError> {
    action.verify(tol)?;
    let a = action.algebra();
    let grp = action.group();
    let (n, l) = (a.dim(), grp.order());
    let dim = n * l;
    let idx = |i: usize, g: usize| i * l + g;
    let to_sparse = |v: Vec<F>, g: usize| -> Sparse<F> {
        v.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (idx(k, g), c))
            .collect()
    };
    let basis: Vec<Vec<F>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let moved: Vec<Vec<Vec<F>>> = (0..l)
        .map(|g| basis.iter().map(|b| action.apply(g, b)).collect())
        .collect();
    let mut labels = Vec::with_capacity(dim);
    let mut star = Vec::with_capacity(dim);
    let mut unit = vec![F::zero(); dim];
    let mut trace = vec![F::zero(); dim];
    for i in 0..n {
        for g in 0..l {
            labels.push(format!("{}·z{}", a.labels()[i], grp.label(g)));
            let neg = grp.neg(g);
            star.push(to_sparse(action.apply(neg, &a.star(&basis[i])), neg));
            if g == 0 {
                unit[idx(i, 0)] = a.unit()[i].clone();
                trace[idx(i, 0)] = a.trace_vector()[i].clone();
            }
        }
    }
    let mut mult = vec![Vec::new(); dim * dim];
    for i in 0..n {
        for g in 0..l {
            for j in 0..n {
                let prod = a.mul(&basis[i], &moved[g][j]);
                for h in 0..l {
                    mult[idx(i, g) * dim + idx(j, h)] = to_sparse(prod.clone(), grp.add(g, h));
                }
            }
        }
    }
    let alg = StructAlgebra::new(labels, mult, star, unit, trace, a.is_tracial(), tol)?;
    Ok(CrossedProduct {
        action: action.clone(),
        alg,
    })
}

/// `χ · (b z_g) = ⟨χ, g⟩ b z_g` on `A ⋊ Λ`, with `Λ̂` identified with `Λ`
/// through the cocycle module's pairing.
pub fn dual_action<F: Field>(
    cp: &CrossedProduct<F>,
    tol: Tol,
) -> Result<GroupAction<F>, CrossedError> {
    let grp = cp.group().clone();
    let l = grp.order();
    let g2 = grp.clone();
    GroupAction::from_fn(
        grp,
        cp.algebra().clone(),
        move |chi, x| {
            x.iter()
                .enumerate()
                .map(|(k, c)| c.mul(&g2.pairing(chi, k % l).to_field()))
                .collect()
        },
        tol,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct TakesakiTakaiCertificate {
    pub base_dim: usize,
    pub group_order: usize,
    pub double_dim: usize,
    pub single_relations: crate::CheckReport,
    pub double_relations: crate::CheckReport,
    /// Recognized blocks of `(A ⋊ Λ) ⋊ Λ̂`.
    pub blocks: Vec<usize>,
    /// Recognized blocks of the independently built `A ⊗ M_{|Λ|}`.
    pub expected: Vec<usize>,
    pub passed: bool,
}

pub fn takesaki_takai_check<F: Field>(
    action: &GroupAction<F>,
    tol: Tol,
    seed: u64,
) -> Result<TakesakiTakaiCertificate, CrossedError> {
    let single = crossed_product(action, tol)?;
    let dual = dual_action(&single, tol)?;
    let double = crossed_product(&dual, tol)?;
    let blocks = recognize_blocks(double.algebra(), tol, seed)?.sizes;
    let l = action.group().order();
    let oracle = action.algebra().tensor(&multimatrix::<F>(
        &BlockSpec::new(vec![l]).expect("positive size"),
        tol,
    ));
    let expected = recognize_blocks(&oracle, tol, seed)?.sizes;
    let single_relations = single.check_relations(tol);
    let double_relations = double.check_relations(tol);
    let passed = blocks == expected && single_relations.passed && double_relations.passed;
    Ok(TakesakiTakaiCertificate {
        base_dim: action.algebra().dim(),
        group_order: l,
        double_dim: double.algebra().dim(),
        single_relations,
        double_relations,
        blocks,
        expected,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::function_algebra;
    use crate::arith::{Coeff, Cyclotomic, Mat};
    use crate::crossed::translation_action;
    use num_complex::Complex64;

    type Q = Cyclotomic;

    fn swap_action(tol: Tol) -> GroupAction<Q> {
        let mut s = Mat::zeros(2, 2);
        s.set(0, 1, Q::one());
        s.set(1, 0, Q::one());
        GroupAction::new(
            FinAbGroup::new(vec![2]),
            function_algebra(2, tol),
            vec![Mat::identity(2), s],
            tol,
        )
        .unwrap()
    }

    fn ad_diag_action(tol: Tol) -> GroupAction<Q> {
        let a = multimatrix::<Q>(&"2".parse().unwrap(), tol);
        let sign = Mat::from_fn(4, 4, |r, c| match (r == c, r) {
            (true, 1) | (true, 2) => Q::from_integer(-1),
            (true, _) => Q::one(),
            _ => Q::zero(),
        });
        GroupAction::new(
            FinAbGroup::new(vec![2]),
            a,
            vec![Mat::identity(4), sign],
            tol,
        )
        .unwrap()
    }

    #[test]
    fn trivial_action_gives_group_algebra() {
        let tol = Tol::default();
        let c = function_algebra::<Q>(1, tol);
        let cp = crossed_product(&GroupAction::trivial(FinAbGroup::new(vec![2]), c), tol).unwrap();
        assert_eq!(cp.algebra().dim(), 2);
        assert!(cp.check_relations(tol).passed);
        assert_eq!(
            recognize_blocks(cp.algebra(), tol, 0).unwrap().sizes,
            vec![1, 1]
        );
    }

    #[test]
    fn swap_crossed_product_is_m2_via_regular_representation() {
        let tol = Tol::default();
        let cp = crossed_product(&swap_action(tol), tol).unwrap();
        assert!(cp.check_relations(tol).passed);
        assert_eq!(
            recognize_blocks(cp.algebra(), tol, 0).unwrap().sizes,
            vec![2]
        );
        // δ_x ↦ E_xx, z ↦ swap on C²; image of δ_i z_g is E_{i, i+g}
        let a = cp.algebra();
        let rep = |k: usize| -> Mat<Q> {
            let (i, g) = (k / 2, k % 2);
            let mut m = Mat::zeros(2, 2);
            m.set(i, (i + g) % 2, Q::one());
            m
        };
        let apply = |v: &[Q]| (0..4).fold(Mat::zeros(2, 2), |acc, k| acc.add(&rep(k).scale(&v[k])));
        for p in 0..4 {
            for q in 0..4 {
                let lhs = apply(&a.mul(&a.basis_vector(p), &a.basis_vector(q)));
                assert_eq!(lhs, rep(p).mul(&rep(q)));
            }
            assert_eq!(apply(&a.star(&a.basis_vector(p))), rep(p).adjoint());
        }
    }

    #[test]
    fn translation_crossed_product_on_one_block() {
        let tol = Tol::default();
        let cp =
            crossed_product(&translation_action::<Q>(&"2".parse().unwrap(), tol), tol).unwrap();
        assert_eq!(cp.algebra().dim(), 16);
        assert!(cp.check_relations(tol).passed);
        assert_eq!(
            recognize_blocks(cp.algebra(), tol, 0).unwrap().sizes,
            vec![4]
        );
    }

    #[test]
    fn duality_smallest_instance() {
        let tol = Tol::default();
        let c = function_algebra::<Q>(1, tol);
        let tt = takesaki_takai_check(&GroupAction::trivial(FinAbGroup::new(vec![2]), c), tol, 0)
            .unwrap();
        assert!(tt.passed);
        assert_eq!(tt.blocks, vec![2]);
    }

    #[test]
    fn duality_for_inner_action_on_m2() {
        let tol = Tol::default();
        let tt = takesaki_takai_check(&ad_diag_action(tol), tol, 0).unwrap();
        assert!(tt.passed, "{tt:?}");
        assert_eq!(tt.blocks, vec![4]);
    }

    #[test]
    fn duality_for_translations() {
        let tol = Tol::default();
        let act = translation_action::<Complex64>(&"2".parse().unwrap(), tol);
        let tt = takesaki_takai_check(&act, tol, 0).unwrap();
        assert!(tt.passed, "{tt:?}");
        assert_eq!(tt.blocks, vec![4, 4, 4, 4]);
        assert_eq!(tt.double_dim, 64);
    }
}
