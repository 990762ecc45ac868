//! Tensor placements `T^{(r)}` in `M_d = ⊗_r M_{n_r}` and `T^{[s]}` in the
//! doubled product `⊗_r (M_{n_r} ⊗ M_{n_r})`, plus the reordering between
//! the doubled product and `M_d ⊗ M_d`.
//!
//! Layout convention: the doubled product orders factors
//! `(1, 1′, 2, 2′, …, m, m′)`; `M_d ⊗ M_d` orders them
//! `(1, 2, …, m, 1′, 2′, …, m′)`.

use super::entangled::EntangledBasis;
use super::weyl::WeylBasis;
use super::PauliError;
use crate::algebra::BlockSpec;
use crate::arith::{Field, Mat, SparseMat};

fn kron_all<F: Field>(parts: &[SparseMat<F>]) -> SparseMat<F> {
    parts
        .iter()
        .fold(SparseMat::identity(1), |acc, p| acc.kron(p))
}

/// `T^{(r)} = I ⊗ ⋯ ⊗ T ⊗ ⋯ ⊗ I ∈ M_d`.
pub fn paren<F: Field>(spec: &BlockSpec, r: usize, t: &Mat<F>) -> Result<SparseMat<F>, PauliError> {
    if r >= spec.m() || t.rows() != spec.n(r) || t.cols() != spec.n(r) {
        return Err(PauliError::SlotMismatch(format!(
            "paren slot {} needs a {}x{} matrix",
            r + 1,
            spec.n(r.min(spec.m() - 1)),
            spec.n(r.min(spec.m() - 1))
        )));
    }
    let parts: Vec<SparseMat<F>> = (0..spec.m())
        .map(|q| {
            if q == r {
                SparseMat::from_dense(t)
            } else {
                SparseMat::identity(spec.n(q))
            }
        })
        .collect();
    Ok(kron_all(&parts))
}

/// `I ⊗ I ⊗ ⋯ ⊗ T ⊗ ⋯ ⊗ I ⊗ I` with `T ∈ M_{n_s} ⊗ M_{n_s}` in the doubled
/// slot `s`, in the doubled layout.
pub fn bracket<F: Field>(
    spec: &BlockSpec,
    s: usize,
    t: &Mat<F>,
) -> Result<SparseMat<F>, PauliError> {
    if s >= spec.m() || t.rows() != spec.n(s).pow(2) || t.cols() != spec.n(s).pow(2) {
        return Err(PauliError::SlotMismatch(format!(
            "bracket slot {} size mismatch",
            s + 1
        )));
    }
    let parts: Vec<SparseMat<F>> = (0..spec.m())
        .map(|q| {
            if q == s {
                SparseMat::from_dense(t)
            } else {
                SparseMat::identity(spec.n(q).pow(2))
            }
        })
        .collect();
    Ok(kron_all(&parts))
}

pub fn doubled_dims(spec: &BlockSpec) -> Vec<usize> {
    spec.sizes().iter().flat_map(|&n| [n, n]).collect()
}

pub fn md_md_dims(spec: &BlockSpec) -> Vec<usize> {
    spec.sizes().iter().chain(spec.sizes()).copied().collect()
}

fn doubled_to_md_md_perm(m: usize) -> Vec<usize> {
    (0..m)
        .map(|t| 2 * t)
        .chain((0..m).map(|t| 2 * t + 1))
        .collect()
}

fn md_md_to_doubled_perm(m: usize) -> Vec<usize> {
    (0..m).flat_map(|t| [t, m + t]).collect()
}

/// Reorder an operator on the doubled product into `M_d ⊗ M_d`.
pub fn doubled_to_md_md<F: Field>(spec: &BlockSpec, a: &SparseMat<F>) -> SparseMat<F> {
    a.permute_factors(&doubled_dims(spec), &doubled_to_md_md_perm(spec.m()))
}

/// Inverse of [`doubled_to_md_md`].
pub fn md_md_to_doubled<F: Field>(spec: &BlockSpec, a: &SparseMat<F>) -> SparseMat<F> {
    a.permute_factors(&md_md_dims(spec), &md_md_to_doubled_perm(spec.m()))
}

/// Weyl and entangled bases for every block, built once per partition.
#[derive(Clone, Debug)]
pub struct BlockPauli<F> {
    spec: BlockSpec,
    weyl: Vec<WeylBasis<F>>,
    entangled: Vec<EntangledBasis<F>>,
}

impl<F: Field> BlockPauli<F> {
    pub fn new(spec: &BlockSpec, tol: crate::arith::Tol) -> Result<Self, PauliError> {
        let weyl = spec
            .sizes()
            .iter()
            .map(|&n| WeylBasis::new(n, tol))
            .collect::<Result<Vec<_>, _>>()?;
        let entangled = weyl
            .iter()
            .map(|w| EntangledBasis::new(w, tol))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BlockPauli {
            spec: spec.clone(),
            weyl,
            entangled,
        })
    }

    pub fn spec(&self) -> &BlockSpec {
        &self.spec
    }

    pub fn weyl(&self, r: usize) -> &WeylBasis<F> {
        &self.weyl[r]
    }

    pub fn entangled(&self, r: usize) -> &EntangledBasis<F> {
        &self.entangled[r]
    }

    /// `X_{n_r}^{(r)}` etc: `T_{i,j}` of block `r` placed in `M_d`.
    pub fn t_paren(&self, r: usize, i: i64, j: i64) -> SparseMat<F> {
        paren(&self.spec, r, self.weyl[r].t(i, j)).expect("slot in range")
    }

    /// `T^{[s]}_{i,j}`, doubled layout.
    pub fn t_bracket(&self, s: usize, i: i64, j: i64) -> SparseMat<F> {
        let n = self.spec.n(s);
        let t = self.weyl[s].t(i, j).kron(&Mat::identity(n));
        bracket(&self.spec, s, &t).expect("slot in range")
    }

    /// `φ^{[s]}_{i,j}`, doubled layout.
    pub fn phi_bracket(&self, s: usize, i: i64, j: i64) -> SparseMat<F> {
        bracket(&self.spec, s, &self.entangled[s].projection(i, j)).expect("slot in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Cyclotomic, Tol};
    use crate::pauli::pvm_check;
    use proptest::prelude::*;

    type Q = Cyclotomic;

    fn spec(s: &str) -> BlockSpec {
        s.parse().unwrap()
    }

    #[test]
    fn paren_trailing_identity_and_mismatch() {
        let tol = Tol::default();
        let s = spec("2,1");
        let bp = BlockPauli::<Q>::new(&s, tol).unwrap();
        let x = bp.weyl(0).x().clone();
        assert_eq!(paren(&s, 0, &x).unwrap().to_dense(), x);
        assert!(matches!(paren(&s, 1, &x), Err(PauliError::SlotMismatch(_))));
    }

    #[test]
    fn bracket_places_in_second_slot() {
        let tol = Tol::default();
        let s = spec("2,2");
        let bp = BlockPauli::<Q>::new(&s, tol).unwrap();
        let x = SparseMat::from_dense(bp.weyl(1).x());
        let i2 = SparseMat::identity(2);
        let want = i2.kron(&i2).kron(&x).kron(&i2);
        assert_eq!(bp.t_bracket(1, 1, 0), want);
    }

    #[test]
    fn layout_moves_primed_factors_last() {
        let tol = Tol::default();
        let s = spec("2,3");
        let bp = BlockPauli::<Q>::new(&s, tol).unwrap();
        let a = SparseMat::from_dense(bp.weyl(0).x());
        let b = SparseMat::from_dense(bp.weyl(0).z());
        let c = SparseMat::from_dense(bp.weyl(1).x());
        let d = SparseMat::from_dense(bp.weyl(1).z());
        let doubled = a.kron(&b).kron(&c).kron(&d);
        assert_eq!(doubled_to_md_md(&s, &doubled), a.kron(&c).kron(&b).kron(&d));
    }

    #[test]
    fn per_block_phi_families_are_pvms() {
        let tol = Tol::default();
        for p in ["2", "3", "2,1", "2,2", "2,1,1"] {
            let s = spec(p);
            let bp = BlockPauli::<Q>::new(&s, tol).unwrap();
            for b in 0..s.m() {
                let n = s.n(b) as i64;
                let fam: Vec<_> = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| bp.phi_bracket(b, i, j))
                    .collect();
                assert!(pvm_check(&fam, tol).unwrap().passed, "{p} block {b}");
            }
        }
    }

    #[test]
    fn union_over_blocks_sums_to_m_times_identity() {
        let tol = Tol::default();
        let s = spec("2,1");
        let bp = BlockPauli::<Q>::new(&s, tol).unwrap();
        let mut fam = Vec::new();
        for b in 0..s.m() {
            let n = s.n(b) as i64;
            for i in 0..n {
                for j in 0..n {
                    fam.push(bp.phi_bracket(b, i, j));
                }
            }
        }
        assert_eq!(fam.len(), s.big_n());
        let total = fam.iter().fold(SparseMat::zeros(4, 4), |acc, p| acc.add(p));
        assert_eq!(
            total,
            SparseMat::identity(4).scale(&crate::arith::Coeff::from_integer(2))
        );
        assert!(pvm_check(&fam, tol).is_err());
    }

    proptest! {
        #[test]
        fn layout_round_trip(r in 0usize..16, c in 0usize..16) {
            let s = spec("2,2");
            let e = SparseMat::<Q>::unit(16, r, c);
            let there = doubled_to_md_md(&s, &e);
            prop_assert_eq!(md_md_to_doubled(&s, &there), e);
        }
    }
}
