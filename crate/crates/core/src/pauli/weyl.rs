use super::PauliError;
use crate::arith::{Field, Mat, Tol};
use crate::CheckReport;

/// Generalized Pauli matrices and the Weyl basis `T_{i,j} = X^i Z^j`.
///
/// `X` is diagonal, `X|j⟩ = ω^j |j⟩`, and `Z` is the cyclic shift,
/// `Z|j⟩ = |j+1⟩`, so that `X Z = ω Z X`.
#[derive(Clone, Debug)]
pub struct WeylBasis<F> {
    n: usize,
    x: Mat<F>,
    z: Mat<F>,
    members: Vec<Mat<F>>,
}

pub fn pauli_x<F: Field>(n: usize) -> Mat<F> {
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            F::root_of_unity(n as u32, i as i64)
        } else {
            F::zero()
        }
    })
}

pub fn pauli_z<F: Field>(n: usize) -> Mat<F> {
    Mat::from_fn(n, n, |i, j| {
        if i == (j + 1) % n {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// Matrix power for small exponents.
pub fn mat_pow<F: Field>(m: &Mat<F>, e: usize) -> Mat<F> {
    (0..e).fold(Mat::identity(m.rows()), |acc, _| acc.mul(m))
}

impl<F: Field> WeylBasis<F> {
    pub fn new(n: usize, tol: Tol) -> Result<Self, PauliError> {
        assert!(n >= 1, "Weyl basis needs n >= 1");
        let x = pauli_x::<F>(n);
        let z = pauli_z::<F>(n);
        let xp: Vec<Mat<F>> = (0..n).map(|i| mat_pow(&x, i)).collect();
        let zp: Vec<Mat<F>> = (0..n).map(|j| mat_pow(&z, j)).collect();
        let mut members = Vec::with_capacity(n * n);
        for xi in &xp {
            for zj in &zp {
                members.push(xi.mul(zj));
            }
        }
        let basis = WeylBasis { n, x, z, members };
        let omega = F::root_of_unity(n as u32, 1);
        if !basis
            .x
            .mul(&basis.z)
            .approx_eq(&basis.z.mul(&basis.x).scale(&omega), tol)
        {
            return Err(PauliError::Invariant("X Z = ω Z X".into()));
        }
        for (a, t) in basis.members.iter().enumerate() {
            let want = if a == 0 { F::one() } else { F::zero() };
            if !t.is_unitary(tol) || !t.normalized_trace().approx_eq(&want, tol) {
                return Err(PauliError::Invariant(format!(
                    "T_{},{} unitary with tr = δ",
                    a / n,
                    a % n
                )));
            }
        }
        Ok(basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &Mat<F> {
        &self.x
    }

    pub fn z(&self) -> &Mat<F> {
        &self.z
    }

    /// `T_{i,j}` with indices reduced mod `n`.
    pub fn t(&self, i: i64, j: i64) -> &Mat<F> {
        let n = self.n as i64;
        &self.members[(i.rem_euclid(n) * n + j.rem_euclid(n)) as usize]
    }

    pub fn members(&self) -> &[Mat<F>] {
        &self.members
    }
}

pub fn weyl_basis<F: Field>(n: usize, tol: Tol) -> Result<WeylBasis<F>, PauliError> {
    WeylBasis::new(n, tol)
}

/// Unitarity of every member and `tr(u_a* u_b) = δ_ab` for the normalized
/// trace.
pub fn is_unitary_error_basis<F: Field>(
    family: &[Mat<F>],
    tol: Tol,
) -> Result<CheckReport, PauliError> {
    let n = family.first().map_or(0, Mat::rows);
    if family.len() != n * n {
        return Err(PauliError::WrongCount {
            expected: n * n,
            got: family.len(),
        });
    }
    let mut rep = CheckReport::new();
    let id = Mat::<F>::identity(n);
    for (a, u) in family.iter().enumerate() {
        if u.rows() != n || u.cols() != n {
            return Err(PauliError::Dimension(format!("member {a} is not {n}x{n}")));
        }
        let res = u.adjoint().mul(u).sub(&id);
        rep.record(res.is_zero(tol), res.max_residual(), || {
            format!("member {a} not unitary")
        });
    }
    let adj: Vec<Mat<F>> = family.iter().map(Mat::adjoint).collect();
    for (a, ua) in adj.iter().enumerate() {
        for (b, ub) in family.iter().enumerate() {
            let v = ua.mul(ub).normalized_trace();
            let want = if a == b { F::one() } else { F::zero() };
            let d = v.sub(&want);
            rep.record(d.near_zero(tol), d.residual(), || {
                format!("tr(u_{a}* u_{b}) != δ")
            });
        }
    }
    Ok(rep)
}

/// `Σ_a u_a* x u_a = n Tr(x) 1`.
pub fn depolarization_check<F: Field>(
    family: &[Mat<F>],
    x: &Mat<F>,
    tol: Tol,
) -> Result<CheckReport, PauliError> {
    let n = x.rows();
    if family.iter().any(|u| u.rows() != n || u.cols() != n) || x.cols() != n {
        return Err(PauliError::Dimension("family and x sizes differ".into()));
    }
    let sum = family.iter().fold(Mat::zeros(n, n), |acc, u| {
        acc.add(&u.adjoint().mul(x).mul(u))
    });
    let want = Mat::identity(n).scale(&x.trace().mul(&F::from_integer(n as i64)));
    let res = sum.sub(&want);
    let mut rep = CheckReport::new();
    rep.record(res.is_zero(tol), res.max_residual(), || {
        "depolarization identity".into()
    });
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Coeff, Cyclotomic};
    use num_complex::Complex64;

    type Q = Cyclotomic;

    fn unit(n: usize, i: usize, j: usize) -> Mat<Q> {
        Mat::from_fn(n, n, |a, b| {
            if (a, b) == (i, j) {
                Q::one()
            } else {
                Q::zero()
            }
        })
    }

    #[test]
    fn two_by_two_matrices() {
        let w = weyl_basis::<Q>(2, Tol::default()).unwrap();
        let q = Q::from_integer;
        assert_eq!(
            *w.x(),
            Mat::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(-1)]])
        );
        assert_eq!(
            *w.z(),
            Mat::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]])
        );
        let one = weyl_basis::<Q>(1, Tol::default()).unwrap();
        assert_eq!(one.members(), &[Mat::identity(1)]);
    }

    #[test]
    fn three_by_three_commutation() {
        let w = weyl_basis::<Q>(3, Tol::default()).unwrap();
        let (x, z) = (w.x(), w.z());
        assert_ne!(z.mul(x).mul(&z.adjoint()), *x);
        assert_eq!(x.mul(z), z.mul(x).scale(&Q::root_of_unity(3, 1)));
    }

    #[test]
    fn weyl_bases_are_ueb_up_to_six() {
        let tol = Tol::default();
        for n in 1..=6 {
            let w = weyl_basis::<Q>(n, tol).unwrap();
            let rep = is_unitary_error_basis(w.members(), tol).unwrap();
            assert!(rep.passed && rep.worst_residual == 0.0, "n = {n}");
            assert_eq!(rep.cases, n * n + n.pow(4));
        }
        let wf = weyl_basis::<Complex64>(5, tol).unwrap();
        assert!(is_unitary_error_basis(wf.members(), tol).unwrap().passed);
    }

    #[test]
    fn scaled_member_is_rejected() {
        let tol = Tol::default();
        let w = weyl_basis::<Q>(2, tol).unwrap();
        let mut fam = w.members().to_vec();
        fam[3] = fam[3].scale(&Q::from_integer(2));
        assert!(!is_unitary_error_basis(&fam, tol).unwrap().passed);
        assert!(matches!(
            is_unitary_error_basis(&fam[..3], tol),
            Err(PauliError::WrongCount {
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn depolarization_on_matrix_units() {
        let tol = Tol::default();
        for n in 1..=4 {
            let w = weyl_basis::<Q>(n, tol).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert!(
                        depolarization_check(w.members(), &unit(n, i, j), tol)
                            .unwrap()
                            .passed
                    );
                }
            }
        }
        // explicit values: Σ u* I u = n·Tr(I)·1 = 4·I for n = 2
        let w = weyl_basis::<Q>(2, tol).unwrap();
        let s = w
            .members()
            .iter()
            .fold(Mat::zeros(2, 2), |acc, u| acc.add(&u.adjoint().mul(u)));
        assert_eq!(s, Mat::identity(2).scale(&Q::from_integer(4)));
        let w3 = weyl_basis::<Q>(3, tol).unwrap();
        let e = unit(3, 0, 0);
        let s = w3.members().iter().fold(Mat::zeros(3, 3), |acc, u| {
            acc.add(&u.adjoint().mul(&e).mul(u))
        });
        assert_eq!(s, Mat::identity(3).scale(&Q::from_integer(3)));
    }

    #[test]
    fn weyl_relation_phase() {
        // T_ij T_kl = ω^{-jk} T_{i+k, j+l}: moving Z^j past X^k costs ω^{-jk}
        let tol = Tol::default();
        for n in 1..=4usize {
            let w = weyl_basis::<Q>(n, tol).unwrap();
            for a in 0..n * n {
                for b in 0..n * n {
                    let (i, j, k, l) = (
                        (a / n) as i64,
                        (a % n) as i64,
                        (b / n) as i64,
                        (b % n) as i64,
                    );
                    let lhs = w.t(i, j).mul(w.t(k, l));
                    let rhs = w.t(i + k, j + l).scale(&Q::root_of_unity(n as u32, -j * k));
                    assert_eq!(lhs, rhs, "n={n} ({i},{j})({k},{l})");
                }
            }
        }
    }

    #[test]
    fn positive_phase_convention_fails_for_n3() {
        let w = weyl_basis::<Q>(3, Tol::default()).unwrap();
        let lhs = w.t(0, 1).mul(w.t(1, 0));
        assert_ne!(lhs, w.t(1, 1).scale(&Q::root_of_unity(3, 1)));
    }
}
