use super::weyl::WeylBasis;
use super::PauliError;
use crate::arith::{Field, Mat, SparseMat, Tol};
use crate::CheckReport;

/// Maximally entangled basis `|φ_{i,j}⟩ = (T_{i,j} ⊗ I)|φ⟩`.
///
/// `|φ⟩ = n^{-1/2} Σ|ii⟩` needs `√n`, which is outside most small
/// cyclotomic fields, so vectors are stored scaled by `√n`: each stored
/// vector has squared norm `n` and the projection is `|w⟩⟨w| / n`.
#[derive(Clone, Debug)]
pub struct EntangledBasis<F> {
    n: usize,
    vectors: Vec<Vec<F>>,
}

impl<F: Field> EntangledBasis<F> {
    pub fn new(weyl: &WeylBasis<F>, tol: Tol) -> Result<Self, PauliError> {
        let n = weyl.n();
        let vectors: Vec<Vec<F>> = weyl
            .members()
            .iter()
            .map(|t| {
                let mut v = vec![F::zero(); n * n];
                for k in 0..n {
                    for a in 0..n {
                        v[a * n + k] = t.get(a, k).clone();
                    }
                }
                v
            })
            .collect();
        let b = EntangledBasis { n, vectors };
        let nn = F::from_integer(n as i64);
        for (a, va) in b.vectors.iter().enumerate() {
            for (c, vc) in b.vectors.iter().enumerate() {
                let ip = inner(va, vc);
                let want = if a == c { nn.clone() } else { F::zero() };
                if !ip.approx_eq(&want, tol) {
                    return Err(PauliError::Invariant(format!("⟨φ_{a}|φ_{c}⟩ ≠ δ")));
                }
            }
        }
        Ok(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Stored vector `√n |φ_{i,j}⟩`.
    pub fn scaled_vector(&self, i: i64, j: i64) -> &[F] {
        let n = self.n as i64;
        &self.vectors[(i.rem_euclid(n) * n + j.rem_euclid(n)) as usize]
    }

    /// Normalized inner product `⟨φ_a|φ_b⟩`.
    pub fn inner(&self, a: (i64, i64), b: (i64, i64)) -> F {
        inner(self.scaled_vector(a.0, a.1), self.scaled_vector(b.0, b.1))
            .mul(&F::from_integer(self.n as i64).inv().expect("n ≥ 1"))
    }

    /// `|φ_{i,j}⟩⟨φ_{i,j}|` as an `n² × n²` matrix.
    pub fn projection(&self, i: i64, j: i64) -> Mat<F> {
        let v = self.scaled_vector(i, j);
        let inv = F::from_integer(self.n as i64).inv().expect("n ≥ 1");
        Mat::from_fn(v.len(), v.len(), |a, b| v[a].mul(&v[b].conj()).mul(&inv))
    }
}

pub fn entangled_basis<F: Field>(n: usize, tol: Tol) -> Result<EntangledBasis<F>, PauliError> {
    EntangledBasis::new(&WeylBasis::new(n, tol)?, tol)
}

/// `⟨x|y⟩`, conjugate-linear in `x`.
fn inner<F: Field>(x: &[F], y: &[F]) -> F {
    x.iter()
        .zip(y)
        .fold(F::zero(), |acc, (a, b)| acc.add(&a.conj().mul(b)))
}

/// Each member a projection, members mutually orthogonal, sum = identity.
pub fn pvm_check<F: Field>(
    projections: &[SparseMat<F>],
    tol: Tol,
) -> Result<CheckReport, PauliError> {
    let Some(first) = projections.first() else {
        return Err(PauliError::NotPvm("empty family".into()));
    };
    let k = first.rows();
    if projections.iter().any(|p| p.rows() != k || p.cols() != k) {
        return Err(PauliError::Dimension("projections differ in size".into()));
    }
    let mut rep = CheckReport::new();
    for (a, p) in projections.iter().enumerate() {
        let herm = p.sub(&p.adjoint());
        let idem = p.mul(p).sub(p);
        let res = herm.max_residual().max(idem.max_residual());
        if !(herm.is_zero(tol) && idem.is_zero(tol)) {
            return Err(PauliError::NotPvm(format!(
                "member {a} is not a projection (residual {res:e})"
            )));
        }
        rep.record(true, res, String::new);
    }
    for a in 0..projections.len() {
        for b in a + 1..projections.len() {
            let prod = projections[a].mul(&projections[b]);
            if !prod.is_zero(tol) {
                return Err(PauliError::NotPvm(format!(
                    "members {a} and {b} are not orthogonal (residual {:e})",
                    prod.max_residual()
                )));
            }
            rep.record(true, prod.max_residual(), String::new);
        }
    }
    let total = projections
        .iter()
        .fold(SparseMat::zeros(k, k), |acc, p| acc.add(p))
        .sub(&SparseMat::identity(k));
    if !total.is_zero(tol) {
        return Err(PauliError::NotPvm(format!(
            "sum is not the identity (residual {:e})",
            total.max_residual()
        )));
    }
    rep.record(true, total.max_residual(), String::new);
    Ok(rep)
}
