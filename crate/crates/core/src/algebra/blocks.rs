//! Center computation and Artin–Wedderburn block recognition.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::structalg::StructAlgebra;
use super::AlgebraError;
use crate::arith::{Backend, Field, Mat, Poly, Tol};

/// Largest dimension handled by characteristic-polynomial factoring on the
/// exact backend; larger algebras are recognized numerically.
pub const EXACT_RECOGNITION_MAX_DIM: usize = 9;
const MAX_ATTEMPTS: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecognitionMethod {
    ExactCharpoly,
    FloatSchur,
}

/// Central idempotent covering `count` blocks of size `size`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockClass {
    pub size: usize,
    pub count: usize,
    /// Coordinates in the algebra basis, in the backend's text format.
    pub idempotent: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockDecomposition {
    /// Block sizes, ascending.
    pub sizes: Vec<usize>,
    pub method: RecognitionMethod,
    /// Number of splitting elements tried (1 = the deterministic default).
    pub attempts: u64,
    /// Worst idempotent residual; 0 on the exact path.
    pub residual: f64,
    pub classes: Vec<BlockClass>,
}

/// Basis of `{x : x b_i = b_i x ∀ i}`.
pub fn center<F: Field>(a: &StructAlgebra<F>, tol: Tol) -> Vec<Vec<F>> {
    let n = a.dim();
    let mut m = Mat::<F>::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j) {
                let row = j * n + k;
                let v = m.get(row, i).add(c);
                m.set(row, i, v);
            }
            for (k, c) in a.basis_product(j, i) {
                let row = j * n + k;
                let v = m.get(row, i).sub(c);
                m.set(row, i, v);
            }
        }
    }
    m.nullspace(tol)
}

/// Trace form `T_ij = Tr(L_{b_i b_j})` of the left regular representation.
fn trace_form<F: Field>(a: &StructAlgebra<F>) -> Mat<F> {
    let n = a.dim();
    let t: Vec<F> = (0..n)
        .map(|k| {
            (0..n).fold(F::zero(), |acc, j| {
                a.basis_product(k, j)
                    .iter()
                    .filter(|(l, _)| *l == j)
                    .fold(acc, |acc, (_, c)| acc.add(c))
            })
        })
        .collect();
    Mat::from_fn(n, n, |i, j| {
        a.basis_product(i, j)
            .iter()
            .fold(F::zero(), |acc, (k, c)| acc.add(&c.mul(&t[*k])))
    })
}

fn combine<F: Field>(dim: usize, basis: &[Vec<F>], weights: &[i64]) -> Vec<F> {
    let mut z = vec![F::zero(); dim];
    for (v, &w) in basis.iter().zip(weights) {
        let w = F::from_integer(w);
        for (zi, vi) in z.iter_mut().zip(v) {
            *zi = zi.add(&vi.mul(&w));
        }
    }
    z
}

fn weights(count: usize, attempt: u64, seed: u64) -> Vec<i64> {
    if attempt == 0 {
        return (1..=count as i64).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
    (0..count).map(|_| rng.gen_range(-50..=50)).collect()
}

/// Faddeev–LeVerrier characteristic polynomial `det(x I − A)`.
pub fn charpoly<F: Field>(a: &Mat<F>) -> Poly<F> {
    let n = a.rows();
    let mut c = vec![F::zero(); n + 1];
    c[n] = F::one();
    let mut m = Mat::<F>::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Mat::identity(n).scale(&c[n - k + 1]));
        let tr = a.mul(&m).trace();
        c[n - k] = tr
            .neg()
            .mul(&F::from_integer(k as i64).inv().expect("char 0"));
    }
    Poly::new(c)
}

fn poly_eval_in<F: Field>(a: &StructAlgebra<F>, p: &Poly<F>, z: &[F]) -> Vec<F> {
    let mut acc = a.zero_vector();
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc, z);
        for (x, u) in acc.iter_mut().zip(a.unit()) {
            *x = x.add(&u.mul(c));
        }
    }
    acc
}

fn isqrt(e: usize) -> Option<usize> {
    let r = (e as f64).sqrt().round() as usize;
    (r * r == e).then_some(r)
}

/// Splits a semisimple algebra into matrix blocks.
///
/// The splitting element is `z = Σ (t+1) z_t` over the center basis, then
/// seeded random integer combinations if its eigenvalues collide.
pub fn recognize_blocks<F: Field>(
    a: &StructAlgebra<F>,
    tol: Tol,
    seed: u64,
) -> Result<BlockDecomposition, AlgebraError> {
    if trace_form(a).rank(tol) < a.dim() {
        return Err(AlgebraError::NotSemisimple);
    }
    if F::BACKEND == Backend::Exact && a.dim() <= EXACT_RECOGNITION_MAX_DIM {
        recognize_exact(a, tol, seed)
    } else {
        recognize_float(&a.to_float(), tol, seed)
    }
}

fn recognize_exact<F: Field>(
    a: &StructAlgebra<F>,
    tol: Tol,
    seed: u64,
) -> Result<BlockDecomposition, AlgebraError> {
    let n = a.dim();
    let zb = center(a, tol);
    let c = zb.len();
    for attempt in 0..MAX_ATTEMPTS {
        let z = combine(n, &zb, &weights(c, attempt, seed));
        let chi = charpoly(&a.left_mult(&z));
        let parts = chi.squarefree_decomposition();
        let distinct: usize = parts.iter().map(|(_, p)| p.degree().unwrap_or(0)).sum();
        if distinct != c {
            continue;
        }
        let mut sizes = Vec::new();
        let mut classes = Vec::new();
        let mut total = a.zero_vector();
        for (idx, (e, p)) in parts.iter().enumerate() {
            let size = isqrt(*e).ok_or(AlgebraError::NonSquareBlock(*e))?;
            let count = p.degree().unwrap_or(0);
            sizes.extend(std::iter::repeat_n(size, count));
            let others = parts
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .fold(Poly::one(), |acc, (_, (_, q))| acc.mul(q));
            let (_, s, _) = others.gcd_ext(p);
            let f = others.mul(&s);
            let idem = poly_eval_in(a, &f, &z);
            let sq = a.mul(&idem, &idem);
            if sq.iter().zip(&idem).any(|(x, y)| !x.approx_eq(y, tol)) {
                return Err(AlgebraError::RecognitionFailed(
                    "idempotent check failed".into(),
                ));
            }
            for (t, x) in total.iter_mut().zip(&idem) {
                *t = t.add(x);
            }
            classes.push(BlockClass {
                size,
                count,
                idempotent: idem.iter().map(F::to_text).collect(),
            });
        }
        if total
            .iter()
            .zip(a.unit())
            .any(|(x, y)| !x.approx_eq(y, tol))
        {
            return Err(AlgebraError::RecognitionFailed(
                "idempotents do not sum to 1".into(),
            ));
        }
        sizes.sort_unstable();
        classes.sort_by_key(|k| k.size);
        return Ok(BlockDecomposition {
            sizes,
            method: RecognitionMethod::ExactCharpoly,
            attempts: attempt + 1,
            residual: 0.0,
            classes,
        });
    }
    Err(AlgebraError::RecognitionFailed(
        "no separating central element found".into(),
    ))
}

fn recognize_float(
    a: &StructAlgebra<Complex64>,
    tol: Tol,
    seed: u64,
) -> Result<BlockDecomposition, AlgebraError> {
    let n = a.dim();
    let zb = center(a, tol);
    let c = zb.len();
    let basis = Mat::from_fn(n, c, |i, t| zb[t][i]);
    let gap_floor = tol.0.sqrt();
    for attempt in 0..MAX_ATTEMPTS {
        let z = combine(n, &zb, &weights(c, attempt, seed));
        // multiplication by z restricted to the center
        let mut lz = DMatrix::<Complex64>::zeros(c, c);
        for (t, zt) in zb.iter().enumerate() {
            let y = basis
                .solve(&a.mul(&z, zt), tol)
                .ok_or_else(|| AlgebraError::RecognitionFailed("center not closed".into()))?;
            for (s, v) in y.into_iter().enumerate() {
                lz[(s, t)] = v;
            }
        }
        let eig: Vec<Complex64> = lz.schur().unpack().1.diagonal().iter().copied().collect();
        let scale = eig.iter().map(|l| l.norm()).fold(1.0, f64::max);
        let collide =
            (0..c).any(|i| (i + 1..c).any(|j| (eig[i] - eig[j]).norm() <= gap_floor * scale));
        if collide {
            continue;
        }
        let mut residual = 0.0f64;
        let mut sizes = Vec::new();
        let mut total = a.zero_vector();
        let mut idems = Vec::new();
        for (b, lb) in eig.iter().enumerate() {
            let mut e = a.unit().to_vec();
            for (g, lg) in eig.iter().enumerate() {
                if g == b {
                    continue;
                }
                let mut factor: Vec<Complex64> =
                    z.iter().zip(a.unit()).map(|(zi, u)| zi - u * lg).collect();
                let inv = 1.0 / (lb - lg);
                factor.iter_mut().for_each(|x| *x *= inv);
                e = a.mul(&e, &factor);
            }
            let sq = a.mul(&e, &e);
            residual = residual.max(
                sq.iter()
                    .zip(&e)
                    .map(|(x, y)| (x - y).norm())
                    .fold(0.0, f64::max),
            );
            let dim = a.left_mult(&e).trace().re;
            let rounded = dim.round();
            residual = residual.max((dim - rounded).abs());
            if (dim - rounded).abs() > gap_floor || rounded < 1.0 {
                return Err(AlgebraError::RecognitionFailed(format!(
                    "block dimension {dim} is not an integer"
                )));
            }
            let size =
                isqrt(rounded as usize).ok_or(AlgebraError::NonSquareBlock(rounded as usize))?;
            sizes.push(size);
            total.iter_mut().zip(&e).for_each(|(t, x)| *t += x);
            idems.push((size, e));
        }
        residual = residual.max(
            total
                .iter()
                .zip(a.unit())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max),
        );
        if residual > gap_floor {
            return Err(AlgebraError::RecognitionFailed(format!(
                "idempotent residual {residual:e}"
            )));
        }
        sizes.sort_unstable();
        idems.sort_by_key(|(s, _)| *s);
        let classes = idems
            .into_iter()
            .map(|(size, e)| BlockClass {
                size,
                count: 1,
                idempotent: e.iter().map(Field::to_text).collect(),
            })
            .collect();
        return Ok(BlockDecomposition {
            sizes,
            method: RecognitionMethod::FloatSchur,
            attempts: attempt + 1,
            residual,
            classes,
        });
    }
    Err(AlgebraError::RecognitionFailed(
        "eigenvalues of every splitting element collide".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{function_algebra, multimatrix, BlockSpec};
    use crate::arith::{Coeff, Cyclotomic};

    type Q = Cyclotomic;

    #[test]
    fn center_dimensions() {
        let tol = Tol::default();
        let c = |p: &str| center(&multimatrix::<Q>(&p.parse().unwrap(), tol), tol).len();
        assert_eq!(c("2"), 1);
        assert_eq!(c("2,1"), 2);
        assert_eq!(center(&function_algebra::<Q>(5, tol), tol).len(), 5);
    }

    #[test]
    fn charpoly_of_small_matrix() {
        let m = Mat::from_rows(vec![
            vec![Q::from_integer(2), Q::from_integer(1)],
            vec![Q::zero(), Q::from_integer(3)],
        ]);
        let p = charpoly(&m);
        assert_eq!(
            p.coeffs(),
            &[Q::from_integer(6), Q::from_integer(-5), Q::one()]
        );
    }

    #[test]
    fn multimatrix_blocks_round_trip_exact_and_float() {
        let tol = Tol::default();
        for p in [
            "1", "2", "3", "2,1", "2,2", "1,1,1", "3,2", "2,2,1", "3,2,1,1",
        ] {
            let s: BlockSpec = p.parse().unwrap();
            let mut want = s.sizes().to_vec();
            want.sort_unstable();
            let a = multimatrix::<Q>(&s, tol);
            let d = recognize_blocks(&a, tol, 7).unwrap();
            assert_eq!(d.sizes, want, "exact {p}");
            let f = multimatrix::<Complex64>(&s, tol);
            let d = recognize_blocks(&f, tol, 7).unwrap();
            assert_eq!(d.sizes, want, "float {p}");
            assert!(d.residual <= 1e-8);
        }
    }

    #[test]
    fn default_weights_can_collide() {
        // Center basis E1 - E2, E2 with weights (1,2) gives z = E1 + E2 = 1,
        // a single repeated eigenvalue.
        let tol = Tol::default();
        let a = function_algebra::<Q>(2, tol);
        let zb = vec![
            vec![Q::one(), Q::from_integer(-1)],
            vec![Q::zero(), Q::one()],
        ];
        let z = combine(2, &zb, &weights(2, 0, 0));
        assert_eq!(z, a.unit().to_vec());
        assert_eq!(recognize_blocks(&a, tol, 0).unwrap().sizes, vec![1, 1]);
    }

    #[test]
    fn nilpotent_radical_is_rejected() {
        // upper triangular 2x2 matrices: basis E00, E01, E11
        let tol = Tol::default();
        let e = |k: usize| vec![(k, Q::one())];
        let mut mult = vec![Vec::new(); 9];
        mult[0] = e(0); // E00 E00
        mult[1] = e(1); // E00 E01
        mult[5] = e(1); // E01 E11
        mult[8] = e(2); // E11 E11
        let a = StructAlgebra::new_unchecked(
            vec!["E00".into(), "E01".into(), "E11".into()],
            mult,
            vec![e(0), e(1), e(2)],
            vec![Q::one(), Q::zero(), Q::one()],
            vec![Q::zero(); 3],
            false,
        );
        assert!(matches!(
            recognize_blocks(&a, tol, 0),
            Err(AlgebraError::NotSemisimple)
        ));
    }
}
