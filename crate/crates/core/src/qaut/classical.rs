//! Classical points: automorphisms of `B` and permutations of `X`, plus a
//! small genuinely noncommutative magic unitary.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::relations::GeneratorAssignment;
use super::symbols::{QautPresentation, SnPresentation};
use super::QautError;
use crate::algebra::{multimatrix, BlockSpec};
use crate::arith::{Field, Mat, Tol};
use crate::pauli::weyl_basis;

/// Checks that `θ` (column `a` = `θ(b_a)` in the matrix-unit basis) is a
/// unital *-automorphism of `B` preserving the Plancherel trace.
pub fn verify_automorphism<F: Field>(
    spec: &BlockSpec,
    theta: &Mat<F>,
    tol: Tol,
) -> Result<(), QautError> {
    let b = multimatrix::<F>(spec, tol);
    let n = b.dim();
    if theta.rows() != n || theta.cols() != n {
        return Err(QautError::SizeMismatch);
    }
    let img: Vec<Vec<F>> = (0..n).map(|a| theta.mul_vec(&b.basis_vector(a))).collect();
    let close = |x: &[F], y: &[F]| x.iter().zip(y).all(|(p, q)| p.approx_eq(q, tol));
    for a in 0..n {
        for c in 0..n {
            let lhs = theta.mul_vec(&b.mul(&b.basis_vector(a), &b.basis_vector(c)));
            if !close(&lhs, &b.mul(&img[a], &img[c])) {
                return Err(QautError::NotAutomorphism(format!(
                    "not multiplicative on ({a}, {c})"
                )));
            }
        }
        if !close(
            &theta.mul_vec(&b.star(&b.basis_vector(a))),
            &b.star(&img[a]),
        ) {
            return Err(QautError::NotAutomorphism(format!(
                "breaks the involution at {a}"
            )));
        }
        if !b.tau(&img[a]).approx_eq(&b.tau(&b.basis_vector(a)), tol) {
            return Err(QautError::NotTracePreserving);
        }
    }
    if !close(&theta.mul_vec(b.unit()), b.unit()) {
        return Err(QautError::NotAutomorphism("not unital".into()));
    }
    if theta.rank(tol) < n {
        return Err(QautError::NotAutomorphism("not injective".into()));
    }
    Ok(())
}

/// `q^{(s,r)}_{(i,j),(k,l)} ↦` coefficient of `E^{(r)}_{kl}` in `θ(E^{(s)}_{ij})`.
pub fn classical_assignment_aut<F: Field>(
    pres: &QautPresentation,
    theta: &Mat<F>,
    tol: Tol,
) -> Result<GeneratorAssignment<F>, QautError> {
    let spec = pres.spec();
    verify_automorphism(spec, theta, tol)?;
    let vals = pres
        .gens()
        .iter()
        .map(|g| {
            theta
                .get(
                    spec.unit_index(g.r, g.k, g.l),
                    spec.unit_index(g.s, g.i, g.j),
                )
                .clone()
        })
        .collect();
    Ok(GeneratorAssignment::scalars(vals))
}

/// The counit `q^{(s,r)}_{(i,j),(k,l)} ↦ δ_{sr} δ_{ik} δ_{jl}`.
pub fn counit_assignment<F: Field>(pres: &QautPresentation) -> GeneratorAssignment<F> {
    GeneratorAssignment::scalars(
        pres.gens()
            .iter()
            .map(|g| {
                if g.s == g.r && g.i == g.k && g.j == g.l {
                    F::one()
                } else {
                    F::zero()
                }
            })
            .collect(),
    )
}

/// `Ad(⊕_r U_r)`: `E^{(r)}_{ij} ↦ U_r E_{ij} U_r*`, scaled by `1/c_r` for
/// unitaries given as `c_r^{1/2}`-multiples (as for an unnormalized DFT).
pub fn inner_automorphism<F: Field>(spec: &BlockSpec, unitaries: &[(Mat<F>, F)]) -> Mat<F> {
    let big_n = spec.big_n();
    let mut theta = Mat::zeros(big_n, big_n);
    for (r, (u, scale)) in unitaries.iter().enumerate() {
        let n = spec.n(r);
        let inv = scale.inv().expect("nonzero normalization");
        for i in 0..n {
            for j in 0..n {
                let mut e = Mat::zeros(n, n);
                e.set(i, j, F::one());
                let img = u.mul(&e).mul(&u.adjoint()).scale(&inv);
                for a in 0..n {
                    for b in 0..n {
                        theta.set(
                            spec.unit_index(r, a, b),
                            spec.unit_index(r, i, j),
                            img.get(a, b).clone(),
                        );
                    }
                }
            }
        }
    }
    theta
}

/// `E^{(r)}_{ij} ↦ E^{(perm[r])}_{ij}`; blocks must have matching sizes.
pub fn block_permutation<F: Field>(spec: &BlockSpec, perm: &[usize]) -> Result<Mat<F>, QautError> {
    if perm.len() != spec.m()
        || perm
            .iter()
            .enumerate()
            .any(|(r, &t)| t >= spec.m() || spec.n(t) != spec.n(r))
    {
        return Err(QautError::NotAutomorphism(
            "block permutation must preserve sizes".into(),
        ));
    }
    let big_n = spec.big_n();
    let mut theta = Mat::zeros(big_n, big_n);
    for (r, &t) in perm.iter().enumerate() {
        for i in 0..spec.n(r) {
            for j in 0..spec.n(r) {
                theta.set(spec.unit_index(t, i, j), spec.unit_index(r, i, j), F::one());
            }
        }
    }
    Ok(theta)
}

fn per_block_identity<F: Field>(spec: &BlockSpec) -> Vec<(Mat<F>, F)> {
    spec.sizes()
        .iter()
        .map(|&n| (Mat::identity(n), F::one()))
        .collect()
}

/// Named automorphisms of `B`: identity; on one block at a time, `Ad` of
/// every nontrivial Weyl operator, of a diagonal phase, of the DFT and of a
/// few of their products; and swaps of equal-sized blocks.
pub fn automorphism_battery<F: Field>(spec: &BlockSpec, tol: Tol) -> Vec<(String, Mat<F>)> {
    let mut out = vec![("id".to_string(), Mat::identity(spec.big_n()))];
    for r in 0..spec.m() {
        let n = spec.n(r);
        if n < 2 {
            continue;
        }
        let w = weyl_basis::<F>(n, tol).expect("Weyl basis");
        let mut push = |name: String, u: Mat<F>, c: F| {
            let mut us = per_block_identity::<F>(spec);
            us[r] = (u, c);
            out.push((name, inner_automorphism(spec, &us)));
        };
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                if (a, b) != (0, 0) {
                    push(format!("Ad T{}_{a}{b}", r + 1), w.t(a, b).clone(), F::one());
                }
            }
        }
        let phase = Mat::from_fn(n, n, |i, j| {
            if i == j {
                F::root_of_unity(4 * n as u32, (i * i) as i64)
            } else {
                F::zero()
            }
        });
        let dft = Mat::from_fn(n, n, |i, j| F::root_of_unity(n as u32, (i * j) as i64));
        let nn = F::from_integer(n as i64);
        push(format!("Ad phase{}", r + 1), phase.clone(), F::one());
        push(format!("Ad DFT{}", r + 1), dft.clone(), nn.clone());
        push(
            format!("Ad phase·DFT{}", r + 1),
            phase.mul(&dft),
            nn.clone(),
        );
        push(
            format!("Ad DFT·phase{}", r + 1),
            dft.mul(&phase),
            nn.clone(),
        );
        push(
            format!("Ad phase·T{}_11", r + 1),
            phase.mul(w.t(1, 1)),
            F::one(),
        );
        push(format!("Ad DFT·T{}_10", r + 1), dft.mul(w.t(1, 0)), nn);
    }
    for r in 0..spec.m() {
        for t in r + 1..spec.m() {
            if spec.n(r) == spec.n(t) {
                let mut perm: Vec<usize> = (0..spec.m()).collect();
                perm.swap(r, t);
                out.push((
                    format!("swap {}↔{}", r + 1, t + 1),
                    block_permutation(spec, &perm).expect("sizes match"),
                ));
            }
        }
    }
    out
}

/// `u_{p,q} ↦ [p = perm(q)]`.
pub fn permutation_assignment<F: Field>(
    pres: &SnPresentation,
    perm: &[usize],
) -> GeneratorAssignment<F> {
    let n = pres.big_n();
    assert_eq!(perm.len(), n);
    GeneratorAssignment::scalars(
        (0..n * n)
            .map(|idx| {
                if idx / n == perm[idx % n] {
                    F::one()
                } else {
                    F::zero()
                }
            })
            .collect(),
    )
}

/// Whether `perm` sends every point to a point of a block of the same size.
pub fn is_block_preserving(pres: &SnPresentation, perm: &[usize]) -> bool {
    let spec = pres.spec();
    let pts = pres.points();
    perm.iter()
        .enumerate()
        .all(|(q, &p)| spec.n(pts[q].s) == spec.n(pts[p].s))
}

/// Seeded uniformly random permutation; block-size preserving on request.
pub fn random_permutation(
    pres: &SnPresentation,
    block_preserving: bool,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let n = pres.big_n();
    if !block_preserving {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        return p;
    }
    let spec = pres.spec();
    let mut perm = vec![0; n];
    let mut sizes: Vec<usize> = spec.sizes().to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    for size in sizes {
        let class: Vec<usize> = (0..n)
            .filter(|&q| spec.n(pres.points()[q].s) == size)
            .collect();
        let mut image = class.clone();
        image.shuffle(rng);
        for (q, p) in class.into_iter().zip(image) {
            perm[q] = p;
        }
    }
    perm
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A 2×2-matrix-valued magic unitary on points `pts = [a, b, c, e]`
/// (identity elsewhere) built from the noncommuting projections
/// `p = E₀₀` and `q = ½[[1,1],[1,1]]`. `None` if fewer than four points
/// share a block size.
pub fn quantum_magic_unitary<F: Field>(pres: &SnPresentation) -> Option<GeneratorAssignment<F>> {
    let spec = pres.spec();
    let n = pres.big_n();
    let pts = (0..n).find_map(|a| {
        let class: Vec<usize> = (0..n)
            .filter(|&q| spec.n(pres.points()[q].s) == spec.n(pres.points()[a].s))
            .collect();
        (class.len() >= 4).then(|| [class[0], class[1], class[2], class[3]])
    })?;
    let half = F::from_ratio(1, 2);
    let p = Mat::from_rows(vec![vec![F::one(), F::zero()], vec![F::zero(), F::zero()]]);
    let q = Mat::from_rows(vec![
        vec![half.clone(), half.clone()],
        vec![half.clone(), half],
    ]);
    let id = Mat::<F>::identity(2);
    let zero = Mat::<F>::zeros(2, 2);
    let pattern = [
        [p.clone(), id.sub(&p), zero.clone(), zero.clone()],
        [id.sub(&p), p, zero.clone(), zero.clone()],
        [zero.clone(), zero.clone(), q.clone(), id.sub(&q)],
        [zero.clone(), zero.clone(), id.sub(&q), q],
    ];
    let mut mats = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (ia, ib) = (
                pts.iter().position(|&x| x == a),
                pts.iter().position(|&x| x == b),
            );
            mats.push(match (ia, ib) {
                (Some(i), Some(j)) => pattern[i][j].clone(),
                (None, None) if a == b => id.clone(),
                _ => zero.clone(),
            });
        }
    }
    GeneratorAssignment::new(n * n, mats).ok()
}
