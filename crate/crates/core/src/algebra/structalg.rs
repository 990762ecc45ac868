//! Finite-dimensional *-algebras presented by structure constants.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::blockspec::BlockSpec;
use super::AlgebraError;
use crate::arith::{Field, Mat, Rational, Tol};

/// Sparse linear combination of basis indices.
pub type Sparse<F> = Vec<(usize, F)>;

/// Exhaustive axiom checks run up to this dimension; above it a seeded
/// sample of triples is used.
pub const EXHAUSTIVE_DIM: usize = 64;
const SAMPLED_TRIPLES: usize = 20_000;

#[derive(Clone, Debug, PartialEq)]
pub struct StructAlgebra<F> {
    labels: Vec<String>,
    /// `mult[i * dim + j]` is `b_i b_j`.
    mult: Vec<Sparse<F>>,
    /// `star[i]` is `b_i*`.
    star: Vec<Sparse<F>>,
    unit: Vec<F>,
    trace: Vec<F>,
    tracial: bool,
}

fn dense<F: Field>(dim: usize, s: &Sparse<F>) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    for (k, c) in s {
        v[*k] = v[*k].add(c);
    }
    v
}

fn sparse<F: Field>(v: Vec<F>) -> Sparse<F> {
    v.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

impl<F: Field> StructAlgebra<F> {
    /// Build and verify every axiom (associativity, involution, unit,
    /// traciality when flagged).
    pub fn new(
        labels: Vec<String>,
        mult: Vec<Sparse<F>>,
        star: Vec<Sparse<F>>,
        unit: Vec<F>,
        trace: Vec<F>,
        tracial: bool,
        tol: Tol,
    ) -> Result<Self, AlgebraError> {
        let a = Self::new_unchecked(labels, mult, star, unit, trace, tracial);
        a.verify(tol)?;
        Ok(a)
    }

    /// Build without running the axiom checks. Shapes are still asserted.
    pub fn new_unchecked(
        labels: Vec<String>,
        mult: Vec<Sparse<F>>,
        star: Vec<Sparse<F>>,
        unit: Vec<F>,
        trace: Vec<F>,
        tracial: bool,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(mult.len(), dim * dim, "structure constant table size");
        assert_eq!(star.len(), dim, "involution table size");
        assert_eq!(unit.len(), dim, "unit vector size");
        assert_eq!(trace.len(), dim, "trace vector size");
        let clean = |s: Sparse<F>| sparse(dense(dim, &s));
        StructAlgebra {
            labels,
            mult: mult.into_iter().map(clean).collect(),
            star: star.into_iter().map(clean).collect(),
            unit,
            trace,
            tracial,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn trace_vector(&self) -> &[F] {
        &self.trace
    }

    pub fn is_tracial(&self) -> bool {
        self.tracial
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.mult[i * self.dim() + j]
    }

    pub fn basis_star(&self, i: usize) -> &Sparse<F> {
        &self.star[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn zero_vector(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.mult[i * n + j] {
                    out[*k] = out[*k].add(&ab.mul(c));
                }
            }
        }
        out
    }

    /// Conjugate-linear extension of the involution table.
    pub fn star(&self, x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ac = a.conj();
            for (k, c) in &self.star[i] {
                out[*k] = out[*k].add(&ac.mul(c));
            }
        }
        out
    }

    pub fn tau(&self, x: &[F]) -> F {
        x.iter()
            .zip(&self.trace)
            .fold(F::zero(), |acc, (a, t)| acc.add(&a.mul(t)))
    }

    /// Matrix of left multiplication by `x` in the basis.
    pub fn left_mult(&self, x: &[F]) -> Mat<F> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self.mul(x, &self.basis_vector(j)));
        }
        Mat::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// `G_ij = τ(b_i* b_j)`; the GNS inner product is `⟨x,y⟩ = x† G y`.
    pub fn gram(&self, trace: &[F]) -> Mat<F> {
        let n = self.dim();
        let stars: Vec<Vec<F>> = (0..n).map(|i| self.star(&self.basis_vector(i))).collect();
        Mat::from_fn(n, n, |i, j| {
            let p = self.mul(&stars[i], &self.basis_vector(j));
            p.iter()
                .zip(trace)
                .fold(F::zero(), |acc, (a, t)| acc.add(&a.mul(t)))
        })
    }

    pub fn with_trace(&self, trace: Vec<F>, tracial: bool) -> Self {
        assert_eq!(trace.len(), self.dim());
        StructAlgebra {
            trace,
            tracial,
            ..self.clone()
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    fn vec_eq(x: &[F], y: &[F], tol: Tol) -> bool {
        x.iter().zip(y).all(|(a, b)| a.approx_eq(b, tol))
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        if n <= EXHAUSTIVE_DIM {
            let mut v = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        v.push((i, j, k));
                    }
                }
            }
            v
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            (0..SAMPLED_TRIPLES)
                .map(|_| {
                    (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )
                })
                .collect()
        }
    }

    pub fn verify(&self, tol: Tol) -> Result<(), AlgebraError> {
        let n = self.dim();
        let basis: Vec<Vec<F>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let prods: Vec<Vec<F>> = self.mult.iter().map(|s| dense(n, s)).collect();
        for (i, j, k) in self.triples() {
            let lhs = self.mul(&prods[i * n + j], &basis[k]);
            let rhs = self.mul(&basis[i], &prods[j * n + k]);
            if !Self::vec_eq(&lhs, &rhs, tol) {
                return Err(AlgebraError::NotAssociative(i, j, k));
            }
        }
        let stars: Vec<Vec<F>> = self.star.iter().map(|s| dense(n, s)).collect();
        for i in 0..n {
            if !Self::vec_eq(&self.star(&stars[i]), &basis[i], tol) {
                return Err(AlgebraError::NotInvolutive(i));
            }
            if !Self::vec_eq(&self.mul(&self.unit, &basis[i]), &basis[i], tol)
                || !Self::vec_eq(&self.mul(&basis[i], &self.unit), &basis[i], tol)
            {
                return Err(AlgebraError::NotUnital(i));
            }
            for j in 0..n {
                let lhs = self.star(&prods[i * n + j]);
                let rhs = self.mul(&stars[j], &stars[i]);
                if !Self::vec_eq(&lhs, &rhs, tol) {
                    return Err(AlgebraError::NotAntimultiplicative(i, j));
                }
                if self.tracial {
                    let a = self.tau(&prods[i * n + j]);
                    let b = self.tau(&prods[j * n + i]);
                    if !a.approx_eq(&b, tol) {
                        return Err(AlgebraError::NotTracial(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A ⊗ B` with basis `a_i ⊗ b_j` at index `i·dim B + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (p, q) = (self.dim(), other.dim());
        let idx = |i: usize, j: usize| i * q + j;
        let mut labels = Vec::with_capacity(p * q);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let mut mult = vec![Vec::new(); p * q * p * q];
        for i in 0..p {
            for j in 0..q {
                for k in 0..p {
                    for l in 0..q {
                        let mut out = Vec::new();
                        for (a, ca) in self.basis_product(i, k) {
                            for (b, cb) in other.basis_product(j, l) {
                                out.push((idx(*a, *b), ca.mul(cb)));
                            }
                        }
                        mult[idx(i, j) * p * q + idx(k, l)] = out;
                    }
                }
            }
        }
        let mut star = Vec::with_capacity(p * q);
        let mut unit = vec![F::zero(); p * q];
        let mut trace = vec![F::zero(); p * q];
        for i in 0..p {
            for j in 0..q {
                let mut s = Vec::new();
                for (a, ca) in self.basis_star(i) {
                    for (b, cb) in other.basis_star(j) {
                        s.push((idx(*a, *b), ca.mul(cb)));
                    }
                }
                star.push(s);
                unit[idx(i, j)] = self.unit[i].mul(&other.unit[j]);
                trace[idx(i, j)] = self.trace[i].mul(&other.trace[j]);
            }
        }
        Self::new_unchecked(
            labels,
            mult,
            star,
            unit,
            trace,
            self.tracial && other.tracial,
        )
    }

    /// Convert scalars, e.g. exact to float.
    pub fn map_scalars<G: Field>(&self, f: impl Fn(&F) -> G) -> StructAlgebra<G> {
        let ms = |s: &Sparse<F>| s.iter().map(|(k, c)| (*k, f(c))).collect::<Sparse<G>>();
        StructAlgebra::new_unchecked(
            self.labels.clone(),
            self.mult.iter().map(ms).collect(),
            self.star.iter().map(ms).collect(),
            self.unit.iter().map(&f).collect(),
            self.trace.iter().map(&f).collect(),
            self.tracial,
        )
    }

    pub fn to_float(&self) -> StructAlgebra<num_complex::Complex64> {
        self.map_scalars(|c| c.to_c64())
    }
}

/// `⊕ M_{n_r}` on matrix units `E^{(r)}_{ij}` with the Plancherel trace
/// `ψ(A) = Σ (n_r/N) Tr(A_r)`.
pub fn multimatrix<F: Field>(spec: &BlockSpec, tol: Tol) -> StructAlgebra<F> {
    let dim = spec.big_n();
    let big_n = dim as i64;
    let mut labels = Vec::with_capacity(dim);
    let mut mult = vec![Vec::new(); dim * dim];
    let mut star = Vec::with_capacity(dim);
    let mut unit = vec![F::zero(); dim];
    let mut trace = vec![F::zero(); dim];
    for (r, &n) in spec.sizes().iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let a = spec.unit_index(r, i, j);
                labels.push(format!("E{}_{}{}", r + 1, i, j));
                star.push(vec![(spec.unit_index(r, j, i), F::one())]);
                if i == j {
                    unit[a] = F::one();
                    trace[a] = F::from_rational(&Rational::new(n as i64, big_n));
                }
                for l in 0..n {
                    let b = spec.unit_index(r, j, l);
                    mult[a * dim + b] = vec![(spec.unit_index(r, i, l), F::one())];
                }
            }
        }
    }
    StructAlgebra::new(labels, mult, star, unit, trace, true, tol)
        .expect("multimatrix algebra satisfies the axioms")
}

/// Functions on `points` points with pointwise product and the uniform
/// state.
pub fn function_algebra<F: Field>(points: usize, tol: Tol) -> StructAlgebra<F> {
    let labels = (0..points).map(|x| format!("δ{x}")).collect();
    let mut mult = vec![Vec::new(); points * points];
    for x in 0..points {
        mult[x * points + x] = vec![(x, F::one())];
    }
    let star = (0..points).map(|x| vec![(x, F::one())]).collect();
    let unit = vec![F::one(); points];
    let trace = vec![F::from_rational(&Rational::new(1, points as i64)); points];
    StructAlgebra::new(labels, mult, star, unit, trace, true, tol)
        .expect("function algebra satisfies the axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Coeff, Cyclotomic};

    type Q = Cyclotomic;

    fn spec(s: &str) -> BlockSpec {
        s.parse().unwrap()
    }

    #[test]
    fn plancherel_weights() {
        let tol = Tol::default();
        let a = multimatrix::<Q>(&spec("2,1"), tol);
        let s = spec("2,1");
        assert_eq!(a.trace_vector()[s.unit_index(0, 0, 0)], Q::from_ratio(2, 5));
        assert_eq!(a.trace_vector()[s.unit_index(1, 0, 0)], Q::from_ratio(1, 5));
        let c4 = multimatrix::<Q>(&spec("1,1,1,1"), tol);
        assert!(c4.trace_vector().iter().all(|t| *t == Q::from_ratio(1, 4)));
        assert_eq!(a.tau(a.unit()), Q::one());
    }

    #[test]
    fn plancherel_gram_is_diagonal() {
        let tol = Tol::default();
        for p in ["2", "2,1", "3,1", "2,2"] {
            let s = spec(p);
            let a = multimatrix::<Q>(&s, tol);
            let g = a.gram(a.trace_vector());
            let n = s.big_n() as i64;
            for x in 0..a.dim() {
                for y in 0..a.dim() {
                    let (r, _, _) = s.unit_of_index(x);
                    let want = if x == y {
                        Q::from_ratio(s.n(r) as i64, n)
                    } else {
                        Q::zero()
                    };
                    assert_eq!(*g.get(x, y), want, "{p}: G[{x},{y}]");
                }
            }
        }
    }

    #[test]
    fn broken_associativity_is_caught() {
        let tol = Tol::default();
        let a = multimatrix::<Q>(&spec("2"), tol);
        let mut mult = a.mult.clone();
        // E_00 E_01 := 2 E_01 breaks (E_00 E_00) E_01 = E_00 (E_00 E_01)
        mult[1] = vec![(1, Q::from_integer(2))];
        let err = StructAlgebra::new(
            a.labels.clone(),
            mult,
            a.star.clone(),
            a.unit.clone(),
            a.trace.clone(),
            true,
            tol,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::NotAssociative(..) | AlgebraError::NotUnital(_)
        ));
    }

    #[test]
    fn tensor_dimensions_and_trace() {
        let tol = Tol::default();
        let a = multimatrix::<Q>(&spec("2"), tol);
        let b = function_algebra::<Q>(3, tol);
        let t = a.tensor(&b);
        assert_eq!(t.dim(), 12);
        t.verify(tol).unwrap();
        assert_eq!(t.tau(t.unit()), Q::one());
    }
}
