//! Row-compressed sparse matrices. The algebraic checks work with Kronecker
//! products of Weyl operators, which stay very sparse.

use std::collections::BTreeMap;

use super::field::{Field, Tol};
use super::mat::Mat;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<F> {
    rows: usize,
    cols: usize,
    /// Per row, column → value; explicit zeros are never stored.
    data: Vec<BTreeMap<usize, F>>,
}

impl<F: Field> SparseMat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].insert(i, F::one());
        }
        m
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        t: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, j, v) in t {
            m.add_at(i, j, &v);
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_triplets(n, n, [(i, j, F::one())])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i].get(&j).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            return;
        }
        let row = &mut self.data[i];
        match row.get_mut(&j) {
            Some(x) => {
                *x = x.add(v);
                if x.is_zero() {
                    row.remove(&j);
                }
            }
            None => {
                row.insert(j, v.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    out.add_at(i, *j, &a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (i, j, v) in rhs.iter() {
            out.add_at(i, j, v);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self::from_triplets(
            self.rows,
            self.cols,
            self.iter().map(|(i, j, v)| (i, j, v.mul(c))),
        )
    }

    pub fn adjoint(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.iter().map(|(i, j, v)| (j, i, v.conj())),
        )
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (i, j, a) in self.iter() {
            for (k, l, b) in rhs.iter() {
                out.add_at(i * rhs.rows + k, j * rhs.cols + l, &a.mul(b));
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.add(&self.get(i, i)))
    }

    pub fn is_zero(&self, tol: Tol) -> bool {
        self.iter().all(|(_, _, v)| v.near_zero(tol))
    }

    pub fn approx_eq(&self, rhs: &Self, tol: Tol) -> bool {
        self.rows == rhs.rows && self.cols == rhs.cols && self.sub(rhs).is_zero(tol)
    }

    pub fn is_projection(&self, tol: Tol) -> bool {
        self.rows == self.cols
            && self.approx_eq(&self.adjoint(), tol)
            && self.mul(self).approx_eq(self, tol)
    }

    pub fn is_unitary(&self, tol: Tol) -> bool {
        self.rows == self.cols
            && self
                .adjoint()
                .mul(self)
                .approx_eq(&Self::identity(self.rows), tol)
    }

    pub fn max_residual(&self) -> f64 {
        self.iter()
            .map(|(_, _, v)| v.residual())
            .fold(0.0, f64::max)
    }

    /// Conjugate by the permutation of tensor factors: with factor
    /// dimensions `dims`, factor `k` of the result is factor `perm[k]` of
    /// `self`. Rows and columns are permuted alike.
    pub fn permute_factors(&self, dims: &[usize], perm: &[usize]) -> Self {
        assert_eq!(self.rows, self.cols);
        assert_eq!(
            dims.iter().product::<usize>(),
            self.rows,
            "dims do not match"
        );
        let map = factor_permutation(dims, perm);
        Self::from_triplets(
            self.rows,
            self.cols,
            self.iter().map(|(i, j, v)| (map[i], map[j], v.clone())),
        )
    }

    pub fn to_dense(&self) -> Mat<F> {
        let mut m = Mat::zeros(self.rows, self.cols);
        for (i, j, v) in self.iter() {
            m.set(i, j, v.clone());
        }
        m
    }

    pub fn from_dense(m: &Mat<F>) -> Self {
        let mut s = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                s.add_at(i, j, m.get(i, j));
            }
        }
        s
    }

    /// Row-major flattening of the nonzero entries, for linear-algebra over
    /// collections of matrices.
    pub fn flat_entries(&self) -> impl Iterator<Item = (usize, &F)> {
        let c = self.cols;
        self.iter().map(move |(i, j, v)| (i * c + j, v))
    }
}

/// `map[old_index] = new_index` for reordering tensor factors.
pub fn factor_permutation(dims: &[usize], perm: &[usize]) -> Vec<usize> {
    let n = dims.len();
    assert_eq!(perm.len(), n);
    let total: usize = dims.iter().product();
    let new_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut map = vec![0; total];
    let mut digits = vec![0; n];
    for (old, slot) in map.iter_mut().enumerate() {
        let mut rem = old;
        for k in (0..n).rev() {
            digits[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut new = 0;
        for k in 0..n {
            new = new * new_dims[k] + digits[perm[k]];
        }
        *slot = new;
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::Cyclotomic;
    use crate::arith::field::Coeff;
    use proptest::prelude::*;

    type S = SparseMat<Cyclotomic>;

    fn arb(n: usize) -> impl Strategy<Value = S> {
        proptest::collection::vec((0..n, 0..n, -3i64..=3, 0i64..4), 0..8).prop_map(move |t| {
            S::from_triplets(
                n,
                n,
                t.into_iter().map(|(i, j, c, k)| {
                    (
                        i,
                        j,
                        Cyclotomic::root_of_unity(4, k).mul(&Cyclotomic::from_integer(c)),
                    )
                }),
            )
        })
    }

    #[test]
    fn swap_two_factors() {
        let a = S::unit(2, 0, 1);
        let b = S::unit(3, 2, 0);
        let ab = a.kron(&b);
        let ba = b.kron(&a);
        assert_eq!(ab.permute_factors(&[2, 3], &[1, 0]), ba);
    }

    proptest! {
        #[test]
        fn sparse_matches_dense(a in arb(4), b in arb(4)) {
            prop_assert_eq!(a.mul(&b).to_dense(), a.to_dense().mul(&b.to_dense()));
            prop_assert_eq!(a.kron(&b).to_dense(), a.to_dense().kron(&b.to_dense()));
            prop_assert_eq!(a.mul(&b).adjoint(), b.adjoint().mul(&a.adjoint()));
        }

        #[test]
        fn factor_permutation_composes(a in arb(2), b in arb(3), c in arb(2)) {
            let abc = a.kron(&b).kron(&c);
            let cab = c.kron(&a).kron(&b);
            prop_assert_eq!(abc.permute_factors(&[2, 3, 2], &[2, 0, 1]), cab);
        }
    }
}
