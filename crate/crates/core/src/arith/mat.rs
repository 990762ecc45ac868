//! Dense matrices over a [`Field`] and the elimination routines built on them.

use super::field::{Backend, Field, Tol};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, F::add)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, F::sub)
    }

    pub fn scale(&self, c: &F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols)
                .mul(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Largest entry magnitude (zero for an exactly zero exact matrix).
    pub fn max_residual(&self) -> f64 {
        self.data.iter().map(F::residual).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: Tol) -> bool {
        self.data.iter().all(|a| a.near_zero(tol))
    }

    pub fn approx_eq(&self, rhs: &Self, tol: Tol) -> bool {
        self.rows == rhs.rows && self.cols == rhs.cols && self.sub(rhs).is_zero(tol)
    }

    /// `Tr(A)/n`.
    pub fn normalized_trace(&self) -> F {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        self.trace()
            .mul(&F::from_integer(self.rows as i64).inv().expect("nonempty"))
    }

    pub fn is_unitary(&self, tol: Tol) -> bool {
        self.rows == self.cols
            && self
                .adjoint()
                .mul(self)
                .approx_eq(&Mat::identity(self.rows), tol)
    }

    /// `P = P* = P²`.
    pub fn is_projection(&self, tol: Tol) -> bool {
        self.is_hermitian(tol) && self.mul(self).approx_eq(self, tol)
    }

    pub fn is_hermitian(&self, tol: Tol) -> bool {
        self.rows == self.cols && self.approx_eq(&self.adjoint(), tol)
    }

    /// Hermitian positive definiteness by unpivoted elimination: every pivot
    /// must be (real and) positive.
    pub fn is_hermitian_positive_definite(&self, tol: Tol) -> bool {
        if !self.is_hermitian(tol) {
            return false;
        }
        let n = self.rows;
        let mut a = self.clone();
        for k in 0..n {
            let p = a.get(k, k).clone();
            let pc = p.to_c64();
            if p.near_zero(tol) || pc.re <= 0.0 {
                return false;
            }
            let pinv = p.inv().expect("nonzero pivot");
            for i in k + 1..n {
                let f = a.get(i, k).mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(i, j).sub(&f.mul(a.get(k, j)));
                    a.set(i, j, v);
                }
            }
        }
        true
    }

    /// Pivot threshold: exact zero for exact scalars, `tol` scaled to the
    /// largest entry for floats.
    fn pivot_floor(&self, tol: Tol) -> f64 {
        match F::BACKEND {
            Backend::Exact => 0.0,
            Backend::Float => tol.0 * self.data.iter().map(F::magnitude).fold(1.0, f64::max),
        }
    }

    /// Reduced row echelon form and the pivot columns. Float scalars use
    /// partial pivoting by magnitude.
    pub fn rref(&self, tol: Tol) -> (Self, Vec<usize>) {
        let floor = self.pivot_floor(tol);
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let pick = match F::BACKEND {
                Backend::Exact => (r..a.rows).find(|&i| !a.get(i, c).is_zero()),
                Backend::Float => (r..a.rows)
                    .map(|i| (i, a.get(i, c).magnitude()))
                    .filter(|&(_, m)| m > floor)
                    .max_by(|x, y| x.1.total_cmp(&y.1))
                    .map(|(i, _)| i),
            };
            let Some(p) = pick else {
                if F::BACKEND == Backend::Float {
                    for i in r..a.rows {
                        a.set(i, c, F::zero());
                    }
                }
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in c..a.cols {
                let v = a.get(r, j).mul(&inv);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let v = a.get(i, j).sub(&f.mul(a.get(r, j)));
                    a.set(i, j, v);
                }
                a.set(i, c, F::zero());
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self, tol: Tol) -> usize {
        self.rref(tol).1.len()
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column.
    pub fn nullspace(&self, tol: Tol) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref(tol);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, tol: Tol) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref(tol);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    /// One solution of `self·x = b`, if consistent.
    pub fn solve(&self, b: &[F], tol: Tol) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref(tol);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}
