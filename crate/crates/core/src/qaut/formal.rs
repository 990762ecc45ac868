//! Finitely supported sums `Σ_w A_w ⊗ w` of matrices times words in
//! generator symbols.

use std::collections::BTreeMap;

use super::symbols::Symbol;
use crate::arith::{Field, SparseMat, Tol};

pub type Word = Vec<Symbol>;

#[derive(Clone, Debug, PartialEq)]
pub struct FormalTensor<F> {
    dim: usize,
    terms: BTreeMap<Word, SparseMat<F>>,
}

impl<F: Field> FormalTensor<F> {
    pub fn zero(dim: usize) -> Self {
        FormalTensor {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// `A ⊗ 1`.
    pub fn constant(a: SparseMat<F>) -> Self {
        Self::monomial(a, Vec::new())
    }

    /// `A ⊗ x` for a single symbol.
    pub fn symbol(a: SparseMat<F>, x: Symbol) -> Self {
        Self::monomial(a, vec![x])
    }

    pub fn monomial(a: SparseMat<F>, w: Word) -> Self {
        assert_eq!(a.rows(), a.cols(), "coefficients are square");
        let mut t = Self::zero(a.rows());
        t.add_term(w, &a);
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &SparseMat<F>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[Symbol]) -> SparseMat<F> {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| SparseMat::zeros(self.dim, self.dim))
    }

    pub fn add_term(&mut self, w: Word, a: &SparseMat<F>) {
        assert_eq!(a.rows(), self.dim, "coefficient size");
        let merged = match self.terms.remove(&w) {
            Some(old) => old.add(a),
            None => a.clone(),
        };
        if merged.nnz() > 0 {
            self.terms.insert(w, merged);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (w, a) in &rhs.terms {
            out.add_term(w.clone(), a);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &a.scale(c));
        }
        out
    }

    /// Word concatenation with matrix product of coefficients.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = Self::zero(self.dim);
        for (w1, a) in &self.terms {
            for (w2, b) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, &a.mul(b));
            }
        }
        out
    }

    /// Reverses words, takes symbol adjoints and coefficient adjoints.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, a) in &self.terms {
            let w2 = w.iter().rev().map(Symbol::adjoint).collect();
            out.add_term(w2, &a.adjoint());
        }
        out
    }

    /// `M ⊗ A_w` for every term: prepend a matrix leg.
    pub fn kron_left(&self, m: &SparseMat<F>) -> Self {
        let mut out = Self::zero(m.rows() * self.dim);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &m.kron(a));
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&SparseMat<F>) -> SparseMat<F>) -> Self {
        let mut terms = BTreeMap::new();
        let mut dim = self.dim;
        for (w, a) in &self.terms {
            let b = f(a);
            dim = b.rows();
            if b.nnz() > 0 {
                terms.insert(w.clone(), b);
            }
        }
        FormalTensor { dim, terms }
    }

    /// Replaces each symbol by `f(symbol)`, a `(coefficient, symbol)` pair,
    /// in every word.
    pub fn substitute_symbols(&self, f: impl Fn(&Symbol) -> (F, Symbol)) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, a) in &self.terms {
            let mut c = F::one();
            let mut w2 = Vec::with_capacity(w.len());
            for x in w {
                let (p, y) = f(x);
                c = c.mul(&p);
                w2.push(y);
            }
            out.add_term(w2, &a.scale(&c));
        }
        out
    }

    /// Evaluates words through `value` (all of one size `k`), giving the
    /// `dim·k` matrix `Σ_w A_w ⊗ value(w)`.
    pub fn evaluate(&self, k: usize, value: impl Fn(&Symbol) -> SparseMat<F>) -> SparseMat<F> {
        let mut out = SparseMat::zeros(self.dim * k, self.dim * k);
        for (w, a) in &self.terms {
            let v = w
                .iter()
                .fold(SparseMat::identity(k), |acc, x| acc.mul(&value(x)));
            out = out.add(&a.kron(&v));
        }
        out
    }

    pub fn is_zero(&self, tol: Tol) -> bool {
        self.terms.values().all(|a| a.is_zero(tol))
    }

    pub fn max_residual(&self) -> f64 {
        self.terms
            .values()
            .map(SparseMat::max_residual)
            .fold(0.0, f64::max)
    }

    /// Whether `self = rhs` within `tol`, with the residual.
    pub fn difference(&self, rhs: &Self, tol: Tol) -> (bool, f64) {
        let d = self.sub(rhs);
        (d.is_zero(tol), d.max_residual())
    }
}
