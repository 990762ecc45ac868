//! Dense univariate polynomials over generic coefficient fields, plus the
//! rational cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::Coeff;
use super::rational::Rational;

/// Coefficients stored lowest degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Coeff> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![F::one()])
    }

    /// `x - root`
    pub fn linear(root: F) -> Self {
        Poly::new(vec![root.neg(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics if `rhs` is zero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let d = rhs.degree().expect("polynomial division by zero");
        let lead_inv = rhs.coeffs[d].inv().expect("leading coefficient invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = rem[k].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (i, r) in rhs.coeffs.iter().enumerate() {
                rem[k - d + i] = rem[k - d + i].sub(&c.mul(r));
            }
            quot[k - d] = c;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·rhs = g` and `g` monic.
    pub fn gcd_ext(&self, rhs: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_integer(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Square-free decomposition (Yun): returns `(e, P_e)` with
    /// `self = lead · ∏ P_e^e`, each `P_e` monic and square-free, nonconstant
    /// factors only. Characteristic zero is assumed.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut e = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((e, a.clone()));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            e += 1;
        }
        out
    }
}

/// `Φ_M` with integer coefficients, lowest degree first, cached per order.
pub(crate) fn cyclotomic_int_coeffs(order: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("cache poisoned").get(&order) {
        return c.clone();
    }
    let poly = cyclotomic_polynomial(order);
    let ints: Vec<i64> = poly
        .coeffs()
        .iter()
        .map(|c| match c {
            Rational::Small(r) if *r.denom() == 1 => *r.numer(),
            _ => panic!("cyclotomic polynomial coefficient not a small integer"),
        })
        .collect();
    let arc = Arc::new(ints);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(order, arc.clone());
    arc
}

/// The `order`-th cyclotomic polynomial, from `x^M - 1` divided by `Φ_d` for
/// every proper divisor `d` of `M`.
pub fn cyclotomic_polynomial(order: u32) -> Poly<Rational> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let m = order as usize;
    let mut coeffs = vec![Rational::zero(); m + 1];
    coeffs[0] = Rational::from_integer(-1);
    coeffs[m] = Rational::one();
    let mut p = Poly::new(coeffs);
    for d in 1..order {
        if order.is_multiple_of(d) {
            let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

pub fn euler_phi(order: u32) -> usize {
    let mut n = order;
    let mut result = order;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &Poly<Rational>) -> Vec<i64> {
        p.coeffs().iter().map(|c| c.to_f64() as i64).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_euler_phi() {
        for m in 1..=30 {
            assert_eq!(cyclotomic_polynomial(m).degree(), Some(euler_phi(m)));
        }
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        let r = |n: i64| Rational::from_integer(n);
        // (x-1)^4 (x-2) (x-3)^4
        let mut p = Poly::one();
        for _ in 0..4 {
            p = p.mul(&Poly::linear(r(1)));
            p = p.mul(&Poly::linear(r(3)));
        }
        p = p.mul(&Poly::linear(r(2)));
        let dec = p.squarefree_decomposition();
        let degs: Vec<(usize, usize)> =
            dec.iter().map(|(e, f)| (*e, f.degree().unwrap())).collect();
        assert_eq!(degs, vec![(1, 1), (4, 2)]);
    }

    #[test]
    fn gcd_ext_identity() {
        let r = |n: i64| Rational::from_integer(n);
        let a = Poly::new(vec![r(2), r(0), r(1)]);
        let b = cyclotomic_polynomial(3);
        let (g, s, t) = a.gcd_ext(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), Poly::one());
    }
}
