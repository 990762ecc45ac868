//! Exact elements of `Q(ζ_M)` in canonical form modulo `Φ_M`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use smallvec::SmallVec;

use super::poly::{cyclotomic_int_coeffs, cyclotomic_polynomial, Poly};
use super::rational::Rational;

type Coeffs = SmallVec<[Rational; 4]>;

/// `Σ c_i ζ_M^i` with `0 ≤ i < deg Φ_M`.
///
/// Operands of different orders are promoted to `lcm(M₁, M₂)` through
/// `ζ_M = ζ_L^{L/M}` before combining.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Coeffs,
}

/// Reduce an arbitrary-length coefficient vector modulo `Φ_order`.
fn reduce(order: u32, mut c: Vec<Rational>) -> Coeffs {
    let phi = cyclotomic_int_coeffs(order);
    let deg = phi.len() - 1;
    for k in (deg..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let lead = std::mem::replace(&mut c[k], Rational::zero());
        for (i, p) in phi.iter().enumerate().take(deg) {
            if *p != 0 {
                let t = lead.mul(&Rational::from_integer(*p));
                c[k - deg + i] = c[k - deg + i].sub(&t);
            }
        }
    }
    c.resize(deg, Rational::zero());
    c.into_iter().collect()
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: smallvec::smallvec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: smallvec::smallvec![r],
        }
    }

    /// Build from coefficients of powers of `ζ_order` (any length).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: reduce(order, coeffs),
        }
    }

    pub fn root_of_unity(order: u32, k: i64) -> Self {
        assert!(order >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(order as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_coeffs(order, c)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            return Some(self.coeffs[0].clone());
        }
        None
    }

    /// Re-express in `Q(ζ_target)`; `target` must be a multiple of the order.
    pub fn promote(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot promote order {} to {}",
            self.order,
            target
        );
        let step = (target / self.order) as usize;
        // order 1 and 2 store their value in c0 (ζ_1 = 1, ζ_2 = -1 reduce away)
        let mut c = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i * step] = v.clone();
        }
        Self::from_coeffs(target, c)
    }

    fn common(&self, rhs: &Self) -> (Self, Self) {
        let l = self.order.lcm(&rhs.order);
        (self.promote(l), rhs.promote(l))
    }

    fn is_rational_order(&self) -> bool {
        self.order == 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.order == rhs.order {
            return Cyclotomic {
                order: self.order,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a.add(b))
                    .collect(),
            };
        }
        let (a, b) = self.common(rhs);
        a.add(&b)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(Rational::neg).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(r)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_rational_order() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational_order() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.order != rhs.order {
            let (a, b) = self.common(rhs);
            return a.mul(&b);
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Cyclotomic {
            order: self.order,
            coeffs: reduce(self.order, out),
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        let m = self.order as usize;
        let mut c = vec![Rational::zero(); m];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[(m - i) % m] = v.clone();
        }
        Self::from_coeffs(self.order, c)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_M`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.order <= 2 {
            return Some(Cyclotomic {
                order: self.order,
                coeffs: smallvec::smallvec![Rational::one().div(&self.coeffs[0])],
            });
        }
        let a = Poly::new(self.coeffs.to_vec());
        let (g, s, _) = a.gcd_ext(&cyclotomic_polynomial(self.order));
        debug_assert_eq!(g, Poly::one());
        Some(Self::from_coeffs(self.order, s.coeffs().to_vec()))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn to_c64(&self) -> Complex64 {
        if self.order <= 2 {
            return Complex64::new(self.coeffs[0].to_f64(), 0.0);
        }
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                Complex64::from_polar(c.to_f64(), 2.0 * std::f64::consts::PI * i as f64 / m)
            })
            .sum()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

/// `z<M>[c0,c1,...]`, or a bare rational for elements of `Q`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "z{}[", self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid cyclotomic literal `{0}`")]
pub struct ParseCyclotomicError(pub String);

impl FromStr for Cyclotomic {
    type Err = ParseCyclotomicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCyclotomicError(s.to_string());
        let s = s.trim();
        let Some(rest) = s.strip_prefix('z') else {
            return s.parse().map(Cyclotomic::from_rational).map_err(|_| err());
        };
        let (order, body) = rest.split_once('[').ok_or_else(err)?;
        let order: u32 = order.parse().map_err(|_| err())?;
        let body = body.strip_suffix(']').ok_or_else(err)?;
        let coeffs = body
            .split(',')
            .map(|c| c.parse::<Rational>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        if order == 0 || coeffs.len() != cyclotomic_int_coeffs(order).len() - 1 {
            return Err(err());
        }
        Ok(Cyclotomic::from_coeffs(order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::Coeff;
    use proptest::prelude::*;

    fn z(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, k)
    }

    #[test]
    fn small_roots() {
        assert_eq!(z(2, 1), Cyclotomic::from_integer(-1));
        assert_eq!(z(4, 2), Cyclotomic::from_integer(-1));
        // ζ₃ + ζ₃² = -1 (reduction of 1 + x + x² ≡ 0)
        assert_eq!(z(3, 1).add(&z(3, 2)), Cyclotomic::from_integer(-1));
        // 1 + ζ₂ = 0 needs reduction modulo Φ₂, not x² - 1
        assert!(Cyclotomic::one().add(&z(2, 1)).is_zero());
    }

    #[test]
    fn mixed_orders_promote() {
        // ζ₄² = ζ₂
        assert_eq!(z(4, 1).mul(&z(4, 1)), z(2, 1));
        // ζ₆ = -ζ₃²
        assert_eq!(z(6, 1), z(3, 2).neg());
        let s = z(4, 1).add(&z(6, 1));
        assert_eq!(s.order(), 12);
        assert!((s.to_c64() - (z(4, 1).to_c64() + z(6, 1).to_c64())).norm() < 1e-12);
    }

    #[test]
    fn inverse_and_conjugate() {
        let a = Cyclotomic::from_integer(2).add(&z(5, 1)).add(&z(5, 3));
        let ai = a.inv().unwrap();
        assert_eq!(a.mul(&ai), Cyclotomic::one());
        assert_eq!(z(7, 3).conj(), z(7, 4));
        // |1 + ζ₈|² is real
        let b = Cyclotomic::one().add(&z(8, 1));
        let n = b.mul(&b.conj());
        assert!(n.to_c64().im.abs() < 1e-12);
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn phi_vanishes_at_primitive_root() {
        for m in 1..=24u32 {
            let phi = cyclotomic_polynomial(m);
            let zeta = z(m, 1);
            let val = phi
                .coeffs()
                .iter()
                .rev()
                .fold(Cyclotomic::zero(), |acc, c| {
                    acc.mul(&zeta).add(&Cyclotomic::from_rational(c.clone()))
                });
            assert!(val.is_zero(), "Φ_{m}(ζ_{m}) ≠ 0");
        }
    }

    #[test]
    fn root_multiplication_table() {
        for m in 1..=24u32 {
            for k in 0..m as i64 {
                for l in 0..m as i64 {
                    assert_eq!(z(m, k).mul(&z(m, l)), z(m, (k + l) % m as i64));
                }
            }
            assert_eq!(z(m, 1).pow(m as u64), Cyclotomic::one());
        }
    }

    #[test]
    fn text_round_trip() {
        let a = z(12, 5).add(&Cyclotomic::from_ratio(1, 3));
        let s = a.to_string();
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), a);
        assert!("z4[1]".parse::<Cyclotomic>().is_err());
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        (1u32..=12, proptest::collection::vec(-5i64..=5, 1..6)).prop_map(|(m, cs)| {
            let coeffs = cs.into_iter().map(Rational::from_integer).collect();
            Cyclotomic::from_coeffs(m, coeffs)
        })
    }

    proptest! {
        #[test]
        fn float_embedding_is_homomorphism(a in arb_cyc(), b in arb_cyc()) {
            let eps = 1e-9;
            let prod = a.mul(&b).to_c64();
            let fprod = a.to_c64() * b.to_c64();
            prop_assert!((prod - fprod).norm() <= 10.0 * eps * (1.0 + fprod.norm()));
            let sum = a.add(&b).to_c64();
            prop_assert!((sum - (a.to_c64() + b.to_c64())).norm() <= 10.0 * eps * (1.0 + sum.norm()));
        }

        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            if let Some(ai) = a.inv() {
                prop_assert_eq!(a.mul(&ai), Cyclotomic::one());
            }
        }
    }
}
