//! Finite abelian groups `Z_{n_1} × ⋯ × Z_{n_k}` and exact unit phases.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::arith::Field;

/// `exp(2πi · num/den)` with `0 ≤ num < den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Phase {
    num: i64,
    den: u32,
}

impl Phase {
    pub fn new(num: i64, den: u32) -> Self {
        assert!(den >= 1, "phase denominator must be positive");
        let d = den as i64;
        let r = num.rem_euclid(d);
        let g = r.gcd(&d).max(1);
        Phase {
            num: r / g,
            den: (d / g) as u32,
        }
    }

    pub fn one() -> Self {
        Phase { num: 0, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    /// Order of the phase as a root of unity.
    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn mul(&self, rhs: &Phase) -> Phase {
        let l = (self.den as i64).lcm(&(rhs.den as i64));
        Phase::new(
            self.num * (l / self.den as i64) + rhs.num * (l / rhs.den as i64),
            l as u32,
        )
    }

    pub fn inv(&self) -> Phase {
        Phase::new(-self.num, self.den)
    }

    pub fn div(&self, rhs: &Phase) -> Phase {
        self.mul(&rhs.inv())
    }

    /// The principal square root: `ζ_den^num ↦ ζ_{2 den}^num`.
    pub fn principal_sqrt(&self) -> Phase {
        Phase::new(self.num, 2 * self.den)
    }

    pub fn to_field<F: Field>(&self) -> F {
        F::root_of_unity(self.den, self.num)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            f.write_str("1")
        } else {
            write!(f, "ζ{}^{}", self.den, self.num)
        }
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Z_{n_1} × ⋯ × Z_{n_k}`; elements are indexed in mixed radix with the
/// first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    factors: Vec<u32>,
}

impl FinAbGroup {
    pub fn new(factors: Vec<u32>) -> Self {
        assert!(
            factors.iter().all(|&n| n >= 1),
            "cyclic factors must be positive"
        );
        FinAbGroup { factors }
    }

    /// `Z_n × Z_n`.
    pub fn square(n: u32) -> Self {
        FinAbGroup::new(vec![n, n])
    }

    pub fn product(parts: &[FinAbGroup]) -> Self {
        FinAbGroup::new(
            parts
                .iter()
                .flat_map(|g| g.factors.iter().copied())
                .collect(),
        )
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).product()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn coords(&self, mut idx: usize) -> Vec<u32> {
        let mut c = vec![0; self.factors.len()];
        for (k, &n) in self.factors.iter().enumerate().rev() {
            c[k] = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        c
    }

    /// Index of the element with the given coordinates, reduced mod each
    /// factor.
    pub fn index(&self, coords: &[i64]) -> usize {
        assert_eq!(coords.len(), self.factors.len());
        coords.iter().zip(&self.factors).fold(0, |acc, (&c, &n)| {
            acc * n as usize + c.rem_euclid(n as i64) as usize
        })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let s: Vec<i64> = ca
            .iter()
            .zip(&cb)
            .map(|(x, y)| *x as i64 + *y as i64)
            .collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<i64> = self.coords(a).iter().map(|x| -(*x as i64)).collect();
        self.index(&c)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `⟨χ, g⟩ = ∏_i ζ_{n_i}^{χ_i g_i}`; identifies the group with its dual.
    pub fn pairing(&self, chi: usize, g: usize) -> Phase {
        self.coords(chi)
            .iter()
            .zip(self.coords(g))
            .zip(&self.factors)
            .fold(Phase::one(), |acc, ((a, b), &n)| {
                acc.mul(&Phase::new(*a as i64 * b as i64, n))
            })
    }

    /// Embed an element of factor group `parts[t]` into the product.
    pub fn embed(parts: &[FinAbGroup], t: usize, elem: usize) -> usize {
        let prod = FinAbGroup::product(parts);
        let mut coords = Vec::with_capacity(prod.factors.len());
        for (q, g) in parts.iter().enumerate() {
            if q == t {
                coords.extend(g.coords(elem).into_iter().map(i64::from));
            } else {
                coords.extend(std::iter::repeat_n(0, g.factors.len()));
            }
        }
        prod.index(&coords)
    }

    pub fn label(&self, idx: usize) -> String {
        let c: Vec<String> = self.coords(idx).iter().map(u32::to_string).collect();
        format!("[{}]", c.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phase_arithmetic() {
        let a = Phase::new(1, 4);
        assert_eq!(a.mul(&a), Phase::new(1, 2));
        assert_eq!(a.mul(&a.inv()), Phase::one());
        assert_eq!(Phase::new(3, 6), Phase::new(1, 2));
        assert_eq!(Phase::new(1, 2).principal_sqrt(), Phase::new(1, 4));
        assert_eq!(Phase::new(-1, 3).to_string(), "ζ3^2");
    }

    proptest! {
        #[test]
        fn pairing_is_bimultiplicative(a in 0usize..36, b in 0usize..36, c in 0usize..36) {
            let g = FinAbGroup::new(vec![2, 3, 6]);
            prop_assert_eq!(g.pairing(g.add(a, b), c), g.pairing(a, c).mul(&g.pairing(b, c)));
            prop_assert_eq!(g.pairing(a, g.add(b, c)), g.pairing(a, b).mul(&g.pairing(a, c)));
        }
    }

    #[test]
    fn pairing_is_nondegenerate() {
        let g = FinAbGroup::new(vec![2, 4]);
        for chi in 1..g.order() {
            assert!((0..g.order()).any(|x| !g.pairing(chi, x).is_one()));
        }
        assert_eq!(g.index(&[1, -1]), g.index(&[1, 3]));
        assert_eq!(g.add(g.neg(5), 5), 0);
    }
}
