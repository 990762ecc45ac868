//! Scalar backends. `Cyclotomic` is the exact backend and `Complex64` the
//! floating one; every construction in the crate is generic over [`Field`].

use std::fmt::Debug;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclotomic;
use super::rational::Rational;

/// Ring operations shared by polynomial coefficients and matrix entries.
pub trait Coeff: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` exactly when the value is (literally) zero.
    fn inv(&self) -> Option<Self>;
    /// Literal zero: exact for the exact backend, `== 0.0` for floats.
    fn is_zero(&self) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Hash)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

/// Tolerance of the ambient backend. Ignored by exact scalars.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tol(pub f64);

impl Default for Tol {
    fn default() -> Self {
        Tol(1e-9)
    }
}

pub trait Field: Coeff {
    const BACKEND: Backend;

    /// `ζ_M^k` with `ζ_M = exp(2πi/M)`.
    fn root_of_unity(order: u32, k: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn conj(&self) -> Self;
    fn to_c64(&self) -> Complex64;

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn near_zero(&self, tol: Tol) -> bool {
        match Self::BACKEND {
            Backend::Exact => self.is_zero(),
            Backend::Float => self.magnitude() <= tol.0,
        }
    }

    fn approx_eq(&self, rhs: &Self, tol: Tol) -> bool {
        self.sub(rhs).near_zero(tol)
    }

    /// Size of a discrepancy for residual reports; zero means "exactly equal"
    /// on the exact backend.
    fn residual(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.magnitude().max(f64::MIN_POSITIVE)
        }
    }

    fn to_text(&self) -> String;
    fn parse_text(s: &str) -> Option<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(num, den)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational::one().div(self))
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_integer(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (*self != Complex64::new(0.0, 0.0)).then(|| self.inv())
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Field for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn root_of_unity(order: u32, k: i64) -> Self {
        let m = order as i64;
        let e = k.rem_euclid(m);
        // exact values on the axes keep sparsity intact
        if e == 0 {
            return Complex64::new(1.0, 0.0);
        }
        if 2 * e == m {
            return Complex64::new(-1.0, 0.0);
        }
        if 4 * e == m {
            return Complex64::new(0.0, 1.0);
        }
        if 4 * e == 3 * m {
            return Complex64::new(0.0, -1.0);
        }
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / m as f64)
    }

    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64(), 0.0)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn to_text(&self) -> String {
        format!("({:e},{:e})", self.re, self.im)
    }

    fn parse_text(s: &str) -> Option<Self> {
        let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
        let (re, im) = inner.split_once(',')?;
        Some(Complex64::new(
            re.trim().parse().ok()?,
            im.trim().parse().ok()?,
        ))
    }
}

impl Coeff for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Cyclotomic::from_rational(Rational::new(num, den))
    }
    fn add(&self, rhs: &Self) -> Self {
        Cyclotomic::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Cyclotomic::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Cyclotomic::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl Field for Cyclotomic {
    const BACKEND: Backend = Backend::Exact;

    fn root_of_unity(order: u32, k: i64) -> Self {
        Cyclotomic::root_of_unity(order, k)
    }

    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::from_rational(r.clone())
    }

    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }

    fn to_c64(&self) -> Complex64 {
        Cyclotomic::to_c64(self)
    }

    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}
