//! Table-valued 2-cocycles `σ: K × K → T` with exact phase values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::{FinAbGroup, Phase};
use super::CocycleError;

/// Largest group order for which the cocycle identity is checked on every
/// triple; above it a fixed seeded sample is used.
pub const EXHAUSTIVE_ORDER: usize = 36;
const SAMPLED_TRIPLES: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCocycle {
    group: FinAbGroup,
    /// `table[g * |K| + h] = σ(g, h)`.
    table: Vec<Phase>,
}

impl GroupCocycle {
    /// Builds and verifies the cocycle identity and normalization.
    pub fn new(group: FinAbGroup, table: Vec<Phase>) -> Result<Self, CocycleError> {
        let c = GroupCocycle { group, table };
        c.verify()?;
        Ok(c)
    }

    pub fn from_fn(
        group: FinAbGroup,
        f: impl Fn(usize, usize) -> Phase,
    ) -> Result<Self, CocycleError> {
        let n = group.order();
        let table = (0..n * n).map(|x| f(x / n, x % n)).collect();
        Self::new(group, table)
    }

    pub fn trivial(group: FinAbGroup) -> Self {
        let n = group.order();
        GroupCocycle {
            group,
            table: vec![Phase::one(); n * n],
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn value(&self, g: usize, h: usize) -> Phase {
        self.table[g * self.group.order() + h]
    }

    pub fn table(&self) -> &[Phase] {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(Phase::is_one)
    }

    fn identity_holds(&self, g: usize, h: usize, k: usize) -> bool {
        let gr = &self.group;
        let lhs = self.value(g, h).mul(&self.value(gr.add(g, h), k));
        let rhs = self.value(h, k).mul(&self.value(g, gr.add(h, k)));
        lhs == rhs
    }

    /// Number of triples checked by [`GroupCocycle::verify`].
    pub fn triples_checked(&self) -> usize {
        let n = self.group.order();
        if n <= EXHAUSTIVE_ORDER {
            n * n * n
        } else {
            SAMPLED_TRIPLES
        }
    }

    pub fn verify(&self) -> Result<(), CocycleError> {
        let n = self.group.order();
        if self.table.len() != n * n {
            return Err(CocycleError::TableSize {
                expected: n * n,
                got: self.table.len(),
            });
        }
        for g in 0..n {
            if !self.value(0, g).is_one() || !self.value(g, 0).is_one() {
                return Err(CocycleError::NotNormalized(self.group.label(g)));
            }
        }
        let fail = |g, h, k| {
            CocycleError::NotACocycle(format!(
                "{} {} {}",
                self.group.label(g),
                self.group.label(h),
                self.group.label(k)
            ))
        };
        if n <= EXHAUSTIVE_ORDER {
            for g in 0..n {
                for h in 0..n {
                    for k in 0..n {
                        if !self.identity_holds(g, h, k) {
                            return Err(fail(g, h, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (g, h, k) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !self.identity_holds(g, h, k) {
                    return Err(fail(g, h, k));
                }
            }
        }
        Ok(())
    }

    /// `σ⁻¹(g, h) = σ(g, h)⁻¹`.
    pub fn pointwise_inverse(&self) -> Self {
        GroupCocycle {
            group: self.group.clone(),
            table: self.table.iter().map(Phase::inv).collect(),
        }
    }

    /// `∂ψ(g, h) = ψ(g) ψ(h) / ψ(gh)`.
    pub fn coboundary(group: &FinAbGroup, psi: &[Phase]) -> Vec<Phase> {
        let n = group.order();
        assert_eq!(psi.len(), n);
        (0..n * n)
            .map(|x| {
                let (g, h) = (x / n, x % n);
                psi[g].mul(&psi[h]).div(&psi[group.add(g, h)])
            })
            .collect()
    }

    /// Pointwise product with `∂ψ`.
    pub fn times_coboundary(&self, psi: &[Phase]) -> Result<Self, CocycleError> {
        let d = Self::coboundary(&self.group, psi);
        let table = self.table.iter().zip(&d).map(|(a, b)| a.mul(b)).collect();
        Self::new(self.group.clone(), table)
    }

    /// Whether `other = self · ∂ψ` holds exactly.
    pub fn cohomologous_via(&self, other: &GroupCocycle, psi: &[Phase]) -> bool {
        if self.group != other.group {
            return false;
        }
        let d = Self::coboundary(&self.group, psi);
        self.table
            .iter()
            .zip(&d)
            .zip(&other.table)
            .all(|((a, b), c)| a.mul(b) == *c)
    }

    pub fn inverse_pairing_is_trivial(&self) -> bool {
        (0..self.group.order()).all(|h| self.value(h, self.group.neg(h)).is_one())
    }
}

/// `ω′([j₁,j₂],[k₁,k₂]) = ζ_n^{j₁ k₂}` on `Z_n × Z_n`.
pub fn base_cocycle(n: u32) -> GroupCocycle {
    let group = FinAbGroup::square(n);
    let g = group.clone();
    GroupCocycle::from_fn(group, |a, b| {
        let (ca, cb) = (g.coords(a), g.coords(b));
        Phase::new(ca[0] as i64 * cb[1] as i64, n)
    })
    .expect("the bicharacter j₁k₂ is a normalized cocycle")
}

/// Result of [`normalize_inverse_pairing`].
#[derive(Clone, Debug)]
pub struct Normalized {
    pub cocycle: GroupCocycle,
    /// `ψ(h)` with `ψ(h)⁻² = σ′(h, h⁻¹)`, indexed by group element.
    pub psi: Vec<Phase>,
}

/// `ω = σ′ ∂ψ` with `ψ(h) = σ′(h,h⁻¹)^{-1/2}`, so that `ω(h, h⁻¹) = 1`.
///
/// For `σ′(h,h⁻¹) = ζ_M^e` with `0 ≤ e < M` the root is `ζ_{2M}^{-e}`. Since
/// `σ′(h,h⁻¹) = σ′(h⁻¹,h)` for a normalized cocycle, `h` and `h⁻¹` get the
/// same root, which is what makes `ω(h,h⁻¹)` trivial.
pub fn normalize_inverse_pairing(sigma: &GroupCocycle) -> Normalized {
    let g = sigma.group();
    let psi: Vec<Phase> = (0..g.order())
        .map(|h| {
            let p = sigma.value(h, g.neg(h));
            Phase::new(-p.num(), 2 * p.den())
        })
        .collect();
    let cocycle = sigma
        .times_coboundary(&psi)
        .expect("a cocycle times a coboundary is a cocycle");
    Normalized { cocycle, psi }
}

/// `σ₀((g_t), (h_t)) = ∏_t σ_t(g_t, h_t)` on `∏_t K_t`.
pub fn product_cocycle(parts: &[GroupCocycle]) -> Result<GroupCocycle, CocycleError> {
    let groups: Vec<FinAbGroup> = parts.iter().map(|p| p.group().clone()).collect();
    let prod = FinAbGroup::product(&groups);
    let split = |x: usize| -> Vec<usize> {
        let mut out = vec![0; groups.len()];
        let mut rem = x;
        for (t, g) in groups.iter().enumerate().rev() {
            out[t] = rem % g.order();
            rem /= g.order();
        }
        out
    };
    GroupCocycle::from_fn(prod, |a, b| {
        let (sa, sb) = (split(a), split(b));
        parts
            .iter()
            .enumerate()
            .fold(Phase::one(), |acc, (t, p)| acc.mul(&p.value(sa[t], sb[t])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cocycle_values() {
        let w = base_cocycle(2);
        let g = w.group().clone();
        assert_eq!(
            w.value(g.index(&[1, 0]), g.index(&[0, 1])),
            Phase::new(1, 2)
        );
        assert!(w.value(g.index(&[0, 1]), g.index(&[1, 0])).is_one());
        let w3 = base_cocycle(3);
        let g3 = w3.group().clone();
        assert_eq!(
            w3.value(g3.index(&[1, 0]), g3.index(&[0, 1])),
            Phase::new(1, 3)
        );
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let g = FinAbGroup::new(vec![2]);
        let bad = vec![Phase::one(), Phase::one(), Phase::one(), Phase::new(1, 4)];
        assert!(
            GroupCocycle::new(g.clone(), bad).is_ok(),
            "any value at (1,1) is a Z₂ cocycle"
        );
        let g4 = FinAbGroup::new(vec![3]);
        let mut t = vec![Phase::one(); 9];
        t[4] = Phase::new(1, 2);
        assert!(matches!(
            GroupCocycle::new(g4, t),
            Err(CocycleError::NotACocycle(_))
        ));
        let mut u = vec![Phase::one(); 4];
        u[1] = Phase::new(1, 2);
        assert!(matches!(
            GroupCocycle::new(g, u),
            Err(CocycleError::NotNormalized(_))
        ));
    }

    #[test]
    fn normalization_kills_inverse_pairing() {
        for n in 1..=5 {
            let s = base_cocycle(n);
            let Normalized { cocycle, psi } = normalize_inverse_pairing(&s);
            assert!(cocycle.inverse_pairing_is_trivial(), "n = {n}");
            assert!(s.cohomologous_via(&cocycle, &psi));
            cocycle.verify().unwrap();
            for (h, p) in psi.iter().enumerate() {
                let g = s.group();
                assert_eq!(p.mul(p).inv(), s.value(h, g.neg(h)));
                assert!(p.den() <= 2 * n);
            }
        }
    }

    #[test]
    fn trivial_cocycle_is_fixed() {
        let t = GroupCocycle::trivial(FinAbGroup::square(3));
        let n = normalize_inverse_pairing(&t);
        assert_eq!(n.cocycle, t);
        assert!(n.psi.iter().all(Phase::is_one));
    }

    #[test]
    fn products_of_normalized_parts() {
        let w2 = normalize_inverse_pairing(&base_cocycle(2)).cocycle;
        let w1 = normalize_inverse_pairing(&base_cocycle(1)).cocycle;
        let p = product_cocycle(&[w2.clone(), w1]).unwrap();
        assert_eq!(p.group().order(), 4);
        assert!(p.table().iter().all(|v| 4 % v.den() == 0));
        assert!(p.inverse_pairing_is_trivial());
        assert_eq!(product_cocycle(std::slice::from_ref(&w2)).unwrap(), w2);
        let pp = product_cocycle(&[w2.clone(), w2]).unwrap();
        assert_eq!(pp.group().order(), 16);
        assert_eq!(pp.triples_checked(), 4096);
        assert!(pp.inverse_pairing_is_trivial());
    }

    #[test]
    fn large_groups_are_sampled() {
        let w = product_cocycle(&[base_cocycle(3), base_cocycle(2)]).unwrap();
        assert_eq!(w.group().order(), 36);
        assert_eq!(w.triples_checked(), 36 * 36 * 36);
        let big = base_cocycle(7);
        assert_eq!(big.triples_checked(), SAMPLED_TRIPLES);
    }
}
