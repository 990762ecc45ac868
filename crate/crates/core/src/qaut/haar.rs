//! Generator-level constants of the trace compatibility of `π`, and the
//! coproduct of `O(Aut⁺(B))` as a formal map.

use serde::Serialize;

use super::maps::pi_map;
use super::relations::GeneratorAssignment;
use super::symbols::{QGen, QautPresentation};
use super::QautError;
use crate::algebra::BlockSpec;
use crate::arith::{Field, Rational, SparseMat, Tol};

/// Which candidate value the substituted constant equals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HaarMatch {
    /// Both candidates coincide and the constant equals them.
    Both,
    RowSize,
    ColumnSize,
    Neither,
}

#[derive(Clone, Debug, Serialize)]
pub struct HaarPair {
    /// 1-based block labels.
    pub s: usize,
    pub r: usize,
    /// `c(s,r)`: the scalar `π(q^{(s,r)}_{(i,i),(k,k)})|_{u = 1/N}`. The
    /// comparison below is done in the backend's own arithmetic.
    pub constant: f64,
    /// `n_s/N`, the value suggested by invariance.
    pub n_s_over_n: f64,
    pub n_r_over_n: f64,
    pub matches: HaarMatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct HaarCertificate {
    pub partition: String,
    /// Off-diagonal generators (`i ≠ j` or `k ≠ l`) substitute to 0.
    pub off_diagonal_vanish: bool,
    /// Each diagonal generator of a block pair gives the same scalar.
    pub constant_per_pair: bool,
    pub pairs: Vec<HaarPair>,
    /// Whether `q ↦ δ_{ij} δ_{kl} c(s,r)` respects the scalar consequences
    /// of relations (4) and (5); recorded for both candidates.
    pub substituted_respects_relations: bool,
    pub invariance_respects_relations: bool,
    pub candidates_agree: bool,
}

fn scalar_of<F: Field>(m: &SparseMat<F>, g: &QGen, tol: Tol) -> Result<F, QautError> {
    let c = m.get(0, 0);
    if !m.approx_eq(&SparseMat::identity(m.rows()).scale(&c), tol) {
        return Err(QautError::NotScalar(g.to_string()));
    }
    Ok(c)
}

/// `Σ_s n_s c(s,r) = 1` for each `r` and `Σ_r n_r² c(s,r) = n_s` for each `s`.
fn respects<F: Field>(spec: &BlockSpec, c: impl Fn(usize, usize) -> F, tol: Tol) -> bool {
    let m = spec.m();
    let n = |t: usize| F::from_integer(spec.n(t) as i64);
    let four = (0..m).all(|r| {
        (0..m)
            .fold(F::zero(), |acc, s| acc.add(&n(s).mul(&c(s, r))))
            .approx_eq(&F::one(), tol)
    });
    let five = (0..m).all(|s| {
        (0..m)
            .fold(F::zero(), |acc, r| acc.add(&n(r).mul(&n(r)).mul(&c(s, r))))
            .approx_eq(&n(s), tol)
    });
    four && five
}

/// Substitutes `u ↦ 1/N` into every `π(q)` and records the scalars.
pub fn haar_compat_check<F: Field>(
    spec: &BlockSpec,
    tol: Tol,
) -> Result<HaarCertificate, QautError> {
    let pres = QautPresentation::new(spec);
    let pi = pi_map::<F>(spec);
    let big_n = spec.big_n() as i64;
    let h = F::from_rational(&Rational::new(1, big_n));
    let m = spec.m();
    let mut consts: Vec<Vec<Option<F>>> = vec![vec![None; m]; m];
    let mut off_diagonal_vanish = true;
    let mut constant_per_pair = true;
    for (g, img) in pres.gens().iter().zip(&pi) {
        let value = img.evaluate(1, |_| SparseMat::identity(1).scale(&h));
        let c = scalar_of(&value, g, tol)?;
        if g.i != g.j || g.k != g.l {
            off_diagonal_vanish &= c.near_zero(tol);
            continue;
        }
        match &consts[g.s][g.r] {
            Some(prev) => constant_per_pair &= prev.approx_eq(&c, tol),
            None => consts[g.s][g.r] = Some(c),
        }
    }
    let ratio = |t: usize| F::from_rational(&Rational::new(spec.n(t) as i64, big_n));
    let mut pairs = Vec::new();
    for (s, row) in consts.iter().enumerate() {
        for (r, c) in row.iter().enumerate() {
            let c = c.clone().expect("every block pair has diagonal generators");
            let (rs, rr) = (ratio(s), ratio(r));
            let matches = match (c.approx_eq(&rs, tol), c.approx_eq(&rr, tol)) {
                (true, true) => HaarMatch::Both,
                (true, false) => HaarMatch::RowSize,
                (false, true) => HaarMatch::ColumnSize,
                (false, false) => HaarMatch::Neither,
            };
            pairs.push(HaarPair {
                s: s + 1,
                r: r + 1,
                constant: c.to_c64().re,
                n_s_over_n: rs.to_c64().re,
                n_r_over_n: rr.to_c64().re,
                matches,
            });
        }
    }
    let substituted_respects_relations = respects(
        spec,
        |s, r| consts[s][r].clone().unwrap_or_else(F::zero),
        tol,
    );
    let invariance_respects_relations = respects(spec, |s, _| ratio(s), tol);
    let candidates_agree = pairs.iter().all(|p| p.matches == HaarMatch::Both);
    Ok(HaarCertificate {
        partition: spec.to_string(),
        off_diagonal_vanish,
        constant_per_pair,
        pairs,
        substituted_respects_relations,
        invariance_respects_relations,
        candidates_agree,
    })
}

/// `Δ(q^{(s,r)}_{(i,j),(k,l)}) = Σ_z Σ_{a,b} q^{(s,z)}_{(i,j),(a,b)} ⊗ q^{(z,r)}_{(a,b),(k,l)}`,
/// indexed like [`QautPresentation::gens`].
pub fn coproduct(pres: &QautPresentation) -> Vec<Vec<(QGen, QGen)>> {
    let spec = pres.spec();
    pres.gens()
        .iter()
        .map(|g| {
            let mut terms = Vec::new();
            for z in 0..spec.m() {
                for a in 0..spec.n(z) {
                    for b in 0..spec.n(z) {
                        terms.push((
                            QGen::new(g.s, z, g.i, g.j, a, b),
                            QGen::new(z, g.r, a, b, g.k, g.l),
                        ));
                    }
                }
            }
            terms
        })
        .collect()
}

/// `(ev₁ ⊗ ev₂)∘Δ` for two scalar assignments.
pub fn evaluate_coproduct<F: Field>(
    pres: &QautPresentation,
    delta: &[Vec<(QGen, QGen)>],
    left: &GeneratorAssignment<F>,
    right: &GeneratorAssignment<F>,
) -> Result<Vec<F>, QautError> {
    if left.size() != 1 || right.size() != 1 {
        return Err(QautError::SizeMismatch);
    }
    let at = |asg: &GeneratorAssignment<F>, g: &QGen| {
        asg.get(pres.index(g).expect("generator in range"))
            .get(0, 0)
            .clone()
    };
    Ok(delta
        .iter()
        .map(|terms| {
            terms.iter().fold(F::zero(), |acc, (x, y)| {
                acc.add(&at(left, x).mul(&at(right, y)))
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Cyclotomic, Mat};
    use crate::qaut::classical::{
        automorphism_battery, classical_assignment_aut, counit_assignment,
    };

    fn spec(s: &str) -> BlockSpec {
        s.parse().unwrap()
    }

    #[test]
    fn commutative_case_candidates_coincide() {
        let c = haar_compat_check::<Cyclotomic>(&spec("1,1,1"), Tol::default()).unwrap();
        assert!(c.candidates_agree && c.off_diagonal_vanish);
        assert!(c.pairs.iter().all(|p| p.constant == 1.0 / 3.0));
    }

    #[test]
    fn qubit_single_constant() {
        let c = haar_compat_check::<Cyclotomic>(&spec("2"), Tol::default()).unwrap();
        assert_eq!(c.pairs.len(), 1);
        assert_eq!(c.pairs[0].constant, 0.5);
        assert!(c.constant_per_pair && c.candidates_agree);
    }

    #[test]
    fn mixed_pair_reports_column_size() {
        let c = haar_compat_check::<Cyclotomic>(&spec("2,1"), Tol::default()).unwrap();
        let p = c.pairs.iter().find(|p| (p.s, p.r) == (1, 2)).unwrap();
        // Fourier summation over x, v, y, w: n_s⁻¹ · n_s · n_r / N
        assert_eq!(p.constant, 0.2);
        assert_eq!((p.n_s_over_n, p.n_r_over_n), (0.4, 0.2));
        assert_eq!(p.matches, HaarMatch::ColumnSize);
        assert!(!c.candidates_agree);
        assert!(c.invariance_respects_relations);
        assert!(!c.substituted_respects_relations);
    }

    #[test]
    fn coproduct_is_composition() {
        let s = spec("2,2");
        let tol = Tol::default();
        let pres = QautPresentation::new(&s);
        let delta = coproduct(&pres);
        let bat = automorphism_battery::<Cyclotomic>(&s, tol);
        let pick: Vec<&Mat<Cyclotomic>> = bat.iter().map(|(_, m)| m).take(6).collect();
        for t1 in &pick {
            for t2 in &pick {
                let a1 = classical_assignment_aut(&pres, t1, tol).unwrap();
                let a2 = classical_assignment_aut(&pres, t2, tol).unwrap();
                let got = evaluate_coproduct(&pres, &delta, &a1, &a2).unwrap();
                let want = classical_assignment_aut(&pres, &t2.mul(t1), tol).unwrap();
                let want: Vec<Cyclotomic> =
                    want.mats().iter().map(|m| m.get(0, 0).clone()).collect();
                assert_eq!(got, want);
            }
        }
        let eps = counit_assignment::<Cyclotomic>(&pres);
        let a = classical_assignment_aut(&pres, pick[1], tol).unwrap();
        let got = evaluate_coproduct(&pres, &delta, &eps, &a).unwrap();
        let want: Vec<Cyclotomic> = a.mats().iter().map(|m| m.get(0, 0).clone()).collect();
        assert_eq!(got, want);
    }
}
