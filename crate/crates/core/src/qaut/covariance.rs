//! Covariance of `π` and `ρ` with the `α` and `β` actions, implemented by
//! conjugation with the `z` images, and generation of `M_d ⊗ M_d` by them.

use serde::Serialize;

use super::autos::{alpha, beta, BetaConvention, Substitution};
use super::formal::FormalTensor;
use super::maps::{pi_map, rho_map, z_image};
use super::symbols::{QautPresentation, SnPresentation, Symbol};
use super::QautError;
use crate::algebra::BlockSpec;
use crate::arith::{Field, Mat, SparseMat, Tol};
use crate::pauli::BlockPauli;
use crate::CheckReport;

#[derive(Clone, Debug, Serialize)]
pub struct CovarianceCertificate {
    pub partition: String,
    /// `π∘α_{1,t} = Ad π(z_{1,t}) ∘ π`, and the `α₃` analogue.
    pub a: CheckReport,
    /// `α₂`, `α₄` with the shift images `z₂`, `z₄`.
    pub b: CheckReport,
    /// Phase table of the extended actions on the `z`'s, and their orders.
    pub c: CheckReport,
    /// `ρ∘β_{γ,t} = Ad ρ(z_{γ,t}) ∘ ρ` with the derived `β` table.
    pub d: CheckReport,
    /// The same with the `β` table as printed.
    pub d_displayed: CheckReport,
    /// Rank of the span of all `z`-word images.
    pub rank: usize,
    pub expected_rank: usize,
    /// (a)–(e) with the derived `β` table.
    pub passed: bool,
}

fn covariance_of<F: Field>(
    images: &[FormalTensor<F>],
    index: impl Fn(&Symbol) -> usize,
    symbols: &[Symbol],
    sub: &Substitution,
    z: &SparseMat<F>,
    tol: Tol,
    rep: &mut CheckReport,
) {
    let zt = z.adjoint();
    for x in symbols {
        let (c, y) = sub.apply::<F>(x);
        let lhs = images[index(&y)].scale(&c);
        let rhs = images[index(x)].map_coefficients(|a| z.mul(a).mul(&zt));
        let (ok, res) = lhs.difference(&rhs, tol);
        rep.record(ok, res, || format!("{} on {x}", sub.name()));
    }
}

/// `Ad z_{γ,τ}(z_{γ′,t})` is `ω_{n_t}^{∓1} z_{γ′,t}` for `(γ,γ′) = (2,1), (4,3)`
/// (sign `−`) or `(1,2), (3,4)` (sign `+`) when `τ = t`, and `z_{γ′,t}` otherwise.
fn z_table_phase(gamma: usize, tau: usize, gamma2: usize, t: usize) -> i64 {
    if tau != t {
        return 0;
    }
    match (gamma, gamma2) {
        (2, 1) | (4, 3) => -1,
        (1, 2) | (3, 4) => 1,
        _ => 0,
    }
}

fn check_z_table<F: Field>(spec: &BlockSpec, bp: &BlockPauli<F>, tol: Tol) -> CheckReport {
    let mut rep = CheckReport::new();
    let d2 = spec.d() * spec.d();
    for t in 0..spec.m() {
        let n = spec.n(t);
        for g in 1..=4 {
            let z = z_image(bp, g, t);
            let pow = (0..n).fold(SparseMat::identity(d2), |acc, _| acc.mul(&z));
            let res = pow.sub(&SparseMat::identity(d2));
            rep.record(res.is_zero(tol), res.max_residual(), || {
                format!("z{g},{} has order {n}", t + 1)
            });
            for tau in 0..spec.m() {
                for g0 in 1..=4 {
                    let w = z_image(bp, g0, tau);
                    let lhs = w.mul(&z).mul(&w.adjoint());
                    let phase = F::root_of_unity(n as u32, z_table_phase(g0, tau, g, t));
                    let res = lhs.sub(&z.scale(&phase));
                    rep.record(res.is_zero(tol), res.max_residual(), || {
                        format!("Ad z{g0},{} on z{g},{}", tau + 1, t + 1)
                    });
                }
            }
        }
    }
    rep
}

/// Rank of `{Π_t z₁^{a_t} z₂^{b_t} z₃^{c_t} z₄^{e_t}}` through its Gram matrix
/// `(Tr(A*B))`, which has the same rank as the family.
fn z_word_rank<F: Field>(spec: &BlockSpec, bp: &BlockPauli<F>, tol: Tol) -> usize {
    let d2 = spec.d() * spec.d();
    let mut words = vec![SparseMat::<F>::identity(d2)];
    for t in 0..spec.m() {
        for g in 1..=4 {
            let z = z_image(bp, g, t);
            let powers: Vec<SparseMat<F>> = (0..spec.n(t))
                .scan(SparseMat::identity(d2), |acc, _| {
                    let cur = acc.clone();
                    *acc = acc.mul(&z);
                    Some(cur)
                })
                .collect();
            words = words
                .iter()
                .flat_map(|w| powers.iter().map(move |p| w.mul(p)))
                .collect();
        }
    }
    let adj: Vec<SparseMat<F>> = words.iter().map(SparseMat::adjoint).collect();
    let gram = Mat::from_fn(words.len(), words.len(), |i, j| {
        adj[i].mul(&words[j]).trace()
    });
    gram.rank(tol)
}

pub fn covariance_check<F: Field>(
    spec: &BlockSpec,
    tol: Tol,
) -> Result<CovarianceCertificate, QautError> {
    let bp = BlockPauli::<F>::new(spec, tol)?;
    let pres = QautPresentation::new(spec);
    let sn = SnPresentation::new(spec);
    let pi = pi_map::<F>(spec);
    let rho = rho_map::<F>(spec);
    let qsyms: Vec<Symbol> = pres.gens().iter().map(|g| Symbol::Q(*g)).collect();
    let usyms: Vec<Symbol> = (0..sn.len()).map(|i| Symbol::U(sn.gen(i))).collect();
    let qidx = |x: &Symbol| match x {
        Symbol::Q(g) => pres.index(g).expect("generator in range"),
        Symbol::U(_) => unreachable!("α acts on q symbols"),
    };
    let uidx = |x: &Symbol| match x {
        Symbol::U(g) => sn.index(g),
        Symbol::Q(_) => unreachable!("β acts on u symbols"),
    };

    let (mut a, mut b) = (CheckReport::new(), CheckReport::new());
    let (mut dd, mut dp) = (CheckReport::new(), CheckReport::new());
    for t in 0..spec.m() {
        for g in 1..=4 {
            let z = z_image(&bp, g, t);
            let rep = if g % 2 == 1 { &mut a } else { &mut b };
            covariance_of(&pi, qidx, &qsyms, &alpha(spec, g, t)?, &z, tol, rep);
            let derived = beta(spec, g, t, BetaConvention::Derived)?;
            covariance_of(&rho, uidx, &usyms, &derived, &z, tol, &mut dd);
            let displayed = beta(spec, g, t, BetaConvention::Displayed)?;
            covariance_of(&rho, uidx, &usyms, &displayed, &z, tol, &mut dp);
        }
    }
    let c = check_z_table(spec, &bp, tol);
    let rank = z_word_rank(spec, &bp, tol);
    let expected_rank = spec.d().pow(4);
    let passed = a.passed && b.passed && c.passed && dd.passed && rank == expected_rank;
    Ok(CovarianceCertificate {
        partition: spec.to_string(),
        a,
        b,
        c,
        d: dd,
        d_displayed: dp,
        rank,
        expected_rank,
        passed,
    })
}
