//! The homomorphisms `π: q ↦ M_d ⊗ M_d ⊗ O(S_N⁺)` and
//! `ρ: u ↦ M_d ⊗ M_d ⊗ O(Aut⁺(B))`, and the images of the crossed-product
//! unitaries `z_{γ,t}`.

use super::formal::FormalTensor;
use super::relations::GeneratorAssignment;
use super::symbols::{Point, QGen, QautPresentation, SnPresentation, Symbol, UGen};
use super::QautError;
use crate::algebra::BlockSpec;
use crate::arith::{Field, Mat, Rational, SparseMat, Tol};
use crate::pauli::{paren, BlockPauli};

/// `E^{(r)}_{ab}` in `M_d`, indices mod `n_r`.
pub struct ParenUnits<F> {
    spec: BlockSpec,
    units: Vec<Vec<SparseMat<F>>>,
}

impl<F: Field> ParenUnits<F> {
    pub fn new(spec: &BlockSpec) -> Self {
        let units = spec
            .sizes()
            .iter()
            .enumerate()
            .map(|(r, &n)| {
                (0..n * n)
                    .map(|ab| {
                        let mut e = Mat::zeros(n, n);
                        e.set(ab / n, ab % n, F::one());
                        paren(spec, r, &e).expect("block in range")
                    })
                    .collect()
            })
            .collect();
        ParenUnits {
            spec: spec.clone(),
            units,
        }
    }

    pub fn get(&self, r: usize, a: i64, b: i64) -> &SparseMat<F> {
        let n = self.spec.n(r) as i64;
        &self.units[r][(a.rem_euclid(n) * n + b.rem_euclid(n)) as usize]
    }
}

/// `π(q^{(s,r)}_{(i,j),(k,l)}) = n_s⁻¹ Σ_{x,y,v,w} ω_{n_s}^{−x(i−j)} ω_{n_r}^{−v(k−l)}
/// E^{(s)}_{i−y,j−y} ⊗ E^{(r)}_{k−w,l−w} ⊗ u_{(s,x,y),(r,v,w)}`, indexed like
/// [`QautPresentation::gens`].
pub fn pi_map<F: Field>(spec: &BlockSpec) -> Vec<FormalTensor<F>> {
    let pres = QautPresentation::new(spec);
    let e = ParenUnits::<F>::new(spec);
    let d2 = spec.d() * spec.d();
    pres.gens()
        .iter()
        .map(|g| {
            let (ns, nr) = (spec.n(g.s), spec.n(g.r));
            let mut t = FormalTensor::zero(d2);
            let norm = F::from_rational(&Rational::new(1, ns as i64));
            let (di, dk) = (g.i as i64 - g.j as i64, g.k as i64 - g.l as i64);
            for x in 0..ns as i64 {
                for v in 0..nr as i64 {
                    let phase = F::root_of_unity(ns as u32, -x * di)
                        .mul(&F::root_of_unity(nr as u32, -v * dk))
                        .mul(&norm);
                    for y in 0..ns as i64 {
                        let left = e.get(g.s, g.i as i64 - y, g.j as i64 - y);
                        for w in 0..nr as i64 {
                            let right = e.get(g.r, g.k as i64 - w, g.l as i64 - w);
                            let u = UGen {
                                p: Point {
                                    s: g.s,
                                    a: x as usize,
                                    b: y as usize,
                                },
                                q: Point {
                                    s: g.r,
                                    a: v as usize,
                                    b: w as usize,
                                },
                            };
                            t.add_term(vec![Symbol::U(u)], &left.kron(right).scale(&phase));
                        }
                    }
                }
            }
            t
        })
        .collect()
}

/// `ρ(u_{(s,x,y),(r,v,w)}) = n_r⁻¹ Σ_{i,j,k,l} ω_{n_s}^{x(i−j)} ω_{n_r}^{v(k−l)}
/// E^{(s)}_{i−y,j−y} ⊗ E^{(r)}_{k−w,l−w} ⊗ q^{(s,r)}_{(i,j),(k,l)}`, indexed
/// like [`SnPresentation::gen`].
pub fn rho_map<F: Field>(spec: &BlockSpec) -> Vec<FormalTensor<F>> {
    let sn = SnPresentation::new(spec);
    let e = ParenUnits::<F>::new(spec);
    let d2 = spec.d() * spec.d();
    (0..sn.len())
        .map(|idx| {
            let UGen { p, q } = sn.gen(idx);
            let (s, r) = (p.s, q.s);
            let (ns, nr) = (spec.n(s), spec.n(r));
            let (x, y, v, w) = (p.a as i64, p.b as i64, q.a as i64, q.b as i64);
            let norm = F::from_rational(&Rational::new(1, nr as i64));
            let mut t = FormalTensor::zero(d2);
            for i in 0..ns {
                for j in 0..ns {
                    let left = e.get(s, i as i64 - y, j as i64 - y);
                    let pl = F::root_of_unity(ns as u32, x * (i as i64 - j as i64));
                    for k in 0..nr {
                        for l in 0..nr {
                            let right = e.get(r, k as i64 - w, l as i64 - w);
                            let c = pl
                                .mul(&F::root_of_unity(nr as u32, v * (k as i64 - l as i64)))
                                .mul(&norm);
                            let gen = Symbol::Q(QGen::new(s, r, i, j, k, l));
                            t.add_term(vec![gen], &left.kron(right).scale(&c));
                        }
                    }
                }
            }
            t
        })
        .collect()
}

/// `Q^{(s,r)} = Σ E^{(s)}_{ij} ⊗ E^{(r)}_{kl} ⊗ q^{(s,r)}_{(i,j),(k,l)}`.
pub fn big_q<F: Field>(spec: &BlockSpec, s: usize, r: usize) -> FormalTensor<F> {
    let e = ParenUnits::<F>::new(spec);
    let d2 = spec.d() * spec.d();
    let mut t = FormalTensor::zero(d2);
    for i in 0..spec.n(s) {
        for j in 0..spec.n(s) {
            for k in 0..spec.n(r) {
                for l in 0..spec.n(r) {
                    let m = e
                        .get(s, i as i64, j as i64)
                        .kron(e.get(r, k as i64, l as i64));
                    t.add_term(vec![Symbol::Q(QGen::new(s, r, i, j, k, l))], &m);
                }
            }
        }
    }
    t
}

/// The conjugated form `(T^{(s)}_{x,−y} ⊗ T^{(r)}_{v,−w}) (Q^{(s,r)}/n_r) (…)*`.
pub fn rho_map_conjugated<F: Field>(
    spec: &BlockSpec,
    tol: Tol,
) -> Result<Vec<FormalTensor<F>>, QautError> {
    let sn = SnPresentation::new(spec);
    let bp = BlockPauli::<F>::new(spec, tol)?;
    let qs: Vec<Vec<FormalTensor<F>>> = (0..spec.m())
        .map(|s| (0..spec.m()).map(|r| big_q(spec, s, r)).collect())
        .collect();
    Ok((0..sn.len())
        .map(|idx| {
            let UGen { p, q } = sn.gen(idx);
            let u = bp.t_paren(p.s, p.a as i64, -(p.b as i64)).kron(&bp.t_paren(
                q.s,
                q.a as i64,
                -(q.b as i64),
            ));
            let norm = F::from_rational(&Rational::new(1, spec.n(q.s) as i64));
            let ut = u.adjoint();
            qs[p.s][q.s].map_coefficients(|c| u.mul(c).mul(&ut).scale(&norm))
        })
        .collect())
}

/// `π(z_{γ,t})` for `γ = 1..4`: `X^{(t)}⊗I`, `Z^{(t)}⊗I`, `I⊗X^{(t)}`,
/// `I⊗Z^{(t)}`. The same matrices serve as `ρ(z_{γ,t})`.
pub fn z_image<F: Field>(bp: &BlockPauli<F>, gamma: usize, t: usize) -> SparseMat<F> {
    let d = bp.spec().d();
    let id = SparseMat::<F>::identity(d);
    match gamma {
        1 => bp.t_paren(t, 1, 0).kron(&id),
        2 => bp.t_paren(t, 0, 1).kron(&id),
        3 => id.kron(&bp.t_paren(t, 1, 0)),
        4 => id.kron(&bp.t_paren(t, 0, 1)),
        _ => panic!("z index must be 1..=4"),
    }
}

/// Substitutes a `u`-assignment into `π`, giving a `q`-assignment of
/// size `d²·k`.
pub fn substitute_u<F: Field>(
    spec: &BlockSpec,
    pi: &[FormalTensor<F>],
    u: &GeneratorAssignment<F>,
) -> Result<GeneratorAssignment<F>, QautError> {
    let sn = SnPresentation::new(spec);
    if u.len() != sn.len() {
        return Err(QautError::IncompleteAssignment {
            expected: sn.len(),
            got: u.len(),
        });
    }
    let sparse: Vec<SparseMat<F>> = u.mats().iter().map(SparseMat::from_dense).collect();
    let mats = pi
        .iter()
        .map(|t| {
            t.evaluate(u.size(), |x| match x {
                Symbol::U(g) => sparse[sn.index(g)].clone(),
                Symbol::Q(_) => unreachable!("π images contain only u symbols"),
            })
            .to_dense()
        })
        .collect();
    GeneratorAssignment::new(pi.len(), mats)
}

/// Substitutes a `q`-assignment into `ρ`, giving a `u`-assignment of size
/// `d²·k`.
pub fn substitute_q<F: Field>(
    spec: &BlockSpec,
    rho: &[FormalTensor<F>],
    q: &GeneratorAssignment<F>,
) -> Result<GeneratorAssignment<F>, QautError> {
    let pres = QautPresentation::new(spec);
    if q.len() != pres.len() {
        return Err(QautError::IncompleteAssignment {
            expected: pres.len(),
            got: q.len(),
        });
    }
    let sparse: Vec<SparseMat<F>> = q.mats().iter().map(SparseMat::from_dense).collect();
    let mats = rho
        .iter()
        .map(|t| {
            t.evaluate(q.size(), |x| match x {
                Symbol::Q(g) => sparse[pres.index(g).expect("generator in range")].clone(),
                Symbol::U(_) => unreachable!("ρ images contain only q symbols"),
            })
            .to_dense()
        })
        .collect();
    GeneratorAssignment::new(rho.len(), mats)
}
