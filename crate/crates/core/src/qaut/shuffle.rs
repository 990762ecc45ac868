//! `(id⊗id⊗π)(Q^{(s,r)}) = n_r Σ φ^{[s]}_{−x,y} ⊗ φ^{[r]}_{−v,w} ⊗ u_{(s,x,y),(r,v,w)}`.

use serde::Serialize;

use super::formal::FormalTensor;
use super::maps::{pi_map, ParenUnits};
use super::symbols::{Point, QGen, QautPresentation, Symbol, UGen};
use super::QautError;
use crate::algebra::BlockSpec;
use crate::arith::{Field, Tol};
use crate::pauli::{doubled_to_md_md, BlockPauli};

/// Leg order of `φ^{[s]} ⊗ φ^{[r]}` is `(1,3,2,4)`; this puts the legs back
/// in the order `(1,2,3,4)` of `E^{(s)} ⊗ E^{(r)} ⊗ π(q)`.
pub const SHUFFLE_LEGS: [usize; 4] = [0, 2, 1, 3];
pub const LAYOUT: &str = "phi^[s] built in the doubled layout (1,1',2,2',...), reordered to M_d (x) M_d, then legs (1,3,2,4) -> (1,2,3,4)";

#[derive(Clone, Debug, Serialize)]
pub struct ShufflePair {
    pub s: usize,
    pub r: usize,
    pub symbols: usize,
    pub passed: bool,
    pub worst_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShuffleCertificate {
    pub partition: String,
    pub layout: &'static str,
    pub pairs: Vec<ShufflePair>,
    pub passed: bool,
}

pub fn rearranged_q_check<F: Field>(
    spec: &BlockSpec,
    tol: Tol,
) -> Result<ShuffleCertificate, QautError> {
    let pres = QautPresentation::new(spec);
    let pi = pi_map::<F>(spec);
    let e = ParenUnits::<F>::new(spec);
    let bp = BlockPauli::<F>::new(spec, tol)?;
    let d = spec.d();
    let phi = |s: usize, a: i64, b: i64| doubled_to_md_md(spec, &bp.phi_bracket(s, a, b));
    let mut pairs = Vec::new();
    for s in 0..spec.m() {
        for r in 0..spec.m() {
            let (ns, nr) = (spec.n(s), spec.n(r));
            let mut lhs = FormalTensor::zero(d.pow(4));
            for i in 0..ns {
                for j in 0..ns {
                    for k in 0..nr {
                        for l in 0..nr {
                            let g = QGen::new(s, r, i, j, k, l);
                            let ee = e
                                .get(s, i as i64, j as i64)
                                .kron(e.get(r, k as i64, l as i64));
                            let img = &pi[pres.index(&g).expect("generator in range")];
                            lhs = lhs.add(&img.kron_left(&ee));
                        }
                    }
                }
            }
            let mut rhs = FormalTensor::zero(d.pow(4));
            let weight = F::from_integer(nr as i64);
            for x in 0..ns as i64 {
                for y in 0..ns as i64 {
                    let ps = phi(s, -x, y);
                    for v in 0..nr as i64 {
                        for w in 0..nr as i64 {
                            let m = ps
                                .kron(&phi(r, -v, w))
                                .permute_factors(&[d; 4], &SHUFFLE_LEGS)
                                .scale(&weight);
                            let u = UGen {
                                p: Point {
                                    s,
                                    a: x as usize,
                                    b: y as usize,
                                },
                                q: Point {
                                    s: r,
                                    a: v as usize,
                                    b: w as usize,
                                },
                            };
                            rhs.add_term(vec![Symbol::U(u)], &m);
                        }
                    }
                }
            }
            let (ok, res) = lhs.difference(&rhs, tol);
            pairs.push(ShufflePair {
                s: s + 1,
                r: r + 1,
                symbols: rhs.len(),
                passed: ok,
                worst_residual: res,
            });
        }
    }
    let passed = pairs.iter().all(|p| p.passed);
    Ok(ShuffleCertificate {
        partition: spec.to_string(),
        layout: LAYOUT,
        pairs,
        passed,
    })
}
