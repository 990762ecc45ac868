//! The automorphisms `α_{γ,t}` of `O(Aut⁺(B))` and `β_{γ,t}` of `O(S_N⁺)`,
//! as substitutions on generator symbols.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::symbols::{Point, QGen, QautPresentation, SnPresentation, Symbol, UGen};
use super::QautError;
use crate::algebra::BlockSpec;
use crate::arith::{Cyclotomic, Field, Rational};

/// Which `β` table to use. `Displayed` follows the printed table literally
/// (`β₂` shifts `v`, `β₃` shifts `y`); `Derived` pairs each `β_γ` with
/// conjugation by `ρ(z_{γ,t})`: `β₁: x+1`, `β₂: y−1` (both when `s = t`),
/// `β₃: v+1`, `β₄: w−1` (both when `r = t`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BetaConvention {
    Displayed,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Alpha,
    Beta(BetaConvention),
}

/// `α_{γ,t}` or `β_{γ,t}` with `γ ∈ 1..=4` and 0-based block `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct Substitution {
    spec: BlockSpec,
    kind: Kind,
    gamma: usize,
    t: usize,
}

fn check_range(spec: &BlockSpec, gamma: usize, t: usize) -> Result<(), QautError> {
    if !(1..=4).contains(&gamma) || t >= spec.m() {
        return Err(QautError::IndexOutOfRange(format!("γ = {gamma}, t = {t}")));
    }
    Ok(())
}

/// `α₁`: `ω_{n_t}^{i−j}` when `s = t`; `α₂`: `(i,j) ↦ (i+1,j+1)` when
/// `s = t`; `α₃`: `ω_{n_t}^{k−l}` when `r = t`; `α₄`: `(k,l) ↦ (k+1,l+1)`
/// when `r = t`.
pub fn alpha(spec: &BlockSpec, gamma: usize, t: usize) -> Result<Substitution, QautError> {
    check_range(spec, gamma, t)?;
    Ok(Substitution {
        spec: spec.clone(),
        kind: Kind::Alpha,
        gamma,
        t,
    })
}

pub fn beta(
    spec: &BlockSpec,
    gamma: usize,
    t: usize,
    conv: BetaConvention,
) -> Result<Substitution, QautError> {
    check_range(spec, gamma, t)?;
    Ok(Substitution {
        spec: spec.clone(),
        kind: Kind::Beta(conv),
        gamma,
        t,
    })
}

impl Substitution {
    pub fn name(&self) -> String {
        let letter = match self.kind {
            Kind::Alpha => "α",
            Kind::Beta(BetaConvention::Displayed) => "β(displayed)",
            Kind::Beta(BetaConvention::Derived) => "β",
        };
        format!("{letter}{},{}", self.gamma, self.t + 1)
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn block(&self) -> usize {
        self.t
    }

    pub fn order(&self) -> usize {
        self.spec.n(self.t)
    }

    pub fn is_alpha(&self) -> bool {
        self.kind == Kind::Alpha
    }

    /// Image of a generator as `(scalar, generator)`. Symbols of the other
    /// algebra are left alone.
    pub fn apply<F: Field>(&self, x: &Symbol) -> (F, Symbol) {
        let t = self.t;
        let nt = self.spec.n(t) as u32;
        match (self.kind, x) {
            (Kind::Alpha, Symbol::Q(g)) => {
                let (i, j, k, l) = (g.i as i64, g.j as i64, g.k as i64, g.l as i64);
                match self.gamma {
                    1 if g.s == t => (F::root_of_unity(nt, i - j), *x),
                    2 if g.s == t => (F::one(), Symbol::Q(wrap_q(&self.spec, g, 1, 0))),
                    3 if g.r == t => (F::root_of_unity(nt, k - l), *x),
                    4 if g.r == t => (F::one(), Symbol::Q(wrap_q(&self.spec, g, 0, 1))),
                    _ => (F::one(), *x),
                }
            }
            (Kind::Beta(conv), Symbol::U(u)) => {
                let wrap = |p: &Point, da: i64, db: i64| {
                    let n = self.spec.n(p.s) as i64;
                    Point {
                        s: p.s,
                        a: (p.a as i64 + da).rem_euclid(n) as usize,
                        b: (p.b as i64 + db).rem_euclid(n) as usize,
                    }
                };
                let (s, r) = (u.p.s, u.q.s);
                let (p, q) = match (conv, self.gamma) {
                    (_, 1) if s == t => (wrap(&u.p, 1, 0), u.q),
                    (BetaConvention::Derived, 2) if s == t => (wrap(&u.p, 0, -1), u.q),
                    (BetaConvention::Derived, 3) if r == t => (u.p, wrap(&u.q, 1, 0)),
                    (BetaConvention::Displayed, 2) if s == t => (u.p, wrap(&u.q, -1, 0)),
                    (BetaConvention::Displayed, 3) if r == t => (wrap(&u.p, 0, 1), u.q),
                    (_, 4) if r == t => (u.p, wrap(&u.q, 0, -1)),
                    _ => (u.p, u.q),
                };
                (F::one(), Symbol::U(UGen { p, q }))
            }
            _ => (F::one(), *x),
        }
    }

    fn apply_power<F: Field>(&self, x: &Symbol, times: usize) -> (F, Symbol) {
        (0..times).fold((F::one(), *x), |(c, s), _| {
            let (c2, s2) = self.apply::<F>(&s);
            (c.mul(&c2), s2)
        })
    }
}

fn wrap_q(spec: &BlockSpec, g: &QGen, di: i64, dk: i64) -> QGen {
    let (ns, nr) = (spec.n(g.s) as i64, spec.n(g.r) as i64);
    let m = |x: usize, d: i64, n: i64| (x as i64 + d).rem_euclid(n) as usize;
    QGen::new(
        g.s,
        g.r,
        m(g.i, di, ns),
        m(g.j, di, ns),
        m(g.k, dk, nr),
        m(g.l, dk, nr),
    )
}

fn all_symbols(spec: &BlockSpec, alpha_side: bool) -> Vec<Symbol> {
    if alpha_side {
        QautPresentation::new(spec)
            .gens()
            .iter()
            .map(|g| Symbol::Q(*g))
            .collect()
    } else {
        let sn = SnPresentation::new(spec);
        (0..sn.len()).map(|i| Symbol::U(sn.gen(i))).collect()
    }
}

/// `σ^{n_t}` fixes every generator exactly.
pub fn has_order(sub: &Substitution) -> bool {
    all_symbols(&sub.spec, sub.is_alpha())
        .iter()
        .all(|x| sub.apply_power::<Cyclotomic>(x, sub.order()) == (Cyclotomic::one(), *x))
}

/// `σ τ = τ σ` on every generator.
pub fn commute(a: &Substitution, b: &Substitution) -> bool {
    all_symbols(&a.spec, a.is_alpha()).iter().all(|x| {
        let (c1, y1) = a.apply::<Cyclotomic>(x);
        let (c2, z1) = b.apply::<Cyclotomic>(&y1);
        let (c3, y2) = b.apply::<Cyclotomic>(x);
        let (c4, z2) = a.apply::<Cyclotomic>(&y2);
        z1 == z2 && c1.mul(&c2) == c3.mul(&c4)
    })
}

/// Noncommutative polynomial in generator symbols.
pub(crate) type Poly = BTreeMap<Vec<Symbol>, Cyclotomic>;

fn add(p: &mut Poly, w: Vec<Symbol>, c: Cyclotomic) {
    let e = p.entry(w.clone()).or_insert_with(Cyclotomic::zero);
    *e = e.add(&c);
    if e.is_zero() {
        p.remove(&w);
    }
}

fn rat(n: usize, d: usize) -> Cyclotomic {
    <Cyclotomic as Field>::from_rational(&Rational::new(n as i64, d as i64))
}

/// Relation instances as polynomials `lhs − rhs`, by family.
pub(crate) fn q_relations(spec: &BlockSpec) -> Vec<(&'static str, Poly)> {
    let m = spec.m();
    let n = |t: usize| spec.n(t);
    let q = |s, r, i, j, k, l| Symbol::Q(QGen::new(s, r, i, j, k, l));
    let one = Cyclotomic::one();
    let mut out = Vec::new();
    for s in 0..m {
        for s2 in 0..m {
            for r in 0..m {
                for i in 0..n(s) {
                    for j in 0..n(s) {
                        for i2 in 0..n(s2) {
                            for j2 in 0..n(s2) {
                                for k in 0..n(r) {
                                    for l in 0..n(r) {
                                        let mut p = Poly::new();
                                        for v in 0..n(r) {
                                            add(
                                                &mut p,
                                                vec![q(s, r, i, j, k, v), q(s2, r, i2, j2, v, l)],
                                                one.clone(),
                                            );
                                        }
                                        if s == s2 && j == i2 {
                                            add(&mut p, vec![q(s, r, i, j2, k, l)], one.neg());
                                        }
                                        out.push(("1", p));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for s in 0..m {
        for r in 0..m {
            for r2 in 0..m {
                for i in 0..n(s) {
                    for j in 0..n(s) {
                        for k in 0..n(r) {
                            for l in 0..n(r) {
                                for k2 in 0..n(r2) {
                                    for l2 in 0..n(r2) {
                                        let mut p = Poly::new();
                                        for v in 0..n(s) {
                                            add(
                                                &mut p,
                                                vec![q(s, r, i, v, k, l), q(s, r2, v, j, k2, l2)],
                                                rat(1, n(s)),
                                            );
                                        }
                                        if r == r2 && l == k2 {
                                            add(
                                                &mut p,
                                                vec![q(s, r, i, j, k, l2)],
                                                rat(1, n(r)).neg(),
                                            );
                                        }
                                        out.push(("2", p));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for r in 0..m {
        for k in 0..n(r) {
            for l in 0..n(r) {
                let mut p = Poly::new();
                for s in 0..m {
                    for i in 0..n(s) {
                        add(&mut p, vec![q(s, r, i, i, k, l)], one.clone());
                    }
                }
                if k == l {
                    add(&mut p, vec![], one.neg());
                }
                out.push(("4", p));
            }
        }
    }
    for s in 0..m {
        for i in 0..n(s) {
            for j in 0..n(s) {
                let mut p = Poly::new();
                for r in 0..m {
                    for k in 0..n(r) {
                        add(&mut p, vec![q(s, r, i, j, k, k)], rat(n(r), 1));
                    }
                }
                if i == j {
                    add(&mut p, vec![], rat(n(s), 1).neg());
                }
                out.push(("5", p));
            }
        }
    }
    out
}

fn u_relations(spec: &BlockSpec) -> Vec<(&'static str, Poly)> {
    let sn = SnPresentation::new(spec);
    let big_n = sn.big_n();
    let u = |p: usize, q: usize| Symbol::U(sn.gen(p * big_n + q));
    let one = Cyclotomic::one();
    let mut out = Vec::new();
    for p in 0..big_n {
        let mut row = Poly::new();
        let mut col = Poly::new();
        for q in 0..big_n {
            let mut idem = Poly::new();
            add(&mut idem, vec![u(p, q), u(p, q)], one.clone());
            add(&mut idem, vec![u(p, q)], one.neg());
            out.push(("projection", idem));
            add(&mut row, vec![u(p, q)], one.clone());
            add(&mut col, vec![u(q, p)], one.clone());
            for q2 in 0..big_n {
                if q2 != q {
                    let mut o = Poly::new();
                    add(&mut o, vec![u(p, q), u(p, q2)], one.clone());
                    out.push(("orthogonality", o));
                    let mut o = Poly::new();
                    add(&mut o, vec![u(q, p), u(q2, p)], one.clone());
                    out.push(("orthogonality", o));
                }
            }
        }
        add(&mut row, vec![], one.neg());
        add(&mut col, vec![], one.neg());
        out.push(("row-sum", row));
        out.push(("column-sum", col));
    }
    out
}

/// Outcome of mapping every relation instance through a substitution.
#[derive(Clone, Debug, Serialize)]
pub struct PreservationReport {
    pub substitution: String,
    pub instances: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Maps every relation instance through `sub` and checks that the image
/// is a nonzero multiple of an instance of the same family. Relation (3) is
/// checked as `sub(q)* = sub(q*)`.
pub fn preserves_relations(sub: &Substitution) -> PreservationReport {
    let rels = if sub.is_alpha() {
        q_relations(&sub.spec)
    } else {
        u_relations(&sub.spec)
    };
    let mut index: HashMap<(&str, Vec<Vec<Symbol>>), Vec<usize>> = HashMap::new();
    for (n, (fam, p)) in rels.iter().enumerate() {
        index
            .entry((fam, p.keys().cloned().collect()))
            .or_default()
            .push(n);
    }
    let mut failure = None;
    for (fam, p) in &rels {
        let mut img = Poly::new();
        for (w, c) in p {
            let mut coeff = c.clone();
            let mut w2 = Vec::with_capacity(w.len());
            for x in w {
                let (a, y) = sub.apply::<Cyclotomic>(x);
                coeff = coeff.mul(&a);
                w2.push(y);
            }
            add(&mut img, w2, coeff);
        }
        let key = (*fam, img.keys().cloned().collect::<Vec<_>>());
        let matched = index.get(&key).is_some_and(|cands| {
            cands.iter().any(|&c| {
                let target = &rels[c].1;
                let Some((w0, c0)) = img.iter().next() else {
                    return target.is_empty();
                };
                let ratio = c0.mul(&target[w0].inv().expect("nonzero coefficient"));
                img.iter().all(|(w, c)| *c == target[w].mul(&ratio))
            })
        });
        if !matched {
            failure = Some(format!(
                "family {fam} instance {:?} not mapped to an instance",
                p.keys().next()
            ));
            break;
        }
    }
    if failure.is_none() && sub.is_alpha() {
        for x in all_symbols(&sub.spec, true) {
            let (c, y) = sub.apply::<Cyclotomic>(&x);
            let (c2, y2) = sub.apply::<Cyclotomic>(&x.adjoint());
            if y.adjoint() != y2 || c.conj() != c2 {
                failure = Some(format!("family 3 at {x}"));
                break;
            }
        }
    }
    PreservationReport {
        substitution: sub.name(),
        instances: rels.len(),
        passed: failure.is_none(),
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> BlockSpec {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_one_has_order_n() {
        let s = spec("2,1");
        for g in 1..=4 {
            for t in 0..2 {
                assert!(has_order(&alpha(&s, g, t).unwrap()), "α{g},{t}");
            }
        }
    }

    #[test]
    fn alpha_two_shifts_the_left_indices() {
        let s = spec("2");
        let a2 = alpha(&s, 2, 0).unwrap();
        for (k, l) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let x = Symbol::Q(QGen::new(0, 0, 0, 0, k, l));
            assert_eq!(
                a2.apply::<Cyclotomic>(&x),
                (Cyclotomic::one(), Symbol::Q(QGen::new(0, 0, 1, 1, k, l)))
            );
        }
    }

    #[test]
    fn beta_four_shifts_w_down() {
        let s = spec("2");
        let sn = SnPresentation::new(&s);
        for conv in [BetaConvention::Displayed, BetaConvention::Derived] {
            let b4 = beta(&s, 4, 0, conv).unwrap();
            for i in 0..sn.len() {
                let u = sn.gen(i);
                let want = UGen {
                    p: u.p,
                    q: sn.wrap(u.q.s, u.q.a as i64, u.q.b as i64 - 1),
                };
                assert_eq!(b4.apply::<Cyclotomic>(&Symbol::U(u)).1, Symbol::U(want));
            }
        }
    }

    #[test]
    fn commutation() {
        let s = spec("2,2");
        for t in 0..2 {
            for t2 in 0..2 {
                assert!(commute(
                    &alpha(&s, 1, t).unwrap(),
                    &alpha(&s, 3, t2).unwrap()
                ));
                assert!(commute(
                    &alpha(&s, 2, t).unwrap(),
                    &alpha(&s, 4, t2).unwrap()
                ));
            }
        }
    }

    #[test]
    fn relations_are_preserved() {
        for p in ["2", "2,1", "1,1,1"] {
            let s = spec(p);
            for g in 1..=4 {
                for t in 0..s.m() {
                    let r = preserves_relations(&alpha(&s, g, t).unwrap());
                    assert!(r.passed, "{p}: {r:?}");
                    let r = preserves_relations(&beta(&s, g, t, BetaConvention::Derived).unwrap());
                    assert!(r.passed, "{p}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn out_of_range_is_rejected() {
        let s = spec("2");
        assert!(matches!(
            alpha(&s, 5, 0),
            Err(QautError::IndexOutOfRange(_))
        ));
        assert!(matches!(
            alpha(&s, 1, 1),
            Err(QautError::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn broken_substitution_is_caught() {
        // a relation instance with the wrong family is never matched
        let s = spec("2");
        let rels = q_relations(&s);
        assert!(rels.iter().any(|(f, _)| *f == "4"));
        let sub = alpha(&s, 1, 0).unwrap();
        assert!(preserves_relations(&sub).passed);
    }
}
