//! Generator index sets for `O(Aut⁺(B))` and `O(S_N⁺)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::BlockSpec;

/// `q^{(s,r)}_{(i,j),(k,l)}`, all indices 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QGen {
    pub s: usize,
    pub r: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl QGen {
    pub fn new(s: usize, r: usize, i: usize, j: usize, k: usize, l: usize) -> Self {
        QGen { s, r, i, j, k, l }
    }

    /// `q* = q^{(s,r)}_{(j,i),(l,k)}`.
    pub fn adjoint(&self) -> Self {
        QGen::new(self.s, self.r, self.j, self.i, self.l, self.k)
    }
}

impl fmt::Display for QGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q({},{})_({},{}),({},{})",
            self.s + 1,
            self.r + 1,
            self.i,
            self.j,
            self.k,
            self.l
        )
    }
}

/// A point `(s, a, b)` of `X`, i.e. the minimal projection `e_{s,a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Point {
    pub s: usize,
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s + 1, self.a, self.b)
    }
}

/// `u_{p,q}` for points `p = (s,x,y)`, `q = (r,v,w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UGen {
    pub p: Point,
    pub q: Point,
}

impl fmt::Display for UGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}{}", self.p, self.q)
    }
}

/// Formal generator symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Symbol {
    Q(QGen),
    U(UGen),
}

impl Symbol {
    /// Adjoint as fixed by the presentations: `u* = u`, `q*` by relation (3).
    pub fn adjoint(&self) -> Symbol {
        match self {
            Symbol::Q(q) => Symbol::Q(q.adjoint()),
            Symbol::U(u) => Symbol::U(*u),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Q(q) => q.fmt(f),
            Symbol::U(u) => u.fmt(f),
        }
    }
}

/// Generators `q^{(s,r)}_{(i,j),(k,l)}` with `0 ≤ i,j < n_s`, `0 ≤ k,l < n_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct QautPresentation {
    spec: BlockSpec,
    gens: Vec<QGen>,
    index: HashMap<QGen, usize>,
}

impl QautPresentation {
    pub fn new(spec: &BlockSpec) -> Self {
        let mut gens = Vec::new();
        for s in 0..spec.m() {
            for r in 0..spec.m() {
                let (ns, nr) = (spec.n(s), spec.n(r));
                for i in 0..ns {
                    for j in 0..ns {
                        for k in 0..nr {
                            for l in 0..nr {
                                gens.push(QGen::new(s, r, i, j, k, l));
                            }
                        }
                    }
                }
            }
        }
        let index = gens.iter().enumerate().map(|(n, g)| (*g, n)).collect();
        QautPresentation {
            spec: spec.clone(),
            gens,
            index,
        }
    }

    pub fn spec(&self) -> &BlockSpec {
        &self.spec
    }

    pub fn gens(&self) -> &[QGen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index(&self, g: &QGen) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// `q^{(s,r)}` with indices reduced mod the block sizes.
    pub fn wrap(&self, s: usize, r: usize, i: i64, j: i64, k: i64, l: i64) -> QGen {
        let (ns, nr) = (self.spec.n(s) as i64, self.spec.n(r) as i64);
        QGen::new(
            s,
            r,
            i.rem_euclid(ns) as usize,
            j.rem_euclid(ns) as usize,
            k.rem_euclid(nr) as usize,
            l.rem_euclid(nr) as usize,
        )
    }
}

/// Generators `u_{p,q}` of `O(S_N⁺)` over the points of `X`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnPresentation {
    spec: BlockSpec,
    points: Vec<Point>,
}

impl SnPresentation {
    pub fn new(spec: &BlockSpec) -> Self {
        let points = (0..spec.big_n())
            .map(|idx| {
                let (s, a, b) = spec.unit_of_index(idx);
                Point { s, a, b }
            })
            .collect();
        SnPresentation {
            spec: spec.clone(),
            points,
        }
    }

    pub fn spec(&self) -> &BlockSpec {
        &self.spec
    }

    pub fn big_n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point_index(&self, p: &Point) -> usize {
        self.spec.unit_index(p.s, p.a, p.b)
    }

    /// Point `(s, a, b)` with `a, b` reduced mod `n_s`.
    pub fn wrap(&self, s: usize, a: i64, b: i64) -> Point {
        let n = self.spec.n(s) as i64;
        Point {
            s,
            a: a.rem_euclid(n) as usize,
            b: b.rem_euclid(n) as usize,
        }
    }

    pub fn len(&self) -> usize {
        self.big_n() * self.big_n()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index(&self, u: &UGen) -> usize {
        self.point_index(&u.p) * self.big_n() + self.point_index(&u.q)
    }

    pub fn gen(&self, idx: usize) -> UGen {
        let n = self.big_n();
        UGen {
            p: self.points[idx / n],
            q: self.points[idx % n],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        let s: BlockSpec = "2,1".parse().unwrap();
        let q = QautPresentation::new(&s);
        assert_eq!(q.len(), 25);
        for (n, g) in q.gens().iter().enumerate() {
            assert_eq!(q.index(g), Some(n));
            assert_eq!(g.adjoint().adjoint(), *g);
        }
        let u = SnPresentation::new(&s);
        assert_eq!(u.len(), 25);
        for n in 0..u.len() {
            assert_eq!(u.index(&u.gen(n)), n);
        }
        assert_eq!(u.wrap(0, -1, 2), Point { s: 0, a: 1, b: 0 });
    }
}
