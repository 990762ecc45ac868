//! Line-oriented text form of a [`StructAlgebra`], used for golden files.
//!
//! ```text
//! struct-algebra 1
//! backend exact
//! dim 2
//! tracial true
//! label 0 δ0
//! mul 0 0 0 1
//! star 0 0 1
//! unit 0 1
//! trace 0 1/2
//! ```
//! Zero entries are omitted; scalars use the backend's text format.

use std::fmt::Write;

use super::structalg::{Sparse, StructAlgebra};
use super::AlgebraError;
use crate::arith::{Field, Tol};

const HEADER: &str = "struct-algebra 1";

pub fn to_text<F: Field>(a: &StructAlgebra<F>) -> String {
    let n = a.dim();
    let mut s = String::new();
    writeln!(s, "{HEADER}").unwrap();
    writeln!(s, "backend {}", F::BACKEND).unwrap();
    writeln!(s, "dim {n}").unwrap();
    writeln!(s, "tracial {}", a.is_tracial()).unwrap();
    for (i, l) in a.labels().iter().enumerate() {
        writeln!(s, "label {i} {l}").unwrap();
    }
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j) {
                writeln!(s, "mul {i} {j} {k} {}", c.to_text()).unwrap();
            }
        }
    }
    for i in 0..n {
        for (k, c) in a.basis_star(i) {
            writeln!(s, "star {i} {k} {}", c.to_text()).unwrap();
        }
    }
    for (k, c) in a.unit().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        writeln!(s, "unit {k} {}", c.to_text()).unwrap();
    }
    for (k, c) in a
        .trace_vector()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
    {
        writeln!(s, "trace {k} {}", c.to_text()).unwrap();
    }
    s
}

/// Parse and re-verify the axioms.
pub fn from_text<F: Field>(text: &str, tol: Tol) -> Result<StructAlgebra<F>, AlgebraError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let bad = |l: &str| AlgebraError::Parse(l.to_string());
    let header = lines.next().ok_or_else(|| bad("<empty>"))?;
    if header != HEADER {
        return Err(bad(header));
    }
    let mut dim = None;
    let mut tracial = false;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut mult: Vec<Sparse<F>> = Vec::new();
    let mut star: Vec<Sparse<F>> = Vec::new();
    let mut unit: Vec<F> = Vec::new();
    let mut trace: Vec<F> = Vec::new();
    for line in lines {
        let (key, rest) = line.split_once(' ').ok_or_else(|| bad(line))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        let idx = |k: usize| -> Result<usize, AlgebraError> {
            let v: usize = fields
                .get(k)
                .ok_or_else(|| bad(line))?
                .parse()
                .map_err(|_| bad(line))?;
            match dim {
                Some(n) if v < n => Ok(v),
                _ => Err(bad(line)),
            }
        };
        let val = |k: usize| -> Result<F, AlgebraError> {
            F::parse_text(fields.get(k).ok_or_else(|| bad(line))?).ok_or_else(|| bad(line))
        };
        match key {
            "backend" => {
                if rest != F::BACKEND.to_string() {
                    return Err(bad(line));
                }
            }
            "dim" => {
                let n: usize = rest.parse().map_err(|_| bad(line))?;
                dim = Some(n);
                labels = vec![None; n];
                mult = vec![Vec::new(); n * n];
                star = vec![Vec::new(); n];
                unit = vec![F::zero(); n];
                trace = vec![F::zero(); n];
            }
            "tracial" => tracial = rest.parse().map_err(|_| bad(line))?,
            "label" => {
                let (i, l) = rest.split_once(' ').ok_or_else(|| bad(line))?;
                let i: usize = i.parse().map_err(|_| bad(line))?;
                *labels.get_mut(i).ok_or_else(|| bad(line))? = Some(l.to_string());
            }
            "mul" => {
                let n = dim.ok_or_else(|| bad(line))?;
                let (i, j, k) = (idx(0)?, idx(1)?, idx(2)?);
                mult[i * n + j].push((k, val(3)?));
            }
            "star" => {
                let (i, k) = (idx(0)?, idx(1)?);
                star[i].push((k, val(2)?));
            }
            "unit" => {
                let k = idx(0)?;
                unit[k] = val(1)?;
            }
            "trace" => {
                let k = idx(0)?;
                trace[k] = val(1)?;
            }
            _ => return Err(bad(line)),
        }
    }
    if dim.is_none() {
        return Err(bad("missing dim"));
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| bad(&format!("missing label {i}"))))
        .collect::<Result<Vec<_>, _>>()?;
    StructAlgebra::new(labels, mult, star, unit, trace, tracial, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multimatrix;
    use crate::arith::Cyclotomic;
    use num_complex::Complex64;

    #[test]
    fn round_trip_both_backends() {
        let tol = Tol::default();
        let s = "2,1".parse().unwrap();
        let a = multimatrix::<Cyclotomic>(&s, tol);
        assert_eq!(from_text::<Cyclotomic>(&to_text(&a), tol).unwrap(), a);
        let f = multimatrix::<Complex64>(&s, tol);
        let back = from_text::<Complex64>(&to_text(&f), tol).unwrap();
        assert_eq!(to_text(&back), to_text(&f));
    }

    #[test]
    fn rejects_wrong_backend_and_garbage() {
        let tol = Tol::default();
        let a = multimatrix::<Cyclotomic>(&"2".parse().unwrap(), tol);
        assert!(from_text::<Complex64>(&to_text(&a), tol).is_err());
        assert!(from_text::<Cyclotomic>("struct-algebra 1\ndim 1\nfoo", tol).is_err());
        assert!(from_text::<Cyclotomic>("struct-algebra 1\ndim 1\nmul 0 0 3 1", tol).is_err());
    }
}
