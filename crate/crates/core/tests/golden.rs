//! Golden files for the `StructAlgebra` text format. Regenerate with
//! `QAUTCERT_BLESS=1 cargo test -p qautcert --test golden`.

use std::path::PathBuf;

use qautcert::algebra::text::{from_text, to_text};
use qautcert::algebra::{function_algebra, multimatrix, BlockSpec, StructAlgebra};
use qautcert::arith::{Cyclotomic, Tol};
use qautcert::cocycle::{fourier_function_algebra, sigma_zero};

type Q = Cyclotomic;

fn check(name: &str, a: &StructAlgebra<Q>) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let text = to_text(a);
    if std::env::var_os("QAUTCERT_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let golden =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, golden, "{name} drifted from its golden file");
    let back = from_text::<Q>(&golden, Tol::default()).unwrap();
    assert_eq!(to_text(&back), golden);
}

#[test]
fn matrix_algebra_m2() {
    check(
        "m2.txt",
        &multimatrix::<Q>(&BlockSpec::new(vec![2]).unwrap(), Tol::default()),
    );
}

#[test]
fn function_algebra_c3() {
    check("c3.txt", &function_algebra::<Q>(3, Tol::default()));
}

#[test]
fn twisted_fourier_algebra_of_the_qubit() {
    let s = BlockSpec::new(vec![2]).unwrap();
    let (sigma, _) = sigma_zero(&s);
    let tw = fourier_function_algebra::<Q>(&s, Tol::default())
        .twist_left(&sigma, Tol::default())
        .unwrap();
    check("twisted_2.txt", tw.graded.algebra());
}
