//! Acceptance criteria, one line each: `PASS|FAIL <n> <name> (<secs> s / <budget>) <detail>`.
//! Exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use qautcert::algebra::{function_algebra, multimatrix, BlockSpec};
use qautcert::arith::{Coeff, Complex64, Cyclotomic, Mat, Tol};
use qautcert::cocycle::{fourier_function_algebra, sigma_zero, verify_twist_theorem, FinAbGroup};
use qautcert::crossed::{
    conjugation_lemma_check, takesaki_takai_check, translation_action, GroupAction,
};
use qautcert::pauli::{depolarization_check, is_unitary_error_basis, weyl_basis};
use qautcert::qaut::{
    automorphism_battery, check_magic_unitary, check_relations, classical_assignment_aut,
    covariance_check, haar_compat_check, permutation_assignment, pi_map, random_permutation,
    rearranged_q_check, rho_map, seeded_rng, substitute_q, substitute_u, uet_pvm, HaarMatch,
    QautPresentation, SnPresentation,
};
use serde_json::Value;

type Q = Cyclotomic;

fn spec(s: &str) -> BlockSpec {
    s.parse().expect("valid partition")
}

fn tol() -> Tol {
    Tol::default()
}

/// Each check returns `Ok(detail)` or `Err(reason)`.
type Outcome = Result<String, String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn c1_ueb() -> Outcome {
    for n in 1..=6 {
        let w = weyl_basis::<Q>(n, tol()).map_err(|e| e.to_string())?;
        let r = is_unitary_error_basis(w.members(), tol()).map_err(|e| e.to_string())?;
        ensure(r.passed && r.worst_residual == 0.0, || {
            format!("n={n}: {:?}", r.failure)
        })?;
        for i in 0..n {
            for j in 0..n {
                let mut e = Mat::<Q>::zeros(n, n);
                e.set(i, j, Q::one());
                let r = depolarization_check(w.members(), &e, tol()).map_err(|e| e.to_string())?;
                ensure(r.passed && r.worst_residual == 0.0, || {
                    format!("n={n} E_{i}{j}: {:?}", r.failure)
                })?;
            }
        }
    }
    Ok("n = 1..6, exact, zero residual".into())
}

fn c2_twist() -> Outcome {
    for p in ["2", "3", "2,1", "2,2", "1,1,1,1"] {
        let s = spec(p);
        let c = verify_twist_theorem::<Q>(&s, tol(), 0).map_err(|e| e.to_string())?;
        ensure(c.passed && c.blocks.sizes == c.expected_blocks, || {
            format!(
                "({p}): blocks {:?}, expected {:?}",
                c.blocks.sizes, c.expected_blocks
            )
        })?;
    }
    let f = verify_twist_theorem::<Complex64>(&spec("2,2"), tol(), 0).map_err(|e| e.to_string())?;
    ensure(f.passed && f.blocks.residual <= 1e-8, || {
        format!("float (2,2) residual {:e}", f.blocks.residual)
    })?;
    Ok(format!(
        "5 partitions exact; float (2,2) residual {:.1e}",
        f.blocks.residual
    ))
}

fn c3_conj() -> Outcome {
    let mut cases = 0;
    for p in ["2", "3", "2,2"] {
        let s = spec(p);
        let (sigma, _) = sigma_zero(&s);
        let c = conjugation_lemma_check(&fourier_function_algebra::<Q>(&s, tol()), &sigma, tol())
            .map_err(|e| e.to_string())?;
        ensure(c.report.passed && c.report.worst_residual == 0.0, || {
            format!("({p}): {:?}", c.report.failure)
        })?;
        cases += c.report.cases;
    }
    Ok(format!(
        "(Z2)^2, (Z3)^2, (Z2)^2x(Z2)^2; {cases} coefficient equalities"
    ))
}

fn ad_diag_m2() -> Result<GroupAction<Q>, String> {
    let a = multimatrix::<Q>(&spec("2"), tol());
    let sign = Mat::from_fn(4, 4, |r, c| match (r == c, r) {
        (true, 1) | (true, 2) => Q::from_integer(-1),
        (true, _) => Q::one(),
        _ => Q::zero(),
    });
    GroupAction::new(
        FinAbGroup::new(vec![2]),
        a,
        vec![Mat::identity(4), sign],
        tol(),
    )
    .map_err(|e| e.to_string())
}

fn c4_tt() -> Outcome {
    let instances = [
        (
            "C by Z2",
            GroupAction::trivial(FinAbGroup::new(vec![2]), function_algebra::<Q>(1, tol())),
        ),
        (
            "C(X) (2) by translations",
            translation_action::<Q>(&spec("2"), tol()),
        ),
        ("M2 by Ad diag(1,-1)", ad_diag_m2()?),
    ];
    let mut seen = Vec::new();
    for (name, act) in &instances {
        let c = takesaki_takai_check(act, tol(), 0).map_err(|e| e.to_string())?;
        ensure(c.passed && c.blocks == c.expected, || {
            format!("{name}: {:?} vs {:?}", c.blocks, c.expected)
        })?;
        seen.push(format!("{:?}", c.blocks));
    }
    Ok(format!("blocks {}", seen.join(" ")))
}

fn c5_pvm() -> Outcome {
    for p in ["2", "3", "2,1", "2,2", "2,1,1"] {
        let c = uet_pvm::<Q>(&spec(p), tol()).map_err(|e| e.to_string())?;
        let reports = [
            &c.projection,
            &c.orthogonality,
            &c.completeness,
            &c.partial_trace,
            &c.plancherel,
        ];
        ensure(
            c.passed && reports.iter().all(|r| r.passed && r.worst_residual == 0.0),
            || {
                format!(
                    "({p}): {:?}",
                    reports.iter().find_map(|r| r.failure.clone())
                )
            },
        )?;
    }
    Ok("5 partitions, all five conditions exact".into())
}

fn c6_homs() -> Outcome {
    let mut autos = Vec::new();
    for p in ["2", "2,1", "3"] {
        let s = spec(p);
        let pres = QautPresentation::new(&s);
        let sn = SnPresentation::new(&s);
        let (pi, rho) = (pi_map::<Q>(&s), rho_map::<Q>(&s));
        let mut rng = seeded_rng(42);
        for _ in 0..20 {
            let perm = random_permutation(&sn, true, &mut rng);
            let q = substitute_u(&s, &pi, &permutation_assignment(&sn, &perm))
                .map_err(|e| e.to_string())?;
            let r = check_relations(&pres, &q, tol()).map_err(|e| e.to_string())?;
            ensure(r.passed && r.worst_residual == 0.0, || {
                format!("({p}) π on {perm:?}: {:?}", r.failure)
            })?;
        }
        let battery = automorphism_battery::<Q>(&s, tol());
        ensure(battery.len() >= 10, || {
            format!("({p}): only {} automorphisms", battery.len())
        })?;
        let weyl = battery
            .iter()
            .filter(|(n, _)| n.starts_with("Ad T"))
            .count();
        let want: usize = s
            .sizes()
            .iter()
            .filter(|&&n| n > 1)
            .map(|n| n * n - 1)
            .sum();
        ensure(weyl == want, || {
            format!("({p}): {weyl} Weyl conjugations, expected {want}")
        })?;
        for (name, theta) in &battery {
            let q = classical_assignment_aut(&pres, theta, tol()).map_err(|e| e.to_string())?;
            let u = substitute_q(&s, &rho, &q).map_err(|e| e.to_string())?;
            let r = check_magic_unitary(&sn, &u, tol()).map_err(|e| e.to_string())?;
            ensure(r.passed && r.worst_residual == 0.0, || {
                format!("({p}) ρ on {name}: {:?}", r.failure)
            })?;
        }
        autos.push(format!("({p}):{}", battery.len()));
    }
    Ok(format!(
        "20 permutations each; automorphisms {}",
        autos.join(" ")
    ))
}

fn c7_shuffle() -> Outcome {
    let specs: Vec<BlockSpec> = BlockSpec::up_to_big_n(16)
        .into_iter()
        .filter(|s| s.d() <= 4)
        .collect();
    for s in &specs {
        let c = rearranged_q_check::<Q>(s, tol()).map_err(|e| e.to_string())?;
        ensure(
            c.passed && c.pairs.iter().all(|p| p.worst_residual == 0.0),
            || format!("({s}) fails"),
        )?;
    }
    Ok(format!("{} partitions with d <= 4", specs.len()))
}

fn c8_cov() -> Outcome {
    let mut ranks = Vec::new();
    for p in ["2", "2,1", "2,2", "3"] {
        let s = spec(p);
        let c = covariance_check::<Q>(&s, tol()).map_err(|e| e.to_string())?;
        let exact = [&c.a, &c.b, &c.c, &c.d]
            .iter()
            .all(|r| r.passed && r.worst_residual == 0.0);
        let d4 = s.d().pow(4);
        ensure(exact && c.rank == d4, || {
            format!("({p}): exact {exact}, rank {} vs d^4 = {d4}", c.rank)
        })?;
        ranks.push(format!("({p}):{}", c.rank));
    }
    Ok(format!("(a)-(d) exact; ranks {}", ranks.join(" ")))
}

fn c9_haar() -> Outcome {
    let mut notes = Vec::new();
    for p in ["2", "2,1"] {
        let s = spec(p);
        let c = haar_compat_check::<Q>(&s, tol()).map_err(|e| e.to_string())?;
        ensure(c.pairs.len() == s.m() * s.m(), || {
            format!("({p}): {} pairs", c.pairs.len())
        })?;
        ensure(c.off_diagonal_vanish && c.constant_per_pair, || {
            format!("({p}): outputs not scalar per class")
        })?;
        for h in &c.pairs {
            let tag = match h.matches {
                HaarMatch::Both => "both",
                HaarMatch::RowSize => "n_s/N",
                HaarMatch::ColumnSize => "n_r/N",
                HaarMatch::Neither => "neither",
            };
            notes.push(format!("({p})[{},{}]={}~{tag}", h.s, h.r, h.constant));
        }
    }
    Ok(notes.join(" "))
}

fn c10_determinism() -> Outcome {
    let run = || {
        let o = Command::new(env!("CARGO_BIN_EXE_qautcert"))
            .args(["run", "--partition", "2,1", "--workers", "4"])
            .env_remove("QAUTCERT_SUITES")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.code() == Some(0), || {
            format!("exit {:?}", o.status.code())
        })?;
        let mut v: Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
        v.as_object_mut().ok_or("not an object")?.remove("timings");
        Ok::<_, String>(serde_json::to_vec(&v).expect("serializes"))
    };
    let (a, b) = (run()?, run()?);
    ensure(a == b, || "non-timing sections differ".into())?;
    Ok(format!("(2,1) all suites, {} identical bytes", a.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("UEB suite", Some(5), c1_ueb),
        ("twist theorem", Some(60), c2_twist),
        ("conjugation lemma", Some(60), c3_conj),
        ("Takesaki-Takai", Some(60), c4_tt),
        ("PVM representation", Some(30), c5_pvm),
        ("homomorphism batteries", Some(120), c6_homs),
        ("shuffle identity", Some(30), c7_shuffle),
        ("covariance", Some(120), c8_cov),
        ("Haar constants", None, c9_haar),
        ("determinism", None, c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let over = budget.is_some_and(|b| took > Duration::from_secs(b));
        let limit = budget.map_or_else(|| "no budget".to_string(), |b| format!("{b} s"));
        let (tag, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "{tag} {:>2} {name} ({:.2} s / {limit}) {detail}",
            i + 1,
            took.as_secs_f64()
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
