//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Run with `cargo test -p qloop --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use qloop::borelrep::{
    bar_reflection_consistency, serre_check, sigma_has_order, tau_is_involution,
    twist_consistency, OpExpr, RepSpec, Representation,
};
use qloop::exactfield::QRational;
use qloop::fock::{occupations, FockState};
use qloop::lweights::{
    factor_check, verify_grid_with, CheckKind, FactorCheck, GridOptions, GridReport,
};
use qloop::rootvectors::{drinfeld_check, RootVectors};

const ORDER: usize = 6;
const M_MAX: u32 = 2;

fn basis_samples(l: usize, max: u32) -> Vec<FockState> {
    occupations(l, max).into_iter().map(FockState::basis).collect()
}

fn grids(bar: bool) -> Vec<GridReport> {
    (1..=3)
        .map(|l| {
            verify_grid_with(
                l,
                &GridOptions {
                    order: ORDER,
                    m_max: M_MAX,
                    bar,
                    pade: !bar,
                },
            )
        })
        .collect()
}

fn summarize(reports: &[GridReport], kinds: &[CheckKind]) -> (bool, String) {
    let failures: usize = reports
        .iter()
        .map(|r| kinds.iter().map(|&k| r.count_failures(k)).sum::<usize>())
        .sum();
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    for r in reports {
        for d in r.discrepancies.iter().filter(|d| kinds.contains(&d.check)).take(3) {
            eprintln!("    l={} {}", r.l, d.to_json());
        }
    }
    (failures == 0, format!("{failures} failures among {checks} grid checks"))
}

fn serre_all() -> (bool, String) {
    let mut runs = 0;
    let mut failed = Vec::new();
    for l in 1..=3 {
        let samples = basis_samples(l, 3);
        for a in 1..=l + 1 {
            for bar in [false, true] {
                let spec = RepSpec::new(l, a, bar).unwrap();
                for i in 0..=l {
                    for j in 0..=l {
                        if i != j {
                            runs += 1;
                            if !serre_check(i, j, &spec, &samples) {
                                failed.push((l, a, bar, i, j));
                            }
                        }
                    }
                }
            }
        }
    }
    (failed.is_empty(), format!("{runs} (spec, i, j) cases, failed: {failed:?}"))
}

fn twists_all() -> (bool, String) {
    let mut runs = 0;
    let mut ok = true;
    for l in 1..=4 {
        ok &= sigma_has_order(l) && tau_is_involution(l);
        for a in 1..=l + 1 {
            for i in 0..=l {
                for bar in [false, true] {
                    runs += 1;
                    ok &= twist_consistency(l, a, bar, i);
                }
                ok &= bar_reflection_consistency(l, a, i);
            }
        }
    }
    (ok, format!("{runs} generator images, sigma^(l+1) = id, tau^2 = id"))
}

fn factorizations_all() -> (bool, String) {
    let q = QRational::q_pow;
    let mut checks = Vec::new();
    for l in 1..=3usize {
        for zs in [q(0), q(2), q(-1)] {
            for a in 1..=l + 1 {
                checks.push((l, FactorCheck::OscToPref { a, zs: zs.clone() }));
            }
            for i in 1..=l {
                checks.push((l, FactorCheck::PrefMinus { i, zs: zs.clone() }));
                checks.push((l, FactorCheck::PrefPlus { i, zs: zs.clone() }));
            }
        }
        checks.push((l, FactorCheck::FullTensor { zs: (1..=l as i64 + 1).map(q).collect() }));
        checks.push((l, FactorCheck::FullTensor { zs: (0..=l as i64).map(|k| q(-2 * k)).collect() }));
    }
    let failed: Vec<String> = checks
        .iter()
        .filter(|(l, c)| !matches!(factor_check(*l, c), Ok(true)))
        .map(|(l, c)| format!("l={l} {c:?}"))
        .collect();
    (failed.is_empty(), format!("{} identities, failed: {failed:?}", checks.len()))
}

fn drinfeld_all() -> (bool, String) {
    let mut runs = 0;
    let mut failed = Vec::new();
    for l in 1..=2 {
        let samples = basis_samples(l, 2);
        for a in 1..=l + 1 {
            for bar in [false, true] {
                let spec = RepSpec::new(l, a, bar).unwrap();
                for i in 1..=l {
                    for j in 1..=l {
                        for n in 1..=2 {
                            for m in 0..=1 {
                                runs += 1;
                                if !matches!(drinfeld_check(i, j, n, m, &spec, &samples), Ok(true)) {
                                    failed.push((l, a, bar, i, j, n, m));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Vanishing ladder facts for 2 <= a <= l.
    let mut ladders = 0;
    for l in 2..=3 {
        let samples = basis_samples(l, 2);
        for a in 2..=l {
            let spec = RepSpec::new(l, a, false).unwrap();
            let mut ev = Representation::new(&spec).evaluator();
            let mut rv = RootVectors::new(l);
            for n in 1..=3 {
                for i in 1..=a - 2 {
                    ladders += 1;
                    let e = rv.e_prime_imag(i, i + 1, n).unwrap();
                    if !samples.iter().all(|s| ev.apply(&e, s).is_zero()) {
                        failed.push((l, a, false, i, i, n, 99));
                    }
                }
            }
            // e_{alpha_{a-1} + n delta} vanishes for n >= 1 and is e_{a-1} for n = 0.
            for n in 0..=3 {
                ladders += 1;
                let e = rv.e_real(a - 1, a, n).unwrap();
                let target = if n == 0 { OpExpr::gen(a - 1) } else { OpExpr::zero() };
                if !samples.iter().all(|s| ev.apply(&e, s) == ev.apply(&target, s)) {
                    failed.push((l, a, false, a - 1, a, n, 98));
                }
            }
        }
    }
    (
        failed.is_empty(),
        format!("{runs} commutator relations, {ladders} vanishing facts, failed: {failed:?}"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let plain = grids(false);
    let bar = grids(true);
    let both: Vec<GridReport> = plain.iter().chain(bar.iter()).cloned().collect();
    let not_diag: usize = both.iter().map(|r| r.count_not_diagonal()).sum();

    let results: Vec<(&str, (bool, String))> = vec![
        ("l-weight grid, untwisted", summarize(&plain, &[CheckKind::Psi])),
        ("l-weight grid, reflected family", summarize(&bar, &[CheckKind::Psi])),
        (
            "diagonality of e'_{n delta, alpha_i}, n <= 6",
            (not_diag == 0, format!("{not_diag} non-diagonal actions")),
        ),
        (
            "weights and central element",
            summarize(&both, &[CheckKind::Weight, CheckKind::Central]),
        ),
        ("Serre and weight relations", serre_all()),
        ("twist consistency", twists_all()),
        ("factorization identities", factorizations_all()),
        ("Drinfeld relations and vanishing ladders", drinfeld_all()),
        ("Pade reconstruction", summarize(&plain, &[CheckKind::Pade])),
    ];

    let mut all = true;
    for (k, (name, (ok, detail))) in results.iter().enumerate() {
        all &= ok;
        println!(
            "{} criterion {}: {name} ({detail})",
            if *ok { "PASS" } else { "FAIL" },
            k + 1
        );
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
