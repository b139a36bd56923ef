//! Exhaustive comparison of computed and closed-form l-weights over a grid
//! of basis vectors.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::borelrep::RepSpec;
use crate::error::Error;
use crate::exactfield::json::{urational_to_json, useries_to_json};
use crate::exactfield::pade;
use crate::fock::{occupations, Occupation};

use super::closed::{closed_lambda, closed_psi};
use super::extract::PhiEngine;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    /// Eigenvalue series of `phi+_i` against the closed form.
    Psi,
    /// Padé reconstruction of the series against the closed form.
    Pade,
    /// Cartan eigenvalues against the closed-form weight.
    Weight,
    /// `q^{h_0 + ... + h_l}` acts trivially.
    Central,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Psi => "psi",
            CheckKind::Pade => "pade",
            CheckKind::Weight => "weight",
            CheckKind::Central => "central",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    Mismatch,
    /// A root vector failed to act diagonally, or another error.
    Error(String),
}

impl Status {
    pub fn name(&self) -> String {
        match self {
            Status::Ok => "ok".into(),
            Status::Mismatch => "mismatch".into(),
            Status::Error(e) => format!("error: {e}"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct GridEntry {
    pub a: usize,
    pub bar: bool,
    pub i: usize,
    pub m: Occupation,
    pub check: CheckKind,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
}

impl GridEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a,
            "bar": self.bar,
            "i": self.i,
            "m": self.m,
            "check": self.check.name(),
            "status": self.status.name(),
            "expected": self.expected,
            "computed": self.computed,
        })
    }
}

/// Outcome of [`verify_grid`]: number of checks run and every failure.
#[derive(Clone, PartialEq, Debug)]
pub struct GridReport {
    pub l: usize,
    pub order: usize,
    pub m_max: u32,
    pub bar: bool,
    pub checks: usize,
    pub discrepancies: Vec<GridEntry>,
}

impl GridReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn count_failures(&self, kind: CheckKind) -> usize {
        self.discrepancies.iter().filter(|e| e.check == kind).count()
    }

    pub fn count_not_diagonal(&self) -> usize {
        self.discrepancies
            .iter()
            .filter(|e| matches!(&e.status, Status::Error(s) if s.contains("diagonal")))
            .count()
    }
}

/// Options for [`verify_grid_with`].
#[derive(Clone, Debug)]
pub struct GridOptions {
    pub order: usize,
    pub m_max: u32,
    pub bar: bool,
    /// Also reconstruct each series at degrees `(2, 2)` (needs `order >= 4`).
    pub pade: bool,
}

/// For every `a`, `i` and `m` with entries `<= m_max`: the series of
/// `phi+_i` on `v_m` to order `order` equals the expansion of the closed
/// form, and the Cartan eigenvalues equal the closed-form weight.
pub fn verify_grid(l: usize, order: usize, m_max: u32, bar: bool) -> GridReport {
    verify_grid_with(
        l,
        &GridOptions {
            order,
            m_max,
            bar,
            pade: order >= 4,
        },
    )
}

pub fn verify_grid_with(l: usize, opts: &GridOptions) -> GridReport {
    let tasks: Vec<(usize, usize)> = (1..=l + 1)
        .flat_map(|a| (1..=l).map(move |i| (a, i)))
        .collect();
    let results: Vec<(usize, Vec<GridEntry>)> = tasks
        .par_iter()
        .map(|&(a, i)| grid_cell(l, a, i, opts))
        .collect();
    let mut checks = 0;
    let mut discrepancies = Vec::new();
    for (n, mut d) in results {
        checks += n;
        discrepancies.append(&mut d);
    }
    GridReport {
        l,
        order: opts.order,
        m_max: opts.m_max,
        bar: opts.bar,
        checks,
        discrepancies,
    }
}

/// All checks for one `(a, i)` over every `m`; weight and central checks
/// ride along with `i = 1`.
fn grid_cell(l: usize, a: usize, i: usize, opts: &GridOptions) -> (usize, Vec<GridEntry>) {
    let spec = RepSpec::new(l, a, opts.bar).expect("valid grid spec");
    let mut engine = PhiEngine::new(&spec);
    let mut checks = 0;
    let mut bad = Vec::new();
    for m in occupations(l, opts.m_max) {
        let entry = |check: CheckKind, status: Status, expected: Value, computed: Value| GridEntry {
            a,
            bar: opts.bar,
            i,
            m: m.clone(),
            check,
            status,
            expected,
            computed,
        };
        let closed = closed_psi(i, &spec, &m).expect("valid index");
        let expected_series = closed.expand(opts.order);
        checks += 1;
        match engine.phi_series(i, &m, opts.order) {
            Ok(series) => {
                if series != expected_series {
                    bad.push(entry(
                        CheckKind::Psi,
                        Status::Mismatch,
                        useries_to_json(&expected_series),
                        useries_to_json(&series),
                    ));
                }
                if opts.pade && opts.order >= 4 {
                    checks += 1;
                    match pade(&series, 2, 2) {
                        Ok(r) if r == closed => {}
                        Ok(r) => bad.push(entry(
                            CheckKind::Pade,
                            Status::Mismatch,
                            urational_to_json(&closed),
                            urational_to_json(&r),
                        )),
                        Err(e) => bad.push(entry(
                            CheckKind::Pade,
                            Status::Error(e.to_string()),
                            urational_to_json(&closed),
                            Value::Null,
                        )),
                    }
                }
            }
            Err(e) => {
                let status = match e {
                    Error::NotDiagonal { .. } => Status::Error(format!("not diagonal: {e}")),
                    _ => Status::Error(e.to_string()),
                };
                bad.push(entry(
                    CheckKind::Psi,
                    status,
                    useries_to_json(&expected_series),
                    Value::Null,
                ));
            }
        }
        if i == 1 {
            checks += 2;
            let lambda = closed_lambda(&spec, &m).expect("valid spec");
            let computed = engine.lambda(&m);
            if computed != lambda {
                bad.push(entry(
                    CheckKind::Weight,
                    Status::Mismatch,
                    json!(lambda.coeffs()),
                    json!(computed.coeffs()),
                ));
            }
            let central: i64 = (0..=l).map(|j| engine.cartan_exponent(j, &m)).sum();
            if central != 0 {
                bad.push(entry(CheckKind::Central, Status::Mismatch, json!(0), json!(central)));
            }
        }
    }
    (checks, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_grid_is_clean() {
        let r = verify_grid(1, 6, 3, false);
        assert!(r.is_clean(), "{:?}", r.discrepancies);
        assert_eq!(r.checks, 2 * 4 * 4);
    }

    #[test]
    fn entry_json_layout() {
        let e = GridEntry {
            a: 1,
            bar: false,
            i: 1,
            m: vec![0],
            check: CheckKind::Central,
            status: Status::Mismatch,
            expected: json!(0),
            computed: json!(2),
        };
        assert_eq!(
            e.to_json().to_string(),
            r#"{"a":1,"bar":false,"check":"central","computed":2,"expected":0,"i":1,"m":[0],"status":"mismatch"}"#
        );
    }
}
