use std::fmt::Write as _;

use serde_json::{json, Value};

use qloop::borelrep::{serre_check, RepSpec, Representation};
use qloop::exactfield::json::{qrational_to_json, urational_to_json};
use qloop::exactfield::QRational;
use qloop::fock::{occupations, FockState, Occupation};
use qloop::lweights::{
    closed_lambda, closed_psi, factor_sides, verify_grid, FactorCheck, LWeight, PhiEngine,
};
use qloop::rootsys::CartanExponent;
use qloop::rootvectors::drinfeld_check;
use qloop::Error;

use crate::zs::{parse_zs, parse_zs_list};
use crate::{Command, FactorKind, Opts};

/// Report of one invocation: JSON document, human table, overall verdict.
pub struct Outcome {
    pub json: Value,
    pub table: String,
    pub ok: bool,
}

type Usage<T> = Result<T, String>;

pub fn run(cmd: Command, o: &Opts) -> Usage<Outcome> {
    let l = match o.l {
        Some(l) if l >= 1 => l,
        Some(_) => return Err("--l must be at least 1".into()),
        None => return Err("--l is required".into()),
    };
    if o.order < 2 {
        return Err("--order must be at least 2".into());
    }
    match cmd {
        Command::Verify => verify(l, o),
        Command::Lweight => lweight(l, o),
        Command::Serre => serre(l, o),
        Command::Drinfeld => drinfeld(l, o),
        Command::Factor => factor(l, o),
        Command::DumpOp => dump_op(l, o),
    }
}

fn spec(l: usize, o: &Opts, zs: QRational) -> Usage<RepSpec> {
    RepSpec::with_zs(l, o.a, o.bar, zs).map_err(|e| e.to_string())
}

fn occupation(l: usize, o: &Opts) -> Usage<Occupation> {
    let Some(s) = &o.m else {
        return Ok(vec![0; l]);
    };
    let m = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("bad occupation {x:?} in --m")))
        .collect::<Usage<Vec<_>>>()?;
    if m.len() != l {
        return Err(format!("--m has {} entries, rank is {l}", m.len()));
    }
    Ok(m)
}

/// Selected index, or all of `range` when `--i` is absent.
fn indices(o: &Opts, lo: usize, hi: usize) -> Usage<Vec<usize>> {
    match o.i {
        Some(i) if (lo..=hi).contains(&i) => Ok(vec![i]),
        Some(i) => Err(format!("--i {i} outside {lo}..={hi}")),
        None => Ok((lo..=hi).collect()),
    }
}

fn samples(l: usize, max: u32) -> Vec<FockState> {
    occupations(l, max).into_iter().map(FockState::basis).collect()
}

fn meta(l: usize, o: &Opts, zs: &QRational) -> Value {
    json!({
        "l": l,
        "a": o.a,
        "bar": o.bar,
        "order": o.order,
        "zs": qrational_to_json(zs),
    })
}

fn verify(l: usize, o: &Opts) -> Usage<Outcome> {
    let report = verify_grid(l, o.order, o.mmax, o.bar);
    let mut table = String::new();
    for d in &report.discrepancies {
        let _ = writeln!(
            table,
            "{:<8} a={} i={} m={:?}: {}",
            d.check.name(),
            d.a,
            d.i,
            d.m,
            d.status.name()
        );
    }
    let _ = writeln!(
        table,
        "l={l} bar={} order={} mmax={}: {} checks, {} discrepancies",
        o.bar,
        o.order,
        o.mmax,
        report.checks,
        report.discrepancies.len()
    );
    Ok(Outcome {
        json: json!({
            "meta": {"l": l, "bar": o.bar, "order": o.order, "m_max": o.mmax},
            "checks": report.checks,
            "discrepancies": report.discrepancies.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
        }),
        table,
        ok: report.is_clean(),
    })
}

fn lweight(l: usize, o: &Opts) -> Usage<Outcome> {
    if o.order < 4 {
        return Err("lweight reconstructs degree-(2,2) rational functions: --order must be at least 4".into());
    }
    let zs = parse_zs(&o.zs)?;
    let spec = spec(l, o, zs.clone())?;
    let m = occupation(l, o)?;
    let expected_lambda = closed_lambda(&spec, &m).map_err(|e| e.to_string())?;
    let expected_psi = (1..=l)
        .map(|i| closed_psi(i, &spec, &m))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let mut engine = PhiEngine::new(&spec);
    let mut discrepancies = Vec::new();
    let computed: Option<LWeight> = match engine.lweight(&m, o.order) {
        Ok(lw) => Some(lw),
        Err(e @ (Error::NotDiagonal { .. } | Error::DegreeMismatch { .. })) => {
            discrepancies.push(json!({"check": "psi", "status": format!("error: {e}")}));
            None
        }
        Err(e) => return Err(e.to_string()),
    };
    let mut table = format!("v_{m:?} in {}a={} (zs = {zs})\n", if o.bar { "bar " } else { "" }, o.a);
    let (lambda, psi) = match &computed {
        Some(lw) => {
            if lw.weight() != &expected_lambda {
                discrepancies.push(json!({
                    "check": "weight",
                    "status": "mismatch",
                    "expected": expected_lambda.coeffs(),
                    "computed": lw.weight().coeffs(),
                }));
            }
            for (k, (got, want)) in lw.psi().iter().zip(&expected_psi).enumerate() {
                if got != want {
                    discrepancies.push(json!({
                        "check": "psi",
                        "i": k + 1,
                        "status": "mismatch",
                        "expected": urational_to_json(want),
                        "computed": urational_to_json(got),
                    }));
                }
            }
            let _ = writeln!(table, "lambda = {}", lw.weight());
            for (k, p) in lw.psi().iter().enumerate() {
                let _ = writeln!(table, "psi_{} = {p}", k + 1);
            }
            (
                json!(lw.weight().coeffs()),
                Value::Array(lw.psi().iter().map(urational_to_json).collect()),
            )
        }
        None => (Value::Null, Value::Null),
    };
    let _ = writeln!(table, "{} discrepancies against the closed form", discrepancies.len());
    let mut meta = meta(l, o, &zs);
    meta["m"] = json!(m);
    Ok(Outcome {
        ok: discrepancies.is_empty(),
        json: json!({"meta": meta, "lambda": lambda, "psi": psi, "discrepancies": discrepancies}),
        table,
    })
}

fn serre(l: usize, o: &Opts) -> Usage<Outcome> {
    let spec = spec(l, o, QRational::one())?;
    let samples = samples(l, o.mmax);
    let mut failed = Vec::new();
    let mut pairs = 0;
    for i in indices(o, 0, l)? {
        for j in (0..=l).filter(|&j| j != i) {
            pairs += 1;
            if !serre_check(i, j, &spec, &samples) {
                failed.push(json!({"i": i, "j": j, "status": "mismatch"}));
            }
        }
    }
    let table = format!(
        "{pairs} generator pairs on {} samples, {} failing\n",
        samples.len(),
        failed.len()
    );
    Ok(Outcome {
        ok: failed.is_empty(),
        json: json!({"meta": meta(l, o, spec.zs()), "pairs": pairs, "discrepancies": failed}),
        table,
    })
}

fn drinfeld(l: usize, o: &Opts) -> Usage<Outcome> {
    let spec = spec(l, o, QRational::one())?;
    let samples = samples(l, o.mmax);
    let idx = indices(o, 1, l)?;
    let mut failed = Vec::new();
    let mut relations = 0;
    for &i in &idx {
        for j in 1..=l {
            for n in 1..=o.order {
                for m in 0..=o.order - n {
                    relations += 1;
                    let status = match drinfeld_check(i, j, n, m, &spec, &samples) {
                        Ok(true) => continue,
                        Ok(false) => "mismatch".to_string(),
                        Err(e) => format!("error: {e}"),
                    };
                    failed.push(json!({"i": i, "j": j, "n": n, "m": m, "status": status}));
                }
            }
        }
    }
    let table = format!(
        "{relations} relations with n + m <= {} on {} samples, {} failing\n",
        o.order,
        samples.len(),
        failed.len()
    );
    Ok(Outcome {
        ok: failed.is_empty(),
        json: json!({"meta": meta(l, o, spec.zs()), "relations": relations, "discrepancies": failed}),
        table,
    })
}

fn factor(l: usize, o: &Opts) -> Usage<Outcome> {
    if o.bar {
        return Err("factorization identities are stated for the unreflected family only".into());
    }
    let need_i = || o.i.ok_or_else(|| "--i is required for this --kind".to_string());
    let check = match o.kind {
        FactorKind::OscToPref => {
            spec(l, o, QRational::one())?;
            FactorCheck::OscToPref { a: o.a, zs: parse_zs(&o.zs)? }
        }
        FactorKind::PrefMinus => FactorCheck::PrefMinus { i: need_i()?, zs: parse_zs(&o.zs)? },
        FactorKind::PrefPlus => FactorCheck::PrefPlus { i: need_i()?, zs: parse_zs(&o.zs)? },
        FactorKind::FullTensor => {
            let mut zs = parse_zs_list(&o.zs)?;
            if zs.len() == 1 {
                zs = vec![zs[0].clone(); l + 1];
            }
            FactorCheck::FullTensor { zs }
        }
    };
    let (lhs, rhs) = factor_sides(l, &check).map_err(|e| e.to_string())?;
    let ok = lhs == rhs;
    let side = |w: &LWeight| {
        json!({
            "lambda": w.weight().coeffs(),
            "psi": w.psi().iter().map(urational_to_json).collect::<Vec<_>>(),
        })
    };
    let discrepancies = if ok {
        vec![]
    } else {
        vec![json!({"status": "mismatch", "computed": side(&lhs), "expected": side(&rhs)})]
    };
    let table = format!(
        "{:?} l={l} zs={}\n  representation side: {lhs}\n  factorized side:     {rhs}\n{}\n",
        o.kind,
        o.zs,
        if ok { "agree" } else { "DIFFER" }
    );
    Ok(Outcome {
        ok,
        json: json!({
            "meta": {"l": l, "kind": format!("{:?}", o.kind), "order": o.order, "zs": o.zs},
            "lambda": lhs.weight().coeffs(),
            "psi": lhs.psi().iter().map(urational_to_json).collect::<Vec<_>>(),
            "discrepancies": discrepancies,
        }),
        table,
    })
}

fn dump_op(l: usize, o: &Opts) -> Usage<Outcome> {
    let spec = spec(l, o, QRational::one())?;
    let rep = Representation::new(&spec);
    let mut table = String::new();
    let mut images = Vec::new();
    for i in indices(o, 0, l)? {
        let e = rep.e_word(i).to_string();
        let h = rep.cartan_word(&CartanExponent::h(l, i, 1));
        let _ = writeln!(table, "e_{i}     -> {e}");
        let _ = writeln!(table, "q^h_{i}   -> {h}");
        images.push(json!({"i": i, "e": e, "qh": h.exps}));
    }
    Ok(Outcome {
        ok: true,
        json: json!({"meta": meta(l, o, spec.zs()), "images": images, "discrepancies": []}),
        table,
    })
}
