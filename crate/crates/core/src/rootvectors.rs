//! Cartan-Weyl root vectors of the positive Borel subalgebra, built as
//! iterated q-commutators of the generators.
//!
//! For a positive root `gamma = alpha_{ij}` of `sl_{l+1}`:
//!
//! * `e_{alpha_ij} = [e_{alpha_i}, [ ... [e_{alpha_{j-2}}, e_{alpha_{j-1}}]_q ... ]_q`
//! * `e_{delta - theta} = e_0`, and `e_{delta - alpha_ij}` strips simple
//!   roots from `theta`, first on the right, then on the left
//! * `e'_{delta,gamma} = [e_gamma, e_{delta-gamma}]_q`
//! * `e_{gamma + n delta} = [2]_q^{-1} [e_{gamma+(n-1)delta}, e'_{delta,gamma}]_q`
//! * `e_{(delta-gamma) + n delta} = [2]_q^{-1} [e'_{delta,gamma}, e_{(delta-gamma)+(n-1)delta}]_q`
//! * `e'_{n delta,gamma} = [e_{gamma+(n-1)delta}, e_{delta-gamma}]_q`
//!
//! Unprimed imaginary vectors come from `-kappa e(u) = log(1 - kappa e'(u))`.
//!
//! A [`RootVectors`] builder memoizes every vector so shared subtrees are
//! the same node, which is what makes cached evaluation cheap.

use std::collections::HashMap;

use crate::borelrep::{OpExpr, RepSpec, Representation};
use crate::error::{Error, Result};
use crate::exactfield::{qnum, QRational};
use crate::fock::FockState;
use crate::rootsys::{cartan_entry, o_sign, RootIndex};

/// `[x, y]_q = x y - q^{-(rx|ry)} y x`.
pub fn qcomm(x: &OpExpr, rx: &RootIndex, y: &OpExpr, ry: &RootIndex) -> Result<OpExpr> {
    let b = rx.bilinear(ry)?;
    Ok(OpExpr::sum(vec![
        OpExpr::compose(x.clone(), y.clone()),
        OpExpr::scale(-QRational::q_pow(-b), OpExpr::compose(y.clone(), x.clone())),
    ]))
}

/// Plain commutator `x y - y x`.
pub fn comm(x: &OpExpr, y: &OpExpr) -> OpExpr {
    OpExpr::compose(x.clone(), y.clone()).sub(&OpExpr::compose(y.clone(), x.clone()))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Key {
    Alpha(usize, usize),
    DeltaMinus(usize, usize),
    Real(usize, usize, usize),
    Dual(usize, usize, usize),
    Prime(usize, usize, usize),
    Unprimed(usize, usize),
}

/// Memoizing constructor of root vectors for rank `l`.
pub struct RootVectors {
    l: usize,
    memo: HashMap<Key, OpExpr>,
}

impl RootVectors {
    pub fn new(l: usize) -> Self {
        RootVectors {
            l,
            memo: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i >= j || j > self.l + 1 {
            return Err(Error::InvalidRoot(format!(
                "alpha_{{{i},{j}}} is not a positive root of sl_{}",
                self.l + 1
            )));
        }
        Ok(())
    }

    fn memo(&mut self, key: Key, build: impl FnOnce(&mut Self) -> Result<OpExpr>) -> Result<OpExpr> {
        if let Some(e) = self.memo.get(&key) {
            return Ok(e.clone());
        }
        let e = build(self)?;
        self.memo.insert(key, e.clone());
        Ok(e)
    }

    fn alpha(&self, i: usize, j: usize) -> RootIndex {
        RootIndex::alpha(self.l, i, j).expect("checked range")
    }

    fn delta_minus(&self, i: usize, j: usize) -> RootIndex {
        RootIndex::delta(self.l) - self.alpha(i, j)
    }

    /// `e_{alpha_ij}`.
    pub fn e_alpha(&mut self, i: usize, j: usize) -> Result<OpExpr> {
        self.check(i, j)?;
        self.memo(Key::Alpha(i, j), |rv| {
            if j == i + 1 {
                return Ok(OpExpr::gen(i));
            }
            let inner = rv.e_alpha(i + 1, j)?;
            qcomm(&OpExpr::gen(i), &rv.alpha(i, i + 1), &inner, &rv.alpha(i + 1, j))
        })
    }

    /// `e_{delta - alpha_ij}`.
    pub fn e_delta_minus(&mut self, i: usize, j: usize) -> Result<OpExpr> {
        self.check(i, j)?;
        let l = self.l;
        self.memo(Key::DeltaMinus(i, j), |rv| {
            if i == 1 && j == l + 1 {
                return Ok(OpExpr::gen(0));
            }
            if i > 1 {
                let inner = rv.e_delta_minus(i - 1, j)?;
                qcomm(
                    &OpExpr::gen(i - 1),
                    &rv.alpha(i - 1, i),
                    &inner,
                    &rv.delta_minus(i - 1, j),
                )
            } else {
                let inner = rv.e_delta_minus(1, j + 1)?;
                qcomm(
                    &OpExpr::gen(j),
                    &rv.alpha(j, j + 1),
                    &inner,
                    &rv.delta_minus(1, j + 1),
                )
            }
        })
    }

    /// `e_{alpha_ij + n delta}`.
    pub fn e_real(&mut self, i: usize, j: usize, n: usize) -> Result<OpExpr> {
        self.check(i, j)?;
        if n == 0 {
            return self.e_alpha(i, j);
        }
        self.memo(Key::Real(i, j, n), |rv| {
            let prev = rv.e_real(i, j, n - 1)?;
            let ep = rv.e_prime_imag(i, j, 1)?;
            let r_prev = RootIndex::real(rv.l, i, j, n - 1)?;
            let c = qcomm(&prev, &r_prev, &ep, &RootIndex::delta(rv.l))?;
            Ok(OpExpr::scale(qnum(2).inv()?, c))
        })
    }

    /// `e_{(delta - alpha_ij) + n delta}`.
    pub fn e_real_dual(&mut self, i: usize, j: usize, n: usize) -> Result<OpExpr> {
        self.check(i, j)?;
        if n == 0 {
            return self.e_delta_minus(i, j);
        }
        self.memo(Key::Dual(i, j, n), |rv| {
            let prev = rv.e_real_dual(i, j, n - 1)?;
            let ep = rv.e_prime_imag(i, j, 1)?;
            let r_prev = RootIndex::dual_real(rv.l, i, j, n - 1)?;
            let c = qcomm(&ep, &RootIndex::delta(rv.l), &prev, &r_prev)?;
            Ok(OpExpr::scale(qnum(2).inv()?, c))
        })
    }

    /// `e'_{n delta, alpha_ij}`, `n >= 1`.
    pub fn e_prime_imag(&mut self, i: usize, j: usize, n: usize) -> Result<OpExpr> {
        self.check(i, j)?;
        if n == 0 {
            return Err(Error::InvalidRoot("imaginary root 0 * delta".into()));
        }
        self.memo(Key::Prime(i, j, n), |rv| {
            let prev = rv.e_real(i, j, n - 1)?;
            let dm = rv.e_delta_minus(i, j)?;
            let r_prev = RootIndex::real(rv.l, i, j, n - 1)?;
            qcomm(&prev, &r_prev, &dm, &rv.delta_minus(i, j))
        })
    }

    /// `e_{n delta, alpha_i}`: coefficient of `u^n` in
    /// `sum_k kappa^{k-1}/k e'(u)^k`, products taken over ordered
    /// compositions of `n`.
    pub fn e_unprimed_imag(&mut self, i: usize, n: usize) -> Result<OpExpr> {
        self.check(i, i + 1)?;
        if n == 0 {
            return Err(Error::InvalidRoot("imaginary root 0 * delta".into()));
        }
        self.memo(Key::Unprimed(i, n), |rv| {
            let primes: Vec<OpExpr> = (1..=n)
                .map(|k| rv.e_prime_imag(i, i + 1, k))
                .collect::<Result<_>>()?;
            let kappa = QRational::kappa();
            let mut terms = Vec::new();
            for comp in compositions(n) {
                let k = comp.len() as i64;
                let c = kappa.pow(k - 1)? * QRational::from_ratio(1, k)?;
                let word = comp[1..]
                    .iter()
                    .fold(primes[comp[0] - 1].clone(), |acc, &p| {
                        OpExpr::compose(acc, primes[p - 1].clone())
                    });
                terms.push(OpExpr::scale(c, word));
            }
            Ok(OpExpr::sum(terms))
        })
    }

    /// Image of the Drinfeld generator `xi+_{i,n} = (-1)^n o_i^n e_{alpha_i + n delta}`.
    pub fn xi_plus(&mut self, i: usize, n: usize) -> Result<OpExpr> {
        let sign = sign_pow(-o_sign(self.l, i)?, n);
        Ok(OpExpr::scale(QRational::from_int(sign), self.e_real(i, i + 1, n)?))
    }

    /// Image of `chi_{i,n} = (-1)^{n+1} o_i^n e_{n delta, alpha_i}`, `n >= 1`.
    pub fn chi(&mut self, i: usize, n: usize) -> Result<OpExpr> {
        let sign = -sign_pow(-o_sign(self.l, i)?, n);
        Ok(OpExpr::scale(QRational::from_int(sign), self.e_unprimed_imag(i, n)?))
    }
}

fn sign_pow(s: i64, n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        s
    }
}

/// Ordered compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `[chi_{i,n}, xi+_{j,m}] - (1/n) [n a_ij]_q xi+_{j,n+m}` annihilates
/// every sample.
pub fn drinfeld_check(
    i: usize,
    j: usize,
    n: usize,
    m: usize,
    spec: &RepSpec,
    samples: &[FockState],
) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidRoot("Drinfeld check needs n >= 1".into()));
    }
    let l = spec.l();
    let mut rv = RootVectors::new(l);
    let lhs = comm(&rv.chi(i, n)?, &rv.xi_plus(j, m)?);
    let c = qnum(n as i64 * cartan_entry(l, i, j)) * QRational::from_ratio(1, n as i64)?;
    let rhs = OpExpr::scale(c, rv.xi_plus(j, n + m)?);
    let rel = lhs.sub(&rhs);
    let rep = Representation::new(spec);
    let mut ev = rep.evaluator();
    Ok(samples.iter().all(|s| ev.apply(&rel, s).is_zero()))
}
