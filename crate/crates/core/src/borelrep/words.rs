//! Oscillator words: generator images under `rho`, `rho_a` and `rho-bar_a`.
//!
//! Every generator image is a monomial in the oscillators: a scalar times,
//! in each mode, at most one ladder letter followed by a power `q^{k N_j}`.
//! That shape is closed under the index bookkeeping below, so words
//! compare structurally.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{qnum, QRational};
use crate::fock::{qn_exponent, ModeKind, ModePattern, Occupation};

/// Ladder letter in one mode.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Ladder {
    B,
    Bdag,
}

/// `coeff * prod_j ladder_j q^{qpow_j N_j}` over modes `j = 1..=l`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OscWord {
    pub coeff: QRational,
    pub ladders: Vec<Option<Ladder>>,
    pub qpow: Vec<i64>,
}

/// Exponent vector of a diagonal word `q^{sum_j w_j N_j}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanWord {
    pub exps: Vec<i64>,
}

impl CartanWord {
    pub fn identity(l: usize) -> Self {
        CartanWord { exps: vec![0; l] }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn scaled(&self, nu: i64) -> Self {
        CartanWord {
            exps: self.exps.iter().map(|e| e * nu).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CartanWord {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Eigenvalue exponent on the basis vector `v_m`.
    pub fn eigen_exponent(&self, pattern: &ModePattern, m: &[u32]) -> i64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(j, &k)| qn_exponent(pattern.kind(j + 1), k, m[j]))
            .sum()
    }
}

impl OscWord {
    fn new(l: usize, coeff: QRational) -> Self {
        OscWord {
            coeff,
            ladders: vec![None; l],
            qpow: vec![0; l],
        }
    }

    fn ladder(mut self, mode: usize, letter: Ladder) -> Self {
        self.ladders[mode - 1] = Some(letter);
        self
    }

    fn q_n(mut self, mode: usize, k: i64) -> Self {
        self.qpow[mode - 1] += k;
        self
    }

    pub fn rank(&self) -> usize {
        self.ladders.len()
    }

    /// Act on `c * v_m`; `None` if the result vanishes.
    pub fn apply_term(
        &self,
        pattern: &ModePattern,
        m: &Occupation,
        c: &QRational,
    ) -> Option<(Occupation, QRational)> {
        let mut out = m.clone();
        let mut exponent = 0i64;
        let mut factor = QRational::one();
        for j in 0..self.ladders.len() {
            let kind = pattern.kind(j + 1);
            let mj = m[j];
            exponent += qn_exponent(kind, self.qpow[j], mj);
            match (self.ladders[j], kind) {
                (None, _) => {}
                (Some(Ladder::Bdag), ModeKind::Plus) | (Some(Ladder::B), ModeKind::Minus) => {
                    out[j] = mj + 1;
                }
                (Some(Ladder::B), ModeKind::Plus) => {
                    if mj == 0 {
                        return None;
                    }
                    factor = &factor * &qnum(mj as i64);
                    out[j] = mj - 1;
                }
                (Some(Ladder::Bdag), ModeKind::Minus) => {
                    if mj == 0 {
                        return None;
                    }
                    factor = &factor * &(-qnum(mj as i64));
                    out[j] = mj - 1;
                }
            }
        }
        let coeff = c * &self.coeff * factor * QRational::q_pow(exponent);
        Some((out, coeff))
    }
}

impl fmt::Display for OscWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        for (j, l) in self.ladders.iter().enumerate() {
            match l {
                Some(Ladder::B) => write!(f, " b_{}", j + 1)?,
                Some(Ladder::Bdag) => write!(f, " bdag_{}", j + 1)?,
                None => {}
            }
        }
        let cw = CartanWord {
            exps: self.qpow.clone(),
        };
        if !cw.is_identity() {
            write!(f, " {cw}")?;
        }
        Ok(())
    }
}

impl fmt::Display for CartanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(j, &k)| match k {
                1 => format!("N_{}", j + 1),
                -1 => format!("-N_{}", j + 1),
                _ => format!("{k}*N_{}", j + 1),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "q^({})", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

fn kappa_inv() -> QRational {
    QRational::kappa().inv().expect("kappa is nonzero")
}

fn check_index(l: usize, i: usize) -> Result<()> {
    if i > l {
        return Err(Error::IndexOutOfRange { index: i, l });
    }
    Ok(())
}

fn check_a(l: usize, a: usize) -> Result<()> {
    if a == 0 || a > l + 1 {
        return Err(Error::InvalidSpec(format!("a = {a} outside 1..={}", l + 1)));
    }
    Ok(())
}

/// `b^dag_1 q^{N_2 + ... + N_l}`.
fn word_raise_first(l: usize) -> OscWord {
    (2..=l).fold(
        OscWord::new(l, QRational::one()).ladder(1, Ladder::Bdag),
        |w, j| w.q_n(j, 1),
    )
}

/// `-kappa^{-1} b_l q^{N_l}`.
fn word_lower_last(l: usize) -> OscWord {
    OscWord::new(l, -kappa_inv())
        .ladder(l, Ladder::B)
        .q_n(l, 1)
}

/// `-b_j b^dag_{j+1} q^{N_j - N_{j+1} - 1}`.
fn word_hop(l: usize, j: usize) -> OscWord {
    OscWord::new(l, -QRational::q_pow(-1))
        .ladder(j, Ladder::B)
        .ladder(j + 1, Ladder::Bdag)
        .q_n(j, 1)
        .q_n(j + 1, -1)
}

/// `2 N_1 + N_2 + ... + N_l`.
fn cartan_first(l: usize) -> CartanWord {
    let mut exps = vec![1; l];
    exps[0] = 2;
    CartanWord { exps }
}

/// `-(2 N_l + N_1 + ... + N_{l-1})`.
fn cartan_last(l: usize) -> CartanWord {
    let mut exps = vec![-1; l];
    exps[l - 1] = -2;
    CartanWord { exps }
}

/// `N_hi - N_lo`.
fn cartan_diff(l: usize, hi: usize, lo: usize) -> CartanWord {
    let mut exps = vec![0; l];
    exps[hi - 1] += 1;
    exps[lo - 1] -= 1;
    CartanWord { exps }
}

/// Base homomorphism `rho` on `e_i`, `i in 0..=l`.
pub fn base_image_e(l: usize, i: usize) -> Result<OscWord> {
    check_index(l, i)?;
    Ok(match i {
        0 => word_raise_first(l),
        _ if i == l => word_lower_last(l),
        _ => word_hop(l, i),
    })
}

/// Base homomorphism `rho` on `q^{h_i}`.
pub fn base_image_h(l: usize, i: usize) -> Result<CartanWord> {
    check_index(l, i)?;
    Ok(match i {
        0 => cartan_first(l),
        _ if i == l => cartan_last(l),
        _ => cartan_diff(l, i + 1, i),
    })
}

/// `sigma^k` on an index of the extended Dynkin diagram.
pub fn sigma_pow(l: usize, i: usize, k: i64) -> usize {
    let n = (l + 1) as i64;
    (i as i64 + k).rem_euclid(n) as usize
}

/// Diagram reflection `tau`, fixing `0`.
pub fn tau(l: usize, i: usize) -> usize {
    if i == 0 {
        0
    } else {
        l - i + 1
    }
}

/// Index `k` with `rho_a(e_i) = rho(e_k)` (or `rho-bar_a`), from
/// `rho_a = rho . sigma^{-a}` and `rho-bar_a = rho . tau . sigma^{-a+1}`.
pub fn composed_index(l: usize, a: usize, bar: bool, i: usize) -> usize {
    if bar {
        tau(l, sigma_pow(l, i, 1 - a as i64))
    } else {
        sigma_pow(l, i, -(a as i64))
    }
}

/// `rho_a(e_i)` / `rho-bar_a(e_i)` through the composition definition.
pub fn composed_image_e(l: usize, a: usize, bar: bool, i: usize) -> Result<OscWord> {
    check_a(l, a)?;
    check_index(l, i)?;
    base_image_e(l, composed_index(l, a, bar, i))
}

pub fn composed_image_h(l: usize, a: usize, bar: bool, i: usize) -> Result<CartanWord> {
    check_a(l, a)?;
    check_index(l, i)?;
    base_image_h(l, composed_index(l, a, bar, i))
}

/// Position of `i` relative to `a` in the explicit image tables.
enum Slot {
    BeforeA,
    AMinusOne,
    A,
    /// `i` lies in `a+1, ..., l+a-1` (mod `l+1`); the payload is the
    /// representative in that range.
    Other(usize),
}

fn slot(l: usize, a: usize, i: usize) -> Slot {
    let n = l + 1;
    if i % n == (a + n - 1) % n {
        Slot::AMinusOne
    } else if i % n == a % n {
        Slot::A
    } else if i > a {
        Slot::Other(i)
    } else if i + n > a && i + n < l + a {
        Slot::Other(i + n)
    } else {
        Slot::BeforeA
    }
}

/// `rho_a(e_i)` from its explicit table.
fn explicit_rho_e(l: usize, a: usize, i: usize) -> OscWord {
    match slot(l, a, i) {
        Slot::AMinusOne => word_lower_last(l),
        Slot::A => word_raise_first(l),
        Slot::Other(r) => word_hop(l, r - a),
        Slot::BeforeA => unreachable!("every index is covered modulo l+1"),
    }
}

fn explicit_rho_h(l: usize, a: usize, i: usize) -> CartanWord {
    match slot(l, a, i) {
        Slot::AMinusOne => cartan_last(l),
        Slot::A => cartan_first(l),
        Slot::Other(r) => cartan_diff(l, r - a + 1, r - a),
        Slot::BeforeA => unreachable!("every index is covered modulo l+1"),
    }
}

/// `rho-bar_a(e_i)` from its explicit table, `i in 0..=l`.
fn explicit_rho_bar_e(l: usize, a: usize, i: usize) -> OscWord {
    let n = l + 1;
    if i == (a - 1) % n {
        word_raise_first(l)
    } else if i == a % n {
        word_lower_last(l)
    } else if i + 2 <= a {
        word_hop(l, a - i - 1)
    } else {
        word_hop(l, l + a - i)
    }
}

fn explicit_rho_bar_h(l: usize, a: usize, i: usize) -> CartanWord {
    let n = l + 1;
    if i == (a - 1) % n {
        cartan_first(l)
    } else if i == a % n {
        cartan_last(l)
    } else if i + 2 <= a {
        cartan_diff(l, a - i, a - i - 1)
    } else {
        cartan_diff(l, l + a - i + 1, l + a - i)
    }
}

/// Explicit image of `e_i` under `rho_a` (`bar = false`) or `rho-bar_a`.
pub fn explicit_image_e(l: usize, a: usize, bar: bool, i: usize) -> Result<OscWord> {
    check_a(l, a)?;
    check_index(l, i)?;
    Ok(if bar {
        explicit_rho_bar_e(l, a, i)
    } else {
        explicit_rho_e(l, a, i)
    })
}

/// Explicit image of `q^{h_i}` under `rho_a` or `rho-bar_a`.
pub fn explicit_image_h(l: usize, a: usize, bar: bool, i: usize) -> Result<CartanWord> {
    check_a(l, a)?;
    check_index(l, i)?;
    Ok(if bar {
        explicit_rho_bar_h(l, a, i)
    } else {
        explicit_rho_h(l, a, i)
    })
}
