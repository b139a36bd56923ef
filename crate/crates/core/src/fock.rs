//! Sparse states in the `l`-fold tensor product of q-oscillator Fock
//! modules, with the two module structures `chi+` and `chi-`.
//!
//! | op        | `chi+` on `v_m`   | `chi-` on `v_m`        |
//! |-----------|-------------------|------------------------|
//! | `b^dag`   | `v_{m+1}`         | `-[m]_q v_{m-1}`       |
//! | `b`       | `[m]_q v_{m-1}`   | `v_{m+1}`              |
//! | `q^{kN}`  | `q^{km} v_m`      | `q^{-k(m+1)} v_m`      |
//!
//! with `v_{-1} = 0`. Modes are numbered from 1, little-endian.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{qnum, QRational};

/// Which oscillator module a tensor factor carries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ModeKind {
    Plus,
    Minus,
}

/// Module assignment for each of the `l` tensor factors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModePattern {
    kinds: Vec<ModeKind>,
}

impl ModePattern {
    pub fn new(kinds: Vec<ModeKind>) -> Self {
        ModePattern { kinds }
    }

    /// Pattern for `theta_a`: `l - a + 1` minus modes, then `a - 1` plus modes.
    pub fn theta(l: usize, a: usize) -> Result<Self> {
        if a == 0 || a > l + 1 {
            return Err(Error::IndexOutOfRange { index: a, l });
        }
        let minus = l + 1 - a;
        Ok(Self::new(
            (0..l)
                .map(|k| if k < minus { ModeKind::Minus } else { ModeKind::Plus })
                .collect(),
        ))
    }

    /// Pattern for `theta-bar_a`: `a - 1` minus modes, then `l - a + 1` plus modes.
    pub fn theta_bar(l: usize, a: usize) -> Result<Self> {
        if a == 0 || a > l + 1 {
            return Err(Error::IndexOutOfRange { index: a, l });
        }
        Self::theta(l, l + 2 - a)
    }

    pub fn rank(&self) -> usize {
        self.kinds.len()
    }

    /// Kind of mode `j`, 1-based.
    pub fn kind(&self, j: usize) -> ModeKind {
        self.kinds[j - 1]
    }

    pub fn kinds(&self) -> &[ModeKind] {
        &self.kinds
    }
}

/// Single-mode oscillator letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ModeOp {
    B,
    Bdag,
    /// `q^{k N}`.
    QN(i64),
}

/// Occupation vector `m = (m_1, ..., m_l)`.
pub type Occupation = Vec<u32>;

/// Action of one letter on `v_m` in a single mode: the new occupation and
/// coefficient, or `None` when the result vanishes.
pub fn single_mode_action(op: ModeOp, kind: ModeKind, m: u32) -> Option<(u32, QRational)> {
    let mi = m as i64;
    match (kind, op) {
        (ModeKind::Plus, ModeOp::Bdag) | (ModeKind::Minus, ModeOp::B) => {
            Some((m + 1, QRational::one()))
        }
        (ModeKind::Plus, ModeOp::B) => (m > 0).then(|| (m - 1, qnum(mi))),
        (ModeKind::Minus, ModeOp::Bdag) => (m > 0).then(|| (m - 1, -qnum(mi))),
        (ModeKind::Plus, ModeOp::QN(k)) => Some((m, QRational::q_pow(k * mi))),
        (ModeKind::Minus, ModeOp::QN(k)) => Some((m, QRational::q_pow(-k * (mi + 1)))),
    }
}

/// Exponent `e` with `q^{kN} v_m = q^{e} v_m`.
pub fn qn_exponent(kind: ModeKind, k: i64, m: u32) -> i64 {
    match kind {
        ModeKind::Plus => k * m as i64,
        ModeKind::Minus => -k * (m as i64 + 1),
    }
}

/// Finite exact linear combination of occupation basis vectors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockState {
    terms: BTreeMap<Occupation, QRational>,
}

impl FockState {
    pub fn zero() -> Self {
        FockState {
            terms: BTreeMap::new(),
        }
    }

    /// Unit vector at occupation `m`.
    pub fn basis(m: Occupation) -> Self {
        Self::term(m, QRational::one())
    }

    pub fn vacuum(l: usize) -> Self {
        Self::basis(vec![0; l])
    }

    pub fn term(m: Occupation, c: QRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        FockState { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Occupation, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> QRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Add `c * v_m` in place.
    pub fn add_term(&mut self, m: Occupation, c: QRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        big.add_assign(small);
        big
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        FockState {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QRational::from_int(-1)))
    }

    /// If the state is `c * v_m` for the given `m` (or zero), returns `c`.
    pub fn coefficient_if_multiple_of(&self, m: &[u32]) -> Option<QRational> {
        match self.terms.len() {
            0 => Some(QRational::zero()),
            1 => self.terms.get(m).cloned(),
            _ => None,
        }
    }

    /// Apply a single-mode letter on mode `mode` (1-based) under `pattern`.
    pub fn apply_mode(&self, op: ModeOp, mode: usize, pattern: &ModePattern) -> Self {
        let kind = pattern.kind(mode);
        let mut out = FockState::zero();
        for (m, c) in &self.terms {
            if let Some((new_occ, factor)) = single_mode_action(op, kind, m[mode - 1]) {
                let mut m2 = m.clone();
                m2[mode - 1] = new_occ;
                out.add_term(m2, c * &factor);
            }
        }
        out
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let occ: Vec<String> = m.iter().map(u32::to_string).collect();
            write!(f, "({c}) v[{}]", occ.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockState({self})")
    }
}

/// Basis vector `v^{(a)}_m` (or `v-bar^{(a)}_m` when `bar`).
///
/// The creation word `b_1^{m_1} ... b^dag_l^{m_l}` acting on the vacuum
/// gives exactly the unit vector at `m`: `b` raises in `chi-` modes and
/// `b^dag` raises in `chi+` modes, each with coefficient one. In
/// particular `v-bar^{(a)}_m = v^{(l-a+2)}_m`.
pub fn basis_vector(l: usize, a: usize, bar: bool, m: &[u32]) -> Result<FockState> {
    if m.len() != l {
        return Err(Error::RankMismatch(m.len(), l));
    }
    if bar {
        ModePattern::theta_bar(l, a)?;
    } else {
        ModePattern::theta(l, a)?;
    }
    Ok(FockState::basis(m.to_vec()))
}

/// All occupation vectors of length `l` with entries `<= max`, in
/// lexicographic order.
pub fn occupations(l: usize, max: u32) -> Vec<Occupation> {
    let mut out = vec![Vec::with_capacity(l)];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=max).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}
