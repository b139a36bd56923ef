//! Highest l-weights of the oscillator representations as products of
//! prefundamental and shift l-weights, and the reversed relations.
//!
//! The overlined tensor product only ever appears through l-weight
//! products here, so each identity compares two [`LWeight`]s.

use crate::borelrep::RepSpec;
use crate::error::{Error, Result};
use crate::exactfield::{QRational, URational};

use super::closed::{xi_minus, xi_plus, xi_shift};
use super::extract::computed_lweight;
use super::weight::{lweight_product, prefundamental, shift_weight, LWeight, Weight};

/// Which identity to check. Spectral values are `zeta^s` substitutes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorCheck {
    /// `theta_a` at `zs` against shifted prefundamentals.
    OscToPref { a: usize, zs: QRational },
    /// `L_{xi-_i} (x) L-_{i,zs}` against `theta_1 ... theta_i`.
    PrefMinus { i: usize, zs: QRational },
    /// `L_{xi+_i} (x) L+_{i,zs}` against `theta_{i+1} ... theta_{l+1}`.
    PrefPlus { i: usize, zs: QRational },
    /// `theta_1 (x) ... (x) theta_{l+1}` at the given `l + 1` values.
    FullTensor { zs: Vec<QRational> },
}

/// Series order used to reconstruct computed l-weights.
pub const FACTOR_ORDER: usize = 6;

fn highest(l: usize, a: usize, zs: QRational) -> Result<LWeight> {
    let spec = RepSpec::with_zs(l, a, false, zs)?;
    computed_lweight(&spec, &vec![0; l], FACTOR_ORDER)
}

fn product(factors: Vec<LWeight>, l: usize) -> Result<LWeight> {
    factors
        .iter()
        .try_fold(LWeight::trivial(l), |acc, f| lweight_product(&acc, f))
}

/// Spectral value of the `a`-th factor in the reversed relations.
fn reversed_zs(l: usize, i: usize, a: usize, zs: &QRational) -> QRational {
    QRational::q_pow(l as i64 + i as i64 + 1 - 2 * a as i64) * zs
}

fn check_i(l: usize, i: usize) -> Result<()> {
    if i == 0 || i > l {
        return Err(Error::IndexOutOfRange { index: i, l });
    }
    Ok(())
}

/// Both sides of the identity: `(representation side, prefundamental side)`.
pub fn factor_sides(l: usize, check: &FactorCheck) -> Result<(LWeight, LWeight)> {
    match check {
        FactorCheck::OscToPref { a, zs } => {
            let a = *a;
            let computed = highest(l, a, zs.clone())?;
            let q = QRational::q_pow;
            let expected = if a == 1 {
                lweight_product(
                    &shift_weight(&xi_shift(l, 1)),
                    &prefundamental(l, 1, false, &(q(-(l as i64)) * zs))?,
                )?
            } else if a == l + 1 {
                prefundamental(l, l, true, &(q(1) * zs))?
            } else {
                let a_ = a as i64;
                let l_ = l as i64;
                product(
                    vec![
                        shift_weight(&xi_shift(l, a)),
                        prefundamental(l, a - 1, true, &(q(-l_ + a_) * zs))?,
                        prefundamental(l, a, false, &(q(-l_ + a_ - 1) * zs))?,
                    ],
                    l,
                )?
            };
            Ok((computed, expected))
        }
        FactorCheck::PrefMinus { i, zs } => {
            check_i(l, *i)?;
            let factors = (1..=*i)
                .map(|a| highest(l, a, reversed_zs(l, *i, a, zs)))
                .collect::<Result<Vec<_>>>()?;
            let expected = lweight_product(
                &shift_weight(&xi_minus(l, *i)),
                &prefundamental(l, *i, false, zs)?,
            )?;
            Ok((product(factors, l)?, expected))
        }
        FactorCheck::PrefPlus { i, zs } => {
            check_i(l, *i)?;
            let factors = (*i + 1..=l + 1)
                .map(|a| highest(l, a, reversed_zs(l, *i, a, zs)))
                .collect::<Result<Vec<_>>>()?;
            let expected = lweight_product(
                &shift_weight(&xi_plus(l, *i)),
                &prefundamental(l, *i, true, zs)?,
            )?;
            Ok((product(factors, l)?, expected))
        }
        FactorCheck::FullTensor { zs } => {
            if zs.len() != l + 1 {
                return Err(Error::RankMismatch(zs.len(), l + 1));
            }
            let factors = (1..=l + 1)
                .map(|a| highest(l, a, zs[a - 1].clone()))
                .collect::<Result<Vec<_>>>()?;
            let psi = (1..=l)
                .map(|i| {
                    let shift = |e: i64| QRational::q_pow(e - l as i64);
                    let num = URational::one_minus_pow(shift(i as i64 + 1) * &zs[i], false);
                    let den = URational::one_minus_pow(shift(i as i64 - 1) * &zs[i - 1], true);
                    num.mul(&den).scale(&QRational::q_pow(-2))
                })
                .collect();
            let expected = LWeight::new(Weight::new(vec![-2; l]), psi)?;
            Ok((product(factors, l)?, expected))
        }
    }
}

/// `true` iff both sides agree exactly.
pub fn factor_check(l: usize, check: &FactorCheck) -> Result<bool> {
    let (lhs, rhs) = factor_sides(l, check)?;
    Ok(lhs == rhs)
}
