use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{QRational, URational};

/// Weight in fundamental-weight coordinates: `omega_coeffs[j-1] = <lambda, h_j>`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    omega_coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(omega_coeffs: Vec<i64>) -> Self {
        Weight { omega_coeffs }
    }

    pub fn zero(l: usize) -> Self {
        Self::new(vec![0; l])
    }

    /// Fundamental weight `omega_i`, `1 <= i <= l`.
    pub fn omega(l: usize, i: usize) -> Self {
        let mut c = vec![0; l];
        c[i - 1] = 1;
        Self::new(c)
    }

    pub fn rank(&self) -> usize {
        self.omega_coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.omega_coeffs
    }

    /// `<lambda, h_j>`, `1 <= j <= l`.
    pub fn pair(&self, j: usize) -> i64 {
        self.omega_coeffs[j - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Self::new(
            self.omega_coeffs
                .iter()
                .zip(&other.omega_coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self::new(self.omega_coeffs.iter().map(|c| c * k).collect())
    }

    /// `iota(omega_i) = omega_{l-i+1}`.
    pub fn reflect(&self) -> Self {
        Self::new(self.omega_coeffs.iter().rev().copied().collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .omega_coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| format!("{c}*w{}", i + 1))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// An l-weight: a weight together with one rational function per node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LWeight {
    weight: Weight,
    psi: Vec<URational>,
}

impl LWeight {
    /// Checks `psi_i(0) = q^{<lambda, h_i>}`.
    pub fn new(weight: Weight, psi: Vec<URational>) -> Result<Self> {
        if weight.rank() != psi.len() {
            return Err(Error::RankMismatch(weight.rank(), psi.len()));
        }
        for (j, p) in psi.iter().enumerate() {
            if p.constant_term() != QRational::q_pow(weight.pair(j + 1)) {
                return Err(Error::InvalidSpec(format!(
                    "psi_{} has constant term {}, weight demands q^{}",
                    j + 1,
                    p.constant_term(),
                    weight.pair(j + 1)
                )));
            }
        }
        Ok(LWeight { weight, psi })
    }

    /// The l-weight of the trivial one-dimensional module.
    pub fn trivial(l: usize) -> Self {
        LWeight {
            weight: Weight::zero(l),
            psi: vec![URational::one(); l],
        }
    }

    pub fn rank(&self) -> usize {
        self.weight.rank()
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn psi(&self) -> &[URational] {
        &self.psi
    }

    /// `psi_i`, `1 <= i <= l`.
    pub fn psi_at(&self, i: usize) -> &URational {
        &self.psi[i - 1]
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda = {}", self.weight)?;
        for (i, p) in self.psi.iter().enumerate() {
            write!(f, "; psi_{} = {}", i + 1, p)?;
        }
        Ok(())
    }
}

/// `L+-_{i,x}`: `(1 - x u)^{+-1}` in slot `i`, ones elsewhere, weight zero.
pub fn prefundamental(l: usize, i: usize, plus: bool, x: &QRational) -> Result<LWeight> {
    if x.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if i == 0 || i > l {
        return Err(Error::IndexOutOfRange { index: i, l });
    }
    let mut psi = vec![URational::one(); l];
    psi[i - 1] = URational::one_minus_pow(x.clone(), !plus);
    LWeight::new(Weight::zero(l), psi)
}

/// The shift module `L_xi`: constants `q^{<xi, h_i>}`.
pub fn shift_weight(xi: &Weight) -> LWeight {
    let psi = xi
        .coeffs()
        .iter()
        .map(|&c| URational::constant(QRational::q_pow(c)))
        .collect();
    LWeight {
        weight: xi.clone(),
        psi,
    }
}

/// Componentwise product of rational functions, sum of weights.
pub fn lweight_product(x: &LWeight, y: &LWeight) -> Result<LWeight> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    Ok(LWeight {
        weight: x.weight.add(&y.weight),
        psi: x.psi.iter().zip(&y.psi).map(|(a, b)| a.mul(b)).collect(),
    })
}
