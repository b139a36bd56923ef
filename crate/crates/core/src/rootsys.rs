//! Affine root data of type `A_l^{(1)}`.
//!
//! Roots live in the simple-root basis `(alpha_0, ..., alpha_l)`; the
//! shapes `alpha_ij + n delta`, `(delta - alpha_ij) + n delta` and `n delta`
//! are recovered by [`RootIndex::classify`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Entry `a_ij` of the extended Cartan matrix of `sl_{l+1}`, indices in `0..=l`.
pub fn cartan_entry(l: usize, i: usize, j: usize) -> i64 {
    assert!(i <= l && j <= l, "Cartan index out of range");
    if i == j {
        return 2;
    }
    if l == 1 {
        return -2;
    }
    let n = l + 1;
    if (i + 1) % n == j || (j + 1) % n == i {
        -1
    } else {
        0
    }
}

/// Entry `a_ij` of the finite Cartan matrix of `sl_{l+1}`, indices in `1..=l`.
pub fn finite_cartan_entry(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// The sign `o_i = -(-1)^i`, alternating along the Dynkin diagram.
pub fn o_sign(l: usize, i: usize) -> Result<i64> {
    if i == 0 || i > l {
        return Err(Error::IndexOutOfRange { index: i, l });
    }
    Ok(if i % 2 == 1 { 1 } else { -1 })
}

/// An element of the affine root lattice.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootIndex {
    l: usize,
    coeffs: Vec<i64>,
}

/// Shape of a lattice element relative to the positive roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RootClass {
    /// `alpha_ij + n delta`, `1 <= i < j <= l + 1`.
    Real { i: usize, j: usize, n: usize },
    /// `(delta - alpha_ij) + n delta`.
    DualReal { i: usize, j: usize, n: usize },
    /// `n delta`, `n >= 1`.
    Imaginary { n: usize },
    NotPositive,
}

impl RootIndex {
    pub fn from_coeffs(l: usize, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), l + 1, "root needs l+1 coordinates");
        RootIndex { l, coeffs }
    }

    pub fn zero(l: usize) -> Self {
        Self::from_coeffs(l, vec![0; l + 1])
    }

    /// Simple root `alpha_i`, `i in 0..=l`.
    pub fn simple(l: usize, i: usize) -> Self {
        let mut c = vec![0; l + 1];
        c[i] = 1;
        Self::from_coeffs(l, c)
    }

    pub fn delta(l: usize) -> Self {
        Self::from_coeffs(l, vec![1; l + 1])
    }

    /// `alpha_ij = alpha_i + ... + alpha_{j-1}`.
    pub fn alpha(l: usize, i: usize, j: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= l + 1) {
            return Err(Error::InvalidRoot(format!("alpha_{{{i},{j}}} for l = {l}")));
        }
        let mut c = vec![0; l + 1];
        for k in i..j {
            c[k] = 1;
        }
        Ok(Self::from_coeffs(l, c))
    }

    /// `alpha_ij + n delta`.
    pub fn real(l: usize, i: usize, j: usize, n: usize) -> Result<Self> {
        Ok(Self::alpha(l, i, j)? + Self::delta(l).times(n as i64))
    }

    /// `(delta - alpha_ij) + n delta`.
    pub fn dual_real(l: usize, i: usize, j: usize, n: usize) -> Result<Self> {
        Ok(Self::delta(l).times(n as i64 + 1) - Self::alpha(l, i, j)?)
    }

    pub fn imaginary(l: usize, n: usize) -> Self {
        Self::delta(l).times(n as i64)
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn times(&self, k: i64) -> Self {
        Self::from_coeffs(self.l, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn classify(&self) -> RootClass {
        let c0 = self.coeffs[0];
        let diff: Vec<i64> = self.coeffs[1..].iter().map(|c| c - c0).collect();
        let interval = |sign: i64| -> Option<(usize, usize)> {
            let first = diff.iter().position(|&d| d != 0)?;
            let len = diff[first..].iter().take_while(|&&d| d == sign).count();
            if len == 0 || diff[first + len..].iter().any(|&d| d != 0) {
                return None;
            }
            Some((first + 1, first + len + 1))
        };
        if diff.iter().all(|&d| d == 0) {
            return if c0 >= 1 {
                RootClass::Imaginary { n: c0 as usize }
            } else {
                RootClass::NotPositive
            };
        }
        if c0 >= 0 {
            if let Some((i, j)) = interval(1) {
                return RootClass::Real { i, j, n: c0 as usize };
            }
        }
        if c0 >= 1 {
            if let Some((i, j)) = interval(-1) {
                return RootClass::DualReal {
                    i,
                    j,
                    n: (c0 - 1) as usize,
                };
            }
        }
        RootClass::NotPositive
    }

    pub fn is_positive_root(&self) -> bool {
        self.classify() != RootClass::NotPositive
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.l != other.l {
            return Err(Error::RankMismatch(self.l, other.l));
        }
        Ok(())
    }

    /// Symmetric bilinear form from the extended Cartan matrix.
    pub fn bilinear(&self, other: &Self) -> Result<i64> {
        self.check_rank(other)?;
        let l = self.l;
        let mut acc = 0;
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b != 0 {
                    acc += a * b * cartan_entry(l, i, j);
                }
            }
        }
        Ok(acc)
    }

    /// Strict normal order on positive roots: real roots `alpha + k delta`,
    /// then imaginary `m delta`, then `(delta - beta) + n delta`.
    pub fn normal_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check_rank(other)?;
        let key = |r: &Self| -> Result<(u8, i64, i64, i64)> {
            Ok(match r.classify() {
                RootClass::Real { i, j, n } => (0, i as i64, n as i64, j as i64),
                RootClass::Imaginary { n } => (1, n as i64, 0, 0),
                RootClass::DualReal { i, j, n } => (2, -(i as i64), -(n as i64), j as i64),
                RootClass::NotPositive => return Err(Error::NotAPositiveRoot(r.to_string())),
            })
        };
        Ok(key(self)?.cmp(&key(other)?))
    }

    pub fn normal_less(&self, other: &Self) -> Result<bool> {
        Ok(self.normal_cmp(other)? == Ordering::Less)
    }
}

impl Add for RootIndex {
    type Output = RootIndex;
    fn add(self, rhs: RootIndex) -> RootIndex {
        &self + &rhs
    }
}

impl Add for &RootIndex {
    type Output = RootIndex;
    fn add(self, rhs: &RootIndex) -> RootIndex {
        assert_eq!(self.l, rhs.l, "rank mismatch");
        RootIndex::from_coeffs(
            self.l,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for RootIndex {
    type Output = RootIndex;
    fn sub(self, rhs: RootIndex) -> RootIndex {
        &self + &(-rhs)
    }
}

impl Neg for RootIndex {
    type Output = RootIndex;
    fn neg(self) -> RootIndex {
        self.times(-1)
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.classify() {
            RootClass::Real { i, j, n } => {
                write!(f, "alpha_{i}{j}")?;
                if n > 0 {
                    write!(f, " + {n}delta")?;
                }
                Ok(())
            }
            RootClass::DualReal { i, j, n } => {
                write!(f, "(delta - alpha_{i}{j})")?;
                if n > 0 {
                    write!(f, " + {n}delta")?;
                }
                Ok(())
            }
            RootClass::Imaginary { n } => write!(f, "{n}delta"),
            RootClass::NotPositive => write!(f, "{:?}", self.coeffs),
        }
    }
}

/// Exponent `x = sum_i c_i h_i` of a Cartan element `q^x`, `i in 0..=l`.
///
/// Shifting all coefficients by the same integer adds a multiple of the
/// central element, which acts trivially.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanExponent {
    l: usize,
    coeffs: Vec<i64>,
}

impl CartanExponent {
    pub fn new(l: usize, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), l + 1, "Cartan exponent needs l+1 coordinates");
        CartanExponent { l, coeffs }
    }

    pub fn zero(l: usize) -> Self {
        Self::new(l, vec![0; l + 1])
    }

    /// `nu * h_i`.
    pub fn h(l: usize, i: usize, nu: i64) -> Self {
        let mut c = vec![0; l + 1];
        c[i] = nu;
        Self::new(l, c)
    }

    /// `k * c`, the central element scaled by `k`.
    pub fn central(l: usize, k: i64) -> Self {
        Self::new(l, vec![k; l + 1])
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn negate(&self) -> Self {
        Self::new(self.l, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.l, other.l, "rank mismatch");
        Self::new(
            self.l,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        )
    }

    /// `<beta, x>` for a root-lattice element `beta`, using `<alpha_i, h_j> = a_ji`.
    pub fn pair(&self, beta: &RootIndex) -> Result<i64> {
        if beta.rank() != self.l {
            return Err(Error::RankMismatch(beta.rank(), self.l));
        }
        let mut acc = 0;
        for (i, b) in beta.coeffs().iter().enumerate() {
            for (j, c) in self.coeffs.iter().enumerate() {
                acc += b * c * cartan_entry(self.l, j, i);
            }
        }
        Ok(acc)
    }
}
