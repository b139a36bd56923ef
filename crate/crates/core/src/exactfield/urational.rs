//! Polynomials and rational functions in `u` with `Q(q)` coefficients.

use std::fmt;

use super::qrational::QRational;
use super::series::USeries;
use crate::error::{Error, Result};

/// Dense polynomial in `u`; no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<QRational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<QRational>) -> Self {
        while coeffs.last().is_some_and(QRational::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: QRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(QRational::one())
    }

    /// `1 - a u`.
    pub fn one_minus(a: QRational) -> Self {
        Self::new(vec![QRational::one(), -a])
    }

    pub fn coeffs(&self) -> &[QRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &QRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![QRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::new(out)
    }

    /// Division with remainder over the field `Q(q)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![QRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd] * &lead_inv;
            if top.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&top * d);
            }
            quot[k] = top;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd over `Q(q)`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.degree() {
            None => a,
            Some(d) => a.scale(&a.coeffs[d].inv().expect("nonzero lead")),
        }
    }

    /// Expand as a truncated series through `u^order`.
    pub fn to_series(&self, order: usize) -> USeries {
        USeries::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    /// Substitute `u -> c u`.
    pub fn rescale_variable(&self, c: &QRational) -> Self {
        let mut pow = QRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &pow);
            pow = &pow * c;
        }
        Self::new(out)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{var}")?,
                _ => write!(f, "({c})*{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "u")
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// A rational function `num(u) / den(u)` that is regular at `u = 0`.
///
/// Normalized so that numerator and denominator are coprime and the
/// denominator has constant term one; equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct URational {
    num: UPoly,
    den: UPoly,
}

impl URational {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let inv = c0.inv()?;
        Ok(URational {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        URational {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(QRational::one())
    }

    pub fn constant(c: QRational) -> Self {
        URational {
            num: UPoly::constant(c),
            den: UPoly::one(),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        URational {
            num: p,
            den: UPoly::one(),
        }
    }

    /// `(1 - a u)^{+1}` or `(1 - a u)^{-1}`.
    pub fn one_minus_pow(a: QRational, inverse: bool) -> Self {
        if a.is_zero() {
            return Self::one();
        }
        let f = UPoly::one_minus(a);
        if inverse {
            URational {
                num: UPoly::one(),
                den: f,
            }
        } else {
            Self::from_poly(f)
        }
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    /// Value at `u = 0`.
    pub fn constant_term(&self) -> QRational {
        self.num.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of regular rational functions is regular")
    }

    pub fn scale(&self, c: &QRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("regular")
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `u -> c u`.
    pub fn rescale_variable(&self, c: &QRational) -> Self {
        Self::new(self.num.rescale_variable(c), self.den.rescale_variable(c))
            .expect("rescaling keeps the constant term")
    }

    /// Power-series expansion through `u^order`.
    pub fn expand(&self, order: usize) -> USeries {
        let den = self.den.to_series(order);
        let inv = den.invert().expect("normalized denominator has constant term 1");
        self.num.to_series(order).mul(&inv)
    }
}

impl fmt::Display for URational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for URational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "URational({self})")
    }
}
