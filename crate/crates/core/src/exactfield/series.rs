//! Truncated power series in the spectral variable `u` over `Q(q)`.

use std::fmt;

use super::qrational::QRational;
use crate::error::{Error, Result};

/// Default truncation order for series arithmetic.
pub const DEFAULT_ORDER: usize = 8;

/// `c_0 + c_1 u + ... + c_K u^K + O(u^{K+1})`.
///
/// Binary operations truncate to the smaller of the two orders, so mixing
/// precisions never silently invents coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct USeries {
    coeffs: Vec<QRational>,
}

impl USeries {
    /// Series known through `u^order`; missing coefficients are zero and
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<QRational>, order: usize) -> Self {
        coeffs.resize(order + 1, QRational::zero());
        USeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: QRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QRational::one(), order)
    }

    /// `1 - a u`.
    pub fn one_minus(a: QRational, order: usize) -> Self {
        Self::new(vec![QRational::one(), -a], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &QRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[QRational] {
        &self.coeffs
    }

    /// Drop terms above `order`; raising the order is not allowed.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        USeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QRational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        USeries {
            coeffs: (0..=k).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        USeries {
            coeffs: (0..=k).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect(),
        }
    }

    pub fn scale(&self, c: &QRational) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        let coeffs = (0..=k)
            .map(|n| {
                (0..=n)
                    .filter(|&j| !self.coeffs[j].is_zero() && !other.coeffs[n - j].is_zero())
                    .map(|j| &self.coeffs[j] * &other.coeffs[n - j])
                    .sum()
            })
            .collect();
        USeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.inv()?;
        let mut out: Vec<QRational> = vec![inv0.clone()];
        for n in 1..=self.order() {
            let acc: QRational = (1..=n)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| &self.coeffs[j] * &out[n - j])
                .sum();
            out.push(-(acc * &inv0));
        }
        Ok(USeries { coeffs: out })
    }

    /// Formal derivative `d/du`; the result has order one less.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        USeries {
            coeffs: (1..=self.order())
                .map(|n| &self.coeffs[n] * &QRational::from_int(n as i64))
                .collect(),
        }
    }

    /// Formal logarithm of a series with constant term one.
    ///
    /// Computed from `s (log s)' = s'`, which determines the coefficients
    /// one at a time.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let k = self.order();
        let mut out = vec![QRational::zero(); k + 1];
        // n L_n = n s_n - sum_{j=1}^{n-1} j L_j s_{n-j}
        for n in 1..=k {
            let mut acc = &self.coeffs[n] * &QRational::from_int(n as i64);
            for j in 1..n {
                if !out[j].is_zero() && !self.coeffs[n - j].is_zero() {
                    acc -= &(&out[j] * &self.coeffs[n - j] * QRational::from_int(j as i64));
                }
            }
            out[n] = acc * QRational::from_ratio(1, n as i64)?;
        }
        Ok(USeries { coeffs: out })
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let k = self.order();
        let mut out = vec![QRational::zero(); k + 1];
        out[0] = QRational::one();
        // n E_n = sum_{j=1}^{n} j s_j E_{n-j}
        for n in 1..=k {
            let acc: QRational = (1..=n)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| &self.coeffs[j] * &out[n - j] * QRational::from_int(j as i64))
                .sum();
            out[n] = acc * QRational::from_ratio(1, n as i64)?;
        }
        Ok(USeries { coeffs: out })
    }

    /// Substitute `u -> c u`.
    pub fn rescale_variable(&self, c: &QRational) -> Self {
        let mut pow = QRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x * &pow);
            pow = &pow * c;
        }
        USeries { coeffs }
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.order() + 1)
    }
}

impl fmt::Debug for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "USeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> QRational {
        QRational::q_pow(k)
    }

    fn int(n: i64) -> QRational {
        QRational::from_int(n)
    }

    #[test]
    fn invert_geometric() {
        let a = q(3) + int(1);
        let s = USeries::one_minus(a.clone(), 3);
        let inv = s.invert().unwrap();
        let expected = USeries::new(
            vec![int(1), a.clone(), a.pow(2).unwrap(), a.pow(3).unwrap()],
            3,
        );
        assert_eq!(inv, expected);
    }

    #[test]
    fn invert_constant_and_triangular() {
        let c = q(2) - int(5);
        let inv = USeries::constant(c.clone(), 4).invert().unwrap();
        assert_eq!(inv, USeries::constant(c.inv().unwrap(), 4));
        // 1 + u + u^2 at order 2 inverts to 1 - u.
        let s = USeries::new(vec![int(1), int(1), int(1)], 2);
        let inv = s.invert().unwrap();
        assert_eq!(inv, USeries::new(vec![int(1), int(-1), int(0)], 2));
        assert_eq!(s.mul(&inv), USeries::one(2));
    }

    #[test]
    fn invert_rejects_zero_constant() {
        let s = USeries::new(vec![int(0), int(1)], 3);
        assert!(matches!(s.invert(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn log_examples() {
        assert!(USeries::one(5).log().unwrap().is_zero());
        let a = q(1) + q(-1);
        let s = USeries::new(vec![int(1), a.clone()], 3);
        let expected = USeries::new(
            vec![
                int(0),
                a.clone(),
                -(a.pow(2).unwrap() * QRational::from_ratio(1, 2).unwrap()),
                a.pow(3).unwrap() * QRational::from_ratio(1, 3).unwrap(),
            ],
            3,
        );
        assert_eq!(s.log().unwrap(), expected);
        let f = USeries::one_minus(a, 6);
        let prod = f.invert().unwrap().mul(&f);
        assert!(prod.log().unwrap().is_zero());
        assert!(matches!(
            USeries::constant(int(2), 2).log(),
            Err(Error::ConstantTermNotOne)
        ));
    }

    #[test]
    fn log_satisfies_derivative_identity() {
        let s = USeries::new(vec![int(1), q(1), q(-3) - int(2), int(7), q(5)], 4);
        let l = s.log().unwrap();
        assert_eq!(s.mul(&l.derivative()), s.derivative());
        assert_eq!(l.exp().unwrap(), s);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = USeries::new(vec![int(1), int(2), int(3)], 5);
        let b = USeries::new(vec![int(1), int(1)], 2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn rescale_variable_substitutes() {
        let s = USeries::one_minus(q(-1), 3).invert().unwrap();
        let t = s.rescale_variable(&q(2));
        assert_eq!(t, USeries::one_minus(q(1), 3).invert().unwrap());
    }
}
