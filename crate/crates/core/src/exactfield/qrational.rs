//! Elements of the rational function field `Q(q)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// A rational function `num / (scale * den)` in the formal variable `q`.
///
/// Canonical form:
/// * `den` is a primitive integer polynomial with positive leading coefficient;
/// * `scale` is a positive integer coprime to the content of `num`;
/// * `num` and `den` share no nonconstant factor.
///
/// Read as a fraction with rational-coefficient numerator `num / scale` and
/// content-1 denominator `den`, the representation is unique, so equality
/// is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct QRational {
    num: IntPoly,
    scale: BigInt,
    den: IntPoly,
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            num: IntPoly::zero(),
            scale: BigInt::one(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QRational {
            num: IntPoly::constant(n),
            scale: BigInt::one(),
            den: IntPoly::one(),
        }
    }

    /// The rational number `n / d`.
    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(
            IntPoly::constant(BigInt::from(n)),
            IntPoly::constant(BigInt::from(d)),
        ))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            QRational {
                num: mono,
                scale: BigInt::one(),
                den: IntPoly::one(),
            }
        } else {
            QRational {
                num: IntPoly::one(),
                scale: BigInt::one(),
                den: mono,
            }
        }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::q_pow(k) * Self::from_int(c)
    }

    /// The formal variable `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q - q^{-1}`.
    pub fn kappa() -> Self {
        QRational {
            num: IntPoly::from_i64s(&[-1, 0, 1]),
            scale: BigInt::one(),
            den: IntPoly::from_i64s(&[0, 1]),
        }
    }

    /// Build `num / den` from arbitrary integer polynomials.
    ///
    /// Panics if `den` is zero; use [`QRational::try_from_parts`] for a
    /// fallible version.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Self {
        Self::try_from_parts(num, den).expect("zero denominator")
    }

    pub fn try_from_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else if den.is_constant() {
            let d = den.coeffs()[0].clone();
            let g = num.content().gcd(&d);
            let g = if d.is_negative() { -g } else { g };
            (num.div_scalar_exact(&g), den.div_scalar_exact(&g))
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        // Split the denominator into integer scale and primitive part.
        let mut c = den.content();
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        let den = den.div_scalar_exact(&c);
        let (num, scale) = if c.is_negative() {
            (num.neg(), -c)
        } else {
            (num, c)
        };
        QRational { num, scale, den }
    }

    /// Integer numerator polynomial (before dividing by the scale).
    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    /// Positive integer that divides the numerator coefficients.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    /// Primitive denominator polynomial.
    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    /// Full integer-polynomial denominator `scale * den`.
    fn full_den(&self) -> IntPoly {
        self.den.scale(&self.scale)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one() && self.scale.is_one()
    }

    /// If the value is `c * q^k` with rational `c`, returns `k`.
    pub fn as_q_power_exponent(&self) -> Option<i64> {
        if !self.num.is_monomial() || !self.den.is_monomial() {
            return None;
        }
        let n = self.num.valuation()?;
        let d = self.den.valuation()?;
        Some(n as i64 - d as i64)
    }

    /// If the value is exactly `q^k`, returns `k`.
    pub fn as_pure_q_power(&self) -> Option<i64> {
        let k = self.as_q_power_exponent()?;
        (*self == Self::q_pow(k)).then_some(k)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.full_den(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Substitute `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        let reverse = |p: &IntPoly| {
            let mut cs = p.coeffs().to_vec();
            cs.reverse();
            IntPoly::from_coeffs(cs)
        };
        let dn = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        // p(q^{-1}) = q^{-deg p} * reverse(p)(q)
        let r = Self::normalize(reverse(&self.num), reverse(&self.full_den()));
        r * Self::q_pow(dd - dn)
    }

    /// Rational coefficients of the numerator divided by the scale, as
    /// `(exponent, numerator, denominator)` triples in ascending order.
    pub fn numerator_terms(&self) -> Vec<(usize, BigInt, BigInt)> {
        self.num
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let g = c.gcd(&self.scale);
                (k, c / &g, &self.scale / &g)
            })
            .collect()
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let l = self.scale.lcm(&other.scale);
            let a = self.num.scale(&(&l / &self.scale));
            let b = other.num.scale(&(&l / &other.scale));
            return Self::normalize(a.add(&b), self.den.scale(&l));
        }
        let g = self.den.gcd(&other.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = other.den.div_exact(&g).unwrap();
        let l = self.scale.lcm(&other.scale);
        let a = self.num.mul(&d2).scale(&(&l / &self.scale));
        let b = other.num.mul(&d1).scale(&(&l / &other.scale));
        Self::normalize(a.add(&b), self.den.mul(&d2).scale(&l))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // Cross-cancel before multiplying so the final gcd stays small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2).scale(&(&self.scale * &other.scale));
        let c = num.content().gcd(&den.content());
        if c.is_one() {
            Self::normalize_coprime(num, den)
        } else {
            Self::normalize_coprime(num.div_scalar_exact(&c), den.div_scalar_exact(&c))
        }
    }

    /// Normalization when `num` and `den` are already coprime over `Q[q]`
    /// and share no integer content.
    fn normalize_coprime(num: IntPoly, den: IntPoly) -> Self {
        let mut c = den.content();
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        let den = den.div_scalar_exact(&c);
        let (num, scale) = if c.is_negative() {
            (num.neg(), -c)
        } else {
            (num, c)
        };
        QRational { num, scale, den }
    }
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Hash for QRational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.scale.hash(state);
        self.den.hash(state);
    }
}

impl From<i64> for QRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den_one = self.den.is_one() && self.scale.is_one();
        let num = if self.num.is_monomial() || self.num.is_zero() || den_one {
            self.num.to_string()
        } else {
            format!("({})", self.num)
        };
        if den_one {
            return write!(f, "{num}");
        }
        let den = self.full_den();
        if den.is_monomial() {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $impl_fn:expr) => {
        impl $tr<&QRational> for &QRational {
            type Output = QRational;
            fn $method(self, rhs: &QRational) -> QRational {
                $impl_fn(self, rhs)
            }
        }
        impl $tr<QRational> for QRational {
            type Output = QRational;
            fn $method(self, rhs: QRational) -> QRational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $method(self, rhs: &QRational) -> QRational {
                $impl_fn(&self, rhs)
            }
        }
        impl $tr<QRational> for &QRational {
            type Output = QRational;
            fn $method(self, rhs: QRational) -> QRational {
                $impl_fn(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QRational, b: &QRational| a.add_impl(b));
forward_binop!(Sub, sub, |a: &QRational, b: &QRational| a.add_impl(&-b));
forward_binop!(Mul, mul, |a: &QRational, b: &QRational| a.mul_impl(b));
forward_binop!(Div, div, |a: &QRational, b: &QRational| a
    .checked_div(b)
    .expect("division by zero QRational"));

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: self.num.neg(),
            scale: self.scale.clone(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl AddAssign<&QRational> for QRational {
    fn add_assign(&mut self, rhs: &QRational) {
        *self = self.add_impl(rhs);
    }
}

impl SubAssign<&QRational> for QRational {
    fn sub_assign(&mut self, rhs: &QRational) {
        *self = self.add_impl(&-rhs);
    }
}

impl MulAssign<&QRational> for QRational {
    fn mul_assign(&mut self, rhs: &QRational) {
        *self = self.mul_impl(rhs);
    }
}

impl std::iter::Sum for QRational {
    fn sum<I: Iterator<Item = QRational>>(iter: I) -> Self {
        iter.fold(QRational::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for QRational {
    fn product<I: Iterator<Item = QRational>>(iter: I) -> Self {
        iter.fold(QRational::one(), |acc, x| acc * x)
    }
}

/// The q-number `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn qnum(n: i64) -> QRational {
    // [n]_q = q^{-(n-1)} (1 + q^2 + ... + q^{2(n-1)}) for n > 0.
    if n == 0 {
        return QRational::zero();
    }
    let m = n.unsigned_abs() as usize;
    let mut cs = vec![BigInt::zero(); 2 * m - 1];
    for k in 0..m {
        cs[2 * k] = BigInt::one();
    }
    let positive = QRational::from_parts(
        IntPoly::from_coeffs(cs),
        IntPoly::monomial(BigInt::one(), m - 1),
    );
    if n > 0 {
        positive
    } else {
        -positive
    }
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn qfactorial(n: i64) -> Result<QRational> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).map(qnum).product())
}
