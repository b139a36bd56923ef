//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` over the integers.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when the polynomial has exactly one nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// gcd of the coefficients, always non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divide every coefficient by `c`; `c` must divide each of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divide by `q^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        IntPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact quotient `self / divisor` in `Z[q]`.
    ///
    /// Returns `None` when the division leaves a remainder or needs
    /// non-integral coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * d;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^(deg self - deg divisor + 1) * self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo-remainder by zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.pop().unwrap();
            let k = rem.len() - dd;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, d) in divisor.coeffs.iter().take(dd).enumerate() {
                rem[k + j] -= &top * d;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::from_coeffs(rem)
    }

    /// Greatest common divisor in `Z[q]`, normalized to a positive leading
    /// coefficient. Integer contents are included, so `gcd(2q, 4) = 2`.
    ///
    /// Uses the primitive remainder sequence: contents are stripped after
    /// every pseudo-division, which keeps coefficient growth in check.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let content = self.content().gcd(&other.content());
        let shift = self.valuation().unwrap().min(other.valuation().unwrap());
        let a = self.shift_down(self.valuation().unwrap()).primitive_part();
        let b = other.shift_down(other.valuation().unwrap()).primitive_part();
        let core = Self::primitive_gcd(a, b);
        core.scale(&content).shift_up(shift)
    }

    fn normalize_sign(&self) -> Self {
        if self.leading().is_some_and(Signed::is_negative) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// gcd of two primitive polynomials with positive leading coefficients.
    fn primitive_gcd(mut a: Self, mut b: Self) -> Self {
        if a == b {
            return a;
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // Cheap exit when one side divides the other, the common case for
        // denominators built from powers of q^2 - 1.
        if a.div_exact(&b).is_some() {
            return b;
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive_part();
            }
            if r.is_constant() {
                return Self::one();
            }
            a = b;
            b = r.primitive_part();
        }
    }

    /// Evaluate the formal derivative with respect to `q`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Lexicographic comparison from the highest coefficient, used only to
    /// give maps a deterministic order.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
