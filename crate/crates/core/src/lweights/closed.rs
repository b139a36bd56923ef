//! Closed-form l-weights of the basis vectors `v_m` of `theta_a` and
//! `theta-bar_a`, with `zeta^s` replaced by the spec's `zs`.

use crate::borelrep::RepSpec;
use crate::error::{Error, Result};
use crate::exactfield::{QRational, UPoly, URational};

use super::weight::Weight;

/// 1-based view of an occupation vector with partial sums.
struct Occ<'a>(&'a [u32]);

impl Occ<'_> {
    fn at(&self, j: usize) -> i64 {
        self.0[j - 1] as i64
    }

    /// `m_p + ... + m_r`, zero when `p > r`.
    fn sum(&self, p: usize, r: usize) -> i64 {
        (p..=r).map(|j| self.at(j)).sum()
    }
}

/// `q^c prod_k (1 - q^{n_k} zs u) / prod_k (1 - q^{d_k} zs u)`.
fn ratio(c: i64, nums: &[i64], dens: &[i64], zs: &QRational) -> URational {
    let factor = |e: &i64| UPoly::one_minus(QRational::q_pow(*e) * zs);
    let num = nums
        .iter()
        .map(factor)
        .fold(UPoly::constant(QRational::q_pow(c)), |acc, f| acc.mul(&f));
    let den = dens.iter().map(factor).fold(UPoly::one(), |acc, f| acc.mul(&f));
    URational::new(num, den).expect("denominator is 1 at u = 0")
}

fn untwisted_psi(l: usize, a: usize, i: usize, m: &Occ, zs: &QRational) -> URational {
    let s = |p: usize, r: usize| m.sum(p, r);
    let (l_, a_, i_) = (l as i64, a as i64, i as i64);
    if a == 1 {
        if i == 1 {
            let c = -2 * m.at(1) - s(2, l) - l_ - 1;
            let base = -2 * s(1, l) - l_;
            ratio(c, &[-2 * s(2, l) - l_ + 2], &[base, base + 2], zs)
        } else {
            let c = m.at(i - 1) - m.at(i);
            let base = -2 * s(i, l) - l_ + i_ - 1;
            ratio(
                c,
                &[-2 * s(i - 1, l) - l_ + i_ - 1, -2 * s(i + 1, l) - l_ + i_ + 1],
                &[base, base + 2],
                zs,
            )
        }
    } else if a == l + 1 {
        if i < l {
            ratio(m.at(i + 1) - m.at(i), &[], &[], zs)
        } else {
            ratio(-2 * m.at(l) - s(1, l - 1), &[1], &[], zs)
        }
    } else {
        let top = l - a + 1;
        if i + 2 <= a {
            ratio(m.at(l + i + 2 - a) - m.at(l + i + 1 - a), &[], &[], zs)
        } else if i + 1 == a {
            let c = s(1, top) - s(top + 1, l - 1) - 2 * m.at(l) + l_ - a_ + 1;
            ratio(c, &[-2 * s(1, top) - l_ + a_], &[], zs)
        } else if i == a {
            let c = -2 * m.at(1) - s(2, top) + s(top + 1, l) - l_ + a_ - 2;
            let base = -2 * s(1, top) - l_ + a_ - 1;
            ratio(c, &[-2 * s(2, top) - l_ + a_ + 1], &[base, base + 2], zs)
        } else {
            let c = m.at(i - a) - m.at(i - a + 1);
            let base = -2 * s(i - a + 1, top) - l_ + i_ - 1;
            ratio(
                c,
                &[
                    -2 * s(i - a, top) - l_ + i_ - 1,
                    -2 * s(i - a + 2, top) - l_ + i_ + 1,
                ],
                &[base, base + 2],
                zs,
            )
        }
    }
}

fn untwisted_lambda(l: usize, a: usize, m: &Occ) -> Weight {
    let s = |p: usize, r: usize| m.sum(p, r);
    let (l_, a_) = (l as i64, a as i64);
    let coeffs = (1..=l)
        .map(|i| {
            if a == 1 {
                if i == 1 {
                    -(2 * m.at(1) + s(2, l) + l_ + 1)
                } else {
                    -(m.at(i) - m.at(i - 1))
                }
            } else if a == l + 1 {
                if i < l {
                    m.at(i + 1) - m.at(i)
                } else {
                    -(s(1, l - 1) + 2 * m.at(l))
                }
            } else {
                let top = l - a + 1;
                if i + 2 <= a {
                    m.at(l + i + 2 - a) - m.at(l + i + 1 - a)
                } else if i + 1 == a {
                    s(1, top) - s(top + 1, l - 1) - 2 * m.at(l) + l_ - a_ + 1
                } else if i == a {
                    -(2 * m.at(1) + s(2, top) - s(top + 1, l) + l_ - a_ + 2)
                } else {
                    -(m.at(i - a + 1) - m.at(i - a))
                }
            }
        })
        .collect();
    Weight::new(coeffs)
}

fn check(spec: &RepSpec, i: usize, m: &[u32]) -> Result<()> {
    let l = spec.l();
    if m.len() != l {
        return Err(Error::RankMismatch(m.len(), l));
    }
    if i == 0 || i > l {
        return Err(Error::IndexOutOfRange { index: i, l });
    }
    Ok(())
}

/// Closed form of `Psi+_{i,m,a}(u)`; for the reflected family
/// `Psi-bar_{i,m,a}(u) = Psi_{l-i+1,m,l-a+2}(-(-1)^l u)`.
pub fn closed_psi(i: usize, spec: &RepSpec, m: &[u32]) -> Result<URational> {
    check(spec, i, m)?;
    let (l, a) = (spec.l(), spec.a());
    let occ = Occ(m);
    if spec.bar() {
        let sign = if l % 2 == 0 { -1 } else { 1 };
        let zs = spec.zs() * QRational::from_int(sign);
        Ok(untwisted_psi(l, l + 2 - a, l + 1 - i, &occ, &zs))
    } else {
        Ok(untwisted_psi(l, a, i, &occ, spec.zs()))
    }
}

/// Closed form of `lambda_{m,a}`; for the reflected family
/// `lambda-bar_{m,a} = iota(lambda_{m,l-a+2})`.
pub fn closed_lambda(spec: &RepSpec, m: &[u32]) -> Result<Weight> {
    check(spec, 1, m)?;
    let (l, a) = (spec.l(), spec.a());
    let occ = Occ(m);
    if spec.bar() {
        Ok(untwisted_lambda(l, l + 2 - a, &occ).reflect())
    } else {
        Ok(untwisted_lambda(l, a, &occ))
    }
}

/// Shift `xi_a` with `(theta_a) = L_{xi_a} (x) prefundamentals`.
pub fn xi_shift(l: usize, a: usize) -> Weight {
    let mut c = vec![0; l];
    if a == 1 {
        c[0] = -(l as i64 + 1);
    } else if a <= l {
        c[a - 2] = (l - a + 1) as i64;
        c[a - 1] = -((l - a + 2) as i64);
    }
    Weight::new(c)
}

/// `xi-_i = -2 sum_{j<i} omega_j - (l - i + 2) omega_i`.
pub fn xi_minus(l: usize, i: usize) -> Weight {
    Weight::new(
        (1..=l)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => -2,
                std::cmp::Ordering::Equal => -((l - i + 2) as i64),
                std::cmp::Ordering::Greater => 0,
            })
            .collect(),
    )
}

/// `xi+_i = (l - i) omega_i - 2 sum_{j>i} omega_j`.
pub fn xi_plus(l: usize, i: usize) -> Weight {
    Weight::new(
        (1..=l)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => 0,
                std::cmp::Ordering::Equal => (l - i) as i64,
                std::cmp::Ordering::Greater => -2,
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> QRational {
        QRational::q_pow(k)
    }

    #[test]
    fn highest_weights() {
        for l in 1..=4 {
            let spec = RepSpec::new(l, 1, false).unwrap();
            let zero = vec![0; l];
            assert_eq!(closed_lambda(&spec, &zero).unwrap(), xi_shift(l, 1));
            let spec = RepSpec::new(l, l + 1, false).unwrap();
            assert_eq!(closed_lambda(&spec, &zero).unwrap(), Weight::zero(l));
            for i in 1..l {
                assert_eq!(closed_psi(i, &spec, &zero).unwrap(), URational::one());
            }
        }
        let spec = RepSpec::new(3, 2, false).unwrap();
        assert_eq!(closed_lambda(&spec, &[0, 0, 0]).unwrap(), Weight::new(vec![2, -3, 0]));
    }

    #[test]
    fn low_rank_values() {
        let spec = RepSpec::new(1, 1, false).unwrap();
        let expected = URational::one_minus_pow(q(-1), true).scale(&q(-2));
        assert_eq!(closed_psi(1, &spec, &[0]).unwrap(), expected);
        let spec = RepSpec::new(1, 2, false).unwrap();
        assert_eq!(closed_psi(1, &spec, &[0]).unwrap(), URational::one_minus_pow(q(1), false));
        let spec = RepSpec::new(2, 2, false).unwrap();
        let expected = URational::one_minus_pow(q(0), false).scale(&q(1));
        assert_eq!(closed_psi(1, &spec, &[0, 0]).unwrap(), expected);
    }

    #[test]
    fn constant_terms_match_lambda() {
        for l in 1..=3 {
            for a in 1..=l + 1 {
                for bar in [false, true] {
                    let spec = RepSpec::new(l, a, bar).unwrap();
                    for m in crate::fock::occupations(l, 2) {
                        let lam = closed_lambda(&spec, &m).unwrap();
                        for i in 1..=l {
                            let psi = closed_psi(i, &spec, &m).unwrap();
                            assert_eq!(psi.constant_term(), q(lam.pair(i)), "l={l} a={a} bar={bar} m={m:?} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(xi_shift(3, 2), Weight::new(vec![2, -3, 0]));
        assert_eq!(xi_shift(3, 4), Weight::zero(3));
        assert_eq!(xi_minus(3, 2), Weight::new(vec![-2, -3, 0]));
        assert_eq!(xi_plus(3, 2), Weight::new(vec![0, 1, -2]));
    }
}
