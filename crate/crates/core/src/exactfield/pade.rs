//! Padé reconstruction of rational functions from truncated series.

use super::qrational::QRational;
use super::series::USeries;
use super::urational::{UPoly, URational};
use crate::error::{Error, Result};

/// Recover `P/Q` with `deg P <= num_deg`, `deg Q <= den_deg` whose expansion
/// agrees with `s` through its full order (at least `u^{num_deg + den_deg}`).
///
/// Any solution of the linearized conditions `s Q - P = O(u^{n+d+1})` gives
/// the same reduced fraction, so one nullspace vector suffices. The
/// reduced fraction is then re-expanded and compared against all of `s`; if the
/// comparison fails (or the denominator vanishes at the origin) there is no
/// rational function of the requested shape.
pub fn pade(s: &USeries, num_deg: usize, den_deg: usize) -> Result<URational> {
    let mismatch = Error::DegreeMismatch {
        num: num_deg,
        den: den_deg,
    };
    let total = num_deg + den_deg;
    if s.order() < total {
        return Err(Error::SeriesTooShort {
            order: s.order(),
            needed: total,
        });
    }
    let coeff = |k: isize| -> QRational {
        if k < 0 {
            QRational::zero()
        } else {
            s.coeff(k as usize).clone()
        }
    };
    // Rows r = num_deg+1 ..= num_deg+den_deg, columns k = 0 ..= den_deg.
    let rows: Vec<Vec<QRational>> = (num_deg + 1..=total)
        .map(|r| {
            (0..=den_deg)
                .map(|k| coeff(r as isize - k as isize))
                .collect()
        })
        .collect();
    let q_coeffs = nullspace_vector(rows, den_deg + 1);
    let den = UPoly::new(q_coeffs);
    let num_series = den.to_series(total).mul(&s.truncate(total));
    let num = UPoly::new(num_series.coeffs()[..=num_deg].to_vec());
    let r = URational::new(num, den).map_err(|_| mismatch.clone())?;
    if r.expand(s.order()) != *s {
        return Err(mismatch);
    }
    Ok(r)
}

/// A nonzero vector in the kernel of a matrix with `ncols > nrows` columns.
fn nullspace_vector(mut m: Vec<Vec<QRational>>, ncols: usize) -> Vec<QRational> {
    let nrows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = (0..ncols)
        .find(|c| !pivots.contains(c))
        .expect("more columns than rows");
    let mut v = vec![QRational::zero(); ncols];
    v[free] = QRational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][free].clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> QRational {
        QRational::q_pow(k)
    }

    #[test]
    fn reconstructs_simple_pole() {
        let target = URational::one_minus_pow(q(-1), true).scale(&q(-2));
        let s = target.expand(4);
        assert_eq!(pade(&s, 0, 1).unwrap(), target);
        // Over-parametrized degrees find the same reduced fraction.
        assert_eq!(pade(&s, 2, 2).unwrap(), target);
    }

    #[test]
    fn constants_and_polynomials() {
        assert_eq!(pade(&USeries::one(3), 0, 0).unwrap(), URational::one());
        let a = q(2) + QRational::from_int(3);
        let s = USeries::one_minus(a.clone(), 4);
        assert_eq!(
            pade(&s, 1, 0).unwrap(),
            URational::one_minus_pow(a, false)
        );
    }

    #[test]
    fn degree_mismatch_is_reported() {
        // 1/(1-u)^2 is not of shape (0, 1).
        let f = URational::one_minus_pow(QRational::one(), true);
        let s = f.mul(&f).expand(4);
        assert!(matches!(
            pade(&s, 0, 1),
            Err(Error::DegreeMismatch { num: 0, den: 1 })
        ));
        // A polynomial of degree 2 is not of shape (1, 0).
        let s = USeries::new(
            vec![QRational::one(), QRational::zero(), QRational::one()],
            3,
        );
        assert!(pade(&s, 1, 0).is_err());
    }

    #[test]
    fn zero_series() {
        assert_eq!(pade(&USeries::zero(4), 2, 2).unwrap(), URational::zero());
    }
}
