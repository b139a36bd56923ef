//! l-weights read off from the action of root vectors on basis vectors.

use crate::borelrep::{Evaluator, RepSpec, Representation};
use crate::error::{Error, Result};
use crate::exactfield::{pade, QRational, USeries};
use crate::fock::FockState;
use crate::rootsys::{o_sign, CartanExponent};
use crate::rootvectors::RootVectors;

use super::weight::{LWeight, Weight};

/// Computes eigenvalue series of `phi+_i(u)` in one representation,
/// sharing root vectors and cached actions across calls.
pub struct PhiEngine {
    spec: RepSpec,
    ev: Evaluator,
    rv: RootVectors,
}

impl PhiEngine {
    pub fn new(spec: &RepSpec) -> Self {
        PhiEngine {
            spec: spec.clone(),
            ev: Representation::new(spec).evaluator(),
            rv: RootVectors::new(spec.l()),
        }
    }

    pub fn spec(&self) -> &RepSpec {
        &self.spec
    }

    /// Eigenvalue exponent of `q^{h_j}` on `v_m`, `j in 0..=l`.
    pub fn cartan_exponent(&self, j: usize, m: &[u32]) -> i64 {
        self.ev
            .representation()
            .cartan_eigen_exponent(&CartanExponent::h(self.spec.l(), j, 1), m)
    }

    /// Weight read off from the Cartan eigenvalues.
    pub fn lambda(&self, m: &[u32]) -> Weight {
        Weight::new((1..=self.spec.l()).map(|j| self.cartan_exponent(j, m)).collect())
    }

    /// `c` with `e'_{n delta, alpha_i} v_m = c v_m`.
    pub fn prime_eigenvalue(&mut self, i: usize, n: usize, m: &[u32]) -> Result<QRational> {
        let e = self.rv.e_prime_imag(i, i + 1, n)?;
        let image = self.ev.apply(&e, &FockState::basis(m.to_vec()));
        image.coefficient_if_multiple_of(m).ok_or_else(|| Error::NotDiagonal {
            op: format!("e'_{{{n}delta,alpha_{i}}}"),
            state: format!("v_{m:?}"),
        })
    }

    /// Eigenvalue series of `phi+_i(u) = q^{h_i}(1 - kappa e'(-o_i u))` on
    /// `v_m`, with `u -> zs u` applied at the end.
    pub fn phi_series(&mut self, i: usize, m: &[u32], order: usize) -> Result<USeries> {
        let l = self.spec.l();
        if m.len() != l {
            return Err(Error::RankMismatch(m.len(), l));
        }
        let minus_o = -o_sign(l, i)?;
        let lead = QRational::q_pow(self.cartan_exponent(i, m));
        let factor = -(QRational::kappa() * &lead);
        let mut coeffs = vec![lead];
        let mut sign = 1;
        for n in 1..=order {
            sign *= minus_o;
            let c = self.prime_eigenvalue(i, n, m)?;
            coeffs.push(&factor * &c * QRational::from_int(sign));
        }
        Ok(USeries::new(coeffs, order).rescale_variable(self.spec.zs()))
    }

    /// l-weight of `v_m`: weight from the Cartan action, each `psi_i`
    /// reconstructed from its series at degrees `(2, 2)`.
    pub fn lweight(&mut self, m: &[u32], order: usize) -> Result<LWeight> {
        let psi = (1..=self.spec.l())
            .map(|i| pade(&self.phi_series(i, m, order)?, 2, 2))
            .collect::<Result<Vec<_>>>()?;
        LWeight::new(self.lambda(m), psi)
    }
}

/// Eigenvalue series of `phi+_i(u)` on the basis vector `v_m` of `spec`.
pub fn phi_series(i: usize, spec: &RepSpec, m: &[u32], order: usize) -> Result<USeries> {
    PhiEngine::new(spec).phi_series(i, m, order)
}

/// Computed l-weight of `v_m` (series of order `order`, at least 4).
pub fn computed_lweight(spec: &RepSpec, m: &[u32], order: usize) -> Result<LWeight> {
    PhiEngine::new(spec).lweight(m, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::URational;

    fn q(k: i64) -> QRational {
        QRational::q_pow(k)
    }

    #[test]
    fn low_rank_vacuum_series() {
        let spec = RepSpec::new(1, 1, false).unwrap();
        let expected = URational::one_minus_pow(q(-1), true).scale(&q(-2)).expand(6);
        assert_eq!(phi_series(1, &spec, &[0], 6).unwrap(), expected);

        let spec = RepSpec::new(1, 2, false).unwrap();
        assert_eq!(phi_series(1, &spec, &[0], 6).unwrap(), USeries::one_minus(q(1), 6));

        let spec = RepSpec::new(2, 2, false).unwrap();
        let expected = USeries::one_minus(q(0), 6).scale(&q(1));
        assert_eq!(phi_series(1, &spec, &[0, 0], 6).unwrap(), expected);
    }

    #[test]
    fn spectral_twist_rescales() {
        let spec = RepSpec::with_zs(1, 2, false, q(3)).unwrap();
        assert_eq!(phi_series(1, &spec, &[2], 4).unwrap(), {
            let s = RepSpec::new(1, 2, false).unwrap();
            phi_series(1, &s, &[2], 4).unwrap().rescale_variable(&q(3))
        });
    }
}
