//! The representations `theta_a` and `theta-bar_a` of the positive Borel
//! subalgebra on oscillator Fock space.
//!
//! A [`RepSpec`] picks the rank `l`, the twist `a in 1..=l+1` and whether
//! the reflected family is meant. Generators are sent to single
//! oscillator words ([`OscWord`]); everything else is an [`OpExpr`] tree
//! evaluated lazily against sparse states.
//!
//! The spectral twist never touches generators. It enters only through
//! `zs`, the value of `zeta^s` (with every `s_i = 1`, so `s = l + 1`),
//! substituted as `u -> zs * u` in eigenvalue series.

mod expr;
mod words;

pub use expr::{Evaluator, OpExpr, OpNode};
pub use words::{
    base_image_e, base_image_h, composed_image_e, composed_image_h, composed_index,
    explicit_image_e, explicit_image_h, sigma_pow, tau, CartanWord, Ladder, OscWord,
};

use crate::error::{Error, Result};
use crate::exactfield::{qfactorial, QRational};
use crate::fock::{FockState, ModePattern, Occupation};
use crate::rootsys::{cartan_entry, CartanExponent, RootIndex};

/// Which representation to build.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepSpec {
    l: usize,
    a: usize,
    bar: bool,
    zs: QRational,
}

impl RepSpec {
    /// `theta_a` (or `theta-bar_a`) with `zs = 1`.
    pub fn new(l: usize, a: usize, bar: bool) -> Result<Self> {
        Self::with_zs(l, a, bar, QRational::one())
    }

    pub fn with_zs(l: usize, a: usize, bar: bool, zs: QRational) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidSpec("rank l must be at least 1".into()));
        }
        if a == 0 || a > l + 1 {
            return Err(Error::InvalidSpec(format!("a = {a} outside 1..={}", l + 1)));
        }
        if zs.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(RepSpec { l, a, bar, zs })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn bar(&self) -> bool {
        self.bar
    }

    pub fn zs(&self) -> &QRational {
        &self.zs
    }

    pub fn pattern(&self) -> ModePattern {
        let p = if self.bar {
            ModePattern::theta_bar(self.l, self.a)
        } else {
            ModePattern::theta(self.l, self.a)
        };
        p.expect("validated at construction")
    }
}

/// Image of `e_i` as an oscillator word.
pub fn image_e(i: usize, spec: &RepSpec) -> Result<OscWord> {
    explicit_image_e(spec.l, spec.a, spec.bar, i)
}

/// Image of `q^x` as a diagonal word. Additive in `x`.
pub fn image_qh(x: &CartanExponent, spec: &RepSpec) -> Result<CartanWord> {
    if x.rank() != spec.l {
        return Err(Error::RankMismatch(x.rank(), spec.l));
    }
    let mut w = CartanWord::identity(spec.l);
    for (i, &c) in x.coeffs().iter().enumerate() {
        if c != 0 {
            w = w.add(&explicit_image_h(spec.l, spec.a, spec.bar, i)?.scaled(c));
        }
    }
    Ok(w)
}

/// A [`RepSpec`] with its generator images precomputed.
#[derive(Clone, Debug)]
pub struct Representation {
    spec: RepSpec,
    pattern: ModePattern,
    e_words: Vec<OscWord>,
    h_words: Vec<CartanWord>,
}

impl Representation {
    pub fn new(spec: &RepSpec) -> Self {
        let l = spec.l;
        let e_words = (0..=l)
            .map(|i| image_e(i, spec).expect("index in range"))
            .collect();
        let h_words = (0..=l)
            .map(|i| explicit_image_h(l, spec.a, spec.bar, i).expect("index in range"))
            .collect();
        Representation {
            spec: spec.clone(),
            pattern: spec.pattern(),
            e_words,
            h_words,
        }
    }

    pub fn spec(&self) -> &RepSpec {
        &self.spec
    }

    pub fn pattern(&self) -> &ModePattern {
        &self.pattern
    }

    pub fn e_word(&self, i: usize) -> &OscWord {
        &self.e_words[i]
    }

    pub fn cartan_word(&self, x: &CartanExponent) -> CartanWord {
        x.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(CartanWord::identity(self.spec.l), |w, (i, &c)| {
                w.add(&self.h_words[i].scaled(c))
            })
    }

    /// Eigenvalue exponent of `q^x` on `v_m`.
    pub fn cartan_eigen_exponent(&self, x: &CartanExponent, m: &[u32]) -> i64 {
        self.cartan_word(x).eigen_exponent(&self.pattern, m)
    }

    pub(crate) fn apply_gen(&self, i: usize, m: &Occupation) -> FockState {
        assert_eq!(m.len(), self.spec.l, "state arity does not match rank");
        match self.e_words[i].apply_term(&self.pattern, m, &QRational::one()) {
            Some((out, c)) => FockState::term(out, c),
            None => FockState::zero(),
        }
    }

    pub(crate) fn apply_cartan(&self, x: &CartanExponent, m: &Occupation) -> FockState {
        assert_eq!(m.len(), self.spec.l, "state arity does not match rank");
        let k = self.cartan_eigen_exponent(x, m);
        FockState::term(m.clone(), QRational::q_pow(k))
    }

    pub fn evaluator(&self) -> Evaluator {
        Evaluator::new(self.clone())
    }
}

/// Evaluate `e` on `s` in the representation `spec`.
pub fn apply(e: &OpExpr, spec: &RepSpec, s: &FockState) -> FockState {
    let rep = Representation::new(spec);
    let mut ev = rep.evaluator();
    ev.apply(e, s)
}

/// Divided power `e_i^{(n)} = e_i^n / [n]_q!`.
pub fn divided_power(i: usize, n: usize, l: usize) -> OpExpr {
    let f = qfactorial(n as i64).expect("non-negative");
    OpExpr::scale(f.inv().expect("nonzero"), OpExpr::gen(i).power(n, l))
}

/// `sum_k (-1)^k e_i^{(N-k)} e_j e_i^{(k)}` with `N = 1 - a_ij`.
pub fn serre_element(l: usize, i: usize, j: usize) -> OpExpr {
    let n = (1 - cartan_entry(l, i, j)) as usize;
    let terms = (0..=n)
        .map(|k| {
            let t = OpExpr::compose(
                divided_power(i, n - k, l),
                OpExpr::compose(OpExpr::gen(j), divided_power(i, k, l)),
            );
            if k % 2 == 0 {
                t
            } else {
                OpExpr::scale(-QRational::one(), t)
            }
        })
        .collect();
    OpExpr::sum(terms)
}

/// `q^x e_i q^{-x} - q^{<alpha_i, x>} e_i`.
pub fn weight_relation(l: usize, i: usize, x: &CartanExponent) -> OpExpr {
    let pairing = x.pair(&RootIndex::simple(l, i)).expect("same rank");
    let conj = OpExpr::compose(
        OpExpr::cartan(x.clone()),
        OpExpr::compose(OpExpr::gen(i), OpExpr::cartan(x.negate())),
    );
    conj.sub(&OpExpr::scale(QRational::q_pow(pairing), OpExpr::gen(i)))
}

/// Serre relation for `(i, j)` and the weight relations of `e_i` and `e_j`
/// against every `h_k`, evaluated on each sample.
pub fn serre_check(i: usize, j: usize, spec: &RepSpec, samples: &[FockState]) -> bool {
    let l = spec.l;
    if i == j || i > l || j > l {
        return false;
    }
    let rep = Representation::new(spec);
    let mut ev = rep.evaluator();
    let mut relations = vec![serre_element(l, i, j)];
    for k in 0..=l {
        let x = CartanExponent::h(l, k, 1);
        relations.push(weight_relation(l, i, &x));
        relations.push(weight_relation(l, j, &x));
    }
    samples
        .iter()
        .all(|s| relations.iter().all(|r| ev.apply(r, s).is_zero()))
}

/// The explicit image tables of `e_i` and `q^{h_i}` coincide with the
/// composition of the base homomorphism with the diagram automorphisms.
pub fn twist_consistency(l: usize, a: usize, bar: bool, i: usize) -> bool {
    let e = match (explicit_image_e(l, a, bar, i), composed_image_e(l, a, bar, i)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    };
    let h = match (explicit_image_h(l, a, bar, i), composed_image_h(l, a, bar, i)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    };
    e && h
}

/// `sigma^{l+1}` fixes every index of the extended diagram.
pub fn sigma_has_order(l: usize) -> bool {
    (0..=l).all(|i| {
        let mut k = i;
        for _ in 0..=l {
            k = sigma_pow(l, k, 1);
        }
        k == i
    })
}

/// `tau^2` fixes every index.
pub fn tau_is_involution(l: usize) -> bool {
    (0..=l).all(|i| tau(l, tau(l, i)) == i)
}

/// `rho-bar_a(e_i) = rho_{l-a+2}(e_{l-i+1})`, indices mod `l + 1`.
pub fn bar_reflection_consistency(l: usize, a: usize, i: usize) -> bool {
    let j = (l + 1 - i) % (l + 1);
    match (explicit_image_e(l, a, true, i), explicit_image_e(l, l + 2 - a, false, j)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::occupations;

    fn samples(l: usize, max: u32) -> Vec<FockState> {
        occupations(l, max).into_iter().map(FockState::basis).collect()
    }

    #[test]
    fn rep_spec_validation() {
        assert!(RepSpec::new(0, 1, false).is_err());
        assert!(RepSpec::new(2, 4, false).is_err());
        assert_eq!(
            RepSpec::with_zs(2, 1, false, QRational::zero()),
            Err(Error::ZeroParameter)
        );
    }

    #[test]
    fn apply_examples() {
        let spec = RepSpec::new(1, 2, false).unwrap();
        let v0 = FockState::vacuum(1);
        assert_eq!(apply(&OpExpr::gen(0), &spec, &v0), FockState::basis(vec![1]));
        assert!(apply(&OpExpr::gen(1), &spec, &v0).is_zero());
        let h0 = OpExpr::cartan(CartanExponent::h(1, 0, 1));
        for m in 0..4u32 {
            let got = apply(&h0, &spec, &FockState::basis(vec![m]));
            assert_eq!(got, FockState::term(vec![m], QRational::q_pow(2 * m as i64)));
        }
    }

    #[test]
    fn image_qh_examples() {
        let spec = RepSpec::new(1, 2, false).unwrap();
        assert_eq!(image_qh(&CartanExponent::h(1, 0, 1), &spec).unwrap().exps, vec![2]);
        assert!(image_qh(&CartanExponent::central(1, 1), &spec).unwrap().is_identity());
        let spec = RepSpec::new(3, 2, false).unwrap();
        assert_eq!(image_qh(&CartanExponent::h(3, 0, 1), &spec).unwrap().exps, vec![0, -1, 1]);
        assert_eq!(image_qh(&CartanExponent::h(3, 1, 1), &spec).unwrap().exps, vec![-1, -1, -2]);
    }

    #[test]
    fn serre_examples() {
        let spec = RepSpec::new(2, 1, false).unwrap();
        assert!(serre_check(1, 2, &spec, &samples(2, 2)));
        let spec = RepSpec::new(3, 2, false).unwrap();
        assert!(serre_check(0, 1, &spec, &samples(3, 1)));
        assert!(serre_check(0, 2, &spec, &samples(3, 1)));
    }

    #[test]
    fn broken_image_fails_serre() {
        // Sanity check on the checker: e_1 e_1 e_0 ... with the wrong exponent
        // is not annihilated.
        let spec = RepSpec::new(1, 2, false).unwrap();
        let rep = Representation::new(&spec);
        let mut ev = rep.evaluator();
        let wrong = OpExpr::compose(OpExpr::gen(0), OpExpr::gen(0));
        assert!(!ev.apply(&wrong, &FockState::vacuum(1)).is_zero());
    }

    #[test]
    fn twists() {
        for l in 1..=4 {
            assert!(sigma_has_order(l));
            assert!(tau_is_involution(l));
            for a in 1..=l + 1 {
                for i in 0..=l {
                    assert!(twist_consistency(l, a, false, i), "l={l} a={a} i={i}");
                    assert!(twist_consistency(l, a, true, i), "bar l={l} a={a} i={i}");
                    assert!(bar_reflection_consistency(l, a, i));
                }
            }
        }
    }
}
