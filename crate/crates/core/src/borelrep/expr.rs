//! Operator expressions over the Borel generators and their lazy evaluation.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::exactfield::QRational;
use crate::fock::{FockState, Occupation};
use crate::rootsys::CartanExponent;

use super::Representation;

#[derive(Debug)]
pub enum OpNode {
    /// Generator `e_i`.
    Gen(usize),
    /// `q^x`.
    CartanPower(CartanExponent),
    Sum(Vec<OpExpr>),
    Scale(QRational, OpExpr),
    /// `Compose(f, g)` acts as `f(g(v))`.
    Compose(OpExpr, OpExpr),
}

/// Shared, immutable expression tree. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct OpExpr(Arc<OpNode>);

impl OpExpr {
    fn wrap(node: OpNode) -> Self {
        OpExpr(Arc::new(node))
    }

    pub fn gen(i: usize) -> Self {
        Self::wrap(OpNode::Gen(i))
    }

    pub fn cartan(x: CartanExponent) -> Self {
        Self::wrap(OpNode::CartanPower(x))
    }

    pub fn identity(l: usize) -> Self {
        Self::cartan(CartanExponent::zero(l))
    }

    pub fn zero() -> Self {
        Self::wrap(OpNode::Sum(Vec::new()))
    }

    pub fn sum(terms: Vec<OpExpr>) -> Self {
        Self::wrap(OpNode::Sum(terms))
    }

    pub fn scale(c: QRational, e: OpExpr) -> Self {
        if c.is_one() {
            return e;
        }
        Self::wrap(OpNode::Scale(c, e))
    }

    pub fn compose(f: OpExpr, g: OpExpr) -> Self {
        Self::wrap(OpNode::Compose(f, g))
    }

    pub fn node(&self) -> &OpNode {
        &self.0
    }

    pub fn add(&self, other: &OpExpr) -> OpExpr {
        Self::sum(vec![self.clone(), other.clone()])
    }

    pub fn sub(&self, other: &OpExpr) -> OpExpr {
        self.add(&Self::scale(-QRational::one(), other.clone()))
    }

    /// `self^k` (`k = 0` gives the identity on rank `l`).
    pub fn power(&self, k: usize, l: usize) -> OpExpr {
        (0..k).fold(Self::identity(l), |acc, _| Self::compose(self.clone(), acc))
    }

    /// Number of distinct nodes reachable from the root.
    pub fn node_count(&self) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(e) = stack.pop() {
            if !seen.insert(e.key()) {
                continue;
            }
            match e.node() {
                OpNode::Gen(_) | OpNode::CartanPower(_) => {}
                OpNode::Sum(ts) => stack.extend(ts.iter().cloned()),
                OpNode::Scale(_, x) => stack.push(x.clone()),
                OpNode::Compose(f, g) => {
                    stack.push(f.clone());
                    stack.push(g.clone());
                }
            }
        }
        seen.len()
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            OpNode::Gen(i) => write!(f, "e{i}"),
            OpNode::CartanPower(x) => write!(f, "q^{:?}", x.coeffs()),
            OpNode::Sum(ts) if ts.is_empty() => write!(f, "0"),
            OpNode::Sum(ts) => {
                write!(f, "(")?;
                for (k, t) in ts.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            OpNode::Scale(c, e) => write!(f, "[{c}]*{e}"),
            OpNode::Compose(a, b) => write!(f, "{a}.{b}"),
        }
    }
}

/// Evaluates expressions against one representation, caching the action
/// of composite nodes on basis vectors.
///
/// Cache keys are node addresses; the evaluator keeps every cached node
/// alive so an address is never reused while the cache exists.
pub struct Evaluator {
    rep: Representation,
    cache: HashMap<(usize, Occupation), FockState>,
    retained: HashMap<usize, OpExpr>,
}

impl Evaluator {
    pub fn new(rep: Representation) -> Self {
        Evaluator {
            rep,
            cache: HashMap::new(),
            retained: HashMap::new(),
        }
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn apply(&mut self, e: &OpExpr, s: &FockState) -> FockState {
        let mut out = FockState::zero();
        for (m, c) in s.terms() {
            let part = self.apply_basis(e, m);
            out.add_assign(&part.scale(c));
        }
        out
    }

    pub fn apply_basis(&mut self, e: &OpExpr, m: &Occupation) -> FockState {
        match e.node() {
            OpNode::Gen(i) => self.rep.apply_gen(*i, m),
            OpNode::CartanPower(x) => self.rep.apply_cartan(x, m),
            _ => {
                let key = (e.key(), m.clone());
                if let Some(hit) = self.cache.get(&key) {
                    return hit.clone();
                }
                let result = match e.node() {
                    OpNode::Sum(ts) => {
                        let mut acc = FockState::zero();
                        for t in ts {
                            let part = self.apply_basis(t, m);
                            acc.add_assign(&part);
                        }
                        acc
                    }
                    OpNode::Scale(c, x) => self.apply_basis(x, m).scale(c),
                    OpNode::Compose(f, g) => {
                        let inner = self.apply_basis(g, m);
                        self.apply(f, &inner)
                    }
                    OpNode::Gen(_) | OpNode::CartanPower(_) => unreachable!(),
                };
                self.retained.entry(e.key()).or_insert_with(|| e.clone());
                self.cache.insert(key, result.clone());
                result
            }
        }
    }
}
