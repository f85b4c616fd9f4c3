use serde::{Deserialize, Serialize};

use super::monoid::Monoid;
use crate::error::AlgebraError;
use crate::table::{CayleyTable, Elem};

/// A finite lattice given by its order relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLattice", into = "RawLattice")]
pub struct Lattice {
    order: usize,
    leq: Vec<bool>,
    join: CayleyTable,
    meet: CayleyTable,
}

#[derive(Serialize, Deserialize)]
struct RawLattice {
    order: usize,
    leq: Vec<Vec<bool>>,
}

impl TryFrom<RawLattice> for Lattice {
    type Error = AlgebraError;
    fn try_from(raw: RawLattice) -> Result<Self, Self::Error> {
        if raw.leq.len() != raw.order || raw.leq.iter().any(|r| r.len() != raw.order) {
            return Err(AlgebraError::Malformed("relation must be order × order".into()));
        }
        Lattice::from_relation(raw.order, |x, y| raw.leq[x][y])
    }
}

impl From<Lattice> for RawLattice {
    fn from(l: Lattice) -> Self {
        RawLattice {
            order: l.order,
            leq: (0..l.order).map(|x| (0..l.order).map(|y| l.leq(x, y)).collect()).collect(),
        }
    }
}

impl Lattice {
    /// Validates a partial order and computes its joins and meets.
    pub fn from_relation(order: usize, leq: impl Fn(Elem, Elem) -> bool) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::NotALattice("empty carrier".into()));
        }
        let rel: Vec<bool> = (0..order * order).map(|k| leq(k / order, k % order)).collect();
        let le = |x: Elem, y: Elem| rel[x * order + y];
        for x in 0..order {
            if !le(x, x) {
                return Err(AlgebraError::NotALattice(format!("not reflexive at {x}")));
            }
            for y in 0..order {
                if x != y && le(x, y) && le(y, x) {
                    return Err(AlgebraError::NotALattice(format!("not antisymmetric at ({x},{y})")));
                }
                for z in 0..order {
                    if le(x, y) && le(y, z) && !le(x, z) {
                        return Err(AlgebraError::NotALattice(format!("not transitive at ({x},{y},{z})")));
                    }
                }
            }
        }
        let bound = |x: Elem, y: Elem, upper: bool| -> Option<Elem> {
            let above = |a: Elem, b: Elem| if upper { le(a, b) } else { le(b, a) };
            let bounds: Vec<Elem> = (0..order).filter(|&z| above(x, z) && above(y, z)).collect();
            bounds.iter().copied().find(|&b| bounds.iter().all(|&c| above(b, c)))
        };
        let mut join = vec![0; order * order];
        let mut meet = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                join[x * order + y] = bound(x, y, true)
                    .ok_or_else(|| AlgebraError::NotALattice(format!("{x} and {y} have no least upper bound")))?;
                meet[x * order + y] = bound(x, y, false)
                    .ok_or_else(|| AlgebraError::NotALattice(format!("{x} and {y} have no greatest lower bound")))?;
            }
        }
        Ok(Lattice {
            order,
            leq: rel,
            join: CayleyTable::from_flat(order, join)?,
            meet: CayleyTable::from_flat(order, meet)?,
        })
    }

    /// The chain `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Self {
        Lattice::from_relation(n, |x, y| x <= y).expect("chains are lattices")
    }

    /// Bottom `0`, two incomparable atoms `1` and `2`, top `3`.
    pub fn diamond() -> Self {
        Lattice::from_relation(4, |x, y| x == y || x == 0 || y == 3).expect("the diamond is a lattice")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.order + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    pub fn bottom(&self) -> Elem {
        (0..self.order).find(|&b| (0..self.order).all(|x| self.leq(b, x))).expect("finite lattices have a bottom")
    }

    pub fn top(&self) -> Elem {
        (0..self.order).find(|&t| (0..self.order).all(|x| self.leq(x, t))).expect("finite lattices have a top")
    }

    /// `(S, ∨)` with neutral element the bottom.
    pub fn join_monoid(&self) -> Monoid {
        Monoid::new_unchecked(self.join.clone(), self.bottom())
    }

    /// The order-reversed lattice on the same carrier, with the star bijection `x ↦ x*`
    /// (the identity on indices).
    pub fn dual(&self) -> (Lattice, Vec<Elem>) {
        let n = self.order;
        let dual = Lattice {
            order: n,
            leq: (0..n * n).map(|k| self.leq(k % n, k / n)).collect(),
            join: self.meet.clone(),
            meet: self.join.clone(),
        };
        (dual, (0..n).collect())
    }

    /// Whether `perm` is an order isomorphism `self → other`.
    pub fn is_order_isomorphism(&self, other: &Lattice, perm: &[Elem]) -> bool {
        let n = self.order;
        n == other.order && (0..n).all(|x| (0..n).all(|y| self.leq(x, y) == other.leq(perm[x], perm[y])))
    }
}

pub fn lattice_join_monoid(l: &Lattice) -> Monoid {
    l.join_monoid()
}

pub fn dual_lattice(l: &Lattice) -> (Lattice, Vec<Elem>) {
    l.dual()
}
