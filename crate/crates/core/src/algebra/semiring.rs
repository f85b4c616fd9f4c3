use serde::{Deserialize, Serialize};

use super::monoid::{validate_monoid, Monoid};
use crate::error::{AlgebraError, Side};
use crate::table::{CayleyTable, Elem};

/// A finite semiring `(S, +, ·)`: commutative additive monoid, multiplicative
/// monoid with unit `one`, absorbing zero and two-sided distributivity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSemiring", into = "RawSemiring")]
pub struct Semiring {
    add: Monoid,
    mul: Monoid,
}

#[derive(Serialize, Deserialize)]
struct RawSemiring {
    add: CayleyTable,
    mul: CayleyTable,
}

impl TryFrom<RawSemiring> for Semiring {
    type Error = AlgebraError;
    fn try_from(raw: RawSemiring) -> Result<Self, Self::Error> {
        validate_semiring(raw.add, raw.mul)
    }
}

impl From<Semiring> for RawSemiring {
    fn from(s: Semiring) -> Self {
        RawSemiring { add: s.add.table().clone(), mul: s.mul.table().clone() }
    }
}

/// Checks all four semiring axioms exhaustively.
pub fn validate_semiring(add: CayleyTable, mul: CayleyTable) -> Result<Semiring, AlgebraError> {
    if add.order() != mul.order() {
        return Err(AlgebraError::OrderMismatch(add.order(), mul.order()));
    }
    let add = validate_monoid(add, true).map_err(|e| AlgebraError::AdditiveNotCommutativeMonoid(Box::new(e)))?;
    let mul = validate_monoid(mul, false).map_err(|e| AlgebraError::MulNotMonoid(Box::new(e)))?;
    let n = add.order();
    let zero = add.neutral();
    if let Some(x) = (0..n).find(|&x| mul.op(x, zero) != zero || mul.op(zero, x) != zero) {
        return Err(AlgebraError::ZeroNotAbsorbing(x));
    }
    if let Some((x, y, z, side)) = distributivity_witness(&add, mul.table()) {
        return Err(AlgebraError::NotDistributive { x, y, z, side });
    }
    Ok(Semiring { add, mul })
}

pub(crate) fn distributivity_witness(add: &Monoid, mul: &CayleyTable) -> Option<(Elem, Elem, Elem, Side)> {
    let n = add.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let yz = add.op(y, z);
                if mul.get(x, yz) != add.op(mul.get(x, y), mul.get(x, z)) {
                    return Some((x, y, z, Side::Left));
                }
                if mul.get(yz, x) != add.op(mul.get(y, x), mul.get(z, x)) {
                    return Some((x, y, z, Side::Right));
                }
            }
        }
    }
    None
}

impl Semiring {
    pub fn new(add: CayleyTable, mul: CayleyTable) -> Result<Self, AlgebraError> {
        validate_semiring(add, mul)
    }

    pub(crate) fn from_parts_unchecked(add: Monoid, mul: Monoid) -> Self {
        Semiring { add, mul }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &Monoid {
        &self.add
    }

    pub fn multiplicative(&self) -> &Monoid {
        &self.mul
    }

    pub fn zero(&self) -> Elem {
        self.add.neutral()
    }

    pub fn one(&self) -> Elem {
        self.mul.neutral()
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add.op(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.op(x, y)
    }

    pub fn is_commutative(&self) -> bool {
        self.mul.is_commutative()
    }

    /// The semiring with the opposite multiplication `x ∘ y := y · x`.
    pub fn opposite(&self) -> Semiring {
        Semiring { add: self.add.clone(), mul: self.mul.opposite() }
    }

    pub fn relabel(&self, perm: &[Elem]) -> Semiring {
        Semiring { add: self.add.relabel(perm), mul: self.mul.relabel(perm) }
    }

    /// The field with two elements.
    pub fn f2() -> Semiring {
        Semiring {
            add: Monoid::cyclic(2),
            mul: Monoid::new_unchecked(CayleyTable::from_fn(2, |x, y| x & y), 1),
        }
    }

    /// The Boolean semiring `({0,1}, ∨, ·)`.
    pub fn boolean() -> Semiring {
        Semiring {
            add: Monoid::chain_max(2),
            mul: Monoid::new_unchecked(CayleyTable::from_fn(2, |x, y| x & y), 1),
        }
    }

    /// Whether every nonzero element is an `n`-fold sum `1 + … + 1` with `n ≥ 1`.
    pub fn one_generates_addition(&self) -> bool {
        let n = self.order();
        let mut reached = vec![false; n];
        let mut x = self.one();
        // the orbit of 1 under `+ 1` has at most n distinct points
        for _ in 0..n {
            reached[x] = true;
            x = self.add(x, self.one());
        }
        (0..n).all(|y| y == self.zero() || reached[y])
    }
}
