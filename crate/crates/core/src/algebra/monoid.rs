use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::table::{CayleyTable, Elem};

/// A finite monoid given by its operation table and neutral element.
///
/// Catalog monoids always have their neutral element at index 0, but the type
/// does not require it: multiplicative monoids of semirings and the join monoid
/// of a dual lattice usually have it elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMonoid", into = "RawMonoid")]
pub struct Monoid {
    op: CayleyTable,
    neutral: Elem,
}

#[derive(Serialize, Deserialize)]
struct RawMonoid {
    #[serde(flatten)]
    table: CayleyTable,
    neutral: Elem,
}

impl TryFrom<RawMonoid> for Monoid {
    type Error = AlgebraError;

    fn try_from(raw: RawMonoid) -> Result<Self, Self::Error> {
        let m = validate_monoid(raw.table, false)?;
        if m.neutral != raw.neutral {
            return Err(AlgebraError::Malformed(format!(
                "declared neutral {} but the neutral element is {}",
                raw.neutral, m.neutral
            )));
        }
        Ok(m)
    }
}

impl From<Monoid> for RawMonoid {
    fn from(m: Monoid) -> Self {
        RawMonoid { table: m.op, neutral: m.neutral }
    }
}

/// Checks associativity, locates the neutral element and, if asked, checks commutativity.
pub fn validate_monoid(table: CayleyTable, require_commutative: bool) -> Result<Monoid, AlgebraError> {
    if let Some((x, y, z)) = table.associativity_witness() {
        return Err(AlgebraError::NotAssociative(x, y, z));
    }
    let neutral = table.neutral_element().ok_or(AlgebraError::NoNeutralElement)?;
    if require_commutative {
        if let Some((x, y)) = table.commutativity_witness() {
            return Err(AlgebraError::NotCommutative(x, y));
        }
    }
    Ok(Monoid { op: table, neutral })
}

impl Monoid {
    pub fn new(table: CayleyTable, require_commutative: bool) -> Result<Self, AlgebraError> {
        validate_monoid(table, require_commutative)
    }

    pub fn from_rows<R: AsRef<[Elem]>>(rows: impl IntoIterator<Item = R>) -> Result<Self, AlgebraError> {
        validate_monoid(CayleyTable::from_rows(rows)?, false)
    }

    /// Caller guarantees the monoid axioms; checked in debug builds.
    pub(crate) fn new_unchecked(op: CayleyTable, neutral: Elem) -> Self {
        debug_assert!(op.associativity_witness().is_none());
        debug_assert_eq!(op.neutral_element(), Some(neutral));
        Monoid { op, neutral }
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Monoid::new_unchecked(CayleyTable::from_fn(1, |_, _| 0), 0)
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        Monoid::new_unchecked(CayleyTable::from_fn(n, |x, y| (x + y) % n), 0)
    }

    /// `({0,…,n−1}, max)`, the join monoid of an `n`-chain.
    pub fn chain_max(n: usize) -> Self {
        Monoid::new_unchecked(CayleyTable::from_fn(n, |x, y| x.max(y)), 0)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.op.order()
    }

    #[inline]
    pub fn neutral(&self) -> Elem {
        self.neutral
    }

    #[inline]
    pub fn op(&self, x: Elem, y: Elem) -> Elem {
        self.op.get(x, y)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.op
    }

    pub fn is_commutative(&self) -> bool {
        self.op.is_commutative()
    }

    pub fn opposite(&self) -> Monoid {
        Monoid { op: self.op.transposed(), neutral: self.neutral }
    }

    /// Relabels so that the neutral element becomes 0, by swapping it with 0.
    /// Returns the relabeled monoid and the bijection `self → result`.
    pub fn normalized(&self) -> (Monoid, Vec<Elem>) {
        let mut perm: Vec<Elem> = (0..self.order()).collect();
        perm.swap(0, self.neutral);
        (self.relabel(&perm), perm)
    }

    /// Transports the monoid along the bijection `perm`.
    pub fn relabel(&self, perm: &[Elem]) -> Monoid {
        Monoid { op: self.op.relabel(perm), neutral: perm[self.neutral] }
    }

    /// `x + x + … + x` with `n` summands; `n = 0` gives the neutral element.
    pub fn power(&self, x: Elem, n: usize) -> Elem {
        (0..n).fold(self.neutral, |acc, _| self.op(acc, x))
    }

    /// Membership mask of the submonoid generated by `gens`.
    pub fn generated_submonoid(&self, gens: impl IntoIterator<Item = Elem>) -> Vec<bool> {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[self.neutral] = true;
        let mut members = vec![self.neutral];
        for g in gens {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for c in [self.op(a, b), self.op(b, a)] {
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        inside
    }

    /// Whether `h: self → target` satisfies `h(0) = 0` and `h(x+y) = h(x)+h(y)`.
    pub fn is_hom_to(&self, target: &Monoid, h: &[Elem]) -> bool {
        h.len() == self.order()
            && h[self.neutral] == target.neutral
            && (0..self.order())
                .all(|x| (0..self.order()).all(|y| h[self.op(x, y)] == target.op(h[x], h[y])))
    }

    pub fn render(&self, title: &str) -> String {
        self.op.render(title)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m6_is_commutative_monoid() {
        let m = Monoid::new(CayleyTable::from_rows([[0, 1, 2], [1, 2, 1], [2, 1, 2]]).unwrap(), true).unwrap();
        assert_eq!(m.neutral(), 0);
        assert!(m.is_commutative());
    }

    #[test]
    fn singleton() {
        let m = Monoid::new(CayleyTable::from_rows([[0]]).unwrap(), true).unwrap();
        assert_eq!(m, Monoid::trivial());
    }

    #[test]
    fn out_of_range_table_is_rejected_before_validation() {
        assert!(matches!(
            CayleyTable::from_rows([[0, 1], [1, 2]]),
            Err(AlgebraError::Malformed(_))
        ));
    }

    #[test]
    fn witnesses() {
        // left-zero semigroup: associative, no neutral element
        let lz = CayleyTable::from_rows([[0, 0], [1, 1]]).unwrap();
        assert_eq!(validate_monoid(lz, false), Err(AlgebraError::NoNeutralElement));

        let nonassoc = CayleyTable::from_rows([[0, 1, 2], [1, 2, 0], [2, 1, 0]]).unwrap();
        assert!(matches!(validate_monoid(nonassoc, false), Err(AlgebraError::NotAssociative(..))));

        // noncommutative monoid: {1, a, b} with a·b = a, b·a = b style left-zero part plus identity
        let nc = CayleyTable::from_rows([[0, 1, 2], [1, 1, 1], [2, 2, 2]]).unwrap();
        assert!(validate_monoid(nc.clone(), false).is_ok());
        assert_eq!(validate_monoid(nc, true), Err(AlgebraError::NotCommutative(1, 2)));
    }

    #[test]
    fn normalization_moves_neutral_to_zero() {
        let t = CayleyTable::from_rows([[0, 0], [0, 1]]).unwrap();
        let m = Monoid::new(t, true).unwrap();
        assert_eq!(m.neutral(), 1);
        let (n, perm) = m.normalized();
        assert_eq!(perm, vec![1, 0]);
        assert_eq!(n.neutral(), 0);
        assert_eq!(n.table(), &CayleyTable::from_rows([[0, 1], [1, 1]]).unwrap());
    }

    #[test]
    fn generated_submonoid_of_cyclic() {
        let c4 = Monoid::cyclic(4);
        assert_eq!(c4.generated_submonoid([2]), vec![true, false, true, false]);
        assert_eq!(c4.generated_submonoid([1]), vec![true; 4]);
    }
}
