//! Finite monoids, semirings and lattices, isomorphism testing, and the embedded catalog.

pub mod catalog;
pub mod iso;
pub mod lattice;
pub mod monoid;
pub mod semiring;

pub use catalog::{catalog_lookup, CatalogEntry, CatalogMatch};
pub use lattice::{dual_lattice, lattice_join_monoid, Lattice};
pub use monoid::{validate_monoid, Monoid};
pub use semiring::{validate_semiring, Semiring};

use crate::table::Elem;

/// The lexicographically smallest isomorphism `a → b`, if any.
pub fn are_isomorphic(a: &Monoid, b: &Monoid) -> Option<Vec<Elem>> {
    iso::first(&[(a.table(), b.table())], &[(a.neutral(), b.neutral())])
}

/// Every isomorphism `a → b`, in lexicographic order.
pub fn isomorphisms(a: &Monoid, b: &Monoid) -> Vec<Vec<Elem>> {
    iso::all(&[(a.table(), b.table())], &[(a.neutral(), b.neutral())])
}

pub fn automorphisms(m: &Monoid) -> Vec<Vec<Elem>> {
    isomorphisms(m, m)
}

/// The lexicographically smallest bijection `π` with `π(x·y) = π(y)·π(x)`.
pub fn are_anti_isomorphic(a: &Monoid, b: &Monoid) -> Option<Vec<Elem>> {
    are_isomorphic(&a.opposite(), b)
}

/// The lexicographically smallest bijection preserving both operations (hence `0` and `1`).
pub fn semiring_isomorphism(a: &Semiring, b: &Semiring) -> Option<Vec<Elem>> {
    iso::first(
        &[(a.additive().table(), b.additive().table()), (a.multiplicative().table(), b.multiplicative().table())],
        &[(a.zero(), b.zero()), (a.one(), b.one())],
    )
}

pub fn semiring_automorphisms(s: &Semiring) -> Vec<Vec<Elem>> {
    iso::all(
        &[(s.additive().table(), s.additive().table()), (s.multiplicative().table(), s.multiplicative().table())],
        &[(s.zero(), s.zero()), (s.one(), s.one())],
    )
}

/// A semiring isomorphism `a → b` or, failing that, one from the opposite of `a`.
/// The flag is `true` for the latter.
pub fn semiring_isomorphism_up_to_opposite(a: &Semiring, b: &Semiring) -> Option<(Vec<Elem>, bool)> {
    semiring_isomorphism(a, b)
        .map(|p| (p, false))
        .or_else(|| semiring_isomorphism(&a.opposite(), b).map(|p| (p, true)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_m2() {
        let m2 = catalog::monoid("M2").unwrap();
        assert_eq!(are_isomorphic(&m2, &m2), Some(vec![0, 1]));
    }

    #[test]
    fn m3_and_m4_differ() {
        assert!(are_isomorphic(&catalog::monoid("M3").unwrap(), &catalog::monoid("M4").unwrap()).is_none());
    }

    #[test]
    fn diamond_join_is_m11() {
        let m = Lattice::diamond().join_monoid();
        assert_eq!(catalog_lookup(&m).unwrap().label, "M11");
        assert_eq!(catalog_lookup(&Lattice::chain(2).join_monoid()).unwrap().label, "M1");
        assert_eq!(catalog_lookup(&Lattice::chain(3).join_monoid()).unwrap().label, "M4");
    }

    #[test]
    fn f4_reference_semiring() {
        let f4 = catalog::reference_semirings()
            .into_iter()
            .find(|r| r.additive == "M25" && r.mult_label == "M18")
            .unwrap();
        let s = validate_semiring(catalog::entry("M25").unwrap().table.clone(), f4.mul).unwrap();
        assert!(!s.one_generates_addition());
        assert_eq!(semiring_automorphisms(&s).len(), 2);
    }

    #[test]
    fn m23_semiring_with_m11_multiplication_is_not_one_generated() {
        let r = catalog::reference_semirings()
            .into_iter()
            .find(|r| r.additive == "M23" && r.mult_label == "M11")
            .unwrap();
        let s = validate_semiring(catalog::entry("M23").unwrap().table.clone(), r.mul).unwrap();
        assert!(!s.one_generates_addition());
    }

    #[test]
    fn n_monoids_are_not_self_opposite() {
        for label in ["N1", "N2"] {
            let m = catalog::monoid(label).unwrap();
            assert!(are_isomorphic(&m, &m.opposite()).is_none());
            assert!(are_anti_isomorphic(&m, &m.opposite()).is_some());
        }
    }
}
