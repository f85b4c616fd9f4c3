//! Embedded reference tables: the commutative monoids of order at most four,
//! the two noncommutative monoids of order four with an absorbing element, the
//! multiplicative monoid of the four-element field, every semiring
//! multiplication on the catalog monoids of order two to four, and the
//! essentially different duality functions between catalog monoids.
//!
//! Tables are stored verbatim in the catalog's element naming, so lookups never
//! depend on the enumeration code.

use std::sync::OnceLock;

use serde::Serialize;

use super::iso;
use super::monoid::Monoid;
use crate::error::AlgebraError;
use crate::table::{CayleyTable, Elem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub table: CayleyTable,
    pub neutral: Elem,
    pub commutative: bool,
    pub absorbing: Option<Elem>,
    pub almost_absorbing: Option<Elem>,
}

impl CatalogEntry {
    fn from_rows(label: String, rows: &[&[Elem]]) -> Self {
        let table = CayleyTable::from_rows(rows).expect("catalog tables are well formed");
        let neutral = table.neutral_element().expect("catalog tables have a neutral element");
        CatalogEntry {
            label,
            commutative: table.is_commutative(),
            absorbing: table.absorbing_element(),
            almost_absorbing: table.almost_absorbing_element(),
            neutral,
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn monoid(&self) -> Monoid {
        Monoid::new_unchecked(self.table.clone(), self.neutral)
    }

    /// Position of the entry in the catalog; used to order labels.
    pub fn index(&self) -> usize {
        catalog().iter().position(|e| e.label == self.label).expect("entry comes from the catalog")
    }

    pub fn render(&self) -> String {
        self.table.render(&self.label)
    }
}

/// A semiring multiplication on a catalog monoid, with the label of its multiplicative monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceSemiring {
    pub additive: String,
    pub mul: CayleyTable,
    pub mult_label: String,
}

/// A duality function `S × R → T` between catalog monoids; rows are indexed by `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceDuality {
    pub name: String,
    pub s: String,
    pub r: String,
    pub t: String,
    pub table: Vec<Vec<Elem>>,
}

const MONOID_TABLES: [&[&[Elem]]; 27] = [
    // M0
    &[&[0]],
    // M1
    &[&[0, 1], &[1, 1]],
    // M2
    &[&[0, 1], &[1, 0]],
    // M3
    &[&[0, 1, 2], &[1, 2, 2], &[2, 2, 2]],
    // M4
    &[&[0, 1, 2], &[1, 1, 2], &[2, 2, 2]],
    // M5
    &[&[0, 1, 2], &[1, 0, 2], &[2, 2, 2]],
    // M6
    &[&[0, 1, 2], &[1, 2, 1], &[2, 1, 2]],
    // M7
    &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]],
    // M8
    &[&[0, 1, 2, 3], &[1, 3, 3, 3], &[2, 3, 3, 3], &[3, 3, 3, 3]],
    // M9
    &[&[0, 1, 2, 3], &[1, 2, 3, 3], &[2, 3, 3, 3], &[3, 3, 3, 3]],
    // M10
    &[&[0, 1, 2, 3], &[1, 3, 3, 3], &[2, 3, 2, 3], &[3, 3, 3, 3]],
    // M11
    &[&[0, 1, 2, 3], &[1, 1, 3, 3], &[2, 3, 2, 3], &[3, 3, 3, 3]],
    // M12
    &[&[0, 1, 2, 3], &[1, 0, 2, 3], &[2, 2, 3, 3], &[3, 3, 3, 3]],
    // M13
    &[&[0, 1, 2, 3], &[1, 3, 1, 3], &[2, 1, 2, 3], &[3, 3, 3, 3]],
    // M14
    &[&[0, 1, 2, 3], &[1, 2, 2, 3], &[2, 2, 2, 3], &[3, 3, 3, 3]],
    // M15
    &[&[0, 1, 2, 3], &[1, 1, 2, 3], &[2, 2, 2, 3], &[3, 3, 3, 3]],
    // M16
    &[&[0, 1, 2, 3], &[1, 0, 2, 3], &[2, 2, 2, 3], &[3, 3, 3, 3]],
    // M17
    &[&[0, 1, 2, 3], &[1, 2, 1, 3], &[2, 1, 2, 3], &[3, 3, 3, 3]],
    // M18
    &[&[0, 1, 2, 3], &[1, 2, 0, 3], &[2, 0, 1, 3], &[3, 3, 3, 3]],
    // M19
    &[&[0, 1, 2, 3], &[1, 2, 2, 3], &[2, 2, 2, 3], &[3, 3, 3, 2]],
    // M20
    &[&[0, 1, 2, 3], &[1, 3, 1, 1], &[2, 1, 2, 3], &[3, 1, 3, 3]],
    // M21
    &[&[0, 1, 2, 3], &[1, 3, 1, 1], &[2, 1, 0, 3], &[3, 1, 3, 3]],
    // M22
    &[&[0, 1, 2, 3], &[1, 3, 3, 2], &[2, 3, 3, 2], &[3, 2, 2, 3]],
    // M23
    &[&[0, 1, 2, 3], &[1, 3, 3, 1], &[2, 3, 0, 1], &[3, 1, 1, 3]],
    // M24
    &[&[0, 1, 2, 3], &[1, 2, 3, 1], &[2, 3, 1, 2], &[3, 1, 2, 3]],
    // M25
    &[&[0, 1, 2, 3], &[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]],
    // M26
    &[&[0, 1, 2, 3], &[1, 2, 3, 0], &[2, 3, 0, 1], &[3, 0, 1, 2]],
];

const SEMIRING_MULS: &[(usize, &str, &[&[Elem]])] = &[
    (1, "M1", &[&[0, 0], &[0, 1]]),
    (2, "M1", &[&[0, 0], &[0, 1]]),
    (3, "M4", &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 2]]),
    (4, "M3", &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 2]]),
    (4, "M4", &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 2]]),
    (4, "M4", &[&[0, 0, 0], &[0, 1, 1], &[0, 1, 2]]),
    (6, "M4", &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 2]]),
    (7, "M5", &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 1]]),
    (8, "M14", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 3], &[0, 3, 3, 3]]),
    (8, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 3], &[0, 3, 3, 3]]),
    (8, "M16", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 1, 3], &[0, 3, 3, 3]]),
    (9, "M14", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 3], &[0, 3, 3, 3]]),
    (10, "M13", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 2], &[0, 3, 2, 3]]),
    (10, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 2], &[0, 3, 2, 3]]),
    (11, "M11", &[&[0, 0, 0, 0], &[0, 1, 0, 1], &[0, 0, 2, 2], &[0, 1, 2, 3]]),
    (11, "M13", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 2], &[0, 3, 2, 3]]),
    (11, "M14", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 3], &[0, 3, 3, 3]]),
    (11, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 2], &[0, 3, 2, 3]]),
    (11, "M16", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 1, 3], &[0, 3, 3, 3]]),
    (13, "M13", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 2], &[0, 3, 2, 3]]),
    (13, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 2], &[0, 3, 2, 3]]),
    (14, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 3], &[0, 3, 3, 3]]),
    (15, "M8", &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 2], &[0, 1, 2, 3]]),
    (15, "M9", &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 2], &[0, 1, 2, 3]]),
    (15, "M10", &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 2, 2], &[0, 1, 2, 3]]),
    (15, "M13", &[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 1, 2, 3], &[0, 1, 3, 3]]),
    (15, "M13", &[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 1, 2, 2], &[0, 1, 2, 3]]),
    (15, "M14", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 3], &[0, 3, 3, 3]]),
    (15, "M14", &[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 1, 2], &[0, 1, 2, 3]]),
    (15, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 3], &[0, 3, 3, 3]]),
    (15, "M15", &[&[0, 0, 0, 0], &[0, 1, 1, 3], &[0, 1, 2, 3], &[0, 3, 3, 3]]),
    (15, "M15", &[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 2, 3], &[0, 1, 3, 3]]),
    (15, "M15", &[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 2, 2], &[0, 1, 2, 3]]),
    (15, "N1", &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 1, 2, 2], &[0, 1, 2, 3]]),
    (15, "N2", &[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 2, 3], &[0, 3, 3, 3]]),
    (17, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 3], &[0, 3, 3, 3]]),
    (20, "M13", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 2], &[0, 3, 2, 3]]),
    (20, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 2], &[0, 3, 2, 3]]),
    (21, "M10", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 0], &[0, 3, 0, 3]]),
    (22, "M15", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 3], &[0, 3, 3, 3]]),
    (23, "M11", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 0], &[0, 3, 0, 3]]),
    (24, "M16", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 1, 3], &[0, 3, 3, 3]]),
    (25, "M11", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 0], &[0, 3, 0, 3]]),
    (25, "M12", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 1, 3], &[0, 3, 3, 0]]),
    (25, "M18", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 1], &[0, 3, 1, 2]]),
    (26, "M12", &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 2], &[0, 3, 2, 1]]),
];

/// Name, catalog indices of S, R, T, and the rows of ψ.
type DualityRow = (&'static str, usize, usize, usize, &'static [&'static [Elem]]);

const DUALITY_TABLES: &[DualityRow] = &[
    ("psi1", 1, 1, 1, &[&[0, 0], &[0, 1]]),
    ("psi2", 2, 2, 2, &[&[0, 0], &[0, 1]]),
    ("psi3", 3, 3, 3, &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 2]]),
    ("psi4", 4, 4, 1, &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 1]]),
    ("psi5", 5, 6, 5, &[&[0, 0, 0], &[0, 1, 0], &[0, 2, 2]]),
    ("psi6", 6, 6, 6, &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 2]]),
    ("psi7", 7, 7, 7, &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 1]]),
    ("psi9", 9, 9, 9, &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 3], &[0, 3, 3, 3]]),
    ("psi10", 10, 10, 3, &[&[0, 0, 0, 0], &[0, 1, 2, 2], &[0, 2, 0, 2], &[0, 2, 2, 2]]),
    ("psi11", 11, 11, 1, &[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 1, 0, 1], &[0, 1, 1, 1]]),
    ("psi13", 13, 14, 3, &[&[0, 0, 0, 0], &[0, 1, 2, 2], &[0, 0, 0, 2], &[0, 2, 2, 2]]),
    ("psi15", 15, 15, 1, &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 1], &[0, 1, 1, 1]]),
    ("psi16", 16, 20, 5, &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 2, 0, 2], &[0, 2, 2, 2]]),
    ("psi17", 17, 17, 5, &[&[0, 0, 0, 0], &[0, 1, 0, 2], &[0, 0, 0, 2], &[0, 2, 2, 2]]),
    ("psi18", 18, 24, 18, &[&[0, 0, 0, 0], &[0, 1, 2, 0], &[0, 2, 1, 0], &[0, 3, 3, 3]]),
    ("psi21", 21, 21, 5, &[&[0, 0, 0, 0], &[0, 2, 1, 2], &[0, 1, 0, 0], &[0, 2, 0, 2]]),
    ("psi22", 22, 22, 22, &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 3], &[0, 3, 3, 3]]),
    ("psi23", 23, 23, 23, &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 2, 0], &[0, 3, 0, 3]]),
    ("psi235", 23, 23, 5, &[&[0, 0, 0, 0], &[0, 2, 1, 2], &[0, 1, 1, 0], &[0, 2, 0, 2]]),
    ("psi24", 24, 24, 24, &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 1, 3], &[0, 3, 3, 3]]),
    ("psi25", 25, 25, 2, &[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 1, 0, 1], &[0, 1, 1, 0]]),
    ("psi26", 26, 26, 26, &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 2], &[0, 3, 2, 1]]),
];

const N1: &[&[Elem]] = &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 1, 2, 2], &[0, 1, 2, 3]];
const N2: &[&[Elem]] = &[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 2, 3], &[0, 3, 3, 3]];
const F4_MULT: &[&[Elem]] = &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 3, 1], &[0, 3, 1, 2]];

/// Every catalog entry: `M0`–`M26`, then `N1`, `N2` and `F4-mult`.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut entries: Vec<CatalogEntry> = MONOID_TABLES
            .iter()
            .enumerate()
            .map(|(k, rows)| CatalogEntry::from_rows(format!("M{k}"), rows))
            .collect();
        entries.push(CatalogEntry::from_rows("N1".into(), N1));
        entries.push(CatalogEntry::from_rows("N2".into(), N2));
        entries.push(CatalogEntry::from_rows("F4-mult".into(), F4_MULT));
        entries
    })
}

pub fn entry(label: &str) -> Result<&'static CatalogEntry, AlgebraError> {
    let label = normalize_label(label);
    catalog()
        .iter()
        .find(|e| e.label == label)
        .ok_or(AlgebraError::UnknownLabel(label))
}

/// Accepts `M6`, `m6`, `M_6` and `M_{6}` spellings.
pub fn normalize_label(label: &str) -> String {
    let cleaned: String = label.chars().filter(|c| !matches!(c, '_' | '{' | '}' | '$')).collect();
    let mut chars = cleaned.chars();
    match chars.next() {
        Some(c) if c.eq_ignore_ascii_case(&'m') || c.eq_ignore_ascii_case(&'n') => {
            format!("{}{}", c.to_ascii_uppercase(), chars.as_str())
        }
        _ => cleaned,
    }
}

/// The catalog monoid with the given label.
pub fn monoid(label: &str) -> Result<Monoid, AlgebraError> {
    entry(label).map(CatalogEntry::monoid)
}

/// The commutative catalog monoids `M0`–`M26`.
pub fn commutative_entries() -> &'static [CatalogEntry] {
    &catalog()[..27]
}

/// `M0`–`M26` restricted to one order.
pub fn commutative_of_order(order: usize) -> impl Iterator<Item = &'static CatalogEntry> {
    commutative_entries().iter().filter(move |e| e.order() == order)
}

/// Match of a monoid against the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogMatch {
    pub label: String,
    /// Bijection from the looked-up monoid onto the catalog carrier.
    pub bijection: Vec<Elem>,
    /// `true` if the bijection reverses products (an isomorphism onto the opposite monoid).
    pub anti: bool,
}

impl CatalogMatch {
    pub fn entry(&self) -> &'static CatalogEntry {
        entry(&self.label).expect("matches carry catalog labels")
    }
}

/// Finds the catalog entry isomorphic to `m`.
///
/// Commutative monoids of order at most four are matched against `M0`–`M26`.
/// Noncommutative monoids of order four with an absorbing element are matched
/// against `N1` and `N2` up to isomorphism or anti-isomorphism, since each of
/// them is not isomorphic to its own opposite.
pub fn catalog_lookup(m: &Monoid) -> Option<CatalogMatch> {
    if m.order() > 4 {
        return None;
    }
    if m.is_commutative() {
        return commutative_of_order(m.order()).find_map(|e| {
            let fixed = [(m.neutral(), e.neutral)];
            iso::first(&[(m.table(), &e.table)], &fixed)
                .map(|bijection| CatalogMatch { label: e.label.clone(), bijection, anti: false })
        });
    }
    let opposite = m.table().transposed();
    catalog()[27..29].iter().find_map(|e| {
        let fixed = [(m.neutral(), e.neutral)];
        if let Some(bijection) = iso::first(&[(m.table(), &e.table)], &fixed) {
            return Some(CatalogMatch { label: e.label.clone(), bijection, anti: false });
        }
        iso::first(&[(&opposite, &e.table)], &fixed)
            .map(|bijection| CatalogMatch { label: e.label.clone(), bijection, anti: true })
    })
}

/// Every semiring multiplication listed for the catalog monoids `M1`–`M26`.
pub fn reference_semirings() -> Vec<ReferenceSemiring> {
    SEMIRING_MULS
        .iter()
        .map(|&(k, label, rows)| ReferenceSemiring {
            additive: format!("M{k}"),
            mul: CayleyTable::from_rows(rows).expect("reference tables are well formed"),
            mult_label: label.to_string(),
        })
        .collect()
}

/// The 22 essentially different duality functions between catalog monoids of order two to four.
pub fn reference_dualities() -> Vec<ReferenceDuality> {
    DUALITY_TABLES
        .iter()
        .map(|&(name, s, r, t, rows)| ReferenceDuality {
            name: name.to_string(),
            s: format!("M{s}"),
            r: format!("M{r}"),
            t: format!("M{t}"),
            table: rows.iter().map(|row| row.to_vec()).collect(),
        })
        .collect()
}

pub fn reference_duality(name: &str) -> Option<ReferenceDuality> {
    let wanted = name.trim_start_matches('ψ').trim_start_matches("psi").trim_start_matches('_');
    reference_dualities().into_iter().find(|d| d.name.trim_start_matches("psi") == wanted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_a_valid_monoid() {
        for e in catalog() {
            let m = crate::algebra::validate_monoid(e.table.clone(), e.label.starts_with('M'))
                .unwrap_or_else(|err| panic!("{}: {err}", e.label));
            assert_eq!(m.neutral(), e.neutral);
        }
        assert!(commutative_entries().iter().all(|e| e.neutral == 0));
        assert!(!entry("N1").unwrap().commutative);
        assert!(!entry("N2").unwrap().commutative);
    }

    #[test]
    fn sizes() {
        let counts: Vec<usize> = (1..=4).map(|n| commutative_of_order(n).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19]);
        assert_eq!(reference_dualities().len(), 22);
    }

    #[test]
    fn absorbing_element_is_last() {
        for e in commutative_entries() {
            if let Some(a) = e.absorbing {
                assert_eq!(a, e.order() - 1, "{}", e.label);
            }
        }
    }

    #[test]
    fn groups_are_ordered_absorbing_then_almost_then_neither() {
        for n in 2..=4 {
            let ranks: Vec<u8> = commutative_of_order(n)
                .map(|e| match (e.absorbing, e.almost_absorbing) {
                    (Some(_), _) => 0,
                    (None, Some(_)) => 1,
                    (None, None) => 2,
                })
                .collect();
            assert!(ranks.windows(2).all(|w| w[0] <= w[1]), "order {n}: {ranks:?}");
        }
    }

    #[test]
    fn label_spellings() {
        assert_eq!(entry("M_{6}").unwrap().label, "M6");
        assert_eq!(entry("m25").unwrap().label, "M25");
        assert!(matches!(entry("M27"), Err(AlgebraError::UnknownLabel(_))));
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(catalog_lookup(&Monoid::cyclic(3)).unwrap().label, "M7");
        assert_eq!(catalog_lookup(&Monoid::cyclic(4)).unwrap().label, "M26");
        assert_eq!(catalog_lookup(&Monoid::chain_max(3)).unwrap().label, "M4");
        assert_eq!(catalog_lookup(&Monoid::chain_max(4)).unwrap().label, "M15");
        assert_eq!(catalog_lookup(&Monoid::chain_max(2)).unwrap().label, "M1");
        assert!(catalog_lookup(&Monoid::cyclic(5)).is_none());
        let f4 = entry("F4-mult").unwrap().monoid();
        assert_eq!(catalog_lookup(&f4).unwrap().label, "M18");
    }

    #[test]
    fn lookup_bijection_is_an_isomorphism() {
        for e in commutative_entries() {
            let perm: Vec<Elem> = {
                let mut p: Vec<Elem> = (0..e.order()).collect();
                p.reverse();
                p
            };
            let shuffled = e.monoid().relabel(&perm);
            let found = catalog_lookup(&shuffled).unwrap();
            assert_eq!(found.label, e.label);
            assert_eq!(shuffled.relabel(&found.bijection).table(), &e.table);
        }
    }

    #[test]
    fn opposites_of_n_monoids_map_back_anti() {
        for label in ["N1", "N2"] {
            let m = entry(label).unwrap().monoid();
            let direct = catalog_lookup(&m).unwrap();
            assert_eq!((direct.label.as_str(), direct.anti), (label, false));
            let op = catalog_lookup(&m.opposite()).unwrap();
            assert_eq!((op.label.as_str(), op.anti), (label, true));
        }
    }
}
