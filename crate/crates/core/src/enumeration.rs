//! Isomorphism-quotiented generation of small monoids and of the semiring
//! multiplications compatible with a given additive monoid.
//!
//! Every representative is returned in canonical form: the lexicographically
//! smallest flattened table over all relabelings fixing the neutral element 0.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::catalog::{self, catalog_lookup};
use crate::algebra::{automorphisms, Monoid, Semiring};
use crate::error::{AlgebraError, EnumerationError};
use crate::table::{for_each_perm_fixing_zero, CayleyTable, Elem};

pub const MAX_MONOID_ORDER: usize = 5;
pub const MAX_SEMIRING_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub order: usize,
    pub count: usize,
    pub representatives: Vec<CayleyTable>,
    /// Catalog label of each representative, present for order ≤ 4.
    pub catalog_labels: Option<Vec<String>>,
}

impl EnumerationReport {
    fn build(order: usize, reps: BTreeSet<Vec<Elem>>) -> Self {
        let mut reps: Vec<CayleyTable> = reps
            .into_iter()
            .map(|flat| CayleyTable::from_flat(order, flat).expect("enumerated tables are well formed"))
            .collect();
        let labels = (order <= 4).then(|| {
            let mut labeled: Vec<(String, CayleyTable)> = reps
                .drain(..)
                .map(|t| {
                    let m = Monoid::new_unchecked(t.clone(), 0);
                    let label = catalog_lookup(&m).map(|c| match c.anti {
                        false => c.label,
                        true => format!("{}^op", c.label),
                    });
                    (label.unwrap_or_else(|| "?".into()), t)
                })
                .collect();
            labeled.sort_by_key(|(label, t)| (label_rank(label), t.flat().to_vec()));
            let labels = labeled.iter().map(|(l, _)| l.clone()).collect();
            reps = labeled.into_iter().map(|(_, t)| t).collect();
            labels
        });
        EnumerationReport { order, count: reps.len(), representatives: reps, catalog_labels: labels }
    }
}

/// Catalog position, with opposite variants placed right after their base label.
fn label_rank(label: &str) -> (usize, bool) {
    let (base, op) = match label.strip_suffix("^op") {
        Some(base) => (base, true),
        None => (label, false),
    };
    (catalog::entry(base).map(|e| e.index()).unwrap_or(usize::MAX), op)
}

/// Whether commutativity is required, forbidden or irrelevant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommutativityFilter {
    #[default]
    Any,
    CommutativeOnly,
    NoncommutativeOnly,
}

impl CommutativityFilter {
    fn admits(self, commutative: bool) -> bool {
        match self {
            CommutativityFilter::Any => true,
            CommutativityFilter::CommutativeOnly => commutative,
            CommutativityFilter::NoncommutativeOnly => !commutative,
        }
    }
}

/// Which structures are identified when forming classes.
///
/// `IsomorphismOrOpposite` also identifies a structure with its opposite
/// (multiplication read right to left). The catalog lists the noncommutative
/// structures this way, so it is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quotient {
    Isomorphism,
    #[default]
    IsomorphismOrOpposite,
}

/// Lexicographically smallest relabeling of `t` over permutations fixing 0,
/// together with a permutation attaining it.
pub fn canonical_form_with_perm(t: &CayleyTable) -> (CayleyTable, Vec<Elem>) {
    let n = t.order();
    let mut best: Option<(Vec<Elem>, Vec<Elem>)> = None;
    let mut image = vec![0; n * n];
    for_each_perm_fixing_zero(n, |p| {
        for x in 0..n {
            for y in 0..n {
                image[p[x] * n + p[y]] = p[t.get(x, y)];
            }
        }
        if best.as_ref().is_none_or(|(b, _)| image < *b) {
            best = Some((image.clone(), p.to_vec()));
        }
    });
    let (flat, perm) = best.expect("there is at least the identity permutation");
    (CayleyTable::from_flat(n, flat).expect("relabeling preserves shape"), perm)
}

pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    canonical_form_with_perm(t).0
}

fn check_order(order: usize, max: usize) -> Result<(), EnumerationError> {
    match order {
        0 => Err(EnumerationError::EmptyCarrier),
        n if n > max => Err(EnumerationError::OrderTooLarge { order: n, max }),
        _ => Ok(()),
    }
}

const UNSET: Elem = usize::MAX;

/// Partial operation table with neutral element 0 and row/column 0 fixed.
struct Partial {
    n: usize,
    cells: Vec<Elem>,
    commutative: bool,
}

impl Partial {
    fn new(n: usize, commutative: bool) -> Self {
        let mut cells = vec![UNSET; n * n];
        for x in 0..n {
            cells[x] = x;
            cells[x * n] = x;
        }
        Partial { n, cells, commutative }
    }

    fn set(&mut self, x: Elem, y: Elem, v: Elem) {
        self.cells[x * self.n + y] = v;
        if self.commutative {
            self.cells[y * self.n + x] = v;
        }
    }

    /// Free cells in fill order: the upper triangle for commutative tables, every cell otherwise.
    fn free_cells(&self) -> Vec<(Elem, Elem)> {
        let n = self.n;
        (1..n)
            .flat_map(|x| {
                let start = if self.commutative { x } else { 1 };
                (start..n).map(move |y| (x, y))
            })
            .collect()
    }

    /// Associativity on every triple whose four products are already defined.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        let c = &self.cells;
        for x in 1..n {
            for y in 1..n {
                let xy = c[x * n + y];
                if xy == UNSET {
                    continue;
                }
                for z in 1..n {
                    let yz = c[y * n + z];
                    if yz == UNSET {
                        continue;
                    }
                    let left = c[xy * n + z];
                    let right = c[x * n + yz];
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, free: &[(Elem, Elem)], k: usize, out: &mut impl FnMut(&[Elem])) {
        if k == free.len() {
            out(&self.cells);
            return;
        }
        let (x, y) = free[k];
        for v in 0..self.n {
            self.set(x, y, v);
            if self.associative_so_far() {
                self.fill(free, k + 1, out);
            }
        }
        self.set(x, y, UNSET);
    }
}

/// All monoid tables on `0..n` with neutral element 0, passed to `visit` in
/// parallel batches keyed by the value of the first free cell.
fn monoid_tables<T: Send>(
    n: usize,
    commutative: bool,
    visit: impl Fn(&CayleyTable) -> Option<T> + Sync,
) -> Vec<T> {
    let free = Partial::new(n, commutative).free_cells();
    if free.is_empty() {
        let t = CayleyTable::from_flat(n, Partial::new(n, commutative).cells).expect("order 1 table");
        return visit(&t).into_iter().collect();
    }
    (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut p = Partial::new(n, commutative);
            let mut found = Vec::new();
            let (x, y) = free[0];
            p.set(x, y, first);
            if p.associative_so_far() {
                p.fill(&free, 1, &mut |cells| {
                    let t = CayleyTable::from_flat(n, cells.to_vec()).expect("complete table");
                    found.extend(visit(&t));
                });
            }
            found
        })
        .collect()
}

/// All isomorphism classes of commutative monoids of the given order (1 ≤ n ≤ 5).
pub fn enumerate_commutative_monoids(order: usize) -> Result<EnumerationReport, EnumerationError> {
    check_order(order, MAX_MONOID_ORDER)?;
    let classes: BTreeSet<Vec<Elem>> =
        monoid_tables(order, true, |t| Some(canonical_form(t).flat().to_vec())).into_iter().collect();
    Ok(EnumerationReport::build(order, classes))
}

/// All classes of monoids of the given order (n ≤ 4) that have an absorbing element.
pub fn enumerate_monoids_with_absorbing(
    order: usize,
    filter: CommutativityFilter,
    quotient: Quotient,
) -> Result<EnumerationReport, EnumerationError> {
    check_order(order, MAX_SEMIRING_ORDER)?;
    let classes: BTreeSet<Vec<Elem>> = monoid_tables(order, false, |t| {
        if t.absorbing_element().is_none() || !filter.admits(t.is_commutative()) {
            return None;
        }
        let mut key = canonical_form(t);
        if quotient == Quotient::IsomorphismOrOpposite {
            key = key.min_by_flat(canonical_form(&t.transposed()));
        }
        Some(key.flat().to_vec())
    })
    .into_iter()
    .collect();
    Ok(EnumerationReport::build(order, classes))
}

trait MinByFlat {
    fn min_by_flat(self, other: Self) -> Self;
}

impl MinByFlat for CayleyTable {
    fn min_by_flat(self, other: Self) -> Self {
        if other.flat() < self.flat() {
            other
        } else {
            self
        }
    }
}

/// One semiring class over a fixed additive monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiringClass {
    pub semiring: Semiring,
    /// Catalog label of the multiplicative monoid.
    pub mult_label: String,
    /// Whether the multiplicative monoid matches its catalog entry only after reversal.
    pub mult_anti: bool,
    /// Class key: smallest multiplication table over additive automorphisms (and reversal).
    pub key: CayleyTable,
}

/// Class key of a multiplication: the smallest relabeled table over `autos`
/// (the automorphisms of the additive monoid) and, if requested, over the
/// reversed multiplication.
pub fn semiring_class_key(mul: &CayleyTable, quotient: Quotient, autos: &[Vec<Elem>]) -> CayleyTable {
    let mut variants = vec![mul.clone()];
    if quotient == Quotient::IsomorphismOrOpposite {
        variants.push(mul.transposed());
    }
    variants
        .iter()
        .flat_map(|m| autos.iter().map(move |p| m.relabel(p)))
        .reduce(MinByFlat::min_by_flat)
        .expect("the identity is an automorphism")
}

/// Every semiring multiplication on `add`, one per class.
///
/// Classes are sorted by the catalog position of the multiplicative monoid and then by key.
pub fn enumerate_semiring_multiplications(
    add: &Monoid,
    quotient: Quotient,
) -> Result<Vec<SemiringClass>, EnumerationError> {
    let n = add.order();
    check_order(n, MAX_SEMIRING_ORDER)?;
    if let Some((x, y)) = add.table().commutativity_witness() {
        return Err(AlgebraError::AdditiveNotCommutativeMonoid(Box::new(AlgebraError::NotCommutative(x, y))).into());
    }
    let zero = add.neutral();
    let autos = automorphisms(add);
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    let units: Vec<Elem> = if n == 1 { vec![0] } else { (0..n).filter(|&u| u != zero).collect() };
    for unit in units {
        let free: Vec<(Elem, Elem)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != zero && y != zero && x != unit && y != unit)
            .collect();
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[x * n + y] = match (x, y) {
                    _ if x == zero || y == zero => zero,
                    _ if x == unit => y,
                    _ if y == unit => x,
                    _ => 0,
                };
            }
        }
        let total = n.pow(free.len() as u32);
        for code in 0..total {
            let mut c = code;
            for &(x, y) in &free {
                cells[x * n + y] = c % n;
                c /= n;
            }
            let mul = CayleyTable::from_flat(n, cells.clone()).expect("values are in range");
            if mul.associativity_witness().is_some()
                || crate::algebra::semiring::distributivity_witness(add, &mul).is_some()
            {
                continue;
            }
            let key = semiring_class_key(&mul, quotient, &autos);
            if !seen.insert(key.flat().to_vec()) {
                continue;
            }
            let mul = Monoid::new_unchecked(mul, unit);
            let found = catalog_lookup(&mul);
            classes.push(SemiringClass {
                mult_label: found.as_ref().map_or_else(|| "?".into(), |c| c.label.clone()),
                mult_anti: found.is_some_and(|c| c.anti),
                semiring: Semiring::from_parts_unchecked(add.clone(), mul),
                key,
            });
        }
    }
    classes.sort_by_key(|c| (label_rank(&c.mult_label), c.mult_anti, c.key.flat().to_vec()));
    Ok(classes)
}
