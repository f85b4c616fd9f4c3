//! Homomorphism sets, adjoint monoids, reflexivity and duality functions
//! between finite commutative monoids, together with the census of all
//! dualities between catalog monoids of order two to four.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::catalog::{self, catalog_lookup, ReferenceDuality};
use crate::algebra::{are_isomorphic, automorphisms, isomorphisms, Monoid};
use crate::error::{DualityError, EnumerationError};
use crate::table::{CayleyTable, Elem, FunctionTable};

/// Whether `values` is a homomorphism `source → target`.
pub fn is_hom(source: &Monoid, target: &Monoid, values: &[Elem]) -> bool {
    values.iter().all(|&v| v < target.order()) && source.is_hom_to(target, values)
}

/// Every homomorphism `source → target` in lexicographic order.
///
/// The smallest unassigned point is branched on and every assignment is closed
/// under `h(x+y) = h(x)+h(y)`, so only values on a generating set are guessed.
pub fn hom_tables(source: &Monoid, target: &Monoid) -> Vec<FunctionTable> {
    const FREE: Elem = usize::MAX;
    fn close(s: &Monoid, t: &Monoid, h: &mut [Elem]) -> bool {
        let n = s.order();
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..n {
                for b in 0..n {
                    if h[a] == FREE || h[b] == FREE {
                        continue;
                    }
                    let (c, v) = (s.op(a, b), t.op(h[a], h[b]));
                    if h[c] == FREE {
                        h[c] = v;
                        changed = true;
                    } else if h[c] != v {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn rec(s: &Monoid, t: &Monoid, h: Vec<Elem>, out: &mut Vec<FunctionTable>) {
        let Some(x) = h.iter().position(|&v| v == FREE) else {
            out.push(h);
            return;
        };
        for v in 0..t.order() {
            let mut next = h.clone();
            next[x] = v;
            if close(s, t, &mut next) {
                rec(s, t, next, out);
            }
        }
    }
    let mut h = vec![FREE; source.order()];
    h[source.neutral()] = target.neutral();
    let mut out = Vec::new();
    if close(source, target, &mut h) {
        rec(source, target, h, &mut out);
    }
    out.sort();
    out
}

/// The set `H(S,T)` with its pointwise addition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjointMonoid {
    pub source: Monoid,
    pub target: Monoid,
    /// Homomorphisms; the constant-zero one is first, the rest in lexicographic order.
    pub homs: Vec<FunctionTable>,
    /// Pointwise addition on hom indices; neutral element 0.
    pub monoid: Monoid,
}

impl AdjointMonoid {
    pub fn order(&self) -> usize {
        self.homs.len()
    }

    pub fn index_of_zero(&self) -> usize {
        0
    }

    pub fn index_of(&self, values: &[Elem]) -> Option<usize> {
        self.homs.iter().position(|h| h == values)
    }
}

/// `H(S,T)` with its Cayley table; closure under pointwise addition is checked.
pub fn hom_set(s: &Monoid, t: &Monoid) -> AdjointMonoid {
    let mut homs = hom_tables(s, t);
    let zero: FunctionTable = vec![t.neutral(); s.order()];
    let z = homs.iter().position(|h| *h == zero).expect("the constant-zero map is a homomorphism");
    let zero = homs.remove(z);
    homs.insert(0, zero);
    let k = homs.len();
    let mut data = Vec::with_capacity(k * k);
    for f in &homs {
        for g in &homs {
            let sum: FunctionTable = f.iter().zip(g).map(|(&a, &b)| t.op(a, b)).collect();
            data.push(homs.iter().position(|h| *h == sum).expect("H(S,T) is closed under addition"));
        }
    }
    let op = CayleyTable::from_flat(k, data).expect("indices are in range");
    AdjointMonoid { source: s.clone(), target: t.clone(), homs, monoid: Monoid::new_unchecked(op, 0) }
}

/// The evaluation map `x ↦ L_x` from `S` into `H(H(S,T),T)`, as indices into
/// `hom_tables(&hom_set(s,t).monoid, t)`.
pub fn adjoint_embedding(s: &Monoid, t: &Monoid) -> FunctionTable {
    let adj = hom_set(s, t);
    let double = hom_tables(&adj.monoid, t);
    (0..s.order())
        .map(|x| {
            let lx: FunctionTable = adj.homs.iter().map(|h| h[x]).collect();
            double.binary_search(&lx).expect("evaluation functionals are homomorphisms")
        })
        .collect()
}

/// Whether `x ↦ L_x` is a bijection from `S` onto its double adjoint.
pub fn is_reflexive(s: &Monoid, t: &Monoid) -> bool {
    let adj = hom_set(s, t);
    let double = hom_tables(&adj.monoid, t);
    if double.len() != s.order() {
        return false;
    }
    let images: BTreeSet<FunctionTable> =
        (0..s.order()).map(|x| adj.homs.iter().map(|h| h[x]).collect()).collect();
    images.len() == s.order()
}

/// Outcome of checking the four defining conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// Pass flags for conditions (i)–(iv).
    pub passed: [bool; 4],
    /// One witness per failing condition, in condition order.
    pub failures: Vec<DualityError>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.passed.iter().all(|&p| p)
    }
}

/// A function `ψ: S × R → T` stored row-major with rows indexed by `S`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualityFunction {
    pub s: Monoid,
    pub r: Monoid,
    pub t: Monoid,
    pub psi: Vec<Elem>,
    pub verified: Option<ConditionReport>,
    /// Values of `T`'s elements under a monoid homomorphism `(T,+) → (ℝ,·)`.
    pub real_embedding: Option<Vec<f64>>,
}

impl DualityFunction {
    pub fn new<Row: AsRef<[Elem]>>(s: Monoid, r: Monoid, t: Monoid, rows: &[Row]) -> Result<Self, DualityError> {
        let shape_ok = rows.len() == s.order() && rows.iter().all(|row| row.as_ref().len() == r.order());
        if !shape_ok {
            return Err(DualityError::Shape {
                rows: rows.len(),
                cols: rows.first().map_or(0, |row| row.as_ref().len()),
                expected_rows: s.order(),
                expected_cols: r.order(),
            });
        }
        let psi: Vec<Elem> = rows.iter().flat_map(|row| row.as_ref().iter().copied()).collect();
        if psi.iter().any(|&v| v >= t.order()) {
            return Err(DualityError::ValueOutOfRange);
        }
        Ok(DualityFunction { s, r, t, psi, verified: None, real_embedding: None })
    }

    /// Builds `ψ(x,y) = f(x,y)`.
    pub fn from_fn(s: Monoid, r: Monoid, t: Monoid, f: impl Fn(Elem, Elem) -> Elem) -> Result<Self, DualityError> {
        let rows: Vec<Vec<Elem>> = (0..s.order()).map(|x| (0..r.order()).map(|y| f(x, y)).collect()).collect();
        DualityFunction::new(s, r, t, &rows)
    }

    /// Attaches a real embedding of `T`; it must turn `+` into multiplication and send 0 to 1.
    pub fn with_real_embedding(mut self, values: Vec<f64>) -> Result<Self, DualityError> {
        let t = &self.t;
        let ok = values.len() == t.order()
            && values[t.neutral()] == 1.0
            && (0..t.order()).all(|a| (0..t.order()).all(|b| values[t.op(a, b)] == values[a] * values[b]));
        if !ok {
            return Err(DualityError::ValueOutOfRange);
        }
        self.real_embedding = Some(values);
        Ok(self)
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.psi[x * self.r.order() + y]
    }

    pub fn row(&self, x: Elem) -> FunctionTable {
        self.psi[x * self.r.order()..(x + 1) * self.r.order()].to_vec()
    }

    pub fn column(&self, y: Elem) -> FunctionTable {
        (0..self.s.order()).map(|x| self.get(x, y)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.s.order()).map(|x| self.row(x)).collect()
    }

    /// `ψ†(y,x) = ψ(x,y)`, a function `R × S → T`; verification is not carried over.
    pub fn transpose(&self) -> DualityFunction {
        DualityFunction {
            s: self.r.clone(),
            r: self.s.clone(),
            t: self.t.clone(),
            psi: (0..self.r.order()).flat_map(|y| (0..self.s.order()).map(move |x| (x, y))).map(|(x, y)| self.get(x, y)).collect(),
            verified: None,
            real_embedding: self.real_embedding.clone(),
        }
    }

    /// Whether the values of `ψ` generate `T`.
    pub fn is_minimal(&self) -> bool {
        self.t.generated_submonoid(self.psi.iter().copied()).iter().all(|&b| b)
    }

    /// Checks all four conditions and stores the report.
    pub fn verify(mut self) -> Result<Self, DualityError> {
        let report = condition_report(&self);
        let first = report.failures.first().cloned();
        self.verified = Some(report);
        match first {
            Some(err) => Err(err),
            None => Ok(self),
        }
    }

    pub fn render(&self, title: &str) -> String {
        crate::table::render_grid(title, self.s.order(), self.r.order(), |x, y| self.get(x, y))
    }
}

fn first_repeat(items: &[FunctionTable]) -> Option<(Elem, Elem)> {
    let mut seen: BTreeMap<&FunctionTable, Elem> = BTreeMap::new();
    for (i, item) in items.iter().enumerate() {
        if let Some(&j) = seen.get(item) {
            return Some((j, i));
        }
        seen.insert(item, i);
    }
    None
}

/// `{items} = homs` as sets, with a witness for either inclusion failing.
fn set_equality(items: &[FunctionTable], homs: &[FunctionTable]) -> (Option<Elem>, Option<FunctionTable>) {
    let hom_set: BTreeSet<&FunctionTable> = homs.iter().collect();
    let item_set: BTreeSet<&FunctionTable> = items.iter().collect();
    let extra = items.iter().position(|i| !hom_set.contains(i));
    let missing = homs.iter().find(|h| !item_set.contains(h)).cloned();
    (extra, missing)
}

/// Evaluates conditions (i)–(iv) independently.
pub fn condition_report(psi: &DualityFunction) -> ConditionReport {
    let rows = psi.rows();
    let cols: Vec<FunctionTable> = (0..psi.r.order()).map(|y| psi.column(y)).collect();
    let mut passed = [true; 4];
    let mut failures = Vec::new();
    if let Some((x1, x2)) = first_repeat(&rows) {
        passed[0] = false;
        failures.push(DualityError::Condition1Fail { x1, x2 });
    }
    let (extra, missing) = set_equality(&cols, &hom_tables(&psi.s, &psi.t));
    if extra.is_some() || missing.is_some() {
        passed[1] = false;
        failures.push(DualityError::Condition2Fail { extra, missing });
    }
    if let Some((y1, y2)) = first_repeat(&cols) {
        passed[2] = false;
        failures.push(DualityError::Condition3Fail { y1, y2 });
    }
    let (extra, missing) = set_equality(&rows, &hom_tables(&psi.r, &psi.t));
    if extra.is_some() || missing.is_some() {
        passed[3] = false;
        failures.push(DualityError::Condition4Fail { extra, missing });
    }
    ConditionReport { passed, failures }
}

/// Checks conditions (i)–(iv); the error carries the witness of the first failing one.
pub fn verify_duality(psi: &DualityFunction) -> Result<ConditionReport, DualityError> {
    let report = condition_report(psi);
    match report.failures.first() {
        Some(err) => Err(err.clone()),
        None => Ok(report),
    }
}

/// A candidate `ψ(x,y) = f_y(x)` built from an isomorphism `y ↦ f_y` of `R` onto `H(S,T)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub psi: DualityFunction,
    /// The acceptance test: the rows `ψ(x,·)` are pairwise distinct.
    pub rows_distinct: bool,
}

/// `iso[y]` is the index in `adj.homs` of the homomorphism assigned to `y ∈ R`.
pub fn candidate_duality(adj: &AdjointMonoid, r: &Monoid, iso: &[Elem]) -> Result<Candidate, DualityError> {
    let is_iso = iso.len() == r.order()
        && r.order() == adj.order()
        && iso.iter().collect::<BTreeSet<_>>().len() == iso.len()
        && iso.iter().all(|&i| i < adj.order())
        && r.is_hom_to(&adj.monoid, iso);
    if !is_iso {
        return Err(DualityError::NotIsomorphism);
    }
    let psi = DualityFunction::from_fn(adj.source.clone(), r.clone(), adj.target.clone(), |x, y| adj.homs[iso[y]][x])?;
    let rows_distinct = first_repeat(&psi.rows()).is_none();
    let report = condition_report(&psi);
    Ok(Candidate { psi: DualityFunction { verified: Some(report), ..psi }, rows_distinct })
}

/// One duality between catalog monoids.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quadruple {
    pub r: String,
    pub s: String,
    pub t: String,
    pub psi: DualityFunction,
}

/// Result of the census over all catalog triples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadrupleCensus {
    pub max_order: usize,
    /// One duality per triple `(R,S,T)`: the lexicographically smallest table among the verified candidates.
    pub quadruples: Vec<Quadruple>,
    /// Candidates formed, one per triple and isomorphism `R → H(S,T)`.
    pub candidates: usize,
    /// Candidates passing the row test.
    pub accepted: usize,
    /// Candidates passing all four conditions.
    pub verified: usize,
    /// Triples `(R,S,T)` with `R ≅ H(S,T)` and `S ≅ H(R,T)`.
    pub triples: usize,
}

fn label_index(label: &str) -> usize {
    catalog::entry(label).map(|e| e.index()).unwrap_or(usize::MAX)
}

/// All dualities with `2 ≤ |S|,|R|,|T| ≤ max_order` between catalog monoids.
///
/// For each `(S,T)` the adjoint `H(S,T)` is matched against the catalog to
/// find `R`; the triple is kept if also `S ≅ H(R,T)`; every isomorphism
/// `R → H(S,T)` then yields a candidate.
pub fn find_all_duality_quadruples(max_order: usize) -> Result<QuadrupleCensus, EnumerationError> {
    if max_order > 4 {
        return Err(EnumerationError::OrderTooLarge { order: max_order, max: 4 });
    }
    let carriers: Vec<&catalog::CatalogEntry> =
        catalog::commutative_entries().iter().filter(|e| (2..=max_order).contains(&e.order())).collect();
    let pairs: Vec<(usize, usize)> =
        (0..carriers.len()).flat_map(|i| (0..carriers.len()).map(move |j| (i, j))).collect();
    struct PairResult {
        quad: Option<Quadruple>,
        candidates: usize,
        accepted: usize,
        verified: usize,
    }
    let results: Vec<PairResult> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let (s_entry, t_entry) = (carriers[i], carriers[j]);
            let (s, t) = (s_entry.monoid(), t_entry.monoid());
            let adj = hom_set(&s, &t);
            let r_entry = carriers.iter().find(|e| e.order() == adj.order() && are_isomorphic(&e.monoid(), &adj.monoid).is_some())?;
            let r = r_entry.monoid();
            are_isomorphic(&s, &hom_set(&r, &t).monoid)?;
            let mut best: Option<DualityFunction> = None;
            let (mut candidates, mut accepted, mut verified) = (0, 0, 0);
            for iso in isomorphisms(&r, &adj.monoid) {
                let c = candidate_duality(&adj, &r, &iso).expect("isomorphisms are valid candidates");
                candidates += 1;
                accepted += usize::from(c.rows_distinct);
                if c.psi.verified.as_ref().is_some_and(ConditionReport::all_pass) {
                    verified += 1;
                    if best.as_ref().is_none_or(|b| c.psi.psi < b.psi) {
                        best = Some(c.psi);
                    }
                }
            }
            let quad = best.map(|psi| Quadruple {
                r: r_entry.label.clone(),
                s: s_entry.label.clone(),
                t: t_entry.label.clone(),
                psi,
            });
            Some(PairResult { quad, candidates, accepted, verified })
        })
        .collect();
    let triples = results.len();
    let (candidates, accepted, verified) =
        results.iter().fold((0, 0, 0), |acc, p| (acc.0 + p.candidates, acc.1 + p.accepted, acc.2 + p.verified));
    let mut quadruples: Vec<Quadruple> = results.into_iter().filter_map(|p| p.quad).collect();
    quadruples.sort_by_key(|q| (label_index(&q.s), label_index(&q.t), label_index(&q.r)));
    Ok(QuadrupleCensus { max_order, quadruples, candidates, accepted, verified, triples })
}

/// Class key of a duality table under relabeling of `S`, `R` and `T` by
/// automorphisms and under transposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DualityKey {
    pub s: String,
    pub r: String,
    pub t: String,
    pub table: Vec<Vec<Elem>>,
}

fn oriented_key(s: &str, r: &str, t: &str, rows: &[Vec<Elem>]) -> (usize, usize, usize, Vec<Elem>) {
    let (sm, rm, tm) = (catalog::monoid(s).expect("catalog label"), catalog::monoid(r).expect("catalog label"), catalog::monoid(t).expect("catalog label"));
    let (auts, autr, autt) = (automorphisms(&sm), automorphisms(&rm), automorphisms(&tm));
    let (ns, nr) = (sm.order(), rm.order());
    let mut best: Option<Vec<Elem>> = None;
    let mut image = vec![0; ns * nr];
    for sigma in &auts {
        for rho in &autr {
            for tau in &autt {
                for x in 0..ns {
                    for y in 0..nr {
                        image[sigma[x] * nr + rho[y]] = tau[rows[x][y]];
                    }
                }
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image.clone());
                }
            }
        }
    }
    (label_index(s), label_index(r), label_index(t), best.expect("identity automorphisms exist"))
}

/// The key of `ψ: S × R → T` given catalog labels of its carriers.
pub fn duality_key(s: &str, r: &str, t: &str, rows: &[Vec<Elem>]) -> DualityKey {
    let transposed: Vec<Vec<Elem>> = (0..rows.first().map_or(0, Vec::len)).map(|y| rows.iter().map(|row| row[y]).collect()).collect();
    let a = oriented_key(s, r, t, rows);
    let b = oriented_key(r, s, t, &transposed);
    let ((_, _, _, flat), s, r) = if b < a { (b, r, s) } else { (a, s, r) };
    let cols = catalog::entry(r).expect("catalog label").order();
    DualityKey {
        s: s.to_string(),
        r: r.to_string(),
        t: t.to_string(),
        table: flat.chunks(cols).map(<[Elem]>::to_vec).collect(),
    }
}

/// One class of essentially equal dualities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReducedClass {
    /// Name of the matching catalog duality table.
    pub name: String,
    /// Canonical representative: carriers and table as in the key.
    pub key: DualityKey,
    /// Number of input quadruples in the class.
    pub members: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reduction {
    pub classes: Vec<ReducedClass>,
    /// Quadruples whose values do not generate `T`.
    pub non_minimal: usize,
}

fn reference_key(d: &ReferenceDuality) -> DualityKey {
    duality_key(&d.s, &d.r, &d.t, &d.table)
}

/// Drops non-minimal quadruples, groups the rest under the class key and names
/// each class after the catalog duality table with the same key.
pub fn reduce_duality_quadruples(quads: &[Quadruple]) -> Result<Reduction, DualityError> {
    let references: Vec<(DualityKey, String)> =
        catalog::reference_dualities().iter().map(|d| (reference_key(d), d.name.clone())).collect();
    let mut groups: BTreeMap<DualityKey, usize> = BTreeMap::new();
    let mut non_minimal = 0;
    for q in quads {
        if !q.psi.is_minimal() {
            non_minimal += 1;
            continue;
        }
        *groups.entry(duality_key(&q.s, &q.r, &q.t, &q.psi.rows())).or_default() += 1;
    }
    let mut classes = Vec::with_capacity(groups.len());
    for (key, members) in groups {
        let name = references
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, name)| name.clone())
            .ok_or_else(|| DualityError::UnmatchedClass { class: format!("{}×{}→{}", key.s, key.r, key.t) })?;
        classes.push(ReducedClass { name, key, members });
    }
    classes.sort_by_key(|c| reference_order(&c.name));
    Ok(Reduction { classes, non_minimal })
}

fn reference_order(name: &str) -> usize {
    catalog::reference_dualities().iter().position(|d| d.name == name).unwrap_or(usize::MAX)
}

/// The catalog duality table `name` (e.g. `psi4`), with carriers as listed.
pub fn reference_duality_function(name: &str) -> Option<DualityFunction> {
    let d = catalog::reference_duality(name)?;
    let f = DualityFunction::new(
        catalog::monoid(&d.s).ok()?,
        catalog::monoid(&d.r).ok()?,
        catalog::monoid(&d.t).ok()?,
        &d.table,
    )
    .ok()?;
    f.verify().ok()
}

/// Real values of `M5 = {0,1,2}` as the multiplicative monoid `{1,−1,0}`.
pub const M5_REAL: [f64; 3] = [1.0, -1.0, 0.0];

/// The duality `M6 × M5 → M5` with `ψ(1,y) = y` and `ψ(2,y) = y²` in the
/// real coordinates `0 ↦ 1`, `1 ↦ −1`, `2 ↦ 0` of `M5`.
pub fn psi5_new() -> DualityFunction {
    let d = reference_duality_function("psi5").expect("psi5 is in the catalog");
    d.transpose().verify().expect("the transpose of a duality is a duality").with_real_embedding(M5_REAL.to_vec()).expect("M5 embeds into (ℝ,·)")
}

/// The named duality, with the orientation used for simulation: `psi5` is
/// returned as `M6 × M5 → M5` with its real embedding, `psi1` and `psi2` with
/// the real embeddings of `M1` and `M2`.
pub fn named_duality(name: &str) -> Option<DualityFunction> {
    let name = name.trim_start_matches('ψ').trim_start_matches("psi").trim_start_matches('_');
    match name {
        "5" => Some(psi5_new()),
        "1" => reference_duality_function("psi1")?.with_real_embedding(vec![1.0, 0.0]).ok(),
        "2" => reference_duality_function("psi2")?.with_real_embedding(vec![1.0, -1.0]).ok(),
        other => reference_duality_function(&format!("psi{other}")),
    }
}

/// Describes the carriers of a duality by catalog label where possible.
pub fn carrier_labels(psi: &DualityFunction) -> [Option<String>; 3] {
    [&psi.s, &psi.r, &psi.t].map(|m| catalog_lookup(m).map(|c| c.label))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(label: &str) -> Monoid {
        catalog::monoid(label).unwrap()
    }

    fn brute_force_homs(s: &Monoid, t: &Monoid) -> Vec<FunctionTable> {
        let n = s.order();
        let k = t.order();
        (0..k.pow(n as u32))
            .map(|code| (0..n).map(|i| code / k.pow((n - 1 - i) as u32) % k).collect::<FunctionTable>())
            .filter(|h| s.is_hom_to(t, h))
            .collect()
    }

    #[test]
    fn hom_search_matches_brute_force_on_catalog() {
        for a in catalog::commutative_entries() {
            for b in catalog::commutative_entries().iter().filter(|e| e.order() <= 3) {
                assert_eq!(hom_tables(&a.monoid(), &b.monoid()), brute_force_homs(&a.monoid(), &b.monoid()));
            }
        }
    }

    #[test]
    fn small_hom_sets() {
        let h = hom_set(&m("M1"), &m("M1"));
        assert_eq!(h.homs, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(catalog_lookup(&h.monoid).unwrap().label, "M1");
        let h = hom_set(&m("M2"), &m("M2"));
        assert_eq!(catalog_lookup(&h.monoid).unwrap().label, "M2");
        let h = hom_set(&m("M6"), &m("M5"));
        assert_eq!(h.order(), 3);
        assert_eq!(catalog_lookup(&h.monoid).unwrap().label, "M5");
    }

    #[test]
    fn reflexivity() {
        assert!(is_reflexive(&m("M2"), &m("M2")));
        assert!(!is_reflexive(&m("M1"), &m("M2")));
        assert!(is_reflexive(&m("M4"), &m("M1")));
        assert!(is_reflexive(&m("M6"), &m("M5")));
        assert!(is_reflexive(&m("M0"), &m("M1")));
        assert_eq!(adjoint_embedding(&m("M1"), &m("M1")).len(), 2);
    }

    #[test]
    fn psi4_and_psi5_verify() {
        assert!(reference_duality_function("psi4").is_some());
        let p = psi5_new();
        assert_eq!(p.rows(), vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 0, 2]]);
        assert!(verify_duality(&p).is_ok());
    }

    #[test]
    fn matrix_printed_with_the_new_duality_is_not_a_duality() {
        // rows x = 0,1,2 of M6, columns y = −1, 0, 1 in the real coordinates of M5
        let real = [[1, 1, 1], [-1, 1, 1], [0, 0, 1]];
        let index = |v: i32| M5_REAL.iter().position(|&r| r == v as f64).unwrap();
        let columns = [1, 2, 0];
        let rows: Vec<Vec<Elem>> = real
            .iter()
            .map(|row| {
                let mut out = vec![0; 3];
                for (c, &v) in row.iter().enumerate() {
                    out[columns[c]] = index(v);
                }
                out
            })
            .collect();
        let d = DualityFunction::new(m("M6"), m("M5"), m("M5"), &rows).unwrap();
        assert!(verify_duality(&d).is_err());
        assert!(!condition_report(&d).passed[3]);
    }

    #[test]
    fn all_zero_table_fails_condition_one() {
        let d = DualityFunction::from_fn(m("M4"), m("M4"), m("M1"), |_, _| 0).unwrap();
        assert_eq!(verify_duality(&d), Err(DualityError::Condition1Fail { x1: 0, x2: 1 }));
    }

    #[test]
    fn shape_and_range_errors() {
        assert!(matches!(DualityFunction::new(m("M1"), m("M1"), m("M1"), &[vec![0, 0]]), Err(DualityError::Shape { .. })));
        assert_eq!(
            DualityFunction::new(m("M1"), m("M1"), m("M1"), &[vec![0, 0], vec![0, 2]]),
            Err(DualityError::ValueOutOfRange)
        );
    }

    #[test]
    fn candidates_for_psi1_psi2_psi7() {
        for (label, name) in [("M1", "psi1"), ("M2", "psi2"), ("M7", "psi7")] {
            let adj = hom_set(&m(label), &m(label));
            let r = m(label);
            let isos = isomorphisms(&r, &adj.monoid);
            assert!(!isos.is_empty());
            let c = candidate_duality(&adj, &r, &isos[0]).unwrap();
            assert!(c.rows_distinct);
            let d = catalog::reference_duality(name).unwrap();
            assert_eq!(
                duality_key(label, label, label, &c.psi.rows()),
                duality_key(&d.s, &d.r, &d.t, &d.table)
            );
        }
    }

    #[test]
    fn candidate_rejects_non_isomorphisms() {
        let adj = hom_set(&m("M1"), &m("M1"));
        assert_eq!(candidate_duality(&adj, &m("M1"), &[0, 0]).unwrap_err(), DualityError::NotIsomorphism);
    }

    #[test]
    fn evaluation_duality_of_reflexive_monoids() {
        for s in catalog::commutative_entries().iter().filter(|e| e.order() <= 3) {
            for t in catalog::commutative_entries().iter().filter(|e| (2..=3).contains(&e.order())) {
                let (s, t) = (s.monoid(), t.monoid());
                if !is_reflexive(&s, &t) {
                    continue;
                }
                let adj = hom_set(&s, &t);
                let d = DualityFunction::from_fn(s.clone(), adj.monoid.clone(), t.clone(), |x, h| adj.homs[h][x]).unwrap();
                assert!(verify_duality(&d).is_ok());
            }
        }
    }

    #[test]
    fn order_two_census() {
        let census = find_all_duality_quadruples(2).unwrap();
        let triples: Vec<(&str, &str, &str)> =
            census.quadruples.iter().map(|q| (q.r.as_str(), q.s.as_str(), q.t.as_str())).collect();
        assert_eq!(triples, [("M1", "M1", "M1"), ("M2", "M2", "M2")]);
        let red = reduce_duality_quadruples(&census.quadruples).unwrap();
        let names: Vec<&str> = red.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["psi1", "psi2"]);
    }
}
