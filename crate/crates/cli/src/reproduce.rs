//! The reproduction manifest: one check per listed table or claim, each
//! recording the catalog entries it depends on.
//!
//! Checks read the listed tables from an [`Artifacts`] value rather than from
//! the catalog directly, so corrupting one listed table fails exactly the
//! checks that declare it as a dependency.

use std::collections::{BTreeMap, BTreeSet};

use pathdual::algebra::catalog::{self, ReferenceDuality, ReferenceSemiring};
use pathdual::algebra::{are_anti_isomorphic, are_isomorphic, automorphisms, isomorphisms, validate_monoid, validate_semiring, Lattice, Monoid};
use pathdual::enumeration::{
    enumerate_commutative_monoids, enumerate_monoids_with_absorbing, enumerate_semiring_multiplications, semiring_class_key,
    CommutativityFilter, EnumerationReport, Quotient,
};
use pathdual::homdual::{
    duality_key, find_all_duality_quadruples, hom_tables, is_hom, DualityFunction, DualityKey, QuadrupleCensus, Reduction,
    M5_REAL,
};
use pathdual::product::{
    dual_candidates, dual_map, lattice_duality_function, lift_duality, non_linear_endomorphism_count, product_monoid,
    LiftedDuality, SiteMap,
};
use pathdual::sim::{
    check_pathwise_duality, estimate_expectation_duality, exact_dual_expectation, exact_semigroup_expectation,
    PathwiseCoverage, RateModel,
};
use pathdual::{CayleyTable, Elem, FunctionTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// The listed tables that checks are compared against.
#[derive(Debug, Clone)]
pub struct Artifacts {
    pub monoids: BTreeMap<String, CayleyTable>,
    pub semirings: Vec<ReferenceSemiring>,
    pub dualities: Vec<ReferenceDuality>,
}

impl Artifacts {
    /// The tables embedded in the catalog.
    pub fn listed() -> Self {
        let monoids = catalog::catalog()
            .iter()
            .filter(|e| e.label.starts_with('M') || e.label.starts_with('N'))
            .map(|e| (e.label.clone(), e.table.clone()))
            .collect();
        Artifacts { monoids, semirings: catalog::reference_semirings(), dualities: catalog::reference_dualities() }
    }

    pub fn monoid(&self, label: &str) -> Result<Monoid, String> {
        let table = self.monoids.get(label).ok_or_else(|| format!("no listed table {label}"))?;
        validate_monoid(table.clone(), false).map_err(|e| format!("listed {label}: {e}"))
    }

    pub fn duality(&self, name: &str) -> Result<DualityFunction, String> {
        let d = self.dualities.iter().find(|d| d.name == name).ok_or_else(|| format!("no listed duality {name}"))?;
        DualityFunction::new(self.monoid(&d.s)?, self.monoid(&d.r)?, self.monoid(&d.t)?, &d.table)
            .and_then(DualityFunction::verify)
            .map_err(|e| format!("listed {name}: {e}"))
    }

    fn carriers(&self, name: &str) -> Vec<String> {
        self.dualities
            .iter()
            .find(|d| d.name == name)
            .map(|d| [&d.s, &d.r, &d.t].into_iter().cloned().collect::<BTreeSet<_>>().into_iter().collect())
            .unwrap_or_default()
    }
}

/// Effort settings for the statistical and sampled checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effort {
    pub pathwise_seeds: u64,
    pub replicates: usize,
    pub non_hom_samples: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort { pathwise_seeds: 100, replicates: 100_000, non_hom_samples: 500 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub operation: String,
    pub depends_on: Vec<String>,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    /// `- expected` / `+ observed` lines for a failed check.
    pub diff: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub effort: Effort,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Manifest {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}: {}\n", if c.pass { "PASS" } else { "FAIL" }, c.id, c.observed));
            if let Some(diff) = &c.diff {
                for line in diff.lines() {
                    out.push_str(&format!("    {line}\n"));
                }
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    /// `run` returns the observed value on success and on failure.
    fn check(
        &mut self,
        id: impl Into<String>,
        claim: &str,
        operation: &str,
        depends_on: Vec<String>,
        expected: impl Into<String>,
        run: impl FnOnce() -> Result<String, String>,
    ) {
        let expected = expected.into();
        let (pass, observed) = match run() {
            Ok(o) => (true, o),
            Err(o) => (false, o),
        };
        let diff = (!pass).then(|| format!("- {expected}\n+ {observed}"));
        self.checks.push(Check {
            id: id.into(),
            claim: claim.into(),
            operation: operation.into(),
            depends_on,
            expected,
            observed,
            pass,
            diff,
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Whether `b` is `a` up to isomorphisms of the three carriers, possibly after transposing.
fn equivalent(a: &DualityFunction, b: &DualityFunction) -> bool {
    let same = |b: &DualityFunction| {
        let (sig, rho, tau) = (isomorphisms(&a.s, &b.s), isomorphisms(&a.r, &b.r), isomorphisms(&a.t, &b.t));
        sig.iter().any(|s| {
            rho.iter().any(|r| {
                tau.iter().any(|t| (0..a.s.order()).all(|x| (0..a.r.order()).all(|y| b.get(s[x], r[y]) == t[a.get(x, y)])))
            })
        })
    };
    same(b) || same(&b.transpose())
}

fn pathwise_model(lifted: &LiftedDuality, seed: u64) -> RateModel {
    let local = &lifted.local.s;
    let homs = hom_tables(local, local);
    let k = lifted.sites;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps = (0..3)
        .map(|n| {
            let matrix = (0..k).map(|_| (0..k).map(|_| homs[rng.random_range(0..homs.len())].clone()).collect()).collect();
            (SiteMap::new(local.clone(), matrix).expect("entries are homomorphisms"), 1.0 + n as f64)
        })
        .collect();
    RateModel::new(lifted.s_space(), maps).expect("rates are positive")
}

/// The simulation orientation of ψ5: `M6 × M5 → M5` with `M5` embedded in `(ℝ,·)`.
fn psi5_from(artifacts: &Artifacts) -> Result<DualityFunction, String> {
    artifacts
        .duality("psi5")?
        .transpose()
        .verify()
        .and_then(|d| d.with_real_embedding(M5_REAL.to_vec()))
        .map_err(|e| e.to_string())
}

fn monoid_checks(b: &mut Builder, artifacts: &Artifacts, reports: &[Result<EnumerationReport, String>]) {
    for (label, _) in artifacts.monoids.iter().filter(|(l, _)| l.starts_with('M')) {
        b.check(
            format!("monoid:{label}"),
            &format!("the listed table {label} is a commutative monoid class of its order"),
            "enumerate_commutative_monoids",
            vec![label.clone()],
            format!("{label} isomorphic to the enumerated class labelled {label}"),
            || {
                let m = artifacts.monoid(label)?;
                ensure(m.is_commutative(), || format!("{label} is not commutative"))?;
                if let Some(a) = m.table().absorbing_element() {
                    ensure(a == m.order() - 1, || format!("absorbing element of {label} is {a}"))?;
                }
                let report = reports.get(m.order() - 1).ok_or_else(|| format!("order {} not enumerated", m.order()))?.as_ref()?;
                let names = report.catalog_labels.as_ref().ok_or("enumeration has no labels")?;
                let i = names.iter().position(|l| l == label).ok_or_else(|| format!("no enumerated class is labelled {label}"))?;
                let rep = Monoid::new(report.representatives[i].clone(), true).map_err(|e| e.to_string())?;
                ensure(are_isomorphic(&m, &rep).is_some(), || format!("{label} is not isomorphic to its enumerated class"))?;
                Ok(format!("{label} isomorphic to the enumerated class labelled {label}"))
            },
        );
    }
    let noncommutative = enumerate_monoids_with_absorbing(4, CommutativityFilter::NoncommutativeOnly, Quotient::IsomorphismOrOpposite)
        .map_err(|e| e.to_string());
    for label in ["N1", "N2"] {
        b.check(
            format!("monoid:{label}"),
            &format!("{label} is a noncommutative monoid of order 4 with an absorbing element"),
            "enumerate_monoids_with_absorbing",
            vec![label.to_string()],
            format!("{label} isomorphic or anti-isomorphic to the enumerated class {label}"),
            || {
                let m = artifacts.monoid(label)?;
                let report = noncommutative.as_ref().map_err(Clone::clone)?;
                let names = report.catalog_labels.as_ref().ok_or("enumeration has no labels")?;
                ensure(names == &["N1", "N2"], || format!("noncommutative classes {names:?}"))?;
                let i = names.iter().position(|l| l == label).expect("label present");
                let rep = Monoid::new(report.representatives[i].clone(), false).map_err(|e| e.to_string())?;
                ensure(are_isomorphic(&m, &rep).is_some() || are_anti_isomorphic(&m, &rep).is_some(), || {
                    format!("{label} does not match its enumerated class")
                })?;
                Ok(format!("{label} isomorphic or anti-isomorphic to the enumerated class {label}"))
            },
        );
    }
}

fn semiring_checks(b: &mut Builder, artifacts: &Artifacts) {
    for k in 1..=26 {
        let label = format!("M{k}");
        let listed: Vec<&ReferenceSemiring> = artifacts.semirings.iter().filter(|r| r.additive == label).collect();
        let mut deps: BTreeSet<String> = listed.iter().map(|r| r.mult_label.clone()).collect();
        deps.insert(label.clone());
        b.check(
            format!("semirings:{label}"),
            &format!("the listed multiplications on {label} are all semiring structures up to isomorphism"),
            "enumerate_semiring_multiplications",
            deps.into_iter().collect(),
            format!("{} classes, equal to the listed tables", listed.len()),
            || {
                let add = artifacts.monoid(&label)?;
                let autos = automorphisms(&add);
                let mut keys = BTreeSet::new();
                for r in &listed {
                    let s = validate_semiring(add.table().clone(), r.mul.clone()).map_err(|e| format!("listed table: {e}"))?;
                    let mult = artifacts.monoid(&r.mult_label)?;
                    ensure(
                        are_isomorphic(s.multiplicative(), &mult).is_some() || are_anti_isomorphic(s.multiplicative(), &mult).is_some(),
                        || format!("multiplication is not {}", r.mult_label),
                    )?;
                    keys.insert(semiring_class_key(&r.mul, Quotient::IsomorphismOrOpposite, &autos));
                }
                let found: BTreeSet<CayleyTable> = enumerate_semiring_multiplications(&add, Quotient::IsomorphismOrOpposite)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .map(|c| c.key)
                    .collect();
                let missing = keys.difference(&found).count();
                let extra = found.difference(&keys).count();
                ensure(missing == 0 && extra == 0, || format!("{} classes; {missing} listed missing, {extra} unlisted", found.len()))?;
                Ok(format!("{} classes, equal to the listed tables", found.len()))
            },
        );
    }
    b.check(
        "f4-linearity",
        "exactly 12 additive endomorphisms of M25 are not linear over the field of four elements",
        "non_linear_endomorphism_count",
        labels(&["M18", "M25"]),
        "12",
        || {
            let add = artifacts.monoid("M25")?;
            let f4 = artifacts
                .semirings
                .iter()
                .find(|r| r.additive == "M25" && r.mult_label == "M18")
                .ok_or("no listed multiplication M18 on M25")?;
            let s = validate_semiring(add.table().clone(), f4.mul.clone()).map_err(|e| e.to_string())?;
            let mult = artifacts.monoid("M18")?;
            ensure(are_isomorphic(s.multiplicative(), &mult).is_some(), || "multiplication is not M18".into())?;
            let n = non_linear_endomorphism_count(&s);
            ensure(n == 12, || n.to_string())?;
            Ok(n.to_string())
        },
    );
}

fn duality_checks(b: &mut Builder, artifacts: &Artifacts, census: &Result<(QuadrupleCensus, Reduction), String>) {
    b.check(
        "duality-census",
        "110 dualities between monoids of order 2 to 4 reduce to 22 classes, each a listed table",
        "find_all_duality_quadruples + reduce_duality_quadruples",
        vec![],
        "110 quadruples, 22 classes, 0 unmatched",
        || {
            let (c, r) = census.as_ref().map_err(Clone::clone)?;
            let names: BTreeSet<&str> = r.classes.iter().map(|c| c.name.as_str()).collect();
            let listed: BTreeSet<&str> = artifacts.dualities.iter().map(|d| d.name.as_str()).collect();
            let observed = format!("{} quadruples, {} classes, {} unmatched", c.quadruples.len(), r.classes.len(), listed.difference(&names).count());
            ensure(c.quadruples.len() == 110 && r.classes.len() == 22 && names == listed, || observed.clone())?;
            Ok(observed)
        },
    );
    let keys: Result<BTreeSet<DualityKey>, String> =
        census.as_ref().map(|(_, r)| r.classes.iter().map(|c| c.key.clone()).collect()).map_err(Clone::clone);
    for d in &artifacts.dualities {
        b.check(
            format!("duality:{}", d.name),
            &format!("{} is a duality {} × {} → {} and a class of the census", d.name, d.s, d.r, d.t),
            "verify_duality + reduce_duality_quadruples",
            artifacts.carriers(&d.name),
            "conditions (i)-(iv) hold; class found",
            || {
                let psi = artifacts.duality(&d.name)?;
                let key = duality_key(&d.s, &d.r, &d.t, &psi.rows());
                ensure(keys.as_ref().map_err(Clone::clone)?.contains(&key), || "verified, but no census class has this key".into())?;
                Ok("conditions (i)-(iv) hold; class found".into())
            },
        );
    }
    let bridge = [("psi1", Lattice::chain(2)), ("psi4", Lattice::chain(3)), ("psi11", Lattice::diamond()), ("psi15", Lattice::chain(4))];
    let mut deps: BTreeSet<String> = BTreeSet::new();
    for (name, _) in &bridge {
        deps.extend(artifacts.carriers(name));
    }
    b.check(
        "lattice-bridge",
        "the chains of length 2, 3, 4 and the diamond give psi1, psi4, psi15, psi11, the only classes into M1",
        "lattice_duality_function",
        deps.into_iter().collect(),
        "psi1, psi4, psi11, psi15; classes into M1: psi1, psi4, psi11, psi15",
        || {
            for (name, lattice) in &bridge {
                let from_lattice = lattice_duality_function(lattice).map_err(|e| e.to_string())?;
                let listed = artifacts.duality(name)?;
                ensure(equivalent(&from_lattice, &listed), || format!("lattice of order {} does not give {name}", lattice.order()))?;
            }
            let (_, r) = census.as_ref().map_err(Clone::clone)?;
            let into_m1: Vec<&str> = r.classes.iter().filter(|c| c.key.t == "M1").map(|c| c.name.as_str()).collect();
            let observed = format!("psi1, psi4, psi11, psi15; classes into M1: {}", into_m1.join(", "));
            ensure(into_m1 == ["psi1", "psi4", "psi11", "psi15"], || observed.clone())?;
            Ok(observed)
        },
    );
    b.check(
        "duality-property",
        "every candidate built from an isomorphism R → H(S,T) is a duality, with |S| = |R| and |T| <= |S| when minimal",
        "find_all_duality_quadruples",
        vec![],
        "all candidates verified; 0 exceptions",
        || {
            let (c, _) = census.as_ref().map_err(Clone::clone)?;
            let order = |l: &str| catalog::entry(l).map(|e| e.order()).unwrap_or(0);
            let exceptions = c
                .quadruples
                .iter()
                .filter(|q| order(&q.s) != order(&q.r) || (q.psi.is_minimal() && order(&q.t) > order(&q.s)))
                .count();
            let observed = format!("{} of {} candidates verified; {exceptions} exceptions", c.verified, c.candidates);
            ensure(c.verified == c.candidates && exceptions == 0, || observed.clone())?;
            Ok(observed)
        },
    );
}

fn process_checks(b: &mut Builder, artifacts: &Artifacts, effort: Effort) {
    b.check(
        "dual-maps:psi5",
        "every map on two sites with entries in H(M6,M6) has a unique dual under psi5; non-homomorphisms have none",
        "dual_map + dual_candidates",
        artifacts.carriers("psi5"),
        format!("81 matrices unique and exact; {} non-homomorphisms without dual", effort.non_hom_samples),
        || {
            let psi = psi5_from(artifacts)?;
            let lifted = lift_duality(&psi, 2).map_err(|e| e.to_string())?;
            let homs = hom_tables(&psi.s, &psi.s);
            let rs = lifted.r_space();
            let total = homs.len().pow(4);
            for code in 0..total {
                let entry = |p: u32| homs[code / homs.len().pow(p) % homs.len()].clone();
                let m = SiteMap::new(psi.s.clone(), vec![vec![entry(0), entry(1)], vec![entry(2), entry(3)]]).map_err(|e| e.to_string())?;
                let dual = dual_map(&lifted, &m).map_err(|e| e.to_string())?;
                let brute = dual_candidates(&lifted, |x| m.apply(x)).map_err(|e| e.to_string())?;
                ensure(rs.configurations().zip(&brute).all(|(y, c)| c == &vec![rs.encode(&dual.apply(&y))]), || {
                    format!("matrix {code}: brute-force duals differ")
                })?;
            }
            let space = lifted.s_space();
            let product = product_monoid(&psi.s, 2).map_err(|e| e.to_string())?;
            let n = space.size() as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(2024);
            let mut sampled = 0;
            while sampled < effort.non_hom_samples {
                let table: FunctionTable = (0..n).map(|_| rng.random_range(0..n)).collect();
                if is_hom(&product, &product, &table) {
                    continue;
                }
                let f = |x: &[Elem]| space.decode(table[space.encode(x)]);
                let candidates = dual_candidates(&lifted, f).map_err(|e| e.to_string())?;
                ensure(candidates.iter().any(Vec::is_empty), || format!("non-homomorphism {table:?} has a dual"))?;
                sampled += 1;
            }
            Ok(format!("{total} matrices unique and exact; {sampled} non-homomorphisms without dual"))
        },
    );
    let mut deps: BTreeSet<String> = BTreeSet::new();
    for name in ["psi1", "psi2", "psi5"] {
        deps.extend(artifacts.carriers(name));
    }
    b.check(
        "pathwise",
        "the pathwise duality identity holds exactly for every realized stream",
        "check_pathwise_duality",
        deps.into_iter().collect(),
        format!("0 violations over {} seeds for psi1, psi2, psi5 on 3 sites", effort.pathwise_seeds),
        || {
            let dualities = [artifacts.duality("psi1")?, artifacts.duality("psi2")?, psi5_from(artifacts)?];
            let mut min_events = usize::MAX;
            for psi in &dualities {
                let lifted = lift_duality(psi, 3).map_err(|e| e.to_string())?;
                for seed in 0..effort.pathwise_seeds {
                    let model = pathwise_model(&lifted, seed);
                    let report = check_pathwise_duality(&model, &lifted, (0.0, 8.0), seed, PathwiseCoverage::Exhaustive)
                        .map_err(|e| format!("seed {seed}: {e}"))?;
                    min_events = min_events.min(report.events);
                }
            }
            ensure(min_events >= 20, || format!("a stream had only {min_events} events"))?;
            Ok(format!("0 violations over {} seeds for psi1, psi2, psi5 on 3 sites", effort.pathwise_seeds))
        },
    );
    b.check(
        "expectation",
        "both sides of the expectation duality agree with each other and with uniformization",
        "estimate_expectation_duality + exact_semigroup_expectation",
        artifacts.carriers("psi5"),
        "agreement within 4 combined standard errors; exact sides within 1e-9",
        || {
            let psi = psi5_from(artifacts)?;
            let lifted = lift_duality(&psi, 2).map_err(|e| e.to_string())?;
            let model = pathwise_model(&lifted, 7);
            let (x, y, t, tol) = ([1, 2], [1, 1], 1.0, 1e-12);
            let e = estimate_expectation_duality(&model, &lifted, &x, &y, t, effort.replicates, 42).map_err(|e| e.to_string())?;
            let lhs = exact_semigroup_expectation(&model, &lifted, &x, &y, t, tol).map_err(|e| e.to_string())?;
            let rhs = exact_dual_expectation(&model, &lifted, &x, &y, t, tol).map_err(|e| e.to_string())?;
            let observed = format!("MC {:.5} ± {:.5} and {:.5} ± {:.5}; exact {lhs:.9} and {rhs:.9}", e.lhs, e.lhs_se, e.rhs, e.rhs_se);
            let ok = e.agree
                && (e.lhs - lhs).abs() <= 1e-9 + 4.0 * e.lhs_se
                && (e.rhs - lhs).abs() <= 1e-9 + 4.0 * e.rhs_se
                && (lhs - rhs).abs() <= 1e-9;
            ensure(ok, || observed.clone())?;
            Ok(observed)
        },
    );
}

/// Runs every check against `artifacts`.
pub fn reproduce_with(artifacts: &Artifacts, effort: Effort) -> Manifest {
    let mut b = Builder { checks: Vec::new() };
    let reports: Vec<Result<EnumerationReport, String>> =
        (1..=5).map(|n| enumerate_commutative_monoids(n).map_err(|e| e.to_string())).collect();
    b.check(
        "monoid-counts",
        "there are 1, 2, 5, 19, 78 commutative monoids of orders 1 to 5",
        "enumerate_commutative_monoids",
        vec![],
        "1, 2, 5, 19, 78",
        || {
            let counts: Vec<String> = reports.iter().map(|r| r.as_ref().map(|r| r.count.to_string()).unwrap_or_else(Clone::clone)).collect();
            let observed = counts.join(", ");
            ensure(observed == "1, 2, 5, 19, 78", || observed.clone())?;
            Ok(observed)
        },
    );
    monoid_checks(&mut b, artifacts, &reports);
    semiring_checks(&mut b, artifacts);
    let census = find_all_duality_quadruples(4)
        .map_err(|e| e.to_string())
        .and_then(|c| pathdual::homdual::reduce_duality_quadruples(&c.quadruples).map(|r| (c, r)).map_err(|e| e.to_string()));
    duality_checks(&mut b, artifacts, &census);
    process_checks(&mut b, artifacts, effort);
    let failed = b.checks.iter().filter(|c| !c.pass).count();
    Manifest { effort, passed: b.checks.len() - failed, failed, checks: b.checks }
}

pub fn reproduce_all() -> Manifest {
    reproduce_with(&Artifacts::listed(), Effort::default())
}
