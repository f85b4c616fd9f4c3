//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pathdual::algebra::catalog::{self, catalog_lookup};
use pathdual::algebra::{are_isomorphic, automorphisms, validate_semiring, Lattice, Monoid};
use pathdual::enumeration::{
    enumerate_commutative_monoids, enumerate_monoids_with_absorbing, enumerate_semiring_multiplications, semiring_class_key,
    CommutativityFilter, Quotient,
};
use pathdual::homdual::{
    duality_key, find_all_duality_quadruples, hom_tables, is_hom, psi5_new, reduce_duality_quadruples,
    reference_duality_function, DualityFunction,
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

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

fn parse_rendered(text: &str) -> Option<CayleyTable> {
    let rows: Vec<Vec<Elem>> = text
        .lines()
        .skip(2)
        .filter(|l| l.contains('|'))
        .map(|l| l.split('|').nth(1).unwrap().split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    CayleyTable::from_rows(&rows).ok()
}

fn monoid_counts() -> Outcome {
    let start = Instant::now();
    let small: Vec<usize> = (1..=4).map(|n| enumerate_commutative_monoids(n).map(|r| r.count)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let small_time = start.elapsed();
    let start = Instant::now();
    let five = enumerate_commutative_monoids(5).map_err(|e| e.to_string())?.count;
    let five_time = start.elapsed();
    ensure(small == [1, 2, 5, 19] && five == 78, || format!("counts {small:?}, {five}"))?;
    ensure(small_time < Duration::from_secs(1), || format!("orders 1-4 took {}", secs(small_time)))?;
    ensure(five_time < Duration::from_secs(60), || format!("order 5 took {}", secs(five_time)))?;
    Ok(format!("1, 2, 5, 19, 78 (orders 1-4 in {}, order 5 in {})", secs(small_time), secs(five_time)))
}

fn catalog_bijection() -> Outcome {
    let labelled: Vec<Monoid> = (0..=26).map(|k| catalog::monoid(&format!("M{k}")).unwrap()).collect();
    let mut hits = vec![0usize; labelled.len()];
    let mut classes = 0;
    for n in 1..=4 {
        for table in enumerate_commutative_monoids(n).map_err(|e| e.to_string())?.representatives {
            let m = Monoid::new(table, true).map_err(|e| e.to_string())?;
            let matches: Vec<usize> = (0..labelled.len()).filter(|&k| are_isomorphic(&m, &labelled[k]).is_some()).collect();
            ensure(matches.len() == 1, || format!("class matches {matches:?}"))?;
            hits[matches[0]] += 1;
            classes += 1;
        }
    }
    ensure(hits.iter().all(|&h| h == 1), || format!("hits per label {hits:?}"))?;
    for (k, m) in labelled.iter().enumerate() {
        let entry = catalog::entry(&format!("M{k}")).unwrap();
        let parsed = parse_rendered(&entry.render());
        ensure(parsed.as_ref() == Some(&entry.table), || format!("M{k} does not round-trip through its rendering"))?;
        ensure(m.table() == &entry.table, || format!("M{k} monoid differs from its table"))?;
    }
    Ok(format!("{classes} classes, each isomorphic to exactly one of M0-M26; all 27 renderings round-trip"))
}

fn duality_census() -> Outcome {
    let start = Instant::now();
    let census = find_all_duality_quadruples(4).map_err(|e| e.to_string())?;
    let reduction = reduce_duality_quadruples(&census.quadruples).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected = [
        "psi1", "psi2", "psi3", "psi4", "psi5", "psi6", "psi7", "psi9", "psi10", "psi11", "psi13", "psi15", "psi16", "psi17",
        "psi18", "psi21", "psi22", "psi23", "psi24", "psi25", "psi26", "psi235",
    ];
    let names: BTreeSet<&str> = reduction.classes.iter().map(|c| c.name.as_str()).collect();
    ensure(census.quadruples.len() == 110, || format!("{} quadruples", census.quadruples.len()))?;
    ensure(reduction.classes.len() == 22, || format!("{} classes", reduction.classes.len()))?;
    ensure(names == expected.iter().copied().collect(), || format!("class names {names:?}"))?;
    ensure(elapsed < Duration::from_secs(120), || format!("took {}", secs(elapsed)))?;
    Ok(format!("110 quadruples, 22 classes, all matched ({})", secs(elapsed)))
}

fn semiring_census() -> Outcome {
    let references = catalog::reference_semirings();
    let mut total = 0;
    for k in 1..=26 {
        let label = format!("M{k}");
        let add = catalog::monoid(&label).unwrap();
        let autos = automorphisms(&add);
        let found: BTreeSet<CayleyTable> = enumerate_semiring_multiplications(&add, Quotient::IsomorphismOrOpposite)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|c| c.key)
            .collect();
        let mut listed = BTreeSet::new();
        for r in references.iter().filter(|r| r.additive == label) {
            validate_semiring(add.table().clone(), r.mul.clone()).map_err(|e| format!("{label} listed table: {e}"))?;
            listed.insert(semiring_class_key(&r.mul, Quotient::IsomorphismOrOpposite, &autos));
        }
        ensure(found == listed, || format!("{label}: {} enumerated classes vs {} listed", found.len(), listed.len()))?;
        total += found.len();
    }
    let n = enumerate_monoids_with_absorbing(4, CommutativityFilter::NoncommutativeOnly, Quotient::IsomorphismOrOpposite)
        .map_err(|e| e.to_string())?;
    let labels = n.catalog_labels.unwrap_or_default();
    ensure(labels == ["N1", "N2"], || format!("noncommutative absorbing monoids {labels:?}"))?;
    Ok(format!("{total} semiring classes on M1-M26 match the listed tables; noncommutative absorbing order 4 is N1, N2"))
}

fn f4_count() -> Outcome {
    let f4 = catalog::reference_semirings().into_iter().find(|r| r.additive == "M25" && r.mult_label == "M18").ok_or("no F4 table")?;
    let s = validate_semiring(catalog::monoid("M25").unwrap().table().clone(), f4.mul).map_err(|e| e.to_string())?;
    let count = non_linear_endomorphism_count(&s);
    ensure(count == 12, || format!("{count} non-linear endomorphisms"))?;
    Ok("12 additive endomorphisms of M25 are not F4-linear".into())
}

/// Transports `psi` onto catalog carriers and returns its class key.
fn catalog_key(psi: &DualityFunction) -> Result<pathdual::homdual::DualityKey, String> {
    let find = |m: &Monoid| catalog_lookup(m).filter(|c| !c.anti).ok_or("carrier not in catalog".to_string());
    let (s, r, t) = (find(&psi.s)?, find(&psi.r)?, find(&psi.t)?);
    let mut rows = vec![vec![0; psi.r.order()]; psi.s.order()];
    for x in 0..psi.s.order() {
        for y in 0..psi.r.order() {
            rows[s.bijection[x]][r.bijection[y]] = t.bijection[psi.get(x, y)];
        }
    }
    Ok(duality_key(&s.label, &r.label, &t.label, &rows))
}

fn lattice_bridge() -> Outcome {
    let cases = [(Lattice::chain(2), "psi1"), (Lattice::chain(3), "psi4"), (Lattice::diamond(), "psi11"), (Lattice::chain(4), "psi15")];
    for (l, name) in &cases {
        let psi = lattice_duality_function(l).map_err(|e| e.to_string())?;
        let reference = catalog::reference_duality(name).unwrap();
        let want = duality_key(&reference.s, &reference.r, &reference.t, &reference.table);
        ensure(catalog_key(&psi)? == want, || format!("lattice of order {} does not match {name}", l.order()))?;
    }
    let census = find_all_duality_quadruples(4).map_err(|e| e.to_string())?;
    let reduction = reduce_duality_quadruples(&census.quadruples).map_err(|e| e.to_string())?;
    let into_m1: BTreeSet<&str> = reduction.classes.iter().filter(|c| c.key.t == "M1").map(|c| c.name.as_str()).collect();
    ensure(into_m1 == BTreeSet::from(["psi1", "psi4", "psi11", "psi15"]), || format!("classes into M1: {into_m1:?}"))?;
    Ok("2-chain, 3-chain, diamond, 4-chain give psi1, psi4, psi11, psi15, the only classes into M1".into())
}

fn dual_map_correctness() -> Outcome {
    let start = Instant::now();
    let psi = psi5_new();
    let lifted = lift_duality(&psi, 2).map_err(|e| e.to_string())?;
    let homs = hom_tables(&psi.s, &psi.s);
    let rs = lifted.r_space();
    let mut matrices = 0;
    let picks = homs.len().pow(4);
    for code in 0..picks {
        let mut c = code;
        let mut entry = || {
            let h = homs[c % homs.len()].clone();
            c /= homs.len();
            h
        };
        let matrix = vec![vec![entry(), entry()], vec![entry(), entry()]];
        let m = SiteMap::new(psi.s.clone(), matrix).map_err(|e| e.to_string())?;
        let dual = dual_map(&lifted, &m).map_err(|e| e.to_string())?;
        let brute = dual_candidates(&lifted, |x| m.apply(x)).map_err(|e| e.to_string())?;
        for (y, list) in rs.configurations().zip(&brute) {
            ensure(list == &vec![rs.encode(&dual.apply(&y))], || format!("brute-force duals of matrix {code} differ at {y:?}"))?;
        }
        matrices += 1;
    }
    let space = lifted.s_space();
    let product = product_monoid(&psi.s, 2).map_err(|e| e.to_string())?;
    let n = space.size() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0;
    while sampled < 500 {
        let table: FunctionTable = (0..n).map(|_| rng.random_range(0..n)).collect();
        if is_hom(&product, &product, &table) {
            continue;
        }
        let f = |x: &[Elem]| space.decode(table[space.encode(x)]);
        let candidates = dual_candidates(&lifted, f).map_err(|e| e.to_string())?;
        ensure(candidates.iter().any(Vec::is_empty), || format!("non-homomorphism {table:?} admits a dual"))?;
        sampled += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {}", secs(elapsed)))?;
    Ok(format!("{matrices} matrices over H(M6,M6) verified on all pairs; {sampled} non-homomorphisms have no dual ({})", secs(elapsed)))
}

fn pathwise_model(lifted: &LiftedDuality, seed: u64) -> RateModel {
    let local = &lifted.local.s;
    let homs = hom_tables(local, local);
    let k = lifted.sites;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps = (0..3)
        .map(|n| {
            let matrix = (0..k).map(|_| (0..k).map(|_| homs[rng.random_range(0..homs.len())].clone()).collect()).collect();
            (SiteMap::new(local.clone(), matrix).unwrap(), 1.0 + n as f64)
        })
        .collect();
    RateModel::new(lifted.s_space(), maps).unwrap()
}

fn pathwise_duality() -> Outcome {
    let dualities = [("psi1", reference_duality_function("psi1").unwrap()), ("psi2", reference_duality_function("psi2").unwrap()), ("psi5", psi5_new())];
    let window = (0.0, 8.0);
    let mut checks = 0;
    let mut min_events = usize::MAX;
    for (name, psi) in &dualities {
        let lifted = lift_duality(psi, 3).map_err(|e| e.to_string())?;
        for seed in 0..100u64 {
            let model = pathwise_model(&lifted, seed);
            let report = check_pathwise_duality(&model, &lifted, window, seed, PathwiseCoverage::Exhaustive)
                .map_err(|e| format!("{name}, seed {seed}: {e}"))?;
            ensure(report.events >= 20, || format!("{name}, seed {seed}: only {} events", report.events))?;
            ensure(report.violations == 0, || format!("{name}, seed {seed}: violations"))?;
            min_events = min_events.min(report.events);
            checks += report.checks;
        }
    }
    Ok(format!("psi1, psi2, psi5 on 3 sites, 100 seeds each, >= {min_events} events, {checks} exhaustive checks, 0 violations"))
}

fn expectation_duality() -> Outcome {
    let psi = psi5_new();
    let lifted = lift_duality(&psi, 2).map_err(|e| e.to_string())?;
    let model = pathwise_model(&lifted, 7);
    let (x, y, t) = (vec![1, 2], vec![1, 1], 1.0);
    let tol = 1e-12;
    let e = estimate_expectation_duality(&model, &lifted, &x, &y, t, 100_000, 42).map_err(|e| e.to_string())?;
    let lhs_exact = exact_semigroup_expectation(&model, &lifted, &x, &y, t, tol).map_err(|e| e.to_string())?;
    let rhs_exact = exact_dual_expectation(&model, &lifted, &x, &y, t, tol).map_err(|e| e.to_string())?;
    ensure(e.agree, || format!("MC sides {} ± {} vs {} ± {}", e.lhs, e.lhs_se, e.rhs, e.rhs_se))?;
    ensure((e.lhs - lhs_exact).abs() <= 1e-9 + 4.0 * e.lhs_se, || format!("LHS {} vs exact {lhs_exact}", e.lhs))?;
    ensure((e.rhs - lhs_exact).abs() <= 1e-9 + 4.0 * e.rhs_se, || format!("RHS {} vs exact {lhs_exact}", e.rhs))?;
    ensure((lhs_exact - rhs_exact).abs() <= 2.0 * tol, || format!("exact sides {lhs_exact} vs {rhs_exact}"))?;

    let homs = hom_tables(&psi.s, &psi.s);
    let h = homs
        .iter()
        .find(|h| h.iter().all(|&v| h[v] == v) && h.iter().enumerate().any(|(i, &v)| v != i) && h.iter().any(|&v| v != 0))
        .ok_or("no nontrivial idempotent endomorphism of M6")?;
    let zero = vec![0; psi.s.order()];
    let m = SiteMap::new(psi.s.clone(), vec![vec![h.clone(), zero.clone()], vec![zero, h.clone()]]).map_err(|e| e.to_string())?;
    let rate = 1.7;
    let single = RateModel::new(lifted.s_space(), vec![(m.clone(), rate)]).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for x in lifted.s_space().configurations() {
        for y in lifted.r_space().configurations() {
            let p = (-rate * t).exp();
            let closed = p * lifted.eval_real(&x, &y).unwrap() + (1.0 - p) * lifted.eval_real(&m.apply(&x), &y).unwrap();
            let exact = exact_semigroup_expectation(&single, &lifted, &x, &y, t, tol).map_err(|e| e.to_string())?;
            worst = worst.max((exact - closed).abs());
        }
    }
    ensure(worst <= 1e-9, || format!("closed form deviates by {worst:e}"))?;
    Ok(format!(
        "MC {:.5} ± {:.5} vs {:.5} ± {:.5}, exact {lhs_exact:.9}; closed form within {worst:.1e}",
        e.lhs, e.lhs_se, e.rhs, e.rhs_se
    ))
}

fn empirical_property() -> Outcome {
    let census = find_all_duality_quadruples(4).map_err(|e| e.to_string())?;
    ensure(census.candidates == census.verified, || format!("{} of {} candidates verified", census.verified, census.candidates))?;
    ensure(census.triples == census.quadruples.len(), || format!("{} triples but {} quadruples", census.triples, census.quadruples.len()))?;
    let order = |label: &str| catalog::entry(label).unwrap().order();
    for q in &census.quadruples {
        let (s, r, t) = (order(&q.s), order(&q.r), order(&q.t));
        ensure(s == r, || format!("{} x {} -> {}: |S| != |R|", q.s, q.r, q.t))?;
        ensure(!q.psi.is_minimal() || t <= s.min(r), || format!("{} x {} -> {}: |T| too large", q.s, q.r, q.t))?;
    }
    Ok(format!("{} triples, {} candidates, all verified; |S| = |R| and |T| <= min(|S|,|R|) throughout", census.triples, census.candidates))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("monoid counts", monoid_counts),
        ("catalog bijection", catalog_bijection),
        ("duality census", duality_census),
        ("semiring census", semiring_census),
        ("F4 count", f4_count),
        ("lattice bridge", lattice_bridge),
        ("dual-map correctness", dual_map_correctness),
        ("pathwise duality", pathwise_duality),
        ("expectation duality", expectation_duality),
        ("empirical duality property", empirical_property),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
