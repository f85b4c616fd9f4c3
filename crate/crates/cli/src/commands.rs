use pathdual::algebra::catalog;
use pathdual::enumeration::{enumerate_commutative_monoids, enumerate_semiring_multiplications, Quotient};
use pathdual::homdual::{carrier_labels, find_all_duality_quadruples, reduce_duality_quadruples, DualityFunction};
use pathdual::product::{check_dual_pair, dual_map, lift_duality, size_budget, DualCheck};
use pathdual::sim::{
    check_pathwise_duality, estimate_expectation_duality, exact_semigroup_expectation, ExpectationEstimate, PathwiseCoverage,
    PathwiseReport, RateModel, EXACT_STATE_LIMIT,
};
use pathdual::{CayleyTable, Elem, FunctionTable, SimError};
use serde::Serialize;

use crate::args::{
    CheckKind, Cli, Command, CoverageArg, DualMapArgs, DualitiesCommand, Format, MonoidsCommand, QuotientArg, ReproduceArgs,
    SemiringsCommand, SimulateArgs,
};
use crate::error::CliError;
use crate::inputs;
use crate::reproduce::reproduce_all;

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs one command and returns its standard output.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Monoids(MonoidsCommand::Enumerate { order, format }) => monoids_enumerate(order as usize, format),
        Command::Monoids(MonoidsCommand::Catalog { label, format }) => monoids_catalog(label.as_deref(), format),
        Command::Semirings(SemiringsCommand::Enumerate { additive, quotient, format }) => semirings_enumerate(&additive, quotient, format),
        Command::Dualities(DualitiesCommand::Find { max_order, reduce, format }) => dualities_find(max_order as usize, reduce, format),
        Command::DualMap(args) => dual_map_command(args),
        Command::Simulate(args) => simulate(args),
        Command::Reproduce(args) => reproduce(args),
    }
}

fn monoids_enumerate(order: usize, format: Format) -> Result<String, CliError> {
    let report = enumerate_commutative_monoids(order).map_err(CliError::computation)?;
    Ok(match format {
        Format::Json => json(&report),
        Format::Table => {
            let mut out = format!("{} commutative monoids of order {order} (canonical representatives)\n\n", report.count);
            for (i, table) in report.representatives.iter().enumerate() {
                let title = report.catalog_labels.as_ref().map_or_else(|| format!("#{}", i + 1), |l| l[i].clone());
                out.push_str(&table.render(&title));
                out.push('\n');
            }
            out
        }
    })
}

fn monoids_catalog(label: Option<&str>, format: Format) -> Result<String, CliError> {
    let entries: Vec<&catalog::CatalogEntry> = match label {
        Some(l) => vec![catalog::entry(l).map_err(CliError::usage)?],
        None => catalog::catalog().iter().filter(|e| e.label != "F4-mult").collect(),
    };
    Ok(match format {
        Format::Json => json(&entries),
        Format::Table => entries.iter().map(|e| e.render()).collect::<Vec<_>>().join("\n"),
    })
}

#[derive(Serialize)]
struct SemiringView<'a> {
    additive: &'a str,
    multiplication: &'a CayleyTable,
    mult_label: &'a str,
    mult_anti: bool,
    one: Elem,
    commutative: bool,
    one_generates_addition: bool,
}

fn semirings_enumerate(additive: &str, quotient: QuotientArg, format: Format) -> Result<String, CliError> {
    let entry = catalog::entry(additive).map_err(CliError::usage)?;
    if !entry.commutative {
        return Err(CliError::Usage(format!("{} is not commutative", entry.label)));
    }
    if entry.order() > pathdual::enumeration::MAX_SEMIRING_ORDER {
        return Err(CliError::Usage(format!("{} has order above {}", entry.label, pathdual::enumeration::MAX_SEMIRING_ORDER)));
    }
    let quotient = match quotient {
        QuotientArg::Isomorphism => Quotient::Isomorphism,
        QuotientArg::IsomorphismOrOpposite => Quotient::IsomorphismOrOpposite,
    };
    let classes = enumerate_semiring_multiplications(&entry.monoid(), quotient).map_err(CliError::computation)?;
    let views: Vec<SemiringView> = classes
        .iter()
        .map(|c| SemiringView {
            additive: &entry.label,
            multiplication: c.semiring.multiplicative().table(),
            mult_label: &c.mult_label,
            mult_anti: c.mult_anti,
            one: c.semiring.one(),
            commutative: c.semiring.is_commutative(),
            one_generates_addition: c.semiring.one_generates_addition(),
        })
        .collect();
    Ok(match format {
        Format::Json => json(&views),
        Format::Table => {
            let mut out = format!("{} semiring classes on {}\n", views.len(), entry.label);
            for v in &views {
                let suffix = if v.mult_anti { "^op" } else { "" };
                out.push_str(&format!("\nmultiplication ≅ {}{suffix}\n", v.mult_label));
                out.push_str(&v.multiplication.render("·"));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct QuadrupleView {
    s: String,
    r: String,
    t: String,
    table: Vec<Vec<Elem>>,
    minimal: bool,
    conditions: [bool; 4],
}

#[derive(Serialize)]
struct CensusView {
    max_order: usize,
    triples: usize,
    candidates: usize,
    verified: usize,
    quadruples: Vec<QuadrupleView>,
}

#[derive(Serialize)]
struct ClassView {
    name: String,
    s: String,
    r: String,
    t: String,
    table: Vec<Vec<Elem>>,
    members: usize,
}

#[derive(Serialize)]
struct ReductionView {
    max_order: usize,
    quadruples: usize,
    non_minimal: usize,
    classes: Vec<ClassView>,
}

fn dualities_find(max_order: usize, reduce: bool, format: Format) -> Result<String, CliError> {
    let census = find_all_duality_quadruples(max_order).map_err(CliError::computation)?;
    if reduce {
        let reduction = reduce_duality_quadruples(&census.quadruples).map_err(CliError::computation)?;
        let view = ReductionView {
            max_order,
            quadruples: census.quadruples.len(),
            non_minimal: reduction.non_minimal,
            classes: reduction
                .classes
                .into_iter()
                .map(|c| ClassView { name: c.name, s: c.key.s, r: c.key.r, t: c.key.t, table: c.key.table, members: c.members })
                .collect(),
        };
        return Ok(match format {
            Format::Json => json(&view),
            Format::Table => {
                let mut out = format!("{} classes from {} quadruples ({} not minimal)\n", view.classes.len(), view.quadruples, view.non_minimal);
                for c in &view.classes {
                    out.push_str(&format!("\n{}: {} × {} → {} ({} members)\n", c.name, c.s, c.r, c.t, c.members));
                    out.push_str(&render_class(c));
                }
                out
            }
        });
    }
    let view = CensusView {
        max_order,
        triples: census.triples,
        candidates: census.candidates,
        verified: census.verified,
        quadruples: census
            .quadruples
            .iter()
            .map(|q| QuadrupleView {
                s: q.s.clone(),
                r: q.r.clone(),
                t: q.t.clone(),
                table: q.psi.rows(),
                minimal: q.psi.is_minimal(),
                conditions: q.psi.verified.as_ref().map_or([false; 4], |v| v.passed),
            })
            .collect(),
    };
    Ok(match format {
        Format::Json => json(&view),
        Format::Table => {
            let mut out = format!("{} quadruples ({} candidates, {} verified)\n", view.quadruples.len(), view.candidates, view.verified);
            for q in &census.quadruples {
                out.push_str(&format!("\n{} × {} → {}\n", q.s, q.r, q.t));
                out.push_str(&q.psi.render("ψ"));
            }
            out
        }
    })
}

fn render_class(c: &ClassView) -> String {
    let carrier = |l: &str| catalog::monoid(l).expect("class carriers are catalog labels");
    DualityFunction::new(carrier(&c.s), carrier(&c.r), carrier(&c.t), &c.table)
        .map(|psi| psi.render("ψ"))
        .expect("class tables have carrier shapes")
}

fn describe(psi: &DualityFunction) -> [String; 3] {
    carrier_labels(psi).map(|l| l.unwrap_or_else(|| "unlisted".into()))
}

#[derive(Serialize)]
struct DualMapReport {
    carriers: [String; 3],
    sites: usize,
    map: Vec<Vec<FunctionTable>>,
    dual: Vec<Vec<FunctionTable>>,
    check: DualCheck,
}

fn dual_map_command(args: DualMapArgs) -> Result<String, CliError> {
    let psi = inputs::load_duality(&args.psi)?;
    let sites = args.sites as usize;
    let map = inputs::load_map(&args.map, &psi.s, sites)?;
    let lifted = lift_duality(&psi, sites).map_err(CliError::computation)?;
    let dual = dual_map(&lifted, &map).map_err(CliError::computation)?;
    let check = check_dual_pair(&lifted, |x| map.apply(x), |y| dual.apply(y), 0).map_err(CliError::computation)?;
    Ok(json(&DualMapReport { carriers: describe(&psi), sites, map: map.matrix, dual: dual.matrix, check }))
}

#[derive(Serialize)]
struct PathwiseOutput {
    check: &'static str,
    carriers: [String; 3],
    sites: usize,
    window: (f64, f64),
    coverage: PathwiseCoverage,
    report: PathwiseReport,
    pass: bool,
}

#[derive(Serialize)]
struct ExpectationOutput {
    check: &'static str,
    carriers: [String; 3],
    sites: usize,
    x: Vec<Elem>,
    y: Vec<Elem>,
    estimate: ExpectationEstimate,
    /// Uniformization value of the left side, when the state space is small enough.
    exact: Option<f64>,
    pass: bool,
}

fn simulate(args: SimulateArgs) -> Result<String, CliError> {
    if !(args.t_max.is_finite() && args.t_max > 0.0) {
        return Err(CliError::Usage(format!("--t-max must be positive, got {}", args.t_max)));
    }
    if args.replicates < 2 {
        return Err(CliError::Usage("--replicates must be at least 2".into()));
    }
    let psi = inputs::load_duality(&args.psi)?;
    let sites = args.sites as usize;
    let lifted = lift_duality(&psi, sites).map_err(CliError::usage)?;
    let maps = inputs::load_rates(&args.rates, &psi.s, sites)?;
    let model = RateModel::new(lifted.s_space(), maps).map_err(CliError::usage)?;
    let carriers = describe(&psi);
    match args.check {
        CheckKind::Pathwise => {
            let pairs = lifted.s_space().size().saturating_mul(lifted.r_space().size());
            let coverage = match args.coverage {
                CoverageArg::Exhaustive => PathwiseCoverage::Exhaustive,
                CoverageArg::Sampled => PathwiseCoverage::Sampled,
                CoverageArg::Auto if pairs <= size_budget() => PathwiseCoverage::Exhaustive,
                CoverageArg::Auto => PathwiseCoverage::Sampled,
            };
            let window = (0.0, args.t_max);
            let report = check_pathwise_duality(&model, &lifted, window, args.seed, coverage).map_err(|e| match e {
                SimError::DualityViolation { .. } => CliError::Mismatch { failed: 1, output: CliError::computation(&e).to_json() },
                other => CliError::computation(other),
            })?;
            Ok(json(&PathwiseOutput { check: "pathwise", carriers, sites, window, coverage, report, pass: true }))
        }
        CheckKind::Expectation => {
            inputs::require_embedding(&lifted)?;
            let x = inputs::configuration("x", args.x, &lifted.s_space())?;
            let y = inputs::configuration("y", args.y, &lifted.r_space())?;
            let estimate = estimate_expectation_duality(&model, &lifted, &x, &y, args.t_max, args.replicates, args.seed)
                .map_err(CliError::computation)?;
            let exact = (lifted.s_space().size() <= EXACT_STATE_LIMIT)
                .then(|| exact_semigroup_expectation(&model, &lifted, &x, &y, args.t_max, 1e-12))
                .transpose()
                .map_err(CliError::computation)?;
            let within = |v: f64, se: f64, e: f64| (v - e).abs() <= 1e-9 + 4.0 * se;
            let pass = estimate.agree
                && exact.is_none_or(|e| within(estimate.lhs, estimate.lhs_se, e) && within(estimate.rhs, estimate.rhs_se, e));
            let output = json(&ExpectationOutput { check: "expectation", carriers, sites, x, y, estimate, exact, pass });
            if pass {
                Ok(output)
            } else {
                Err(CliError::Mismatch { failed: 1, output })
            }
        }
    }
}

fn reproduce(args: ReproduceArgs) -> Result<String, CliError> {
    let manifest = reproduce_all();
    let output = match args.format {
        Format::Json => json(&manifest),
        Format::Table => manifest.render(),
    };
    if manifest.failed == 0 {
        Ok(output)
    } else {
        Err(CliError::Mismatch { failed: manifest.failed, output })
    }
}
