//! Poisson-driven stochastic flows on `S^Λ`, their time-reversed dual flows,
//! exact pathwise duality checks and expectation duality.
//!
//! A stream applies its events in vector order. Streams are sampled in
//! increasing time with ties broken by map id; dualizing reverses the vector,
//! so tied events are composed in the reversed order that the identity needs.

use rand::distr::weighted::WeightedIndex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ProductError, SimError};
use crate::product::{dual_map, size_budget, LiftedDuality, SiteMap, SiteSpace, SAMPLED_PAIRS};
use crate::table::Elem;

/// Configurations above this count are rejected by the uniformization oracle.
pub const EXACT_STATE_LIMIT: u128 = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatedMap {
    pub map: SiteMap,
    pub rate: f64,
}

/// Maps applied at the times of independent Poisson processes; map ids are positions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateModel {
    pub space: SiteSpace,
    pub maps: Vec<RatedMap>,
}

impl RateModel {
    pub fn new(space: SiteSpace, maps: Vec<(SiteMap, f64)>) -> Result<Self, SimError> {
        let mut rated = Vec::with_capacity(maps.len());
        for (map, rate) in maps {
            if !rate.is_finite() || rate < 0.0 {
                return Err(SimError::InvalidRate(rate));
            }
            if map.sites() != space.sites || map.local != space.local {
                return Err(ProductError::MatrixShape { k: space.sites }.into());
            }
            rated.push(RatedMap { map, rate });
        }
        Ok(RateModel { space, maps: rated })
    }

    pub fn total_rate(&self) -> f64 {
        self.maps.iter().map(|m| m.rate).sum()
    }

    /// The model on `R^Λ` whose map `k` is the dual of map `k`, at the same rate.
    pub fn dual(&self, lifted: &LiftedDuality) -> Result<RateModel, SimError> {
        let maps = self
            .maps
            .iter()
            .map(|m| Ok(RatedMap { map: dual_map(lifted, &m.map)?, rate: m.rate }))
            .collect::<Result<Vec<_>, ProductError>>()?;
        Ok(RateModel { space: lifted.r_space(), maps })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub map: usize,
    pub time: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EventStream {
    pub window: (f64, f64),
    pub events: Vec<Event>,
    pub seed: u64,
}

/// Samples the marked Poisson process on `window` from a generator seeded with `seed`.
pub fn sample_event_stream(model: &RateModel, window: (f64, f64), seed: u64) -> EventStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_event_stream_with(model, window, seed, &mut rng)
}

/// Exponential inter-arrival times at the total rate, marks drawn in proportion to the rates.
pub fn sample_event_stream_with(model: &RateModel, window: (f64, f64), seed: u64, rng: &mut impl Rng) -> EventStream {
    let (s, u) = window;
    let total = model.total_rate();
    let mut events = Vec::new();
    if total > 0.0 && u > s {
        let gaps = Exp::new(total).expect("total rate is positive and finite");
        let marks = WeightedIndex::new(model.maps.iter().map(|m| m.rate)).expect("some rate is positive");
        let mut t = s;
        loop {
            t += gaps.sample(rng);
            if t >= u {
                break;
            }
            events.push(Event { map: marks.sample(rng), time: t });
        }
        events.sort_by(|a, b| a.time.total_cmp(&b.time).then(a.map.cmp(&b.map)));
    }
    EventStream { window, events, seed }
}

/// Which events on the boundary of `[s,u]` a flow uses: `Plus` takes `s < t ≤ u`, `Minus` takes `s ≤ t < u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Plus,
    Minus,
}

impl Convention {
    pub fn flip(self) -> Convention {
        match self {
            Convention::Plus => Convention::Minus,
            Convention::Minus => Convention::Plus,
        }
    }

    fn admits(self, t: f64, s: f64, u: f64) -> bool {
        match self {
            Convention::Plus => s < t && t <= u,
            Convention::Minus => s <= t && t < u,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::Plus => "plus",
            Convention::Minus => "minus",
        }
    }
}

/// A realized stream together with the maps its marks refer to.
#[derive(Debug, Clone, Copy)]
pub struct Flow<'a> {
    pub model: &'a RateModel,
    pub stream: &'a EventStream,
    pub convention: Convention,
}

impl Flow<'_> {
    pub fn apply(&self, x: &[Elem], s: f64, u: f64) -> Result<Vec<Elem>, SimError> {
        apply_flow(self, x, s, u)
    }
}

/// Composes the event maps of `[s,u]` in stream order.
pub fn apply_flow(flow: &Flow<'_>, x: &[Elem], s: f64, u: f64) -> Result<Vec<Elem>, SimError> {
    let (lo, hi) = flow.stream.window;
    if !(lo <= s && s <= u && u <= hi) {
        return Err(SimError::WindowViolation { s, u, lo, hi });
    }
    if !flow.model.space.contains(x) {
        return Err(SimError::BadConfiguration(x.to_vec()));
    }
    let mut state = x.to_vec();
    for e in flow.stream.events.iter().filter(|e| flow.convention.admits(e.time, s, u)) {
        state = flow.model.maps[e.map].map.apply(&state);
    }
    Ok(state)
}

/// Negates and reverses: `(m, t) ↦ (m̂, −t)` on the window `[−u, −s]`. Marks keep
/// their ids, which refer to the dual model.
pub fn dualize_stream(stream: &EventStream) -> EventStream {
    let (s, u) = stream.window;
    EventStream {
        window: (-u, -s),
        events: stream.events.iter().rev().map(|e| Event { map: e.map, time: -e.time }).collect(),
        seed: stream.seed,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathwiseCoverage {
    /// Every configuration pair; fails if the product exceeds the size budget.
    Exhaustive,
    /// [`SAMPLED_PAIRS`] random pairs per interval and convention.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathwiseReport {
    pub seed: u64,
    pub events: usize,
    /// Intervals `[s,u]` checked, each under both conventions.
    pub intervals: Vec<(f64, f64)>,
    pub pairs_per_check: u128,
    pub checks: usize,
    pub violations: usize,
}

/// Samples a stream for `model` and checks `Ψ(X±_{s,u}(x), y) = Ψ(x, Y∓_{−u,−s}(y))`.
pub fn check_pathwise_duality(
    model: &RateModel,
    lifted: &LiftedDuality,
    window: (f64, f64),
    seed: u64,
    coverage: PathwiseCoverage,
) -> Result<PathwiseReport, SimError> {
    let dual = model.dual(lifted)?;
    let stream = sample_event_stream(model, window, seed);
    check_pathwise_duality_with(model, &dual, lifted, &stream, coverage)
}

/// The check for a given stream and dual model. The intervals are the whole
/// window, intervals between event times (which exercise the boundary
/// conventions) and a degenerate interval.
pub fn check_pathwise_duality_with(
    model: &RateModel,
    dual: &RateModel,
    lifted: &LiftedDuality,
    stream: &EventStream,
    coverage: PathwiseCoverage,
) -> Result<PathwiseReport, SimError> {
    let dual_stream = dualize_stream(stream);
    let (lo, hi) = stream.window;
    let times: Vec<f64> = stream.events.iter().map(|e| e.time).collect();
    let mut intervals = vec![(lo, hi), (lo, lo)];
    if let (Some(&first), Some(&last)) = (times.first(), times.last()) {
        intervals.push((first, last));
        intervals.push((lo, first));
        intervals.push((first, hi));
        intervals.push((times[times.len() / 3], times[2 * times.len() / 3]));
    }
    let (ss, rs) = (lifted.s_space(), lifted.r_space());
    let pairs = ss.size().saturating_mul(rs.size());
    if coverage == PathwiseCoverage::Exhaustive && pairs > size_budget() {
        return Err(ProductError::SizeBudgetExceeded { size: pairs, budget: size_budget() }.into());
    }
    let mut checks = 0;
    for &(s, u) in &intervals {
        for conv in [Convention::Plus, Convention::Minus] {
            let fwd = Flow { model, stream, convention: conv };
            let bwd = Flow { model: dual, stream: &dual_stream, convention: conv.flip() };
            let violation = |x: &[Elem], y: &[Elem]| SimError::DualityViolation {
                x: x.to_vec(),
                y: y.to_vec(),
                convention: conv.name().to_string(),
                seed: stream.seed,
            };
            match coverage {
                PathwiseCoverage::Exhaustive => {
                    let ys: Vec<(Vec<Elem>, Vec<Elem>)> = rs
                        .configurations()
                        .map(|y| bwd.apply(&y, -u, -s).map(|img| (y, img)))
                        .collect::<Result<_, _>>()?;
                    for x in ss.configurations() {
                        let fx = fwd.apply(&x, s, u)?;
                        if let Some((y, _)) = ys.iter().find(|(y, gy)| lifted.eval(&fx, y) != lifted.eval(&x, gy)) {
                            return Err(violation(&x, y));
                        }
                    }
                }
                PathwiseCoverage::Sampled => {
                    let mut rng = ChaCha8Rng::seed_from_u64(stream.seed);
                    rng.set_stream(checks as u64 + 1);
                    for _ in 0..SAMPLED_PAIRS {
                        let (x, y) = (ss.random(&mut rng), rs.random(&mut rng));
                        if lifted.eval(&fwd.apply(&x, s, u)?, &y) != lifted.eval(&x, &bwd.apply(&y, -u, -s)?) {
                            return Err(violation(&x, &y));
                        }
                    }
                }
            }
            checks += 1;
        }
    }
    Ok(PathwiseReport {
        seed: stream.seed,
        events: stream.events.len(),
        intervals,
        pairs_per_check: match coverage {
            PathwiseCoverage::Exhaustive => pairs,
            PathwiseCoverage::Sampled => SAMPLED_PAIRS as u128,
        },
        checks,
        violations: 0,
    })
}

/// Monte-Carlo estimates of `E[Ψ(X_t^x, y)]` and `E[Ψ(x, Y_t^y)]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationEstimate {
    pub t: f64,
    pub replicates: usize,
    pub seed: u64,
    pub lhs: f64,
    pub lhs_se: f64,
    pub rhs: f64,
    pub rhs_se: f64,
    /// `|lhs − rhs| ≤ 4·√(se_l² + se_r²)`.
    pub agree: bool,
}

fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Generator for one side of one replicate: stream `2·replicate + side` of the master seed.
pub fn replicate_rng(seed: u64, replicate: u64, side: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(2 * replicate + side);
    rng
}

/// Independent estimates of both sides of the expectation duality.
pub fn estimate_expectation_duality(
    model: &RateModel,
    lifted: &LiftedDuality,
    x: &[Elem],
    y: &[Elem],
    t: f64,
    replicates: usize,
    seed: u64,
) -> Result<ExpectationEstimate, SimError> {
    let embedding = lifted.local.real_embedding.as_ref().ok_or(SimError::NoRealEmbedding)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(SimError::WindowViolation { s: 0.0, u: t, lo: 0.0, hi: f64::INFINITY });
    }
    if !lifted.s_space().contains(x) {
        return Err(SimError::BadConfiguration(x.to_vec()));
    }
    if !lifted.r_space().contains(y) {
        return Err(SimError::BadConfiguration(y.to_vec()));
    }
    let dual = model.dual(lifted)?;
    let side = |side: u64| -> Result<Vec<f64>, SimError> {
        (0..replicates as u64)
            .into_par_iter()
            .map(|r| {
                let mut rng = replicate_rng(seed, r, side);
                if side == 0 {
                    let stream = sample_event_stream_with(model, (0.0, t), seed, &mut rng);
                    let xt = apply_flow(&Flow { model, stream: &stream, convention: Convention::Plus }, x, 0.0, t)?;
                    Ok(embedding[lifted.eval(&xt, y)])
                } else {
                    let stream = sample_event_stream_with(&dual, (0.0, t), seed, &mut rng);
                    let yt = apply_flow(&Flow { model: &dual, stream: &stream, convention: Convention::Plus }, y, 0.0, t)?;
                    Ok(embedding[lifted.eval(x, &yt)])
                }
            })
            .collect()
    };
    let (lhs, lhs_se) = mean_and_se(&side(0)?);
    let (rhs, rhs_se) = mean_and_se(&side(1)?);
    let agree = (lhs - rhs).abs() <= 4.0 * (lhs_se * lhs_se + rhs_se * rhs_se).sqrt();
    Ok(ExpectationEstimate { t, replicates, seed, lhs, lhs_se, rhs, rhs_se, agree })
}

/// `E[f(Z_t)]` for the chain applying each map at its rate, started at `start`,
/// by uniformization: `Σ_n Poisson(n; λt) (P^n f)(start)` with jump matrix
/// `P(z, m(z)) += r_m/λ`. The series stops once the Poisson tail bound times
/// `max|f|` is below `tol`.
pub fn uniformized_expectation(
    model: &RateModel,
    start: &[Elem],
    f: impl Fn(&[Elem]) -> f64,
    t: f64,
    tol: f64,
) -> Result<f64, SimError> {
    let space = &model.space;
    let size = space.size();
    if size > EXACT_STATE_LIMIT {
        return Err(SimError::StateSpaceTooLarge(size));
    }
    if !space.contains(start) {
        return Err(SimError::BadConfiguration(start.to_vec()));
    }
    let n = size as usize;
    let configs: Vec<Vec<Elem>> = space.configurations().collect();
    let mut v: Vec<f64> = configs.iter().map(|c| f(c)).collect();
    let x0 = space.encode(start);
    let lambda = model.total_rate();
    if t == 0.0 || lambda == 0.0 {
        return Ok(v[x0]);
    }
    let jumps: Vec<(Vec<usize>, f64)> = model
        .maps
        .iter()
        .filter(|m| m.rate > 0.0)
        .map(|m| (configs.iter().map(|c| space.encode(&m.map.apply(c))).collect(), m.rate / lambda))
        .collect();
    let fmax = v.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let mu = lambda * t;
    let ln_mu = mu.ln();
    let mut log_w = -mu;
    let mut total = 0.0;
    let mut next = vec![0.0; n];
    for k in 0u64.. {
        total += log_w.exp() * v[x0];
        let log_next = log_w + ln_mu - ((k + 1) as f64).ln();
        // Σ_{j>k} w_j ≤ w_{k+1} / (1 − μ/(k+2)) once k+2 > μ
        let ratio = mu / (k + 2) as f64;
        if ratio < 1.0 && log_next.exp() / (1.0 - ratio) * fmax < tol {
            break;
        }
        for (z, out) in next.iter_mut().enumerate() {
            *out = jumps.iter().map(|(to, p)| p * v[to[z]]).sum();
        }
        std::mem::swap(&mut v, &mut next);
        log_w = log_next;
    }
    Ok(total)
}

/// `E[Ψ(X_t^x, y)]` under the real embedding, by uniformization on `S^Λ`.
pub fn exact_semigroup_expectation(
    model: &RateModel,
    lifted: &LiftedDuality,
    x: &[Elem],
    y: &[Elem],
    t: f64,
    tol: f64,
) -> Result<f64, SimError> {
    let embedding = lifted.local.real_embedding.as_ref().ok_or(SimError::NoRealEmbedding)?;
    uniformized_expectation(model, x, |z| embedding[lifted.eval(z, y)], t, tol)
}

/// `E[Ψ(x, Y_t^y)]` under the real embedding, by uniformization of the dual model on `R^Λ`.
pub fn exact_dual_expectation(
    model: &RateModel,
    lifted: &LiftedDuality,
    x: &[Elem],
    y: &[Elem],
    t: f64,
    tol: f64,
) -> Result<f64, SimError> {
    let embedding = lifted.local.real_embedding.as_ref().ok_or(SimError::NoRealEmbedding)?;
    let dual = model.dual(lifted)?;
    uniformized_expectation(&dual, y, |w| embedding[lifted.eval(x, w)], t, tol)
}
