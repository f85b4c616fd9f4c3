//! Product monoids `S^Λ`, maps between them in matrix form, lifted duality
//! functions `Ψ(x,y) = Σ_i ψ(x_i,y_i)`, dual maps, and the semiring and
//! lattice duality functions.
//!
//! Sites are `0..k` and every sum over sites runs in ascending order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Lattice, Monoid, Semiring};
use crate::error::{DualityError, ProductError};
use crate::homdual::{hom_tables, is_hom, verify_duality, ConditionReport, DualityFunction};
use crate::table::{CayleyTable, Elem, FunctionTable};

pub const DEFAULT_SIZE_BUDGET: u128 = 1_000_000;
pub const SIZE_BUDGET_ENV: &str = "PATHDUAL_SIZE_BUDGET";
/// Pairs checked when a sweep exceeds the size budget.
pub const SAMPLED_PAIRS: usize = 100_000;

/// The size budget, overridable through `PATHDUAL_SIZE_BUDGET`.
pub fn size_budget() -> u128 {
    std::env::var(SIZE_BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_BUDGET)
}

fn within_budget(size: u128, budget: u128) -> Result<(), ProductError> {
    if size > budget {
        Err(ProductError::SizeBudgetExceeded { size, budget })
    } else {
        Ok(())
    }
}

/// Configurations `S^Λ` with `Λ = {0, …, k−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiteSpace {
    pub local: Monoid,
    pub sites: usize,
}

impl SiteSpace {
    pub fn new(local: Monoid, sites: usize) -> Result<Self, ProductError> {
        if sites == 0 {
            return Err(ProductError::NoSites);
        }
        Ok(SiteSpace { local, sites })
    }

    /// `|S|^|Λ|`, saturating.
    pub fn size(&self) -> u128 {
        (self.local.order() as u128).saturating_pow(self.sites as u32)
    }

    /// Mixed-radix index with site 0 most significant.
    pub fn encode(&self, x: &[Elem]) -> usize {
        x.iter().fold(0, |acc, &v| acc * self.local.order() + v)
    }

    pub fn decode(&self, mut index: usize) -> Vec<Elem> {
        let n = self.local.order();
        let mut x = vec![0; self.sites];
        for v in x.iter_mut().rev() {
            *v = index % n;
            index /= n;
        }
        x
    }

    pub fn contains(&self, x: &[Elem]) -> bool {
        x.len() == self.sites && x.iter().all(|&v| v < self.local.order())
    }

    /// All configurations in index order; the caller bounds the size.
    pub fn configurations(&self) -> impl Iterator<Item = Vec<Elem>> + '_ {
        (0..self.size() as usize).map(|i| self.decode(i))
    }

    pub fn add(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.local.op(a, b)).collect()
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![self.local.neutral(); self.sites]
    }

    pub fn constant(&self, x: Elem) -> Vec<Elem> {
        vec![x; self.sites]
    }

    /// `x^i`: value `x` at site `i`, neutral elsewhere.
    pub fn single_site(&self, i: usize, x: Elem) -> Vec<Elem> {
        let mut c = self.zero();
        c[i] = x;
        c
    }

    pub fn random(&self, rng: &mut impl Rng) -> Vec<Elem> {
        (0..self.sites).map(|_| rng.random_range(0..self.local.order())).collect()
    }
}

/// The `k`-fold product with componentwise operation.
pub fn product_monoid(local: &Monoid, k: usize) -> Result<Monoid, ProductError> {
    if k == 0 {
        return Err(ProductError::NoSites);
    }
    heterogeneous_product(&vec![local.clone(); k])
}

/// `S_1 × ⋯ × S_n` with mixed-radix indexing, the first factor most significant.
/// The table has `(Π|S_i|)²` cells, which must fit the size budget.
pub fn heterogeneous_product(factors: &[Monoid]) -> Result<Monoid, ProductError> {
    if factors.is_empty() {
        return Err(ProductError::NoSites);
    }
    let size = factors.iter().fold(1u128, |acc, f| acc.saturating_mul(f.order() as u128));
    within_budget(size.saturating_mul(size), size_budget())?;
    let n = size as usize;
    let decode = |mut idx: usize| -> Vec<Elem> {
        let mut out = vec![0; factors.len()];
        for (v, f) in out.iter_mut().zip(factors).rev() {
            *v = idx % f.order();
            idx /= f.order();
        }
        out
    };
    let configs: Vec<Vec<Elem>> = (0..n).map(decode).collect();
    let mut data = Vec::with_capacity(n * n);
    for x in &configs {
        for y in &configs {
            data.push(x.iter().zip(y).zip(factors).fold(0, |acc, ((&a, &b), f)| acc * f.order() + f.op(a, b)));
        }
    }
    let neutral = factors.iter().fold(0, |acc, f| acc * f.order() + f.neutral());
    let table = CayleyTable::from_flat(n, data)?;
    Ok(Monoid::new_unchecked(table, neutral))
}

/// A homomorphism `S^Λ → S^Λ` as a matrix of local homomorphisms:
/// `m(x)_j = Σ_i M_ij(x_i)` with `matrix[i][j] = M_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiteMap {
    pub local: Monoid,
    pub matrix: Vec<Vec<FunctionTable>>,
}

impl SiteMap {
    pub fn new(local: Monoid, matrix: Vec<Vec<FunctionTable>>) -> Result<Self, ProductError> {
        let k = matrix.len();
        if k == 0 {
            return Err(ProductError::NoSites);
        }
        if matrix.iter().any(|row| row.len() != k) {
            return Err(ProductError::MatrixShape { k });
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.len() != local.order() || !is_hom(&local, &local, entry) {
                    return Err(ProductError::NotLocalHom { i, j });
                }
            }
        }
        Ok(SiteMap { local, matrix })
    }

    pub fn identity(local: &Monoid, k: usize) -> Self {
        let id: FunctionTable = (0..local.order()).collect();
        let zero = vec![local.neutral(); local.order()];
        let matrix = (0..k).map(|i| (0..k).map(|j| if i == j { id.clone() } else { zero.clone() }).collect()).collect();
        SiteMap { local: local.clone(), matrix }
    }

    pub fn sites(&self) -> usize {
        self.matrix.len()
    }

    pub fn space(&self) -> SiteSpace {
        SiteSpace { local: self.local.clone(), sites: self.sites() }
    }

    pub fn apply(&self, x: &[Elem]) -> Vec<Elem> {
        let k = self.sites();
        (0..k)
            .map(|j| (0..k).fold(self.local.neutral(), |acc, i| self.local.op(acc, self.matrix[i][j][x[i]])))
            .collect()
    }

    /// Whether every entry lies in `L(S,S)` (`Side::Left`) or `R(S,S)` (`Side::Right`).
    pub fn entries_are_module_maps(&self, s: &Semiring, side: crate::error::Side) -> bool {
        self.matrix.iter().flatten().all(|f| is_module_map(s, f, side))
    }
}

/// Whether `f: S → S` is additive and satisfies `f(a·x) = a·f(x)` (left) or `f(x·a) = f(x)·a` (right).
pub fn is_module_map(s: &Semiring, f: &[Elem], side: crate::error::Side) -> bool {
    let n = s.order();
    is_hom(s.additive(), s.additive(), f)
        && (0..n).all(|a| {
            (0..n).all(|x| match side {
                crate::error::Side::Left => f[s.mul(a, x)] == s.mul(a, f[x]),
                crate::error::Side::Right => f[s.mul(x, a)] == s.mul(f[x], a),
            })
        })
}

/// `L(S,S)` or `R(S,S)` by brute force.
pub fn module_maps(s: &Semiring, side: crate::error::Side) -> Vec<FunctionTable> {
    hom_tables(s.additive(), s.additive()).into_iter().filter(|f| is_module_map(s, f, side)).collect()
}

/// Number of additive endomorphisms that are not left-linear.
pub fn non_linear_endomorphism_count(s: &Semiring) -> usize {
    let homs = hom_tables(s.additive(), s.additive());
    homs.iter().filter(|f| !is_module_map(s, f, crate::error::Side::Left)).count()
}

/// Recovers the matrix of `f` from single-site configurations and returns it if
/// `f` is a homomorphism, i.e. if rebuilding `f` from the matrix reproduces it everywhere.
pub fn global_hom_set_matrix_check(space: &SiteSpace, f: impl Fn(&[Elem]) -> Vec<Elem>) -> Option<SiteMap> {
    let k = space.sites;
    let n = space.local.order();
    let matrix: Vec<Vec<FunctionTable>> = (0..k)
        .map(|i| {
            let images: Vec<Vec<Elem>> = (0..n).map(|x| f(&space.single_site(i, x))).collect();
            (0..k).map(|j| images.iter().map(|img| img[j]).collect()).collect()
        })
        .collect();
    let map = SiteMap::new(space.local.clone(), matrix).ok()?;
    space.configurations().all(|x| map.apply(&x) == f(&x)).then_some(map)
}

/// `Ψ(x,y) = Σ_i ψ(x_i,y_i)` on `S^Λ × R^Λ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LiftedDuality {
    pub local: DualityFunction,
    pub sites: usize,
    /// Set for the inner duality of a semiring, whose local table is the multiplication.
    pub semiring: Option<Semiring>,
}

impl LiftedDuality {
    pub fn s_space(&self) -> SiteSpace {
        SiteSpace { local: self.local.s.clone(), sites: self.sites }
    }

    pub fn r_space(&self) -> SiteSpace {
        SiteSpace { local: self.local.r.clone(), sites: self.sites }
    }

    pub fn eval(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let t = &self.local.t;
        x.iter().zip(y).fold(t.neutral(), |acc, (&a, &b)| t.op(acc, self.local.get(a, b)))
    }

    /// `Ψ(x,y)` under the real embedding of `T`, if one is declared.
    pub fn eval_real(&self, x: &[Elem], y: &[Elem]) -> Option<f64> {
        self.local.real_embedding.as_ref().map(|e| e[self.eval(x, y)])
    }

    /// `Ψ†(y,x) = Ψ(x,y)`.
    pub fn transpose(&self) -> LiftedDuality {
        LiftedDuality {
            local: self.local.transpose(),
            sites: self.sites,
            semiring: self.semiring.as_ref().map(Semiring::opposite),
        }
    }

    /// `Ψ` as a duality function between the product monoids.
    pub fn product_function(&self) -> Result<DualityFunction, ProductError> {
        let (ss, rs) = (self.s_space(), self.r_space());
        within_budget(ss.size().saturating_mul(rs.size()), size_budget())?;
        let s = product_monoid(&self.local.s, self.sites)?;
        let r = product_monoid(&self.local.r, self.sites)?;
        let xs: Vec<Vec<Elem>> = ss.configurations().collect();
        let ys: Vec<Vec<Elem>> = rs.configurations().collect();
        Ok(DualityFunction::from_fn(s, r, self.local.t.clone(), |a, b| self.eval(&xs[a], &ys[b]))?)
    }

    /// Conditions (i)–(iv) for `Ψ` between `S^Λ` and `R^Λ`, by exhaustive evaluation.
    pub fn verify_exhaustive(&self) -> Result<ConditionReport, ProductError> {
        Ok(verify_duality(&self.product_function()?)?)
    }
}

/// Lifts a verified local duality to `k` sites. For small products the lifted
/// function is re-verified exhaustively.
pub fn lift_duality(local: &DualityFunction, k: usize) -> Result<LiftedDuality, ProductError> {
    if k == 0 {
        return Err(ProductError::NoSites);
    }
    verify_duality(local)?;
    let lifted = LiftedDuality { local: local.clone(), sites: k, semiring: None };
    let (ss, rs) = (lifted.s_space().size(), lifted.r_space().size());
    within_budget(ss.max(rs), size_budget())?;
    if ss <= 64 && rs <= 64 {
        lifted.verify_exhaustive()?;
    }
    Ok(lifted)
}

/// Local dual of `f: S → S`: `g` with `ψ(f(x),y) = ψ(x,g(y))`, found by matching
/// each function `x ↦ ψ(f(x),y)` against the columns of `ψ`.
pub fn local_dual(psi: &DualityFunction, f: &[Elem]) -> Option<FunctionTable> {
    let cols: Vec<FunctionTable> = (0..psi.r.order()).map(|y| psi.column(y)).collect();
    (0..psi.r.order())
        .map(|y| {
            let target: FunctionTable = (0..psi.s.order()).map(|x| psi.get(f[x], y)).collect();
            cols.iter().position(|c| *c == target)
        })
        .collect()
}

/// How many configuration pairs a sweep covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

/// Result of checking `Ψ(m(x),y) = Ψ(x,m̂(y))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualCheck {
    pub coverage: Coverage,
    pub pairs: u128,
}

/// The dual map on `R^Λ`: `m̂(y)_i = Σ_j M̂_ij(y_j)`, the transposed matrix of local duals.
/// The defining identity is then checked (exhaustively within the size budget).
pub fn dual_map(lifted: &LiftedDuality, m: &SiteMap) -> Result<SiteMap, ProductError> {
    let k = m.sites();
    if k != lifted.sites {
        return Err(ProductError::MatrixShape { k: lifted.sites });
    }
    let local_duals: Vec<Vec<FunctionTable>> = (0..k)
        .map(|i| (0..k).map(|j| local_dual(&lifted.local, &m.matrix[i][j]).ok_or(ProductError::NoDual { i, j })).collect())
        .collect::<Result<_, _>>()?;
    // contribution of site j of y to site i of m̂(y) is M̂_ij
    let matrix: Vec<Vec<FunctionTable>> = (0..k).map(|j| (0..k).map(|i| local_duals[i][j].clone()).collect()).collect();
    let dual = SiteMap::new(lifted.local.r.clone(), matrix)?;
    check_dual_pair(lifted, |x| m.apply(x), |y| dual.apply(y), 0)?;
    Ok(dual)
}

/// Checks `Ψ(f(x),y) = Ψ(x,g(y))` on all pairs, or on [`SAMPLED_PAIRS`] random pairs above the size budget.
pub fn check_dual_pair(
    lifted: &LiftedDuality,
    f: impl Fn(&[Elem]) -> Vec<Elem>,
    g: impl Fn(&[Elem]) -> Vec<Elem>,
    seed: u64,
) -> Result<DualCheck, ProductError> {
    let (ss, rs) = (lifted.s_space(), lifted.r_space());
    let pairs = ss.size().saturating_mul(rs.size());
    let violation = |x: &[Elem], y: &[Elem]| ProductError::IdentityViolated { x: x.to_vec(), y: y.to_vec() };
    if pairs <= size_budget() {
        let ys: Vec<(Vec<Elem>, Vec<Elem>)> = rs.configurations().map(|y| {
            let gy = g(&y);
            (y, gy)
        }).collect();
        for x in ss.configurations() {
            let fx = f(&x);
            if let Some((y, _)) = ys.iter().find(|(y, gy)| lifted.eval(&fx, y) != lifted.eval(&x, gy)) {
                return Err(violation(&x, y));
            }
        }
        return Ok(DualCheck { coverage: Coverage::Exhaustive, pairs });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLED_PAIRS {
        let (x, y) = (ss.random(&mut rng), rs.random(&mut rng));
        if lifted.eval(&f(&x), &y) != lifted.eval(&x, &g(&y)) {
            return Err(violation(&x, &y));
        }
    }
    Ok(DualCheck { coverage: Coverage::Sampled, pairs: SAMPLED_PAIRS as u128 })
}

/// For each `y ∈ R^Λ` (by index), every `z` with `Ψ(f(x),y) = Ψ(x,z)` for all `x`.
/// A dual of `f` exists iff every list is nonempty, and is unique iff each has one element.
pub fn dual_candidates(lifted: &LiftedDuality, f: impl Fn(&[Elem]) -> Vec<Elem>) -> Result<Vec<Vec<usize>>, ProductError> {
    let (ss, rs) = (lifted.s_space(), lifted.r_space());
    within_budget(ss.size().saturating_mul(rs.size()), size_budget())?;
    let xs: Vec<Vec<Elem>> = ss.configurations().collect();
    let fxs: Vec<Vec<Elem>> = xs.iter().map(|x| f(x)).collect();
    let ys: Vec<Vec<Elem>> = rs.configurations().collect();
    Ok(ys
        .iter()
        .map(|y| {
            let wanted: Vec<Elem> = fxs.iter().map(|fx| lifted.eval(fx, y)).collect();
            (0..ys.len()).filter(|&z| xs.iter().zip(&wanted).all(|(x, &w)| lifted.eval(x, &ys[z]) == w)).collect()
        })
        .collect())
}

/// `Ψ(x,y) = Σ_i x_i·y_i` on `S^Λ × S^Λ` with values in `(S,+)`.
pub fn semiring_inner_duality(s: &Semiring, k: usize) -> Result<LiftedDuality, ProductError> {
    if k == 0 {
        return Err(ProductError::NoSites);
    }
    let space = SiteSpace { local: s.additive().clone(), sites: k };
    within_budget(space.size(), size_budget())?;
    let add = s.additive().clone();
    let local = DualityFunction::from_fn(add.clone(), add.clone(), add, |x, y| s.mul(x, y))?;
    Ok(LiftedDuality { local, sites: k, semiring: Some(s.clone()) })
}

/// Pass flags for the four properties of the semiring inner duality, with
/// `L(S^Λ,S)` and `R(S^Λ,S)` computed by brute force.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerDualityReport {
    pub passed: [bool; 4],
    pub left_maps: usize,
    pub right_maps: usize,
}

/// Module maps `S^Λ → S` on one side: additive and compatible with scalars.
pub fn product_module_maps(s: &Semiring, k: usize, side: crate::error::Side) -> Result<Vec<FunctionTable>, ProductError> {
    let space = SiteSpace { local: s.additive().clone(), sites: k };
    let product = product_monoid(s.additive(), k)?;
    let configs: Vec<Vec<Elem>> = space.configurations().collect();
    let scale = |a: Elem, x: &[Elem]| -> usize {
        let scaled: Vec<Elem> = x
            .iter()
            .map(|&v| match side {
                crate::error::Side::Left => s.mul(a, v),
                crate::error::Side::Right => s.mul(v, a),
            })
            .collect();
        space.encode(&scaled)
    };
    Ok(hom_tables(&product, s.additive())
        .into_iter()
        .filter(|h| {
            (0..s.order()).all(|a| {
                configs.iter().enumerate().all(|(i, x)| {
                    let expected = match side {
                        crate::error::Side::Left => s.mul(a, h[i]),
                        crate::error::Side::Right => s.mul(h[i], a),
                    };
                    h[scale(a, x)] == expected
                })
            })
        })
        .collect())
}

/// Checks the four properties of the inner duality exhaustively.
pub fn verify_inner_duality(lifted: &LiftedDuality) -> Result<InnerDualityReport, ProductError> {
    let s = lifted.semiring.as_ref().ok_or(ProductError::NoSemiring)?;
    let f = lifted.product_function()?;
    let rows = f.rows();
    let cols: Vec<FunctionTable> = (0..f.r.order()).map(|y| f.column(y)).collect();
    let distinct = |v: &[FunctionTable]| v.iter().collect::<std::collections::BTreeSet<_>>().len() == v.len();
    let same_set = |a: &[FunctionTable], b: &[FunctionTable]| {
        a.iter().collect::<std::collections::BTreeSet<_>>() == b.iter().collect::<std::collections::BTreeSet<_>>()
    };
    let left = product_module_maps(s, lifted.sites, crate::error::Side::Left)?;
    let right = product_module_maps(s, lifted.sites, crate::error::Side::Right)?;
    Ok(InnerDualityReport {
        passed: [distinct(&rows), same_set(&cols, &left), distinct(&cols), same_set(&rows, &right)],
        left_maps: left.len(),
        right_maps: right.len(),
    })
}

/// `ψ(x,y) = 0` if `x ≤ y*` and `1` otherwise, from `(S,∨)` and `(S*,∨)` into `M1`.
pub fn lattice_duality_function(l: &Lattice) -> Result<DualityFunction, DualityError> {
    let (dual, star) = l.dual();
    let m1 = Monoid::chain_max(2);
    let f = DualityFunction::from_fn(l.join_monoid(), dual.join_monoid(), m1, |x, y| usize::from(!l.leq(x, star[y])))?;
    f.verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{are_isomorphic, catalog};
    use crate::error::Side;
    use crate::homdual::{hom_set, psi5_new, reference_duality_function};

    fn m(label: &str) -> Monoid {
        catalog::monoid(label).unwrap()
    }

    #[test]
    fn small_products_match_catalog() {
        for (a, b, expected) in [("M1", "M1", "M11"), ("M2", "M2", "M25"), ("M1", "M2", "M23")] {
            let p = heterogeneous_product(&[m(a), m(b)]).unwrap();
            assert!(are_isomorphic(&p, &m(expected)).is_some(), "{a}×{b}");
        }
        assert!(are_isomorphic(&product_monoid(&m("M1"), 2).unwrap(), &m("M11")).is_some());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            product_monoid(&m("M26"), 6),
            Err(ProductError::SizeBudgetExceeded { .. })
        ));
        assert_eq!(product_monoid(&m("M1"), 0), Err(ProductError::NoSites));
    }

    #[test]
    fn encode_decode_roundtrip() {
        let space = SiteSpace::new(m("M6"), 3).unwrap();
        for i in 0..27 {
            assert_eq!(space.encode(&space.decode(i)), i);
        }
        assert_eq!(space.decode(5), vec![0, 1, 2]);
    }

    #[test]
    fn matrix_recovery() {
        let space = SiteSpace::new(m("M6"), 2).unwrap();
        let id = global_hom_set_matrix_check(&space, |x| x.to_vec()).unwrap();
        assert_eq!(id, SiteMap::identity(&m("M6"), 2));
        let swap = global_hom_set_matrix_check(&space, |x| vec![x[1], x[0]]).unwrap();
        assert_eq!(swap.matrix[0][1], vec![0, 1, 2]);
        assert_eq!(swap.matrix[0][0], vec![0, 0, 0]);
        assert!(global_hom_set_matrix_check(&space, |_| vec![1, 1]).is_none());
        // additive on single sites but not globally: x ↦ (x0 ⊕ x1 ≠ 0 ? 1 : 0) style map
        let m6 = m("M6");
        assert!(global_hom_set_matrix_check(&space, |x| vec![if x == [1, 1] { 0 } else { m6.op(x[0], x[1]) }, 0]).is_none());
    }

    #[test]
    fn site_map_rejects_bad_entries() {
        let err = SiteMap::new(m("M1"), vec![vec![vec![1, 1]]]).unwrap_err();
        assert_eq!(err, ProductError::NotLocalHom { i: 0, j: 0 });
        let err = SiteMap::new(m("M1"), vec![vec![vec![0, 1], vec![0, 1]]]).unwrap_err();
        assert_eq!(err, ProductError::MatrixShape { k: 1 });
    }

    #[test]
    fn lifted_psi1_is_intersection_indicator() {
        let lifted = lift_duality(&reference_duality_function("psi1").unwrap(), 3).unwrap();
        let space = lifted.s_space();
        for x in space.configurations() {
            for y in space.configurations() {
                let intersect = x.iter().zip(&y).any(|(&a, &b)| a == 1 && b == 1);
                assert_eq!(lifted.eval(&x, &y), usize::from(intersect));
            }
        }
    }

    #[test]
    fn lifted_psi2_is_parity_of_inner_product() {
        let lifted = lift_duality(&reference_duality_function("psi2").unwrap(), 3).unwrap();
        for x in lifted.s_space().configurations() {
            for y in lifted.r_space().configurations() {
                let dot: usize = x.iter().zip(&y).map(|(a, b)| a * b).sum();
                assert_eq!(lifted.eval(&x, &y), dot % 2);
            }
        }
    }

    #[test]
    fn lifted_psi5_is_the_real_product() {
        let lifted = lift_duality(&psi5_new(), 2).unwrap();
        let real = |y: Elem| crate::homdual::M5_REAL[y];
        for x in lifted.s_space().configurations() {
            for y in lifted.r_space().configurations() {
                let expected: f64 = x
                    .iter()
                    .zip(&y)
                    .map(|(&a, &b)| match a {
                        0 => 1.0,
                        1 => real(b),
                        _ => real(b) * real(b),
                    })
                    .product();
                assert_eq!(lifted.eval_real(&x, &y), Some(expected));
            }
        }
    }

    #[test]
    fn identity_dualizes_to_identity() {
        let lifted = lift_duality(&psi5_new(), 2).unwrap();
        let dual = dual_map(&lifted, &SiteMap::identity(&m("M6"), 2)).unwrap();
        assert_eq!(dual, SiteMap::identity(&m("M5"), 2));
    }

    #[test]
    fn spread_map_is_self_dual_under_psi1() {
        let lifted = lift_duality(&reference_duality_function("psi1").unwrap(), 2).unwrap();
        let id = vec![0, 1];
        let spread = SiteMap::new(m("M1"), vec![vec![id.clone(), id.clone()], vec![id.clone(), id]]).unwrap();
        let dual = dual_map(&lifted, &spread).unwrap();
        assert_eq!(dual, spread);
        let cands = dual_candidates(&lifted, |x| spread.apply(x)).unwrap();
        let space = lifted.r_space();
        for (y, c) in cands.iter().enumerate() {
            assert_eq!(c, &vec![space.encode(&dual.apply(&space.decode(y)))]);
        }
    }

    #[test]
    fn transpose_recovers_original_map() {
        let lifted = lift_duality(&psi5_new(), 2).unwrap();
        let homs = hom_tables(&m("M6"), &m("M6"));
        let map = SiteMap::new(m("M6"), vec![vec![homs[1].clone(), homs[2].clone()], vec![homs[0].clone(), homs[1].clone()]]).unwrap();
        let dual = dual_map(&lifted, &map).unwrap();
        assert_eq!(dual_map(&lifted.transpose(), &dual).unwrap(), map);
    }

    #[test]
    fn f2_inner_duality() {
        let lifted = semiring_inner_duality(&Semiring::f2(), 2).unwrap();
        let report = verify_inner_duality(&lifted).unwrap();
        assert_eq!(report.passed, [true; 4]);
        assert_eq!(report.left_maps, 4);
        let boolean = semiring_inner_duality(&Semiring::boolean(), 2).unwrap();
        assert_eq!(verify_inner_duality(&boolean).unwrap().passed, [true; 4]);
    }

    #[test]
    fn f4_has_twelve_non_linear_endomorphisms_without_duals() {
        let f4 = catalog::reference_semirings().into_iter().find(|r| r.additive == "M25" && r.mult_label == "M18").unwrap();
        let s = crate::algebra::validate_semiring(m("M25").table().clone(), f4.mul).unwrap();
        assert_eq!(non_linear_endomorphism_count(&s), 12);
        let lifted = semiring_inner_duality(&s, 1).unwrap();
        for h in hom_tables(s.additive(), s.additive()) {
            let has_dual = dual_candidates(&lifted, |x| vec![h[x[0]]]).unwrap().iter().all(|c| !c.is_empty());
            assert_eq!(has_dual, is_module_map(&s, &h, Side::Left));
        }
    }

    #[test]
    fn lattice_dualities_are_verified() {
        for l in [Lattice::chain(2), Lattice::chain(3), Lattice::diamond(), Lattice::chain(4)] {
            let f = lattice_duality_function(&l).unwrap();
            assert!(f.verified.unwrap().all_pass());
        }
    }

    #[test]
    fn m6_local_duals_land_in_m5_homs() {
        let psi = psi5_new();
        let r_homs = hom_set(&m("M5"), &m("M5"));
        for f in hom_tables(&m("M6"), &m("M6")) {
            let g = local_dual(&psi, &f).unwrap();
            assert!(r_homs.index_of(&g).is_some());
        }
    }
}
