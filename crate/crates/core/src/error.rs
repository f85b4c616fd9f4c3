use thiserror::Error;

use crate::table::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("operation is not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("operation has no neutral element")]
    NoNeutralElement,
    #[error("operation is not commutative: {0}·{1} ≠ {1}·{0}")]
    NotCommutative(Elem, Elem),
    #[error("tables have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("addition is not a commutative monoid: {0}")]
    AdditiveNotCommutativeMonoid(Box<AlgebraError>),
    #[error("multiplication is not a monoid: {0}")]
    MulNotMonoid(Box<AlgebraError>),
    #[error("additive neutral is not absorbing for multiplication at {0}")]
    ZeroNotAbsorbing(Elem),
    #[error("distributivity fails on the {side} at ({x},{y},{z})")]
    NotDistributive { x: Elem, y: Elem, z: Elem, side: Side },
    #[error("relation is not a lattice: {0}")]
    NotALattice(String),
    #[error("unknown catalog label {0:?}")]
    UnknownLabel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order must be at least 1")]
    EmptyCarrier,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Why a table fails to be a duality function.
#[derive(Debug, Clone, PartialEq, Eq, Error, serde::Serialize, serde::Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum DualityError {
    #[error("table has shape {rows}×{cols}, expected {expected_rows}×{expected_cols}")]
    Shape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("table entry out of range for the target monoid")]
    ValueOutOfRange,
    /// Two rows coincide although the row elements differ.
    #[error("condition (i) fails: rows {x1} and {x2} coincide")]
    Condition1Fail { x1: Elem, x2: Elem },
    /// A column is not a homomorphism (`extra`) or a homomorphism is not a column (`missing`).
    #[error("condition (ii) fails: extra column {extra:?}, missing hom {missing:?}")]
    Condition2Fail { extra: Option<Elem>, missing: Option<Vec<Elem>> },
    #[error("condition (iii) fails: columns {y1} and {y2} coincide")]
    Condition3Fail { y1: Elem, y2: Elem },
    #[error("condition (iv) fails: extra row {extra:?}, missing hom {missing:?}")]
    Condition4Fail { extra: Option<Elem>, missing: Option<Vec<Elem>> },
    #[error("map is not an isomorphism onto the hom-set")]
    NotIsomorphism,
    #[error("reduced class {class} matches no listed duality table")]
    UnmatchedClass { class: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("size {size} exceeds the configured budget {budget}")]
    SizeBudgetExceeded { size: u128, budget: u128 },
    #[error("site map entry ({i},{j}) is not a local homomorphism")]
    NotLocalHom { i: usize, j: usize },
    #[error("entry ({i},{j}) has no dual map")]
    NoDual { i: usize, j: usize },
    #[error("site count must be at least 1")]
    NoSites,
    #[error("matrix must be {k}×{k}")]
    MatrixShape { k: usize },
    #[error("lifted duality carries no semiring")]
    NoSemiring,
    #[error("dual identity fails at x={x:?}, y={y:?}")]
    IdentityViolated { x: Vec<Elem>, y: Vec<Elem> },
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("interval [{s}, {u}] is not inside the stream window [{lo}, {hi}]")]
    WindowViolation { s: f64, u: f64, lo: f64, hi: f64 },
    #[error("invalid rate {0} (rates must be finite and nonnegative)")]
    InvalidRate(f64),
    #[error("duality has no real embedding of its target monoid")]
    NoRealEmbedding,
    #[error("state space of {0} configurations is too large for exact evaluation")]
    StateSpaceTooLarge(u128),
    #[error("pathwise duality violated at x={x:?}, y={y:?} ({convention} flow, seed {seed})")]
    DualityViolation { x: Vec<Elem>, y: Vec<Elem>, convention: String, seed: u64 },
    #[error("configuration {0:?} is not valid for this site space")]
    BadConfiguration(Vec<Elem>),
    #[error(transparent)]
    Product(#[from] ProductError),
}
