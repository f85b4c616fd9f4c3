//! Finite commutative monoids and semirings, their duality functions, dual maps
//! on product spaces, and pathwise duality of Poisson-driven particle systems.

pub mod algebra;
pub mod enumeration;
pub mod error;
pub mod homdual;
pub mod product;
pub mod sim;
pub mod table;

pub use error::{AlgebraError, DualityError, EnumerationError, ProductError, SimError};
pub use table::{CayleyTable, Elem, FunctionTable};
