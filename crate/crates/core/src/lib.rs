//! Finitely presented modules, pp formulas, finitely presented functors
//! and abstract behaviors over computable coherent rings.

pub mod beh;
pub mod error;
pub mod expr;
pub mod fpfun;
pub mod fpmod;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod ppform;
pub mod random;
pub mod ring;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::{Elem, Ring};
