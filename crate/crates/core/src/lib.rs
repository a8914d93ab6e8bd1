pub mod alphadeg;
pub mod error;
pub mod geometry;
pub mod grassmu;
pub mod hilbmu;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod weights;
pub mod wlocus;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::{row_reduce, LinearSubspace};
pub use poly::{HomogPolynomial, Monomial};
