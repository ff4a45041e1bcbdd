//! Exact arithmetic: rationals, univariate polynomials and rational
//! functions over `Q`, and dense/sparse matrices over them.

pub mod bareiss;
pub mod commutant;
pub mod dense;
pub mod error;
pub mod field;
pub mod laurent;
pub mod poly;
pub mod ratfunc;
pub mod ratmat;
pub mod rational;
pub mod resolvent;
pub mod sparse;

pub use bareiss::{poly_det, rfm_inverse};
pub use commutant::{commutant_dim, intertwiner_space, Echelon};
pub use dense::{rfm_nullspace, Mat, QMat, RFMatrix};
pub use error::ExactError;
pub use field::Field;
pub use laurent::LaurentSeries;
pub use poly::UPoly;
pub use ratfunc::RatFunc;
pub use ratmat::RatMat;
pub use rational::{q, Q};
pub use resolvent::{minimal_polynomial, resolvent};
pub use sparse::SpMat;
