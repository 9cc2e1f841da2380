//! Exact sparse polynomial arithmetic over the coefficient variables
//! `x[i,j,l]` and over the Plücker variables, term orders, weight initial
//! forms and determinants of matrices of polynomials in `t`.

mod coeff;
mod format;
mod monomial;
mod polynomial;
mod tmatrix;
mod xvar;

pub use coeff::Coeff;
pub use monomial::{degrevlex, Monomial, Variable};
pub use polynomial::Polynomial;
pub use tmatrix::{det_tpoly, TMatrix, TPoly};
pub use xvar::XVar;
