//! Exact multivariate polynomial arithmetic over the rationals.

mod monomial;
mod parse;
mod polynomial;
mod rational;

pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{default_names, Polynomial};
pub use rational::{binomial, ratio, rational, Rational};
