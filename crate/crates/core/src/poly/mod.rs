//! Exponents, monomial orders and sparse polynomials over ℚ.

mod exponent;
mod order;
pub mod parse;
mod polynomial;


pub use exponent::Exponent;
pub use order::{MonomialOrder, OrderClass, OrderRef};
pub use parse::{default_names, format_polynomial, parse_polynomial, parse_polynomial_list};
pub use polynomial::{rat, s_polynomial, Coeff, LeadData, Polynomial};

mod taylor;
pub use taylor::taylor_shift;
