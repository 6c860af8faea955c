//! Prime fields and sparse (Laurent) polynomials over them.
//!
//! Every coefficient criterion in the crate reduces to powering a sparse polynomial over `F_p`
//! and scanning its terms for one whose exponents stay below a bound.

mod field;
mod poly;
mod univariate;

pub use field::{format_rational, is_prime, parse_rational, primes_in, FpElem, Prime};
pub use poly::{fedder_hypersurface, FpPoly, Monomial, PolyJson, RationalPoly, TermJson, DEFAULT_TERM_CAP};
pub use univariate::{hasse_polynomial, UniPoly};
