//! Exact arithmetic in free unital noncommutative algebras over Z/2 and
//! Z[t,t^-1].

mod coeff;
mod derivation;
mod parse;
mod poly;
mod word;

pub use coeff::{Coefficient, Laurent, Ring, Z2};
pub use derivation::{leibniz_extend, Derivation};
pub use parse::{parse_indexed, parse_poly};
pub use poly::{AnyPoly, IntoZ2, LaurentPoly, Poly, Z2Poly};
pub use word::{Gen, Names, Word};
