//! Exact scalar tower: rationals, polynomials, rational functions, series in
//! `u^-1`, and reconstruction of rational functions from samples.

mod poly;
mod rat;
mod ratfun;
mod reconstruct;
mod series;

pub use poly::{interpolate, Poly};
pub use rat::Rat;
pub use ratfun::RationalFunction;
pub use reconstruct::rational_reconstruct;
pub use series::{series_of_quotient, SeriesInvU};
