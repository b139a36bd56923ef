//! Exact scalar arithmetic.
//!
//! Two univariate layers: rational functions in the deformation parameter
//! `q` ([`QRational`]), and over them truncated series ([`USeries`]) and
//! rational functions ([`URational`]) in the spectral variable `u`.
//! Nothing here is ever evaluated numerically.

mod pade;
mod poly;
mod qrational;
mod series;
mod urational;

pub use pade::pade;
pub use poly::IntPoly;
pub use qrational::{qfactorial, qnum, QRational};
pub use series::{USeries, DEFAULT_ORDER};
pub use urational::{UPoly, URational};

pub mod json;
