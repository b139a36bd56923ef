//! l-weights of the oscillator representations: extraction from the
//! operator action, the closed-form catalog, prefundamental and shift
//! l-weights, and the factorization identities among them.

mod closed;
mod extract;
mod factor;
mod grid;
mod weight;

pub use closed::{closed_lambda, closed_psi, xi_minus, xi_plus, xi_shift};
pub use extract::{computed_lweight, phi_series, PhiEngine};
pub use factor::{factor_check, factor_sides, FactorCheck, FACTOR_ORDER};
pub use grid::{verify_grid, verify_grid_with, CheckKind, GridEntry, GridOptions, GridReport, Status};
pub use weight::{lweight_product, prefundamental, shift_weight, LWeight, Weight};
