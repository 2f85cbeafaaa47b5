//! Exact truncated q-series and the character families built from them.

mod characters;
mod eta;
mod series;

pub use characters::{fock_char, lattice_char, module_char, w_char, w_char_affine, w_exponent};
pub use eta::eta_inv_pow;
pub(crate) use series::TermSum;
pub use series::{qs_add, qs_dominates, qs_eq, qs_mul, qs_scale, qs_sub, QSeries};
