//! Highest-weight analysis: the vectors `xi_k`, highest vectors, weights,
//! the consistency conditions, and Drinfeld polynomials.

mod drinfeld;
mod highest;
mod shift_quotient;
mod weights;

pub use drinfeld::{
    drinfeld_of_module, drinfeld_of_weights, fundamental_module_report, fundamental_report, hw_tensor_product_check, DrinfeldOutcome,
    DrinfeldTuple, HWReport,
};
pub use highest::{find_highest_vectors, sparse_of, xi_vector};
pub use shift_quotient::{dispersion, solve_shift_quotient};
pub use weights::{central_crosscheck, check_consistency, complete_weights, extract_weights, HighestWeight};
