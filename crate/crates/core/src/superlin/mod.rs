//! Graded linear algebra of `C^(1|2n)`: parities, the involution `i -> i'`,
//! theta signs, super-transposition, and the operators `P`, `Q`, `R(u)`.

mod matrix;
mod space;
mod two_site;
mod ybe;

pub use matrix::SuperMatrix;
pub use space::{GradedSpace, Mutation};
pub use two_site::{r_at, r_matrix, Leg, TwoSiteOperator};
pub use ybe::{check_ybe, YBE_DEGREE};

pub(crate) use space::odd;
pub(crate) use two_site::r_cleared;
