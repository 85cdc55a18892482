//! Polynomial arithmetic over Z4 and F2.

mod f2poly;
mod factor;
mod lift;
mod z4poly;

pub use f2poly::F2Poly;
pub use factor::{cyclotomic_cosets, factor_xn_minus_1_f2, order_of_two};
pub use lift::{bezout_pair, hensel_lift, idempotents, lift_factors};
pub(crate) use lift::idempotent_data;
pub use z4poly::Z4Poly;
