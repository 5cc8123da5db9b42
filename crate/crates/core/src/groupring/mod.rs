//! The unit group G_I, its integral group ring, Frobenius polynomials over it, and characters.

mod character;
mod cyclo;
mod element;
mod frob;
mod unit_group;

pub use character::{char_apply, characters, Character, CharacterTable};
pub use cyclo::{cyclotomic_poly, CycloInt};
pub use element::{gr_mul, GroupRingElem};
pub use frob::{frob_eval_at_one, frob_mul, FrobPoly};
pub use unit_group::{unit_group_order_formula, UnitGroup};
