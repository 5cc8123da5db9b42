//! Finite fields F_q and the polynomial ring A = F_q[t].

mod enumerate;
mod factor;
mod field;
mod poly;

pub use enumerate::MonicIter;
pub use factor::Factorization;
pub use field::{is_prime, Elem, FieldCtx, MAX_FIELD_ORDER};
pub use poly::Poly;
