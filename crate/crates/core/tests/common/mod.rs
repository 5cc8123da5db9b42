#![allow(dead_code)]

use proptest::prelude::*;
use workbench_core::fieldcore::{FieldCtx, Poly};

/// (p, m) pairs for q in {2, 3, 4, 9}.
pub const SMALL_FIELDS: [(u64, u32); 4] = [(2, 1), (3, 1), (2, 2), (3, 2)];

pub fn field(p: u64, m: u32) -> FieldCtx {
    FieldCtx::new(p, m).expect("valid field")
}

/// Polynomial of degree at most `max_deg` with raw digits reduced mod q.
pub fn poly_from_digits(ctx: &FieldCtx, digits: &[u32]) -> Poly {
    let q = ctx.q();
    Poly::new(digits.iter().map(|d| d % q).collect())
}

pub fn digits(max_deg: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 0..=max_deg + 1)
}

/// Monic polynomial of exact degree `deg` from digits.
pub fn monic_from_digits(ctx: &FieldCtx, digits: &[u32], deg: usize) -> Poly {
    let q = ctx.q();
    let mut cs: Vec<u32> = (0..deg).map(|i| digits.get(i).copied().unwrap_or(0) % q).collect();
    cs.push(1);
    Poly::new(cs)
}
