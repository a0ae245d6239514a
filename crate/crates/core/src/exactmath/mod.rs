//! Exact rational arithmetic: numbers, dense polynomials in one variable,
//! the eventual-sign order on polynomials, and small dense matrices.

mod matrix;
mod poly;
mod rational;

pub use matrix::{axpy, dot, is_zero_vector, scale_vector, unit_vector, zero_vector, Matrix, Vector};
pub use poly::{EventualSign, Mode, Poly};
pub use rational::{q, Rational};

/// `p ≺ 0` or `p ⪯ 0`, by leading coefficient.
pub fn cmp_zero(p: &Poly, mode: Mode) -> bool {
    p.cmp_zero(mode)
}

pub fn eventual_sign(p: &Poly) -> EventualSign {
    p.eventual_sign()
}
