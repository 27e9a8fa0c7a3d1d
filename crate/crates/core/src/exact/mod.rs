//! Exact scalars (rationals, Q(zeta_12)) and linear algebra over them.

mod cyclotomic;
mod field;
mod matrix;
mod rational;

pub use cyclotomic::CycNum;
pub use field::Field;
pub use matrix::{span_basis, Mat};
pub use rational::{big_gcd, Rational};

/// Solves `a * x = b`; `None` when the system is inconsistent.
pub fn lin_solve<F: Field>(a: &Mat<F>, b: &[F]) -> Option<Vec<F>> {
    a.solve(b)
}

/// `zeta_level^power` inside Q(zeta_12).
pub fn cyc_make(level: u32, power: i64) -> Result<CycNum, crate::Error> {
    CycNum::root_of_unity(level, power)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn cq(n: i64, d: i64) -> CycNum {
    CycNum::frac(n, d)
}
