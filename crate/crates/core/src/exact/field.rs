use std::fmt::{Debug, Display};

use crate::exact::{CycNum, Rational};

/// Minimal field interface shared by `Rational` and `CycNum`.
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    /// Rough size, used to prefer cheap pivots.
    fn weight(&self) -> usize;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn weight(&self) -> usize {
        match self {
            Rational::Small(n, d) => (n.unsigned_abs().max(1).ilog2() + d.unsigned_abs().ilog2()) as usize,
            Rational::Big(b) => (b.numer().bits() + b.denom().bits()) as usize,
        }
    }
}

impl Field for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn one() -> Self {
        CycNum::one()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        CycNum::inv(self)
    }
    fn weight(&self) -> usize {
        self.c.iter().filter(|r| !r.is_zero()).map(|r| 1 + Field::weight(r)).sum()
    }
    fn is_one(&self) -> bool {
        CycNum::is_one(self)
    }
}
