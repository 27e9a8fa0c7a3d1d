//! The cyclotomic field Q(zeta_12), stored on the power basis 1, z, z^2, z^3
//! modulo the 12th cyclotomic polynomial x^4 - x^2 + 1.
//!
//! Every root of unity needed downstream (cube roots, i, sqrt(3)) lives here.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::Error;
use crate::exact::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycNum {
    pub c: [Rational; 4],
}

/// z^n on the power basis, for n in 0..12.
const POWERS: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

impl CycNum {
    pub fn zero() -> Self {
        CycNum::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum { c: [r, Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d))
    }

    pub fn from_coeffs(c: [Rational; 4]) -> Self {
        CycNum { c }
    }

    /// The primitive 12th root z raised to `n`.
    pub fn zeta12(n: i64) -> Self {
        let p = POWERS[n.rem_euclid(12) as usize];
        CycNum { c: p.map(Rational::from_int) }
    }

    /// zeta_level^power; `level` must divide 12.
    pub fn root_of_unity(level: u32, power: i64) -> Result<Self, Error> {
        if level == 0 || 12 % level != 0 {
            return Err(Error::UnsupportedField(format!("zeta_{level} is not in Q(zeta_12)")));
        }
        Ok(Self::zeta12((12 / level as i64) * power))
    }

    pub fn i() -> Self {
        Self::zeta12(3)
    }

    pub fn sqrt3() -> Self {
        Self::zeta12(1) + Self::zeta12(11)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.is_rational()
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    /// Field automorphism z -> z^k for k coprime to 12.
    pub fn galois(&self, k: i64) -> Self {
        let mut out: [Rational; 4] = Default::default();
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let p = POWERS[(j as i64 * k).rem_euclid(12) as usize];
            for (o, &pi) in out.iter_mut().zip(p.iter()) {
                if pi != 0 {
                    *o += a * &Rational::from_int(pi);
                }
            }
        }
        CycNum { c: out }
    }

    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        self.galois(11)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        if self.is_rational() {
            return self.c[0].pow(4);
        }
        let p = self * &self.galois(5) * self.galois(7) * self.galois(11);
        debug_assert!(p.is_rational());
        p.c[0].clone()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.is_rational() {
            return Self::from_rational(self.c[0].recip());
        }
        let rest = self.galois(5) * self.galois(7) * self.galois(11);
        let n = (self * &rest).c[0].clone();
        rest.scale(&n.recip())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycNum { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    /// Real elements are exactly Q(sqrt 3) = { p + q*sqrt3 }.
    pub fn is_real(&self) -> bool {
        self.c[2].is_zero() && self.c[1] == -(&self.c[3] + &self.c[3])
    }

    /// `(p, q)` with `self = p + q*sqrt(3)` for real elements.
    pub fn real_parts(&self) -> Option<(Rational, Rational)> {
        self.is_real().then(|| (self.c[0].clone(), -self.c[3].clone()))
    }

    /// Sign of a real element; `None` when the element is not real.
    pub fn real_sign(&self) -> Option<i32> {
        let (p, q) = self.real_parts()?;
        let (sp, sq) = (p.signum(), q.signum());
        Some(if sp >= 0 && sq >= 0 {
            (sp + sq).signum()
        } else if sp <= 0 && sq <= 0 {
            -((sp + sq).abs().signum())
        } else {
            let lhs = &p * &p;
            let rhs = &q * &q * Rational::from_int(3);
            let c = lhs.cmp(&rhs) as i32;
            if sp > 0 {
                c
            } else {
                -c
            }
        })
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Floating approximation as (re, im), for display and heuristics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, a) in self.c.iter().enumerate() {
            let t = std::f64::consts::PI * j as f64 / 6.0;
            re += a.to_f64() * t.cos();
            im += a.to_f64() * t.sin();
        }
        (re, im)
    }
}

fn mul_ref(x: &CycNum, y: &CycNum) -> CycNum {
    if x.is_rational() {
        return y.scale(&x.c[0]);
    }
    if y.is_rational() {
        return x.scale(&y.c[0]);
    }
    let mut p: [Rational; 7] = Default::default();
    for i in 0..4 {
        if x.c[i].is_zero() {
            continue;
        }
        for j in 0..4 {
            if y.c[j].is_zero() {
                continue;
            }
            p[i + j] += &x.c[i] * &y.c[j];
        }
    }
    let [mut c0, mut c1, mut c2, mut c3, c4, c5, c6] = p;
    c0 -= &c6;
    c3 += &c5;
    c1 -= &c5;
    c2 += &c4;
    c0 -= &c4;
    CycNum { c: [c0, c1, c2, c3] }
}

fn add_ref(x: &CycNum, y: &CycNum) -> CycNum {
    CycNum { c: [&x.c[0] + &y.c[0], &x.c[1] + &y.c[1], &x.c[2] + &y.c[2], &x.c[3] + &y.c[3]] }
}

fn sub_ref(x: &CycNum, y: &CycNum) -> CycNum {
    CycNum { c: [&x.c[0] - &y.c[0], &x.c[1] - &y.c[1], &x.c[2] - &y.c[2], &x.c[3] - &y.c[3]] }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { c: self.c.map(|r| -r) }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                $f(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                $f(&self, &rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                $f(&self, rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, |x: &CycNum, y: &CycNum| mul_ref(x, &y.inv()));

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl AddAssign<CycNum> for CycNum {
    fn add_assign(&mut self, rhs: CycNum) {
        *self += &rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl SubAssign<CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: CycNum) {
        *self -= &rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = mul_ref(self, rhs);
    }
}

impl From<Rational> for CycNum {
    fn from(r: Rational) -> Self {
        CycNum::from_rational(r)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl fmt::Display for CycNum {
    /// `a + b*z + c*z^2 + d*z^3`, dropping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.signum() < 0;
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{j}")?,
                (_, false) => write!(f, "{mag}*z^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycNum {
    type Err = Error;

    /// Parses sums of terms `c`, `c*z`, `c*z^k`, `z^k`, with `k` any
    /// non-negative integer (reduced mod 12).
    fn from_str(s: &str) -> Result<Self, Error> {
        let src = s.trim();
        if src.is_empty() {
            return Err(Error::Parse("empty cyclotomic number".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in src.chars() {
            if (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.ends_with(['/', '^', '*']) {
                terms.push(cur.clone());
                cur.clear();
            }
            if !ch.is_whitespace() {
                cur.push(ch);
            }
        }
        terms.push(cur);
        let mut acc = CycNum::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let bad = || Error::Parse(format!("bad term {t:?} in {src:?}"));
            let (coef, pw) = match body.find('z') {
                None => (body.parse::<Rational>()?, 0i64),
                Some(pos) => {
                    let (lhs, rhs) = body.split_at(pos);
                    let coef = match lhs.strip_suffix('*') {
                        Some(c) => c.parse::<Rational>()?,
                        None if lhs.is_empty() => Rational::one(),
                        None => return Err(bad()),
                    };
                    let pw = match &rhs[1..] {
                        "" => 1,
                        e => e.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?,
                    };
                    (coef, pw)
                }
            };
            acc += &CycNum::zeta12(pw).scale(&(coef * Rational::from_int(sign)));
        }
        Ok(acc)
    }
}

impl serde::Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_relation() {
        let z = CycNum::zeta12(1);
        assert_eq!(z.pow(4), z.pow(2) - CycNum::one());
        assert_eq!(z.pow(12), CycNum::one());
        assert_eq!(z.pow(6), -CycNum::one());
    }

    #[test]
    fn named_constants() {
        let w = CycNum::root_of_unity(3, 1).unwrap();
        assert_eq!(w.pow(3), CycNum::one());
        assert_eq!(&w * &w + &w + CycNum::one(), CycNum::zero());
        assert_eq!(CycNum::i().pow(2), CycNum::from_int(-1));
        assert_eq!(CycNum::sqrt3().pow(2), CycNum::from_int(3));
        assert_eq!(CycNum::sqrt3().real_sign(), Some(1));
        assert!(CycNum::root_of_unity(5, 1).is_err());
    }

    #[test]
    fn conj_and_inverse() {
        let a: CycNum = "1/2 - 3*z + z^3".parse().unwrap();
        assert_eq!(&a * &a.inv(), CycNum::one());
        let n = &a * &a.conj();
        assert!(n.is_real());
        assert_eq!(n.real_sign(), Some(1));
    }

    #[test]
    fn real_sign_cases() {
        let s3 = CycNum::sqrt3();
        let v = CycNum::from_int(2) - &s3;
        assert_eq!(v.real_sign(), Some(1));
        let v = CycNum::from_int(1) - &s3;
        assert_eq!(v.real_sign(), Some(-1));
        assert_eq!(CycNum::zero().real_sign(), Some(0));
        assert_eq!(CycNum::i().real_sign(), None);
    }

    #[test]
    fn display_parse() {
        let a: CycNum = "-1/14*z^2 + z - 3".parse().unwrap();
        assert_eq!(a.to_string(), "-3 + z - 1/14*z^2");
        assert_eq!(a.to_string().parse::<CycNum>().unwrap(), a);
        assert_eq!("z^4".parse::<CycNum>().unwrap(), "-1 + z^2".parse().unwrap());
        assert!("3*y".parse::<CycNum>().is_err());
    }
}
