//! Unitary Virasoro minimal models `L(c_m, h)`: central charges, conformal
//! weights, fusion, sigma-type weight sets and the simple-current extension
//! `W(c_m)` for `m = 0, 3 (mod 4)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// `(m, r, s)` normalized to `1 <= s <= r <= m + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub m: u32,
    pub r: u32,
    pub s: u32,
}

impl ModuleLabel {
    /// Accepts any `1 <= r <= m+1`, `1 <= s <= m+2` and normalizes with
    /// `(r, s) ~ (m+2-r, m+3-s)`.
    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        if m < 1 || r < 1 || r > m + 1 || s < 1 || s > m + 2 {
            return Err(Error::Invalid(format!("no minimal-model label ({r},{s}) at m = {m}")));
        }
        Ok(if s <= r { ModuleLabel { m, r, s } } else { ModuleLabel { m, r: m + 2 - r, s: m + 3 - s } })
    }

    pub fn weight(&self) -> Rational {
        highest_weight(*self)
    }

    pub fn vacuum(m: u32) -> Self {
        ModuleLabel { m, r: 1, s: 1 }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = central_charge(self.m).map_err(|_| fmt::Error)?;
        write!(f, "L({},{})", c, self.weight())
    }
}

pub fn central_charge(m: u32) -> Result<Rational> {
    if m < 1 {
        return Err(Error::Invalid("minimal models start at m = 1".into()));
    }
    let (a, b) = (m as i64 + 2, m as i64 + 3);
    Ok(Rational::one() - Rational::new(6, a * b))
}

/// The `m` with `c_m = c`, if `c` is in the unitary series.
pub fn series_index(c: &Rational) -> Option<u32> {
    let one = Rational::one();
    if *c >= one || c.signum() <= 0 {
        return None;
    }
    // (m+2)(m+3) = 6 / (1 - c)
    let p = (Rational::from_int(6) / (one - c.clone())).to_i64()?;
    let m = ((1.0 + 4.0 * p as f64).sqrt() as i64 - 5) / 2;
    (m.max(1) - 1..=m + 1).find(|&k| k >= 1 && (k + 2) * (k + 3) == p).map(|k| k as u32)
}

pub fn highest_weight(l: ModuleLabel) -> Rational {
    let (m, r, s) = (l.m as i64, l.r as i64, l.s as i64);
    let t = r * (m + 3) - s * (m + 2);
    Rational::new(t * t - 1, 4 * (m + 2) * (m + 3))
}

/// All normalized labels at level `m`.
pub fn labels(m: u32) -> Vec<ModuleLabel> {
    let mut out = Vec::new();
    for r in 1..=m + 1 {
        for s in 1..=r {
            out.push(ModuleLabel { m, r, s });
        }
    }
    out
}

/// Distinct conformal weights at level `m`, increasing.
pub fn weights(m: u32) -> Vec<Rational> {
    let mut w: Vec<Rational> = labels(m).iter().map(|l| l.weight()).collect();
    w.sort();
    w.dedup();
    w
}

/// Fusion product as a multiset of normalized labels.
pub fn fusion(a: ModuleLabel, b: ModuleLabel) -> Result<BTreeMap<ModuleLabel, usize>> {
    if a.m != b.m {
        return Err(Error::Invalid(format!("fusion across levels {} and {}", a.m, b.m)));
    }
    let m = a.m;
    let (r1, s1, r2, s2) = (a.r, a.s, b.r, b.s);
    let imax = r1.min(r2).min(m + 2 - r1).min(m + 2 - r2);
    let jmax = s1.min(s2).min(m + 3 - s1).min(m + 3 - s2);
    let mut out = BTreeMap::new();
    for i in 1..=imax {
        for j in 1..=jmax {
            let l = ModuleLabel::new(m, r1.abs_diff(r2) + 2 * i - 1, s1.abs_diff(s2) + 2 * j - 1)?;
            *out.entry(l).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Labels whose weights form the sigma-type set: `h_{1,s}` for even `m`,
/// `h_{r,1}` for odd `m`.
pub fn sigma_type_labels(m: u32) -> Vec<ModuleLabel> {
    if m % 2 == 0 {
        (1..=m + 2).map(|s| ModuleLabel::new(m, 1, s).expect("in range")).collect()
    } else {
        (1..=m + 1).map(|r| ModuleLabel::new(m, r, 1).expect("in range")).collect()
    }
}

pub fn sigma_type_set(m: u32) -> Vec<Rational> {
    sigma_type_labels(m).iter().map(|l| l.weight()).collect()
}

/// Sign of the sigma-type involution on the `h`-eigenspace, `None` when
/// `h` is not of sigma type.
pub fn sigma_sign(m: u32, h: &Rational) -> Option<i32> {
    sigma_type_labels(m).into_iter().enumerate().find(|(_, l)| l.weight() == *h).map(|(k, _)| if k % 2 == 0 { 1 } else { -1 })
}

/// Sign of the tau-type involution on an `h`-eigenspace: `(-1)^{r+1}` for
/// even `m`, `(-1)^{s+1}` for odd `m`, read off any label of weight `h`.
pub fn tau_sign(m: u32, h: &Rational) -> Option<i32> {
    let l = labels(m).into_iter().find(|l| l.weight() == *h)?;
    let k = if m % 2 == 0 { l.r } else { l.s };
    Some(if k % 2 == 1 { 1 } else { -1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WKind {
    UntwistedPair,
    Twisted,
    SplitPm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WModuleClass {
    pub label: ModuleLabel,
    pub partner: ModuleLabel,
    pub delta: Rational,
    pub kind: WKind,
}

/// Classification of `L(c_m, 0)`-modules under the extension by
/// `L(c_m, h_{m+1,1})`.
pub fn w_module_classification(m: u32) -> Result<Vec<WModuleClass>> {
    if m % 4 != 0 && m % 4 != 3 {
        return Err(Error::Invalid(format!("m = {m} is not 0 or 3 mod 4")));
    }
    let mut out = Vec::new();
    for l in labels(m) {
        let partner = if m % 4 == 0 { ModuleLabel::new(m, m + 2 - l.r, l.s)? } else { ModuleLabel::new(m, l.r, m + 3 - l.s)? };
        let delta = l.weight() - partner.weight();
        let twice = &delta * &Rational::from_int(2);
        if !twice.is_integer() {
            return Err(Error::Invalid(format!("weight difference {delta} for {l:?} is not in Z/2")));
        }
        let kind = if !delta.is_integer() {
            WKind::Twisted
        } else if partner == l {
            WKind::SplitPm
        } else {
            WKind::UntwistedPair
        };
        out.push(WModuleClass { label: l, partner, delta, kind });
    }
    Ok(out)
}

/// Number of inequivalent untwisted irreducible `W(c_m)`-modules.
pub fn w_untwisted_census(m: u32) -> Result<usize> {
    let cls = w_module_classification(m)?;
    let pairs = cls.iter().filter(|c| c.kind == WKind::UntwistedPair).count();
    let split = cls.iter().filter(|c| c.kind == WKind::SplitPm).count();
    Ok(pairs / 2 + 2 * split)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct U3AModule {
    /// Lowest weight naming the module.
    pub name: Rational,
    /// `(h1, h2, multiplicity)` with `h1` at `c = 4/5`, `h2` at `c = 6/7`.
    pub components: Vec<(Rational, Rational, usize)>,
}

impl U3AModule {
    pub fn min_total_weight(&self) -> Rational {
        self.components.iter().map(|(a, b, _)| a + b).min().expect("nonempty")
    }
}

/// Decompositions of the six irreducible modules of the 3A-algebra as
/// `L(4/5, h1) (x) L(6/7, h2)`-modules.
pub fn u3a_module_table() -> Vec<U3AModule> {
    let q = Rational::new;
    let row = |name: Rational, h1: [Rational; 2], twist: Rational, h2: [Rational; 2], h2t: Rational| -> U3AModule {
        let mut components = Vec::new();
        for a in &h1 {
            for b in &h2 {
                components.push((a.clone(), b.clone(), 1));
            }
        }
        components.push((twist, h2t, 2));
        U3AModule { name, components }
    };
    vec![
        row(q(0, 1), [q(0, 1), q(3, 1)], q(2, 3), [q(0, 1), q(5, 1)], q(4, 3)),
        row(q(1, 7), [q(0, 1), q(3, 1)], q(2, 3), [q(1, 7), q(22, 7)], q(10, 21)),
        row(q(5, 7), [q(0, 1), q(3, 1)], q(2, 3), [q(5, 7), q(12, 7)], q(1, 21)),
        row(q(2, 5), [q(2, 5), q(7, 5)], q(1, 15), [q(0, 1), q(5, 1)], q(4, 3)),
        row(q(19, 35), [q(2, 5), q(7, 5)], q(1, 15), [q(1, 7), q(22, 7)], q(10, 21)),
        row(q(4, 35), [q(2, 5), q(7, 5)], q(1, 15), [q(5, 7), q(12, 7)], q(1, 21)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn central_charges() {
        assert_eq!(central_charge(1).unwrap(), q(1, 2));
        assert_eq!(central_charge(3).unwrap(), q(4, 5));
        assert_eq!(central_charge(4).unwrap(), q(6, 7));
        assert_eq!(central_charge(5).unwrap(), q(25, 28));
        assert!(central_charge(0).is_err());
        for m in 1..40 {
            assert_eq!(series_index(&central_charge(m).unwrap()), Some(m));
        }
        assert_eq!(series_index(&q(5, 4)), None);
        assert_eq!(series_index(&q(1, 3)), None);
    }

    #[test]
    fn weights_from_labels() {
        assert_eq!(ModuleLabel::new(4, 5, 1).unwrap().weight(), q(5, 1));
        assert_eq!(ModuleLabel::new(3, 4, 3).unwrap().weight(), q(2, 3));
        assert_eq!(ModuleLabel::vacuum(4).weight(), q(0, 1));
        assert_eq!(ModuleLabel::new(4, 1, 6).unwrap(), ModuleLabel::new(4, 5, 1).unwrap());
        assert!(ModuleLabel::new(4, 6, 1).is_err());
    }

    #[test]
    fn sigma_sets() {
        let b4 = sigma_type_set(4);
        assert_eq!(b4, vec![q(0, 1), q(1, 7), q(5, 7), q(12, 7), q(22, 7), q(5, 1)]);
        assert_eq!(sigma_type_set(1), vec![q(0, 1), q(1, 2)]);
        assert_eq!(sigma_sign(4, &q(5, 1)), Some(-1));
        assert_eq!(sigma_sign(4, &q(22, 7)), Some(1));
        assert_eq!(sigma_sign(4, &q(1, 7)), Some(-1));
        assert_eq!(sigma_sign(1, &q(1, 2)), Some(-1));
        assert_eq!(sigma_sign(1, &q(1, 16)), None);
        assert_eq!(tau_sign(1, &q(1, 16)), Some(-1));
        assert_eq!(tau_sign(1, &q(1, 2)), Some(1));
    }

    #[test]
    fn fusion_examples() {
        let l = ModuleLabel::new(4, 5, 1).unwrap();
        let p = fusion(l, l).unwrap();
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(ModuleLabel::vacuum(4), 1)]);
        let x = ModuleLabel::new(4, 3, 2).unwrap();
        assert_eq!(fusion(ModuleLabel::vacuum(4), x).unwrap().into_iter().collect::<Vec<_>>(), vec![(x, 1)]);
        assert!(fusion(ModuleLabel::vacuum(3), x).is_err());
    }

    #[test]
    fn w_censuses() {
        assert_eq!(w_untwisted_census(4).unwrap(), 9);
        assert_eq!(w_untwisted_census(3).unwrap(), 6);
        let c = w_module_classification(4).unwrap();
        assert!(c.iter().filter(|x| x.label.r == 3).all(|x| x.kind == WKind::SplitPm));
        assert!(w_module_classification(5).is_err());
    }

    #[test]
    fn u3a_table_names() {
        let t = u3a_module_table();
        assert_eq!(t.len(), 6);
        for m in &t {
            assert_eq!(m.min_total_weight(), m.name);
            let (w3, w4) = (weights(3), weights(4));
            assert!(m.components.iter().all(|(a, b, _)| w3.contains(a) && w4.contains(b)));
        }
    }
}
