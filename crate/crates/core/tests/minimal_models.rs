use std::collections::BTreeMap;

use griess_forge::exact::Rational;
use griess_forge::minimal_models::{self as mm, ModuleLabel};
use proptest::prelude::*;

/// Fusion coefficients from the modular S-matrix, in floating point.
fn verlinde(m: u32) -> BTreeMap<(ModuleLabel, ModuleLabel), BTreeMap<ModuleLabel, usize>> {
    let labels = mm::labels(m);
    let (p, pp) = ((m + 3) as f64, (m + 2) as f64);
    let pi = std::f64::consts::PI;
    let s = |a: &ModuleLabel, b: &ModuleLabel| -> f64 {
        let (r, s, rho, sigma) = (a.r as f64, a.s as f64, b.r as f64, b.s as f64);
        let sign = if (1 + a.s * b.r + a.r * b.s) % 2 == 0 { 1.0 } else { -1.0 };
        2.0 * (2.0 / (p * pp)).sqrt() * sign * (pi * p / pp * r * rho).sin() * (pi * pp / p * s * sigma).sin()
    };
    let vac = ModuleLabel::vacuum(m);
    let mut out = BTreeMap::new();
    for a in &labels {
        for b in &labels {
            let mut f = BTreeMap::new();
            for c in &labels {
                let n: f64 = labels.iter().map(|l| s(a, l) * s(b, l) * s(c, l) / s(&vac, l)).sum();
                let k = n.round();
                assert!((n - k).abs() < 1e-6, "non-integral Verlinde coefficient {n}");
                if k > 0.0 {
                    f.insert(*c, k as usize);
                }
            }
            out.insert((*a, *b), f);
        }
    }
    out
}

#[test]
fn fusion_matches_verlinde() {
    for m in 1..=5 {
        let v = verlinde(m);
        for ((a, b), want) in v {
            assert_eq!(mm::fusion(a, b).unwrap(), want, "m = {m}: {a} x {b}");
        }
    }
}

#[test]
fn ising_rules() {
    let l = |r, s| ModuleLabel::new(1, r, s).unwrap();
    let sigma = l(2, 2);
    assert_eq!(sigma.weight(), Rational::new(1, 16));
    let f = mm::fusion(sigma, sigma).unwrap();
    assert_eq!(f.keys().map(|x| x.weight()).collect::<Vec<_>>(), vec![Rational::new(0, 1), Rational::new(1, 2)]);
}

#[test]
fn sigma_set_at_six_sevenths() {
    let q = Rational::new;
    let mut b = mm::sigma_type_set(4);
    b.sort();
    assert_eq!(b, vec![q(0, 1), q(1, 7), q(5, 7), q(12, 7), q(22, 7), q(5, 1)]);
    let labels = mm::sigma_type_labels(4);
    for a in &labels {
        for c in &labels {
            assert!(mm::fusion(*a, *c).unwrap().keys().all(|l| labels.contains(l)));
        }
    }
}

#[test]
fn extension_census() {
    assert_eq!(mm::w_untwisted_census(4).unwrap(), 9);
    assert_eq!(mm::w_untwisted_census(3).unwrap(), 6);
}

#[test]
fn three_a_module_top_weights() {
    let q = Rational::new;
    let table = mm::u3a_module_table();
    assert_eq!(table.len(), 6);
    for row in &table {
        assert_eq!(row.min_total_weight(), row.name);
    }
    assert_eq!(q(2, 5) + q(1, 7), q(19, 35));
}

fn label_at(m: u32) -> impl Strategy<Value = ModuleLabel> {
    (1..=m + 1, 1..=m + 2).prop_map(move |(r, s)| ModuleLabel::new(m, r, s).unwrap())
}

fn triple() -> impl Strategy<Value = (ModuleLabel, ModuleLabel, ModuleLabel)> {
    (1u32..=6).prop_flat_map(|m| (label_at(m), label_at(m), label_at(m)))
}

fn compose(a: &BTreeMap<ModuleLabel, usize>, c: ModuleLabel) -> BTreeMap<ModuleLabel, usize> {
    let mut out = BTreeMap::new();
    for (x, k) in a {
        for (y, j) in mm::fusion(*x, c).unwrap() {
            *out.entry(y).or_insert(0) += k * j;
        }
    }
    out
}

proptest! {
    #[test]
    fn fusion_commutes((a, b, _) in triple()) {
        prop_assert_eq!(mm::fusion(a, b).unwrap(), mm::fusion(b, a).unwrap());
    }

    #[test]
    fn fusion_associates((a, b, c) in triple()) {
        let left = compose(&mm::fusion(a, b).unwrap(), c);
        let bc = mm::fusion(b, c).unwrap();
        let mut right = BTreeMap::new();
        for (x, k) in bc {
            for (y, j) in mm::fusion(a, x).unwrap() {
                *right.entry(y).or_insert(0) += k * j;
            }
        }
        prop_assert_eq!(left, right);
    }

    #[test]
    fn vacuum_is_unit((a, _, _) in triple()) {
        let f = mm::fusion(ModuleLabel::vacuum(a.m), a).unwrap();
        prop_assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(a, 1)]);
    }

    #[test]
    fn label_symmetry(m in 1u32..=8, r in 1u32..=9, s in 1u32..=10) {
        prop_assume!(r <= m + 1 && s <= m + 2);
        let a = ModuleLabel::new(m, r, s).unwrap();
        let b = ModuleLabel::new(m, m + 2 - r, m + 3 - s).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(a.weight(), mm::highest_weight(ModuleLabel { m, r, s }));
        prop_assert!(a.weight() >= Rational::new(0, 1));
    }
}
